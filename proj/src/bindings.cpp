#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "realbetti/closed_forms.hpp"
#include "realbetti/curves.hpp"
#include "realbetti/golden.hpp"
#include "realbetti/identities.hpp"
#include "realbetti/recursion.hpp"
#include "realbetti/strata.hpp"

namespace py = pybind11;

using realbetti::Int;

namespace {

// cpp_int -> arbitrary-precision Python int, via its decimal representation.
py::object to_py_int(const Int& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::list coeffs_to_list(const std::vector<Int>& coeffs) {
    py::list out;
    for (const auto& c : coeffs) out.append(to_py_int(c));
    return out;
}

realbetti::curves::RealCurveTopology topo_of(int genus, int circles) {
    return realbetti::curves::validate_topology(genus, circles);
}

realbetti::strata::ComplexHNType hn_of(const std::vector<std::pair<int, long long>>& parts) {
    realbetti::strata::ComplexHNType hn;
    for (const auto& [r, d] : parts) hn.parts.push_back({r, d});
    return hn;
}

py::dict report_to_dict(const realbetti::identities::IdentityReport& rep) {
    py::dict d;
    d["id"] = rep.id;
    d["order"] = rep.order;
    d["equal"] = rep.equal;
    d["mismatch_index"] = rep.mismatch_index;
    if (!rep.equal) {
        d["lhs"] = to_py_int(rep.lhs_at_mismatch);
        d["rhs"] = to_py_int(rep.rhs_at_mismatch);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Betti-number engine for moduli of real bundles over a real curve";

    py::register_exception<realbetti::Error>(m, "EngineError");

    m.def(
        "compute",
        [](int rank, long long degree, int genus, int circles, bool allow_a0, bool quaternionic,
           std::optional<int> order, bool normalize_degree, std::optional<std::string> cache_dir) {
            const auto topo = topo_of(genus, circles);
            int r = rank;
            long long d = degree;
            if (quaternionic) std::tie(r, d) = realbetti::curves::quaternionic_to_real(r, d, topo);
            realbetti::recursion::Options opts;
            opts.allow_a0 = allow_a0;
            opts.normalize_degree = normalize_degree;
            if (cache_dir) opts.cache_dir = *cache_dir;
            realbetti::recursion::Engine engine(opts);
            const auto res = engine.moduli_betti(r, d, topo, order);
            py::dict out;
            py::dict params;
            params["rank"] = rank;
            params["degree"] = degree;
            params["genus"] = genus;
            params["circles"] = circles;
            if (quaternionic) {
                params["quaternionic"] = true;
                params["real_degree"] = d;
            }
            out["params"] = params;
            out["degree"] = res.polynomial.degree();
            out["coeffs"] = coeffs_to_list(res.polynomial.coeffs);
            out["palindromic"] = realbetti::series::is_palindromic(res.polynomial);
            out["strata"] = res.strata_count;
            out["order"] = res.order;
            out["cache_key"] = res.cache_key;
            return out;
        },
        py::arg("rank"), py::arg("degree"), py::arg("genus"), py::arg("circles"),
        py::arg("allow_a0") = false, py::arg("quaternionic") = false,
        py::arg("order") = std::nullopt, py::arg("normalize_degree") = true,
        py::arg("cache_dir") = std::nullopt,
        "Betti polynomial of M(r,d,tau); coefficients as Python ints");

    m.def(
        "semistable_series",
        [](int rank, long long degree, int genus, int circles, int order) {
            realbetti::recursion::Engine engine;
            return coeffs_to_list(engine.semistable_series(rank, degree, topo_of(genus, circles), order).coeffs);
        },
        py::arg("rank"), py::arg("degree"), py::arg("genus"), py::arg("circles"), py::arg("order"));

    m.def(
        "gauge_classifying_series",
        [](int genus, int circles, int rank, int order) {
            return coeffs_to_list(
                realbetti::closed_forms::gauge_classifying_series(topo_of(genus, circles), rank, order).coeffs);
        },
        py::arg("genus"), py::arg("circles"), py::arg("rank"), py::arg("order"));

    m.def(
        "loop_group_series",
        [](int rank, const std::string& kind, int order) {
            if (kind != "fixed" && kind != "antipodal")
                realbetti::fail(realbetti::ErrorCode::InvalidInput, "kind must be fixed|antipodal");
            return coeffs_to_list(realbetti::closed_forms::loop_group_series(
                                      rank,
                                      kind == "fixed" ? realbetti::closed_forms::LoopKind::Fixed
                                                      : realbetti::closed_forms::LoopKind::Antipodal,
                                      order)
                                      .coeffs);
        },
        py::arg("rank"), py::arg("kind"), py::arg("order"));

    m.def(
        "classical_group_series",
        [](const std::string& family, std::optional<int> n, int order) {
            realbetti::closed_forms::ClassicalFamily fam;
            if (family == "O")
                fam = realbetti::closed_forms::ClassicalFamily::O;
            else if (family == "U")
                fam = realbetti::closed_forms::ClassicalFamily::U;
            else if (family == "Sp")
                fam = realbetti::closed_forms::ClassicalFamily::Sp;
            else
                realbetti::fail(realbetti::ErrorCode::InvalidInput, "family must be O|U|Sp");
            return coeffs_to_list(realbetti::closed_forms::classical_group_series(fam, n, order).coeffs);
        },
        py::arg("family"), py::arg("n") = std::nullopt, py::arg("order") = 40);

    m.def(
        "low_rank_moduli_closed_form",
        [](int rank, int genus, int circles, int order) {
            return coeffs_to_list(
                realbetti::closed_forms::low_rank_moduli_closed_form(rank, topo_of(genus, circles), order).coeffs);
        },
        py::arg("rank"), py::arg("genus"), py::arg("circles"), py::arg("order"));

    m.def(
        "enumerate_unstable_types",
        [](int rank, long long degree, int genus, long long max_codim, bool even_parts_only) {
            py::list out;
            for (const auto& s : realbetti::strata::enumerate_unstable_types(rank, degree, genus,
                                                                             max_codim, even_parts_only)) {
                py::list parts;
                for (const auto& p : s.type.parts) parts.append(py::make_tuple(p.rank, p.degree));
                out.append(py::make_tuple(parts, s.codim));
            }
            return out;
        },
        py::arg("rank"), py::arg("degree"), py::arg("genus"), py::arg("max_codim"),
        py::arg("even_parts_only") = false);

    m.def(
        "codimension",
        [](const std::vector<std::pair<int, long long>>& parts, int genus) {
            return realbetti::strata::codimension(hn_of(parts), genus);
        },
        py::arg("parts"), py::arg("genus"));

    m.def(
        "real_refinement_count",
        [](const std::vector<std::pair<int, long long>>& parts, int circles) {
            return to_py_int(realbetti::strata::real_refinement_count(hn_of(parts), circles));
        },
        py::arg("parts"), py::arg("circles"));

    m.def(
        "enumerate_real_types",
        [](int rank, long long degree, int circles) {
            py::list out;
            for (const auto& t : realbetti::curves::enumerate_real_types(rank, degree, circles))
                out.append(t.w);
            return out;
        },
        py::arg("rank"), py::arg("degree"), py::arg("circles"));

    m.def(
        "quaternionic_to_real",
        [](int rank, long long degree, int genus, int circles) {
            return realbetti::curves::quaternionic_to_real(rank, degree, topo_of(genus, circles));
        },
        py::arg("rank"), py::arg("degree"), py::arg("genus"), py::arg("circles"));

    m.def("quaternionic_admissible",
          [](int rank, long long degree, int genus, int circles) {
              return realbetti::curves::quaternionic_admissible(rank, degree, topo_of(genus, circles));
          },
          py::arg("rank"), py::arg("degree"), py::arg("genus"), py::arg("circles"));

    m.def(
        "verify_identity",
        [](const std::string& name, int order, bool perturb) {
            if (name == "stable-cp1-complex")
                return report_to_dict(realbetti::identities::verify_stable_cp1_complex(order, perturb));
            if (name == "partition")
                return report_to_dict(realbetti::identities::verify_partition_identity(order, perturb));
            if (name == "genus-zero-real-a")
                return report_to_dict(realbetti::identities::verify_genus_zero_real('a', order, perturb));
            if (name == "genus-zero-real-b")
                return report_to_dict(realbetti::identities::verify_genus_zero_real('b', order, perturb));
            realbetti::fail(realbetti::ErrorCode::InvalidInput,
                            "unknown identity '" + name +
                                "' (stable-cp1-complex, partition, genus-zero-real-a, genus-zero-real-b)");
        },
        py::arg("name"), py::arg("order") = 100, py::arg("perturb") = false);

    m.def("brute_force_partition_count", &realbetti::identities::brute_force_partition_count,
          py::arg("n"));

    m.def("golden_sections", [] {
        py::list out;
        for (const auto& sec : realbetti::golden::sections()) {
            py::dict d;
            d["name"] = sec.name;
            d["rank"] = sec.rank;
            d["genus"] = sec.genus;
            d["degree"] = sec.degree;
            py::list rows;
            for (const auto& row : sec.rows) {
                py::dict r;
                r["circles"] = row.circles;
                r["coeffs"] = coeffs_to_list(row.coeffs);
                rows.append(std::move(r));
            }
            d["rows"] = rows;
            out.append(std::move(d));
        }
        return out;
    });
}
