#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "realbetti/cache.hpp"
#include "realbetti/closed_forms.hpp"
#include "realbetti/curves.hpp"
#include "realbetti/golden.hpp"
#include "realbetti/identities.hpp"
#include "realbetti/json_io.hpp"
#include "realbetti/recursion.hpp"
#include "realbetti/strata.hpp"

namespace {

using realbetti::Error;
using realbetti::ErrorCode;
using realbetti::Int;
using realbetti::json_io::Json;
using realbetti::series::BettiPolynomial;
using realbetti::series::TruncatedSeries;

std::string pretty_polynomial(const std::vector<Int>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += coeffs[i].str();
        } else {
            if (coeffs[i] != 1) out += coeffs[i].str();
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

struct ComputeArgs {
    int rank = 1;
    long long degree = 0;
    int genus = 2;
    int circles = 1;
    std::vector<int> w;
    bool quaternionic = false;
    bool allow_a0 = false;
    bool raw_d = false;
    bool no_cache = false;
    std::optional<int> order;
    std::optional<std::string> cache_dir;
    std::string format = "text";
};

realbetti::recursion::Options engine_options(const ComputeArgs& args) {
    realbetti::recursion::Options opts;
    opts.normalize_degree = !args.raw_d;
    opts.allow_a0 = args.allow_a0;
    if (!args.no_cache) opts.cache_dir = realbetti::cache::resolve_dir(args.cache_dir);
    return opts;
}

int run_compute(const ComputeArgs& args) {
    const auto topo = realbetti::curves::validate_topology(args.genus, args.circles);

    if (!args.w.empty()) {
        // w never changes the numbers; it is validated so the labeling is honest.
        if (static_cast<int>(args.w.size()) != args.circles)
            realbetti::fail(ErrorCode::InvalidInput, "w must have one entry per circle");
        long long sum = 0;
        for (int b : args.w) {
            if (b != 0 && b != 1) realbetti::fail(ErrorCode::InvalidInput, "w entries must be 0/1");
            sum += b;
        }
        if (((sum - args.degree) % 2 + 2) % 2 != 0)
            realbetti::fail(ErrorCode::InvalidInput, "w parity must match degree mod 2");
    }

    int rank = args.rank;
    long long degree = args.degree;
    if (args.quaternionic) {
        std::tie(rank, degree) = realbetti::curves::quaternionic_to_real(rank, degree, topo);
    }

    realbetti::recursion::Engine engine(engine_options(args));
    const auto start = std::chrono::steady_clock::now();
    const auto result = engine.moduli_betti(rank, degree, topo, args.order);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (args.format == "json") {
        Json params;
        params["rank"] = args.rank;
        params["degree"] = args.degree;
        params["genus"] = args.genus;
        params["circles"] = args.circles;
        if (!args.w.empty()) params["w"] = args.w;
        if (args.quaternionic) {
            params["quaternionic"] = true;
            params["real_degree"] = degree;
        }
        Json j;
        j["params"] = std::move(params);
        j["degree"] = result.polynomial.degree();
        j["coeffs"] = realbetti::json_io::coeffs_to_json(result.polynomial.coeffs);
        j["palindromic"] = realbetti::series::is_palindromic(result.polynomial);
        j["strata"] = result.strata_count;
        j["order"] = result.order;
        std::cout << j.dump(2) << '\n';
    } else if (args.format == "csv") {
        std::cout << "index,coefficient\n";
        for (size_t i = 0; i < result.polynomial.coeffs.size(); ++i)
            std::cout << i << ',' << result.polynomial.coeffs[i].str() << '\n';
    } else {
        std::cout << "M(r=" << args.rank << ", d=" << args.degree << ", g=" << args.genus
                  << ", a=" << args.circles << ")";
        if (args.quaternionic) std::cout << " [quaternionic -> real degree " << degree << "]";
        std::cout << '\n';
        std::cout << "  polynomial  " << pretty_polynomial(result.polynomial.coeffs) << '\n';
        std::cout << "  degree      " << result.polynomial.degree() << '\n';
        std::cout << "  palindromic "
                  << (realbetti::series::is_palindromic(result.polynomial) ? "yes" : "no") << '\n';
        std::cout << "  strata      " << result.strata_count << '\n';
        std::cout << "  order       " << result.order << '\n';
        std::cout << "  wall        " << wall_ms << " ms\n";
    }
    return 0;
}

int run_table(const std::string& section_name, const std::string& format) {
    std::vector<const realbetti::golden::GoldenSection*> sections;
    if (section_name.empty()) {
        for (const auto& s : realbetti::golden::sections()) sections.push_back(&s);
    } else {
        const auto* s = realbetti::golden::find_section(section_name);
        if (!s)
            realbetti::fail(ErrorCode::InvalidInput,
                            "unknown table section '" + section_name +
                                "' (known: rank2-g2, rank2-g3, rank3-g2)");
        sections.push_back(s);
    }

    realbetti::recursion::Engine engine;
    bool all_match = true;
    Json report = Json::array();
    for (const auto* sec : sections) {
        for (const auto& row : sec->rows) {
            const auto topo = realbetti::curves::validate_topology(sec->genus, row.circles);
            const auto result = engine.moduli_betti(sec->rank, sec->degree, topo);
            const bool match = result.polynomial.coeffs == row.coeffs;
            all_match = all_match && match;
            if (format == "json") {
                Json r;
                r["section"] = sec->name;
                r["circles"] = row.circles;
                r["coeffs"] = realbetti::json_io::coeffs_to_json(result.polynomial.coeffs);
                r["match"] = match;
                report.push_back(std::move(r));
            } else {
                std::cout << sec->name << " a=" << row.circles << ":  "
                          << pretty_polynomial(result.polynomial.coeffs)
                          << (match ? "   [ok]" : "   [MISMATCH vs reference]") << '\n';
            }
        }
    }
    if (format == "json") std::cout << report.dump(2) << '\n';
    if (!all_match) {
        std::cerr << "error: TailNotZero-class defect: recomputed table disagrees with reference\n";
        return 3;
    }
    return 0;
}

int run_verify(int order, bool perturb, const std::string& format) {
    struct Line {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Line> lines;

    auto add_identity = [&](const realbetti::identities::IdentityReport& rep) {
        std::string detail;
        if (!rep.equal)
            detail = "first mismatch at t^" + std::to_string(rep.mismatch_index) + ": " +
                     rep.lhs_at_mismatch.str() + " vs " + rep.rhs_at_mismatch.str();
        lines.push_back({rep.id + " (order " + std::to_string(rep.order) + ")", rep.equal, detail});
    };
    add_identity(realbetti::identities::verify_stable_cp1_complex(order, perturb));
    add_identity(realbetti::identities::verify_partition_identity(order, perturb));
    add_identity(realbetti::identities::verify_genus_zero_real('a', order, perturb));
    add_identity(realbetti::identities::verify_genus_zero_real('b', order, perturb));

    // Recursion vs printed closed forms, exact on the full polynomial.
    realbetti::recursion::Engine engine;
    for (int rank = 1; rank <= 3; ++rank) {
        for (int g = 2; g <= 4; ++g) {
            const int deg = rank * rank * (g - 1) + 1;
            for (int a = 1; a <= g + 1; ++a) {
                const auto topo = realbetti::curves::validate_topology(g, a);
                const auto closed = realbetti::series::extract_polynomial(
                    realbetti::closed_forms::low_rank_moduli_closed_form(rank, topo, deg + 10),
                    deg);
                bool ok = true;
                std::string detail;
                for (long long d : {1LL, static_cast<long long>(rank) + 1}) {
                    const auto got = engine.moduli_betti(rank, d, topo);
                    if (got.polynomial != closed) {
                        ok = false;
                        detail = "recursion(d=" + std::to_string(d) + ") != closed form";
                        break;
                    }
                }
                lines.push_back({"recursion-vs-closed r=" + std::to_string(rank) +
                                     " g=" + std::to_string(g) + " a=" + std::to_string(a),
                                 ok, detail});
            }
        }
    }

    int failures = 0;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& line : lines) {
            Json j;
            j["check"] = line.name;
            j["ok"] = line.ok;
            if (!line.ok) j["detail"] = line.detail;
            arr.push_back(std::move(j));
            failures += line.ok ? 0 : 1;
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& line : lines) {
            std::cout << (line.ok ? "ok   " : "FAIL ") << line.name;
            if (!line.ok) std::cout << "  -- " << line.detail;
            std::cout << '\n';
            failures += line.ok ? 0 : 1;
        }
        std::cout << "passed " << (lines.size() - failures) << "/" << lines.size() << '\n';
    }
    return failures == 0 ? 0 : 3;
}

int run_strata_list(int rank, long long degree, int genus, long long max_codim, int circles,
                    bool even_only) {
    realbetti::curves::validate_topology(genus, circles);
    const bool even = even_only || circles == 0;
    for (const auto& stratum :
         realbetti::strata::enumerate_unstable_types(rank, degree, genus, max_codim, even)) {
        Json j;
        Json parts = Json::array();
        for (const auto& p : stratum.type.parts) parts.push_back(Json::array({p.rank, p.degree}));
        j["parts"] = std::move(parts);
        j["codim"] = stratum.codim;
        j["refinements"] = realbetti::strata::real_refinement_count(stratum.type, circles).str();
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_formula_dump(const std::string& name, std::optional<int> genus, std::optional<int> circles,
                     std::optional<int> rank, std::optional<int> n, int order) {
    namespace cf = realbetti::closed_forms;
    const auto tag = cf::parse_formula_tag(name);
    if (!tag) {
        std::string known;
        for (int i = 0; i < 12; ++i) {
            if (i) known += ", ";
            known += std::string(cf::formula_tag_name(static_cast<cf::FormulaTag>(i)));
        }
        realbetti::fail(ErrorCode::InvalidInput, "unknown formula '" + name + "' (known: " + known + ")");
    }

    auto need = [&](const std::optional<int>& v, const char* flag) -> int {
        if (!v)
            realbetti::fail(ErrorCode::InvalidInput,
                            std::string("formula ") + name + " requires " + flag);
        return *v;
    };

    TruncatedSeries s(0);
    switch (*tag) {
        case cf::FormulaTag::GaugeReal:
            s = cf::gauge_classifying_series(
                realbetti::curves::validate_topology(need(genus, "--genus"), need(circles, "--circles")),
                need(rank, "--rank"), order);
            break;
        case cf::FormulaTag::LoopGroupFixed:
            s = cf::loop_group_series(need(rank, "--rank"), cf::LoopKind::Fixed, order);
            break;
        case cf::FormulaTag::LoopGroupAntipodal:
            s = cf::loop_group_series(need(rank, "--rank"), cf::LoopKind::Antipodal, order);
            break;
        case cf::FormulaTag::ClassicalO:
            s = cf::classical_group_series(cf::ClassicalFamily::O, n, order);
            break;
        case cf::FormulaTag::ClassicalU:
            s = cf::classical_group_series(cf::ClassicalFamily::U, n, order);
            break;
        case cf::FormulaTag::ClassicalSp:
            s = cf::classical_group_series(cf::ClassicalFamily::Sp, n, order);
            break;
        case cf::FormulaTag::Rank1Moduli:
        case cf::FormulaTag::Rank2Moduli:
        case cf::FormulaTag::Rank3Moduli: {
            const int r = *tag == cf::FormulaTag::Rank1Moduli   ? 1
                          : *tag == cf::FormulaTag::Rank2Moduli ? 2
                                                                : 3;
            s = cf::low_rank_moduli_closed_form(
                r,
                realbetti::curves::validate_topology(need(genus, "--genus"), need(circles, "--circles")),
                order);
            break;
        }
        default:
            s = cf::genus_zero_stable_series(*tag, order);
            break;
    }
    std::cout << realbetti::json_io::series_to_json(s).dump(2) << '\n';
    return 0;
}

std::filesystem::path require_cache_dir(const std::optional<std::string>& flag) {
    const auto dir = realbetti::cache::resolve_dir(flag);
    if (!dir)
        realbetti::fail(ErrorCode::InvalidInput,
                        "no cache directory configured (--cache-dir or REALBETTI_CACHE_DIR)");
    return *dir;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Betti-number engine for moduli of real bundles over a real curve"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    auto* compute = app.add_subcommand("compute", "Compute one moduli Betti polynomial");
    compute->add_option("--rank", cargs.rank, "bundle rank r >= 1")->required();
    compute->add_option("--degree", cargs.degree, "bundle degree d (coprime to r)")->required();
    compute->add_option("--genus", cargs.genus, "curve genus g >= 2")->required();
    compute->add_option("--circles", cargs.circles, "number of real circles a")->required();
    compute->add_option("--w", cargs.w, "Stiefel-Whitney vector (labeling only)");
    compute->add_flag("--quaternionic", cargs.quaternionic, "treat (r,d) as quaternionic; reduce to real");
    compute->add_flag("--allow-a0", cargs.allow_a0, "enable the a = 0 recursion path");
    compute->add_flag("--raw-d", cargs.raw_d, "disable degree normalization in the memo (audit)");
    compute->add_option("--order", cargs.order, "truncation order (raises the default only)");
    compute->add_option("--format", cargs.format, "text|json|csv")->default_val("text");
    compute->add_option("--cache-dir", cargs.cache_dir, "disk cache directory");
    compute->add_flag("--no-cache", cargs.no_cache, "bypass the disk cache");

    std::string table_section;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Recompute the published tables against references");
    table->add_option("section", table_section, "rank2-g2 | rank2-g3 | rank3-g2 (default: all)");
    table->add_option("--format", table_format, "text|json")->default_val("text");

    int verify_order = 100;
    bool verify_perturb = false;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Run identity checks and recursion-vs-closed-form checks");
    verify->add_option("--order", verify_order, "series order for the identity checks")
        ->default_val(100);
    verify->add_flag("--perturb", verify_perturb, "negative control: inject a deliberate mismatch");
    verify->add_option("--format", verify_format, "text|json")->default_val("text");

    auto* strata_cmd = app.add_subcommand("strata", "Harder-Narasimhan strata tools");
    strata_cmd->require_subcommand(1);
    int s_rank = 2, s_genus = 2, s_circles = 1;
    long long s_degree = 1, s_max_codim = 10;
    bool s_even = false;
    auto* strata_list = strata_cmd->add_subcommand("list", "List unstable HN types (one JSON per line)");
    strata_list->add_option("--rank", s_rank)->required();
    strata_list->add_option("--degree", s_degree)->required();
    strata_list->add_option("--genus", s_genus)->required();
    strata_list->add_option("--max-codim", s_max_codim)->required();
    strata_list->add_option("--circles", s_circles, "for refinement counts")->default_val(1);
    strata_list->add_flag("--even-only", s_even, "restrict to even part degrees (a = 0)");

    auto* formula_cmd = app.add_subcommand("formula", "Closed-form series access");
    formula_cmd->require_subcommand(1);
    std::string f_name;
    std::optional<int> f_genus, f_circles, f_rank, f_n;
    int f_order = 40;
    auto* formula_dump = formula_cmd->add_subcommand("dump", "Dump a closed form as a JSON series");
    formula_dump->add_option("--formula", f_name, "formula id (e.g. GaugeReal)")->required();
    formula_dump->add_option("--genus", f_genus);
    formula_dump->add_option("--circles", f_circles);
    formula_dump->add_option("--rank", f_rank);
    formula_dump->add_option("--n", f_n, "classical-family size (omit for the stable series)");
    formula_dump->add_option("--order", f_order)->default_val(40);

    auto* cache_cmd = app.add_subcommand("cache", "Disk cache administration");
    cache_cmd->require_subcommand(1);
    std::optional<std::string> cache_dir_flag;
    cache_cmd->add_option("--cache-dir", cache_dir_flag, "cache directory (beats REALBETTI_CACHE_DIR)");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "Remove cached series files");
    auto* cache_stats = cache_cmd->add_subcommand("stats", "Report cache file count and size");

    try {
        app.parse(argc, argv);

        if (*compute) return run_compute(cargs);
        if (*table) return run_table(table_section, table_format);
        if (*verify) return run_verify(verify_order, verify_perturb, verify_format);
        if (*strata_list) return run_strata_list(s_rank, s_degree, s_genus, s_max_codim, s_circles, s_even);
        if (*formula_dump) return run_formula_dump(f_name, f_genus, f_circles, f_rank, f_n, f_order);
        if (*cache_clear) {
            const auto dir = require_cache_dir(cache_dir_flag);
            std::cout << "removed " << realbetti::cache::clear(dir) << " cached series from " << dir.string() << '\n';
            return 0;
        }
        if (*cache_stats) {
            const auto dir = require_cache_dir(cache_dir_flag);
            const auto st = realbetti::cache::stats(dir);
            Json j;
            j["dir"] = dir.string();
            j["files"] = st.files;
            j["bytes"] = st.bytes;
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // machine-parsable usage error -> validation exit code
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::TailNotZero ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return 3;
    }
}
