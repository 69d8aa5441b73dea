"""Smoke tests for the realbetti extension module."""

import pytest

import realbetti


def test_golden_sections_recompute():
    sections = realbetti.golden_sections()
    assert [s["name"] for s in sections] == ["rank2-g2", "rank2-g3", "rank3-g2"]
    for section in sections:
        for row in section["rows"]:
            res = realbetti.compute(
                rank=section["rank"],
                degree=section["degree"],
                genus=section["genus"],
                circles=row["circles"],
            )
            assert res["coeffs"] == row["coeffs"], (section["name"], row["circles"])
            assert res["palindromic"] is True
            assert res["degree"] == section["rank"] ** 2 * (section["genus"] - 1) + 1


def test_compute_result_shape():
    res = realbetti.compute(rank=2, degree=1, genus=2, circles=3, order=15)
    assert res["params"] == {"rank": 2, "degree": 1, "genus": 2, "circles": 3}
    assert res["coeffs"] == [1, 5, 10, 10, 5, 1]
    assert res["order"] == 15
    assert res["strata"] == 7
    assert res["cache_key"] == "g2a3r2d1N15v1"


def test_validation_maps_to_engine_error():
    with pytest.raises(realbetti.EngineError, match="NotCoprime"):
        realbetti.compute(rank=2, degree=2, genus=2, circles=1)
    with pytest.raises(realbetti.EngineError, match="InvalidTopology"):
        realbetti.compute(rank=2, degree=1, genus=2, circles=4)
    with pytest.raises(realbetti.EngineError, match="InvalidInput"):
        realbetti.compute(rank=3, degree=4, genus=2, circles=0)  # needs allow_a0


def test_a0_and_quaternionic_paths():
    res = realbetti.compute(rank=3, degree=4, genus=2, circles=0, allow_a0=True)
    assert res["coeffs"] == [1, 2, 2, 5, 9, 10, 9, 5, 2, 2, 1]

    assert realbetti.quaternionic_admissible(3, 1, genus=2, circles=0)
    assert realbetti.quaternionic_to_real(3, 1, genus=2, circles=0) == (3, 4)
    quat = realbetti.compute(
        rank=3, degree=1, genus=2, circles=0, allow_a0=True, quaternionic=True
    )
    assert quat["coeffs"] == res["coeffs"]
    assert quat["params"]["real_degree"] == 4


def test_series_helpers():
    assert realbetti.gauge_classifying_series(genus=2, circles=1, rank=1, order=4) == [
        1, 3, 4, 4, 4,
    ]
    assert realbetti.semistable_series(1, 1, genus=2, circles=1, order=4) == [1, 3, 4, 4, 4]
    assert realbetti.loop_group_series(1, "fixed", 5) == [1, 1, 1, 1, 1, 1]
    assert realbetti.classical_group_series("U", 2, order=6) == [1, 0, 1, 0, 2, 0, 2]
    assert realbetti.low_rank_moduli_closed_form(2, genus=2, circles=1, order=5) == [
        1, 3, 4, 4, 3, 1,
    ]


def test_strata_helpers():
    types = realbetti.enumerate_unstable_types(2, 1, genus=2, max_codim=6)
    assert [(list(p), c) for p, c in types] == [
        ([(1, 1), (1, 0)], 2),
        ([(1, 2), (1, -1)], 4),
        ([(1, 3), (1, -2)], 6),
    ]
    assert realbetti.codimension([(1, 1), (1, 0)], genus=2) == 2
    assert realbetti.real_refinement_count([(1, 1), (1, 0)], circles=3) == 4
    assert realbetti.enumerate_real_types(2, 1, circles=2) == [[1, 0], [0, 1]]


def test_identities_and_partition_oracle():
    for name in ("stable-cp1-complex", "partition", "genus-zero-real-a", "genus-zero-real-b"):
        rep = realbetti.verify_identity(name, order=60)
        assert rep["equal"] is True, name
        bad = realbetti.verify_identity(name, order=60, perturb=True)
        assert bad["equal"] is False, name
        assert bad["mismatch_index"] >= 0
        assert bad["lhs"] != bad["rhs"]

    assert realbetti.brute_force_partition_count(10) == 42
    assert realbetti.brute_force_partition_count(30) == 5604


def test_exact_arithmetic_beyond_machine_ints():
    # p(1000) has 31 digits; the bindings must hand back exact Python ints.
    series = realbetti.classical_group_series("O", None, order=1000)
    assert series[100] == 190569292
    assert series[1000] == 24061467864032622473692149727991
