"""Smoke tests for the python bindings."""

import pytest

import ckdual

F = [[1, 1], [1, 0]]
B = [[1, 1], [1, 1]]


def test_snf_contract():
    out = ckdual.snf([[2, 4], [6, 8]])
    S, D, T = out["S"], out["D"], out["T"]
    assert D[0][1] == 0 and D[1][0] == 0
    assert D[0][0] == 2 and D[1][1] == 4  # divisors of the cokernel Z/2 + Z/4


def test_hnf_is_canonical():
    out = ckdual.hnf_rows([[2, 0], [0, 2], [1, 1]])
    assert out["H"] == [[1, 1], [0, 2], [0, 0]]


def test_kernel_and_solve():
    k = ckdual.kernel_basis([[0, -1], [0, 2]])
    assert len(k[0]) == 1
    assert ckdual.solve_in_column_lattice([[2]], [1]) is None
    x = ckdual.solve_in_column_lattice([[2]], [6])
    assert x == [3]


def test_validation_errors():
    assert ckdual.validate(F)
    with pytest.raises(ValueError):
        ckdual.validate([[0, 1], [1, 0]])  # permutation
    with pytest.raises(ValueError):
        ckdual.validate([[1, 2], [1, 0]])  # not 0-1


def test_invariants_of_F():
    inv = ckdual.invariants(F)
    assert inv["k0_toeplitz"]["display"] == "(Z; 1, -2)"
    assert inv["ext_w"]["free_rank"] == 0
    assert inv["k1_toeplitz"]["free_rank"] == 0


def test_verify_passes_for_F():
    report = ckdual.verify(F)
    assert report["pass"] is True
    assert len(report["reports"]) == 6


def test_iso_verdicts():
    assert ckdual.toeplitz_iso(F, B)["verdict"] == "no"
    assert ckdual.ck_iso(F, B)["verdict"] == "yes"
    out = ckdual.toeplitz_iso(F, F)
    assert out["verdict"] == "yes"
    assert "witness_matrix" in out


def test_enumerate_corpus_size2():
    out = ckdual.enumerate_corpus(2, limit=5, seed=1)
    assert out["exit_code"] == 0
    assert out["report"]["results"]["matrix_count"] == 3


def test_paper_examples_reports_known_mismatches():
    out = ckdual.paper_examples()
    # the published B and D lines disagree with direct computation
    assert out["exit_code"] == 1
    failing = [l["label"] for l in out["report"]["results"]["lines"] if not l["pass"]]
    assert "triple(B) ~ (Z; 1, 0)" in failing
    assert len(failing) == 4
