import json
from fractions import Fraction

import pytest

from trigpos import verify as V
from trigpos.biwords import CountBudget
from trigpos.errors import PreconditionError
from trigpos.sums import MultiParams, Params


def test_thm23_example():
    r = V.verify_thm23(Params(1, 1, 1))
    assert r.status == V.PASS
    assert r.computed["b"] == ["2", "2"]
    assert r.computed["count_Bp"] == ["2", "2"]
    assert r.witnesses == []


def test_thm23_larger_example():
    r = V.verify_thm23(Params(3, 3, 1))
    assert r.computed["b"] == ["20", "180", "120", "8"]


def test_thm24_example():
    r = V.verify_thm24(Params(1, 2, 1))
    assert r.passed
    assert r.computed["c"] == r.computed["count_Cp"] == ["3", "6"]


def test_gap_preconditions():
    for fn in (V.verify_iks, V.verify_thm23, V.verify_surjection):
        with pytest.raises(PreconditionError):
            fn(Params(5, 1, 1))
    with pytest.raises(PreconditionError):
        V.check_conjecture(MultiParams([(3, 0)], 1))


def test_budget_skip_never_passes():
    tiny = CountBudget(max_length=3)
    r = V.verify_thm23(Params(2, 2, 1), tiny)
    assert r.status == V.SKIPPED
    assert r.computed["count_Bp"] is None
    assert V.verify_alternating(Params(2, 2, 1), tiny).status == V.SKIPPED
    assert V.verify_involution_and_paths(Params(2, 2, 1), tiny).status == V.SKIPPED


def test_failing_report_requires_witness():
    with pytest.raises(ValueError):
        V.Report("x", {}, V.FAIL)
    with pytest.raises(ValueError):
        V.Report("x", {}, "maybe")
    assert V.Report("x", {}, V.FAIL, witnesses=[{"kind": "t"}]).status == V.FAIL


def test_exact_str():
    assert V.exact_str(Fraction(-3, 4)) == "-3/4"
    assert V.exact_str({1: [2, 10**30]}) == {"1": ["2", str(10**30)]}
    assert V.exact_str(True) is True


def test_closed_forms_and_weights():
    assert V.closed_form_b(3) == [20, 180, 120, 8]
    assert V.closed_form_b(6) == [924, 33264, 138600, 147840, 47520, 4224, 64]
    assert V.verify_closed_forms(6).passed
    assert V.verify_weight_identities(6).passed


def test_jacobi_regions():
    assert V.in_jacobi_region(0, 0)
    assert not V.in_jacobi_region(1, 1)
    assert V.in_shifted_region(1, 1)
    assert not V.in_shifted_region(2, 1)
    r = V.verify_jacobi(Fraction(1, 2), Fraction(1, 2), 6, [Params(2, 2, 1), Params(3, 1, 1)])
    assert r.passed
    assert r.computed["series_checked"] == "3"
    # outside both regions only the closed forms are checked
    assert V.verify_jacobi(Fraction(5, 2), 1, 6, [Params(2, 2, 1)]).passed


def test_sine_example():
    r = V.verify_sine(Params(2, 1, 1))
    assert r.passed
    assert r.computed["mixed_derivative"] == ["6"]


def test_convolution_and_conjecture():
    assert V.verify_convolution(MultiParams([(1, 1), (2, 1)], 1)).passed
    r = V.check_conjecture(MultiParams([(1, 1), (2, 1)], 1))
    assert r.passed and set(r.computed) == {"cos", "sine"}
    with pytest.raises(ValueError):
        V.check_conjecture(MultiParams([(1, 1)], 1), ("tan",))


def test_conjecture_grid_order():
    grid = V.conjecture_grid([1, 2], 1, [1])
    assert [g.pairs for g in grid[:4]] == [((0, 0),), ((0, 1),), ((1, 0),), ((1, 1),)]
    assert all(g.k == 1 for g in grid)
    assert len(grid) == 4 + 10


def test_involution_report_counts():
    r = V.verify_involution(Params(2, 2, 1))
    assert r.passed
    assert r.computed["squared"]["fixed"] == "6"
    assert V.verify_involution(Params(6, 6, 1), max_biwords=10).status == V.SKIPPED


def test_surjection_and_chu():
    assert V.verify_surjection(Params(3, 3, 1)).passed
    r = V.verify_chu_vandermonde(6, [(Fraction(1, 2), Fraction(-3)), (Fraction(2), Fraction(1, 3))])
    assert r.passed and r.computed["poles"] != "0"


def test_params_grid_order():
    g = V.params_grid([1, 0], [0, 1], [2, 1], max_sum=1)
    assert [(P.M, P.N, P.k) for P in g] == [(0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2), (1, 0, 1), (1, 0, 2)]
    assert len(V.params_grid(range(4), range(4), [1], gap=True)) == 10


@pytest.mark.parametrize("report", [
    V.verify_iks(Params(2, 3, 1)),
    V.verify_thm23(Params(2, 2, 2)),
    V.verify_thm24(Params(3, 1, 1)),
    V.verify_sine(Params(2, 2, 1)),
    V.verify_alternating(Params(3, 2, 1)),
    V.verify_involution(Params(2, 1, 1)),
    V.verify_surjection(Params(2, 3, 1)),
    V.verify_convolution(MultiParams([(2, 2), (1, 0)], 1)),
    V.check_conjecture(MultiParams([(2, 2), (1, 0)], 1)),
    V.verify_closed_forms(3),
    V.verify_weight_identities(4),
    V.verify_jacobi(Fraction(0), Fraction(1, 2), 4, [Params(1, 1, 1)]),
    V.verify_chu_vandermonde(4, [(Fraction(1, 3), Fraction(5, 2))]),
], ids=lambda r: r.check_id)
def test_rerun_reproduces(report):
    again = V.rerun(report)
    assert json.dumps(again.without_timing().to_dict()) == json.dumps(report.without_timing().to_dict())


def test_run_parallel_keeps_order():
    args = [(Params(m, n, 1),) for m in range(4) for n in range(4)]
    one = V.run_parallel(V.verify_sine, args, 1)
    two = V.run_parallel(V.verify_sine, args, 2)
    assert [r.without_timing() for r in one] == [r.without_timing() for r in two]
