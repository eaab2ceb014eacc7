"""Checkers that tie expansions to oracles and emit :class:`Report` values.

Every checker is a pure function of its arguments. ``params`` in a report
holds everything needed to rerun it through :func:`rerun`.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import wraps
from itertools import combinations_with_replacement
from typing import Any, Callable, Iterable, Sequence

from . import biwords as bw
from .errors import BudgetExceeded, PoleError, PreconditionError
from .exact import Poly, hyp2f1_terminating, pochhammer
from .sums import (
    MultiParams,
    Params,
    WeightFamily,
    alt_sum,
    family_weight_sum,
    generic_transform,
    jacobi_closed_form,
    jacobi_closed_form_printed,
    mixed_series,
    product_series,
    shifted_jacobi_closed_form,
    single_series,
    squared_series,
    weight_sum_A,
    weight_sum_B,
    weight_sum_C,
    weight_w,
)
from .trig import (
    CosSeries,
    cheb_U_shifted,
    derivative_transform,
    expand_cos_series,
    expand_sine_series,
    hadamard,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Report:
    check_id: str
    params: dict
    status: str
    computed: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    runtime_ms: int = 0

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status,
            "computed": self.computed,
            "witnesses": self.witnesses,
            "runtime_ms": self.runtime_ms,
        }

    def without_timing(self) -> Report:
        return replace(self, runtime_ms=0)


def exact_str(x) -> Any:
    """Render ints and Fractions as decimal strings, recursing into containers."""
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, Poly):
        return [str(c) for c in x.coeffs]
    if isinstance(x, CosSeries):
        return {str(l): str(a) for l, a in x.coeffs.items()}
    if isinstance(x, bw.BiWord):
        return [x.u, x.v]
    if isinstance(x, dict):
        return {str(k): exact_str(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact_str(v) for v in x]
    return x


def _status(witnesses: list) -> str:
    return FAIL if witnesses else PASS


def timed(fn: Callable[..., Report]) -> Callable[..., Report]:
    @wraps(fn)
    def wrapper(*args, **kwargs) -> Report:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        return replace(rep, runtime_ms=int((time.perf_counter() - t0) * 1000))

    return wrapper


def _pparams(P: Params) -> dict:
    return {"M": str(P.M), "N": str(P.N), "k": str(P.k)}


def _mparams(MP: MultiParams) -> dict:
    return {"pairs": [[str(m), str(n)] for m, n in MP.pairs], "k": str(MP.k)}


def _require_gap(P: Params, what: str) -> None:
    if not P.gap_ok:
        raise PreconditionError(f"{what} requires |M-N| <= k, got M={P.M}, N={P.N}, k={P.k}")


def _coeff_witnesses(poly: Poly, label: str, start: int = 0, integral: bool = True) -> list[dict]:
    out = []
    for p, c in enumerate(poly.coeffs):
        if p < start:
            continue
        if c < 0 or (integral and c.denominator != 1):
            out.append({"kind": "coefficient", "series": label, "p": str(p), "value": str(c)})
    return out


def _hist_list(hist: dict[int, int]) -> list[int]:
    if not hist:
        return []
    return [hist.get(p, 0) for p in range(max(hist) + 1)]


# ---------------------------------------------------------------------------
# Expansion checks


@timed
def verify_iks(P: Params) -> Report:
    """Single binomial series is a nonnegative integral polynomial in ``1 + cos x``."""
    _require_gap(P, "verify_iks")
    a = expand_cos_series(single_series(P))
    wit = _coeff_witnesses(a, "single")
    return Report("iks", _pparams(P), _status(wit), {"a": exact_str(a)}, wit)


def _expansion_vs_oracle(check_id, P, series, oracle, budget, label, oracle_label) -> Report:
    expansion = expand_cos_series(series)
    wit = _coeff_witnesses(expansion, label)
    computed = {label: exact_str(expansion)}
    try:
        counts = oracle(P, budget)
    except BudgetExceeded as exc:
        computed[oracle_label] = None
        computed["skip_reason"] = str(exc)
        return Report(check_id, _pparams(P), FAIL if wit else SKIPPED, computed, wit)
    counts_list = _hist_list(counts)
    computed[oracle_label] = exact_str(counts_list)
    width = max(len(expansion.coeffs), len(counts_list))
    for p in range(width):
        c = expansion.coeff(p)
        o = counts.get(p, 0)
        if c != o:
            wit.append({"kind": "oracle_mismatch", "p": str(p), "expansion": str(c), "count": str(o)})
    return Report(check_id, _pparams(P), _status(wit), computed, wit)


@timed
def verify_thm23(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> Report:
    """Squared series expansion equals the ``|B_p|`` counts."""
    _require_gap(P, "verify_thm23")
    return _expansion_vs_oracle("thm23", P, squared_series(P), bw.count_Bp, budget, "b", "count_Bp")


@timed
def verify_thm24(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> Report:
    """Mixed series expansion equals the class counts ``c_p``."""
    return _expansion_vs_oracle("thm24", P, mixed_series(P), bw.count_Cp, budget, "c", "count_Cp")


def closed_form_b(M: int) -> list[int]:
    """``(2M)! 2^p / ((M-p)!^2 (2p)!)`` for ``p = 0..M``."""
    f = math.factorial
    return [f(2 * M) * 2**p // (f(M - p) ** 2 * f(2 * p)) for p in range(M + 1)]


def closed_form_b_odd(M: int) -> list[int]:
    """``(2M+1)! 2^(p-1) / ((M-p+1)!^2 (2p-1)!)`` for ``p = 1..M+1``, with 0 at ``p = 0``."""
    f = math.factorial
    return [0] + [f(2 * M + 1) * 2 ** (p - 1) // (f(M - p + 1) ** 2 * f(2 * p - 1)) for p in range(1, M + 2)]


def closed_form_c_odd(M: int) -> list[int]:
    """``(2M+1)! 2^p / ((M-p)! (M-p+1)! (2p)!)`` for ``p = 0..M``."""
    f = math.factorial
    return [f(2 * M + 1) * 2**p // (f(M - p) * f(M - p + 1) * f(2 * p)) for p in range(M + 1)]


@timed
def verify_closed_forms(M_max: int) -> Report:
    """The three explicit ``k = 1`` expansions for ``M = 0..M_max``."""
    wit = []
    computed = {}
    for M in range(M_max + 1):
        cases = (
            ("even_squared", squared_series(Params(M, M, 1)), closed_form_b(M)),
            ("odd_squared", squared_series(Params(M, M + 1, 1)), closed_form_b_odd(M)),
            ("odd_mixed", mixed_series(Params(M, M + 1, 1)), closed_form_c_odd(M)),
        )
        row = {}
        for name, series, formula in cases:
            got = expand_cos_series(series)
            want = Poly(formula)
            row[name] = exact_str(got)
            if got != want:
                wit.append({"kind": "closed_form", "M": str(M), "identity": name,
                            "expansion": exact_str(got), "formula": exact_str(formula)})
        computed[str(M)] = row
    return Report("closed_forms", {"M_max": str(M_max)}, _status(wit), computed, wit)


@timed
def verify_weight_identities(l_max: int) -> Report:
    """Vanishing of ``A(l, p)`` for ``l > p >= 1``, ``A(p, p) = 2^(p-1)``, ``B(l,p) + C(l-1,p) = 0``."""
    wit = []
    checked = {"A_zero": 0, "A_diag": 0, "B_plus_C": 0}
    for l in range(1, l_max + 1):
        for p in range(1, l + 1):
            if p < l:
                checked["A_zero"] += 1
                a = weight_sum_A(l, p)
                if a != 0:
                    wit.append({"kind": "A_zero", "l": str(l), "p": str(p), "value": str(a)})
                checked["B_plus_C"] += 1
                bc = weight_sum_B(l, p) + weight_sum_C(l - 1, p)
                if bc != 0:
                    wit.append({"kind": "B_plus_C", "l": str(l), "p": str(p), "value": str(bc)})
            else:
                checked["A_diag"] += 1
                a = weight_sum_A(p, p)
                if a != 2 ** (p - 1) or weight_w(p, p) != 2 ** (p - 1) or weight_w(-p, p) != 2 ** (p - 1):
                    wit.append({"kind": "A_diag", "p": str(p), "value": str(a)})
    if weight_w(0, 0) != 1:
        wit.append({"kind": "w00", "value": str(weight_w(0, 0))})
    return Report("weights", {"l_max": str(l_max)}, _status(wit), exact_str(checked), wit)


# ---------------------------------------------------------------------------
# Jacobi weights


def in_jacobi_region(alpha, beta) -> bool:
    s = Fraction(alpha) + Fraction(beta)
    return -1 <= s <= 1 and Fraction(beta) > -1


def in_shifted_region(alpha, beta) -> bool:
    s = Fraction(alpha) + Fraction(beta)
    return -1 <= s <= 2 and Fraction(beta) > -1


@timed
def verify_jacobi(alpha, beta, l_max: int, series_params: Sequence[Params] = ()) -> Report:
    """Closed forms against brute weight sums, and positivity inside the hypothesis regions.

    ``series_params`` supplies the squared (gap points only) and mixed series
    whose Jacobi transforms must have nonnegative ``z^p`` coefficients, ``p > 0``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    fam = WeightFamily.jacobi(alpha, beta)
    sfam = WeightFamily.shifted_jacobi(alpha, beta)
    jac_region = in_jacobi_region(alpha, beta)
    sh_region = in_shifted_region(alpha, beta)
    wit: list[dict] = []
    poles: list[dict] = []
    printed_mismatch = 0
    checked = 0
    for l in range(l_max + 1):
        for p in range(l + 1):
            try:
                brute = family_weight_sum(fam, l, p)
                closed = jacobi_closed_form(l, p, alpha, beta)
                sbrute = family_weight_sum(sfam, l, p)
                sclosed = shifted_jacobi_closed_form(l, p, alpha, beta)
            except PoleError as exc:
                poles.append({"l": str(l), "p": str(p), "reason": str(exc)})
                continue
            checked += 1
            if brute != closed:
                wit.append({"kind": "jacobi_closed_form", "l": str(l), "p": str(p),
                            "brute": str(brute), "closed": str(closed)})
            if sbrute != sclosed:
                wit.append({"kind": "shifted_closed_form", "l": str(l), "p": str(p),
                            "brute": str(sbrute), "closed": str(sclosed)})
            if jac_region and p > 0 and closed < 0:
                wit.append({"kind": "jacobi_weight_sum_negative", "l": str(l), "p": str(p), "value": str(closed)})
            if sh_region and p > 0 and sclosed < 0:
                wit.append({"kind": "shifted_weight_sum_negative", "l": str(l), "p": str(p), "value": str(sclosed)})
            try:
                if jacobi_closed_form_printed(l, p, alpha, beta) != closed:
                    printed_mismatch += 1
            except PoleError:
                printed_mismatch += 1

    series_checked = 0
    for P in series_params:
        pool = [("mixed", mixed_series(P))]
        if P.gap_ok:
            pool.insert(0, ("squared", squared_series(P)))
        for name, s in pool:
            label = f"{name}(M={P.M},N={P.N},k={P.k})"
            try:
                if jac_region:
                    wit += _coeff_witnesses(generic_transform(s, fam), "jacobi " + label, start=1, integral=False)
                if sh_region:
                    wit += _coeff_witnesses(generic_transform(s, sfam), "shifted " + label, start=0, integral=False)
            except PoleError as exc:
                poles.append({"series": label, "reason": str(exc)})
                continue
            series_checked += 1

    computed = {
        "jacobi_region": jac_region,
        "shifted_region": sh_region,
        "weight_sums_checked": str(checked),
        "series_checked": str(series_checked),
        "printed_form_mismatches": str(printed_mismatch),
        "poles": poles,
    }
    params = {"alpha": str(alpha), "beta": str(beta), "l_max": str(l_max),
              "series": [_pparams(P) for P in series_params]}
    return Report("jacobi", params, _status(wit), computed, wit)


# ---------------------------------------------------------------------------
# Sine and derivative versions


def derivative_via_U(s: CosSeries) -> Poly:
    """``sum_{l>=1} c_l l U_{l-1}``, independent of the cosine expansion."""
    acc = Poly()
    for l, c in s.folded().items():
        if l:
            acc = acc + cheb_U_shifted(l - 1).scale(c * l)
    return acc


@timed
def verify_sine(P: Params) -> Report:
    """Sine and derivative expansions have nonnegative coefficients in ``z``.

    The squared series is only included when ``|M - N| <= k``.
    """
    pool = [("mixed", mixed_series(P))]
    if P.gap_ok:
        pool.insert(0, ("squared", squared_series(P)))
    wit, computed = [], {}
    for name, s in pool:
        sine = expand_sine_series(s)
        deriv = derivative_transform(s)
        computed[f"{name}_sine"] = exact_str(sine)
        computed[f"{name}_derivative"] = exact_str(deriv)
        wit += _coeff_witnesses(sine, f"{name}_sine")
        wit += _coeff_witnesses(deriv, f"{name}_derivative")
        alt = derivative_via_U(s)
        if alt != deriv:
            wit.append({"kind": "derivative_identity", "series": name,
                        "derivative": exact_str(deriv), "via_U": exact_str(alt)})
    return Report("sine", _pparams(P), _status(wit), computed, wit)


# ---------------------------------------------------------------------------
# Products and the conjecture


@timed
def verify_convolution(MP: MultiParams) -> Report:
    """The product series equals the Hadamard product of the single series."""
    prod = product_series(MP)
    had = hadamard(*(single_series(Params(m, n, MP.k)) for m, n in MP.pairs))
    wit = [] if prod == had else [{"kind": "hadamard_mismatch", "product": exact_str(prod),
                                   "hadamard": exact_str(had)}]
    return Report("convolution", _mparams(MP), _status(wit), {"series": exact_str(prod)}, wit)


MODES = ("cos", "sine")


@timed
def check_conjecture(MP: MultiParams, modes: Sequence[str] = MODES) -> Report:
    """Expand the product series in ``z`` and record any coefficient violating the conjecture."""
    if not MP.gap_ok:
        raise PreconditionError(f"conjecture scan requires |M_i-N_i| <= k for all pairs, got {MP}")
    s = product_series(MP)
    wit, computed = [], {}
    for mode in modes:
        if mode == "cos":
            poly = expand_cos_series(s)
        elif mode == "sine":
            poly = expand_sine_series(s)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        computed[mode] = exact_str(poly)
        for w in _coeff_witnesses(poly, mode):
            w["kind"] = "conjecture_violation"
            wit.append(w)
    params = dict(_mparams(MP), modes=list(modes))
    return Report("conjecture", params, _status(wit), computed, wit)


def conjecture_grid(r_values: Iterable[int], max_mn: int, k_values: Iterable[int]) -> list[MultiParams]:
    """All multisets of ``r`` pairs ``(M_i, N_i)`` with ``M_i, N_i <= max_mn`` and ``|M_i - N_i| <= k``.

    The product is symmetric in the factors, so pairs are taken as sorted
    multisets. Order: by ``k``, then ``r``, then lexicographic pairs.
    """
    out = []
    for k in sorted(set(k_values)):
        pairs = [(m, n) for m in range(max_mn + 1) for n in range(max_mn + 1) if abs(m - n) <= k]
        for r in sorted(set(r_values)):
            for combo in combinations_with_replacement(pairs, r):
                out.append(MultiParams(combo, k))
    return out


def scan_conjecture(grid: Sequence[MultiParams], modes: Sequence[str] = MODES, workers: int = 1) -> list[Report]:
    """One report per grid point, in grid order."""
    return run_parallel(check_conjecture, [(MP, tuple(modes)) for MP in grid], workers)


# ---------------------------------------------------------------------------
# Alternating sums, the involution, and the surjection


@timed
def verify_alternating(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> Report:
    """Alternating sums at ``x = pi`` against the bi-word and lattice-path counts.

    The squared and single series comparisons need ``|M - N| <= k`` and are
    omitted otherwise; the mixed one holds unconditionally.
    """
    computed, wit = {}, []
    try:
        rows = []
        if P.gap_ok:
            rows.append(("squared", alt_sum(squared_series(P)), bw.count_prop21(P, budget)))
        rows.append(("mixed", alt_sum(mixed_series(P)), bw.count_prop22(P, budget)))
        if P.gap_ok:
            rows.append(("single", alt_sum(single_series(P)), bw.lattice_path_count_avoiding(P, budget)))
    except BudgetExceeded as exc:
        return Report("alternating", _pparams(P), SKIPPED, {"skip_reason": str(exc)}, [])
    for name, series_value, count in rows:
        computed[name] = {"alt_sum": str(series_value), "count": str(count)}
        if series_value != count:
            wit.append({"kind": "alt_sum_mismatch", "series": name,
                        "alt_sum": str(series_value), "count": str(count)})
    return Report("alternating", _pparams(P), _status(wit), computed, wit)


def involution_suite(P: Params, same_content: bool, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> dict:
    """Check the prefix-swap involution on every bi-word of ``W = U_l W_l``.

    Returns counts and witnesses: involutive, moves ``W_j`` to ``W_{j+-1}``,
    keeps the first crossing index, and the signed total of ``W`` equals the
    signed total of the bi-words that never reach ``+-k``. ``fixed_off_zero``
    counts such bi-words outside ``W_0``; it vanishes when ``|M - N| <= k``.
    """
    moved = fixed = fixed_signed = fixed_off_zero = signed = 0
    wit = []
    for l in bw.w_l_values(P):
        sign = -1 if l % 2 else 1
        for b in bw.iter_w(P, l, same_content, budget):
            signed += sign
            s = bw.first_crossing(b, P.k)
            if s is None:
                fixed += 1
                fixed_signed += sign
                fixed_off_zero += l != 0
                continue
            moved += 1
            img = bw.involution(b, P.k)
            j = bw.w_index(P, img, same_content)
            if bw.involution(img, P.k) != b:
                wit.append({"kind": "not_involutive", "biword": exact_str(b)})
            if j is None or abs(j - l) != 1:
                wit.append({"kind": "not_sign_reversing", "biword": exact_str(b), "l": str(l),
                            "image_l": "none" if j is None else str(j)})
            if bw.first_crossing(img, P.k) != s:
                wit.append({"kind": "crossing_index_changed", "biword": exact_str(b)})
    if signed != fixed_signed:
        wit.append({"kind": "signed_total", "signed": str(signed), "fixed_signed": str(fixed_signed)})
    if (P.gap_ok or same_content) and fixed_off_zero:
        wit.append({"kind": "fixed_point_outside_W0", "count": str(fixed_off_zero)})
    return {"moved": moved, "fixed": fixed, "fixed_signed": fixed_signed,
            "fixed_off_zero": fixed_off_zero, "signed_total": signed, "witnesses": wit}


def w_size(P: Params, same_content: bool) -> int:
    total = 0
    for l in bw.w_l_values(P):
        (um, un), (vm, vn) = bw.w_family(P, l, same_content)
        if min(um, un, vm, vn) >= 0:
            total += math.comb(um + un, un) * math.comb(vm + vn, vn)
    return total


@timed
def verify_involution(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET,
                      max_biwords: int = 2_000_000) -> Report:
    """Involution suite over both the ``M_{N,M}`` and same-content families."""
    sizes = {"squared": w_size(P, False), "mixed": w_size(P, True)}
    if max(sizes.values()) > max_biwords:
        reason = f"W has {max(sizes.values())} bi-words, limit {max_biwords}"
        return Report("involution", _pparams(P), SKIPPED, {"skip_reason": reason}, [])
    computed, wit = {}, []
    try:
        for name, same in (("squared", False), ("mixed", True)):
            res = involution_suite(P, same, budget)
            wit += [dict(w, family=name) for w in res.pop("witnesses")]
            computed[name] = exact_str(res)
        c21 = bw.count_prop21(P, budget) if P.gap_ok else None
        c22 = bw.count_prop22(P, budget)
    except BudgetExceeded as exc:
        return Report("involution", _pparams(P), SKIPPED, {"skip_reason": str(exc)}, [])
    if c21 is not None:
        fixed = int(computed["squared"]["fixed"])
        if fixed != c21:
            wit.append({"kind": "fixed_points_vs_prop21", "fixed": str(fixed), "count": str(c21)})
    fixed = int(computed["mixed"]["fixed"])
    if fixed != c22:
        wit.append({"kind": "fixed_points_vs_prop22", "fixed": str(fixed), "count": str(c22)})
    return Report("involution", _pparams(P), _status(wit), computed, wit)


@timed
def verify_involution_and_paths(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> Report:
    """Involution suite together with the alternating-sum comparisons."""
    parts = [verify_involution(P, budget), verify_alternating(P, budget)]
    wit = [w for r in parts for w in r.witnesses]
    if wit:
        status = FAIL
    elif any(r.status == SKIPPED for r in parts):
        status = SKIPPED
    else:
        status = PASS
    computed = {r.check_id: dict(r.computed, status=r.status) for r in parts}
    return Report("involution_and_paths", _pparams(P), status, computed, wit)


@timed
def verify_surjection(P: Params, budget: bw.CountBudget = bw.DEFAULT_BUDGET) -> Report:
    """For every ``p >= 1`` with ``B_p`` nonempty, each good guy has ``2^(p-1)`` preimages."""
    _require_gap(P, "verify_surjection")
    try:
        hist = bw.count_Bp(P, budget)
        computed, wit = {}, []
        for p in sorted(hist):
            if p == 0:
                continue
            res = bw.surjection_preimages(P, p, budget)
            computed[str(p)] = {key: exact_str(res[key]) for key in
                                ("expected_preimages", "source_size", "target_size", "image_size", "preimage_counts")}
            if not res["ok"]:
                wit.append({"kind": "surjection", "p": str(p),
                            "outside_target": exact_str(res["outside_target"][:5]),
                            "wrong_counts": exact_str(list(res["wrong_counts"].items())[:5]),
                            "missed": exact_str(res["missed"][:5])})
    except BudgetExceeded as exc:
        return Report("surjection", _pparams(P), SKIPPED, {"skip_reason": str(exc)}, [])
    return Report("surjection", _pparams(P), _status(wit), computed, wit)


@timed
def verify_chu_vandermonde(n_max: int, grid: Sequence[tuple[Fraction, Fraction]]) -> Report:
    """Direct ``2F1(-n, a; c; 1)`` summation against ``(c-a)_n / (c)_n``."""
    wit, checked, poles = [], 0, 0
    for a, c in grid:
        for n in range(n_max + 1):
            try:
                direct = hyp2f1_terminating(n, a, c)
            except PoleError:
                poles += 1
                continue
            checked += 1
            closed = pochhammer(c - a, n) / pochhammer(c, n)
            if direct != closed:
                wit.append({"kind": "chu_vandermonde", "n": str(n), "a": str(a), "c": str(c),
                            "direct": str(direct), "closed": str(closed)})
    params = {"n_max": str(n_max), "grid": [[str(a), str(c)] for a, c in grid]}
    return Report("chu_vandermonde", params, _status(wit), {"checked": str(checked), "poles": str(poles)}, wit)


# ---------------------------------------------------------------------------
# Running grids


def _call(job):
    fn, args = job
    return fn(*args)


def run_parallel(fn: Callable[..., Report], arg_tuples: Sequence[tuple], workers: int = 1) -> list[Report]:
    """Apply ``fn`` to each argument tuple; results come back in input order."""
    jobs = [(fn, args) for args in arg_tuples]
    if workers <= 1 or len(jobs) <= 1:
        return [_call(j) for j in jobs]
    chunk = max(1, len(jobs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_call, jobs, chunksize=chunk))


def params_grid(M_values, N_values, k_values, max_sum: int | None = None,
                gap: bool = False) -> list[Params]:
    """Lexicographic ``(M, N, k)`` grid, optionally capped on ``M + N`` and gap-filtered."""
    out = []
    for M in sorted(set(M_values)):
        for N in sorted(set(N_values)):
            if max_sum is not None and M + N > max_sum:
                continue
            for k in sorted(set(k_values)):
                P = Params(M, N, k)
                if gap and not P.gap_ok:
                    continue
                out.append(P)
    return out


def _P(params: dict) -> Params:
    return Params(int(params["M"]), int(params["N"]), int(params["k"]))


def _MP(params: dict) -> MultiParams:
    return MultiParams(tuple((int(m), int(n)) for m, n in params["pairs"]), int(params["k"]))


RERUN: dict[str, Callable[[dict], Report]] = {
    "iks": lambda p: verify_iks(_P(p)),
    "thm23": lambda p: verify_thm23(_P(p)),
    "thm24": lambda p: verify_thm24(_P(p)),
    "closed_forms": lambda p: verify_closed_forms(int(p["M_max"])),
    "weights": lambda p: verify_weight_identities(int(p["l_max"])),
    "jacobi": lambda p: verify_jacobi(Fraction(p["alpha"]), Fraction(p["beta"]), int(p["l_max"]),
                                      [_P(q) for q in p["series"]]),
    "sine": lambda p: verify_sine(_P(p)),
    "convolution": lambda p: verify_convolution(_MP(p)),
    "conjecture": lambda p: check_conjecture(_MP(p), tuple(p["modes"])),
    "alternating": lambda p: verify_alternating(_P(p)),
    "involution": lambda p: verify_involution(_P(p)),
    "involution_and_paths": lambda p: verify_involution_and_paths(_P(p)),
    "surjection": lambda p: verify_surjection(_P(p)),
    "chu_vandermonde": lambda p: verify_chu_vandermonde(
        int(p["n_max"]), [(Fraction(a), Fraction(c)) for a, c in p["grid"]]),
}


def rerun(report: Report) -> Report:
    """Run the check named by ``report.check_id`` again from its serialized params."""
    return RERUN[report.check_id](report.params)
