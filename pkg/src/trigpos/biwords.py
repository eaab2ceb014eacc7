"""Binary words, bi-word k-factorizations and brute-force counting oracles.

Words are strings over ``"01"``. Scalar helpers (``prefix_diffs``,
``k_factorize``, ``involution``) operate on one bi-word at a time and serve as
the reference; the ``count_*`` oracles enumerate every pair in a product of
fixed-content word sets, vectorised with numpy over chunks of pairs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from .errors import BudgetExceeded, NoCrossingError, PreconditionError
from .exact import binom
from .sums import Params


class BiWord(NamedTuple):
    u: str
    v: str


@dataclass(frozen=True)
class CountBudget:
    """Limits on brute-force enumeration."""

    max_length: int = 16
    max_pairs: int = 20_000_000

    def __post_init__(self):
        if self.max_length < 1 or self.max_pairs < 1:
            raise ValueError("budget limits must be positive")

    def check(self, length: int, pairs: int) -> None:
        if length > self.max_length:
            raise BudgetExceeded(f"word length {length} exceeds budget {self.max_length}")
        if pairs > self.max_pairs:
            raise BudgetExceeded(f"{pairs} pairs exceed budget {self.max_pairs}")


DEFAULT_BUDGET = CountBudget()


def ones(w: str) -> int:
    return w.count("1")


def zeros(w: str) -> int:
    return w.count("0")


def enumerate_words(m: int, n: int, budget: CountBudget = DEFAULT_BUDGET) -> Iterator[str]:
    """Yield every word with ``m`` ones and ``n`` zeros in lexicographic order."""
    if m < 0 or n < 0:
        return
    budget.check(m + n, binom(m + n, n))
    length = m + n
    # Ascending zero positions give ascending words.
    for zero_pos in itertools.combinations(range(length), n):
        bits = ["1"] * length
        for i in zero_pos:
            bits[i] = "0"
        yield "".join(bits)


def prefix_diffs(b: BiWord) -> list[int]:
    """Running sums ``sum_{j<=s} (u_j - v_j)`` for ``s = 1..len``."""
    out, acc = [], 0
    for a, c in zip(b.u, b.v):
        acc += (a == "1") - (c == "1")
        out.append(acc)
    return out


def first_crossing(b: BiWord, k: int) -> int | None:
    """Smallest ``s`` with prefix diff ``+-k``, or None."""
    for s, d in enumerate(prefix_diffs(b), start=1):
        if abs(d) == k:
            return s
    return None


def involution(b: BiWord, k: int) -> BiWord:
    """Swap the first ``s`` letters of ``u`` and ``v`` at the first +-k crossing."""
    s = first_crossing(b, k)
    if s is None:
        raise NoCrossingError(f"prefix diffs of {b} stay inside (-{k}, {k})")
    return BiWord(b.v[:s] + b.u[s:], b.u[:s] + b.v[s:])


@dataclass(frozen=True)
class KFact:
    """Greedy k-factorization of a bi-word.

    ``cuts`` are the end positions of the full segments, each with ones
    difference ``+-k`` recorded in ``seg_diffs``; the remainder after the
    last cut has difference ``trailing_diff`` strictly inside ``(-k, k)``.
    """

    k: int
    cuts: tuple[int, ...]
    seg_diffs: tuple[int, ...]
    trailing_diff: int
    length: int

    @property
    def k_segments(self) -> int:
        return len(self.cuts)

    @property
    def class_p(self) -> int:
        """Number of ``r`` whose cumulative segment difference equals ``+-k``."""
        total, hits = 0, 0
        for d in self.seg_diffs:
            total += d
            hits += abs(total) == self.k
        return hits

    @property
    def good(self) -> bool:
        """All segment differences equal (vacuously true with no segments)."""
        return len(set(self.seg_diffs)) <= 1

    def segments(self, b: BiWord) -> list[BiWord]:
        bounds = (0,) + self.cuts + (self.length,)
        return [BiWord(b.u[a:c], b.v[a:c]) for a, c in zip(bounds, bounds[1:])]


def k_factorize(b: BiWord, k: int) -> KFact:
    """Cut as soon as the within-segment ones difference reaches ``+-k``."""
    if len(b.u) != len(b.v):
        raise ValueError("bi-word components must have equal length")
    cuts, diffs, d = [], [], 0
    for pos, (a, c) in enumerate(zip(b.u, b.v), start=1):
        d += (a == "1") - (c == "1")
        if abs(d) == k:
            cuts.append(pos)
            diffs.append(d)
            d = 0
    return KFact(k, tuple(cuts), tuple(diffs), d, len(b.u))


def max_segments_exhaustive(b: BiWord, k: int) -> int:
    """Most ``+-k`` segments over every factorization, found by trying all cut sets.

    A factorization cuts at ``0 < c_1 < ... < c_s <= len``; the first ``s``
    factors must have ones difference ``+-k`` and the remainder a difference
    in ``[-k, k]``. A remainder at exactly ``+-k`` counts as one more segment.
    """
    prefix = [0] + prefix_diffs(b)
    n = len(prefix) - 1
    best = -1
    for r in range(n + 1):
        for cut_set in itertools.combinations(range(1, n + 1), r):
            prev, ok = 0, True
            for c in cut_set:
                if abs(prefix[c] - prefix[prev]) != k:
                    ok = False
                    break
                prev = c
            if not ok:
                continue
            rest = prefix[n] - prefix[prev]
            if abs(rest) > k:
                continue
            best = max(best, r + (abs(rest) == k and prev < n))
    return best


def exchange_segments(b: BiWord, fact: KFact, which) -> BiWord:
    """Swap ``u`` and ``v`` inside every full segment whose index is in ``which``."""
    parts_u, parts_v = [], []
    for j, seg in enumerate(fact.segments(b)):
        if j in which and j < fact.k_segments:
            parts_u.append(seg.v)
            parts_v.append(seg.u)
        else:
            parts_u.append(seg.u)
            parts_v.append(seg.v)
    return BiWord("".join(parts_u), "".join(parts_v))


# ---------------------------------------------------------------------------
# Vectorised enumeration


def _word_matrix(m: int, n: int, budget: CountBudget) -> np.ndarray:
    words = list(enumerate_words(m, n, budget))
    if not words:
        return np.zeros((0, m + n), dtype=np.int8)
    return np.array([[c == "1" for c in w] for w in words], dtype=np.int8).reshape(len(words), m + n)


def _pair_chunks(U: np.ndarray, V: np.ndarray, target: int = 1 << 22) -> Iterator[np.ndarray]:
    """Yield ``U[i:j, None, :] - V[None, :, :]`` in chunks of bounded size."""
    if len(U) == 0 or len(V) == 0:
        return
    length = max(U.shape[1], 1)
    step = max(1, target // (len(V) * length))
    for i in range(0, len(U), step):
        yield U[i:i + step, None, :].astype(np.int16) - V[None, :, :]


def _product_sets(u_content: tuple[int, int], v_content: tuple[int, int], budget: CountBudget):
    (um, un), (vm, vn) = u_content, v_content
    if um < 0 or un < 0 or vm < 0 or vn < 0:
        return None
    budget.check(um + un, binom(um + un, un) * binom(vm + vn, vn))
    return _word_matrix(um, un, budget), _word_matrix(vm, vn, budget)


@lru_cache(maxsize=64)
def _max_prefix_histogram(u_content: tuple[int, int], v_content: tuple[int, int]) -> tuple[int, ...]:
    """``h[m]`` = number of pairs whose largest ``|prefix diff|`` is ``m``."""
    sets = _product_sets(u_content, v_content, CountBudget(10**6, 10**18))
    if sets is None:
        return ()
    length = sets[0].shape[1]
    hist = np.zeros(length + 1, dtype=np.int64)
    for diff in _pair_chunks(*sets):
        if length == 0:
            hist[0] += diff.shape[0] * diff.shape[1]
            continue
        peak = np.abs(np.cumsum(diff, axis=2)).max(axis=2)
        hist += np.bincount(peak.ravel(), minlength=length + 1)
    return tuple(int(h) for h in hist)


def _count_strict(u_content, v_content, k: int, budget: CountBudget) -> int:
    (um, un), (vm, vn) = u_content, v_content
    if min(um, un, vm, vn) < 0:
        return 0
    budget.check(um + un, binom(um + un, un) * binom(vm + vn, vn))
    return sum(_max_prefix_histogram(u_content, v_content)[:k])


def _class_histogram(u_content, v_content, k: int, bound: int, budget: CountBudget) -> dict[int, int]:
    """Histogram of class ``p`` over pairs whose prefix diffs stay inside ``(-bound, bound)``."""
    sets = _product_sets(u_content, v_content, budget)
    if sets is None:
        return {}
    hist: Counter[int] = Counter()
    for diff in _pair_chunks(*sets):
        shape = diff.shape[:2]
        d = np.zeros(shape, dtype=np.int16)      # within-segment difference
        total = np.zeros(shape, dtype=np.int16)  # sum of completed segment diffs
        cls = np.zeros(shape, dtype=np.int16)
        ok = np.ones(shape, dtype=bool)
        for j in range(diff.shape[2]):
            d += diff[:, :, j]
            cut = np.abs(d) == k
            total += np.where(cut, d, 0).astype(np.int16)
            cls += cut & (np.abs(total) == k)
            d[cut] = 0
            ok &= np.abs(total + d) < bound
        values, counts = np.unique(cls[ok], return_counts=True)
        for p, c in zip(values.tolist(), counts.tolist()):
            hist[p] += c
    return dict(sorted(hist.items()))


def count_prop21(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> int:
    """Pairs in ``M_{M,N} x M_{N,M}`` with every prefix diff inside ``(-k, k)``."""
    if not P.gap_ok:
        raise PreconditionError(f"count_prop21 requires |M-N| <= k, got {P}")
    return _count_strict((P.M, P.N), (P.N, P.M), P.k, budget)


def count_prop22(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> int:
    """Pairs in ``M_{M,N} x M_{M,N}`` with every prefix diff inside ``(-k, k)``."""
    return _count_strict((P.M, P.N), (P.M, P.N), P.k, budget)


def count_Bp(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> dict[int, int]:
    """``p -> |B_p|``: class-``p`` pairs of ``M_{M,N} x M_{N,M}`` inside ``(-2k, 2k)``."""
    return _class_histogram((P.M, P.N), (P.N, P.M), P.k, 2 * P.k, budget)


def count_Cp(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> dict[int, int]:
    """``p -> c_p``: class-``p`` pairs of ``M_{M,N} x M_{M,N}`` inside ``(-2k, 2k)``."""
    return _class_histogram((P.M, P.N), (P.M, P.N), P.k, 2 * P.k, budget)


def count_Bp_scalar(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> dict[int, int]:
    """Same as :func:`count_Bp`, one bi-word at a time through :func:`k_factorize`."""
    return _scalar_histogram(P, (P.N, P.M), budget)


def count_Cp_scalar(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> dict[int, int]:
    return _scalar_histogram(P, (P.M, P.N), budget)


def _scalar_histogram(P: Params, v_content, budget: CountBudget) -> dict[int, int]:
    hist: Counter[int] = Counter()
    vs = list(enumerate_words(*v_content, budget))
    for u in enumerate_words(P.M, P.N, budget):
        for v in vs:
            b = BiWord(u, v)
            if all(abs(d) < 2 * P.k for d in prefix_diffs(b)):
                hist[k_factorize(b, P.k).class_p] += 1
    return dict(sorted(hist.items()))


def lattice_path_count_avoiding(P: Params, budget: CountBudget = DEFAULT_BUDGET) -> int:
    """Monotone paths from the origin to ``(M, N)`` that never visit ``y = x +- k``.

    Letter 1 is an east step and 0 a north step.
    """
    count = 0
    for w in enumerate_words(P.M, P.N, budget):
        x = y = 0
        for c in w:
            if c == "1":
                x += 1
            else:
                y += 1
            if abs(y - x) == P.k:
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# The W_l families and the exchange surjection


def w_family(P: Params, l: int, same_content: bool = False) -> tuple[tuple[int, int], tuple[int, int]]:
    """Contents ``((ones, zeros), (ones, zeros))`` of ``u`` and ``v`` in ``W_l``.

    ``same_content=False``: ``M_{M-kl, N+kl} x M_{N+kl, M-kl}``.
    ``same_content=True``: ``M_{M-kl, N+kl} x M_{M+kl, N-kl}``.
    """
    u = (P.M - P.k * l, P.N + P.k * l)
    v = (P.M + P.k * l, P.N - P.k * l) if same_content else (P.N + P.k * l, P.M - P.k * l)
    return u, v


def w_index(P: Params, b: BiWord, same_content: bool = False) -> int | None:
    """The ``l`` with ``b in W_l``, or None when ``b`` lies in no ``W_l``."""
    shift = P.M - ones(b.u)
    if shift % P.k:
        return None
    l = shift // P.k
    u, v = w_family(P, l, same_content)
    if (ones(b.u), zeros(b.u)) == u and (ones(b.v), zeros(b.v)) == v:
        return l
    return None


def iter_w(P: Params, l: int, same_content: bool = False, budget: CountBudget = DEFAULT_BUDGET) -> Iterator[BiWord]:
    (um, un), (vm, vn) = w_family(P, l, same_content)
    if min(um, un, vm, vn) < 0:
        return
    vs = list(enumerate_words(vm, vn, budget))
    for u in enumerate_words(um, un, budget):
        for v in vs:
            yield BiWord(u, v)


def w_l_values(P: Params) -> range:
    """All ``l`` for which ``W_l`` can be nonempty."""
    return range(-(P.N // P.k), P.M // P.k + 1)


def surjection_image(P: Params, b: BiWord) -> BiWord:
    """Image of ``b in B_p`` under the segment-exchange map onto good guys.

    Assumes ``N >= M``. Segments whose difference has the sign of the last
    full segment are exchanged, which leaves a good guy in ``W_{+-p}``.
    """
    fact = k_factorize(b, P.k)
    if not fact.seg_diffs:
        raise ValueError("class-0 bi-words have no image")
    eps = 1 if fact.seg_diffs[-1] > 0 else -1
    which = {j for j, d in enumerate(fact.seg_diffs) if d == eps * P.k}
    return exchange_segments(b, fact, which)


def surjection_preimages(P: Params, p: int, budget: CountBudget = DEFAULT_BUDGET) -> dict:
    """Run the exchange map on all of ``B_p`` and tally preimages per image.

    Returns a summary with the expected preimage count ``2^(p-1)``, the
    observed counts, the target set size (good guys in ``W_-p``, plus good
    guys in ``W_p`` with ``2p`` segments), and any discrepancies.
    """
    if p < 1:
        raise ValueError("surjection_preimages needs p >= 1")
    if not P.gap_ok:
        raise PreconditionError(f"surjection requires |M-N| <= k, got {P}")
    flipped = P.M > P.N
    Q = Params(P.N, P.M, P.k) if flipped else P

    tally: Counter[BiWord] = Counter()
    bad_images: list[BiWord] = []
    for b in iter_w(Q, 0, budget=budget):
        if any(abs(d) >= 2 * Q.k for d in prefix_diffs(b)):
            continue
        if k_factorize(b, Q.k).class_p != p:
            continue
        img = surjection_image(Q, b)
        tally[img] += 1

    target: set[BiWord] = set()
    for l in (-p, p):
        for b in iter_w(Q, l, budget=budget):
            f = k_factorize(b, Q.k)
            if not f.good or not f.seg_diffs:
                continue
            if l == p and Q.N != Q.M and f.k_segments != 2 * p:
                continue
            target.add(b)

    for img in tally:
        if img not in target:
            bad_images.append(img)
    expected = 2 ** (p - 1)
    wrong_counts = {img: c for img, c in tally.items() if c != expected}
    missed = sorted(target - set(tally))
    unflip = (lambda b: BiWord(b.v, b.u)) if flipped else (lambda b: b)
    return {
        "p": p,
        "expected_preimages": expected,
        "source_size": sum(tally.values()),
        "target_size": len(target),
        "image_size": len(tally),
        "preimage_counts": sorted(set(tally.values())),
        "outside_target": [unflip(b) for b in sorted(bad_images)],
        "wrong_counts": {unflip(b): c for b, c in sorted(wrong_counts.items())},
        "missed": [unflip(b) for b in missed],
        "ok": not bad_images and not wrong_counts and not missed,
    }
