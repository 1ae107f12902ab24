"""Exact counting of non-intersecting walkers on the integers.

Three step models, each counted several independent ways (instant-by-instant
dynamic programming, tableau sums, a signed reflection sum, and coefficient
extraction from a determinant of truncated series):

  case 1: at each of k instants exactly one walker steps left or right;
  case 2: q instants where any subset steps right, then k instants where
          exactly one walker steps left;
  case 3: p subset-right instants then q subset-left instants, graded by the
          total number of effective moves k, with a k! weight on the count.

Configurations are strictly increasing integer tuples after every instant;
walkers may pass through negative positions even when endpoints are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .exact import ZSeries, binomial, zseries_det
from .partitions import (
    Partition,
    conjugate,
    contains,
    is_strictly_increasing,
    part,
    partition_from_walkers,
    partitions_of,
)


@dataclass(frozen=True)
class WalkModel:
    case: int
    n: int
    q: int = 0
    p: int = 0

    def __post_init__(self):
        if self.case not in (1, 2, 3):
            raise ValueError("case must be 1, 2, or 3")
        if self.n < 1:
            raise ValueError("walker count must be >= 1")
        if self.q < 0 or self.p < 0:
            raise ValueError("p and q must be >= 0")


def _single_steps(config: tuple[int, ...], deltas):
    """All configs reached by moving exactly one walker by delta."""
    out = []
    n = len(config)
    for i in range(n):
        for d in deltas:
            v = config[i] + d
            if (i > 0 and v <= config[i - 1]) or (i < n - 1 and v >= config[i + 1]):
                continue
            out.append(config[:i] + (v,) + config[i + 1 :])
    return out


def _subset_steps(config: tuple[int, ...], delta: int):
    """All (new_config, moved) where any subset moves by delta simultaneously.

    The strict-increase constraint is checked only after the instant: within
    one instant two walkers may move together even when adjacent.
    """
    n = len(config)
    out = []
    for mask in range(1 << n):
        new = tuple(config[i] + (delta if mask >> i & 1 else 0) for i in range(n))
        if is_strictly_increasing(new):
            out.append((new, bin(mask).count("1")))
    return out


def _dp_case1(x, kmax: int):
    """dist[k][y] after k single +-1 instants from x."""
    dist = {x: 1}
    history = [dist]
    for _ in range(kmax):
        new: dict = {}
        for cfg, ways in dist.items():
            for nxt in _single_steps(cfg, (-1, 1)):
                new[nxt] = new.get(nxt, 0) + ways
        dist = new
        history.append(dist)
    return history


def _dp_subset_phase(dist: dict, instants: int, delta: int, track_moves: bool):
    """Run `instants` subset-move instants; keys are configs or
    (config, moves-so-far) when track_moves is set."""
    for _ in range(instants):
        new: dict = {}
        for key, ways in dist.items():
            cfg, moves = key if track_moves else (key, 0)
            for nxt, moved in _subset_steps(cfg, delta):
                nk = (nxt, moves + moved) if track_moves else nxt
                new[nk] = new.get(nk, 0) + ways
        dist = new
    return dist


def count_walks_dp(model: WalkModel, x, y, k: int) -> int:
    """Exact walk count by dynamic programming over instants.

    Returns 0 (by convention, not an error) when x or y fails to be
    strictly increasing.  Case 3 returns k! times the history count.
    """
    x, y = tuple(x), tuple(y)
    if k < 0:
        return 0
    if not (is_strictly_increasing(x) and is_strictly_increasing(y)):
        return 0
    if len(x) != model.n or len(y) != model.n:
        raise ValueError("configuration size does not match the model")
    if model.case == 1:
        return _dp_case1(x, k)[k].get(y, 0)
    if model.case == 2:
        dist = _dp_subset_phase({x: 1}, model.q, +1, track_moves=False)
        for _ in range(k):
            new: dict = {}
            for cfg, ways in dist.items():
                for nxt in _single_steps(cfg, (-1,)):
                    new[nxt] = new.get(nxt, 0) + ways
            dist = new
        return dist.get(y, 0)
    dist = _dp_subset_phase({(x, 0): 1}, model.p, +1, track_moves=True)
    dist = _dp_subset_phase(dist, model.q, -1, track_moves=True)
    return factorial(k) * dist.get((y, k), 0)


def enumerate_case2_histories(model: WalkModel, x, y, k: int):
    """Yield case-2 histories as (right-phase subsets, left-phase movers);
    slow oracle, also asserts the effective-move bookkeeping per history."""
    assert model.case == 2
    x, y = tuple(x), tuple(y)

    def right_phase(cfg, step, subsets):
        if step == model.q:
            yield from left_phase(cfg, 0, subsets, [])
            return
        n = len(cfg)
        for mask in range(1 << n):
            new = tuple(cfg[i] + (1 if mask >> i & 1 else 0) for i in range(n))
            if is_strictly_increasing(new):
                yield from right_phase(new, step + 1, subsets + [mask])

    def left_phase(cfg, step, subsets, movers):
        if step == k:
            if cfg == y:
                moves = sum(bin(m).count("1") for m in subsets) + k
                assert moves == 2 * k + sum(b - a for a, b in zip(x, y))
                yield (tuple(subsets), tuple(movers))
            return
        for i in range(len(cfg)):
            v = cfg[i] - 1
            if i > 0 and v <= cfg[i - 1]:
                continue
            yield from left_phase(cfg[:i] + (v,) + cfg[i + 1 :], step + 1, subsets, movers + [i])

    yield from right_phase(x, 0, [])


def _endpoint_partitions(model: WalkModel, x, y):
    """Partitions (from_x, from_y) for the tableau and determinant routes;
    the start maps to the first index."""
    ax, nx = partition_from_walkers(x)
    by, ny = partition_from_walkers(y)
    if nx != model.n or ny != model.n:
        raise ValueError("configuration size does not match the model")
    return ax, by


def count_walks_tableaux(model: WalkModel, x, y, k: int) -> int:
    """Walk counts as sums over pairs of skew tableaux."""
    from .tableaux import count_semistandard_skew, count_standard_skew

    x, y = tuple(x), tuple(y)
    if k < 0:
        return 0
    if not (is_strictly_increasing(x) and is_strictly_increasing(y)):
        return 0
    n = model.n
    alpha, beta = _endpoint_partitions(model, x, y)
    if model.case == 1:
        k1 = k - sum(beta) + sum(alpha)
        k2 = k + sum(beta) - sum(alpha)
        if k1 < 0 or k2 < 0 or k1 % 2 or k2 % 2:
            return 0
        k1 //= 2
        k2 //= 2
        total = 0
        for nu in partitions_of(sum(beta) + k1, max_rows=n):
            if contains(nu, beta) and contains(nu, alpha):
                total += count_standard_skew(nu, beta) * count_standard_skew(nu, alpha)
        return factorial(k) // (factorial(k1) * factorial(k2)) * total
    if model.case == 2:
        total = 0
        for lam in partitions_of(k + sum(beta), max_rows=n):
            if contains(lam, alpha) and contains(lam, beta):
                total += count_semistandard_skew(
                    conjugate(lam), conjugate(alpha), model.q
                ) * count_standard_skew(lam, beta)
        return total
    size2 = k + sum(alpha) + sum(beta)
    if size2 % 2:
        return 0
    total = 0
    for lam in partitions_of(size2 // 2, max_rows=n):
        if contains(lam, alpha) and contains(lam, beta):
            total += count_semistandard_skew(
                conjugate(lam), conjugate(alpha), model.p
            ) * count_semistandard_skew(conjugate(lam), conjugate(beta), model.q)
    return factorial(k) * total


def count_walks_reflection(x, y, T: int) -> int:
    """Case-1 count as a signed sum of free multinomial walk counts over all
    permutations of the starting points (the reflection argument)."""
    x, y = tuple(x), tuple(y)
    if T < 0:
        return 0
    if not (is_strictly_increasing(x) and is_strictly_increasing(y)):
        return 0
    n = len(x)
    total = 0
    for sigma in permutations(range(n)):
        sign = _permutation_sign(sigma)
        disp = [y[i] - x[sigma[i]] for i in range(n)]
        total += sign * _free_walk_count(disp, T)
    return total


def _permutation_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _free_walk_count(disp, T: int) -> int:
    """Walks of T steps in Z^n with single +-e_i steps and displacements disp:
    sum over per-walker step totals s_i of T! / prod(a_i! b_i!) where
    a_i - b_i = disp_i and a_i + b_i = s_i."""
    n = len(disp)

    def rec(i, remaining):
        if i == n - 1:
            s = remaining
            d = disp[i]
            if s < abs(d) or (s - d) % 2:
                return 0
            a = (s + d) // 2
            return Fraction(1, factorial(a) * factorial(s - a))
        total = Fraction(0)
        d = disp[i]
        s = abs(d)
        while s <= remaining:
            a = (s + d) // 2
            total += Fraction(1, factorial(a) * factorial(s - a)) * rec(i + 1, remaining - s)
            s += 2
        return total

    value = rec(0, T) * factorial(T)
    assert value.denominator == 1
    return int(value)


def _series_entry(model: WalkModel, m: int, order: int) -> ZSeries:
    """Constant-term extraction of u^m against the model's weight, as a
    truncated series in z."""
    coeffs = [Fraction(0)] * (order + 1)
    if model.case == 1:
        # sum over a - b = -m of z^(a+b) / (a! b!)
        a = max(0, -m)
        while 2 * a + m <= order:
            b = a + m
            if b >= 0:
                coeffs[2 * a + m] = Fraction(1, factorial(a) * factorial(b))
            a += 1
    elif model.case == 2:
        for i in range(max(0, -m), model.q + 1):
            d = i + m
            if 0 <= d <= order:
                coeffs[d] = Fraction(binomial(model.q, i), factorial(d))
    else:
        for i in range(0, model.p + 1):
            d = 2 * i + m
            if 0 <= d <= order:
                coeffs[d] = Fraction(binomial(model.p, i) * binomial(model.q, i + m))
    return ZSeries(order, coeffs)


def generating_series(model: WalkModel, x, y, order: int) -> ZSeries:
    """The n x n determinant generating function of the counts from x to y.

    Coefficient relation: k! * [z^k] equals the walk count for cases 1 and 2,
    and the history count (i.e. the k!-weighted count divided by k!) for
    case 3.
    """
    x, y = tuple(x), tuple(y)
    alpha, beta = _endpoint_partitions(model, x, y)
    n = model.n
    rows = [
        [
            _series_entry(model, part(alpha, ell) - ell - part(beta, kk) + kk, order)
            for kk in range(1, n + 1)
        ]
        for ell in range(1, n + 1)
    ]
    return zseries_det(rows)


def count_walks_series(model: WalkModel, x, y, k: int) -> int:
    """Walk count read off the determinant series: k! times the z^k
    coefficient, in every case."""
    if k < 0:
        return 0
    if not (is_strictly_increasing(tuple(x)) and is_strictly_increasing(tuple(y))):
        return 0
    value = generating_series(model, x, y, k).coeff(k) * factorial(k)
    assert value.denominator == 1
    return int(value)


def transition_probability(x, y, k: int, n: int) -> Fraction:
    """Case-1 transition probability: count / (2n)^k."""
    b = count_walks_dp(WalkModel(case=1, n=n), x, y, k)
    return Fraction(b, (2 * n) ** k)
