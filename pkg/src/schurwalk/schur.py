"""Schur polynomials as explicit polynomials in the t-variables.

This is the ground-truth layer: everything here works directly on
`TPolynomial`, so the partition-level operator rules elsewhere can be
checked against honest polynomial computations.  The coordinates are
fixed by the generating function e^(sum t_i z^i) = sum s_k(t) z^k, so
t_k = p_k / k in terms of power sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import TPolynomial
from .partitions import Partition, contains, partitions_of, removable_border_strips

# Above this weighted degree the Jacobi-Trudi determinant gets slow and the
# character expansion takes over; both routes are exact and tested equal.
_JT_DEGREE_LIMIT = 12


@lru_cache(maxsize=None)
def elementary_schur(k: int) -> TPolynomial:
    """s_k(t) with s_k = 0 for k < 0 and s_0 = 1.

    Uses k*s_k = sum_{i=1..k} i*t_i*s_{k-i}, obtained by differentiating the
    generating function in z.
    """
    if k < 0:
        return TPolynomial.zero()
    if k == 0:
        return TPolynomial.constant(1)
    acc = TPolynomial.zero()
    for i in range(1, k + 1):
        acc = acc + elementary_schur(k - i).mul_var(i) * i
    return acc * Fraction(1, k)


def _jacobi_trudi(entries) -> TPolynomial:
    """Determinant of a square matrix of TPolynomials by minor expansion."""
    n = len(entries)
    if n == 0:
        return TPolynomial.constant(1)
    cache: dict[tuple[int, ...], TPolynomial] = {}

    def minor(row_idx: tuple[int, ...]) -> TPolynomial:
        if not row_idx:
            return TPolynomial.constant(1)
        got = cache.get(row_idx)
        if got is not None:
            return got
        col = len(row_idx) - 1
        total = TPolynomial.zero()
        for pos, r in enumerate(row_idx):
            entry = entries[r][col]
            if not entry:
                continue
            term = entry * minor(row_idx[:pos] + row_idx[pos + 1 :])
            if (len(row_idx) - 1 - pos) % 2:
                term = -term
            total = total + term
        cache[row_idx] = total
        return total

    return minor(tuple(range(n)))


@lru_cache(maxsize=None)
def schur_polynomial(lam: Partition) -> TPolynomial:
    """s_lam(t) via the det(s_{lam_i - i + j}) identity; s_empty = 1."""
    return skew_schur_polynomial(lam, ())


@lru_cache(maxsize=None)
def skew_schur_polynomial(outer: Partition, inner: Partition) -> TPolynomial:
    """s_{outer\\inner}(t); equals 0 when inner is not contained in outer."""
    ell = len(outer)
    if len(inner) > ell or any(inner[i] > outer[i] for i in range(len(inner))):
        return TPolynomial.zero()
    if sum(outer) - sum(inner) > _JT_DEGREE_LIMIT:
        return _skew_schur_by_characters(outer, inner)
    inner = tuple(inner) + (0,) * (ell - len(inner))
    rows = [
        [elementary_schur(outer[i] - inner[j] - (i + 1) + (j + 1)) for j in range(ell)]
        for i in range(ell)
    ]
    return _jacobi_trudi(rows)


@lru_cache(maxsize=None)
def _strip_character(outer: Partition, inner: Partition, alpha: Partition) -> int:
    """Signed border-strip tableau count of shape outer\\inner, type alpha.

    Peels the largest part first; characters are class functions, so any
    processing order gives the same value.
    """
    if not alpha:
        return 1 if outer == inner else 0
    head, rest = alpha[0], alpha[1:]
    total = 0
    for nu, height in removable_border_strips(outer, head):
        if contains(nu, inner):
            total += (-1) ** height * _strip_character(nu, inner, rest)
    return total


def _skew_schur_by_characters(outer: Partition, inner: Partition) -> TPolynomial:
    """s_{outer\\inner} = sum over types alpha of chi(alpha)/prod(mult_i!) t^alpha."""
    degree = sum(outer) - sum(inner)
    terms = {}
    for alpha in partitions_of(degree):
        chi = _strip_character(outer, inner, alpha)
        if not chi:
            continue
        mults = [0] * alpha[0]
        for a in alpha:
            mults[a - 1] += 1
        denom = 1
        for m in mults:
            denom *= factorial(m)
        terms[tuple(mults)] = Fraction(chi, denom)
    return TPolynomial(terms)


def power_sum(n: int) -> TPolynomial:
    """p_n = n * t_n."""
    return TPolynomial.var(n) * n


def inner_product(f: TPolynomial, g: TPolynomial) -> Fraction:
    """<f, g> = f(d~) g |_{t=0} with d~ = (d/dt_1, (1/2) d/dt_2, ...).

    On monomials this reduces to <t^a, t^b> = delta_ab * prod a_i! / i^a_i.
    """
    total = Fraction(0)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for exps, ca in small.items():
        cb = large.get(exps)
        if cb is None:
            continue
        weight = Fraction(1)
        for i, e in enumerate(exps):
            if e:
                weight *= Fraction(factorial(e), (i + 1) ** e)
        total += ca * cb * weight
    return total


def virasoro_operator_terms(k: int, max_derivative_var: int):
    """The finitely many terms of V_k that act on polynomials in t_1..t_N.

    V_k = (1/2) sum_{i+j=k} d2/dt_i dt_j + sum_{j-i=k} i t_i d/dt_j
          + (1/2) sum_{i+j=-k} (i t_i)(j t_j),
    all indices >= 1.  Derivative indices are capped by N, which bounds the
    middle sum; the outer sums are finite on their own.
    """
    half = Fraction(1, 2)
    terms = []

    def mono(*pairs):
        if not pairs:
            return ()
        size = max(i for i, _ in pairs)
        exps = [0] * size
        for i, e in pairs:
            exps[i - 1] += e
        return tuple(exps)

    if k >= 2:
        for i in range(1, k):
            j = k - i
            terms.append((half, (), mono((i, 1), (j, 1)) if i != j else mono((i, 2))))
    for i in range(1, max_derivative_var + 1):
        j = i + k
        if 1 <= j <= max_derivative_var:
            terms.append((Fraction(i), mono((i, 1)), mono((j, 1))))
    if k <= -2:
        for i in range(1, -k):
            j = -k - i
            terms.append(
                (half * i * j, mono((i, 1), (j, 1)) if i != j else mono((i, 2)), ())
            )
    return terms


def apply_virasoro_direct(k: int, f: TPolynomial) -> TPolynomial:
    """Apply V_k to a polynomial, exactly, straight from the definition."""
    if not f:
        return TPolynomial.zero()
    n = f.max_var()
    # multiplication by t_{i} with j = i + k <= N requires i <= N - k; when
    # k < 0 the t-index can exceed the current support, so widen the cap.
    cap = max(n, n - k)
    out = TPolynomial.zero()
    for coeff, tmon, dmon in virasoro_operator_terms(k, cap):
        g = f
        for idx, e in enumerate(dmon):
            for _ in range(e):
                g = g.diff(idx + 1)
                if not g:
                    break
        if not g:
            continue
        for idx, e in enumerate(tmon):
            if e:
                g = g.mul_var(idx + 1, e)
        out = out + g * coeff
    return out


def expand_in_schur_basis(f: TPolynomial) -> dict[Partition, Fraction]:
    """Coefficients c_lam = <f, s_lam>, using orthonormality of the s_lam.

    Valid for any finite sum of weighted-homogeneous pieces; the expansion
    is exact and reconstructs f.
    """
    out: dict[Partition, Fraction] = {}
    for degree, piece in f.homogeneous_components().items():
        for lam in partitions_of(degree):
            c = inner_product(piece, schur_polynomial(lam))
            if c:
                out[lam] = c
    return out


def expansion_polynomial(expansion) -> TPolynomial:
    """Rebuild sum c_lam s_lam(t) as a polynomial."""
    total = TPolynomial.zero()
    for lam, c in expansion.items():
        total = total + schur_polynomial(tuple(lam)) * Fraction(c)
    return total
