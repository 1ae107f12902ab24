"""Exact arithmetic: sparse polynomials in t_1, t_2, ... and truncated z-series.

All coefficients are `fractions.Fraction`; integer counts are plain Python
ints.  Monomial keys are exponent tuples without trailing zeros, so the
variable t_i carries weight i and a monomial's weighted degree is
sum(i * exponent of t_i).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _trim(exps) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class TPolynomial:
    """Sparse exact polynomial in the variables t_1, t_2, ..."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exps, coeff in dict(terms).items():
                coeff = Fraction(coeff)
                if coeff:
                    data[_trim(exps)] = coeff
        self.terms = data

    # constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, i: int):
        """The variable t_i (i >= 1)."""
        if i < 1:
            raise ValueError("variable index must be >= 1")
        exps = [0] * i
        exps[i - 1] = 1
        return cls({tuple(exps): Fraction(1)})

    # ring operations

    def __add__(self, other):
        if not isinstance(other, TPolynomial):
            other = TPolynomial.constant(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, Fraction(0)) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = TPolynomial.__new__(TPolynomial)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = TPolynomial.__new__(TPolynomial)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, TPolynomial):
            other = TPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TPolynomial):
            c = Fraction(other)
            if not c:
                return TPolynomial.zero()
            out = TPolynomial.__new__(TPolynomial)
            out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                la, lb = len(ea), len(eb)
                exps = tuple(
                    (ea[i] if i < la else 0) + (eb[i] if i < lb else 0)
                    for i in range(max(la, lb))
                )
                new = terms.get(exps, Fraction(0)) + ca * cb
                if new:
                    terms[exps] = new
                else:
                    del terms[exps]
        out = TPolynomial.__new__(TPolynomial)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = TPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, TPolynomial):
            return self.terms == other.terms
        return self.terms == TPolynomial.constant(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"t{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            c = self.terms[exps]
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    # calculus and structure

    def diff(self, i: int):
        """Partial derivative with respect to t_i."""
        terms = {}
        for exps, coeff in self.terms.items():
            if len(exps) < i or exps[i - 1] == 0:
                continue
            e = exps[i - 1]
            new = list(exps)
            new[i - 1] -= 1
            terms[_trim(new)] = coeff * e
        out = TPolynomial.__new__(TPolynomial)
        out.terms = terms
        return out

    def mul_var(self, i: int, power: int = 1):
        """Multiply by t_i ** power."""
        terms = {}
        for exps, coeff in self.terms.items():
            new = list(exps) + [0] * (i - len(exps))
            new[i - 1] += power
            terms[tuple(new)] = coeff
        out = TPolynomial.__new__(TPolynomial)
        out.terms = terms
        return out

    def max_var(self) -> int:
        """Largest variable index appearing (0 for constants)."""
        return max((len(e) for e in self.terms), default=0)

    def weighted_degree(self) -> int:
        """Max over monomials of sum i * exp_i (0 for the zero polynomial)."""
        return max(
            (sum((i + 1) * e for i, e in enumerate(exps)) for exps in self.terms),
            default=0,
        )

    def homogeneous_components(self) -> dict[int, "TPolynomial"]:
        """Split into weighted-homogeneous pieces, keyed by degree."""
        pieces: dict[int, dict] = {}
        for exps, coeff in self.terms.items():
            d = sum((i + 1) * e for i, e in enumerate(exps))
            pieces.setdefault(d, {})[exps] = coeff
        out = {}
        for d, terms in pieces.items():
            p = TPolynomial.__new__(TPolynomial)
            p.terms = terms
            out[d] = p
        return out

    def evaluate(self, value_of_var) -> Fraction:
        """Evaluate at t_i = value_of_var(i), exactly."""
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            prod = coeff
            for i, e in enumerate(exps):
                if e:
                    prod *= Fraction(value_of_var(i + 1)) ** e
            total += prod
        return total


def tpoly_apply_diffop(f: TPolynomial, op_terms) -> TPolynomial:
    """Apply a formal sum of (coefficient, t-monomial, derivative-monomial).

    Each term acts as coeff * t^a * (d/dt)^b, derivatives first.  Monomials
    are exponent tuples in the same trailing-zero-free convention.
    """
    total = TPolynomial.zero()
    for coeff, tmon, dmon in op_terms:
        g = f
        for i, e in enumerate(dmon):
            for _ in range(e):
                g = g.diff(i + 1)
                if not g:
                    break
        if not g:
            continue
        for i, e in enumerate(tmon):
            if e:
                g = g.mul_var(i + 1, e)
        total = total + g * Fraction(coeff)
    return total


class ZSeries:
    """Truncated power series in z with exact coefficients, modulo z^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        cs = [Fraction(0)] * (order + 1)
        if coeffs is not None:
            for k, c in enumerate(coeffs):
                if k > order:
                    break
                cs[k] = Fraction(c)
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int):
        return cls(order)

    @classmethod
    def one(cls, order: int):
        return cls(order, [1])

    def coeff(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mixed truncation orders")

    def __add__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries(self.order, [other])
        self._check(other)
        return ZSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ZSeries(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries(self.order, [other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            c = Fraction(other)
            return ZSeries(self.order, [a * c for a in self.coeffs])
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return ZSeries(self.order, out)

    __rmul__ = __mul__

    def shift(self) -> "ZSeries":
        """Multiply by z (the top coefficient falls off the truncation)."""
        return ZSeries(self.order, [Fraction(0)] + self.coeffs[:-1])

    def truncate(self, order: int) -> "ZSeries":
        return ZSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ZSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return "ZSeries[" + ", ".join(str(c) for c in self.coeffs) + "]"


def zseries_det(matrix) -> ZSeries:
    """Determinant of a square matrix of ZSeries, exact modulo z^(order+1).

    Expansion by minors along columns, memoized over row subsets; the empty
    matrix has determinant 1.  Elimination-style pivoting is avoided because
    the truncated series ring has zero divisors.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return ZSeries.one(0)
    order = rows[0][0].order
    for r in rows:
        for entry in r:
            if entry.order != order:
                raise ValueError("mixed truncation orders in matrix")

    cache: dict[tuple[int, ...], ZSeries] = {}

    def minor(row_idx: tuple[int, ...]) -> ZSeries:
        # determinant of rows row_idx on the first len(row_idx) columns
        if not row_idx:
            return ZSeries.one(order)
        got = cache.get(row_idx)
        if got is not None:
            return got
        col = len(row_idx) - 1
        total = ZSeries.zero(order)
        for pos, r in enumerate(row_idx):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            rest = row_idx[:pos] + row_idx[pos + 1 :]
            sub = minor(rest)
            term = entry * sub
            if (len(row_idx) - 1 - pos) % 2:
                term = -term
            total = total + term
        cache[row_idx] = total
        return total

    return minor(tuple(range(n)))


def binomial(n: int, k: int) -> int:
    """math.comb extended by the zero-outside-range convention."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)
