"""Formal square-root values over a cyclotomic coefficient field.

An F-symbol is an exact value of the form coef * sqrt(radicand) where the
radicand is a product of quantum integers.  Tracking the radicand as a
*factored word* over the quantum-integer alphabet keeps products exact and
makes cancellation between terms decidable in the common cases: square parts
fold into the coefficient, factors equal to 1 vanish, and rational factors
are absorbed exactly through Gauss-sum square roots.

Sums of such terms (as produced by pentagon/hexagon residuals) are held in a
:class:`RadicalSum`.  A sum whose per-radicand groups all cancel is exactly
zero; a sum that does not visibly cancel falls back to high-precision numeric
evaluation on the caller's side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cyclotomic import Cyc, sqrt_rational


class RadicalContext:
    """Radical bookkeeping over a fixed alphabet of positive real values.

    ``symbols`` maps an integer symbol (here: the quantum-integer index n for
    [n]_q) to its exact cyclotomic value, which must be real and positive.
    """

    def __init__(self, symbols: dict[int, Cyc]):
        self.symbols = dict(symbols)
        self._kind: dict[int, tuple[str, Cyc | None]] = {}
        for n, value in self.symbols.items():
            if not value.is_real():
                raise ValueError(f"radical symbol {n} has a non-real value")
            rat = value.as_rational()
            if rat is not None:
                if rat <= 0:
                    raise ValueError(f"radical symbol {n} is not positive: {rat}")
                if rat == 1:
                    self._kind[n] = ("one", None)
                else:
                    self._kind[n] = ("rational", sqrt_rational(rat))
            else:
                self._kind[n] = ("irrational", None)

    def term(self, coef: Cyc, exponents: dict[int, int]) -> Radical:
        """Normalize coef * sqrt(prod_n symbol(n)**exponents[n])."""
        key: list[int] = []
        for n in sorted(exponents):
            e = exponents[n]
            if e == 0:
                continue
            kind, root = self._kind[n]
            if kind == "one":
                continue
            odd = e & 1
            half = (e - odd) // 2
            if half:
                coef = coef * self.symbols[n] ** half
            if odd:
                if kind == "rational":
                    coef = coef * root
                else:
                    key.append(n)
        return Radical(coef, tuple(key))

    def radicand_value(self, key: tuple[int, ...]) -> Cyc:
        value = Cyc.rational(1)
        for n in key:
            value = value * self.symbols[n]
        return value


@dataclass(frozen=True)
class Radical:
    """An exact value coef * sqrt(prod of irrational alphabet symbols in key)."""

    coef: Cyc
    key: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.coef.is_zero()

    def mul(self, other: Radical, context: RadicalContext) -> Radical:
        coef = self.coef * other.coef
        shared = set(self.key) & set(other.key)
        for n in shared:
            coef = coef * context.symbols[n]
        key = tuple(sorted(set(self.key) ^ set(other.key)))
        return Radical(coef, key)

    def scaled(self, factor: Cyc | int | Fraction) -> Radical:
        return Radical(self.coef * factor, self.key)


class RadicalSum:
    """A finite sum of :class:`Radical` terms, grouped by radicand."""

    __slots__ = ("context", "groups")

    def __init__(self, context: RadicalContext, groups: dict[tuple[int, ...], Cyc] | None = None):
        self.context = context
        self.groups: dict[tuple[int, ...], Cyc] = {}
        if groups:
            for key, coef in groups.items():
                if not coef.is_zero():
                    self.groups[key] = coef

    @staticmethod
    def from_terms(context: RadicalContext, terms: list[Radical]) -> RadicalSum:
        out = RadicalSum(context)
        for t in terms:
            out._accumulate(t.key, t.coef)
        out._prune()
        return out

    def _accumulate(self, key: tuple[int, ...], coef: Cyc) -> None:
        if key in self.groups:
            self.groups[key] = self.groups[key] + coef
        else:
            self.groups[key] = coef

    def _prune(self) -> None:
        self.groups = {k: c for k, c in self.groups.items() if not c.is_zero()}

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: RadicalSum) -> RadicalSum:
        out = RadicalSum(self.context, dict(self.groups))
        for key, coef in other.groups.items():
            out._accumulate(key, coef)
        out._prune()
        return out

    def __sub__(self, other: RadicalSum) -> RadicalSum:
        out = RadicalSum(self.context, dict(self.groups))
        for key, coef in other.groups.items():
            out._accumulate(key, -coef)
        out._prune()
        return out

    def __neg__(self) -> RadicalSum:
        return RadicalSum(self.context, {k: -c for k, c in self.groups.items()})

    def __mul__(self, other: RadicalSum | Cyc | int | Fraction) -> RadicalSum:
        if isinstance(other, (Cyc, int, Fraction)):
            return RadicalSum(self.context, {k: c * other for k, c in self.groups.items()})
        out = RadicalSum(self.context)
        for k1, c1 in self.groups.items():
            t1 = Radical(c1, k1)
            for k2, c2 in other.groups.items():
                prod = t1.mul(Radical(c2, k2), self.context)
                out._accumulate(prod.key, prod.coef)
        out._prune()
        return out

    __rmul__ = __mul__

    def conjugate(self) -> RadicalSum:
        """Complex conjugate; radicands are real positive so only coefficients flip."""
        return RadicalSum(self.context, {k: c.conjugate() for k, c in self.groups.items()})

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        """Exact zero test (sound; terms with distinct radicands never cancel here)."""
        return not self.groups

    def is_radical_free(self) -> bool:
        return all(k == () for k in self.groups)

    def cyc_value(self) -> Cyc:
        """The value as a plain cyclotomic number; requires a radical-free sum."""
        if not self.groups:
            return Cyc.rational(0)
        if not self.is_radical_free():
            raise ArithmeticError("sum still carries radicals")
        return self.groups[()]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalSum):
            return (self - other).is_zero()
        if isinstance(other, (Cyc, int, Fraction)):
            diff = RadicalSum(self.context, dict(self.groups))
            diff._accumulate((), -(Cyc.rational(1) * other) if isinstance(other, (int, Fraction)) else -other)
            diff._prune()
            return diff.is_zero()
        return NotImplemented

    __hash__ = None

    # -- numerics -------------------------------------------------------------

    def approx(self, bits: int = 53):
        if bits <= 53:
            total = 0j
            for key, coef in self.groups.items():
                root = 1.0
                for n in key:
                    root *= math.sqrt(max(self.context.symbols[n].approx().real, 0.0))
                total += coef.approx() * root
            return total
        with mpmath.workprec(bits + 16):
            total = mpmath.mpc(0)
            for key, coef in self.groups.items():
                root = mpmath.mpf(1)
                for n in key:
                    root *= mpmath.sqrt(mpmath.re(self.context.symbols[n].approx(bits)))
                total += coef.approx(bits) * root
            return +total

    def __repr__(self) -> str:
        if not self.groups:
            return "RadicalSum(0)"
        parts = [
            f"({coef.exact_str()})*sqrt{list(key)}" if key else f"({coef.exact_str()})"
            for key, coef in sorted(self.groups.items())
        ]
        return "RadicalSum(" + " + ".join(parts) + ")"

    def exact_str(self) -> str:
        return repr(self)


def mat_mul(a: list[list[RadicalSum]], b: list[list[RadicalSum]]) -> list[list[RadicalSum]]:
    """Product of small matrices over RadicalSum."""
    n, m, p = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, p):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_trace(a: list[list[RadicalSum]]) -> RadicalSum:
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def mat_det2(a: list[list[RadicalSum]]) -> RadicalSum:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_adjugate2(a: list[list[RadicalSum]]) -> list[list[RadicalSum]]:
    """Inverse of a 2x2 matrix with determinant one."""
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


def mat_approx(a: list[list[RadicalSum]], bits: int = 53):
    import numpy as np

    return np.array([[entry.approx(bits) for entry in row] for row in a], dtype=complex)
