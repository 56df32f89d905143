"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Cyc` is an exact element of Q(zeta_N) with zeta_N = e^{2*pi*i/N},
stored as rational coefficients over the power basis {1, zeta, ..., zeta^{phi(N)-1}}
after reduction modulo the N-th cyclotomic polynomial.  Equality is value
equality: operands of different orders are lifted to Q(zeta_lcm) first.

The module also provides the supporting number theory: Euler phi, cyclotomic
polynomials, exact square roots of squarefree integers via Gauss sums, minimal
polynomials over Q via Galois orbits, and high-precision numeric embedding.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

import mpmath

_ZERO = Fraction(0)
_ONE = Fraction(1)


def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n >= 1 as s**2 * f with f squarefree; return (s, f)."""
    s, f = 1, 1
    for p, e in factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _int_poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (den monic up to sign).
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert all(c == 0 for c in num), "inexact polynomial division"
    return out


@functools.lru_cache(maxsize=None)
def _power_table(order: int) -> tuple[tuple[Fraction, ...], ...]:
    """zeta^j mod Phi_order for 0 <= j <= max(order-1, 2*phi-2), as coeff tuples."""
    phi = euler_phi(order)
    cyclo = cyclotomic_polynomial(order)
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})  (Phi is monic)
    top = [Fraction(-c) for c in cyclo[:-1]]
    table: list[tuple[Fraction, ...]] = []
    for j in range(phi):
        row = [_ZERO] * phi
        row[j] = _ONE
        table.append(tuple(row))
    n_rows = max(order, 2 * phi - 1)
    for j in range(phi, n_rows):
        prev = table[j - 1]
        shifted = [_ZERO] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            shifted = [s + lead * t for s, t in zip(shifted, top)]
        table.append(tuple(shifted))
    return tuple(table)


def _reduce_poly(order: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_order (dense coeff list) to the power basis."""
    phi = euler_phi(order)
    table = _power_table(order)
    out = list(dense[:phi]) + [_ZERO] * max(0, phi - len(dense))
    for j in range(phi, len(dense)):
        c = dense[j]
        if c:
            row = table[j]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out[:phi])


class Cyc:
    """An exact element of the cyclotomic field Q(zeta_order).

    Immutable.  ``coeffs`` always has length phi(order) and is canonical, so
    two elements of the same order are equal iff their coefficient tuples are.
    Cross-order comparisons lift both operands to the lcm order first.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # value equality crosses field orders; use exact_str for keys

    def __init__(self, order: int, coeffs: tuple[Fraction, ...]):
        self.order = order
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_exponents(order: int, terms: dict[int, Fraction]) -> Cyc:
        """Sum of c_e * zeta_order^e over the given exponent map."""
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        dense = [_ZERO] * order
        for e, c in terms.items():
            dense[e % order] += Fraction(c)
        return Cyc(order, _reduce_poly(order, dense))

    @staticmethod
    def root_of_unity(order: int, exponent: int = 1) -> Cyc:
        """zeta_order^exponent, canonical."""
        return Cyc.from_exponents(order, {exponent: _ONE})

    @staticmethod
    def rational(value: Fraction | int, order: int = 1) -> Cyc:
        coeffs = [_ZERO] * euler_phi(order)
        coeffs[0] = Fraction(value)
        return Cyc(order, tuple(coeffs))

    # -- order management --------------------------------------------------

    def lift(self, new_order: int) -> Cyc:
        """Re-express in Q(zeta_new_order); new_order must be a multiple of order."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {new_order}")
        step = new_order // self.order
        return Cyc.from_exponents(
            new_order, {i * step: c for i, c in enumerate(self.coeffs) if c}
        )

    @staticmethod
    def _common(a: Cyc, b: Cyc) -> tuple[Cyc, Cyc]:
        if a.order == b.order:
            return a, b
        m = math.lcm(a.order, b.order)
        return a.lift(m), b.lift(m)

    def in_subfield(self, sub_order: int) -> bool:
        """True iff this value lies in Q(zeta_sub_order) (sub_order | order)."""
        if self.order % sub_order:
            raise ValueError(f"{sub_order} does not divide {self.order}")
        for a in range(1, self.order):
            if (a - 1) % sub_order == 0 and math.gcd(a, self.order) == 1:
                if self.galois(a) != self:
                    return False
        return True

    def to_order(self, sub_order: int) -> Cyc:
        """Rewrite over Q(zeta_sub_order); raises if the value is not in it."""
        if sub_order == self.order:
            return self
        if sub_order % self.order == 0:
            return self.lift(sub_order)
        if not self.in_subfield(sub_order):
            raise ValueError(f"value is not in Q(zeta_{sub_order})")
        phi_sub = euler_phi(sub_order)
        step = self.order // sub_order
        columns = [
            Cyc.from_exponents(self.order, {f * step: _ONE}).coeffs
            for f in range(phi_sub)
        ]
        solution = _solve_exact(columns, list(self.coeffs))
        assert solution is not None
        return Cyc(sub_order, tuple(solution))

    def minimal_order(self) -> int:
        """Smallest n dividing the order with this value in Q(zeta_n)."""
        for n in divisors(self.order):
            if self.in_subfield(n):
                return n
        return self.order

    def reduced(self) -> Cyc:
        """Rewrite over the smallest cyclotomic subfield containing the value."""
        return self.to_order(self.minimal_order())

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other: Cyc | int | Fraction) -> Cyc:
        other = _coerce(other)
        a, b = Cyc._common(self, other)
        return Cyc(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: Cyc | int | Fraction) -> Cyc:
        other = _coerce(other)
        a, b = Cyc._common(self, other)
        return Cyc(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: int | Fraction) -> Cyc:
        return _coerce(other) - self

    def __neg__(self) -> Cyc:
        return Cyc(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: Cyc | int | Fraction) -> Cyc:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Cyc(self.order, tuple(c * f for c in self.coeffs))
        a, b = Cyc._common(self, other)
        n = len(a.coeffs)
        prod = [_ZERO] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyc(a.order, _reduce_poly(a.order, prod))

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other: Cyc | int | Fraction) -> Cyc:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero")
            return Cyc(self.order, tuple(c / f for c in self.coeffs))
        return self * other.inverse()

    def __rtruediv__(self, other: int | Fraction) -> Cyc:
        return _coerce(other) / self

    def __pow__(self, n: int) -> Cyc:
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyc.rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Cyc:
        """Multiplicative inverse via extended Euclid against Phi_order."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _poly_modular_inverse(list(self.coeffs), phi_poly)
        return Cyc(self.order, _reduce_poly(self.order, inv))

    # -- predicates and views -----------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = Cyc._common(self, other)
        return a.coeffs == b.coeffs

    def galois(self, a: int) -> Cyc:
        """Image under the automorphism zeta -> zeta^a, gcd(a, order) = 1."""
        if math.gcd(a, self.order) != 1:
            raise ValueError(f"{a} is not coprime to {self.order}")
        return Cyc.from_exponents(
            self.order, {i * a: c for i, c in enumerate(self.coeffs) if c}
        )

    def conjugate(self) -> Cyc:
        """Complex conjugate (the automorphism zeta -> zeta^-1)."""
        if self.order <= 2:
            return self
        return self.galois(self.order - 1)

    def is_real(self) -> bool:
        return self.conjugate() == self

    def as_rational(self) -> Fraction | None:
        """The rational value if this element lies in Q, else None.

        In the canonical power basis an element is rational iff every
        non-constant coefficient vanishes.
        """
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def as_rational_galois(self) -> Fraction | None:
        """Rationality decided by Galois invariance (cross-check route).

        The value is rational iff it is fixed by every automorphism
        zeta -> zeta^a with gcd(a, order) = 1.
        """
        for a in range(2, self.order):
            if math.gcd(a, self.order) == 1 and self.galois(a) != self:
                return None
        # Fixed by the full Galois group => lies in Q; read off the constant.
        return self.coeffs[0]

    # -- numerics ------------------------------------------------------------

    def approx(self, bits: int = 53):
        """Numeric embedding at zeta = e^{2*pi*i/order}.

        Returns a Python complex for bits <= 53, else an mpmath.mpc computed
        at the requested binary precision.  Relative error is within a few
        ulps of the working precision.  Non-finite results raise.
        """
        if bits <= 53:
            z = self._approx_mp(64)
            out = complex(z.real, z.imag)
            if not (math.isfinite(out.real) and math.isfinite(out.imag)):
                raise ArithmeticError("non-finite numeric embedding")
            return out
        return self._approx_mp(bits)

    def _approx_mp(self, bits: int) -> mpmath.mpc:
        with mpmath.workprec(bits + 16):
            total = mpmath.mpc(0)
            n = self.order
            for e, c in enumerate(self.coeffs):
                if c:
                    w = mpmath.expjpi(mpmath.mpf(2 * e) / n)
                    total += w * mpmath.mpf(c.numerator) / c.denominator
            return +total

    # -- formatting ----------------------------------------------------------

    def exact_str(self) -> str:
        """Serialization "c0 + c1*z^1 + ...; N=order" used by the JSON emitters."""
        parts = [str(self.coeffs[0])] if self.coeffs[0] or len(self.coeffs) == 1 else []
        for e, c in enumerate(self.coeffs[1:], start=1):
            if c:
                parts.append(f"{c}*z^{e}")
        if not parts:
            parts = ["0"]
        return " + ".join(parts) + f"; N={self.order}"

    def __repr__(self) -> str:
        return f"Cyc({self.exact_str()!r})"


def _coerce(value: Cyc | int | Fraction) -> Cyc:
    if isinstance(value, Cyc):
        return value
    return Cyc.rational(Fraction(value))


# -- rational-coefficient polynomial helpers ---------------------------------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(q) - 1, -1, -1):
        if len(a) < i + len(b):
            continue
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_modular_inverse(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo the (monic, squarefree) modulus, by extended Euclid."""
    r0, r1 = modulus[:], _poly_trim(a[:])
    s0, s1 = [_ZERO], [_ONE]
    while r1:
        q, r2 = _poly_divmod(r0, r1)
        s2 = _poly_sub(s0, _poly_mul(q, s1))
        r0, r1, s0, s1 = r1, r2, s1, s2
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor (should not happen in a field)")
    scale = 1 / r0[0]
    return [c * scale for c in s0]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _poly_trim(out)


def _solve_exact(
    columns: list[tuple[Fraction, ...]], target: list[Fraction]
) -> list[Fraction] | None:
    """Solve sum_j x_j * columns[j] = target exactly; None if inconsistent."""
    n_rows = len(target)
    n_cols = len(columns)
    aug = [[columns[j][i] for j in range(n_cols)] + [target[i]] for i in range(n_rows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == n_rows:
            break
    solution = [_ZERO] * n_cols
    for r, c in pivots:
        solution[c] = aug[r][-1]
    for r in range(n_rows):
        if all(aug[r][c] == 0 for c in range(n_cols)) and aug[r][-1] != 0:
            return None
    # verify (cheap, and guards the free-variable case)
    for i in range(n_rows):
        acc = _ZERO
        for j in range(n_cols):
            acc += solution[j] * columns[j][i]
        if acc != target[i]:
            return None
    return solution


def rational_linear_dependence(values: list[Cyc]) -> list[Fraction] | None:
    """A nonzero rational vector c with sum_i c_i * values[i] = 0, or None.

    Used to decide whether real cyclotomic numbers (together with 1) admit a
    nontrivial rational relation.
    """
    order = math.lcm(*(v.order for v in values))
    lifted = [v.lift(order) for v in values]
    phi = euler_phi(order)
    rows = [list(v.coeffs) for v in lifted]
    n = len(rows)
    # Column-reduce the n x phi matrix, tracking the transformation.
    transform = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    col = 0
    for j in range(phi):
        pivot = next((r for r in range(col, n) if rows[r][j] != 0), None)
        if pivot is None:
            continue
        rows[col], rows[pivot] = rows[pivot], rows[col]
        transform[col], transform[pivot] = transform[pivot], transform[col]
        inv = 1 / rows[col][j]
        rows[col] = [v * inv for v in rows[col]]
        transform[col] = [v * inv for v in transform[col]]
        for r in range(n):
            if r != col and rows[r][j] != 0:
                f = rows[r][j]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
                transform[r] = [v - f * w for v, w in zip(transform[r], transform[col])]
        col += 1
        if col == n:
            return None
    for r in range(col, n):
        if all(v == 0 for v in rows[r]):
            return transform[r]
    return None


# -- square roots of rationals as cyclotomic numbers --------------------------


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@functools.lru_cache(maxsize=None)
def sqrt_squarefree(f: int) -> Cyc:
    """The positive square root of a squarefree integer f >= 1, exactly.

    Built from quadratic Gauss sums: sqrt(2) = zeta_8 + zeta_8^-1, and for an
    odd prime p the Gauss sum over the Legendre character equals sqrt(p) for
    p = 1 (mod 4) and i*sqrt(p) for p = 3 (mod 4).
    """
    if f < 1:
        raise ValueError(f"need a positive squarefree integer, got {f}")
    result = Cyc.rational(1)
    for p in factorize(f):
        if p == 2:
            root = Cyc.root_of_unity(8, 1) + Cyc.root_of_unity(8, -1)
        else:
            gauss = Cyc.from_exponents(
                p, {a: Fraction(_legendre(a, p)) for a in range(1, p)}
            )
            if p % 4 == 1:
                root = gauss
            else:
                root = gauss * Cyc.root_of_unity(4, -1)
        result = result * root
    return result


def sqrt_rational(value: Fraction) -> Cyc:
    """Exact sqrt of a nonnegative rational as a cyclotomic number."""
    if value < 0:
        raise ValueError("sqrt_rational needs a nonnegative value")
    if value == 0:
        return Cyc.rational(0)
    s, f = squarefree_decomposition(value.numerator * value.denominator)
    return sqrt_squarefree(f) * Fraction(s, value.denominator)


# -- cosines of rational angles ----------------------------------------------


def cos_pi_fraction(p: int, r: int) -> Cyc:
    """cos(p*pi/r) exactly, as (zeta_{2r}^p + zeta_{2r}^-p) / 2."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    z = Cyc.root_of_unity(2 * r, p) + Cyc.root_of_unity(2 * r, -p)
    return z / 2


# -- minimal polynomials -------------------------------------------------------


def minimal_polynomial(x: Cyc) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of x over Q, constant coefficient first.

    Computed as the product of (t - conjugate) over the distinct Galois
    conjugates of x; the coefficients are asserted rational.
    """
    x = x.reduced()
    n = x.order
    conjugates: list[Cyc] = []
    for a in range(1, n + 1):
        if math.gcd(a, n) == 1:
            image = x.galois(a) if n > 1 else x
            if not any(image == c for c in conjugates):
                conjugates.append(image)
    poly: list[Cyc] = [Cyc.rational(1, n)]
    for c in conjugates:
        nxt = [Cyc.rational(0, n) for _ in range(len(poly) + 1)]
        for i, coeff in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + coeff
            nxt[i] = nxt[i] - coeff * c
        poly = nxt
    rational_coeffs = []
    for coeff in poly:
        r = coeff.as_rational()
        if r is None:
            raise ArithmeticError("Galois orbit product produced an irrational coefficient")
        rational_coeffs.append(r)
    return tuple(rational_coeffs)


@functools.lru_cache(maxsize=None)
def min_poly_2cos(m: int) -> tuple[Fraction, ...]:
    """Minimal polynomial of 2*cos(2*pi/m) over Q, constant coefficient first."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    value = Cyc.root_of_unity(m) + Cyc.root_of_unity(m, -1)
    return minimal_polynomial(value)
