"""Density certificates for the double-braiding gate set on the one-qubit space.

The certificate rests on two double-braid words: with the determinant-one
generators, U = rho~(s1^2 s2^4) and V = rho~(s1^2 s2^6), plus their
commutator.  Both are computed exactly as 2x2 matrices over the cyclotomic
field adjoined a single radical.  Their traces are radical-free, so each
trace is an exact cyclotomic number, and the question "is the rotation angle
a rational multiple of pi?" is decided exactly: the half-trace is a cosine of
a rational angle iff its minimal polynomial matches the minimal polynomial of
2cos(2*pi/m) for an admissible m (plus the classical rational cases 0, +-1/2,
+-1).  Two non-commuting infinite-order special unitaries generate a dense
subgroup of SU(2), which yields the verdict.

The module also decides exact rationality of rational-coefficient sums of
cosines of rational angles, and matches small instances against the
classical list of minimal vanishing combinations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braids import qubit_rep_exact
from .cyclotomic import (
    Cyc,
    cos_pi_fraction,
    euler_phi,
    min_poly_2cos,
    minimal_polynomial,
    rational_linear_dependence,
)
from .errors import DomainError, IntegrityError
from .model import get_model
from .radicals import RadicalSum, mat_adjugate2, mat_approx, mat_det2, mat_mul, mat_trace


# -- witness matrices -------------------------------------------------------------


@dataclass(frozen=True)
class WitnessPair:
    """The two double-braid words probed by the certificate, exactly."""

    k: int
    a: list[list[RadicalSum]]  # rho~(s1^2 s2^4)
    b: list[list[RadicalSum]]  # rho~(s1^2 s2^6)
    w: list[list[RadicalSum]]  # commutator a b a^-1 b^-1

    def traces(self) -> tuple[Cyc, Cyc, Cyc]:
        """Exact traces; asserted radical-free and real."""
        out = []
        for name, mat in (("A", self.a), ("B", self.b), ("W", self.w)):
            tr = mat_trace(mat)
            if not tr.is_radical_free():
                raise IntegrityError(f"trace of {name} is not radical-free at k={self.k}")
            value = tr.cyc_value()
            if not value.is_real():
                raise IntegrityError(f"trace of {name} is not real at k={self.k}")
            out.append(value)
        return tuple(out)

    def numeric(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return mat_approx(self.a), mat_approx(self.b), mat_approx(self.w)


def witnesses(k: int) -> WitnessPair:
    """Build the witness matrices exactly; determinant-one is verified."""
    if k < 2:
        raise DomainError(f"witness matrices need level k >= 2, got {k}")
    r_tilde, f = qubit_rep_exact(k)
    r2 = mat_mul(r_tilde, r_tilde)
    r4 = mat_mul(r2, r2)
    r6 = mat_mul(r4, r2)
    a = mat_mul(mat_mul(r2, f), mat_mul(r4, f))
    b = mat_mul(mat_mul(r2, f), mat_mul(r6, f))
    for name, mat in (("A", a), ("B", b)):
        if not mat_det2(mat) == 1:
            raise IntegrityError(f"det({name}) != 1 at k={k}")
    w = mat_mul(mat_mul(a, b), mat_mul(mat_adjugate2(a), mat_adjugate2(b)))
    return WitnessPair(k, a, b, w)


# -- trace identities ---------------------------------------------------------------


@dataclass(frozen=True)
class TraceIdentity:
    """An exact linear identity between cos(2*pi*m/(k+2)) terms and the half-trace.

    sum_m coeff[m] * cos(2*pi*m/(k+2)) + theta_coeff * (trace/2) = rhs
    """

    k: int
    which: str
    cos_coeffs: tuple[tuple[int, Fraction], ...]
    theta_coeff: Fraction
    rhs: Fraction

    def residual(self, trace: Cyc) -> Cyc:
        total = Cyc.rational(-self.rhs)
        for m, coeff in self.cos_coeffs:
            total = total + cos_pi_fraction(2 * m, self.k + 2) * coeff
        return total + trace * Fraction(self.theta_coeff, 2)

    def text(self) -> str:
        def signed(x: Fraction) -> str:
            return f"+{x}" if x >= 0 else str(x)

        parts = [f"{signed(c)}*cos(2pi*{m}/{self.k + 2})" for m, c in self.cos_coeffs]
        parts.append(f"{signed(self.theta_coeff)}*cos(theta)")
        return " ".join(parts) + f" = {self.rhs}"


_IDENTITY_TABLE = {
    "A": (((1, Fraction(-1)), (2, Fraction(1))), Fraction(1), Fraction(-1)),
    "B": (((1, Fraction(2)), (2, Fraction(-1)), (3, Fraction(1))), Fraction(-1), Fraction(1)),
    "W": (((1, Fraction(3)), (2, Fraction(-3)), (3, Fraction(1))), Fraction(1), Fraction(2)),
}


def trace_cosine_identity(which: str, k: int, trace: Cyc) -> TraceIdentity:
    """The identity for matrix `which` in {A, B, W}, verified exactly.

    Raises IntegrityError if the trace does not satisfy it (that would mean
    the matrix construction and the recoupling data disagree).
    """
    if which not in _IDENTITY_TABLE:
        raise DomainError(f"no trace identity named {which!r}")
    cos_coeffs, theta_coeff, rhs = _IDENTITY_TABLE[which]
    identity = TraceIdentity(k, which, cos_coeffs, theta_coeff, rhs)
    if not identity.residual(trace).is_zero():
        raise IntegrityError(f"trace identity for {which} fails exactly at k={k}")
    return identity


# -- projective order decision ----------------------------------------------------------


@dataclass(frozen=True)
class OrderDecision:
    """Exact finite/infinite decision for a special-unitary's projective order."""

    finite: bool
    projective_order: int | None = None
    eigenvalue_order: int | None = None
    angle_numerator: int | None = None  # theta = 2*pi*j/m with j = numerator
    candidate_bound: int | None = None  # phi(m) bound exhausted when infinite

    def describe(self) -> str:
        if self.finite:
            return (
                f"finite projective order {self.projective_order} "
                f"(eigenvalue angle 2pi*{self.angle_numerator}/{self.eigenvalue_order})"
            )
        return f"infinite (no root of unity with phi(m) <= {self.candidate_bound} matches)"


_RATIONAL_COS_ORDERS = {
    Fraction(2): (1, 0),  # eigenvalue 1
    Fraction(-2): (2, 1),  # eigenvalue -1
    Fraction(0): (4, 1),
    Fraction(1): (6, 1),
    Fraction(-1): (3, 1),
}


def decide_projective_order_from_trace(trace: Cyc, k: int, max_phi: int | None = None) -> OrderDecision:
    """Decide whether e^{i*theta} with 2cos(theta) = trace is a root of unity.

    Exact procedure: a real algebraic number t equals 2cos(2*pi*j/m) with
    gcd(j, m) = 1 iff its minimal polynomial over Q equals that of
    2cos(2*pi/m); for rational t the classical rational-cosine values are the
    only candidates.  The field-degree bound phi(m) = 2*deg(t) restricts m to
    finitely many candidates, all within phi(m) <= 2*phi(4(k+2)).
    """
    bound = max_phi if max_phi is not None else 2 * euler_phi(4 * (k + 2))
    rational = trace.as_rational()
    if rational is not None:
        hit = _RATIONAL_COS_ORDERS.get(rational)
        if hit is None:
            return OrderDecision(False, candidate_bound=bound)
        m, j = hit
        return OrderDecision(
            True,
            projective_order=m if m % 2 else m // 2,
            eigenvalue_order=m,
            angle_numerator=j,
        )
    poly = minimal_polynomial(trace)
    degree = len(poly) - 1
    target_phi = 2 * degree
    if target_phi > bound:
        return OrderDecision(False, candidate_bound=bound)
    # phi(m) >= sqrt(m/2) gives m <= 2*phi(m)^2.
    matches = []
    for m in range(3, 2 * target_phi * target_phi + 1):
        if euler_phi(m) == target_phi and min_poly_2cos(m) == poly:
            matches.append(m)
    if not matches:
        return OrderDecision(False, candidate_bound=bound)
    if len(matches) > 1:
        raise IntegrityError(f"minimal polynomial matched several angle orders: {matches}")
    m = matches[0]
    value = trace.approx(128).real
    j = next(
        (
            j
            for j in range(1, m // 2 + 1)
            if math.gcd(j, m) == 1 and abs(2 * math.cos(2 * math.pi * j / m) - float(value)) < 1e-9
        ),
        None,
    )
    if j is None:
        raise IntegrityError(f"matched order {m} but no conjugate angle agrees numerically")
    return OrderDecision(
        True,
        projective_order=m if m % 2 else m // 2,
        eigenvalue_order=m,
        angle_numerator=j,
    )


def decide_projective_order(matrix: list[list[RadicalSum]], k: int, max_phi: int | None = None) -> OrderDecision:
    """Order decision for an exact special-unitary 2x2 witness matrix."""
    if mat_det2(matrix) != 1:
        raise DomainError("order decision needs a determinant-one matrix")
    tr = mat_trace(matrix)
    if not tr.is_radical_free():
        raise IntegrityError("witness trace carries a radical; cannot decide exactly")
    return decide_projective_order_from_trace(tr.cyc_value(), k, max_phi)


def projective_order_heuristic(matrix: np.ndarray, max_power: int = 10_000, tol: float = 1e-9) -> int | None:
    """Smallest n <= max_power with matrix^n within tol of a phase times identity."""
    dim = matrix.shape[0]
    power = matrix.copy()
    for n in range(1, max_power + 1):
        phase = np.trace(power) / dim
        if abs(abs(phase) - 1) < tol and np.max(np.abs(power - phase * np.eye(dim))) < tol:
            return n
        power = power @ matrix
    return None


# -- rational sums of cosines -------------------------------------------------------------


def rational_cosine_sum(terms: list[tuple[Fraction, int, int]]) -> Fraction | None:
    """Exact rational value of sum coeff * cos(p*pi/r), or None if irrational."""
    total = Cyc.rational(0)
    for coeff, p, r in terms:
        total = total + cos_pi_fraction(p, r) * Fraction(coeff)
    return total.as_rational()


#: The classical minimal vanishing rational combinations of at most four
#: cosines of rational angles in (0, pi/2): singleton, one parametric family,
#: and eight sporadic identities.  Some printings of the list carry a typo in
#: the singleton's value; cos(pi/3) = 1/2 is used here.
KNOWN_COSINE_IDENTITIES: list[tuple[str, list[tuple[Fraction, int, int]], Fraction]] = [
    ("cos(pi/3) = 1/2", [(Fraction(1), 1, 3)], Fraction(1, 2)),
    (
        "cos(pi/5) - cos(2pi/5) = 1/2",
        [(Fraction(1), 1, 5), (Fraction(-1), 2, 5)],
        Fraction(1, 2),
    ),
    (
        "cos(pi/7) - cos(2pi/7) + cos(3pi/7) = 1/2",
        [(Fraction(1), 1, 7), (Fraction(-1), 2, 7), (Fraction(1), 3, 7)],
        Fraction(1, 2),
    ),
    (
        "cos(pi/5) - cos(pi/15) + cos(4pi/15) = 1/2",
        [(Fraction(1), 1, 5), (Fraction(-1), 1, 15), (Fraction(1), 4, 15)],
        Fraction(1, 2),
    ),
    (
        "-cos(2pi/5) + cos(2pi/15) - cos(7pi/15) = 1/2",
        [(Fraction(-1), 2, 5), (Fraction(1), 2, 15), (Fraction(-1), 7, 15)],
        Fraction(1, 2),
    ),
    (
        "cos(pi/7) + cos(3pi/7) - cos(pi/21) + cos(8pi/21) = 1/2",
        [(Fraction(1), 1, 7), (Fraction(1), 3, 7), (Fraction(-1), 1, 21), (Fraction(1), 8, 21)],
        Fraction(1, 2),
    ),
    (
        "cos(pi/7) - cos(2pi/7) + cos(2pi/21) - cos(5pi/21) = 1/2",
        [(Fraction(1), 1, 7), (Fraction(-1), 2, 7), (Fraction(1), 2, 21), (Fraction(-1), 5, 21)],
        Fraction(1, 2),
    ),
    (
        "-cos(2pi/7) + cos(3pi/7) + cos(4pi/21) + cos(10pi/21) = 1/2",
        [(Fraction(-1), 2, 7), (Fraction(1), 3, 7), (Fraction(1), 4, 21), (Fraction(1), 10, 21)],
        Fraction(1, 2),
    ),
    (
        "-cos(pi/15) + cos(2pi/15) + cos(4pi/15) - cos(7pi/15) = 1/2",
        [(Fraction(-1), 1, 15), (Fraction(1), 2, 15), (Fraction(1), 4, 15), (Fraction(-1), 7, 15)],
        Fraction(1, 2),
    ),
]


def _normalized_terms(terms: list[tuple[Fraction, int, int]]) -> list[tuple[Fraction, Fraction]]:
    """Collapse to (coeff, angle as fraction of pi), merged and sorted by angle."""
    merged: dict[Fraction, Fraction] = {}
    for coeff, p, r in terms:
        angle = Fraction(p, r)
        merged[angle] = merged.get(angle, Fraction(0)) + Fraction(coeff)
    return sorted(((c, a) for a, c in merged.items() if c), key=lambda t: t[1])


def match_known_identity(terms: list[tuple[Fraction, int, int]]) -> str | None:
    """Which classical list identity a rational instance matches, if any.

    Instances must have at most four distinct angles, all strictly inside
    (0, pi/2).  Matching is up to a common rational scale.  Returns the
    identity's display string, "phi-family" for the parametric relation
    -cos(phi) + cos(pi/3 - phi) + cos(pi/3 + phi) = 0, or None ("outside
    list", which for a minimal rational instance signals an inconsistency).
    """
    normalized = _normalized_terms(terms)
    if len(normalized) > 4:
        raise DomainError("list matching applies to at most four distinct angles")
    for _, angle in normalized:
        if not Fraction(0) < angle < Fraction(1, 2):
            raise DomainError(f"angle {angle}*pi is outside (0, pi/2)")
    value = rational_cosine_sum(terms)
    if value is None:
        return None
    for name, ref_terms, ref_value in KNOWN_COSINE_IDENTITIES:
        ref = _normalized_terms(ref_terms)
        if [a for _, a in ref] != [a for _, a in normalized]:
            continue
        scale = normalized[0][0] / ref[0][0]
        if all(c == scale * rc for (c, _), (rc, _) in zip(normalized, ref)) and value == scale * ref_value:
            return name
    # parametric family: -cos(phi) + cos(pi/3 - phi) + cos(pi/3 + phi) = 0
    if len(normalized) == 3 and value == 0:
        (c1, a1), (c2, a2), (c3, a3) = normalized  # angles ascending
        third = Fraction(1, 3)
        # sorted angles of the family are (phi, 1/3 - phi, 1/3 + phi), 0 < phi < 1/6
        if a1 < Fraction(1, 6) and a2 == third - a1 and a3 == third + a1:
            if c1 == -c2 and c2 == c3:
                return "phi-family"
    return None


# -- rationality survey -----------------------------------------------------------------


@dataclass(frozen=True)
class RationalitySurvey:
    """Exact rationality data for the certificate's cosine ingredients at one level."""

    k: int
    cos_first: Fraction | None  # cos(2pi/(k+2))
    cos_second: Fraction | None  # cos(4pi/(k+2))
    pair_relation: tuple[Fraction, Fraction, Fraction] | None  # (c1, c2, rhs): c1*u + c2*v = rhs
    cos_theta: Fraction | None  # half-trace of the first witness


def rationality_survey(k: int) -> RationalitySurvey:
    if k < 2:
        raise DomainError(f"survey needs k >= 2, got {k}")
    u = cos_pi_fraction(2, k + 2)
    v = cos_pi_fraction(4, k + 2)
    cos_first = u.as_rational()
    cos_second = v.as_rational()
    pair_relation = None
    if cos_first is None and cos_second is None:
        dep = rational_linear_dependence([Cyc.rational(1), u, v])
        if dep is not None and (dep[1] != 0 or dep[2] != 0):
            # dep[0]*1 + dep[1]*u + dep[2]*v = 0
            pair_relation = (dep[1], dep[2], -dep[0])
    trace_a = witnesses(k).traces()[0]
    cos_theta = (trace_a / 2).as_rational()
    return RationalitySurvey(k, cos_first, cos_second, pair_relation, cos_theta)


# -- the certificate ------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Per-level universality verdict for the double-braiding gate set."""

    k: int
    trace_a: Cyc
    trace_b: Cyc
    trace_w: Cyc
    order_a: OrderDecision
    order_b: OrderDecision
    commutator_nontrivial: bool
    verdict: str  # "dense" or "not-certified"
    reason: str | None

    def json_payload(self) -> dict:
        def trace_json(tr: Cyc) -> dict:
            z = tr.approx()
            return {"exact": tr.exact_str(), "float": [z.real, z.imag]}

        def order_json(dec: OrderDecision) -> dict:
            if dec.finite:
                return {
                    "finite": True,
                    "projective_order": dec.projective_order,
                    "eigenvalue_order": dec.eigenvalue_order,
                    "angle": f"2*pi*{dec.angle_numerator}/{dec.eigenvalue_order}",
                }
            return {"finite": False, "candidate_phi_bound": dec.candidate_bound}

        return {
            "schema": "su2k/certificate-v1",
            "k": self.k,
            "trA": trace_json(self.trace_a),
            "trB": trace_json(self.trace_b),
            "trW": trace_json(self.trace_w),
            "orderA": order_json(self.order_a),
            "orderB": order_json(self.order_b),
            "commutator_nontrivial": self.commutator_nontrivial,
            "verdict": self.verdict,
            "reason": self.reason,
        }

    def csv_row(self) -> list:
        return [
            self.k,
            (self.trace_a.approx().real / 2),
            (self.trace_b.approx().real / 2),
            self.order_a.projective_order if self.order_a.finite else "inf",
            self.order_b.projective_order if self.order_b.finite else "inf",
            self.trace_w.approx().real,
            self.verdict,
        ]


def certificate(k: int, max_phi: int | None = None) -> Certificate:
    """Decide the density certificate at level k (k >= 2).

    The verdict is "dense" iff both witness matrices have infinite projective
    order and their commutator differs from the identity (exact trace test).
    """
    pair = witnesses(k)
    trace_a, trace_b, trace_w = pair.traces()
    for which, tr in (("A", trace_a), ("B", trace_b), ("W", trace_w)):
        trace_cosine_identity(which, k, tr)
    order_a = decide_projective_order_from_trace(trace_a, k, max_phi)
    order_b = decide_projective_order_from_trace(trace_b, k, max_phi)
    commutator_nontrivial = trace_w != 2
    reasons = []
    if order_a.finite:
        reasons.append(f"A finite projective order {order_a.projective_order}")
    if order_b.finite:
        reasons.append(f"B finite projective order {order_b.projective_order}")
    if not commutator_nontrivial:
        reasons.append("commutator trivial (trace exactly 2)")
    if reasons:
        return Certificate(
            k, trace_a, trace_b, trace_w, order_a, order_b, commutator_nontrivial,
            "not-certified", "; ".join(reasons),
        )
    return Certificate(
        k, trace_a, trace_b, trace_w, order_a, order_b, True, "dense", None
    )
