"""Twistor points and the projection map.

A twistor point is a signed ray in the positive 3-plane V, stored as a
primitive integer triple of coordinates in the triple basis (w_I, w_J,
w_K). Point equality is exact and includes the sign: L and -L are
different points. Irrational directions (for the bounded general-type
search) carry only a floating unit vector and no exact ray.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    InvalidBound,
    InvariantViolation,
    IrrationalPoint,
    NotPositive,
)
from .linalg import (
    GramLattice,
    HyperTriple,
    Vector,
    expand_in_V,
    integer_kernel,
    primitive,
    project_to_V,
    q_eval,
    triple_gram_rows,
    vector,
)


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@dataclass(frozen=True, eq=False)
class TwistorPoint:
    """A point of the twistor sphere S^2 in V.

    dir: primitive signed integer ray, or None for an irrational point.
    unit: floating unit representative dir/|dir|.
    """

    dir: Optional[tuple[int, int, int]]
    unit: tuple[float, float, float]

    @staticmethod
    def from_ray(a, b, c) -> "TwistorPoint":
        fr = (Fraction(a), Fraction(b), Fraction(c))
        if fr == (0, 0, 0):
            raise InvariantViolation("zero ray is not a twistor point")
        m = 1
        for e in fr:
            m = m * e.denominator // math.gcd(m, e.denominator)
        d = primitive(tuple(int(e * m) for e in fr))
        n = math.sqrt(d[0] ** 2 + d[1] ** 2 + d[2] ** 2)
        return TwistorPoint(dir=d, unit=(d[0] / n, d[1] / n, d[2] / n))

    @staticmethod
    def from_unit(x: float, y: float, z: float) -> "TwistorPoint":
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise InvariantViolation("zero vector is not a direction")
        return TwistorPoint(dir=None, unit=(x / n, y / n, z / n))

    @property
    def is_exact(self) -> bool:
        return self.dir is not None

    def require_exact(self) -> tuple[int, int, int]:
        if self.dir is None:
            raise IrrationalPoint("operation needs an exact rational ray")
        return self.dir

    def __eq__(self, other):
        if not isinstance(other, TwistorPoint):
            return NotImplemented
        if self.dir is None or other.dir is None:
            return self is other
        return self.dir == other.dir

    def __hash__(self):
        return hash(self.dir)

    def __repr__(self):
        if self.dir is not None:
            return f"TwistorPoint{self.dir}"
        return f"TwistorPoint(unit={self.unit})"


@dataclass(frozen=True)
class PositiveClass:
    """A rational class with q(vec, vec) > 0 and its twistor point."""

    vec: Vector
    point: TwistorPoint


@dataclass(frozen=True)
class GeneralTypeVerdict:
    """Either a witness lattice vector showing the point is not of
    general type (at degree 2), or 'no witness up to this box bound'."""

    witness: Optional[tuple[int, ...]]
    bound: Optional[int] = None

    @property
    def is_general_type_up_to_bound(self) -> bool:
        return self.witness is None


def omega_of(triple: HyperTriple, point: TwistorPoint) -> Vector:
    """The class a w_I + b w_J + c w_K for the point's primitive ray."""
    return expand_in_V(triple, point.require_exact())


def pi_map(lattice: GramLattice, triple: HyperTriple, omega) -> PositiveClass:
    """The twistor projection: the unique point L with q(omega, omega_L) > 0
    among the two orientations of the projection ray of omega."""
    omega = vector(omega)
    if q_eval(lattice, omega, omega) <= 0:
        raise NotPositive("pi_map needs q(omega, omega) > 0")
    coeffs = project_to_V(lattice, triple, omega)
    if coeffs == (0, 0, 0):
        raise InvariantViolation(
            "projection of a positive class vanished; lattice or triple invalid")
    point = TwistorPoint.from_ray(*coeffs)
    pairing = q_eval(lattice, omega, omega_of(triple, point))
    if pairing < 0:
        point = antipode(point)
        pairing = -pairing
    if pairing <= 0:
        raise InvariantViolation("no orientation pairs positively with omega")
    return PositiveClass(vec=omega, point=point)


def antipode(point: TwistorPoint) -> TwistorPoint:
    if point.dir is not None:
        d = point.dir
        n = math.sqrt(d[0] ** 2 + d[1] ** 2 + d[2] ** 2)
        return TwistorPoint(
            dir=(-d[0], -d[1], -d[2]),
            unit=(-d[0] / n, -d[1] / n, -d[2] / n),
        )
    u = point.unit
    return TwistorPoint(dir=None, unit=(-u[0], -u[1], -u[2]))


def hodge_type_11(lattice: GramLattice, triple: HyperTriple, x,
                  point: TwistorPoint) -> bool:
    """Whether x has Hodge type (1,1) at the point: the projection of x
    onto V is an exact rational multiple (possibly zero) of the ray."""
    coeffs = project_to_V(lattice, triple, vector(x))
    d = point.require_exact()
    return _cross(coeffs, d) == (0, 0, 0)


def two_zero_plane(triple: HyperTriple, point: TwistorPoint):
    """Two q-orthogonal vectors in V, each q-orthogonal to omega_L,
    spanning the real (2,0)+(0,2) plane at the point.

    For the ray (1,0,0) this returns (w_J, w_K)."""
    d = point.require_exact()
    k = min(range(3), key=lambda i: (abs(d[i]), i))
    e = tuple(1 if i == k else 0 for i in range(3))
    u = _cross(d, e)
    v = _cross(u, d)
    return (expand_in_V(triple, primitive(v)), expand_in_V(triple, primitive(u)))


def _reduce_witness(w, others, rows):
    """Greedy infinity-norm reduction of a kernel vector by the rest of
    the kernel basis; stays inside the kernel lattice and keeps the
    projection (computed via the integer pairing rows) nonzero."""
    w = list(w)

    def norm(v):
        return max(abs(e) for e in v)

    def proj_nonzero(v):
        return any(sum(r[j] * v[j] for j in range(len(v))) != 0 for r in rows)

    improved = True
    while improved:
        improved = False
        for b in others:
            bb = sum(e * e for e in b)
            if bb == 0:
                continue
            wb = sum(a * e for a, e in zip(w, b))
            k0 = (2 * wb + bb) // (2 * bb)  # round(wb / bb)
            for k in (k0 - 1, k0, k0 + 1):
                if k == 0:
                    continue
                cand = [wi - k * bi for wi, bi in zip(w, b)]
                if norm(cand) < norm(w) and proj_nonzero(cand):
                    w = cand
                    improved = True
    return tuple(w)


def is_general_type(lattice: GramLattice, triple: HyperTriple,
                    point: TwistorPoint, bound: int = 3) -> GeneralTypeVerdict:
    """Degree-2 general-type test at a twistor point.

    Exact mode (rational ray): solve the integer system p(lambda)
    parallel to the ray; with a rational triple this always produces a
    witness, so rational points are never of general type. Bounded mode
    (irrational point): scan the coordinate box [-bound, bound]^r for a
    witness with sine of the collinearity angle below 1e-9; absence is
    reported as general type up to the bound, not as a proof.
    """
    if bound < 1:
        raise InvalidBound("bound must be >= 1")
    rows = triple_gram_rows(lattice, triple)

    if point.is_exact:
        d = point.dir
        cross_rows = [
            tuple(d[2] * rows[1][t] - d[1] * rows[2][t] for t in range(lattice.rank)),
            tuple(d[0] * rows[2][t] - d[2] * rows[0][t] for t in range(lattice.rank)),
            tuple(d[1] * rows[0][t] - d[0] * rows[1][t] for t in range(lattice.rank)),
        ]
        kernel = integer_kernel(cross_rows)
        candidates = []
        for i, v in enumerate(kernel):
            t = tuple(sum(r[j] * v[j] for j in range(lattice.rank)) for r in rows)
            if t != (0, 0, 0):
                others = kernel[:i] + kernel[i + 1:]
                candidates.append(_reduce_witness(v, others, rows))
        if not candidates:
            raise InvariantViolation(
                "rational ray with no integral witness; triple does not span V")
        witness = min(candidates, key=lambda v: (max(abs(e) for e in v), v))
        return GeneralTypeVerdict(witness=witness)

    # bounded mode: floating direction
    from .scanning import box_vectors, ScanConfig

    ux, uy, uz = point.unit
    cfg = ScanConfig(box_bound=bound)
    for v in box_vectors(lattice.rank, cfg):
        t = [float(sum(r[j] * v[j] for j in range(lattice.rank))) for r in rows]
        n = math.sqrt(t[0] ** 2 + t[1] ** 2 + t[2] ** 2)
        if n == 0.0:
            continue
        cx = t[1] * uz - t[2] * uy
        cy = t[2] * ux - t[0] * uz
        cz = t[0] * uy - t[1] * ux
        sine = math.sqrt(cx * cx + cy * cy + cz * cz) / n
        if sine <= 1e-9:
            return GeneralTypeVerdict(witness=tuple(v))
    return GeneralTypeVerdict(witness=None, bound=bound)


INFINITY = complex(math.inf, 0.0)


def stereographic(point: TwistorPoint) -> complex:
    """CP^1 coordinate (b + ic)/(1 - a) of the unit representative;
    the north pole (1,0,0) maps to infinity."""
    a, b, c = point.unit
    if 1.0 - a == 0.0:
        return INFINITY
    return complex(b / (1.0 - a), c / (1.0 - a))


def stereographic_inverse(zeta: complex) -> TwistorPoint:
    if math.isinf(zeta.real) or math.isinf(zeta.imag):
        return TwistorPoint.from_ray(1, 0, 0)
    s = abs(zeta) ** 2
    return TwistorPoint.from_unit(
        (s - 1.0) / (s + 1.0),
        2.0 * zeta.real / (s + 1.0),
        2.0 * zeta.imag / (s + 1.0),
    )
