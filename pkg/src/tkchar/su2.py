"""2x2 matrix kernel: SU(2) in quaternion form, SL(2,C), eigen pairs,
the commutator-trace reducibility test and the projective cross-ratio.

An SU(2) element is stored as the unit quaternion (a, b), the matrix being

    [[a, -conj(b)],
     [b,  conj(a)]]

so products, inverses and powers are a handful of complex multiplications.
Eigen decomposition is closed form and orients the canonical eigenvalue to
the upper half circle (Im > 0).  The cross-ratio convention is fixed so
that the eigenvector quadruple [1:0], [0:1], [a:b], [-conj(b):conj(a)]
evaluates to t/(t-1) with t = |b|**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9


class DegenerateError(ValueError):
    """Raised when an eigen or cross-ratio question has no stable answer
    (central matrix, coincident projective points, reducible pair)."""


@dataclass(frozen=True, slots=True)
class UnitaryMatrix:
    """SU(2) element [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 == 1."""

    a: complex
    b: complex

    @classmethod
    def identity(cls) -> "UnitaryMatrix":
        return cls(1.0 + 0.0j, 0.0j)

    def inv(self) -> "UnitaryMatrix":
        return UnitaryMatrix(self.a.conjugate(), -self.b)

    def __matmul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        return UnitaryMatrix(
            self.a * other.a - self.b.conjugate() * other.b,
            self.b * other.a + self.a.conjugate() * other.b,
        )

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, -self.b.conjugate(), self.b, self.a.conjugate())

    def matrix(self) -> np.ndarray:
        e = self.entries()
        return np.array([[e[0], e[1]], [e[2], e[3]]], dtype=complex)


@dataclass(frozen=True, slots=True)
class SpecialLinearMatrix:
    """General SL(2,C) element; determinant 1 is validated on construction."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __post_init__(self) -> None:
        det = self.m11 * self.m22 - self.m12 * self.m21
        if abs(det - 1.0) > 1e-8:
            raise ValueError(f"determinant {det} is not 1")

    @classmethod
    def identity(cls) -> "SpecialLinearMatrix":
        return cls(1.0 + 0.0j, 0.0j, 0.0j, 1.0 + 0.0j)

    def inv(self) -> "SpecialLinearMatrix":
        return SpecialLinearMatrix(self.m22, -self.m12, -self.m21, self.m11)

    def __matmul__(self, other: "SpecialLinearMatrix") -> "SpecialLinearMatrix":
        return SpecialLinearMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.m11, self.m12, self.m21, self.m22)

    def matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)


Mat2 = UnitaryMatrix | SpecialLinearMatrix


def from_quaternion(a: complex, b: complex) -> UnitaryMatrix:
    """Build an SU(2) element from a quaternion, normalizing the length.

    Inputs are expected on the unit sphere up to rounding; anything of
    length zero (below 1e-9) is rejected.
    """
    nrm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    if nrm < 1e-9:
        raise ValueError("zero-norm quaternion")
    return UnitaryMatrix(complex(a) / nrm, complex(b) / nrm)


def to_special_linear(x: Mat2) -> SpecialLinearMatrix:
    if isinstance(x, SpecialLinearMatrix):
        return x
    e = x.entries()
    return SpecialLinearMatrix(*e)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if isinstance(x, UnitaryMatrix) and isinstance(y, UnitaryMatrix):
        return x @ y
    return to_special_linear(x) @ to_special_linear(y)


def mat_pow(x: Mat2, k: int) -> Mat2:
    """x**k by binary exponentiation; negative k inverts first."""
    if k < 0:
        x, k = x.inv(), -k
    result = x.identity()
    base = x
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def trace(x: Mat2) -> complex:
    if isinstance(x, UnitaryMatrix):
        return complex(2.0 * x.a.real, 0.0)
    return x.m11 + x.m22


def conjugate_by(x: Mat2, p: Mat2) -> Mat2:
    """p x p^-1."""
    return mat_mul(mat_mul(p, x), p.inv())


def commutator_trace(a: Mat2, b: Mat2) -> complex:
    return trace(mat_mul(mat_mul(a, b), mat_mul(a.inv(), b.inv())))


def is_reducible_pair(a: Mat2, b: Mat2, tol: float = DEFAULT_TOL) -> bool:
    """A pair generates a reducible representation iff tr[a,b] == 2.

    For SU(2) pairs this is equivalent to sharing an eigenvector (the common
    invariant line), which the test suite checks independently.
    """
    return abs(commutator_trace(a, b) - 2.0) <= tol


def sup_diff(x: Mat2, y: Mat2) -> float:
    """Entrywise sup-norm distance between two 2x2 matrices."""
    return max(abs(u - v) for u, v in zip(x.entries(), y.entries()))


@dataclass(frozen=True, slots=True)
class ProjectivePoint:
    """A point [x : y] of the complex projective line."""

    x: complex
    y: complex

    def __post_init__(self) -> None:
        if self.x == 0 and self.y == 0:
            raise ValueError("[0:0] is not a projective point")

    def norm(self) -> float:
        return math.sqrt(abs(self.x) ** 2 + abs(self.y) ** 2)


def proj_gap(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Sine of the angle between the two lines; zero iff p == q projectively."""
    return abs(p.x * q.y - q.x * p.y) / (p.norm() * q.norm())


def apply_matrix(m: Mat2, p: ProjectivePoint) -> ProjectivePoint:
    e = m.entries()
    return ProjectivePoint(e[0] * p.x + e[1] * p.y, e[2] * p.x + e[3] * p.y)


def eigen_decompose(
    m: UnitaryMatrix, tol: float = DEFAULT_TOL
) -> tuple[complex, ProjectivePoint, ProjectivePoint]:
    """Eigen data (lam, e1, e2) of a non-central SU(2) element.

    lam is the eigenvalue on the upper half circle (Im(lam) > 0), e1 its
    unit eigenvector and e2 the orthogonal unit eigenvector for lam**-1.
    Central matrices (trace within tol of +-2) have no preferred eigen
    direction and are refused rather than answered with noise.
    """
    re_a = m.a.real
    tr = 2.0 * re_a
    if 2.0 - abs(tr) <= tol:
        raise DegenerateError(f"matrix is within {tol} of a central element (trace {tr})")
    lam = complex(re_a, math.sqrt(max(0.0, 1.0 - re_a * re_a)))
    if abs(m.b) < 1e-13:
        # diagonal: eigenvectors are the coordinate axes
        if m.a.imag > 0:
            e1 = ProjectivePoint(1.0 + 0.0j, 0.0j)
            e2 = ProjectivePoint(0.0j, 1.0 + 0.0j)
        else:
            e1 = ProjectivePoint(0.0j, 1.0 + 0.0j)
            e2 = ProjectivePoint(-1.0 + 0.0j, 0.0j)
        return lam, e1, e2
    # first row of (m - lam) gives the kernel direction (conj(b), a - lam)
    x = m.b.conjugate()
    y = m.a - lam
    nrm = math.sqrt(abs(x) ** 2 + abs(y) ** 2)
    e1 = ProjectivePoint(x / nrm, y / nrm)
    e2 = ProjectivePoint(-e1.y.conjugate(), e1.x.conjugate())
    return lam, e1, e2


def cross_ratio(
    p1: ProjectivePoint,
    p2: ProjectivePoint,
    p3: ProjectivePoint,
    p4: ProjectivePoint,
    tol: float = DEFAULT_TOL,
) -> complex:
    """Cross-ratio of four pairwise distinct projective points.

    Convention: in the affine chart z = y/x this is
    ((z1-z3)(z2-z4)) / ((z1-z4)(z2-z3)), evaluated chart-free through the
    2x2 determinants d(p,q) = x_p y_q - x_q y_p.  Applying one determinant-1
    matrix to all four points leaves the value unchanged.
    """
    pts = (p1, p2, p3, p4)
    for i in range(4):
        for j in range(i + 1, 4):
            if proj_gap(pts[i], pts[j]) <= tol:
                raise DegenerateError(f"points {i + 1} and {j + 1} coincide projectively")

    def d(p: ProjectivePoint, q: ProjectivePoint) -> complex:
        return p.x * q.y - q.x * p.y

    return (d(p1, p3) * d(p2, p4)) / (d(p1, p4) * d(p2, p3))
