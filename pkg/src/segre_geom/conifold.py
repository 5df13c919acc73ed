"""The conifold quadric z1^2+z2^2+z3^2+z4^2 = 0 and its Segre-side coordinates.

The linear coordinate change

    (z1, z2, z3, z4)  ->  [[z1+i z2, -z4+i z3], [z4+i z3, z1-i z2]]

turns the sum of squares into the 2x2 determinant, identifying the
conifold with the cone over the two-qubit Segre quadric.  Replacing the
zero on the right-hand side by the determinant of an arbitrary two-qubit
amplitude matrix gives the deformation parameter Omega = a00 a11 - a01 a10,
nonzero exactly for entangled two-qubit states.

The real form splits z = u + iv.  Note f2 = sum(u_k v_k) is half the
imaginary part of sum(z_k^2): f1 = Re(sum z^2) but 2 f2 = Im(sum z^2);
both vanish together, so the membership predicate is unaffected.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import BackendMismatch, LengthMismatch, WrongQubitCount
from .scalar import Backend, Scalar, imag_unit, rational, zero
from .state import MultiQubitState


class ConifoldPoint(NamedTuple):
    z1: Scalar
    z2: Scalar
    z3: Scalar
    z4: Scalar

    @property
    def backend(self) -> Backend:
        return self.z1.backend


def point(zs: Sequence[Scalar]) -> ConifoldPoint:
    zs = tuple(zs)
    if len(zs) != 4:
        raise LengthMismatch(f"a conifold point has 4 coordinates, got {len(zs)}")
    backend = zs[0].backend
    for z in zs:
        if z.backend is not backend:
            raise BackendMismatch("coordinates mix arithmetic backends")
    return ConifoldPoint(*zs)


class RealSplit(NamedTuple):
    """Componentwise real and imaginary parts: z = u + iv."""

    u: tuple
    v: tuple


class RealSplitReport(NamedTuple):
    split: RealSplit
    f1: Scalar  # sum(u_k^2 - v_k^2) = Re(sum z^2)
    f2: Scalar  # sum(u_k v_k) = Im(sum z^2) / 2


def conifold_residual(p: ConifoldPoint) -> Scalar:
    """sum(z_k^2); the point lies on the conifold iff this vanishes."""
    total = zero(p.backend)
    for z in p:
        total = total + z * z
    return total


def real_split(p: ConifoldPoint) -> RealSplitReport:
    backend = p.backend
    zero_part = zero(backend).re
    u = tuple(Scalar(z.re, zero_part, backend) for z in p)
    v = tuple(Scalar(z.im, zero_part, backend) for z in p)
    f1 = zero(backend)
    f2 = zero(backend)
    for uk, vk in zip(u, v):
        f1 = f1 + uk * uk - vk * vk
        f2 = f2 + uk * vk
    return RealSplitReport(RealSplit(u, v), f1, f2)


def to_segre_coords(p: ConifoldPoint) -> tuple:
    """[[z1+i z2, -z4+i z3], [z4+i z3, z1-i z2]]; det equals the residual."""
    i = imag_unit(p.backend)
    z1, z2, z3, z4 = p
    return (
        (z1 + i * z2, -z4 + i * z3),
        (z4 + i * z3, z1 - i * z2),
    )


def det2(matrix) -> Scalar:
    (a, b), (c, d) = matrix
    return a * d - b * c


def _half(backend: Backend) -> Scalar:
    if backend is Backend.EXACT:
        return rational(1, 2)
    return Scalar(0.5, 0.0, backend)


def inverse_coordinate_matrix(backend: Backend) -> tuple:
    """Fixed 4x4 matrix sending (w11, w12, w21, w22) back to (z1, z2, z3, z4).

    Rows: z1 = (w11+w22)/2, z2 = -i(w11-w22)/2, z3 = -i(w12+w21)/2,
    z4 = (w21-w12)/2.
    """
    h = _half(backend)
    o = zero(backend)
    mih = -(imag_unit(backend) * h)  # -i/2
    return (
        (h, o, o, h),
        (mih, o, o, -mih),
        (o, mih, mih, o),
        (o, -h, h, o),
    )


def from_segre_coords(matrix) -> ConifoldPoint:
    """Invert :func:`to_segre_coords`; exact round-trip on the exact backend."""
    (w11, w12), (w21, w22) = matrix
    backend = w11.backend
    w = (w11, w12, w21, w22)
    rows = inverse_coordinate_matrix(backend)
    zs = []
    for row in rows:
        acc = zero(backend)
        for coeff, wk in zip(row, w):
            acc = acc + coeff * wk
        zs.append(acc)
    return ConifoldPoint(*zs)


def deformation(state: MultiQubitState) -> Scalar:
    """Two-qubit deformation parameter Omega = a00 a11 - a01 a10.

    Zero iff the state lies on the Segre cone (separable); a nonzero
    value deforms the conifold apex away and witnesses entanglement.
    """
    if state.m != 2:
        raise WrongQubitCount(f"deformation is defined for m = 2, got m = {state.m}")
    a = state.amps
    return a[0] * a[3] - a[1] * a[2]
