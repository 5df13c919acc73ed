"""Pure m-qubit states as dense amplitude vectors.

Bit-order convention, used everywhere including JSON I/O: the flat index
of the bit-string ``x_m ... x_1`` is ``x = sum_k x_k * 2**(k-1)``, so slot
1 is the least-significant bit.  Printed labels read most-significant
first (``x_m`` on the left), matching the usual ket notation.

Normalization is deliberately not an invariant: minor evaluation is
scale-covariant, so unnormalized integer amplitudes stand in for
irrational ones (1/sqrt(2) never needs to be represented exactly).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import BackendMismatch, LengthMismatch, SlotOutOfRange, ZeroFactor
from .scalar import Backend, Scalar, approx_zero, one, scalar_from_json, scalar_to_json, zero

DEFAULT_MAX_QUBITS = 24


def bit_at(x: int, s: int) -> int:
    """Bit of slot ``s`` (1-based, slot 1 least significant) in flat index x."""
    return (x >> (s - 1)) & 1


def with_bit(x: int, s: int, value: int) -> int:
    """Flat index x with the slot-``s`` bit replaced by ``value``."""
    mask = 1 << (s - 1)
    return (x | mask) if value else (x & ~mask)


def bits_of_index(x: int, m: int) -> tuple:
    """Bits ``(x_1, ..., x_m)``, least-significant slot first."""
    return tuple((x >> k) & 1 for k in range(m))


def index_of_bits(bits: Sequence[int]) -> int:
    """Inverse of :func:`bits_of_index`."""
    return sum(b << k for k, b in enumerate(bits))


def bit_label(x: int, m: int) -> str:
    """Ket-style label ``x_m ... x_1`` for a flat index."""
    return "".join(str((x >> (m - 1 - k)) & 1) for k in range(m))


class QubitFactor(NamedTuple):
    """A point on one projective line: the pair (a0, a1), not both zero."""

    a0: Scalar
    a1: Scalar


class MultiQubitState:
    """m qubits with a length-2**m amplitude tuple in flat-index order."""

    __slots__ = ("m", "amps")

    def __init__(self, m: int, amps: Sequence[Scalar], max_qubits: int = DEFAULT_MAX_QUBITS):
        if m < 1:
            raise LengthMismatch(f"qubit count must be >= 1, got {m}")
        if m > max_qubits:
            raise LengthMismatch(f"qubit count {m} exceeds the cap of {max_qubits}")
        amps = tuple(amps)
        if len(amps) != 1 << m:
            raise LengthMismatch(
                f"amplitude vector has length {len(amps)}, expected 2**{m} = {1 << m}"
            )
        backend = amps[0].backend
        for a in amps:
            if a.backend is not backend:
                raise BackendMismatch("amplitudes mix arithmetic backends")
        self.m = m
        self.amps = amps

    @property
    def backend(self) -> Backend:
        return self.amps[0].backend

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.amps)

    def norm_squared(self) -> Scalar:
        """<psi|psi> = sum |amps[x]|^2, a real scalar."""
        total = zero(self.backend)
        for a in self.amps:
            total = total + a.abs_squared()
        return total

    def is_normalized(self, tol=0) -> bool:
        ns = self.norm_squared()
        return approx_zero(ns - one(self.backend), tol)

    def scaled(self, factor: Scalar) -> "MultiQubitState":
        return MultiQubitState(self.m, tuple(a * factor for a in self.amps))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiQubitState)
            and self.m == other.m
            and self.amps == other.amps
        )

    def __hash__(self):
        return hash((self.m, self.amps))

    def __repr__(self) -> str:
        return f"MultiQubitState(m={self.m}, amps={list(map(str, self.amps))})"


def from_amplitudes(m: int, amps: Sequence[Scalar], max_qubits: int = DEFAULT_MAX_QUBITS) -> MultiQubitState:
    return MultiQubitState(m, amps, max_qubits=max_qubits)


def segre_embed(factors: Sequence[QubitFactor]) -> MultiQubitState:
    """Product state of the given projective-line factors.

    ``factors[s-1]`` is slot s, so amplitude x gets the product over s of
    the factor component selected by the slot-s bit of x.  The result is
    completely separable by construction.
    """
    factors = [QubitFactor(*f) for f in factors]
    m = len(factors)
    if m < 1:
        raise LengthMismatch("at least one factor required")
    backend = factors[0].a0.backend
    for k, f in enumerate(factors, start=1):
        if f.a0.backend is not backend or f.a1.backend is not backend:
            raise BackendMismatch("factors mix arithmetic backends")
        if f.a0.is_zero() and f.a1.is_zero():
            raise ZeroFactor(f"factor {k} has both components zero")
    amps = []
    for x in range(1 << m):
        prod = factors[0][bit_at(x, 1)]
        for s in range(2, m + 1):
            prod = prod * factors[s - 1][bit_at(x, s)]
        amps.append(prod)
    return MultiQubitState(m, amps)


def apply_local_operator(state: MultiQubitState, s: int, g) -> MultiQubitState:
    """Act with a 2x2 scalar matrix g on qubit slot s.

    g is ((g00, g01), (g10, g11)); new amplitude with slot-s bit r is
    ``g[r][0]*old(bit 0) + g[r][1]*old(bit 1)`` at fixed other bits.
    """
    if not 1 <= s <= state.m:
        raise SlotOutOfRange(f"slot {s} outside 1..{state.m}")
    (g00, g01), (g10, g11) = g
    amps = list(state.amps)
    out = list(state.amps)
    for x in range(1 << state.m):
        if bit_at(x, s):
            continue
        y = with_bit(x, s, 1)
        a0, a1 = amps[x], amps[y]
        out[x] = g00 * a0 + g01 * a1
        out[y] = g10 * a0 + g11 * a1
    return MultiQubitState(state.m, out)


def state_to_json(state: MultiQubitState, label: str | None = None) -> dict:
    doc = {"m": state.m, "amps": [scalar_to_json(a) for a in state.amps]}
    if label is not None:
        doc["label"] = label
    return doc


def state_from_json(doc, backend: Backend, max_qubits: int = DEFAULT_MAX_QUBITS) -> MultiQubitState:
    """Parse a {"m": ..., "amps": [...]} document; raises ValueError on bad shape."""
    if not isinstance(doc, dict):
        raise ValueError("state document must be a JSON object")
    extra = set(doc) - {"m", "amps", "label"}
    if extra:
        raise ValueError(f"unknown state keys: {sorted(extra)}")
    m = doc.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"'m' must be a positive integer, got {m!r}")
    amps_doc = doc.get("amps")
    if not isinstance(amps_doc, list):
        raise ValueError("'amps' must be an array of scalars")
    if len(amps_doc) != 1 << m:
        raise ValueError(
            f"'amps' has length {len(amps_doc)}, expected 2**{m} = {1 << m}"
        )
    amps = [scalar_from_json(a, backend) for a in amps_doc]
    return MultiQubitState(m, amps, max_qubits=max_qubits)
