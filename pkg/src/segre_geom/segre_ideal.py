"""Quadratic generators of the Segre ideal and the separability decision.

Two equivalent generator families are evaluated:

* flattening minors: for each qubit slot s the amplitude tensor is
  reshaped into a 2 x 2**(m-1) matrix (row 1 = slot-s bit 0, row 2 =
  bit 1; columns enumerate the remaining bits in increasing flat order)
  and every 2x2 column-pair determinant Omega = u_i v_j - u_j v_i is
  taken;
* index-swap quadratics: for multi-indices x, y differing in slot s,
  P = a_x a_y - a_x' a_y' where x', y' swap the slot-s bits.

Each swap quadratic equals a flattening minor up to sign, which the test
suite verifies by brute-force matching.  A state is completely separable
iff every generator vanishes.

Evaluation cost scales as m * 2**(m-2) * (2**(m-1) - 1) minors; the
per-flattening loops read disjoint columns of an immutable state, so
flattenings can be evaluated in parallel if ever needed.  The inner
kernels work on raw rational/float components instead of Scalar objects.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence

from .errors import SlotOutOfRange, TooFewQubits, ZeroState
from .scalar import DEFAULT_FLOAT_TOL, Backend, Scalar, zero
from .state import MultiQubitState


class Flattening(NamedTuple):
    """2 x 2**(m-1) reshaping of the amplitudes along qubit slot s."""

    s: int
    u: tuple  # row 1: amplitudes with slot-s bit 0
    v: tuple  # row 2: amplitudes with slot-s bit 1

    @property
    def ncols(self) -> int:
        return len(self.u)

    @property
    def matrix(self) -> tuple:
        return (self.u, self.v)


class MinorEntry(NamedTuple):
    """One 2x2 minor u_i v_j - u_j v_i on columns i < j (1-based)."""

    i: int
    j: int
    omega: Scalar


class FlatteningMinors(NamedTuple):
    s: int
    entries: tuple


class SwapQuadratic(NamedTuple):
    """Index-swap generator value for flat multi-indices x, y (slot-s bits 0, 1)."""

    s: int
    x: int
    y: int
    value: Scalar


class MinorReport(NamedTuple):
    m: int
    flattenings: tuple
    swap_quadratics: tuple


class Witness(NamedTuple):
    """Largest-magnitude nonvanishing minor, lexicographic (s, i, j) tie-break."""

    s: int
    i: int
    j: int
    omega: Scalar


class SeparabilityResult(NamedTuple):
    separable: bool
    witness: Optional[Witness]
    max_abs_squared: Scalar

    @property
    def max_abs_minor(self) -> float:
        return math.sqrt(float(self.max_abs_squared.re))


def column_indices(m: int, s: int) -> tuple:
    """Flat indices of the two rows of flattening s, column-major.

    Column j fixes the other m-1 bits to the bits of j (increasing flat
    order); entry (r, j) is the amplitude index with slot-s bit r.
    """
    half = 1 << (s - 1)
    row0 = []
    row1 = []
    for j in range(1 << (m - 1)):
        base = ((j >> (s - 1)) << s) | (j & (half - 1))
        row0.append(base)
        row1.append(base | half)
    return row0, row1


def flatten(state: MultiQubitState, s: int) -> Flattening:
    """Reshape the state along slot s into its 2 x 2**(m-1) matrix."""
    if not 1 <= s <= state.m:
        raise SlotOutOfRange(f"slot {s} outside 1..{state.m}")
    row0, row1 = column_indices(state.m, s)
    amps = state.amps
    return Flattening(s, tuple(amps[k] for k in row0), tuple(amps[k] for k in row1))


def minor_count(m: int) -> int:
    """Column-pair minors per flattening: 2**(m-1) * (2**(m-1) - 1) / 2."""
    if m < 2:
        raise TooFewQubits(f"minors need m >= 2, got m = {m}")
    n = 1 << (m - 1)
    return n * (n - 1) // 2


def pair_minors(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
    """All 2x2 column-pair minors of the two rows, as MinorEntry tuples."""
    n = len(u)
    entries = []
    for i in range(n):
        ui, vi = u[i], v[i]
        for j in range(i + 1, n):
            entries.append(MinorEntry(i + 1, j + 1, ui * v[j] - u[j] * vi))
    return tuple(entries)


def swap_quadratic(state: MultiQubitState, s: int, x: int, y: int) -> Scalar:
    """a_x a_y - a_x' a_y' with the slot-s bits of x and y exchanged."""
    if not 1 <= s <= state.m:
        raise SlotOutOfRange(f"slot {s} outside 1..{state.m}")
    mask = 1 << (s - 1)
    xs = (x & ~mask) | (y & mask)
    ys = (y & ~mask) | (x & mask)
    a = state.amps
    return a[x] * a[y] - a[xs] * a[ys]


def minors(state: MultiQubitState, include_swap_quadratics: bool = True) -> MinorReport:
    """Evaluate every flattening minor and every index-swap generator.

    Swap quadratics are enumerated once per unordered informative pair:
    slot-s bit of x fixed to 0, of y to 1, other bits free on both sides.
    Pairs whose slot-s bits agree vanish identically and are omitted.
    """
    m = state.m
    if m < 2:
        raise TooFewQubits(f"minors need m >= 2, got m = {m}")
    backend = state.backend
    res = [a.re for a in state.amps]
    ims = [a.im for a in state.amps]
    flats = []
    quads = []
    for s in range(1, m + 1):
        row0, row1 = column_indices(m, s)
        n = len(row0)
        u_re = [res[k] for k in row0]
        u_im = [ims[k] for k in row0]
        v_re = [res[k] for k in row1]
        v_im = [ims[k] for k in row1]
        entries = []
        for i in range(n):
            are, aim = u_re[i], u_im[i]
            dre, dim = v_re[i], v_im[i]
            for j in range(i + 1, n):
                bre, bim = v_re[j], v_im[j]
                cre, cim = u_re[j], u_im[j]
                o_re = (are * bre - aim * bim) - (cre * dre - cim * dim)
                o_im = (are * bim + aim * bre) - (cre * dim + cim * dre)
                entries.append(MinorEntry(i + 1, j + 1, Scalar(o_re, o_im, backend)))
        flats.append(FlatteningMinors(s, tuple(entries)))
        if include_swap_quadratics:
            for a in range(n):
                are, aim = u_re[a], u_im[a]
                dre, dim = v_re[a], v_im[a]
                xa = row0[a]
                for b in range(n):
                    bre, bim = v_re[b], v_im[b]
                    cre, cim = u_re[b], u_im[b]
                    p_re = (are * bre - aim * bim) - (dre * cre - dim * cim)
                    p_im = (are * bim + aim * bre) - (dre * cim + dim * cre)
                    quads.append(
                        SwapQuadratic(s, xa, row1[b], Scalar(p_re, p_im, backend))
                    )
    return MinorReport(m, tuple(flats), tuple(quads))


def max_nonvanishing_minor(state: MultiQubitState):
    """(max |Omega|^2, witness indices) over all flattening minors.

    Returns raw components (abs2_re, (s, i, j), (omega_re, omega_im)) with
    abs2 maximal and (s, i, j) lexicographically first among maxima; the
    witness triple is None when every minor is zero.
    """
    m = state.m
    res = [a.re for a in state.amps]
    ims = [a.im for a in state.amps]
    best = None
    best_abs2 = None
    best_val = None
    for s in range(1, m + 1):
        row0, row1 = column_indices(m, s)
        n = len(row0)
        u_re = [res[k] for k in row0]
        u_im = [ims[k] for k in row0]
        v_re = [res[k] for k in row1]
        v_im = [ims[k] for k in row1]
        for i in range(n):
            are, aim = u_re[i], u_im[i]
            dre, dim = v_re[i], v_im[i]
            for j in range(i + 1, n):
                o_re = (are * v_re[j] - aim * v_im[j]) - (u_re[j] * dre - u_im[j] * dim)
                o_im = (are * v_im[j] + aim * v_re[j]) - (u_re[j] * dim + u_im[j] * dre)
                if not o_re and not o_im:
                    continue
                abs2 = o_re * o_re + o_im * o_im
                if best_abs2 is None or abs2 > best_abs2:
                    best_abs2 = abs2
                    best = (s, i + 1, j + 1)
                    best_val = (o_re, o_im)
    if best is None:
        return None
    return best_abs2, best, best_val


def all_swap_quadratics_vanish(state: MultiQubitState) -> bool:
    """Exact componentwise zero scan of every index-swap generator."""
    m = state.m
    res = [a.re for a in state.amps]
    ims = [a.im for a in state.amps]
    for s in range(1, m + 1):
        row0, row1 = column_indices(m, s)
        n = len(row0)
        u_re = [res[k] for k in row0]
        u_im = [ims[k] for k in row0]
        v_re = [res[k] for k in row1]
        v_im = [ims[k] for k in row1]
        for a in range(n):
            are, aim = u_re[a], u_im[a]
            dre, dim = v_re[a], v_im[a]
            for b in range(n):
                bre, bim = v_re[b], v_im[b]
                cre, cim = u_re[b], u_im[b]
                if (are * bre - aim * bim) != (dre * cre - dim * cim):
                    return False
                if (are * bim + aim * bre) != (dre * cim + dim * cre):
                    return False
    return True


def is_separable(state: MultiQubitState, tol=None) -> SeparabilityResult:
    """Decide complete separability from the flattening minors.

    On the exact backend the decision is tolerance-free; on FLOAT64 a
    minor counts as vanishing when max(|re|, |im|) <= tol (default
    DEFAULT_FLOAT_TOL).  The witness is the largest-|Omega| survivor.

    Single-qubit states are vacuously separable (no column pairs).
    """
    if state.is_zero():
        raise ZeroState("the zero vector is not a projective point")
    exact = state.backend is Backend.EXACT
    if tol is None:
        tol = 0 if exact else DEFAULT_FLOAT_TOL
    found = max_nonvanishing_minor(state) if state.m >= 2 else None
    if found is not None and not exact:
        # re-scan with the tolerance: keep the max only if it survives
        abs2, _, (o_re, o_im) = found
        if max(abs(o_re), abs(o_im)) <= tol:
            found = _max_above_tol(state, tol)
    if found is None:
        return SeparabilityResult(True, None, zero(state.backend))
    abs2, (s, i, j), (o_re, o_im) = found
    omega = Scalar(o_re, o_im, state.backend)
    return SeparabilityResult(
        False, Witness(s, i, j, omega), Scalar(abs2, zero(state.backend).im, state.backend)
    )


def _max_above_tol(state: MultiQubitState, tol):
    """Float-backend rescan keeping only minors with max(|re|,|im|) > tol."""
    best = None
    for s in range(1, state.m + 1):
        fl = flatten(state, s)
        for entry in pair_minors(fl.u, fl.v):
            o = entry.omega
            if max(abs(o.re), abs(o.im)) <= tol:
                continue
            abs2 = o.re * o.re + o.im * o.im
            if best is None or abs2 > best[0]:
                best = (abs2, (s, entry.i, entry.j), (o.re, o.im))
    return best
