"""Commutation-relation identities satisfied by flattening row pairs.

For a 2 x N matrix with rows mu (slot-bit 0) and nu (slot-bit 1), the
column-pair minors Omega_ij = mu_i nu_j - mu_j nu_i assemble into the
antisymmetric matrix Phi_ij = Omega_ij / 2 (the antisymmetrized product
mu_[i nu_j], bracket convention X_[i Y_j] = (X_i Y_j - X_j Y_i)/2).
Writing the rows as one matrix L with L_1i = mu_i, L_2i = nu_i, the
commutation identity

    (L_ki L_lj - L_kj L_li) / 2 = eps_kl Phi_ij

holds for every index tuple and arbitrary entries, because both sides
are the antisymmetrized (k,l)-row, (i,j)-column content of L.  The
division by 2 applies the same bracket normalization to the left side;
without it the two sides differ by a factor of 2 for any nonzero minor.

The braided form replaces L_kj L_li by an R-matrix contraction
sum_{m,n} R^{mn}_{kl} L_mj L_ni.  Two candidate tensors are provided:
the Kronecker reading R^{mn}_{kl} = delta^m_k delta^n_l, which makes the
identity hold, and the literal product of antisymmetric epsilon symbols
R^{mn}_{kl} = eps_mk eps_nl, which does not; `disambiguate_rmatrix`
measures both so the choice is checked rather than asserted.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BackendMismatch,
    IndexOutOfRange,
    LengthMismatch,
    NotUnimodular,
)
from .scalar import DEFAULT_FLOAT_TOL, Backend, Scalar, approx_zero, one, zero
from .segre_ideal import Flattening, flatten, pair_minors
from .state import MultiQubitState

# 1-based antisymmetric symbol on two indices, eps[1][2] = +1
_EPS = {(1, 1): 0, (1, 2): 1, (2, 1): -1, (2, 2): 0}


class RowPair:
    """Equal-length rows mu, nu of one flattening (or any 2 x N matrix)."""

    __slots__ = ("mu", "nu")

    def __init__(self, mu: Sequence[Scalar], nu: Sequence[Scalar]):
        mu = tuple(mu)
        nu = tuple(nu)
        if len(mu) != len(nu):
            raise LengthMismatch(f"rows have lengths {len(mu)} and {len(nu)}")
        if not mu:
            raise LengthMismatch("rows must be nonempty")
        backend = mu[0].backend
        for a in mu + nu:
            if a.backend is not backend:
                raise BackendMismatch("row entries mix arithmetic backends")
        self.mu = mu
        self.nu = nu

    @classmethod
    def from_flattening(cls, fl: Flattening) -> "RowPair":
        return cls(fl.u, fl.v)

    @property
    def width(self) -> int:
        return len(self.mu)

    @property
    def backend(self) -> Backend:
        return self.mu[0].backend

    def entry(self, k: int, i: int) -> Scalar:
        """Matrix entry, rows k in {1, 2}, columns i in 1..N."""
        row = self.mu if k == 1 else self.nu
        return row[i - 1]

    def __repr__(self) -> str:
        return f"RowPair(mu={list(map(str, self.mu))}, nu={list(map(str, self.nu))})"


class EpsilonContraction(NamedTuple):
    """Pairwise epsilon contractions on columns (i, j)."""

    minor: Scalar  # mu_i nu_j - mu_j nu_i
    mu_mu: Scalar  # mu_i mu_j - mu_j mu_i, identically zero
    nu_nu: Scalar  # nu_i nu_j - nu_j nu_i, identically zero


def epsilon_contract(rows: RowPair, i: int, j: int) -> EpsilonContraction:
    if not (1 <= i < j <= rows.width):
        raise IndexOutOfRange(f"need 1 <= i < j <= {rows.width}, got ({i}, {j})")
    mu, nu = rows.mu, rows.nu
    a, b = i - 1, j - 1
    return EpsilonContraction(
        mu[a] * nu[b] - mu[b] * nu[a],
        mu[a] * mu[b] - mu[b] * mu[a],
        nu[a] * nu[b] - nu[b] * nu[a],
    )


def antisym_product_matrix(rows: RowPair) -> tuple:
    """N x N antisymmetric matrix of halved minors (mu_i nu_j - mu_j nu_i)/2."""
    mu, nu = rows.mu, rows.nu
    n = rows.width
    z = zero(rows.backend)
    out = [[z] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            phi = (mu[a] * nu[b] - mu[b] * nu[a]) / 2
            out[a][b] = phi
            out[b][a] = -phi
    return tuple(tuple(row) for row in out)


class RMatrixKind(Enum):
    KRONECKER = "kronecker"
    LITERAL_EPSILON = "literal-epsilon"


DEFAULT_RMATRIX_KIND = RMatrixKind.KRONECKER


def rmatrix_tensor(kind: RMatrixKind) -> tuple:
    """Integer tensor R[m][n][k][l], all indices 0-based over {0, 1}."""
    eps = ((0, 1), (-1, 0))
    out = [[[[0, 0], [0, 0]] for _ in range(2)] for _ in range(2)]
    for m in range(2):
        for n in range(2):
            for k in range(2):
                for l in range(2):
                    if kind is RMatrixKind.KRONECKER:
                        out[m][n][k][l] = 1 if (m == k and n == l) else 0
                    else:
                        out[m][n][k][l] = eps[m][k] * eps[n][l]
    return tuple(tuple(tuple(tuple(c) for c in b) for b in a) for a in out)


class ResidualReport(NamedTuple):
    """Max |residual|^2 over all (k, l, i, j) plus the argmax (1-based)."""

    max_abs_squared: Scalar
    argmax: Optional[tuple]
    tensor: Optional[tuple]  # tensor[k][l][i][j], 0-based, when requested


def _residual_scan(rows: RowPair, rmat, return_tensor: bool) -> ResidualReport:
    """Shared kernel: residual (L_ki L_lj - contraction)/2 - eps_kl Phi_ij.

    rmat None means the plain commutation form (contraction = L_kj L_li).
    Works on raw components; Phi is folded in as raw halved minors.
    """
    mu, nu = rows.mu, rows.nu
    backend = rows.backend
    n = rows.width
    rows01 = (
        ([a.re for a in mu], [a.im for a in mu]),
        ([a.re for a in nu], [a.im for a in nu]),
    )
    # phi[a][b] as raw (re, im): half the (a, b) minor
    half = one(backend) / 2
    hre, him = half.re, half.im  # 1/2 exactly on both backends; him = 0
    phi_re = [[None] * n for _ in range(n)]
    phi_im = [[None] * n for _ in range(n)]
    mu_re, mu_im = rows01[0]
    nu_re, nu_im = rows01[1]
    for a in range(n):
        for b in range(n):
            o_re = (mu_re[a] * nu_re[b] - mu_im[a] * nu_im[b]) - (
                mu_re[b] * nu_re[a] - mu_im[b] * nu_im[a]
            )
            o_im = (mu_re[a] * nu_im[b] + mu_im[a] * nu_re[b]) - (
                mu_re[b] * nu_im[a] + mu_im[b] * nu_re[a]
            )
            phi_re[a][b] = o_re * hre
            phi_im[a][b] = o_im * hre
    best_abs2 = zero(backend).re
    best = None
    tensor = [[[[None] * n for _ in range(n)] for _ in range(2)] for _ in range(2)] if return_tensor else None
    for k in range(2):
        k_re, k_im = rows01[k]
        for l in range(2):
            l_re, l_im = rows01[l]
            eps_kl = _EPS[(k + 1, l + 1)]
            for i in range(n):
                for j in range(n):
                    # L_ki L_lj
                    p_re = k_re[i] * l_re[j] - k_im[i] * l_im[j]
                    p_im = k_re[i] * l_im[j] + k_im[i] * l_re[j]
                    if rmat is None:
                        q_re = k_re[j] * l_re[i] - k_im[j] * l_im[i]
                        q_im = k_re[j] * l_im[i] + k_im[j] * l_re[i]
                    else:
                        q_re = hre * 0
                        q_im = hre * 0
                        for m in range(2):
                            m_re, m_im = rows01[m]
                            for nn in range(2):
                                c = rmat[m][nn][k][l]
                                if not c:
                                    continue
                                n_re, n_im = rows01[nn]
                                t_re = m_re[j] * n_re[i] - m_im[j] * n_im[i]
                                t_im = m_re[j] * n_im[i] + m_im[j] * n_re[i]
                                q_re += c * t_re
                                q_im += c * t_im
                    r_re = (p_re - q_re) * hre - eps_kl * phi_re[i][j]
                    r_im = (p_im - q_im) * hre - eps_kl * phi_im[i][j]
                    if return_tensor:
                        tensor[k][l][i][j] = Scalar(r_re, r_im, backend)
                    if r_re or r_im:
                        abs2 = r_re * r_re + r_im * r_im
                        if abs2 > best_abs2:
                            best_abs2 = abs2
                            best = (k + 1, l + 1, i + 1, j + 1)
    if return_tensor:
        tensor = tuple(
            tuple(tuple(tuple(cell for cell in row) for row in block) for block in plane)
            for plane, _ in ((tensor[k], k) for k in range(2))
        )
    return ResidualReport(
        Scalar(best_abs2, zero(backend).im, backend),
        best,
        tensor if return_tensor else None,
    )


def commutation_residual(rows: RowPair, return_tensor: bool = True) -> ResidualReport:
    """Residual of the commutation identity; identically zero for any rows."""
    return _residual_scan(rows, None, return_tensor)


def braided_commutation_residual(
    rows: RowPair,
    kind: RMatrixKind = DEFAULT_RMATRIX_KIND,
    return_tensor: bool = True,
) -> ResidualReport:
    """Residual of the R-matrix form; zero iff the candidate tensor is right."""
    return _residual_scan(rows, rmatrix_tensor(kind), return_tensor)


class RMatrixComparison(NamedTuple):
    max_abs_squared: dict  # kind value -> max |residual|^2 over the sample
    satisfying: tuple  # kind values with identically zero residual


def disambiguate_rmatrix(samples: Sequence[RowPair], tol=None) -> RMatrixComparison:
    """Evaluate both R-matrix candidates over sample row pairs.

    Returns the per-candidate worst residual and which candidates keep the
    identity (exactly on EXACT rows, within tol on FLOAT64).
    """
    worst = {}
    for kind in RMatrixKind:
        worst_abs2 = None
        for rows in samples:
            rep = braided_commutation_residual(rows, kind, return_tensor=False)
            if worst_abs2 is None or rep.max_abs_squared.re > worst_abs2.re:
                worst_abs2 = rep.max_abs_squared
        worst[kind.value] = worst_abs2
    satisfying = []
    for kind in RMatrixKind:
        w = worst[kind.value]
        if w is None:
            continue
        t = tol
        if t is None:
            t = 0 if w.backend is Backend.EXACT else DEFAULT_FLOAT_TOL**2
        if approx_zero(w, t):
            satisfying.append(kind.value)
    return RMatrixComparison(worst, tuple(satisfying))


def det2x2(g) -> Scalar:
    (a, b), (c, d) = g
    return a * d - b * c


def row_action(rows: RowPair, g) -> RowPair:
    """Left action of a 2x2 matrix on the row pair: rows of g . L."""
    (g00, g01), (g10, g11) = g
    new_mu = tuple(g00 * a + g01 * b for a, b in zip(rows.mu, rows.nu))
    new_nu = tuple(g10 * a + g11 * b for a, b in zip(rows.mu, rows.nu))
    return RowPair(new_mu, new_nu)


class InvarianceReport(NamedTuple):
    max_abs_squared: Scalar  # worst |Omega_after - Omega_before|^2
    worst: Optional[tuple]  # (s, i, j) of the worst deviation


def unimodular_invariance(state: MultiQubitState, g, tol=None) -> InvarianceReport:
    """Check that a det-1 row action leaves every flattening minor unchanged.

    Raises NotUnimodular unless det(g) = 1 (exactly, or within tol on the
    float backend).  Returns the worst |Omega_after - Omega_before|.
    """
    backend = state.backend
    if tol is None:
        tol = 0 if backend is Backend.EXACT else DEFAULT_FLOAT_TOL
    det = det2x2(g)
    if not approx_zero(det - one(backend), tol):
        raise NotUnimodular(f"det(g) = {det}, expected 1")
    worst_abs2 = zero(backend).re
    worst = None
    for s in range(1, state.m + 1):
        rows = RowPair.from_flattening(flatten(state, s))
        before = pair_minors(rows.mu, rows.nu)
        acted = row_action(rows, g)
        after = pair_minors(acted.mu, acted.nu)
        for eb, ea in zip(before, after):
            d = ea.omega - eb.omega
            abs2 = d.re * d.re + d.im * d.im
            if abs2 > worst_abs2:
                worst_abs2 = abs2
                worst = (s, eb.i, eb.j)
    return InvarianceReport(Scalar(worst_abs2, zero(backend).im, backend), worst)
