"""Dense complex matrix helpers, closed-form spectral data and matrix functions.

Matrices are plain ``numpy`` complex arrays, row/column ``i`` corresponding to
the coset representative R_i. No general eigensolver is used: every spectral
decomposition needed here is known in closed form (DFT basis for circulants,
``(V +- I)/2`` for involutions).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

DEFAULT_TOL = 1e-10

ScalarFunction = Callable[[complex], complex]
# f alone, or [f, f', f'', ...] when a degenerate eigenvalue needs derivatives
FunctionWithDerivatives = Union[ScalarFunction, Sequence[ScalarFunction]]


class NotAnInvolutionError(ValueError):
    pass


class BranchDomainError(ValueError):
    """A scalar function (or a needed derivative) is undefined at an eigenvalue."""

    def __init__(self, eigenvalue: complex, reason: str = ""):
        self.eigenvalue = eigenvalue
        msg = f"function undefined at eigenvalue {eigenvalue!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


def default_tol(n: int) -> float:
    return DEFAULT_TOL * n


def _check_square(A: np.ndarray) -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    return A.shape[0]


def _check_same_shape(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u, v> = sum_i conj(u_i) v_i (antilinear in the first slot)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def multiply(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[-1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} @ {B.shape}")
    return A @ B


def adjoint(A: np.ndarray) -> np.ndarray:
    return np.conj(A).T


def scalar_multiply(c: complex, A: np.ndarray) -> np.ndarray:
    return c * np.asarray(A, dtype=complex)


def add(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    _check_same_shape(A, B)
    return A + B


def max_norm_diff(A: np.ndarray, B: np.ndarray) -> float:
    """Entrywise max |A - B|."""
    A = np.asarray(A)
    B = np.asarray(B)
    _check_same_shape(A, B)
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(A - B)))


def unitarity_defect(A: np.ndarray) -> float:
    n = _check_square(A)
    return max_norm_diff(A @ adjoint(A), eye(n))


def is_unitary(A: np.ndarray, tol: float | None = None) -> bool:
    n = _check_square(A)
    tol = default_tol(n) if tol is None else tol
    return unitarity_defect(A) <= tol


def is_hermitian(A: np.ndarray, tol: float | None = None) -> bool:
    n = _check_square(A)
    tol = default_tol(n) if tol is None else tol
    return max_norm_diff(A, adjoint(A)) <= tol


def rank(P: np.ndarray, tol: float = 1e-8) -> int:
    """Rank of an (approximate) orthogonal projector, read off its trace."""
    r = round(float(np.trace(P).real))
    if abs(np.trace(P).real - r) > tol:
        raise ValueError(f"trace {np.trace(P)} is not close to an integer; not a projector")
    return r


# -- DFT basis ---------------------------------------------------------------


def _check_index(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"index {k} out of range [0, {n})")


def root_of_unity(n: int, k: int) -> complex:
    return cmath.exp(2j * math.pi * k / n)


def dft_eigenvector(n: int, k: int) -> np.ndarray:
    """Normalised eigenvector |k> of the cyclic shift, laid out as
    (lambda^{n-1}, lambda^{n-2}, ..., lambda, 1)/sqrt(n) with lambda = e^{2 pi i k/n}.
    """
    _check_index(n, k)
    powers = np.arange(n - 1, -1, -1)
    # reduce the exponent mod n before exponentiating to keep phases exact-ish
    return np.exp(2j * np.pi * ((k * powers) % n) / n) / math.sqrt(n)


def circulant_projector(n: int, k: int) -> np.ndarray:
    """(P_k)_{lm} = e^{2 pi i k (m - l)/n} / n."""
    _check_index(n, k)
    idx = np.arange(n)
    diff = (k * (idx[None, :] - idx[:, None])) % n
    return np.exp(2j * np.pi * diff / n) / n


# -- spectral data -----------------------------------------------------------


@dataclass
class SpectralData:
    eigenvalues: list[complex]
    multiplicities: list[int]
    projectors: list[np.ndarray] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]

    def reconstruct(self) -> np.ndarray:
        return sum(lam * P for lam, P in zip(self.eigenvalues, self.projectors))

    def validation_errors(self, A: np.ndarray | None = None) -> dict[str, float]:
        """Max-norm deviation for each defining identity of a spectral decomposition."""
        n = self.dim
        I = eye(n)
        errs = {
            "completeness": max_norm_diff(sum(self.projectors), I),
            "multiplicity_sum": float(abs(sum(self.multiplicities) - n)),
        }
        idem = orth = rk = 0.0
        for j, P in enumerate(self.projectors):
            idem = max(idem, max_norm_diff(P @ P, P))
            rk = max(rk, abs(float(np.trace(P).real) - self.multiplicities[j]))
            for l, Q in enumerate(self.projectors):
                if l != j:
                    orth = max(orth, float(np.max(np.abs(P @ Q))))
        errs["idempotence"] = idem
        errs["orthogonality"] = orth
        errs["rank"] = rk
        if len(set(self.eigenvalues)) != len(self.eigenvalues):
            errs["distinct"] = math.inf
        if A is not None:
            errs["reconstruction"] = max_norm_diff(self.reconstruct(), A)
        return errs

    def is_valid(self, A: np.ndarray | None = None, tol: float = 1e-10) -> bool:
        return all(v <= tol for v in self.validation_errors(A).values())


def merge_spectrum(
    eigenvalues: Sequence[complex], projectors: Sequence[np.ndarray], tol: float = 1e-9
) -> SpectralData:
    """Collapse equal eigenvalues (within ``tol``), summing their projectors.

    Order of first appearance is preserved.
    """
    vals: list[complex] = []
    mults: list[int] = []
    projs: list[np.ndarray] = []
    for lam, P in zip(eigenvalues, projectors):
        r = rank(P)
        for i, mu in enumerate(vals):
            if abs(mu - lam) <= tol:
                projs[i] = projs[i] + P
                mults[i] += r
                break
        else:
            vals.append(complex(lam))
            mults.append(r)
            projs.append(np.array(P, dtype=complex))
    return SpectralData(vals, mults, projs)


def involution_projectors(V: np.ndarray, tol: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(P_{+1}, P_{-1}) = ((V + I)/2, -(V - I)/2) for an involution V."""
    n = _check_square(V)
    tol = default_tol(n) if tol is None else tol
    I = eye(n)
    dev = max_norm_diff(V @ V, I)
    if dev > tol:
        raise NotAnInvolutionError(f"V @ V != I (max deviation {dev:.3g} > tol {tol:.3g})")
    return (V + I) / 2, -(V - I) / 2


def involution_spectrum(V: np.ndarray, tol: float | None = None) -> SpectralData:
    """Spectral data of an involution; eigenvalues with zero multiplicity are dropped."""
    plus, minus = involution_projectors(V, tol)
    vals, mults, projs = [], [], []
    for lam, P in ((1.0 + 0j, plus), (-1.0 + 0j, minus)):
        r = rank(P)
        if r:
            vals.append(lam)
            mults.append(r)
            projs.append(P)
    return SpectralData(vals, mults, projs)


# -- matrix functions ----------------------------------------------------------


def _as_derivatives(f: FunctionWithDerivatives) -> list[ScalarFunction]:
    if callable(f):
        return [f]
    return list(f)


def _evaluate(fn: ScalarFunction, lam: complex) -> complex:
    try:
        val = complex(fn(lam))
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise BranchDomainError(lam, str(exc)) from exc
    if not cmath.isfinite(val):
        raise BranchDomainError(lam, "non-finite value")
    return val


def lagrange_sylvester(f: FunctionWithDerivatives, spec: SpectralData, A: np.ndarray) -> np.ndarray:
    """f(A) = sum_j sum_{k<q_j} f^(k)(lambda_j)/k! (A - lambda_j I)^k P_j.

    ``f`` is either a callable or a sequence ``[f, f', f'', ...]``. Derivative
    terms are only evaluated when ``(A - lambda_j I) P_j`` is not already zero,
    so diagonalisable inputs need ``f`` alone.
    """
    n = _check_square(A)
    derivs = _as_derivatives(f)
    I = eye(n)
    scale = max(1.0, float(np.max(np.abs(A))))
    out = np.zeros((n, n), dtype=complex)
    for lam, q, P in zip(spec.eigenvalues, spec.multiplicities, spec.projectors):
        out += _evaluate(derivs[0], lam) * P
        if q == 1:
            continue
        shifted = A - lam * I
        term = shifted @ P
        if np.max(np.abs(term)) <= 1e-12 * n * scale:
            continue  # semisimple eigenvalue: all higher terms vanish
        for k in range(1, q):
            if k >= len(derivs):
                raise BranchDomainError(lam, f"derivative of order {k} required but not supplied")
            out += _evaluate(derivs[k], lam) / math.factorial(k) * term
            term = shifted @ term
    return out


def log_on_branch(z: complex, branch_start: float = 0.0) -> complex:
    """ln z with arg z taken in [branch_start, branch_start + 2 pi)."""
    if z == 0:
        raise ValueError("log of zero")
    theta = cmath.phase(z)
    theta = (theta - branch_start) % (2 * math.pi) + branch_start
    # snap the top edge back onto the half-open interval
    if theta >= branch_start + 2 * math.pi:
        theta -= 2 * math.pi
    return complex(math.log(abs(z)), theta)


def expm_spectral(A: np.ndarray, spec: SpectralData) -> np.ndarray:
    return lagrange_sylvester(cmath.exp, spec, A)
