"""The two systems of imprimitivity (V_l, E) on Z_n with symmetry group D_n.

V_1 and V_2 are induced from the trivial and alternating irreps of the
stabiliser Z_2 = {R_0, M_0}. Both are built twice: literally from the coset
condition (``induce_rep``) and from the closed delta formulas
(``rep_closed_form``); the two must agree exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import linalg
from .dihedral import (
    DihedralElement,
    M,
    R,
    act_on_site,
    coset_decomposition,
    enumerate_group,
    inverse,
    stabilizer,
)


class StabilizerIrrep(enum.Enum):
    T1 = "T1"  # trivial: +-1 -> 1
    T2 = "T2"  # alternating: +1 -> 1, -1 -> -1

    def __call__(self, h: DihedralElement) -> int:
        if h.index != 0:
            raise ValueError(f"{h} is not in the stabiliser {{R0, M0}}")
        if h.is_rotation or self is StabilizerIrrep.T1:
            return 1
        return -1


class Rep(enum.Enum):
    V1 = "V1"
    V2 = "V2"

    @property
    def irrep(self) -> StabilizerIrrep:
        return StabilizerIrrep.T1 if self is Rep.V1 else StabilizerIrrep.T2

    @classmethod
    def parse(cls, text: str | "Rep") -> "Rep":
        if isinstance(text, Rep):
            return text
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown representation {text!r}; expected V1 or V2") from None


# -- projection-valued measure -----------------------------------------------


@dataclass(frozen=True)
class ProjectionMeasure:
    dim: int

    def atom(self, i: int) -> np.ndarray:
        if not 0 <= i < self.dim:
            raise ValueError(f"site {i} out of range for n={self.dim}")
        E = np.zeros((self.dim, self.dim), dtype=complex)
        E[i, i] = 1.0
        return E

    def __call__(self, sites: Iterable[int]) -> np.ndarray:
        """E(S) = sum of atoms over the (deduplicated) subset S."""
        E = np.zeros((self.dim, self.dim), dtype=complex)
        for i in set(sites):
            E += self.atom(i)
        return E


def standard_pvm(n: int) -> ProjectionMeasure:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return ProjectionMeasure(n)


# -- induced representations ------------------------------------------------


def induce_rep(irrep: StabilizerIrrep, g: DihedralElement) -> np.ndarray:
    """Induced representation matrix from the coset condition.

    Entry (i, j) is T(h) when t_i^{-1} g t_j = h lies in {R_0, M_0}, else 0,
    tested literally for every pair with t_m = R_m.
    """
    n = g.order
    reps = coset_decomposition(n).representatives
    H = set(stabilizer(n))
    V = np.zeros((n, n), dtype=complex)
    for i, ti in enumerate(reps):
        left = inverse(ti) * g
        for j, tj in enumerate(reps):
            h = left * tj
            if h in H:
                V[i, j] = irrep(h)
    return V


@lru_cache(maxsize=4096)
def _closed_form_cached(rep: Rep, kind_is_rotation: bool, k: int, n: int) -> np.ndarray:
    V = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    if kind_is_rotation:
        V[(cols + k) % n, cols] = 1.0  # delta_{i, j+k}
    else:
        sign = 1.0 if rep is Rep.V1 else -1.0
        V[(k - cols) % n, cols] = sign  # delta_{i, k-j}
    V.setflags(write=False)
    return V


def rep_closed_form(rep: Rep | str, g: DihedralElement) -> np.ndarray:
    """V_1(R_k)_{ij} = delta_{i,j+k}, V_1(M_k)_{ij} = delta_{i,k-j}; V_2 flips mirrors."""
    rep = Rep.parse(rep)
    return _closed_form_cached(rep, g.is_rotation, g.index, g.order).copy()


def representation(rep: Rep | str, g: DihedralElement) -> np.ndarray:
    return rep_closed_form(rep, g)


@dataclass
class SystemOfImprimitivity:
    rep: Rep
    dim: int
    measure: ProjectionMeasure = field(init=False)

    def __post_init__(self):
        self.rep = Rep.parse(self.rep)
        self.measure = standard_pvm(self.dim)

    def V(self, g: DihedralElement) -> np.ndarray:
        if g.order != self.dim:
            raise ValueError(f"element of D_{g.order} used with n={self.dim}")
        return rep_closed_form(self.rep, g)


@dataclass
class ImprimitivityReport:
    rep: Rep
    n: int
    tol: float
    covariance_deviation: float
    homomorphism_deviation: float
    unitarity_deviation: float
    pairs_checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(self.covariance_deviation, self.homomorphism_deviation, self.unitarity_deviation)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol


def verify_imprimitivity(rep: Rep | str, n: int, tol: float = 1e-12) -> ImprimitivityReport:
    """Exhaustive check of covariance V(g)E(r_i)V(g)^{-1} = E(g.r_i),
    the homomorphism property over all ordered pairs, and unitarity.
    Failures are collected, not raised.
    """
    soi = SystemOfImprimitivity(Rep.parse(rep), n)
    G = enumerate_group(n)
    mats = {g: soi.V(g) for g in G}
    failures: list[str] = []

    unit = 0.0
    for g, Vg in mats.items():
        d = linalg.unitarity_defect(Vg)
        unit = max(unit, d)
        if d > tol:
            failures.append(f"unitarity {g}: {d:.3g}")

    cov = 0.0
    for g, Vg in mats.items():
        Vinv = linalg.adjoint(Vg)
        for i in range(n):
            d = linalg.max_norm_diff(Vg @ soi.measure.atom(i) @ Vinv, soi.measure.atom(act_on_site(g, i)))
            cov = max(cov, d)
            if d > tol:
                failures.append(f"covariance {g} r{i}: {d:.3g}")

    hom = 0.0
    pairs = 0
    for g, Vg in mats.items():
        for h, Vh in mats.items():
            d = linalg.max_norm_diff(Vg @ Vh, mats[g * h])
            hom = max(hom, d)
            pairs += 1
            if d > tol:
                failures.append(f"homomorphism {g}*{h}: {d:.3g}")

    return ImprimitivityReport(soi.rep, n, tol, cov, hom, unit, pairs, failures)


# -- observables ------------------------------------------------------------------


def position_operator(n: int) -> np.ndarray:
    """Q = sum_k k E(r_k) = diag(0, 1, ..., n-1)."""
    E = standard_pvm(n)
    return sum(k * E.atom(k) for k in range(n))


def momentum_operator(n: int) -> np.ndarray:
    """Closed-form momentum matrix generating the rotations, exp(-i P) = V_1(R_1).

    Off-diagonal (2 pi/n)/(1 - e^{2 pi i (m-l)/n}); diagonal -pi (n-1)/n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    idx = np.arange(n)
    d = (idx[None, :] - idx[:, None]) % n
    P = np.empty((n, n), dtype=complex)
    off = d != 0
    P[off] = (2 * math.pi / n) / (1 - np.exp(2j * math.pi * d[off] / n))
    P[~off] = -math.pi * (n - 1) / n
    return P


def momentum_from_log(n: int, branch_start: float = 0.0) -> np.ndarray:
    """i ln V_1(R_1) evaluated spectrally; arg of each eigenvalue in
    [branch_start, branch_start + 2 pi). The default branch reproduces
    :func:`momentum_operator`; other branches give other valid generators.
    """
    spec = rotation_spectrum(n, 1)
    V = rep_closed_form(Rep.V1, R(1, n))
    log = linalg.lagrange_sylvester(lambda z: linalg.log_on_branch(z, branch_start), spec, V)
    return 1j * log


def momentum_spectrum(n: int) -> linalg.SpectralData:
    """Spectral data of P: eigenvalue -2 pi j/n on the DFT projector P_j."""
    vals = [-2 * math.pi * j / n + 0j for j in range(n)]
    projs = [linalg.circulant_projector(n, j) for j in range(n)]
    return linalg.SpectralData(vals, [1] * n, projs)


def momentum_exponential(n: int, t: float) -> np.ndarray:
    """exp(-i t P) through Lagrange-Sylvester on the DFT projectors."""
    spec = momentum_spectrum(n)
    return linalg.lagrange_sylvester(lambda z: np.exp(-1j * t * z), spec, momentum_operator(n))


def rotation_spectrum(n: int, k: int) -> linalg.SpectralData:
    """Spectral data of V_1(R_k): eigenvalue e^{2 pi i jk/n} on P_j, with
    coinciding eigenvalues (gcd(k, n) > 1) merged.
    """
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range for n={n}")
    vals = [linalg.root_of_unity(n, (j * k) % n) for j in range(n)]
    projs = [linalg.circulant_projector(n, j) for j in range(n)]
    return linalg.merge_spectrum(vals, projs)


@dataclass(frozen=True)
class MirrorSpectrum:
    plus_multiplicity: int
    minus_multiplicity: int


def mirror_spectrum(n: int, k: int) -> MirrorSpectrum:
    """Multiplicities of +1/-1 for V_1(M_k) from the parity rules."""
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range for n={n}")
    if n % 2:
        return MirrorSpectrum((n + 1) // 2, (n - 1) // 2)
    if k % 2 == 0:
        # axis through two opposite vertices
        return MirrorSpectrum(n // 2 + 1, n // 2 - 1)
    return MirrorSpectrum(n // 2, n // 2)


def mirror_spectral_data(rep: Rep | str, n: int, k: int) -> linalg.SpectralData:
    return linalg.involution_spectrum(rep_closed_form(rep, M(k, n)))


def parity_generator(rep: Rep | str, n: int, k: int) -> np.ndarray:
    """(pi/2)(V(M_k) - I): i ln V(M_k) with i ln(-1) = -pi, so exp(-i P) = V(M_k)."""
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range for n={n}")
    V = rep_closed_form(rep, M(k, n))
    return (math.pi / 2) * (V - linalg.eye(n))


def parity_generator_from_log(rep: Rep | str, n: int, k: int, branch_start: float = 0.0) -> np.ndarray:
    """i ln V(M_k) by Lagrange-Sylvester; the default branch (arg in [0, 2 pi),
    as for the momentum) reproduces :func:`parity_generator`.
    """
    V = rep_closed_form(rep, M(k, n))
    spec = linalg.involution_spectrum(V)
    return 1j * linalg.lagrange_sylvester(lambda z: linalg.log_on_branch(z, branch_start), spec, V)
