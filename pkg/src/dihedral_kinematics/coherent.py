"""Generalised Weyl operators over Z_n x D_n and the n coherent-state families.

W(a, g) = exp(2 pi i a Q / n) V(g); the coherent states are
|a, g>^(k) = W(a, g)|0>^(k) for each admissible vacuum k = 0..n-1.

Several quantities are computed along two independent routes (component
formulas vs. matrix products, closed-form overlap sums vs. inner products) so
that each can serve as the other's oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kinematics, linalg
from .dihedral import DihedralElement, M, R, enumerate_group
from .kinematics import Rep


def _phases(n: int, exponents: np.ndarray) -> np.ndarray:
    """e^{2 pi i e / n} with the integer exponent reduced mod n first."""
    return np.exp(2j * np.pi * (np.asarray(exponents) % n) / n)


def position_phase(a: int, n: int) -> np.ndarray:
    """exp(2 pi i a Q / n) = diag(1, e^{2 pi i a/n}, ..., e^{2 pi i a (n-1)/n})."""
    if not 0 <= a < n:
        raise ValueError(f"a={a} out of range for n={n}")
    return np.diag(_phases(n, a * np.arange(n)))


@dataclass(frozen=True)
class WeylLabel:
    a: int
    g: DihedralElement
    rep: Rep = Rep.V1

    def __post_init__(self):
        object.__setattr__(self, "rep", Rep.parse(self.rep))
        if not 0 <= self.a < self.g.order:
            raise ValueError(f"a={self.a} out of range for n={self.g.order}")

    @property
    def n(self) -> int:
        return self.g.order

    def __str__(self) -> str:
        return f"({self.a},{self.g})_{self.rep.value}"


def weyl_labels(n: int, rep: Rep | str = Rep.V1) -> Iterator[WeylLabel]:
    """All 2n^2 labels, a-major then canonical group order."""
    G = enumerate_group(n)
    for a in range(n):
        for g in G:
            yield WeylLabel(a, g, rep)


def weyl_operator(label: WeylLabel) -> np.ndarray:
    return position_phase(label.a, label.n) @ kinematics.rep_closed_form(label.rep, label.g)


# -- commutation diagnostics ---------------------------------------------------


def _exp_i_parity_generator(n: int, m: int) -> np.ndarray:
    """exp(+i P_{M_m}) by Lagrange-Sylvester on the generator's spectrum.

    P_{M_m} = (pi/2)(V - I) shares the +-1 eigenprojectors of V = V_1(M_m),
    with eigenvalues 0 and -pi.
    """
    V = kinematics.rep_closed_form(Rep.V1, M(m, n))
    inv = linalg.involution_spectrum(V)
    spec = linalg.SpectralData(
        [(math.pi / 2) * (lam - 1) for lam in inv.eigenvalues], inv.multiplicities, inv.projectors
    )
    gen = kinematics.parity_generator(Rep.V1, n, m)
    return linalg.lagrange_sylvester(lambda z: cmath.exp(1j * z), spec, gen)


def commutation_defect(a: int, m: int, n: int, mirror: bool = True) -> np.ndarray:
    """Entrywise ratio (D U)_{jk} / (U D)_{jk} with D = exp(2 pi i a Q/n).

    For ``mirror`` U = exp(i P_{M_m}); otherwise U = V_1(R_m), the rotation
    part of W(0, R_m). Entries where U vanishes are NaN.
    """
    if not (0 <= a < n and 0 <= m < n):
        raise ValueError(f"indices a={a}, m={m} out of range for n={n}")
    D = position_phase(a, n)
    U = _exp_i_parity_generator(n, m) if mirror else kinematics.rep_closed_form(Rep.V1, R(m, n))
    left = D @ U
    right = U @ D
    out = np.full((n, n), np.nan, dtype=complex)
    mask = np.abs(right) > 1e-12
    out[mask] = left[mask] / right[mask]
    return out


def commutation_multiplier_closed_form(a: int, m: int, n: int, mirror: bool = True) -> np.ndarray:
    """Predicted multiplier per column k.

    Rotations: the constant e^{2 pi i a m/n}. Mirrors: e^{2 pi i a (m - 2k)/n},
    which depends on the column and so rules out a projective relation.
    """
    k = np.arange(n)
    if mirror:
        return _phases(n, a * (m - 2 * k))
    return np.full(n, cmath.exp(2j * math.pi * ((a * m) % n) / n))


def column_multipliers(defect: np.ndarray) -> np.ndarray:
    """Collapse a defect matrix to one multiplier per column (each column of a
    (signed) permutation has exactly one nonzero entry)."""
    n = defect.shape[1]
    out = np.empty(n, dtype=complex)
    for k in range(n):
        col = defect[:, k]
        out[k] = col[~np.isnan(col)][0]
    return out


# -- vacua -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def vacuum_normalization(n: int) -> float:
    j = np.arange(n)
    return 1.0 / math.sqrt(float(np.sum(np.exp((2 * math.pi / n) * j * (j - n + 2)))))


def vacuum_eigenvalue(n: int, k: int) -> complex:
    return math.exp(math.pi * (n - 1) / n) * cmath.exp(2j * math.pi * k / n)


@dataclass(frozen=True)
class VacuumVector:
    n: int
    k: int
    components: np.ndarray

    @property
    def eigenvalue(self) -> complex:
        return vacuum_eigenvalue(self.n, self.k)


def vacuum_components(n: int, k: int) -> np.ndarray:
    """g_j = A_n e^{pi j (j - n + 2)/n} e^{-2 pi i j k/n}, j = 0..n-1."""
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range for n={n}")
    j = np.arange(n)
    return vacuum_normalization(n) * np.exp(math.pi * j * (j - n + 2) / n) * _phases(n, -j * k)


def vacuum(n: int, k: int) -> VacuumVector:
    return VacuumVector(n, k, vacuum_components(n, k))


def vacuum_operator(n: int, momentum_sign: int = -1) -> np.ndarray:
    """exp(2 pi Q/n) exp(momentum_sign * i P), the exponential built spectrally.

    With P the rotation generator (exp(-i P) = V_1(R_1)) the vacua above are
    eigenvectors for ``momentum_sign=-1``. ``momentum_sign=+1`` is the
    opposite orientation, exp(+i P) = V_1(R_1)^{-1}; for n >= 3 the vacua are
    not its eigenvectors (n = 2 coincides since R_1 is its own inverse).
    """
    if momentum_sign not in (-1, 1):
        raise ValueError("momentum_sign must be +1 or -1")
    growth = np.diag(np.exp(2 * math.pi * np.arange(n) / n))
    return growth @ kinematics.momentum_exponential(n, -momentum_sign)


def eigen_relation_deviation(n: int, k: int, momentum_sign: int = -1) -> float:
    """max |O|0> - lambda_k |0>| for O = :func:`vacuum_operator`."""
    v = vacuum_components(n, k)
    O = vacuum_operator(n, momentum_sign)
    return float(np.max(np.abs(O @ v - vacuum_eigenvalue(n, k) * v)))


# -- coherent states -------------------------------------------------------------


@dataclass(frozen=True)
class CoherentState:
    label: WeylLabel
    k: int
    components: np.ndarray

    @property
    def n(self) -> int:
        return self.label.n


def coherent_components(label: WeylLabel, k: int, vac: np.ndarray | None = None) -> np.ndarray:
    """Component formulas:
    R_m: e^{2 pi i a j/n} g_{j-m};  M_m: e^{2 pi i a j/n} g_{m-j};
    V_2 mirror states pick up an overall -1. ``vac`` may pass in the
    precomputed vacuum components for family k.
    """
    n, a, g = label.n, label.a, label.g
    if vac is None:
        vac = vacuum_components(n, k)
    j = np.arange(n)
    if g.is_rotation:
        return _phases(n, a * j) * vac[(j - g.index) % n]
    sign = -1.0 if label.rep is Rep.V2 else 1.0
    return sign * _phases(n, a * j) * vac[(g.index - j) % n]


def coherent_state(label: WeylLabel, k: int) -> CoherentState:
    return CoherentState(label, k, coherent_components(label, k))


def coherent_state_direct(label: WeylLabel, k: int) -> CoherentState:
    """Same state as :func:`coherent_state`, via the product W(a, g)|0>^(k)."""
    return CoherentState(label, k, weyl_operator(label) @ vacuum_components(label.n, k))


def coherent_family(n: int, k: int, rep: Rep | str = Rep.V1) -> list[CoherentState]:
    return [coherent_state(lab, k) for lab in weyl_labels(n, rep)]


def resolution_of_unity(n: int, k: int, rep: Rep | str = Rep.V1, subset: str = "all") -> np.ndarray:
    """Sum of |a,g><a,g| over the family, term by term in a-major label order.

    ``subset`` restricts g to "rotations" or "mirrors". Compensated (Kahan)
    accumulation is used for n > 64.
    """
    if subset not in ("all", "rotations", "mirrors"):
        raise ValueError(f"unknown subset {subset!r}")
    total = np.zeros((n, n), dtype=complex)
    comp = np.zeros((n, n), dtype=complex)
    kahan = n > 64
    vac = vacuum_components(n, k)
    for lab in weyl_labels(n, rep):
        if subset == "rotations" and not lab.g.is_rotation:
            continue
        if subset == "mirrors" and not lab.g.is_mirror:
            continue
        v = coherent_components(lab, k, vac)
        term = np.outer(v, v.conj())
        if kahan:
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
        else:
            total += term
    return total


# -- overlaps and probabilities ---------------------------------------------------


def _check_compatible(s1: CoherentState, s2: CoherentState) -> None:
    if s1.n != s2.n or s1.k != s2.k or s1.label.rep is not s2.label.rep:
        raise ValueError(
            f"overlap needs matching n, k and rep; got ({s1.n},{s1.k},{s1.label.rep.value})"
            f" vs ({s2.n},{s2.k},{s2.label.rep.value})"
        )


def overlap(s1: CoherentState, s2: CoherentState) -> complex:
    """<s1|s2>, antilinear in the first argument."""
    _check_compatible(s1, s2)
    return linalg.inner(s1.components, s2.components)


def overlap_closed_form(s1: CoherentState, s2: CoherentState) -> complex:
    """Finite-sum overlap formulas over the vacuum components.

    R/R, M/M and R/M are summed directly; M/R is the conjugate of R/M. In the
    V_2 kinematics a mixed R/M pair carries the extra -1 of the mirror state.
    """
    _check_compatible(s1, s2)
    n = s1.n
    g = vacuum_components(n, s1.k)
    j = np.arange(n)
    a, b = s1.label.a, s2.label.a
    x, y = s1.label.g, s2.label.g
    phase = _phases(n, j * (b - a))
    if x.is_mirror and y.is_rotation:
        return complex(np.conj(overlap_closed_form(s2, s1)))
    bra = g[(j - x.index) % n] if x.is_rotation else g[(x.index - j) % n]
    ket = g[(j - y.index) % n] if y.is_rotation else g[(y.index - j) % n]
    val = complex(np.sum(phase * np.conj(bra) * ket))
    if s1.label.rep is Rep.V2 and x.is_rotation and y.is_mirror:
        val = -val
    return val


def position_probability(j: int, s: CoherentState) -> float:
    if not 0 <= j < s.n:
        raise ValueError(f"j={j} out of range for n={s.n}")
    return float(abs(s.components[j]) ** 2)


def position_probabilities(s: CoherentState) -> np.ndarray:
    return np.abs(s.components) ** 2


def position_probability_closed_form(j: int, g: DihedralElement) -> float:
    """A_n^2 e^{(2 pi/n) d (d - n + 2)} with d = j - m (rotations) or m - j
    (mirrors), reduced mod n."""
    n = g.order
    d = (j - g.index) % n if g.is_rotation else (g.index - j) % n
    return vacuum_normalization(n) ** 2 * math.exp((2 * math.pi / n) * d * (d - n + 2))


def gram_matrix(n: int, k: int, rep: Rep | str = Rep.V1) -> np.ndarray:
    """All pairwise overlaps <s|t> of a family, rows/columns in label order."""
    vac = vacuum_components(n, k)
    S = np.array([coherent_components(lab, k, vac) for lab in weyl_labels(n, rep)])
    return S.conj() @ S.T


def overlap_kernel_closed_form(n: int, k: int, rep: Rep | str = Rep.V1) -> np.ndarray:
    """Vectorised finite-sum overlaps: <a,x|b,y> = sum_j e^{2 pi i j (b-a)/n}
    conj(G_x[j]) G_y[j], with G_x[j] = g_{j-p} for x = R_p and g_{p-j} for
    x = M_p, and the V_2 sign on mixed rotation/mirror pairs.
    """
    rep = Rep.parse(rep)
    g = vacuum_components(n, k)
    j = np.arange(n)
    G = enumerate_group(n)
    patterns = np.array([g[(j - x.index) % n] if x.is_rotation else g[(x.index - j) % n] for x in G])
    sign = np.ones(2 * n)
    if rep is Rep.V2:
        sign[n:] = -1.0
    a = np.arange(n)
    # phase[a, j] = e^{2 pi i a j/n}; the kernel factorises over (a, x) and (b, y)
    phase = _phases(n, np.outer(a, j))
    bra = (phase[:, None, :] * (sign[:, None] * patterns)[None, :, :]).reshape(-1, n)
    return np.einsum("pj,qj->pq", bra.conj(), bra)
