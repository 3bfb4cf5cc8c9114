"""Exact model of the dihedral group D_n acting on the cyclic chain Z_n.

Elements are ``(kind, index)`` pairs and every operation is modular integer
arithmetic. The canonical ordering (rotations R_0..R_{n-1}, then mirrors
M_0..M_{n-1}) fixes row/column conventions for every matrix built downstream.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class IncompatibleOrderError(ValueError):
    """Two objects belonging to different D_n were combined."""


class Kind(enum.Enum):
    ROTATION = "R"
    MIRROR = "M"


def _check_order(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


@dataclass(frozen=True)
class DihedralElement:
    kind: Kind
    index: int
    order: int

    def __post_init__(self):
        _check_order(self.order)
        if not 0 <= self.index < self.order:
            raise ValueError(f"index {self.index} out of range for n={self.order}")

    @property
    def is_rotation(self) -> bool:
        return self.kind is Kind.ROTATION

    @property
    def is_mirror(self) -> bool:
        return self.kind is Kind.MIRROR

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.is_rotation else 1, self.index)


def R(k: int, n: int) -> DihedralElement:
    return DihedralElement(Kind.ROTATION, k % n, n)


def M(k: int, n: int) -> DihedralElement:
    return DihedralElement(Kind.MIRROR, k % n, n)


def identity(n: int) -> DihedralElement:
    return R(0, n)


_ELEMENT_RE = re.compile(r"^([RM])(\d+)$")


def parse_element(text: str, n: int) -> DihedralElement:
    """Parse labels such as ``"R3"`` or ``"M0"``; the index must be < n."""
    m = _ELEMENT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed element {text!r}; expected R<k> or M<k>")
    k = int(m.group(2))
    if k >= n:
        raise ValueError(f"element index {k} out of range for n={n}")
    kind = Kind.ROTATION if m.group(1) == "R" else Kind.MIRROR
    return DihedralElement(kind, k, n)


def multiply(a: DihedralElement, b: DihedralElement) -> DihedralElement:
    if a.order != b.order:
        raise IncompatibleOrderError(f"cannot multiply elements of D_{a.order} and D_{b.order}")
    n = a.order
    if a.is_rotation:
        # R_i.R_j = R_{i+j}, R_i.M_j = M_{i+j}
        return DihedralElement(b.kind, (a.index + b.index) % n, n)
    # M_i.R_j = M_{i-j}, M_i.M_j = R_{i-j}
    kind = Kind.ROTATION if b.is_mirror else Kind.MIRROR
    return DihedralElement(kind, (a.index - b.index) % n, n)


def inverse(a: DihedralElement) -> DihedralElement:
    if a.is_mirror:
        return a
    return DihedralElement(Kind.ROTATION, (-a.index) % a.order, a.order)


@dataclass(frozen=True)
class ConfigPoint:
    site: int
    order: int

    def __post_init__(self):
        _check_order(self.order)
        if not 0 <= self.site < self.order:
            raise ValueError(f"site {self.site} out of range for n={self.order}")


def act(g: DihedralElement, p: ConfigPoint) -> ConfigPoint:
    """Left action on the vertices: R_k.r_i = r_{i+k}, M_k.r_i = r_{k-i}."""
    if g.order != p.order:
        raise IncompatibleOrderError(f"D_{g.order} cannot act on Z_{p.order}")
    n = g.order
    if g.is_rotation:
        return ConfigPoint((p.site + g.index) % n, n)
    return ConfigPoint((g.index - p.site) % n, n)


def act_on_site(g: DihedralElement, i: int) -> int:
    return act(g, ConfigPoint(i % g.order, g.order)).site


def enumerate_group(n: int) -> list[DihedralElement]:
    _check_order(n)
    return [R(k, n) for k in range(n)] + [M(k, n) for k in range(n)]


def element_position(g: DihedralElement) -> int:
    """Index of ``g`` in :func:`enumerate_group` order."""
    return g.index if g.is_rotation else g.order + g.index


def stabilizer(n: int) -> tuple[DihedralElement, DihedralElement]:
    """Stability subgroup of r_0, i.e. Z_2 = {R_0, M_0}."""
    return (R(0, n), M(0, n))


def cayley_table(n: int) -> list[list[DihedralElement]]:
    G = enumerate_group(n)
    return [[a * b for b in G] for a in G]


@dataclass(frozen=True)
class CosetDecomposition:
    representatives: tuple[DihedralElement, ...]

    @property
    def order(self) -> int:
        return self.representatives[0].order

    def cosets(self) -> list[frozenset[DihedralElement]]:
        H = stabilizer(self.order)
        return [frozenset(t * h for h in H) for t in self.representatives]

    def coset_index(self, g: DihedralElement) -> int:
        """Index m such that g lies in t_m.H."""
        # t_m.H = {R_m, M_m}, so the coset is labelled by the element index.
        return g.index


def coset_decomposition(n: int) -> CosetDecomposition:
    reps = tuple(R(m, n) for m in range(n))
    dec = CosetDecomposition(reps)
    cosets = dec.cosets()
    covered = set().union(*cosets)
    if len(covered) != 2 * n or sum(len(c) for c in cosets) != 2 * n:
        raise AssertionError(f"left cosets of Z_2 do not partition D_{n}")
    return dec
