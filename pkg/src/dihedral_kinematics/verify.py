"""Full invariant sweep for one n, as a list of auditable verdicts.

Each verdict carries the measured max-norm deviation and the tolerance it was
judged against; ``passed`` is exactly ``deviation <= tol``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import coherent, kinematics, linalg
from .dihedral import M, R, enumerate_group, identity, inverse, multiply
from .kinematics import Rep

# default tolerance per check family; a user --tol overrides all of them
EXACT_TOL = 1e-12
EXP_TOL = 1e-10
RESOLUTION_TOL = 1e-9
WITNESS_SPREAD = 1e-6


@dataclass
class Verdict:
    name: str
    deviation: float
    tol: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tol)

    def as_dict(self) -> dict:
        d = {"check": self.name, "pass": self.passed, "max_deviation": float(self.deviation), "tol": self.tol}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Suite:
    tol: float | None = None
    verdicts: list[Verdict] = field(default_factory=list)

    def add(self, name: str, deviation: float, default_tol: float, note: str = "") -> Verdict:
        v = Verdict(name, float(deviation), default_tol if self.tol is None else self.tol, note)
        self.verdicts.append(v)
        return v

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _max(values: Iterable[float]) -> float:
    return max(values, default=0.0)


# -- group -----------------------------------------------------------------------


def group_axiom_deviations(n: int) -> dict[str, float]:
    """Exact checks; each deviation is the number of violating cases."""
    G = enumerate_group(n)
    e = identity(n)
    closure = sum(1 for a in G for b in G if (a * b) not in G)
    assoc = sum(1 for a, b, c in itertools.product(G, repeat=3) if (a * b) * c != a * (b * c))
    ident = sum(1 for a in G if a * e != a or e * a != a)
    inv = sum(1 for a in G if a * inverse(a) != e or inverse(a) * a != e)
    rot_order = 0 if all(multiply(R(1, n), R(k, n)) != e for k in range(n - 1)) else 1
    return {
        "closure": float(closure),
        "associativity": float(assoc),
        "identity": float(ident),
        "inverse": float(inv),
        "rotation_generator_order": float(rot_order),
        "group_order": float(abs(len(G) - 2 * n)),
    }


def group_checks(suite: Suite, n: int) -> None:
    for name, dev in group_axiom_deviations(n).items():
        suite.add(f"group.{name}", dev, 0.0, "count of violations")


# -- kinematics -------------------------------------------------------------------


def representation_checks(suite: Suite, n: int, rep: Rep) -> None:
    tag = rep.value
    G = enumerate_group(n)
    oracle = _max(
        linalg.max_norm_diff(kinematics.induce_rep(rep.irrep, g), kinematics.rep_closed_form(rep, g)) for g in G
    )
    suite.add(f"{tag}.induced_vs_closed_form", oracle, 0.0, "exact entrywise agreement")

    report = kinematics.verify_imprimitivity(rep, n)
    suite.add(f"{tag}.unitarity", report.unitarity_deviation, EXACT_TOL)
    suite.add(f"{tag}.homomorphism", report.homomorphism_deviation, EXACT_TOL, f"{report.pairs_checked} pairs")
    suite.add(f"{tag}.imprimitivity_covariance", report.covariance_deviation, EXACT_TOL)

    # character difference on reflections witnesses V1 !~ V2
    diff = max(abs(np.trace(kinematics.rep_closed_form(Rep.V1, M(k, n)))
                   - np.trace(kinematics.rep_closed_form(Rep.V2, M(k, n)))) for k in range(n))
    suite.add(f"{tag}.inequivalence_witness", 0.0 if diff > 0.5 else 1.0, 0.0,
              "max |tr V1(M_k) - tr V2(M_k)| > 0")


def spectral_checks(suite: Suite, n: int, rep: Rep) -> None:
    tag = rep.value
    rot = 0.0
    for k in range(n):
        A = kinematics.rep_closed_form(rep, R(k, n))
        spec = kinematics.rotation_spectrum(n, k)
        rot = max(rot, _max(spec.validation_errors(A).values()))
        expected = {(j * k) % n for j in range(n)}
        got = {round((np.angle(lam) / (2 * math.pi) * n)) % n for lam in spec.eigenvalues}
        if got != expected:
            rot = math.inf
    suite.add(f"{tag}.rotation_spectra", rot, EXP_TOL)

    mult = 0.0
    proj = 0.0
    for k in range(n):
        V = kinematics.rep_closed_form(rep, M(k, n))
        plus, minus = linalg.involution_projectors(V)
        expected = kinematics.mirror_spectrum(n, k)
        # V_2 swaps the +-1 eigenspaces of V_1
        if rep is Rep.V2:
            plus, minus = minus, plus
        mult = max(mult, abs(linalg.rank(plus) - expected.plus_multiplicity),
                   abs(linalg.rank(minus) - expected.minus_multiplicity))
        proj = max(proj, linalg.max_norm_diff(plus @ plus, plus), linalg.max_norm_diff(minus @ minus, minus),
                   linalg.max_norm_diff(plus + minus, linalg.eye(n)))
    suite.add(f"{tag}.mirror_multiplicities", float(mult), 0.0, "projector ranks vs parity rules")
    suite.add(f"{tag}.mirror_projectors", proj, EXACT_TOL)


def momentum_checks(suite: Suite, n: int) -> None:
    P = kinematics.momentum_operator(n)
    suite.add("momentum.self_adjoint", linalg.max_norm_diff(P, linalg.adjoint(P)), EXACT_TOL)
    suite.add("momentum.log_branch_oracle", linalg.max_norm_diff(kinematics.momentum_from_log(n), P), EXP_TOL)
    rec = _max(
        linalg.max_norm_diff(kinematics.momentum_exponential(n, k), kinematics.rep_closed_form(Rep.V1, R(k, n)))
        for k in range(n)
    )
    suite.add("momentum.exp_reconstruction", rec, EXP_TOL, "exp(-i k P) = V1(R_k)")


def parity_checks(suite: Suite, n: int, rep: Rep) -> None:
    worst = 0.0
    for k in range(n):
        V = kinematics.rep_closed_form(rep, M(k, n))
        gen = kinematics.parity_generator(rep, n, k)
        spec = linalg.involution_spectrum(V)
        gen_spec = linalg.SpectralData([(math.pi / 2) * (lam - 1) for lam in spec.eigenvalues],
                                       spec.multiplicities, spec.projectors)
        expd = linalg.lagrange_sylvester(lambda z: np.exp(-1j * z), gen_spec, gen)
        worst = max(worst, linalg.max_norm_diff(expd, V))
        worst = max(worst, linalg.max_norm_diff(kinematics.parity_generator_from_log(rep, n, k), gen))
    suite.add(f"{rep.value}.parity_exp_reconstruction", worst, EXP_TOL, "exp(-i P_{M_k}) = V(M_k)")


# -- coherent states --------------------------------------------------------------


def vacuum_checks(suite: Suite, n: int) -> None:
    norm = _max(abs(np.linalg.norm(coherent.vacuum_components(n, k)) - 1) for k in range(n))
    suite.add("vacuum.normalization", norm, EXACT_TOL)
    eig = _max(coherent.eigen_relation_deviation(n, k) for k in range(n))
    suite.add("vacuum.eigen_relation", eig, EXP_TOL, "exp(2 pi Q/n) V1(R_1)|0>^(k) = lambda_k |0>^(k)")


def coherent_checks(suite: Suite, n: int, rep: Rep) -> None:
    tag = rep.value
    I = linalg.eye(n)
    res = rot_part = mir_part = 0.0
    consistency = v2_sign = unit = 0.0
    for k in range(n):
        res = max(res, linalg.max_norm_diff(coherent.resolution_of_unity(n, k, rep), 2 * n * I))
        rot_part = max(rot_part, linalg.max_norm_diff(coherent.resolution_of_unity(n, k, rep, "rotations"), n * I))
        mir_part = max(mir_part, linalg.max_norm_diff(coherent.resolution_of_unity(n, k, rep, "mirrors"), n * I))
        for lab in coherent.weyl_labels(n, rep):
            s = coherent.coherent_state(lab, k)
            d = coherent.coherent_state_direct(lab, k)
            consistency = max(consistency, float(np.max(np.abs(s.components - d.components))))
            unit = max(unit, abs(np.linalg.norm(s.components) - 1))
            if rep is Rep.V2 and lab.g.is_mirror:
                v1 = coherent.coherent_components(coherent.WeylLabel(lab.a, lab.g, Rep.V1), k)
                v2_sign = max(v2_sign, float(np.max(np.abs(s.components + v1))))
    suite.add(f"{tag}.resolution_of_unity", res, RESOLUTION_TOL, f"sum over {2 * n * n} states = {2 * n}*I")
    suite.add(f"{tag}.resolution_rotations", rot_part, EXP_TOL, f"= {n}*I")
    suite.add(f"{tag}.resolution_mirrors", mir_part, EXP_TOL, f"= {n}*I")
    suite.add(f"{tag}.coherent_formula_vs_product", consistency, EXACT_TOL)
    suite.add(f"{tag}.coherent_unit_norm", unit, EXACT_TOL)
    if rep is Rep.V2:
        suite.add("V2.mirror_states_sign", v2_sign, 0.0, "V2 mirror state = -V1 mirror state")

    ov = 0.0
    for k in range(n):
        direct = coherent.gram_matrix(n, k, rep)
        closed = coherent.overlap_kernel_closed_form(n, k, rep)
        ov = max(ov, linalg.max_norm_diff(direct, closed))
    suite.add(f"{tag}.overlap_closed_form", ov, EXACT_TOL)

    prob = inv = 0.0
    for g in enumerate_group(n):
        closed = np.array([coherent.position_probability_closed_form(j, g) for j in range(n)])
        profiles = [
            coherent.position_probabilities(coherent.coherent_state(coherent.WeylLabel(a, g, rep), k))
            for a in range(n) for k in range(n)
        ]
        prob = max(prob, _max(float(np.max(np.abs(p - closed))) for p in profiles))
        inv = max(inv, _max(float(np.max(np.abs(p - profiles[0]))) for p in profiles))
    suite.add(f"{tag}.position_probability_closed_form", prob, EXP_TOL)
    suite.add(f"{tag}.position_probability_invariance", inv, EXACT_TOL, "independent of a and k")


def commutation_checks(suite: Suite, n: int) -> None:
    rot = mir = 0.0
    spread = 0.0
    for a in range(n):
        for m in range(n):
            got = coherent.column_multipliers(coherent.commutation_defect(a, m, n, mirror=False))
            rot = max(rot, float(np.max(np.abs(got - coherent.commutation_multiplier_closed_form(a, m, n, False)))))
            got = coherent.column_multipliers(coherent.commutation_defect(a, m, n, mirror=True))
            mir = max(mir, float(np.max(np.abs(got - coherent.commutation_multiplier_closed_form(a, m, n, True)))))
            spread = max(spread, float(np.max(np.abs(got - got[0]))))
    suite.add("weyl.rotation_multiplier_constant", rot, EXACT_TOL, "e^{2 pi i a m/n}")
    suite.add("weyl.mirror_multiplier_closed_form", mir, EXACT_TOL, "e^{2 pi i a (m-2k)/n}")
    if n >= 3:
        suite.add("weyl.non_projectivity_witness", max(0.0, WITNESS_SPREAD - spread), 0.0,
                  f"max column spread of mirror multipliers = {spread:.6g} (> {WITNESS_SPREAD:g} required)")

    # W(a,R_p) W(b,R_q) = c W(a+b, R_{p+q}) with |c| = 1, for all n^4 rotation label pairs
    W = np.array([[coherent.weyl_operator(coherent.WeylLabel(a, R(p, n))) for p in range(n)] for a in range(n)])
    prod = np.einsum("apij,bqjk->apbqik", W, W, optimize=True)
    idx = np.arange(n)
    tgt = W[(idx[:, None, None, None] + idx[None, None, :, None]) % n,
            (idx[None, :, None, None] + idx[None, None, None, :]) % n]
    # targets are monomial: compare on their support, require zeros elsewhere
    rows = np.argmax(np.abs(tgt), axis=-2)[..., None, :]
    on_prod = np.take_along_axis(prod, rows, axis=-2)[..., 0, :]
    on_tgt = np.take_along_axis(tgt, rows, axis=-2)[..., 0, :]
    ratio = on_prod / on_tgt
    support = np.abs(tgt) > 0.5
    off = float(np.max(np.abs(np.where(support, 0, prod))))
    spread = float(np.max(np.abs(ratio - ratio[..., :1])))
    proj = max(spread, off, float(np.max(np.abs(np.abs(ratio) - 1))))
    suite.add("weyl.rotation_projective_relation", proj, EXACT_TOL)


def run(n: int, reps: Iterable[Rep | str] = (Rep.V1, Rep.V2), tol: float | None = None) -> Suite:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    reps = [Rep.parse(r) for r in reps]
    suite = Suite(tol)
    group_checks(suite, n)
    momentum_checks(suite, n)
    vacuum_checks(suite, n)
    commutation_checks(suite, n)
    for rep in reps:
        representation_checks(suite, n, rep)
        spectral_checks(suite, n, rep)
        parity_checks(suite, n, rep)
        coherent_checks(suite, n, rep)
    return suite
