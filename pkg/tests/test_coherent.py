import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import expm

from dihedral_kinematics import coherent, linalg
from dihedral_kinematics.coherent import WeylLabel
from dihedral_kinematics.dihedral import M, R, enumerate_group
from dihedral_kinematics.kinematics import Rep, momentum_operator, position_operator, rep_closed_form


def oracle_vacuum(n, k):
    """Vacuum by direct summation, one component at a time."""
    raw = [math.exp(math.pi * j * (j - n + 2) / n) * cmath.exp(-2j * math.pi * j * k / n) for j in range(n)]
    norm = math.sqrt(sum(abs(z) ** 2 for z in raw))
    return np.array(raw) / norm


def test_weyl_operator_n2():
    np.testing.assert_allclose(coherent.weyl_operator(WeylLabel(1, R(1, 2))), [[0, 1], [-1, 0]], atol=1e-15)


def test_weyl_label_validation():
    with pytest.raises(ValueError):
        WeylLabel(3, R(0, 3))
    assert len(list(coherent.weyl_labels(3))) == 18


def test_vacuum_n2():
    expected = np.array([1, math.exp(math.pi / 2)]) / math.sqrt(1 + math.exp(math.pi))
    np.testing.assert_allclose(coherent.vacuum_components(2, 0), expected, atol=1e-14)


@pytest.mark.parametrize("n", range(2, 13))
def test_vacuum_matches_oracle(n):
    for k in range(n):
        v = coherent.vacuum(n, k)
        assert np.max(np.abs(v.components - oracle_vacuum(n, k))) < 1e-12
        assert abs(np.linalg.norm(v.components) - 1) < 1e-12
        assert v.eigenvalue == pytest.approx(math.exp(math.pi * (n - 1) / n) * cmath.exp(2j * math.pi * k / n))


@pytest.mark.parametrize("n", range(2, 13))
def test_vacuum_is_eigenvector_with_rotation_orientation(n):
    # oracle operator from scipy: e^{2 pi Q/n} e^{-i P} = e^{2 pi Q/n} V1(R1)
    O = expm(2 * math.pi * position_operator(n) / n) @ expm(-1j * momentum_operator(n))
    for k in range(n):
        v = oracle_vacuum(n, k)
        lam = coherent.vacuum_eigenvalue(n, k)
        assert np.max(np.abs(O @ v - lam * v)) <= 1e-10
        assert coherent.eigen_relation_deviation(n, k) <= 1e-10


def test_opposite_orientation_only_works_for_n2():
    assert coherent.eigen_relation_deviation(2, 1, momentum_sign=+1) <= 1e-10
    assert coherent.eigen_relation_deviation(3, 0, momentum_sign=+1) > 1


def test_commutation_defect_example():
    d = coherent.commutation_defect(1, 0, 3)
    mult = coherent.column_multipliers(d)
    assert mult[1] == pytest.approx(cmath.exp(-4j * math.pi / 3))


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_commutation_multipliers(n):
    for a in range(n):
        for m in range(n):
            # oracle: exp(i P_M) via scipy, then entrywise ratio on the support
            U = expm(1j * (math.pi / 2) * (rep_closed_form(Rep.V1, M(m, n)) - np.eye(n)))
            D = np.diag(np.exp(2j * math.pi * a * np.arange(n) / n))
            left, right = D @ U, U @ D
            cols = [left[np.argmax(np.abs(right[:, c])), c] / right[np.argmax(np.abs(right[:, c])), c]
                    for c in range(n)]
            closed = coherent.commutation_multiplier_closed_form(a, m, n, mirror=True)
            assert np.max(np.abs(np.array(cols) - closed)) < 1e-12
            got = coherent.column_multipliers(coherent.commutation_defect(a, m, n, mirror=False))
            assert np.max(np.abs(got - cmath.exp(2j * math.pi * a * m / n))) < 1e-12


def test_non_projectivity_witness():
    got = coherent.column_multipliers(coherent.commutation_defect(1, 0, 3))
    assert np.max(np.abs(got - got[0])) > 1e-6


def test_resolution_n2():
    assert linalg.max_norm_diff(coherent.resolution_of_unity(2, 0), 4 * np.eye(2)) < 1e-12


def test_resolution_n5_k3_v2():
    assert linalg.max_norm_diff(coherent.resolution_of_unity(5, 3, Rep.V2), 10 * np.eye(5)) < 1e-9


@pytest.mark.parametrize("n", range(2, 13))
def test_resolution_of_unity_all_k(n):
    for rep in Rep:
        for k in range(n):
            assert linalg.max_norm_diff(coherent.resolution_of_unity(n, k, rep), 2 * n * np.eye(n)) <= 1e-9
    for subset in ("rotations", "mirrors"):
        assert linalg.max_norm_diff(coherent.resolution_of_unity(n, 1 % n, Rep.V1, subset), n * np.eye(n)) <= 1e-9


def test_resolution_rejects_unknown_subset():
    with pytest.raises(ValueError):
        coherent.resolution_of_unity(3, 0, subset="half")


@pytest.mark.parametrize("n", range(2, 9))
def test_component_formulas_match_products(n):
    for k in range(n):
        for rep in Rep:
            for lab in coherent.weyl_labels(n, rep):
                s = coherent.coherent_state(lab, k)
                d = coherent.coherent_state_direct(lab, k)
                assert np.max(np.abs(s.components - d.components)) <= 1e-12


@pytest.mark.parametrize("n", range(2, 9))
def test_v2_mirror_states_are_negated(n):
    for k in range(n):
        for a in range(n):
            for m in range(n):
                s1 = coherent.coherent_components(WeylLabel(a, M(m, n), Rep.V1), k)
                s2 = coherent.coherent_components(WeylLabel(a, M(m, n), Rep.V2), k)
                np.testing.assert_array_equal(s2, -s1)
                r1 = coherent.coherent_components(WeylLabel(a, R(m, n), Rep.V1), k)
                r2 = coherent.coherent_components(WeylLabel(a, R(m, n), Rep.V2), k)
                np.testing.assert_array_equal(r1, r2)


def test_overlap_n3_example():
    g = oracle_vacuum(3, 0)
    s = coherent.coherent_state(WeylLabel(0, R(0, 3)), 0)
    t = coherent.coherent_state(WeylLabel(0, R(1, 3)), 0)
    expected = sum(np.conj(g[j]) * g[(j - 1) % 3] for j in range(3))
    assert abs(coherent.overlap(s, t) - expected) < 1e-14
    assert abs(coherent.overlap_closed_form(s, t) - expected) < 1e-14


def test_overlap_rejects_mismatch():
    s = coherent.coherent_state(WeylLabel(0, R(0, 3)), 0)
    with pytest.raises(ValueError):
        coherent.overlap(s, coherent.coherent_state(WeylLabel(0, R(0, 3)), 1))
    with pytest.raises(ValueError):
        coherent.overlap(s, coherent.coherent_state(WeylLabel(0, R(0, 4)), 0))
    with pytest.raises(ValueError):
        coherent.overlap(s, coherent.coherent_state(WeylLabel(0, R(0, 3), Rep.V2), 0))


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_overlap_kernel_matches_gram(n):
    for rep in Rep:
        for k in range(n):
            G = coherent.gram_matrix(n, k, rep)
            assert linalg.max_norm_diff(G, G.conj().T) < 1e-12
            assert linalg.max_norm_diff(coherent.overlap_kernel_closed_form(n, k, rep), G) < 1e-12


def test_position_probability_n2():
    s = coherent.coherent_state(WeylLabel(0, R(0, 2)), 0)
    assert coherent.position_probability(0, s) == pytest.approx(1 / (1 + math.exp(math.pi)), abs=1e-15)
    with pytest.raises(ValueError):
        coherent.position_probability(2, s)


@pytest.mark.parametrize("n", range(2, 13))
def test_position_probabilities_closed_form_and_invariance(n):
    for g in enumerate_group(n):
        ref = None
        closed = np.array([coherent.position_probability_closed_form(j, g) for j in range(n)])
        for rep in Rep:
            for k in range(n):
                for a in range(n):
                    p = coherent.position_probabilities(coherent.coherent_state(WeylLabel(a, g, rep), k))
                    assert np.max(np.abs(p - closed)) <= 1e-10
                    if ref is None:
                        ref = p
                    assert np.max(np.abs(p - ref)) <= 1e-12
        assert abs(closed.sum() - 1) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.data())
def test_overlap_hermitian_symmetry_property(n, data):
    rep = data.draw(st.sampled_from(list(Rep)))
    k = data.draw(st.integers(0, n - 1))
    G = enumerate_group(n)
    labs = [WeylLabel(data.draw(st.integers(0, n - 1)), data.draw(st.sampled_from(G)), rep) for _ in range(2)]
    s, t = (coherent.coherent_state(lab, k) for lab in labs)
    assert abs(coherent.overlap(s, t) - np.conj(coherent.overlap(t, s))) <= 1e-12
    assert abs(coherent.overlap(s, t) - coherent.overlap_closed_form(s, t)) <= 1e-12
    assert abs(coherent.overlap(s, t)) <= 1 + 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.data())
def test_weyl_operators_unitary_property(n, data):
    lab = WeylLabel(data.draw(st.integers(0, n - 1)), data.draw(st.sampled_from(enumerate_group(n))),
                    data.draw(st.sampled_from(list(Rep))))
    assert linalg.unitarity_defect(coherent.weyl_operator(lab)) <= 1e-12
