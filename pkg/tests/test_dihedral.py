import itertools

import pytest
from hypothesis import given, strategies as st

from dihedral_kinematics.dihedral import (
    ConfigPoint,
    IncompatibleOrderError,
    M,
    R,
    act,
    cayley_table,
    coset_decomposition,
    enumerate_group,
    identity,
    inverse,
    multiply,
    parse_element,
    stabilizer,
)


@st.composite
def elements(draw, n=None):
    n = draw(st.integers(2, 15)) if n is None else n
    kind = draw(st.sampled_from([R, M]))
    return kind(draw(st.integers(0, n - 1)), n)


@st.composite
def triples(draw):
    n = draw(st.integers(2, 15))
    return tuple(draw(elements(n)) for _ in range(3))


def test_multiply_examples():
    assert multiply(R(2, 3), R(2, 3)) == R(1, 3)
    assert multiply(M(1, 7), M(1, 7)) == R(0, 7)
    assert multiply(M(2, 5), R(1, 5)) == M(1, 5)
    assert R(1, 4) * M(2, 4) == M(3, 4)
    assert M(1, 4) * M(3, 4) == R(2, 4)


def test_multiply_rejects_mismatched_orders():
    with pytest.raises(IncompatibleOrderError):
        multiply(R(0, 3), R(0, 4))
    with pytest.raises(IncompatibleOrderError):
        act(R(0, 3), ConfigPoint(0, 4))


def test_inverse_examples():
    assert inverse(R(1, 4)) == R(3, 4)
    assert inverse(M(3, 4)) == M(3, 4)
    assert inverse(R(0, 2)) == R(0, 2)


def test_act_examples():
    assert act(R(2, 5), ConfigPoint(4, 5)) == ConfigPoint(1, 5)
    # coset oracle: M_0 . R_2 lies in the coset t_m {R_0, M_0} with t_m = R_3
    prod = M(0, 5) * R(2, 5)
    dec = coset_decomposition(5)
    m = next(i for i, c in enumerate(dec.cosets()) if prod in c)
    assert dec.representatives[m] == R(3, 5)
    assert act(M(0, 5), ConfigPoint(2, 5)) == ConfigPoint(3, 5)


def test_enumerate_group():
    assert enumerate_group(2) == [R(0, 2), R(1, 2), M(0, 2), M(1, 2)]
    assert len(enumerate_group(3)) == 6
    with pytest.raises(ValueError):
        enumerate_group(1)


def test_coset_decomposition():
    assert coset_decomposition(3).representatives == (R(0, 3), R(1, 3), R(2, 3))
    assert coset_decomposition(2).cosets() == [frozenset({R(0, 2), M(0, 2)}), frozenset({R(1, 2), M(1, 2)})]
    for n in range(2, 9):
        assert coset_decomposition(n).representatives[0] == identity(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_associativity_exhaustive(n):
    G = enumerate_group(n)
    for a, b, c in itertools.product(G, repeat=3):
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n", range(2, 9))
def test_identity_inverse_and_order(n):
    G = enumerate_group(n)
    e = identity(n)
    assert len(set(G)) == 2 * n
    for g in G:
        assert g * e == g == e * g
        assert g * inverse(g) == e == inverse(g) * g
    # R_1 has order exactly n
    powers = [R(0, n)]
    for _ in range(n):
        powers.append(powers[-1] * R(1, n))
    assert powers[n] == e and e not in powers[1:n]


@pytest.mark.parametrize("n", range(2, 9))
def test_action_transitive_and_stabilizer(n):
    G = enumerate_group(n)
    for p, q in itertools.product(range(n), repeat=2):
        assert any(act(g, ConfigPoint(p, n)) == ConfigPoint(q, n) for g in G)
    stab = {g for g in G if act(g, ConfigPoint(0, n)) == ConfigPoint(0, n)}
    assert stab == set(stabilizer(n))


def test_d2_is_abelian_and_d3_is_not():
    t2 = cayley_table(2)
    assert all(t2[i][j] == t2[j][i] for i in range(4) for j in range(4))
    t3 = cayley_table(3)
    assert any(t3[i][j] != t3[j][i] for i in range(6) for j in range(6))


@given(triples())
def test_associativity_property(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@given(elements(), st.integers(0, 100))
def test_action_axiom(g, i):
    p = ConfigPoint(i % g.order, g.order)
    assert act(g, act(inverse(g), p)) == p


@given(elements(), elements())
def test_action_is_compatible_with_product(g, h):
    if g.order != h.order:
        return
    for i in range(g.order):
        p = ConfigPoint(i, g.order)
        assert act(g * h, p) == act(g, act(h, p))


@given(elements())
def test_mirrors_are_involutions(g):
    if g.is_mirror:
        assert g * g == identity(g.order)


def test_parse_element():
    assert parse_element("R3", 4) == R(3, 4)
    assert parse_element("M0", 4) == M(0, 4)
    for bad in ("X9", "R", "R4", "m1", ""):
        with pytest.raises(ValueError):
            parse_element(bad, 4)


def test_element_validation():
    with pytest.raises(ValueError):
        ConfigPoint(5, 5)
    with pytest.raises(ValueError):
        R(0, 1)
