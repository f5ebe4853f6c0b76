import pickle

import pytest
import numpy as np
from sympy import Matrix, zeros
from hypothesis import given, settings, strategies as st

from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext.common_utils import GroupMismatch, NotInvertible
from cohen_ext.ring_utils import GroupRingMatrix

from tests import strategies


def _elem(group, terms):
    return ring_utils.element_from_terms(group, [(c, group.element(w)) for c, w in terms])


@pytest.fixture
def c2():
    return group_utils.named_group('C2')


@pytest.fixture
def c5():
    return group_utils.named_group('C5')


@pytest.fixture
def d10():
    return group_utils.named_group('D10')


def rothaus_unit(d10):
    return _elem(d10, [
        (-1, ''), (1, 'g'), (-1, 'g^2'), (1, 'g^3'), (1, 'g^4'), (1, 'h'), (-2, 'h g'), (1, 'h g^2')
    ])


def test_multiplication_examples(c2, c5):
    u = _elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])
    assert u * ring_utils.ring_one(c5) == u
    assert ring_utils.ring_one(c5) * u == u

    a = _elem(c2, [(1, ''), (1, 'g')])
    b = _elem(c2, [(1, ''), (-1, 'g')])
    assert (a * b).is_zero()


def test_augmentation(c5, d10):
    assert ring_utils.augmentation(_elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])) == 1
    assert ring_utils.augmentation(ring_utils.ring_zero(c5)) == 0
    assert ring_utils.augmentation(rothaus_unit(d10)) == 1


def test_involution(c5):
    one = ring_utils.ring_one(c5)
    assert ring_utils.involution(one) == one
    g = ring_utils.group_element(c5, c5.element('g'))
    assert ring_utils.involution(g) == ring_utils.group_element(c5, c5.element('g^4'))


@given(strategies.group_and_pair)
def test_ring_axioms(data):
    group, a, b = data
    zero = ring_utils.ring_zero(group)
    assert a + b == b + a
    assert a + zero == a
    assert a - a == zero
    assert -(-a) == a
    assert 3 * a == a + a + a
    assert ring_utils.augmentation(a * b) == ring_utils.augmentation(a) * ring_utils.augmentation(b)
    assert ring_utils.involution(a * b) == ring_utils.involution(b) * ring_utils.involution(a)


@given(strategies.groups.flatmap(
    lambda g: st.tuples(strategies.elements(g), strategies.elements(g), strategies.elements(g))))
def test_distributive_and_associative(data):
    a, b, c = data
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@pytest.mark.slow
@settings(max_examples=10000, deadline=None)
@given(strategies.group_and_pair)
def test_rho_is_homomorphism(data):
    _, a, b = data
    ra = ring_utils.regular_representation(a)
    rb = ring_utils.regular_representation(b)
    assert np.array_equal(ra.dot(rb), ring_utils.regular_representation(a * b))
    assert np.array_equal(ra + rb, ring_utils.regular_representation(a + b))


def test_rho_examples(c2, c5):
    one = ring_utils.ring_one(c5)
    assert np.array_equal(ring_utils.regular_representation(one), np.eye(5, dtype=object))
    a = _elem(c2, [(1, ''), (1, 'g')])
    assert ring_utils.regular_representation(a).tolist() == [[1, 1], [1, 1]]


def _unit_oracle(a):
    """ Solve rho(a) b = e over Q and test integrality of b. """
    m = Matrix(ring_utils.regular_representation(a).tolist())
    if m.det() == 0:
        return False
    rhs = zeros(a.group.order, 1)
    rhs[0, 0] = 1
    sol = m.LUsolve(rhs)
    return all(x.is_integer for x in sol)


@pytest.mark.slow
@settings(max_examples=10000, deadline=None)
@given(strategies.groups.flatmap(lambda g: strategies.sparse_elements(g, max_terms=4, bound=2)))
def test_is_unit_matches_oracle(a):
    assert ring_utils.is_unit(a) == _unit_oracle(a)


@settings(max_examples=300, deadline=None)
@given(strategies.groups.flatmap(lambda g: strategies.sparse_elements(g, max_terms=3, bound=2)))
def test_is_unit_matches_oracle_quick(a):
    assert ring_utils.is_unit(a) == _unit_oracle(a)


def test_unit_examples(c2, c5, d10):
    assert ring_utils.is_unit(ring_utils.ring_one(c5))
    assert ring_utils.is_unit(rothaus_unit(d10))
    assert not ring_utils.is_unit(_elem(c2, [(1, ''), (1, 'g')]))
    assert ring_utils.is_unit(_elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')]))
    assert ring_utils.is_unit(-ring_utils.group_element(d10, 3))
    assert not ring_utils.is_unit(ring_utils.ring_zero(c5))


def test_integer_determinant():
    assert ring_utils.integer_determinant(np.array([[2, 1], [7, 4]], dtype=object)) == 1
    assert ring_utils.integer_determinant(np.zeros((0, 0), dtype=object)) == 1
    big = np.array([[10 ** 30, 1], [0, 10 ** 30]], dtype=object)
    assert ring_utils.integer_determinant(big) == 10 ** 60


def test_invert_examples(c5, d10):
    assert ring_utils.invert(ring_utils.matrix_identity(c5, 2)) == ring_utils.matrix_identity(c5, 2)

    u = _elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])
    v = ring_utils.unit_inverse(u)
    assert u * v == ring_utils.ring_one(c5)
    assert v * u == ring_utils.ring_one(c5)

    g = ring_utils.group_element(d10, d10.element('g'))
    h = ring_utils.group_element(d10, d10.element('h'))
    inv = ring_utils.invert(ring_utils.matrix_diag(d10, [g, h]))
    g_inv = ring_utils.group_element(d10, d10.element('g^-1'))
    assert inv == ring_utils.matrix_diag(d10, [g_inv, h])


def test_rothaus_inverse(d10):
    u = rothaus_unit(d10)
    assert u * ring_utils.unit_inverse(u) == ring_utils.ring_one(d10)


def test_invert_singular(c2):
    x = GroupRingMatrix(c2, [[_elem(c2, [(1, ''), (1, 'g')])]])
    assert not ring_utils.is_invertible(x)
    with pytest.raises(NotInvertible):
        ring_utils.invert(x)


@settings(max_examples=100, deadline=None)
@given(strategies.invertible_matrices())
def test_invert_round_trip(x):
    assert ring_utils.is_invertible(x)
    y = ring_utils.invert(x)
    identity = ring_utils.matrix_identity(x.group, x.n)
    assert x * y == identity
    assert y * x == identity


@given(strategies.groups.flatmap(lambda g: strategies.matrices(g, 2)))
def test_matrix_involution_is_involutive(x):
    assert ring_utils.matrix_involution(ring_utils.matrix_involution(x)) == x


@given(strategies.groups.flatmap(lambda g: st.tuples(strategies.matrices(g, 2), strategies.matrices(g, 2))))
def test_augmentation_matrix_is_multiplicative(data):
    x, y = data
    ax = Matrix(ring_utils.augmentation_matrix(x).tolist())
    ay = Matrix(ring_utils.augmentation_matrix(y).tolist())
    assert Matrix(ring_utils.augmentation_matrix(x * y).tolist()) == ax * ay


@settings(max_examples=30, deadline=None)
@given(strategies.invertible_matrices(max_n=1))
def test_torsion_difference(x):
    t = ring_utils.torsion_difference(x)
    assert t.n == 2 * x.n
    assert ring_utils.is_invertible(t)
    conj = ring_utils.matrix_involution(x)
    assert t[x.n, x.n] * conj[0, 0] == ring_utils.ring_one(x.group)


def test_group_mismatch(c2, c5):
    with pytest.raises(GroupMismatch):
        ring_utils.ring_one(c2) + ring_utils.ring_one(c5)
    with pytest.raises(GroupMismatch):
        GroupRingMatrix(c2, [[ring_utils.ring_one(c5)]])


def test_pickle(d10):
    u = rothaus_unit(d10)
    x = ring_utils.matrix_diag(d10, [u, u])
    assert pickle.loads(pickle.dumps(u)).coeffs == u.coeffs
    assert pickle.loads(pickle.dumps(x)).n == 2


def test_repr(c5):
    assert repr(_elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])) == '1 - g + g^2'
    assert repr(ring_utils.ring_zero(c5)) == '0'


@given(strategies.group_and_pair)
def test_rho_is_homomorphism_quick(data):
    _, a, b = data
    ra = ring_utils.regular_representation(a)
    rb = ring_utils.regular_representation(b)
    assert np.array_equal(ra.dot(rb), ring_utils.regular_representation(a * b))
