import pytest
import numpy as np
from hypothesis import given, settings, strategies as st

from cohen_ext import group_utils
from cohen_ext import word_utils
from cohen_ext.common_utils import InvalidPresentation, SearchCapExceeded
from cohen_ext.group_utils import Exceeded

from tests import strategies


def _pres(names, relators):
    return word_utils.parse_presentation(names, relators)


def test_cyclic_order():
    table = group_utils.coset_enumerate(_pres(['g'], ['g^5']), 100)
    assert table.order == 5
    assert group_utils.check_group_law(table)


def test_killed_generator():
    table = group_utils.coset_enumerate(_pres(['x'], ['x']), 10)
    assert table.order == 1


def test_dihedral_order():
    table = group_utils.coset_enumerate(_pres(['g', 'h'], ['g^5', 'h^2', 'h g h g']), 100)
    assert table.order == 10
    assert group_utils.check_group_law(table)


def test_budget_exceeded():
    # C5 * Z is infinite
    result = group_utils.coset_enumerate(_pres(['g', 'x'], ['g^5']), 200)
    assert isinstance(result, Exceeded)
    assert result.budget == 200


def test_other_enumeration_errors_propagate(monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError('unrelated failure')

    monkeypatch.setattr(group_utils, 'coset_enumeration_r', broken)
    with pytest.raises(ValueError, match='unrelated failure'):
        group_utils.coset_enumerate(_pres(['g'], ['g^5']), 200)


def test_canonical_order():
    table = group_utils.coset_enumerate(_pres(['g'], ['g^5']))
    # BFS tries g before g^-1
    assert [table.element_name(i) for i in range(5)] == ['e', 'g', 'g^-1', 'g^2', 'g^-2']


def test_deterministic_relabelling():
    a = group_utils.coset_enumerate(_pres(['g', 'h'], ['g^5', 'h^2', 'h g h g']))
    b = group_utils.coset_enumerate(_pres(['g', 'h'], ['h g h g', 'g^5', 'h^2']))
    assert np.array_equal(a.mult, b.mult)


def test_word_to_element():
    c5 = group_utils.named_group('C5')
    assert group_utils.word_to_element(c5, word_utils.FreeWord()) == 0
    assert c5.element('g^3 g^3') == c5.element('g')

    d10 = group_utils.named_group('D10')
    assert d10.element('h g h') == d10.element('g^-1')


def test_power_and_order():
    c5 = group_utils.named_group('C5')
    g = c5.element('g')
    assert c5.power(g, 5) == 0
    assert c5.power(g, -1) == c5.inv(g)
    assert c5.element_order(g) == 5
    assert c5.element_order(0) == 1


@pytest.mark.parametrize('name, order', [
    ('C1', 1), ('C7', 7), ('D6', 6), ('D10', 10), ('V4', 4), ('S3', 6), ('S4', 24), ('S5', 120),
    ('A4', 12), ('A5', 60)
])
def test_named_groups(name, order):
    table = group_utils.named_group(name)
    assert table.order == order
    assert group_utils.check_group_law(table)


def test_named_group_errors():
    for name in ['D5', 'X3', 'C', 'C0', 'D3', 'D0', 'V5', 'S-1', 7]:
        with pytest.raises(InvalidPresentation):
            group_utils.named_group(name)


@pytest.mark.parametrize('name, parsed', [
    ('S5', ('S', 5)), ('A4', ('A', 4)), ('C12', ('C', 12)), ('D10', ('D', 10)), ('V4', ('V', 4))
])
def test_parse_group_name(name, parsed):
    assert group_utils.parse_group_name(name) == parsed


def test_table_from_permutations():
    # The 3-cycle generates C3
    table = group_utils.table_from_permutations([[1, 2, 0]], ['c'])
    assert table.order == 3
    assert group_utils.check_group_law(table)


@given(strategies.groups)
def test_canonical_words_evaluate(table):
    for i, w in enumerate(table.canonical_words):
        assert group_utils.word_to_element(table, w) == i
    assert table.inverse[0] == 0


def test_homomorphism_counts():
    c5 = _pres(['g'], ['g^5'])
    assert len(group_utils.find_homomorphisms(c5, group_utils.named_group('S5'))) == 25
    assert len(group_utils.find_homomorphisms(c5, group_utils.named_group('C1'))) == 1

    d10 = word_utils.dihedral_presentation(5)
    assert len(group_utils.find_homomorphisms(d10, group_utils.named_group('C2'))) == 2


def test_surjections():
    c5 = _pres(['g'], ['g^5'])
    target = group_utils.named_group('C5')
    images = group_utils.exists_surjection(c5, target)
    assert images == (target.element('g'),)
    assert group_utils.exists_surjection(c5, group_utils.named_group('C2')) is None


def test_hom_cap():
    free = _pres(['a', 'b'], [])
    with pytest.raises(SearchCapExceeded):
        group_utils.find_homomorphisms(free, group_utils.named_group('S4'), cap=100)


@settings(max_examples=50, deadline=None)
@given(strategies.groups, st.lists(st.integers(0, 1000), max_size=3))
def test_subgroup_generated_is_closed(table, raw):
    elements = [r % table.order for r in raw]
    sub = set(group_utils.subgroup_generated(table, elements))
    assert 0 in sub
    for a in sub:
        for b in sub:
            assert table.mul(a, b) in sub


@pytest.mark.parametrize('names, relators, torsion, rank', [
    (['g'], ['g^5'], (5,), 0),
    (['g', 'h'], ['g^5', 'h^2', 'h g h g'], (2,), 0),
    (['a', 'b'], ['a^2', 'b^2', 'a b a^-1 b^-1'], (2, 2), 0),
    (['a', 'b'], ['a^4 b^6'], (2,), 1),
    (['g', 'x'], ['g^5'], (5,), 1),
])
def test_abelian_invariants(names, relators, torsion, rank):
    assert group_utils.abelian_invariants(_pres(names, relators)) == (torsion, rank)


@given(strategies.groups)
def test_abelian_order_divides_order(table):
    order = group_utils.abelian_order(table.presentation)
    assert order is not None
    assert table.order % order == 0


@pytest.mark.parametrize('name', ['C{}'.format(n) for n in range(1, 13)] + ['V4'])
def test_abelian_order_equals_order(name):
    table = group_utils.named_group(name)
    assert table.order == group_utils.abelian_order(table.presentation)


@pytest.mark.parametrize('names, relators, order', [
    (['a', 'b'], ['a^2', 'b^3', 'a b a^-1 b^-1'], 6),
    (['a', 'b'], ['a^4', 'b^6', 'a b a^-1 b^-1'], 24),
])
def test_abelian_presentation_orders_agree(names, relators, order):
    pres = _pres(names, relators)
    assert group_utils.coset_enumerate(pres).order == order
    assert group_utils.abelian_order(pres) == order
