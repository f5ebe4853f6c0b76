import pickle

import pytest
from hypothesis import given, strategies as st

from cohen_ext import word_utils
from cohen_ext.common_utils import InvalidPresentation
from cohen_ext.word_utils import FreeWord, GroupPresentation

letters = st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=8)
words = letters.map(FreeWord)


def test_free_reduction():
    w = FreeWord([(0, 2), (1, 1), (1, -1), (0, -2)])
    assert w.is_identity()
    assert FreeWord([(0, 1), (0, 1), (1, 0)]).letters == ((0, 2),)


@given(words)
def test_inverse(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()
    assert w.inverse().inverse() == w


@given(words, words, words)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words, st.integers(-3, 3))
def test_power_length(w, k):
    assert (w ** k) * (w ** -k) == FreeWord()


def test_conjugate():
    g = FreeWord.generator(0)
    x = FreeWord.generator(1)
    assert x.conjugate(g).letters == ((0, 1), (1, 1), (0, -1))


def test_parse_format():
    names = ['g', 'h']
    w = word_utils.parse_word('h g^-1 h', names)
    assert w.letters == ((1, 1), (0, -1), (1, 1))
    assert word_utils.format_word(w, names) == 'h g^-1 h'
    assert word_utils.parse_word('g*g*g', names) == FreeWord.generator(0, 3)
    assert word_utils.parse_word('e', names).is_identity()
    assert word_utils.parse_word('', names).is_identity()
    assert word_utils.format_word(FreeWord(), names) == ''


def test_parse_relation():
    names = ['g', 'h']
    w = word_utils.parse_word('h g h = g^-1', names)
    assert w == word_utils.parse_word('h g h g', names)


@given(words)
def test_parse_inverts_format(w):
    names = ['a', 'b', 'c']
    assert word_utils.parse_word(word_utils.format_word(w, names), names) == w


def test_parse_unknown_token():
    with pytest.raises(InvalidPresentation):
        word_utils.parse_word('g k', ['g'])
    with pytest.raises(InvalidPresentation):
        word_utils.parse_word('g = h = g', ['g', 'h'])


def test_presentation_validation():
    with pytest.raises(InvalidPresentation):
        GroupPresentation(['g', 'g'], [])
    with pytest.raises(InvalidPresentation):
        GroupPresentation(['e'], [])
    with pytest.raises(InvalidPresentation):
        GroupPresentation(['g'], [FreeWord.generator(1)])


def test_standard_presentations():
    assert word_utils.cyclic_presentation(5).relators == (FreeWord.generator(0, 5),)
    d10 = word_utils.dihedral_presentation(5)
    assert d10.generator_names == ('g', 'h')
    assert len(d10.relators) == 3


@given(words)
def test_pickle(w):
    assert pickle.loads(pickle.dumps(w)) == w


def test_exponent_sums_and_substitute():
    w = word_utils.parse_word('g h g^-3 h', ['g', 'h'])
    assert w.exponent_sums(2) == [-2, 2]
    images = [FreeWord.generator(1), FreeWord.generator(0)]
    assert w.substitute(images) == word_utils.parse_word('h g h^-3 g', ['g', 'h'])
