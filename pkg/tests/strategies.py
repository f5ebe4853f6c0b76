import itertools

from hypothesis import strategies as st

from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext import whitehead_utils
from cohen_ext import presentation_utils
from cohen_ext.presentation_utils import CohenPresentation, ConjugateFactor

# Every group of order <= 10 used by the property suites
small_group_names = ['C1', 'C2', 'C3', 'C4', 'V4', 'C5', 'C6', 'D6', 'C7', 'D8', 'C8', 'C9', 'D10', 'C10']

groups = st.sampled_from(small_group_names).map(group_utils.named_group)


def elements(group, bound=3):
    return st.lists(
        st.integers(-bound, bound), min_size=group.order, max_size=group.order
    ).map(lambda c: ring_utils.GroupRingElement(group, c))


def sparse_elements(group, max_terms=4, bound=2):
    terms = st.tuples(st.integers(-bound, bound), st.integers(0, group.order - 1))
    return st.lists(terms, max_size=max_terms).map(lambda t: ring_utils.element_from_terms(group, t))


group_and_element = groups.flatmap(lambda g: st.tuples(st.just(g), elements(g)))
group_and_pair = groups.flatmap(lambda g: st.tuples(st.just(g), elements(g), elements(g)))


def matrices(group, n):
    return st.lists(
        st.lists(sparse_elements(group), min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: ring_utils.GroupRingMatrix(group, rows))


@st.composite
def invertible_matrices(draw, group=None, max_n=2, max_moves=4):
    """ Products of elementary moves applied to the identity. """

    if group is None:
        group = draw(groups)
    n = draw(st.integers(1, max_n))
    x = ring_utils.matrix_identity(group, n)
    for _ in range(draw(st.integers(0, max_moves))):
        kind = draw(st.sampled_from(['scale', 'swap', 'add'] if n > 1 else ['scale']))
        i = draw(st.integers(0, n - 1))
        if kind == 'scale':
            move = whitehead_utils.ScaleRow(i, draw(st.sampled_from([1, -1])), draw(st.integers(0, group.order - 1)))
        else:
            j = draw(st.integers(0, n - 1).filter(lambda j: j != i))
            if kind == 'swap':
                move = whitehead_utils.SwapRows(i, j)
            else:
                move = whitehead_utils.AddRow(i, j, draw(sparse_elements(group, max_terms=2, bound=1)))
        x = whitehead_utils.apply_move(x, move)
    return x


@st.composite
def admissible_presentations(draw, group=None, max_n=2):
    """ presentation_from_matrix of an invertible matrix, factors shuffled. """

    x = draw(invertible_matrices(group=group, max_n=max_n))
    P = presentation_utils.presentation_from_matrix(x.group, x)
    for i, r in enumerate(P.relators):
        order = draw(st.permutations(list(range(len(r)))))
        P = presentation_utils.permute_factors(P, i, order)
    return P


def all_relators(base, n, length, conjugators=None, signs=(1, -1)):
    conjugators = range(base.order) if conjugators is None else conjugators
    alphabet = [ConjugateFactor(g, j, s) for g in conjugators for j in range(n) for s in signs]
    return itertools.product(alphabet, repeat=length)


def single_relator(base, factors):
    return CohenPresentation(base, 1, [factors])
