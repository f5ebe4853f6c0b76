"""
Finite groups realised as multiplication tables.

Tables come either from coset enumeration of a finite presentation over the
trivial subgroup, or from a set of generating permutations. In both cases the
elements are relabelled in canonical order: element 0 is the identity, the
rest follow a breadth first search of the Cayley graph that tries the
generators in declaration order and then their inverses.
"""
import functools
from collections import deque, namedtuple

import numpy as np

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.matrices.normalforms import smith_normal_form
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.fp_groups import FpGroup, coset_enumeration_r
from sympy.combinatorics.named_groups import SymmetricGroup, AlternatingGroup

from cohen_ext import constants
from cohen_ext import word_utils
from cohen_ext.common_utils import InvalidPresentation, SearchCapExceeded, vprint
from cohen_ext.word_utils import FreeWord


# Returned by coset_enumerate when the enumeration does not close in budget
Exceeded = namedtuple('Exceeded', ['budget', 'cosets_defined'])


class FiniteGroupTable(object):
    """ Finite group with a solved word problem.

    :param mult: (ndarray) order x order table, mult[i, j] = index of e_i e_j
    :param generator_images: (list) element index of each generator
    :param canonical_words: (list) FreeWord per element, in the generators
    :param generator_names: (list) generator symbols
    :param presentation: (GroupPresentation) defining presentation, if any
    :param name: (str) short identifier such as 'S5'
    """

    identity_index = 0

    def __init__(self, mult, generator_images, canonical_words, generator_names,
                 presentation=None, name='', cosets_defined=0):
        self.mult = np.array(mult, dtype=np.int64)
        self.mult.setflags(write=False)
        self.order = self.mult.shape[0]
        self.inverse = np.argmax(self.mult == 0, axis=1)
        self.inverse.setflags(write=False)
        self.generator_images = tuple(int(g) for g in generator_images)
        self.canonical_words = tuple(canonical_words)
        self.generator_names = tuple(generator_names)
        self.presentation = presentation
        self.name = name
        self.cosets_defined = cosets_defined

        if constants.DO_SANITY_CHECKS and self.order <= constants.MAX_LAW_CHECK_ORDER:
            assert check_group_law(self)
            for i, w in enumerate(self.canonical_words):
                assert word_to_element(self, w) == i

    def __eq__(self, other):
        return (isinstance(other, FiniteGroupTable) and
                self.generator_images == other.generator_images and
                np.array_equal(self.mult, other.mult))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.order, self.generator_images, self.mult.tobytes()))

    def __repr__(self):
        return 'FiniteGroupTable({}order={})'.format(
            self.name + ', ' if self.name else '', self.order)

    def element_name(self, i):
        return word_utils.format_word(self.canonical_words[i], self.generator_names) or 'e'

    def element(self, text):
        """ Element index of a word written in this group's generators. """
        return word_to_element(self, word_utils.parse_word(text, self.generator_names))

    def mul(self, a, b):
        return int(self.mult[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        result = 0
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k


# ################ #
# TABLE BUILDING   #
# ################ #

def _table_from_action(actions, generator_names, presentation=None, name='', cosets_defined=0):
    """ Build a canonical table out of the regular right action of the generators.

    :param actions: (list) one integer array per generator, point -> point * gen;
        point 0 is the identity and the action is simply transitive
    :return: (FiniteGroupTable) canonical table
    """

    num_points = len(actions[0]) if actions else 1
    inverse_actions = []
    for act in actions:
        inv = np.empty(num_points, dtype=np.int64)
        inv[act] = np.arange(num_points)
        inverse_actions.append(inv)
    moves = list(actions) + inverse_actions
    ngens = len(actions)

    # BFS: label[point] = canonical index
    label = -np.ones(num_points, dtype=np.int64)
    label[0] = 0
    order = [0]
    parent = [(-1, -1)]
    words = [FreeWord()]
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for m, move in enumerate(moves):
            q = int(move[p])
            if label[q] < 0:
                label[q] = len(order)
                order.append(q)
                parent.append((int(label[p]), m))
                sym = m % ngens
                exp = 1 if m < ngens else -1
                words.append(words[label[p]] * FreeWord.generator(sym, exp))
                queue.append(q)

    if len(order) != num_points:
        raise InvalidPresentation('Generator action is not transitive')

    # Relabelled moves: canonical index -> canonical index
    order_arr = np.array(order, dtype=np.int64)
    canon_moves = [label[move[order_arr]] for move in moves]

    # Column j of mult is right multiplication by element j, built along the BFS tree
    mult = np.empty((num_points, num_points), dtype=np.int64)
    mult[:, 0] = np.arange(num_points)
    for j in range(1, num_points):
        par, m = parent[j]
        mult[:, j] = canon_moves[m][mult[:, par]]

    generator_images = [int(label[act[0]]) for act in actions]

    return FiniteGroupTable(
        mult=mult,
        generator_images=generator_images,
        canonical_words=words,
        generator_names=generator_names,
        presentation=presentation,
        name=name,
        cosets_defined=cosets_defined
    )


def _to_sympy(pres):
    names = ', '.join('a{}'.format(i) for i in range(pres.num_generators))
    fg = free_group(names)
    free, gens = fg[0], fg[1:]

    relators = []
    for r in pres.relators:
        if r.is_identity():
            continue
        w = free.identity
        for sym, exp in r.letters:
            w = w * gens[sym] ** exp
        relators.append(w)

    return FpGroup(free, relators)


def coset_enumerate(pres, max_cosets=constants.COSET_BUDGET, name=''):
    """ Enumerate the cosets of the trivial subgroup of a finite presentation.

    Uses the HLT strategy of sympy. Output is renormalised to canonical order,
    so the result only depends on the presentation.

    :param pres: (GroupPresentation) presentation to enumerate
    :param max_cosets: (int) maximum number of working cosets
    :param name: (str) optional identifier for the resulting table
    :return: (FiniteGroupTable or Exceeded) table if the enumeration closes
    """

    if not isinstance(pres, word_utils.GroupPresentation):
        raise InvalidPresentation('Expected a GroupPresentation, got {!r}'.format(pres))
    if max_cosets <= 0:
        raise InvalidPresentation('Coset budget must be positive')

    if pres.num_generators == 0:
        return FiniteGroupTable([[0]], [], [FreeWord()], [], presentation=pres, name=name)

    fp = _to_sympy(pres)
    try:
        table = coset_enumeration_r(fp, [], max_cosets=max_cosets)
    except ValueError as e:
        if 'coset enumeration has defined more than' not in str(e):
            raise
        vprint('Coset enumeration exceeded {} cosets for {}'.format(max_cosets, pres))
        return Exceeded(budget=max_cosets, cosets_defined=max_cosets)

    cosets_defined = len(table.p)
    if not table.is_complete():
        return Exceeded(budget=max_cosets, cosets_defined=cosets_defined)
    table.compress()

    rows = np.array(table.table, dtype=np.int64)
    # Columns of the sympy table alternate generator, inverse
    actions = [rows[:, 2 * k] for k in range(pres.num_generators)]

    return _table_from_action(
        actions,
        pres.generator_names,
        presentation=pres,
        name=name,
        cosets_defined=cosets_defined
    )


def table_from_permutations(generators, generator_names, name=''):
    """ Build the table of the group generated by a list of permutations.

    :param generators: (list) permutations in array form
    :param generator_names: (list) generator symbols
    :param name: (str) identifier for the table
    :return: (FiniteGroupTable) canonical table
    """

    degree = len(generators[0]) if generators else 1
    perms = [tuple(int(i) for i in g) for g in generators]
    identity = tuple(range(degree))

    index = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for g in perms:
            # right action: apply p then g
            q = tuple(g[i] for i in p)
            if q not in index:
                index[q] = len(elements)
                elements.append(q)
                queue.append(q)

    actions = []
    for g in perms:
        actions.append(np.array([index[tuple(g[i] for i in p)] for p in elements], dtype=np.int64))

    return _table_from_action(actions, generator_names, name=name)


@functools.lru_cache(maxsize=None)
def parse_group_name(name):
    """ Split a group identifier into its kind and size.

    :param name: (str) identifier such as 'S5', 'D10' or 'V4'
    :return: (str, int) kind letter and number, ('V', 4) for V4
    """

    if type(name) is not str:
        raise InvalidPresentation('Unknown group identifier {!r}'.format(name))
    if name == 'V4':
        return 'V', 4
    kind, digits = name[:1], name[1:]
    if kind not in 'SACD' or not digits.isdigit() or int(digits) <= 0:
        raise InvalidPresentation('Unknown group identifier {}'.format(name))
    n = int(digits)
    if kind == 'D' and n % 2:
        raise InvalidPresentation('Dihedral groups have even order, got {}'.format(name))
    return kind, n


def named_group(name):
    """ Table of a group identified as S<n>, A<n>, C<n>, D<2n> or V4.

    Cyclic and dihedral groups carry their standard presentations, so they can
    serve as base groups. Symmetric and alternating groups are built from
    permutations and can only be used as targets.

    :param name: (str) identifier
    :return: (FiniteGroupTable) table
    """

    kind, n = parse_group_name(name)
    if kind == 'V':
        return coset_enumerate(word_utils.klein_presentation(), name=name)

    if kind == 'C':
        return coset_enumerate(word_utils.cyclic_presentation(n), name=name)

    if kind == 'D':
        return coset_enumerate(word_utils.dihedral_presentation(n // 2), name=name)

    if kind == 'S':
        group = SymmetricGroup(n)
    else:
        group = AlternatingGroup(n)

    gens = [p.array_form for p in group.generators]
    names = ['s{}'.format(i) for i in range(len(gens))]
    return table_from_permutations(gens, names, name=name)


# ########## #
# EVALUATION #
# ########## #

def word_to_element(table, w):
    """ Evaluate a word in the generators of the table.

    :param table: (FiniteGroupTable) group
    :param w: (FreeWord) word in the table's generators
    :return: (int) element index
    """

    return evaluate_word(table, w, table.generator_images)


def evaluate_word(table, w, images):
    """ Evaluate a word under an assignment of its symbols to elements.

    :param table: (FiniteGroupTable) target group
    :param w: (FreeWord) word
    :param images: (sequence) element index per symbol
    :return: (int) element index
    """

    mult = table.mult
    inverse = table.inverse
    e = 0
    for sym, exp in w.letters:
        if sym < 0 or sym >= len(images):
            raise InvalidPresentation('Symbol index {} out of range'.format(sym))
        g = images[sym]
        if exp < 0:
            g = inverse[g]
        for _ in range(abs(exp)):
            e = mult[e, g]
    return int(e)


def check_group_law(table):
    """ Exhaustively check associativity, identity and inverses.

    :param table: (FiniteGroupTable) group
    :return: (bool) True if mult is a group law
    """

    a = table.mult
    n = table.order
    idx = np.arange(n)

    if not (np.array_equal(a[0], idx) and np.array_equal(a[:, 0], idx)):
        return False
    if not (np.all(a[idx, table.inverse] == 0) and np.all(a[table.inverse, idx] == 0)):
        return False
    return bool(np.array_equal(a[a], a[:, a]))


def subgroup_generated(table, elements):
    """ Elements of the subgroup generated by a list of elements.

    :param table: (FiniteGroupTable) group
    :param elements: (iterable) generating element indices
    :return: (list) sorted element indices
    """

    gens = sorted(set(int(e) for e in elements))
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(table.mult[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


# ############### #
# HOMOMORPHISMS   #
# ############### #

def iter_homomorphisms(pres, target, cap=constants.HOM_SEARCH_CAP):
    """ Backtracking over generator images with relator pruning.

    A relator is checked as soon as all of its symbols are assigned. Images
    are tried in ascending element order, so the output order is fixed.

    :param pres: (GroupPresentation) source presentation
    :param target: (FiniteGroupTable) target group
    :param cap: (int) maximum number of partial assignments to visit
    :return: (generator) tuples of element indices, one per generator
    """

    ngens = pres.num_generators
    checks = [[] for _ in range(ngens)]
    for r in pres.relators:
        top = r.max_symbol()
        if top >= 0:
            checks[top].append(r)

    if ngens == 0:
        yield ()
        return

    images = [0] * ngens
    visited = 0
    stack = [0]
    # Iterative depth first search; stack[d] is the next image to try at depth d
    while stack:
        depth = len(stack) - 1
        candidate = stack[depth]
        if candidate == target.order:
            stack.pop()
            if stack:
                stack[-1] += 1
            continue

        visited += 1
        if visited > cap:
            raise SearchCapExceeded(
                'Homomorphism search onto {} visited more than {} assignments'.format(
                    target.name or target, cap))

        images[depth] = candidate
        if all(evaluate_word(target, r, images) == 0 for r in checks[depth]):
            if depth == ngens - 1:
                yield tuple(images)
                stack[depth] += 1
            else:
                stack.append(0)
        else:
            stack[depth] += 1


def find_homomorphisms(pres, target, cap=constants.HOM_SEARCH_CAP):
    """ All homomorphisms from a presented group to a finite group.

    :param pres: (GroupPresentation) source presentation
    :param target: (FiniteGroupTable) target group
    :param cap: (int) search cap
    :return: (list) generator image tuples
    """

    return list(iter_homomorphisms(pres, target, cap))


def exists_surjection(pres, target, cap=constants.HOM_SEARCH_CAP):
    """ First homomorphism whose image generates the target, if any.

    :param pres: (GroupPresentation) source presentation
    :param target: (FiniteGroupTable) target group
    :param cap: (int) search cap
    :return: (tuple or None) generator images of a surjection
    """

    for images in iter_homomorphisms(pres, target, cap):
        if len(subgroup_generated(target, images)) == target.order:
            return images
    return None


# ############## #
# ABELIANISATION #
# ############## #

def abelian_invariants(pres):
    """ Abelianisation of a presented group via Smith normal form.

    :param pres: (GroupPresentation) presentation
    :return: (tuple) sorted torsion invariants (each > 1) and free rank
    """

    ngens = pres.num_generators
    rows = [r.exponent_sums(ngens) for r in pres.relators if not r.is_identity()]
    if ngens == 0:
        return (), 0
    if not rows:
        return (), ngens

    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    rank = sum(1 for d in diagonal if d != 0)
    torsion = tuple(sorted(d for d in diagonal if d > 1))

    return torsion, ngens - rank


def abelian_order(pres):
    """ Order of the abelianisation, None if infinite. """

    torsion, free_rank = abelian_invariants(pres)
    if free_rank:
        return None
    order = 1
    for d in torsion:
        order *= d
    return order
