"""
Cohen presentations: a finite base group pi, free generators x_1..x_n and n
relators, each a product of conjugates g x_j^(+-1) g^-1 with g in pi.

Internally generator indices are 0-based (x_j is index j - 1) and relator
rows are 0-based as well.
"""
from collections import namedtuple

from cohen_ext import ring_utils
from cohen_ext import whitehead_utils
from cohen_ext.common_utils import InvalidPresentation, NotAdmissible
from cohen_ext.ring_utils import GroupRingMatrix
from cohen_ext.word_utils import FreeWord


# g(i,k) x(i,k)^eps(i,k) g(i,k)^-1
ConjugateFactor = namedtuple('ConjugateFactor', ['conjugator', 'generator', 'sign'])


class CohenPresentation(object):
    """ The data P = (pi, x_1..x_n, r_1..r_n).

    :param base: (FiniteGroupTable) base group, with its presentation
    :param n: (int) number of extension generators and relators
    :param relators: (sequence) n lists of ConjugateFactor
    """

    def __init__(self, base, n, relators):
        self.base = base
        self.n = n
        self.relators = tuple(tuple(ConjugateFactor(*f) for f in r) for r in relators)

        if type(n) is not int or n <= 0:
            raise InvalidPresentation('n must be a positive integer, got {}'.format(n))
        if len(self.relators) != n:
            raise InvalidPresentation('Expected {} relators, got {}'.format(n, len(self.relators)))

        for i, r in enumerate(self.relators):
            for f in r:
                if type(f.conjugator) is not int or not 0 <= f.conjugator < base.order:
                    raise InvalidPresentation(
                        'Relator {}: conjugator {} is not an element of the base'.format(i, f.conjugator))
                if type(f.generator) is not int or not 0 <= f.generator < n:
                    raise InvalidPresentation(
                        'Relator {}: generator index {} out of range'.format(i, f.generator))
                if f.sign not in (1, -1):
                    raise InvalidPresentation('Relator {}: sign must be +1 or -1'.format(i))

    def relator_lengths(self):
        return tuple(len(r) for r in self.relators)

    def replace_relator(self, i, factors):
        relators = list(self.relators)
        relators[i] = tuple(factors)
        return CohenPresentation(self.base, self.n, relators)

    def __eq__(self, other):
        return (isinstance(other, CohenPresentation) and self.n == other.n and
                self.relators == other.relators and ring_utils.same_group(self.base, other.base))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.relators))

    def __repr__(self):
        return 'CohenPresentation(n={}, relators={})'.format(self.n, [
            ' '.join(format_factor(self.base, f) for f in r) or '1' for r in self.relators])


def format_factor(base, f):
    name = base.element_name(f.conjugator)
    x = 'x{}'.format(f.generator + 1) + ('' if f.sign == 1 else '^-1')
    if f.conjugator == 0:
        return x
    return '({} {} {}^-1)'.format(name, x, name)


def trivial_presentation(base, n):
    """ r_i = x_i for every i """
    return CohenPresentation(base, n, [[ConjugateFactor(0, i, 1)] for i in range(n)])


# ###### #
# MATRIX #
# ###### #

def matrix_coefficients(P):
    """ Integer coefficient vectors of X(P), as nested tuples. """

    order = P.base.order
    rows = []
    for r in P.relators:
        row = [[0] * order for _ in range(P.n)]
        for f in r:
            row[f.generator][f.conjugator] += f.sign
        rows.append(tuple(tuple(c) for c in row))
    return tuple(rows)


def matrix_of(P):
    """ X(P)_ij = sum over factors of r_i with x(i,k) = x_j of eps(i,k) g(i,k).

    :param P: (CohenPresentation) presentation
    :return: (GroupRingMatrix) n x n matrix over Z[pi]
    """

    base = P.base
    return GroupRingMatrix(base, [
        [ring_utils.GroupRingElement(base, c) for c in row]
        for row in matrix_coefficients(P)
    ])


def is_admissible(P):
    return ring_utils.is_invertible(matrix_of(P))


def presentation_from_matrix(base, x):
    """ A presentation P with X(P) = x.

    Entry x_ij = sum a_g g contributes |a_g| copies of the factor
    (g, j, sign(a_g)) to relator i; factors are ordered by column, then by
    canonical element order.

    :param base: (FiniteGroupTable) base group
    :param x: (GroupRingMatrix) square matrix over Z[base]
    :return: (CohenPresentation) presentation
    """

    if not ring_utils.same_group(base, x.group):
        raise InvalidPresentation('Matrix does not live over the given base group')

    relators = []
    for i in range(x.n):
        factors = []
        for j in range(x.n):
            for c, g in x[i, j].terms():
                sign = 1 if c > 0 else -1
                factors.extend([ConjugateFactor(g, j, sign)] * abs(c))
        relators.append(factors)
    return CohenPresentation(base, x.n, relators)


# ##################### #
# RELATOR TRANSFORMS    #
# ##################### #

def transform_relator(P, i, gamma, delta):
    """ Replace r_i by gamma r_i^delta gamma^-1.

    Row i of X(P) gets multiplied on the left by delta * gamma.

    :param P: (CohenPresentation) presentation
    :param i: (int) relator index
    :param gamma: (int) element of the base
    :param delta: (int) +1 or -1
    :return: (CohenPresentation) new presentation
    """

    base = P.base
    factors = P.relators[i]
    if delta == -1:
        factors = [ConjugateFactor(f.conjugator, f.generator, -f.sign) for f in reversed(factors)]
    elif delta != 1:
        raise InvalidPresentation('delta must be +1 or -1')

    factors = [ConjugateFactor(base.mul(gamma, f.conjugator), f.generator, f.sign) for f in factors]
    return P.replace_relator(i, factors)


def permute_factors(P, i, order):
    """ Reorder the factors of r_i; X(P) is unchanged. """

    factors = P.relators[i]
    if sorted(order) != list(range(len(factors))):
        raise InvalidPresentation('{} is not a permutation of the factors of r_{}'.format(order, i))
    return P.replace_relator(i, [factors[k] for k in order])


def rotate_relator(P, i, k):
    """ Cyclic rotation bringing factor k of r_i to the front (a conjugate of r_i). """

    factors = P.relators[i]
    return P.replace_relator(i, factors[k:] + factors[:k])


def relator_word(P, i):
    """ r_i spelled over y_1..y_l (base generators) followed by x_1..x_n.

    :param P: (CohenPresentation) presentation
    :param i: (int) relator index
    :return: (FreeWord) freely reduced word
    """

    offset = len(P.base.generator_names)
    w = FreeWord()
    for f in P.relators[i]:
        g = P.base.canonical_words[f.conjugator]
        w = w * g * FreeWord.generator(offset + f.generator, f.sign) * g.inverse()
    return w


# ############# #
# NORMALISATION #
# ############# #

def is_normalized(P):
    """ Every relator starts with the factor (e, i, +1). """
    return all(r and r[0] == ConjugateFactor(0, i, 1) for i, r in enumerate(P.relators))


def _has_matching(pattern, rows, cols):
    """ Kuhn's augmenting paths: can every row in rows be matched into cols? """

    match = {}

    def augment(r, seen):
        for c in cols:
            if pattern[r][c] and c not in seen:
                seen.add(c)
                if c not in match or augment(match[c], seen):
                    match[c] = r
                    return True
        return False

    return all(augment(r, set()) for r in rows)


def smallest_matching(pattern):
    """ Lexicographically smallest permutation sigma with pattern[i][sigma(i)].

    :param pattern: (list) n x n booleans
    :return: (list or None) sigma, or None if no perfect matching exists
    """

    n = len(pattern)
    sigma = []
    used = set()
    for i in range(n):
        for j in range(n):
            if j in used or not pattern[i][j]:
                continue
            rest_cols = [c for c in range(n) if c not in used and c != j]
            if _has_matching(pattern, list(range(i + 1, n)), rest_cols):
                sigma.append(j)
                used.add(j)
                break
        else:
            return None
    return sigma


def normalize(P):
    """ Bring P to the form x(i,1) = x_i, g(i,1) = e, eps(i,1) = 1.

    Relators are relabelled along a matching of the nonzero pattern of X(P);
    then each relator is rotated so that a factor of the matching generator
    comes first, inverted if that factor has sign -1, and conjugated so its
    conjugator becomes e. Rotations leave X(P) unchanged; the other steps are
    recorded as elementary moves.

    :param P: (CohenPresentation) admissible presentation
    :return: (CohenPresentation, WhiteheadCertificate) normal form and moves
        carrying X(P) to X(P')
    """

    x = matrix_of(P)
    if not ring_utils.is_invertible(x):
        raise NotAdmissible('Only admissible presentations can be normalised')

    pattern = [[not x[i, j].is_zero() for j in range(P.n)] for i in range(P.n)]
    sigma = smallest_matching(pattern)
    # An invertible integer representation has a nonzero term in its determinant expansion
    assert sigma is not None

    perm = [0] * P.n
    for i, j in enumerate(sigma):
        perm[j] = i
    moves = whitehead_utils.permutation_moves(perm)
    result = CohenPresentation(P.base, P.n, [P.relators[perm[j]] for j in range(P.n)])

    base = P.base
    for j in range(P.n):
        factors = result.relators[j]
        k = next(k for k, f in enumerate(factors) if f.generator == j)
        chosen = factors[k]
        if chosen == ConjugateFactor(0, j, 1) and k == 0:
            continue

        delta = chosen.sign
        if delta == -1:
            result = transform_relator(result, j, 0, -1)
            k = len(factors) - 1 - k
        result = rotate_relator(result, j, k)
        gamma = base.inv(chosen.conjugator)
        result = transform_relator(result, j, gamma, 1)
        if delta != 1 or gamma != 0:
            moves.append(whitehead_utils.ScaleRow(j, delta, gamma))

    return result, whitehead_utils.WhiteheadCertificate(moves)


def matrix_coefficients_of(x):
    """ Coefficient vectors of a matrix, comparable with matrix_coefficients(P). """
    return tuple(tuple(x[i, j].coeffs for j in range(x.n)) for i in range(x.n))
