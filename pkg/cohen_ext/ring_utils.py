"""
Exact arithmetic in the integral group ring Z[pi] of a finite group and in
square matrices over it.

Invertibility is decided through the regular representation: an element
a acts on Z[pi] by left multiplication, giving an integer |pi| x |pi| matrix
rho(a) whose column g is the coefficient vector of a * g. A matrix over
Z[pi] is invertible exactly when the integer matrix assembled from these
blocks has determinant +1 or -1.
"""
import numpy as np

from sympy.polys.domains import ZZ, QQ
from sympy.polys.matrices import DomainMatrix

from cohen_ext import constants
from cohen_ext.common_utils import GroupMismatch, NotInvertible


def same_group(g, h):
    return g is h or g == h


class GroupRingElement(object):
    """ Element of Z[pi] as a dense vector of Python integers.

    :param group: (FiniteGroupTable) group
    :param coeffs: (sequence) one integer per element, canonical order
    """

    __slots__ = ('group', 'coeffs')

    def __init__(self, group, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != group.order:
            raise ValueError('Expected {} coefficients, got {}'.format(group.order, len(coeffs)))
        object.__setattr__(self, 'group', group)
        object.__setattr__(self, 'coeffs', coeffs)

    def __setattr__(self, key, value):
        raise AttributeError('GroupRingElement is immutable')

    def __reduce__(self):
        return GroupRingElement, (self.group, self.coeffs)

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            raise TypeError('Expected a GroupRingElement, got {!r}'.format(other))
        if not same_group(self.group, other.group):
            raise GroupMismatch('Elements live in different group rings')

    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_sub(self, other)

    def __neg__(self):
        return ring_neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return ring_scale(other, self)
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return ring_scale(other, self)
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and
                same_group(self.group, other.group) and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def support(self):
        return [g for g, c in enumerate(self.coeffs) if c]

    def terms(self):
        """ Nonzero (coefficient, element index) pairs, canonical order. """
        return [(c, g) for g, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        if self.is_zero():
            return '0'
        parts = []
        for c, g in self.terms():
            name = self.group.element_name(g)
            if name == 'e':
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append('-' + name)
            else:
                parts.append('{}*{}'.format(c, name))
        return ' + '.join(parts).replace('+ -', '- ')


# ############ #
# CONSTRUCTION #
# ############ #

def ring_zero(group):
    return GroupRingElement(group, [0] * group.order)


def ring_one(group):
    return group_element(group, 0)


def group_element(group, index, coeff=1):
    """ coeff * g for the element g with the given index. """
    coeffs = [0] * group.order
    coeffs[index] = coeff
    return GroupRingElement(group, coeffs)


def element_from_terms(group, terms):
    """ Sum of coeff * g over (coeff, element index) pairs. """
    coeffs = [0] * group.order
    for c, g in terms:
        coeffs[g] += c
    return GroupRingElement(group, coeffs)


# ########## #
# ARITHMETIC #
# ########## #

def ring_add(a, b):
    a._check(b)
    return GroupRingElement(a.group, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def ring_sub(a, b):
    a._check(b)
    return GroupRingElement(a.group, [x - y for x, y in zip(a.coeffs, b.coeffs)])


def ring_neg(a):
    return GroupRingElement(a.group, [-x for x in a.coeffs])


def ring_scale(k, a):
    return GroupRingElement(a.group, [k * x for x in a.coeffs])


def ring_mul(a, b):
    """ Convolution product: coefficient of h in a*b is the sum of a_g b_g' over g g' = h. """
    a._check(b)
    mult = a.group.mult
    coeffs = [0] * a.group.order
    b_terms = b.terms()
    for g, x in enumerate(a.coeffs):
        if not x:
            continue
        row = mult[g]
        for y, h in b_terms:
            coeffs[row[h]] += x * y
    return GroupRingElement(a.group, coeffs)


def augmentation(a):
    """ Ring map Z[pi] -> Z sending every group element to 1. """
    return sum(a.coeffs)


def involution(a):
    """ sum a_g g  ->  sum a_g g^-1 (trivial orientation character). """
    coeffs = [0] * a.group.order
    for g, c in enumerate(a.coeffs):
        coeffs[a.group.inverse[g]] = c
    return GroupRingElement(a.group, coeffs)


# ###################### #
# REGULAR REPRESENTATION #
# ###################### #

def _rho_index(group):
    # rho(a)[h, g] = a_{h g^-1}
    return group.mult[:, group.inverse]


def regular_representation(a):
    """ Integer matrix of left multiplication by a.

    :param a: (GroupRingElement) element
    :return: (ndarray) object array, column g is the coefficient vector of a*g
    """

    coeffs = np.array(a.coeffs, dtype=object)
    return coeffs[_rho_index(a.group)]


def integer_determinant(m):
    """ Exact determinant of a square integer matrix (fraction free Bareiss). """

    rows = [[ZZ(int(x)) for x in row] for row in np.asarray(m, dtype=object).tolist()]
    n = len(rows)
    if n == 0:
        return 1
    return int(DomainMatrix(rows, (n, n), ZZ).det())


def integer_inverse(m):
    """ Exact inverse of a unimodular integer matrix.

    :param m: (ndarray) square integer matrix
    :return: (ndarray) object array with the integer inverse
    """

    rows = [[QQ(int(x)) for x in row] for row in np.asarray(m, dtype=object).tolist()]
    n = len(rows)
    dm = DomainMatrix(rows, (n, n), QQ)
    if dm.det() == 0:
        raise NotInvertible('Matrix is singular')
    inv = dm.inv().to_Matrix()
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            x = inv[i, j]
            if x.q != 1:
                raise NotInvertible('Inverse is not integral')
            out[i, j] = int(x.p)
    return out


def is_unit(a):
    """ True iff a is invertible in Z[pi]. """
    return integer_determinant(regular_representation(a)) in (1, -1)


# ######## #
# MATRICES #
# ######## #

class GroupRingMatrix(object):
    """ Square matrix over Z[pi].

    :param group: (FiniteGroupTable) group
    :param entries: (sequence) n rows of n GroupRingElement
    """

    __slots__ = ('group', 'n', 'entries')

    def __init__(self, group, entries):
        entries = tuple(tuple(row) for row in entries)
        n = len(entries)
        if n == 0:
            raise ValueError('Matrices must have positive size')
        for row in entries:
            if len(row) != n:
                raise ValueError('Matrix is not square')
            for x in row:
                if not same_group(x.group, group):
                    raise GroupMismatch('Matrix entries live in different group rings')
        object.__setattr__(self, 'group', group)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'entries', entries)

    def __setattr__(self, key, value):
        raise AttributeError('GroupRingMatrix is immutable')

    def __reduce__(self):
        return GroupRingMatrix, (self.group, self.entries)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def row(self, i):
        return self.entries[i]

    def __mul__(self, other):
        return matrix_mul(self, other)

    def __add__(self, other):
        return matrix_add(self, other)

    def __eq__(self, other):
        return (isinstance(other, GroupRingMatrix) and
                same_group(self.group, other.group) and self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'GroupRingMatrix({!r})'.format([list(r) for r in self.entries])


def matrix_identity(group, n):
    one = ring_one(group)
    zero = ring_zero(group)
    return GroupRingMatrix(group, [[one if i == j else zero for j in range(n)] for i in range(n)])


def matrix_diag(group, diagonal):
    zero = ring_zero(group)
    n = len(diagonal)
    return GroupRingMatrix(group, [[diagonal[i] if i == j else zero for j in range(n)] for i in range(n)])


def matrix_block_diag(x, y):
    """ x (+) y """
    if not same_group(x.group, y.group):
        raise GroupMismatch('Matrices live over different group rings')
    zero = ring_zero(x.group)
    n = x.n + y.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < x.n and j < x.n:
                row.append(x[i, j])
            elif i >= x.n and j >= x.n:
                row.append(y[i - x.n, j - x.n])
            else:
                row.append(zero)
        rows.append(row)
    return GroupRingMatrix(x.group, rows)


def matrix_add(x, y):
    if not same_group(x.group, y.group) or x.n != y.n:
        raise GroupMismatch('Matrices differ in group or size')
    return GroupRingMatrix(x.group, [[x[i, j] + y[i, j] for j in range(x.n)] for i in range(x.n)])


def matrix_mul(x, y):
    if not same_group(x.group, y.group) or x.n != y.n:
        raise GroupMismatch('Matrices differ in group or size')
    n = x.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ring_zero(x.group)
            for k in range(n):
                acc = acc + x[i, k] * y[k, j]
            row.append(acc)
        rows.append(row)
    return GroupRingMatrix(x.group, rows)


def matrix_involution(x):
    """ Conjugate transpose: transpose, then the involution entrywise. """
    return GroupRingMatrix(x.group, [[involution(x[j, i]) for j in range(x.n)] for i in range(x.n)])


def augmentation_matrix(x):
    """ Entrywise augmentation as an integer matrix. """
    return np.array([[augmentation(x[i, j]) for j in range(x.n)] for i in range(x.n)], dtype=object)


def matrix_rep(x):
    """ (n |pi|) x (n |pi|) integer matrix made of the blocks rho(x_ij). """
    return np.block([[regular_representation(x[i, j]) for j in range(x.n)] for i in range(x.n)])


def is_invertible(x):
    return integer_determinant(matrix_rep(x)) in (1, -1)


def invert(x):
    """ Exact inverse over Z[pi].

    The integer inverse of matrix_rep(x) commutes with the right regular action,
    so each of its blocks is rho(b) for b the block column at the identity.

    :param x: (GroupRingMatrix) invertible matrix
    :return: (GroupRingMatrix) inverse
    """

    if not is_invertible(x):
        raise NotInvertible('Matrix is not invertible over the group ring')

    group = x.group
    size = group.order
    inv = integer_inverse(matrix_rep(x))

    rows = []
    for i in range(x.n):
        row = []
        for j in range(x.n):
            block = inv[i * size:(i + 1) * size, j * size:(j + 1) * size]
            b = GroupRingElement(group, list(block[:, 0]))
            assert np.array_equal(regular_representation(b), block), 'Inverse is not in block form'
            row.append(b)
        rows.append(row)
    result = GroupRingMatrix(group, rows)
    sanity_check_inverse(x, result)
    return result


def torsion_difference(x):
    """ x (+) (x*)^-1, which represents [x] - [x*] in the Whitehead group. """
    return matrix_block_diag(x, invert(matrix_involution(x)))


def unit_inverse(a):
    """ Inverse of a unit of Z[pi]. """
    return invert(GroupRingMatrix(a.group, [[a]]))[0, 0]


def sanity_check_inverse(x, y):
    if constants.DO_SANITY_CHECKS:
        assert matrix_mul(x, y) == matrix_identity(x.group, x.n)
