"""
Elementary moves on invertible matrices over Z[pi] that preserve the class
in the Whitehead group, and certificates built out of them.

Equality of Whitehead classes is never decided here: a certificate is a
witness that can be replayed and checked.
"""
from collections import namedtuple

from cohen_ext import ring_utils
from cohen_ext.common_utils import IllegalMove, GroupMismatch
from cohen_ext.ring_utils import GroupRingMatrix


Stabilize = namedtuple('Stabilize', [])
Destabilize = namedtuple('Destabilize', [])
SwapRows = namedtuple('SwapRows', ['i', 'j'])
# row_i <- sign * gamma * row_i, gamma an element index of the group
ScaleRow = namedtuple('ScaleRow', ['i', 'sign', 'gamma'])
# row_i <- row_i + lam * row_j
AddRow = namedtuple('AddRow', ['i', 'j', 'lam'])

move_names = {
    Stabilize: 'stabilize',
    Destabilize: 'destabilize',
    SwapRows: 'swap_rows',
    ScaleRow: 'scale_row',
    AddRow: 'add_row'
}


class WhiteheadCertificate(object):
    """ Ordered list of elementary moves, applied left to right. """

    def __init__(self, moves=()):
        self.moves = tuple(moves)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __add__(self, other):
        return WhiteheadCertificate(self.moves + other.moves)

    def __eq__(self, other):
        return isinstance(other, WhiteheadCertificate) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        # namedtuples compare as plain tuples, so the move type is part of the key
        return tuple((move_names[type(m)], tuple(m)) for m in self.moves)

    def __repr__(self):
        return 'WhiteheadCertificate({!r})'.format(list(self.moves))


def _check_row(index, i, n):
    if type(i) is not int or i < 0 or i >= n:
        raise IllegalMove(index, 'row {} out of range for size {}'.format(i, n))


def apply_move(x, move, index=0):
    """ Apply a single elementary move.

    :param x: (GroupRingMatrix) current matrix
    :param move: (namedtuple) one of the move types
    :param index: (int) position of the move in its certificate
    :return: (GroupRingMatrix) new matrix
    """

    group = x.group
    n = x.n
    rows = [list(r) for r in x.entries]

    if isinstance(move, Stabilize):
        return ring_utils.matrix_block_diag(x, ring_utils.matrix_identity(group, 1))

    if isinstance(move, Destabilize):
        if n == 1:
            raise IllegalMove(index, 'cannot destabilize a 1x1 matrix')
        one = ring_utils.ring_one(group)
        last = n - 1
        border_ok = x[last, last] == one and all(
            x[last, j].is_zero() and x[j, last].is_zero() for j in range(last))
        if not border_ok:
            raise IllegalMove(index, 'last row and column are not an identity border')
        return GroupRingMatrix(group, [r[:last] for r in rows[:last]])

    if isinstance(move, SwapRows):
        _check_row(index, move.i, n)
        _check_row(index, move.j, n)
        rows[move.i], rows[move.j] = rows[move.j], rows[move.i]
        return GroupRingMatrix(group, rows)

    if isinstance(move, ScaleRow):
        _check_row(index, move.i, n)
        if move.sign not in (1, -1):
            raise IllegalMove(index, 'sign must be +1 or -1, got {}'.format(move.sign))
        if type(move.gamma) is not int or not 0 <= move.gamma < group.order:
            raise IllegalMove(index, 'group element {} out of range'.format(move.gamma))
        factor = ring_utils.group_element(group, move.gamma, move.sign)
        rows[move.i] = [factor * e for e in rows[move.i]]
        return GroupRingMatrix(group, rows)

    if isinstance(move, AddRow):
        _check_row(index, move.i, n)
        _check_row(index, move.j, n)
        if move.i == move.j:
            raise IllegalMove(index, 'add_row needs two distinct rows')
        if not ring_utils.same_group(move.lam.group, group):
            raise IllegalMove(index, 'multiplier lives in another group ring')
        rows[move.i] = [a + move.lam * b for a, b in zip(rows[move.i], rows[move.j])]
        return GroupRingMatrix(group, rows)

    raise IllegalMove(index, 'unknown move {!r}'.format(move))


def apply_certificate(x, certificate):
    """ Apply the moves of a certificate left to right.

    :param x: (GroupRingMatrix) starting matrix
    :param certificate: (WhiteheadCertificate) moves
    :return: (GroupRingMatrix) resulting matrix, same Whitehead class
    """

    for index, move in enumerate(certificate):
        x = apply_move(x, move, index)
    return x


def stabilize_to(x, n):
    while x.n < n:
        x = apply_move(x, Stabilize())
    return x


def verify_certificate(x, y, certificate):
    """ True iff the certificate carries x to y, up to stabilisation.

    :param x: (GroupRingMatrix) source
    :param y: (GroupRingMatrix) target
    :param certificate: (WhiteheadCertificate) moves
    :return: (bool) verification result
    """

    if not ring_utils.same_group(x.group, y.group):
        raise GroupMismatch('Matrices live over different group rings')

    z = apply_certificate(x, certificate)
    size = max(z.n, y.n)
    return stabilize_to(z, size) == stabilize_to(y, size)


def permutation_moves(perm):
    """ Row swaps bringing old row perm[j] to position j, for every j.

    :param perm: (list) perm[j] is the old index of the row that ends at j
    :return: (list) SwapRows moves
    """

    current = list(range(len(perm)))
    moves = []
    for j, wanted in enumerate(perm):
        pos = current.index(wanted)
        if pos != j:
            moves.append(SwapRows(j, pos))
            current[j], current[pos] = current[pos], current[j]
    return moves
