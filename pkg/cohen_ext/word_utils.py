"""
Free group words and finite group presentations.

A word is a freely reduced sequence of (symbol index, nonzero exponent)
letters. Symbol indices refer to the generator list of the presentation the
word belongs to.
"""
import re

from cohen_ext.common_utils import InvalidPresentation


_token_re = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$')

# Spellings of the identity word accepted by parse_word
identity_spellings = {'', '1', 'e'}


class FreeWord(object):
    """ Freely reduced word in a free group. Immutable. """

    __slots__ = ('letters',)

    def __init__(self, letters=()):
        reduced = []
        for sym, exp in letters:
            if exp == 0:
                continue
            if reduced and reduced[-1][0] == sym:
                merged = reduced[-1][1] + exp
                reduced.pop()
                if merged != 0:
                    reduced.append((sym, merged))
            else:
                reduced.append((sym, exp))
        object.__setattr__(self, 'letters', tuple(reduced))

    def __setattr__(self, key, value):
        raise AttributeError('FreeWord is immutable')

    def __reduce__(self):
        return FreeWord, (self.letters,)

    @classmethod
    def generator(cls, sym, exp=1):
        return cls(((sym, exp),))

    def __mul__(self, other):
        return FreeWord(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return FreeWord(self.letters * k)

    def inverse(self):
        return FreeWord((s, -e) for s, e in reversed(self.letters))

    def conjugate(self, by):
        """ by * self * by^-1 """
        return by * self * by.inverse()

    def symbols(self):
        return {s for s, _ in self.letters}

    def max_symbol(self):
        return max((s for s, _ in self.letters), default=-1)

    def syllables(self):
        """ Letters expanded to exponent +-1, in order. """
        for sym, exp in self.letters:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield sym, step

    def length(self):
        return sum(abs(e) for _, e in self.letters)

    def exponent_sums(self, num_symbols):
        sums = [0] * num_symbols
        for sym, exp in self.letters:
            sums[sym] += exp
        return sums

    def relabel(self, mapping):
        """ Rename symbols; mapping is indexable by the old symbol index. """
        return FreeWord((mapping[s], e) for s, e in self.letters)

    def substitute(self, images):
        """ Replace each symbol s by the word images[s]. """
        result = FreeWord()
        for sym, exp in self.letters:
            result = result * (images[sym] ** exp)
        return result

    def is_identity(self):
        return not self.letters

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return 'FreeWord({!r})'.format(self.letters)


class GroupPresentation(object):
    """ Finite presentation < generators | relators >, relator form only. """

    def __init__(self, generator_names, relators):
        self.generator_names = tuple(generator_names)
        self.relators = tuple(relators)

        if len(set(self.generator_names)) != len(self.generator_names):
            raise InvalidPresentation(
                'Duplicate generator names {}'.format(self.generator_names))

        for name in self.generator_names:
            if not _token_re.match(name) or name in identity_spellings:
                raise InvalidPresentation('Invalid generator name {!r}'.format(name))

        for r in self.relators:
            if not isinstance(r, FreeWord):
                raise InvalidPresentation('Relator {!r} is not a word'.format(r))
            if r.max_symbol() >= len(self.generator_names):
                raise InvalidPresentation(
                    'Relator {} uses a symbol outside of {}'.format(r, self.generator_names))

    @property
    def num_generators(self):
        return len(self.generator_names)

    def __eq__(self, other):
        return (isinstance(other, GroupPresentation) and
                self.generator_names == other.generator_names and
                self.relators == other.relators)

    def __hash__(self):
        return hash((self.generator_names, self.relators))

    def __repr__(self):
        return '< {} | {} >'.format(
            ', '.join(self.generator_names),
            ', '.join(format_word(r, self.generator_names) for r in self.relators)
        )


# ################## #
# PARSING / PRINTING #
# ################## #

def parse_word(text, generator_names):
    """ Parse a whitespace or '*' separated word like 'h g^-1 h'.

    A relation 'u = v' is turned into the relator u v^-1.

    :param text: (str) word or relation
    :param generator_names: (list) generator symbols
    :return: (FreeWord) parsed word
    """

    if '=' in text:
        sides = text.split('=')
        if len(sides) != 2:
            raise InvalidPresentation('Malformed relation {!r}'.format(text))
        left = parse_word(sides[0], generator_names)
        right = parse_word(sides[1], generator_names)
        return left * right.inverse()

    index = {name: i for i, name in enumerate(generator_names)}
    letters = []
    for token in text.replace('*', ' ').split():
        if token in identity_spellings and token not in index:
            continue
        m = _token_re.match(token)
        if m is None or m.group(1) not in index:
            raise InvalidPresentation('Unknown token {!r} in word {!r}'.format(token, text))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.append((index[m.group(1)], exp))

    return FreeWord(letters)


def format_word(w, generator_names):
    """ Inverse of parse_word; the identity word prints as ''. """

    parts = []
    for sym, exp in w.letters:
        name = generator_names[sym]
        parts.append(name if exp == 1 else '{}^{}'.format(name, exp))
    return ' '.join(parts)


def parse_presentation(generator_names, relator_texts):
    return GroupPresentation(
        generator_names,
        [parse_word(t, generator_names) for t in relator_texts]
    )


# ####################### #
# STANDARD PRESENTATIONS  #
# ####################### #

def cyclic_presentation(n, name='g'):
    """ < g | g^n > """
    return GroupPresentation([name], [FreeWord.generator(0, n)])


def dihedral_presentation(n):
    """ Dihedral group of order 2n: < g, h | g^n, h^2, h g h g > """
    g = FreeWord.generator(0)
    h = FreeWord.generator(1)
    return GroupPresentation(['g', 'h'], [g ** n, h ** 2, h * g * h * g])


def klein_presentation():
    """ < a, b | a^2, b^2, a b a^-1 b^-1 > """
    a = FreeWord.generator(0)
    b = FreeWord.generator(1)
    return GroupPresentation(['a', 'b'], [a ** 2, b ** 2, a * b * a.inverse() * b.inverse()])
