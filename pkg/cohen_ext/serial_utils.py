"""
JSON documents for presentations, tables, group ring elements and matrices,
Cohen presentations and Whitehead certificates.

Group references are either a short identifier understood by
group_utils.named_group ('C5', 'D10', 'S5') or an inline presentation
{"generators": [...], "relators": [...]}. Extension generator indices in
Cohen presentation documents are 1-based (x1..xn); row indices in
certificates are 0-based.
"""
import numpy as np

from cohen_ext import constants
from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext import word_utils
from cohen_ext import whitehead_utils
from cohen_ext import presentation_utils
from cohen_ext.common_utils import CohenError, SchemaError
from cohen_ext.group_utils import Exceeded, FiniteGroupTable
from cohen_ext.presentation_utils import CohenPresentation, ConjugateFactor
from cohen_ext.ring_utils import GroupRingMatrix


def _expect(cond, path, token, file_name=''):
    if not cond:
        raise SchemaError(path, token, file_name=file_name)


def _check_version(doc, path='', file_name=''):
    # Documents without "tfv" are accepted as the current version
    if isinstance(doc, dict) and 'tfv' in doc:
        _expect(doc['tfv'] == constants.SCHEMA_VERSION, path + '/tfv', doc['tfv'], file_name)


def _versioned(doc):
    doc['tfv'] = constants.SCHEMA_VERSION
    return doc


def _parse_word(text, names, path, file_name=''):
    _expect(isinstance(text, str), path, text, file_name)
    try:
        return word_utils.parse_word(text, names)
    except CohenError:
        raise SchemaError(path, text, file_name=file_name)


# ############# #
# PRESENTATIONS #
# ############# #

def presentation_from_doc(doc, path='', file_name=''):
    _expect(isinstance(doc, dict), path, doc, file_name)
    _check_version(doc, path, file_name)
    gens = doc.get('generators')
    rels = doc.get('relators')
    _expect(isinstance(gens, list) and all(isinstance(g, str) for g in gens),
            path + '/generators', gens, file_name)
    _expect(isinstance(rels, list), path + '/relators', rels, file_name)

    relators = [
        _parse_word(r, gens, '{}/relators/{}'.format(path, k), file_name)
        for k, r in enumerate(rels)
    ]
    try:
        return word_utils.GroupPresentation(gens, relators)
    except CohenError:
        raise SchemaError(path + '/generators', gens, file_name=file_name)


def presentation_to_doc(pres):
    return {
        'generators': list(pres.generator_names),
        'relators': [word_utils.format_word(r, pres.generator_names) for r in pres.relators]
    }


def group_from_doc(ref, budget=constants.COSET_BUDGET, path='', file_name=''):
    """ Resolve a group reference to a table.

    :param ref: (str or dict) identifier or inline presentation
    :param budget: (int) coset budget for inline presentations
    :return: (FiniteGroupTable) table
    """

    if isinstance(ref, str):
        try:
            return group_utils.named_group(ref)
        except CohenError:
            raise SchemaError(path, ref, file_name=file_name)

    pres = presentation_from_doc(ref, path, file_name)
    table = group_utils.coset_enumerate(pres, budget)
    if isinstance(table, Exceeded):
        raise CohenError('Group {} did not close within {} cosets'.format(pres, budget))
    return table


def group_to_ref(table):
    if table.name:
        return table.name
    return presentation_to_doc(table.presentation)


# ###### #
# TABLES #
# ###### #

def table_to_doc(table):
    return _versioned({
        'order': table.order,
        'mult': table.mult.tolist(),
        'generator_names': list(table.generator_names),
        'generator_images': list(table.generator_images),
        'canonical_words': [word_utils.format_word(w, table.generator_names) for w in table.canonical_words],
        'presentation': presentation_to_doc(table.presentation) if table.presentation else None,
        'name': table.name
    })


def table_from_doc(doc):
    _check_version(doc)
    names = doc['generator_names']
    pres = doc.get('presentation')
    return FiniteGroupTable(
        mult=np.array(doc['mult'], dtype=np.int64),
        generator_images=doc['generator_images'],
        canonical_words=[word_utils.parse_word(w, names) for w in doc['canonical_words']],
        generator_names=names,
        presentation=presentation_from_doc(pres) if pres else None,
        name=doc.get('name', '')
    )


# ######## #
# ELEMENTS #
# ######## #

def element_from_terms_doc(group, terms, path='', file_name=''):
    _expect(isinstance(terms, list), path, terms, file_name)
    pairs = []
    for k, term in enumerate(terms):
        sub = '{}/{}'.format(path, k)
        _expect(isinstance(term, list) and len(term) == 2 and type(term[0]) is int, sub, term, file_name)
        w = _parse_word(term[1], group.generator_names, sub + '/1', file_name)
        pairs.append((term[0], group_utils.word_to_element(group, w)))
    return ring_utils.element_from_terms(group, pairs)


def element_to_terms_doc(a):
    return [[c, word_utils.format_word(a.group.canonical_words[g], a.group.generator_names)]
            for c, g in a.terms()]


def element_from_doc(doc, budget=constants.COSET_BUDGET, file_name=''):
    _expect(isinstance(doc, dict) and 'group' in doc, '', doc, file_name)
    _check_version(doc, '', file_name)
    group = group_from_doc(doc['group'], budget, '/group', file_name)
    return element_from_terms_doc(group, doc.get('terms'), '/terms', file_name)


def element_to_doc(a):
    return _versioned({'group': group_to_ref(a.group), 'terms': element_to_terms_doc(a)})


# ######## #
# MATRICES #
# ######## #

def matrix_from_rows(group, rows, path='', file_name=''):
    _expect(isinstance(rows, list) and rows, path, rows, file_name)
    entries = []
    for i, row in enumerate(rows):
        _expect(isinstance(row, list) and len(row) == len(rows), '{}/{}'.format(path, i), row, file_name)
        entries.append([
            element_from_terms_doc(group, e, '{}/{}/{}'.format(path, i, j), file_name)
            for j, e in enumerate(row)
        ])
    return GroupRingMatrix(group, entries)


def matrix_from_doc(doc, budget=constants.COSET_BUDGET, file_name='', group=None):
    _expect(isinstance(doc, dict) and 'matrix' in doc, '', doc, file_name)
    _check_version(doc, '', file_name)
    if group is None:
        _expect('group' in doc, '/group', None, file_name)
        group = group_from_doc(doc['group'], budget, '/group', file_name)
    return matrix_from_rows(group, doc['matrix'], '/matrix', file_name)


def matrix_rows_doc(x):
    return [[element_to_terms_doc(x[i, j]) for j in range(x.n)] for i in range(x.n)]


def matrix_to_doc(x):
    return _versioned({'group': group_to_ref(x.group), 'matrix': matrix_rows_doc(x)})


# ################### #
# COHEN PRESENTATIONS #
# ################### #

def cohen_from_doc(doc, budget=constants.COSET_BUDGET, file_name=''):
    _expect(isinstance(doc, dict), '', doc, file_name)
    _check_version(doc, '', file_name)
    base = group_from_doc(doc.get('base'), budget, '/base', file_name)
    n = doc.get('n')
    _expect(type(n) is int and n > 0, '/n', n, file_name)
    rels = doc.get('relators')
    _expect(isinstance(rels, list) and len(rels) == n, '/relators', rels, file_name)

    relators = []
    for i, r in enumerate(rels):
        _expect(isinstance(r, list), '/relators/{}'.format(i), r, file_name)
        factors = []
        for k, f in enumerate(r):
            sub = '/relators/{}/{}'.format(i, k)
            _expect(isinstance(f, list) and len(f) == 3, sub, f, file_name)
            w = _parse_word(f[0], base.generator_names, sub + '/0', file_name)
            _expect(type(f[1]) is int and 1 <= f[1] <= n, sub + '/1', f[1], file_name)
            _expect(f[2] in (1, -1), sub + '/2', f[2], file_name)
            factors.append(ConjugateFactor(group_utils.word_to_element(base, w), f[1] - 1, f[2]))
        relators.append(factors)

    return CohenPresentation(base, n, relators)


def relators_doc(P):
    names = P.base.generator_names
    return [
        [[word_utils.format_word(P.base.canonical_words[f.conjugator], names), f.generator + 1, f.sign]
         for f in r]
        for r in P.relators
    ]


def cohen_to_doc(P):
    return _versioned({'base': group_to_ref(P.base), 'n': P.n, 'relators': relators_doc(P)})


def trivial_cohen_doc(base_ref, n):
    return {'base': base_ref, 'n': n, 'relators': [[['', i + 1, 1]] for i in range(n)]}


# ############ #
# CERTIFICATES #
# ############ #

def certificate_to_doc(certificate, group):
    moves = []
    for m in certificate:
        doc = {'move': whitehead_utils.move_names[type(m)]}
        if isinstance(m, whitehead_utils.SwapRows):
            doc.update(i=m.i, j=m.j)
        elif isinstance(m, whitehead_utils.ScaleRow):
            doc.update(i=m.i, sign=m.sign, gamma=word_utils.format_word(
                group.canonical_words[m.gamma], group.generator_names))
        elif isinstance(m, whitehead_utils.AddRow):
            doc.update(i=m.i, j=m.j, **{'lambda': element_to_terms_doc(m.lam)})
        moves.append(doc)
    return _versioned({'moves': moves})


def certificate_from_doc(doc, group, file_name=''):
    _expect(isinstance(doc, dict) and isinstance(doc.get('moves'), list), '/moves', doc, file_name)
    _check_version(doc, '', file_name)
    moves = []
    for k, m in enumerate(doc['moves']):
        path = '/moves/{}'.format(k)
        _expect(isinstance(m, dict), path, m, file_name)
        kind = m.get('move')
        if kind == 'stabilize':
            moves.append(whitehead_utils.Stabilize())
        elif kind == 'destabilize':
            moves.append(whitehead_utils.Destabilize())
        elif kind == 'swap_rows':
            moves.append(whitehead_utils.SwapRows(m.get('i'), m.get('j')))
        elif kind == 'scale_row':
            w = _parse_word(m.get('gamma', ''), group.generator_names, path + '/gamma', file_name)
            moves.append(whitehead_utils.ScaleRow(m.get('i'), m.get('sign'), group_utils.word_to_element(group, w)))
        elif kind == 'add_row':
            lam = element_from_terms_doc(group, m.get('lambda'), path + '/lambda', file_name)
            moves.append(whitehead_utils.AddRow(m.get('i'), m.get('j'), lam))
        else:
            raise SchemaError(path + '/move', kind, file_name=file_name)
    return whitehead_utils.WhiteheadCertificate(moves)


def normal_form_doc(P):
    """ normalize() output as a document. """
    Q, certificate = presentation_utils.normalize(P)
    return {'presentation': cohen_to_doc(Q), 'certificate': certificate_to_doc(certificate, P.base)}
