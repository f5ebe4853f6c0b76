"""
The extension group pi(P) = (pi * F) / (r_1, .., r_n) of a Cohen
presentation, its tubing presentation, and the trivial / proper
classification of the split surjection pi(P) -> pi.
"""
import functools
from collections import namedtuple

from cohen_ext import constants
from cohen_ext import group_utils
from cohen_ext import presentation_utils
from cohen_ext.common_utils import InvalidPresentation, NotNormalized, SearchCapExceeded, vprint
from cohen_ext.group_utils import Exceeded
from cohen_ext.word_utils import FreeWord, GroupPresentation


class ExtensionPresentation(object):
    """ Presentation of pi(P) over y_1..y_l followed by extension generators.

    :param pres: (GroupPresentation) the presentation
    :param provenance: (str) 'direct' or 'tubing'
    :param source: (CohenPresentation) the data it was built from
    :param layout: (list) (i, k) for each extension generator, 0-based
    """

    def __init__(self, pres, provenance, source, layout):
        self.pres = pres
        self.provenance = provenance
        self.source = source
        self.layout = tuple(layout)

    @property
    def num_base_generators(self):
        return len(self.source.base.generator_names)

    def __repr__(self):
        return '{}: {}'.format(constants.human_mapping[self.provenance], self.pres)


def _base_presentation(P):
    pres = P.base.presentation
    if pres is None:
        raise InvalidPresentation('The base group of P carries no presentation')
    return pres


def _extension_names(P, names):
    base_names = list(P.base.generator_names)
    clash = set(base_names) & set(names)
    if clash:
        raise InvalidPresentation('Base generator names clash with {}'.format(sorted(clash)))
    return base_names + names


def extension_presentation(P):
    """ Direct presentation < y, x | s_b, r_1..r_n > of pi(P).

    Conjugators are spelled with the canonical words of the base table.

    :param P: (CohenPresentation) presentation data
    :return: (ExtensionPresentation) direct form
    """

    base_pres = _base_presentation(P)
    names = _extension_names(P, ['x{}'.format(i + 1) for i in range(P.n)])
    relators = list(base_pres.relators)
    relators += [presentation_utils.relator_word(P, i) for i in range(P.n)]

    return ExtensionPresentation(
        GroupPresentation(names, relators),
        constants.form_direct,
        P,
        [(i, 0) for i in range(P.n)]
    )


def tubing_presentation(P):
    """ Presentation obtained from the tubing construction.

    Generators y_a and x(i,k); relators s_b, the products x(i,1)..x(i,n(i)),
    and x(i,k) t(i,k)^-1 for k >= 2 with t(i,k) = g(i,k) x(j,1)^eps g(i,k)^-1.
    Note t(i,1) = x(i,1) = x_i for normalised P.

    :param P: (CohenPresentation) normalised presentation data
    :return: (ExtensionPresentation) tubing form
    """

    if not presentation_utils.is_normalized(P):
        raise NotNormalized('The tubing presentation needs a normalised P')

    base_pres = _base_presentation(P)
    offset = len(P.base.generator_names)

    layout = []
    names = []
    symbol = {}
    for i, r in enumerate(P.relators):
        for k in range(len(r)):
            symbol[(i, k)] = offset + len(layout)
            layout.append((i, k))
            names.append('x{}'.format(i + 1) if k == 0 else 'x{}_{}'.format(i + 1, k + 1))
    names = _extension_names(P, names)

    relators = list(base_pres.relators)
    for i, r in enumerate(P.relators):
        relators.append(FreeWord([(symbol[(i, k)], 1) for k in range(len(r))]))
    for i, r in enumerate(P.relators):
        for k in range(1, len(r)):
            t = _tubing_word(P, r[k], lambda j: symbol[(j, 0)])
            relators.append(FreeWord.generator(symbol[(i, k)]) * t.inverse())

    return ExtensionPresentation(
        GroupPresentation(names, relators),
        constants.form_tubing,
        P,
        layout
    )


def _tubing_word(P, factor, first_symbol):
    g = P.base.canonical_words[factor.conjugator]
    return g * FreeWord.generator(first_symbol(factor.generator), factor.sign) * g.inverse()


# ###### #
# TIETZE #
# ###### #

def tietze_eliminate(pres, symbol, relator_index):
    """ Remove a generator using a relator in which it occurs exactly once.

    From r = u s^eps v the generator is replaced everywhere by (u^-1 v^-1)^eps,
    then r and s are dropped and higher symbols shift down by one.

    :param pres: (GroupPresentation) presentation
    :param symbol: (int) generator to eliminate
    :param relator_index: (int) relator solving for it
    :return: (GroupPresentation) simplified presentation
    """

    r = pres.relators[relator_index]
    positions = [p for p, (s, _) in enumerate(r.letters) if s == symbol]
    if len(positions) != 1 or abs(r.letters[positions[0]][1]) != 1:
        raise InvalidPresentation(
            'Generator {} does not occur exactly once in relator {}'.format(symbol, relator_index))

    p = positions[0]
    eps = r.letters[p][1]
    u = FreeWord(r.letters[:p])
    v = FreeWord(r.letters[p + 1:])
    solution = (u.inverse() * v.inverse()) ** eps

    images = [FreeWord.generator(s) for s in range(pres.num_generators)]
    images[symbol] = solution
    mapping = [s if s < symbol else s - 1 for s in range(pres.num_generators)]

    relators = []
    for index, w in enumerate(pres.relators):
        if index == relator_index:
            continue
        relators.append(w.substitute(images).relabel(mapping))

    names = [n for s, n in enumerate(pres.generator_names) if s != symbol]
    return GroupPresentation(names, relators)


def eliminate_tubing(tubing):
    """ Tietze-eliminate every x(i,k), k >= 2, from a tubing presentation.

    The product relators turn into the relators r_i, so the output coincides
    word for word with the direct presentation.

    :param tubing: (ExtensionPresentation) tubing form
    :return: (ExtensionPresentation) direct form
    """

    if tubing.provenance != constants.form_tubing:
        raise InvalidPresentation('Expected a tubing presentation')

    P = tubing.source
    pres = tubing.pres
    offset = tubing.num_base_generators
    num_base_relators = len(_base_presentation(P).relators)

    # Tubing relators follow the products in layout order; eliminate from the last one
    eliminations = []
    relator_index = num_base_relators + P.n
    for pos, (i, k) in enumerate(tubing.layout):
        if k > 0:
            eliminations.append((offset + pos, relator_index))
            relator_index += 1

    for symbol, index in reversed(eliminations):
        pres = tietze_eliminate(pres, symbol, index)

    return ExtensionPresentation(pres, constants.form_direct, P, [(i, 0) for i in range(P.n)])


def tubing_isomorphism(P, direct_table, tubing=None):
    """ Images of the tubing generators realising the Tietze isomorphism.

    y_a maps to y_a, x(i,1) to x_i and x(i,k) to t(i,k) in the enumerated
    direct form. The map is checked to be a surjective homomorphism.

    :param P: (CohenPresentation) normalised presentation data
    :param direct_table: (FiniteGroupTable) table of the direct form
    :param tubing: (ExtensionPresentation) tubing form, built if not given
    :return: (tuple or None) generator images, None if the check fails
    """

    tubing = tubing or tubing_presentation(P)
    offset = tubing.num_base_generators
    gens = direct_table.generator_images

    images = list(gens[:offset])
    for i, k in tubing.layout:
        t = _tubing_word(P, P.relators[i][k], lambda j: offset + j)
        images.append(group_utils.word_to_element(direct_table, t))

    for r in tubing.pres.relators:
        if group_utils.evaluate_word(direct_table, r, images) != 0:
            return None
    if len(group_utils.subgroup_generated(direct_table, images)) != direct_table.order:
        return None
    return tuple(images)


# ############## #
# CLASSIFICATION #
# ############## #

ExtensionReport = namedtuple(
    'ExtensionReport',
    ['verdict', 'order', 'witness', 'budget_used', 'certified', 'skipped_targets']
)


def report_to_dict(report):
    return {
        'verdict': report.verdict,
        'order': report.order,
        'witness': report.witness,
        'budget_used': report.budget_used,
        'certified': report.certified,
        'skipped_targets': list(report.skipped_targets)
    }


def splitting_images(ext, base):
    """ y_a -> y_a, every extension generator -> e. """
    return tuple(base.generator_images) + (0,) * len(ext.layout)


def certify_trivial(ext, base):
    """ Check that the splitting is a surjective homomorphism pi(P) -> pi. """

    images = splitting_images(ext, base)
    if any(group_utils.evaluate_word(base, r, images) != 0 for r in ext.pres.relators):
        return False
    return len(group_utils.subgroup_generated(base, images)) == base.order


def whitehead_witness(P, budget=constants.COSET_BUDGET):
    """ Splitting images of pi(P) -> pi when the map is an isomorphism.

    :param P: (CohenPresentation) presentation data
    :param budget: (int) coset budget
    :return: (dict or None) images of the generators of pi(P) as element names
        of pi, None unless pi(P) closes at order |pi| and the splitting checks
    """

    base = P.base
    ext = extension_presentation(P)
    table = group_utils.coset_enumerate(ext.pres, budget)
    if isinstance(table, Exceeded) or table.order != base.order or not certify_trivial(ext, base):
        return None
    return {
        'generators': list(ext.pres.generator_names),
        'images': [base.element_name(i) for i in splitting_images(ext, base)],
        'order': table.order
    }


@functools.lru_cache(maxsize=None)
def _base_surjects(base_pres, target_name, hom_cap):
    target = group_utils.named_group(target_name)
    return group_utils.exists_surjection(base_pres, target, hom_cap) is not None


def _informative(base, target, hom_cap):
    # pi(P) ~= pi is ruled out by a surjection onto a group pi cannot reach
    if target.order > base.order:
        return True
    return not _base_surjects(base.presentation, target.name, hom_cap)


def find_witness(ext, base, targets, hom_cap):
    """ Surjection from pi(P) onto a target group that pi does not surject onto.

    :return: (dict or None, list) witness and the targets skipped by the cap
    """

    skipped = []
    for name in targets:
        target = group_utils.named_group(name)
        try:
            if not _informative(base, target, hom_cap):
                continue
            images = group_utils.exists_surjection(ext.pres, target, hom_cap)
        except SearchCapExceeded:
            vprint('Homomorphism search onto {} hit the cap'.format(name))
            skipped.append(name)
            continue

        if images is not None:
            witness = {
                'target': name,
                'generators': list(ext.pres.generator_names),
                'images': [target.element_name(i) for i in images],
                'image_size': len(group_utils.subgroup_generated(target, images))
            }
            return witness, skipped
    return None, skipped


def classify_extension(P, budget=constants.COSET_BUDGET, targets=None,
                       hom_cap=constants.HOM_SEARCH_CAP, always_witness=True):
    """ Classify pi(P) -> pi as trivial, proper or unknown.

    Coset enumeration decides the question when it closes: equal orders plus
    the splitting make the map an isomorphism. Otherwise a surjection onto a
    target group that pi cannot surject onto shows properness. Budget
    exhaustion without a witness is reported as unknown.

    :param P: (CohenPresentation) presentation data
    :param budget: (int) coset budget
    :param targets: (list) witness target identifiers
    :param hom_cap: (int) homomorphism search cap
    :param always_witness: (bool) also look for a witness when the order decides
    :return: (ExtensionReport) report
    """

    if targets is None:
        targets = constants.default_witness_targets
    base = P.base
    ext = extension_presentation(P)
    table = group_utils.coset_enumerate(ext.pres, budget)

    if not isinstance(table, Exceeded):
        if table.order == base.order:
            return ExtensionReport(
                verdict=constants.verdict_trivial,
                order=table.order,
                witness=None,
                budget_used=table.cosets_defined,
                certified=certify_trivial(ext, base),
                skipped_targets=()
            )

        witness, skipped = None, []
        if always_witness:
            witness, skipped = find_witness(ext, base, targets, hom_cap)
        return ExtensionReport(
            verdict=constants.verdict_proper,
            order=table.order,
            witness=witness,
            budget_used=table.cosets_defined,
            certified=True,
            skipped_targets=tuple(skipped)
        )

    witness, skipped = find_witness(ext, base, targets, hom_cap)
    return ExtensionReport(
        verdict=constants.verdict_proper if witness else constants.verdict_unknown,
        order=None,
        witness=witness,
        budget_used=table.cosets_defined,
        certified=witness is not None,
        skipped_targets=tuple(skipped)
    )


def extension_abelian_invariants(P):
    return group_utils.abelian_invariants(extension_presentation(P).pres)


def dim_evidence(base, x, search_cfg, budget=None):
    """ Bounded evidence about dim([x]) from presentations realising x exactly.

    A trivial hit shows that this representative is realised by a trivial
    admissible presentation. No hit is evidence only and never shows
    dim = 3.

    :param base: (FiniteGroupTable) base group
    :param x: (GroupRingMatrix) invertible matrix
    :param search_cfg: (SearchConfig) search bounds
    :param budget: (int) coset budget per candidate, config value if None
    :return: (dict) evidence report
    """

    # search_utils classifies through this module
    from cohen_ext import search_utils

    summary = search_utils.search_trivial_admissible(base, x, search_cfg, budget)
    hits = summary['trivial_hits']
    if hits:
        statement = 'trivial admissible presentation found: this representative has dim <= 2'
    else:
        statement = 'no trivial admissible presentation within the search bounds (bounded evidence only)'

    return {
        'examined': summary['examined'],
        'matched': summary['matched'],
        'trivial_hits': hits,
        'n_proper': summary['n_proper'],
        'n_unknown': summary['n_unknown'],
        'truncated': summary['truncated'],
        'evidence': statement
    }
