"""
Bounded, exhaustive enumeration of Cohen presentations over a fixed base
group, filtered by their matrix and classified one by one.

The candidate stream is ordered by (n, relator lengths, factor tuples).
Factors are listed conjugator first (in the configured conjugator order),
then generator, then sign (+1 before -1). Candidates that only differ by a
permutation of factors inside a relator are all kept.
"""
import os
import itertools
from multiprocessing import Pool

import tqdm
import pandas as pd

from cohen_ext import constants
from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext import serial_utils
from cohen_ext import extension_utils
from cohen_ext import presentation_utils
from cohen_ext.common_utils import NotInvertible, vprint
from cohen_ext.presentation_utils import CohenPresentation, ConjugateFactor


class SearchConfig(object):
    """ Search bounds.

    :param n_max: (int) largest number of extension generators
    :param factors_max: (int) largest number of factors per relator
    :param conjugators: (list) element indices allowed as conjugators
    :param signs: (str) 'both' or 'positive_only'
    :param matrix: (GroupRingMatrix) exact match filter on X(P), or None
    :param admissible_only: (bool) drop non admissible candidates
    :param include_empty: (bool) allow relators with no factors
    :param enumeration_budget: (int) coset budget per candidate
    :param candidate_cap: (int) maximum stream length
    :param targets: (list) witness target identifiers
    :param hom_cap: (int) homomorphism search cap
    :param jobs: (int) worker processes
    """

    def __init__(self, n_max=1, factors_max=1, conjugators=None, signs=constants.signs_both,
                 matrix=None, admissible_only=True, include_empty=False,
                 enumeration_budget=constants.SEARCH_ENUMERATION_BUDGET,
                 candidate_cap=constants.SEARCH_CANDIDATE_CAP, targets=None,
                 hom_cap=constants.HOM_SEARCH_CAP, jobs=1):
        self.n_max = n_max
        self.factors_max = factors_max
        self.conjugators = conjugators
        self.signs = signs
        self.matrix = matrix
        self.admissible_only = admissible_only
        self.include_empty = include_empty
        self.enumeration_budget = enumeration_budget
        self.candidate_cap = candidate_cap
        self.targets = list(targets) if targets is not None else list(constants.default_witness_targets)
        self.hom_cap = hom_cap
        self.jobs = jobs

        for key in ['n_max', 'factors_max', 'enumeration_budget', 'candidate_cap', 'hom_cap', 'jobs']:
            value = getattr(self, key)
            if type(value) is not int or value <= 0:
                raise ValueError('{} must be a positive integer, got {}'.format(key, value))
        if conjugators is not None and not conjugators:
            raise ValueError('The conjugator set must not be empty')
        if signs not in constants.possible_signs:
            raise ValueError('Invalid sign policy {}'.format(signs))
        for name in self.targets:
            group_utils.parse_group_name(name)

    def with_matrix(self, matrix):
        cfg = SearchConfig.__new__(SearchConfig)
        cfg.__dict__.update(self.__dict__)
        cfg.matrix = matrix
        return cfg


def config_from_dict(base, cfg):
    """ SearchConfig out of a dictionary returned by common_utils.read_config. """

    conjugators = None
    if cfg['conjugators'] != 'all':
        conjugators = sorted(set(base.element(w) for w in cfg['conjugators']))

    matrix = None
    if cfg.get('matrix') is not None:
        matrix = serial_utils.matrix_from_rows(base, cfg['matrix'], '/matrix', cfg.get('config_path', ''))

    return SearchConfig(
        n_max=cfg['n_max'],
        factors_max=cfg['factors_max'],
        conjugators=conjugators,
        signs=cfg['signs'],
        matrix=matrix,
        admissible_only=cfg['admissible_only'],
        include_empty=cfg['include_empty'],
        enumeration_budget=cfg['enumeration_budget'],
        candidate_cap=cfg['candidate_cap'],
        targets=cfg['targets'],
        hom_cap=cfg['hom_cap'],
        jobs=cfg['jobs']
    )


# ###### #
# STREAM #
# ###### #

def factor_alphabet(base, cfg, n):
    conjugators = cfg.conjugators if cfg.conjugators is not None else range(base.order)
    signs = (1, -1) if cfg.signs == constants.signs_both else (1,)
    return [ConjugateFactor(g, j, s) for g in conjugators for j in range(n) for s in signs]


def _row_weights(matrix):
    return [sum(sum(abs(c) for c in matrix[i, j].coeffs) for j in range(matrix.n)) for i in range(matrix.n)]


def _blocks(base, cfg):
    """ Stream blocks keyed by (n, lengths, first factor of the first relator).

    :return: (list) (n, lengths, first factor or None, block size, feasible)
    """

    shortest = 0 if cfg.include_empty else 1
    blocks = []
    for n in range(1, cfg.n_max + 1):
        alphabet = factor_alphabet(base, cfg, n)
        weights = _row_weights(cfg.matrix) if cfg.matrix is not None and cfg.matrix.n == n else None

        for lengths in itertools.product(range(shortest, cfg.factors_max + 1), repeat=n):
            # A relator of length L realises a row of total weight W only if L >= W and L = W mod 2
            if cfg.matrix is not None:
                feasible = weights is not None and all(
                    length >= w and (length - w) % 2 == 0 for length, w in zip(lengths, weights))
            else:
                feasible = True

            rest = 1
            for length in lengths:
                rest *= len(alphabet) ** length
            if lengths[0] == 0:
                blocks.append((n, lengths, None, rest, feasible))
                continue
            rest //= len(alphabet)
            for first in alphabet:
                blocks.append((n, lengths, first, rest, feasible))
    return blocks


def count_candidates(base, cfg):
    """ Exact length of the untruncated stream. """
    return sum(b[3] for b in _blocks(base, cfg))


def _block_candidates(base, cfg, block):
    n, lengths, first, _, _ = block
    alphabet = factor_alphabet(base, cfg, n)
    slots = []
    for i, length in enumerate(lengths):
        if i == 0 and first is not None:
            slots.append([(first,)])
            slots.append(list(itertools.product(alphabet, repeat=length - 1)))
        else:
            slots.append(list(itertools.product(alphabet, repeat=length)))

    for parts in itertools.product(*slots):
        if first is not None:
            relators = [parts[0] + parts[1]] + list(parts[2:])
        else:
            relators = list(parts)
        yield CohenPresentation(base, n, relators)


def enumerate_presentations(base, cfg):
    """ Deterministic candidate stream.

    :param base: (FiniteGroupTable) base group
    :param cfg: (SearchConfig) search bounds
    :return: (generator) CohenPresentation candidates; the stream stops after
        cfg.candidate_cap items, see count_candidates for the full length
    """

    produced = 0
    for block in _blocks(base, cfg):
        for P in _block_candidates(base, cfg, block):
            if produced == cfg.candidate_cap:
                return
            produced += 1
            yield P


# ###### #
# WORKER #
# ###### #

def _candidate_record(index, P, report):
    return {
        'index': index,
        'relators': serial_utils.relators_doc(P),
        'verdict': report.verdict,
        'order': report.order,
        'witness': report.witness['target'] if report.witness else None,
        'budget_used': report.budget_used
    }


def search_worker(data_in):
    """ Classify the candidates of one stream block.

    :param data_in: (tuple) base, config, block, first global index, number of
        candidates to take from the block, coset budget
    :return: (tuple) examined, matched, admissible, records
    """

    base, cfg, block, start, limit, budget = data_in
    examined = matched = admissible = 0
    records = []
    target = presentation_utils.matrix_coefficients_of(cfg.matrix) if cfg.matrix is not None else None

    for offset, P in enumerate(itertools.islice(_block_candidates(base, cfg, block), limit)):
        examined += 1
        if not block[4]:
            continue
        if target is not None:
            # target is invertible, so every match is admissible
            if presentation_utils.matrix_coefficients(P) != target:
                continue
            matched += 1
            admissible += 1
        else:
            matched += 1
            if presentation_utils.is_admissible(P):
                admissible += 1
            elif cfg.admissible_only:
                continue

        report = extension_utils.classify_extension(
            P,
            budget=budget,
            targets=cfg.targets,
            hom_cap=cfg.hom_cap,
            always_witness=False
        )
        records.append(_candidate_record(start + offset, P, report))

    return examined, matched, admissible, records


def _tasks(base, cfg, budget):
    tasks = []
    start = 0
    for block in _blocks(base, cfg):
        if start >= cfg.candidate_cap:
            break
        limit = min(block[3], cfg.candidate_cap - start)
        tasks.append((base, cfg, block, start, limit, budget))
        start += limit
    return tasks


def run_search(base, cfg, budget=None):
    """ Classify every candidate of the stream passing the filters.

    Blocks are distributed over cfg.jobs processes and merged in stream order,
    so the summary does not depend on the number of workers.

    :param base: (FiniteGroupTable) base group
    :param cfg: (SearchConfig) search bounds
    :param budget: (int) coset budget per candidate, cfg value if None
    :return: (dict) summary
    """

    budget = budget or cfg.enumeration_budget
    total = count_candidates(base, cfg)
    tasks = _tasks(base, cfg, budget)
    vprint('Search over {} candidates in {} blocks (cap {})'.format(total, len(tasks), cfg.candidate_cap))

    if cfg.jobs > 1:
        with Pool(cfg.jobs) as p:
            results = list(tqdm.tqdm(p.imap(search_worker, tasks), total=len(tasks), disable=not constants.VERBOSE))
    else:
        results = [search_worker(t) for t in tqdm.tqdm(tasks, disable=not constants.VERBOSE)]

    records = []
    examined = matched = admissible = 0
    for e, m, a, r in results:
        examined += e
        matched += m
        admissible += a
        records.extend(r)

    tally = {v: 0 for v in constants.possible_verdicts}
    for r in records:
        tally[r['verdict']] += 1

    trivial_hits = []
    for r in records:
        if r['verdict'] != constants.verdict_trivial:
            continue
        hit = dict(r)
        P = CohenPresentation(base, len(r['relators']), _relators_from_record(base, r))
        again = extension_utils.classify_extension(P, budget=2 * budget, targets=cfg.targets, hom_cap=cfg.hom_cap)
        hit['reverified'] = again.verdict == constants.verdict_trivial
        trivial_hits.append(hit)

    return {
        'examined': examined,
        'matched': matched,
        'admissible': admissible,
        'stream_length': total,
        'truncated': total > cfg.candidate_cap,
        'n_trivial': tally[constants.verdict_trivial],
        'n_proper': tally[constants.verdict_proper],
        'n_unknown': tally[constants.verdict_unknown],
        'trivial_hits': trivial_hits,
        'records': records
    }


def _relators_from_record(base, record):
    return [
        [ConjugateFactor(base.element(w), j - 1, s) for w, j, s in r]
        for r in record['relators']
    ]


def search_trivial_admissible(base, target_matrix, cfg, budget=None):
    """ Look for trivial extensions among presentations with X(P) = target_matrix.

    :param base: (FiniteGroupTable) base group
    :param target_matrix: (GroupRingMatrix) invertible matrix
    :param cfg: (SearchConfig) search bounds
    :param budget: (int) coset budget per candidate, cfg value if None
    :return: (dict) summary listing every trivial hit
    """

    if not ring_utils.is_invertible(target_matrix):
        raise NotInvertible('The target matrix must be invertible')
    return run_search(base, cfg.with_matrix(target_matrix), budget)


# ####### #
# SUMMARY #
# ####### #

def summary_dataframe(summary):
    """ One row per classified candidate. """

    rows = []
    for r in summary['records']:
        rows.append({
            'relator': ' | '.join(
                ' '.join('({},{},{:+d})'.format(w or 'e', j, s) for w, j, s in rel) for rel in r['relators']),
            'verdict': r['verdict'],
            'order': r['order'],
            'witness': r['witness'],
            'budget_used': r['budget_used']
        })
    df = pd.DataFrame(rows, columns=['relator', 'verdict', 'order', 'witness', 'budget_used'])
    return df.rename(columns=constants.human_mapping)


def tally_dataframe(summary):
    keys = ['examined', 'matched', 'admissible', 'n_trivial', 'n_proper', 'n_unknown', 'truncated']
    return pd.DataFrame(
        [[constants.human_mapping[k], summary[k]] for k in keys],
        columns=['', 'value']
    )


def save_summary(summary, save_dir, name):
    if not os.path.exists(save_dir):
        os.makedirs(save_dir)
    summary_dataframe(summary).to_csv(os.path.join(save_dir, name + '__summary_df.csv'))
