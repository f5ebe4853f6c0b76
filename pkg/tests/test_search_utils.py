import os

import pytest

from cohen_ext import constants
from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext import search_utils
from cohen_ext import presentation_utils
from cohen_ext.common_utils import NotInvertible
from cohen_ext.presentation_utils import ConjugateFactor as F
from cohen_ext.search_utils import SearchConfig


@pytest.fixture
def c5():
    return group_utils.named_group('C5')


def _elem(group, terms):
    return ring_utils.element_from_terms(group, [(c, group.element(w)) for c, w in terms])


def test_single_candidate(c5):
    cfg = SearchConfig(factors_max=1, conjugators=[0], signs=constants.signs_positive)
    assert search_utils.count_candidates(c5, cfg) == 1
    stream = list(search_utils.enumerate_presentations(c5, cfg))
    assert stream == [presentation_utils.trivial_presentation(c5, 1)]


def test_two_factor_count(c5):
    cfg = SearchConfig(factors_max=2)
    assert search_utils.count_candidates(c5, cfg) == 10 + 10 * 10
    assert len(list(search_utils.enumerate_presentations(c5, cfg))) == 110


def test_trivial_base_count():
    cfg = SearchConfig(factors_max=1)
    assert search_utils.count_candidates(group_utils.named_group('C1'), cfg) == 2


def test_include_empty(c5):
    cfg = SearchConfig(factors_max=1, include_empty=True)
    assert search_utils.count_candidates(c5, cfg) == 11
    assert list(search_utils.enumerate_presentations(c5, cfg))[0].relators == ((),)


def test_stream_order(c5):
    cfg = SearchConfig(factors_max=2, n_max=2, conjugators=[0], signs=constants.signs_positive)
    stream = list(search_utils.enumerate_presentations(c5, cfg))
    keys = [(P.n, P.relator_lengths()) for P in stream]
    assert keys == sorted(keys)
    assert len(stream) == search_utils.count_candidates(c5, cfg)
    assert len(set(stream)) == len(stream)


def test_truncation(c5):
    cfg = SearchConfig(factors_max=2, candidate_cap=15, admissible_only=False, enumeration_budget=50, targets=['C2'])
    assert len(list(search_utils.enumerate_presentations(c5, cfg))) == 15
    summary = search_utils.run_search(c5, cfg)
    assert summary['truncated']
    assert summary['examined'] == 15


def test_invalid_config():
    with pytest.raises(ValueError):
        SearchConfig(factors_max=0)
    with pytest.raises(ValueError):
        SearchConfig(conjugators=[])
    with pytest.raises(ValueError):
        SearchConfig(signs='negative')
    with pytest.raises(ValueError):
        SearchConfig(targets=['S5', 'D3'])


def test_identity_target(c5):
    cfg = SearchConfig(factors_max=1)
    summary = search_utils.search_trivial_admissible(c5, ring_utils.matrix_identity(c5, 1), cfg, budget=200)
    assert summary['matched'] == 1
    hit = summary['trivial_hits'][0]
    assert hit['index'] == 0
    assert hit['relators'] == [[['', 1, 1]]]
    assert hit['reverified']


def test_group_element_target(c5):
    g = ring_utils.group_element(c5, c5.element('g'))
    cfg = SearchConfig(factors_max=1)
    summary = search_utils.search_trivial_admissible(c5, ring_utils.GroupRingMatrix(c5, [[g]]), cfg, budget=200)
    assert [h['relators'] for h in summary['trivial_hits']] == [[[['g', 1, 1]]]]


def test_non_invertible_target(c5):
    x = ring_utils.GroupRingMatrix(c5, [[_elem(c5, [(2, '')])]])
    with pytest.raises(NotInvertible):
        search_utils.search_trivial_admissible(c5, x, SearchConfig())


def test_planted_presentation_is_found(c5):
    u = _elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])
    x = ring_utils.GroupRingMatrix(c5, [[u]])
    planted = presentation_utils.presentation_from_matrix(c5, x)
    cfg = SearchConfig(factors_max=3, enumeration_budget=300, targets=['A5'])
    summary = search_utils.search_trivial_admissible(c5, x, cfg)

    found = [r['relators'] for r in summary['records']]
    assert [[['', 1, 1], ['g', 1, -1], ['g^2', 1, 1]]] in found
    assert summary['matched'] == 6
    assert summary['n_trivial'] == 0
    assert planted.relators[0] == (F(0, 0, 1), F(c5.element('g'), 0, -1), F(c5.element('g^2'), 0, 1))
    record = found.index([[['', 1, 1], ['g', 1, -1], ['g^2', 1, 1]]])
    assert summary['records'][record]['verdict'] == constants.verdict_proper


def test_parallel_matches_sequential(c5):
    kwargs = dict(factors_max=2, enumeration_budget=100, targets=['C2', 'S3'])
    sequential = search_utils.run_search(c5, SearchConfig(jobs=1, **kwargs))
    parallel = search_utils.run_search(c5, SearchConfig(jobs=2, **kwargs))
    assert sequential == parallel


def test_summary_dataframe(c5, tmp_path):
    cfg = SearchConfig(factors_max=1, enumeration_budget=100)
    summary = search_utils.run_search(c5, cfg)
    df = search_utils.summary_dataframe(summary)
    assert len(df) == summary['admissible']
    assert constants.human_mapping['verdict'] in df.columns

    search_utils.save_summary(summary, str(tmp_path), 'c5')
    assert os.path.isfile(os.path.join(str(tmp_path), 'c5__summary_df.csv'))


def test_config_from_dict(c5):
    cfg = {
        'n_max': 1, 'factors_max': 2, 'conjugators': ['', 'g'], 'signs': 'both',
        'matrix': [[[[1, '']]]], 'admissible_only': True, 'include_empty': False,
        'enumeration_budget': 100, 'candidate_cap': 1000, 'targets': ['S3'],
        'hom_cap': 1000, 'jobs': 1
    }
    search_cfg = search_utils.config_from_dict(c5, cfg)
    assert search_cfg.conjugators == [0, c5.element('g')]
    assert search_cfg.matrix == ring_utils.matrix_identity(c5, 1)


@pytest.mark.slow
def test_c5_search_has_no_trivial_hits(c5):
    u = _elem(c5, [(1, ''), (-1, 'g'), (1, 'g^2')])
    cfg = SearchConfig(factors_max=5, enumeration_budget=2000, targets=['S5', 'A5', 'S4', 'A4', 'S3'], jobs=4)
    summary = search_utils.search_trivial_admissible(c5, ring_utils.GroupRingMatrix(c5, [[u]]), cfg)
    assert summary['trivial_hits'] == []
    assert summary['matched'] > 0
    assert not summary['truncated']
