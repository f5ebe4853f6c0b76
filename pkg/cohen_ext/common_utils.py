"""
This module contains common utility functions and objects: configuration
reading, the exception hierarchy and diagnostic printing.
"""
import os
import sys
import json

from cohen_ext import constants


# ########## #
# EXCEPTIONS #
# ########## #

class CohenError(ValueError):
    """ Base class of every error raised by the library. """


class InvalidPresentation(CohenError):
    pass


class GroupMismatch(CohenError):
    pass


class NotInvertible(CohenError):
    pass


class NotAdmissible(CohenError):
    pass


class NotNormalized(CohenError):
    pass


class SearchCapExceeded(CohenError):
    pass


class IllegalMove(CohenError):
    def __init__(self, move_index, reason):
        self.move_index = move_index
        self.reason = reason
        super(IllegalMove, self).__init__(
            'Illegal move at index {}: {}'.format(move_index, reason)
        )


class SchemaError(CohenError):
    def __init__(self, path, token, file_name=''):
        self.file_name = file_name
        self.path = path
        self.token = token
        super(SchemaError, self).__init__(
            '{}{}: offending token {!r}'.format(
                file_name + ':' if file_name else '',
                path or '/',
                token
            )
        )


# ########### #
# DIAGNOSTICS #
# ########### #

def vprint(*args):
    """ Print diagnostics to standard error if verbose output is on. """

    if constants.VERBOSE:
        print(*args, file=sys.stderr)


# ###### #
# CONFIG #
# ###### #

def load_json(path):
    """ Load a JSON document, reporting parse errors with file and position.

    :param path: (str) path of the JSON file
    :return: (dict) parsed document
    """

    if not os.path.isfile(path):
        raise SchemaError('', path, file_name=path)

    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        token = text[e.pos:e.pos + 16]
        raise SchemaError('line {} column {}'.format(e.lineno, e.colno), token, file_name=path)


def _check_positive_int(cfg, key):
    i = cfg[key]
    if type(i) is not int or i <= 0:
        raise ValueError('{} must be a positive integer, got {}'.format(key, i))


def read_config(cfg_path, repro=False):
    """ Read a search or repro configuration file and check validity.

    Search configurations contain:

    {
      "base": "presentation document -- base group",
      "n_max": "int -- largest number of extension generators",
      "factors_max": "int -- largest number of factors per relator",
      "conjugators": "string 'all' or list of base words",
      "signs": "string -- [both, positive_only]",
      "matrix": "optional -- target matrix entries (row-major term lists)",
      "admissible_only": "bool -- keep only admissible candidates",
      "enumeration_budget": "int -- coset budget per candidate",
      "candidate_cap": "int -- maximum length of the candidate stream",
      "targets": "optional list of strings -- witness target groups",
      "hom_cap": "optional int -- homomorphism search cap",
      "jobs": "optional int -- number of worker processes",
      "save": "optional string -- directory where to save the summary"
    }

    Repro configurations additionally name a "kind" and an "expected" value.

    :param cfg_path: (str) path to config file
    :param repro: (bool) True if the config describes a repro target
    :return: (dict) config dictionary with defaults filled in
    """

    if not os.path.isfile(cfg_path):
        raise ValueError(
            'Provided configuration file does not exist: {}'.format(
                cfg_path
            )
        )

    cfg = load_json(cfg_path)
    cfg['config_path'] = cfg_path

    if repro:
        i = cfg.get('kind')
        if i not in constants.possible_repro_kinds:
            raise ValueError('Invalid repro kind {}'.format(i))
        if 'expected' not in cfg:
            raise ValueError('Repro config {} has no expected value'.format(cfg_path))
        if i != 'search' and i != 'dim-evidence':
            return cfg

    if 'base' not in cfg:
        raise ValueError('Configuration must specify a base presentation')

    cfg.setdefault('n_max', 1)
    cfg.setdefault('factors_max', 1)
    cfg.setdefault('conjugators', 'all')
    cfg.setdefault('signs', constants.signs_both)
    cfg.setdefault('matrix', None)
    cfg.setdefault('admissible_only', True)
    cfg.setdefault('include_empty', False)
    cfg.setdefault('enumeration_budget', constants.SEARCH_ENUMERATION_BUDGET)
    cfg.setdefault('candidate_cap', constants.SEARCH_CANDIDATE_CAP)
    cfg.setdefault('targets', list(constants.default_witness_targets))
    cfg.setdefault('hom_cap', constants.HOM_SEARCH_CAP)
    cfg.setdefault('jobs', 1)
    cfg.setdefault('save', '')

    for key in ['n_max', 'factors_max', 'enumeration_budget', 'candidate_cap', 'hom_cap', 'jobs']:
        _check_positive_int(cfg, key)

    i = cfg['signs']
    if i not in constants.possible_signs:
        raise ValueError('Invalid sign policy {}'.format(i))

    i = cfg['conjugators']
    if i != 'all':
        if type(i) is not list or not i:
            raise ValueError('Conjugators must be "all" or a nonempty list of words')
        for w in i:
            if type(w) is not str:
                raise ValueError('Invalid conjugator word {}'.format(w))

    # group_utils imports this module
    from cohen_ext.group_utils import parse_group_name
    if type(cfg['targets']) is not list:
        raise ValueError('Witness targets must be a list of group identifiers')
    for i in cfg['targets']:
        try:
            parse_group_name(i)
        except ValueError:
            raise ValueError('Invalid witness target {}'.format(i))

    for key in ['admissible_only', 'include_empty']:
        if type(cfg[key]) is not bool:
            raise ValueError('{} must be a boolean'.format(key))

    return cfg


# ###### #
# NAMING #
# ###### #

def get_search_name(cfg):
    """ Unified search name generator.

    :param cfg: (dict) search configuration
    :return: (str) search name
    """

    base = cfg['base']
    if isinstance(base, dict):
        base = '_'.join(base['generators'])
    return base + '__n' + str(cfg['n_max']) + '__f' + str(cfg['factors_max']) + '__' + cfg['signs']


def dump_report(doc):
    """ Serialise a report deterministically.

    :param doc: (dict) report
    :return: (str) JSON text
    """

    doc = dict(doc)
    doc['tfv'] = constants.SCHEMA_VERSION
    return json.dumps(doc, sort_keys=True)
