"""
Command line surface. Every subcommand reads JSON documents, prints a single
JSON report on standard output and returns an exit status:

    0  success
    1  verification failed (verify-cert false, repro mismatch)
    2  input error (schema, parse or validation error)
    3  budget exhausted where a definite answer was requested

Examples:
`python cohen.py unit-check configs/element_rothaus.json`
`python cohen.py classify presentation.json --budget 50000 --targets S5,A5`
`python cohen.py repro c5-s5`
"""
import os
import sys
import time
import json
import argparse

import pandas as pd

from cohen_ext import constants
from cohen_ext import common_utils
from cohen_ext import group_utils
from cohen_ext import ring_utils
from cohen_ext import whitehead_utils
from cohen_ext import presentation_utils
from cohen_ext import extension_utils
from cohen_ext import search_utils
from cohen_ext import serial_utils
from cohen_ext.common_utils import GroupMismatch, vprint
from cohen_ext.group_utils import Exceeded

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class BudgetExhausted(Exception):
    """ Carries the report of a run that could not reach a definite answer. """

    def __init__(self, report):
        self.report = report
        super(BudgetExhausted, self).__init__('Budget exhausted')


class VerificationFailed(Exception):
    def __init__(self, report):
        self.report = report
        super(VerificationFailed, self).__init__('Verification failed')


def _load(path):
    return common_utils.load_json(path)


def _targets(args):
    targets = args.get('targets') or list(constants.default_witness_targets)
    for t in targets:
        # Rejects unknown identifiers before any work is done
        group_utils.parse_group_name(t)
    return targets


def _cohen(args, key='presentation'):
    return serial_utils.cohen_from_doc(_load(args[key]), args['budget'], args[key])


# ############ #
# SUBCOMMANDS  #
# ############ #

def cmd_group_build(args):
    path = args['presentation']
    pres = serial_utils.presentation_from_doc(_load(path), file_name=path)
    table = group_utils.coset_enumerate(pres, args['budget'])
    if isinstance(table, Exceeded):
        raise BudgetExhausted({'exceeded': {'budget': table.budget, 'cosets_defined': table.cosets_defined}})
    return {'order': table.order, 'cosets_defined': table.cosets_defined, 'table': serial_utils.table_to_doc(table)}


def cmd_unit_check(args):
    path = args['element']
    a = serial_utils.element_from_doc(_load(path), args['budget'], path)
    return {
        'unit': ring_utils.is_unit(a),
        'determinant': ring_utils.integer_determinant(ring_utils.regular_representation(a)),
        'augmentation': ring_utils.augmentation(a)
    }


def cmd_matrix_of(args):
    P = _cohen(args)
    x = presentation_utils.matrix_of(P)
    doc = serial_utils.matrix_to_doc(x)
    doc['admissible'] = ring_utils.is_invertible(x)
    return doc


def cmd_from_matrix(args):
    path = args['matrix']
    x = serial_utils.matrix_from_doc(_load(path), args['budget'], path)
    return serial_utils.cohen_to_doc(presentation_utils.presentation_from_matrix(x.group, x))


def cmd_admissible(args):
    return {'admissible': presentation_utils.is_admissible(_cohen(args))}


def cmd_normalize(args):
    return serial_utils.normal_form_doc(_cohen(args))


def cmd_extend(args):
    P = _cohen(args)
    if args['form'] == constants.form_tubing:
        ext = extension_utils.tubing_presentation(P)
    else:
        ext = extension_utils.extension_presentation(P)
    return {
        'form': ext.provenance,
        'presentation': serial_utils.presentation_to_doc(ext.pres),
        'layout': [[i + 1, k + 1] for i, k in ext.layout]
    }


def cmd_classify(args):
    P = _cohen(args)
    report = extension_utils.classify_extension(
        P,
        budget=args['budget'],
        targets=_targets(args),
        hom_cap=args['cap']
    )
    doc = extension_utils.report_to_dict(report)
    if args.get('definite') and report.verdict == constants.verdict_unknown:
        raise BudgetExhausted(doc)
    return doc


def _search_setup(config_path, args):
    cfg = common_utils.read_config(config_path)
    base = serial_utils.group_from_doc(cfg['base'], args['budget'], '/base', config_path)
    if args.get('targets'):
        cfg['targets'] = _targets(args)
    if args.get('jobs'):
        cfg['jobs'] = args['jobs']
    if args.get('cap') != constants.HOM_SEARCH_CAP:
        cfg['hom_cap'] = args['cap']
    return cfg, base, search_utils.config_from_dict(base, cfg)


def cmd_dim_evidence(args):
    cfg, base, search_cfg = _search_setup(args['config'], args)
    path = args['matrix']
    doc = _load(path)
    if isinstance(doc, dict) and 'group' in doc:
        if serial_utils.group_from_doc(doc['group'], args['budget'], '/group', path) != base:
            raise GroupMismatch('The matrix and the search base live over different groups')
    x = serial_utils.matrix_from_doc(doc, args['budget'], path, group=base)
    return extension_utils.dim_evidence(base, x, search_cfg)


def cmd_search(args):
    cfg, base, search_cfg = _search_setup(args['config'], args)
    summary = search_utils.run_search(base, search_cfg)
    if cfg['save']:
        search_utils.save_summary(summary, cfg['save'], common_utils.get_search_name(cfg))
    return summary


def cmd_verify_cert(args):
    x_path, y_path, c_path = args['x'], args['y'], args['certificate']
    x = serial_utils.matrix_from_doc(_load(x_path), args['budget'], x_path)
    y = serial_utils.matrix_from_doc(_load(y_path), args['budget'], y_path)
    certificate = serial_utils.certificate_from_doc(_load(c_path), x.group, c_path)
    doc = {'verified': whitehead_utils.verify_certificate(x, y, certificate)}
    if not doc['verified']:
        raise VerificationFailed(doc)
    return doc


def cmd_torsion_diff(args):
    path = args['matrix']
    x = serial_utils.matrix_from_doc(_load(path), args['budget'], path)
    return serial_utils.matrix_to_doc(ring_utils.torsion_difference(x))


def cmd_abelianize(args):
    path = args['presentation']
    pres = serial_utils.presentation_from_doc(_load(path), file_name=path)
    torsion, rank = group_utils.abelian_invariants(pres)
    return {'torsion': list(torsion), 'free_rank': rank}


def cmd_list_repro(args):
    return {'targets': sorted(constants.repro_targets)}


# ##### #
# REPRO #
# ##### #

def _repro_observed(cfg, args):
    kind = cfg['kind']
    path = cfg['config_path']
    expected = cfg['expected']

    if kind == 'unit-check':
        a = serial_utils.element_from_doc(cfg['element'], args['budget'], path)
        observed = ring_utils.is_unit(a)
        return observed, observed == expected

    if kind == 'matrix-of':
        P = serial_utils.cohen_from_doc(cfg['presentation'], args['budget'], path)
        x = presentation_utils.matrix_of(P)
        want = serial_utils.matrix_from_rows(P.base, expected['matrix'], '/expected/matrix', path)
        observed = {'matrix': serial_utils.matrix_rows_doc(x), 'admissible': ring_utils.is_invertible(x)}
        return observed, x == want and observed['admissible'] == expected['admissible']

    if kind == 'classify':
        P = serial_utils.cohen_from_doc(cfg['presentation'], args['budget'], path)
        report = extension_utils.classify_extension(
            P, budget=cfg.get('budget', args['budget']), targets=cfg.get('targets') or _targets(args), hom_cap=args['cap'])
        observed = extension_utils.report_to_dict(report)
        passed = report.verdict == expected['verdict']
        if 'order' in expected:
            passed = passed and report.order == expected['order']
        if expected.get('witness'):
            w = report.witness
            passed = passed and w is not None and w['target'] == expected['witness'] \
                and w['image_size'] == group_utils.named_group(w['target']).order
        if expected.get('no_surjection'):
            ext = extension_utils.extension_presentation(P)
            observed['no_surjection'] = {
                name: group_utils.exists_surjection(ext.pres, group_utils.named_group(name), args['cap']) is None
                for name in expected['no_surjection']
            }
            passed = passed and all(observed['no_surjection'].values())
        return observed, passed

    # search and dim-evidence carry a search config with a target matrix
    if args.get('jobs'):
        cfg['jobs'] = args['jobs']
    base = serial_utils.group_from_doc(cfg['base'], args['budget'], '/base', path)
    search_cfg = search_utils.config_from_dict(base, cfg)
    if kind == 'dim-evidence':
        observed = extension_utils.dim_evidence(base, search_cfg.matrix, search_cfg)
    else:
        summary = search_utils.search_trivial_admissible(base, search_cfg.matrix, search_cfg)
        observed = {k: summary[k] for k in ['examined', 'matched', 'n_trivial', 'n_proper', 'n_unknown', 'truncated']}
        observed['trivial_hits'] = summary['trivial_hits']
    return observed, len(observed['trivial_hits']) == expected['trivial_hits']


def cmd_repro(args):
    name = args['target']
    if name not in constants.repro_targets:
        raise ValueError('Unknown repro target {}, choose from {}'.format(name, sorted(constants.repro_targets)))
    cfg = common_utils.read_config(os.path.join(ROOT_DIR, constants.repro_targets[name]), repro=True)
    vprint('Running repro target {} ({})'.format(name, cfg['kind']))

    observed, passed = _repro_observed(cfg, args)
    doc = {'target': name, 'kind': cfg['kind'], 'expected': cfg['expected'], 'observed': observed, 'passed': passed}
    if not passed:
        raise VerificationFailed(doc)
    return doc


commands = {
    'group-build': cmd_group_build,
    'unit-check': cmd_unit_check,
    'matrix-of': cmd_matrix_of,
    'from-matrix': cmd_from_matrix,
    'admissible': cmd_admissible,
    'normalize': cmd_normalize,
    'extend': cmd_extend,
    'classify': cmd_classify,
    'dim-evidence': cmd_dim_evidence,
    'search': cmd_search,
    'verify-cert': cmd_verify_cert,
    'torsion-diff': cmd_torsion_diff,
    'abelianize': cmd_abelianize,
    'list-repro': cmd_list_repro,
    'repro': cmd_repro
}


# ###### #
# OUTPUT #
# ###### #

def render_pretty(command, doc):
    """ Human readable tables for a report. """

    if command == 'search':
        head = search_utils.tally_dataframe(doc).to_string(index=False)
        return head + '\n\n' + search_utils.summary_dataframe(doc).to_string(index=False)

    rows = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        rows.append([constants.human_mapping.get(key, key), value])
    return pd.DataFrame(rows, columns=['', 'value']).to_string(index=False)


common_defaults = {
    'budget': constants.COSET_BUDGET,
    'cap': constants.HOM_SEARCH_CAP,
    'targets': None,
    'jobs': None,
    'pretty': False,
    'timing': False,
    'verbose': False
}


def target_list(value):
    """ 'S5,A5' -> ['S5', 'A5'] """
    return [t for t in value.split(',') if t]


def common_parser(after_command=False):
    """ Options accepted both before and after the subcommand.

    Nothing is stored unless the option is given, so a value set before the
    subcommand survives the subparser; parse_args() fills in common_defaults.
    Before the subcommand --targets takes a single comma separated value so it
    cannot consume the subcommand name.

    :param after_command: (bool) True for the subparsers
    :return: (ArgumentParser) parent parser
    """

    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument('--budget', type=int, help='coset enumeration budget')
    common.add_argument('--cap', type=int, help='homomorphism search cap')
    if after_command:
        common.add_argument('--targets', type=target_list, nargs='+', action='extend',
                            help='witness target groups, e.g. S5 A5 or S5,A5')
    else:
        common.add_argument('--targets', type=target_list, action='append',
                            help='witness target groups, comma separated or repeated, e.g. S5,A5')
    common.add_argument('--jobs', type=int, help='number of worker processes for searches')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', dest='pretty', action='store_false', help='JSON report (default)')
    output.add_argument('--pretty', dest='pretty', action='store_true', help='render tables')
    common.add_argument('--timing', action='store_true', help='add wall clock seconds to the report')
    common.add_argument('-v', '--verbose', action='store_true', help='diagnostics on standard error')
    return common


def build_parser():
    parser = argparse.ArgumentParser(prog='cohen', parents=[common_parser()])
    common = common_parser(after_command=True)

    sub = parser.add_subparsers(dest='command')
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    add('group-build', 'coset enumerate a presentation').add_argument('presentation')
    add('unit-check', 'decide whether a group ring element is a unit').add_argument('element')
    add('matrix-of', 'X(P) of a Cohen presentation').add_argument('presentation')
    add('from-matrix', 'Cohen presentation realising a matrix').add_argument('matrix')
    add('admissible', 'whether X(P) is invertible').add_argument('presentation')
    add('normalize', 'normal form and Whitehead certificate').add_argument('presentation')

    p = add('extend', 'presentation of the extension group')
    p.add_argument('presentation')
    p.add_argument('--form', choices=constants.possible_forms, default=constants.form_direct)

    p = add('classify', 'trivial / proper / unknown')
    p.add_argument('presentation')
    p.add_argument('--definite', action='store_true', help='exit with status 3 on an unknown verdict')

    p = add('dim-evidence', 'bounded search for trivial admissible presentations of X')
    p.add_argument('matrix')
    p.add_argument('-c', '--config', required=True, help='search configuration file path')

    p = add('search', 'bounded presentation search')
    p.add_argument('-c', '--config', required=True, help='search configuration file path')

    p = add('verify-cert', 'check a Whitehead certificate carries X to Y')
    p.add_argument('x')
    p.add_argument('y')
    p.add_argument('certificate')

    add('torsion-diff', 'X plus the inverse of its conjugate transpose').add_argument('matrix')
    add('abelianize', 'abelian invariants of a presentation').add_argument('presentation')
    add('list-repro', 'list bundled reproduction targets')
    add('repro', 'run a bundled reproduction target').add_argument('target')

    return parser


def parse_args(argv=None):
    args = vars(build_parser().parse_args(argv))
    for key, value in common_defaults.items():
        args.setdefault(key, value)
    if args['targets'] is not None:
        args['targets'] = [t for group in args['targets'] for t in group]
    return args


def _emit(args, doc, start):
    if args['timing']:
        doc = dict(doc)
        doc['seconds'] = round(time.time() - start, 3)
    if args['pretty']:
        print(render_pretty(args['command'], doc))
    else:
        print(common_utils.dump_report(doc))


def run(argv=None):
    """ Parse arguments, run one subcommand and return the exit status.

    :param argv: (list) command line arguments, sys.argv[1:] if None
    :return: (int) exit status
    """

    try:
        args = parse_args(argv)
    except SystemExit as e:
        return constants.EXIT_OK if e.code == 0 else constants.EXIT_INPUT_ERROR

    constants.VERBOSE = constants.VERBOSE or args['verbose']
    start = time.time()

    try:
        doc = commands[args['command']](args)
    except BudgetExhausted as e:
        _emit(args, e.report, start)
        return constants.EXIT_BUDGET_EXHAUSTED
    except VerificationFailed as e:
        _emit(args, e.report, start)
        return constants.EXIT_VERIFICATION_FAILED
    except ValueError as e:
        # CohenError and every config validation error
        print('error: {}'.format(e), file=sys.stderr)
        return constants.EXIT_INPUT_ERROR

    _emit(args, doc, start)
    return constants.EXIT_OK


def main():
    sys.exit(run())
