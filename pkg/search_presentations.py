"""
Run a bounded search over Cohen presentations of a fixed base group.

To classify every admissible presentation over C5 with one generator and up
to three factors:
`python search_presentations.py -c configs/c5_search.json`

To reproduce the search for trivial presentations realising 1 - g + g^2:
`python search_presentations.py -c configs/repro_c5_search.json`

Note: to reduce the computation time, this script uses multiprocessing.
The number of spawned processes is the "jobs" field of the configuration.
"""

import time
import argparse

from cohen_ext import constants
from cohen_ext import common_utils
from cohen_ext import search_utils
from cohen_ext import serial_utils


def search(cfg):
    base = serial_utils.group_from_doc(cfg['base'], path='/base', file_name=cfg['config_path'])
    search_cfg = search_utils.config_from_dict(base, cfg)
    search_name = common_utils.get_search_name(cfg)
    print('{}\nCurrent search: {}\n{}\n'.format('-' * 80, search_name, '-' * 80))
    print('Candidate stream length: {}'.format(search_utils.count_candidates(base, search_cfg)))

    start_time = time.time()
    if search_cfg.matrix is not None:
        summary = search_utils.search_trivial_admissible(base, search_cfg.matrix, search_cfg)
    else:
        summary = search_utils.run_search(base, search_cfg)
    print('Search took {:.2f} seconds'.format(time.time() - start_time))

    print(search_utils.tally_dataframe(summary).to_string(index=False))
    for hit in summary['trivial_hits']:
        print('Trivial hit {} (reverified: {})'.format(hit['relators'], hit['reverified']))

    if cfg['save']:
        search_utils.save_summary(summary, cfg['save'], search_name)
    return summary


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument(
        '-c', '--config',
        help='Search configuration file path',
        type=str,
        required=True
    )
    parser.add_argument(
        '-j', '--jobs',
        help='Number of worker processes, overrides the configuration',
        type=int,
        default=0
    )
    parser.add_argument(
        '-v', '--verbose',
        help='Show progress and diagnostics',
        action='store_true'
    )
    arguments = parser.parse_args()

    # Unwrap arguments
    args = vars(arguments)
    constants.VERBOSE = args['verbose']
    config = common_utils.read_config(args['config'])
    if args['jobs']:
        config['jobs'] = args['jobs']

    search(config)
