"""
Tunables, identifiers and human readable mappings used across the package.
"""

# Controls whether some expensive assertions are done or not.
# Exhaustive group law checks on freshly enumerated tables and the block form
# check of matrix inverses are only run when this is on. Turn it on when
# changing anything in group_utils or ring_utils.
DO_SANITY_CHECKS = False

# Diagnostics go to standard error; standard output only carries reports.
VERBOSE = False

# Version tag written in every JSON document as "tfv".
SCHEMA_VERSION = 1

# ####### #
# BUDGETS #
# ####### #

# Maximum number of working cosets for a single coset enumeration.
COSET_BUDGET = 100000

# Maximum number of nodes visited by the homomorphism backtracking search.
HOM_SEARCH_CAP = 10 ** 7

# Coset budget used for each candidate of a presentation search.
SEARCH_ENUMERATION_BUDGET = 2000

# Maximum number of candidates a search stream may produce.
SEARCH_CANDIDATE_CAP = 200000

# Groups above this order are not checked exhaustively for associativity.
MAX_LAW_CHECK_ORDER = 200

# ########### #
# IDENTIFIERS #
# ########### #

verdict_trivial = 'trivial'
verdict_proper = 'proper'
verdict_unknown = 'unknown'
possible_verdicts = [
    verdict_trivial,
    verdict_proper,
    verdict_unknown
]

form_direct = 'direct'
form_tubing = 'tubing'
possible_forms = [
    form_direct,
    form_tubing
]

signs_both = 'both'
signs_positive = 'positive_only'
possible_signs = [
    signs_both,
    signs_positive
]

# Witness targets tried when coset enumeration runs out of budget.
default_witness_targets = [
    'S3', 'S4', 'S5',
    'A4', 'A5',
    'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8', 'C9', 'C10', 'C11', 'C12'
]

# Repro targets, each backed by configs/repro_<name>.json
repro_targets = {
    'rothaus-unit': 'configs/repro_rothaus_unit.json',
    'c5-unit': 'configs/repro_c5_unit.json',
    'c5-s5': 'configs/repro_c5_s5.json',
    'c5-search': 'configs/repro_c5_search.json',
    'trivial-identity': 'configs/repro_trivial_identity.json'
}

possible_repro_kinds = [
    'unit-check',
    'matrix-of',
    'classify',
    'search',
    'dim-evidence'
]

# Exit statuses of the command line surface
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXHAUSTED = 3

# Human readable name mapping
human_mapping = {
    'S3': 'Symmetric group S3',
    'S4': 'Symmetric group S4',
    'S5': 'Symmetric group S5',
    'A4': 'Alternating group A4',
    'A5': 'Alternating group A5',

    'trivial': 'Trivial',
    'proper': 'Proper',
    'unknown': 'Unknown',

    'direct': 'Direct form',
    'tubing': 'Tubing form',

    'examined': 'Candidates examined',
    'matched': 'Matching the target matrix',
    'admissible': 'Admissible',
    'truncated': 'Stream truncated',
    'n_trivial': 'Trivial extensions',
    'n_proper': 'Proper extensions',
    'n_unknown': 'Unknown (budget exhausted)',
    'relator': 'Relator',
    'verdict': 'Verdict',
    'order': 'Order of extension',
    'witness': 'Witness target',
    'budget_used': 'Cosets defined'
}
