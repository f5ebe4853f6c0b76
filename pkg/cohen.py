"""
Entry point of the command line surface, see cohen_ext/cli.py.

To check the unit of the integral group ring of D10:
`python cohen.py unit-check configs/element_rothaus.json`

To reproduce the C5 example, which is proper with a surjection onto S5:
`python cohen.py repro c5-s5`

To list every bundled reproduction target:
`python cohen.py list-repro`
"""

from cohen_ext import cli


if __name__ == '__main__':
    cli.main()
