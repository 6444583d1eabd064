"""Finite median-graph toolkit.

Median graphs are exactly the 1-skeleta of CAT(0) cube complexes, so every
quantity here (hyperplanes, halfspaces, gates, contact graphs, wallspace
duals, symmetry certificates) is computed on the graph and read off the
complex. See the project README for the correspondence.
"""

from ._ccx import *  # noqa: F401,F403
