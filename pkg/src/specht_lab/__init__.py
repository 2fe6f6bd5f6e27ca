"""Specht-type quotients of braid groups: exact winding lattices, a free
ZS_n-resolution through degree 3, cohomology of S_n with lattice coefficients
and splitting decisions for the associated extensions.

Everything is exact integer arithmetic; no floating point is used.
"""

from .braids import BraidWord, NotPure, SUBGROUPS, rho, specht_membership, winding_vector
from .cohomology import (CohomologyGroup, ExtensionGroup, QuotientSpec, cohomology_group, is_coboundary,
                         module_map, pushforward, splitting_check)
from .linalg import IntMatrix, Lattice, lattice_index, smith_form, snf
from .modules import MODULE_IDS, ModuleElement, PresentedModule, classify_submodule, module
from .resolution import Cochain, boundary, cells, named_cocycle
from .symmetric import Permutation, Ring
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "NotPure", "SUBGROUPS", "rho", "specht_membership", "winding_vector",
    "CohomologyGroup", "ExtensionGroup", "QuotientSpec", "cohomology_group", "is_coboundary",
    "module_map", "pushforward", "splitting_check",
    "IntMatrix", "Lattice", "lattice_index", "smith_form", "snf",
    "MODULE_IDS", "ModuleElement", "PresentedModule", "classify_submodule", "module",
    "Cochain", "boundary", "cells", "named_cocycle",
    "Permutation", "Ring", "run_suite",
]
