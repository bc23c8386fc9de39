"""Finite posets, m-cover posets, m-Tamari lattices, Dedekind-MacNeille
completion and the strip/bouncing maps on Dyck paths."""
from .completion import dm_completion, completion_matches_mtamari
from .dyck import fuss_catalan, mtamari, tamari
from .mcover import mcover, p_kl, p_klw, path_poset
from .poset import BudgetExceeded, Poset, PosetError, PreconditionError, chain, pentagon
from .strip import bounce, strip_decompose, verify_conjecture, zeta

__all__ = [
    "BudgetExceeded",
    "Poset",
    "PosetError",
    "PreconditionError",
    "bounce",
    "chain",
    "dm_completion",
    "fuss_catalan",
    "mcover",
    "mtamari",
    "p_kl",
    "p_klw",
    "path_poset",
    "pentagon",
    "strip_decompose",
    "tamari",
    "verify_conjecture",
    "completion_matches_mtamari",
    "zeta",
]
