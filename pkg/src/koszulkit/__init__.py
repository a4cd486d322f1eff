"""koszulkit: exact Koszul homology of monomial and p-Borel ideals."""

from .chains import KoszulChain
from .homology import BettiTable, betti_table, strand_basis, strand_homology
from .ideals import MonomialIdeal, PBorelFactorization, principal_p_borel
from .linalg import GF, QQ, parse_field
from .grammar import parse_ideal, render_ideal

SCHEMA_VERSION = 1

__all__ = [
    "KoszulChain",
    "BettiTable",
    "betti_table",
    "strand_basis",
    "strand_homology",
    "MonomialIdeal",
    "PBorelFactorization",
    "principal_p_borel",
    "GF",
    "QQ",
    "parse_field",
    "parse_ideal",
    "render_ideal",
    "SCHEMA_VERSION",
]
