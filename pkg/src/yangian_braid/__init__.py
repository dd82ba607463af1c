"""Exact braid group action on Drinfeld tuples and cyclicity sets for
tensor products of Kirillov-Reshetikhin modules of Yangians."""

from .braid_action import apply_generator, apply_word, check_automorphism, check_braid_relation
from .cyclicity import (
    CyclicityCertificate, CyclicitySet, KrFactor, Verdict, check_tensor,
    compute_tables, forbidden_differences, fundamental_set, general_position,
    kr_set, weyl_module_order,
)
from .lie_data import LieDatum, LieType, make_lie_datum, select_numbering
from .ratfun import FactoredRational, Gaussian, RationalTuple, fundamental_tuple, kr_tuple
from .weyl import WeylWord, is_reduced, longest_word

__version__ = "0.1.0"
