"""Exact Levi decompositions and conjugacy of Levi subalgebras for Leibniz algebras."""
from .conjugacy import (Automorphism, Classification, Verdict, E_subspace, adjoin_copy_of_levi,
                        build_prop38, classify, criterion, delta_theta, exp_D, exp_R, find_inner_conjugator,
                        nonconjugacy_obstruction, s_theta)
from .core import (AlgebraTable, LinearMap, Subspace, bracket, exp_nilpotent, ideal_closure,
                   is_automorphism, quotient_algebra, right_mult, subspace_product,
                   verify_leibniz)
from .errors import (FormatError, HypothesisFailed, LeibnizError, NoConjugator, NonSplit,
                     NotNilpotent, PostconditionFailed, PreconditionFailed)
from .fixtures import hemisemidirect
from .levi import LeviReport, levi_subalgebra, verify_levi
from .radicals import liezation, nilradical, series, solvable_radical, squares_ideal
from .smodules import (canonical_decomposition, end_dimension, hom_space,
                       simple_ideal_decomposition, simple_module_decomposition)

__version__ = "0.1.0"
