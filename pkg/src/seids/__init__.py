"""Symmetric determinantal singularities: exact standard bases, SEIDS audits,
polar multiplicities and Whitney equisingularity of families."""

from .errors import (BudgetExceeded, ComputationError, GenericityError, InputError,
                     NotMPrimary, SeidsError)
from .geometry import (DeterminantalGerm, SeidsReport, has_smoothing, is_isolated_singularity,
                       pullback_germ, rank_stratum_ideal, seids_check, stratum_codim)
from .invariants import (EquisingularityVerdict, GenericityContext, GermFamily, InvariantRecord,
                         e_pair, germ_invariants, intersection_number, polar_variety_generic,
                         relative_polar_multiplicity_md, stabilize, stratum_invariant,
                         whitney_verdict)
from .kernels import COMPILED
from .module_calculus import (ModulePair, jacobian_module, n_module, pair_agrees_off_origin,
                              scale_by_parameter_ideal)
from .poly import MonomialOrder, Polynomial, PolynomialRing, parse_polynomial
from .problem import ProblemSpec, emit, load_problem, loads_problem
from .stdbasis import (Ideal, StandardBasis, Submodule, colength, dimension,
                       hilbert_samuel_multiplicity, saturation, standard_basis)

__version__ = "0.1.0"
