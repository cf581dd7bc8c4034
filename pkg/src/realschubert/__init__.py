"""Real solutions of Schubert problems for codimension-2 subspaces via rational functions."""

__version__ = "0.1.0"

from .combinatorics import ContentVector, Tableau, enumerate_ssyt, kostka, kostka_closed_form  # noqa: E402,F401
from .nets import BlockStructure, Net, enumerate_nets, net_to_ssyt, ssyt_to_net  # noqa: E402,F401
from .projective import (CurveMatrix, RationalClass, Subspace, classes_equal,  # noqa: E402,F401
                         curve_matrix, incidence_check, is_real_class, is_reducible,
                         rational_from_subspace, subspace_from_rational)
from .solver import (ProblemConfig, SolutionSet, SolverParams, block_residual,  # noqa: E402,F401
                     flags_from_solution, is_separated, solve_critical_points,
                     solve_polynomial, solve_problem1)
