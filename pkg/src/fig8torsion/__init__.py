"""Reidemeister torsion of Dehn surgeries on the figure-eight knot:
SL(2,C) representation variety, closed torsion formulas, and the
chain-complex / Fox-calculus oracles that verify them."""

from .chain import (ChainComplex, TorsionValue, is_acyclic, torsion,
                    torsion_with_basis_perturbation)
from .errors import (DegenerateLeadingCoefficient, DegenerateU,
                     DimensionMismatch, Fig8Error, InvalidSlope, NotAcyclic,
                     OffVariety, SingularMatrix, SingularParameter,
                     WordParseError)
from .linalg import (E2, mat2, mat2_inverse, mat2_mul, nullspace, rank,
                     solve_quadratic)
from .riley import (RileyPoint, is_peripherally_acyclic,
                    longitude_matrix_closed, longitude_matrix_word,
                    longitude_trace, longitude_word, make_point, rep_matrices,
                    riley_poly, solve_t, trace_u)
from .surgery import (GridSpec, SurgerySlope, SurgerySolution,
                      aligned_longitude_eigenvalue, solve_surgery,
                      surgery_residual, surgery_table)
from .formulas import (TorsionReport, full_report, torsion_exterior_closed,
                       torsion_exterior_oracle, torsion_solid_torus_closed,
                       torsion_solid_torus_from_trace, torsion_surgered,
                       torus_torsion_oracle)
from .words import (GroupRingElement, evaluate_group_ring, evaluate_word,
                    fox_derivative, parse_word, word_concat, word_inverse,
                    word_to_text)

__version__ = "0.1.0"
