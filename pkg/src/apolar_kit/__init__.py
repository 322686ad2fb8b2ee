"""apolar-kit: exact apolarity and Waring decompositions at desk scale.

The package computes apolar ideals and inverse systems of homogeneous
forms, builds trigonal and tetragonal canonical curves on rational
normal scrolls, pushes them through the quotient-by-two-hyperplanes
construction to a cubic in g - 2 variables, and certifies power-sum
decompositions of that cubic.
"""

from .core import (ExactMatrix, Polynomial, change_coordinates,
                   coefficient_matrix, contract, monomial_basis, pair,
                   primitive_point)
from .apolarity import (ApolarAlgebraProfile, ApolarityCertificate,
                        GradedIdealPiece, SocleDimensionError,
                        apolar_ideal_piece, catalecticant, hilbert_function,
                        is_apolar_scheme, macaulay_inverse, piece_contains)
from .waring import (Decomposition, PencilError, fermat_detect,
                     fermat_detect_detail, power_sum_fit, rank_lower_bound,
                     simultaneous_diagonalize)
from .scroll import (DivisorClass, Scroll, ScrollPoint, canonical_class,
                     chow_product, divisor_degree, embed_point, project_type,
                     scroll_new, scroll_quadrics, section_templates)
from .curvegen import (BihomSection, CurveSpec, IdealReconstruction,
                       balanced_type, genus_adjunction, ideal_pieces,
                       sample_points, tetragonal_curve, trigonal_curve)
from .planemodel import (BlowupClass, PlaneModel, adjunction_check,
                         blowup_intersect, clebsch_genus,
                         higher_gonality_degree, nakai_certificate,
                         tetragonal_numerology)
from .pipeline import (AlphaResult, GammaScheme, alpha_for_curve, alpha_map,
                       gamma_points, tetragonal_cube_bound,
                       verify_tetragonal_bound, verify_trigonal_fermat,
                       waring_certificate)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
