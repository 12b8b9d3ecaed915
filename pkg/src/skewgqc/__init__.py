"""Skew generalized quasi-cyclic codes over F_q and F_q + vF_q (v^2 = v)."""
from .errors import *  # noqa: F401,F403
from .finite_field import Automorphism, FieldElement, FieldSpec
from .ring_s import FqRing, SElement, SRing, crt_join, crt_split, gray, lee_weight
from .skew_poly import (DivisionResult, SkewPoly, SkewRing, enumerate_right_divisors, gcld, gcrd,
                        is_right_divisor, lclm, left_divide, parse_poly, render_poly, right_divide,
                        right_divide_recurrence, skew_mul)
from .skew_cyclic import (SkewCyclicCode, build_skew_cyclic, combine_crt_codes, count_skew_cyclic,
                          factor_xn_minus_1, is_idempotent, make_idempotent_generator, sigma)
from .sgqc import (BlockProfile, DualWitness, PolyTuple, SgqcCode, annihilator, bch_bound, build_1gen,
                   build_rho_gen, combine_crt_sgqc, count_1gen_sgqc, dual_code, hermitian_conjugate,
                   hermitian_product, is_self_dual, kset_generators, module_mul, sigma_l)
from .analysis import (LinearCodeFq, ParamReport, component_distance_reduction, gray_image,
                       min_distance, min_lee_distance, rank_over_gray, verify_closure)

__version__ = "0.1.0"
