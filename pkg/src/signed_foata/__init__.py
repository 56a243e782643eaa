"""
Permutation statistics, canonical presentations, the Foata transformation,
and the MacMahon-type bijections on A_{n+1} and L_{n+1} = C_2 wr A_{n+1}.
"""

from .perm import (
    Group, NotInGroupError, SignedPermutation, compose, format_window,
    generator_a, generator_s, identity, inverse, is_member, parity,
    parse_window, reverse, sort_window,
)
from .statistics import (
    StatisticsBundle, del_B, des, des_A, des_A_set, des_set, ell_A, ell_B,
    ell_L, inv, neg_of_inverse, nrmaj, rmaj, statistics_bundle,
)
from .canonical import (
    ACanonicalWord, AFactor, SCanonicalWord, SFactor, a_factorize,
    covering_f, evaluate, lift_g, parse_canonical, s_factorize,
)
from .foata import format_trace, maj, phi, phi_trace, rtl_phi
from .bijections import (
    Decomposition, LemmaViolation, decompose, psi, psi_stages, s_of, theta,
    theta_stages,
)
from .verify import (
    QPolynomial, VerificationReport, check_all_subsets, check_alternating,
    check_equidistribution, check_psi, check_theta, enumerate_group,
    poly_over, product_formula_A, product_formula_L,
)

__version__ = "0.1.0"
