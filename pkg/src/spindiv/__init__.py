"""Exact computations with branch-supported divisors on p-gonal curves."""

__version__ = "0.1.0"

from .curve import (
    CurveConstants,
    CurveSpec,
    canonical_class,
    constants,
    curve_from_dict,
    hyperelliptic_curve,
    load_curve,
    make_curve,
    standard_curve,
)
from .divisors import BranchDivisor, DivisorClass, equivalent, format_divisor, parse_divisor, reduce
from .errors import *  # noqa: F401,F403
from .lowgenus import sphere_spin, torus_gcd_lcm_check, torus_spin
from .mobius import GaussianRational, MobiusMap, induce_permutation
from .mumford import (
    MumfordForm,
    alpha,
    class_to_form,
    count_identity_terms,
    enumerate_forms,
    form_to_class,
    verify_count_identity,
)
from .spin import SpinClass, base_spin, is_spin, spin_count, spin_set
from .symmetry import (
    AntipodalProfile,
    ConjugationProfile,
    OddOrderProfile,
    SymmetryAction,
    count_fixed_closed_form,
    fixed_spin,
    fixed_spin_count,
    induced_matrix,
    orbit_subgroup,
)
from .torsion import FpMatrix, FpSubspace, TorsionGroup, presentation_check, torsion_star
from .verify import run_theorem
