"""Finite semigroups: congruences, higher commutators, nilpotency degrees."""

from .commutator import centralizes, commutator, full_commutator, generate_cube_set, oracle_centralizes_by_words
from .congruence import (
    Congruence,
    CongruenceLattice,
    all_congruences,
    congruence_from_triple,
    is_congruence,
    join,
    linked_triple,
    meet,
    parse_partition,
    principal_congruence,
    product_congruence,
)
from .constructors import (
    GroupSpec,
    ReesSpec,
    adjoin_zero,
    builtin_algebra,
    builtin_group,
    cyclic_group,
    left_zero,
    paper_S2,
    rectangular_band,
    rees_matrix,
    right_zero,
    trivial,
)
from .core import FiniteSemigroup, classify, direct_product
from .corpus import enumerate_semigroups, generated_manifest, load_manifest, save_manifest
from .errors import BudgetExceeded, InputError, SemicommError
from .formats import cayley_text, load_algebra, parse_cayley, parse_rees_spec, rees_spec_to_json
from .series import degrees, derived_series, lower_central_series, supernilpotency_report
from .structure import (
    find_isomorphism,
    inverse_supernilpotent_decomposition,
    orthodox_cs_decomposition,
    rees_coordinatize,
    warne_decomposition,
)
from .theorems import SuiteBudget, verify_theorem_suite

__version__ = "0.1.0"
