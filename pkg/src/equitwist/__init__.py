"""Exact engine for equivariant graded Homs of linearized box powers,
twist-functor value tables, K-lattice actions, and double-cover bookkeeping."""

from .graded import GradedDims, HilbertSeries, graded_sum, kunneth_product, shift, tensor_power
from .subset_algebra import MAX_SUBSET_N, IsotypicSubspace, SubsetAlgebra, invariant_subalgebra
from .symgroup import (
    BRUTE_FORCE_MAX_N,
    CycleType,
    GroupCohomologyTable,
    Permutation,
    brute_force_isotypic,
    brute_force_tensor_isotypic,
    cohomology_table,
    isotypic_dims,
    linearization_count,
    partitions,
)
from .objects import (
    FormalGenerator,
    HomRuleError,
    LinBoxObject,
    OrthogonalCompanion,
    PnObjectReport,
    are_isomorphic,
    equivariant_hom,
    is_pn_object,
    is_spherical,
)
from .twists import (
    BigPTwist,
    FunctorWord,
    IDENTITY_WORD,
    InducedPTwist,
    InducedTwist,
    Inverse,
    PTwist,
    RuleClosureError,
    Shift,
    SphericalTwist,
    TwistCalculus,
    parse_word,
    word,
)
from .lattice import (
    ClassIsometry,
    HypothesisError,
    MukaiLattice,
    MukaiVector,
    SClass,
    SymTensor,
    default_lattice,
    equivariant_euler,
    induced_class_map,
    mu_injectivity_check,
    mu_map,
    p_twist_class_action,
    reflection_isometry,
    spherical_reflection,
    sym_basis_element,
    sym_basis_multisets,
    sym_pure,
)
from .cover import (
    CoverClosureError,
    CoverContext,
    CoverGenerator,
    CoverObject,
    CoverSummand,
    DescendedFunctor,
    DescentPair,
    EquivariantLabel,
    QSummand,
    QuotientObject,
    lift_descend_bookkeeping,
    twist_label,
)
from .config import ConfigError, RunConfig, load_config
from .verify import DEVIATION, FAIL, PASS, PropertyResult, run_suite

__version__ = "0.1.0"
