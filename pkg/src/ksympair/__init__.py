"""Symplectic structure detection for k-symmetric Lie algebra pairs.

A pair is a semisimple Lie algebra g with a finite-order automorphism nu;
the package decomposes g = h + m, searches the center of h for an element
acting injectively on m, builds and verifies the invariant symplectic form,
constructs compact/noncompact dual pairs, and reproduces the small-rank
classification tables.
"""

from .algebra import (
    BilinearForm,
    LieAlgebra,
    Subspace,
    bracket,
    center,
    change_basis,
    direct_sum,
    ideal_closure,
    is_ideal,
    is_semisimple,
    is_simple,
    killing_form,
    restriction_of_form,
    subalgebra_restriction,
)
from .automorphisms import (
    CanonicalDecomposition,
    FiniteOrderAutomorphism,
    check_simple_implies_prime,
    fitting_decomposition,
    is_effective,
    is_prime,
    make_automorphism,
)
from .catalog import (
    CatalogEntry,
    TableRow,
    TorusWeights,
    build_sl_real,
    build_so,
    build_sp,
    build_su,
    CATALOG_NAMES,
    generate_table_rows,
    get_entry,
    inner_automorphism_from_torus,
    permutation_automorphism,
)
from .exceptions import (
    DimensionError,
    FieldError,
    InvariantViolationError,
    KsymError,
    NotAutomorphismError,
    NotCentralError,
    NotClosedError,
    NotSemisimpleError,
    NotSimpleError,
    OutOfRangeError,
    PreconditionError,
    WrongOrderError,
)
from .real_forms import (
    InvolutionSplit,
    RealFormConstruction,
    complexified_automorphism,
    complexify,
    dual_real_form,
    embed_in_complexification,
    is_compact_form,
    make_involution_split,
    transfer_injective_element,
)
from .scalars import QSqrt3, RATIONAL, REAL_FLOAT, COMPLEX_FLOAT
from .symplectic import (
    ComplexStructureCheck,
    InjectiveElementReport,
    SymplecticChecks,
    SymplecticVerdict,
    build_symplectic_form,
    calibrated_complex_structure,
    center_of_h,
    check_cocycle,
    check_complex_structure,
    check_invariance,
    find_injective_element,
    symplectic_verdict,
)

__version__ = "0.1.0"
