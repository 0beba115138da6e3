"""Binary cyclic and quadratic-residue codes under PSL_2(n).

Constructs the codes, tests PSL_2(n)-invariance, enumerates invariant
subspaces, checks the twisted Fourier identity behind the classification
and verifies the t-designs carried by the invariant codes.
"""

__version__ = "0.1.0"

from .codes import (
    CyclicCode,
    LinearCode,
    WeightDistribution,
    cyclic_from_defining_set,
    dual,
    extend,
    is_type2_extremal,
    min_distance,
    puncture,
    qr_codes,
    weight_distribution,
)
from .cyclotomic import CosetTable, ResidueSplit, build_cosets, minimal_polynomial, residue_split
from .designs import BlockDesign, blocks_of_weight, design_sweep, verify_design
from .errors import CapExceeded, FalsificationError
from .gf2m import BinaryPolynomial, FieldContext, build_field
from .psl2 import (
    ProjPermutation,
    all_invariant_subspaces,
    apply,
    classify_extended_cyclic,
    generators,
    group_closure,
    is_invariant,
    spin,
)
from .spectral import (
    basis_representation,
    check_blahut,
    fourier,
    permuted_spectrum,
    spectral_witness,
    u_polynomial,
)
