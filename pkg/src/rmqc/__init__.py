"""Exact laboratory for deterministic measurement-based quantum computation
on Reed-Muller and phase-coset stabilizer states.

Everything numerical is exact: GF(2) linear algebra on int bitsets,
expectation values as integer histograms over roots of unity, and
weight-divisibility checks by full enumeration.  A dense statevector oracle
cross-validates the exact engine at small sizes.
"""

__version__ = "0.1.0"

from .gf2 import (
    BinMatrix,
    BitVec,
    coord_product,
    enumerate_span,
    mat_apply,
    solve_gf2,
    weight,
)
from .phasestate import (
    AngleSpec,
    CorrelationContext,
    CyclotomicSum,
    ExtremalResult,
    PhaseCosetState,
    expectation,
    extremal_bit,
    make_rm_state,
)
from .reedmuller import (
    CSSCode,
    RMCode,
    ax_check,
    css_generators,
    puncture,
    rm_basis,
    rm_dim,
    weight_distribution,
)
from .boolfn import (
    AffineMap,
    TruthTable,
    and_from_nonlinear,
    check_equiv_mod_linear,
    is_linear,
)
from .mbqc import (
    DeterminismViolation,
    MBQCInstance,
    RunResult,
    admissible_inputs,
    example1_instance,
    run,
    truth_table,
)
from .rmfamily import (
    FamilyParams,
    PhaseDiagramCell,
    build,
    closed_form,
    determinism_exact,
    phase_diagram,
    sufficient_condition,
)
from .contextuality import (
    ContextualityVerdict,
    HVMSystem,
    analyze_instance,
    build_system,
    decide,
    mermin_witness,
)
from .lulc import and_protocol, load_data, v_split, verify_lu_family
from .oracle import DenseState, dense_expectation, dense_state, sample_run
