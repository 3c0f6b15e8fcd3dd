"""ringrange: exact finite commutative ring arithmetic and range-condition analysis.

Realize small commutative rings (residue rings, products, monic polynomial
quotients), classify their elements, decide a catalog of range and
local conditions with verifiable witnesses, construct the total quotient
ring, and audit a lattice of implications over a generated corpus.
"""
from ._config import set_verify_mode, verifying
from ._kernels import HAVE_SPEEDUPS, active_name, available, use
from .elements import (
    ElementClass,
    almost_clean_decompose,
    classify,
    clean_decompose,
    sh_decompose,
    vnr_decompose,
)
from .errors import (
    CapExceededError,
    MixedRingError,
    NotBezoutError,
    NotSemihereditaryError,
    NotVonNeumannRegularError,
    PreconditionError,
    RingSpecError,
)
from .harness import (
    CorpusConfig,
    ImplicationRule,
    PropertyVector,
    RULES,
    assert_implications,
    generate_corpus,
    mine_open_question,
    property_vector,
    report_to_csv,
    report_to_json,
    run_corpus,
)
from .properties import (
    DEFAULT_MATRIX_ORACLE_CAP,
    DEFAULT_SR2_CAP,
    DESCRIPTIONS,
    PropertyId,
    Verdict,
    decide,
    decide_hermite,
    hermite_matrix_oracle,
    hermite_pair_factor,
)
from .quotient import (
    Fraction,
    QRing,
    build_q,
    check_q_theorems,
    frac_eq,
    frac_reduce,
    idempotent_descent,
)
from .rings import (
    BezoutWitness,
    Element,
    Ideal,
    Ring,
    annihilator,
    arith,
    bezout_pair,
    check_ring_axioms,
    ideal_from_generators,
    is_unimodular,
    jacobson_radical,
    principal_ideal,
    realize,
    special_subsets,
)
from .specs import Modular, PolyQuotient, Product, parse_ring_spec
from .transforms import (
    additively_regular_witness,
    idem_regular_witness,
    regular_witness_from_semihereditary,
    sr1_witness_from_vnr,
)

__version__ = "0.1.0"
