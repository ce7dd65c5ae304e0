"""Prime graphs (Gruenberg-Kegel graphs) of almost simple and solvable groups."""

from .classifier import DEFAULT_UNITARY_READING, UNITARY_READINGS, Verdict, classify, descriptor
from .certificates import NegativeCert, PositiveCert, concretize_certificate
from .descriptors import (
    AlmostSimpleDescriptor,
    Alternating,
    Exceptional,
    InvalidDescriptor,
    Linear,
    OrthogonalEven,
    OrthogonalOdd,
    OuterProfile,
    Sporadic,
    Symplectic,
    Unitary,
    UnsupportedDescriptor,
    canonicalize,
    pi_socle,
    presets,
)
from .numtheory import CapExceeded, PrimePower, mult_order, primitive_prime_divisors
from .oracles import (
    Extension,
    SpectrumResult,
    semisimple_orders_psu3,
    spectrum_alternating,
    spectrum_blueprint,
    spectrum_classical,
    spectrum_named,
)
from .prime_graph import (
    OrderSet,
    PrimeGraph,
    RealizabilityReport,
    find_3_coclique,
    graph_from_orders,
    solvable_realizable,
    two_clique_partition,
)
from .realizer import RealizationReport, SolvableBlueprint, analytic_graph, realize, verify

__version__ = "0.1.0"
