"""Random K-out / Erdos-Renyi intersection graphs for pairwise key
predistribution over unreliable links."""

from .analysis import (
    DegreeReport,
    degree_report,
    is_k_connected,
    min_degree_at_least,
    vertex_connectivity,
)
from .graphs import (
    Graph,
    GraphFormatError,
    PairingTable,
    er_graph,
    intersect,
    intersection_edge_prob,
    kout_edge_prob,
    kout_graph,
    nested_er,
    nested_kout,
    sample_intersection,
    sample_pairing,
)
from .keyrings import KeyRingTable, KeyToken, build_key_rings, secure_link
from .kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .montecarlo import (
    SweepRow,
    SweepTable,
    TrialOutcome,
    coupling_audit,
    estimate,
    run_trial,
    sweep,
)
from .seeds import SeedSpec, derive_subseed
from .thresholds import (
    DegreePmf,
    ModelParams,
    critical_K,
    degree_pmf_asymptotic,
    degree_pmf_exact,
    er_threshold_p,
    expected_degree_count,
    scaling_deviation,
    scaling_deviation_normalized,
)

__version__ = "0.1.0"
