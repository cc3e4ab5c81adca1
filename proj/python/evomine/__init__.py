"""evomine: change mining for evolving networks.

Partition a stream of graph snapshots into time windows, mine the frequent
connected subgraph patterns of every window, and detect emerging, trend-based
and periodic changes in their exact relative frequencies.

All thresholds (alpha, beta, trend_epsilon, theta bin bounds) accept exact
rationals as strings ("0.3", "3/10"), ints, Fractions, or floats (read as
their shortest decimal representation). Frequencies come back as
fractions.Fraction; growth rates as exact strings ("9", "9/2", "inf").
"""

from evomine._core import (
    FrequencyTable,
    Pattern,
    Snapshot,
    TimeWindow,
    canonical_code,
    detect_emerging,
    detect_periodic,
    detect_trends,
    evaluate_patterns,
    find_periodic_chains,
    frequency,
    growth_rate,
    is_subgraph,
    js_divergence,
    load_stream,
    mine_frequent,
    partition,
    run_pipeline,
    snapshot_distribution,
    theta,
    write_stream,
)

__version__ = "1.0.0"

__all__ = [
    "FrequencyTable",
    "Pattern",
    "Snapshot",
    "TimeWindow",
    "canonical_code",
    "detect_emerging",
    "detect_periodic",
    "detect_trends",
    "evaluate_patterns",
    "find_periodic_chains",
    "frequency",
    "growth_rate",
    "is_subgraph",
    "js_divergence",
    "load_stream",
    "mine_frequent",
    "partition",
    "run_pipeline",
    "snapshot_distribution",
    "theta",
    "write_stream",
    "__version__",
]
