//! Named configurations, induced-subgraph detection, and perfection tests.

mod embed;
mod holes;
mod named;
mod perfect;

pub use embed::{classify_freeness, contains_induced, is_free_of, Embedding, Freeness, PatternFilter, PATTERN_CAP};
pub use holes::{find_odd_antihole, find_odd_hole, odd_holes_within, HoleKind, HoleWitness, Parity, HOLE_CAP};
pub use named::{build_named_graph, parse_pattern_list, PatternName};
pub use perfect::{is_perfect, ImperfectionWitness, PerfectVerdict, PerfectionMode, PerfectionOracle};
