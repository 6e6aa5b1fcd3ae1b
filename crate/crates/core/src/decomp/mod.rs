//! The classes around an odd hole, homogeneous sets, and the lemma ledger.

mod context;
mod decomposition;
mod homogeneous;
mod lemmas;

pub use context::{distinct_hole_contexts, enumerate_hole_contexts, HoleContext};
pub use decomposition::{decompose_hole_neighborhood, Decomposition};
pub use homogeneous::{find_homogeneous_set, is_homogeneous, module_closure};
pub use lemmas::{
    check_lemma, ledger_tsv, lemma_spec, Conclusion, Gate, GateStatus, LemmaChecker, LemmaSpec, LemmaVerdict,
    Resolution, Scope, TierFilter, LEDGER, LEDGER_VERSION,
};
