//! Low-order concordance invariants of string links.
//!
//! The crate computes pairwise linking numbers, triple linking numbers
//! `mu(ijk)`, Sato-Levine invariants `mu(iijj)`, and component Arf invariants
//! of string link diagrams, together with the group operations (stacking,
//! inverse, commutator, closure) and the classification of a diagram into the
//! low-order quotients of the solvable filtration of the link concordance
//! group.

pub mod diagram;
mod error;
pub mod filtration;
pub mod invariants;
pub mod magnus;
pub mod textio;
pub mod verify;
pub mod wirtinger;

pub use diagram::{
    borromean, braid_closure, braid_generator_a, figure_eight_component, from_braid_word, trivial,
    twisted_hopf, validate, whitehead, ClosedDiagram, EventKind, MorseEvent, StrandLabeling,
    StringLinkDiagram, Violation,
};
pub use error::{Error, Result};
pub use filtration::{
    classify_full_2comp, classify_linking, classify_zero, strand_pairs, strand_triples, verdict,
    ClassificationVector, SolvabilityLevel, SolvabilityVerdict,
};
pub use invariants::{
    arf, component_knot, conway, conway_randomized, linking_number, sato_levine, triple_linking,
    ArfValue, IntPolynomial, SATO_LEVINE_CONWAY_SIGN,
};
pub use magnus::{
    chen_milnor_longitude, expand, milnor, milnor_with_truncation, report,
    report_with_truncation, MilnorReport, TruncatedSeries, DEFAULT_TRUNCATION,
};
pub use textio::{parse_diagram, write_closed_diagram, write_diagram};
pub use verify::{
    check_commutator_4_2, check_commutator_4_2_random, check_cross_oracle_conway,
    check_cross_oracle_on, check_full_classification_homomorphism, check_nonsplitting_4_4,
    check_nonsplitting_4_4_random, check_nonsplitting_obstruction_3_1,
    check_nonsplitting_obstruction_on, check_property_additivity, check_property_conjugation,
    check_property_inverse_negation, check_property_stack_inverse,
    check_property_truncation_stability, check_skein_determinism, run_all, CheckResult,
    DiagramSampler,
};
