//! Idempotent binary relations on finite carriers.
//!
//! - [`relation`]: packed relations, composition, inversion, restriction and
//!   the predicates (full, idempotent, surjective, trivial, condition Γ).
//! - [`witness`]: constructive chains turning nontriviality into a Γ witness.
//! - [`enumerate`]: streaming enumeration of full relations and the census.
//! - [`mahavier`]: threads of Mahavier products over finite chains.
//! - [`format`] and [`cli`]: documents and the command-line surface.

pub mod cli;
pub mod enumerate;
pub mod format;
pub mod mahavier;
pub mod relation;
pub mod witness;

pub use enumerate::{canonical_form, enum_full, enum_idempotent, survey, SurveyMode, SurveyReport};
pub use format::{parse_relation, serialize_relation, Form, ParseError, RelationDocument};
pub use mahavier::{
    gamma_relation, thread_order_profile, threads_naive, threads_propagate, Bonding, Thread,
    ThreadSet,
};
pub use relation::{
    full_square, identity, Permutation, PointSet, PropertyReport, Relation, RelationError, Subset,
};
pub use witness::{
    gamma_witness, lemma1_witness, lemma2_witness, GammaWitness, WitnessChain, WitnessError,
};
