//! Burling sequences, the marked-graph operations and containment witnesses.

pub mod ops;
pub mod random;
pub mod sequences;
pub mod witness;

pub use ops::{dup, ext, lift, op_dup, op_ext, op_sub, op_sub_star, sub, sub_star, Composite, Layout};
pub use sequences::{
    b1, b2, burling, burling_ddot, burling_prime, ddot_m_sequence, generate, generate_capped,
    predicted_marks, predicted_size, BurlingVariant, DdotArtifacts, DEFAULT_VERTEX_CAP,
};
pub use witness::{witness_lemma, LemmaId, LemmaParams, Witness, DEFAULT_WITNESS_CAP};
