//! Exact third-order Jacobsthal and Jacobsthal-Lucas octonions.
//!
//! - [`octonion`]: integer octonions, the basis table, rational scaling.
//! - [`scalar`]: the integer sequences, their closed forms, and the scalar
//!   identities between them.
//! - [`octonion_sequences`]: `JO_n`, `jO_n`, and the constants `alpha` and
//!   `eps_n` of their closed forms.
//! - [`identity`]: a registry of every identity with a two-path verifier
//!   and structured discrepancy reports.
//! - [`cli`]: the `jocto` command-line front end.
//!
//! Nothing here rounds. A check passes only on exact equality.

pub mod cli;
pub mod error;
pub mod identity;
pub mod octonion;
pub mod octonion_sequences;
pub mod scalar;

pub use error::{Error, Result};
pub use identity::{
    run_suite, verify, verify_range, IdentityId, RangeReport, Value, Variant, VariantPolicy,
    VerificationReport,
};
pub use octonion::{Coefficient, Octonion, ScaledOctonion};
pub use octonion_sequences::{alpha, epsilon_hat, oct_seq, oct_seq_closed, OctonionSequenceKind};
pub use scalar::{seq_closed, seq_value, SequenceKind};
