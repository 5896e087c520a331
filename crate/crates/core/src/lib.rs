//! Exact symbolic computation in the quantum matrix algebra `M_q(n)`.
//!
//! * [`laurent`]: coefficients in `Z[q, q^-1]`.
//! * [`indexcomb`]: index sets and tuples, inversion counts, `surrounds`.
//! * [`qalgebra`]: normal-form straightening, quantum minors, quasi-minor
//!   fractions and the polynomial identities they satisfy.
//! * [`flagspace`]: flag-algebra expressions, the graded space `V`, and the
//!   Gaussian elimination expressing the commutation relation through Young
//!   symmetry relations.
//! * [`gammapaths`]: the weighted Boolean-lattice graph, its paths and the
//!   weight-preserving pairing of regular and irregular paths.
//! * [`suites`]: batch verification drivers shared by the CLI.

pub mod error;
pub mod flagspace;
pub mod gammapaths;
pub mod indexcomb;
pub mod laurent;
pub mod qalgebra;
pub mod suites;

pub use error::{Error, Result};
pub use indexcomb::{cross_inversions, inversions, pos, surrounds, IndexSet, IndexTuple, SurroundsWitness};
pub use laurent::Laurent;
pub use qalgebra::{Engine, Gen, Limits, MinorSpec, QElement, QuasiFraction, Strategy};
