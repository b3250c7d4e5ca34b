//! Exact simulation and analysis of discrete-time quantum walks.
//!
//! The walker carries a two-level coin; one step rotates the coin with a
//! three-angle U(2) operator and then shifts the `|0⟩` component one site to
//! the left and the `|1⟩` component one site to the right (wrapping on a
//! cycle). Everything is simulated exactly on the full complex state vector,
//! in double precision, with no sampling anywhere.
//!
//! On top of the engine the crate computes the quantities that characterize
//! recurrence and mixing of these walks:
//!
//! - the return-probability series `p0(t)` and the quantum
//!   Pólya number `P = 1 − Π_t [1 − p0(t)]`,
//! - a two-copy measurement witness separating complete recurrence,
//!   fractional recurrence, and transience,
//! - time-averaged distributions and total-variation distance to uniform
//!   on the n-cycle (mixing),
//! - position variance on the line,
//! - the classical symmetric random walk baseline (binomial return
//!   probabilities and the classical Pólya number).
//!
//! ```
//! use qwalk::{CoinParams, CoinMatrix, InitialSpin, Topology, WalkState};
//!
//! let coin = CoinMatrix::new(CoinParams::hadamard()).unwrap();
//! let mut state = WalkState::localized(InitialSpin::symmetric(), Topology::line(10)).unwrap();
//! state.evolve(&coin, 10).unwrap();
//! assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
//! ```

pub mod classical;
pub mod coin;
pub mod distribution;
pub mod error;
pub mod mixing;
pub mod recurrence;
pub mod state;
pub mod topology;

pub use coin::{CoinMatrix, CoinParams, InitialSpin};
pub use distribution::DistributionRecord;
pub use error::{Error, Result};
pub use state::WalkState;
pub use topology::Topology;
