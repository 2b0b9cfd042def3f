//! LP decoding of binary LDPC codes and upper bounds on its
//! channel-parameter thresholds.
//!
//! The decoder minimizes the LLR cost over the fundamental polytope of a
//! parity-check matrix; scaled polytope points form the fundamental cone,
//! and cone vectors with negative cost certify decoding failures. The
//! `bounds0` module turns the sign-based certificate into the BSC bound
//! `eps <= 1/w_row` and an AWGN noise ceiling; `bounds2` optimizes
//! certificates over 2-neighborhood sign-pattern orbits for a tighter BSC
//! bound. `montecarlo` estimates the corresponding finite-length failure
//! rates.
//!
//! With the default `parallel` feature, Monte Carlo trials run on a rayon
//! pool; results are bit-identical to the sequential build because trials
//! are seeded individually and aggregation only counts outcomes.

pub mod bounds0;
pub mod bounds2;
pub mod channels;
pub mod codes;
pub mod decoder;
pub mod geometry;
pub mod lp;
pub mod montecarlo;

pub use channels::{ChannelModel, LlrVector};
pub use codes::Code;
pub use decoder::{lp_decode, ml_decode_bruteforce, DecodeResult};
pub use geometry::{FractionalVector, LinearSystem};
pub use lp::{solve_lp, LpProblem, LpSolution, LpStatus};
