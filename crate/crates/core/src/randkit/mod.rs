//! Seeded random streams and the distribution samplers the ensemble and
//! limit-operator code draws from.
//!
//! Every Monte Carlo trial owns one [`RngStream`] identified by
//! `(seed, stream_id)`; streams are ChaCha12 keystreams selected by the
//! stream word, so trial `t` of an experiment reproduces bit-for-bit
//! regardless of how many threads execute the experiment.

mod brownian;
mod gamma;
mod moments;
mod stream;

pub use brownian::{sample_brownian, BrownianPath};
pub use gamma::{sample_beta, sample_gamma};
pub use moments::beta_joint_moment;
pub use stream::RngStream;

pub(crate) use brownian::cell_count;
