//! Error type shared across the crate.

use crate::dynamics::Trajectory;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A constraint or actuator matrix did not have the expected rank.
    /// The message names the offending columns.
    #[error("rank deficiency: {0}")]
    RankDeficient(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Time integration exceeded the overflow threshold. Carries the
    /// trajectory recorded up to the failing step.
    #[error("state norm overflow at t = {time}: |Y| = {norm:.3e}")]
    BlowUp {
        time: f64,
        norm: f64,
        partial: Box<Trajectory>,
    },

    #[error("invalid fit window: {0}")]
    InvalidWindow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
