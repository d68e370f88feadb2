use thiserror::Error;

/// Errors produced by geometry, measure construction and descriptor parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid body: {0}")]
    InvalidBody(String),

    #[error("point is not on the unit circle (gauge = {gauge})")]
    NotOnBoundary { gauge: f64 },

    #[error("arc endpoints are antipodal within tolerance")]
    AntipodalArc,

    #[error("no mutual orthogonality partner within a half-turn of theta = {theta}")]
    NoPartner { theta: f64 },

    #[error("no Auerbach points detected; they exist for every norm, so the scan tolerances are inconsistent")]
    NoAuerbachPoints,

    #[error("invalid perfect set: {0}")]
    InvalidPerfectSet(String),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("existence gate failed: {0}")]
    GateFailed(String),

    #[error("measure is not admissible: {0}")]
    InvalidMeasure(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
