use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact computation produced something the theory rules out
    /// (for instance a non-integral coefficient). Always a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("z = {re}{im:+}i lies within {eps:e} of the spectral cut")]
    CutViolation { re: f64, im: f64, eps: f64 },

    #[error("z = {re}{im:+}i is too close to a singularity")]
    Singularity { re: f64, im: f64 },

    #[error("pole at s = {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    #[error("{what} = {requested} exceeds the cap {cap}; {hint}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("quadrature did not converge: best estimate {re}{im:+}i, error estimate {est_error:e}")]
    NonConverged { re: f64, im: f64, est_error: f64 },

    #[error("non-finite result")]
    NonFinite,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
