use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: String,
        value: f64,
        reason: &'static str,
    },

    #[error("outside domain: {0}")]
    Domain(String),

    #[error(
        "quadrature did not converge: estimate {estimate:e} with error bound {error:e} \
         after {subdivisions} subdivisions"
    )]
    Quadrature {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error(
        "no eigenvalue with {target} nodes in [{lo:e}, {hi:e}]: node counts are {nodes_lo} and {nodes_hi}"
    )]
    NoEigenvalue {
        lo: f64,
        hi: f64,
        nodes_lo: u32,
        nodes_hi: u32,
        target: u32,
    },

    #[error("step size collapsed to {h:e} at r = {r:e}")]
    StepSizeCollapse { r: f64, h: f64 },

    #[error("{0} did not converge")]
    NoConvergence(&'static str),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(name: &str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name: name.to_string(),
            value,
            reason,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
