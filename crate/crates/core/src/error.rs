use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 1")]
    InvalidModulus(u64),

    #[error("residue {residue} out of range for modulus {modulus}")]
    InvalidResidue { residue: u64, modulus: u64 },

    #[error("series not invertible over the integers")]
    NotInvertible,

    #[error("coefficient at q^{index} requested but series is only exact through q^{order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("{what}: {requested} exceeds configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("order beyond float-oracle reliability (max residue {residue:.3e})")]
    FloatOracleUnreliable { residue: f64 },

    #[error("malformed determinant problem: {0}")]
    MalformedProblem(String),

    #[error("unknown series {0:?}")]
    UnknownSeries(String),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}

pub type Result<T> = std::result::Result<T, Error>;
