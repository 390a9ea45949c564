use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("polynomial is not bihomogeneous: mixed bidegrees {first:?} and {second:?}")]
    NotBihomogeneous { first: (u32, u32), second: (u32, u32) },

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("component is zero for j > -n (j = {j}, n = {n})")]
    ComponentVanishes { j: i64, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("shape is not the resolution of a CM module of this codimension: {0}")]
    NotCohenMacaulayShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
