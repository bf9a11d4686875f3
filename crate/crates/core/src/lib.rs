//! Exact analysis of real line and plane arrangements.
//!
//! The crate builds arrangements over exact ordered fields (ℚ and ℚ(√5)),
//! computes their intersection posets and Poincaré polynomials, decides
//! factoredness and simpliciality, builds the bounded cell complex of a line
//! arrangement, and runs Falk's weight test for asphericity of the cone:
//! constraint generation, verification of a given weight system, and an
//! exact simplex search for one.
//!
//! ```
//! use arrlab::arrangement::icosidodecahedral;
//! use arrlab::poset::Hyperplanes;
//!
//! let a = icosidodecahedral();
//! assert_eq!(a.poincare_polynomial().to_string(), "1 + 16t + 75t^2 + 60t^3");
//! ```

pub mod arrangement;
pub mod builtins;
pub mod complex;
pub mod factored;
pub mod falk;
pub mod lpcore;
pub mod poset;
pub mod render;
pub mod report;
pub mod scalar;

pub use arrangement::{
    icosidodecahedral, AffineLine, AnyArrangement, CentralArrangement, CentralPlane,
    LineArrangement, PlaneClass,
};
pub use scalar::{Field, GoldenScalar, Rational};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Syntax(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("hyperplane normal is zero")]
    ZeroNormal,
    #[error("duplicate hyperplane {0}")]
    DuplicateHyperplane(String),
    #[error("hyperplane index {index} out of range for {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("arrangement has rank {0}, expected 3")]
    RankTooSmall(usize),
    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),
    #[error("weight system has no value for corner (v{vertex}, f{face})")]
    MissingCorner { vertex: usize, face: usize },
    #[error("unknown corner (v{vertex}, f{face})")]
    UnknownCorner { vertex: usize, face: usize },
    #[error("negative weight {value} on corner (v{vertex}, f{face})")]
    NegativeWeight { vertex: usize, face: usize, value: Rational },
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("unknown builtin arrangement `@{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
