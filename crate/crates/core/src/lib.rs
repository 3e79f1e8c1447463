//! Exact complementarity spectra and spectral redundancy of graphs.
//!
//! The polynomial and algebraic-number layers are generic over an exact
//! integer [`Scalar`]; the aliases below fix it to `BigInt`, which is what
//! the graph-level code uses throughout.

pub mod algebraic;
pub mod coincidence;
pub mod decimal;
pub mod error;
pub mod graph;
pub mod pineapple;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod spectrum;
pub mod sturm;

pub use algebraic::{isolate_real_roots, largest_real_root, Algebraic, Interval};
pub use error::{Error, Result};
pub use poly::Poly;
pub use scalar::Scalar;
pub use sturm::SturmChain;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

/// Integer polynomial with unbounded coefficients.
pub type IntPoly = Poly<BigInt>;
/// Real algebraic number over `BigInt`.
pub type AlgebraicNumber = Algebraic<BigInt>;
/// Closed interval with exact rational endpoints.
pub type RationalInterval = Interval<BigInt>;
/// Exact rational.
pub type BigRational = Ratio<BigInt>;
/// Sturm chain over `BigInt`.
pub type IntSturmChain = SturmChain<BigInt>;
