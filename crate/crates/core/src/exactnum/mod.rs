//! Exact arithmetic: cyclotomic numbers, Laurent polynomials, rational
//! functions, specialization points and dense linear algebra.

pub mod cyclo;
pub mod field;
pub mod laurent;
pub mod linalg;
pub mod ratfunc;

pub use cyclo::{eps_pow, CycField, CycRat};
pub use field::{generic_field, separation_product, specialize, GenericField, Mono, ParamField, Scalar, SpecPoint};
pub use laurent::LaurentPoly;
pub use linalg::Mat;
pub use ratfunc::RatFunc;
