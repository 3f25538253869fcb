//! Exact symbolic toolkit for invariant Einstein metrics on reductive
//! homogeneous spaces: sparse multivariate polynomials over ℚ and ℚ(n),
//! Buchberger's algorithm with lex elimination, certified real-root
//! isolation, Ricci-component construction from structure constants, and
//! an end-to-end search pipeline with interval certificates.

pub mod coeff;
pub mod parampoly;
pub mod monomial;
pub mod poly;
pub mod parse;
pub mod json;
pub mod ratio;
pub mod groebner;
pub mod interval;
pub mod realroots;
pub mod homspace;
pub mod catalog;
pub mod pipeline;
pub mod error;

pub use coeff::{Field, Rat};
pub use error::Error;
pub use monomial::{Monomial, MonomialOrder};
pub use parampoly::{ParamPoly, RatFunc};
pub use poly::{Context, Ctx, MultiPoly};
