//! Exact polynomial layer: univariate and bivariate arithmetic over the
//! rationals, factorization, text parsing, the special-form theorems and the
//! displayed identity checks.

pub mod bipoly;
pub mod factor;
pub mod identities;
pub mod parse;
pub mod shapes;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use factor::{factor_q, is_reducible_q, Factorization};
pub use identities::{verify_identity, IdentityTag};
pub use parse::{parse_bipoly, parse_ratfun_parts, parse_unipoly};
pub use shapes::{shape_verdict, DetectedShape, ShapeReport};
pub use unipoly::UniPoly;
