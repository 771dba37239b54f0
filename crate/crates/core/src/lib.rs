//! Exact machinery for deciding, from Galois/monodromy and ramification data
//! or from polynomial shape, whether the set of integral specializations that
//! make an irreducible bivariate polynomial reducible is provably finite —
//! plus the permutation-group, character, genus and factorization layers the
//! verdicts are built from.

pub mod chartab;
pub mod cover;
pub mod criteria;
pub mod error;
pub mod perm;
pub mod polyform;
pub mod ratfun;
pub mod scanner;
pub mod siegelgroup;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{FieldFlag, FiredCriterion, RingFlag, Verdict, VerdictStatus, Witness};
