//! Polynomial invariants: HOMFLY-PT by skein recursion, Alexander by
//! determinant, the signature and the linking number.

mod alexander;
mod homfly;
mod poly;
mod signature;

pub use alexander::{alexander, alexander_torus, linking_number};
pub use homfly::{delta, homfly, homfly_with_stats, DEFAULT_BUDGET};
pub use signature::{signature, symmetric_signature};
pub use poly::{LaurentPoly, LaurentPoly1, LaurentPoly2};
