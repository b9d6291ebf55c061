//! Excedance-based Eulerian polynomials over the symmetric, hyperoctahedral
//! and even-signed-permutation groups, split by the parity of Coxeter
//! length, together with their gamma expansions.
//!
//! Every polynomial family has two independent routes:
//!
//! * [`oracle`] enumerates the group and sums a monomial weight per element;
//! * [`closed`] builds the same polynomial from recurrences and product
//!   formulas without enumeration.
//!
//! [`harness`] registers every identity between the two routes as a named
//! check and drives the command line tool.

pub mod bijections;
pub mod closed;
pub mod error;
pub mod groups;
pub mod harness;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use poly::{GammaExpansion, Poly, Var, VarMode};
