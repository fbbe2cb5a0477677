//! Mod-2 characteristic numbers of real, complex and quaternionic
//! Grassmannians, and machine checks that the non-bounding ones of a given
//! dimension are linearly independent in unoriented bordism.
//!
//! The building blocks, bottom up:
//!
//! * [`poly`]: sparse polynomials over GF(2).
//! * [`flag`]: the cohomology ring of the real flag manifold, with normal
//!   forms and top-class evaluation.
//! * [`symmetric`]: elementary symmetric polynomials and power sums.
//! * [`grassmann`]: Grassmannian descriptors, the bounding criterion,
//!   Stiefel-Whitney classes and numbers.
//! * [`verify`]: enumeration of the non-bounding Grassmannians per dimension
//!   and the two independence checks (triangular matrix argument and a rank
//!   oracle on full Stiefel-Whitney vectors).

pub mod error;
pub mod flag;
pub mod grassmann;
pub mod poly;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use flag::FlagContext;
pub use grassmann::{Field, GrassmannianDesc, Partition, SwVector};
pub use poly::{Gf2Poly, Monomial};
pub use verify::{Gf2Matrix, Method, VerificationReport, VerifyOptions};
