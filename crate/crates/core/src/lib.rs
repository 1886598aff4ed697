//! Decide whether a sequence of polynomials is a (strongly) regular sequence
//! on a finitely presented module over a polynomial ring, and cross-check
//! the answer through Koszul homology, Ext-based depth at primes, and the
//! colon criterion.

pub mod criteria;
pub mod error;
pub mod field;
pub mod fpmodule;
pub mod groebner;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod session;

mod lexer;

pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use fpmodule::{FPModule, Submodule};
pub use groebner::{FreeElement, GroebnerBasis, Ideal};
pub use poly::{PolyRing, Polynomial, Ring, TermOrder};
