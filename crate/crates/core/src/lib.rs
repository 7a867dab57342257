//! Right and left keys of semistandard tableaux.
//!
//! [`scanning`] reads keys straight off a tableau with earliest weakly
//! increasing subsequences. [`jdt`] computes the same keys the slow way,
//! from frank skew tableaux, and serves as the reference. [`demazure`] uses
//! right keys to build Demazure characters and checks them against
//! divided differences.

pub mod demazure;
pub mod enumerate;
pub mod jdt;
pub mod polynomial;
pub mod scanning;
pub mod shape;
pub mod skew;
pub mod tableau;
pub mod text;
pub mod verify;

pub use demazure::{Composition, DemazureError, KeyEngine};
pub use enumerate::{count_tableaux, tableaux};
pub use jdt::JdtError;
pub use polynomial::SparsePolynomial;
pub use scanning::{left_key, scanning_tableau};
pub use shape::{Shape, ShapeError};
pub use skew::{SkewError, SkewTableau};
pub use tableau::{Tableau, TableauError};
pub use text::{format_tableau, parse_tableau, ParseError};
