//! Hurwitz curves as finite quotients of the `(2,3,7)` triangle group,
//! Hurwitz origamis, and congruence data over `Q(cos 2pi/7)`.
//!
//! Groups are table-based permutation groups ([`group::FinGroup`]). On top
//! of them sit regular dessins ([`dessin`]), origami pairs ([`origami`]),
//! kernel homology and extensions ([`homol`]), `H^1` characters
//! ([`charfix`]), and the genus census ([`census`]). [`arith`] holds finite
//! fields and prime splitting in the cubic field.

pub mod arith;
pub mod catalog;
pub mod census;
pub mod charfix;
pub mod dessin;
pub mod error;
pub mod group;
pub mod homol;
pub mod linalg;
pub mod origami;
pub mod perm;

pub use error::{Error, Result};
pub use group::FinGroup;
pub use perm::Perm;
