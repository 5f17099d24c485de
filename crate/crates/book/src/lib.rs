//! The guide in `book/`, compiled so that `cargo test` runs its snippets.
//!
//! One module per chapter, so a failing doctest names its chapter.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}
#[doc = include_str!("../../../book/src/dessins.md")]
pub mod dessins {}
#[doc = include_str!("../../../book/src/census.md")]
pub mod census {}
#[doc = include_str!("../../../book/src/arith.md")]
pub mod arith {}
#[doc = include_str!("../../../book/src/homology.md")]
pub mod homology {}
#[doc = include_str!("../../../book/src/character.md")]
pub mod character {}
#[doc = include_str!("../../../book/src/origami.md")]
pub mod origami {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
