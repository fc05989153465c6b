//! Compiles and runs every code listing in `book/src` as a doctest, one
//! module per chapter so a failure points at its chapter.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/moore.md")]
pub mod moore {}
#[doc = include_str!("../../../book/src/walks.md")]
pub mod walks {}
#[doc = include_str!("../../../book/src/spectral.md")]
pub mod spectral {}
#[doc = include_str!("../../../book/src/expansion.md")]
pub mod expansion {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
