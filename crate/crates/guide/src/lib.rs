//! Doc-test shim for the `muzeta` guide.
//!
//! Each module below carries one chapter of the book (`book/src/*.md`) as
//! its documentation, included verbatim. Running `cargo test -p
//! muzeta-guide` therefore compiles and executes every Rust snippet the
//! guide shows, so the prose cannot drift away from the library.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/nondegeneracy.md")]
pub mod nondegeneracy {}

#[doc = include_str!("../../../book/src/charts.md")]
pub mod charts {}

#[doc = include_str!("../../../book/src/zeta.md")]
pub mod zeta {}

#[doc = include_str!("../../../book/src/milnor.md")]
pub mod milnor {}

#[doc = include_str!("../../../book/src/shift.md")]
pub mod shift {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
