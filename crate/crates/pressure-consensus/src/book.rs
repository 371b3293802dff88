//! Compiles and runs the guide's code snippets as doc-tests, keeping the
//! book in `book/` honest against the current API.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/dynamics.md")]
mod dynamics {}

#[doc = include_str!("../../../book/src/schedules.md")]
mod schedules {}

#[doc = include_str!("../../../book/src/contraction.md")]
mod contraction {}

#[doc = include_str!("../../../book/src/products.md")]
mod products {}

#[doc = include_str!("../../../book/src/scenarios.md")]
mod scenarios {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
