//! Command-line front end: text formats for algebras and extensions, and
//! the subcommand dispatcher. The binary in `main.rs` is a thin shell
//! around [`dispatch`]; tests drive the same function directly.

pub mod dispatch;
pub mod format;

pub use dispatch::dispatch;
