//! Text format and commands behind the `wb` binary.

pub mod commands;
pub mod format;
