//! File formats, rendering and command logic behind the `hombi` binary.

pub mod commands;
pub mod io;
pub mod render;
