//! Expression language and command implementations behind the `gproj` binary.

pub mod commands;
pub mod eval;
pub mod parser;

use gproj::Multivector;

/// Canonical text of a multivector; `parse` reads it back unchanged.
pub fn format(x: &Multivector) -> String {
    x.to_string()
}
