//! Command-line front end for `gapsum-core`: the expression parser, the
//! factored renderer and the subcommand driver.

pub mod app;
pub mod factor;
pub mod parser;

pub use app::{run, EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
pub use parser::{parse_poly, ParseError, PolyExpr};
