//! Command-line front end for `upsilon-core`: a knot expression parser, a
//! region DSL, the invariant commands, report pipelines and JSON/CSV output.

mod app;
pub mod complex_file;
pub mod error;
pub mod expr;
pub mod output;
pub mod region;
pub mod reports;
mod scan;

pub use app::{execute, run, Cli, Command};
pub use error::{CliError, ParseError};
pub use expr::{parse_knot_expr, KnotExpr};
pub use region::parse_region;
