//! Command-line front end for the `padic_dyn` library: the polynomial
//! expression parser, JSON and DOT renderers, and subcommand dispatch.

pub mod app;
pub mod dot;
pub mod json;
pub mod parse;

pub use parse::{parse_poly, ParseError};
