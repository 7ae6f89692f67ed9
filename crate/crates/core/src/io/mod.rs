//! Text and JSON formats.

pub mod json;
pub mod parse;
pub mod print;

pub use json::{
    parse_darboux, parse_structure, parse_system, print_darboux, print_structure, print_system,
};
pub use parse::{parse_polynomial, parse_scalar};
pub use print::print_scalar;
