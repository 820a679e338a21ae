//! Std companion of `braidmon-core`: text formats, a bundled example corpus,
//! scrambling, and report rendering for the `braidmon` command line tool.

pub mod corpus;
pub mod format;
pub mod report;
pub mod scramble;

pub use format::{parse_factorization, serialize_factorization, ParseError, ParseErrorKind};
