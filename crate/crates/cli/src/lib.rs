//! Library surface of the command-line tool, exposed for integration
//! tests: file formats, corpus running, and the command implementations
//! with their exit-code contract.

pub mod commands;
pub mod corpus_run;
pub mod formats;
