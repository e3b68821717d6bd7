//! File formats, the brute-force oracle and the command-line front end for
//! [`aawire_core`].

pub mod cli;
pub mod corpus;
pub mod oracle;

pub use aawire_core as core;
