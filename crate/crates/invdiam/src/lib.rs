//! File formats, certificate checking and the command-line front end.

pub mod budget;
pub mod cli;
pub mod ilg;
pub mod oracle;
