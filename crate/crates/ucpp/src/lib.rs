//! JSON formats, verification suites and the `ucpp` command line on top of
//! [`ucpp_core`].

pub mod cli;
pub mod json;
pub mod suites;
