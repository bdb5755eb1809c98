//! Census oracle, configuration and report plumbing for the `sphc` binary.

pub mod census;
