//! Report model and text rendering behind the `sandwich` binary, exposed so
//! integration tests can parse and compare its output structurally.

pub mod render;
pub mod report;
