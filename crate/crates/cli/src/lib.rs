//! Support library for the `rookery` binary: the line-oriented wire
//! formats and the verification suites. Kept as a library so the
//! integration tests can drive both directly.

pub mod verify;
pub mod wire;
