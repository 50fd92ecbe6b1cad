//! File format and output records behind the `stcvs` binary, exposed as a
//! library so tests (and other tools) can parse what the binary emits.

pub mod format;
pub mod record;
