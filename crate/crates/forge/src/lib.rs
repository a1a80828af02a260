//! JSON formats, verification drivers and the `hecke-forge` command line
//! for [`hecke_forge_core`].
//!
//! Every driver in [`commands`] is a thin wrapper over a library call. The
//! binary only parses flags, reads and writes files, and maps outcomes to
//! exit codes.

pub mod commands;
pub mod error;
pub mod format;

pub use error::{ForgeError, FormatError, Result};

/// Configures the global rayon pool from `HECKE_FORGE_THREADS` (unset or 0
/// means one thread per core). Safe to call more than once.
pub fn init_threads() {
    let threads = std::env::var("HECKE_FORGE_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}
