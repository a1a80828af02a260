//! Exact computer algebra for the modified affine Hecke algebra H⁺_{qη}(l),
//! the quantum group U_q(sl(n+1)), the Drinfeldian D_{qη}(sl(n+1)) with its
//! Yangian and quantum-current limits, and the duality functor
//! M ↦ M ⊗_{H_q(l)} V^{⊗l}.
//!
//! Everything is computed over [`RatFunc`], the field of rational functions
//! in `q`, `η`, `u`, `a` with rational coefficients. No floating point is used.
//! Every relation check is an exact equality test.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the CLI and
//! parallel drivers live in the `hecke-forge` companion crate.

#![no_std]

extern crate alloc;

pub mod drinfeld;
pub mod error;
pub mod functor;
pub mod heckealg;
pub mod matrix;
pub mod qrep;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{RelationCheck, Status, VerificationReport, Witness};
pub use scalar::{qnum, Bindings, LaurentPoly, RatFunc, Var};
