//! Exact enumeration and verification for generalized Stirling permutations.
//!
//! Compositions and words live in [`words`], statistics in [`stats`], exact
//! polynomials in [`poly`]. The remaining modules compute γ-expansions, grammar
//! derivatives, the Foata–Strehl group action, the Jacobi–Stirling bridge and
//! real-rootedness certificates; [`verify`] runs all of them as batch suites.

pub mod error;
pub mod gamma;
pub mod gfs;
pub mod grammar;
pub mod jacobi;
pub mod oracle;
pub mod poly;
pub mod roots;
pub mod stats;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use gamma::{partial_gamma, s_poly, GammaTable};
pub use poly::{MultiPoly, UniPoly};
pub use stats::{labeling, profile, Labeling, StatProfile};
pub use words::{Composition, Letter, Word};
