#![forbid(unsafe_code)]
//! Exact-arithmetic workbench for comonads over finite-dimensional vector
//! spaces: coalgebras and their comodules, oplax comonad functors of the
//! form `-⊗W`, bialgebras as Hopf comonads, adjoint lifting, and the
//! chain-complex transfer checks.

pub mod error;
pub mod exactlin;
pub mod report;
pub mod comodcat;
pub mod structures;
pub mod oplaxfun;
pub mod hopf;
pub mod adjlift;
pub mod dgchain;
pub mod random;

pub use error::{Error, Result};
pub use exactlin::{LinMap, Scalar};
pub use report::Report;
