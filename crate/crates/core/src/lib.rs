//! Stationary two-mode squeezing of light scattered by a trapped atom into
//! the motional sidebands of a driven two-mode cavity.
//!
//! The pipeline runs from [`params::SystemParams`] through the derived
//! couplings, the linearized Langevin model in [`qle`] and the spectra and
//! dips in [`analysis`]. [`coherent`] covers the lossless evolution and
//! [`scattering`] the microscopic rates behind the effective couplings.

pub mod analysis;
pub mod cli;
pub mod coherent;
pub mod error;
pub mod params;
pub mod qle;
pub mod scattering;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use params::{DerivedCouplings, NuPrimeMode, SystemParams};
