//! Simulation and analysis toolkit for two-photon interference between
//! remote single-photon emitters coupled through quantum frequency
//! converters and dispersive fiber links.
//!
//! The crate is organized around the stages of such an experiment:
//!
//! * [`model`] — emitter, converter, channel and detector parameters plus
//!   the derived spectral quantities shared by everything else,
//! * [`analytic`] — closed-form correlation functions, interference
//!   visibility and Voigt spectra (built on [`faddeeva`]),
//! * [`montecarlo`] — stochastic time-tag generation for a pulsed
//!   Hong-Ou-Mandel experiment with spectral diffusion,
//! * [`dispersion`] — frequency-domain wave-packet propagation and overlap,
//! * [`analysis`] — coincidence histogramming and the data-reduction
//!   pipeline that recovers visibilities from time tags,
//! * [`config`] — the on-disk configuration schema.
//!
//! All internal quantities are SI (seconds, hertz, meters) in `f64`;
//! configuration files use the units named in their keys and are converted
//! once at ingestion.

pub mod analysis;
pub mod analytic;
pub mod config;
pub mod dispersion;
pub mod error;
pub mod faddeeva;
pub mod fit;
pub mod model;
pub mod montecarlo;
pub mod timetag;

pub use error::{Error, Result};
