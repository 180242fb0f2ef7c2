//! Resistive force theory (RFT) for anchors that grow into granular media.
//!
//! The crate predicts insertion, extraction and net self-anchoring forces for
//! tip-extending anchors and rigid intruders, fits the media parameters to
//! measured force/depth data, and searches multi-root anchor designs.
//!
//! Modules follow the data flow:
//!
//! * [`rft`] holds the granular material law ([`MediaProfile`]), the surface
//!   mesh of an anchor and the element-wise force integral.
//! * [`anchor`] holds the closed-form force laws built on top of it, the
//!   critical-depth solver and the diameter/angle sweeps.
//! * [`calibration`] fits scale, history and hair factors and the tip/side
//!   coefficient ratio.
//! * [`design`] evaluates staged multi-root configurations and runs the grid
//!   search.
//! * [`scenario`] reads scenario documents and writes CSV, SVG and summary
//!   reports; the `tipanchor` binary is a thin wrapper around it.
//!
//! All quantities are SI (m, N, rad, N/m³). Degrees only appear in files and
//! on the command line.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod anchor;
pub mod calibration;
pub mod design;
pub mod error;
pub mod rft;
pub mod scenario;
pub mod units;

pub use anchor::{AnchorGeometry, ForceReport, InsertionMode, Skin};
pub use error::{Error, Result};
pub use rft::{MediaProfile, Motion, SurfaceElement, SurfaceKind};
