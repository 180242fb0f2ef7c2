//! Force laws for single roots.
//!
//! Closed forms, all as vertical forces for vertical tip depth `z`, radius
//! `r`, tilt `θ`, scale `ζ` folded into the slopes `k_t`, `k_s(θ)`:
//!
//! | quantity | law |
//! |---|---|
//! | constrained tip insertion | `k_t · z · π r² · cos θ` |
//! | static side anchoring | `κ · k_s(θ) · π r · z²` |
//! | rigid insertion | tip + `k_s(0) / ρ · π r · z²` |
//! | net self-anchoring | tip − side |
//!
//! Each closed form has a mesh-integrated twin in [`integrated`], built on
//! [`crate::rft::discretize_anchor`] and [`crate::rft::integrate_vertical_force`].

mod forces;
pub mod integrated;
mod report;
mod root;
mod sweep;

pub use crate::rft::{AnchorGeometry, InsertionMode, Skin};
pub use forces::{
    constrained_insertion_force, extraction_force_at, max_net_force, net_self_anchor_force,
    peak_extraction_force, rigid_insertion_force, side_anchor_force, tip_insertion_force,
};
pub use report::{force_report, force_report_with, ForceReport, Integration};
pub use root::{bisect, critical_depth, CRITICAL_DEPTH_TOL};
pub use sweep::{
    angled_pair_forces, diameter_sweep, loglog_slope, DiameterRow, DiameterSweep, PairForces,
    MAX_PAIR_TILT_DEG,
};

use crate::error::{Error, Result};

pub(crate) fn check_depth(depth: f64) -> Result<()> {
    if depth.is_finite() && depth >= 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("depth", format!("{depth} must be >= 0")))
    }
}

pub(crate) fn require_mode(
    geom: &AnchorGeometry,
    mode: InsertionMode,
    operation: &'static str,
) -> Result<()> {
    if geom.mode == mode {
        return Ok(());
    }
    Err(Error::ModeMismatch {
        operation,
        expected: match mode {
            InsertionMode::TipExtender => "tip_extender",
            InsertionMode::RigidIntruder => "rigid_intruder",
        },
    })
}
