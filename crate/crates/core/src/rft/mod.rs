//! Elemental RFT stresses and force integration over discretized bodies.
//!
//! The material law is lithostatic-linear: an element at depth `z` with
//! attack angle `β` and intrusion angle `γ` carries a vertical stress
//! `ζ · α_z(β, γ) · z`, where `α_z` comes from a gridded table and `ζ` is the
//! calibrated scale factor of the medium.
//!
//! Angles are taken in the body frame of a root: `β` is the inclination of a
//! surface patch relative to the plane normal to the root axis and `γ` is the
//! direction of travel relative to that plane. For a vertical root this is
//! the usual world frame.

mod generic;
mod geometry;
mod integrate;
mod media;
mod mesh;
mod table;

pub use generic::{generic_sand_profile, generic_sand_table, GENERIC_SAND};
pub use geometry::{AnchorGeometry, InsertionMode, Skin};
pub use integrate::integrate_vertical_force;
pub use media::{MediaDocument, MediaProfile, MEDIA_SCHEMA};
pub use mesh::{discretize_anchor, Motion, SurfaceElement, SurfaceKind, Travel};
pub use table::{StressNode, StressTable, MAX_NODE_SPACING_DEG};

use std::f64::consts::FRAC_PI_2;

/// Element size used when none is given: 1 mm.
pub const DEFAULT_ELEMENT_SIZE: f64 = 1e-3;

/// Attack angle of the tip disc (a plate normal to the root axis).
pub const TIP_BETA: f64 = 0.0;
/// Intrusion angle of the tip disc while it advances along the root axis.
pub const TIP_GAMMA: f64 = FRAC_PI_2;
/// Attack angle of the lateral wall (a plate parallel to the root axis).
pub const WALL_BETA: f64 = FRAC_PI_2;

/// Intrusion angle sampled on the lateral wall when the root is pulled
/// vertically while its axis is tilted by `tilt` from vertical.
///
/// Axial travel (`tilt = 0`) samples the wall-shear node `γ = -π/2`; the
/// travel sense only sets the force sign.
pub fn wall_gamma(tilt: f64) -> f64 {
    -FRAC_PI_2 + tilt
}
