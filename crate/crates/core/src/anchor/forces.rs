use std::f64::consts::PI;

use super::{check_depth, require_mode};
use crate::error::Result;
use crate::rft::{AnchorGeometry, InsertionMode, MediaProfile};

/// Tip-only insertion force at tip depth `depth`.
pub fn tip_insertion_force(depth: f64, geom: &AnchorGeometry, media: &MediaProfile) -> Result<f64> {
    geom.validate()?;
    check_depth(depth)?;
    let kt = media.tip_slope()?;
    Ok(kt * depth * PI * geom.radius * geom.radius * geom.tilt.cos())
}

/// Static side anchoring of a tip extender grown to `depth`, hair factor
/// included.
pub fn side_anchor_force(depth: f64, geom: &AnchorGeometry, media: &MediaProfile) -> Result<f64> {
    geom.validate()?;
    check_depth(depth)?;
    let ks = media.side_slope(geom.tilt)?;
    Ok(geom.skin.hair_factor() * ks * PI * geom.radius * depth * depth)
}

/// Insertion force of a rigid intruder: the tip plus the whole wall in
/// dynamic contact.
pub fn rigid_insertion_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<f64> {
    require_mode(geom, InsertionMode::RigidIntruder, "rigid_insertion_force")?;
    let tip = tip_insertion_force(depth, geom, media)?;
    let ks = media.side_slope(0.0)?;
    Ok(tip + ks / media.rho() * PI * geom.radius * depth * depth)
}

/// Insertion force when the body is held by a stage: tip only for tip
/// extenders, tip and wall for rigid intruders.
pub fn constrained_insertion_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<f64> {
    match geom.mode {
        InsertionMode::TipExtender => tip_insertion_force(depth, geom, media),
        InsertionMode::RigidIntruder => rigid_insertion_force(depth, geom, media),
    }
}

/// Onset-of-motion extraction force of the fully deployed root.
///
/// Hairs only act on tip extenders; a rigid intruder's wall carries the
/// dynamic-contact stress `k_s / ρ`.
pub fn peak_extraction_force(geom: &AnchorGeometry, media: &MediaProfile) -> Result<f64> {
    extraction_force_at(geom.full_depth(), geom, media)
}

/// Extraction force of a root grown only to `depth`.
pub fn extraction_force_at(depth: f64, geom: &AnchorGeometry, media: &MediaProfile) -> Result<f64> {
    geom.validate()?;
    check_depth(depth)?;
    let ks = media.side_slope(geom.tilt)?;
    let wall = ks * PI * geom.radius * depth * depth;
    Ok(match geom.mode {
        InsertionMode::TipExtender => geom.skin.hair_factor() * wall,
        InsertionMode::RigidIntruder => wall / media.rho(),
    })
}

/// Reaction a free-standing tip extender needs at `depth`; negative once the
/// wall holds more than the tip pushes.
pub fn net_self_anchor_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<f64> {
    require_mode(geom, InsertionMode::TipExtender, "net_self_anchor_force")?;
    Ok(tip_insertion_force(depth, geom, media)? - side_anchor_force(depth, geom, media)?)
}

/// Largest net force met while growing from the surface to full depth, and
/// the depth where it occurs. Clamped at zero.
///
/// Rigid intruders have no self-anchoring; their maximum is the insertion
/// force at full depth.
pub fn max_net_force(geom: &AnchorGeometry, media: &MediaProfile) -> Result<(f64, f64)> {
    let full = geom.full_depth();
    if geom.mode == InsertionMode::RigidIntruder {
        return Ok((full, rigid_insertion_force(full, geom, media)?));
    }
    // F(z) = a z - b z²
    let a = tip_insertion_force(1.0, geom, media)?;
    let b = side_anchor_force(1.0, geom, media)?;
    let apex = if b > 0.0 {
        a / (2.0 * b)
    } else {
        f64::INFINITY
    };
    let z = apex.min(full);
    let f = a * z - b * z * z;
    Ok(if f > 0.0 { (z, f) } else { (0.0, 0.0) })
}
