//! Mesh-integrated twins of the closed-form force laws.
//!
//! These discretize the root and sum element stresses instead of using the
//! analytic integrals. They are slower and exist to cross-check the closed
//! forms and to run scenarios at an explicit element size.

use super::{check_depth, require_mode};
use crate::error::Result;
use crate::rft::{
    discretize_anchor, integrate_vertical_force, AnchorGeometry, InsertionMode, MediaProfile,
    Motion, SurfaceElement, SurfaceKind,
};

fn patch(
    geom: &AnchorGeometry,
    depth: f64,
    element_size: f64,
    motion: Motion,
    kind: SurfaceKind,
) -> Result<Vec<SurfaceElement>> {
    check_depth(depth)?;
    let extension = depth / geom.tilt.cos();
    Ok(discretize_anchor(geom, extension, element_size, motion)?
        .into_iter()
        .filter(|e| e.kind == kind)
        .collect())
}

/// Sum over the patch, zero for an empty one.
fn vertical(elements: &[SurfaceElement], media: &MediaProfile) -> Result<f64> {
    if elements.is_empty() {
        return Ok(0.0);
    }
    integrate_vertical_force(elements, media)
}

pub fn tip_insertion_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    let tip = patch(
        geom,
        depth,
        element_size,
        Motion::Insertion,
        SurfaceKind::Tip,
    )?;
    Ok(vertical(&tip, media)? * geom.tilt.cos())
}

pub fn side_anchor_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    let wall = patch(
        geom,
        depth,
        element_size,
        Motion::Extraction,
        SurfaceKind::Lateral,
    )?;
    // upward travel integrates negative
    Ok(-vertical(&wall, media)? * geom.tilt.cos() * geom.skin.hair_factor())
}

pub fn rigid_insertion_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    require_mode(geom, InsertionMode::RigidIntruder, "rigid_insertion_force")?;
    let wall = patch(
        geom,
        depth,
        element_size,
        Motion::Insertion,
        SurfaceKind::Lateral,
    )?;
    let side = vertical(&wall, media)? * geom.tilt.cos() / media.rho();
    Ok(tip_insertion_force(depth, geom, media, element_size)? + side)
}

pub fn peak_extraction_force(
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    extraction_at(geom.full_depth(), geom, media, element_size)
}

pub fn net_self_anchor_force(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    require_mode(geom, InsertionMode::TipExtender, "net_self_anchor_force")?;
    Ok(tip_insertion_force(depth, geom, media, element_size)?
        - side_anchor_force(depth, geom, media, element_size)?)
}

/// Extraction force of a root deployed to `depth` (at most full depth).
pub(crate) fn extraction_at(
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
    element_size: f64,
) -> Result<f64> {
    let wall = patch(
        geom,
        depth,
        element_size,
        Motion::Extraction,
        SurfaceKind::Lateral,
    )?;
    // upward travel integrates negative
    let force = -vertical(&wall, media)? * geom.tilt.cos();
    Ok(match geom.mode {
        InsertionMode::TipExtender => force * geom.skin.hair_factor(),
        InsertionMode::RigidIntruder => force / media.rho(),
    })
}
