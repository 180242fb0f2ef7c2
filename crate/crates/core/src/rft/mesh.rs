use std::f64::consts::{FRAC_PI_2, PI};

use super::geometry::AnchorGeometry;
use super::{wall_gamma, TIP_BETA, TIP_GAMMA, WALL_BETA};
use crate::error::{Error, Result};

/// Vertical sense of an element's travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Travel {
    Downward,
    Upward,
}

/// Which stroke a mesh is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Motion {
    /// Axial advance into the ground.
    Insertion,
    /// Vertical pull out of the ground.
    Extraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Tip,
    Lateral,
}

/// A discretized patch of a body surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceElement {
    /// m²
    pub area: f64,
    /// m below the free surface
    pub depth: f64,
    pub beta: f64,
    pub gamma: f64,
    pub travel: Travel,
    pub kind: SurfaceKind,
}

/// Meshes the tip disc and the submerged lateral wall of a root that has
/// extended `extension` metres along its axis.
///
/// Tip elements sit at the tip depth `extension · cos θ`; lateral elements
/// are centred on axial segments at depth `s · cos θ`. All orientations are
/// body-frame (see [`crate::rft`]).
pub fn discretize_anchor(
    geom: &AnchorGeometry,
    extension: f64,
    element_size: f64,
    motion: Motion,
) -> Result<Vec<SurfaceElement>> {
    geom.validate()?;
    if !(extension.is_finite() && extension >= 0.0) {
        return Err(Error::invalid(
            "extension",
            format!("{extension} must be >= 0"),
        ));
    }
    if extension > geom.length * (1.0 + 1e-12) {
        return Err(Error::invalid(
            "extension",
            format!("{extension} m exceeds root length {} m", geom.length),
        ));
    }
    if !(element_size.is_finite() && element_size > 0.0) {
        return Err(Error::invalid(
            "element size",
            format!("{element_size} must be > 0"),
        ));
    }
    let dimension = geom.radius.min(geom.length);
    if element_size >= dimension {
        return Err(Error::ResolutionTooCoarse {
            element_size,
            dimension,
        });
    }

    let r = geom.radius;
    let cos_t = geom.tilt.cos();
    let travel = match motion {
        Motion::Insertion => Travel::Downward,
        Motion::Extraction => Travel::Upward,
    };
    let lateral_gamma = match motion {
        Motion::Insertion => wall_gamma(0.0),
        Motion::Extraction => wall_gamma(geom.tilt),
    };
    let tip_gamma = match motion {
        Motion::Insertion => TIP_GAMMA,
        Motion::Extraction => -FRAC_PI_2 + geom.tilt,
    };

    let mut elements = Vec::new();

    let tip_depth = extension * cos_t;
    let rings = (r / element_size).ceil() as usize;
    for i in 0..rings {
        let inner = r * i as f64 / rings as f64;
        let outer = r * (i + 1) as f64 / rings as f64;
        let mid = 0.5 * (inner + outer);
        let sectors = ((2.0 * PI * mid / element_size).ceil() as usize).max(1);
        let area = PI * (outer * outer - inner * inner) / sectors as f64;
        elements.extend((0..sectors).map(|_| SurfaceElement {
            area,
            depth: tip_depth,
            beta: TIP_BETA,
            gamma: tip_gamma,
            travel,
            kind: SurfaceKind::Tip,
        }));
    }

    if extension > 0.0 {
        let segments = (extension / element_size).ceil() as usize;
        let ds = extension / segments as f64;
        let around = (2.0 * PI * r / element_size).ceil() as usize;
        let area = 2.0 * PI * r * ds / around as f64;
        for k in 0..segments {
            let depth = (k as f64 + 0.5) * ds * cos_t;
            elements.extend((0..around).map(|_| SurfaceElement {
                area,
                depth,
                beta: WALL_BETA,
                gamma: lateral_gamma,
                travel,
                kind: SurfaceKind::Lateral,
            }));
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn area_of(elements: &[SurfaceElement], kind: SurfaceKind) -> f64 {
        elements
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| e.area)
            .sum()
    }

    #[test]
    fn surface_level_mesh_is_only_the_tip() {
        let g = AnchorGeometry::tip_extender(0.0075, 0.3);
        let m = discretize_anchor(&g, 0.0, 1e-3, Motion::Insertion).unwrap();
        assert!(m
            .iter()
            .all(|e| e.kind == SurfaceKind::Tip && e.depth == 0.0));
        assert!((area_of(&m, SurfaceKind::Tip) - PI * 0.0075f64.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn lateral_area_matches_cylinder() {
        let g = AnchorGeometry::tip_extender(0.0075, 0.3);
        let m = discretize_anchor(&g, 0.15, 1e-3, Motion::Extraction).unwrap();
        let exact = 2.0 * PI * 0.0075 * 0.15;
        let rel = (area_of(&m, SurfaceKind::Lateral) - exact).abs() / exact;
        assert!(rel < 1e-3, "{rel}");
        let tip = area_of(&m, SurfaceKind::Tip);
        assert!((tip - PI * 0.0075f64.powi(2)).abs() / tip < 1e-3);
    }

    #[test]
    fn tilt_projects_depth() {
        let g = AnchorGeometry::tip_extender(0.0075, 0.15).with_tilt(60f64.to_radians());
        let m = discretize_anchor(&g, 0.15, 1e-3, Motion::Insertion).unwrap();
        let deepest = m.iter().map(|e| e.depth).fold(0.0, f64::max);
        assert!((deepest - 0.075).abs() < 1e-12, "{deepest}");
        let lateral_max = m
            .iter()
            .filter(|e| e.kind == SurfaceKind::Lateral)
            .map(|e| e.depth)
            .fold(0.0, f64::max);
        assert!(lateral_max < 0.075 && lateral_max > 0.074);
    }

    #[test]
    fn coarse_resolution_is_rejected() {
        let g = AnchorGeometry::tip_extender(0.005, 0.15);
        assert!(matches!(
            discretize_anchor(&g, 0.1, 0.005, Motion::Insertion),
            Err(Error::ResolutionTooCoarse { .. })
        ));
        assert!(discretize_anchor(&g, 0.1, 0.0, Motion::Insertion).is_err());
        assert!(discretize_anchor(&g, -0.1, 0.001, Motion::Insertion).is_err());
    }
}
