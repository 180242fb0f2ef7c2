use super::forces::{self, constrained_insertion_force, net_self_anchor_force};
use super::integrated;
use super::root::critical_depth;
use crate::error::{Error, Result};
use crate::rft::{AnchorGeometry, InsertionMode, MediaProfile};

/// How forces along a report are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Integration {
    #[default]
    ClosedForm,
    /// Element-wise integration at the given element size (m).
    Mesh { element_size: f64 },
}

/// Depth-indexed forces of one root growing to full depth.
///
/// `extraction[i]` is the peak extraction of the root if growth stopped at
/// `depths[i]`. For rigid intruders `net` equals `insertion`.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceReport {
    pub depths: Vec<f64>,
    pub insertion: Vec<f64>,
    pub extraction: Vec<f64>,
    pub net: Vec<f64>,
    pub peak_insertion: f64,
    pub peak_extraction: f64,
    pub critical_depth: Option<f64>,
    pub extraction_to_insertion_ratio: Option<f64>,
}

pub fn force_report(
    geom: &AnchorGeometry,
    media: &MediaProfile,
    depth_step: f64,
) -> Result<ForceReport> {
    force_report_with(geom, media, depth_step, Integration::ClosedForm)
}

/// Builds a report on the grid `0, Δ, …, L cos θ` with `Δ ≤ depth_step`.
/// The critical depth always comes from the closed form.
pub fn force_report_with(
    geom: &AnchorGeometry,
    media: &MediaProfile,
    depth_step: f64,
    integration: Integration,
) -> Result<ForceReport> {
    geom.validate()?;
    if !(depth_step.is_finite() && depth_step > 0.0) {
        return Err(Error::invalid(
            "depth step",
            format!("{depth_step} must be > 0"),
        ));
    }
    let full = geom.full_depth();
    let n = (full / depth_step).ceil().max(1.0) as usize;
    let depths: Vec<f64> = (0..=n).map(|i| full * i as f64 / n as f64).collect();

    let insertion_at = |z: f64| match integration {
        Integration::ClosedForm => constrained_insertion_force(z, geom, media),
        Integration::Mesh { element_size } => match geom.mode {
            InsertionMode::TipExtender => {
                integrated::tip_insertion_force(z, geom, media, element_size)
            }
            InsertionMode::RigidIntruder => {
                integrated::rigid_insertion_force(z, geom, media, element_size)
            }
        },
    };
    let extraction_at = |z: f64| match integration {
        Integration::ClosedForm => forces::extraction_force_at(z, geom, media),
        Integration::Mesh { element_size } => {
            integrated::extraction_at(z, geom, media, element_size)
        }
    };
    let net_at = |z: f64| match (geom.mode, integration) {
        (InsertionMode::RigidIntruder, _) => insertion_at(z),
        (_, Integration::ClosedForm) => net_self_anchor_force(z, geom, media),
        (_, Integration::Mesh { element_size }) => {
            integrated::net_self_anchor_force(z, geom, media, element_size)
        }
    };

    let insertion = depths
        .iter()
        .map(|&z| insertion_at(z))
        .collect::<Result<Vec<_>>>()?;
    let extraction = depths
        .iter()
        .map(|&z| extraction_at(z))
        .collect::<Result<Vec<_>>>()?;
    let net = depths
        .iter()
        .map(|&z| net_at(z))
        .collect::<Result<Vec<_>>>()?;

    let peak_insertion = insertion.iter().copied().fold(0.0, f64::max);
    let peak_extraction = extraction.iter().copied().fold(0.0, f64::max);
    let critical_depth = match geom.mode {
        InsertionMode::TipExtender => critical_depth(geom, media)?,
        InsertionMode::RigidIntruder => None,
    };
    Ok(ForceReport {
        depths,
        insertion,
        extraction,
        net,
        peak_insertion,
        peak_extraction,
        critical_depth,
        extraction_to_insertion_ratio: (peak_insertion > 0.0)
            .then(|| peak_extraction / peak_insertion),
    })
}
