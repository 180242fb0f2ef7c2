use std::f64::consts::PI;

use crate::anchor::{max_net_force, peak_extraction_force, tip_insertion_force, AnchorGeometry};
use crate::error::{Error, Result};
use crate::rft::MediaProfile;

pub const MAX_ROOT_TILT_DEG: f64 = 60.0;

/// Roots plus the order in which they are deployed.
#[derive(Debug, Clone, PartialEq)]
pub struct AnchorConfig {
    pub roots: Vec<AnchorGeometry>,
    /// Indices into `roots`, one entry per stage, in deployment order.
    pub stages: Vec<Vec<usize>>,
    /// N
    pub device_weight: f64,
}

impl AnchorConfig {
    /// Every root in its own stage, in the given order.
    pub fn sequential(roots: Vec<AnchorGeometry>, device_weight: f64) -> Self {
        let stages = (0..roots.len()).map(|i| vec![i]).collect();
        Self {
            roots,
            stages,
            device_weight,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::invalid("anchor config", reason));
        if self.roots.is_empty() {
            return bad("no roots".into());
        }
        if !(self.device_weight.is_finite() && self.device_weight >= 0.0) {
            return bad(format!("device weight {} must be >= 0", self.device_weight));
        }
        let mut seen = vec![0usize; self.roots.len()];
        for (s, stage) in self.stages.iter().enumerate() {
            if stage.is_empty() {
                return bad(format!("stage {} is empty", s + 1));
            }
            for &i in stage {
                match seen.get_mut(i) {
                    Some(n) => *n += 1,
                    None => return bad(format!("stage {} names unknown root {i}", s + 1)),
                }
            }
        }
        if let Some(i) = seen.iter().position(|&n| n != 1) {
            return bad(format!("root {i} appears in {} stages", seen[i]));
        }
        for (i, root) in self.roots.iter().enumerate() {
            root.validate()?;
            if root.tilt > MAX_ROOT_TILT_DEG.to_radians() + 1e-12 {
                return bad(format!("root {i} tilt exceeds {MAX_ROOT_TILT_DEG}°"));
            }
        }
        Ok(())
    }

    /// Largest root diameter in each stage.
    pub fn stage_max_diameters(&self) -> Vec<f64> {
        self.stages
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&i| self.roots[i].diameter())
                    .fold(0.0, f64::max)
            })
            .collect()
    }

    pub fn total_cross_section(&self) -> f64 {
        self.roots.iter().map(|r| PI * r.radius * r.radius).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigMetrics {
    /// Reaction each stage needs while growing, N.
    pub stage_required: Vec<f64>,
    /// Weight plus anchoring of earlier stages, N.
    pub stage_available: Vec<f64>,
    pub total_peak_extraction: f64,
    /// Smallest `available - required` over the stages, N.
    pub worst_stage_margin: f64,
    /// `None` for a weightless device.
    pub anchoring_to_weight: Option<f64>,
    pub feasible: bool,
}

/// Stage-by-stage force balance of a configuration.
pub fn evaluate_config(cfg: &AnchorConfig, media: &MediaProfile) -> Result<ConfigMetrics> {
    media.zeta()?;
    cfg.validate()?;
    let per_root = cfg
        .roots
        .iter()
        .map(|g| Ok((max_net_force(g, media)?.1, peak_extraction_force(g, media)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut stage_required = Vec::with_capacity(cfg.stages.len());
    let mut stage_available = Vec::with_capacity(cfg.stages.len());
    let mut held = 0.0;
    for stage in &cfg.stages {
        stage_required.push(stage.iter().map(|&i| per_root[i].0).sum::<f64>());
        stage_available.push(cfg.device_weight + held);
        held += stage.iter().map(|&i| per_root[i].1).sum::<f64>();
    }
    let worst_stage_margin = stage_available
        .iter()
        .zip(&stage_required)
        .map(|(a, r)| a - r)
        .fold(f64::INFINITY, f64::min);
    let feasible = stage_available
        .iter()
        .zip(&stage_required)
        .all(|(a, r)| r <= a);
    Ok(ConfigMetrics {
        stage_required,
        stage_available,
        total_peak_extraction: held,
        worst_stage_margin,
        anchoring_to_weight: (cfg.device_weight > 0.0).then(|| held / cfg.device_weight),
        feasible,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitRow {
    pub roots: usize,
    pub radius: f64,
    /// Summed constrained insertion, N.
    pub insertion: f64,
    /// Summed peak extraction, N.
    pub extraction: f64,
    pub ratio: f64,
}

/// Splits a fixed total cross-section into `1..=max_roots` identical vertical
/// hairless tip extenders grown to `depth`.
pub fn split_comparison(
    total_area: f64,
    max_roots: usize,
    depth: f64,
    media: &MediaProfile,
) -> Result<Vec<SplitRow>> {
    if !(total_area.is_finite() && total_area > 0.0) {
        return Err(Error::invalid(
            "split comparison",
            format!("total area {total_area} must be > 0"),
        ));
    }
    if max_roots == 0 {
        return Err(Error::invalid("split comparison", "need at least one root"));
    }
    if !(depth.is_finite() && depth > 0.0) {
        return Err(Error::invalid(
            "split comparison",
            format!("depth {depth} must be > 0"),
        ));
    }
    (1..=max_roots)
        .map(|n| {
            let radius = (total_area / (n as f64 * PI)).sqrt();
            let g = AnchorGeometry::tip_extender(radius, depth);
            let insertion = n as f64 * tip_insertion_force(depth, &g, media)?;
            let extraction = n as f64 * peak_extraction_force(&g, media)?;
            Ok(SplitRow {
                roots: n,
                radius,
                insertion,
                extraction,
                ratio: extraction / insertion,
            })
        })
        .collect()
}
