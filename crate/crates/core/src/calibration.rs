//! Fitting media parameters to measured forces.
//!
//! Every fit sorts its input first, so the result does not depend on sample
//! order. Losses are ordinary least squares on force.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::anchor::{
    net_self_anchor_force, rigid_insertion_force, tip_insertion_force, AnchorGeometry,
};
use crate::error::{Error, Result};
use crate::rft::{InsertionMode, MediaProfile};

/// Experiment a sample comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    RigidInsertion,
    ConstrainedTipInsertion,
    ExtractionPeak,
    SelfAnchorWeight,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::RigidInsertion => "rigid_insertion",
            Regime::ConstrainedTipInsertion => "constrained_tip_insertion",
            Regime::ExtractionPeak => "extraction_peak",
            Regime::SelfAnchorWeight => "self_anchor_weight",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One measured point. Field names match the CSV headers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationSample {
    #[serde(rename = "depth_m")]
    pub depth: f64,
    #[serde(rename = "force_N")]
    pub force: f64,
    pub regime: Regime,
}

impl CalibrationSample {
    pub fn new(depth: f64, force: f64, regime: Regime) -> Self {
        Self {
            depth,
            force,
            regime,
        }
    }
}

/// Non-fatal observations attached to a fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitWarning {
    /// Hairy peak below hairless peak.
    HairFactorBelowOne,
    /// Tip-extender peak below intruder peak.
    HistoryRatioBelowOne,
    /// All samples have the same sign.
    NoCrossoverObserved,
    /// As many samples as unknowns; noise cannot be averaged out.
    UnderdeterminedForNoise,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleFit {
    pub zeta: f64,
    pub residual_rms: f64,
    pub samples: usize,
}

/// Replicate extraction peaks of three devices with identical geometry.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PeakSet {
    pub intruder: Vec<f64>,
    pub hairless: Vec<f64>,
    pub hairy: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistoryHairFit {
    pub rho: f64,
    pub kappa: f64,
    pub warnings: Vec<FitWarning>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TipSideFit {
    /// `k_t / k_s` of the vertical wall.
    pub ratio: f64,
    /// Crossover of the fitted curve, if it has one.
    pub critical_depth: Option<f64>,
    /// Fitted `a` in `F = a h − b h²`, N/m.
    pub linear: f64,
    /// Fitted `b` in `F = a h − b h²`, N/m².
    pub quadratic: f64,
    pub residual_rms: f64,
    pub warnings: Vec<FitWarning>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WallFit {
    pub ratio: f64,
    pub residual_rms: f64,
}

fn sorted(samples: &[CalibrationSample]) -> Vec<CalibrationSample> {
    let mut v = samples.to_vec();
    v.sort_by(|a, b| {
        a.depth
            .total_cmp(&b.depth)
            .then(a.force.total_cmp(&b.force))
    });
    v
}

fn check_samples(samples: &[CalibrationSample], min_depths: usize) -> Result<Regime> {
    let first = samples
        .first()
        .ok_or_else(|| Error::invalid("calibration samples", "empty"))?;
    for s in samples {
        if s.regime != first.regime {
            return Err(Error::invalid(
                "calibration samples",
                format!("mixed regimes {} and {}", first.regime, s.regime),
            ));
        }
        if !(s.depth.is_finite() && s.depth >= 0.0 && s.force.is_finite()) {
            return Err(Error::invalid(
                "calibration samples",
                format!("bad sample {s:?}"),
            ));
        }
    }
    let mut depths: Vec<f64> = samples.iter().map(|s| s.depth).collect();
    depths.sort_by(f64::total_cmp);
    depths.dedup();
    if depths.len() < min_depths {
        return Err(Error::invalid(
            "calibration samples",
            format!(
                "{} distinct depths, need at least {min_depths}",
                depths.len()
            ),
        ));
    }
    Ok(first.regime)
}

/// Model force at `ζ = 1` for a regime.
fn unit_model(
    regime: Regime,
    depth: f64,
    geom: &AnchorGeometry,
    unit: &MediaProfile,
) -> Result<f64> {
    match regime {
        Regime::RigidInsertion => rigid_insertion_force(depth, geom, unit),
        Regime::ConstrainedTipInsertion => tip_insertion_force(depth, geom, unit),
        Regime::ExtractionPeak => crate::anchor::extraction_force_at(depth, geom, unit),
        Regime::SelfAnchorWeight => net_self_anchor_force(depth, geom, unit),
    }
}

fn rms(residuals: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = residuals.fold((0.0, 0usize), |(s, n), r| (s + r * r, n + 1));
    if n == 0 {
        0.0
    } else {
        (sum / n as f64).sqrt()
    }
}

/// Least-squares `ζ` for samples of one regime. The model is linear in `ζ`,
/// so the solution is closed form: `ζ = Σ m y / Σ m²` with `m` the model at
/// `ζ = 1`.
pub fn fit_scale_factor(
    samples: &[CalibrationSample],
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<ScaleFit> {
    let regime = check_samples(samples, 3)?;
    let samples = sorted(samples);
    let unit = media.clone().with_zeta(1.0)?;
    let model = samples
        .iter()
        .map(|s| unit_model(regime, s.depth, geom, &unit))
        .collect::<Result<Vec<_>>>()?;
    let mm: f64 = model.iter().map(|m| m * m).sum();
    let my: f64 = model.iter().zip(&samples).map(|(m, s)| m * s.force).sum();
    if mm == 0.0 {
        return Err(Error::DegenerateFit("model forces are all zero".into()));
    }
    let zeta = my / mm;
    if !(zeta > 0.0) {
        return Err(Error::DegenerateFit(format!(
            "fitted zeta {zeta} is not positive"
        )));
    }
    Ok(ScaleFit {
        zeta,
        residual_rms: rms(model.iter().zip(&samples).map(|(m, s)| s.force - zeta * m)),
        samples: samples.len(),
    })
}

fn mean_positive(name: &str, values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::invalid(
            "extraction peaks",
            format!("no {name} peaks"),
        ));
    }
    if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::invalid(
            "extraction peaks",
            format!("{name} peak {v} must be > 0"),
        ));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(v.iter().sum::<f64>() / v.len() as f64)
}

/// `ρ = hairless / intruder`, `κ = hairy / hairless` from mean peaks.
pub fn fit_history_and_hair(peaks: &PeakSet) -> Result<HistoryHairFit> {
    let intruder = mean_positive("intruder", &peaks.intruder)?;
    let hairless = mean_positive("hairless", &peaks.hairless)?;
    let hairy = mean_positive("hairy", &peaks.hairy)?;
    let rho = hairless / intruder;
    let kappa = hairy / hairless;
    let mut warnings = Vec::new();
    if rho < 1.0 {
        warnings.push(FitWarning::HistoryRatioBelowOne);
    }
    if kappa < 1.0 {
        warnings.push(FitWarning::HairFactorBelowOne);
    }
    Ok(HistoryHairFit {
        rho,
        kappa,
        warnings,
    })
}

/// Fits `F(h) = a h − b h²` to self-anchoring samples and converts `a / b`
/// to the vertical-wall ratio `k_t / k_s` of the medium.
pub fn fit_tip_side_ratio(
    samples: &[CalibrationSample],
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<TipSideFit> {
    let regime = check_samples(samples, 2)?;
    if regime != Regime::SelfAnchorWeight {
        return Err(Error::invalid(
            "calibration samples",
            format!("tip/side fit needs self_anchor_weight samples, got {regime}"),
        ));
    }
    geom.validate()?;
    let samples = sorted(samples);
    let (mut s2, mut s3, mut s4, mut hy, mut h2y) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for s in &samples {
        let h = s.depth;
        s2 += h * h;
        s3 += h * h * h;
        s4 += h * h * h * h;
        hy += h * s.force;
        h2y += h * h * s.force;
    }
    // [s2 -s3; -s3 s4] [a; b] = [hy; -h2y]
    let det = s2 * s4 - s3 * s3;
    if !(det.abs() > 1e-300) {
        return Err(Error::DegenerateFit(
            "depths do not resolve two terms".into(),
        ));
    }
    let a = (hy * s4 - s3 * h2y) / det;
    let b = (hy * s3 - s2 * h2y) / det;
    if !(b > 0.0 && a > 0.0) {
        return Err(Error::DegenerateFit(format!(
            "fitted tip term {a} and side term {b} must both be positive"
        )));
    }

    // a = ζ k_t π r² cos θ,  b = κ ζ k_s(θ) π r
    let unit = media.clone().with_zeta(1.0)?;
    let wall_tilt_gain = unit.side_slope(geom.tilt)? / unit.side_slope(0.0)?;
    let ratio = a * geom.skin.hair_factor() * wall_tilt_gain / (b * geom.radius * geom.tilt.cos());

    let mut warnings = Vec::new();
    if samples.iter().all(|s| s.force > 0.0) || samples.iter().all(|s| s.force < 0.0) {
        warnings.push(FitWarning::NoCrossoverObserved);
    }
    let distinct = {
        let mut d: Vec<f64> = samples.iter().map(|s| s.depth).collect();
        d.dedup();
        d.len()
    };
    if distinct <= 2 {
        warnings.push(FitWarning::UnderdeterminedForNoise);
    }
    Ok(TipSideFit {
        ratio,
        critical_depth: Some(a / b),
        linear: a,
        quadratic: b,
        residual_rms: rms(samples
            .iter()
            .map(|s| s.force - (a * s.depth - b * s.depth * s.depth))),
        warnings,
    })
}

/// Fits the wall coefficient from rigid-intruder insertion samples once `ζ`
/// is known: the residual over the tip term is `k_s / ρ · π r z²`. Returns the
/// implied `k_t / k_s`.
pub fn fit_side_from_rigid_insertion(
    samples: &[CalibrationSample],
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<WallFit> {
    let regime = check_samples(samples, 2)?;
    if regime != Regime::RigidInsertion {
        return Err(Error::invalid(
            "calibration samples",
            format!("wall fit needs rigid_insertion samples, got {regime}"),
        ));
    }
    let samples = sorted(samples);
    let mut num = 0.0;
    let mut den = 0.0;
    let mut tips = Vec::with_capacity(samples.len());
    for s in &samples {
        let tip = tip_insertion_force(s.depth, geom, media)?;
        let z2 = s.depth * s.depth;
        num += (s.force - tip) * z2;
        den += z2 * z2;
        tips.push(tip);
    }
    if den == 0.0 {
        return Err(Error::DegenerateFit("all samples at the surface".into()));
    }
    let c = num / den;
    if !(c > 0.0) {
        return Err(Error::DegenerateFit(
            "rigid insertion does not exceed the tip term".into(),
        ));
    }
    let ks = c * media.rho() / (std::f64::consts::PI * geom.radius);
    let residual_rms = rms(samples
        .iter()
        .zip(&tips)
        .map(|(s, tip)| s.force - tip - c * s.depth * s.depth));
    Ok(WallFit {
        ratio: media.tip_slope()? / ks,
        residual_rms,
    })
}

/// Force predicted by `media` for one regime.
pub fn model_force(
    regime: Regime,
    depth: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<f64> {
    let mode = match regime {
        Regime::RigidInsertion => InsertionMode::RigidIntruder,
        Regime::SelfAnchorWeight => InsertionMode::TipExtender,
        _ => geom.mode,
    };
    unit_model(regime, depth, &AnchorGeometry { mode, ..*geom }, media)
}

/// One fitted quantity, in the order it was applied.
#[derive(Debug, Clone, PartialEq)]
pub struct FitStep {
    pub parameter: &'static str,
    pub value: f64,
    pub regime: Option<Regime>,
    pub residual_rms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationOutcome {
    pub media: MediaProfile,
    pub steps: Vec<FitStep>,
    pub warnings: Vec<FitWarning>,
    /// Only reported; κ belongs to the root, not the medium.
    pub hair_factor: Option<f64>,
}

/// Runs every fit the data supports and returns the updated medium.
///
/// Order: `ρ` from replicate peaks, `k_t/k_s` from self-anchoring samples,
/// then `ζ` (constrained tip samples preferred, then self-anchoring, rigid,
/// extraction), then the wall coefficient from rigid samples when `ζ` came
/// from the tip alone.
pub fn calibrate_media(
    samples: &[CalibrationSample],
    geom: &AnchorGeometry,
    media: &MediaProfile,
    peaks: Option<&PeakSet>,
) -> Result<CalibrationOutcome> {
    let by = |r: Regime| -> Vec<CalibrationSample> {
        samples.iter().copied().filter(|s| s.regime == r).collect()
    };
    let self_anchor = by(Regime::SelfAnchorWeight);
    let tip = by(Regime::ConstrainedTipInsertion);
    let rigid = by(Regime::RigidInsertion);
    let extraction = by(Regime::ExtractionPeak);
    if samples.is_empty() && peaks.is_none() {
        return Err(Error::invalid("calibration", "no samples and no peaks"));
    }

    // The regime fixes how the root entered the ground.
    let tip_geom = AnchorGeometry {
        mode: InsertionMode::TipExtender,
        ..*geom
    };
    let rigid_geom = AnchorGeometry {
        mode: InsertionMode::RigidIntruder,
        ..*geom
    };
    let geom_for = |r: Regime| match r {
        Regime::RigidInsertion => rigid_geom,
        Regime::SelfAnchorWeight => tip_geom,
        _ => *geom,
    };

    let mut media = media.clone();
    let mut steps = Vec::new();
    let mut warnings = Vec::new();

    let mut hair_factor = None;
    if let Some(peaks) = peaks {
        let fit = fit_history_and_hair(peaks)?;
        media = media.with_rho(fit.rho)?;
        warnings.extend(fit.warnings);
        steps.push(FitStep {
            parameter: "rho",
            value: fit.rho,
            regime: None,
            residual_rms: None,
        });
        steps.push(FitStep {
            parameter: "hair_factor",
            value: fit.kappa,
            regime: None,
            residual_rms: None,
        });
        hair_factor = Some(fit.kappa);
    }
    if !self_anchor.is_empty() {
        let fit = fit_tip_side_ratio(&self_anchor, &tip_geom, &media)?;
        media = media.with_tip_side_ratio(fit.ratio)?;
        warnings.extend(fit.warnings);
        steps.push(FitStep {
            parameter: "tip_side_ratio",
            value: fit.ratio,
            regime: Some(Regime::SelfAnchorWeight),
            residual_rms: Some(fit.residual_rms),
        });
    }

    let zeta_source = [&tip, &self_anchor, &rigid, &extraction]
        .into_iter()
        .find(|set| !set.is_empty());
    if let Some(set) = zeta_source {
        let fit = fit_scale_factor(set, &geom_for(set[0].regime), &media)?;
        media = media.with_zeta(fit.zeta)?;
        steps.push(FitStep {
            parameter: "zeta",
            value: fit.zeta,
            regime: Some(set[0].regime),
            residual_rms: Some(fit.residual_rms),
        });
    }

    if !tip.is_empty() && self_anchor.is_empty() && !rigid.is_empty() {
        let fit = fit_side_from_rigid_insertion(&rigid, &rigid_geom, &media)?;
        media = media.with_tip_side_ratio(fit.ratio)?;
        steps.push(FitStep {
            parameter: "tip_side_ratio",
            value: fit.ratio,
            regime: Some(Regime::RigidInsertion),
            residual_rms: Some(fit.residual_rms),
        });
    }

    warnings.dedup();
    Ok(CalibrationOutcome {
        media,
        steps,
        warnings,
        hair_factor,
    })
}
