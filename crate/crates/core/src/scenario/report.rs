//! Rendering results as CSV, SVG or a plain-text summary.

use std::fmt::Write;
use std::path::PathBuf;

use super::document::Format;
use super::format::sig6;
use super::svg::{Chart, Marker, Series};
use crate::anchor::{DiameterSweep, ForceReport, PairForces};
use crate::calibration::{model_force, CalibrationOutcome, CalibrationSample, Regime};
use crate::design::{AnchorConfig, ConfigMetrics};
use crate::rft::{AnchorGeometry, InsertionMode, Skin};
use crate::units::rad_to_deg;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub media: String,
    pub body: ReportBody,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReportBody {
    Simulation {
        geometry: AnchorGeometry,
        curve: ForceReport,
    },
    CriticalDepth {
        geometry: AnchorGeometry,
        curve: ForceReport,
    },
    Calibration {
        geometry: AnchorGeometry,
        samples: Vec<CalibrationSample>,
        outcome: CalibrationOutcome,
        written: Option<PathBuf>,
    },
    DiameterSweep(DiameterSweep),
    AngleSweep {
        geometry: AnchorGeometry,
        rows: Vec<PairForces>,
    },
    Evaluation {
        config: AnchorConfig,
        metrics: ConfigMetrics,
    },
    Optimization {
        config: AnchorConfig,
        metrics: ConfigMetrics,
        found_feasible: bool,
        written: Option<PathBuf>,
    },
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Svg => self.chart().render(),
            Format::Summary => self.summary(),
        }
    }

    pub fn command(&self) -> &'static str {
        match self.body {
            ReportBody::Simulation { .. } => "simulate",
            ReportBody::CriticalDepth { .. } => "critical-depth",
            ReportBody::Calibration { .. } => "calibrate",
            ReportBody::DiameterSweep(_) => "sweep-diameter",
            ReportBody::AngleSweep { .. } => "sweep-angle",
            ReportBody::Evaluation { .. } => "evaluate",
            ReportBody::Optimization { .. } => "optimize",
        }
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |cells: Vec<String>| w.write_record(&cells).expect("in-memory write");
        let s = |h: &[&str]| h.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        match &self.body {
            ReportBody::Simulation { curve, .. } | ReportBody::CriticalDepth { curve, .. } => {
                row(s(&["depth_m", "insertion_N", "extraction_N", "net_N"]));
                for i in 0..curve.depths.len() {
                    row(nums(&[
                        curve.depths[i],
                        curve.insertion[i],
                        curve.extraction[i],
                        curve.net[i],
                    ]));
                }
            }
            ReportBody::Calibration {
                geometry,
                samples,
                outcome,
                ..
            } => {
                row(s(&[
                    "depth_m",
                    "force_N",
                    "regime",
                    "model_N",
                    "residual_N",
                ]));
                for smp in sorted_samples(samples) {
                    let model = model_force(smp.regime, smp.depth, geometry, &outcome.media)
                        .unwrap_or(f64::NAN);
                    row(vec![
                        sig6(smp.depth),
                        sig6(smp.force),
                        smp.regime.to_string(),
                        sig6(model),
                        sig6(smp.force - model),
                    ]);
                }
            }
            ReportBody::DiameterSweep(sweep) => {
                row(s(&["diameter_m", "insertion_N", "extraction_N", "ratio"]));
                for r in &sweep.rows {
                    row(nums(&[r.diameter, r.insertion, r.extraction, r.ratio]));
                }
                if !sweep.rows.is_empty() {
                    let mut cells = vec!["exponent".to_string()];
                    cells.extend(nums(&[
                        sweep.insertion_exponent,
                        sweep.extraction_exponent,
                        sweep.ratio_exponent,
                    ]));
                    row(cells);
                }
            }
            ReportBody::AngleSweep { rows, .. } => {
                row(s(&["tilt_deg", "insertion_N", "extraction_N", "ratio"]));
                for r in rows {
                    row(nums(&[
                        rad_to_deg(r.tilt),
                        r.insertion,
                        r.extraction,
                        r.ratio().unwrap_or(f64::NAN),
                    ]));
                }
            }
            ReportBody::Evaluation { config, metrics }
            | ReportBody::Optimization {
                config, metrics, ..
            } => {
                row(s(&[
                    "stage",
                    "roots",
                    "max_diameter_m",
                    "required_N",
                    "available_N",
                    "margin_N",
                ]));
                let widest = config.stage_max_diameters();
                for (i, stage) in config.stages.iter().enumerate() {
                    let mut cells = vec![(i + 1).to_string(), stage.len().to_string()];
                    cells.extend(nums(&[
                        widest[i],
                        metrics.stage_required[i],
                        metrics.stage_available[i],
                        metrics.stage_available[i] - metrics.stage_required[i],
                    ]));
                    row(cells);
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k}: {v}");
        };
        kv("command", self.command().into());
        kv("media", self.media.clone());
        match &self.body {
            ReportBody::Simulation { geometry, curve }
            | ReportBody::CriticalDepth { geometry, curve } => {
                geometry_lines(&mut kv, geometry);
                kv("critical_depth_m", opt(curve.critical_depth));
                kv("peak_insertion_N", sig6(curve.peak_insertion));
                kv("peak_extraction_N", sig6(curve.peak_extraction));
                let max_net = curve.net.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                kv("max_net_N", sig6(max_net.max(0.0)));
                kv(
                    "extraction_to_insertion",
                    opt(curve.extraction_to_insertion_ratio),
                );
            }
            ReportBody::Calibration {
                geometry,
                samples,
                outcome,
                written,
            } => {
                geometry_lines(&mut kv, geometry);
                kv("samples", samples.len().to_string());
                for step in &outcome.steps {
                    let from = step
                        .regime
                        .map(|r| format!(" (from {r})"))
                        .unwrap_or_default();
                    kv(step.parameter, format!("{}{from}", sig6(step.value)));
                    if let Some(rms) = step.residual_rms {
                        kv(&format!("{}_residual_rms_N", step.parameter), sig6(rms));
                    }
                }
                kv("calibrated_zeta", opt(outcome.media.zeta_opt()));
                kv("calibrated_rho", sig6(outcome.media.rho()));
                kv(
                    "calibrated_tip_side_ratio",
                    outcome
                        .media
                        .tip_side_ratio()
                        .map(sig6)
                        .unwrap_or_else(|_| "n/a".into()),
                );
                let warnings: Vec<String> =
                    outcome.warnings.iter().map(|w| format!("{w:?}")).collect();
                kv(
                    "warnings",
                    if warnings.is_empty() {
                        "none".into()
                    } else {
                        warnings.join(", ")
                    },
                );
                if let Some(p) = written {
                    kv("written", p.display().to_string());
                }
            }
            ReportBody::DiameterSweep(sweep) => {
                kv("depth_m", sig6(sweep.depth));
                kv("diameters", sweep.rows.len().to_string());
                kv("insertion_exponent", sig6(sweep.insertion_exponent));
                kv("extraction_exponent", sig6(sweep.extraction_exponent));
                kv("ratio_exponent", sig6(sweep.ratio_exponent));
            }
            ReportBody::AngleSweep { geometry, rows } => {
                geometry_lines(&mut kv, geometry);
                for r in rows {
                    kv(
                        &format!("tilt_{}_deg", sig6(rad_to_deg(r.tilt))),
                        format!(
                            "insertion {} N, extraction {} N, ratio {}",
                            sig6(r.insertion),
                            sig6(r.extraction),
                            opt(r.ratio())
                        ),
                    );
                }
            }
            ReportBody::Evaluation { config, metrics } => {
                config_lines(&mut kv, config, metrics);
            }
            ReportBody::Optimization {
                config,
                metrics,
                found_feasible,
                written,
            } => {
                kv(
                    "result",
                    if *found_feasible {
                        "best feasible design"
                    } else {
                        "no feasible design; closest shown"
                    }
                    .into(),
                );
                config_lines(&mut kv, config, metrics);
                if let Some(p) = written {
                    kv("written", p.display().to_string());
                }
            }
        }
        out
    }

    pub fn chart(&self) -> Chart {
        match &self.body {
            ReportBody::Simulation { curve, .. } | ReportBody::CriticalDepth { curve, .. } => {
                let pts = |ys: &[f64]| {
                    curve
                        .depths
                        .iter()
                        .copied()
                        .zip(ys.iter().copied())
                        .collect()
                };
                let mut markers = Vec::new();
                if let Some(h) = curve.critical_depth {
                    markers.push(Marker {
                        x: h,
                        y: 0.0,
                        label: format!("h* = {h:.3} m"),
                    });
                }
                Chart {
                    title: format!("{}: force against depth", self.command()),
                    x_label: "tip depth (m)".into(),
                    y_label: "force (N)".into(),
                    series: vec![
                        Series::line("insertion", pts(&curve.insertion)),
                        Series::line("extraction", pts(&curve.extraction)),
                        Series::line("net", pts(&curve.net)),
                    ],
                    markers,
                }
            }
            ReportBody::Calibration {
                geometry,
                samples,
                outcome,
                ..
            } => {
                let mut series = Vec::new();
                let mut regimes: Vec<Regime> = samples.iter().map(|s| s.regime).collect();
                regimes.sort();
                regimes.dedup();
                for regime in regimes {
                    let mine: Vec<_> = sorted_samples(samples)
                        .into_iter()
                        .filter(|s| s.regime == regime)
                        .collect();
                    let deepest = mine.last().map_or(0.0, |s| s.depth);
                    let model: Vec<(f64, f64)> = (0..=50)
                        .map(|i| deepest * i as f64 / 50.0)
                        .filter_map(|z| {
                            model_force(regime, z, geometry, &outcome.media)
                                .ok()
                                .map(|f| (z, f))
                        })
                        .collect();
                    series.push(Series::scatter(
                        format!("{regime} data"),
                        mine.iter().map(|s| (s.depth, s.force)).collect(),
                    ));
                    series.push(Series::line(format!("{regime} fit"), model));
                }
                Chart {
                    title: "calibration".into(),
                    x_label: "depth (m)".into(),
                    y_label: "force (N)".into(),
                    series,
                    markers: Vec::new(),
                }
            }
            ReportBody::DiameterSweep(sweep) => {
                let pts = |f: fn(&crate::anchor::DiameterRow) -> f64| {
                    sweep.rows.iter().map(|r| (r.diameter, f(r))).collect()
                };
                Chart {
                    title: format!("forces at {} m depth", sig6(sweep.depth)),
                    x_label: "diameter (m)".into(),
                    y_label: "force (N)".into(),
                    series: vec![
                        Series::line("insertion", pts(|r| r.insertion)),
                        Series::line("extraction", pts(|r| r.extraction)),
                    ],
                    markers: Vec::new(),
                }
            }
            ReportBody::AngleSweep { rows, .. } => {
                let pts = |f: fn(&PairForces) -> f64| {
                    rows.iter().map(|r| (rad_to_deg(r.tilt), f(r))).collect()
                };
                Chart {
                    title: "symmetric pair against tilt".into(),
                    x_label: "tilt from vertical (deg)".into(),
                    y_label: "force (N)".into(),
                    series: vec![
                        Series::line("insertion", pts(|r| r.insertion)),
                        Series::line("extraction", pts(|r| r.extraction)),
                    ],
                    markers: Vec::new(),
                }
            }
            ReportBody::Evaluation { metrics, .. } | ReportBody::Optimization { metrics, .. } => {
                let pts = |v: &[f64]| {
                    v.iter()
                        .enumerate()
                        .map(|(i, y)| ((i + 1) as f64, *y))
                        .collect()
                };
                Chart {
                    title: "stage anchoring".into(),
                    x_label: "stage".into(),
                    y_label: "force (N)".into(),
                    series: vec![
                        Series::line("required", pts(&metrics.stage_required)),
                        Series::line("available", pts(&metrics.stage_available)),
                    ],
                    markers: Vec::new(),
                }
            }
        }
    }
}

fn nums(values: &[f64]) -> Vec<String> {
    values.iter().copied().map(sig6).collect()
}

fn opt(v: Option<f64>) -> String {
    v.map(sig6).unwrap_or_else(|| "none".into())
}

fn sorted_samples(samples: &[CalibrationSample]) -> Vec<CalibrationSample> {
    let mut v = samples.to_vec();
    v.sort_by(|a, b| {
        a.regime
            .cmp(&b.regime)
            .then(a.depth.total_cmp(&b.depth))
            .then(a.force.total_cmp(&b.force))
    });
    v
}

fn describe(g: &AnchorGeometry) -> String {
    let mode = match g.mode {
        InsertionMode::TipExtender => "tip extender",
        InsertionMode::RigidIntruder => "rigid intruder",
    };
    let skin = match g.skin {
        Skin::Hairless => "hairless".to_string(),
        Skin::Hairy { hair_factor } => format!("hairy x{}", sig6(hair_factor)),
    };
    format!(
        "{mode}, d {} m, L {} m, tilt {} deg, {skin}",
        sig6(g.diameter()),
        sig6(g.length),
        sig6(rad_to_deg(g.tilt))
    )
}

fn geometry_lines(kv: &mut impl FnMut(&str, String), g: &AnchorGeometry) {
    kv("root", describe(g));
}

fn config_lines(kv: &mut impl FnMut(&str, String), cfg: &AnchorConfig, m: &ConfigMetrics) {
    kv("device_weight_N", sig6(cfg.device_weight));
    kv("roots", cfg.roots.len().to_string());
    kv("stages", cfg.stages.len().to_string());
    for (i, stage) in cfg.stages.iter().enumerate() {
        let mut kinds: Vec<String> = stage.iter().map(|&j| describe(&cfg.roots[j])).collect();
        kinds.dedup();
        kv(
            &format!("stage_{}", i + 1),
            format!(
                "{} root(s) [{}], required {} N, available {} N",
                stage.len(),
                kinds.join("; "),
                sig6(m.stage_required[i]),
                sig6(m.stage_available[i])
            ),
        );
    }
    kv("total_peak_extraction_N", sig6(m.total_peak_extraction));
    kv("worst_stage_margin_N", sig6(m.worst_stage_margin));
    kv("anchoring_to_weight", opt(m.anchoring_to_weight));
    kv("total_cross_section_m2", sig6(cfg.total_cross_section()));
    kv("feasible", m.feasible.to_string());
}
