//! Executing scenarios.

use std::path::{Path, PathBuf};

use super::document::{CommandDoc, OutputSpec, ScenarioDocument};
use super::io::{
    config_json, load_config, load_media, load_samples, load_scenario_document, media_json,
    write_atomic, ScenarioError,
};
use super::report::{Report, ReportBody};
use crate::anchor::{
    angled_pair_forces, critical_depth, diameter_sweep, force_report_with, DiameterSweep,
    Integration,
};
use crate::calibration::calibrate_media;
use crate::design::{evaluate_config, optimize_config, OptimizeOutcome};
use crate::error::Error;
use crate::units::deg_to_rad;

/// A scenario with paths resolved against `base_dir`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub media: PathBuf,
    pub command: CommandDoc,
    pub output: OutputSpec,
    pub element_size: Option<f64>,
    pub base_dir: PathBuf,
}

impl Scenario {
    pub fn new(media: impl Into<PathBuf>, command: CommandDoc) -> Self {
        Self {
            media: media.into(),
            command,
            output: OutputSpec::default(),
            element_size: None,
            base_dir: PathBuf::new(),
        }
    }

    pub fn from_document(doc: ScenarioDocument, base_dir: impl Into<PathBuf>) -> Self {
        Self {
            media: doc.media,
            command: doc.command,
            output: doc.output,
            element_size: doc.element_size_m,
            base_dir: base_dir.into(),
        }
    }

    /// Loads a scenario file; relative paths inside are taken from its directory.
    pub fn load(path: &Path) -> Result<Self, ScenarioError> {
        let doc = load_scenario_document(path)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Self::from_document(doc, base))
    }

    pub fn resolve(&self, p: &Path) -> PathBuf {
        self.base_dir.join(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub report: Report,
    pub rendered: String,
    /// Output file, if the result was not meant for standard output.
    pub written: Option<PathBuf>,
}

/// Computes the report without rendering it. Side outputs requested by the
/// command (calibrated media, chosen configuration) are written here.
pub fn execute(sc: &Scenario) -> Result<Report, ScenarioError> {
    let media = load_media(&sc.resolve(&sc.media))?;
    let integration = match sc.element_size {
        None => Integration::ClosedForm,
        Some(h) if h.is_finite() && h > 0.0 => Integration::Mesh { element_size: h },
        Some(h) => {
            return Err(Error::Invalid {
                what: "element size",
                reason: format!("{h} must be > 0"),
            }
            .into())
        }
    };

    let body = match &sc.command {
        CommandDoc::Simulate {
            geometry,
            depth_step_m,
        } => {
            let g = geometry.to_geometry();
            ReportBody::Simulation {
                geometry: g,
                curve: force_report_with(&g, &media, *depth_step_m, integration)?,
            }
        }
        CommandDoc::CriticalDepth {
            geometry,
            depth_step_m,
        } => {
            let g = geometry.to_geometry();
            critical_depth(&g, &media)?;
            ReportBody::CriticalDepth {
                geometry: g,
                curve: force_report_with(&g, &media, *depth_step_m, integration)?,
            }
        }
        CommandDoc::Calibrate {
            geometry,
            samples,
            peaks,
            calibrated_media,
        } => {
            let g = geometry.to_geometry();
            g.validate()?;
            let samples = match samples {
                Some(p) => load_samples(&sc.resolve(p))?,
                None => Vec::new(),
            };
            let outcome = calibrate_media(&samples, &g, &media, peaks.as_ref())?;
            let written = match calibrated_media {
                Some(p) => {
                    let p = sc.resolve(p);
                    write_atomic(&p, media_json(&outcome.media).as_bytes())?;
                    Some(p)
                }
                None => None,
            };
            ReportBody::Calibration {
                geometry: g,
                samples,
                outcome,
                written,
            }
        }
        CommandDoc::SweepDiameter {
            diameters_m,
            range,
            depth_m,
        } => {
            let diameters = match (diameters_m, range) {
                (Some(d), None) => d.clone(),
                (None, Some(r)) => r.values(),
                _ => {
                    return Err(Error::Invalid {
                        what: "sweep-diameter",
                        reason: "give exactly one of `diameters_m` and `range`".into(),
                    }
                    .into())
                }
            };
            if diameters.is_empty() {
                ReportBody::DiameterSweep(DiameterSweep {
                    depth: *depth_m,
                    rows: Vec::new(),
                    insertion_exponent: f64::NAN,
                    extraction_exponent: f64::NAN,
                    ratio_exponent: f64::NAN,
                })
            } else {
                ReportBody::DiameterSweep(diameter_sweep(&diameters, *depth_m, &media)?)
            }
        }
        CommandDoc::SweepAngle {
            geometry,
            angles_deg,
        } => {
            let g = geometry.to_geometry();
            let rows = angles_deg
                .iter()
                .map(|&a| angled_pair_forces(deg_to_rad(a), &g, &media))
                .collect::<Result<Vec<_>, _>>()?;
            ReportBody::AngleSweep { geometry: g, rows }
        }
        CommandDoc::Evaluate { config } => {
            let cfg = load_config(&sc.resolve(config))?;
            let metrics = evaluate_config(&cfg, &media)?;
            ReportBody::Evaluation {
                config: cfg,
                metrics,
            }
        }
        CommandDoc::Optimize {
            constraints,
            config_out,
        } => {
            let outcome = optimize_config(&constraints.to_constraints(), &media)?;
            let found_feasible = matches!(outcome, OptimizeOutcome::Best { .. });
            let written = match config_out {
                Some(p) => {
                    let p = sc.resolve(p);
                    write_atomic(&p, config_json(outcome.config()).as_bytes())?;
                    Some(p)
                }
                None => None,
            };
            ReportBody::Optimization {
                config: outcome.config().clone(),
                metrics: outcome.metrics().clone(),
                found_feasible,
                written,
            }
        }
    };
    Ok(Report {
        media: media.name.clone(),
        body,
    })
}

/// Executes, renders, and writes the primary output if a path is set.
pub fn run(sc: &Scenario) -> Result<RunOutcome, ScenarioError> {
    let report = execute(sc)?;
    let rendered = report.render(sc.output.format);
    let written = match &sc.output.path {
        Some(p) => {
            let p = sc.resolve(p);
            write_atomic(&p, rendered.as_bytes())?;
            Some(p)
        }
        None => None,
    };
    Ok(RunOutcome {
        report,
        rendered,
        written,
    })
}

/// Loads and runs a scenario file.
pub fn run_file(path: &Path) -> Result<RunOutcome, ScenarioError> {
    run(&Scenario::load(path)?)
}
