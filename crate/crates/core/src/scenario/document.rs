//! JSON documents: scenarios and anchor configurations. Lengths in metres,
//! angles in degrees, forces in newtons.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::calibration::PeakSet;
use crate::design::{AnchorConfig, SearchConstraints};
use crate::rft::{AnchorGeometry, InsertionMode, Skin};
use crate::units::{deg_to_rad, rad_to_deg};

pub const SCENARIO_SCHEMA: u32 = 1;
pub const CONFIG_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    #[serde(alias = "svg-plot")]
    Svg,
    #[default]
    #[serde(alias = "human-summary")]
    Summary,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    /// Relative to the scenario file. Absent means standard output.
    #[serde(default)]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryDoc {
    pub diameter_m: f64,
    pub length_m: f64,
    #[serde(default)]
    pub tilt_deg: f64,
    #[serde(default)]
    pub skin: Skin,
    #[serde(default)]
    pub mode: InsertionMode,
}

impl GeometryDoc {
    pub fn to_geometry(&self) -> AnchorGeometry {
        AnchorGeometry {
            radius: self.diameter_m / 2.0,
            length: self.length_m,
            tilt: deg_to_rad(self.tilt_deg),
            skin: self.skin,
            mode: self.mode,
        }
    }

    pub fn from_geometry(g: &AnchorGeometry) -> Self {
        Self {
            diameter_m: g.diameter(),
            length_m: g.length,
            tilt_deg: rad_to_deg(g.tilt),
            skin: g.skin,
            mode: g.mode,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiameterRange {
    pub from_m: f64,
    pub to_m: f64,
    pub count: usize,
}

impl DiameterRange {
    /// Evenly spaced, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.from_m],
            n => (0..n)
                .map(|i| self.from_m + (self.to_m - self.from_m) * i as f64 / (n - 1) as f64)
                .collect(),
        }
    }
}

/// Grid overrides for the optimizer; missing fields keep the defaults.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintsDoc {
    pub max_roots: Option<usize>,
    pub max_stages: Option<usize>,
    pub diameters_m: Option<Vec<f64>>,
    pub lengths_m: Option<Vec<f64>>,
    pub tilts_deg: Option<Vec<f64>>,
    pub skins: Option<Vec<Skin>>,
    #[serde(rename = "device_weight_N")]
    pub device_weight_n: Option<f64>,
    pub max_cross_section_m2: Option<f64>,
}

impl ConstraintsDoc {
    pub fn to_constraints(&self) -> SearchConstraints {
        let d = SearchConstraints::default();
        SearchConstraints {
            max_roots: self.max_roots.unwrap_or(d.max_roots),
            max_stages: self.max_stages.unwrap_or(d.max_stages),
            diameters: self.diameters_m.clone().unwrap_or(d.diameters),
            lengths: self.lengths_m.clone().unwrap_or(d.lengths),
            tilts: self
                .tilts_deg
                .as_ref()
                .map(|t| t.iter().copied().map(deg_to_rad).collect())
                .unwrap_or(d.tilts),
            skins: self.skins.clone().unwrap_or(d.skins),
            device_weight: self.device_weight_n.unwrap_or(d.device_weight),
            max_cross_section: self.max_cross_section_m2.or(d.max_cross_section),
        }
    }
}

fn default_depth_step() -> f64 {
    0.005
}

/// What to compute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum CommandDoc {
    /// Insertion, extraction and net force against depth for one root.
    Simulate {
        geometry: GeometryDoc,
        #[serde(default = "default_depth_step")]
        depth_step_m: f64,
    },
    /// Fit the medium to measured samples.
    Calibrate {
        geometry: GeometryDoc,
        /// CSV with `depth_m,force_N,regime`.
        #[serde(default)]
        samples: Option<PathBuf>,
        #[serde(default)]
        peaks: Option<PeakSet>,
        /// Where to write the fitted medium.
        #[serde(default)]
        calibrated_media: Option<PathBuf>,
    },
    CriticalDepth {
        geometry: GeometryDoc,
        #[serde(default = "default_depth_step")]
        depth_step_m: f64,
    },
    SweepDiameter {
        #[serde(default)]
        diameters_m: Option<Vec<f64>>,
        #[serde(default)]
        range: Option<DiameterRange>,
        depth_m: f64,
    },
    SweepAngle {
        geometry: GeometryDoc,
        angles_deg: Vec<f64>,
    },
    /// Stage-by-stage check of an anchor configuration document.
    Evaluate { config: PathBuf },
    Optimize {
        #[serde(default)]
        constraints: ConstraintsDoc,
        /// Where to write the chosen configuration.
        #[serde(default)]
        config_out: Option<PathBuf>,
    },
}

impl CommandDoc {
    pub fn name(&self) -> &'static str {
        match self {
            CommandDoc::Simulate { .. } => "simulate",
            CommandDoc::Calibrate { .. } => "calibrate",
            CommandDoc::CriticalDepth { .. } => "critical-depth",
            CommandDoc::SweepDiameter { .. } => "sweep-diameter",
            CommandDoc::SweepAngle { .. } => "sweep-angle",
            CommandDoc::Evaluate { .. } => "evaluate",
            CommandDoc::Optimize { .. } => "optimize",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioDocument {
    pub schema: u32,
    /// Media profile, relative to the scenario file.
    pub media: PathBuf,
    #[serde(default)]
    pub output: OutputSpec,
    #[serde(default)]
    pub element_size_m: Option<f64>,
    #[serde(flatten)]
    pub command: CommandDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub schema: u32,
    #[serde(rename = "device_weight_N")]
    pub device_weight_n: f64,
    pub roots: Vec<GeometryDoc>,
    /// Root indices per stage, deployed first to last.
    pub stages: Vec<Vec<usize>>,
}

impl ConfigDocument {
    pub fn to_config(&self) -> AnchorConfig {
        AnchorConfig {
            roots: self.roots.iter().map(GeometryDoc::to_geometry).collect(),
            stages: self.stages.clone(),
            device_weight: self.device_weight_n,
        }
    }

    pub fn from_config(cfg: &AnchorConfig) -> Self {
        Self {
            schema: CONFIG_SCHEMA,
            device_weight_n: cfg.device_weight,
            roots: cfg.roots.iter().map(GeometryDoc::from_geometry).collect(),
            stages: cfg.stages.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_parses_with_defaults() {
        let doc: ScenarioDocument = serde_json::from_str(
            r#"{"schema":1,"command":"critical-depth","media":"m.json",
                "geometry":{"diameter_m":0.015,"length_m":0.3}}"#,
        )
        .unwrap();
        assert_eq!(doc.output.format, Format::Summary);
        match doc.command {
            CommandDoc::CriticalDepth {
                geometry,
                depth_step_m,
            } => {
                assert_eq!(geometry.skin, Skin::Hairless);
                assert_eq!(geometry.mode, InsertionMode::TipExtender);
                assert_eq!(depth_step_m, 0.005);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn skin_and_format_spellings() {
        let g: GeometryDoc = serde_json::from_str(
            r#"{"diameter_m":0.01,"length_m":0.3,"skin":{"hairy":{"hair_factor":1.4}},"mode":"rigid_intruder"}"#,
        )
        .unwrap();
        assert_eq!(g.skin.hair_factor(), 1.4);
        let o: OutputSpec = serde_json::from_str(r#"{"format":"svg-plot"}"#).unwrap();
        assert_eq!(o.format, Format::Svg);
    }

    #[test]
    fn unknown_geometry_field_is_rejected() {
        let e =
            serde_json::from_str::<GeometryDoc>(r#"{"diameter_m":0.01,"length_m":0.3,"radius":1}"#)
                .unwrap_err();
        assert!(e.to_string().contains("radius"));
    }

    #[test]
    fn config_round_trip() {
        let cfg = AnchorConfig {
            roots: vec![
                AnchorGeometry::tip_extender(0.005, 0.3).with_tilt(deg_to_rad(15.0)),
                AnchorGeometry::tip_extender(0.01, 0.45).hairy(1.4),
            ],
            stages: vec![vec![0], vec![1]],
            device_weight: 2.9,
        };
        let doc = ConfigDocument::from_config(&cfg);
        let json = serde_json::to_string(&doc).unwrap();
        let back: ConfigDocument = serde_json::from_str(&json).unwrap();
        let again = back.to_config();
        assert_eq!(again.stages, cfg.stages);
        for (a, b) in again.roots.iter().zip(&cfg.roots) {
            assert!((a.tilt - b.tilt).abs() < 1e-12);
            assert_eq!(a.radius, b.radius);
        }
    }

    #[test]
    fn range_includes_endpoints() {
        let r = DiameterRange {
            from_m: 0.01,
            to_m: 0.03,
            count: 3,
        };
        let v = r.values();
        assert_eq!(v.len(), 3);
        assert_eq!((v[0], v[2]), (0.01, 0.03));
        assert!((v[1] - 0.02).abs() < 1e-15);
    }
}
