//! File-driven scenarios: JSON in, CSV, SVG or text out.
//!
//! A scenario names a media profile, one command with its parameters, and an
//! output. Paths inside a scenario are relative to the scenario file.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "command": "critical-depth",
//!   "media": "loose_fine_sand.json",
//!   "geometry": { "diameter_m": 0.015, "length_m": 0.3 },
//!   "output": { "path": "net.svg", "format": "svg" }
//! }
//! ```
//!
//! Errors map to exit codes through [`ScenarioError::exit_code`].

mod document;
mod format;
mod io;
mod report;
mod run;
mod svg;

pub use document::{
    CommandDoc, ConfigDocument, ConstraintsDoc, DiameterRange, Format, GeometryDoc, OutputSpec,
    ScenarioDocument, CONFIG_SCHEMA, SCENARIO_SCHEMA,
};
pub use format::sig6;
pub use io::{
    config_json, load_config, load_media, load_samples, load_scenario_document, media_json,
    samples_csv, write_atomic, ScenarioError,
};
pub use report::{Report, ReportBody};
pub use run::{execute, run, run_file, RunOutcome, Scenario};
pub use svg::{Chart, Marker, Series};
