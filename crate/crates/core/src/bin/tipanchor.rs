//! Command-line front end. Every subcommand builds a scenario and runs it
//! through the library; `run` takes a scenario file directly.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tipanchor::calibration::PeakSet;
use tipanchor::rft::{InsertionMode, Skin};
use tipanchor::scenario::{
    run, CommandDoc, ConstraintsDoc, DiameterRange, Format, GeometryDoc, Scenario,
};

#[derive(Parser)]
#[command(
    name = "tipanchor",
    version,
    about = "Anchoring forces of tip-extending roots in granular media"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Media profile (JSON). Overrides the scenario's.
    #[arg(long, global = true)]
    media: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Mesh element size in metres; closed forms are used when absent.
    #[arg(long, global = true)]
    element_size: Option<f64>,
    /// Reserved. All computations are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Args, Clone)]
struct Root {
    #[arg(long)]
    diameter_cm: f64,
    #[arg(long)]
    length_cm: f64,
    #[arg(long, default_value_t = 0.0)]
    tilt_deg: f64,
    /// Hair factor; hairless when absent.
    #[arg(long)]
    hairy: Option<f64>,
    /// Push the whole body instead of everting from the tip.
    #[arg(long)]
    rigid: bool,
}

impl Root {
    fn doc(&self) -> GeometryDoc {
        GeometryDoc {
            diameter_m: self.diameter_cm / 100.0,
            length_m: self.length_cm / 100.0,
            tilt_deg: self.tilt_deg,
            skin: self
                .hairy
                .map_or(Skin::Hairless, |hair_factor| Skin::Hairy { hair_factor }),
            mode: if self.rigid {
                InsertionMode::RigidIntruder
            } else {
                InsertionMode::TipExtender
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Run { scenario: PathBuf },
    /// Force against depth for one root.
    Simulate {
        #[command(flatten)]
        root: Root,
        #[arg(long, default_value_t = 0.5)]
        depth_step_cm: f64,
    },
    /// Depth where net self-anchoring turns negative.
    CriticalDepth {
        #[command(flatten)]
        root: Root,
        #[arg(long, default_value_t = 0.5)]
        depth_step_cm: f64,
    },
    /// Fit the medium to samples and replicate peaks.
    Calibrate {
        #[command(flatten)]
        root: Root,
        /// CSV with depth_m,force_N,regime.
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Replicate extraction peaks, N, comma separated.
        #[arg(long, value_delimiter = ',')]
        intruder_peaks: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        hairless_peaks: Vec<f64>,
        #[arg(long, value_delimiter = ',')]
        hairy_peaks: Vec<f64>,
        /// Write the fitted medium here.
        #[arg(long)]
        calibrated_media: Option<PathBuf>,
    },
    /// Insertion and extraction against diameter at a fixed depth.
    SweepDiameter {
        #[arg(long, value_delimiter = ',')]
        diameters_cm: Vec<f64>,
        #[arg(long)]
        from_cm: Option<f64>,
        #[arg(long)]
        to_cm: Option<f64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        depth_cm: f64,
    },
    /// Symmetric angled pair against tilt.
    SweepAngle {
        #[command(flatten)]
        root: Root,
        #[arg(long, value_delimiter = ',', default_value = "0,15,30,45,60")]
        angles_deg: Vec<f64>,
    },
    /// Check an anchor configuration stage by stage.
    Evaluate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Search the design grid for the best staged configuration.
    Optimize {
        #[arg(long)]
        weight_n: Option<f64>,
        #[arg(long)]
        max_roots: Option<usize>,
        #[arg(long)]
        max_stages: Option<usize>,
        /// Write the chosen configuration here.
        #[arg(long)]
        config_out: Option<PathBuf>,
    },
}

fn command_doc(cmd: Command) -> Result<CommandDoc, String> {
    Ok(match cmd {
        Command::Run { .. } => unreachable!("handled by caller"),
        Command::Simulate {
            root,
            depth_step_cm,
        } => CommandDoc::Simulate {
            geometry: root.doc(),
            depth_step_m: depth_step_cm / 100.0,
        },
        Command::CriticalDepth {
            root,
            depth_step_cm,
        } => CommandDoc::CriticalDepth {
            geometry: root.doc(),
            depth_step_m: depth_step_cm / 100.0,
        },
        Command::Calibrate {
            root,
            samples,
            intruder_peaks,
            hairless_peaks,
            hairy_peaks,
            calibrated_media,
        } => {
            let any_peaks =
                !(intruder_peaks.is_empty() && hairless_peaks.is_empty() && hairy_peaks.is_empty());
            CommandDoc::Calibrate {
                geometry: root.doc(),
                samples,
                peaks: any_peaks.then_some(PeakSet {
                    intruder: intruder_peaks,
                    hairless: hairless_peaks,
                    hairy: hairy_peaks,
                }),
                calibrated_media,
            }
        }
        Command::SweepDiameter {
            diameters_cm,
            from_cm,
            to_cm,
            count,
            depth_cm,
        } => {
            let range = match (from_cm, to_cm) {
                (Some(from), Some(to)) => Some(DiameterRange {
                    from_m: from / 100.0,
                    to_m: to / 100.0,
                    count,
                }),
                (None, None) => None,
                _ => return Err("--from-cm and --to-cm go together".into()),
            };
            CommandDoc::SweepDiameter {
                diameters_m: (range.is_none())
                    .then(|| diameters_cm.iter().map(|d| d / 100.0).collect()),
                range,
                depth_m: depth_cm / 100.0,
            }
        }
        Command::SweepAngle { root, angles_deg } => CommandDoc::SweepAngle {
            geometry: root.doc(),
            angles_deg,
        },
        Command::Evaluate { config } => CommandDoc::Evaluate { config },
        Command::Optimize {
            weight_n,
            max_roots,
            max_stages,
            config_out,
        } => CommandDoc::Optimize {
            constraints: ConstraintsDoc {
                max_roots,
                max_stages,
                device_weight_n: weight_n,
                ..Default::default()
            },
            config_out,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let mut scenario = match cli.command {
        Command::Run { scenario } => match Scenario::load(&scenario) {
            Ok(s) => s,
            Err(e) => return fail(&e.to_string(), e.exit_code()),
        },
        cmd => {
            let Some(media) = cli.media.clone() else {
                return fail("--media is required", 2);
            };
            match command_doc(cmd) {
                Ok(doc) => Scenario::new(media, doc),
                Err(msg) => return fail(&msg, 2),
            }
        }
    };
    // Command-line paths are relative to the working directory.
    if let Some(m) = cli.media {
        scenario.media = std::env::current_dir().map(|d| d.join(&m)).unwrap_or(m);
    }
    if let Some(o) = cli.out {
        scenario.output.path = Some(std::env::current_dir().map(|d| d.join(&o)).unwrap_or(o));
    }
    if let Some(f) = cli.format {
        scenario.output.format = f;
    }
    if cli.element_size.is_some() {
        scenario.element_size = cli.element_size;
    }
    match run(&scenario) {
        Ok(out) => {
            if out.written.is_none() {
                print!("{}", out.rendered);
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e.to_string(), e.exit_code()),
    }
}

fn fail(msg: &str, code: i32) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code as u8)
}
