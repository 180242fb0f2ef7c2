//! Fits the two bundled sands from their sample files.
//!
//! Fine sand: self-anchoring weights give `k_t/k_s` and `ζ`.
//! Play sand: constrained tip insertion gives `ζ`, rigid insertion the wall
//! coefficient, and replicate extraction peaks `ρ` and `κ`.
//!
//! `cargo run --example calibration -- --write` refreshes the profiles in
//! `data/`.

use std::path::Path;

use tipanchor::anchor::critical_depth;
use tipanchor::calibration::{calibrate_media, CalibrationOutcome, PeakSet};
use tipanchor::rft::generic_sand_profile;
use tipanchor::scenario::{load_samples, media_json, write_atomic};
use tipanchor::AnchorGeometry;

fn show(label: &str, out: &CalibrationOutcome) {
    println!("{label}");
    for step in &out.steps {
        println!("  {:<16} {:.6}", step.parameter, step.value);
    }
    if !out.warnings.is_empty() {
        println!("  warnings: {:?}", out.warnings);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let write = std::env::args().any(|a| a == "--write");

    let root = AnchorGeometry::tip_extender(0.0075, 0.30);
    let samples = load_samples(&data.join("self_anchor_fine_sand.csv"))?;
    let fine = calibrate_media(&samples, &root, &generic_sand_profile(), None)?;
    show("loose fine sand", &fine);
    let fine_media = fine
        .media
        .clone()
        .with_name("loose fine sand")
        .with_notes("self-anchoring weights of a 15 mm tip extender, 3 cm steps");
    let h = critical_depth(&root, &fine_media)?.expect("crossover inside the root");
    println!("  critical depth   {h:.4} m");

    let probe = AnchorGeometry::tip_extender(0.0075, 0.15);
    let samples = load_samples(&data.join("insertion_play_sand.csv"))?;
    let peaks = PeakSet {
        intruder: vec![1.9, 2.0, 2.1, 2.0, 2.0],
        hairless: vec![4.8, 5.1, 5.0, 5.2, 4.9],
        hairy: vec![7.0, 6.8, 7.2, 7.1, 6.9],
    };
    let play = calibrate_media(&samples, &probe, &generic_sand_profile(), Some(&peaks))?;
    show("play sand", &play);
    let play_media =
        play.media.clone().with_name("loose play sand").with_notes(
            "tip and rigid insertion of 15 mm bodies to 15 cm; replicate extraction peaks",
        );

    if write {
        write_atomic(
            &data.join("loose_fine_sand.json"),
            media_json(&fine_media).as_bytes(),
        )?;
        write_atomic(
            &data.join("play_sand.json"),
            media_json(&play_media).as_bytes(),
        )?;
        write_atomic(
            &data.join("generic_sand.json"),
            media_json(&generic_sand_profile()).as_bytes(),
        )?;
        println!("profiles written to {}", data.display());
    }
    Ok(())
}
