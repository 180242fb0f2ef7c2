//! Tip extension against rigid intrusion in play sand, with and without hairs.

use std::path::Path;

use tipanchor::anchor::{
    constrained_insertion_force, peak_extraction_force, rigid_insertion_force, tip_insertion_force,
};
use tipanchor::scenario::load_media;
use tipanchor::AnchorGeometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand = load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/play_sand.json"))?;
    let depth = 0.15;
    let bodies = [
        (
            "rigid intruder",
            AnchorGeometry::rigid_intruder(0.0075, depth),
        ),
        (
            "hairless tip extender",
            AnchorGeometry::tip_extender(0.0075, depth),
        ),
        (
            "hairy tip extender",
            AnchorGeometry::tip_extender(0.0075, depth).hairy(1.4),
        ),
    ];
    println!(
        "{:<22} {:>12} {:>13} {:>8}",
        "body", "insertion N", "extraction N", "ratio"
    );
    for (name, g) in &bodies {
        let ins = constrained_insertion_force(depth, g, &sand)?;
        let ext = peak_extraction_force(g, &sand)?;
        println!("{name:<22} {ins:>12.3} {ext:>13.3} {:>8.3}", ext / ins);
    }

    println!("\ninsertion against depth");
    let tip = AnchorGeometry::tip_extender(0.0075, depth);
    let rigid = AnchorGeometry::rigid_intruder(0.0075, depth);
    for cm in [3, 6, 9, 12, 15] {
        let z = cm as f64 / 100.0;
        let a = tip_insertion_force(z, &tip, &sand)?;
        let b = rigid_insertion_force(z, &rigid, &sand)?;
        println!(
            "  {cm:>2} cm  tip {a:>6.3} N  rigid {b:>6.3} N  x{:.1}",
            b / a
        );
    }
    Ok(())
}
