//! Two roots grown at mirrored tilts, pulled straight up.

use std::path::Path;

use tipanchor::anchor::{angled_pair_forces, MAX_PAIR_TILT_DEG};
use tipanchor::scenario::load_media;
use tipanchor::AnchorGeometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand =
        load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/loose_fine_sand.json"))?;
    let root = AnchorGeometry::tip_extender(0.0075, 0.15);
    println!("tilt  insertion N  extraction N  ratio");
    let mut deg = 0.0;
    while deg <= MAX_PAIR_TILT_DEG {
        let p = angled_pair_forces(f64::to_radians(deg), &root, &sand)?;
        println!(
            "{deg:>4}  {:>11.3}  {:>12.3}  {:>5.3}",
            p.insertion,
            p.extraction,
            p.ratio().unwrap_or(f64::NAN)
        );
        deg += 15.0;
    }
    Ok(())
}
