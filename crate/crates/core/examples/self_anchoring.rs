//! Net force of a growing 15 mm root in loose fine sand, and the depth past
//! which it anchors itself.

use std::path::Path;

use tipanchor::anchor::{critical_depth, force_report, max_net_force};
use tipanchor::scenario::load_media;
use tipanchor::AnchorGeometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand =
        load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/loose_fine_sand.json"))?;
    let root = AnchorGeometry::tip_extender(0.0075, 0.30);

    let report = force_report(&root, &sand, 0.03)?;
    println!("depth (cm)  tip (N)  side hold (N)  net (N)");
    for i in 0..report.depths.len() {
        let z = report.depths[i];
        println!(
            "{:>10.0}  {:>7.3}  {:>13.3}  {:>7.3}",
            z * 100.0,
            report.insertion[i],
            report.insertion[i] - report.net[i],
            report.net[i]
        );
    }

    let h = critical_depth(&root, &sand)?.expect("root longer than h*");
    let (at, most) = max_net_force(&root, &sand)?;
    println!(
        "\nweight needed at most {most:.3} N (at {:.1} cm)",
        at * 100.0
    );
    println!("self-anchors beyond {:.1} cm", h * 100.0);

    // h* = r k_t / k_s for a vertical root
    for d_mm in [7.0, 10.0, 15.0, 20.0] {
        let g = AnchorGeometry::tip_extender(d_mm / 2000.0, 1.0);
        let h = critical_depth(&g, &sand)?.unwrap();
        println!("  d = {d_mm:>4} mm  h* = {:.1} cm", h * 100.0);
    }
    Ok(())
}
