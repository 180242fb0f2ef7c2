//! Same total cross-section split over more, thinner roots.

use std::path::Path;

use tipanchor::design::split_comparison;
use tipanchor::scenario::load_media;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand =
        load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/loose_fine_sand.json"))?;
    let area = std::f64::consts::PI * 0.01f64.powi(2);
    let rows = split_comparison(area, 16, 0.3, &sand)?;
    let base = rows[0].ratio;
    println!("  N  d (mm)  insertion N  extraction N  ratio  gain  sqrt(N)");
    for r in rows.iter().filter(|r| [1, 2, 4, 9, 16].contains(&r.roots)) {
        println!(
            "{:>3}  {:>6.2}  {:>11.3}  {:>12.3}  {:>5.2}  {:>4.2}  {:>7.2}",
            r.roots,
            r.radius * 2e3,
            r.insertion,
            r.extraction,
            r.ratio,
            r.ratio / base,
            (r.roots as f64).sqrt()
        );
    }
    Ok(())
}
