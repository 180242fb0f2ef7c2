//! Insertion grows with d^2 and extraction with d, so thin roots anchor better
//! per unit of push.

use std::path::Path;

use tipanchor::anchor::diameter_sweep;
use tipanchor::scenario::load_media;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand =
        load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/loose_fine_sand.json"))?;
    let diameters: Vec<f64> = (0..8).map(|i| 0.007 + 0.023 * i as f64 / 7.0).collect();
    let sweep = diameter_sweep(&diameters, 0.15, &sand)?;
    println!("d (mm)  insertion N  extraction N  ratio");
    for row in &sweep.rows {
        println!(
            "{:>6.1}  {:>11.3}  {:>12.3}  {:>5.2}",
            row.diameter * 1e3,
            row.insertion,
            row.extraction,
            row.ratio
        );
    }
    println!(
        "exponents: insertion {:.3}, extraction {:.3}, ratio {:.3}",
        sweep.insertion_exponent, sweep.extraction_exponent, sweep.ratio_exponent
    );
    Ok(())
}
