//! Grid search for the staged layout holding the most, for a few device weights.

use std::path::Path;
use std::time::Instant;

use tipanchor::design::{optimize_config, OptimizeOutcome, SearchConstraints};
use tipanchor::scenario::{config_json, load_media};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sand =
        load_media(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/loose_fine_sand.json"))?;
    for weight in [0.5, 1.0, 2.9] {
        let constraints = SearchConstraints {
            device_weight: weight,
            ..SearchConstraints::default()
        };
        let t = Instant::now();
        let outcome = optimize_config(&constraints, &sand)?;
        let cfg = outcome.config();
        let m = outcome.metrics();
        let verdict = match outcome {
            OptimizeOutcome::Best { .. } => "best",
            OptimizeOutcome::NoFeasibleDesign { .. } => "closest (infeasible)",
        };
        println!("weight {weight} N: {verdict} in {:.2?}", t.elapsed());
        for (i, stage) in cfg.stages.iter().enumerate() {
            let g = cfg.roots[stage[0]];
            println!(
                "  stage {}: {} x {:.0} mm, {:.0} cm, {:.0} deg, hair x{}",
                i + 1,
                stage.len(),
                g.diameter() * 1e3,
                g.length * 100.0,
                g.tilt.to_degrees(),
                g.skin.hair_factor()
            );
        }
        println!(
            "  holds {:.1} N, worst margin {:.3} N",
            m.total_peak_extraction, m.worst_stage_margin
        );
    }

    let best = optimize_config(&SearchConstraints::default(), &sand)?;
    println!("\n{}", config_json(best.config()));
    Ok(())
}
