//! Small roots first: their hold pays for the big one.

use std::path::Path;

use tipanchor::design::{evaluate_config, AnchorConfig};
use tipanchor::scenario::{load_config, load_media};

fn show(label: &str, cfg: &AnchorConfig, sand: &tipanchor::MediaProfile) -> tipanchor::Result<()> {
    let m = evaluate_config(cfg, sand)?;
    println!("{label} (weight {} N)", cfg.device_weight);
    for (i, stage) in cfg.stages.iter().enumerate() {
        let d = cfg.roots[stage[0]].diameter() * 1e3;
        println!(
            "  stage {}: {} x {d:.0} mm  needs {:.3} N  has {:.3} N",
            i + 1,
            stage.len(),
            m.stage_required[i],
            m.stage_available[i]
        );
    }
    println!(
        "  feasible {}, holds {:.1} N, {:.0}:1 anchoring to weight\n",
        m.feasible,
        m.total_peak_extraction,
        m.anchoring_to_weight.unwrap_or(0.0)
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let sand = load_media(&data.join("loose_fine_sand.json"))?;
    let cfg = load_config(&data.join("scenarios/staged_device.json"))?;
    show("small first", &cfg, &sand)?;

    let mut reversed = cfg.clone();
    reversed.stages.reverse();
    show("large first", &reversed, &sand)?;

    let mut light = reversed.clone();
    light.device_weight = 2.0;
    show("large first, lighter device", &light, &sand)?;
    Ok(())
}
