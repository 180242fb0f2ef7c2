//! Runs every scenario file in `data/scenarios` and prints its summary.

use std::path::Path;

use tipanchor::scenario::{run, Format, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/scenarios");
    let mut files: Vec<_> = std::fs::read_dir(&dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension().is_some_and(|e| e == "json")
                && !p
                    .file_stem()
                    .is_some_and(|s| s.to_string_lossy().starts_with("staged_device"))
        })
        .collect();
    files.sort();
    for file in files {
        let mut sc = Scenario::load(&file)?;
        sc.output.path = None;
        sc.output.format = Format::Summary;
        match run(&sc) {
            Ok(out) => println!("== {}\n{}", file.display(), out.rendered),
            Err(e) => println!(
                "== {}\nerror (exit {}): {e}\n",
                file.display(),
                e.exit_code()
            ),
        }
    }
    Ok(())
}
