use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tipanchor::scenario::{run, Format, Scenario};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tipanchor"))
}

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn scenario_file_matches_library_call() {
    let file = data("scenarios/sweep_angle.json");
    let out = bin().arg("run").arg(&file).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let lib = run(&Scenario::load(&file).unwrap()).unwrap();
    assert_eq!(stdout(&out), lib.rendered);
    assert!(lib
        .rendered
        .starts_with("tilt_deg,insertion_N,extraction_N,ratio\n"));
}

#[test]
fn direct_subcommand_matches_scenario() {
    let out = bin()
        .args([
            "critical-depth",
            "--diameter-cm",
            "1.5",
            "--length-cm",
            "30",
            "--format",
            "csv",
        ])
        .arg("--media")
        .arg(data("loose_fine_sand.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let lib = run(&Scenario::load(&data("scenarios/critical_depth.json")).unwrap()).unwrap();
    assert_eq!(stdout(&out), lib.rendered);
}

#[test]
fn svg_marks_the_crossover() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("net.svg");
    let out = bin()
        .arg("run")
        .arg(data("scenarios/critical_depth.json"))
        .args(["--format", "svg", "--out"])
        .arg(&target)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let svg = fs::read_to_string(&target).unwrap();
    assert!(svg.contains("h* = 0.120 m"));
    assert!(svg.contains("tip depth (m)") && svg.contains("force (N)"));
}

#[test]
fn summary_has_fixed_keys() {
    let out = bin()
        .arg("run")
        .arg(data("scenarios/evaluate_staged.json"))
        .args(["--format", "summary"])
        .output()
        .unwrap();
    let keys: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split(':').next().unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "command",
            "media",
            "device_weight_N",
            "roots",
            "stages",
            "stage_1",
            "stage_2",
            "total_peak_extraction_N",
            "worst_stage_margin_N",
            "anchoring_to_weight",
            "total_cross_section_m2",
            "feasible"
        ]
    );
}

#[test]
fn empty_diameter_sweep_writes_header_only() {
    let out = bin()
        .args(["sweep-diameter", "--depth-cm", "15", "--format", "csv"])
        .arg("--media")
        .arg(data("loose_fine_sand.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "diameter_m,insertion_N,extraction_N,ratio\n");
}

#[test]
fn diameter_sweep_has_exponent_footer() {
    let out = bin()
        .arg("run")
        .arg(data("scenarios/sweep_diameter.json"))
        .output()
        .unwrap();
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("exponent,2,1,-1"), "{last}");
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn broken_scenario_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(
        &p,
        "{\n  \"schema\": 1,\n  \"command\": \"critical-depth\",\n  \"media\": 5\n}\n",
    )
    .unwrap();
    let out = bin().arg("run").arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
}

#[test]
fn media_without_zeta_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("m.json");
    let text = fs::read_to_string(data("loose_fine_sand.json")).unwrap();
    let stripped: String = text
        .lines()
        .filter(|l| !l.contains("\"zeta\""))
        .collect::<Vec<_>>()
        .join("\n");
    fs::write(&p, stripped).unwrap();
    let out = bin()
        .args([
            "critical-depth",
            "--diameter-cm",
            "1.5",
            "--length-cm",
            "30",
            "--media",
        ])
        .arg(&p)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("missing field `zeta`"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn unknown_command_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, r#"{"schema":1,"command":"dig","media":"m.json"}"#).unwrap();
    let out = bin().arg("run").arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("dig"));
}

#[test]
fn missing_media_exits_2() {
    let out = bin()
        .args([
            "critical-depth",
            "--diameter-cm",
            "1.5",
            "--length-cm",
            "30",
            "--media",
            "/no/such/media.json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rigid_critical_depth_is_a_contract_error() {
    let out = bin()
        .args([
            "critical-depth",
            "--diameter-cm",
            "1.5",
            "--length-cm",
            "30",
            "--rigid",
        ])
        .arg("--media")
        .arg(data("loose_fine_sand.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("tip"), "{}", stderr(&out));
}

#[test]
fn uncalibrated_media_exits_1() {
    let out = bin()
        .args(["simulate", "--diameter-cm", "1.5", "--length-cm", "30"])
        .arg("--media")
        .arg(data("generic_sand.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_output_exits_1() {
    let out = bin()
        .arg("run")
        .arg(data("scenarios/critical_depth.json"))
        .args(["--out", "/proc/tipanchor/out.csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}

#[test]
fn calibrate_writes_a_loadable_profile() {
    let dir = tempfile::tempdir().unwrap();
    let fitted = dir.path().join("fitted.json");
    let out = bin()
        .args(["calibrate", "--diameter-cm", "1.5", "--length-cm", "30"])
        .arg("--media")
        .arg(data("generic_sand.json"))
        .arg("--samples")
        .arg(data("self_anchor_fine_sand.csv"))
        .arg("--calibrated-media")
        .arg(&fitted)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("tip_side_ratio: 16.0046"));
    let committed = fs::read_to_string(data("loose_fine_sand.json")).unwrap();
    let media = tipanchor::scenario::load_media(&fitted).unwrap();
    let bundled = tipanchor::scenario::load_media(&data("loose_fine_sand.json")).unwrap();
    assert_eq!(media.zeta_opt(), bundled.zeta_opt());
    assert_eq!(media.table(), bundled.table());
    assert!(committed.contains("\"schema\": 1"));
}

#[test]
fn optimize_round_trips_its_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("best.json");
    let out = bin()
        .args([
            "optimize",
            "--weight-n",
            "2.9",
            "--max-roots",
            "4",
            "--max-stages",
            "2",
        ])
        .arg("--media")
        .arg(data("loose_fine_sand.json"))
        .arg("--config-out")
        .arg(&cfg)
        .args(["--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let eval = bin()
        .args(["evaluate", "--format", "csv"])
        .arg("--media")
        .arg(data("loose_fine_sand.json"))
        .arg("--config")
        .arg(&cfg)
        .output()
        .unwrap();
    assert!(eval.status.success(), "{}", stderr(&eval));
    assert_eq!(stdout(&out), stdout(&eval));
}

#[test]
fn format_flag_overrides_scenario() {
    let mut sc = Scenario::load(&data("scenarios/critical_depth.json")).unwrap();
    sc.output.format = Format::Summary;
    let lib = run(&sc).unwrap();
    let out = bin()
        .arg("run")
        .arg(data("scenarios/critical_depth.json"))
        .args(["--format", "summary"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), lib.rendered);
    assert!(lib.rendered.contains("critical_depth_m: 0.120033"));
}
