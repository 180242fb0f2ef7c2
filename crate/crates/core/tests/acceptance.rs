//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; exits non-zero if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tipanchor::anchor::{
    self, angled_pair_forces, diameter_sweep, integrated, peak_extraction_force,
    rigid_insertion_force, side_anchor_force, tip_insertion_force,
};
use tipanchor::calibration::{
    calibrate_media, fit_history_and_hair, fit_scale_factor, fit_tip_side_ratio, CalibrationSample,
    PeakSet, Regime,
};
use tipanchor::design::{evaluate_config, optimize_config, split_comparison, SearchConstraints};
use tipanchor::rft::generic_sand_profile;
use tipanchor::scenario::{load_config, load_media, load_samples, media_json, write_atomic};
use tipanchor::{AnchorGeometry, MediaProfile};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tipanchor"))
}

fn critical_depth_reproduction() -> Check {
    let start = Instant::now();
    let root = AnchorGeometry::tip_extender(0.0075, 0.30);
    let samples = load_samples(&data().join("self_anchor_fine_sand.csv")).map_err(err)?;
    let fitted = calibrate_media(&samples, &root, &generic_sand_profile(), None).map_err(err)?;
    let dir = tempfile::tempdir().map_err(err)?;
    let media = dir.path().join("fitted.json");
    write_atomic(&media, media_json(&fitted.media).as_bytes()).map_err(err)?;

    let out = cli()
        .args([
            "critical-depth",
            "--diameter-cm",
            "1.5",
            "--length-cm",
            "30",
            "--format",
            "summary",
        ])
        .arg("--media")
        .arg(&media)
        .output()
        .map_err(err)?;
    within(start.elapsed(), Duration::from_secs(1))?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    let text = String::from_utf8(out.stdout).map_err(err)?;
    let h: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("critical_depth_m: "))
        .ok_or("no critical depth line")?
        .parse()
        .map_err(err)?;
    let ratio = fitted.media.tip_side_ratio().map_err(err)?;
    ensure(
        (h - 0.12).abs() <= 0.01,
        format!("h* = {h:.4} m, k_t/k_s = {ratio:.3}, {:?}", start.elapsed()),
    )
}

fn scaling_law_recovery() -> Check {
    let start = Instant::now();
    let media = load_media(&data().join("loose_fine_sand.json")).map_err(err)?;
    let diameters: Vec<f64> = (0..10).map(|i| 0.007 + 0.023 * i as f64 / 9.0).collect();
    let sweep = diameter_sweep(&diameters, 0.15, &media).map_err(err)?;
    within(start.elapsed(), Duration::from_secs(1))?;
    ensure(
        (sweep.insertion_exponent - 2.0).abs() <= 0.05
            && (sweep.extraction_exponent - 1.0).abs() <= 0.05,
        format!(
            "insertion exponent {:.4}, extraction exponent {:.4}",
            sweep.insertion_exponent, sweep.extraction_exponent
        ),
    )
}

fn ratio_ordering() -> Check {
    let probe = AnchorGeometry::tip_extender(0.0075, 0.15);
    let samples = load_samples(&data().join("insertion_play_sand.csv")).map_err(err)?;
    let peaks = PeakSet {
        intruder: vec![1.9, 2.0, 2.1, 2.0, 2.0],
        hairless: vec![4.8, 5.1, 5.0, 5.2, 4.9],
        hairy: vec![7.0, 6.8, 7.2, 7.1, 6.9],
    };
    let fit =
        calibrate_media(&samples, &probe, &generic_sand_profile(), Some(&peaks)).map_err(err)?;
    let media = fit.media;
    let kappa = fit.hair_factor.ok_or("no hair factor")?;
    let z = 0.15;
    let hairless = AnchorGeometry::tip_extender(0.0075, z);
    let hairy = hairless.hairy(kappa);
    let rigid = AnchorGeometry::rigid_intruder(0.0075, z);

    let tip_in = tip_insertion_force(z, &hairless, &media).map_err(err)?;
    let rigid_in = rigid_insertion_force(z, &rigid, &media).map_err(err)?;
    let r_hairless = peak_extraction_force(&hairless, &media).map_err(err)? / tip_in;
    let r_hairy = peak_extraction_force(&hairy, &media).map_err(err)? / tip_in;
    let r_rigid = peak_extraction_force(&rigid, &media).map_err(err)? / rigid_in;
    let factor = rigid_in / tip_in;
    ensure(
        (media.rho() - 2.5).abs() < 1e-9
            && (kappa - 1.4).abs() < 1e-9
            && r_hairy > r_hairless
            && r_hairless > 1.0
            && 1.0 > r_rigid
            && (7.0..=13.0).contains(&factor),
        format!(
            "ratios hairy {r_hairy:.3} > hairless {r_hairless:.3} > 1 > rigid {r_rigid:.3}; rigid/tip insertion {factor:.2}"
        ),
    )
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let h = 1e-3;
    let mut worst: (f64, String) = (0.0, String::new());
    let mut track = |name: &str, closed: f64, mesh: f64, r: f64, z: f64, zeta: f64| {
        let rel = ((mesh - closed) / closed).abs();
        if rel > worst.0 {
            worst = (rel, format!("{name} r={r} z={z} zeta={zeta}"));
        }
    };
    for &zeta in &[0.2, 1.0, 1.7] {
        let media = generic_sand_profile().with_zeta(zeta).map_err(err)?;
        for &r in &[0.0035, 0.005, 0.0075, 0.01, 0.015] {
            for &z in &[0.03, 0.06, 0.09, 0.12, 0.15] {
                let tip = AnchorGeometry::tip_extender(r, z);
                let rigid = AnchorGeometry::rigid_intruder(r, z);
                let c = tip_insertion_force(z, &tip, &media).map_err(err)?;
                let m = integrated::tip_insertion_force(z, &tip, &media, h).map_err(err)?;
                track("tip", c, m, r, z, zeta);
                let c = side_anchor_force(z, &tip, &media).map_err(err)?;
                let m = integrated::side_anchor_force(z, &tip, &media, h).map_err(err)?;
                track("side", c, m, r, z, zeta);
                let c = rigid_insertion_force(z, &rigid, &media).map_err(err)?;
                let m = integrated::rigid_insertion_force(z, &rigid, &media, h).map_err(err)?;
                track("rigid", c, m, r, z, zeta);
                let pair = angled_pair_forces(0.0, &tip, &media).map_err(err)?;
                let m = 2.0 * integrated::tip_insertion_force(z, &tip, &media, h).map_err(err)?;
                track("pair insertion", pair.insertion, m, r, z, zeta);
                let m = 2.0 * integrated::peak_extraction_force(&tip, &media, h).map_err(err)?;
                track("pair extraction", pair.extraction, m, r, z, zeta);
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    ensure(
        worst.0 <= 0.005,
        format!(
            "worst relative gap {:.2e} ({}), {:?}",
            worst.0,
            worst.1,
            start.elapsed()
        ),
    )
}

fn noisy(rng: &mut ChaCha8Rng, x: f64) -> f64 {
    x * (1.0 + rng.gen_range(-0.05..=0.05))
}

fn calibration_round_trips() -> Check {
    let truth_zeta = 1.7;
    let truth_ratio = 12.0;
    let truth_rho = 2.5;
    let truth_kappa = 1.4;
    let base = generic_sand_profile();
    let truth = base
        .clone()
        .with_tip_side_ratio(truth_ratio)
        .and_then(|m| m.with_zeta(truth_zeta))
        .and_then(|m| m.with_rho(truth_rho))
        .map_err(err)?;
    let rigid = AnchorGeometry::rigid_intruder(0.0075, 0.15);
    let tip = AnchorGeometry::tip_extender(0.0075, 0.30);

    let rigid_samples = |noise: Option<&mut ChaCha8Rng>| -> Result<Vec<CalibrationSample>, String> {
        let mut noise = noise;
        (1..=15)
            .map(|i| {
                let z = 0.01 * i as f64;
                let f = rigid_insertion_force(z, &rigid, &truth).map_err(err)?;
                let f = match noise.as_deref_mut() {
                    Some(rng) => noisy(rng, f),
                    None => f,
                };
                Ok(CalibrationSample::new(z, f, Regime::RigidInsertion))
            })
            .collect()
    };
    let anchor_samples =
        |noise: Option<&mut ChaCha8Rng>| -> Result<Vec<CalibrationSample>, String> {
            let mut noise = noise;
            (1..=10)
                .map(|i| {
                    let z = 0.02 * i as f64;
                    let f = anchor::net_self_anchor_force(z, &tip, &truth).map_err(err)?;
                    let f = match noise.as_deref_mut() {
                        Some(rng) => noisy(rng, f),
                        None => f,
                    };
                    Ok(CalibrationSample::new(z, f, Regime::SelfAnchorWeight))
                })
                .collect()
        };
    let peak_set = |noise: Option<&mut ChaCha8Rng>| -> Result<PeakSet, String> {
        let intruder = peak_extraction_force(&rigid, &truth).map_err(err)?;
        let hairless = peak_extraction_force(&AnchorGeometry::tip_extender(0.0075, 0.15), &truth)
            .map_err(err)?;
        let hairy = peak_extraction_force(
            &AnchorGeometry::tip_extender(0.0075, 0.15).hairy(truth_kappa),
            &truth,
        )
        .map_err(err)?;
        Ok(match noise {
            Some(rng) => PeakSet {
                intruder: (0..5).map(|_| noisy(rng, intruder)).collect(),
                hairless: (0..5).map(|_| noisy(rng, hairless)).collect(),
                hairy: (0..5).map(|_| noisy(rng, hairy)).collect(),
            },
            None => PeakSet {
                intruder: vec![intruder],
                hairless: vec![hairless],
                hairy: vec![hairy],
            },
        })
    };
    // ζ fits start from the true table; the ratio fit from the generic one.
    let zeta_start = truth.clone();
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    let fit_all = |rs: &[CalibrationSample],
                   ss: &[CalibrationSample],
                   ps: &PeakSet|
     -> Result<[f64; 4], String> {
        let zeta = fit_scale_factor(rs, &rigid, &zeta_start).map_err(err)?.zeta;
        let hh = fit_history_and_hair(ps).map_err(err)?;
        let ratio = fit_tip_side_ratio(ss, &tip, &base).map_err(err)?.ratio;
        Ok([
            rel(zeta, truth_zeta),
            rel(hh.rho, truth_rho),
            rel(hh.kappa, truth_kappa),
            rel(ratio, truth_ratio),
        ])
    };

    let clean = fit_all(
        &rigid_samples(None)?,
        &anchor_samples(None)?,
        &peak_set(None)?,
    )?;
    let clean_worst = clean.iter().copied().fold(0.0, f64::max);
    let mut noisy_worst = [0.0f64; 4];
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rs = rigid_samples(Some(&mut rng))?;
        let ss = anchor_samples(Some(&mut rng))?;
        let ps = peak_set(Some(&mut rng))?;
        let errs = fit_all(&rs, &ss, &ps)?;
        for (w, e) in noisy_worst.iter_mut().zip(errs) {
            *w = w.max(e);
        }
    }
    let noisy_max = noisy_worst.iter().copied().fold(0.0, f64::max);
    ensure(
        clean_worst <= 1e-6 && noisy_max <= 0.05,
        format!(
            "noiseless worst {clean_worst:.1e}; 5% noise, 5 replicate peaks per device, 20 seeds, worst zeta {:.3}, rho {:.3}, kappa {:.3}, k_t/k_s {:.3}",
            noisy_worst[0], noisy_worst[1], noisy_worst[2], noisy_worst[3]
        ),
    )
}

fn split_law() -> Check {
    let media = load_media(&data().join("loose_fine_sand.json")).map_err(err)?;
    let area = std::f64::consts::PI * 0.02f64.powi(2);
    let rows = split_comparison(area, 16, 0.15, &media).map_err(err)?;
    let base = rows[0].ratio;
    let mut worst = 0.0f64;
    for n in [1usize, 4, 9, 16] {
        let got = rows[n - 1].ratio / base;
        worst = worst.max((got / (n as f64).sqrt() - 1.0).abs());
    }
    ensure(
        worst <= 0.01,
        format!("worst relative gap to sqrt(N) {worst:.2e}"),
    )
}

fn staged_deployment() -> Check {
    let media: MediaProfile = load_media(&data().join("loose_fine_sand.json")).map_err(err)?;
    let scen = data().join("scenarios");
    let device = load_config(&scen.join("staged_device.json")).map_err(err)?;
    let reversed = load_config(&scen.join("staged_device_reversed.json")).map_err(err)?;
    let m = evaluate_config(&device, &media).map_err(err)?;
    let r = evaluate_config(&reversed, &media).map_err(err)?;
    let mut detail = format!(
        "field device feasible {}, stage-1 required {:.3} N vs reversed {:.3} N",
        m.feasible, m.stage_required[0], r.stage_required[0]
    );
    let mut ok = m.feasible && r.stage_required[0] > m.stage_required[0];

    for weight in [1.0, 2.9, 6.0] {
        let constraints = SearchConstraints {
            device_weight: weight,
            ..SearchConstraints::default()
        };
        let outcome = optimize_config(&constraints, &media).map_err(err)?;
        let cfg = outcome.config();
        let widest = cfg.stage_max_diameters();
        let smallest: Vec<f64> = cfg
            .stages
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&i| cfg.roots[i].diameter())
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        let ordered = (0..cfg.stages.len())
            .all(|i| (i + 1..cfg.stages.len()).all(|j| widest[i] <= smallest[j] + 1e-12));
        ok &= ordered;
        let ds: Vec<String> = widest.iter().map(|d| format!("{:.0}", d * 1e3)).collect();
        detail.push_str(&format!(
            "; optimizer at {weight} N stages [{}] mm",
            ds.join(", ")
        ));
    }
    ensure(ok, detail)
}

fn angle_trend() -> Check {
    let media = load_media(&data().join("loose_fine_sand.json")).map_err(err)?;
    let root = AnchorGeometry::tip_extender(0.0075, 0.15);
    let rows = [0.0f64, 15.0, 30.0, 45.0]
        .iter()
        .map(|d| angled_pair_forces(d.to_radians(), &root, &media))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let decreasing = rows.windows(2).all(|w| w[1].extraction < w[0].extraction);
    let ratio = |i: usize| rows[i].ratio().unwrap_or(f64::NAN);
    let ok = decreasing && ratio(2) < ratio(0) && ratio(3) < ratio(0);
    let ex: Vec<String> = rows
        .iter()
        .map(|r| format!("{:.2}", r.extraction))
        .collect();
    ensure(
        ok,
        format!(
            "extraction [{}] N; ratios 0deg {:.3}, 30deg {:.3}, 45deg {:.3}",
            ex.join(", "),
            ratio(0),
            ratio(2),
            ratio(3)
        ),
    )
}

fn cli_determinism() -> Check {
    let scenarios = [
        "critical_depth",
        "calibrate_play_sand",
        "insertion_modes",
        "sweep_diameter",
        "sweep_angle",
        "evaluate_staged",
        "evaluate_reversed",
        "optimize",
    ];
    let dir = tempfile::tempdir().map_err(err)?;
    for name in scenarios {
        let file = data().join("scenarios").join(format!("{name}.json"));
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{name}-{run}.csv"));
            let status = cli()
                .arg("run")
                .arg(&file)
                .args(["--format", "csv", "--out"])
                .arg(&out)
                .output()
                .map_err(err)?;
            if !status.status.success() {
                return Err(format!(
                    "{name}: {}",
                    String::from_utf8_lossy(&status.stderr)
                ));
            }
            outputs.push(std::fs::read(&out).map_err(err)?);
        }
        if outputs[0].is_empty() || outputs[0] != outputs[1] {
            return Err(format!("{name}: outputs differ or are empty"));
        }
    }
    Ok(format!(
        "{} scenarios byte-identical across two runs",
        scenarios.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("critical-depth reproduction", critical_depth_reproduction),
        ("scaling-law recovery", scaling_law_recovery),
        ("ratio ordering", ratio_ordering),
        ("oracle equivalence", oracle_equivalence),
        ("calibration round-trips", calibration_round_trips),
        ("sqrt(N) split law", split_law),
        ("staged deployment", staged_deployment),
        ("angle trend", angle_trend),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {name}: {tag} ({detail})", i + 1);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
