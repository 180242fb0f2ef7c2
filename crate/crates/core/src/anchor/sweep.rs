use super::forces::{constrained_insertion_force, peak_extraction_force};
use crate::error::{Error, Result};
use crate::rft::{AnchorGeometry, MediaProfile};

/// Upper end of the tilt range the pair model is used on.
pub const MAX_PAIR_TILT_DEG: f64 = 60.0;

/// Vertical forces on an X-shaped pair of identical roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairForces {
    pub tilt: f64,
    pub insertion: f64,
    pub extraction: f64,
}

impl PairForces {
    pub fn ratio(&self) -> Option<f64> {
        (self.insertion > 0.0).then(|| self.extraction / self.insertion)
    }
}

/// Both roots of the pair are `geom` tilted by `tilt` and grown to their full
/// length; forces are the summed vertical components.
pub fn angled_pair_forces(
    tilt: f64,
    geom: &AnchorGeometry,
    media: &MediaProfile,
) -> Result<PairForces> {
    let max = MAX_PAIR_TILT_DEG.to_radians();
    if !(tilt >= 0.0 && tilt <= max + 1e-12) {
        return Err(Error::AngleOutOfRange {
            name: "tilt",
            value: tilt,
            min: 0.0,
            max,
        });
    }
    let root = geom.with_tilt(tilt.min(max));
    let depth = root.full_depth();
    Ok(PairForces {
        tilt,
        insertion: 2.0 * constrained_insertion_force(depth, &root, media)?,
        extraction: 2.0 * peak_extraction_force(&root, media)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiameterRow {
    pub diameter: f64,
    pub insertion: f64,
    pub extraction: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiameterSweep {
    pub depth: f64,
    pub rows: Vec<DiameterRow>,
    pub insertion_exponent: f64,
    pub extraction_exponent: f64,
    pub ratio_exponent: f64,
}

/// Constrained insertion and peak extraction of vertical hairless tip
/// extenders grown to `depth`, with log-log power-law exponents.
pub fn diameter_sweep(
    diameters: &[f64],
    depth: f64,
    media: &MediaProfile,
) -> Result<DiameterSweep> {
    if let Some(d) = diameters.iter().find(|d| !(d.is_finite() && **d > 0.0)) {
        return Err(Error::invalid(
            "diameter sweep",
            format!("diameter {d} must be > 0"),
        ));
    }
    let mut distinct = diameters.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(Error::invalid(
            "diameter sweep",
            format!("{} distinct diameters, need at least 3", distinct.len()),
        ));
    }
    if !(depth.is_finite() && depth > 0.0) {
        return Err(Error::invalid(
            "diameter sweep",
            format!("depth {depth} must be > 0"),
        ));
    }
    let rows = diameters
        .iter()
        .map(|&d| {
            let g = AnchorGeometry::tip_extender(0.5 * d, depth);
            let insertion = constrained_insertion_force(depth, &g, media)?;
            let extraction = peak_extraction_force(&g, media)?;
            Ok(DiameterRow {
                diameter: d,
                insertion,
                extraction,
                ratio: extraction / insertion,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ds: Vec<f64> = rows.iter().map(|r| r.diameter).collect();
    let col = |f: fn(&DiameterRow) -> f64| rows.iter().map(f).collect::<Vec<_>>();
    Ok(DiameterSweep {
        depth,
        insertion_exponent: loglog_slope(&ds, &col(|r| r.insertion))?,
        extraction_exponent: loglog_slope(&ds, &col(|r| r.extraction))?,
        ratio_exponent: loglog_slope(&ds, &col(|r| r.ratio))?,
        rows,
    })
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::DegenerateFit(
            "need at least two paired points".into(),
        ));
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0)) {
        return Err(Error::DegenerateFit(
            "log-log fit needs positive values".into(),
        ));
    }
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all x values equal".into()));
    }
    Ok(sxy / sxx)
}
