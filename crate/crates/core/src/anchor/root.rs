use super::forces::net_self_anchor_force;
use super::require_mode;
use crate::error::{Error, Result};
use crate::rft::{AnchorGeometry, InsertionMode, MediaProfile};

/// Absolute tolerance of [`critical_depth`], m.
pub const CRITICAL_DEPTH_TOL: f64 = 1e-5;

/// Bisection on `[lo, hi]` where `f(lo) > 0 >= f(hi)`. Returns the midpoint of
/// the final bracket once it is narrower than `tol`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) || !(hi > lo) {
        return Err(Error::invalid(
            "bracket",
            format!("[{lo}, {hi}] with tol {tol}"),
        ));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid)? <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Smallest depth at which a free tip extender needs no reaction force, or
/// `None` when the net force stays positive out to ten root lengths.
///
/// The bracket starts at a thousandth of the root length and doubles until
/// the net force changes sign; bisection then narrows it to
/// [`CRITICAL_DEPTH_TOL`].
pub fn critical_depth(geom: &AnchorGeometry, media: &MediaProfile) -> Result<Option<f64>> {
    require_mode(geom, InsertionMode::TipExtender, "critical_depth")?;
    geom.validate()?;
    let limit = 10.0 * geom.length;
    let net = |z: f64| net_self_anchor_force(z, geom, media);

    let mut lo = 0.0;
    let mut hi = (1e-3 * geom.length).min(limit);
    while net(hi)? > 0.0 {
        if hi >= limit {
            return Ok(None);
        }
        lo = hi;
        hi = (2.0 * hi).min(limit);
    }
    bisect(net, lo, hi, CRITICAL_DEPTH_TOL).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rft::{generic_sand_profile, StressTable};

    fn sand(ratio: f64) -> MediaProfile {
        generic_sand_profile()
            .with_tip_side_ratio(ratio)
            .unwrap()
            .with_zeta(0.25)
            .unwrap()
    }

    #[test]
    fn matches_closed_form_crossover() {
        // h* = (k_t / k_s) · r / κ
        let m = sand(16.0);
        let g = AnchorGeometry::tip_extender(0.0075, 0.3);
        let h = critical_depth(&g, &m).unwrap().unwrap();
        assert!((h - 0.12).abs() < 1e-4, "{h}");
        let hairy = critical_depth(&g.hairy(1.4), &m).unwrap().unwrap();
        assert!((hairy - 0.12 / 1.4).abs() < CRITICAL_DEPTH_TOL);
    }

    #[test]
    fn proportional_to_radius() {
        let m = sand(16.0);
        let g = AnchorGeometry::tip_extender(0.0075, 0.3);
        let h1 = critical_depth(&g, &m).unwrap().unwrap();
        let h2 = critical_depth(&g.with_radius(0.015), &m).unwrap().unwrap();
        assert!((h2 - 2.0 * h1).abs() < 2.0 * CRITICAL_DEPTH_TOL);
    }

    #[test]
    fn none_without_side_resistance() {
        let t = StressTable::from_fn(5.0, |_, g| (if g > 0.0 { 1e6 } else { 0.0 }, 0.0)).unwrap();
        let m = MediaProfile::new("tip only", t, Some(1.0), 1.0, 0.5).unwrap();
        let g = AnchorGeometry::tip_extender(0.0075, 0.3);
        assert_eq!(critical_depth(&g, &m).unwrap(), None);
    }

    #[test]
    fn none_when_crossover_is_beyond_ten_lengths() {
        let m = sand(16.0);
        let g = AnchorGeometry::tip_extender(0.0075, 0.01);
        assert_eq!(critical_depth(&g, &m).unwrap(), None);
    }

    #[test]
    fn rigid_intruders_are_rejected() {
        let m = sand(16.0);
        assert!(critical_depth(&AnchorGeometry::rigid_intruder(0.0075, 0.3), &m).is_err());
    }
}
