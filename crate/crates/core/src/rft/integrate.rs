use super::mesh::{SurfaceElement, Travel};
use super::MediaProfile;
use crate::error::{Error, Result};

/// `Σ ζ α_z(β, γ) · z · dA` over the elements, as a vertical force with
/// positive up: downward travel gives a non-negative result, upward travel a
/// non-positive one.
pub fn integrate_vertical_force(elements: &[SurfaceElement], media: &MediaProfile) -> Result<f64> {
    if elements.is_empty() {
        return Err(Error::invalid("element list", "empty"));
    }
    let mut total = 0.0;
    for e in elements {
        if !(e.depth >= 0.0) {
            return Err(Error::invalid(
                "surface element",
                format!("depth {} < 0", e.depth),
            ));
        }
        if !(e.area > 0.0) {
            return Err(Error::invalid(
                "surface element",
                format!("area {} <= 0", e.area),
            ));
        }
        let (az, _) = media.elemental_stress(e.beta, e.gamma)?;
        let f = az * e.depth * e.area;
        total += match e.travel {
            Travel::Downward => f,
            Travel::Upward => -f,
        };
    }
    Ok(total)
}
