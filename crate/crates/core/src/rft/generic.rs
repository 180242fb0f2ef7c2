//! Generic dry-sand stress table from the first-order Fourier fit of
//! granular plate-intrusion stresses.
//!
//! `α_z(β, γ) = A00 + A10 cos 2β + B11 sin(2β + γ) + B01 sin γ + B-11 sin(-2β + γ)`
//! `α_x(β, γ) = C11 cos(2β + γ) + C01 cos γ + C-11 cos(-2β + γ) + D10 sin 2β`
//!
//! with coefficients in N/cm³. In that fit `γ = +π/2` is downward travel and
//! the sign of `α_z` gives the direction of the stress. The table shipped here
//! keeps `|α_z|` because the direction is carried by the element travel sense.

use super::media::MediaProfile;
use super::table::StressTable;
use crate::error::Result;

/// Fourier coefficients of the generic fit, N/cm³.
#[derive(Debug, Clone, Copy)]
pub struct FourierCoefficients {
    pub a00: f64,
    pub a10: f64,
    pub b11: f64,
    pub b01: f64,
    pub bm11: f64,
    pub c11: f64,
    pub c01: f64,
    pub cm11: f64,
    pub d10: f64,
}

pub const GENERIC_SAND: FourierCoefficients = FourierCoefficients {
    a00: 0.206,
    a10: 0.169,
    b11: 0.212,
    b01: 0.358,
    bm11: 0.055,
    c11: -0.124,
    c01: 0.253,
    cm11: 0.007,
    d10: 0.088,
};

const N_PER_CM3: f64 = 1e6;

impl FourierCoefficients {
    /// Signed `(α_z, α_x)` in N/m³.
    pub fn evaluate(&self, beta: f64, gamma: f64) -> (f64, f64) {
        let az = self.a00
            + self.a10 * (2.0 * beta).cos()
            + self.b11 * (2.0 * beta + gamma).sin()
            + self.b01 * gamma.sin()
            + self.bm11 * (-2.0 * beta + gamma).sin();
        let ax = self.c11 * (2.0 * beta + gamma).cos()
            + self.c01 * gamma.cos()
            + self.cm11 * (-2.0 * beta + gamma).cos()
            + self.d10 * (2.0 * beta).sin();
        (az * N_PER_CM3, ax * N_PER_CM3)
    }
}

/// The generic table sampled every `step_deg` degrees.
pub fn generic_sand_table(step_deg: f64) -> Result<StressTable> {
    StressTable::from_fn(step_deg, |b, g| {
        let (az, ax) = GENERIC_SAND.evaluate(b, g);
        (az.abs(), ax)
    })
}

/// An uncalibrated profile on the 5° generic table with `ρ = 2.5`, `φ = 0.58`.
pub fn generic_sand_profile() -> MediaProfile {
    MediaProfile::new(
        "generic dry sand",
        generic_sand_table(5.0).expect("generic table is well formed"),
        None,
        2.5,
        0.58,
    )
    .expect("generic profile is valid")
    .with_notes("first-order Fourier generic coefficients; zeta must be calibrated")
}
