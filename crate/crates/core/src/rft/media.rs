use serde::{Deserialize, Serialize};

use super::table::{StressNode, StressTable};
use super::{wall_gamma, TIP_BETA, TIP_GAMMA, WALL_BETA};
use crate::error::{Error, Result};

pub const MEDIA_SCHEMA: u32 = 1;

/// Calibrated stress response of one granular medium.
#[derive(Debug, Clone, PartialEq)]
pub struct MediaProfile {
    pub name: String,
    table: StressTable,
    zeta: Option<f64>,
    rho: f64,
    phi: f64,
    pub notes: String,
}

/// On-disk form of a [`MediaProfile`].
///
/// `zeta` must be present; `null` marks an uncalibrated profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediaDocument {
    pub schema: u32,
    pub name: String,
    #[serde(deserialize_with = "Option::deserialize")]
    pub zeta: Option<f64>,
    pub rho: f64,
    pub phi: f64,
    #[serde(default)]
    pub notes: String,
    pub grid: Vec<StressNode>,
}

impl MediaProfile {
    pub fn new(
        name: impl Into<String>,
        table: StressTable,
        zeta: Option<f64>,
        rho: f64,
        phi: f64,
    ) -> Result<Self> {
        let profile = Self {
            name: name.into(),
            table,
            zeta,
            rho,
            phi,
            notes: String::new(),
        };
        profile.validate()?;
        Ok(profile)
    }

    fn validate(&self) -> Result<()> {
        if let Some(z) = self.zeta {
            if !(z.is_finite() && z > 0.0) {
                return Err(Error::invalid(
                    "media profile",
                    format!("zeta = {z} must be > 0"),
                ));
            }
        }
        if !(self.rho.is_finite() && self.rho >= 1.0) {
            return Err(Error::invalid(
                "media profile",
                format!("rho = {} must be >= 1", self.rho),
            ));
        }
        if !(self.phi > 0.0 && self.phi < 1.0) {
            return Err(Error::invalid(
                "media profile",
                format!("phi = {} must be in (0, 1)", self.phi),
            ));
        }
        Ok(())
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_zeta(mut self, zeta: f64) -> Result<Self> {
        self.zeta = Some(zeta);
        self.validate()?;
        Ok(self)
    }

    pub fn with_rho(mut self, rho: f64) -> Result<Self> {
        self.rho = rho;
        self.validate()?;
        Ok(self)
    }

    pub fn table(&self) -> &StressTable {
        &self.table
    }

    pub fn zeta_opt(&self) -> Option<f64> {
        self.zeta
    }

    /// Scale factor; errors if the profile has not been calibrated.
    pub fn zeta(&self) -> Result<f64> {
        self.zeta
            .ok_or_else(|| Error::Uncalibrated(self.name.clone()))
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Interpolated `(α_z, α_x)` at `(β, γ)` multiplied by `ζ`, N/m³.
    pub fn elemental_stress(&self, beta: f64, gamma: f64) -> Result<(f64, f64)> {
        let zeta = self.zeta()?;
        let (az, ax) = self.table.lookup(beta, gamma)?;
        Ok((zeta * az, zeta * ax))
    }

    /// Tip slope `k_t`: vertical stress per unit depth on the advancing tip disc.
    pub fn tip_slope(&self) -> Result<f64> {
        Ok(self.elemental_stress(TIP_BETA, TIP_GAMMA)?.0)
    }

    /// Side slope `k_s(θ)`: wall stress per unit depth for a vertical pull on
    /// a root tilted by `tilt`.
    pub fn side_slope(&self, tilt: f64) -> Result<f64> {
        Ok(self.elemental_stress(WALL_BETA, wall_gamma(tilt))?.0)
    }

    /// `k_t / k_s` of the table (independent of `ζ`).
    pub fn tip_side_ratio(&self) -> Result<f64> {
        let (kt, _) = self.table.lookup(TIP_BETA, TIP_GAMMA)?;
        let (ks, _) = self.table.lookup(WALL_BETA, wall_gamma(0.0))?;
        if ks <= 0.0 {
            return Err(Error::invalid("media profile", "wall-shear stress is zero"));
        }
        Ok(kt / ks)
    }

    /// Rescales the wall half of the table (`γ < 0`) so that `k_t / k_s`
    /// equals `ratio`. The tip half is untouched.
    pub fn with_tip_side_ratio(mut self, ratio: f64) -> Result<Self> {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(Error::invalid(
                "tip/side ratio",
                format!("{ratio} must be > 0"),
            ));
        }
        let factor = self.tip_side_ratio()? / ratio;
        self.table.scale_where(|gamma_deg| gamma_deg < 0.0, factor);
        Ok(self)
    }

    pub fn from_document(doc: MediaDocument) -> Result<Self> {
        if doc.schema != MEDIA_SCHEMA {
            return Err(Error::invalid(
                "media profile",
                format!("unsupported schema {}, expected {MEDIA_SCHEMA}", doc.schema),
            ));
        }
        let table = StressTable::from_nodes(&doc.grid)?;
        Ok(Self::new(doc.name, table, doc.zeta, doc.rho, doc.phi)?.with_notes(doc.notes))
    }

    pub fn to_document(&self) -> MediaDocument {
        MediaDocument {
            schema: MEDIA_SCHEMA,
            name: self.name.clone(),
            zeta: self.zeta,
            rho: self.rho,
            phi: self.phi,
            notes: self.notes.clone(),
            grid: self.table.nodes().collect(),
        }
    }
}
