use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Surface finish of a root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Skin {
    #[default]
    Hairless,
    /// Hair-like protrusions multiply the static side anchoring stress by
    /// `hair_factor` (κ ≥ 1). Insertion is unaffected.
    Hairy { hair_factor: f64 },
}

impl Skin {
    pub fn hair_factor(&self) -> f64 {
        match *self {
            Skin::Hairless => 1.0,
            Skin::Hairy { hair_factor } => hair_factor,
        }
    }
}

/// How a root enters the ground.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum InsertionMode {
    /// Everting body: only the tip moves relative to the grains.
    #[default]
    TipExtender,
    /// Whole body is pushed, piling-like.
    RigidIntruder,
}

/// One cylindrical root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnchorGeometry {
    /// m
    pub radius: f64,
    /// Length along the axis when fully deployed, m.
    pub length: f64,
    /// Tilt of the axis from vertical, rad.
    pub tilt: f64,
    pub skin: Skin,
    pub mode: InsertionMode,
}

impl AnchorGeometry {
    /// Vertical hairless tip extender.
    pub fn tip_extender(radius: f64, length: f64) -> Self {
        Self {
            radius,
            length,
            tilt: 0.0,
            skin: Skin::Hairless,
            mode: InsertionMode::TipExtender,
        }
    }

    /// Vertical rigid intruder.
    pub fn rigid_intruder(radius: f64, length: f64) -> Self {
        Self {
            mode: InsertionMode::RigidIntruder,
            ..Self::tip_extender(radius, length)
        }
    }

    pub fn with_tilt(self, tilt: f64) -> Self {
        Self { tilt, ..self }
    }

    pub fn with_skin(self, skin: Skin) -> Self {
        Self { skin, ..self }
    }

    pub fn with_radius(self, radius: f64) -> Self {
        Self { radius, ..self }
    }

    pub fn hairy(self, hair_factor: f64) -> Self {
        self.with_skin(Skin::Hairy { hair_factor })
    }

    pub fn diameter(&self) -> f64 {
        2.0 * self.radius
    }

    /// Vertical depth of the tip when fully deployed.
    pub fn full_depth(&self) -> f64 {
        self.length * self.tilt.cos()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::invalid("anchor geometry", reason));
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return bad(format!("radius {} must be > 0", self.radius));
        }
        if !(self.length.is_finite() && self.length > 0.0) {
            return bad(format!("length {} must be > 0", self.length));
        }
        if !(self.tilt >= 0.0 && self.tilt < FRAC_PI_2) {
            return bad(format!("tilt {} rad must be in [0, π/2)", self.tilt));
        }
        let kappa = self.skin.hair_factor();
        if !(kappa.is_finite() && kappa >= 1.0) {
            return bad(format!("hair factor {kappa} must be >= 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_dimensions() {
        assert!(AnchorGeometry::tip_extender(0.0, 0.1).validate().is_err());
        assert!(AnchorGeometry::tip_extender(0.01, -0.1).validate().is_err());
        assert!(AnchorGeometry::tip_extender(0.01, 0.1)
            .with_tilt(FRAC_PI_2)
            .validate()
            .is_err());
        assert!(AnchorGeometry::tip_extender(0.01, 0.1)
            .hairy(0.8)
            .validate()
            .is_err());
        assert!(AnchorGeometry::tip_extender(0.01, 0.1)
            .hairy(1.4)
            .validate()
            .is_ok());
    }
}
