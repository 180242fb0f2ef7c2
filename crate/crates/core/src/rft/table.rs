use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coarsest allowed spacing between neighbouring grid nodes.
pub const MAX_NODE_SPACING_DEG: f64 = 5.0;

const EDGE_DEG: f64 = 90.0;
const EPS_DEG: f64 = 1e-9;

/// One grid node as stored in a media file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressNode {
    pub beta_deg: f64,
    pub gamma_deg: f64,
    /// Vertical stress per unit depth, N/m³.
    pub alpha_z: f64,
    /// Horizontal stress per unit depth, N/m³. Stored, not used by the force laws.
    pub alpha_x: f64,
}

/// Rectangular `(β, γ)` grid of unit-depth stresses covering
/// `[-90°, 90°] × [-90°, 90°]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StressTable {
    betas: Vec<f64>,
    gammas: Vec<f64>,
    // row-major: index = i_beta * gammas.len() + i_gamma
    values: Vec<(f64, f64)>,
}

impl StressTable {
    /// Builds a table from nodes in any order. The nodes must form a complete
    /// cross product of their distinct β and γ values.
    pub fn from_nodes(nodes: &[StressNode]) -> Result<Self> {
        for n in nodes {
            if ![n.beta_deg, n.gamma_deg, n.alpha_z, n.alpha_x]
                .iter()
                .all(|v| v.is_finite())
            {
                return Err(Error::invalid(
                    "stress table",
                    format!("non-finite node {n:?}"),
                ));
            }
            if n.alpha_z < 0.0 {
                return Err(Error::invalid(
                    "stress table",
                    format!(
                        "alpha_z = {} < 0 at beta {}°, gamma {}°",
                        n.alpha_z, n.beta_deg, n.gamma_deg
                    ),
                ));
            }
        }
        let betas = distinct_axis(nodes.iter().map(|n| n.beta_deg), "beta")?;
        let gammas = distinct_axis(nodes.iter().map(|n| n.gamma_deg), "gamma")?;
        let ng = gammas.len();
        let mut values = vec![None; betas.len() * ng];
        for n in nodes {
            let ib = position(&betas, n.beta_deg);
            let ig = position(&gammas, n.gamma_deg);
            let slot = &mut values[ib * ng + ig];
            if slot.is_some() {
                return Err(Error::invalid(
                    "stress table",
                    format!(
                        "duplicate node at beta {}°, gamma {}°",
                        n.beta_deg, n.gamma_deg
                    ),
                ));
            }
            *slot = Some((n.alpha_z, n.alpha_x));
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::invalid(
                        "stress table",
                        format!(
                            "missing node at beta {}°, gamma {}°",
                            betas[i / ng],
                            gammas[i % ng]
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            betas,
            gammas,
            values,
        })
    }

    /// Samples `f(β, γ)` (radians in, stresses out) on a uniform grid.
    pub fn from_fn(step_deg: f64, f: impl Fn(f64, f64) -> (f64, f64)) -> Result<Self> {
        if !(step_deg > 0.0 && step_deg <= MAX_NODE_SPACING_DEG) {
            return Err(Error::invalid(
                "stress table",
                format!("step {step_deg}° out of (0, 5]"),
            ));
        }
        let n = (2.0 * EDGE_DEG / step_deg).round() as usize;
        let axis: Vec<f64> = (0..=n)
            .map(|i| -EDGE_DEG + 2.0 * EDGE_DEG * i as f64 / n as f64)
            .collect();
        let mut nodes = Vec::with_capacity(axis.len() * axis.len());
        for &b in &axis {
            for &g in &axis {
                let (alpha_z, alpha_x) = f(b.to_radians(), g.to_radians());
                nodes.push(StressNode {
                    beta_deg: b,
                    gamma_deg: g,
                    alpha_z,
                    alpha_x,
                });
            }
        }
        Self::from_nodes(&nodes)
    }

    pub fn nodes(&self) -> impl Iterator<Item = StressNode> + '_ {
        let ng = self.gammas.len();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &(alpha_z, alpha_x))| StressNode {
                beta_deg: self.betas[i / ng],
                gamma_deg: self.gammas[i % ng],
                alpha_z,
                alpha_x,
            })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Bilinear interpolation of the unscaled stresses at `(β, γ)` in radians.
    pub fn lookup(&self, beta: f64, gamma: f64) -> Result<(f64, f64)> {
        let b = to_axis_deg("beta", beta)?;
        let g = to_axis_deg("gamma", gamma)?;
        let (ib, tb) = bracket(&self.betas, b);
        let (ig, tg) = bracket(&self.gammas, g);
        let ng = self.gammas.len();
        let at = |i: usize, j: usize| self.values[i * ng + j];
        let (z00, x00) = at(ib, ig);
        let (z01, x01) = at(ib, ig + 1);
        let (z10, x10) = at(ib + 1, ig);
        let (z11, x11) = at(ib + 1, ig + 1);
        let mix = |v00: f64, v01: f64, v10: f64, v11: f64| {
            let lo = v00 + (v01 - v00) * tg;
            let hi = v10 + (v11 - v10) * tg;
            lo + (hi - lo) * tb
        };
        Ok((mix(z00, z01, z10, z11), mix(x00, x01, x10, x11)))
    }

    /// Multiplies every node whose γ satisfies `select` by `factor`.
    pub(crate) fn scale_where(&mut self, select: impl Fn(f64) -> bool, factor: f64) {
        let ng = self.gammas.len();
        for (i, v) in self.values.iter_mut().enumerate() {
            if select(self.gammas[i % ng]) {
                v.0 *= factor;
                v.1 *= factor;
            }
        }
    }
}

fn distinct_axis(values: impl Iterator<Item = f64>, name: &str) -> Result<Vec<f64>> {
    let mut axis: Vec<f64> = values.collect();
    axis.sort_by(f64::total_cmp);
    axis.dedup();
    let (Some(&first), Some(&last)) = (axis.first(), axis.last()) else {
        return Err(Error::invalid("stress table", "no grid nodes"));
    };
    if (first + EDGE_DEG).abs() > EPS_DEG || (last - EDGE_DEG).abs() > EPS_DEG {
        return Err(Error::invalid(
            "stress table",
            format!("{name} nodes span [{first}°, {last}°], expected [-90°, 90°]"),
        ));
    }
    if let Some(w) = axis
        .windows(2)
        .find(|w| w[1] - w[0] > MAX_NODE_SPACING_DEG + EPS_DEG)
    {
        return Err(Error::invalid(
            "stress table",
            format!(
                "{name} gap between {}° and {}° is coarser than 5°",
                w[0], w[1]
            ),
        ));
    }
    Ok(axis)
}

fn position(axis: &[f64], v: f64) -> usize {
    axis.partition_point(|&a| a < v)
}

fn to_axis_deg(name: &'static str, rad: f64) -> Result<f64> {
    let deg = rad.to_degrees();
    if !(-EDGE_DEG - EPS_DEG..=EDGE_DEG + EPS_DEG).contains(&deg) {
        return Err(Error::AngleOutOfRange {
            name,
            value: rad,
            min: -std::f64::consts::FRAC_PI_2,
            max: std::f64::consts::FRAC_PI_2,
        });
    }
    Ok(deg.clamp(-EDGE_DEG, EDGE_DEG))
}

/// Index of the cell containing `v` and the fractional offset inside it.
fn bracket(axis: &[f64], v: f64) -> (usize, f64) {
    let last_cell = axis.len() - 2;
    let i = axis
        .partition_point(|&a| a <= v)
        .saturating_sub(1)
        .min(last_cell);
    let t = (v - axis[i]) / (axis[i + 1] - axis[i]);
    (i, t)
}
