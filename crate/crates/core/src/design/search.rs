use std::cmp::Ordering;
use std::f64::consts::PI;

use rayon::prelude::*;

use super::config::{evaluate_config, AnchorConfig, ConfigMetrics};
use crate::anchor::{max_net_force, peak_extraction_force, AnchorGeometry};
use crate::error::{Error, Result};
use crate::rft::{MediaProfile, Skin};

/// Finite design grid. Each stage holds identical roots drawn from the
/// cross product of diameters, lengths, tilts and skins.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConstraints {
    pub max_roots: usize,
    pub max_stages: usize,
    /// m
    pub diameters: Vec<f64>,
    /// m
    pub lengths: Vec<f64>,
    /// rad
    pub tilts: Vec<f64>,
    pub skins: Vec<Skin>,
    /// N
    pub device_weight: f64,
    /// Optional cap on the summed root cross-section, m².
    pub max_cross_section: Option<f64>,
}

impl Default for SearchConstraints {
    fn default() -> Self {
        Self {
            max_roots: 6,
            max_stages: 3,
            diameters: vec![0.007, 0.010, 0.013, 0.016, 0.020],
            lengths: vec![0.15, 0.30, 0.45],
            tilts: vec![0.0, 15f64.to_radians()],
            skins: vec![Skin::Hairless, Skin::Hairy { hair_factor: 1.4 }],
            device_weight: 2.9,
            max_cross_section: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OptimizeOutcome {
    Best {
        config: AnchorConfig,
        metrics: ConfigMetrics,
    },
    /// Nothing on the grid is feasible; carries the candidate with the
    /// largest worst-stage margin.
    NoFeasibleDesign {
        closest: AnchorConfig,
        metrics: ConfigMetrics,
    },
}

impl OptimizeOutcome {
    pub fn config(&self) -> &AnchorConfig {
        match self {
            OptimizeOutcome::Best { config, .. } => config,
            OptimizeOutcome::NoFeasibleDesign { closest, .. } => closest,
        }
    }

    pub fn metrics(&self) -> &ConfigMetrics {
        match self {
            OptimizeOutcome::Best { metrics, .. } => metrics,
            OptimizeOutcome::NoFeasibleDesign { metrics, .. } => metrics,
        }
    }
}

struct RootType {
    geom: AnchorGeometry,
    need: f64,
    hold: f64,
    area: f64,
}

#[derive(Debug, Clone, PartialEq)]
struct Candidate {
    // (type index, count) per stage
    stages: Vec<(usize, usize)>,
    hold: f64,
    area: f64,
    roots: usize,
    margin: f64,
    feasible: bool,
}

impl Candidate {
    fn encoding(&self) -> (usize, &[(usize, usize)]) {
        (self.stages.len(), &self.stages)
    }

    /// Ascending means better: more anchoring, fewer roots, less
    /// cross-section, then the encoding.
    fn rank_feasible(&self, other: &Self) -> Ordering {
        other
            .hold
            .total_cmp(&self.hold)
            .then(self.roots.cmp(&other.roots))
            .then(self.area.total_cmp(&other.area))
            .then_with(|| self.encoding().cmp(&other.encoding()))
    }

    fn rank_infeasible(&self, other: &Self) -> Ordering {
        other
            .margin
            .total_cmp(&self.margin)
            .then_with(|| self.rank_feasible(other))
    }
}

#[derive(Default)]
struct Best {
    feasible: Option<Candidate>,
    infeasible: Option<Candidate>,
}

impl Best {
    fn offer(&mut self, c: Candidate) {
        let (slot, rank): (_, fn(&Candidate, &Candidate) -> Ordering) = if c.feasible {
            (&mut self.feasible, Candidate::rank_feasible)
        } else {
            (&mut self.infeasible, Candidate::rank_infeasible)
        };
        match slot {
            Some(cur) if rank(&c, cur) != Ordering::Less => {}
            _ => *slot = Some(c),
        }
    }

    fn merge(mut self, other: Best) -> Best {
        if let Some(c) = other.feasible {
            self.offer(c);
        }
        if let Some(c) = other.infeasible {
            self.offer(c);
        }
        self
    }
}

struct Search<'a> {
    types: &'a [RootType],
    constraints: &'a SearchConstraints,
}

impl Search<'_> {
    fn descend(
        &self,
        stages: &mut Vec<(usize, usize)>,
        held: f64,
        margin: f64,
        roots: usize,
        best: &mut Best,
    ) {
        let w = self.constraints.device_weight;
        for t in 0..self.types.len() {
            for count in 1..=self.constraints.max_roots - roots {
                let ty = &self.types[t];
                let stage_margin = w + held - count as f64 * ty.need;
                stages.push((t, count));
                let margin = margin.min(stage_margin);
                self.finish(stages, margin, best);
                if stages.len() < self.constraints.max_stages
                    && roots + count < self.constraints.max_roots
                {
                    self.descend(
                        stages,
                        held + count as f64 * ty.hold,
                        margin,
                        roots + count,
                        best,
                    );
                }
                stages.pop();
            }
        }
    }

    fn finish(&self, stages: &[(usize, usize)], margin: f64, best: &mut Best) {
        // aggregate per type so equal multisets give bit-equal totals
        let mut per_type: Vec<(usize, usize)> = stages.to_vec();
        per_type.sort_unstable();
        let mut merged: Vec<(usize, usize)> = Vec::with_capacity(per_type.len());
        for (t, c) in per_type {
            match merged.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => merged.push((t, c)),
            }
        }
        let hold: f64 = merged
            .iter()
            .map(|&(t, c)| c as f64 * self.types[t].hold)
            .sum();
        let area: f64 = merged
            .iter()
            .map(|&(t, c)| c as f64 * self.types[t].area)
            .sum();
        if let Some(cap) = self.constraints.max_cross_section {
            if area > cap * (1.0 + 1e-12) {
                return;
            }
        }
        best.offer(Candidate {
            stages: stages.to_vec(),
            hold,
            area,
            roots: merged.iter().map(|&(_, c)| c).sum(),
            margin,
            feasible: margin >= 0.0,
        });
    }
}

/// Exhaustive search of the staged design grid for the largest
/// anchoring-to-weight ratio among feasible designs.
///
/// Ties go to fewer roots, then smaller total cross-section, then the
/// smaller `(stage count, [(root type, count)…])` encoding, where root types
/// are numbered in grid order (diameter, length, tilt, skin). The result is
/// independent of thread scheduling.
pub fn optimize_config(
    constraints: &SearchConstraints,
    media: &MediaProfile,
) -> Result<OptimizeOutcome> {
    media.zeta()?;
    let c = constraints;
    if c.max_roots == 0 || c.max_stages == 0 {
        return Err(Error::invalid(
            "search constraints",
            "max_roots and max_stages must be >= 1",
        ));
    }
    if c.diameters.is_empty() || c.lengths.is_empty() || c.tilts.is_empty() || c.skins.is_empty() {
        return Err(Error::invalid(
            "search constraints",
            "every grid axis needs at least one value",
        ));
    }
    if !(c.device_weight.is_finite() && c.device_weight >= 0.0) {
        return Err(Error::invalid(
            "search constraints",
            format!("device weight {} must be >= 0", c.device_weight),
        ));
    }
    if c.tilts
        .iter()
        .any(|t| *t > super::MAX_ROOT_TILT_DEG.to_radians() + 1e-12)
    {
        return Err(Error::invalid(
            "search constraints",
            "tilts must stay within 60°",
        ));
    }

    let mut types = Vec::new();
    for &d in &c.diameters {
        for &l in &c.lengths {
            for &tilt in &c.tilts {
                for &skin in &c.skins {
                    let geom = AnchorGeometry::tip_extender(0.5 * d, l)
                        .with_tilt(tilt)
                        .with_skin(skin);
                    geom.validate()?;
                    types.push(RootType {
                        need: max_net_force(&geom, media)?.1,
                        hold: peak_extraction_force(&geom, media)?,
                        area: PI * geom.radius * geom.radius,
                        geom,
                    });
                }
            }
        }
    }

    let search = Search {
        types: &types,
        constraints: c,
    };
    let first: Vec<(usize, usize)> = (0..types.len())
        .flat_map(|t| (1..=c.max_roots).map(move |n| (t, n)))
        .collect();
    let best = first
        .par_iter()
        .map(|&(t, count)| {
            let mut best = Best::default();
            let mut stages = vec![(t, count)];
            let margin = c.device_weight - count as f64 * types[t].need;
            search.finish(&stages, margin, &mut best);
            if c.max_stages > 1 && count < c.max_roots {
                search.descend(
                    &mut stages,
                    count as f64 * types[t].hold,
                    margin,
                    count,
                    &mut best,
                );
            }
            best
        })
        .reduce(Best::default, Best::merge);

    let build = |cand: &Candidate| {
        let mut roots = Vec::new();
        let mut stages = Vec::new();
        for &(t, count) in &cand.stages {
            let start = roots.len();
            roots.extend(std::iter::repeat_n(types[t].geom, count));
            stages.push((start..roots.len()).collect());
        }
        AnchorConfig {
            roots,
            stages,
            device_weight: c.device_weight,
        }
    };
    match (best.feasible, best.infeasible) {
        (Some(cand), _) => {
            let config = build(&cand);
            let metrics = evaluate_config(&config, media)?;
            Ok(OptimizeOutcome::Best { config, metrics })
        }
        (None, Some(cand)) => {
            let closest = build(&cand);
            let metrics = evaluate_config(&closest, media)?;
            Ok(OptimizeOutcome::NoFeasibleDesign { closest, metrics })
        }
        (None, None) => Err(Error::invalid(
            "search constraints",
            "grid admits no candidate",
        )),
    }
}
