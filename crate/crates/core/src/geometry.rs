//! Geometric front ends: point sets, strips and wedge apices are converted
//! into the purely combinatorial instances the algorithms consume.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::PermutationInstance;

/// A finite point set in `d` dimensions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    pub d: usize,
    pub points: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(d: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        let ps = PointSet { d, points };
        ps.validate()?;
        Ok(ps)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::invalid("point set needs dimension >= 1"));
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != self.d {
                return Err(Error::invalid(format!(
                    "point {i} has arity {}, expected {}",
                    p.len(),
                    self.d
                )));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFiniteCoordinate { point: i });
            }
        }
        Ok(())
    }
}

/// One axis-aligned strip: all points whose `axis`-th coordinate lies in
/// `[lo, hi]`. Strips are closed; boundary points count as covered.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strip {
    pub axis: usize,
    pub lo: f64,
    pub hi: f64,
}

/// A set of axis-aligned strips in `d` dimensions, indexed by position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StripSet {
    pub d: usize,
    pub strips: Vec<Strip>,
}

impl StripSet {
    pub fn new(d: usize, strips: Vec<Strip>) -> Result<Self> {
        let ss = StripSet { d, strips };
        ss.validate()?;
        Ok(ss)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::invalid("strip set needs dimension >= 1"));
        }
        for (i, s) in self.strips.iter().enumerate() {
            if s.axis >= self.d {
                return Err(Error::invalid(format!(
                    "strip {i} lies on axis {} in dimension {}",
                    s.axis, self.d
                )));
            }
            if !(s.lo < s.hi) || !s.lo.is_finite() || !s.hi.is_finite() {
                return Err(Error::invalid(format!(
                    "strip {i} has invalid bounds [{}, {}]",
                    s.lo, s.hi
                )));
            }
        }
        Ok(())
    }

    /// Does strip `i` contain the point?
    pub fn contains(&self, i: usize, point: &[f64]) -> bool {
        let s = &self.strips[i];
        let x = point[s.axis];
        s.lo <= x && x <= s.hi
    }
}

/// Converts a point set into its per-axis orderings: for each axis the items
/// sorted by that coordinate, ties broken by item id.
pub fn points_to_instance(ps: &PointSet) -> Result<PermutationInstance> {
    ps.validate()?;
    if ps.points.is_empty() {
        return Err(Error::invalid("cannot build an instance from zero points"));
    }
    let n = ps.points.len();
    let perms = (0..ps.d)
        .map(|axis| {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&a, &b| {
                ps.points[a][axis]
                    .partial_cmp(&ps.points[b][axis])
                    .expect("coordinates validated finite")
                    .then(a.cmp(&b))
            });
            idx
        })
        .collect();
    PermutationInstance::new(perms, false)
}

/// Converts a planar point set and a list of wedge apices into circular
/// permutations: each apex orders the points counterclockwise by angle from
/// the positive x-direction, ties broken by distance then id.
pub fn wedges_to_instance(ps: &PointSet, apices: &[Vec<f64>]) -> Result<PermutationInstance> {
    ps.validate()?;
    if ps.d != 2 {
        return Err(Error::invalid("wedge instances are planar (d = 2)"));
    }
    if ps.points.is_empty() {
        return Err(Error::invalid("cannot build an instance from zero points"));
    }
    if apices.is_empty() {
        return Err(Error::invalid("need at least one apex"));
    }
    for (ai, apex) in apices.iter().enumerate() {
        if apex.len() != 2 || apex.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid(format!("apex {ai} is not a finite 2-d point")));
        }
    }
    let n = ps.points.len();
    let mut perms = Vec::with_capacity(apices.len());
    for (ai, apex) in apices.iter().enumerate() {
        let mut keyed: Vec<(f64, f64, usize)> = Vec::with_capacity(n);
        for (i, p) in ps.points.iter().enumerate() {
            let dx = p[0] - apex[0];
            let dy = p[1] - apex[1];
            if dx == 0.0 && dy == 0.0 {
                return Err(Error::PointAtApex { point: i, apex: ai });
            }
            let mut angle = dy.atan2(dx); // (-pi, pi], ccw from +x
            if angle < 0.0 {
                angle += 2.0 * std::f64::consts::PI;
            }
            keyed.push((angle, dx * dx + dy * dy, i));
        }
        keyed.sort_by(|a, b| {
            a.0.partial_cmp(&b.0)
                .unwrap()
                .then(a.1.partial_cmp(&b.1).unwrap())
                .then(a.2.cmp(&b.2))
        });
        perms.push(keyed.into_iter().map(|(_, _, i)| i).collect());
    }
    PermutationInstance::new(perms, true)
}

/// Partitions a strip set by axis, preserving the original strip ids.
/// Returns `d` lists of `(lo, hi, strip id)`.
pub fn strips_to_axis_intervals(ss: &StripSet) -> Result<Vec<Vec<(f64, f64, usize)>>> {
    ss.validate()?;
    let mut out: Vec<Vec<(f64, f64, usize)>> = vec![Vec::new(); ss.d];
    for (id, s) in ss.strips.iter().enumerate() {
        out[s.axis].push((s.lo, s.hi, id));
    }
    Ok(out)
}
