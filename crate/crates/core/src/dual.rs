//! The dual problem: color intervals and axis-aligned strips so that deep
//! points are polychromatic.
//!
//! The interval sweep colors in decreasing right-endpoint order, so the
//! interval with the leftmost right endpoint is colored last, after
//! everything it can conflict with; forbidding the colors of the k-1
//! already-colored overlapping intervals with the smallest left endpoints
//! gives the strong guarantee that every point of depth j sees min(j, k)
//! distinct colors. Strips are colored per axis with the same sweep.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::StripSet;
use crate::model::Coloring;

/// A closed interval on the line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

/// A finite set of intervals, indexed by position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalSet {
    pub intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        let iv = IntervalSet { intervals };
        iv.validate()?;
        Ok(iv)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, iv) in self.intervals.iter().enumerate() {
            if !(iv.lo < iv.hi) || !iv.lo.is_finite() || !iv.hi.is_finite() {
                return Err(Error::invalid(format!(
                    "interval {i} has invalid bounds [{}, {}]",
                    iv.lo, iv.hi
                )));
            }
        }
        Ok(())
    }
}

/// A point of depth at least the queried threshold that misses a color.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthWitness {
    pub point: Vec<f64>,
    pub depth: usize,
    pub colors: Vec<usize>,
}

/// Outcome of a depth verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthReport {
    pub valid: bool,
    pub witnesses: Vec<DepthWitness>,
}

/// Colors intervals so that every point covered by j of them sees
/// min(j, k) distinct colors; in particular every k-deep point is
/// polychromatic and shallower points see pairwise distinct colors.
pub fn color_intervals(iv: &IntervalSet, k: usize) -> Result<Coloring> {
    iv.validate()?;
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let m = iv.intervals.len();
    // color in decreasing right-endpoint order (ties by id, reversed so the
    // peel order lo-to-hi is exactly undone)
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        iv.intervals[b]
            .hi
            .partial_cmp(&iv.intervals[a].hi)
            .unwrap()
            .then(b.cmp(&a))
    });

    let mut colors = vec![usize::MAX; m];
    let mut colored: Vec<usize> = Vec::with_capacity(m);
    let mut forbidden = vec![false; k];
    for &i in &order {
        let cur = iv.intervals[i];
        // among already-colored intervals overlapping i, the k-1 with the
        // smallest left endpoints (ties by id) have their colors forbidden
        let mut overlapping: Vec<usize> = colored
            .iter()
            .copied()
            .filter(|&j| {
                let other = iv.intervals[j];
                other.lo <= cur.hi && cur.lo <= other.hi
            })
            .collect();
        overlapping.sort_by(|&a, &b| {
            iv.intervals[a]
                .lo
                .partial_cmp(&iv.intervals[b].lo)
                .unwrap()
                .then(a.cmp(&b))
        });
        forbidden.iter_mut().for_each(|f| *f = false);
        for &j in overlapping.iter().take(k - 1) {
            forbidden[colors[j]] = true;
        }
        colors[i] = (0..k).find(|&c| !forbidden[c]).expect("k-1 forbidden < k");
        colored.push(i);
    }
    Ok(Coloring { k, colors })
}

/// Colors a strip set by running the interval sweep independently on each
/// axis; every `d(k-1)+1`-deep point of the arrangement is polychromatic.
pub fn color_strips(ss: &StripSet, k: usize) -> Result<Coloring> {
    ss.validate()?;
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let mut colors = vec![0usize; ss.strips.len()];
    for axis in 0..ss.d {
        let ids: Vec<usize> = (0..ss.strips.len())
            .filter(|&i| ss.strips[i].axis == axis)
            .collect();
        if ids.is_empty() {
            continue;
        }
        let iv = IntervalSet {
            intervals: ids
                .iter()
                .map(|&i| Interval {
                    lo: ss.strips[i].lo,
                    hi: ss.strips[i].hi,
                })
                .collect(),
        };
        let axis_coloring = color_intervals(&iv, k)?;
        for (slot, &id) in ids.iter().enumerate() {
            colors[id] = axis_coloring.colors[slot];
        }
    }
    Ok(Coloring { k, colors })
}

/// Candidate coordinates on one axis: every strip endpoint, the midpoints
/// between consecutive distinct endpoints, and sentinels outside the
/// arrangement. Strips are closed, so depth is attained on endpoint values
/// as well as on open cells; both are enumerated.
fn axis_candidates(endpoints: &mut Vec<f64>) -> Vec<f64> {
    if endpoints.is_empty() {
        return vec![0.0];
    }
    endpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    endpoints.dedup();
    let mut cands = Vec::with_capacity(endpoints.len() * 2 + 1);
    cands.push(endpoints[0] - 1.0);
    for w in endpoints.windows(2) {
        cands.push(w[0]);
        cands.push((w[0] + w[1]) / 2.0);
    }
    cands.push(endpoints[endpoints.len() - 1]);
    cands.push(endpoints[endpoints.len() - 1] + 1.0);
    cands
}

/// Verifies that every point of depth at least `threshold` is covered by
/// strips of all `k` colors, by enumerating the candidate grid of the
/// axis-endpoint arrangement (depth and color sets are constant on each
/// cell). Exponential in `d`; intended for small dimension.
pub fn verify_depth(ss: &StripSet, col: &Coloring, threshold: usize) -> Result<DepthReport> {
    ss.validate()?;
    if col.colors.len() != ss.strips.len() {
        return Err(Error::LengthMismatch {
            expected: ss.strips.len(),
            actual: col.colors.len(),
        });
    }
    let k = col.k;
    if k > 64 {
        return Err(Error::invalid("depth verification supports at most 64 colors"));
    }

    // per axis: candidate coordinates with their depth and color mask
    let mut per_axis: Vec<Vec<(f64, usize, u64)>> = Vec::with_capacity(ss.d);
    for axis in 0..ss.d {
        let ids: Vec<usize> = (0..ss.strips.len())
            .filter(|&i| ss.strips[i].axis == axis)
            .collect();
        let mut endpoints: Vec<f64> = ids
            .iter()
            .flat_map(|&i| [ss.strips[i].lo, ss.strips[i].hi])
            .collect();
        let cands = axis_candidates(&mut endpoints);
        let mut layer = Vec::with_capacity(cands.len());
        for &x in &cands {
            let mut depth = 0usize;
            let mut mask = 0u64;
            for &i in &ids {
                if ss.strips[i].lo <= x && x <= ss.strips[i].hi {
                    depth += 1;
                    mask |= 1 << col.colors[i];
                }
            }
            layer.push((x, depth, mask));
        }
        per_axis.push(layer);
    }

    let full_mask: u64 = if k == 64 { u64::MAX } else { (1 << k) - 1 };
    let mut witnesses = Vec::new();
    let mut cursor = vec![0usize; ss.d];
    loop {
        let mut depth = 0usize;
        let mut mask = 0u64;
        for (axis, &ci) in cursor.iter().enumerate() {
            let (_, dep, m) = per_axis[axis][ci];
            depth += dep;
            mask |= m;
        }
        if depth >= threshold && mask != full_mask {
            let point: Vec<f64> = cursor
                .iter()
                .enumerate()
                .map(|(axis, &ci)| per_axis[axis][ci].0)
                .collect();
            let colors = (0..k).filter(|&c| mask & (1 << c) != 0).collect();
            witnesses.push(DepthWitness {
                point,
                depth,
                colors,
            });
        }
        // advance the odometer
        let mut axis = ss.d;
        loop {
            if axis == 0 {
                let valid = witnesses.is_empty();
                return Ok(DepthReport { valid, witnesses });
            }
            axis -= 1;
            cursor[axis] += 1;
            if cursor[axis] < per_axis[axis].len() {
                break;
            }
            cursor[axis] = 0;
        }
    }
}
