//! Lower-bound instance generators: Hamiltonian path decompositions of the
//! complete graph, the primal cluster construction, and the dual strip
//! construction with its witness points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Strip, StripSet};
use crate::model::PermutationInstance;

/// `h` pairwise edge-disjoint Hamiltonian paths covering the complete graph
/// on `2h` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamPathDecomposition {
    pub h: usize,
    pub paths: Vec<Vec<usize>>,
}

impl HamPathDecomposition {
    /// Checks that every path is Hamiltonian and that the consecutive-pair
    /// edges are pairwise distinct and cover all of K_{2h}.
    pub fn validate(&self) -> Result<()> {
        let n = 2 * self.h;
        if self.paths.len() != self.h {
            return Err(Error::invalid("decomposition must contain h paths"));
        }
        let mut edges = vec![false; n * n];
        let mut count = 0usize;
        for path in &self.paths {
            if path.len() != n {
                return Err(Error::invalid("path does not visit all vertices"));
            }
            let mut seen = vec![false; n];
            for &v in path {
                if v >= n || seen[v] {
                    return Err(Error::invalid("path is not a permutation of the vertices"));
                }
                seen[v] = true;
            }
            for w in path.windows(2) {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                if edges[a * n + b] {
                    return Err(Error::invalid(format!("edge ({a}, {b}) repeated")));
                }
                edges[a * n + b] = true;
                count += 1;
            }
        }
        if count != n * (n - 1) / 2 {
            return Err(Error::invalid("paths do not cover the complete graph"));
        }
        Ok(())
    }
}

/// Decomposes K_{2h} into `h` edge-disjoint Hamiltonian paths by the
/// rotational zigzag: path `j` visits `j + o (mod 2h)` for the offset
/// sequence `0, +1, -1, +2, -2, ..., +(h-1), -(h-1), +h`. The result is
/// checked against the invariants before being returned.
pub fn ham_path_decomposition(h: usize) -> HamPathDecomposition {
    assert!(h >= 1, "h must be at least 1");
    let n = 2 * h;
    let mut offsets: Vec<i64> = vec![0];
    for i in 1..h as i64 {
        offsets.push(i);
        offsets.push(-i);
    }
    offsets.push(h as i64);
    let paths = (0..h as i64)
        .map(|j| {
            offsets
                .iter()
                .map(|&o| (j + o).rem_euclid(n as i64) as usize)
                .collect()
        })
        .collect();
    let decomposition = HamPathDecomposition { h, paths };
    decomposition
        .validate()
        .expect("zigzag decomposition must satisfy the invariants");
    decomposition
}

/// A generated lower-bound instance, primal (points versus strips, given as
/// a permutation instance) or dual (strips versus deep points).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerBoundInstance {
    Primal {
        instance: PermutationInstance,
        /// cluster size `s = floor((2d-1)k / (2d))`
        s: usize,
        claimed_bound: usize,
        /// item ids of each cluster, in construction order
        clusters: Vec<Vec<usize>>,
    },
    Dual {
        strips: StripSet,
        /// strips per group, `t = floor((2d-1)k / (2d))`
        t: usize,
        claimed_bound: usize,
        /// strip ids of each group
        clusters: Vec<Vec<usize>>,
        /// one point per unordered group pair, lying in exactly the strips
        /// of that pair of groups
        witnesses: Vec<Vec<f64>>,
    },
}

impl LowerBoundInstance {
    pub fn claimed_bound(&self) -> usize {
        match self {
            LowerBoundInstance::Primal { claimed_bound, .. } => *claimed_bound,
            LowerBoundInstance::Dual { claimed_bound, .. } => *claimed_bound,
        }
    }
}

fn cluster_size(k: usize, d: usize) -> usize {
    (2 * d - 1) * k / (2 * d)
}

/// Builds the primal lower-bound instance for `(k, d)`: the `2d` vertices of
/// a path decomposition of K_{2d} are replaced by clusters of
/// `s = floor((2d-1)k/(2d))` items each, consecutive in every permutation,
/// so that every cluster pair appears adjacent in some permutation and spans
/// a window of exactly `2s` items there.
pub fn primal_lower_bound(k: usize, d: usize) -> Result<LowerBoundInstance> {
    if d == 0 {
        return Err(Error::invalid("d must be at least 1"));
    }
    let s = cluster_size(k, d);
    if k < 2 || s == 0 {
        return Err(Error::invalid(
            "cluster size is zero; the construction needs k >= 2",
        ));
    }
    let decomposition = ham_path_decomposition(d);
    let vertices = 2 * d;
    let clusters: Vec<Vec<usize>> = (0..vertices)
        .map(|v| (v * s..(v + 1) * s).collect())
        .collect();
    let perms = decomposition
        .paths
        .iter()
        .map(|path| {
            let mut perm = Vec::with_capacity(vertices * s);
            for &v in path {
                perm.extend_from_slice(&clusters[v]);
            }
            perm
        })
        .collect();
    let instance = PermutationInstance::new(perms, false)?;
    Ok(LowerBoundInstance::Primal {
        instance,
        s,
        claimed_bound: 2 * s + 1,
        clusters,
    })
}

/// Builds the dual lower-bound construction for `(k, d)`: `2d` groups of
/// `t` identical strips (group `2i` spans `[0, 2]` and group `2i+1` spans
/// `[1, 3]` on axis `i`), plus one witness point per group pair lying in
/// exactly the strips of those two groups.
pub fn dual_lower_bound(k: usize, d: usize) -> Result<LowerBoundInstance> {
    if d == 0 {
        return Err(Error::invalid("d must be at least 1"));
    }
    let t = cluster_size(k, d);
    if k < 2 || t == 0 {
        return Err(Error::invalid(
            "group size is zero; the construction needs k >= 2",
        ));
    }
    let groups = 2 * d;
    let mut strips = Vec::with_capacity(groups * t);
    let mut clusters = Vec::with_capacity(groups);
    for g in 0..groups {
        let axis = g / 2;
        let (lo, hi) = if g % 2 == 0 { (0.0, 2.0) } else { (1.0, 3.0) };
        let ids: Vec<usize> = (0..t).map(|r| g * t + r).collect();
        for _ in 0..t {
            strips.push(Strip { axis, lo, hi });
        }
        clusters.push(ids);
    }
    let strips = StripSet::new(d, strips)?;

    // delta places a coordinate inside exactly one of the two groups of its
    // axis: 1/2 for the even ([0,2]) group, 5/2 for the odd ([1,3]) group,
    // and 3/2 when both groups of one axis are requested
    let delta = |g: usize| if g % 2 == 0 { 0.5 } else { 2.5 };
    let mut witnesses = Vec::new();
    for i in 0..groups {
        for j in i + 1..groups {
            let mut point = vec![-1.0; d];
            if i / 2 == j / 2 {
                point[i / 2] = 1.5;
            } else {
                point[i / 2] = delta(i);
                point[j / 2] = delta(j);
            }
            witnesses.push(point);
        }
    }

    Ok(LowerBoundInstance::Dual {
        strips,
        t,
        claimed_bound: 2 * t + 1,
        clusters,
        witnesses,
    })
}

/// Appends `extra` fresh items at the tail of every permutation of a primal
/// instance; clusters and the claimed bound are untouched.
pub fn enlarge_instance(lb: &LowerBoundInstance, extra: usize) -> Result<LowerBoundInstance> {
    match lb {
        LowerBoundInstance::Primal {
            instance,
            s,
            claimed_bound,
            clusters,
        } => {
            let mut perms = instance.perms.clone();
            for perm in perms.iter_mut() {
                perm.extend(instance.n..instance.n + extra);
            }
            Ok(LowerBoundInstance::Primal {
                instance: PermutationInstance::new(perms, instance.circular)?,
                s: *s,
                claimed_bound: *claimed_bound,
                clusters: clusters.clone(),
            })
        }
        LowerBoundInstance::Dual { .. } => Err(Error::invalid(
            "only primal instances can be enlarged with dummy points",
        )),
    }
}
