//! Coloring two permutations of a common item set via the tuple multigraph.
//!
//! Both permutations are cut into consecutive k-tuples; every item induces
//! one edge between the tuple containing it on the left (first permutation)
//! and on the right (second permutation). The resulting bipartite multigraph
//! is k-regular, so its edges split into k perfect matchings; coloring each
//! item by the matching of its edge makes every tuple rainbow, and any
//! window of `2k - 1` consecutive items (linear) contains a whole tuple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{verify_windows, Coloring, PermutationInstance};

/// Bipartite multigraph over the k-tuples of two permutations. Edge `i`
/// carries the item label `edges[i].2` and joins left tuple `edges[i].0` to
/// right tuple `edges[i].1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleMultigraph {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize, usize)>,
}

/// Proper edge coloring of a [`TupleMultigraph`]: `assignment[e]` is the
/// color of edge `e`, and each color class is a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub assignment: Vec<usize>,
}

/// Cuts both permutations into consecutive disjoint k-tuples and connects,
/// for every item, the two tuples containing it. Requires `k` to divide the
/// (padded) item count; callers pad first.
pub fn build_tuple_multigraph(
    perm_a: &[usize],
    perm_b: &[usize],
    k: usize,
) -> Result<TupleMultigraph> {
    if k == 0 {
        return Err(Error::invalid("tuple size must be at least 1"));
    }
    let n = perm_a.len();
    if perm_b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: perm_b.len(),
        });
    }
    if n % k != 0 {
        return Err(Error::IndivisibleTuples { n, k });
    }
    let max_id = perm_a.iter().copied().max().unwrap_or(0);
    let mut right_tuple = vec![usize::MAX; max_id + 1];
    for (pos, &item) in perm_b.iter().enumerate() {
        if item > max_id {
            return Err(Error::invalid("permutations are over different item sets"));
        }
        right_tuple[item] = pos / k;
    }
    let left: Vec<Vec<usize>> = perm_a.chunks(k).map(|c| c.to_vec()).collect();
    let right: Vec<Vec<usize>> = perm_b.chunks(k).map(|c| c.to_vec()).collect();
    let mut edges = Vec::with_capacity(n);
    for (pos, &item) in perm_a.iter().enumerate() {
        let r = right_tuple[item];
        if r == usize::MAX {
            return Err(Error::invalid("permutations are over different item sets"));
        }
        edges.push((pos / k, r, item));
    }
    Ok(TupleMultigraph { left, right, edges })
}

/// Properly k-edge-colors a k-regular bipartite multigraph by peeling one
/// perfect matching per color with augmenting-path search. Vertices are
/// scanned in index order and adjacency in edge-insertion order, so the
/// output is deterministic.
pub fn edge_color_regular_bipartite(g: &TupleMultigraph, k: usize) -> Result<EdgeColoring> {
    let nl = g.left.len();
    let nr = g.right.len();
    let mut deg_l = vec![0usize; nl];
    let mut deg_r = vec![0usize; nr];
    let mut adj = vec![Vec::new(); nl];
    for (e, &(l, r, _)) in g.edges.iter().enumerate() {
        if l >= nl || r >= nr {
            return Err(Error::invalid("edge endpoint out of range"));
        }
        deg_l[l] += 1;
        deg_r[r] += 1;
        adj[l].push(e);
    }
    if let Some(v) = deg_l.iter().position(|&d| d != k) {
        return Err(Error::NotRegular {
            k,
            vertex: v,
            degree: deg_l[v],
        });
    }
    if let Some(v) = deg_r.iter().position(|&d| d != k) {
        return Err(Error::NotRegular {
            k,
            vertex: v,
            degree: deg_r[v],
        });
    }

    let mut assignment = vec![usize::MAX; g.edges.len()];
    let mut match_left: Vec<Option<usize>> = vec![None; nl]; // edge index
    let mut match_right: Vec<Option<usize>> = vec![None; nr];
    for color in 0..k {
        match_left.iter_mut().for_each(|m| *m = None);
        match_right.iter_mut().for_each(|m| *m = None);
        let mut visited = vec![false; nr];
        for u in 0..nl {
            if match_left[u].is_some() {
                continue;
            }
            visited.iter_mut().for_each(|v| *v = false);
            let ok = augment(
                u,
                &adj,
                &g.edges,
                &assignment,
                &mut match_left,
                &mut match_right,
                &mut visited,
            );
            // a k-regular bipartite multigraph always has a perfect matching
            assert!(ok, "no perfect matching in a regular bipartite multigraph");
        }
        for m in match_left.iter().flatten() {
            assignment[*m] = color;
        }
    }
    debug_assert!(assignment.iter().all(|&c| c < k));
    Ok(EdgeColoring { assignment })
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    edges: &[(usize, usize, usize)],
    assignment: &[usize],
    match_left: &mut Vec<Option<usize>>,
    match_right: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    for &e in &adj[u] {
        if assignment[e] != usize::MAX {
            continue; // already consumed by an earlier color
        }
        let v = edges[e].1;
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(me) => augment(
                edges[me].0,
                adj,
                edges,
                assignment,
                match_left,
                match_right,
                visited,
            ),
        };
        if free {
            match_left[u] = Some(e);
            match_right[v] = Some(e);
            return true;
        }
    }
    false
}

/// Colors a two-permutation linear instance so that every `2k - 1`-window is
/// polychromatic. When `k` does not divide `n`, pad items are appended at
/// the tail of both permutations, colored, and discarded.
pub fn color_planar(inst: &PermutationInstance, k: usize) -> Result<Coloring> {
    inst.validate()?;
    if inst.d != 2 || inst.circular {
        return Err(Error::invalid(
            "tuple coloring needs exactly two linear permutations",
        ));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = inst.n;
    let pad = (k - n % k) % k;
    let mut perm_a = inst.perms[0].clone();
    let mut perm_b = inst.perms[1].clone();
    for extra in 0..pad {
        perm_a.push(n + extra);
        perm_b.push(n + extra);
    }
    let g = build_tuple_multigraph(&perm_a, &perm_b, k)?;
    let ec = edge_color_regular_bipartite(&g, k)?;
    let mut colors = vec![0usize; n];
    for (e, &(_, _, item)) in g.edges.iter().enumerate() {
        if item < n {
            colors[item] = ec.assignment[e];
        }
    }
    let coloring = Coloring { k, colors };
    let window = 2 * k - 1;
    if window <= n {
        let report = verify_windows(inst, &coloring, window)?;
        assert!(report.valid, "tuple coloring must verify at window 2k-1");
    }
    Ok(coloring)
}

/// Colors a two-permutation circular instance. Each permutation is split
/// into `2a` groups of alternating sizes `k` and roughly `b/a` (with
/// `a = n / k`, `b = n mod k`); small groups are padded with dummy items
/// that appear in the same order in both permutations, the induced
/// k-regular multigraph is edge-colored, and the dummies are dropped.
///
/// Returns the coloring together with the achieved circular window bound
/// `2(k-1) + ceil(b/a) + 1`, which is at most `2k` whenever `n >= k(k-1)`.
pub fn color_circular(inst: &PermutationInstance, k: usize) -> Result<(Coloring, usize)> {
    inst.validate()?;
    if inst.d != 2 || !inst.circular {
        return Err(Error::invalid(
            "circular tuple coloring needs exactly two circular permutations",
        ));
    }
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = inst.n;
    if n < k {
        return Err(Error::TooFewItems { n, k });
    }

    let a = n / k;
    let b = n % k;
    // group sizes along each permutation, in order
    let mut sizes: Vec<usize> = Vec::new();
    if b == 0 {
        sizes.extend(std::iter::repeat(k).take(a));
    } else {
        // small group j gets floor((j+1)b/a) - floor(jb/a), spreading the
        // ceil(b/a)-sized groups evenly among the even positions
        for j in 0..a {
            sizes.push(k);
            sizes.push((j + 1) * b / a - j * b / a);
        }
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), n);

    // pad each undersized group with fresh dummy ids, identically in both
    // permutations, so that dummies keep one global relative order
    let mut padded_a = Vec::new();
    let mut padded_b = Vec::new();
    let mut next_dummy = n;
    let mut offset = 0usize;
    for &size in &sizes {
        padded_a.extend_from_slice(&inst.perms[0][offset..offset + size]);
        padded_b.extend_from_slice(&inst.perms[1][offset..offset + size]);
        for _ in size..k {
            padded_a.push(next_dummy);
            padded_b.push(next_dummy);
            next_dummy += 1;
        }
        offset += size;
    }

    let g = build_tuple_multigraph(&padded_a, &padded_b, k)?;
    let ec = edge_color_regular_bipartite(&g, k)?;
    let mut colors = vec![0usize; n];
    for (e, &(_, _, item)) in g.edges.iter().enumerate() {
        if item < n {
            colors[item] = ec.assignment[e];
        }
    }
    let coloring = Coloring { k, colors };

    let small_ceil = if b == 0 { 0 } else { (b + a - 1) / a };
    let bound = 2 * (k - 1) + small_ceil + 1;
    let report = verify_windows(inst, &coloring, bound.min(n))?;
    assert!(report.valid, "circular coloring must verify at its bound");
    Ok((coloring, bound))
}

/// Decides whether a two-permutation linear instance admits a 2-coloring in
/// which every 2-window is polychromatic: alternate the colors along the
/// first permutation and accept iff they also alternate along the second.
/// Returns the coloring when the test passes; otherwise no such coloring
/// exists at all.
pub fn decide_two_window(inst: &PermutationInstance) -> Result<Option<Coloring>> {
    inst.validate()?;
    if inst.d != 2 || inst.circular {
        return Err(Error::invalid(
            "the window-2 test needs exactly two linear permutations",
        ));
    }
    let mut colors = vec![0usize; inst.n];
    for (pos, &item) in inst.perms[0].iter().enumerate() {
        colors[item] = pos % 2;
    }
    let alternates = inst.perms[1]
        .windows(2)
        .all(|w| colors[w[0]] != colors[w[1]]);
    if alternates {
        Ok(Some(Coloring { k: 2, colors }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{min_polychromatic_window, random_instance};

    fn inst(perms: &[&[usize]], circular: bool) -> PermutationInstance {
        PermutationInstance::new(perms.iter().map(|p| p.to_vec()).collect(), circular).unwrap()
    }

    /// A proper edge coloring whose every class is a perfect matching.
    fn assert_proper_matchings(g: &TupleMultigraph, ec: &EdgeColoring, k: usize) {
        for c in 0..k {
            let class: Vec<_> = g
                .edges
                .iter()
                .zip(&ec.assignment)
                .filter(|(_, &col)| col == c)
                .map(|(e, _)| e)
                .collect();
            assert_eq!(class.len(), g.left.len(), "color class {c} not perfect");
            let mut seen_l = vec![false; g.left.len()];
            let mut seen_r = vec![false; g.right.len()];
            for &&(l, r, _) in &class {
                assert!(!seen_l[l] && !seen_r[r], "color class {c} not a matching");
                seen_l[l] = true;
                seen_r[r] = true;
            }
        }
    }

    #[test]
    fn multigraph_example() {
        let g = build_tuple_multigraph(&[0, 1, 2, 3], &[0, 2, 1, 3], 2).unwrap();
        assert_eq!(g.left, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g.right, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(g.edges, vec![(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 3)]);
    }

    #[test]
    fn multigraph_extremes() {
        // k = n: a single tuple on each side, n parallel edges
        let g = build_tuple_multigraph(&[2, 0, 1], &[0, 1, 2], 3).unwrap();
        assert_eq!(g.left.len(), 1);
        assert!(g.edges.iter().all(|&(l, r, _)| l == 0 && r == 0));
        // k = 1: a perfect matching keyed by item
        let g = build_tuple_multigraph(&[1, 0], &[0, 1], 1).unwrap();
        assert_eq!(g.edges, vec![(0, 1, 1), (1, 0, 0)]);
        assert!(matches!(
            build_tuple_multigraph(&[0, 1, 2], &[0, 1, 2], 2),
            Err(Error::IndivisibleTuples { n: 3, k: 2 })
        ));
    }

    #[test]
    fn edge_color_four_cycle() {
        // the 4-cycle has exactly the two alternating proper 2-colorings
        let g = build_tuple_multigraph(&[0, 1, 2, 3], &[0, 2, 1, 3], 2).unwrap();
        let ec = edge_color_regular_bipartite(&g, 2).unwrap();
        assert_proper_matchings(&g, &ec, 2);
        assert_eq!(ec.assignment[0], ec.assignment[3]);
        assert_eq!(ec.assignment[1], ec.assignment[2]);
        assert_ne!(ec.assignment[0], ec.assignment[1]);
    }

    #[test]
    fn edge_color_parallel_edges() {
        let g = build_tuple_multigraph(&[0, 1, 2], &[1, 2, 0], 3).unwrap();
        let ec = edge_color_regular_bipartite(&g, 3).unwrap();
        let mut colors = ec.assignment.clone();
        colors.sort_unstable();
        assert_eq!(colors, vec![0, 1, 2]);
    }

    #[test]
    fn edge_color_rejects_irregular() {
        let g = TupleMultigraph {
            left: vec![vec![0], vec![1]],
            right: vec![vec![0], vec![1]],
            edges: vec![(0, 0, 0), (0, 1, 1), (1, 0, 2)],
        };
        assert!(matches!(
            edge_color_regular_bipartite(&g, 2),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn planar_example_fixture() {
        let i = inst(&[&[0, 1, 2, 3], &[0, 2, 1, 3]], false);
        let col = color_planar(&i, 2).unwrap();
        // matching structure forces colors(0) = colors(3) != colors(1) = colors(2)
        assert_eq!(col.colors[0], col.colors[3]);
        assert_eq!(col.colors[1], col.colors[2]);
        assert_ne!(col.colors[0], col.colors[1]);
        let (w, _) = min_polychromatic_window(&i, &col).unwrap();
        assert!(w <= 3);
    }

    #[test]
    fn planar_k1_all_zero() {
        let i = inst(&[&[1, 0, 2], &[2, 1, 0]], false);
        let col = color_planar(&i, 1).unwrap();
        assert_eq!(col.colors, vec![0, 0, 0]);
    }

    #[test]
    fn planar_random_verifies_and_tuples_rainbow() {
        for seed in 0..20u64 {
            let k = 2 + (seed as usize % 5);
            let n = k + (seed as usize * 13) % 90;
            let i = random_instance(seed, n, 2, false).unwrap();
            let col = color_planar(&i, k).unwrap();
            if 2 * k - 1 <= n {
                assert!(verify_windows(&i, &col, 2 * k - 1).unwrap().valid);
            }
            // stronger property: every padded k-tuple of both permutations
            // is rainbow (pad items count as wildcards)
            for perm in &i.perms {
                for chunk in perm.chunks(k) {
                    if chunk.len() < k {
                        continue;
                    }
                    let mut seen: Vec<usize> = chunk.iter().map(|&it| col.colors[it]).collect();
                    seen.sort_unstable();
                    seen.dedup();
                    assert_eq!(seen.len(), k);
                }
            }
        }
    }

    #[test]
    fn circular_exact_divisor() {
        let i = random_instance(3, 6, 2, true).unwrap();
        let (col, bound) = color_circular(&i, 2).unwrap();
        assert_eq!(bound, 3);
        assert!(verify_windows(&i, &col, 3).unwrap().valid);
    }

    #[test]
    fn circular_with_remainder() {
        // n = 7, k = 2: a = 3, b = 1, bound = 2 + 1 + 1 = 4 = 2k
        let i = random_instance(5, 7, 2, true).unwrap();
        let (col, bound) = color_circular(&i, 2).unwrap();
        assert_eq!(bound, 4);
        assert!(verify_windows(&i, &col, 4).unwrap().valid);
    }

    #[test]
    fn circular_k1_and_small_n() {
        let i = random_instance(1, 5, 2, true).unwrap();
        let (col, bound) = color_circular(&i, 1).unwrap();
        assert_eq!(bound, 1);
        assert!(col.colors.iter().all(|&c| c == 0));
        let tiny = random_instance(1, 3, 2, true).unwrap();
        assert_eq!(
            color_circular(&tiny, 4).unwrap_err(),
            Error::TooFewItems { n: 3, k: 4 }
        );
    }

    #[test]
    fn circular_bound_at_most_2k_when_n_large() {
        for seed in 0..20u64 {
            let k = 2 + (seed as usize) % 7;
            let n = k * (k - 1) + (seed as usize) % 40 + k;
            let i = random_instance(seed, n, 2, true).unwrap();
            let (col, bound) = color_circular(&i, k).unwrap();
            assert!(bound <= 2 * k, "bound {bound} exceeds 2k for n={n}, k={k}");
            assert!(verify_windows(&i, &col, bound.min(n)).unwrap().valid);
        }
    }

    #[test]
    fn two_window_identical_perms() {
        let i = inst(&[&[0, 1, 2, 3], &[0, 1, 2, 3]], false);
        let col = decide_two_window(&i).unwrap().unwrap();
        assert_eq!(col.colors, vec![0, 1, 0, 1]);
        assert!(verify_windows(&i, &col, 2).unwrap().valid);
    }

    #[test]
    fn two_window_shifted_perm() {
        let i = inst(&[&[0, 1, 2, 3], &[2, 3, 0, 1]], false);
        let col = decide_two_window(&i).unwrap().unwrap();
        assert_eq!(col.colors, vec![0, 1, 0, 1]);
    }

    #[test]
    fn two_window_rejects() {
        let i = inst(&[&[0, 1, 2, 3], &[0, 2, 1, 3]], false);
        assert!(decide_two_window(&i).unwrap().is_none());
    }
}
