//! Brute-force and backtracking ground truth: exhaustive coloring search,
//! the exact minimum achievable window, a complete triple-free 2-coloring
//! solver, and NAE brute force. Everything here is deterministic and
//! independent of the algorithmic modules it cross-checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hardness::NaeFormula;
use crate::model::{Coloring, PermutationInstance};

/// Node limit for the exhaustive and backtracking searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 50_000_000,
        }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }

    fn spend(&self, spent: &mut u64) -> Result<()> {
        *spent += 1;
        if *spent > self.max_nodes {
            Err(Error::BudgetExhausted {
                limit: self.max_nodes,
            })
        } else {
            Ok(())
        }
    }
}

/// Is every p-window of every permutation polychromatic? Fast path shared
/// by the enumerations below; early-exits on the first bad window.
fn valid_at(inst: &PermutationInstance, colors: &[usize], k: usize, p: usize, counts: &mut [usize]) -> bool {
    let n = inst.n;
    if p > n {
        return !inst.circular;
    }
    for perm in &inst.perms {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut distinct = 0usize;
        for pos in 0..p {
            let c = colors[perm[pos]];
            counts[c] += 1;
            if counts[c] == 1 {
                distinct += 1;
            }
        }
        if distinct < k {
            return false;
        }
        let last_start = if inst.circular { n - 1 } else { n - p };
        for start in 1..=last_start {
            let out = colors[perm[start - 1]];
            counts[out] -= 1;
            if counts[out] == 0 {
                distinct -= 1;
            }
            let inc = colors[perm[(start + p - 1) % n]];
            counts[inc] += 1;
            if counts[inc] == 1 {
                distinct += 1;
            }
            if distinct < k {
                return false;
            }
        }
    }
    true
}

/// Advances a coloring odometer in lexicographic order over positions
/// `fixed..n`. Returns false once the space is exhausted.
fn next_coloring(colors: &mut [usize], k: usize, fixed: usize) -> bool {
    let mut pos = colors.len();
    while pos > fixed {
        pos -= 1;
        colors[pos] += 1;
        if colors[pos] < k {
            return true;
        }
        colors[pos] = 0;
    }
    false
}

/// Lexicographically smallest k-coloring for which every p-window is
/// polychromatic, or `None` when no coloring works. Enumerates the full
/// `k^n` space, so only desk-scale instances are feasible.
pub fn exhaustive_best_coloring(
    inst: &PermutationInstance,
    k: usize,
    p: usize,
    budget: &SearchBudget,
) -> Result<Option<Coloring>> {
    inst.validate()?;
    if k == 0 || p == 0 {
        return Err(Error::invalid("k and p must be at least 1"));
    }
    if inst.circular && p > inst.n {
        return Err(Error::InvalidWindow { p, n: inst.n });
    }
    let mut colors = vec![0usize; inst.n];
    let mut counts = vec![0usize; k];
    let mut spent = 0u64;
    loop {
        budget.spend(&mut spent)?;
        if valid_at(inst, &colors, k, p, &mut counts) {
            return Ok(Some(Coloring { k, colors }));
        }
        if !next_coloring(&mut colors, k, 0) {
            return Ok(None);
        }
    }
}

/// Does any coloring verify at window p? Breaks the color-permutation
/// symmetry by fixing the color of item 0, which is sound for existence.
fn any_coloring_valid_at(
    inst: &PermutationInstance,
    k: usize,
    p: usize,
    budget: &SearchBudget,
    spent: &mut u64,
) -> Result<bool> {
    let mut colors = vec![0usize; inst.n];
    let mut counts = vec![0usize; k];
    loop {
        budget.spend(spent)?;
        if valid_at(inst, &colors, k, p, &mut counts) {
            return Ok(true);
        }
        if !next_coloring(&mut colors, k, 1) {
            return Ok(false);
        }
    }
}

/// Minimum over all k-colorings of the minimal polychromatic window,
/// computed by enumerating colorings level by level (valid at `p` implies
/// valid at larger windows, so the first feasible level is the minimum).
/// Returns `n + 1` when every coloring misses a color (`n < k`).
pub fn min_achievable_window(
    inst: &PermutationInstance,
    k: usize,
    budget: &SearchBudget,
) -> Result<usize> {
    inst.validate()?;
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if inst.n < k {
        return Ok(inst.n + 1);
    }
    let mut spent = 0u64;
    for p in k..=inst.n {
        if any_coloring_valid_at(inst, k, p, budget, &mut spent)? {
            return Ok(p);
        }
    }
    Ok(inst.n + 1)
}

/// Complete backtracking search for a 2-coloring with no monochromatic
/// consecutive triple in any permutation. Returns a coloring or proves none
/// exists.
///
/// Items are assigned along a connectivity order (each next item is the one
/// sharing the most triples with already-ordered items, ties by first
/// permutation position), with color 0 tried first; a triple with two equal
/// assigned colors forces the third item, so contradictions surface close
/// to where they arise.
pub fn solve_triples(
    inst: &PermutationInstance,
    budget: &SearchBudget,
) -> Result<Option<Coloring>> {
    inst.validate()?;
    let n = inst.n;

    // all windows of size 3 across the permutations
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for perm in &inst.perms {
        for w in perm.windows(3) {
            triples.push([w[0], w[1], w[2]]);
        }
    }
    let mut triples_of: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (ti, t) in triples.iter().enumerate() {
        for &item in t {
            triples_of[item].push(ti as u32);
        }
    }

    // static connectivity order seeded by first-permutation positions
    let p1_pos = {
        let mut pos = vec![0usize; n];
        for (i, &item) in inst.perms[0].iter().enumerate() {
            pos[item] = i;
        }
        pos
    };
    let order = {
        let mut order = Vec::with_capacity(n);
        let mut chosen = vec![false; n];
        let mut links = vec![0usize; n];
        for _ in 0..n {
            let mut best = usize::MAX;
            for item in 0..n {
                if chosen[item] {
                    continue;
                }
                if best == usize::MAX
                    || links[item] > links[best]
                    || (links[item] == links[best] && p1_pos[item] < p1_pos[best])
                {
                    best = item;
                }
            }
            chosen[best] = true;
            order.push(best);
            for &ti in &triples_of[best] {
                for &other in &triples[ti as usize] {
                    if !chosen[other] {
                        links[other] += 1;
                    }
                }
            }
        }
        order
    };

    const UNSET: u8 = u8::MAX;
    let mut color = vec![UNSET; n];
    // trail of (item, was_decision); decisions carry the next color to try
    struct Frame {
        item: usize,
        tried_one: bool,
        trail_len: usize,
    }
    let mut frames: Vec<Frame> = Vec::new();
    let mut trail: Vec<usize> = Vec::new();
    let mut spent = 0u64;
    let mut next_slot = 0usize;

    // assign + propagate forced items; returns false on conflict
    let propagate = |color: &mut Vec<u8>,
                     trail: &mut Vec<usize>,
                     triples: &Vec<[usize; 3]>,
                     triples_of: &Vec<Vec<u32>>,
                     item: usize,
                     value: u8|
     -> bool {
        let mut queue = vec![(item, value)];
        while let Some((it, val)) = queue.pop() {
            if color[it] != UNSET {
                if color[it] != val {
                    return false;
                }
                continue;
            }
            color[it] = val;
            trail.push(it);
            for &ti in &triples_of[it] {
                let t = &triples[ti as usize];
                let mut unset = None;
                let mut c0 = None;
                let mut equal_pair = true;
                for &member in t {
                    match color[member] {
                        UNSET => {
                            if unset.replace(member).is_some() {
                                equal_pair = false;
                                break;
                            }
                        }
                        c => match c0 {
                            None => c0 = Some(c),
                            Some(prev) => {
                                if prev != c {
                                    equal_pair = false;
                                }
                            }
                        },
                    }
                }
                if !equal_pair {
                    continue;
                }
                match unset {
                    Some(third) => {
                        // two equal assigned colors force the third
                        queue.push((third, 1 - c0.unwrap()));
                    }
                    None => {
                        if c0.is_some() {
                            return false; // all three assigned and equal
                        }
                    }
                }
            }
        }
        true
    };

    'search: loop {
        // find the next unassigned item in order
        while next_slot < n && color[order[next_slot]] != UNSET {
            next_slot += 1;
        }
        if next_slot == n {
            let colors: Vec<usize> = color.iter().map(|&c| c as usize).collect();
            debug_assert!(crate::hardness::first_mono_triple(inst, &colors).is_none());
            return Ok(Some(Coloring { k: 2, colors }));
        }
        budget.spend(&mut spent)?;
        let item = order[next_slot];
        let trail_len = trail.len();
        if propagate(&mut color, &mut trail, &triples, &triples_of, item, 0) {
            frames.push(Frame {
                item,
                tried_one: false,
                trail_len,
            });
            continue;
        }
        // rewind the failed try and backtrack
        for &it in &trail[trail_len..] {
            color[it] = UNSET;
        }
        trail.truncate(trail_len);
        loop {
            let Some(mut frame) = frames.pop() else {
                return Ok(None);
            };
            for &it in &trail[frame.trail_len..] {
                color[it] = UNSET;
            }
            trail.truncate(frame.trail_len);
            if !frame.tried_one {
                budget.spend(&mut spent)?;
                let trail_len = trail.len();
                if propagate(&mut color, &mut trail, &triples, &triples_of, frame.item, 1) {
                    frame.tried_one = true;
                    frame.trail_len = trail_len;
                    frames.push(frame);
                    next_slot = 0;
                    continue 'search;
                }
                for &it in &trail[trail_len..] {
                    color[it] = UNSET;
                }
                trail.truncate(trail_len);
            }
        }
    }
}

/// First NAE assignment in lexicographic order (variable 0 most
/// significant, false before true), or `None` if the formula has none.
pub fn nae_brute_force(f: &NaeFormula, budget: &SearchBudget) -> Result<Option<Vec<bool>>> {
    f.validate()?;
    if f.num_vars >= 63 {
        return Err(Error::invalid("too many variables to enumerate"));
    }
    let mut spent = 0u64;
    for bits in 0..(1u64 << f.num_vars) {
        budget.spend(&mut spent)?;
        let assignment: Vec<bool> = (0..f.num_vars)
            .map(|v| bits >> (f.num_vars - 1 - v) & 1 == 1)
            .collect();
        if f.first_violated(&assignment).is_none() {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
