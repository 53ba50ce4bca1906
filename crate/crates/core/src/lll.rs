//! Resampling colorer for any number of permutations, driven by the
//! local-lemma condition
//! `e * ((d-1)t^2 + 2t - 1) * k * (1 - 1/k)^t < 1`.
//!
//! The published window `t = k(4 ln k + ln d)` does not actually satisfy the
//! inequality for small `k` (at `k = d = 2` the left side exceeds 1), so
//! both that formula value and the smallest window passing the condition
//! are exposed and never silently exchanged.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coloring, PermutationInstance};

/// Parameters of one resampling run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllParams {
    pub k: usize,
    pub d: usize,
    pub t: usize,
    pub seed: u64,
    pub max_rounds: u64,
}

pub const DEFAULT_MAX_ROUNDS: u64 = 1_000_000;

impl LllParams {
    /// Parameters with the default window (smallest `t` passing the
    /// condition) and resample budget.
    pub fn with_defaults(k: usize, d: usize, seed: u64) -> Result<Self> {
        let (_, t_min) = window_bound(k, d)?;
        Ok(LllParams {
            k,
            d,
            t: t_min,
            seed,
            max_rounds: DEFAULT_MAX_ROUNDS,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.d == 0 || self.t == 0 || self.max_rounds == 0 {
            return Err(Error::invalid(
                "resample parameters require k, d, t, max_rounds >= 1",
            ));
        }
        Ok(())
    }
}

/// Evaluates `e * ((d-1)t^2 + 2t - 1) * k * (1 - 1/k)^t < 1` exactly as
/// written; true iff the inequality is strict.
pub fn condition_holds(k: usize, d: usize, t: usize) -> bool {
    assert!(k >= 1 && d >= 1 && t >= 1);
    let kf = k as f64;
    let tf = t as f64;
    let events = (d as f64 - 1.0) * tf * tf + 2.0 * tf - 1.0;
    let lhs = std::f64::consts::E * events * kf * (1.0 - 1.0 / kf).powi(t as i32);
    lhs < 1.0
}

/// Returns `(t_formula, t_min)`: the published window
/// `max(1, ceil(k(4 ln k + ln d)))` and the smallest `t >= 1` for which
/// [`condition_holds`] is true (upward search; the left side tends to 0).
pub fn window_bound(k: usize, d: usize) -> Result<(usize, usize)> {
    if k == 0 || d == 0 {
        return Err(Error::invalid("window_bound requires k >= 1 and d >= 1"));
    }
    let formula = (k as f64) * (4.0 * (k as f64).ln() + (d as f64).ln());
    let t_formula = (formula.ceil() as usize).max(1);
    let mut t_min = 1;
    while !condition_holds(k, d, t_min) {
        t_min += 1;
        assert!(t_min < 1_000_000_000, "condition search diverged");
    }
    Ok((t_formula, t_min))
}

/// Result of a resampling run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResampleOutcome {
    pub coloring: Coloring,
    pub resamples: u64,
    pub t: usize,
}

/// First window of size `t` that misses a color, scanning permutations in
/// index order and offsets left to right.
fn first_violation(
    inst: &PermutationInstance,
    colors: &[usize],
    k: usize,
    t: usize,
) -> Option<(usize, usize)> {
    let n = inst.n;
    if t > n {
        return None; // linear instances only; circular t > n is rejected upfront
    }
    let mut counts = vec![0usize; k];
    for (pi, perm) in inst.perms.iter().enumerate() {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut distinct = 0usize;
        for pos in 0..t {
            let c = colors[perm[pos]];
            counts[c] += 1;
            if counts[c] == 1 {
                distinct += 1;
            }
        }
        if distinct < k {
            return Some((pi, 0));
        }
        let last_start = if inst.circular { n - 1 } else { n - t };
        for start in 1..=last_start {
            let out = colors[perm[start - 1]];
            counts[out] -= 1;
            if counts[out] == 0 {
                distinct -= 1;
            }
            let inc = colors[perm[(start + t - 1) % n]];
            counts[inc] += 1;
            if counts[inc] == 1 {
                distinct += 1;
            }
            if distinct < k {
                return Some((pi, start));
            }
        }
    }
    None
}

/// Colors the instance by resampling: start from an independent uniform
/// k-coloring, then repeatedly re-randomize the items of the violating
/// t-window with the smallest (permutation, offset) until every t-window is
/// polychromatic. Deterministic for a fixed seed.
pub fn color_resample(inst: &PermutationInstance, params: &LllParams) -> Result<ResampleOutcome> {
    inst.validate()?;
    params.validate()?;
    if params.d != inst.d {
        return Err(Error::invalid(format!(
            "params specify d = {} but instance has d = {}",
            params.d, inst.d
        )));
    }
    if inst.circular && params.t > inst.n {
        return Err(Error::InvalidWindow {
            p: params.t,
            n: inst.n,
        });
    }
    let k = params.k;
    let t = params.t;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut colors: Vec<usize> = (0..inst.n).map(|_| rng.gen_range(0..k)).collect();

    let mut resamples = 0u64;
    while let Some((pi, start)) = first_violation(inst, &colors, k, t) {
        if resamples >= params.max_rounds {
            return Err(Error::ResampleBudgetExhausted {
                limit: params.max_rounds,
            });
        }
        resamples += 1;
        let perm = &inst.perms[pi];
        for off in 0..t {
            let item = perm[(start + off) % inst.n];
            colors[item] = rng.gen_range(0..k);
        }
    }

    let coloring = Coloring { k, colors };
    // the loop only exits once no t-window violates, but keep the
    // verification unconditional
    debug_assert!(first_violation(inst, &coloring.colors, k, t).is_none());
    Ok(ResampleOutcome {
        coloring,
        resamples,
        t,
    })
}
