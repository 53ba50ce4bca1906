//! The NAE-3SAT reduction to three permutations, executable in both
//! directions: a formula is monotonized with consistency clauses, realized
//! as three permutations in which every clause appears as a consecutive
//! triple, and NAE assignments translate to 2-colorings without
//! monochromatic triples and back.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coloring, PermutationInstance};

/// One literal: a variable id and its polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// A 3-CNF formula under not-all-equal semantics: an assignment satisfies a
/// clause iff its literals are not all equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaeFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl NaeFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        let f = NaeFormula { num_vars, clauses };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        for (ci, clause) in self.clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= self.num_vars {
                    return Err(Error::invalid(format!(
                        "clause {ci} references variable {} of {}",
                        lit.var, self.num_vars
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_monotone(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().all(|lit| lit.positive))
    }

    /// Index of the first clause whose literals are all equal under the
    /// assignment, if any.
    pub fn first_violated(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| {
            let v0 = c[0].eval(assignment);
            v0 == c[1].eval(assignment) && v0 == c[2].eval(assignment)
        })
    }
}

/// Element families of one original variable inside the monotone formula:
/// positive copies `x_1..x_{m+1}`, negative copies `x'_1..x'_m`, and the
/// auxiliary chains `Z_1..Z_{m+1}`, `Z'_1..Z'_{m+1}`, where `m` is the
/// larger occurrence count of the two polarities. All vectors are empty for
/// variables that never occur.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarFamily {
    pub copies: usize,
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
    pub z: Vec<usize>,
    pub zbar: Vec<usize>,
}

/// A monotonized formula: the transformed original clauses followed by the
/// per-variable consistency clauses, plus the variable family map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monotonized {
    pub formula: NaeFormula,
    pub original_clauses: usize,
    pub families: Vec<VarFamily>,
}

/// Replaces the i-th positive occurrence of every variable by a fresh copy
/// `x_i` and the i-th negative occurrence by `x'_i`, then appends, for each
/// variable and each `i` up to the occurrence count, the eight consistency
/// clauses forcing all copies of `x` equal and all copies of `x'` opposite.
/// The output is monotone and NAE-equisatisfiable with the input.
pub fn monotonize(f: &NaeFormula) -> Result<Monotonized> {
    f.validate()?;
    let mut pos_occ = vec![0usize; f.num_vars];
    let mut neg_occ = vec![0usize; f.num_vars];
    for clause in &f.clauses {
        for lit in clause {
            if lit.positive {
                pos_occ[lit.var] += 1;
            } else {
                neg_occ[lit.var] += 1;
            }
        }
    }

    let mut families = Vec::with_capacity(f.num_vars);
    let mut next = 0usize;
    let mut alloc = |count: usize| -> Vec<usize> {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        ids
    };
    for v in 0..f.num_vars {
        let m = pos_occ[v].max(neg_occ[v]);
        if m == 0 {
            families.push(VarFamily {
                copies: 0,
                pos: vec![],
                neg: vec![],
                z: vec![],
                zbar: vec![],
            });
            continue;
        }
        families.push(VarFamily {
            copies: m,
            pos: alloc(m + 1),
            neg: alloc(m),
            z: alloc(m + 1),
            zbar: alloc(m + 1),
        });
    }

    let mut clauses = Vec::new();
    let mut pos_seen = vec![0usize; f.num_vars];
    let mut neg_seen = vec![0usize; f.num_vars];
    for clause in &f.clauses {
        let mapped = clause.map(|lit| {
            let fam = &families[lit.var];
            let id = if lit.positive {
                let id = fam.pos[pos_seen[lit.var]];
                pos_seen[lit.var] += 1;
                id
            } else {
                let id = fam.neg[neg_seen[lit.var]];
                neg_seen[lit.var] += 1;
                id
            };
            Literal::pos(id)
        });
        clauses.push(mapped);
    }

    for fam in &families {
        for i in 0..fam.copies {
            let x = Literal::pos(fam.pos[i]);
            let xb = Literal::pos(fam.neg[i]);
            let xn = Literal::pos(fam.pos[i + 1]);
            let z = Literal::pos(fam.z[i]);
            let zn = Literal::pos(fam.z[i + 1]);
            let zb = Literal::pos(fam.zbar[i]);
            let zbn = Literal::pos(fam.zbar[i + 1]);
            clauses.push([z, x, xb]);
            clauses.push([x, xb, zn]);
            clauses.push([x, zb, xb]);
            clauses.push([z, zb, zn]);
            clauses.push([xb, zn, xn]);
            clauses.push([zb, xb, xn]);
            clauses.push([xb, xn, zbn]);
            clauses.push([zb, zn, zbn]);
        }
    }

    Ok(Monotonized {
        formula: NaeFormula {
            num_vars: next,
            clauses,
        },
        original_clauses: f.clauses.len(),
        families,
    })
}

/// Role of one element of the reduced instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementRole {
    /// positive copy `x_copy` of an original variable (copy is 1-based)
    Pos { var: usize, copy: usize },
    /// negative copy `x'_copy`
    Neg { var: usize, copy: usize },
    /// auxiliary `Z_copy`
    Z { var: usize, copy: usize },
    /// auxiliary `Z'_copy`
    ZBar { var: usize, copy: usize },
    /// clause element `c_{index+1}`
    Clause { index: usize },
    /// dummy element, indexed in the shared global order
    Dummy { index: usize },
}

/// The reduced instance: three permutations of the element set, per-element
/// roles, and everything needed to move between formulas and colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutput {
    pub instance: PermutationInstance,
    pub roles: Vec<ElementRole>,
    pub var_map: Vec<VarFamily>,
    pub original: NaeFormula,
    pub monotone: NaeFormula,
    pub original_clauses: usize,
}

/// A permutation under construction: fixed elements interleaved with dummy
/// slots whose ids are assigned once the global dummy count is known.
#[derive(Clone, Copy)]
enum Slot {
    Elem(usize),
    Dummy,
}

fn dummy_pair(out: &mut Vec<Slot>) {
    out.push(Slot::Dummy);
    out.push(Slot::Dummy);
}

/// Realizes a monotonized formula as three permutations. The first lays out
/// the original clause blocks `c_{2j-1}, u, v, w, c_{2j}` and the
/// interleaved Z-chains, the second the `Z_i, x_i, x'_i` chains, the third
/// the `x_i, Z'_i, x'_i` chains; every clause of the monotone formula ends
/// up consecutive in one of them, and dummy separators (always in pairs,
/// in one global order shared by all three permutations) keep the blocks
/// from interacting.
pub fn reduce(f: &NaeFormula) -> Result<ReductionOutput> {
    let mono = monotonize(f)?;
    let vprime = mono.formula.num_vars;
    let j_count = mono.original_clauses;
    let ce = |idx: usize| Slot::Elem(vprime + idx);

    let mut p1: Vec<Slot> = Vec::new();
    let mut p2: Vec<Slot> = Vec::new();
    let mut p3: Vec<Slot> = Vec::new();
    let mut placed_in_p1 = vec![false; vprime];

    // permutation 1: clause blocks, then Z/Z' chains, then leftovers
    for (j, clause) in mono.formula.clauses[..j_count].iter().enumerate() {
        p1.push(ce(2 * j));
        for lit in clause {
            p1.push(Slot::Elem(lit.var));
            placed_in_p1[lit.var] = true;
        }
        p1.push(ce(2 * j + 1));
        dummy_pair(&mut p1);
    }
    for fam in &mono.families {
        if fam.copies == 0 {
            continue;
        }
        for i in 0..=fam.copies {
            p1.push(Slot::Elem(fam.z[i]));
            p1.push(Slot::Elem(fam.zbar[i]));
            placed_in_p1[fam.z[i]] = true;
            placed_in_p1[fam.zbar[i]] = true;
        }
        dummy_pair(&mut p1);
    }
    for e in 0..vprime {
        if !placed_in_p1[e] {
            p1.push(Slot::Elem(e));
            dummy_pair(&mut p1);
        }
    }

    // permutation 2: per variable the chain Z_1 x_1 x'_1 Z_2 ... Z_{m+1}
    // x_{m+1}, then the isolated Z' elements; clause elements at the end
    for fam in &mono.families {
        if fam.copies == 0 {
            continue;
        }
        for i in 0..fam.copies {
            p2.push(Slot::Elem(fam.z[i]));
            p2.push(Slot::Elem(fam.pos[i]));
            p2.push(Slot::Elem(fam.neg[i]));
        }
        p2.push(Slot::Elem(fam.z[fam.copies]));
        p2.push(Slot::Elem(fam.pos[fam.copies]));
        for i in 0..=fam.copies {
            dummy_pair(&mut p2);
            p2.push(Slot::Elem(fam.zbar[i]));
        }
    }
    for idx in 0..2 * j_count {
        dummy_pair(&mut p2);
        p2.push(ce(idx));
    }

    // permutation 3: per variable the isolated Z elements, then the chain
    // x_1 Z'_1 x'_1 ... x_{m+1} Z'_{m+1} Z_{m+1}; clause elements at the end
    for fam in &mono.families {
        if fam.copies == 0 {
            continue;
        }
        for i in 0..fam.copies {
            dummy_pair(&mut p3);
            p3.push(Slot::Elem(fam.z[i]));
        }
        dummy_pair(&mut p3);
        for i in 0..fam.copies {
            p3.push(Slot::Elem(fam.pos[i]));
            p3.push(Slot::Elem(fam.zbar[i]));
            p3.push(Slot::Elem(fam.neg[i]));
        }
        p3.push(Slot::Elem(fam.pos[fam.copies]));
        p3.push(Slot::Elem(fam.zbar[fam.copies]));
        p3.push(Slot::Elem(fam.z[fam.copies]));
    }
    for idx in 0..2 * j_count {
        dummy_pair(&mut p3);
        p3.push(ce(idx));
    }

    // balance: every permutation carries all dummies, appended in pairs at
    // the tail (runs stay even so pair colors keep alternating)
    let count_dummies =
        |slots: &[Slot]| slots.iter().filter(|s| matches!(s, Slot::Dummy)).count();
    let mut total = count_dummies(&p1)
        .max(count_dummies(&p2))
        .max(count_dummies(&p3));
    if vprime == 0 && j_count == 0 && total == 0 {
        total = 2; // degenerate empty formula: a lone dummy pair
    }
    debug_assert!(total % 2 == 0);
    for slots in [&mut p1, &mut p2, &mut p3] {
        let missing = total - count_dummies(slots);
        debug_assert!(missing % 2 == 0);
        for _ in 0..missing {
            slots.push(Slot::Dummy);
        }
    }

    let dummy_base = vprime + 2 * j_count;
    let resolve = |slots: &[Slot]| -> Vec<usize> {
        let mut next_dummy = 0usize;
        slots
            .iter()
            .map(|s| match s {
                Slot::Elem(e) => *e,
                Slot::Dummy => {
                    let id = dummy_base + next_dummy;
                    next_dummy += 1;
                    id
                }
            })
            .collect()
    };
    let perms = vec![resolve(&p1), resolve(&p2), resolve(&p3)];
    let instance = PermutationInstance::new(perms, false)?;

    let mut roles = vec![ElementRole::Dummy { index: 0 }; instance.n];
    for (v, fam) in mono.families.iter().enumerate() {
        for (i, &id) in fam.pos.iter().enumerate() {
            roles[id] = ElementRole::Pos { var: v, copy: i + 1 };
        }
        for (i, &id) in fam.neg.iter().enumerate() {
            roles[id] = ElementRole::Neg { var: v, copy: i + 1 };
        }
        for (i, &id) in fam.z.iter().enumerate() {
            roles[id] = ElementRole::Z { var: v, copy: i + 1 };
        }
        for (i, &id) in fam.zbar.iter().enumerate() {
            roles[id] = ElementRole::ZBar { var: v, copy: i + 1 };
        }
    }
    for idx in 0..2 * j_count {
        roles[vprime + idx] = ElementRole::Clause { index: idx };
    }
    for idx in 0..total {
        roles[dummy_base + idx] = ElementRole::Dummy { index: idx };
    }

    Ok(ReductionOutput {
        instance,
        roles,
        var_map: mono.families,
        original: f.clone(),
        monotone: mono.formula,
        original_clauses: j_count,
    })
}

/// First monochromatic consecutive triple in any permutation of a linear
/// instance.
pub fn first_mono_triple(inst: &PermutationInstance, colors: &[usize]) -> Option<(usize, usize)> {
    for (pi, perm) in inst.perms.iter().enumerate() {
        for (start, w) in perm.windows(3).enumerate() {
            if colors[w[0]] == colors[w[1]] && colors[w[1]] == colors[w[2]] {
                return Some((pi, start));
            }
        }
    }
    None
}

/// Extends an NAE assignment of the original formula to the canonical
/// assignment of the monotone formula: every copy of `x` takes the value of
/// `x`, every copy of `x'` the opposite, `Z` is true and `Z'` false.
pub fn canonical_monotone_assignment(r: &ReductionOutput, assignment: &[bool]) -> Vec<bool> {
    let mut out = vec![false; r.monotone.num_vars];
    for (v, fam) in r.var_map.iter().enumerate() {
        let value = assignment.get(v).copied().unwrap_or(false);
        for &id in &fam.pos {
            out[id] = value;
        }
        for &id in &fam.neg {
            out[id] = !value;
        }
        for &id in &fam.z {
            out[id] = true;
        }
        for &id in &fam.zbar {
            out[id] = false;
        }
    }
    out
}

/// Turns an NAE assignment of the monotone formula into a 2-coloring of the
/// reduced instance without monochromatic triples. The auxiliary `Z`/`Z'`
/// values are canonicalized (true/false) first; clause elements take the
/// color opposite to the first/last literal of their block, dummy pairs are
/// colored 0, 1 in global order.
pub fn assignment_to_coloring(r: &ReductionOutput, assignment: &[bool]) -> Result<Coloring> {
    if assignment.len() != r.monotone.num_vars {
        return Err(Error::LengthMismatch {
            expected: r.monotone.num_vars,
            actual: assignment.len(),
        });
    }
    if let Some(clause) = r.monotone.first_violated(assignment) {
        return Err(Error::NotNae { clause });
    }
    let mut values = assignment.to_vec();
    for fam in &r.var_map {
        for &id in &fam.z {
            values[id] = true;
        }
        for &id in &fam.zbar {
            values[id] = false;
        }
    }
    debug_assert_eq!(r.monotone.first_violated(&values), None);

    let n = r.instance.n;
    let vprime = r.monotone.num_vars;
    let mut colors = vec![0usize; n];
    for (id, &v) in values.iter().enumerate() {
        colors[id] = v as usize;
    }
    for (j, clause) in r.monotone.clauses[..r.original_clauses].iter().enumerate() {
        colors[vprime + 2 * j] = 1 - values[clause[0].var] as usize;
        colors[vprime + 2 * j + 1] = 1 - values[clause[2].var] as usize;
    }
    for id in vprime + 2 * r.original_clauses..n {
        let dummy_index = id - (vprime + 2 * r.original_clauses);
        colors[id] = dummy_index % 2;
    }

    assert_eq!(
        first_mono_triple(&r.instance, &colors),
        None,
        "canonical coloring of an NAE assignment must avoid monochromatic triples"
    );
    Ok(Coloring { k: 2, colors })
}

/// Reads an NAE assignment of the original formula off a valid 2-coloring
/// of the reduced instance: variable `x` is true iff the element `x_1` has
/// color 1.
pub fn coloring_to_assignment(r: &ReductionOutput, col: &Coloring) -> Result<Vec<bool>> {
    if col.colors.len() != r.instance.n {
        return Err(Error::LengthMismatch {
            expected: r.instance.n,
            actual: col.colors.len(),
        });
    }
    if let Some((perm, start)) = first_mono_triple(&r.instance, &col.colors) {
        return Err(Error::MonochromaticTriple { perm, start });
    }
    let assignment: Vec<bool> = r
        .var_map
        .iter()
        .map(|fam| fam.pos.first().map_or(false, |&id| col.colors[id] == 1))
        .collect();
    assert_eq!(
        r.original.first_violated(&assignment),
        None,
        "a triple-free coloring must induce an NAE assignment"
    );
    Ok(assignment)
}

/// Parses the minimal DIMACS-like format: a header `p nae3 <vars> <clauses>`
/// followed by one clause per line of three integers, negative meaning
/// negated, 1-based, with an optional trailing 0. Lines starting with `c`
/// are comments.
pub fn parse_formula(text: &str) -> Result<NaeFormula> {
    let mut num_vars: Option<usize> = None;
    let mut declared = 0usize;
    let mut clauses = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "nae3" {
                return Err(Error::Parse(format!(
                    "line {}: expected header `p nae3 <vars> <clauses>`",
                    lineno + 1
                )));
            }
            num_vars = Some(
                parts[2]
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad var count", lineno + 1)))?,
            );
            declared = parts[3]
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad clause count", lineno + 1)))?;
            continue;
        }
        let Some(nv) = num_vars else {
            return Err(Error::Parse("clause before header".into()));
        };
        let mut lits = Vec::new();
        for tok in line.split_whitespace() {
            let value: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad literal {tok}", lineno + 1)))?;
            if value == 0 {
                break; // optional DIMACS terminator
            }
            let var = value.unsigned_abs() as usize;
            if var == 0 || var > nv {
                return Err(Error::Parse(format!(
                    "line {}: variable {var} out of range 1..={nv}",
                    lineno + 1
                )));
            }
            lits.push(Literal {
                var: var - 1,
                positive: value > 0,
            });
        }
        if lits.len() != 3 {
            return Err(Error::Parse(format!(
                "line {}: clauses carry exactly three literals",
                lineno + 1
            )));
        }
        clauses.push([lits[0], lits[1], lits[2]]);
    }
    let Some(num_vars) = num_vars else {
        return Err(Error::Parse("missing `p nae3` header".into()));
    };
    if clauses.len() != declared {
        return Err(Error::Parse(format!(
            "header declares {declared} clauses, found {}",
            clauses.len()
        )));
    }
    NaeFormula::new(num_vars, clauses)
}

/// Renders a formula in the format accepted by [`parse_formula`].
pub fn format_formula(f: &NaeFormula) -> String {
    let mut out = format!("p nae3 {} {}\n", f.num_vars, f.clauses.len());
    for clause in &f.clauses {
        let lits: Vec<String> = clause
            .iter()
            .map(|l| {
                let v = (l.var + 1) as i64;
                if l.positive { v } else { -v }.to_string()
            })
            .collect();
        out.push_str(&lits.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn formula(num_vars: usize, clauses: &[[(usize, bool); 3]]) -> NaeFormula {
        NaeFormula::new(
            num_vars,
            clauses
                .iter()
                .map(|c| {
                    c.map(|(var, positive)| Literal { var, positive })
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn monotonize_counts_single_positive_clause() {
        // one all-positive clause: 1 transformed clause + 8 consistency
        // clauses for each of the three variables
        let f = formula(3, &[[(0, true), (1, true), (2, true)]]);
        let mono = monotonize(&f).unwrap();
        assert_eq!(mono.formula.clauses.len(), 25);
        assert!(mono.formula.is_monotone());
        assert_eq!(mono.original_clauses, 1);
        // per variable: (m+1) + m + (m+1) + (m+1) ids with m = 1
        assert_eq!(mono.formula.num_vars, 3 * 7);
    }

    #[test]
    fn monotonize_mixed_polarity() {
        let f = formula(2, &[[(0, true), (0, false), (1, true)]]);
        let mono = monotonize(&f).unwrap();
        let fam = &mono.families[0];
        assert_eq!(fam.copies, 1);
        // the transformed clause pairs the positive and negative copies
        let c = mono.formula.clauses[0];
        assert_eq!(c[0].var, fam.pos[0]);
        assert_eq!(c[1].var, fam.neg[0]);
    }

    #[test]
    fn monotonize_repeated_variable() {
        let f = formula(1, &[[(0, true), (0, true), (0, true)]]);
        let mono = monotonize(&f).unwrap();
        let fam = &mono.families[0];
        assert_eq!(fam.copies, 3);
        let c = mono.formula.clauses[0];
        assert_eq!([c[0].var, c[1].var, c[2].var], [fam.pos[0], fam.pos[1], fam.pos[2]]);
    }

    /// Brute-force NAE satisfiability, local to the tests.
    fn nae_sat(f: &NaeFormula) -> Option<Vec<bool>> {
        for bits in 0..(1u64 << f.num_vars) {
            let assignment: Vec<bool> =
                (0..f.num_vars).map(|v| bits >> (f.num_vars - 1 - v) & 1 == 1).collect();
            if f.first_violated(&assignment).is_none() {
                return Some(assignment);
            }
        }
        None
    }

    #[test]
    fn monotonize_preserves_nae_satisfiability() {
        let samples = [
            formula(3, &[[(0, true), (1, true), (2, true)]]),
            formula(2, &[[(0, true), (0, false), (1, true)]]),
            formula(1, &[[(0, true), (0, true), (0, true)]]),
            formula(2, &[[(0, true), (0, true), (1, false)], [(0, false), (1, true), (1, true)]]),
            formula(3, &[
                [(0, true), (1, false), (2, true)],
                [(0, false), (1, true), (2, false)],
                [(0, true), (1, true), (2, true)],
            ]),
        ];
        for f in &samples {
            let mono = monotonize(f).unwrap();
            assert_eq!(
                nae_sat(f).is_some(),
                nae_sat(&mono.formula).is_some(),
                "equisatisfiability broken for {f:?}"
            );
        }
    }

    #[test]
    fn reduce_structure() {
        let f = formula(3, &[[(0, true), (1, true), (2, true)]]);
        let r = reduce(&f).unwrap();
        r.instance.validate().unwrap();
        assert_eq!(r.instance.d, 3);

        // the clause block opens the first permutation
        let p1 = &r.instance.perms[0];
        let vprime = r.monotone.num_vars;
        assert_eq!(p1[0], vprime); // c_1
        assert_eq!(p1[4], vprime + 1); // c_2
        let u = r.monotone.clauses[0][0].var;
        assert_eq!(p1[1], u);

        // dummies appear in the same relative order in all permutations
        for perm in &r.instance.perms {
            let dummies: Vec<usize> = perm
                .iter()
                .copied()
                .filter(|&e| matches!(r.roles[e], ElementRole::Dummy { .. }))
                .collect();
            assert!(dummies.windows(2).all(|w| w[0] < w[1]));
        }
    }

    /// Every clause of the monotone formula is consecutive in some
    /// permutation.
    #[test]
    fn reduce_realizes_all_clauses() {
        let samples = [
            formula(3, &[[(0, true), (1, true), (2, true)]]),
            formula(2, &[[(0, true), (0, false), (1, true)]]),
            formula(1, &[[(0, true), (0, true), (0, true)]]),
            formula(3, &[
                [(0, true), (1, false), (2, true)],
                [(2, false), (1, true), (0, false)],
                [(1, true), (1, true), (2, false)],
            ]),
        ];
        for f in &samples {
            let r = reduce(&f).unwrap();
            for (ci, clause) in r.monotone.clauses.iter().enumerate() {
                let mut found = false;
                'perms: for perm in &r.instance.perms {
                    for w in perm.windows(3) {
                        let mut items = [w[0], w[1], w[2]];
                        items.sort_unstable();
                        let mut vars = [clause[0].var, clause[1].var, clause[2].var];
                        vars.sort_unstable();
                        if items == vars {
                            found = true;
                            break 'perms;
                        }
                    }
                }
                assert!(found, "clause {ci} of {f:?} is not consecutive anywhere");
            }
        }
    }

    #[test]
    fn assignment_round_trip() {
        let f = formula(3, &[[(0, true), (1, false), (2, true)]]);
        let r = reduce(&f).unwrap();
        let phi = vec![true, false, true];
        assert_eq!(f.first_violated(&phi), None);
        let mono_assignment = canonical_monotone_assignment(&r, &phi);
        let col = assignment_to_coloring(&r, &mono_assignment).unwrap();
        assert_eq!(first_mono_triple(&r.instance, &col.colors), None);
        let back = coloring_to_assignment(&r, &col).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn non_nae_assignment_rejected() {
        let f = formula(3, &[[(0, true), (1, true), (2, true)]]);
        let r = reduce(&f).unwrap();
        let all_true = canonical_monotone_assignment(&r, &[true, true, true]);
        assert!(matches!(
            assignment_to_coloring(&r, &all_true),
            Err(Error::NotNae { .. })
        ));
    }

    #[test]
    fn invalid_coloring_rejected() {
        let f = formula(3, &[[(0, true), (1, true), (2, true)]]);
        let r = reduce(&f).unwrap();
        let col = Coloring {
            k: 2,
            colors: vec![0; r.instance.n],
        };
        assert!(matches!(
            coloring_to_assignment(&r, &col),
            Err(Error::MonochromaticTriple { .. })
        ));
    }

    #[test]
    fn dummy_pairs_colored_alternately() {
        let f = formula(3, &[[(0, true), (1, true), (2, true)]]);
        let r = reduce(&f).unwrap();
        let mono_assignment = canonical_monotone_assignment(&r, &[true, false, false]);
        let col = assignment_to_coloring(&r, &mono_assignment).unwrap();
        for (id, role) in r.roles.iter().enumerate() {
            if let ElementRole::Dummy { index } = role {
                assert_eq!(col.colors[id], index % 2);
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let text = "c comment\np nae3 3 2\n1 -2 3\n-1 2 2 0\n";
        let f = parse_formula(text).unwrap();
        assert_eq!(f.num_vars, 3);
        assert_eq!(f.clauses.len(), 2);
        assert_eq!(f.clauses[0][1], Literal::neg(1));
        let round = parse_formula(&format_formula(&f)).unwrap();
        assert_eq!(round, f);

        assert!(parse_formula("p nae3 1 1\n1 1\n").is_err());
        assert!(parse_formula("1 2 3\n").is_err());
        assert!(parse_formula("p nae3 1 2\n1 1 1\n").is_err());
    }
}
