//! Shattering, VC dimension and Littlestone dimension of a class restricted to
//! a finite window of points, plus refutation of candidate VC witnesses.
//!
//! Window dimensions are lower bounds on the dimensions of the whole class and
//! are exact when every member is supported inside the window. Each reported
//! dimension comes with the shattered set or tree that certifies it.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis::Hypothesis;
use crate::machines::{run_bounded, Program, RunOutcome};

/// A candidate `k`-witness of VC dimension: maps every strictly increasing
/// `(k+1)`-tuple to a label pattern of length `k+1` that no member of the class
/// is supposed to realize.
pub trait Witness: Send + Sync + fmt::Debug {
    /// The `k` in "k-witness"; tuples have length `k + 1`.
    fn k(&self) -> usize;

    fn pattern(&self, tuple: &[u64]) -> Result<Vec<bool>>;

    fn name(&self) -> String;
}

/// The constant witness: all ones or all zeros on every tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstantWitness {
    pub k: usize,
    pub bit: bool,
}

impl ConstantWitness {
    pub fn all_ones(k: usize) -> Self {
        Self { k, bit: true }
    }

    pub fn all_zeros(k: usize) -> Self {
        Self { k, bit: false }
    }
}

impl Witness for ConstantWitness {
    fn k(&self) -> usize {
        self.k
    }

    fn pattern(&self, tuple: &[u64]) -> Result<Vec<bool>> {
        check_arity(self.k, tuple)?;
        Ok(vec![self.bit; self.k + 1])
    }

    fn name(&self) -> String {
        let which = if self.bit { "all-ones" } else { "all-zeros" };
        format!("{which}({})", self.k)
    }
}

/// A witness computed by a counter machine: the tuple is loaded into
/// registers `1..=k+1` and the machine must halt within `budget` steps with an
/// output of length `k+1`.
#[derive(Debug, Clone)]
pub struct MachineWitness {
    pub program: Program,
    pub k: usize,
    pub budget: u64,
}

impl Witness for MachineWitness {
    fn k(&self) -> usize {
        self.k
    }

    fn pattern(&self, tuple: &[u64]) -> Result<Vec<bool>> {
        check_arity(self.k, tuple)?;
        match run_bounded(&self.program, tuple, self.budget)? {
            RunOutcome::Halted { output, .. } if output.len() == self.k + 1 => Ok(output),
            RunOutcome::Halted { output, .. } => Err(Error::ArityMismatch {
                expected: self.k + 1,
                got: output.len(),
            }),
            RunOutcome::Running { .. } => Err(Error::NotHalted {
                budget: self.budget,
            }),
        }
    }

    fn name(&self) -> String {
        format!("machine({})", self.k)
    }
}

fn check_arity(k: usize, tuple: &[u64]) -> Result<()> {
    if tuple.len() != k + 1 {
        return Err(Error::ArityMismatch {
            expected: k + 1,
            got: tuple.len(),
        });
    }
    Ok(())
}

/// The restriction of a finite list of hypotheses to a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteClassView {
    universe: Vec<u64>,
    rows: Vec<Vec<bool>>,
}

impl FiniteClassView {
    pub fn universe(&self) -> &[u64] {
        &self.universe
    }

    /// Distinct restrictions, sorted.
    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }
}

/// Projects `class` onto `universe` (sorted and deduplicated first).
pub fn restrict(class: &[Hypothesis], universe: &[u64]) -> Result<FiniteClassView> {
    let mut universe = universe.to_vec();
    universe.sort_unstable();
    universe.dedup();
    if universe.is_empty() {
        return Err(Error::Config("universe must be nonempty".into()));
    }
    let mut rows: Vec<Vec<bool>> = class.iter().map(|h| h.pattern(&universe)).collect();
    rows.sort_unstable();
    rows.dedup();
    Ok(FiniteClassView { universe, rows })
}

/// True iff every labeling of the universe positions `points` is realized.
pub fn shatters(view: &FiniteClassView, points: &[usize]) -> bool {
    let s = points.len();
    if s >= 64 || (1usize << s) > view.rows.len() {
        return s == 0 && !view.rows.is_empty();
    }
    let mut seen = vec![false; 1 << s];
    let mut missing = 1usize << s;
    for row in &view.rows {
        let idx = points
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &p)| acc | (usize::from(row[p]) << i));
        if !seen[idx] {
            seen[idx] = true;
            missing -= 1;
            if missing == 0 {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VcReport {
    pub vc: usize,
    /// Lexicographically least shattered set of size `vc`, as points.
    pub shattered_set: Vec<u64>,
}

/// Largest `k` such that some `k`-subset of the universe is shattered.
///
/// Subsets are searched by increasing size in lexicographic order. Size-`s`
/// candidates are grown only from shattered `(s-1)`-sets, since every subset
/// of a shattered set is shattered.
pub fn vc_dimension_window(view: &FiniteClassView) -> Result<VcReport> {
    if view.rows.is_empty() {
        return Err(Error::EmptyClass);
    }
    let n = view.universe.len();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    let mut best: Vec<usize> = Vec::new();
    loop {
        let prev: HashSet<&Vec<usize>> = level.iter().collect();
        let mut next = Vec::new();
        for set in &level {
            let start = set.last().map_or(0, |&l| l + 1);
            for j in start..n {
                let mut cand = set.clone();
                cand.push(j);
                let subsets_ok = (0..cand.len() - 1).all(|drop| {
                    let sub: Vec<usize> = cand
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &p)| p)
                        .collect();
                    prev.contains(&sub)
                });
                if subsets_ok && shatters(view, &cand) {
                    next.push(cand);
                }
            }
        }
        match next.first() {
            Some(first) => best = first.clone(),
            None => break,
        }
        level = next;
    }
    Ok(VcReport {
        vc: best.len(),
        shattered_set: best.iter().map(|&i| view.universe[i]).collect(),
    })
}

/// A complete binary tree whose internal nodes query points; `zero` is the
/// branch for label 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MistakeTree {
    pub point: u64,
    pub zero: Option<Box<MistakeTree>>,
    pub one: Option<Box<MistakeTree>>,
}

impl MistakeTree {
    pub fn depth(tree: &Option<Box<MistakeTree>>) -> usize {
        tree.as_ref()
            .map_or(0, |t| 1 + Self::depth(&t.zero).min(Self::depth(&t.one)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdimReport {
    pub ldim: usize,
    /// A shattered tree of depth `ldim`; `None` when `ldim` is 0.
    pub shattered_tree: Option<Box<MistakeTree>>,
}

struct LdimSearch<'a> {
    view: &'a FiniteClassView,
    memo: HashMap<Vec<u32>, usize>,
}

impl LdimSearch<'_> {
    fn split(&self, rows: &[u32], col: usize) -> (Vec<u32>, Vec<u32>) {
        rows.iter()
            .partition(|&&r| !self.view.rows[r as usize][col])
    }

    fn ldim(&mut self, rows: &[u32]) -> usize {
        if rows.len() <= 1 {
            return 0;
        }
        if let Some(&d) = self.memo.get(rows) {
            return d;
        }
        let cap = (usize::BITS - 1 - rows.len().leading_zeros()) as usize;
        let mut best = 0;
        for col in 0..self.view.universe.len() {
            let (zeros, ones) = self.split(rows, col);
            if zeros.is_empty() || ones.is_empty() {
                continue;
            }
            let (small, large) = if zeros.len() <= ones.len() {
                (zeros, ones)
            } else {
                (ones, zeros)
            };
            let a = self.ldim(&small);
            if a < best {
                continue;
            }
            let b = self.ldim(&large);
            best = best.max(1 + a.min(b));
            if best == cap {
                break;
            }
        }
        self.memo.insert(rows.to_vec(), best);
        best
    }

    fn tree(&mut self, rows: &[u32], depth: usize) -> Option<Box<MistakeTree>> {
        if depth == 0 {
            return None;
        }
        for col in 0..self.view.universe.len() {
            let (zeros, ones) = self.split(rows, col);
            if zeros.is_empty() || ones.is_empty() {
                continue;
            }
            if self.ldim(&zeros) >= depth - 1 && self.ldim(&ones) >= depth - 1 {
                let zero = self.tree(&zeros, depth - 1);
                let one = self.tree(&ones, depth - 1);
                return Some(Box::new(MistakeTree {
                    point: self.view.universe[col],
                    zero,
                    one,
                }));
            }
        }
        unreachable!("ldim guarantees a splitting point")
    }
}

/// Littlestone dimension of the view:
/// `ldim(R) = 0` if `|R| ≤ 1`, otherwise the max over points `x` splitting `R`
/// of `1 + min(ldim(R|x=0), ldim(R|x=1))`.
pub fn ldim_window(view: &FiniteClassView) -> Result<LdimReport> {
    if view.rows.is_empty() {
        return Err(Error::EmptyClass);
    }
    let mut search = LdimSearch {
        view,
        memo: HashMap::new(),
    };
    let all: Vec<u32> = (0..view.rows.len() as u32).collect();
    let ldim = search.ldim(&all);
    let shattered_tree = search.tree(&all, ldim);
    Ok(LdimReport {
        ldim,
        shattered_tree,
    })
}

/// The first `(tuple, hypothesis)` on which a member realizes the witness's
/// forbidden pattern, if any.
pub fn find_witness_violation(
    w: &dyn Witness,
    class: &[Hypothesis],
    tuples: &[Vec<u64>],
) -> Result<Option<(Vec<u64>, Hypothesis)>> {
    for tuple in tuples {
        check_arity(w.k(), tuple)?;
        if tuple.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Config(format!(
                "tuple {tuple:?} is not strictly increasing"
            )));
        }
        let forbidden = w.pattern(tuple)?;
        if let Some(h) = class.iter().find(|h| h.pattern(tuple) == forbidden) {
            return Ok(Some((tuple.clone(), h.clone())));
        }
    }
    Ok(None)
}

/// True iff no listed hypothesis realizes `w` on any listed tuple. A `true`
/// answer is only as strong as the tuples supplied.
pub fn verify_witness(w: &dyn Witness, class: &[Hypothesis], tuples: &[Vec<u64>]) -> Result<bool> {
    Ok(find_witness_violation(w, class, tuples)?.is_none())
}
