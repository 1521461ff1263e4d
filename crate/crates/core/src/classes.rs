//! Decidable hypothesis classes.
//!
//! - [`FullClass`]: every finitely supported hypothesis.
//! - [`BaselineClass`]: all hypotheses with support of size exactly `d`.
//! - [`GoodClass`] and [`HatClass`]: the hypotheses that avoid a VC witness
//!   below their largest support point, and their union with a base class.
//! - [`BlockClass`]: the block construction over an injective `f`.
//! - [`DiagonalClass`]: one hypothesis per halting machine in the machine
//!   enumeration, built so that no computable witness survives.
//! - [`ExplicitClass`]: a finite list read from JSON.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;
use serde_json::json;

use crate::dims::{ConstantWitness, MachineWitness, Witness};
use crate::error::{Error, Result};
use crate::hypothesis::Hypothesis;
use crate::machines::{
    decode_pair, encode_pair, enumerate_machine_pairs, run_bounded, EnumerableFunction, RunOutcome,
    Verdict,
};

/// Default cap on the number of hypotheses a bounded enumeration may inspect.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 21;

/// A decidable class of finitely supported hypotheses.
pub trait HypothesisClass: Send + Sync + fmt::Debug {
    fn name(&self) -> String;

    fn parameters(&self) -> serde_json::Value {
        json!({})
    }

    /// Decides membership. `Unknown` only for classes built on a dovetailed
    /// function whose budget ran out.
    fn membership(&self, h: &Hypothesis) -> Result<Verdict>;

    /// Every member with support inside `{0, …, bound}`, in canonical order.
    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>>;

    /// A finite set of members such that every member of the class agrees on
    /// `{0, …, bound}` with one of them. Minimizing a loss over a sample whose
    /// points are at most `bound` over this set is an exact ERM.
    fn covering_members(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        self.enumerate_bounded(bound)
    }
}

fn canonical(mut hs: Vec<Hypothesis>) -> Vec<Hypothesis> {
    hs.sort_unstable();
    hs.dedup();
    hs
}

fn check_budget(what: &'static str, needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            what,
            needed: needed.to_string(),
            budget,
        });
    }
    Ok(())
}

fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r) as u128;
    let n = n as u128;
    (0..r).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[derive(Debug, Clone, Copy)]
pub struct FullClass {
    pub budget: u64,
}

impl Default for FullClass {
    fn default() -> Self {
        Self {
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl HypothesisClass for FullClass {
    fn name(&self) -> String {
        "full".into()
    }

    fn membership(&self, _h: &Hypothesis) -> Result<Verdict> {
        Ok(Verdict::Yes)
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let needed = 1u128
            .checked_shl(bound.saturating_add(1).min(127) as u32)
            .unwrap_or(u128::MAX);
        check_budget("full class enumeration", needed, self.budget)?;
        Ok((0..=bound + 1)
            .flat_map(|d| (0..=bound).combinations(d as usize))
            .map(Hypothesis::from_points)
            .collect())
    }
}

/// All hypotheses whose support has exactly `d` points.
#[derive(Debug, Clone, Copy)]
pub struct BaselineClass {
    pub d: usize,
    pub budget: u64,
}

pub fn baseline_class(d: usize) -> BaselineClass {
    BaselineClass {
        d,
        budget: DEFAULT_ENUMERATION_BUDGET,
    }
}

impl HypothesisClass for BaselineClass {
    fn name(&self) -> String {
        format!("baseline-{}", self.d)
    }

    fn parameters(&self) -> serde_json::Value {
        json!({ "d": self.d })
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        Ok(Verdict::from_bool(h.len() == self.d))
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        check_budget(
            "baseline enumeration",
            binomial(bound + 1, self.d as u64),
            self.budget,
        )?;
        Ok((0..=bound)
            .combinations(self.d)
            .map(Hypothesis::from_points)
            .collect())
    }

    /// A member reaching past `bound` agrees on `{0..bound}` with one whose
    /// remaining points were moved into `bound+1 ..= bound+d`.
    fn covering_members(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        self.enumerate_bounded(bound + self.d as u64)
    }
}

/// Decides goodness: `h` disagrees with `w` on every `(k+1)`-tuple lying
/// strictly below `max supp(h)`. The empty hypothesis is good.
pub fn good_hypothesis_check(h: &Hypothesis, w: &dyn Witness, k: usize) -> Result<bool> {
    if w.k() != k {
        return Err(Error::ArityMismatch {
            expected: k + 1,
            got: w.k() + 1,
        });
    }
    let Some(max) = h.max_point() else {
        return Ok(true);
    };
    for tuple in (0..max).combinations(k + 1) {
        if h.pattern(&tuple) == w.pattern(&tuple)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All good hypotheses with support inside `{0, …, bound}`, in canonical order.
///
/// Builds prefixes position by position; a prefix survives when it disagrees
/// with `w` on every tuple it covers, so each new position only re-checks the
/// tuples that end there. `budget` caps the number of surviving prefixes (at
/// most `2^(bound+1)`), and `bound` must be below 127.
pub fn enumerate_good(
    bound: u64,
    w: &dyn Witness,
    k: usize,
    budget: u64,
) -> Result<Vec<Hypothesis>> {
    if w.k() != k {
        return Err(Error::ArityMismatch {
            expected: k + 1,
            got: w.k() + 1,
        });
    }
    if bound >= 127 {
        return Err(Error::BudgetExceeded {
            what: "good-hypothesis enumeration",
            needed: format!("2^{}", bound + 1),
            budget,
        });
    }
    let m = bound as usize;
    // Forbidden pattern of every (k+1)-tuple inside {0..bound-1}, grouped by
    // its last element.
    let mut by_last: Vec<Vec<(Vec<u64>, u128)>> = vec![Vec::new(); m + 1];
    for tuple in (0..bound).combinations(k + 1) {
        let pattern = w.pattern(&tuple)?;
        let pmask = pattern
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &b)| acc | (u128::from(b) << i));
        let last = *tuple.last().unwrap() as usize;
        by_last[last].push((tuple, pmask));
    }

    let mut out = vec![Hypothesis::empty()];
    let mut visited = 0u64;
    // (prefix mask over [0, t), t)
    let mut stack: Vec<(u128, usize)> = vec![(0, 0)];
    while let Some((prefix, t)) = stack.pop() {
        visited += 1;
        check_budget("good-hypothesis enumeration", visited as u128, budget)?;
        let mut support: Vec<u64> = (0..t as u64).filter(|&x| prefix >> x & 1 == 1).collect();
        support.push(t as u64);
        out.push(Hypothesis::from_sorted(support)?);
        if t == m {
            continue;
        }
        for bit in [0u128, 1] {
            let next = prefix | (bit << t);
            let avoids = by_last[t].iter().all(|(tuple, pmask)| {
                let realized = tuple
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, &x)| acc | ((next >> x & 1) << i));
                realized != *pmask
            });
            if avoids {
                stack.push((next, t + 1));
            }
        }
    }
    Ok(canonical(out))
}

/// The good hypotheses for a fixed witness `w` of arity `k`.
#[derive(Debug, Clone)]
pub struct GoodClass {
    pub witness: Arc<dyn Witness>,
    pub k: usize,
    pub budget: u64,
}

impl GoodClass {
    pub fn new(witness: Arc<dyn Witness>) -> Self {
        let k = witness.k();
        Self {
            witness,
            k,
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl HypothesisClass for GoodClass {
    fn name(&self) -> String {
        format!("good:{}", self.witness.name())
    }

    fn parameters(&self) -> serde_json::Value {
        json!({ "witness": self.witness.name(), "k": self.k })
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        good_hypothesis_check(h, self.witness.as_ref(), self.k).map(Verdict::from_bool)
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        enumerate_good(bound, self.witness.as_ref(), self.k, self.budget)
    }
}

/// `base ∪ good(w)`. When `w` is a `k`-witness for `base`, no member realizes
/// `(w(x_1..x_{k+1}), 1)` on any `x_1 < … < x_{k+2}`, so the VC dimension is at
/// most `k + 1`, and ERM over good hypotheses inside the sample's range is
/// exact.
#[derive(Debug, Clone)]
pub struct HatClass {
    pub base: Arc<dyn HypothesisClass>,
    pub good: GoodClass,
}

impl HypothesisClass for HatClass {
    fn name(&self) -> String {
        format!("hat({} ∪ {})", self.base.name(), self.good.name())
    }

    fn parameters(&self) -> serde_json::Value {
        json!({ "base": self.base.name(), "witness": self.good.witness.name(), "k": self.good.k })
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        if self.good.membership(h)?.is_yes() {
            return Ok(Verdict::Yes);
        }
        self.base.membership(h)
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let mut all = self.base.enumerate_bounded(bound)?;
        all.extend(self.good.enumerate_bounded(bound)?);
        Ok(canonical(all))
    }

    fn covering_members(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let mut all = self.base.covering_members(bound)?;
        all.extend(self.good.enumerate_bounded(bound)?);
        Ok(canonical(all))
    }
}

/// Block `I_k` of the partition of the even numbers `≥ 2` into consecutive
/// runs of sizes 1, 2, 3, …: `I_k = {k²−k+2, k²−k+4, …, k²+k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockIndex {
    pub k: u64,
    pub elements: Vec<u64>,
}

fn block_start(k: u64) -> Option<u64> {
    k.checked_mul(k)?.checked_sub(k)?.checked_add(2)
}

fn block_end(k: u64) -> Option<u64> {
    k.checked_mul(k)?.checked_add(k)
}

pub fn block(k: u64) -> Result<BlockIndex> {
    if k == 0 {
        return Err(Error::ZeroBlock);
    }
    let start = block_start(k).ok_or(Error::Overflow("block start"))?;
    block_end(k).ok_or(Error::Overflow("block end"))?;
    Ok(BlockIndex {
        k,
        elements: (0..k).map(|i| start + 2 * i).collect(),
    })
}

/// The `k` with `n ∈ I_k`, for even `n ≥ 2`.
pub fn block_of(n: u64) -> Option<u64> {
    if n < 2 || n % 2 == 1 {
        return None;
    }
    // n/2 lies in (T(k-1), T(k)] for triangular numbers T.
    let half = (n / 2) as u128;
    let t = ((8 * half + 1).isqrt() - 1) / 2;
    let k = if t * (t + 1) / 2 == half { t } else { t + 1 };
    Some(k as u64)
}

/// `h_kj`: ones on `I_k` minus its `j`-th element.
pub fn make_h_kj(k: u64, j: u64) -> Result<Hypothesis> {
    let b = block(k)?;
    if j == 0 || j > k {
        return Err(Error::OutOfRange { index: j, bound: k });
    }
    let drop = b.elements[(j - 1) as usize];
    Hypothesis::from_sorted(b.elements.into_iter().filter(|&x| x != drop).collect())
}

/// `h_a`: ones on `I_{f(a)} ∪ {2a+1}`, `a ≥ 1`.
pub fn make_h_a(a: u64, f: &EnumerableFunction) -> Result<Hypothesis> {
    if a == 0 {
        return Err(Error::OutsideDomain(0));
    }
    let k = f.eval(a)?;
    let marker = a
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("odd marker 2a+1"))?;
    let mut points = block(k)?.elements;
    points.push(marker);
    Ok(Hypothesis::from_points(points))
}

/// Membership in the block class over `f`: either `supp(h) ⊆ I_k` with
/// `k − 1` points, or `supp(h) = I_k ∪ {2a+1}` with `f(a) = k`.
pub fn block_class_membership(h: &Hypothesis, f: &EnumerableFunction) -> Result<Verdict> {
    if h.is_empty() {
        return Ok(Verdict::Yes);
    }
    let (evens, odds): (Vec<u64>, Vec<u64>) = h.support().iter().partition(|&&x| x % 2 == 0);
    let Some(k) = evens.first().and_then(|&x| block_of(x)) else {
        return Ok(Verdict::No);
    };
    if evens.iter().any(|&x| block_of(x) != Some(k)) {
        return Ok(Verdict::No);
    }
    match odds.as_slice() {
        [] => Ok(Verdict::from_bool(evens.len() as u64 == k - 1)),
        [odd] if evens.len() as u64 == k && *odd >= 3 => match f.eval((odd - 1) / 2) {
            Ok(y) => Ok(Verdict::from_bool(y == k)),
            Err(Error::NotYetEnumerated(_)) => Ok(Verdict::Unknown),
            Err(e) => Err(e),
        },
        _ => Ok(Verdict::No),
    }
}

/// The block class: every `h_kj` plus every `h_a`.
#[derive(Debug, Clone)]
pub struct BlockClass {
    pub f: Arc<EnumerableFunction>,
}

impl BlockClass {
    pub fn new(f: Arc<EnumerableFunction>) -> Self {
        Self { f }
    }

    /// Every `h_kj` with `I_k` meeting `{1, …, bound}`.
    pub fn intersecting_h_kj(bound: u64) -> Vec<Hypothesis> {
        (1u64..)
            .take_while(|&k| block_start(k).is_some_and(|s| s <= bound))
            .flat_map(|k| (1..=k).map(move |j| make_h_kj(k, j).expect("valid block index")))
            .collect()
    }
}

impl HypothesisClass for BlockClass {
    fn name(&self) -> String {
        format!("block:{}", self.f.name())
    }

    fn parameters(&self) -> serde_json::Value {
        json!({ "f": self.f.name() })
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        block_class_membership(h, &self.f)
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let mut out: Vec<Hypothesis> = Self::intersecting_h_kj(bound)
            .into_iter()
            .filter(|h| h.max_point().is_none_or(|m| m <= bound))
            .collect();
        out.push(Hypothesis::empty());
        for a in 1..=bound.saturating_sub(1) / 2 {
            let k = self.f.eval(a)?;
            if block_end(k).is_some_and(|end| end <= bound) {
                out.push(make_h_a(a, &self.f)?);
            }
        }
        Ok(canonical(out))
    }

    /// Needs `f`'s range to be decidable: for each block meeting the window,
    /// the unique `h_a` with `f(a) = k` is located through the preimage.
    fn covering_members(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let mut out = Self::intersecting_h_kj(bound);
        out.push(Hypothesis::empty());
        for a in 1..=bound.saturating_sub(1) / 2 {
            out.push(make_h_a(a, &self.f)?);
        }
        for k in (1u64..).take_while(|&k| block_start(k).is_some_and(|s| s <= bound)) {
            if let Some(a) = self.f.preimage(k)? {
                out.push(make_h_a(a, &self.f)?);
            }
        }
        Ok(canonical(out))
    }
}

/// Offset of the diagonal block `I_e` among the even numbers: `Σ_{e'<e} k_{e'}`
/// where `k_{e'}` is the second Cantor coordinate of `e'`.
fn diagonal_offset(e: u64) -> u128 {
    let (c, s) = decode_pair(e);
    let t = c as u128 + s as u128;
    let full = if t == 0 { 0 } else { (t - 1) * t * (t + 1) / 6 };
    let s = s as u128;
    full + if s == 0 { 0 } else { s * (s - 1) / 2 }
}

/// The block `I_e` of the diagonal construction: consecutive even numbers,
/// `|I_e| = k_e`, blocks in order of `e`.
pub fn diagonal_block(e: u64) -> Result<Vec<u64>> {
    let (_, k) = decode_pair(e);
    let offset = diagonal_offset(e);
    (1..=k as u128)
        .map(|i| u64::try_from(2 * (offset + i)).map_err(|_| Error::Overflow("diagonal block")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalMember {
    pub e: u64,
    pub s: u64,
    pub hypothesis: Hypothesis,
    pub tuple: Vec<u64>,
    #[serde(with = "crate::machines::bits")]
    pub output: Vec<bool>,
}

/// `h_es` for the `e`-th machine when it halts on its block within `budget`
/// steps (at the exact step `s`) with an output word of length `k_e`.
pub fn diagonal_hypothesis(e: u64, budget: u64) -> Result<Option<DiagonalMember>> {
    let (program, k) = enumerate_machine_pairs(e);
    let tuple = diagonal_block(e)?;
    match run_bounded(&program, &tuple, budget)? {
        RunOutcome::Halted { steps_used, output } if output.len() as u64 == k => {
            let marker = encode_pair(e, steps_used)
                .and_then(|p| p.checked_mul(2))
                .and_then(|p| p.checked_add(1))
                .ok_or(Error::Overflow("diagonal marker 2p(e,s)+1"))?;
            let mut points: Vec<u64> = tuple
                .iter()
                .zip(&output)
                .filter(|(_, &b)| b)
                .map(|(&x, _)| x)
                .collect();
            points.push(marker);
            Ok(Some(DiagonalMember {
                e,
                s: steps_used,
                hypothesis: Hypothesis::from_points(points),
                tuple,
                output,
            }))
        }
        _ => Ok(None),
    }
}

/// Decides membership in the diagonal class. The single odd point `2p(e,s)+1`
/// fixes `(e, s)`, so deciding costs one simulation of `s` steps.
pub fn diagonal_membership(h: &Hypothesis) -> Result<bool> {
    let mut odds = h.support().iter().filter(|&&x| x % 2 == 1);
    let (Some(&odd), None) = (odds.next(), odds.next()) else {
        return Ok(false);
    };
    let (e, s) = decode_pair((odd - 1) / 2);
    if s == 0 {
        return Ok(false);
    }
    let Ok(block) = diagonal_block(e) else {
        return Ok(false);
    };
    if h.support()
        .iter()
        .any(|&x| x % 2 == 0 && block.binary_search(&x).is_err())
    {
        return Ok(false);
    }
    Ok(diagonal_hypothesis(e, s)?.is_some_and(|m| m.s == s && m.hypothesis == *h))
}

/// The diagonal class. Membership is decidable; the class has no computable
/// covering set, so ERM-style learners reject it.
#[derive(Debug, Clone, Copy)]
pub struct DiagonalClass {
    pub budget: u64,
}

impl Default for DiagonalClass {
    fn default() -> Self {
        Self {
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl HypothesisClass for DiagonalClass {
    fn name(&self) -> String {
        "diagonal".into()
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        diagonal_membership(h).map(Verdict::from_bool)
    }

    /// Members whose odd marker is at most `bound`; each marker is checked by
    /// simulating its machine for exactly the encoded number of steps.
    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        check_budget("diagonal enumeration", bound as u128 / 2, self.budget)?;
        let mut out = Vec::new();
        for z in 0..=bound.saturating_sub(1) / 2 {
            let (e, s) = decode_pair(z);
            if s == 0 {
                continue;
            }
            if let Some(m) = diagonal_hypothesis(e, s)? {
                if m.s == s && m.hypothesis.max_point().is_some_and(|x| x <= bound) {
                    out.push(m.hypothesis);
                }
            }
        }
        Ok(canonical(out))
    }

    fn covering_members(&self, _bound: u64) -> Result<Vec<Hypothesis>> {
        Err(Error::Unsupported(self.name(), "a computable covering set"))
    }
}

/// A finite class given by its members.
#[derive(Debug, Clone)]
pub struct ExplicitClass {
    members: Vec<Hypothesis>,
}

impl ExplicitClass {
    pub fn new(members: Vec<Hypothesis>) -> Self {
        Self {
            members: canonical(members),
        }
    }

    pub fn members(&self) -> &[Hypothesis] {
        &self.members
    }
}

impl HypothesisClass for ExplicitClass {
    fn name(&self) -> String {
        "explicit".into()
    }

    fn parameters(&self) -> serde_json::Value {
        json!({ "size": self.members.len() })
    }

    fn membership(&self, h: &Hypothesis) -> Result<Verdict> {
        Ok(Verdict::from_bool(self.members.binary_search(h).is_ok()))
    }

    fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        Ok(self
            .members
            .iter()
            .filter(|h| h.max_point().is_none_or(|m| m <= bound))
            .cloned()
            .collect())
    }

    fn covering_members(&self, bound: u64) -> Result<Vec<Hypothesis>> {
        let mut seen = BTreeSet::new();
        Ok(self
            .members
            .iter()
            .filter(|h| seen.insert(h.truncate(bound)))
            .cloned()
            .collect())
    }
}

/// Parses a witness name: `all-ones`, `all-zeros`, or `machine:<path>` (a
/// program file, run with `budget` steps per tuple).
pub fn parse_witness(name: &str, k: usize, budget: u64) -> Result<Arc<dyn Witness>> {
    match name {
        "all-ones" => Ok(Arc::new(ConstantWitness::all_ones(k))),
        "all-zeros" => Ok(Arc::new(ConstantWitness::all_zeros(k))),
        _ => {
            let path = name
                .strip_prefix("machine:")
                .ok_or_else(|| Error::Parse(format!("unknown witness `{name}`")))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read program `{path}`: {e}")))?;
            Ok(Arc::new(MachineWitness {
                program: text.parse()?,
                k,
                budget,
            }))
        }
    }
}

/// Builds a class from its registry name:
/// `full`, `baseline-<d>`, `block:<f>`, `good:<witness>:<k>`,
/// `hat:<witness>:<k>` (baseline-`k` ∪ good) or `diagonal`.
pub fn parse_class(name: &str, budget: u64) -> Result<Arc<dyn HypothesisClass>> {
    let bad = || Error::Parse(format!("unknown class `{name}`"));
    if name == "full" {
        return Ok(Arc::new(FullClass::default()));
    }
    if name == "diagonal" {
        return Ok(Arc::new(DiagonalClass::default()));
    }
    if let Some(d) = name.strip_prefix("baseline-") {
        return Ok(Arc::new(baseline_class(d.parse().map_err(|_| bad())?)));
    }
    if let Some(f) = name.strip_prefix("block:") {
        return Ok(Arc::new(BlockClass::new(Arc::new(f.parse()?))));
    }
    let (kind, rest) = name.split_once(':').ok_or_else(bad)?;
    let (witness, k) = rest.rsplit_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    let good = GoodClass::new(parse_witness(witness, k, budget)?);
    match kind {
        "good" => Ok(Arc::new(good)),
        "hat" => Ok(Arc::new(HatClass {
            base: Arc::new(baseline_class(k)),
            good,
        })),
        _ => Err(bad()),
    }
}

/// Diagonal-class members for `e = 0..=max_e`, each simulated for at most
/// `budget` steps.
pub fn diagonal_members(max_e: u64, budget: u64) -> Result<Vec<DiagonalMember>> {
    let mut out = Vec::new();
    for e in 0..=max_e {
        if let Some(m) = diagonal_hypothesis(e, budget)? {
            out.push(m);
        }
    }
    Ok(out)
}
