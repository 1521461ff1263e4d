//! Learners: ERM over a class's covering set, ERM over good hypotheses, the
//! asymptotic ERM for the block class, and the lift that turns any proper
//! learner into an asymptotic ERM by replaying it on every resample.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    enumerate_good, make_h_a, make_h_kj, parse_class, parse_witness, BlockClass, HypothesisClass,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::dims::Witness;
use crate::error::{Error, Result};
use crate::hypothesis::Hypothesis;
use crate::loss::{empirical_distribution, mistakes};
use crate::machines::{EnumerableFunction, Verdict};
use crate::rational::{self, Rational};
use crate::sample::{enumerate_samples, Sample, DEFAULT_SAMPLE_BUDGET};

/// A deterministic map from samples to hypotheses.
pub trait Learner: Send + Sync + fmt::Debug {
    fn name(&self) -> String;

    /// Whether every output is a member of the learner's target class.
    fn is_proper(&self) -> bool;

    fn learn(&self, sample: &Sample) -> Result<Hypothesis>;
}

/// What a learner call produced. `epsilon` is the suboptimality guarantee on
/// `L_S` when one is known; `None` means it is unknown or uncomputable, in
/// which case `epsilon_note` says which.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LearnReport {
    pub output: Hypothesis,
    #[serde(with = "rational::as_opt_string")]
    pub achieved_loss: Option<Rational>,
    #[serde(with = "rational::as_opt_string")]
    pub epsilon: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_note: Option<&'static str>,
    pub candidate_count: usize,
}

/// The asymptotic ERM's report is the same shape.
pub type AsymptoticErmReport = LearnReport;

fn loss_of(mistakes: u64, sample: &Sample) -> Option<Rational> {
    (!sample.is_empty()).then(|| rational::ratio(mistakes, sample.len() as u64))
}

/// Least-loss candidate, ties broken by canonical order. `None` if there are
/// no candidates.
pub fn argmin_empirical(candidates: &[Hypothesis], sample: &Sample) -> Option<(Hypothesis, u64)> {
    candidates
        .iter()
        .map(|h| (mistakes(h, sample), h))
        .min()
        .map(|(m, h)| (h.clone(), m))
}

fn minimize(candidates: Vec<Hypothesis>, sample: &Sample, class: &str) -> Result<LearnReport> {
    let (output, m) = argmin_empirical(&candidates, sample)
        .ok_or_else(|| Error::Unsupported(class.to_string(), "ERM: no members within reach"))?;
    Ok(LearnReport {
        output,
        achieved_loss: loss_of(m, sample),
        epsilon: Some(rational::zero()),
        epsilon_note: None,
        candidate_count: candidates.len(),
    })
}

/// ERM over the class's covering set for the sample's largest point. Exact
/// whenever the class provides a covering set; the empty sample yields the
/// canonical least candidate.
pub fn erm_bounded(class: &dyn HypothesisClass, sample: &Sample) -> Result<LearnReport> {
    let candidates = class.covering_members(sample.max_point())?;
    minimize(candidates, sample, &class.name())
}

/// ERM over good hypotheses with support inside `{0, …, max point of S}`;
/// its loss equals the minimum over the whole extended class.
pub fn erm_good(sample: &Sample, w: &dyn Witness, k: usize, budget: u64) -> Result<LearnReport> {
    let candidates = enumerate_good(sample.max_point(), w, k, budget)?;
    minimize(candidates, sample, "good")
}

#[derive(Debug, Clone)]
pub struct ErmLearner {
    pub class: Arc<dyn HypothesisClass>,
}

impl Learner for ErmLearner {
    fn name(&self) -> String {
        format!("erm[{}]", self.class.name())
    }

    fn is_proper(&self) -> bool {
        true
    }

    fn learn(&self, sample: &Sample) -> Result<Hypothesis> {
        erm_bounded(self.class.as_ref(), sample).map(|r| r.output)
    }
}

#[derive(Debug, Clone)]
pub struct GoodErm {
    pub witness: Arc<dyn Witness>,
    pub budget: u64,
}

impl GoodErm {
    pub fn new(witness: Arc<dyn Witness>) -> Self {
        Self {
            witness,
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl Learner for GoodErm {
    fn name(&self) -> String {
        format!("erm-good[{}]", self.witness.name())
    }

    fn is_proper(&self) -> bool {
        true
    }

    fn learn(&self, sample: &Sample) -> Result<Hypothesis> {
        erm_good(sample, self.witness.as_ref(), self.witness.k(), self.budget).map(|r| r.output)
    }
}

/// `ε_m = 1 / min[f(ℕ) ∖ f({1, …, m})]`, computable only when the range of
/// `f` is decidable.
pub fn epsilon_block(m: u64, f: &EnumerableFunction) -> Result<Rational> {
    if !f.is_surrogate() {
        return Err(Error::Uncomputable("the block-class schedule ε_m"));
    }
    let image: BTreeSet<u64> = (1..=m).map(|a| f.eval(a)).collect::<Result<_>>()?;
    let least = (1u64..)
        .find(|&y| !image.contains(&y) && f.range_contains(y) == Verdict::Yes)
        .expect("f has infinite range");
    Ok(rational::reciprocal(least))
}

/// The finite candidate set `H_S` for the block class: one member that is
/// zero on `{1, …, M}`, every `h_kj` whose block meets `{1, …, M}`, and
/// `h_1, …, h_{max(m, M)}`.
pub fn block_candidates(sample: &Sample, f: &EnumerableFunction) -> Result<Vec<Hypothesis>> {
    let m = sample.len() as u64;
    let big_m = sample.max_point();
    let mut out = vec![make_h_kj(big_m.max(1), 1)?];
    out.extend(BlockClass::intersecting_h_kj(big_m));
    for a in 1..=m.max(big_m) {
        out.push(make_h_a(a, f)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Minimizes `L_S` over `H_S`. With decidable range the report carries the
/// exact `ε_m`; for a dovetailed `f` the schedule is reported as
/// uncomputable.
pub fn asymptotic_erm_block(
    sample: &Sample,
    f: &EnumerableFunction,
) -> Result<AsymptoticErmReport> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let candidates = block_candidates(sample, f)?;
    let mut report = minimize(candidates, sample, "block")?;
    match epsilon_block(sample.len() as u64, f) {
        Ok(eps) => report.epsilon = Some(eps),
        Err(Error::Uncomputable(_)) => {
            report.epsilon = None;
            report.epsilon_note = Some("uncomputable schedule");
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct AsymptoticBlockErm {
    pub f: Arc<EnumerableFunction>,
}

impl Learner for AsymptoticBlockErm {
    fn name(&self) -> String {
        format!("asym-block[{}]", self.f.name())
    }

    fn is_proper(&self) -> bool {
        true
    }

    fn learn(&self, sample: &Sample) -> Result<Hypothesis> {
        if sample.is_empty() {
            return Ok(Hypothesis::empty());
        }
        asymptotic_erm_block(sample, &self.f).map(|r| r.output)
    }
}

/// Sample-complexity table `m(1) ≤ m(2) ≤ …` of a PAC learner. The induced
/// schedule is `ε_m = 1/n` for `m(n) ≤ m < m(n+1)`, `1` below `m(1)`, and
/// `1/N` from the last entry `m(N)` on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SampleComplexityTable(pub Vec<u64>);

impl SampleComplexityTable {
    pub fn epsilon(&self, m: u64) -> Rational {
        let n = self.0.iter().take_while(|&&mn| mn <= m).count() as u64;
        if n == 0 {
            rational::one()
        } else {
            rational::reciprocal(n)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    #[serde(flatten)]
    pub report: LearnReport,
    /// `|Ŝ|`, the number of resamples the inner learner was run on.
    pub resamples: usize,
}

/// Runs `inner` on every sample of size `|S|` drawable from `D(S)` and keeps
/// the output with least loss on `S` (ties by canonical order). Since
/// `S ∈ Ŝ`, the result is never worse on `S` than `inner(S)`.
pub fn lift_to_asymptotic_erm(
    inner: &dyn Learner,
    sample: &Sample,
    schedule: Option<&SampleComplexityTable>,
    budget: u64,
) -> Result<LiftReport> {
    if sample.is_empty() {
        let output = inner.learn(sample)?;
        return Ok(LiftReport {
            report: LearnReport {
                output,
                achieved_loss: None,
                epsilon: schedule.map(|s| s.epsilon(0)),
                epsilon_note: schedule
                    .is_none()
                    .then_some("unknown: no sample-complexity table"),
                candidate_count: 1,
            },
            resamples: 1,
        });
    }
    let dist = empirical_distribution(sample)?;
    let resamples = enumerate_samples(&dist, sample.len(), budget)?;
    let outputs: Vec<Hypothesis> = resamples
        .par_iter()
        .map(|s| inner.learn(s))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<Hypothesis> = outputs.into_iter().collect();
    let candidates: Vec<Hypothesis> = distinct.into_iter().collect();
    let (output, m) = argmin_empirical(&candidates, sample).expect("at least one resample");
    let epsilon = schedule.map(|s| s.epsilon(sample.len() as u64));
    Ok(LiftReport {
        report: LearnReport {
            output,
            achieved_loss: loss_of(m, sample),
            epsilon_note: epsilon
                .is_none()
                .then_some("unknown: no sample-complexity table"),
            epsilon,
            candidate_count: candidates.len(),
        },
        resamples: resamples.len(),
    })
}

#[derive(Debug, Clone)]
pub struct LiftedLearner {
    pub inner: Arc<dyn Learner>,
    pub schedule: Option<SampleComplexityTable>,
    pub budget: u64,
}

impl LiftedLearner {
    pub fn new(inner: Arc<dyn Learner>) -> Self {
        Self {
            inner,
            schedule: None,
            budget: DEFAULT_SAMPLE_BUDGET,
        }
    }
}

impl Learner for LiftedLearner {
    fn name(&self) -> String {
        format!("lift[{}]", self.inner.name())
    }

    fn is_proper(&self) -> bool {
        self.inner.is_proper()
    }

    fn learn(&self, sample: &Sample) -> Result<Hypothesis> {
        lift_to_asymptotic_erm(
            self.inner.as_ref(),
            sample,
            self.schedule.as_ref(),
            self.budget,
        )
        .map(|r| r.report.output)
    }
}

/// Builds a learner from its registry name for a class given by its registry
/// name: `erm` (any class with a covering set), `erm-good` (`good:` and
/// `hat:` classes), `asym-block` (`block:` classes), and `lift` or
/// `lift:<inner>` (the inner learner, default `erm`, lifted over resamples).
pub fn parse_learner(name: &str, class: &str, budget: u64) -> Result<Arc<dyn Learner>> {
    if let Some(rest) = name.strip_prefix("lift") {
        let inner = match rest {
            "" => "erm",
            _ => rest
                .strip_prefix(':')
                .ok_or_else(|| Error::Parse(format!("unknown learner `{name}`")))?,
        };
        return Ok(Arc::new(LiftedLearner::new(parse_learner(
            inner, class, budget,
        )?)));
    }
    let mismatch = || {
        Error::Config(format!(
            "learner `{name}` does not apply to class `{class}`"
        ))
    };
    match name {
        "erm" => Ok(Arc::new(ErmLearner {
            class: parse_class(class, budget)?,
        })),
        "erm-good" => {
            let rest = class
                .strip_prefix("good:")
                .or_else(|| class.strip_prefix("hat:"))
                .ok_or_else(mismatch)?;
            let (witness, k) = rest.rsplit_once(':').ok_or_else(mismatch)?;
            let k = k.parse().map_err(|_| mismatch())?;
            Ok(Arc::new(GoodErm {
                witness: parse_witness(witness, k, budget)?,
                budget,
            }))
        }
        "asym-block" => {
            let f = class.strip_prefix("block:").ok_or_else(mismatch)?;
            Ok(Arc::new(AsymptoticBlockErm {
                f: Arc::new(f.parse()?),
            }))
        }
        _ => Err(Error::Parse(format!("unknown learner `{name}`"))),
    }
}
