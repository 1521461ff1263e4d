//! Seeded Monte-Carlo experiments (PAC success rate, uniform convergence,
//! sample-complexity curves) and the two computability demonstrations.
//!
//! Every trial draws from its own ChaCha stream derived from
//! `(seed, m index, trial index)`, so results do not depend on scheduling.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{
    block, block_class_membership, diagonal_hypothesis, diagonal_membership, parse_class,
    HypothesisClass, DEFAULT_ENUMERATION_BUDGET,
};
use crate::dims::{verify_witness, MachineWitness};
use crate::error::{Error, Result};
use crate::hypothesis::Hypothesis;
use crate::learners::{parse_learner, Learner};
use crate::loss::{mistakes, true_loss};
use crate::machines::{index_of, run_bounded, EnumerableFunction, Program, RunOutcome, Verdict};
use crate::rational::{self, Rational};
use crate::sample::{rng_for_stream, Distribution, Sample, GENERATOR_ID};

pub const DEFAULT_TRIALS: u64 = 1000;

fn default_trials() -> u64 {
    DEFAULT_TRIALS
}

fn default_learner() -> String {
    "erm".into()
}

fn default_n() -> u64 {
    3
}

fn default_n_grid() -> Vec<u64> {
    vec![2, 3, 5]
}

fn default_m_grid() -> Vec<u64> {
    (0..9).map(|i| 1 << i).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    /// PAC success: `L_D(A(S)) ≤ inf_H L_D + 1/n`.
    #[default]
    Pac,
    /// Uniform convergence: `|L_D(h) − L_S(h)| ≤ 1/n` for every member simultaneously.
    Uniform,
    /// Smallest tested `m` reaching success rate `1 − 1/n`, per `n`.
    Curve,
}

/// An experiment read from JSON. Only `class` and `distribution` are
/// required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub kind: ExperimentKind,
    pub class: String,
    #[serde(default = "default_learner")]
    pub learner: String,
    pub distribution: Distribution,
    /// Accuracy/confidence index for `pac` and `uniform`.
    #[serde(default = "default_n")]
    pub n: u64,
    /// Indices estimated by `curve`.
    #[serde(default = "default_n_grid")]
    pub n_grid: Vec<u64>,
    #[serde(default = "default_m_grid")]
    pub m: Vec<u64>,
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    /// Include one record per trial in the result.
    #[serde(default)]
    pub records: bool,
}

impl ExperimentConfig {
    pub fn new(class: &str, distribution: Distribution) -> Self {
        Self {
            kind: ExperimentKind::Pac,
            class: class.to_string(),
            learner: default_learner(),
            distribution,
            n: default_n(),
            n_grid: default_n_grid(),
            m: default_m_grid(),
            trials: DEFAULT_TRIALS,
            seed: 0,
            budget: None,
            records: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.n == 0 || self.n_grid.contains(&0) {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if self.m.is_empty() {
            return Err(Error::Config("the m grid is empty".into()));
        }
        if self.kind == ExperimentKind::Curve && self.n_grid.is_empty() {
            return Err(Error::Config("the n grid is empty".into()));
        }
        if self.kind == ExperimentKind::Uniform && self.m.contains(&0) {
            return Err(Error::Config("uniform convergence needs m ≥ 1".into()));
        }
        Ok(())
    }

    fn budget(&self) -> u64 {
        self.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub n: u64,
    pub m: u64,
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub m: u64,
    pub trial: u64,
    /// `L_D(A(S))` for `pac`/`curve`, the supremum deviation for `uniform`.
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveEstimate {
    pub n: u64,
    /// Smallest tested `m` with success rate `≥ 1 − 1/n`; `None` if no
    /// grid point reached it.
    pub m_estimate: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub note: String,
    pub estimates: Vec<CurveEstimate>,
    /// Least-squares `c` in `m_n ≈ c · n² ln n` over the estimates with
    /// `n ≥ 2`.
    pub fitted_constant: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub kind: ExperimentKind,
    pub generator_id: String,
    pub seed: u64,
    /// The largest point of `D`; the infimum is taken over a covering set
    /// for `{0, …, reach}`.
    pub reach: u64,
    pub members_enumerated: usize,
    #[serde(with = "rational::as_string")]
    pub inf_loss: Rational,
    pub rows: Vec<RateRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trial_records: Vec<TrialRecord>,
    pub config: ExperimentConfig,
}

impl ExperimentResult {
    /// One row per `(n, m)`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Config(format!("csv: {e}"));
        w.write_record([
            "m",
            "trials",
            "successes",
            "rate",
            "inf_loss_num",
            "inf_loss_den",
            "seed",
            "generator_id",
            "n",
        ])
        .map_err(io)?;
        for row in &self.rows {
            w.write_record([
                row.m.to_string(),
                row.trials.to_string(),
                row.successes.to_string(),
                row.rate.to_string(),
                self.inf_loss.numer().to_string(),
                self.inf_loss.denom().to_string(),
                self.seed.to_string(),
                self.generator_id.clone(),
                row.n.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Config(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// Everything a run needs, resolved from the config.
struct Setup {
    class: Arc<dyn HypothesisClass>,
    members: Vec<Hypothesis>,
    member_losses: Vec<Rational>,
    inf_loss: Rational,
}

fn setup(cfg: &ExperimentConfig) -> Result<Setup> {
    cfg.validate()?;
    let class = parse_class(&cfg.class, cfg.budget())?;
    let reach = cfg.distribution.max_point();
    let members = class.covering_members(reach).map_err(|e| {
        Error::Config(format!(
            "cannot certify inf over `{}` for points up to {reach}: {e}",
            cfg.class
        ))
    })?;
    let member_losses: Vec<Rational> = members
        .iter()
        .map(|h| true_loss(h, &cfg.distribution))
        .collect();
    let inf_loss = member_losses.iter().min().cloned().ok_or_else(|| {
        Error::Config(format!("class `{}` has no members within reach", cfg.class))
    })?;
    Ok(Setup {
        class,
        members,
        member_losses,
        inf_loss,
    })
}

fn stream_id(m_index: usize, trial: u64) -> u64 {
    ((m_index as u64) << 32) | trial
}

/// Per-trial values for one `m`, in trial order.
fn run_trials<F>(cfg: &ExperimentConfig, m_index: usize, per_trial: F) -> Result<Vec<Rational>>
where
    F: Fn(&Sample) -> Result<Rational> + Sync,
{
    let sampler = cfg.distribution.sampler();
    let m = cfg.m[m_index] as usize;
    (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng_for_stream(cfg.seed, stream_id(m_index, t));
            per_trial(&sampler.draw_sample(m, &mut rng))
        })
        .collect()
}

fn learner_losses(cfg: &ExperimentConfig, learner: &dyn Learner) -> Result<Vec<Vec<Rational>>> {
    (0..cfg.m.len())
        .map(|i| {
            run_trials(cfg, i, |s| {
                let h = learner.learn(s)?;
                Ok(true_loss(&h, &cfg.distribution))
            })
        })
        .collect()
}

fn row(n: u64, m: u64, trials: u64, successes: u64) -> RateRow {
    RateRow {
        n,
        m,
        trials,
        successes,
        rate: successes as f64 / trials as f64,
    }
}

fn records(cfg: &ExperimentConfig, values: &[Vec<Rational>]) -> Vec<TrialRecord> {
    if !cfg.records {
        return Vec::new();
    }
    values
        .iter()
        .zip(&cfg.m)
        .flat_map(|(vs, &m)| {
            vs.iter().enumerate().map(move |(t, v)| TrialRecord {
                m,
                trial: t as u64,
                value: v.clone(),
            })
        })
        .collect()
}

fn result(
    cfg: &ExperimentConfig,
    kind: ExperimentKind,
    setup: &Setup,
    rows: Vec<RateRow>,
    curve: Option<CurveReport>,
    values: &[Vec<Rational>],
) -> ExperimentResult {
    let mut config = cfg.clone();
    config.kind = kind;
    ExperimentResult {
        kind,
        generator_id: GENERATOR_ID.to_string(),
        seed: cfg.seed,
        reach: cfg.distribution.max_point(),
        members_enumerated: setup.members.len(),
        inf_loss: setup.inf_loss.clone(),
        rows,
        curve,
        trial_records: records(cfg, values),
        config,
    }
}

fn count_within(values: &[Rational], bound: &Rational) -> u64 {
    values.iter().filter(|v| *v <= bound).count() as u64
}

fn build_learner(cfg: &ExperimentConfig, setup: &Setup) -> Result<Arc<dyn Learner>> {
    let learner = parse_learner(&cfg.learner, &cfg.class, cfg.budget())?;
    if cfg.learner == "erm" {
        // Reuse the class already built for the infimum.
        return Ok(Arc::new(crate::learners::ErmLearner {
            class: setup.class.clone(),
        }));
    }
    Ok(learner)
}

/// PAC success rate: per `m`, the fraction of trials with
/// `L_D(A(S)) ≤ inf_H L_D(h) + 1/n`, each comparison exact.
pub fn pac_success_rate(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let setup = setup(cfg)?;
    let learner = build_learner(cfg, &setup)?;
    let values = learner_losses(cfg, learner.as_ref())?;
    let bound = &setup.inf_loss + rational::reciprocal(cfg.n);
    let rows = values
        .iter()
        .zip(&cfg.m)
        .map(|(vs, &m)| row(cfg.n, m, cfg.trials, count_within(vs, &bound)))
        .collect();
    Ok(result(
        cfg,
        ExperimentKind::Pac,
        &setup,
        rows,
        None,
        &values,
    ))
}

/// Uniform-convergence rate: per `m`, the fraction of trials where every member's empirical
/// loss is within `1/n` of its true loss. The covering set stands in for the
/// class: members agreeing on the support of `D` have equal losses.
pub fn uniform_convergence_rate(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let mut cfg = cfg.clone();
    cfg.kind = ExperimentKind::Uniform;
    let setup = setup(&cfg)?;
    let values: Vec<Vec<Rational>> = (0..cfg.m.len())
        .map(|i| {
            let m = cfg.m[i];
            run_trials(&cfg, i, |s| {
                let sup = setup
                    .members
                    .iter()
                    .zip(&setup.member_losses)
                    .map(|(h, ld)| rational::abs(&(ld - rational::ratio(mistakes(h, s), m))))
                    .max()
                    .expect("nonempty covering set");
                Ok(sup)
            })
        })
        .collect::<Result<_>>()?;
    let bound = rational::reciprocal(cfg.n);
    let rows = values
        .iter()
        .zip(&cfg.m)
        .map(|(vs, &m)| row(cfg.n, m, cfg.trials, count_within(vs, &bound)))
        .collect();
    Ok(result(
        &cfg,
        ExperimentKind::Uniform,
        &setup,
        rows,
        None,
        &values,
    ))
}

/// Least-squares fit of `m ≈ c · n² ln n` through the origin.
pub fn fit_n2_log_n(points: &[(u64, u64)]) -> Option<f64> {
    let (num, den) = points
        .iter()
        .filter(|(n, _)| *n >= 2)
        .map(|&(n, m)| {
            let g = (n * n) as f64 * (n as f64).ln();
            (m as f64 * g, g * g)
        })
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    (den > 0.0).then(|| num / den)
}

/// For each `n` in the grid, the smallest tested `m` whose PAC success rate
/// reaches `1 − 1/n`. An estimate over the grid, not a certified sample
/// complexity; all `n` share the same trials.
pub fn sample_complexity_curve(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let setup = setup(cfg)?;
    let learner = build_learner(cfg, &setup)?;
    let values = learner_losses(cfg, learner.as_ref())?;
    let mut rows = Vec::new();
    let mut estimates = Vec::new();
    for &n in &cfg.n_grid {
        let bound = &setup.inf_loss + rational::reciprocal(n);
        let mut estimate = None;
        for (vs, &m) in values.iter().zip(&cfg.m) {
            let successes = count_within(vs, &bound);
            if estimate.is_none() && successes * n >= cfg.trials * (n - 1) {
                estimate = Some(m);
            }
            rows.push(row(n, m, cfg.trials, successes));
        }
        estimates.push(CurveEstimate {
            n,
            m_estimate: estimate,
        });
    }
    let fitted: Vec<(u64, u64)> = estimates
        .iter()
        .filter_map(|e| e.m_estimate.map(|m| (e.n, m)))
        .collect();
    let curve = CurveReport {
        note: "estimate over the tested m grid".into(),
        fitted_constant: fit_n2_log_n(&fitted),
        estimates,
    };
    Ok(result(
        cfg,
        ExperimentKind::Curve,
        &setup,
        rows,
        Some(curve),
        &values,
    ))
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    match cfg.kind {
        ExperimentKind::Pac => pac_success_rate(cfg),
        ExperimentKind::Uniform => uniform_convergence_rate(cfg),
        ExperimentKind::Curve => sample_complexity_curve(cfg),
    }
}

/// The counterexample the diagonal class builds against a claimed witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalizationReport {
    pub program: String,
    pub program_code: u64,
    pub k: usize,
    pub e: u64,
    pub s: u64,
    pub tuple: Vec<u64>,
    #[serde(with = "crate::machines::bits")]
    pub witness_output: Vec<bool>,
    pub hypothesis: Hypothesis,
    /// `h_es` passes the diagonal membership decision.
    pub member: bool,
    /// `h_es` realizes the witness's forbidden pattern on the tuple.
    pub agrees: bool,
    /// `verify_witness` rejects the witness on `({h_es}, {tuple})`.
    pub witness_refuted: bool,
}

/// Finds the program's own index `e` (with `k_e = k+1`), runs it on the
/// block `I_e` and returns `h_es`, which lies in the diagonal class yet
/// realizes the pattern the program claims no member realizes.
pub fn diagonalization_demo(
    program: &Program,
    k: usize,
    budget: u64,
) -> Result<DiagonalizationReport> {
    let e = index_of(program, k as u64 + 1)?;
    let tuple = crate::classes::diagonal_block(e)?;
    match run_bounded(program, &tuple, budget)? {
        RunOutcome::Running { .. } => return Err(Error::NotHalted { budget }),
        RunOutcome::Halted { output, .. } if output.len() != k + 1 => {
            return Err(Error::ArityMismatch {
                expected: k + 1,
                got: output.len(),
            })
        }
        RunOutcome::Halted { .. } => {}
    }
    let m = diagonal_hypothesis(e, budget)?.expect("halting run with a full-length output");
    let witness = MachineWitness {
        program: program.clone(),
        k,
        budget,
    };
    let member = diagonal_membership(&m.hypothesis)?;
    let agrees = m.hypothesis.pattern(&m.tuple) == m.output;
    let witness_refuted = !verify_witness(
        &witness,
        std::slice::from_ref(&m.hypothesis),
        std::slice::from_ref(&m.tuple),
    )?;
    Ok(DiagonalizationReport {
        program: program.to_string(),
        program_code: program.encode()?,
        k,
        e,
        s: m.s,
        tuple: m.tuple,
        witness_output: m.output,
        hypothesis: m.hypothesis,
        member,
        agrees,
        witness_refuted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub zero_loss: bool,
    pub in_range: bool,
    pub k: u64,
    pub f: String,
    pub learner: String,
    pub sample_size: usize,
    pub output: Hypothesis,
}

/// Feeds a block-class learner the sample listing `I_k` once, all labeled 1.
/// A zero-loss proper output exists iff `k ∈ f(ℕ)`, so a correct ERM
/// decides the range of `f`.
pub fn scpac_obstruction_demo(
    k: u64,
    erm: &dyn Learner,
    f: &EnumerableFunction,
) -> Result<ObstructionReport> {
    if !f.is_surrogate() {
        return Err(Error::Unsupported(
            f.name(),
            "the obstruction demo (range must be decidable)",
        ));
    }
    if !erm.is_proper() {
        return Err(Error::ImproperOutput(format!(
            "{} is not proper",
            erm.name()
        )));
    }
    let sample = Sample::from_pairs(block(k)?.elements.iter().map(|&x| (x, 1)));
    let output = erm.learn(&sample)?;
    if block_class_membership(&output, f)? != Verdict::Yes {
        return Err(Error::ImproperOutput(format!(
            "{output:?} is not in block:{}",
            f.name()
        )));
    }
    Ok(ObstructionReport {
        zero_loss: mistakes(&output, &sample) == 0,
        in_range: f.range_contains(k).is_yes(),
        k,
        f: f.name(),
        learner: erm.name(),
        sample_size: sample.len(),
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::BlockClass;
    use crate::learners::ErmLearner;
    use crate::machines::constant_program;
    use crate::rational::ratio;
    use crate::sample::LabeledExample;

    fn separable() -> Distribution {
        Distribution::new([
            (LabeledExample::new(0, true), ratio(1, 2)),
            (LabeledExample::new(1, false), ratio(1, 2)),
        ])
        .unwrap()
    }

    #[test]
    fn realizable_erm_always_succeeds() {
        let mut cfg = ExperimentConfig::new("baseline-1", separable());
        cfg.m = vec![16];
        cfg.trials = 100;
        cfg.seed = 42;
        let r = pac_success_rate(&cfg).unwrap();
        assert_eq!(r.inf_loss, ratio(0, 1));
        assert_eq!(r.rows[0].successes, 100);
    }

    #[test]
    fn single_trial_rate_is_zero_or_one() {
        let mut cfg = ExperimentConfig::new("baseline-0", separable());
        cfg.trials = 1;
        cfg.m = vec![1, 3];
        for row in pac_success_rate(&cfg).unwrap().rows {
            assert!(row.rate == 0.0 || row.rate == 1.0);
        }
    }

    #[test]
    fn reruns_are_identical() {
        let mut cfg = ExperimentConfig::new("baseline-1", separable());
        cfg.trials = 50;
        cfg.records = true;
        cfg.seed = 7;
        let a = serde_json::to_string(&pac_success_rate(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&pac_success_rate(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
        cfg.seed = 8;
        let c = serde_json::to_string(&pac_success_rate(&cfg).unwrap()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn config_validation() {
        let mut cfg = ExperimentConfig::new("full", separable());
        cfg.kind = ExperimentKind::Uniform;
        cfg.m = vec![0, 4];
        assert!(matches!(
            uniform_convergence_rate(&cfg),
            Err(Error::Config(_))
        ));
        cfg.m = vec![4];
        cfg.trials = 0;
        assert!(run_experiment(&cfg).is_err());
        let cfg = ExperimentConfig::new("diagonal", separable());
        assert!(matches!(pac_success_rate(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn uniform_convergence_single_member() {
        // baseline-0 is {∅}: the sup reduces to one hypothesis.
        let mut cfg = ExperimentConfig::new("baseline-0", separable());
        cfg.m = vec![10];
        cfg.trials = 400;
        cfg.n = 5;
        cfg.seed = 3;
        let r = uniform_convergence_rate(&cfg).unwrap();
        assert_eq!(r.members_enumerated, 1);
        // L_S(∅) = (#label-1 draws)/10; within 1/5 of 1/2 iff 3..=7 ones.
        let p: f64 = (3..=7u64)
            .map(|j| {
                let c = (0..j).fold(1.0, |acc, i| acc * (10 - i) as f64 / (i + 1) as f64);
                c / 1024.0
            })
            .sum();
        let sigma = (p * (1.0 - p) / 400.0).sqrt();
        assert!(
            (r.rows[0].rate - p).abs() <= 3.0 * sigma,
            "{} vs {p}",
            r.rows[0].rate
        );
    }

    #[test]
    fn uniform_rate_trends_up_in_m() {
        let d = Distribution::uniform(&[
            LabeledExample::new(0, true),
            LabeledExample::new(1, false),
            LabeledExample::new(2, true),
            LabeledExample::new(3, false),
        ])
        .unwrap();
        let mut cfg = ExperimentConfig::new("baseline-1", d);
        cfg.m = vec![10, 20, 40, 80];
        cfg.trials = 500;
        cfg.n = 4;
        let rows = uniform_convergence_rate(&cfg).unwrap().rows;
        let slack = 3.0 * (0.25f64 / 500.0).sqrt();
        for w in rows.windows(2) {
            assert!(w[1].rate + slack >= w[0].rate, "{rows:?}");
        }
        assert!(rows[3].rate > rows[0].rate);
    }

    #[test]
    fn curve_on_point_mass_is_immediate() {
        let d = Distribution::point_mass(LabeledExample::new(2, true));
        let mut cfg = ExperimentConfig::new("baseline-1", d);
        cfg.kind = ExperimentKind::Curve;
        cfg.m = vec![1, 2, 4];
        cfg.trials = 20;
        let r = run_experiment(&cfg).unwrap();
        let curve = r.curve.unwrap();
        assert!(curve.estimates.iter().all(|e| e.m_estimate == Some(1)));
    }

    #[test]
    fn curve_on_baseline_2() {
        let points: Vec<LabeledExample> = (0..6)
            .map(|x| LabeledExample::new(x, x == 1 || x == 4))
            .collect();
        let mut cfg = ExperimentConfig::new("baseline-2", Distribution::uniform(&points).unwrap());
        cfg.kind = ExperimentKind::Curve;
        cfg.n_grid = vec![2, 3, 4];
        cfg.m = vec![1, 2, 4, 8, 16, 32, 64];
        cfg.trials = 300;
        cfg.seed = 11;
        let r = run_experiment(&cfg).unwrap();
        let curve = r.curve.clone().unwrap();
        let est: Vec<u64> = curve
            .estimates
            .iter()
            .map(|e| e.m_estimate.unwrap())
            .collect();
        // Looser accuracy never needs more samples.
        assert!(est.windows(2).all(|w| w[0] <= w[1]), "{est:?}");
        let c = curve.fitted_constant.unwrap();
        for (n, m) in [2u64, 3, 4].iter().zip(&est) {
            let g = (n * n) as f64 * (*n as f64).ln();
            assert!((*m as f64) <= 4.0 * c * g + 64.0);
        }
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 1 + 3 * 7);
        assert!(
            csv.starts_with("m,trials,successes,rate,inf_loss_num,inf_loss_den,seed,generator_id")
        );
    }

    #[test]
    fn fit_through_origin() {
        let g = |n: u64| (n * n) as f64 * (n as f64).ln();
        let pts: Vec<(u64, u64)> = [2u64, 3, 5]
            .iter()
            .map(|&n| (n, (3.0 * g(n)).round() as u64))
            .collect();
        assert!((fit_n2_log_n(&pts).unwrap() - 3.0).abs() < 0.05);
        assert_eq!(fit_n2_log_n(&[(1, 5)]), None);
    }

    #[test]
    fn diagonalization_examples() {
        let ones = diagonalization_demo(&constant_program(true, 2).unwrap(), 1, 1000).unwrap();
        assert_eq!(ones.tuple.len(), 2);
        assert!(ones.tuple.iter().all(|&x| ones.hypothesis.eval(x)));
        assert!(ones.member && ones.agrees && ones.witness_refuted);

        let zeros = diagonalization_demo(&constant_program(false, 1).unwrap(), 0, 1000).unwrap();
        let marker = 2 * crate::machines::encode_pair(zeros.e, zeros.s).unwrap() + 1;
        assert!(!zeros.hypothesis.eval(zeros.tuple[0]));
        assert_eq!(zeros.hypothesis.support(), &[marker]);
        assert!(zeros.member && zeros.agrees && zeros.witness_refuted);

        let looping: Program = "DJZ 0 0".parse().unwrap();
        assert!(matches!(
            diagonalization_demo(&looping, 0, 50),
            Err(Error::NotHalted { .. })
        ));
        let short = constant_program(true, 1).unwrap();
        assert!(matches!(
            diagonalization_demo(&short, 1, 50),
            Err(Error::ArityMismatch { .. })
        ));
    }

    fn block_erm(f: &str) -> (ErmLearner, EnumerableFunction) {
        let class: Arc<dyn HypothesisClass> =
            Arc::new(BlockClass::new(Arc::new(f.parse().unwrap())));
        (ErmLearner { class }, f.parse().unwrap())
    }

    #[test]
    fn obstruction_examples() {
        let (erm, inc) = block_erm("inc");
        assert!(scpac_obstruction_demo(3, &erm, &inc).unwrap().zero_loss);
        assert!(!scpac_obstruction_demo(1, &erm, &inc).unwrap().zero_loss);
        let (erm, double) = block_erm("double");
        assert!(!scpac_obstruction_demo(5, &erm, &double).unwrap().zero_loss);
        assert!(scpac_obstruction_demo(6, &erm, &double).unwrap().zero_loss);
    }

    #[derive(Debug)]
    struct Improper;

    impl Learner for Improper {
        fn name(&self) -> String {
            "improper".into()
        }

        fn is_proper(&self) -> bool {
            true
        }

        fn learn(&self, sample: &Sample) -> Result<Hypothesis> {
            Ok(Hypothesis::from_points(sample.iter().map(|e| e.point)))
        }
    }

    #[test]
    fn obstruction_flags_improper_outputs() {
        let inc: EnumerableFunction = "inc".parse().unwrap();
        // Echoing the sample's points, {2}, leaves the block class.
        assert!(matches!(
            scpac_obstruction_demo(1, &Improper, &inc),
            Err(Error::ImproperOutput(_))
        ));
        let dove: EnumerableFunction = "dovetail:halting:5".parse().unwrap();
        let (erm, _) = block_erm("inc");
        assert!(scpac_obstruction_demo(1, &erm, &dove).is_err());
    }
}
