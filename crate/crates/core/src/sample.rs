//! Labeled examples, samples and finite-support distributions over ℕ×{0,1}.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Identifies the pseudo-random generator and the draw procedure. Recorded in
/// every experiment output so that runs can be replayed.
pub const GENERATOR_ID: &str = "chacha8-rand_chacha-0.3+inverse-cdf";

/// Default cap on `|supp(D)|^m` for [`enumerate_samples`].
pub const DEFAULT_SAMPLE_BUDGET: u64 = 1_000_000;

/// The generator used for a seed.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An independent generator for `(seed, stream)`; used to give every trial of
/// an experiment its own sequence regardless of scheduling.
pub fn rng_for_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledExample {
    pub point: u64,
    pub label: bool,
}

impl LabeledExample {
    pub fn new(point: u64, label: bool) -> Self {
        Self { point, label }
    }
}

impl Serialize for LabeledExample {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.point, u8::from(self.label)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledExample {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (point, label) = <(u64, u8)>::deserialize(d)?;
        match label {
            0 | 1 => Ok(Self::new(point, label == 1)),
            other => Err(D::Error::custom(format!(
                "label must be 0 or 1, got {other}"
            ))),
        }
    }
}

/// An ordered sequence of labeled examples; duplicates allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sample(pub Vec<LabeledExample>);

impl Sample {
    pub fn new(examples: Vec<LabeledExample>) -> Self {
        Self(examples)
    }

    /// Convenience constructor from `(point, label)` pairs with 0/1 labels.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u8)>>(pairs: I) -> Self {
        Self(
            pairs
                .into_iter()
                .map(|(x, y)| LabeledExample::new(x, y != 0))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabeledExample> {
        self.0.iter()
    }

    /// Largest point in the sample, 0 when empty.
    pub fn max_point(&self) -> u64 {
        self.0.iter().map(|e| e.point).max().unwrap_or(0)
    }

    /// Distinct examples in ascending order.
    pub fn distinct(&self) -> Vec<LabeledExample> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// A probability distribution over ℕ×{0,1} with finite support and exact
/// rational weights. Every weight is positive and the weights sum to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    weights: BTreeMap<LabeledExample, Rational>,
}

impl Distribution {
    pub fn new<I: IntoIterator<Item = (LabeledExample, Rational)>>(entries: I) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (e, w) in entries {
            if !w.is_positive() {
                return Err(Error::InvalidDistribution(format!(
                    "weight of ({}, {}) is not positive: {}",
                    e.point,
                    u8::from(e.label),
                    rational::format(&w)
                )));
            }
            if weights.insert(e, w).is_some() {
                return Err(Error::InvalidDistribution(format!(
                    "duplicate entry ({}, {})",
                    e.point,
                    u8::from(e.label)
                )));
            }
        }
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty support".into()));
        }
        let total: Rational = weights.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(Self { weights })
    }

    pub fn uniform(examples: &[LabeledExample]) -> Result<Self> {
        let mut distinct = examples.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let n = distinct.len() as u64;
        if n == 0 {
            return Err(Error::InvalidDistribution("empty support".into()));
        }
        Self::new(distinct.into_iter().map(|e| (e, rational::ratio(1, n))))
    }

    pub fn point_mass(e: LabeledExample) -> Self {
        Self {
            weights: BTreeMap::from([(e, rational::one())]),
        }
    }

    pub fn weight(&self, e: &LabeledExample) -> Option<&Rational> {
        self.weights.get(e)
    }

    /// Support in ascending example order.
    pub fn support(&self) -> impl Iterator<Item = &LabeledExample> {
        self.weights.keys()
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LabeledExample, &Rational)> {
        self.weights.iter()
    }

    pub fn max_point(&self) -> u64 {
        self.weights.keys().map(|e| e.point).max().unwrap_or(0)
    }

    /// Distinct points carrying mass, ascending.
    pub fn points(&self) -> Vec<u64> {
        let mut pts: Vec<u64> = self.weights.keys().map(|e| e.point).collect();
        pts.dedup();
        pts
    }

    pub fn sampler(&self) -> Sampler {
        Sampler::new(self)
    }
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(u64, u8, String)> = self
            .weights
            .iter()
            .map(|(e, w)| (e.point, u8::from(e.label), rational::format(w)))
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Distribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<(u64, u8, String)>::deserialize(d)?;
        let mut entries = Vec::with_capacity(rows.len());
        for (x, y, w) in rows {
            if y > 1 {
                return Err(D::Error::custom(format!("label must be 0 or 1, got {y}")));
            }
            let w = rational::parse(&w).map_err(D::Error::custom)?;
            entries.push((LabeledExample::new(x, y == 1), w));
        }
        Distribution::new(entries).map_err(D::Error::custom)
    }
}

/// Inverse-CDF sampler over the common denominator of a distribution's
/// weights: draw `u` uniform in `[0, L)` and return the first example whose
/// cumulative numerator exceeds `u`.
#[derive(Debug, Clone)]
pub struct Sampler {
    examples: Vec<LabeledExample>,
    cumulative: Cumulative,
}

#[derive(Debug, Clone)]
enum Cumulative {
    Small { total: u64, cum: Vec<u64> },
    Big { total: BigUint, cum: Vec<BigUint> },
}

impl Sampler {
    fn new(dist: &Distribution) -> Self {
        let lcm = dist
            .weights
            .values()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let mut acc = BigInt::zero();
        let mut cum = Vec::with_capacity(dist.weights.len());
        for w in dist.weights.values() {
            acc += w.numer() * (&lcm / w.denom());
            cum.push(acc.clone());
        }
        let examples = dist.weights.keys().copied().collect();
        let small: Option<Vec<u64>> = cum.iter().map(|c| c.to_u64()).collect();
        let cumulative = match (lcm.to_u64(), small) {
            (Some(total), Some(cum)) => Cumulative::Small { total, cum },
            _ => Cumulative::Big {
                total: lcm.to_biguint().expect("positive"),
                cum: cum
                    .iter()
                    .map(|c| c.to_biguint().expect("positive"))
                    .collect(),
            },
        };
        Self {
            examples,
            cumulative,
        }
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> LabeledExample {
        let idx = match &self.cumulative {
            Cumulative::Small { total, cum } => {
                let u = rng.gen_range(0..*total);
                cum.partition_point(|&c| c <= u)
            }
            Cumulative::Big { total, cum } => {
                let u = rng.gen_biguint_below(total);
                cum.partition_point(|c| *c <= u)
            }
        };
        self.examples[idx]
    }

    pub fn draw_sample<R: Rng + ?Sized>(&self, m: usize, rng: &mut R) -> Sample {
        Sample((0..m).map(|_| self.draw(rng)).collect())
    }
}

/// `m` i.i.d. draws from `dist`; a pure function of `(dist, m, seed)`.
pub fn draw_sample(dist: &Distribution, m: usize, seed: u64) -> Sample {
    let mut rng = rng_for(seed);
    dist.sampler().draw_sample(m, &mut rng)
}

/// Every ordered sequence of length `m` over `supp(dist)`, in lexicographic
/// order of example indices (last position varies fastest).
pub fn enumerate_samples(dist: &Distribution, m: usize, budget: u64) -> Result<Vec<Sample>> {
    let support: Vec<LabeledExample> = dist.support().copied().collect();
    let n = support.len() as u64;
    let count = u32::try_from(m)
        .ok()
        .and_then(|e| n.checked_pow(e))
        .filter(|&c| c <= budget)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "sample enumeration",
            needed: format!("{n}^{m}"),
            budget,
        })?;
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; m];
    loop {
        out.push(Sample(idx.iter().map(|&i| support[i]).collect()));
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < support.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
