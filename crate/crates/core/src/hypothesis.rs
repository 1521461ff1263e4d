use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely supported 0/1 function on the naturals, stored as its support.
///
/// The support is strictly increasing. `h(x) = 1` iff `x` is in the support.
///
/// Hypotheses are ordered canonically: by support size first, then by
/// lexicographic comparison of the supports. Every argmin and enumeration in
/// the crate breaks ties with this order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawHypothesis", into = "RawHypothesis")]
pub struct Hypothesis {
    support: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHypothesis {
    support: Vec<u64>,
}

impl TryFrom<RawHypothesis> for Hypothesis {
    type Error = Error;

    fn try_from(raw: RawHypothesis) -> Result<Self> {
        Hypothesis::from_sorted(raw.support)
    }
}

impl From<Hypothesis> for RawHypothesis {
    fn from(h: Hypothesis) -> Self {
        RawHypothesis { support: h.support }
    }
}

impl Hypothesis {
    /// The all-zeros hypothesis.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a hypothesis from arbitrary points; duplicates are dropped.
    pub fn from_points<I: IntoIterator<Item = u64>>(points: I) -> Self {
        let mut support: Vec<u64> = points.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        Self { support }
    }

    /// Accepts only a strictly increasing support.
    pub fn from_sorted(support: Vec<u64>) -> Result<Self> {
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidHypothesis(format!(
                "support must be strictly increasing: {support:?}"
            )));
        }
        Ok(Self { support })
    }

    pub fn support(&self) -> &[u64] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    #[inline]
    pub fn eval(&self, x: u64) -> bool {
        self.support.binary_search(&x).is_ok()
    }

    pub fn max_point(&self) -> Option<u64> {
        self.support.last().copied()
    }

    /// The values of `h` on `points`, in order.
    pub fn pattern(&self, points: &[u64]) -> Vec<bool> {
        points.iter().map(|&x| self.eval(x)).collect()
    }

    /// Agrees with `self` on `{0..=bound}` and is zero above it.
    pub fn truncate(&self, bound: u64) -> Self {
        Self {
            support: self
                .support
                .iter()
                .copied()
                .take_while(|&x| x <= bound)
                .collect(),
        }
    }

    /// True iff the two supports share no point.
    pub fn disjoint(&self, other: &Hypothesis) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.support.len() && j < other.support.len() {
            match self.support[i].cmp(&other.support[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl Ord for Hypothesis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for Hypothesis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{:?}", self.support)
    }
}
