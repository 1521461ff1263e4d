//! Exact empirical and generalization error.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypothesis::Hypothesis;
use crate::rational::{self, Rational};
use crate::sample::{Distribution, Sample};

/// Number of examples in `sample` that `h` labels wrongly.
pub fn mistakes(h: &Hypothesis, sample: &Sample) -> u64 {
    sample.iter().filter(|e| h.eval(e.point) != e.label).count() as u64
}

/// `L_S(h) = |{i : h(x_i) ≠ y_i}| / m`.
pub fn empirical_loss(h: &Hypothesis, sample: &Sample) -> Result<Rational> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(rational::ratio(mistakes(h, sample), sample.len() as u64))
}

/// `L_D(h)`: total weight of the examples `h` labels wrongly.
pub fn true_loss(h: &Hypothesis, dist: &Distribution) -> Rational {
    dist.iter()
        .filter(|(e, _)| h.eval(e.point) != e.label)
        .map(|(_, w)| w)
        .sum()
}

/// `D(S)`: each distinct example weighted by its multiplicity over `|S|`.
pub fn empirical_distribution(sample: &Sample) -> Result<Distribution> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut counts = BTreeMap::new();
    for e in sample.iter() {
        *counts.entry(*e).or_insert(0u64) += 1;
    }
    let m = sample.len() as u64;
    Distribution::new(counts.into_iter().map(|(e, c)| (e, rational::ratio(c, m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::sample::LabeledExample;
    use proptest::prelude::*;

    fn h(points: &[u64]) -> Hypothesis {
        Hypothesis::from_points(points.iter().copied())
    }

    #[test]
    fn empirical_loss_examples() {
        let s = Sample::from_pairs([(5, 0)]);
        assert_eq!(empirical_loss(&h(&[]), &s).unwrap(), ratio(0, 1));
        let s = Sample::from_pairs([(2, 0), (3, 0)]);
        assert_eq!(empirical_loss(&h(&[2]), &s).unwrap(), ratio(1, 2));
        let s = Sample::from_pairs([(4, 1), (6, 1), (8, 1), (9, 0)]);
        assert_eq!(empirical_loss(&h(&[4, 6]), &s).unwrap(), ratio(1, 4));
        assert_eq!(
            empirical_loss(&h(&[]), &Sample::default()),
            Err(Error::EmptySample)
        );
    }

    #[test]
    fn true_loss_examples() {
        let ex = |x, y: u8| LabeledExample::new(x, y == 1);
        let d = Distribution::uniform(&[ex(2, 1), ex(3, 0)]).unwrap();
        assert_eq!(true_loss(&h(&[2]), &d), ratio(0, 1));
        assert_eq!(true_loss(&h(&[]), &d), ratio(1, 2));
        let d = Distribution::new([(ex(2, 1), ratio(1, 3)), (ex(2, 0), ratio(2, 3))]).unwrap();
        assert_eq!(true_loss(&h(&[2]), &d), ratio(2, 3));
    }

    #[test]
    fn empirical_distribution_examples() {
        let ex = |x, y: u8| LabeledExample::new(x, y == 1);
        let d =
            empirical_distribution(&Sample::from_pairs([(2, 1), (2, 1), (3, 0), (5, 1)])).unwrap();
        assert_eq!(d.weight(&ex(2, 1)), Some(&ratio(1, 2)));
        assert_eq!(d.weight(&ex(3, 0)), Some(&ratio(1, 4)));
        assert_eq!(d.weight(&ex(5, 1)), Some(&ratio(1, 4)));
        assert_eq!(d.support_len(), 3);
        let d = empirical_distribution(&Sample::from_pairs([(7, 0)])).unwrap();
        assert_eq!(d.weight(&ex(7, 0)), Some(&ratio(1, 1)));
        assert!(empirical_distribution(&Sample::default()).is_err());
    }

    fn arb_sample() -> impl Strategy<Value = Sample> {
        prop::collection::vec((0u64..12, 0u8..2), 1..20).prop_map(Sample::from_pairs)
    }

    proptest! {
        #[test]
        fn empirical_equals_true_loss_on_empirical_distribution(
            support in prop::collection::btree_set(0u64..12, 0..8),
            s in arb_sample(),
        ) {
            let h = Hypothesis::from_points(support);
            let d = empirical_distribution(&s).unwrap();
            prop_assert_eq!(empirical_loss(&h, &s).unwrap(), true_loss(&h, &d));
            let total: Rational = d.iter().map(|(_, w)| w.clone()).sum();
            prop_assert_eq!(total, rational::one());
        }

        #[test]
        fn losses_lie_in_unit_interval(
            support in prop::collection::btree_set(0u64..12, 0..8),
            s in arb_sample(),
        ) {
            let h = Hypothesis::from_points(support);
            let l = empirical_loss(&h, &s).unwrap();
            prop_assert!(l >= rational::zero() && l <= rational::one());
        }
    }
}
