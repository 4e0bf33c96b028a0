use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{ColorDegreeTable, ListAssignment};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Color;

/// `min |L(v)| >= (e * (delta_col + 1))^(1/r)`, local lemma sufficiency for
/// `L`-colorability.
pub fn drgas_sufficient(h: &Hypergraph, lists: &ListAssignment) -> Result<bool> {
    let table = ColorDegreeTable::new(h, lists)?;
    let bound =
        (std::f64::consts::E * (table.delta_col() as f64 + 1.0)).powf(1.0 / h.uniformity() as f64);
    Ok(lists.min_size() as f64 >= bound)
}

/// Probability that the `k(r-1)+1` vertices of a clique draw one common
/// random `k`-subset of `1..=sigma`: `C(sigma, k)^(-k(r-1))`.
pub fn clique_same_list_probability(k: usize, r: usize, sigma: Color) -> Result<BigRational> {
    if k == 0 || k > sigma as usize {
        return Err(Error::invalid(format!(
            "need 1 <= k <= sigma, got k={k}, sigma={sigma}"
        )));
    }
    if r < 2 {
        return Err(Error::invalid("uniformity must be >= 2"));
    }
    let subsets = binomial(sigma as u64, k as u64);
    Ok(BigRational::new(
        BigInt::one(),
        num_traits::pow(subsets, k * (r - 1)),
    ))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `exp(-t^2 / (2E))`, lower tail bound for sums of negatively correlated
/// indicators with mean `E`, `0 < t <= E`.
pub fn chernoff_lower_tail(expectation: f64, t: f64) -> Result<f64> {
    if !(t > 0.0 && t <= expectation) {
        return Err(Error::invalid(format!(
            "need 0 < t <= E, got t={t}, E={expectation}"
        )));
    }
    Ok((-t * t / (2.0 * expectation)).exp())
}

/// `exp(-eps^2 E / 3)`, upper tail bound `P[X > (1 + eps) E]`.
pub fn chernoff_upper_tail(expectation: f64, eps: f64) -> Result<f64> {
    if eps.is_nan() || eps <= 0.0 || expectation.is_nan() || expectation < 0.0 {
        return Err(Error::invalid(format!(
            "need eps > 0 and E >= 0, got eps={eps}, E={expectation}"
        )));
    }
    Ok((-eps * eps * expectation / 3.0).exp())
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn clique_probabilities() {
        assert_eq!(
            clique_same_list_probability(2, 2, 4).unwrap(),
            BigRational::new(1.into(), 36.into())
        );
        for sigma in 1..8 {
            assert_eq!(
                clique_same_list_probability(1, 2, sigma).unwrap(),
                BigRational::new(1.into(), BigInt::from(sigma))
            );
        }
        assert!(clique_same_list_probability(5, 2, 4).is_err());
        assert!(clique_same_list_probability(0, 2, 4).is_err());
    }

    #[test]
    fn tails() {
        let e = (-1.0f64).exp();
        assert!((chernoff_lower_tail(8.0, 4.0).unwrap() - e).abs() < 1e-15);
        assert!((chernoff_upper_tail(12.0, 0.5).unwrap() - e).abs() < 1e-15);
        assert!(chernoff_lower_tail(8.0, 9.0).is_err());
        assert!(chernoff_lower_tail(8.0, 0.0).is_err());
        assert!(chernoff_upper_tail(8.0, 0.0).is_err());
    }

    #[test]
    fn binomial_lower_tail_respects_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let samples = 100_000;
        let hits = (0..samples)
            .filter(|_| (0..100).filter(|_| rng.random_bool(0.5)).count() < 30)
            .count();
        let bound = chernoff_lower_tail(50.0, 20.0).unwrap();
        assert!((hits as f64 / samples as f64) <= bound, "{hits}");
    }

    #[test]
    fn drgas_on_single_edge() {
        // all lists {1,2,3}: each color has edge degree 3, delta_col = 9,
        // (10e)^(1/3) ~ 3.007 > 3
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let l = ListAssignment::new(3, vec![vec![1, 2, 3]; 3]).unwrap();
        assert!(!drgas_sufficient(&h, &l).unwrap());
    }

    #[test]
    fn drgas_on_edgeless() {
        // e^(1/r) lies in (1, 2) for r >= 2
        for r in 2..=4 {
            let h = Hypergraph::edgeless(2, r).unwrap();
            let pairs = ListAssignment::new(2, vec![vec![1, 2]; 2]).unwrap();
            let singles = ListAssignment::new(2, vec![vec![1]; 2]).unwrap();
            assert!(drgas_sufficient(&h, &pairs).unwrap());
            assert!(!drgas_sufficient(&h, &singles).unwrap());
        }
    }
}
