//! Dense truncated formal power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0, ..., c_N` of a series
//! known modulo `q^{N+1}`; `N` is the truncation order. Products truncate to
//! the smaller operand order, so precision never silently exceeds what the
//! inputs support. On top of the ring operations the module provides the
//! formal logarithm (constant term must be 1) and exponential (constant term
//! must be 0), both computed by the standard convolution recurrences derived
//! from `f' = f * (log f)'` and `g' = b' * g`.
//!
//! All arithmetic is exact; there is no floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::ExactRational;

/// A formal power series in `q` truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Coefficient `i` of `q^i`; the length is always `truncation_order + 1`.
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients `c_0..=c_N`.
    ///
    /// Panics if `coeffs` is empty: a series always carries at least the
    /// constant coefficient.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        TruncatedSeries { coeffs }
    }

    /// Builds a series from machine-integer coefficients; handy for literals.
    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| ExactRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        coeffs[0] = ExactRational::one();
        TruncatedSeries { coeffs }
    }

    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    /// The truncation order `N`: coefficients are known for `q^0..=q^N`.
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^i`. Panics if `i` exceeds the truncation order.
    pub fn coeff(&self, i: usize) -> &ExactRational {
        &self.coeffs[i]
    }

    /// All coefficients `c_0..=c_N`.
    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficientwise sum, truncated to the smaller operand order.
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.truncation_order().min(other.truncation_order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `self` multiplied by itself `exp` times; `pow(0)` is the constant 1.
    pub fn pow(&self, exp: usize) -> TruncatedSeries {
        let mut result = TruncatedSeries::one(self.truncation_order());
        for _ in 0..exp {
            result = result.mul(self);
        }
        result
    }

    /// Formal logarithm. The constant term must be exactly 1.
    ///
    /// Uses `n*L_n = n*a_n - sum_{m=1}^{n-1} m*L_m*a_{n-m}`, the coefficient
    /// recurrence of `a * (log a)' = a'`.
    pub fn log(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain(format!(
                "series log needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let n_max = self.truncation_order();
        let mut log_coeffs = vec![ExactRational::zero(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = rational_int(n) * &self.coeffs[n];
            for m in 1..n {
                if log_coeffs[m].is_zero() || self.coeffs[n - m].is_zero() {
                    continue;
                }
                acc -= rational_int(m) * &log_coeffs[m] * &self.coeffs[n - m];
            }
            log_coeffs[n] = acc / rational_int(n);
        }
        Ok(TruncatedSeries { coeffs: log_coeffs })
    }

    /// Formal exponential. The constant term must be exactly 0.
    ///
    /// Uses `n*E_n = sum_{m=1}^{n} m*b_m*E_{n-m}`, the coefficient recurrence
    /// of `(exp b)' = b' * exp b`.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain(format!(
                "series exp needs constant term 0, got {}",
                self.coeffs[0]
            )));
        }
        let n_max = self.truncation_order();
        let mut exp_coeffs = vec![ExactRational::zero(); n_max + 1];
        exp_coeffs[0] = ExactRational::one();
        for n in 1..=n_max {
            let mut acc = ExactRational::zero();
            for m in 1..=n {
                if self.coeffs[m].is_zero() || exp_coeffs[n - m].is_zero() {
                    continue;
                }
                acc += rational_int(m) * &self.coeffs[m] * &exp_coeffs[n - m];
            }
            exp_coeffs[n] = acc / rational_int(n);
        }
        Ok(TruncatedSeries { coeffs: exp_coeffs })
    }
}

fn rational_int(n: usize) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

impl fmt::Display for TruncatedSeries {
    /// Renders `c0 + c1*q + c2*q^2 + ... + cN*q^N (mod q^{N+1})` with every
    /// coefficient in canonical rational form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        write!(f, " (mod q^{})", self.truncation_order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    /// Theta series of the squares to order 4, written out by hand:
    /// 1 + 2q + 2q^4 + ...
    fn squares_theta() -> TruncatedSeries {
        TruncatedSeries::from_integer_coeffs(&[1, 2, 0, 0, 2])
    }

    /// Theta series of the generalized pentagonal numbers to order 7:
    /// exponents 0, 1, 2, 5, 7.
    fn pentagonal_theta() -> TruncatedSeries {
        TruncatedSeries::from_integer_coeffs(&[1, 1, 1, 0, 0, 1, 0, 1])
    }

    #[test]
    fn test_mul_squares_theta_matches_pair_enumeration() {
        // Coefficient of q^2 in (sum over a of q^{a^2})^2 equals the number of
        // integer pairs (a, b) with a^2 + b^2 = 2; counted directly here.
        let mut pairs = 0i64;
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                if a * a + b * b == 2 {
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, 4);
        let sq = squares_theta();
        let prod = sq.mul(&sq);
        assert_eq!(prod.coeff(2), &rat(4, 1));
    }

    #[test]
    fn test_mul_truncates_to_smaller_order() {
        let a = TruncatedSeries::from_integer_coeffs(&[1, 1, 1, 1, 1, 1]);
        let b = TruncatedSeries::from_integer_coeffs(&[1, 2, 3]);
        assert_eq!(a.mul(&b).truncation_order(), 2);
        assert_eq!(a.add(&b).truncation_order(), 2);
    }

    #[test]
    fn test_pow_cube_matches_triple_enumeration() {
        // Coefficient of q^4 in the cube of the pentagonal theta series is the
        // number of ordered triples of generalized pentagonal numbers summing
        // to 4. Enumerated here over the values {0, 1, 2, 5, 7}; each value
        // comes from exactly one index, so value triples and index triples
        // coincide.
        let values = [0i64, 1, 2, 5, 7];
        let mut triples = 0i64;
        for &a in &values {
            for &b in &values {
                for &c in &values {
                    if a + b + c == 4 {
                        triples += 1;
                    }
                }
            }
        }
        assert_eq!(triples, 6);
        let g = pentagonal_theta();
        assert_eq!(g.pow(3).coeff(4), &rat(6, 1));
    }

    #[test]
    fn test_pow_zero_is_one() {
        let g = pentagonal_theta();
        assert_eq!(g.pow(0), TruncatedSeries::one(g.truncation_order()));
    }

    #[test]
    fn test_pow_satisfies_recurrence() {
        let g = squares_theta();
        for j in 0..=6 {
            assert_eq!(g.pow(j + 1), g.pow(j).mul(&g), "pow recurrence failed at j = {j}");
        }
    }

    #[test]
    fn test_log_of_one_plus_q_is_mercator() {
        let s = TruncatedSeries::from_integer_coeffs(&[1, 1, 0, 0]).log().unwrap();
        assert_eq!(s.coeff(0), &rat(0, 1));
        assert_eq!(s.coeff(1), &rat(1, 1));
        assert_eq!(s.coeff(2), &rat(-1, 2));
        assert_eq!(s.coeff(3), &rat(1, 3));
    }

    #[test]
    fn test_log_of_squares_theta_leading_coefficients() {
        // log(1 + 2q + 2q^4 + ...) = 2q - 2q^2 + ...
        let s = squares_theta().log().unwrap();
        assert_eq!(s.coeff(1), &rat(2, 1));
        assert_eq!(s.coeff(2), &rat(-2, 1));
    }

    #[test]
    fn test_exp_of_q_is_taylor_series() {
        let s = TruncatedSeries::from_integer_coeffs(&[0, 1, 0, 0]).exp().unwrap();
        assert_eq!(s.coeff(0), &rat(1, 1));
        assert_eq!(s.coeff(1), &rat(1, 1));
        assert_eq!(s.coeff(2), &rat(1, 2));
        assert_eq!(s.coeff(3), &rat(1, 6));
    }

    #[test]
    fn test_log_requires_unit_constant_term() {
        assert!(TruncatedSeries::from_integer_coeffs(&[2, 1]).log().is_err());
        assert!(TruncatedSeries::from_integer_coeffs(&[0, 1]).log().is_err());
    }

    #[test]
    fn test_exp_requires_zero_constant_term() {
        assert!(TruncatedSeries::from_integer_coeffs(&[1, 1]).exp().is_err());
    }

    #[test]
    fn test_exp_log_round_trip_on_theta() {
        let g = pentagonal_theta();
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn test_display_format() {
        let s = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(-1, 2), rat(0, 1)]);
        assert_eq!(s.to_string(), "1 + -1/2*q + 0*q^2 (mod q^3)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            /// An arbitrary series of order 15 with small rational coefficients.
            fn arb_series()(nums in proptest::collection::vec(-9i64..=9, 16),
                            dens in proptest::collection::vec(1i64..=6, 16))
                           -> TruncatedSeries {
                TruncatedSeries::from_coeffs(
                    nums.iter().zip(&dens).map(|(&p, &q)| rat(p, q)).collect(),
                )
            }
        }

        prop_compose! {
            /// A series of order 20 with constant term 1.
            fn arb_unit_series()(nums in proptest::collection::vec(-9i64..=9, 20),
                                 dens in proptest::collection::vec(1i64..=6, 20))
                                -> TruncatedSeries {
                let mut coeffs = vec![rat(1, 1)];
                coeffs.extend(nums.iter().zip(&dens).map(|(&p, &q)| rat(p, q)));
                TruncatedSeries::from_coeffs(coeffs)
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn mul_commutes(a in arb_series(), b in arb_series()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn mul_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }

            #[test]
            fn log_turns_products_into_sums(a in arb_unit_series(), b in arb_unit_series()) {
                let lhs = a.mul(&b).log().unwrap();
                let rhs = a.log().unwrap().add(&b.log().unwrap());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn exp_log_round_trips(a in arb_unit_series()) {
                prop_assert_eq!(a.log().unwrap().exp().unwrap(), a.clone());
            }

            #[test]
            fn log_exp_round_trips(nums in proptest::collection::vec(-9i64..=9, 20),
                                   dens in proptest::collection::vec(1i64..=6, 20)) {
                let mut coeffs = vec![rat(0, 1)];
                coeffs.extend(nums.iter().zip(&dens).map(|(&p, &q)| rat(p, q)));
                let a = TruncatedSeries::from_coeffs(coeffs);
                prop_assert_eq!(a.exp().unwrap().log().unwrap(), a.clone());
            }
        }
    }
}
