//! Generalized polygonal numbers and their theta series.
//!
//! For `s >= 3` the generalized s-gonal numbers are
//! `F_s(n) = ((s-2)n^2 - (s-4)n) / 2` with the index `n` ranging over all
//! integers, negative included. Their generating function is the theta series
//!
//! `G_s(q) = sum over n in Z of q^{F_s(n)}`,
//!
//! computed here two independent ways: by direct index enumeration
//! ([`PolygonalSpec::theta_series`]) and, for `s >= 4`, by the Jacobi triple
//! product
//!
//! `G_s(q) = prod_{j>=0} (1 + q^{(s-2)j+1}) (1 + q^{(s-2)j+s-3}) (1 - q^{(s-2)(j+1)})`,
//!
//! ([`PolygonalSpec::triple_product_series`]). The two must agree
//! coefficientwise, which the test suite checks exhaustively. For `s = 3` the
//! product form does not apply (its second factor degenerates at exponent 0),
//! and every generalized triangular value is hit by exactly two indices, so
//! all theta coefficients are even.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{ExactInteger, ExactRational};
use crate::series::TruncatedSeries;

/// Which family of s-gonal numbers is in play: the square case is `s = 4`,
/// pentagonal `s = 5`, hexagonal `s = 6`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonalSpec {
    s: i64,
}

impl PolygonalSpec {
    /// A polygonal family with `s >= 3` sides.
    pub fn new(s: i64) -> Result<Self> {
        if s < 3 {
            return Err(Error::domain(format!("polygonal spec needs s >= 3, got {s}")));
        }
        Ok(PolygonalSpec { s })
    }

    /// The number of sides `s`.
    pub fn s(&self) -> i64 {
        self.s
    }

    /// The modulus `v = s - 2` that governs the residue classes in the
    /// divisor-sum identities.
    pub fn v(&self) -> i64 {
        self.s - 2
    }

    /// The generalized s-gonal number `F_s(n) = ((s-2)n^2 - (s-4)n) / 2`,
    /// defined for every integer index including negatives.
    pub fn polygonal_number(&self, n: &ExactInteger) -> ExactInteger {
        let s2 = BigInt::from(self.s - 2);
        let s4 = BigInt::from(self.s - 4);
        (s2 * n * n - s4 * n) / 2
    }

    /// `F_s(n)` for a machine-sized index; used by the enumeration loops.
    fn value_at(&self, n: i128) -> i128 {
        let s2 = (self.s - 2) as i128;
        let s4 = (self.s - 4) as i128;
        (s2 * n * n - s4 * n) / 2
    }

    /// The inclusive index interval `(lo, hi)` containing exactly the indices
    /// with `F_s(n) <= bound`, found by stepping outward from 0 on each side.
    /// `F_s` is nondecreasing in `|n|` on either side for `s >= 3`, so the
    /// interval is contiguous; `F_s(0) = 0` keeps it nonempty.
    pub fn index_range(&self, bound: u64) -> (i64, i64) {
        let bound = bound as i128;
        let mut hi: i128 = 0;
        while self.value_at(hi + 1) <= bound {
            hi += 1;
        }
        let mut lo: i128 = 0;
        while self.value_at(lo - 1) <= bound {
            lo -= 1;
        }
        (lo as i64, hi as i64)
    }

    /// Coefficients `0..=n_max` of the theta series, by index enumeration:
    /// coefficient `m` counts the indices `n` with `F_s(n) = m`.
    pub fn theta_coefficients(&self, n_max: usize) -> Vec<ExactInteger> {
        let mut counts = vec![ExactInteger::from(0); n_max + 1];
        let (lo, hi) = self.index_range(n_max as u64);
        for i in lo..=hi {
            let value = self.value_at(i as i128) as usize;
            counts[value] += 1;
        }
        counts
    }

    /// The theta series `G_s(q)` truncated at `q^{n_max}`.
    pub fn theta_series(&self, n_max: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.theta_coefficients(n_max)
                .into_iter()
                .map(ExactRational::from_integer)
                .collect(),
        )
    }

    /// All distinct generalized s-gonal values `<= bound`, sorted ascending.
    /// The list always starts at 0 (`F_s(0) = 0`); for `s = 3` each value
    /// appears once here even though two indices produce it.
    pub fn values_up_to(&self, bound: u64) -> Vec<ExactInteger> {
        let (lo, hi) = self.index_range(bound);
        let mut values = std::collections::BTreeSet::new();
        for i in lo..=hi {
            let value = self.value_at(i as i128);
            if value <= bound as i128 {
                values.insert(value);
            }
        }
        values.into_iter().map(ExactInteger::from).collect()
    }

    /// The Jacobi triple product expansion of `G_s(q)` truncated at
    /// `q^{n_max}`, defined for `s >= 4` only.
    ///
    /// Factors are taken in increasing `j` and multiplied in as sparse
    /// two-term series; the product stops once every remaining factor is
    /// `1 + O(q^{n_max+1})`. For `s = 4` the first two factor families
    /// coincide, which squares them — that is correct, not a duplicate.
    pub fn triple_product_series(&self, n_max: usize) -> Result<TruncatedSeries> {
        if self.s < 4 {
            return Err(Error::domain(format!(
                "triple product form needs s >= 4, got s = {}; the s = 3 product degenerates",
                self.s
            )));
        }
        let v = (self.s - 2) as usize;
        let mut result = TruncatedSeries::one(n_max);
        let mut j = 0usize;
        loop {
            let e1 = v * j + 1;
            let e2 = v * j + (self.s as usize - 3);
            let e3 = v * (j + 1);
            if e1 > n_max && e2 > n_max && e3 > n_max {
                break;
            }
            for (e, sign) in [(e1, 1i64), (e2, 1), (e3, -1)] {
                if e <= n_max {
                    result = result.mul(&two_term_factor(e, sign, n_max));
                }
            }
            j += 1;
        }
        Ok(result)
    }
}

/// The series `1 + sign * q^exponent` at the given truncation order.
fn two_term_factor(exponent: usize, sign: i64, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![ExactRational::from_integer(BigInt::from(0)); order + 1];
    coeffs[0] = ExactRational::from_integer(BigInt::from(1));
    coeffs[exponent] = ExactRational::from_integer(BigInt::from(sign));
    TruncatedSeries::from_coeffs(coeffs)
}
