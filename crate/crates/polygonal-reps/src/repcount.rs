//! Representation counts `t_{s,j}(n)`: the number of ordered `j`-tuples of
//! generalized s-gonal indices whose values sum to `n`, i.e. the coefficient
//! of `q^n` in `G_s(q)^j`. Distinct indices with equal values count
//! separately, so for `s = 3` every tuple is counted with multiplicity
//! `2^j`.
//!
//! [`RepTable`] builds the whole triangle of counts up to a `(j_max, n_max)`
//! bound by repeated convolution with the theta coefficients — row `j` is
//! obtained from row `j-1`, never recomputed from scratch. The module also
//! carries [`rep_count_bruteforce`], a deliberately naive tuple enumeration
//! used as an independent oracle against the convolution route; it refuses
//! inputs beyond its configured bounds instead of silently taking forever.

use crate::error::{Error, Result};
use crate::exactnum::ExactInteger;
use crate::polygonal::PolygonalSpec;

/// Table of representation counts with rows indexed by tuple length `j` and
/// columns by target `n`: `rows[j][n] = t_{s,j}(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTable {
    spec: PolygonalSpec,
    rows: Vec<Vec<ExactInteger>>,
}

impl RepTable {
    /// Builds all counts for `0 <= j <= j_max`, `0 <= n <= n_max`.
    ///
    /// Row 0 is the empty-tuple row `1, 0, 0, ...`; row 1 holds the theta
    /// coefficients; each later row is the convolution of its predecessor
    /// with row 1, truncated at `n_max`.
    pub fn build(spec: &PolygonalSpec, j_max: usize, n_max: usize) -> RepTable {
        let theta = spec.theta_coefficients(n_max);
        let mut rows = Vec::with_capacity(j_max + 1);
        let mut row0 = vec![ExactInteger::from(0); n_max + 1];
        row0[0] = ExactInteger::from(1);
        rows.push(row0);
        for j in 1..=j_max {
            let prev = &rows[j - 1];
            let mut row = vec![ExactInteger::from(0); n_max + 1];
            for (n, c) in prev.iter().enumerate() {
                if c == &ExactInteger::from(0) {
                    continue;
                }
                for (m, t) in theta.iter().take(n_max + 1 - n).enumerate() {
                    if t == &ExactInteger::from(0) {
                        continue;
                    }
                    row[n + m] += c * t;
                }
            }
            rows.push(row);
        }
        RepTable {
            spec: *spec,
            rows,
        }
    }

    pub fn spec(&self) -> &PolygonalSpec {
        &self.spec
    }

    pub fn j_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn n_max(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// `t_{s,j}(n)`. Panics if `j` or `n` exceeds the table bounds; use
    /// [`RepTable::get`] for a checked lookup.
    pub fn count(&self, j: usize, n: usize) -> &ExactInteger {
        &self.rows[j][n]
    }

    pub fn get(&self, j: usize, n: usize) -> Option<&ExactInteger> {
        self.rows.get(j).and_then(|row| row.get(n))
    }

    /// The whole row for tuple length `j`.
    pub fn row(&self, j: usize) -> &[ExactInteger] {
        &self.rows[j]
    }
}

/// `t_{s,j}(n)` computed through a freshly built table.
pub fn rep_count(spec: &PolygonalSpec, j: usize, n: usize) -> ExactInteger {
    RepTable::build(spec, j, n).count(j, n).clone()
}

/// Bounds past which [`rep_count_bruteforce`] refuses to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceLimits {
    /// Largest tuple length `j` the enumeration will attempt.
    pub max_tuple_len: usize,
    /// Largest target `n` the enumeration will attempt.
    pub max_target: u64,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        BruteForceLimits {
            max_tuple_len: 5,
            max_target: 60,
        }
    }
}

/// `t_{s,j}(n)` by direct enumeration of ordered index tuples, with the
/// default limits (`j <= 5`, `n <= 60`).
///
/// This is the oracle route: it shares no code with the convolution table
/// beyond the index range, and prunes only on partial sums exceeding the
/// target.
pub fn rep_count_bruteforce(spec: &PolygonalSpec, j: usize, n: usize) -> Result<ExactInteger> {
    rep_count_bruteforce_with_limits(spec, j, n, &BruteForceLimits::default())
}

/// [`rep_count_bruteforce`] with caller-chosen limits.
pub fn rep_count_bruteforce_with_limits(
    spec: &PolygonalSpec,
    j: usize,
    n: usize,
    limits: &BruteForceLimits,
) -> Result<ExactInteger> {
    if j > limits.max_tuple_len {
        return Err(Error::domain(format!(
            "brute force refuses tuple length {j} > {}",
            limits.max_tuple_len
        )));
    }
    if n as u64 > limits.max_target {
        return Err(Error::domain(format!(
            "brute force refuses target {n} > {}",
            limits.max_target
        )));
    }
    let (lo, hi) = spec.index_range(n as u64);
    let values: Vec<u64> = (lo..=hi)
        .map(|i| {
            let f = spec.polygonal_number(&ExactInteger::from(i));
            u64::try_from(f).expect("values in range are nonnegative")
        })
        .collect();
    Ok(ExactInteger::from(count_tuples(&values, j, n as u64)))
}

fn count_tuples(values: &[u64], slots: usize, target: u64) -> u128 {
    if slots == 0 {
        return u128::from(target == 0);
    }
    values
        .iter()
        .filter(|&&v| v <= target)
        .map(|&v| count_tuples(values, slots - 1, target - v))
        .sum()
}
