//! Partial Bell polynomials and the logarithmic polynomials they induce.
//!
//! `bell_partial(n, k, x)` evaluates the partial Bell polynomial
//! `B_{n,k}(x_1, ..., x_{n-k+1})` through the convolution recurrence
//!
//! `B_{n,k} = sum_{m=1}^{n-k+1} C(n-1, m-1) * x_m * B_{n-m,k-1}`
//!
//! with `B_{0,0} = 1` and `B_{n,0} = B_{0,k} = 0` otherwise. Specialized at
//! the Taylor coefficients `g_m = m! * [q^m] G_s(q)` of a theta series with
//! constant term 1, the alternating combination
//!
//! `L_n = sum_{k=1}^{n} (-1)^{k-1} (k-1)! * B_{n,k}(g_1, ..., g_n)`
//!
//! is the logarithmic polynomial: `L_n / n!` equals the coefficient of `q^n`
//! in `log G_s(q)`. That gives a second, fully combinatorial route to the
//! logarithm that never touches the series recurrence, which is exactly what
//! makes it useful as a cross-check.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, ExactInteger, ExactRational};
use crate::polygonal::PolygonalSpec;

/// The derivative sequence of a theta series at 0: entry `m` holds
/// `g_m = m! * [q^m] G_s(q)`, the m-th derivative of `G_s` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorCoeffs {
    derivatives: Vec<ExactInteger>,
}

impl TaylorCoeffs {
    /// Largest `m` covered.
    pub fn n_max(&self) -> usize {
        self.derivatives.len() - 1
    }

    /// `g_m`. Panics if `m` exceeds [`TaylorCoeffs::n_max`].
    pub fn derivative(&self, m: usize) -> &ExactInteger {
        &self.derivatives[m]
    }

    /// The arguments `x_m = g_m` for `m = 1..=n_max`, rationalized for Bell
    /// polynomial evaluation.
    pub fn bell_arguments(&self) -> Vec<ExactRational> {
        self.derivatives[1..]
            .iter()
            .map(|g| ExactRational::from_integer(g.clone()))
            .collect()
    }
}

/// The derivatives `g_0..=g_{n_max}` of `G_s` at 0.
pub fn taylor_coeffs(spec: &PolygonalSpec, n_max: usize) -> TaylorCoeffs {
    let derivatives = spec
        .theta_coefficients(n_max)
        .into_iter()
        .enumerate()
        .map(|(m, c)| c * factorial(m as u64))
        .collect();
    TaylorCoeffs { derivatives }
}

/// `B_{n,k}(x_1, ..., x_{n-k+1})` by the convolution recurrence, memoized
/// over `(n, k)` within the call.
///
/// `x` is 1-indexed conceptually: `x[0]` is `x_1`. When `k >= 1` and
/// `n >= k` at least `n - k + 1` entries must be supplied.
pub fn bell_partial(n: usize, k: usize, x: &[ExactRational]) -> Result<ExactRational> {
    if k == 0 {
        return Ok(if n == 0 {
            ExactRational::one()
        } else {
            ExactRational::zero()
        });
    }
    if k > n {
        return Ok(ExactRational::zero());
    }
    if x.len() < n - k + 1 {
        return Err(Error::domain(format!(
            "bell polynomial B_({n},{k}) needs {} arguments, got {}",
            n - k + 1,
            x.len()
        )));
    }
    let pascal = pascal_rows(n);
    // Only the band of cells (i, j) with i - j <= n - k is reachable from
    // (n, k); restricting to it keeps every x index within the supplied
    // n - k + 1 entries.
    let band = n - k;
    let mut table = vec![vec![ExactRational::zero(); k + 1]; n + 1];
    table[0][0] = ExactRational::one();
    for i in 1..=n {
        let j_lo = i.saturating_sub(band).max(1);
        for j in j_lo..=i.min(k) {
            table[i][j] = bell_cell(i, j, x, &pascal, &table);
        }
    }
    Ok(table[n][k].clone())
}

/// Every `B_{n,k}(x_1, ..., x_n)` for `0 <= k <= n <= n_max` in one sweep.
///
/// This is the memo table for a whole evaluation session; `x` must supply
/// `n_max` entries since `B_{n,1} = x_n`.
#[derive(Debug, Clone)]
pub struct BellTable {
    values: Vec<Vec<ExactRational>>,
}

impl BellTable {
    pub fn build(x: &[ExactRational], n_max: usize) -> Result<BellTable> {
        if x.len() < n_max {
            return Err(Error::domain(format!(
                "bell table to n = {n_max} needs {n_max} arguments, got {}",
                x.len()
            )));
        }
        let pascal = pascal_rows(n_max);
        let mut values = vec![vec![ExactRational::zero(); n_max + 1]; n_max + 1];
        values[0][0] = ExactRational::one();
        for i in 1..=n_max {
            for j in 1..=i {
                values[i][j] = bell_cell(i, j, x, &pascal, &values);
            }
        }
        Ok(BellTable { values })
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_{n,k}`. Panics outside the built triangle.
    pub fn value(&self, n: usize, k: usize) -> &ExactRational {
        &self.values[n][k]
    }
}

/// One recurrence step: `sum_m C(i-1, m-1) * x_m * B_{i-m, j-1}`.
fn bell_cell(
    i: usize,
    j: usize,
    x: &[ExactRational],
    pascal: &[Vec<ExactInteger>],
    table: &[Vec<ExactRational>],
) -> ExactRational {
    let mut acc = ExactRational::zero();
    for m in 1..=(i - j + 1) {
        let xm = &x[m - 1];
        if xm.is_zero() {
            continue;
        }
        let prev = &table[i - m][j - 1];
        if prev.is_zero() {
            continue;
        }
        acc += ExactRational::from_integer(pascal[i - 1][m - 1].clone()) * xm * prev;
    }
    acc
}

fn pascal_rows(n_max: usize) -> Vec<Vec<ExactInteger>> {
    let mut rows: Vec<Vec<ExactInteger>> = vec![vec![ExactInteger::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![ExactInteger::one()];
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(ExactInteger::one());
        rows.push(row);
    }
    rows
}

/// The logarithmic polynomial
/// `L_n = sum_{k=1}^{n} (-1)^{k-1} (k-1)! * B_{n,k}(g_1, ..., g_n)`
/// for `n >= 1`; `L_n / n!` is the coefficient of `q^n` in `log G_s(q)`.
pub fn log_polynomial(n: usize, g: &TaylorCoeffs) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::domain("log polynomial needs n >= 1".to_string()));
    }
    if g.n_max() < n {
        return Err(Error::domain(format!(
            "log polynomial L_{n} needs derivatives to order {n}, got {}",
            g.n_max()
        )));
    }
    let table = BellTable::build(&g.bell_arguments(), n)?;
    Ok(log_from_row(&table, n))
}

/// All of `L_1..=L_{n_max}` from one shared Bell table; entry 0 is unused
/// and set to 0.
pub fn log_polynomials(g: &TaylorCoeffs) -> Result<Vec<ExactRational>> {
    let n_max = g.n_max();
    let table = BellTable::build(&g.bell_arguments(), n_max)?;
    let mut out = vec![ExactRational::zero()];
    for n in 1..=n_max {
        out.push(log_from_row(&table, n));
    }
    Ok(out)
}

fn log_from_row(table: &BellTable, n: usize) -> ExactRational {
    let mut acc = ExactRational::zero();
    for k in 1..=n {
        let b = table.value(n, k);
        if b.is_zero() {
            continue;
        }
        let term = ExactRational::from_integer(factorial(k as u64 - 1)) * b;
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::repcount::RepTable;
    use num_bigint::BigInt;

    fn spec(s: i64) -> PolygonalSpec {
        PolygonalSpec::new(s).unwrap()
    }

    fn rats(xs: &[i64]) -> Vec<ExactRational> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn test_taylor_coeffs_squares() {
        let g = taylor_coeffs(&spec(4), 4);
        assert_eq!(g.derivative(0), &ExactInteger::from(1));
        assert_eq!(g.derivative(1), &ExactInteger::from(2));
        assert_eq!(g.derivative(2), &ExactInteger::from(0));
        assert_eq!(g.derivative(4), &ExactInteger::from(48));
    }

    #[test]
    fn test_taylor_coeffs_hexagonal() {
        let g = taylor_coeffs(&spec(6), 3);
        assert_eq!(g.derivative(3), &ExactInteger::from(6));
    }

    #[test]
    fn test_bell_base_cases() {
        assert_eq!(bell_partial(0, 0, &[]).unwrap(), rat(1, 1));
        assert_eq!(bell_partial(3, 0, &[]).unwrap(), rat(0, 1));
        assert_eq!(bell_partial(0, 2, &[]).unwrap(), rat(0, 1));
        assert_eq!(bell_partial(2, 5, &[]).unwrap(), rat(0, 1));
    }

    #[test]
    fn test_bell_small_closed_forms() {
        // B_{3,2} = 3 * x1 * x2, instantiated at a few points.
        for (x1, x2) in [(1i64, 1i64), (2, 5), (-3, 4)] {
            assert_eq!(
                bell_partial(3, 2, &rats(&[x1, x2])).unwrap(),
                rat(3 * x1 * x2, 1)
            );
        }
        // B_{2,2} = x1^2; with x1 = 2 this is 4.
        assert_eq!(bell_partial(2, 2, &rats(&[2])).unwrap(), rat(4, 1));
        // B_{n,1} = x_n.
        assert_eq!(bell_partial(4, 1, &rats(&[7, -2, 9, 11])).unwrap(), rat(11, 1));
    }

    #[test]
    fn test_bell_insufficient_arguments() {
        assert!(bell_partial(4, 2, &rats(&[1, 2])).is_err());
        assert!(bell_partial(4, 2, &rats(&[1, 2, 3])).is_ok());
    }

    /// Set-partition enumeration: hist[k] counts partitions of an n-set into
    /// exactly k blocks, built by placing each element into an existing block
    /// or a fresh one.
    fn partition_histogram(n: usize) -> Vec<u64> {
        fn place(next: usize, n: usize, blocks: usize, hist: &mut [u64]) {
            if next == n {
                hist[blocks] += 1;
                return;
            }
            for _ in 0..blocks {
                place(next + 1, n, blocks, hist);
            }
            place(next + 1, n, blocks + 1, hist);
        }
        let mut hist = vec![0u64; n + 1];
        if n == 0 {
            hist[0] = 1;
        } else {
            place(1, n, 1, &mut hist);
        }
        hist
    }

    #[test]
    fn test_bell_at_ones_counts_set_partitions() {
        // B_{n,k}(1, 1, ...) is the number of partitions of an n-set into k
        // blocks; row sums are the Bell numbers.
        let ones = rats(&[1; 8]);
        let expected_bell = [1u64, 1, 2, 5, 15, 52, 203];
        for n in 0..=6usize {
            let hist = partition_histogram(n);
            let mut row_sum = ExactRational::zero();
            for k in 0..=n {
                let b = bell_partial(n, k, &ones).unwrap();
                assert_eq!(
                    b,
                    rat(i64::try_from(hist[k]).unwrap(), 1),
                    "partition count mismatch at n={n}, k={k}"
                );
                row_sum += b;
            }
            assert_eq!(row_sum, rat(i64::try_from(expected_bell[n]).unwrap(), 1));
        }
    }

    /// Definition-route oracle: expand `exp(u * sum_m x_m t^m / m!)` as a
    /// bivariate truncated series and read off `B_{n,k} = n! * [t^n u^k]`.
    fn bell_by_expansion(x: &[i64], n: usize, k: usize) -> ExactRational {
        let zeros = || vec![vec![ExactRational::zero(); n + 1]; n + 1];
        let mul = |a: &Vec<Vec<ExactRational>>, b: &Vec<Vec<ExactRational>>| {
            let mut out = zeros();
            for (ta, row) in a.iter().enumerate() {
                for (ua, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (tb, rowb) in b.iter().enumerate().take(n + 1 - ta) {
                        for (ub, d) in rowb.iter().enumerate().take(n + 1 - ua) {
                            if d.is_zero() {
                                continue;
                            }
                            let prod = c * d;
                            out[ta + tb][ua + ub] += prod;
                        }
                    }
                }
            }
            out
        };
        let mut arg = zeros();
        for m in 1..=n {
            arg[m][1] = ExactRational::new(BigInt::from(x[m - 1]), factorial(m as u64));
        }
        let mut result = zeros();
        result[0][0] = ExactRational::one();
        let mut power = result.clone();
        for i in 1..=n as u64 {
            power = mul(&power, &arg);
            let inv_fact = ExactRational::new(BigInt::one(), factorial(i));
            for (t, row) in power.iter().enumerate() {
                for (u, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        result[t][u] += c * &inv_fact;
                    }
                }
            }
        }
        ExactRational::from_integer(factorial(n as u64)) * &result[n][k]
    }

    #[test]
    fn test_bell_recurrence_matches_expansion_oracle() {
        let instances: [&[i64]; 3] = [
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[2, -3, 1, 4, -1, 2, 3, -2],
            &[5, 0, -2, 0, 7, 1, 0, 3],
        ];
        for x in instances {
            for n in 0..=8usize {
                for k in 0..=n {
                    let by_recurrence = bell_partial(n, k, &rats(x)).unwrap();
                    let by_expansion = bell_by_expansion(x, n, k);
                    assert_eq!(
                        by_recurrence, by_expansion,
                        "definition route disagrees at n={n}, k={k}, x={x:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn test_bell_table_matches_single_calls() {
        let x = rats(&[2, -3, 1, 4, -1, 2, 3, -2]);
        let table = BellTable::build(&x, 8).unwrap();
        for n in 0..=8usize {
            for k in 0..=n {
                assert_eq!(table.value(n, k), &bell_partial(n, k, &x).unwrap());
            }
        }
    }

    #[test]
    fn test_bell_table_via_representation_counts() {
        // B_{n,k}(g_1, ..., g_n) = (n!/k!) * sum_{j=1}^{k} (-1)^{k-j} C(k,j) t_{s,j}(n)
        // when the theta constant term is 1; checked here on a small corner,
        // the verification suite covers the full ranges.
        for s in [4i64, 5, 6] {
            let g = taylor_coeffs(&spec(s), 8);
            let table = BellTable::build(&g.bell_arguments(), 8).unwrap();
            let reps = RepTable::build(&spec(s), 8, 8);
            let pascal = pascal_rows(8);
            for n in 1..=8usize {
                for k in 1..=n {
                    let mut sum = ExactRational::zero();
                    for j in 1..=k {
                        let term = ExactRational::from_integer(
                            &pascal[k][j] * reps.count(j, n),
                        );
                        if (k - j) % 2 == 0 {
                            sum += term;
                        } else {
                            sum -= term;
                        }
                    }
                    let scale = ExactRational::new(factorial(n as u64), factorial(k as u64));
                    assert_eq!(
                        table.value(n, k),
                        &(scale * sum),
                        "bell/repcount bridge fails at s={s}, n={n}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn test_log_polynomial_squares() {
        let g = taylor_coeffs(&spec(4), 2);
        // L_1 = g_1 and L_2 = g_2 - g_1^2; for the squares g = (2, 0), so
        // L_1 = 2 and L_2 = -4, matching 1! and 2! times the log series.
        assert_eq!(log_polynomial(1, &g).unwrap(), rat(2, 1));
        assert_eq!(log_polynomial(2, &g).unwrap(), rat(-4, 1));
    }

    #[test]
    fn test_log_polynomials_match_series_log() {
        for s in [4i64, 5, 6, 7] {
            let n_max = 10usize;
            let g = taylor_coeffs(&spec(s), n_max);
            let ls = log_polynomials(&g).unwrap();
            let log_series = spec(s).theta_series(n_max).log().unwrap();
            for n in 1..=n_max {
                let scaled = &ls[n] / ExactRational::from_integer(factorial(n as u64));
                assert_eq!(
                    &scaled,
                    log_series.coeff(n),
                    "log polynomial route disagrees with series log at s={s}, n={n}"
                );
            }
        }
    }

    #[test]
    fn test_log_polynomial_domain() {
        let g = taylor_coeffs(&spec(4), 3);
        assert!(log_polynomial(0, &g).is_err());
        assert!(log_polynomial(4, &g).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            /// Homogeneity: B_{n,k}(c*x) = c^k * B_{n,k}(x).
            #[test]
            fn bell_is_homogeneous_of_degree_k(
                xs in proptest::collection::vec(-6i64..=6, 8),
                c in -4i64..=4,
                n in 0usize..=8,
            ) {
                let x = rats(&xs);
                let scaled: Vec<ExactRational> = x.iter().map(|v| v * rat(c, 1)).collect();
                for k in 0..=n {
                    let lhs = bell_partial(n, k, &scaled).unwrap();
                    let rhs = rat(c, 1).pow(i32::try_from(k).unwrap()) * bell_partial(n, k, &x).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
