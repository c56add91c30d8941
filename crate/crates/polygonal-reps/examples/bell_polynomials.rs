//! Partial Bell polynomials and the logarithmic polynomials built from
//! them, cross-checked against set-partition combinatorics and the exact
//! series logarithm.
//!
//! Run with `cargo run --example bell_polynomials`.

use num_traits::One;
use polygonal_reps::bell::{bell_partial, log_polynomials, taylor_coeffs, BellTable};
use polygonal_reps::divisorside::divisor_lhs;
use polygonal_reps::exactnum::{factorial, rat};
use polygonal_reps::{ExactRational, PolygonalSpec, Result};

fn main() -> Result<()> {
    // At all-ones arguments B_{n,k} counts set partitions of an n-set into
    // k blocks (the Stirling numbers of the second kind); row sums give the
    // Bell numbers.
    let ones = vec![ExactRational::one(); 8];
    let table = BellTable::build(&ones, 7)?;
    print!("Bell numbers:");
    for n in 0..=7usize {
        let row_sum: ExactRational = (0..=n).map(|k| table.value(n, k).clone()).sum();
        print!(" {row_sum}");
    }
    println!();

    // A single cell, symbolically B_{3,2} = 3 x1 x2, evaluated at concrete
    // arguments x1 = 2, x2 = -1/3: 3 * 2 * (-1/3) = -2.
    assert_eq!(bell_partial(3, 2, &[rat(2, 1), rat(-1, 3)])?, rat(-2, 1));

    // For a polygonal family, feed in the Taylor coefficients g_m = m! *
    // [q^m] G_s and form the logarithmic polynomials
    //   L_n = sum_{k=1}^{n} (-1)^{k-1} (k-1)! B_{n,k}(g_1, ..., g_n),
    // whose scaled values L_n/n! are exactly the log-series coefficients.
    let spec = PolygonalSpec::new(5)?;
    let g = taylor_coeffs(&spec, 12);
    let ls = log_polynomials(&g)?;
    let log_series = spec.theta_series(12).log()?;
    println!("s = 5 logarithmic polynomials:");
    for n in 1..=12usize {
        let scaled = &ls[n] / ExactRational::from_integer(factorial(n as u64));
        assert_eq!(&scaled, log_series.coeff(n));
        // ... and their negation is the weighted divisor sum.
        assert_eq!(-&scaled, divisor_lhs(n as u64, 5)?);
        println!("  L_{n:<2} = {:>12}   L_n/n! = {scaled}", ls[n].to_string());
    }
    println!("all three routes agree: Bell recurrence, series log, divisor sum");
    Ok(())
}
