//! Truncated power series over exact rationals: multiplication, powers, and
//! log/exp as mutually inverse operations with no rounding anywhere.
//!
//! Run with `cargo run --example series_calculus`.

use polygonal_reps::{PolygonalSpec, Result, TruncatedSeries};

fn main() -> Result<()> {
    // log(1 + q) is the Mercator series q - q^2/2 + q^3/3 - ...
    let one_plus_q = TruncatedSeries::from_integer_coeffs(&[1, 1, 0, 0, 0, 0]);
    println!("log(1 + q)     = {}", one_plus_q.log()?);

    // log of the geometric series 1/(1 - q) is q + q^2/2 + q^3/3 + ...
    let geometric = TruncatedSeries::from_integer_coeffs(&[1; 7]);
    println!("log(1/(1 - q)) = {}", geometric.log()?);

    // exp needs constant term 0, log needs constant term 1; both round-trip.
    let exp_q = TruncatedSeries::from_integer_coeffs(&[0, 1, 0, 0, 0]).exp()?;
    println!("exp(q)         = {exp_q}");
    assert_eq!(exp_q.log()?, TruncatedSeries::from_integer_coeffs(&[0, 1, 0, 0, 0]));

    // Round trips on a theta series: exp(log G) recovers G exactly.
    let theta = PolygonalSpec::new(5)?.theta_series(24);
    assert_eq!(theta.log()?.exp()?, theta);
    println!("exp(log G_5) = G_5 through q^24, coefficient-exact");

    // Powers by repeated multiplication: the q^n coefficient of G_s^j is
    // the representation count t_{s,j}(n), which is how the identity
    // checks obtain their tables.
    let cube = theta.pow(3);
    println!("G_5^3        = {}", PolygonalSpec::new(5)?.theta_series(8).pow(3));
    assert_eq!(cube.coeff(4), &polygonal_reps::exactnum::rat(6, 1));

    // Truncation order follows the shorter operand, mirroring how far the
    // result is trustworthy.
    let short = TruncatedSeries::from_integer_coeffs(&[1, 2, 3]);
    let product = theta.mul(&short);
    assert_eq!(product.truncation_order(), 2);
    println!("order bookkeeping: order-24 series times order-2 series has order 2");
    Ok(())
}
