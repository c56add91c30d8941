//! Theta series of generalized polygonal numbers, two independent ways:
//! direct index enumeration and the Jacobi triple product.
//!
//! Run with `cargo run --example theta_series`.

use polygonal_reps::{PolygonalSpec, Result};

fn main() -> Result<()> {
    // The generating function of the squares: coefficient n counts integer
    // indices m with m^2 = n, so it is 1 at 0 and 2 at every positive square
    // (both m and -m land there).
    let squares = PolygonalSpec::new(4)?;
    println!("G_4 = {}", squares.theta_series(10));

    // Generalized pentagonal numbers m(3m-1)/2 hit each value exactly once,
    // so the series is an indicator: the exponent pattern from the
    // pentagonal number theorem.
    let pentagonal = PolygonalSpec::new(5)?;
    println!("G_5 = {}", pentagonal.theta_series(12));

    // For s >= 4 the triple product expansion
    //   prod_{j>=0} (1 + q^{vj+1})(1 + q^{vj+s-3})(1 - q^{v(j+1)}),  v = s-2,
    // must reproduce the enumeration coefficient by coefficient.
    for s in 4..=9 {
        let spec = PolygonalSpec::new(s)?;
        let by_sum = spec.theta_series(80);
        let by_product = spec.triple_product_series(80)?;
        assert_eq!(by_sum, by_product);
    }
    println!("s = 4..9: enumeration and triple product agree through q^80");

    // s = 3 is the exception on both counts: the product's second factor
    // degenerates to (1 + q^0), and every triangular value is reached by two
    // indices (n and -n-1), doubling every coefficient.
    let triangular = PolygonalSpec::new(3)?;
    println!("G_3 = {}", triangular.theta_series(10));
    assert!(triangular.triple_product_series(10).is_err());

    // Which indices matter: the inclusive range with F_s(n) <= 60, and the
    // distinct values it produces.
    for s in [3, 4, 5, 6, 10] {
        let spec = PolygonalSpec::new(s)?;
        let (lo, hi) = spec.index_range(60);
        let values: Vec<String> = spec
            .values_up_to(60)
            .iter()
            .map(|v| v.to_string())
            .collect();
        println!("s = {s:2}: indices {lo}..={hi} give values {}", values.join(", "));
    }
    Ok(())
}
