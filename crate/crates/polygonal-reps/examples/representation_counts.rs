//! Representation counts t_{s,j}(n): the number of ordered j-tuples of
//! integer indices whose generalized s-gonal values sum to n — equivalently
//! the q^n coefficient of G_s(q)^j.
//!
//! Run with `cargo run --example representation_counts`.

use polygonal_reps::repcount::{rep_count, rep_count_bruteforce};
use polygonal_reps::{PolygonalSpec, RepTable, Result};

fn main() -> Result<()> {
    // Counts for sums of two and three squares (signed indices, so every
    // nonzero index contributes twice). t_{4,2}(5) = 8: the pairs
    // (±1, ±2) and (±2, ±1).
    let spec = PolygonalSpec::new(4)?;
    let table = RepTable::build(&spec, 3, 12);
    println!("t_{{4,j}}(n) for j <= 3, n <= 12:");
    for j in 0..=3 {
        let row: Vec<String> = table.row(j).iter().map(|c| c.to_string()).collect();
        println!("  j = {j}: {}", row.join(" "));
    }

    // The table builds each row as a convolution of the previous one with
    // the theta coefficients. A direct enumeration of index tuples must
    // agree — two routes, one answer.
    for j in 0..=3 {
        for n in 0..=12 {
            let direct = rep_count_bruteforce(&spec, j, n)?;
            assert_eq!(table.count(j, n), &direct, "j = {j}, n = {n}");
        }
    }
    println!("convolution rows match direct tuple enumeration (j <= 3, n <= 12)");

    // The j = 0 row is the empty-sum convention: exactly one empty tuple
    // sums to 0, none to anything else.
    assert_eq!(rep_count(&spec, 0, 0), 1.into());
    assert_eq!(rep_count(&spec, 0, 7), 0.into());

    // Triangular counts grow faster because each value is hit by two
    // indices: t_{3,1}(1) = 2 already, and t_{3,2}(1) = 8 (each of the two
    // summands 0 + 1 and 1 + 0 with two index choices per slot).
    let tri = PolygonalSpec::new(3)?;
    println!("t_{{3,2}}(n) for n <= 8: {}",
        RepTable::build(&tri, 2, 8)
            .row(2)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "));

    // Pentagonal sums at the sizes the identity checks use.
    let pent = PolygonalSpec::new(5)?;
    println!("t_{{5,3}}(4) = {}", rep_count(&pent, 3, 4));
    Ok(())
}
