//! The weighted divisor sums, their closed forms, and the identity tying
//! them to representation counts — including the one conjectured closed form
//! that turns out to be false.
//!
//! Run with `cargo run --example divisor_identities`.

use polygonal_reps::divisorside::{
    divisor_lhs, jha_square_lhs, jha_triangular_lhs, prime_corollary_rhs_value,
};
use polygonal_reps::verify::theorem_rhs;
use polygonal_reps::{PolygonalSpec, RepTable, Result};

fn main() -> Result<()> {
    // The divisor sum weights each divisor d of n by residue conditions on
    // m = n/d modulo v = s - 2: a sign-carrying weight when m = 1 or v - 1
    // (mod v), and a plain weight when v divides m.
    println!("divisor sums at s = 4 (squares):");
    for n in 1..=10 {
        println!("  n = {n:2}: {}", divisor_lhs(n, 4)?);
    }

    // At s = 4 and s = 6 the sum collapses to closed forms over odd/even
    // divisors; both must reproduce the general sum exactly.
    for n in 1..=200 {
        assert_eq!(jha_square_lhs(n)?, divisor_lhs(n, 4)?);
        assert_eq!(jha_triangular_lhs(n)?, divisor_lhs(n, 6)?);
    }
    println!("closed forms match the general sum at s = 4 and s = 6 (n <= 200)");

    // The central identity: the divisor sum equals the alternating binomial
    // combination of representation counts,
    //   sum_{j=1}^{n} ((-1)^j / j) C(n,j) t_{s,j}(n).
    for s in [4, 5, 6, 7] {
        let spec = PolygonalSpec::new(s)?;
        let table = RepTable::build(&spec, 20, 20);
        for n in 1..=20 {
            assert_eq!(divisor_lhs(n, s)?, theorem_rhs(n, s, &table)?);
        }
    }
    println!("divisor sums match representation-count sums (s in {{4,5,6,7}}, n <= 20)");

    // At s = p + 2 for an odd prime p, with n = pm and p not dividing m,
    // there is a tempting sigma-ratio closed form sigma(n)/n - c/p. It holds
    // for small m but is not an identity: the first failure is n = 15,
    // where divisor 5 of m = 5 breaks the pattern the small cases suggest.
    for (n, p) in [(3, 3), (6, 3), (15, 3), (15, 5), (20, 5)] {
        let conjectured = prime_corollary_rhs_value(n, p)?;
        let actual = divisor_lhs(n, p as i64 + 2)?;
        let verdict = if conjectured == actual { "matches" } else { "WRONG" };
        println!("  n = {n:2}, p = {p}: closed form {conjectured} vs actual {actual} ({verdict})");
    }
    Ok(())
}
