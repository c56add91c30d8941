//! Cross-checking computed sequences against bundled OEIS b-files: the
//! polygonal values themselves and the theta coefficients, compared entry by
//! entry against externally generated data.
//!
//! Run with `cargo run --example oeis_crosscheck`.

use polygonal_reps::crosscheck::{crosscheck_sequence, parse_bfile, CrosscheckKind};
use polygonal_reps::{PolygonalSpec, Result};

fn main() -> Result<()> {
    // Theta coefficient fixtures: A000122 is the theta series of the
    // squares, A010054 the triangular indicator (s = 6 hits each triangular
    // number once), A080995 the generalized pentagonal indicator.
    let theta_fixtures = [
        ("theta of squares", include_str!("../fixtures/b000122.txt"), "A000122", 4),
        ("triangular indicator", include_str!("../fixtures/b010054.txt"), "A010054", 6),
        ("pentagonal indicator", include_str!("../fixtures/b080995.txt"), "A080995", 5),
    ];
    for (label, text, id, s) in theta_fixtures {
        let fixture = parse_bfile(id, text)?;
        let spec = PolygonalSpec::new(s)?;
        let report = crosscheck_sequence(CrosscheckKind::ThetaCoeffs, &spec, &fixture, 240)?;
        assert!(report.passed);
        println!("{label:22} ({id}, s = {s}): {}", report.detail.as_deref().unwrap_or(""));
    }

    // Value fixtures: the sequences of distinct generalized polygonal
    // numbers. The triangular file serves both s = 3 and s = 6, whose value
    // sets coincide.
    let value_fixtures = [
        ("squares", include_str!("../fixtures/b000290.txt"), "A000290", 4),
        ("triangular numbers", include_str!("../fixtures/b000217.txt"), "A000217", 3),
        ("triangular numbers", include_str!("../fixtures/b000217.txt"), "A000217", 6),
        ("generalized pentagonal", include_str!("../fixtures/b001318.txt"), "A001318", 5),
    ];
    for (label, text, id, s) in value_fixtures {
        let fixture = parse_bfile(id, text)?;
        let spec = PolygonalSpec::new(s)?;
        let limit = u64::try_from(&fixture.entries.last().unwrap().1).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &fixture, limit)?;
        assert!(report.passed);
        println!("{label:22} ({id}, s = {s}): {}", report.detail.as_deref().unwrap_or(""));
    }

    // A corrupted fixture is caught with the exact failure position.
    let good = parse_bfile("A001318", include_str!("../fixtures/b001318.txt"))?;
    let mut bad = good.clone();
    bad.entries[5].1 += 1;
    let spec = PolygonalSpec::new(5)?;
    let report = crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &bad, 100)?;
    assert!(!report.passed);
    println!(
        "corrupted fixture caught: position {} has {} but should be {}",
        report.parameters["n"], report.rhs, report.lhs
    );
    Ok(())
}
