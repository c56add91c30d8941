//! Cross-checks of computed sequences against OEIS-style b-files.
//!
//! A b-file is the plain-text sequence format used by the On-Line
//! Encyclopedia of Integer Sequences: one `index value` pair per line,
//! indices strictly increasing, `#` starting a comment line. The bundled
//! fixtures under `fixtures/` were generated independently of this crate, so
//! agreement is a genuine external check rather than a tautology.
//!
//! Two comparisons are supported: the distinct generalized polygonal values
//! themselves (e.g. the square or generalized pentagonal numbers as a
//! sequence), and theta-series coefficients (e.g. the indicator of the
//! triangular numbers). Both produce the same [`VerificationReport`] shape
//! as the identity checks, under the name `crosscheck`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{ExactInteger, ExactRational};
use crate::polygonal::PolygonalSpec;
use crate::verify::{IdentityName, VerificationReport};

/// A parsed b-file: the sequence id (`A000290` style) and the `(index,
/// value)` entries in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileSequence {
    pub sequence_id: String,
    pub entries: Vec<(i64, ExactInteger)>,
}

impl BFileSequence {
    /// Renders the entries back into b-file text, one `index value` line per
    /// entry. Comments are not preserved, so this is a lossless round trip
    /// only for comment-free files — which the bundled fixtures are.
    pub fn to_bfile_string(&self) -> String {
        let mut out = String::new();
        for (index, value) in &self.entries {
            out.push_str(&format!("{index} {value}\n"));
        }
        out
    }
}

/// Parses b-file text. Blank lines and `#` comment lines are skipped; every
/// other line must hold exactly two whitespace-separated tokens, an integer
/// index and an integer value, with indices strictly increasing.
pub fn parse_bfile(sequence_id: &str, text: &str) -> Result<BFileSequence> {
    let mut entries: Vec<(i64, ExactInteger)> = Vec::new();
    let mut last_index: Option<i64> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(index_tok), Some(value_tok), None) =
            (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(Error::parse(
                line_no,
                "expected exactly two whitespace-separated fields",
            ));
        };
        let index: i64 = index_tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad index {index_tok:?}")))?;
        let value: BigInt = value_tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad value {value_tok:?}")))?;
        if let Some(prev) = last_index {
            if index <= prev {
                return Err(Error::parse(
                    line_no,
                    format!("index {index} does not increase past {prev}"),
                ));
            }
        }
        last_index = Some(index);
        entries.push((index, value));
    }
    Ok(BFileSequence {
        sequence_id: sequence_id.to_string(),
        entries,
    })
}

/// What a fixture is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrosscheckKind {
    /// The sorted distinct generalized polygonal values, compared in order
    /// against the fixture values (fixture indices only set the order).
    PolygonalValues,
    /// Theta-series coefficients: the fixture must contain every index
    /// `0..=limit`, and each value must match the coefficient there.
    ThetaCoeffs,
}

/// Compares computed data for `spec` against a parsed fixture, up to the
/// value bound (for [`CrosscheckKind::PolygonalValues`]) or coefficient index
/// (for [`CrosscheckKind::ThetaCoeffs`]) `limit`.
///
/// A fixture that does not cover the requested range is a domain error — the
/// caller asked for more than the file can confirm. A covered range that
/// disagrees produces a failed report whose `lhs`/`rhs` are the first
/// disagreeing pair and whose `n` parameter locates it. On success both
/// sides carry the number of entries compared.
pub fn crosscheck_sequence(
    kind: CrosscheckKind,
    spec: &PolygonalSpec,
    fixture: &BFileSequence,
    limit: u64,
) -> Result<VerificationReport> {
    let mut parameters: BTreeMap<String, u64> = BTreeMap::new();
    parameters.insert("s".to_string(), spec.s() as u64);
    parameters.insert("limit".to_string(), limit);

    let (ours, theirs): (Vec<ExactInteger>, Vec<ExactInteger>) = match kind {
        CrosscheckKind::PolygonalValues => {
            let ours = spec.values_up_to(limit);
            if fixture.entries.len() < ours.len() {
                return Err(Error::domain(format!(
                    "fixture {} has {} entries; need {} to cover values <= {limit}",
                    fixture.sequence_id,
                    fixture.entries.len(),
                    ours.len()
                )));
            }
            let theirs = fixture.entries[..ours.len()]
                .iter()
                .map(|(_, v)| v.clone())
                .collect();
            (ours, theirs)
        }
        CrosscheckKind::ThetaCoeffs => {
            let by_index: BTreeMap<i64, &ExactInteger> =
                fixture.entries.iter().map(|(i, v)| (*i, v)).collect();
            let mut theirs = Vec::with_capacity(limit as usize + 1);
            for n in 0..=limit {
                match by_index.get(&(n as i64)) {
                    Some(v) => theirs.push((*v).clone()),
                    None => {
                        return Err(Error::domain(format!(
                            "fixture {} has no entry for index {n}; need 0..={limit}",
                            fixture.sequence_id
                        )))
                    }
                }
            }
            (spec.theta_coefficients(limit as usize), theirs)
        }
    };

    for (position, (computed, recorded)) in ours.iter().zip(theirs.iter()).enumerate() {
        if computed != recorded {
            parameters.insert("n".to_string(), position as u64);
            return Ok(VerificationReport {
                identity_name: IdentityName::Crosscheck,
                parameters,
                lhs: ExactRational::from_integer(computed.clone()),
                rhs: ExactRational::from_integer(recorded.clone()),
                passed: false,
                detail: Some(format!(
                    "first disagreement with {} at position {position}",
                    fixture.sequence_id
                )),
            });
        }
    }

    let compared = ExactRational::from_integer(ExactInteger::from(ours.len()));
    Ok(VerificationReport {
        identity_name: IdentityName::Crosscheck,
        parameters,
        lhs: compared.clone(),
        rhs: compared,
        passed: true,
        detail: Some(format!(
            "compared {} entries against {}",
            ours.len(),
            fixture.sequence_id
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagonal_fixture() -> BFileSequence {
        parse_bfile("A001318", "0 0\n1 1\n2 2\n3 5\n4 7\n5 12\n").unwrap()
    }

    #[test]
    fn test_parse_skips_comments_and_blanks() {
        let text = "# header comment\n\n0 1\n1 2\n\n# trailing\n2 0\n";
        let parsed = parse_bfile("A000122", text).unwrap();
        assert_eq!(parsed.sequence_id, "A000122");
        assert_eq!(
            parsed.entries,
            vec![
                (0, BigInt::from(1)),
                (1, BigInt::from(2)),
                (2, BigInt::from(0)),
            ]
        );
    }

    #[test]
    fn test_parse_accepts_negative_indices_and_big_values() {
        let text = "-2 123456789012345678901234567890\n-1 -5\n0 0\n";
        let parsed = parse_bfile("X", text).unwrap();
        assert_eq!(parsed.entries.len(), 3);
        assert_eq!(
            parsed.entries[0].1,
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn test_parse_rejects_malformed_lines() {
        let err = parse_bfile("X", "0 1\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_bfile("X", "0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");

        let err = parse_bfile("X", "# ok\nzero 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");

        let err = parse_bfile("X", "0 one\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn test_parse_rejects_nonincreasing_indices() {
        let err = parse_bfile("X", "0 1\n2 2\n2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_bfile("X", "5 1\n4 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn test_bfile_round_trip() {
        let fixture = pentagonal_fixture();
        let rendered = fixture.to_bfile_string();
        assert_eq!(rendered, "0 0\n1 1\n2 2\n3 5\n4 7\n5 12\n");
        assert_eq!(parse_bfile("A001318", &rendered).unwrap(), fixture);
    }

    #[test]
    fn test_crosscheck_polygonal_values_pass() {
        let spec = PolygonalSpec::new(5).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &pentagonal_fixture(), 12)
                .unwrap();
        assert!(report.passed);
        assert_eq!(report.identity_name, IdentityName::Crosscheck);
        assert_eq!(report.parameters.get("s"), Some(&5));
        assert_eq!(report.parameters.get("limit"), Some(&12));
        assert_eq!(report.detail.as_deref(), Some("compared 6 entries against A001318"));
    }

    #[test]
    fn test_crosscheck_polygonal_values_ignores_index_offset() {
        // Same values, 1-based indices: ordering is all that matters.
        let fixture = parse_bfile("A001318", "1 0\n2 1\n3 2\n4 5\n5 7\n6 12\n").unwrap();
        let spec = PolygonalSpec::new(5).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &fixture, 12).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn test_crosscheck_polygonal_values_mismatch() {
        let fixture = parse_bfile("A001318", "0 0\n1 1\n2 2\n3 6\n4 7\n5 12\n").unwrap();
        let spec = PolygonalSpec::new(5).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &fixture, 12).unwrap();
        assert!(!report.passed);
        assert_eq!(report.parameters.get("n"), Some(&3));
        assert_eq!(report.lhs, ExactRational::from_integer(BigInt::from(5)));
        assert_eq!(report.rhs, ExactRational::from_integer(BigInt::from(6)));
    }

    #[test]
    fn test_crosscheck_polygonal_values_short_fixture() {
        let spec = PolygonalSpec::new(5).unwrap();
        let err = crosscheck_sequence(
            CrosscheckKind::PolygonalValues,
            &spec,
            &pentagonal_fixture(),
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(_)), "{err}");
    }

    #[test]
    fn test_crosscheck_theta_pass_and_mismatch() {
        let spec = PolygonalSpec::new(4).unwrap();
        let mut lines = String::new();
        for (n, c) in spec.theta_coefficients(10).iter().enumerate() {
            lines.push_str(&format!("{n} {c}\n"));
        }
        let fixture = parse_bfile("A000122", &lines).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::ThetaCoeffs, &spec, &fixture, 10).unwrap();
        assert!(report.passed);

        // Corrupt coefficient 4 (a square, so truly 2) to 3.
        let corrupted = lines.replace("4 2", "4 3");
        let fixture = parse_bfile("A000122", &corrupted).unwrap();
        let report =
            crosscheck_sequence(CrosscheckKind::ThetaCoeffs, &spec, &fixture, 10).unwrap();
        assert!(!report.passed);
        assert_eq!(report.parameters.get("n"), Some(&4));
        assert_eq!(report.lhs, ExactRational::from_integer(BigInt::from(2)));
        assert_eq!(report.rhs, ExactRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn test_crosscheck_theta_missing_index() {
        let spec = PolygonalSpec::new(4).unwrap();
        let fixture = parse_bfile("A000122", "0 1\n1 2\n3 0\n").unwrap();
        let err = crosscheck_sequence(CrosscheckKind::ThetaCoeffs, &spec, &fixture, 3).unwrap_err();
        assert!(matches!(err, Error::Domain(_)), "{err}");
    }

    #[test]
    fn test_bundled_fixtures_agree() {
        // The committed fixtures were generated independently; every one must
        // agree with the corresponding computation over its full range.
        let theta_cases = [
            ("A000122", include_str!("../fixtures/b000122.txt"), 4),
            ("A010054", include_str!("../fixtures/b010054.txt"), 6),
            ("A080995", include_str!("../fixtures/b080995.txt"), 5),
        ];
        for (id, text, s) in theta_cases {
            let fixture = parse_bfile(id, text).unwrap();
            let spec = PolygonalSpec::new(s).unwrap();
            let report =
                crosscheck_sequence(CrosscheckKind::ThetaCoeffs, &spec, &fixture, 240).unwrap();
            assert!(report.passed, "{id} disagrees: {:?}", report.detail);
        }

        let value_cases = [
            ("A000290", include_str!("../fixtures/b000290.txt"), 4),
            ("A000217", include_str!("../fixtures/b000217.txt"), 3),
            ("A000217", include_str!("../fixtures/b000217.txt"), 6),
            ("A001318", include_str!("../fixtures/b001318.txt"), 5),
        ];
        for (id, text, s) in value_cases {
            let fixture = parse_bfile(id, text).unwrap();
            let spec = PolygonalSpec::new(s).unwrap();
            // Compare the full fixture: limit = last recorded value.
            let limit = u64::try_from(&fixture.entries.last().unwrap().1).unwrap();
            let report =
                crosscheck_sequence(CrosscheckKind::PolygonalValues, &spec, &fixture, limit)
                    .unwrap();
            assert!(report.passed, "{id} (s={s}) disagrees: {:?}", report.detail);
            assert_eq!(
                report.lhs,
                ExactRational::from_integer(BigInt::from(fixture.entries.len())),
                "{id} (s={s}) did not compare every fixture entry"
            );
        }
    }
}
