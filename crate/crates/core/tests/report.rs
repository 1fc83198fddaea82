//! Wire format tests: input parsing, pair round trips, and certificate
//! serialization.

mod common;

use common::pair;
use locvol::report::{
    pair_from_json, pair_to_json, to_pretty_json, CertificateWire, ReportWire,
};
use locvol::{check_surface_lct_bound, certifiable_corpus, minimize_nvol, rat, CorpusParams, CorpusShape, Error};

#[test]
fn input_documents_parse_into_pairs() {
    let text = r#"{
        "ambient": "A2",
        "boundary": [{"coeff": "1/2", "poly": "y^2 - x^3"}]
    }"#;
    let p = pair_from_json(text).unwrap();
    assert!(p.is_smooth_ambient());
    assert_eq!(p.boundary().len(), 1);
    assert_eq!(p.boundary()[0].coeff, rat(1, 2));

    let quotient = r#"{
        "ambient": {"quotient": {"r": 3, "a": 2}},
        "boundary": [{"coeff": "1/2", "poly": "x*y"}]
    }"#;
    let q = pair_from_json(quotient).unwrap();
    assert!(!q.is_smooth_ambient());
}

#[test]
fn bad_documents_are_rejected_with_typed_errors() {
    assert!(matches!(
        pair_from_json(r#"{"ambient": "P2", "boundary": []}"#),
        Err(Error::Parse(_))
    ));
    assert!(matches!(
        pair_from_json(r#"{"ambient": "A2", "boundary": [{"coeff": "2", "poly": "x"}]}"#),
        Err(Error::CoefficientRange)
    ));
    assert!(matches!(
        pair_from_json(
            r#"{"ambient": {"quotient": {"r": 3, "a": 2}},
                "boundary": [{"coeff": "1/2", "poly": "x + y"}]}"#
        ),
        Err(Error::NotInvariant)
    ));
    assert!(matches!(pair_from_json("not json"), Err(Error::Parse(_))));
    assert!(matches!(
        pair_from_json(r#"{"ambient": "A2", "boundary": [{"coeff": "1/3", "poly": "z"}]}"#),
        Err(Error::Parse(_))
    ));
}

#[test]
fn pairs_round_trip_through_json() {
    let cases = [
        pair(&[]),
        pair(&[(1, 2, "y^2 - x^3 - x^7")]),
        pair(&[(1, 2, "x"), (1, 3, "y^2 - x^3")]),
    ];
    for p in cases {
        let text = pair_to_json(&p);
        let back = pair_from_json(&text).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn certificates_serialize_with_exact_values() {
    let cert = minimize_nvol(&pair(&[(5, 8, "x^2 - y^3")])).unwrap();
    let wire = CertificateWire::from_certificate(&cert).unwrap();
    assert_eq!(wire.weights, [3, 2]);
    assert_eq!(wire.value, "25/96");
    assert_eq!(wire.different.len(), 3);
    assert!(wire.certified);
    assert!(wire.note.is_none());
    let text = to_pretty_json(&wire);
    assert!(text.contains("\"weights\""));
    assert!(!text.contains("note"));

    let loose = minimize_nvol(&pair(&[(1, 2, "x + y")])).unwrap();
    let wire = CertificateWire::from_certificate(&loose).unwrap();
    assert!(!wire.certified);
    assert!(wire.note.is_some());
    assert!(to_pretty_json(&wire).contains("note"));
}

#[test]
fn reports_flatten_to_the_wire() {
    let corpus = certifiable_corpus(CorpusParams::new(CorpusShape::Mixed, 5, 3)).unwrap();
    let report = check_surface_lct_bound(&corpus);
    let wire = ReportWire::from_report(&report);
    assert_eq!(wire.theorem, "surface-lct-bound");
    assert_eq!(wire.records.len(), 5);
    assert_eq!(wire.summary.passed, 5);
    assert!(wire.summary.worst_margin.is_some());
    let text = to_pretty_json(&wire);
    assert!(text.contains("\"theorem\""));
}
