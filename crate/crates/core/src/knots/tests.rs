use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::alexander::alexander_matrix;
use crate::words::parse_word;

fn braid_delta(text: &str) -> LaurentPolynomial {
    let p = wirtinger_from_braid(&parse_braid(text, None).unwrap()).unwrap();
    alexander_polynomial(&alexander_matrix(&p, &wirtinger_exponents(&p)).unwrap()).unwrap()
}

#[test]
fn braid_grammar() {
    let b = parse_braid("s1 s1 s1", Some(2)).unwrap();
    assert_eq!((b.strands(), b.letters()), (2, &[(1, 1), (1, 1), (1, 1)][..]));
    let b = parse_braid("s1 s2' s1 s2^-1", None).unwrap();
    assert_eq!(b.strands(), 3);
    assert_eq!(b.letters(), &[(1, 1), (2, -1), (1, 1), (2, -1)]);
    assert_eq!(b.to_string(), "s1 s2' s1 s2'");
    assert!(matches!(parse_braid("s0", None), Err(Error::Parse { position: 0, .. })));
    assert!(matches!(parse_braid("s1 t2", None), Err(Error::Parse { position: 3, .. })));
    assert!(parse_braid("s2", Some(2)).is_err());
    assert!(parse_braid("s1''", None).is_err());
    assert_eq!(parse_braid("", None).unwrap().strands(), 1);
}

#[test]
fn closure_component_counts() {
    assert_eq!(closure_components(&parse_braid("s1 s1 s1", None).unwrap()), 1);
    assert_eq!(closure_components(&parse_braid("", Some(2)).unwrap()), 2);
    assert_eq!(closure_components(&parse_braid("s1 s2' s1 s2'", None).unwrap()), 1);
    assert_eq!(closure_components(&parse_braid("s1 s1", None).unwrap()), 2);
    let err = wirtinger_from_braid(&parse_braid("s1 s1", None).unwrap()).unwrap_err();
    assert_eq!(err, Error::NotAKnot { components: 2 });
}

#[test]
fn wirtinger_examples() {
    assert_eq!(braid_delta("s1 s1 s1").to_string(), "t^2-t+1");
    assert_eq!(braid_delta("s1 s2' s1 s2'").to_string(), "t^2-3t+1");
    assert_eq!(braid_delta("s1 s1 s1 s1 s1").to_string(), "t^4-t^3+t^2-t+1");
    let unknot = wirtinger_from_braid(&parse_braid("", Some(1)).unwrap()).unwrap();
    assert_eq!((unknot.rank(), unknot.relators().len()), (1, 0));
    assert_eq!(braid_delta("").to_string(), "1");
    // trefoil presentation reduces to one relator on two generators
    let p = wirtinger_from_braid(&parse_braid("s1 s1 s1", None).unwrap()).unwrap();
    assert_eq!((p.rank(), p.deficiency()), (2, 1));
}

#[test]
fn random_knot_groups_abelianize_to_z() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut found = 0;
    while found < 20 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=8);
        let letters = (0..len)
            .map(|_| (rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        let b = BraidWord::new(strands, letters).unwrap();
        if closure_components(&b) != 1 {
            continue;
        }
        found += 1;
        let p = wirtinger_from_braid(&b).unwrap();
        assert_eq!(p.abelianization(), (1, vec![]), "braid {b}");
        assert_eq!(p.deficiency(), 1);
        let delta = alexander_polynomial(&alexander_matrix(&p, &wirtinger_exponents(&p)).unwrap()).unwrap();
        assert!(delta.associates(&delta.reciprocal()), "braid {b}: {delta}");
    }
}

#[test]
fn catalog_models_validate() {
    for name in CATALOG {
        let m = catalog(name).unwrap();
        assert_eq!(m.genus(), 1);
        assert!(is_symplectic(&m.homology_matrix()));
        let b = m.boundary_class();
        assert_eq!(m.monodromy().apply_class(&b).unwrap(), b);
        let from_braid = braid_delta(catalog_braid(name).unwrap());
        assert_eq!(&from_braid, m.alexander_reference());
    }
    assert!(matches!(catalog("T25"), Err(Error::UnknownKnot(_))));
}

#[test]
fn trefoil_monodromy_has_order_six_on_homology() {
    let m = catalog("trefoil").unwrap();
    let phi6 = m.monodromy().pow(6);
    assert_eq!(phi6.abelianization_matrix(), vec![vec![1, 0], vec![0, 1]]);
    // φ^6 is conjugation by the boundary word
    let boundary = m.fiber().based_boundary().clone();
    for g in ["a1", "b1"] {
        let x = parse_word(g).unwrap();
        let image = phi6.apply_word(&x).unwrap();
        assert!(image == x.conjugated_by(&boundary) || image == x.conjugated_by(&boundary.inverse()));
    }
}

#[test]
fn custom_models() {
    let text = r#"{"genus": 1, "monodromy": {"a1": "a1", "b1": "b1.a1"}, "alexander": "t^2-2t+1"}"#;
    // a single twist has characteristic polynomial (t-1)^2
    let m = FiberedKnotModel::from_json(text).unwrap();
    assert_eq!(m.name(), "custom");
    let round = FiberedKnotModel::from_json(&m.to_json().to_string()).unwrap();
    assert_eq!(round.monodromy(), m.monodromy());

    let wrong_poly = r#"{"genus": 1, "monodromy": {"a1": "a1", "b1": "b1.a1"}, "alexander": "t^2-t+1"}"#;
    assert!(matches!(FiberedKnotModel::from_json(wrong_poly), Err(Error::InvalidModel(_))));
    // a1 -> b1, b1 -> A1 rotates the handle but moves the boundary class
    let moved = r#"{"genus": 1, "monodromy": {"a1": "b1", "b1": "a1"}, "alexander": "t^2-1"}"#;
    assert!(FiberedKnotModel::from_json(moved).is_err());
    let missing = r#"{"genus": 1, "monodromy": {"a1": "a1"}, "alexander": "1"}"#;
    assert!(matches!(FiberedKnotModel::from_json(missing), Err(Error::InvalidModel(_))));
    let with_inverse = r#"{"genus": 1, "monodromy": {"a1": "a1.b1", "b1": "b1"},
        "inverse": {"a1": "a1.B1", "b1": "b1"}, "alexander": "t^2-2t+1", "name": "twist"}"#;
    assert_eq!(FiberedKnotModel::from_json(with_inverse).unwrap().name(), "twist");
}

#[test]
fn non_fibered_knots_are_out_of_scope() {
    let k = Knot::from_braid("s1 s1 s1 s1 s1", None).unwrap();
    assert!(matches!(k.model(), Err(Error::NotFibered(_))));
    assert_eq!(k.alexander_polynomial().unwrap().to_string(), "t^4-t^3+t^2-t+1");
}
