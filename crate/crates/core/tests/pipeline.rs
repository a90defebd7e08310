use macaulay_core::cubics::{classify_ternary_cubic, j_invariant, TernaryCubicClass};
use macaulay_core::dualcore::{int, parse_dual, parse_series, DualPoly};
use macaulay_core::invsys::{
    annihilator, annihilator_default, dual_coordinates, from_dual_coordinates, hilbert_function, ideal_equal, perp,
    AlgebraPresentation,
};
use macaulay_core::socle3::{
    iso_socle3, normalize_socle3, verify_iso, IsoDecision, IsoWitness, WitnessDocument,
};
use macaulay_core::Error;

fn y(s: &str) -> DualPoly {
    parse_dual(s).unwrap()
}

#[test]
fn dual_and_ideal_presentations_agree() {
    let f = y("y1^3*y2 + y2^3");
    let a = AlgebraPresentation::from_dual(&f).unwrap();
    let ann = a.annihilator().unwrap();
    let b = AlgebraPresentation::from_ideal(&ann.generator_polys(), 2, 4).unwrap();
    assert_eq!(a.hilbert_function, b.hilbert_function);
    assert_eq!(a.hilbert_function, vec![1, 2, 2, 2, 1]);
    assert!(b.gorenstein.gorenstein);
    let g = b.gorenstein.generator.clone().unwrap();
    assert_eq!(annihilator_default(&g).unwrap().colength(), 8);
    assert!(ideal_equal(&ann.generator_polys(), &annihilator(&g, 4).unwrap().generator_polys(), 2, 4).unwrap());
}

#[test]
fn perp_of_published_ideal() {
    let gens = [parse_series("x1^4").unwrap().embed(2), parse_series("x2^2 - x1^3").unwrap()];
    let v = perp(&gens, 2, 4).unwrap();
    assert_eq!(v.dim(), 8);
    assert!(v.contains(&y("y1^3*y2 + y2^3")));
}

#[test]
fn dual_coordinates_round_trip() {
    let f = y("1/2*y1^2*y2 - 3*y2 + 7");
    let c = dual_coordinates(&f, 3).unwrap();
    assert_eq!(from_dual_coordinates(2, 3, &c), f);
    assert!(dual_coordinates(&f, 2).is_err());
}

#[test]
fn normal_form_witness_survives_serialization() {
    let f = y("y1^2*y2 + y1*y3 + y3^2 - y2^2 + y1");
    let nf = normalize_socle3(&f).unwrap();
    let doc: WitnessDocument = serde_json::from_str(&serde_json::to_string(&nf.witness.to_document()).unwrap()).unwrap();
    let w = IsoWitness::from_document(&doc).unwrap();
    assert_eq!(w, nf.witness);
    assert!(verify_iso(&f, &nf.normal, &w).unwrap());
}

#[test]
fn iso_by_shared_normal_form_carries_a_witness() {
    let f = y("y1^2*y2 + y1^2");
    let g = y("y1^2*y2");
    match iso_socle3(&f, &g).unwrap() {
        IsoDecision::Isomorphic { witness: Some(w), .. } => assert!(verify_iso(&f, &g, &w).unwrap()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn hesse_pencil_member_splits_into_lines() {
    // x^3 + y^3 + z^3 - 3xyz is the product of x + w y + w^2 z over the cube roots of unity w.
    let hesse = y("y1^3 + y2^3 + y3^3 - 3*y1*y2*y3");
    assert_eq!(classify_ternary_cubic(&hesse).unwrap(), TernaryCubicClass::ThreeLines);
    assert!(j_invariant(&hesse).is_err());
    let smooth = y("y1^3 + y2^3 + y3^3");
    assert_eq!(j_invariant(&smooth).unwrap(), int(0));
}

#[test]
fn error_paths() {
    assert!(hilbert_function(&DualPoly::zero(2)).is_err());
    assert!(annihilator(&y("y1^3"), 2).is_err());
    assert!(matches!(normalize_socle3(&y("y1^4")), Err(Error::Precondition { .. })));
    assert!(classify_ternary_cubic(&y("y1^3 + y2^2")).is_err());
    let w = IsoWitness::identity(2, 3);
    assert!(verify_iso(&y("y1^3 + y2^3 + y3^3"), &y("y1^3"), &w).is_err());
    assert!(parse_dual("y1 +* y2").is_err());
}
