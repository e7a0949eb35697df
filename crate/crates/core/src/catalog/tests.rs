use super::*;
use crate::algebra::verify_wedderburn;
use crate::codim::is_identity;
use crate::envelope::Envelope;
use crate::poly::parse;

#[test]
fn examples_validate() {
    for f in FAMILIES {
        let e = build_spec(f.example).unwrap_or_else(|err| panic!("{}: {err}", f.example));
        validate_algebra(&e.body).unwrap_or_else(|err| panic!("{}: {err:?}", f.example));
        let w = e.body.wedderburn.as_ref().unwrap_or_else(|| panic!("{} lacks Wedderburn data", f.example));
        verify_wedderburn(&e.body, w).unwrap_or_else(|err| panic!("{}: {err:?}", f.example));
        assert_eq!(build_spec(&e.spec()).unwrap().body, e.body);
    }
}

use crate::algebra::validate_algebra;

#[test]
fn dimensions() {
    let dims = [
        ("A1(g,1)@Z2", 4),
        ("A2(3)@Z3", 3),
        ("A2(2)@Z4", 2),
        ("A3@Z4", 4),
        ("A4@Z4", 4),
        ("A5(1,0)@Z2xZ2", 4),
        ("A6(g,1,g)@Z2", 9),
        ("A7(g,1,g,1)@Z2", 13),
        ("A8(g,g^2)@Z3", 9),
        ("A9(g,1,g)@Z2", 12),
        ("A10(g,1,g)@Z2", 12),
        ("A11(g,1)@Z2", 8),
        ("B1(1,g)@Z2", 2),
        ("B2(1,1,g)@Z2", 4),
        ("C1(1,g,g)@Z2", 4),
        ("C2(g)@Z2", 2),
        ("D(g,h)@Z2xZ2", 5),
        ("D0(g,h,gh)@Z2xZ2", 8),
        ("E", 2),
        ("catalog:E_trivial@Z1", 2),
    ];
    for (spec, d) in dims {
        assert_eq!(build_spec(spec).unwrap().body.dim(), d, "{spec}");
    }
}

#[test]
fn a4_grading_is_odd_on_g() {
    let e = build_spec("A4@Z4").unwrap().body;
    let odd: Vec<_> = e.degree.iter().filter(|d| d.parity == 1).collect();
    assert_eq!(odd.len(), 2);
    let z4 = GroupSpec::cyclic(4);
    assert!(odd.iter().any(|d| d.g == z4.element(&[1]).unwrap()));
}

#[test]
fn a8_degrees() {
    let z3 = GroupSpec::cyclic(3);
    let b = build_spec("A8(g,g^2)@Z3").unwrap().body;
    let deg = |l: &str| b.degree[b.basis_labels.iter().position(|x| x == l).unwrap()].clone();
    // tuple (1, g2, g2 g1) with g1 = g, g2 = g^2
    assert_eq!(deg("e12"), ExtendedDegree::even(z3.element(&[2]).unwrap()));
    assert_eq!(deg("e23"), ExtendedDegree::even(z3.element(&[1]).unwrap()));
    assert_eq!(deg("ce13"), ExtendedDegree::odd(z3.identity()));
}

#[test]
fn bad_specs() {
    assert!(matches!(build_spec("A99@Z2"), Err(CatalogError::UnknownId(_))));
    assert!(matches!(build_spec("A6(g,1@Z2"), Err(CatalogError::Syntax(_))));
    assert!(matches!(build_spec("A6(g,1)@Z2"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A2(3)@Z4"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A2(4)@Z4"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A3@Z2"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A5(1,0,g,g)@Z2xZ2"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A5(1,0)@Z4"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("B1(g,g)@Z2"), Err(CatalogError::Params { .. })));
    assert!(matches!(build_spec("A6(g,1,g)@Z0"), Err(CatalogError::Group(_))));
    assert!(matches!(build_spec("M(g,g,g,g,g)@Z2"), Err(CatalogError::Algebra(_))));
}

#[test]
fn a5_trivial_cocycle_is_commutative_on_even_part() {
    let e = build_spec("A5(0,0,trivial)@Z2xZ2").unwrap().body;
    assert!(e.is_commutative());
    assert!(!build_spec("A5(0,0)@Z2xZ2").unwrap().body.is_commutative());
}

fn holds(poly: &str, spec: &str) -> bool {
    let e = build_spec(spec).unwrap();
    let labels = LabelMap::standard(&e.body.group);
    let f = parse(poly, &labels).unwrap_or_else(|err| panic!("{poly}: {err}"));
    is_identity(&Envelope::new(e.body), &f)
}

#[test]
fn witnesses_separate() {
    for w in witness_table() {
        assert!(holds(&w.polynomial, &w.holds_in), "{} should hold in {}", w.polynomial, w.holds_in);
        assert!(!holds(&w.polynomial, &w.fails_in), "{} should fail in {}", w.polynomial, w.fails_in);
    }
}

#[test]
fn flagged_readings_disagree_with_claims() {
    for r in flagged_readings() {
        assert_ne!(holds(&r.polynomial, &r.algebra), r.claimed_identity, "{}", r.polynomial);
    }
}

#[test]
fn list_rows() {
    let rows = list();
    assert_eq!(rows.len(), FAMILIES.len());
    let e = rows.iter().find(|r| r.id == "E").unwrap();
    assert_eq!((e.dim, e.odd_dim), (2, 1));
}
