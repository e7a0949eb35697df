use super::io::{emit_algebra, parse_algebra};
use super::*;
use crate::group::{Cocycle, GroupSpec};
use crate::linalg::{unit_vector, Subspace};
use crate::rational::Rational;

fn ed(group: &GroupSpec, r: &[i64], p: u8) -> ExtendedDegree {
    ExtendedDegree { g: group.element(r).unwrap(), parity: p }
}

fn idx(a: &GradedAlgebra, label: &str) -> usize {
    a.basis_labels.iter().position(|l| l == label).unwrap_or_else(|| panic!("no {label}"))
}

fn span(a: &GradedAlgebra, labels: &[&str]) -> Subspace {
    Subspace::span(a.dim(), labels.iter().map(|l| unit_vector(a.dim(), idx(a, l))))
}

fn a6_trivial() -> GradedAlgebra {
    let g = GroupSpec::trivial();
    let t = vec![g.ext_identity(); 4];
    triangular_subalgebra(&g, 4, &t, &[DiagConstraint::Identify(vec![1, 4])]).unwrap()
}

#[test]
fn m2_elementary_grading() {
    let z4 = GroupSpec::cyclic(4);
    let m = matrix_elementary(&z4, 2, &[z4.ext_identity(), ed(&z4, &[1], 0)]).unwrap();
    assert_eq!(validate_algebra(&m), Ok(()));
    assert_eq!(m.degree[idx(&m, "e12")], ed(&z4, &[1], 0));
    assert_eq!(m.degree[idx(&m, "e21")], ed(&z4, &[3], 0));
    let m1 = matrix_elementary(&z4, 2, &[z4.ext_identity(), ed(&z4, &[1], 1)]).unwrap();
    assert_eq!(m1.degree[idx(&m1, "e12")], ed(&z4, &[1], 1));
    assert_eq!(m1.degree[idx(&m1, "e11")], z4.ext_identity());
    let triv = matrix_elementary(&z4, 2, &vec![z4.ext_identity(); 2]).unwrap();
    assert!(triv.degree.iter().all(|d| d == &z4.ext_identity()));
    assert!(matches!(matrix_elementary(&z4, 3, &[z4.ext_identity()]), Err(AlgebraError::Length { .. })));
}

#[test]
fn grading_violation_is_reported() {
    let z4 = GroupSpec::cyclic(4);
    let m = matrix_elementary(&z4, 2, &[z4.ext_identity(), ed(&z4, &[1], 0)]).unwrap();
    let mut degree = m.degree.clone();
    degree[idx(&m, "e11")] = ed(&z4, &[2], 0);
    let bad = GradedAlgebra::from_entries("bad", z4, m.basis_labels.clone(), degree, m.entries()).unwrap();
    assert!(matches!(validate_algebra(&bad), Err(AlgebraViolation::Grading(..))));
}

#[test]
fn group_algebras() {
    let z3 = GroupSpec::cyclic(3);
    let fc3 = group_algebra(&z3, &[ed(&z3, &[1], 0)]).unwrap();
    assert_eq!(fc3.dim(), 3);
    assert!(fc3.is_commutative());
    assert!(fc3.unit.is_some());
    assert_eq!(validate_algebra(&fc3), Ok(()));
    assert!(jacobson_radical(&fc3).unwrap().is_zero());
    assert_eq!(verify_wedderburn(&fc3, fc3.wedderburn.as_ref().unwrap()), Ok(()));

    let v = GroupSpec::new(vec![2, 2]).unwrap();
    let (g, h) = (v.element(&[1, 0]).unwrap(), v.element(&[0, 1]).unwrap());
    let tw = twisted_group_algebra(&v, &Cocycle::sign(v.clone(), &g, &h).unwrap()).unwrap();
    assert_eq!(validate_algebra(&tw), Ok(()));
    let (bg, bh) = (tw.basis_vector(idx(&tw, "b(1,0)")), tw.basis_vector(idx(&tw, "b(0,1)")));
    let gh = tw.mul(&bg, &bh);
    let hg = tw.mul(&bh, &bg);
    assert_eq!(gh, hg.iter().map(|x| -x.clone()).collect::<Vec<_>>());
    assert_eq!(verify_wedderburn(&tw, tw.wedderburn.as_ref().unwrap()), Ok(()));

    let plain = group_algebra(&v, &[ExtendedDegree::even(g.clone()), ExtendedDegree::even(h.clone())]).unwrap();
    let triv = twisted_group_algebra(&v, &Cocycle::trivial(v.clone(), v.elements())).unwrap();
    assert_eq!(plain, triv);
}

#[test]
fn triangular_patterns() {
    let a6 = a6_trivial();
    assert_eq!(a6.dim(), 9);
    assert_eq!(validate_algebra(&a6), Ok(()));
    let z2 = GroupSpec::cyclic(2);
    let a7 =
        triangular_subalgebra(&z2, 5, &vec![z2.ext_identity(); 5], &[DiagConstraint::Zero(1), DiagConstraint::Zero(5)])
            .unwrap();
    assert_eq!(a7.dim(), 13);
    assert!(a7.unit.is_none());
    let ut2 = triangular_subalgebra(&z2, 2, &vec![z2.ext_identity(); 2], &[]).unwrap();
    assert_eq!(ut2.dim(), 3);
    assert_eq!(jacobson_radical(&ut2).unwrap(), span(&ut2, &["e12"]));
}

#[test]
fn centers() {
    let a6 = a6_trivial();
    let z = center(&a6);
    assert_eq!(z, span(&a6, &["e11+e44", "e22", "e33"]).intersection(&z).sum(&span(&a6, &["e14"])));
    assert_eq!(z.dim(), 2);
    assert!(z.contains(a6.unit.as_ref().unwrap()));
    assert!(z.contains(&a6.basis_vector(idx(&a6, "e14"))));

    let g = GroupSpec::trivial();
    let m2 = matrix_elementary(&g, 2, &vec![g.ext_identity(); 2]).unwrap();
    assert_eq!(center(&m2), Subspace::span(4, [m2.unit.clone().unwrap()]));

    // span{e12, e22}
    let z2 = GroupSpec::cyclic(2);
    let m = matrix_elementary(&z2, 2, &[z2.ext_identity(), ed(&z2, &[1], 0)]).unwrap();
    let b1 = subalgebra_from_basis(&m, "B1", &[("e12".into(), m.basis_vector(1)), ("e22".into(), m.basis_vector(3))])
        .unwrap();
    assert!(center(&b1).is_zero());
}

#[test]
fn a6_radical_and_products() {
    let a6 = a6_trivial();
    let j = jacobson_radical(&a6).unwrap();
    assert_eq!(j.dim(), 6);
    assert_eq!(j, span(&a6, &["e12", "e13", "e14", "e23", "e24", "e34"]));
    assert_eq!(verify_wedderburn(&a6, a6.wedderburn.as_ref().unwrap()), Ok(()));

    let e1 = span(&a6, &["e11+e44"]);
    let e2 = span(&a6, &["e22"]);
    let chain = subspace_product(&a6, &subspace_product(&a6, &e1, &j), &e2);
    assert!(chain.contains(&a6.basis_vector(idx(&a6, "e12"))));
    assert!(subspace_product(&a6, &e1, &Subspace::zero(9)).is_zero());
    let j3 = subspace_product(&a6, &subspace_product(&a6, &j, &j), &j);
    assert_eq!(j3, span(&a6, &["e14"]));
    assert_eq!(nilpotency_index(&a6, &j), Some(4));
}

#[test]
fn bad_wedderburn_data() {
    let a6 = a6_trivial();
    let j = jacobson_radical(&a6).unwrap();
    let missing = WedderburnData { components: vec![span(&a6, &["e22"]), span(&a6, &["e33"])], radical: j.clone() };
    assert_eq!(verify_wedderburn(&a6, &missing), Err(WedderburnViolation::NotDirectSum));
    let merged =
        WedderburnData { components: vec![span(&a6, &["e11+e44", "e22"]), span(&a6, &["e33"])], radical: j.clone() };
    assert_eq!(verify_wedderburn(&a6, &merged), Err(WedderburnViolation::CenterTooLarge(0, 2)));
    let wrong_radical = WedderburnData {
        components: vec![span(&a6, &["e11+e44"]), span(&a6, &["e22"]), span(&a6, &["e33"])],
        radical: span(&a6, &["e12"]),
    };
    assert!(matches!(verify_wedderburn(&a6, &wrong_radical), Err(WedderburnViolation::Radical { .. })));
}

#[test]
fn subalgebra_errors() {
    let z2 = GroupSpec::cyclic(2);
    let m = matrix_elementary(&z2, 2, &[z2.ext_identity(), ed(&z2, &[1], 0)]).unwrap();
    let mixed = {
        let mut v = m.basis_vector(1);
        v[0] = Rational::one();
        v
    };
    assert!(matches!(
        subalgebra_from_basis(&m, "x", &[("e11+e12".into(), mixed)]),
        Err(AlgebraError::Inhomogeneous(_))
    ));
    assert!(matches!(
        subalgebra_from_basis(&m, "x", &[("e12".into(), m.basis_vector(1)), ("e21".into(), m.basis_vector(2))]),
        Err(AlgebraError::NotClosed(..))
    ));
}

#[test]
fn direct_sum_is_valid() {
    let z3 = GroupSpec::cyclic(3);
    let fc3 = group_algebra(&z3, &[ed(&z3, &[1], 0)]).unwrap();
    let ut = triangular_subalgebra(&z3, 2, &[z3.ext_identity(), ed(&z3, &[1], 0)], &[]).unwrap();
    let s = direct_sum(&fc3, &ut).unwrap();
    assert_eq!(s.dim(), 6);
    assert_eq!(validate_algebra(&s), Ok(()));
    assert_eq!(verify_wedderburn(&s, s.wedderburn.as_ref().unwrap()), Ok(()));
}

#[test]
fn file_round_trip() {
    let z4 = GroupSpec::cyclic(4);
    let ext = z4.extended();
    let c41 = group_algebra(&z4, &[ed(&z4, &[1], 1)]).unwrap();
    assert_eq!(c41.dim(), 4);
    let _ = ext;
    for a in [a6_trivial(), c41] {
        let text = emit_algebra(&a);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(emit_algebra(&back), text);
    }
    let short = r#"{"name":"F","group":{"orders":[2]},"basis":["1"],"deg":[[0]],"mult":[[0,0,0,"1"]]}"#;
    let f = parse_algebra(short).unwrap();
    assert_eq!(f.degree[0], z2_identity());
    assert!(parse_algebra(r#"{"name":"F","group":{"orders":[2]},"basis":["1"],"deg":[[0,0,0]],"mult":[]}"#).is_err());
    assert!(parse_algebra(r#"{"name":"F","group":{"orders":[2]},"basis":["1"],"deg":[[0]],"mult":[[0,0,0,"1/0"]]}"#)
        .is_err());
}

fn z2_identity() -> ExtendedDegree {
    GroupSpec::cyclic(2).ext_identity()
}
