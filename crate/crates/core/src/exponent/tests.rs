use super::*;
use crate::algebra::{group_algebra, matrix_elementary, triangular_subalgebra, DiagConstraint};
use crate::group::{ExtendedDegree, GroupSpec};
use crate::linalg::unit_vector;

fn a6_trivial() -> GradedAlgebra {
    let g = GroupSpec::trivial();
    triangular_subalgebra(&g, 4, &vec![g.ext_identity(); 4], &[DiagConstraint::Identify(vec![1, 4])]).unwrap()
}

#[test]
fn group_algebra_exponents() {
    for p in [2u32, 3, 5] {
        let g = GroupSpec::cyclic(p);
        let fc = group_algebra(&g, &[ExtendedDegree::even(g.element(&[1]).unwrap())]).unwrap();
        let opts = SearchOptions::new(SearchMode::Template, 2);
        let r = exponent_report(&fc, Some(&opts)).unwrap();
        assert_eq!(r.exp_g, p as usize);
        assert_eq!(r.delta_lower_bound, p as usize);
        assert_eq!(r.delta_exact, Some(p as usize));
        assert_eq!(r.delta_witness.as_ref().unwrap().poly.n(), 1);
    }
}

#[test]
fn a6_admissible_chain() {
    let a = a6_trivial();
    let cert = admissible_max(&a).unwrap();
    assert_eq!(cert.dim, 3);
    assert_eq!(cert.components, vec![0, 1, 2]);
    assert!(cert.witness.iter().any(|c| !c.is_zero()));
    let r = exponent_report(&a, None).unwrap();
    assert_eq!(r.exp_g, 3);
    assert_eq!(r.delta_exact, None);
}

#[test]
fn a6_template_witness() {
    let a = a6_trivial();
    let opts = SearchOptions::new(SearchMode::Template, 6);
    let r = exponent_report(&a, Some(&opts)).unwrap();
    assert_eq!(r.delta_lower_bound, 3);
    assert_eq!(r.delta_exact, Some(3));
    let w = r.delta_witness.clone().unwrap();
    let search = WitnessSearch::new(&a).unwrap();
    assert!(search.verify(&w));
    assert!(r.consistent());
}

#[test]
fn m2_full_mode_degree_four() {
    let g = GroupSpec::trivial();
    let m2 = matrix_elementary(&g, 2, &vec![g.ext_identity(); 2]).unwrap();
    let opts = SearchOptions::new(SearchMode::Full, 4);
    let r = exponent_report(&m2, Some(&opts)).unwrap();
    assert_eq!(r.exp_g, 4);
    assert_eq!(r.delta_lower_bound, 4);
    assert_eq!(r.delta_witness.as_ref().unwrap().poly.n(), 4);
    let low = SearchOptions::new(SearchMode::Full, 3);
    assert_eq!(exponent_report(&m2, Some(&low)).unwrap().delta_lower_bound, 0);
    let over = SearchOptions::new(SearchMode::Full, 5);
    assert!(matches!(exponent_report(&m2, Some(&over)), Err(ExponentError::Refused(_))));
}

#[test]
fn adapted_basis_rewrites_mixed_bases() {
    // F ⊕ F with basis (1,1), (1,0): components are the two coordinate lines
    let g = GroupSpec::trivial();
    let f = crate::algebra::scalar_field(&g);
    let s = crate::algebra::direct_sum(&f, &f).unwrap();
    let u = |a: i64, b: i64| vec![Rational::from_int(a), Rational::from_int(b)];
    let mixed =
        crate::algebra::subalgebra_from_basis(&s, "FF", &[("u".into(), u(1, 1)), ("p".into(), u(1, 0))]).unwrap();
    // in the (u, p) basis the two ideals are span{u − p} and span{p}
    let mut mixed = mixed;
    mixed.wedderburn = Some(crate::algebra::WedderburnData {
        components: vec![Subspace::span(2, [u(1, -1)]), Subspace::span(2, [unit_vector(2, 1)])],
        radical: Subspace::zero(2),
    });
    let ad = adapted_basis(&mixed).unwrap();
    assert_eq!(ad.owner, vec![Some(0), Some(1)]);
    assert_eq!(admissible_max(&mixed).unwrap().dim, 1);
}

#[test]
fn target_order() {
    assert_eq!(target_sets(&[1, 2]), vec![vec![0, 1], vec![1], vec![0]]);
    assert_eq!(target_sets(&[1, 1]), vec![vec![0, 1], vec![0], vec![1]]);
}
