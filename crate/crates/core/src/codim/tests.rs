use super::*;
use crate::algebra::{group_algebra, matrix_elementary, subalgebra_from_basis, triangular_subalgebra, DiagConstraint};
use crate::group::ExtendedDegree;
use crate::poly::{parse, LabelMap};

fn b1(g: &GroupSpec) -> GradedAlgebra {
    let deg = ExtendedDegree::even(g.element(&[1]).unwrap());
    let m = matrix_elementary(g, 2, &[g.ext_identity(), deg]).unwrap();
    subalgebra_from_basis(&m, "B1", &[("e12".into(), m.basis_vector(1)), ("e22".into(), m.basis_vector(3))]).unwrap()
}

fn grassmann() -> Envelope {
    let g = GroupSpec::trivial();
    Envelope::new(group_algebra(&g, &[ExtendedDegree::odd(g.identity())]).unwrap())
}

#[test]
fn b1_kernel() {
    let z2 = GroupSpec::cyclic(2);
    let env = Envelope::new(b1(&z2));
    let t = vec![z2.identity(), z2.element(&[1]).unwrap()];
    let k = tuple_kernels(&env, &t);
    let l = LabelMap::standard(&z2);
    let f = multilinearize(&parse("x1:1 x2:g", &l).unwrap()).remove(0);
    assert_eq!(k.identity.dim(), 1);
    assert!(k.identity.contains(&f).unwrap());
    // zero center: central kernel is the identity kernel
    assert_eq!(k.central, k.identity);
    let empty = vec![z2.element(&[1]).unwrap(); 2];
    assert_eq!(tuple_kernels(&env, &empty).c(), 0);
}

#[test]
fn m2_trivial_grading() {
    let g = GroupSpec::trivial();
    let env = Envelope::new(matrix_elementary(&g, 2, &vec![g.ext_identity(); 2]).unwrap());
    let k = tuple_kernels(&env, &[g.identity(), g.identity()]);
    assert_eq!(k.c(), 2);
    let l = LabelMap::standard(&g);
    assert_eq!(classify(&env, &parse("[x1:1,x2:1]", &l).unwrap()).membership, Membership::NotCentral);
    let v = classify(&env, &parse("[x1:1,x2:1]", &l).unwrap());
    let (_, a, val) = v.witness.unwrap();
    assert!(!env.is_central(&val), "{a:?}");
}

#[test]
fn commutative_group_algebra() {
    let z2 = GroupSpec::cyclic(2);
    let env = Envelope::new(group_algebra(&z2, &[ExtendedDegree::even(z2.element(&[1]).unwrap())]).unwrap());
    let reports = codim_sequence(&env, 5, &Budget::default()).unwrap();
    for r in &reports {
        assert_eq!(r.totals.c, 1 << r.n, "n = {}", r.n);
        assert_eq!(r.totals.cz, 0);
        assert_eq!(r.totals.cdelta, r.totals.c);
    }
}

#[test]
fn grassmann_codimensions() {
    let env = grassmann();
    let reports = codim_sequence(&env, 6, &Budget::default()).unwrap();
    for r in &reports {
        assert_eq!(r.totals.c, 1 << (r.n - 1), "n = {}", r.n);
    }
    assert_eq!(reports[1].totals.cz, 1);
    assert_eq!(reports[1].totals.cdelta, 1);
    let g = GroupSpec::trivial();
    let l = LabelMap::standard(&g);
    assert_eq!(classify(&env, &parse("[x1:1,x2:1]", &l).unwrap()).membership, Membership::ProperCentral);
    assert_eq!(classify(&env, &parse("[x1:1,x2:1,x3:1]", &l).unwrap()).membership, Membership::Identity);
}

#[test]
fn zero_algebra() {
    let g = GroupSpec::cyclic(2);
    let z = GradedAlgebra::from_entries("0", g.clone(), vec![], vec![], []).unwrap();
    let env = Envelope::new(z);
    for r in codim_sequence(&env, 3, &Budget::default()).unwrap() {
        assert_eq!(r.totals, Totals::default());
    }
}

#[test]
fn budget_refusal() {
    let env = grassmann();
    assert!(matches!(codim_sequence(&env, 7, &Budget::new(6)), Err(Refusal::Degree { n: 7, max: 6 })));
    let tight = Budget { max_degree: 9, max_ms: Some(0) };
    assert!(matches!(codim_sequence(&env, 6, &tight), Err(Refusal::Time { .. })));
}

#[test]
fn canonical_tuple_counts() {
    let g = GroupSpec::cyclic(3);
    for n in 1..=4 {
        let total: u64 = canonical_tuples(&g, n).iter().map(|(_, m)| m).sum();
        assert_eq!(total, 3u64.pow(n as u32));
    }
}

#[test]
fn direct_path_agrees() {
    let z2 = GroupSpec::cyclic(2);
    let g = ExtendedDegree::even(z2.element(&[1]).unwrap());
    let t = [z2.ext_identity(), g.clone(), z2.ext_identity(), g];
    let a = triangular_subalgebra(&z2, 4, &t, &[DiagConstraint::Identify(vec![1, 4])]).unwrap();
    let env = Envelope::new(a.clone());
    for n in 1..=3 {
        for tuple in crate::poly::all_tuples(&z2, n) {
            assert_eq!(direct_kernels(&a, &tuple).unwrap(), tuple_kernels(&env, &tuple));
        }
    }
    assert!(direct_kernels(grassmann().body(), &[GroupSpec::trivial().identity()]).is_err());
}
