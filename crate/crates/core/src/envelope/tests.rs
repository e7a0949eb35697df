use super::oracle::Oracle;
use super::*;
use crate::algebra::{group_algebra, matrix_elementary, triangular_subalgebra, DiagConstraint};
use crate::codim::tuple_kernels;
use crate::group::{ExtendedDegree, GroupSpec};
use crate::poly::{all_tuples, MultilinearPoly};

fn odd_m2() -> Envelope {
    let g = GroupSpec::trivial();
    let t = [g.ext_identity(), ExtendedDegree::odd(g.identity())];
    Envelope::new(matrix_elementary(&g, 2, &t).unwrap())
}

fn grassmann() -> Envelope {
    let g = GroupSpec::trivial();
    Envelope::new(group_algebra(&g, &[ExtendedDegree::odd(g.identity())]).unwrap())
}

fn idx(env: &Envelope, l: &str) -> usize {
    env.body().basis_labels.iter().position(|x| x == l).unwrap()
}

#[test]
fn monomial_signs() {
    let env = odd_m2();
    let (e12, e21, e11) = (idx(&env, "e12"), idx(&env, "e21"), idx(&env, "e11"));
    let v = env.eval_monomial(&[1, 0], &[e12, e21]);
    assert_eq!(v.tag, vec![0, 1]);
    let b2b1 = env.body().mul(&env.body().basis_vector(e21), &env.body().basis_vector(e12));
    assert_eq!(v.element, b2b1.iter().map(|c| -c).collect::<Vec<_>>());
    let w = env.eval_monomial(&[0, 1], &[e11, e11]);
    assert!(w.tag.is_empty());
    assert_eq!(w.element, env.body().basis_vector(e11));
}

#[test]
fn odd_commutator_on_symmetric_element() {
    // [x1, x2] at x1 = x2 = e12 + e21, expanded by linearity
    let env = odd_m2();
    let t = vec![GroupSpec::trivial().identity(); 2];
    let f = MultilinearPoly::commutator_product(t, &[2]);
    let odd = [idx(&env, "e12"), idx(&env, "e21")];
    let mut total = vec![Rational::zero(); 4];
    for &a in &odd {
        for &b in &odd {
            let v = env.eval_poly(&f, &[a, b]).unwrap();
            assert_eq!(v.tag, vec![0, 1]);
            for (x, y) in total.iter_mut().zip(&v.element) {
                *x += y;
            }
        }
    }
    let mut expected = vec![Rational::zero(); 4];
    expected[idx(&env, "e11")] = Rational::from_int(2);
    expected[idx(&env, "e22")] = Rational::from_int(2);
    assert_eq!(total, expected);
}

#[test]
fn anticommutator_of_odd_elements() {
    let env = grassmann();
    let t = vec![GroupSpec::trivial().identity(); 2];
    let mut f = MultilinearPoly::new(t);
    f.add_term(vec![0, 1], &Rational::one());
    f.add_term(vec![1, 0], &Rational::one());
    let c = idx(&env, "b()^1");
    // ε1ε2(c·c − c·c) = 0
    assert!(env.eval_poly(&f, &[c, c]).unwrap().is_zero());
    assert!(env.eval_poly(&f, &[c, 0]).unwrap().element.iter().any(|x| !x.is_zero()));
    assert!(env.eval_poly(&f, &[0, 0, 0]).is_err());
}

#[test]
fn degree_mismatch_is_an_error() {
    let z2 = GroupSpec::cyclic(2);
    let a = matrix_elementary(&z2, 2, &[z2.ext_identity(), ExtendedDegree::even(z2.element(&[1]).unwrap())]).unwrap();
    let env = Envelope::new(a);
    let f = MultilinearPoly::commutator_product(vec![z2.identity()], &[1]);
    let e12 = idx(&env, "e12");
    assert!(matches!(env.eval_poly(&f, &[e12]), Err(EnvelopeError::DegreeMismatch { .. })));
}

#[test]
fn twisted_centers() {
    let env = grassmann();
    // E is commutative on even tags, and nothing anticommutes with every odd c
    assert_eq!(env.twisted_center(0).dim(), 2);
    assert_eq!(env.twisted_center(1).dim(), 0);
}

fn agree_with_oracle(env: &Envelope, n_max: usize) {
    let oracle = Oracle::new(env.body());
    for n in 1..=n_max {
        for t in all_tuples(env.group(), n) {
            let words = perm::all(n);
            for w in &words {
                let mut f = MultilinearPoly::new(t.clone());
                f.add_term(w.clone(), &Rational::one());
                let expansion = oracle.eval(&f).unwrap();
                for a in env.assignments(&t) {
                    let v = env.eval_monomial(w, &a);
                    assert_eq!(expansion.coefficient(env.body(), &a), v.element, "{w:?} at {a:?}");
                }
            }
            let k = tuple_kernels(env, &t);
            assert_eq!(oracle.identity_kernel(&t).unwrap(), k.identity);
            assert_eq!(oracle.central_kernel(&t).unwrap(), k.central);
        }
    }
}

#[test]
fn oracle_agreement_small_bodies() {
    agree_with_oracle(&grassmann(), 4);
    agree_with_oracle(&odd_m2(), 3);
    let z2 = GroupSpec::cyclic(2);
    let g = z2.element(&[1]).unwrap();
    let t = [z2.ext_identity(), ExtendedDegree::odd(g.clone()), ExtendedDegree::even(g)];
    let ut = triangular_subalgebra(&z2, 3, &t, &[DiagConstraint::Identify(vec![1, 3])]).unwrap();
    agree_with_oracle(&Envelope::new(ut), 3);
}

#[test]
fn oracle_budget() {
    let env = grassmann();
    let o = Oracle::new(env.body()).with_budget(2);
    let t = vec![GroupSpec::trivial().identity(); 3];
    assert!(o.identity_kernel(&t).is_err());
    assert!(o.central_kernel(&t[..2]).is_err());
}

#[test]
fn assignment_enumeration() {
    let z2 = GroupSpec::cyclic(2);
    let g = z2.element(&[1]).unwrap();
    let a = matrix_elementary(&z2, 2, &[z2.ext_identity(), ExtendedDegree::odd(g.clone())]).unwrap();
    let env = Envelope::new(a);
    let t = vec![g.clone(), z2.identity(), g];
    assert_eq!(env.assignments(&t).count(), 8);
    assert_eq!(env.assignment_count(&t), 8);
    let z3 = GroupSpec::cyclic(3);
    let env3 = Envelope::new(matrix_elementary(&z3, 1, &[z3.ext_identity()]).unwrap());
    assert_eq!(env3.assignments(&[z3.element(&[1]).unwrap()]).count(), 0);
}

#[test]
fn sampled_agreement_is_seeded() {
    let body = crate::catalog::build_spec("A9(g,1,g)@Z2").unwrap().body;
    let env = Envelope::new(body);
    let a = super::sample::sampled_agreement(&env, 5, 4, 7).unwrap();
    let b = super::sample::sampled_agreement(&env, 5, 4, 7).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.words, 4);
    assert!(a.assignments > 0);
    assert!(a.mismatch.is_none());
}
