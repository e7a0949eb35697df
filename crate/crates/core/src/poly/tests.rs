use super::*;
use crate::group::GroupSpec;

fn z3() -> (GroupSpec, LabelMap) {
    let g = GroupSpec::cyclic(3);
    let l = LabelMap::standard(&g);
    (g, l)
}

#[test]
fn parse_and_emit() {
    let (g, l) = z3();
    let f = parse("[x1:g, x2:1]", &l).unwrap();
    assert_eq!(emit(&f, Some(&l)), "x1:g x2:1 - x2:1 x1:g");
    assert_eq!(parse(&emit(&f, Some(&l)), &l).unwrap(), f);
    let h = parse("ac(x1:g^2, x2:(1))", &l).unwrap();
    assert_eq!(h.len(), 2);
    assert_eq!(parse("x1:e", &l).unwrap(), GradedPoly::var(1, g.identity()));
    let c = parse("-3/2 x1:g x2:g + 2(x1:1 - x1:1)", &l).unwrap();
    assert_eq!(emit(&c, Some(&l)), "-3/2 x1:g x2:g");
    assert_eq!(parse("[x1:1,x2:1,x3:1]", &l).unwrap().len(), 4);
    for bad in ["", "x0:g", "x1:q", "x1:g +", "[x1:g]", "x1:g)", "1/0 x1:g", "x1 g"] {
        assert!(parse(bad, &l).is_err(), "{bad}");
    }
    let err = parse("x1:g x2:zz", &l).unwrap_err();
    assert!(matches!(err, PolyError::Syntax { pos: 8, .. }), "{err:?}");
}

#[test]
fn labels_for_products() {
    let g = GroupSpec::new(vec![4, 2]).unwrap();
    let l = LabelMap::standard(&g);
    let e = g.element(&[3, 1]).unwrap();
    assert_eq!(l.name(&e), "g^3h");
    assert_eq!(l.resolve("g^3h").unwrap(), e);
    assert_eq!(l.resolve("(3,1)").unwrap(), e);
    let user = LabelMap::from_json(&g, r#"{"a": [1, 1], "b": [0, 1]}"#).unwrap();
    assert_eq!(user.name(&g.element(&[1, 1]).unwrap()), "a");
    assert_eq!(user.resolve("b").unwrap(), g.element(&[0, 1]).unwrap());
    assert!(LabelMap::from_json(&g, r#"{"a": [1, 1], "b": [5, 3]}"#).is_err());
    assert!(LabelMap::from_json(&g, r#"{"a": [1, 0], "b": [1, 0]}"#).is_err());
    assert!(LabelMap::from_json(&g, r#"{"a b": [1, 0]}"#).is_err());
}

#[test]
fn multilinearization() {
    let (g, l) = z3();
    let f = parse("x1:g x2:g x1:g", &l).unwrap();
    let ms = multilinearize(&f);
    assert_eq!(ms.len(), 1);
    assert_eq!(ms[0].terms.len(), 2);
    assert_eq!(ms[0].tuple, vec![g.element(&[1]).unwrap(); 3]);
    // x1 x1 x2 - x2 x1 x1 + x1 x2 splits into two components
    let f = parse("x1:1 x1:1 x2:1 - x2:1 x1:1 x1:1 + x1:1 x2:1", &l).unwrap();
    let ms = multilinearize(&f);
    assert_eq!(ms.len(), 2);
    assert_eq!(ms.iter().map(|m| m.n()).collect::<Vec<_>>(), vec![2, 3]);
    assert!(multilinearize(&parse("[x1:g, x1:g]", &l).unwrap()).is_empty());
}

#[test]
fn dense_round_trip_and_templates() {
    let (g, l) = z3();
    let t = vec![g.identity(), g.element(&[1]).unwrap(), g.identity(), g.identity()];
    let p = MultilinearPoly::commutator_product(t.clone(), &[2, 2]);
    let back = MultilinearPoly::from_dense(t.clone(), &p.to_dense());
    assert_eq!(back, p);
    let parsed = parse("[x1:1,x2:g][x3:1,x4:1]", &l).unwrap();
    assert_eq!(p.to_graded(), parsed);
    let single = MultilinearPoly::commutator_product(vec![g.identity()], &[1]);
    assert_eq!(single.to_graded(), parse("x1:1", &l).unwrap());
    // relabel moves degrees with variables
    let r = p.relabel(&[1, 0, 2, 3]);
    assert_eq!(r.tuple[0], g.element(&[1]).unwrap());
    assert_eq!(r.to_graded(), parse("[x2:1,x1:g][x3:1,x4:1]", &l).unwrap());
}

#[test]
fn commutator_ideal_has_codimension_one() {
    let g = GroupSpec::trivial();
    let l = LabelMap::standard(&g);
    let gen = parse("[x1:1, x2:1]", &l).unwrap();
    for n in 2..=5 {
        let t = vec![g.identity(); n];
        let s = t_consequences(&g, std::slice::from_ref(&gen), &t);
        assert_eq!(s.codim(), 1, "n = {n}");
    }
    let t1 = vec![g.identity()];
    assert_eq!(t_consequences(&g, &[gen], &t1).dim(), 0);
}

#[test]
fn square_of_commutator_ideal() {
    // multilinear codimensions of T([x1,x2][x3,x4]) are 2^{n-1}(n-2)+2
    let g = GroupSpec::trivial();
    let l = LabelMap::standard(&g);
    let c = ConsequenceGenerators::new(&g, &[parse("[x1:1,x2:1]", &l).unwrap()]);
    let gen = ConsequenceGenerators::new(&g, &[parse("[x1:1,x2:1][x3:1,x4:1]", &l).unwrap()]);
    for n in 3..=5 {
        let t = vec![g.identity(); n];
        let prod = product_span(&t, |s| c.span(s), |s| c.span(s));
        let direct = gen.span(&t);
        assert_eq!(prod, direct, "n = {n}");
        let expected = (1usize << (n - 1)) * (n - 2) + 2;
        assert_eq!(prod.codim(), expected, "n = {n}");
    }
}

#[test]
fn graded_degree_matching() {
    // x1^g x2^g in Z3: a consequence needs two slots of degree g each
    let (g, l) = z3();
    let gen = parse("x1:g x2:g", &l).unwrap();
    let gg = g.element(&[1]).unwrap();
    let g2 = g.element(&[2]).unwrap();
    let s = t_consequences(&g, std::slice::from_ref(&gen), &[gg.clone(), gg.clone()]);
    assert_eq!(s.dim(), 2);
    let s = t_consequences(&g, std::slice::from_ref(&gen), &[gg.clone(), g2.clone()]);
    assert_eq!(s.dim(), 0);
    // g^2 = g·g, so x1^g x2^g x3^g is a consequence in both bracketings
    let s = t_consequences(&g, &[gen], &[gg.clone(), gg.clone(), gg.clone()]);
    assert_eq!(s.dim(), 6);
}

#[test]
fn subspace_relabel_and_checks() {
    let (g, l) = z3();
    let t = vec![g.identity(), g.element(&[1]).unwrap(), g.identity()];
    let f = multilinearize(&parse("x1:1 [x2:g, x3:1]", &l).unwrap()).remove(0);
    let s = PolySubspace { tuple: t.clone(), space: Subspace::span(6, [f.to_dense()]) };
    assert!(s.contains(&f).unwrap());
    let r = s.relabel(&[2, 0, 1]);
    assert!(r.contains(&f.relabel(&[2, 0, 1])).unwrap());
    assert!(s.sum(&r).is_err());
    assert_eq!(PolySubspace::full(t.clone()).codim(), 0);
    assert!(PolySubspace::zero(t).is_subspace_of(&s).unwrap());
}
