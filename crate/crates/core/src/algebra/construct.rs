use super::{find_unit, AlgebraError, GradedAlgebra, WedderburnData};
use crate::group::{validate_cocycle, Cocycle, ExtendedDegree, GroupSpec};
use crate::linalg::{unit_vector, Coordinates, Subspace, Vector};
use crate::rational::Rational;

/// The base field as a one-dimensional graded algebra.
pub fn scalar_field(group: &GroupSpec) -> GradedAlgebra {
    let mut a = GradedAlgebra::from_entries(
        "F",
        group.clone(),
        vec!["1".into()],
        vec![group.ext_identity()],
        [(0, 0, 0, Rational::one())],
    )
    .expect("well-formed");
    a.unit = Some(vec![Rational::one()]);
    a.wedderburn = Some(WedderburnData { components: vec![Subspace::full(1)], radical: Subspace::zero(1) });
    a
}

fn unit_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{},{}", i + 1, j + 1)
    }
}

/// `M_n(S)` with the elementary grading `deg(e_ij ⊗ s) = t_i^{-1} t_j deg(s)`.
pub fn matrix_over(
    group: &GroupSpec,
    scalars: &GradedAlgebra,
    tuple: &[ExtendedDegree],
) -> Result<GradedAlgebra, AlgebraError> {
    let n = tuple.len();
    for t in tuple {
        group.check(&t.g)?;
    }
    if let Some(first) = tuple.first() {
        if first != &group.ext_identity() {
            return Err(AlgebraError::NotNormalized(first.clone()));
        }
    }
    let s = scalars.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * s + k;
    let mut labels = Vec::with_capacity(n * n * s);
    let mut degree = Vec::with_capacity(n * n * s);
    for i in 0..n {
        for j in 0..n {
            let dij = group.ext_mul(&group.ext_inv(&tuple[i]), &tuple[j]);
            for k in 0..s {
                let sl = &scalars.basis_labels[k];
                let u = unit_label(i, j, n);
                labels.push(if sl == "1" { u } else { format!("{sl}{u}") });
                degree.push(group.ext_mul(&dij, &scalars.degree[k]));
            }
        }
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for a in 0..s {
                    for b in 0..s {
                        for (c, v) in scalars.product(a, b) {
                            entries.push((idx(i, j, a), idx(j, l, b), idx(i, l, *c), v.clone()));
                        }
                    }
                }
            }
        }
    }
    let name = if s == 1 { format!("M{n}") } else { format!("M{n}({})", scalars.name) };
    let mut m = GradedAlgebra::from_entries(name, group.clone(), labels, degree, entries)?;
    if let Some(su) = &scalars.unit {
        let mut u = m.zero();
        for i in 0..n {
            for k in 0..s {
                u[idx(i, i, k)] = su[k].clone();
            }
        }
        m.unit = Some(u);
    }
    if let Some(w) = &scalars.wedderburn {
        if w.components.len() == 1 && w.radical.is_zero() {
            let d = m.dim();
            m.wedderburn = Some(WedderburnData { components: vec![Subspace::full(d)], radical: Subspace::zero(d) });
        }
    }
    Ok(m)
}

/// `M_n(F)` with the elementary grading induced by `tuple` (first entry the identity).
pub fn matrix_elementary(group: &GroupSpec, n: usize, tuple: &[ExtendedDegree]) -> Result<GradedAlgebra, AlgebraError> {
    if tuple.len() != n {
        return Err(AlgebraError::Length { what: "degree tuple", expected: n, got: tuple.len() });
    }
    matrix_over(group, &scalar_field(group), tuple)
}

/// The subalgebra spanned by the given homogeneous, linearly independent
/// elements of `ambient`, with structure constants in that basis.
pub fn subalgebra_from_basis(
    ambient: &GradedAlgebra,
    name: impl Into<String>,
    elements: &[(String, Vector)],
) -> Result<GradedAlgebra, AlgebraError> {
    let d = ambient.dim();
    let mut degree = Vec::with_capacity(elements.len());
    for (label, v) in elements {
        if v.len() != d {
            return Err(AlgebraError::Length { what: "element", expected: d, got: v.len() });
        }
        degree.push(ambient.homogeneous_degree(v).ok_or_else(|| AlgebraError::Inhomogeneous(label.clone()))?);
    }
    let vectors: Vec<Vector> = elements.iter().map(|(_, v)| v.clone()).collect();
    let coords = Coordinates::new(d, &vectors).ok_or(AlgebraError::Dependent)?;
    let mut entries = Vec::new();
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let p = ambient.mul(a, b);
            let c = coords
                .express(&p)
                .ok_or_else(|| AlgebraError::NotClosed(elements[i].0.clone(), elements[j].0.clone()))?;
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((i, j, k, x));
                }
            }
        }
    }
    let labels = elements.iter().map(|(l, _)| l.clone()).collect();
    let sub = GradedAlgebra::from_entries(name, ambient.group.clone(), labels, degree, entries)?;
    Ok(sub.with_detected_unit())
}

/// Diagonal constraints for triangular subalgebras, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagConstraint {
    /// `a_ii = a_jj = …`
    Identify(Vec<usize>),
    /// `a_ii = 0`
    Zero(usize),
}

/// Upper-triangular `n × n` matrices with the elementary grading from
/// `tuple`, cut down by diagonal constraints. Identified diagonal units
/// become one basis element (e.g. `e11+e44`).
pub fn triangular_subalgebra(
    group: &GroupSpec,
    n: usize,
    tuple: &[ExtendedDegree],
    constraints: &[DiagConstraint],
) -> Result<GradedAlgebra, AlgebraError> {
    let m = matrix_elementary(group, n, tuple)?;
    // class[i] = representative index, or None when zeroed
    let mut class: Vec<Option<usize>> = (0..n).map(Some).collect();
    for c in constraints {
        match c {
            DiagConstraint::Zero(i) => {
                if *i == 0 || *i > n {
                    return Err(AlgebraError::Index(*i));
                }
                let rep = class[i - 1];
                for slot in class.iter_mut() {
                    if *slot == rep {
                        *slot = None;
                    }
                }
            }
            DiagConstraint::Identify(ix) => {
                if ix.iter().any(|&i| i == 0 || i > n) {
                    return Err(AlgebraError::Index(*ix.iter().find(|&&i| i == 0 || i > n).unwrap()));
                }
                let reps: Vec<Option<usize>> = ix.iter().map(|&i| class[i - 1]).collect();
                let target = if reps.contains(&None) { None } else { reps.iter().flatten().min().copied() };
                for slot in class.iter_mut() {
                    if reps.contains(slot) {
                        *slot = target;
                    }
                }
            }
        }
    }
    let d = m.dim();
    let mut elements = Vec::new();
    let mut components = Vec::new();
    for rep in 0..n {
        let members: Vec<usize> = (0..n).filter(|&i| class[i] == Some(rep)).collect();
        if members.is_empty() {
            continue;
        }
        let mut v = m.zero();
        for &i in &members {
            v[i * n + i] = Rational::one();
        }
        let label = members.iter().map(|&i| unit_label(i, i, n)).collect::<Vec<_>>().join("+");
        components.push(vec![elements.len()]);
        elements.push((label, v));
    }
    let mut radical = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            radical.push(elements.len());
            elements.push((unit_label(i, j, n), unit_vector(d, i * n + j)));
        }
    }
    let sub = subalgebra_from_basis(&m, format!("UT{n}"), &elements)?;
    Ok(sub.with_wedderburn_indices(&components, &radical))
}

/// `F^α H` with `deg b_h = h`. The cocycle lives either on `group` (all
/// basis elements even) or on `group.extended()` (parity from the last coordinate).
pub fn twisted_group_algebra(group: &GroupSpec, c: &Cocycle) -> Result<GradedAlgebra, AlgebraError> {
    validate_cocycle(c)?;
    let extended = if c.group == *group {
        false
    } else if c.group == group.extended() {
        true
    } else {
        return Err(AlgebraError::Group(crate::group::GroupError::Mismatch {
            element: c.group.orders.clone(),
            orders: group.orders.clone(),
        }));
    };
    let to_deg = |h: &crate::group::GroupElement| {
        if extended {
            group.element_to_ext(h)
        } else {
            ExtendedDegree::even(h.clone())
        }
    };
    let labels: Vec<String> = c
        .subgroup
        .iter()
        .map(|h| {
            let d = to_deg(h);
            if extended {
                format!("b{}^{}", d.g, d.parity)
            } else {
                format!("b{}", d.g)
            }
        })
        .collect();
    let degree: Vec<ExtendedDegree> = c.subgroup.iter().map(to_deg).collect();
    let pos = |h: &crate::group::GroupElement| c.subgroup.iter().position(|x| x == h).unwrap();
    let mut entries = Vec::new();
    for (i, a) in c.subgroup.iter().enumerate() {
        for (j, b) in c.subgroup.iter().enumerate() {
            let ab = c.group.mul_unchecked(a, b);
            entries.push((i, j, pos(&ab), c.value(a, b).unwrap().clone()));
        }
    }
    let trivial = c.table.values().all(Rational::is_one);
    let name = format!("F{}[{}]", if trivial { "" } else { "^a" }, labels.join(","));
    let mut alg = GradedAlgebra::from_entries(name, group.clone(), labels, degree, entries)?;
    let e = pos(&c.group.identity());
    alg.unit = Some(unit_vector(alg.dim(), e));
    let d = alg.dim();
    alg.wedderburn = Some(WedderburnData { components: vec![Subspace::full(d)], radical: Subspace::zero(d) });
    Ok(alg)
}

/// Group algebra of the subgroup of `G × Z2` generated by `gens`.
pub fn group_algebra(group: &GroupSpec, gens: &[ExtendedDegree]) -> Result<GradedAlgebra, AlgebraError> {
    if gens.iter().all(|g| g.parity == 0) {
        let gs: Vec<_> = gens.iter().map(|g| g.g.clone()).collect();
        let sub = group.subgroup_generated(&gs)?;
        twisted_group_algebra(group, &Cocycle::trivial(group.clone(), sub))
    } else {
        let ext = group.extended();
        let gs: Vec<_> = gens.iter().map(|g| group.ext_to_element(g)).collect();
        let sub = ext.subgroup_generated(&gs)?;
        twisted_group_algebra(group, &Cocycle::trivial(ext, sub))
    }
}

/// `A ⊕ B` with zero cross products.
pub fn direct_sum(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    if a.group != b.group {
        return Err(AlgebraError::Group(crate::group::GroupError::Mismatch {
            element: b.group.orders.clone(),
            orders: a.group.orders.clone(),
        }));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut labels = a.basis_labels.clone();
    for l in &b.basis_labels {
        labels.push(if a.basis_labels.contains(l) { format!("{l}'") } else { l.clone() });
    }
    let mut degree = a.degree.clone();
    degree.extend(b.degree.iter().cloned());
    let mut entries = a.entries();
    entries.extend(b.entries().into_iter().map(|(i, j, k, c)| (i + da, j + da, k + da, c)));
    let mut s =
        GradedAlgebra::from_entries(format!("{}+{}", a.name, b.name), a.group.clone(), labels, degree, entries)?;
    let pad = |v: &Vector, left: bool| -> Vector {
        let mut out = crate::linalg::zero_vector(da + db);
        for (i, x) in v.iter().enumerate() {
            out[if left { i } else { i + da }] = x.clone();
        }
        out
    };
    if let (Some(ua), Some(ub)) = (&a.unit, &b.unit) {
        let mut u = pad(ua, true);
        for (x, y) in u.iter_mut().zip(pad(ub, false)) {
            *x += &y;
        }
        s.unit = Some(u);
    }
    if let (Some(wa), Some(wb)) = (&a.wedderburn, &b.wedderburn) {
        let d = da + db;
        let lift = |sp: &Subspace, left: bool| Subspace::span(d, sp.basis().iter().map(|v| pad(v, left)));
        let mut components: Vec<Subspace> = wa.components.iter().map(|c| lift(c, true)).collect();
        components.extend(wb.components.iter().map(|c| lift(c, false)));
        let radical = lift(&wa.radical, true).sum(&lift(&wb.radical, false));
        s.wedderburn = Some(WedderburnData { components, radical });
    }
    if s.unit.is_none() {
        s.unit = find_unit(&s);
    }
    Ok(s)
}
