//! Center, Jacobson radical, subspace products and Wedderburn verification.

use super::{subalgebra_from_basis, AlgebraError, GradedAlgebra, WedderburnData};
use crate::linalg::{zero_vector, RowCollector, Subspace, Vector};
use crate::rational::Rational;

/// `{z : z e_i = e_i z for every basis element}`.
pub fn center(a: &GradedAlgebra) -> Subspace {
    let d = a.dim();
    let mut rows = RowCollector::new(d);
    for i in 0..d {
        let mut eqs = vec![zero_vector(d); d];
        for m in 0..d {
            for (k, c) in a.product(m, i) {
                eqs[*k][m] += c;
            }
            for (k, c) in a.product(i, m) {
                eqs[*k][m] -= c;
            }
        }
        for r in eqs {
            rows.push(r);
        }
    }
    Subspace::span(d, rows.finish().nullspace())
}

/// Span of all products `u v` with `u ∈ U`, `v ∈ V`.
pub fn subspace_product(a: &GradedAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    assert_eq!(u.ambient(), a.dim(), "subspace ambient mismatch");
    assert_eq!(v.ambient(), a.dim(), "subspace ambient mismatch");
    let mut out = Subspace::zero(a.dim());
    for x in u.basis() {
        for y in v.basis() {
            out.insert(a.mul(x, y));
        }
    }
    out
}

/// Smallest `k ≥ 1` with `S^k = 0`, if `S` is nilpotent.
pub fn nilpotency_index(a: &GradedAlgebra, s: &Subspace) -> Option<usize> {
    let mut power = s.clone();
    for k in 1..=a.dim() + 1 {
        if power.is_zero() {
            return Some(k);
        }
        let next = subspace_product(a, &power, s);
        if next.dim() >= power.dim() {
            return None;
        }
        power = next;
    }
    power.is_zero().then_some(a.dim() + 1)
}

/// Two-sided ideal generated by `s`.
pub fn ideal_generated(a: &GradedAlgebra, s: &Subspace) -> Subspace {
    let mut ideal = s.clone();
    let mut frontier: Vec<Vector> = s.basis().to_vec();
    while let Some(v) = frontier.pop() {
        for i in 0..a.dim() {
            for w in [a.mul_right_basis(&v, i), a.mul_left_basis(i, &v)] {
                if ideal.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
    }
    ideal
}

/// Traces of left multiplications `tr(L_{e_m})`.
fn left_traces(a: &GradedAlgebra) -> Vec<Rational> {
    (0..a.dim())
        .map(|m| {
            let mut t = Rational::zero();
            for k in 0..a.dim() {
                for (kk, c) in a.product(m, k) {
                    if *kk == k {
                        t += c;
                    }
                }
            }
            t
        })
        .collect()
}

/// Jacobson radical through the trace form of the unitization `A# = A ⊕ F1`:
/// `J = {x ∈ A : tr(L_{xb}) = 0 for all b ∈ A#}` (characteristic zero).
/// The result is checked to be a graded nilpotent two-sided ideal with
/// semisimple quotient; a failed check is reported as an internal error.
pub fn jacobson_radical(a: &GradedAlgebra) -> Result<Subspace, AlgebraError> {
    let d = a.dim();
    let t = left_traces(a);
    let mut rows = RowCollector::new(d);
    rows.push(t.clone());
    for j in 0..d {
        let mut row = zero_vector(d);
        for m in 0..d {
            for (l, c) in a.product(m, j) {
                row[m].add_product(c, &t[*l]);
            }
        }
        rows.push(row);
    }
    let j = Subspace::span(d, rows.finish().nullspace());

    for v in j.basis() {
        for i in 0..d {
            if !j.contains(&a.mul_right_basis(v, i)) || !j.contains(&a.mul_left_basis(i, v)) {
                return Err(AlgebraError::Internal(format!("radical of {} is not an ideal", a.name)));
            }
        }
    }
    if nilpotency_index(a, &j).is_none() {
        return Err(AlgebraError::Internal(format!("radical of {} is not nilpotent", a.name)));
    }
    // Gram matrix of (x, y) ↦ tr(L_{xy}) on A#, last coordinate the adjoined unit.
    let mut gram = RowCollector::new(d + 1);
    for i in 0..d {
        let mut row = zero_vector(d + 1);
        for k in 0..d {
            for (l, c) in a.product(i, k) {
                row[k].add_product(c, &t[*l]);
            }
        }
        row[d] = t[i].clone();
        gram.push(row);
    }
    let mut last = t.clone();
    last.push(Rational::from_int(d as i64 + 1));
    gram.push(last);
    if gram.rank() != d + 1 - j.dim() {
        return Err(AlgebraError::Internal(format!("quotient of {} by its radical is degenerate", a.name)));
    }
    if !a.is_graded_subspace(&j) {
        return Err(AlgebraError::Internal(format!("radical of {} is not graded", a.name)));
    }
    Ok(j)
}

/// A graded subspace as an algebra in its own right, using a homogeneous basis.
pub fn component_subalgebra(a: &GradedAlgebra, c: &Subspace) -> Result<GradedAlgebra, AlgebraError> {
    let mut degs = a.degree.clone();
    degs.sort();
    degs.dedup();
    let mut elements = Vec::new();
    for d in &degs {
        for v in a.homogeneous_part(c, d).basis() {
            elements.push((a.label_of(v), v.clone()));
        }
    }
    if elements.len() != c.dim() {
        return Err(AlgebraError::Inhomogeneous(format!("{:?}", c.basis())));
    }
    subalgebra_from_basis(a, format!("{}|component", a.name), &elements)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WedderburnViolation {
    #[error("subspace has ambient dimension {got}, expected {expected}")]
    Ambient { expected: usize, got: usize },
    #[error("declared radical (dim {declared}) differs from the computed radical (dim {computed})")]
    Radical { declared: usize, computed: usize },
    #[error("components and radical do not form a direct sum spanning the algebra")]
    NotDirectSum,
    #[error("component {0} is not graded")]
    NotGraded(usize),
    #[error("component {0} is not closed under multiplication")]
    NotSubalgebra(usize),
    #[error("components {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("component {0} is not semisimple")]
    NotSemisimple(usize),
    #[error("component {0} has no unit")]
    NotUnital(usize),
    #[error("component {0}: the identity-degree part of its center has dimension {1}, so it splits")]
    CenterTooLarge(usize, usize),
    #[error("component {0}: the ideal generated by {1} is proper")]
    ProperIdeal(usize, String),
    #[error("radical computation failed: {0}")]
    RadicalFailed(String),
}

/// Checks every invariant of declared Wedderburn data.
pub fn verify_wedderburn(a: &GradedAlgebra, w: &WedderburnData) -> Result<(), WedderburnViolation> {
    let d = a.dim();
    for s in w.components.iter().chain(std::iter::once(&w.radical)) {
        if s.ambient() != d {
            return Err(WedderburnViolation::Ambient { expected: d, got: s.ambient() });
        }
    }
    let j = jacobson_radical(a).map_err(|e| WedderburnViolation::RadicalFailed(e.to_string()))?;
    if j != w.radical {
        return Err(WedderburnViolation::Radical { declared: w.radical.dim(), computed: j.dim() });
    }
    let mut total = w.radical.clone();
    let mut expected = w.radical.dim();
    for c in &w.components {
        total = total.sum(c);
        expected += c.dim();
    }
    if total.dim() != expected || expected != d {
        return Err(WedderburnViolation::NotDirectSum);
    }
    for (i, c) in w.components.iter().enumerate() {
        if !a.is_graded_subspace(c) {
            return Err(WedderburnViolation::NotGraded(i));
        }
        if !subspace_product(a, c, c).is_subspace_of(c) {
            return Err(WedderburnViolation::NotSubalgebra(i));
        }
        for (k, other) in w.components.iter().enumerate() {
            if k != i && !subspace_product(a, c, other).is_zero() {
                return Err(WedderburnViolation::NotOrthogonal(i, k));
            }
        }
        let sub = component_subalgebra(a, c).map_err(|_| WedderburnViolation::NotSubalgebra(i))?;
        let rad = jacobson_radical(&sub).map_err(|e| WedderburnViolation::RadicalFailed(e.to_string()))?;
        if !rad.is_zero() {
            return Err(WedderburnViolation::NotSemisimple(i));
        }
        if sub.unit.is_none() {
            return Err(WedderburnViolation::NotUnital(i));
        }
        // A unital semisimple algebra splits into graded ideals exactly when
        // its center has a nontrivial idempotent of the identity degree.
        let z = center(&sub);
        let ze = sub.homogeneous_part(&z, &sub.group.ext_identity());
        if ze.dim() != 1 {
            return Err(WedderburnViolation::CenterTooLarge(i, ze.dim()));
        }
        for k in 0..sub.dim() {
            let gen = Subspace::span(sub.dim(), [sub.basis_vector(k)]);
            if ideal_generated(&sub, &gen).dim() != sub.dim() {
                return Err(WedderburnViolation::ProperIdeal(i, sub.basis_labels[k].clone()));
            }
        }
    }
    Ok(())
}
