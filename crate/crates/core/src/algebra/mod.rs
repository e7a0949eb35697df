//! Finite-dimensional `G × Z2`-graded algebras over `Q` given by structure constants.

mod construct;
pub mod io;
mod radical;

pub use construct::{
    direct_sum, group_algebra, matrix_elementary, matrix_over, scalar_field, subalgebra_from_basis,
    triangular_subalgebra, twisted_group_algebra, DiagConstraint,
};
pub use radical::{
    center, component_subalgebra, ideal_generated, jacobson_radical, nilpotency_index, subspace_product,
    verify_wedderburn, WedderburnViolation,
};

use std::fmt;

use crate::group::{CocycleViolation, ExtendedDegree, GroupError, GroupSpec};
use crate::linalg::{is_zero, unit_vector, zero_vector, RowEchelon, Subspace, Vector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cocycle(#[from] CocycleViolation),
    #[error("{what}: expected length {expected}, got {got}")]
    Length { what: &'static str, expected: usize, got: usize },
    #[error("basis index {0} out of range")]
    Index(usize),
    #[error("degree tuple must start with the identity, got {0}")]
    NotNormalized(ExtendedDegree),
    #[error("element {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("elements are linearly dependent")]
    Dependent,
    #[error("span is not closed under multiplication: {0}·{1} leaves it")]
    NotClosed(String, String),
    #[error("invalid algebra: {0}")]
    Invalid(#[from] AlgebraViolation),
    #[error("invalid Wedderburn data: {0}")]
    Wedderburn(#[from] WedderburnViolation),
    #[error("internal certificate failure: {0}")]
    Internal(String),
}

/// Why an algebra failed [`validate_algebra`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraViolation {
    #[error("degree of basis element {0} is not in the group")]
    DegreeOutsideGroup(usize),
    #[error("(e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    Associativity(usize, usize, usize),
    #[error("e{0} e{1} has a component on e{2} of the wrong degree")]
    Grading(usize, usize, usize),
    #[error("unit is not a two-sided identity for basis element {0}")]
    UnitLaw(usize),
    #[error("unit is not homogeneous of the identity degree")]
    UnitDegree,
}

/// Declared Wedderburn–Malcev data: graded-simple components and the radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnData {
    pub components: Vec<Subspace>,
    pub radical: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub name: String,
    pub group: GroupSpec,
    pub basis_labels: Vec<String>,
    pub degree: Vec<ExtendedDegree>,
    table: Vec<Vec<(usize, Rational)>>,
    pub unit: Option<Vector>,
    pub wedderburn: Option<WedderburnData>,
}

impl GradedAlgebra {
    /// Builds an algebra from sparse structure constants `e_i e_j += c e_k`.
    /// Repeated entries are summed and zeros dropped; nothing else is checked.
    pub fn from_entries(
        name: impl Into<String>,
        group: GroupSpec,
        basis_labels: Vec<String>,
        degree: Vec<ExtendedDegree>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_labels.len();
        if degree.len() != dim {
            return Err(AlgebraError::Length { what: "degree list", expected: dim, got: degree.len() });
        }
        let mut table: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in entries {
            for x in [i, j, k] {
                if x >= dim {
                    return Err(AlgebraError::Index(x));
                }
            }
            let cell = &mut table[i * dim + j];
            match cell.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, v)) => *v += &c,
                None => cell.push((k, c)),
            }
        }
        for cell in table.iter_mut() {
            cell.retain(|(_, c)| !c.is_zero());
            cell.sort_by_key(|(k, _)| *k);
        }
        Ok(GradedAlgebra { name: name.into(), group, basis_labels, degree, table, unit: None, wedderburn: None })
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.dim())
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k].add_product(&xy, c);
                }
            }
        }
        out
    }

    /// `v · e_j`
    pub fn mul_right_basis(&self, v: &[Rational], j: usize) -> Vector {
        let mut out = self.zero();
        for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.product(i, j) {
                out[*k].add_product(x, c);
            }
        }
        out
    }

    /// `e_i · v`
    pub fn mul_left_basis(&self, i: usize, v: &[Rational]) -> Vector {
        let mut out = self.zero();
        for (j, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.product(i, j) {
                out[*k].add_product(x, c);
            }
        }
        out
    }

    pub fn commutator(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let mut ab = self.mul(a, b);
        let ba = self.mul(b, a);
        for (x, y) in ab.iter_mut().zip(&ba) {
            *x -= y;
        }
        ab
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn has_odd_part(&self) -> bool {
        self.degree.iter().any(|d| d.parity == 1)
    }

    /// Degree of a nonzero vector supported on a single homogeneous component.
    pub fn homogeneous_degree(&self, v: &[Rational]) -> Option<ExtendedDegree> {
        let mut deg: Option<&ExtendedDegree> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(&self.degree[i]),
                Some(d) if d != &self.degree[i] => return None,
                _ => {}
            }
        }
        deg.cloned()
    }

    /// Basis indices of the given homogeneous degree.
    pub fn component_indices(&self, d: &ExtendedDegree) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.degree[i] == d).collect()
    }

    /// Subspace of a `Subspace` lying in the homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, s: &Subspace, d: &ExtendedDegree) -> Subspace {
        let outside: Vec<usize> = (0..self.dim()).filter(|&i| &self.degree[i] != d).collect();
        let coords: Vec<Vector> = outside.iter().map(|&i| self.basis_vector(i)).collect();
        s.intersection(&Subspace::span(self.dim(), coords).annihilator())
    }

    /// True if `s` is spanned by homogeneous elements.
    pub fn is_graded_subspace(&self, s: &Subspace) -> bool {
        let mut degs: Vec<ExtendedDegree> = self.degree.clone();
        degs.sort();
        degs.dedup();
        degs.iter().map(|d| self.homogeneous_part(s, d).dim()).sum::<usize>() == s.dim()
    }

    pub fn label_of(&self, v: &[Rational]) -> String {
        let mut parts = Vec::new();
        for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let l = &self.basis_labels[i];
            parts.push(if x.is_one() { l.clone() } else { format!("{x}*{l}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// The same algebra with every parity set to 0.
    pub fn forget_parity(&self) -> GradedAlgebra {
        let mut a = self.clone();
        for d in a.degree.iter_mut() {
            d.parity = 0;
        }
        a
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Attaches Wedderburn data given as basis index sets.
    pub fn with_wedderburn_indices(mut self, components: &[Vec<usize>], radical: &[usize]) -> Self {
        let d = self.dim();
        let span = |ix: &[usize]| Subspace::span(d, ix.iter().map(|&i| unit_vector(d, i)));
        self.wedderburn =
            Some(WedderburnData { components: components.iter().map(|c| span(c)).collect(), radical: span(radical) });
        self
    }

    /// Computes and stores the two-sided unit if one exists.
    pub fn with_detected_unit(mut self) -> Self {
        self.unit = find_unit(&self);
        self
    }
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim())
    }
}

/// Solves for a two-sided identity element.
pub fn find_unit(a: &GradedAlgebra) -> Option<Vector> {
    let d = a.dim();
    if d == 0 {
        return None;
    }
    let mut e = RowEchelon::new(d + 1);
    // u·e_i = e_i and e_i·u = e_i, coordinate m.
    for i in 0..d {
        for left in [true, false] {
            let mut rows = vec![zero_vector(d + 1); d];
            for k in 0..d {
                let prod = if left { a.product(k, i) } else { a.product(i, k) };
                for (m, c) in prod {
                    rows[*m][k] = c.clone();
                }
            }
            for (m, mut row) in rows.into_iter().enumerate() {
                row[d] = if m == i { Rational::one() } else { Rational::zero() };
                if !is_zero(&row) {
                    e.insert(row);
                }
            }
        }
    }
    if e.pivots().last() == Some(&d) {
        return None;
    }
    let mut u = zero_vector(d);
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        u[p] = row[d].clone();
    }
    Some(u)
}

/// Checks associativity, grading compatibility and the unit law.
pub fn validate_algebra(a: &GradedAlgebra) -> Result<(), AlgebraViolation> {
    let d = a.dim();
    for (i, deg) in a.degree.iter().enumerate() {
        if !a.group.contains(&deg.g) || deg.parity > 1 {
            return Err(AlgebraViolation::DegreeOutsideGroup(i));
        }
    }
    for i in 0..d {
        for j in 0..d {
            let want = a.group.ext_mul(&a.degree[i], &a.degree[j]);
            for (k, _) in a.product(i, j) {
                if a.degree[*k] != want {
                    return Err(AlgebraViolation::Grading(i, j, *k));
                }
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            let ij = a.product(i, j);
            for k in 0..d {
                let mut lhs = a.zero();
                for (m, c) in ij {
                    for (r, c2) in a.product(*m, k) {
                        lhs[*r].add_product(c, c2);
                    }
                }
                let mut rhs = a.zero();
                for (m, c) in a.product(j, k) {
                    for (r, c2) in a.product(i, *m) {
                        rhs[*r].add_product(c, c2);
                    }
                }
                if lhs != rhs {
                    return Err(AlgebraViolation::Associativity(i, j, k));
                }
            }
        }
    }
    if let Some(u) = &a.unit {
        if u.len() != d {
            return Err(AlgebraViolation::UnitDegree);
        }
        let e = a.group.ext_identity();
        if u.iter().enumerate().any(|(i, x)| !x.is_zero() && a.degree[i] != e) {
            return Err(AlgebraViolation::UnitDegree);
        }
        for i in 0..d {
            let b = a.basis_vector(i);
            if a.mul(u, &b) != b || a.mul(&b, u) != b {
                return Err(AlgebraViolation::UnitLaw(i));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
