//! Evaluation in the Grassmann envelope `E(B) = E⁰⊗B⁰ ⊕ E¹⊗B¹` of a
//! `G × Z2`-graded body `B`, without constructing `E(B)`.
//!
//! Position `i` of a multilinear word carries the Grassmann generator
//! `ε_i` when it is assigned an odd basis element. Moving the generators
//! of a word to ascending order gives the sign of the odd positions'
//! ordering; the value of a polynomial at a basis assignment is therefore
//! a single body vector times `ε_T`, `T` the set of odd positions.

pub mod oracle;
pub mod sample;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::GradedAlgebra;
use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{dot, zero_vector, Subspace, Vector};
use crate::poly::{perm, MultilinearPoly};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnvelopeError {
    #[error("assignment has {got} positions, polynomial has {expected}")]
    Length { expected: usize, got: usize },
    #[error("position {position}: basis element {element} has degree {got}, variable has degree {expected}")]
    DegreeMismatch { position: usize, element: usize, expected: GroupElement, got: GroupElement },
    #[error("basis index {0} out of range")]
    Index(usize),
}

/// `ε_{tag} ⊗ element`, tag positions ascending (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedValue {
    pub element: Vector,
    pub tag: Vec<usize>,
}

impl TaggedValue {
    pub fn is_zero(&self) -> bool {
        self.element.iter().all(Rational::is_zero)
    }

    pub fn parity(&self) -> usize {
        self.tag.len() % 2
    }
}

impl fmt::Display for TaggedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tag.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "[{}] {:?}", parts.join(""), self.element)
    }
}

/// Sparse body vector, sorted by coordinate.
pub(crate) type Sparse = Vec<(usize, Rational)>;

/// A body together with the data needed for envelope evaluation.
#[derive(Clone, Debug)]
pub struct Envelope {
    body: GradedAlgebra,
    by_degree: BTreeMap<GroupElement, Vec<usize>>,
    odd: Vec<bool>,
    twisted_center: [Subspace; 2],
    central_functionals: [Vec<Vector>; 2],
}

impl Envelope {
    pub fn new(body: GradedAlgebra) -> Self {
        let mut by_degree: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, d) in body.degree.iter().enumerate() {
            by_degree.entry(d.g.clone()).or_default().push(i);
        }
        let odd: Vec<bool> = body.degree.iter().map(|d| d.parity == 1).collect();
        let z0 = twisted_center(&body, &odd, false);
        let z1 = twisted_center(&body, &odd, true);
        let f0 = z0.annihilator().basis().to_vec();
        let f1 = z1.annihilator().basis().to_vec();
        Envelope { body, by_degree, odd, twisted_center: [z0, z1], central_functionals: [f0, f1] }
    }

    pub fn body(&self) -> &GradedAlgebra {
        &self.body
    }

    pub fn group(&self) -> &GroupSpec {
        &self.body.group
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn has_odd_part(&self) -> bool {
        self.odd.iter().any(|&o| o)
    }

    /// Body basis elements (of either parity) whose `G`-part is `g`.
    pub fn basis_of_degree(&self, g: &GroupElement) -> &[usize] {
        self.by_degree.get(g).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `G`-degrees carrying at least one basis element.
    pub fn support(&self) -> Vec<GroupElement> {
        self.by_degree.keys().cloned().collect()
    }

    /// `{z : z b = (−1)^{p·|b|} b z for every basis element b}`: the body
    /// parts of central elements `ε_T ⊗ z` with `|T| ≡ p`.
    pub fn twisted_center(&self, p: usize) -> &Subspace {
        &self.twisted_center[p % 2]
    }

    /// Functionals cutting out the twisted center of parity `p`.
    pub(crate) fn central_functionals(&self, p: usize) -> &[Vector] {
        &self.central_functionals[p % 2]
    }

    pub fn is_central(&self, v: &TaggedValue) -> bool {
        self.central_functionals(v.parity()).iter().all(|f| dot(f, &v.element).is_zero())
    }

    fn check_assignment(&self, tuple: &[GroupElement], assignment: &[usize]) -> Result<(), EnvelopeError> {
        if tuple.len() != assignment.len() {
            return Err(EnvelopeError::Length { expected: tuple.len(), got: assignment.len() });
        }
        for (pos, (&a, g)) in assignment.iter().zip(tuple).enumerate() {
            if a >= self.dim() {
                return Err(EnvelopeError::Index(a));
            }
            if &self.body.degree[a].g != g {
                return Err(EnvelopeError::DegreeMismatch {
                    position: pos,
                    element: a,
                    expected: g.clone(),
                    got: self.body.degree[a].g.clone(),
                });
            }
        }
        Ok(())
    }

    fn tag_of(&self, assignment: &[usize]) -> Vec<usize> {
        (0..assignment.len()).filter(|&i| self.odd[assignment[i]]).collect()
    }

    /// Value of the word `x_{w_1} ⋯ x_{w_n}` with `x_i ↦ ε_i ⊗ b_{a_i}`
    /// (the `ε_i` only on odd positions).
    pub fn eval_monomial(&self, word: &[usize], assignment: &[usize]) -> TaggedValue {
        let odd_seq: Vec<usize> = word.iter().copied().filter(|&i| self.odd[assignment[i]]).collect();
        let sign = perm::sort_sign(&odd_seq);
        let mut v: Sparse = vec![(assignment[word[0]], Rational::from_int(sign))];
        for &i in &word[1..] {
            v = self.mul_basis(&v, assignment[i]);
        }
        TaggedValue { element: densify(&v, self.dim()), tag: self.tag_of(assignment) }
    }

    pub fn eval_poly(&self, f: &MultilinearPoly, assignment: &[usize]) -> Result<TaggedValue, EnvelopeError> {
        self.check_assignment(&f.tuple, assignment)?;
        let mut acc = zero_vector(self.dim());
        for (w, c) in &f.terms {
            let m = self.eval_monomial(w, assignment);
            for (x, y) in acc.iter_mut().zip(&m.element) {
                x.add_product(c, y);
            }
        }
        Ok(TaggedValue { element: acc, tag: self.tag_of(assignment) })
    }

    /// `v · b_j`
    pub(crate) fn mul_basis(&self, v: &Sparse, j: usize) -> Sparse {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in v {
            for (l, d) in self.body.product(*k, j) {
                acc.entry(*l).or_insert_with(Rational::zero).add_product(c, d);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Visits every word of `0..n` with its permutation rank, its sign and
    /// its body value at `assignment`; words with a zero prefix product
    /// are skipped.
    pub(crate) fn for_each_word(&self, assignment: &[usize], visit: &mut dyn FnMut(usize, &Sparse)) {
        let n = assignment.len();
        if n == 0 {
            return;
        }
        let fact: Vec<usize> = (0..=n).map(perm::factorial).collect();
        self.word_dfs(assignment, &fact, 0, 0u64, 0, &Vec::new(), false, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn word_dfs(
        &self,
        assignment: &[usize],
        fact: &[usize],
        depth: usize,
        used: u64,
        rank: usize,
        prefix: &Sparse,
        negative: bool,
        visit: &mut dyn FnMut(usize, &Sparse),
    ) {
        let n = assignment.len();
        if depth == n {
            if negative {
                let neg: Sparse = prefix.iter().map(|(k, c)| (*k, -c)).collect();
                visit(rank, &neg);
            } else {
                visit(rank, prefix);
            }
            return;
        }
        let mut smaller_unused = 0;
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            let r = rank + smaller_unused * fact[n - 1 - depth];
            smaller_unused += 1;
            let mut neg = negative;
            if self.odd[assignment[v]] {
                // odd positions already placed with a larger index
                let crossings = (v + 1..n).filter(|&u| used & (1 << u) != 0 && self.odd[assignment[u]]).count();
                neg ^= crossings % 2 == 1;
            }
            let next =
                if depth == 0 { vec![(assignment[v], Rational::one())] } else { self.mul_basis(prefix, assignment[v]) };
            if next.is_empty() {
                continue;
            }
            self.word_dfs(assignment, fact, depth + 1, used | (1 << v), r, &next, neg, visit);
        }
    }

    /// Every assignment of basis elements to a degree tuple, in
    /// lexicographic order of basis indices.
    pub fn assignments(&self, tuple: &[GroupElement]) -> Assignments<'_> {
        let choices: Vec<&[usize]> = tuple.iter().map(|g| self.basis_of_degree(g)).collect();
        let done = choices.iter().any(|c| c.is_empty());
        Assignments { choices, state: vec![0; tuple.len()], done, started: false }
    }

    /// Number of assignments for a tuple.
    pub fn assignment_count(&self, tuple: &[GroupElement]) -> u128 {
        tuple.iter().map(|g| self.basis_of_degree(g).len() as u128).product()
    }
}

/// Odometer over basis assignments of a degree tuple.
pub struct Assignments<'a> {
    choices: Vec<&'a [usize]>,
    state: Vec<usize>,
    done: bool,
    started: bool,
}

impl Iterator for Assignments<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started {
            let mut i = self.state.len();
            loop {
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                self.state[i] += 1;
                if self.state[i] < self.choices[i].len() {
                    break;
                }
                self.state[i] = 0;
            }
        }
        self.started = true;
        Some(self.state.iter().zip(&self.choices).map(|(&s, c)| c[s]).collect())
    }
}

pub(crate) fn densify(v: &Sparse, d: usize) -> Vector {
    let mut out = zero_vector(d);
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

fn twisted_center(a: &GradedAlgebra, odd: &[bool], twisted: bool) -> Subspace {
    let d = a.dim();
    let mut rows = crate::linalg::RowCollector::new(d);
    for i in 0..d {
        let flip = twisted && odd[i];
        let mut eqs = vec![zero_vector(d); d];
        for m in 0..d {
            for (k, c) in a.product(m, i) {
                eqs[*k][m] += c;
            }
            for (k, c) in a.product(i, m) {
                if flip {
                    eqs[*k][m] += c;
                } else {
                    eqs[*k][m] -= c;
                }
            }
        }
        for r in eqs {
            rows.push(r);
        }
    }
    Subspace::span(d, rows.finish().nullspace())
}

#[cfg(test)]
mod tests;
