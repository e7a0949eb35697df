//! Brute-force model of the envelope through generic elements with
//! coefficients in the free supercommutative algebra `F[U, V]`:
//! `Z^{i,g} = Σ u^i_a ⊗ a + Σ v^i_b ⊗ b` over the even (resp. odd) body
//! basis elements of `G`-degree `g`. Only used to cross-check the
//! sign-rule evaluator.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::GradedAlgebra;
use crate::group::GroupElement;
use crate::linalg::{RowCollector, Subspace, Vector};
use crate::poly::{perm, MultilinearPoly, PolySubspace};
use crate::rational::Rational;

pub const DEFAULT_BUDGET: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle limited to {budget} variables, asked for {n}")]
    Budget { budget: usize, n: usize },
}

/// Monomial of `F[U, V]`: commuting `u^i_a` and anticommuting `v^i_b`,
/// both kept sorted. Variables are `(position, body basis index)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperWord {
    pub u: Vec<(usize, usize)>,
    pub v: Vec<(usize, usize)>,
}

impl SuperWord {
    /// `self · other`, or `None` when an odd variable repeats.
    fn mul(&self, other: &SuperWord) -> Option<(SuperWord, bool)> {
        let mut u = self.u.clone();
        u.extend(other.u.iter().copied());
        u.sort();
        let mut v = self.v.clone();
        v.extend(other.v.iter().copied());
        // bubble sort, counting swaps
        let mut negative = false;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    negative = !negative;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((SuperWord { u, v }, negative))
    }
}

/// Element of `F[U, V] ⊗ B`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expansion {
    pub terms: BTreeMap<SuperWord, Vector>,
}

impl Expansion {
    fn add_scaled(&mut self, other: &Expansion, c: &Rational) {
        for (w, x) in &other.terms {
            let slot = self.terms.entry(w.clone()).or_insert_with(|| vec![Rational::zero(); x.len()]);
            for (a, b) in slot.iter_mut().zip(x) {
                a.add_product(c, b);
            }
        }
        self.terms.retain(|_, x| x.iter().any(|c| !c.is_zero()));
    }

    fn mul(&self, other: &Expansion, body: &GradedAlgebra) -> Expansion {
        let mut out = Expansion::default();
        for (w1, x) in &self.terms {
            for (w2, y) in &other.terms {
                let Some((w, negative)) = w1.mul(w2) else { continue };
                let mut p = body.mul(x, y);
                if negative {
                    for c in p.iter_mut() {
                        *c = -&*c;
                    }
                }
                let single = Expansion { terms: BTreeMap::from([(w, p)]) };
                out.add_scaled(&single, &Rational::one());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Body coefficient of the supermonomial selected by a basis assignment.
    pub fn coefficient(&self, body: &GradedAlgebra, assignment: &[usize]) -> Vector {
        let mut word = SuperWord { u: Vec::new(), v: Vec::new() };
        for (i, &a) in assignment.iter().enumerate() {
            if body.degree[a].parity == 1 {
                word.v.push((i, a));
            } else {
                word.u.push((i, a));
            }
        }
        self.terms.get(&word).cloned().unwrap_or_else(|| body.zero())
    }
}

pub struct Oracle<'a> {
    body: &'a GradedAlgebra,
    budget: usize,
}

impl<'a> Oracle<'a> {
    pub fn new(body: &'a GradedAlgebra) -> Self {
        Oracle { body, budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    fn check(&self, n: usize) -> Result<(), OracleError> {
        if n > self.budget {
            return Err(OracleError::Budget { budget: self.budget, n });
        }
        Ok(())
    }

    /// `Z^{position, g}`.
    pub fn generic(&self, position: usize, g: &GroupElement) -> Expansion {
        let mut e = Expansion::default();
        for (a, d) in self.body.degree.iter().enumerate() {
            if &d.g != g {
                continue;
            }
            let w = if d.parity == 1 {
                SuperWord { u: Vec::new(), v: vec![(position, a)] }
            } else {
                SuperWord { u: vec![(position, a)], v: Vec::new() }
            };
            e.terms.insert(w, self.body.basis_vector(a));
        }
        e
    }

    fn word_value(&self, generics: &[Expansion], word: &[usize]) -> Expansion {
        let mut acc = generics[word[0]].clone();
        for &i in &word[1..] {
            acc = acc.mul(&generics[i], self.body);
        }
        acc
    }

    pub fn eval(&self, f: &MultilinearPoly) -> Result<Expansion, OracleError> {
        self.check(f.n())?;
        let generics: Vec<Expansion> = f.tuple.iter().enumerate().map(|(i, g)| self.generic(i, g)).collect();
        let mut out = Expansion::default();
        for (w, c) in &f.terms {
            out.add_scaled(&self.word_value(&generics, w), c);
        }
        Ok(out)
    }

    /// Linear relations among the values of the `n!` words.
    fn kernel_of(&self, tuple: &[GroupElement], values: Vec<Vec<Expansion>>) -> PolySubspace {
        let dim = perm::factorial(tuple.len());
        let mut columns: HashMap<(usize, SuperWord, usize), Vector> = HashMap::new();
        for (part, per_word) in values.into_iter().enumerate() {
            for (r, e) in per_word.into_iter().enumerate() {
                for (w, x) in e.terms {
                    for (k, c) in x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        columns.entry((part, w.clone(), k)).or_insert_with(|| vec![Rational::zero(); dim])[r] = c;
                    }
                }
            }
        }
        let mut keys: Vec<_> = columns.keys().cloned().collect();
        keys.sort();
        let mut rows = RowCollector::new(dim);
        for k in keys {
            rows.push(columns.remove(&k).unwrap());
        }
        PolySubspace { tuple: tuple.to_vec(), space: Subspace::span(dim, rows.finish().nullspace()) }
    }

    pub fn identity_kernel(&self, tuple: &[GroupElement]) -> Result<PolySubspace, OracleError> {
        let n = tuple.len();
        self.check(n)?;
        let generics: Vec<Expansion> = tuple.iter().enumerate().map(|(i, g)| self.generic(i, g)).collect();
        let values = perm::all(n).iter().map(|w| self.word_value(&generics, w)).collect();
        Ok(self.kernel_of(tuple, vec![values]))
    }

    /// Polynomials `f` with `[f(Z), Z^{n+1,g}] = 0` for every `g`.
    pub fn central_kernel(&self, tuple: &[GroupElement]) -> Result<PolySubspace, OracleError> {
        let n = tuple.len();
        self.check(n + 1)?;
        let generics: Vec<Expansion> = tuple.iter().enumerate().map(|(i, g)| self.generic(i, g)).collect();
        let words: Vec<Expansion> = perm::all(n).iter().map(|w| self.word_value(&generics, w)).collect();
        let mut parts = Vec::new();
        for g in self.body.group.elements() {
            let z = self.generic(n, &g);
            if z.is_zero() {
                continue;
            }
            let comm = words
                .iter()
                .map(|e| {
                    let mut c = e.mul(&z, self.body);
                    c.add_scaled(&z.mul(e, self.body), &-Rational::one());
                    c
                })
                .collect();
            parts.push(comm);
        }
        Ok(self.kernel_of(tuple, parts))
    }
}
