//! Graded polynomials of the free algebra `F⟨X,G⟩`, their multilinear
//! components, and multilinear pieces of graded T-ideals.

mod consequence;
mod parse;
pub mod perm;

pub use consequence::{product_span, t_consequences, ConsequenceGenerators};
pub use parse::{emit, parse};

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{zero_vector, Subspace, Vector};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown degree label `{0}`")]
    UnknownLabel(String),
    #[error("degree tuples differ: {0} vs {1}")]
    TupleMismatch(String, String),
    #[error("label map: {0}")]
    Labels(String),
}

/// A graded variable `x_index^degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub index: u32,
    pub degree: GroupElement,
}

/// Rational combination of words in graded variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    terms: BTreeMap<Vec<Var>, Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn var(index: u32, degree: GroupElement) -> Self {
        Self::monomial(Rational::one(), vec![Var { index, degree }])
    }

    pub fn monomial(c: Rational, word: Vec<Var>) -> Self {
        let mut p = Self::zero();
        p.add_term(word, &c);
        p
    }

    pub fn add_term(&mut self, word: Vec<Var>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Var>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    pub fn commutator(&self, other: &GradedPoly) -> GradedPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// `a ∘ b = ab + ba`
    pub fn anticommutator(&self, other: &GradedPoly) -> GradedPoly {
        self.mul(other).add(&other.mul(self))
    }

    /// Left-normed commutator `[[a1, a2], …, ak]`.
    pub fn left_normed(parts: &[GradedPoly]) -> GradedPoly {
        let mut it = parts.iter();
        let first = it.next().cloned().unwrap_or_default();
        it.fold(first, |acc, p| acc.commutator(p))
    }

    /// Variables in order of first appearance in the sorted term list.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flatten().cloned().collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", emit(self, None))
    }
}

/// Degree labels for polynomial text: `1` is the identity, generators of
/// the cyclic factors are `g`, `h`, `k`, …, and an element is written as
/// a product of generator powers, e.g. `g^3h` in `Z4 × Z2`. Residue
/// tuples like `(1,0)` are always accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    group: GroupSpec,
    labels: BTreeMap<String, GroupElement>,
    user: BTreeMap<GroupElement, String>,
}

const GENERATOR_NAMES: [&str; 6] = ["g", "h", "k", "l", "m", "n"];

impl LabelMap {
    pub fn standard(group: &GroupSpec) -> Self {
        let mut labels = BTreeMap::new();
        for g in group.elements() {
            labels.insert(standard_name(group, &g), g);
        }
        labels.insert("e".into(), group.identity());
        LabelMap { group: group.clone(), labels, user: BTreeMap::new() }
    }

    /// Adds user labels on top of the standard ones. User labels must
    /// name distinct elements.
    pub fn with_labels(mut self, extra: &BTreeMap<String, Vec<i64>>) -> Result<Self, PolyError> {
        for (name, residues) in extra {
            if name.is_empty() || !name.chars().all(label_char) {
                return Err(PolyError::Labels(format!("invalid label `{name}`")));
            }
            let g = self.group.element(residues).map_err(|e| PolyError::Labels(e.to_string()))?;
            if let Some(prev) = self.user.get(&g) {
                return Err(PolyError::Labels(format!("`{prev}` and `{name}` both name {g}")));
            }
            self.user.insert(g.clone(), name.clone());
            self.labels.insert(name.clone(), g);
        }
        Ok(self)
    }

    /// Parses a JSON object `{"label": [residues], …}`.
    pub fn from_json(group: &GroupSpec, text: &str) -> Result<Self, PolyError> {
        let extra: BTreeMap<String, Vec<i64>> =
            serde_json::from_str(text).map_err(|e| PolyError::Labels(e.to_string()))?;
        Self::standard(group).with_labels(&extra)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn resolve(&self, label: &str) -> Result<GroupElement, PolyError> {
        if let Some(g) = self.labels.get(label) {
            return Ok(g.clone());
        }
        if let Some(inner) = label.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let residues: Result<Vec<i64>, _> =
                inner.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse::<i64>()).collect();
            if let Ok(r) = residues {
                if let Ok(g) = self.group.element(&r) {
                    return Ok(g);
                }
            }
        }
        Err(PolyError::UnknownLabel(label.to_string()))
    }

    /// A degree tuple as `(1,g,g^2)`.
    pub fn tuple(&self, t: &[GroupElement]) -> String {
        let parts: Vec<String> = t.iter().map(|g| self.name(g)).collect();
        format!("({})", parts.join(","))
    }

    pub fn name(&self, g: &GroupElement) -> String {
        if let Some(n) = self.user.get(g) {
            return n.clone();
        }
        if self.group.contains(g) {
            standard_name(&self.group, g)
        } else {
            g.to_string()
        }
    }
}

pub(crate) fn label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '^'
}

fn standard_name(group: &GroupSpec, g: &GroupElement) -> String {
    if group.rank() > GENERATOR_NAMES.len() {
        return g.to_string();
    }
    let mut s = String::new();
    for (i, &r) in g.residues.iter().enumerate() {
        match r {
            0 => {}
            1 => s.push_str(GENERATOR_NAMES[i]),
            _ => s.push_str(&format!("{}^{r}", GENERATOR_NAMES[i])),
        }
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// A multilinear polynomial in variables `0..n` of degrees `tuple`; a
/// monomial is a permutation in one-line form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    pub tuple: Vec<GroupElement>,
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl MultilinearPoly {
    pub fn new(tuple: Vec<GroupElement>) -> Self {
        MultilinearPoly { tuple, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.tuple.len()
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: &Rational) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(word.len(), self.n());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient vector indexed by permutation rank.
    pub fn to_dense(&self) -> Vector {
        let mut v = zero_vector(perm::factorial(self.n()));
        for (w, c) in &self.terms {
            v[perm::rank(w)] = c.clone();
        }
        v
    }

    pub fn from_dense(tuple: Vec<GroupElement>, v: &[Rational]) -> Self {
        let n = tuple.len();
        let mut p = MultilinearPoly::new(tuple);
        for (r, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            p.terms.insert(perm::unrank(n, r), c.clone());
        }
        p
    }

    /// Back to general form, variable `i` written `x_{i+1}`.
    pub fn to_graded(&self) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (w, c) in &self.terms {
            let word = w.iter().map(|&i| Var { index: i as u32 + 1, degree: self.tuple[i].clone() }).collect();
            out.add_term(word, c);
        }
        out
    }

    /// Product of left-normed commutators on consecutive blocks of the
    /// variables, block sizes `parts` (a block of size 1 is the variable).
    pub fn commutator_product(tuple: Vec<GroupElement>, parts: &[usize]) -> Self {
        assert_eq!(parts.iter().sum::<usize>(), tuple.len(), "parts must cover the variables");
        let mut blocks: Vec<Vec<(Vec<usize>, i64)>> = Vec::new();
        let mut start = 0;
        for &p in parts {
            let mut terms = vec![(vec![start], 1i64)];
            for v in start + 1..start + p {
                let mut next = Vec::with_capacity(terms.len() * 2);
                for (w, c) in &terms {
                    let mut a = w.clone();
                    a.push(v);
                    next.push((a, *c));
                    let mut b = vec![v];
                    b.extend(w.iter().copied());
                    next.push((b, -c));
                }
                terms = next;
            }
            blocks.push(terms);
            start += p;
        }
        let mut out = MultilinearPoly::new(tuple);
        let mut acc: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 1)];
        for b in blocks {
            let mut next = Vec::with_capacity(acc.len() * b.len());
            for (w, c) in &acc {
                for (x, d) in &b {
                    let mut word = w.clone();
                    word.extend(x.iter().copied());
                    next.push((word, c * d));
                }
            }
            acc = next;
        }
        for (w, c) in acc {
            out.add_term(w, &Rational::from_int(c));
        }
        out
    }

    /// Renames variable `i` to `perm[i]`; the degree tuple moves along.
    pub fn relabel(&self, perm: &[usize]) -> MultilinearPoly {
        let mut tuple = self.tuple.clone();
        for (i, &p) in perm.iter().enumerate() {
            tuple[p] = self.tuple[i].clone();
        }
        let mut out = MultilinearPoly::new(tuple);
        for (w, c) in &self.terms {
            out.terms.insert(w.iter().map(|&i| perm[i]).collect(), c.clone());
        }
        out
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_graded())
    }
}

/// Full polarization: each multihomogeneous component becomes a multilinear
/// polynomial in fresh variables, one per occurrence. No `1/k!` factors.
pub fn multilinearize(f: &GradedPoly) -> Vec<MultilinearPoly> {
    let mut components: BTreeMap<BTreeMap<Var, usize>, Vec<(&Vec<Var>, &Rational)>> = BTreeMap::new();
    for (w, c) in f.terms() {
        let mut md = BTreeMap::new();
        for v in w {
            *md.entry(v.clone()).or_insert(0) += 1;
        }
        components.entry(md).or_default().push((w, c));
    }
    let mut out = Vec::new();
    for (md, terms) in components {
        // fresh variables for each original variable, consecutively
        let mut first = BTreeMap::new();
        let mut tuple = Vec::new();
        for (v, &m) in &md {
            first.insert(v.clone(), tuple.len());
            tuple.extend(std::iter::repeat_n(v.degree.clone(), m));
        }
        let mut p = MultilinearPoly::new(tuple);
        for (w, c) in terms {
            for word in polarize_word(w, &md, &first) {
                p.add_term(word, c);
            }
        }
        if !p.is_zero() {
            out.push(p);
        }
    }
    out
}

fn polarize_word(w: &[Var], md: &BTreeMap<Var, usize>, first: &BTreeMap<Var, usize>) -> Vec<Vec<usize>> {
    // occurrence positions of each variable, then every bijection onto its copies
    let vars: Vec<&Var> = md.keys().collect();
    let mut results = vec![vec![usize::MAX; w.len()]];
    for v in vars {
        let positions: Vec<usize> = (0..w.len()).filter(|&i| &w[i] == v).collect();
        let base = first[v];
        let copies = perm::all(positions.len());
        let mut next = Vec::with_capacity(results.len() * copies.len());
        for r in &results {
            for p in &copies {
                let mut word = r.clone();
                for (k, &pos) in positions.iter().enumerate() {
                    word[pos] = base + p[k];
                }
                next.push(word);
            }
        }
        results = next;
    }
    results
}

/// A subspace of the `n!`-dimensional multilinear space of a degree tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySubspace {
    pub tuple: Vec<GroupElement>,
    pub space: Subspace,
}

impl PolySubspace {
    pub fn zero(tuple: Vec<GroupElement>) -> Self {
        let d = perm::factorial(tuple.len());
        PolySubspace { tuple, space: Subspace::zero(d) }
    }

    pub fn full(tuple: Vec<GroupElement>) -> Self {
        let d = perm::factorial(tuple.len());
        PolySubspace { tuple, space: Subspace::full(d) }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `n! − dim`
    pub fn codim(&self) -> usize {
        self.space.ambient() - self.space.dim()
    }

    fn check(&self, other: &PolySubspace) -> Result<(), PolyError> {
        if self.tuple != other.tuple {
            return Err(PolyError::TupleMismatch(tuple_string(&self.tuple), tuple_string(&other.tuple)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &PolySubspace) -> Result<PolySubspace, PolyError> {
        self.check(other)?;
        Ok(PolySubspace { tuple: self.tuple.clone(), space: self.space.sum(&other.space) })
    }

    pub fn intersection(&self, other: &PolySubspace) -> Result<PolySubspace, PolyError> {
        self.check(other)?;
        Ok(PolySubspace { tuple: self.tuple.clone(), space: self.space.intersection(&other.space) })
    }

    pub fn is_subspace_of(&self, other: &PolySubspace) -> Result<bool, PolyError> {
        self.check(other)?;
        Ok(self.space.is_subspace_of(&other.space))
    }

    pub fn contains(&self, f: &MultilinearPoly) -> Result<bool, PolyError> {
        if f.tuple != self.tuple {
            return Err(PolyError::TupleMismatch(tuple_string(&self.tuple), tuple_string(&f.tuple)));
        }
        Ok(self.space.contains(&f.to_dense()))
    }

    pub fn basis_polys(&self) -> Vec<MultilinearPoly> {
        self.space.basis().iter().map(|v| MultilinearPoly::from_dense(self.tuple.clone(), v)).collect()
    }

    /// Image under renaming variable `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> PolySubspace {
        let n = self.tuple.len();
        let mut tuple = self.tuple.clone();
        for (i, &p) in perm.iter().enumerate() {
            tuple[p] = self.tuple[i].clone();
        }
        let words = perm::all(n);
        let target: Vec<usize> =
            words.iter().map(|w| perm::rank(&w.iter().map(|&i| perm[i]).collect::<Vec<_>>())).collect();
        let vectors = self.space.basis().iter().map(|v| {
            let mut out = zero_vector(v.len());
            for (r, c) in v.iter().enumerate() {
                out[target[r]] = c.clone();
            }
            out
        });
        PolySubspace { space: Subspace::span(perm::factorial(n), vectors), tuple }
    }
}

pub fn tuple_string(t: &[GroupElement]) -> String {
    let parts: Vec<String> = t.iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Product of the degrees in `t`.
pub fn tuple_degree(group: &GroupSpec, t: &[GroupElement]) -> GroupElement {
    t.iter().fold(group.identity(), |acc, g| group.mul_unchecked(&acc, g))
}

/// Every tuple in `G^n`, lexicographic in element index.
pub fn all_tuples(group: &GroupSpec, n: usize) -> Vec<Vec<GroupElement>> {
    let elems = group.elements();
    let mut out: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * elems.len());
        for t in &out {
            for g in &elems {
                let mut u = t.clone();
                u.push(g.clone());
                next.push(u);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests;
