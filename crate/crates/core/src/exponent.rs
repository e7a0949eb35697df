//! Graded exponents from Wedderburn data: the largest admissible sum of
//! components, and certified lower bounds for the proper central exponent
//! through explicit central polynomials.

use std::collections::HashMap;

use crate::algebra::{subalgebra_from_basis, subspace_product, verify_wedderburn, AlgebraError, GradedAlgebra};
use crate::codim::{central_kernel, Budget, Refusal};
use crate::envelope::{densify, Envelope, Sparse, TaggedValue};
use crate::group::GroupElement;
use crate::linalg::{is_zero, Subspace, Vector};
use crate::poly::{all_tuples, perm, MultilinearPoly};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExponentError {
    #[error("{0} has no Wedderburn data")]
    NoWedderburn(String),
    #[error("Wedderburn data rejected: {0}")]
    Wedderburn(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Refused(#[from] Refusal),
}

/// A chain `B_{i1} J B_{i2} ⋯ J B_{ik}` with a nonzero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityCertificate {
    pub components: Vec<usize>,
    pub witness: Vector,
    pub dim: usize,
}

/// Maximal dimension of an admissible subalgebra over all orderings of
/// distinct components. The zero algebra gives 0 with an empty chain.
pub fn admissible_max(a: &GradedAlgebra) -> Result<AdmissibilityCertificate, ExponentError> {
    let w = a.wedderburn.as_ref().ok_or_else(|| ExponentError::NoWedderburn(a.name.clone()))?;
    let dims: Vec<usize> = w.components.iter().map(Subspace::dim).collect();
    let mut best = AdmissibilityCertificate { components: Vec::new(), witness: a.zero(), dim: 0 };
    let mut chain = Vec::new();
    for i in 0..w.components.len() {
        if w.components[i].is_zero() {
            continue;
        }
        chain.push(i);
        extend_chain(a, &w.components, &w.radical, &dims, &w.components[i], &mut chain, &mut best);
        chain.pop();
    }
    Ok(best)
}

fn extend_chain(
    a: &GradedAlgebra,
    comps: &[Subspace],
    j: &Subspace,
    dims: &[usize],
    product: &Subspace,
    chain: &mut Vec<usize>,
    best: &mut AdmissibilityCertificate,
) {
    let total: usize = chain.iter().map(|&i| dims[i]).sum();
    // ties keep the first chain found, which is lexicographically least
    if total > best.dim {
        *best = AdmissibilityCertificate { components: chain.clone(), witness: product.basis()[0].clone(), dim: total };
    }
    let pj = subspace_product(a, product, j);
    if pj.is_zero() {
        return;
    }
    for i in 0..comps.len() {
        if chain.contains(&i) || comps[i].is_zero() {
            continue;
        }
        let next = subspace_product(a, &pj, &comps[i]);
        if next.is_zero() {
            continue;
        }
        chain.push(i);
        extend_chain(a, comps, j, dims, &next, chain, best);
        chain.pop();
    }
}

/// The algebra rewritten in a basis made of homogeneous bases of the
/// components followed by one of the radical; `owner[i]` is the component
/// of basis element `i` (`None` for the radical).
#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    pub algebra: GradedAlgebra,
    pub owner: Vec<Option<usize>>,
    pub component_dims: Vec<usize>,
}

pub fn adapted_basis(a: &GradedAlgebra) -> Result<AdaptedBasis, ExponentError> {
    let w = a.wedderburn.as_ref().ok_or_else(|| ExponentError::NoWedderburn(a.name.clone()))?;
    let parts: Vec<(Option<usize>, &Subspace)> =
        w.components.iter().enumerate().map(|(i, s)| (Some(i), s)).chain(std::iter::once((None, &w.radical))).collect();
    // already adapted: every basis vector lies in one declared part
    let mut owner = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let e = a.basis_vector(i);
        match parts.iter().find(|(_, s)| s.contains(&e)) {
            Some((o, _)) => owner.push(*o),
            None => break,
        }
    }
    let component_dims = w.components.iter().map(Subspace::dim).collect();
    if owner.len() == a.dim() {
        return Ok(AdaptedBasis { algebra: a.clone(), owner, component_dims });
    }
    let mut degs = a.degree.clone();
    degs.sort();
    degs.dedup();
    let mut elements = Vec::new();
    let mut owner = Vec::new();
    for (o, s) in &parts {
        for d in &degs {
            for v in a.homogeneous_part(s, d).basis() {
                elements.push((a.label_of(v), v.clone()));
                owner.push(*o);
            }
        }
    }
    let mut b = subalgebra_from_basis(a, a.name.clone(), &elements)?;
    let comps: Vec<Vec<usize>> =
        (0..w.components.len()).map(|c| (0..owner.len()).filter(|&i| owner[i] == Some(c)).collect()).collect();
    let rad: Vec<usize> = (0..owner.len()).filter(|&i| owner[i].is_none()).collect();
    b = b.with_wedderburn_indices(&comps, &rad);
    Ok(AdaptedBasis { algebra: b, owner, component_dims })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Whole central kernel of every tuple; degree at most 4.
    Full,
    /// Products of left-normed commutators.
    Template,
}

pub const FULL_MODE_MAX_DEGREE: usize = 4;
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 2_000_000;

/// A proper central polynomial with a nonzero value at an assignment
/// using at least one element of each target component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralWitness {
    pub targets: Vec<usize>,
    pub dim: usize,
    pub poly: MultilinearPoly,
    pub assignment: Vec<usize>,
    pub value: TaggedValue,
    /// Assignments on which centrality was checked.
    pub checked: u128,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub mode: SearchMode,
    pub max_degree: usize,
    pub assignment_cap: u128,
    pub budget: Budget,
}

impl SearchOptions {
    pub fn new(mode: SearchMode, max_degree: usize) -> Self {
        let limit = match mode {
            SearchMode::Full => FULL_MODE_MAX_DEGREE,
            SearchMode::Template => 8,
        };
        SearchOptions { mode, max_degree, assignment_cap: DEFAULT_ASSIGNMENT_CAP, budget: Budget::from_env(limit) }
    }
}

/// Evaluation context over an adapted basis.
pub struct WitnessSearch {
    basis: AdaptedBasis,
    env: Envelope,
}

impl WitnessSearch {
    pub fn new(a: &GradedAlgebra) -> Result<Self, ExponentError> {
        let basis = adapted_basis(a)?;
        let env = Envelope::new(basis.algebra.clone());
        Ok(WitnessSearch { basis, env })
    }

    pub fn envelope(&self) -> &Envelope {
        &self.env
    }

    pub fn adapted(&self) -> &AdaptedBasis {
        &self.basis
    }

    fn touches(&self, assignment: &[usize], targets: &[usize]) -> bool {
        targets.iter().all(|&c| assignment.iter().any(|&i| self.basis.owner[i] == Some(c)))
    }

    /// Searches degrees `1..=max_degree` for a witness on `targets`.
    pub fn search(&self, targets: &[usize], opts: &SearchOptions) -> Result<Option<CentralWitness>, ExponentError> {
        for n in 1..=opts.max_degree {
            opts.budget.check(n, 0)?;
            let found = match opts.mode {
                SearchMode::Full => self.search_full(targets, n, opts.assignment_cap),
                SearchMode::Template => self.search_template(targets, n, opts.assignment_cap),
            };
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn dim_of(&self, targets: &[usize]) -> usize {
        targets.iter().map(|&c| self.basis.component_dims[c]).sum()
    }

    fn search_full(&self, targets: &[usize], n: usize, cap: u128) -> Option<CentralWitness> {
        if n < targets.len() {
            return None;
        }
        for (t, _) in crate::codim::canonical_tuples(self.env.group(), n) {
            if self.env.assignment_count(&t) == 0 {
                continue;
            }
            let v = central_kernel(&self.env, &t);
            if v.dim() == 0 {
                continue;
            }
            let basis = v.space.basis();
            let mut seen = 0u128;
            for a in self.env.assignments(&t) {
                if !self.touches(&a, targets) {
                    continue;
                }
                seen += 1;
                if seen > cap {
                    break;
                }
                let mut words: Vec<Option<Sparse>> = vec![None; perm::factorial(n)];
                self.env.for_each_word(&a, &mut |r, val| words[r] = Some(val.clone()));
                for b in basis {
                    let mut acc = self.env.body().zero();
                    for (r, w) in words.iter().enumerate() {
                        if let Some(w) = w {
                            if !b[r].is_zero() {
                                for (k, c) in w {
                                    acc[*k].add_product(&b[r], c);
                                }
                            }
                        }
                    }
                    if !is_zero(&acc) {
                        let poly = MultilinearPoly::from_dense(t.clone(), b);
                        let value = self.env.eval_poly(&poly, &a).expect("tuple matches");
                        return Some(CentralWitness {
                            targets: targets.to_vec(),
                            dim: self.dim_of(targets),
                            poly,
                            assignment: a,
                            value,
                            checked: self.env.assignment_count(&t),
                        });
                    }
                }
            }
        }
        None
    }

    fn search_template(&self, targets: &[usize], n: usize, cap: u128) -> Option<CentralWitness> {
        if n < targets.len() {
            return None;
        }
        let shapes: Vec<Vec<usize>> = if n == 1 { vec![vec![1]] } else { compositions(n, 2) };
        for t in all_tuples(self.env.group(), n) {
            if self.env.assignment_count(&t) == 0 {
                continue;
            }
            for parts in &shapes {
                let tmpl = Template::new(&self.env, t.clone(), parts);
                let Some((a, value)) = tmpl.find_touching(self, targets, cap) else { continue };
                if let Some(checked) = tmpl.all_central() {
                    return Some(CentralWitness {
                        targets: targets.to_vec(),
                        dim: self.dim_of(targets),
                        poly: tmpl.poly.clone(),
                        assignment: a,
                        value,
                        checked,
                    });
                }
            }
        }
        None
    }

    /// Re-checks a witness: centrality on every assignment of its tuple
    /// and the recorded nonzero touching value.
    pub fn verify(&self, w: &CentralWitness) -> bool {
        if !self.touches(&w.assignment, &w.targets) {
            return false;
        }
        match self.env.eval_poly(&w.poly, &w.assignment) {
            Ok(v) if v == w.value && !v.is_zero() && self.env.is_central(&v) => {}
            _ => return false,
        }
        self.env.assignments(&w.poly.tuple).all(|a| {
            let v = self.env.eval_poly(&w.poly, &a).expect("tuple matches");
            self.env.is_central(&v)
        })
    }
}

/// Compositions of `n` into parts of size at least `min`.
fn compositions(n: usize, min: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in min..=n {
        for mut rest in compositions(n - first, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A product of left-normed commutators evaluated block by block: the
/// sign rule factors over consecutive blocks, so block values are cached.
struct Template<'a> {
    env: &'a Envelope,
    poly: MultilinearPoly,
    blocks: Vec<(usize, MultilinearPoly)>,
    cache: std::cell::RefCell<HashMap<(usize, Vec<usize>), Sparse>>,
}

impl<'a> Template<'a> {
    fn new(env: &'a Envelope, tuple: Vec<GroupElement>, parts: &[usize]) -> Self {
        let poly = MultilinearPoly::commutator_product(tuple.clone(), parts);
        let mut blocks = Vec::new();
        let mut start = 0;
        for &p in parts {
            let sub = tuple[start..start + p].to_vec();
            blocks.push((start, MultilinearPoly::commutator_product(sub, &[p])));
            start += p;
        }
        Template { env, poly, blocks, cache: Default::default() }
    }

    fn block_value(&self, b: usize, sub: &[usize]) -> Sparse {
        let key = (b, sub.to_vec());
        if let Some(v) = self.cache.borrow().get(&key) {
            return v.clone();
        }
        let val = self.env.eval_poly(&self.blocks[b].1, sub).expect("block tuple matches");
        let sparse: Sparse = val.element.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        self.cache.borrow_mut().insert(key, sparse.clone());
        sparse
    }

    fn mul(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc = self.env.body().zero();
        for (j, d) in y {
            for (k, c) in self.env.mul_basis(x, *j) {
                acc[k].add_product(&c, d);
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Depth-first over blocks; `leaf` gets each full assignment with a
    /// nonzero value and returns false to stop. Returns false if stopped.
    fn walk(
        &self,
        b: usize,
        assignment: &mut Vec<usize>,
        acc: Option<&Sparse>,
        leaf: &mut dyn FnMut(&[usize], &Sparse) -> bool,
    ) -> bool {
        if b == self.blocks.len() {
            return leaf(assignment, acc.expect("at least one block"));
        }
        let (start, block) = &self.blocks[b];
        let choices: Vec<Vec<usize>> = self.env.assignments(&block.tuple).collect();
        for sub in choices {
            let v = self.block_value(b, &sub);
            if v.is_empty() {
                continue;
            }
            let next = match acc {
                None => v,
                Some(x) => self.mul(x, &v),
            };
            if next.is_empty() {
                continue;
            }
            assignment.truncate(*start);
            assignment.extend_from_slice(&sub);
            if !self.walk(b + 1, assignment, Some(&next), leaf) {
                return false;
            }
        }
        true
    }

    fn find_touching(&self, search: &WitnessSearch, targets: &[usize], cap: u128) -> Option<(Vec<usize>, TaggedValue)> {
        let mut found = None;
        let mut seen = 0u128;
        self.walk(0, &mut Vec::new(), None, &mut |a, v| {
            seen += 1;
            if search.touches(a, targets) {
                let tag = (0..a.len()).filter(|&i| self.env.is_odd(a[i])).collect();
                found = Some((a.to_vec(), TaggedValue { element: densify(v, self.env.dim()), tag }));
                return false;
            }
            seen < cap
        });
        found
    }

    /// Number of assignments if every value is central.
    fn all_central(&self) -> Option<u128> {
        let mut ok = true;
        self.walk(0, &mut Vec::new(), None, &mut |a, v| {
            let parity = a.iter().filter(|&&i| self.env.is_odd(i)).count();
            let central = self.env.central_functionals(parity).iter().all(|f| {
                let mut s = Rational::zero();
                for (k, c) in v {
                    s.add_product(&f[*k], c);
                }
                s.is_zero()
            });
            ok = central;
            central
        });
        ok.then(|| self.env.assignment_count(&self.poly.tuple))
    }
}

#[derive(Clone, Debug)]
pub struct ExponentReport {
    pub exp_g: usize,
    pub admissible: AdmissibilityCertificate,
    pub delta_lower_bound: usize,
    pub delta_witness: Option<CentralWitness>,
    pub delta_exact: Option<usize>,
    pub mode: SearchMode,
    pub max_degree: usize,
}

impl ExponentReport {
    /// `delta_lower_bound ≤ exp_g`, checked rather than assumed.
    pub fn consistent(&self) -> bool {
        self.delta_lower_bound <= self.exp_g
    }
}

/// Target sets as sorted component lists, by dimension descending and
/// lexicographically within a dimension.
pub fn target_sets(component_dims: &[usize]) -> Vec<Vec<usize>> {
    let k = component_dims.len();
    let mut sets: Vec<Vec<usize>> = (1..(1usize << k))
        .map(|m| (0..k).filter(|&i| m & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|s: &Vec<usize>| s.iter().all(|&i| component_dims[i] > 0))
        .collect();
    sets.sort_by(|a, b| {
        let da: usize = a.iter().map(|&i| component_dims[i]).sum();
        let db: usize = b.iter().map(|&i| component_dims[i]).sum();
        db.cmp(&da).then_with(|| a.cmp(b))
    });
    sets
}

/// Admissible maximum plus, when `delta` is set, the best certified
/// centrally admissible dimension found within the search options.
pub fn exponent_report(a: &GradedAlgebra, delta: Option<&SearchOptions>) -> Result<ExponentReport, ExponentError> {
    let w = a.wedderburn.as_ref().ok_or_else(|| ExponentError::NoWedderburn(a.name.clone()))?;
    verify_wedderburn(a, w).map_err(|e| ExponentError::Wedderburn(e.to_string()))?;
    let admissible = admissible_max(a)?;
    let exp_g = admissible.dim;
    let mut report = ExponentReport {
        exp_g,
        admissible,
        delta_lower_bound: 0,
        delta_witness: None,
        delta_exact: None,
        mode: delta.map(|o| o.mode).unwrap_or(SearchMode::Template),
        max_degree: delta.map(|o| o.max_degree).unwrap_or(0),
    };
    let Some(opts) = delta else { return Ok(report) };
    if opts.mode == SearchMode::Full && opts.max_degree > FULL_MODE_MAX_DEGREE {
        return Err(Refusal::Degree { n: opts.max_degree, max: FULL_MODE_MAX_DEGREE }.into());
    }
    opts.budget.check(opts.max_degree, 0)?;
    let search = WitnessSearch::new(a)?;
    for targets in target_sets(&search.basis.component_dims) {
        if let Some(wit) = search.search(&targets, opts)? {
            report.delta_lower_bound = wit.dim;
            report.delta_witness = Some(wit);
            break;
        }
    }
    if report.delta_lower_bound == exp_g {
        report.delta_exact = Some(exp_g);
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
