//! Identity and central kernels per degree tuple, codimension sequences,
//! and membership tests for graded polynomials.

use serde::Serialize;

use crate::algebra::{center, GradedAlgebra};
use crate::envelope::{Envelope, TaggedValue};
use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{dot, zero_vector, RowCollector, Subspace, Vector};
use crate::poly::{multilinearize, perm, GradedPoly, MultilinearPoly, PolySubspace};

/// Identity and central kernels of one degree tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleKernels {
    pub identity: PolySubspace,
    pub central: PolySubspace,
}

impl TupleKernels {
    pub fn c(&self) -> usize {
        self.identity.codim()
    }

    pub fn cz(&self) -> usize {
        self.central.codim()
    }
}

fn kernel(dim: usize, rows: RowCollector) -> Subspace {
    Subspace::span(dim, rows.finish().nullspace())
}

/// Both kernels through the sign rule, one pass over the assignments.
pub fn tuple_kernels(env: &Envelope, tuple: &[GroupElement]) -> TupleKernels {
    let n = tuple.len();
    let dim = perm::factorial(n);
    let d = env.dim();
    let mut id_rows = RowCollector::new(dim);
    let mut z_rows = RowCollector::new(dim);
    for a in env.assignments(tuple) {
        if id_rows.is_full() && z_rows.is_full() {
            break;
        }
        let parity = a.iter().filter(|&&i| env.is_odd(i)).count();
        let funcs = env.central_functionals(parity);
        let mut id_cols: Vec<Vector> = vec![zero_vector(dim); d];
        let mut z_cols: Vec<Vector> = vec![zero_vector(dim); funcs.len()];
        env.for_each_word(&a, &mut |r, v| {
            for (k, c) in v {
                id_cols[*k][r] = c.clone();
            }
            for (j, f) in funcs.iter().enumerate() {
                for (k, c) in v {
                    z_cols[j][r].add_product(&f[*k], c);
                }
            }
        });
        if !id_rows.is_full() {
            for col in id_cols {
                id_rows.push(col);
            }
        }
        if !z_rows.is_full() {
            for col in z_cols {
                z_rows.push(col);
            }
        }
    }
    TupleKernels {
        identity: PolySubspace { tuple: tuple.to_vec(), space: kernel(dim, id_rows) },
        central: PolySubspace { tuple: tuple.to_vec(), space: kernel(dim, z_rows) },
    }
}

pub fn identity_kernel(env: &Envelope, tuple: &[GroupElement]) -> PolySubspace {
    tuple_kernels(env, tuple).identity
}

pub fn central_kernel(env: &Envelope, tuple: &[GroupElement]) -> PolySubspace {
    tuple_kernels(env, tuple).central
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DirectError {
    #[error("direct evaluation ignores parity; {0} has odd basis elements")]
    OddPart(String),
}

/// Kernels by plain evaluation in the body, one dense product per word.
/// Only meaningful for bodies without odd part.
pub fn direct_kernels(a: &GradedAlgebra, tuple: &[GroupElement]) -> Result<TupleKernels, DirectError> {
    if a.has_odd_part() {
        return Err(DirectError::OddPart(a.name.clone()));
    }
    let n = tuple.len();
    let dim = perm::factorial(n);
    let words = perm::all(n);
    let z = center(a);
    let funcs = z.annihilator().basis().to_vec();
    let choices: Vec<Vec<usize>> =
        tuple.iter().map(|g| (0..a.dim()).filter(|&i| &a.degree[i].g == g).collect()).collect();
    let mut id_rows = RowCollector::new(dim);
    let mut z_rows = RowCollector::new(dim);
    let mut assignment = vec![0usize; n];
    let total: usize = choices.iter().map(Vec::len).product();
    for mut idx in 0..total {
        for i in (0..n).rev() {
            assignment[i] = choices[i][idx % choices[i].len()];
            idx /= choices[i].len();
        }
        let values: Vec<Vector> = words
            .iter()
            .map(|w| {
                let mut v = a.basis_vector(assignment[w[0]]);
                for &i in &w[1..] {
                    v = a.mul(&v, &a.basis_vector(assignment[i]));
                }
                v
            })
            .collect();
        for k in 0..a.dim() {
            id_rows.push(values.iter().map(|v| v[k].clone()).collect());
        }
        for f in &funcs {
            z_rows.push(values.iter().map(|v| dot(f, v)).collect());
        }
    }
    Ok(TupleKernels {
        identity: PolySubspace { tuple: tuple.to_vec(), space: kernel(dim, id_rows) },
        central: PolySubspace { tuple: tuple.to_vec(), space: kernel(dim, z_rows) },
    })
}

/// Codimension contributions of one tuple, `multiplicity` counting the
/// reorderings of a sorted tuple (all of which contribute equally).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleCodim {
    pub tuple: Vec<GroupElement>,
    pub multiplicity: u64,
    pub c: u64,
    pub cz: u64,
    pub cdelta: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub c: u64,
    pub cz: u64,
    pub cdelta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub n: usize,
    pub tuples: Vec<TupleCodim>,
    pub totals: Totals,
}

/// Sorted tuples of length `n` (multisets) with their reordering counts.
pub fn canonical_tuples(group: &GroupSpec, n: usize) -> Vec<(Vec<GroupElement>, u64)> {
    let elems = group.elements();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i, n, m, cur, out);
            cur.pop();
        }
    }
    let mut idx = Vec::new();
    rec(0, n, elems.len(), &mut cur, &mut idx);
    for t in idx {
        let mut mult = perm::factorial(n) as u64;
        let mut i = 0;
        while i < t.len() {
            let j = (i..t.len()).find(|&j| t[j] != t[i]).unwrap_or(t.len());
            mult /= perm::factorial(j - i) as u64;
            i = j;
        }
        out.push((t.iter().map(|&i| elems[i].clone()).collect(), mult));
    }
    out
}

/// Limits checked before any codimension work starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_degree: usize,
    /// Wall-clock allowance, compared against an up-front work estimate.
    pub max_ms: Option<u64>,
}

/// Rough cost of one word step of the evaluator, for the up-front estimate.
const NANOS_PER_STEP: u128 = 40;

impl Budget {
    pub fn new(max_degree: usize) -> Self {
        Budget { max_degree, max_ms: None }
    }

    /// Reads `GPI_BUDGET_MS` when set.
    pub fn from_env(max_degree: usize) -> Self {
        let max_ms = std::env::var("GPI_BUDGET_MS").ok().and_then(|s| s.trim().parse().ok());
        Budget { max_degree, max_ms }
    }

    pub fn check(&self, n: usize, work: u128) -> Result<(), Refusal> {
        if n > self.max_degree {
            return Err(Refusal::Degree { n, max: self.max_degree });
        }
        if let Some(ms) = self.max_ms {
            let estimate = work * NANOS_PER_STEP / 1_000_000;
            if estimate > ms as u128 {
                return Err(Refusal::Time { estimate_ms: estimate, budget_ms: ms });
            }
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(6)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Refusal {
    #[error("degree {n} exceeds the limit {max}; raise --max-degree to allow it")]
    Degree { n: usize, max: usize },
    #[error("estimated {estimate_ms} ms exceeds the budget of {budget_ms} ms (GPI_BUDGET_MS)")]
    Time { estimate_ms: u128, budget_ms: u64 },
}

/// Evaluator steps for all tuples of degree `n`.
pub fn estimate_work(env: &Envelope, n: usize) -> u128 {
    let words = perm::factorial(n) as u128;
    canonical_tuples(env.group(), n)
        .iter()
        .map(|(t, _)| env.assignment_count(t) * words * n as u128 * env.dim() as u128)
        .sum()
}

/// Codimension reports for `1 ≤ n ≤ n_max`; refuses up front if any
/// degree is over budget.
pub fn codim_sequence(env: &Envelope, n_max: usize, budget: &Budget) -> Result<Vec<CodimReport>, Refusal> {
    let mut total = 0u128;
    for n in 1..=n_max {
        total += estimate_work(env, n);
        budget.check(n, total)?;
    }
    Ok((1..=n_max).map(|n| codim_report(env, n)).collect())
}

pub fn codim_report(env: &Envelope, n: usize) -> CodimReport {
    let tuples = canonical_tuples(env.group(), n);
    let rows = crate::par::map(tuples, |(t, mult)| {
        if env.assignment_count(&t) == 0 {
            return TupleCodim { tuple: t, multiplicity: mult, c: 0, cz: 0, cdelta: 0 };
        }
        let k = tuple_kernels(env, &t);
        let (c, cz) = (k.c() as u64, k.cz() as u64);
        TupleCodim { tuple: t, multiplicity: mult, c, cz, cdelta: c - cz }
    });
    let mut totals = Totals::default();
    for r in &rows {
        totals.c += r.c * r.multiplicity;
        totals.cz += r.cz * r.multiplicity;
        totals.cdelta += r.cdelta * r.multiplicity;
    }
    CodimReport { n, tuples: rows, totals }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Identity,
    ProperCentral,
    NotCentral,
}

/// Decision with a supporting evaluation: a non-central value for
/// `NotCentral`, a nonzero central value for `ProperCentral`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub membership: Membership,
    pub witness: Option<(MultilinearPoly, Vec<usize>, TaggedValue)>,
}

/// Evaluates one multilinear polynomial on every basis assignment.
pub fn classify_multilinear(env: &Envelope, f: &MultilinearPoly) -> Verdict {
    let mut nonzero = None;
    for a in env.assignments(&f.tuple) {
        let v = env.eval_poly(f, &a).expect("assignment matches tuple");
        if v.is_zero() {
            continue;
        }
        if !env.is_central(&v) {
            return Verdict { membership: Membership::NotCentral, witness: Some((f.clone(), a, v)) };
        }
        if nonzero.is_none() {
            nonzero = Some((f.clone(), a, v));
        }
    }
    match nonzero {
        Some(w) => Verdict { membership: Membership::ProperCentral, witness: Some(w) },
        None => Verdict { membership: Membership::Identity, witness: None },
    }
}

/// Decides through the multilinear components of `f`.
pub fn classify(env: &Envelope, f: &GradedPoly) -> Verdict {
    let mut best = Verdict { membership: Membership::Identity, witness: None };
    for m in multilinearize(f) {
        let v = classify_multilinear(env, &m);
        match v.membership {
            Membership::NotCentral => return v,
            Membership::ProperCentral if best.membership == Membership::Identity => best = v,
            _ => {}
        }
    }
    best
}

pub fn is_identity(env: &Envelope, f: &GradedPoly) -> bool {
    classify(env, f).membership == Membership::Identity
}

#[cfg(test)]
mod tests;
