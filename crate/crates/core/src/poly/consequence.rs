//! Multilinear pieces of the graded T-ideal generated by a set of
//! polynomials, and of products of T-ideals.

use super::{multilinearize, perm, tuple_degree, GradedPoly, MultilinearPoly, PolySubspace};
use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{zero_vector, RowCollector, Subspace};

/// Multilinear components of a generating set, prepared once.
#[derive(Clone, Debug)]
pub struct ConsequenceGenerators {
    group: GroupSpec,
    gens: Vec<MultilinearPoly>,
}

impl ConsequenceGenerators {
    pub fn new(group: &GroupSpec, generators: &[GradedPoly]) -> Self {
        let gens = generators.iter().flat_map(multilinearize).collect();
        ConsequenceGenerators { group: group.clone(), gens }
    }

    pub fn components(&self) -> &[MultilinearPoly] {
        &self.gens
    }

    /// Span of every `u · f(w_1, …, w_k) · v` that is multilinear in the
    /// variables of `tuple`, with `f` a generator component and `u`, `v`,
    /// `w_j` monomials of matching degrees.
    pub fn span(&self, tuple: &[GroupElement]) -> PolySubspace {
        let n = tuple.len();
        let dim = perm::factorial(n);
        let mut rows = RowCollector::new(dim);
        for f in &self.gens {
            if f.n() > n || rows.is_full() {
                continue;
            }
            let mut slot_of = vec![0usize; n];
            self.assign(f, tuple, 0, &mut slot_of, &mut rows);
        }
        PolySubspace { tuple: tuple.to_vec(), space: Subspace::from_echelon(rows.finish()) }
    }

    /// Places variable `i` into slot `1..=k` of `f` or outside (slot 0).
    fn assign(
        &self,
        f: &MultilinearPoly,
        tuple: &[GroupElement],
        i: usize,
        slot_of: &mut [usize],
        rows: &mut RowCollector,
    ) {
        if rows.is_full() {
            return;
        }
        let k = f.n();
        if i == tuple.len() {
            let mut slots: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
            for (v, &s) in slot_of.iter().enumerate() {
                slots[s].push(v);
            }
            for j in 0..k {
                let members: Vec<GroupElement> = slots[j + 1].iter().map(|&v| tuple[v].clone()).collect();
                if members.is_empty() || tuple_degree(&self.group, &members) != f.tuple[j] {
                    return;
                }
            }
            emit_substitutions(f, &slots, tuple.len(), rows);
            return;
        }
        // slots still empty must be fillable by the remaining variables
        let empty = (1..=k).filter(|s| !slot_of[..i].contains(s)).count();
        for s in 0..=k {
            let remaining_after = tuple.len() - i - 1;
            let still_empty = if s > 0 && !slot_of[..i].contains(&s) { empty - 1 } else { empty };
            if still_empty > remaining_after {
                continue;
            }
            slot_of[i] = s;
            self.assign(f, tuple, i + 1, slot_of, rows);
        }
    }
}

fn emit_substitutions(f: &MultilinearPoly, slots: &[Vec<usize>], n: usize, rows: &mut RowCollector) {
    let k = f.n();
    let outside = &slots[0];
    let slot_orders: Vec<Vec<Vec<usize>>> = (1..=k)
        .map(|j| perm::all(slots[j].len()).into_iter().map(|p| p.iter().map(|&x| slots[j][x]).collect()).collect())
        .collect();
    let outside_orders: Vec<Vec<usize>> =
        perm::all(outside.len()).into_iter().map(|p| p.iter().map(|&x| outside[x]).collect()).collect();
    let mut choice = vec![0usize; k];
    loop {
        let words: Vec<&Vec<usize>> = (0..k).map(|j| &slot_orders[j][choice[j]]).collect();
        for o in &outside_orders {
            for cut in 0..=o.len() {
                let mut v = zero_vector(perm::factorial(n));
                for (w, c) in &f.terms {
                    let mut word = Vec::with_capacity(n);
                    word.extend_from_slice(&o[..cut]);
                    for &s in w {
                        word.extend_from_slice(words[s]);
                    }
                    word.extend_from_slice(&o[cut..]);
                    v[perm::rank(&word)] += c;
                }
                rows.push(v);
                if rows.is_full() {
                    return;
                }
            }
        }
        // odometer over slot orderings
        let mut j = 0;
        loop {
            if j == k {
                return;
            }
            choice[j] += 1;
            if choice[j] < slot_orders[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// Convenience wrapper around [`ConsequenceGenerators`].
pub fn t_consequences(group: &GroupSpec, generators: &[GradedPoly], tuple: &[GroupElement]) -> PolySubspace {
    ConsequenceGenerators::new(group, generators).span(tuple)
}

/// Multilinear part of the product of two T-ideals: the span of `p · q`
/// with `p` multilinear in a nonempty proper subset `S` of the variables
/// (taken from `left`) and `q` in the complement (taken from `right`).
pub fn product_span<L, R>(tuple: &[GroupElement], left: L, right: R) -> PolySubspace
where
    L: Fn(&[GroupElement]) -> PolySubspace,
    R: Fn(&[GroupElement]) -> PolySubspace,
{
    let n = tuple.len();
    let dim = perm::factorial(n);
    let mut rows = RowCollector::new(dim);
    if n >= 2 {
        for mask in 1..(1usize << n) - 1 {
            let s: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let c: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) == 0).collect();
            let ts: Vec<GroupElement> = s.iter().map(|&i| tuple[i].clone()).collect();
            let tc: Vec<GroupElement> = c.iter().map(|&i| tuple[i].clone()).collect();
            let p = left(&ts);
            if p.dim() == 0 {
                continue;
            }
            let q = right(&tc);
            let ps = p.basis_polys();
            let qs = q.basis_polys();
            for a in &ps {
                for b in &qs {
                    let mut v = zero_vector(dim);
                    for (wa, x) in &a.terms {
                        for (wb, y) in &b.terms {
                            let word: Vec<usize> = wa.iter().map(|&i| s[i]).chain(wb.iter().map(|&i| c[i])).collect();
                            v[perm::rank(&word)].add_product(x, y);
                        }
                    }
                    rows.push(v);
                    if rows.is_full() {
                        return PolySubspace { tuple: tuple.to_vec(), space: Subspace::from_echelon(rows.finish()) };
                    }
                }
            }
        }
    }
    PolySubspace { tuple: tuple.to_vec(), space: Subspace::from_echelon(rows.finish()) }
}
