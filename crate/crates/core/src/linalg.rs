//! Exact row reduction over the rationals and subspaces in canonical form.

use std::collections::HashSet;

use crate::rational::Rational;

pub type Vector = Vec<Rational>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// `dst += c * src`
pub fn axpy(dst: &mut [Rational], c: &Rational, src: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            d.add_product(c, s);
        }
    }
}

pub fn scale(v: &mut [Rational], c: &Rational) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x * c;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_product(x, y);
        }
    }
    acc
}

/// Scales `v` so its first nonzero entry is 1. Returns false for the zero vector.
pub fn normalize_leading(v: &mut [Rational]) -> bool {
    match v.iter().position(|x| !x.is_zero()) {
        None => false,
        Some(p) => {
            if !v[p].is_one() {
                let inv = v[p].recip().unwrap();
                scale(&mut v[p..], &inv);
            }
            true
        }
    }
}

/// A matrix kept in reduced row echelon form; rows are inserted one at a time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowEchelon {
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vector>>(ncols: usize, rows: I) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(r);
            if e.is_full() {
                break;
            }
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the row space in place, leaving its canonical remainder.
    pub fn reduce(&self, v: &mut [Rational]) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Adds `v` to the row space. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize_leading(&mut v);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.ncols);
            v[f] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Collects row vectors, skipping exact repeats up to scaling, and stops
/// accepting once the span is the whole space.
#[derive(Clone, Debug)]
pub struct RowCollector {
    echelon: RowEchelon,
    seen: HashSet<Vector>,
}

impl RowCollector {
    pub fn new(ncols: usize) -> Self {
        RowCollector { echelon: RowEchelon::new(ncols), seen: HashSet::new() }
    }

    pub fn push(&mut self, mut v: Vector) {
        if self.echelon.is_full() || !normalize_leading(&mut v) {
            return;
        }
        if self.seen.insert(v.clone()) {
            self.echelon.insert(v);
        }
    }

    pub fn is_full(&self) -> bool {
        self.echelon.is_full()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn finish(self) -> RowEchelon {
        self.echelon
    }
}

/// A linear subspace of `Q^n` stored as a reduced row echelon basis, so
/// equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    echelon: RowEchelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { echelon: RowEchelon::new(ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        Subspace { echelon: RowEchelon::from_rows(ambient, vectors) }
    }

    pub fn from_echelon(echelon: RowEchelon) -> Self {
        Subspace { echelon }
    }

    pub fn ambient(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &[Vector] {
        self.echelon.rows()
    }

    pub fn echelon(&self) -> &RowEchelon {
        &self.echelon
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient() == other.ambient() && self.basis().iter().all(|v| other.contains(v))
    }

    pub fn reduce(&self, v: &mut [Rational]) {
        self.echelon.reduce(v)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let mut e = self.echelon.clone();
        for v in other.basis() {
            e.insert(v.clone());
        }
        Subspace { echelon: e }
    }

    /// Orthogonal complement under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        Self::span(self.ambient(), self.echelon.nullspace())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn insert(&mut self, v: Vector) -> bool {
        self.echelon.insert(v)
    }
}

/// Expresses vectors as combinations of a fixed independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    len: usize,
    count: usize,
    echelon: RowEchelon,
}

impl Coordinates {
    /// Returns `None` if the family is linearly dependent.
    pub fn new(len: usize, family: &[Vector]) -> Option<Self> {
        let count = family.len();
        let mut echelon = RowEchelon::new(len + count);
        for (i, v) in family.iter().enumerate() {
            let mut row = v.clone();
            row.extend((0..count).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            echelon.insert(row);
        }
        // The family is independent iff every row keeps a pivot in the left block.
        if echelon.pivots().iter().filter(|&&p| p < len).count() != count {
            return None;
        }
        Some(Coordinates { len, count, echelon })
    }

    /// Coefficients `c` with `v = Σ c_i family[i]`, or `None` if `v` is outside the span.
    pub fn express(&self, v: &[Rational]) -> Option<Vector> {
        let mut row = v.to_vec();
        row.extend(std::iter::repeat_n(Rational::zero(), self.count));
        self.echelon.reduce(&mut row);
        if !is_zero(&row[..self.len]) {
            return None;
        }
        Some(row[self.len..].iter().map(|x| -x.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 3, 4]), v(&[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let e = RowEchelon::from_rows(4, vec![v(&[1, 1, 0, 2]), v(&[0, 0, 1, -1])]);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for r in e.rows() {
                assert!(dot(n, r).is_zero());
            }
        }
    }

    #[test]
    fn sum_and_intersection() {
        let xy = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let yz = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(xy.intersection(&yz), Subspace::span(3, vec![v(&[0, 1, 0])]));
        assert_eq!(xy.sum(&yz), Subspace::full(3));
        let z = Subspace::zero(3);
        assert_eq!(xy.sum(&z), xy);
        assert_eq!(xy.intersection(&xy), xy);
    }

    #[test]
    fn coordinates_round_trip() {
        let fam = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let c = Coordinates::new(3, &fam).unwrap();
        assert_eq!(c.express(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(c.express(&v(&[1, 0, 0])), None);
        assert!(Coordinates::new(3, &[v(&[1, 1, 0]), v(&[2, 2, 0])]).is_none());
    }
}
