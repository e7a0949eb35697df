//! Finite abelian groups as products of cyclic groups, the `G × Z2`
//! extension, and rational-valued 2-cocycles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("cyclic factor orders must be positive, got {0:?}")]
    BadOrder(Vec<u32>),
    #[error("element {element:?} does not belong to the group with orders {orders:?}")]
    Mismatch { element: Vec<u32>, orders: Vec<u32> },
    #[error("cannot read group `{0}`; write it as Z4, Z2xZ2 or trivial")]
    Syntax(String),
}

/// `Z_{n1} × … × Z_{nk}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub orders: Vec<u32>,
}

/// Residues, reduced componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub residues: Vec<u32>,
}

/// An element of `G × Z2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedDegree {
    pub g: GroupElement,
    pub parity: u8,
}

/// Written `Z4xZ2`; the trivial group is `Z1`.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    /// Accepts `Z4xZ2`, `Z4×Z2`, `Z4*Z2`, `trivial`, `1` and `Z1`.
    /// Factors of order 1 are dropped.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let t = s.trim();
        if t.is_empty() || t == "trivial" || t == "1" {
            return Ok(GroupSpec::trivial());
        }
        let mut orders = Vec::new();
        for part in t.split(['x', '×', '*']) {
            let n: u32 = part
                .trim()
                .strip_prefix('Z')
                .and_then(|d| d.parse().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| GroupError::Syntax(s.to_string()))?;
            if n > 1 {
                orders.push(n);
            }
        }
        GroupSpec::new(orders)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExtendedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.g, self.parity)
    }
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self, GroupError> {
        if orders.contains(&0) {
            return Err(GroupError::BadOrder(orders));
        }
        Ok(GroupSpec { orders })
    }

    pub fn cyclic(n: u32) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    pub fn trivial() -> Self {
        GroupSpec { orders: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |acc, &n| num_integer::lcm(acc, n))
    }

    /// `G × Z2` as a group in its own right, parity as the last coordinate.
    pub fn extended(&self) -> GroupSpec {
        let mut orders = self.orders.clone();
        orders.push(2);
        GroupSpec { orders }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { residues: vec![0; self.rank()] }
    }

    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        if residues.len() != self.rank() {
            return Err(GroupError::Mismatch {
                element: residues.iter().map(|&r| r.unsigned_abs() as u32).collect(),
                orders: self.orders.clone(),
            });
        }
        Ok(GroupElement {
            residues: residues.iter().zip(&self.orders).map(|(&r, &n)| r.rem_euclid(n as i64) as u32).collect(),
        })
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.residues.len() == self.rank() && g.residues.iter().zip(&self.orders).all(|(r, n)| r < n)
    }

    pub fn check(&self, g: &GroupElement) -> Result<(), GroupError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(GroupError::Mismatch { element: g.residues.clone(), orders: self.orders.clone() })
        }
    }

    /// Mixed-radix index, consistent with the order of [`GroupSpec::elements`].
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (r, n) in g.residues.iter().zip(&self.orders) {
            idx = idx * (*n as usize) + *r as usize;
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0u32; self.rank()];
        for (slot, &n) in residues.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        GroupElement { residues }
    }

    /// All elements in lexicographic residue order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            residues: a.residues.iter().zip(&b.residues).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect(),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(GroupElement { residues: a.residues.iter().zip(&self.orders).map(|(x, n)| (n - x) % n).collect() })
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.orders)
                .map(|(&x, &n)| ((x as i64 * k).rem_euclid(n as i64)) as u32)
                .collect(),
        })
    }

    pub fn element_order(&self, a: &GroupElement) -> Result<u32, GroupError> {
        self.check(a)?;
        Ok(a.residues
            .iter()
            .zip(&self.orders)
            .fold(1u32, |acc, (&x, &n)| num_integer::lcm(acc, n / num_integer::gcd(x, n))))
    }

    /// Closure of `gens` under products, sorted.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Result<Vec<GroupElement>, GroupError> {
        for g in gens {
            self.check(g)?;
        }
        let mut found = std::collections::BTreeSet::new();
        found.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul_unchecked(&x, g);
                if found.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    pub fn ext_identity(&self) -> ExtendedDegree {
        ExtendedDegree { g: self.identity(), parity: 0 }
    }

    pub fn ext_mul(&self, a: &ExtendedDegree, b: &ExtendedDegree) -> ExtendedDegree {
        ExtendedDegree { g: self.mul_unchecked(&a.g, &b.g), parity: a.parity ^ b.parity }
    }

    pub fn ext_inv(&self, a: &ExtendedDegree) -> ExtendedDegree {
        ExtendedDegree { g: self.inv(&a.g).expect("element of the group"), parity: a.parity }
    }

    /// Index of a `G × Z2` element: `2·index(g) + parity`.
    pub fn ext_index(&self, d: &ExtendedDegree) -> usize {
        2 * self.index_of(&d.g) + d.parity as usize
    }

    pub fn ext_at(&self, idx: usize) -> ExtendedDegree {
        ExtendedDegree { g: self.element_at(idx / 2), parity: (idx % 2) as u8 }
    }

    /// Flattens an extended degree into an element of [`GroupSpec::extended`].
    pub fn ext_to_element(&self, d: &ExtendedDegree) -> GroupElement {
        let mut residues = d.g.residues.clone();
        residues.push(d.parity as u32);
        GroupElement { residues }
    }

    pub fn element_to_ext(&self, e: &GroupElement) -> ExtendedDegree {
        let (last, init) = e.residues.split_last().expect("extended element");
        ExtendedDegree { g: GroupElement { residues: init.to_vec() }, parity: *last as u8 }
    }
}

impl ExtendedDegree {
    pub fn even(g: GroupElement) -> Self {
        ExtendedDegree { g, parity: 0 }
    }

    pub fn odd(g: GroupElement) -> Self {
        ExtendedDegree { g, parity: 1 }
    }
}

/// A normalized 2-cocycle on a subgroup, values in `Q^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub group: GroupSpec,
    pub subgroup: Vec<GroupElement>,
    pub table: BTreeMap<(GroupElement, GroupElement), Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CocycleViolation {
    #[error("{0} is not an element of the group")]
    NotInGroup(GroupElement),
    #[error("subgroup is not closed: {0}·{1} is missing")]
    NotClosed(GroupElement, GroupElement),
    #[error("no value for ({0}, {1})")]
    Missing(GroupElement, GroupElement),
    #[error("value at ({0}, {1}) is zero")]
    Zero(GroupElement, GroupElement),
    #[error("not normalized at {0}: α(e,h) and α(h,e) must be 1")]
    Normalization(GroupElement),
    #[error("cocycle condition fails at ({0}, {1}, {2})")]
    Condition(GroupElement, GroupElement, GroupElement),
}

impl Cocycle {
    pub fn trivial(group: GroupSpec, subgroup: Vec<GroupElement>) -> Self {
        let mut table = BTreeMap::new();
        for a in &subgroup {
            for b in &subgroup {
                table.insert((a.clone(), b.clone()), Rational::one());
            }
        }
        Cocycle { group, subgroup, table }
    }

    /// On the Klein group `⟨g⟩ × ⟨h⟩` with `g, h` of order 2:
    /// `α(g^a1 h^a2, g^b1 h^b2) = (−1)^(a2·b1)`, so the basis elements
    /// for `g` and `h` anticommute in the twisted group algebra.
    pub fn sign(group: GroupSpec, g: &GroupElement, h: &GroupElement) -> Result<Self, GroupError> {
        let sub = group.subgroup_generated(&[g.clone(), h.clone()])?;
        assert!(
            sub.len() == 4 && group.element_order(g)? == 2 && group.element_order(h)? == 2,
            "sign cocycle needs two distinct elements of order 2"
        );
        let coords = |x: &GroupElement| -> (u32, u32) {
            for a in 0..2 {
                for b in 0..2 {
                    let y = group.mul_unchecked(&group.pow(g, a).unwrap(), &group.pow(h, b).unwrap());
                    if &y == x {
                        return (a as u32, b as u32);
                    }
                }
            }
            unreachable!("element of the Klein subgroup")
        };
        let mut table = BTreeMap::new();
        for a in &sub {
            for b in &sub {
                let (_, a2) = coords(a);
                let (b1, _) = coords(b);
                let v = if a2 * b1 == 1 { -Rational::one() } else { Rational::one() };
                table.insert((a.clone(), b.clone()), v);
            }
        }
        Ok(Cocycle { group, subgroup: sub, table })
    }

    pub fn value(&self, a: &GroupElement, b: &GroupElement) -> Option<&Rational> {
        self.table.get(&(a.clone(), b.clone()))
    }
}

/// Checks closure, totality, normalization and the cocycle condition,
/// reporting the first failure in canonical order.
pub fn validate_cocycle(c: &Cocycle) -> Result<(), CocycleViolation> {
    let set: std::collections::BTreeSet<_> = c.subgroup.iter().cloned().collect();
    for a in &c.subgroup {
        if !c.group.contains(a) {
            return Err(CocycleViolation::NotInGroup(a.clone()));
        }
    }
    for a in &c.subgroup {
        for b in &c.subgroup {
            if !set.contains(&c.group.mul_unchecked(a, b)) {
                return Err(CocycleViolation::NotClosed(a.clone(), b.clone()));
            }
            match c.value(a, b) {
                None => return Err(CocycleViolation::Missing(a.clone(), b.clone())),
                Some(v) if v.is_zero() => return Err(CocycleViolation::Zero(a.clone(), b.clone())),
                _ => {}
            }
        }
    }
    let e = c.group.identity();
    for h in &c.subgroup {
        let l = c.value(&e, h);
        let r = c.value(h, &e);
        if l.is_none_or(|v| !v.is_one()) || r.is_none_or(|v| !v.is_one()) {
            return Err(CocycleViolation::Normalization(h.clone()));
        }
    }
    for a in &c.subgroup {
        for b in &c.subgroup {
            let ab = c.group.mul_unchecked(a, b);
            for x in &c.subgroup {
                let bx = c.group.mul_unchecked(b, x);
                let lhs = c.value(a, b).unwrap() * c.value(&ab, x).unwrap();
                let rhs = c.value(b, x).unwrap() * c.value(a, &bx).unwrap();
                if lhs != rhs {
                    return Err(CocycleViolation::Condition(a.clone(), b.clone(), x.clone()));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &GroupSpec, r: &[i64]) -> GroupElement {
        g.element(r).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        let z4 = GroupSpec::cyclic(4);
        assert_eq!(z4.element_order(&el(&z4, &[1])).unwrap(), 4);
        assert_eq!(z4.element_order(&el(&z4, &[2])).unwrap(), 2);
        let g = el(&z4, &[3]);
        assert_eq!(z4.mul(&g, &z4.inv(&g).unwrap()).unwrap(), z4.identity());
    }

    #[test]
    fn klein_product() {
        let v = GroupSpec::new(vec![2, 2]).unwrap();
        assert_eq!(v.mul(&el(&v, &[1, 0]), &el(&v, &[0, 1])).unwrap(), el(&v, &[1, 1]));
    }

    #[test]
    fn mismatch_is_an_error() {
        let z4 = GroupSpec::cyclic(4);
        let v = GroupSpec::new(vec![2, 2]).unwrap();
        assert!(z4.mul(&el(&v, &[1, 0]), &el(&z4, &[1])).is_err());
        assert!(GroupSpec::new(vec![0]).is_err());
    }

    #[test]
    fn subgroups() {
        let z4 = GroupSpec::cyclic(4);
        assert_eq!(z4.subgroup_generated(&[el(&z4, &[2])]).unwrap(), vec![el(&z4, &[0]), el(&z4, &[2])]);
        let v = GroupSpec::new(vec![2, 2]).unwrap();
        assert_eq!(v.subgroup_generated(&[el(&v, &[1, 0]), el(&v, &[0, 1])]).unwrap(), v.elements());
        // ⟨(g,1)⟩ in Z4 × Z2
        let ext = z4.extended();
        let c41 = ext.subgroup_generated(&[el(&ext, &[1, 1])]).unwrap();
        assert_eq!(c41, vec![el(&ext, &[0, 0]), el(&ext, &[1, 1]), el(&ext, &[2, 0]), el(&ext, &[3, 1])]);
    }

    #[test]
    fn index_round_trip() {
        let g = GroupSpec::new(vec![4, 2, 3]).unwrap();
        for (i, x) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(x), i);
            assert_eq!(&g.element_at(i), x);
        }
        for i in 0..2 * g.order() {
            assert_eq!(g.ext_index(&g.ext_at(i)), i);
        }
    }

    #[test]
    fn cocycles() {
        let v = GroupSpec::new(vec![2, 2]).unwrap();
        let (g, h) = (el(&v, &[1, 0]), el(&v, &[0, 1]));
        let s = Cocycle::sign(v.clone(), &g, &h).unwrap();
        assert_eq!(validate_cocycle(&s), Ok(()));
        assert_eq!(s.value(&g, &h).unwrap(), &Rational::one());
        assert_eq!(s.value(&h, &g).unwrap(), &-Rational::one());
        let mut bad = Cocycle::trivial(v.clone(), v.elements());
        assert_eq!(validate_cocycle(&bad), Ok(()));
        bad.table.insert((v.identity(), g.clone()), Rational::from_int(2));
        assert_eq!(validate_cocycle(&bad), Err(CocycleViolation::Normalization(g.clone())));
    }

    #[test]
    fn exhaustive_small_groups() {
        let shapes: Vec<Vec<u32>> = vec![
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![2, 2],
            vec![6],
            vec![4, 2],
            vec![2, 2, 2],
            vec![4, 4],
            vec![8, 2],
        ];
        for orders in shapes {
            let grp = GroupSpec::new(orders).unwrap();
            for a in grp.elements() {
                for b in grp.elements() {
                    let sub = grp.subgroup_generated(&[a.clone(), b.clone()]).unwrap();
                    assert_eq!(grp.order() % sub.len(), 0);
                    assert_eq!(grp.subgroup_generated(&sub).unwrap(), sub);
                    for x in &sub {
                        for y in &sub {
                            assert!(sub.binary_search(&grp.mul(x, y).unwrap()).is_ok());
                        }
                    }
                    assert_eq!(validate_cocycle(&Cocycle::trivial(grp.clone(), sub)), Ok(()));
                }
            }
        }
    }
}
