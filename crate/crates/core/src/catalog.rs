//! Named algebras built from parameters, each with its Wedderburn data,
//! and a table of polynomials separating pairs of them.
//!
//! A catalog object is the Grassmann envelope `E(B)` of the body `B`
//! returned here; bodies with no odd part are the algebras themselves.
//! Specs are written `ID(params)@GROUP`, e.g. `A6(g,1,g)@Z2`, with group
//! elements named as in polynomial text and `g:1` for the odd degree
//! `(g, 1)` where a `G × Z2` degree is expected.

use crate::algebra::{
    group_algebra, matrix_elementary, matrix_over, subalgebra_from_basis, triangular_subalgebra, twisted_group_algebra,
    AlgebraError, DiagConstraint, GradedAlgebra, WedderburnData,
};
use crate::group::{Cocycle, ExtendedDegree, GroupElement, GroupError, GroupSpec};
use crate::linalg::{zero_vector, Subspace, Vector};
use crate::poly::LabelMap;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog id `{0}`; `gpi catalog list` shows the available ids")]
    UnknownId(String),
    #[error("cannot read catalog spec `{0}`; expected ID(params)@GROUP, e.g. A6(g,1,g)@Z2")]
    Syntax(String),
    #[error("{id}: {msg}")]
    Params { id: String, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A built catalog algebra. `id` is the canonical `FAMILY(params)` form.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub family: &'static str,
    pub params: Vec<String>,
    pub body: GradedAlgebra,
}

impl CatalogEntry {
    /// `id@group`, which [`build_spec`] reads back.
    pub fn spec(&self) -> String {
        format!("{}@{}", self.id, self.body.group)
    }
}

/// One family of the catalog, for listings.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub id: &'static str,
    pub params: &'static str,
    pub about: &'static str,
    pub example: &'static str,
}

pub const FAMILIES: &[Family] = &[
    Family { id: "A1", params: "g,i", about: "E(M2), e12 of degree (g,i)", example: "A1(g,1)@Z2" },
    Family { id: "A2", params: "p[,g]", about: "group algebra FC_p, p prime dividing |G|", example: "A2(3)@Z3" },
    Family { id: "A3", params: "[g]", about: "group algebra FC_4, g of order 4", example: "A3@Z4" },
    Family { id: "A4", params: "[g]", about: "E(F<(g,1)>), g of order 4", example: "A4@Z4" },
    Family {
        id: "A5",
        params: "i,j[,sign|trivial][,g,h]",
        about: "E(F^a<(g,i),(h,j)>), g, h distinct of order 2",
        example: "A5(1,0)@Z2xZ2",
    },
    Family { id: "A6", params: "g1,g2,g3", about: "UT4 with a11=a44, cumulative grading", example: "A6(g,1,g)@Z2" },
    Family {
        id: "A7",
        params: "g1,g2,g3,g4",
        about: "UT5 with a11=a55=0, cumulative grading",
        example: "A7(g,1,g,1)@Z2",
    },
    Family { id: "A8", params: "g1,g2", about: "UT3(E) with a11=a33, a22 even", example: "A8(g,g^2)@Z3" },
    Family { id: "A9", params: "g1,g2,g3", about: "E(M), tuple (e,g1,g1g2,(g1g2)^1,g1g2g3)", example: "A9(g,1,g)@Z2" },
    Family { id: "A9_1", params: "g1,g2,g3", about: "E(M), last entry odd", example: "A9_1(g,1,g)@Z2" },
    Family { id: "A9_2", params: "g1,g2,g3", about: "E(M), parities (0,1,1,0,1)", example: "A9_2(g,1,g)@Z2" },
    Family { id: "A9_3", params: "g1,g2,g3", about: "E(M), parities (0,1,1,0,0)", example: "A9_3(g,1,g)@Z2" },
    Family { id: "A10", params: "g1,g2,g3", about: "E(N), tuple (e,g1,g1^1,g1g2,g1g2g3)", example: "A10(g,1,g)@Z2" },
    Family { id: "A10_1", params: "g1,g2,g3", about: "E(N), parities (0,1,0,1,1)", example: "A10_1(g,1,g)@Z2" },
    Family { id: "A10_2", params: "g1,g2,g3", about: "E(N), parities (0,0,1,0,1)", example: "A10_2(g,1,g)@Z2" },
    Family { id: "A10_3", params: "g1,g2,g3", about: "E(N), parities (0,1,0,1,0)", example: "A10_3(g,1,g)@Z2" },
    Family { id: "A11", params: "g1,g2", about: "E(P), tuple (e,g1,g1^1,g1g2)", example: "A11(g,1)@Z2" },
    Family { id: "A12", params: "g1,g2", about: "E(P), tuple (e,g1,g1^1,(g1g2)^1)", example: "A12(g,1)@Z2" },
    Family { id: "B1", params: "[1,]g", about: "{e12, e22} in M2, tuple (1,g)", example: "B1(g)@Z2" },
    Family { id: "B2", params: "[1,1,]g", about: "E of {u(e11+e22)+v(e12+e21), e13, e23}", example: "B2(g)@Z2" },
    Family { id: "C1", params: "[1,]g[,g]", about: "E of {e12, e13, u(e22+e33)+v(e23+e32)}", example: "C1(g)@Z2" },
    Family { id: "C2", params: "[1,]g", about: "{e11, e12} in M2, tuple (1,g)", example: "C2(g)@Z2" },
    Family { id: "D", params: "[1,]g,h", about: "UT3 with a11=a33, tuple (1,g,h)", example: "D(g,h)@Z2xZ2" },
    Family {
        id: "D0",
        params: "[1,]g,h,h'",
        about: "UT4 with a11=a44=0, tuple (1,g,h,h')",
        example: "D0(g,h,gh)@Z2xZ2",
    },
    Family { id: "E", params: "", about: "F + cF with c odd of degree 1 (the Grassmann algebra)", example: "E@Z1" },
    Family { id: "E_b", params: "b", about: "F + cF with c odd of degree b", example: "E_b(g)@Z2" },
    Family { id: "M", params: "t1,..,t5", about: "M pattern, explicit G x Z2 tuple", example: "M(e,g,g,g:1,1)@Z2" },
    Family { id: "N", params: "t1,..,t5", about: "N pattern, explicit G x Z2 tuple", example: "N(e,g,g:1,1,g)@Z2" },
    Family { id: "P", params: "t1,..,t4", about: "P pattern, explicit G x Z2 tuple", example: "P(e,g,g:1,g)@Z2" },
];

fn canonical_family(id: &str) -> Option<&'static str> {
    let id = match id {
        "E_trivial" => "E",
        "Eb" => "E_b",
        "M_pattern" => "M",
        "N_pattern" => "N",
        "P_pattern" => "P",
        other => other,
    };
    FAMILIES.iter().find(|f| f.id == id).map(|f| f.id)
}

/// Family, parameters and group of a spec, with or without the `catalog:` prefix.
pub fn parse_spec(spec: &str) -> Result<(String, Vec<String>, GroupSpec), CatalogError> {
    let s = spec.trim();
    let s = s.strip_prefix("catalog:").unwrap_or(s);
    let (head, group) = match s.rsplit_once('@') {
        Some((h, g)) => (h.trim(), g.parse::<GroupSpec>()?),
        None => (s, GroupSpec::trivial()),
    };
    let (family, params) = match head.find('(') {
        Some(open) => {
            let inner = head[open + 1..].strip_suffix(')').ok_or_else(|| CatalogError::Syntax(spec.to_string()))?;
            let params: Vec<String> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|p| p.trim().to_string()).collect()
            };
            (head[..open].trim(), params)
        }
        None => (head, Vec::new()),
    };
    if family.is_empty() || params.iter().any(String::is_empty) {
        return Err(CatalogError::Syntax(spec.to_string()));
    }
    Ok((family.to_string(), params, group))
}

pub fn build_spec(spec: &str) -> Result<CatalogEntry, CatalogError> {
    let (family, params, group) = parse_spec(spec)?;
    let refs: Vec<&str> = params.iter().map(String::as_str).collect();
    build(&family, &refs, &group)
}

struct Ctx<'a> {
    family: &'static str,
    group: &'a GroupSpec,
    labels: LabelMap,
}

impl Ctx<'_> {
    fn err(&self, msg: impl Into<String>) -> CatalogError {
        CatalogError::Params { id: self.family.to_string(), msg: msg.into() }
    }

    fn arity(&self, params: &[&str], allowed: &[usize]) -> Result<(), CatalogError> {
        if allowed.contains(&params.len()) {
            Ok(())
        } else {
            let want: Vec<String> = allowed.iter().map(usize::to_string).collect();
            Err(self.err(format!("expected {} parameters, got {}", want.join(" or "), params.len())))
        }
    }

    fn elem(&self, s: &str) -> Result<GroupElement, CatalogError> {
        self.labels.resolve(s).map_err(|_| self.err(format!("`{s}` is not an element of {}", self.group)))
    }

    fn bit(&self, s: &str) -> Result<u8, CatalogError> {
        match s {
            "0" => Ok(0),
            "1" => Ok(1),
            _ => Err(self.err(format!("parity must be 0 or 1, got `{s}`"))),
        }
    }

    /// `label` or `label:parity`.
    fn ext(&self, s: &str) -> Result<ExtendedDegree, CatalogError> {
        let (g, p) = match s.rsplit_once(':') {
            Some((g, p)) => (g, self.bit(p)?),
            None => (s, 0),
        };
        Ok(ExtendedDegree { g: self.elem(g)?, parity: p })
    }

    fn identity(&self, s: &str) -> Result<(), CatalogError> {
        if self.elem(s)? == self.group.identity() {
            Ok(())
        } else {
            Err(self.err(format!("leading tuple entries must be the identity, got `{s}`")))
        }
    }

    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.group.mul(a, b).expect("checked elements")
    }

    /// `(1, g1, g1g2, …)` from `(g1, g2, …)`, all even.
    fn cumulative(&self, gs: &[GroupElement]) -> Vec<ExtendedDegree> {
        let mut acc = self.group.identity();
        let mut out = vec![self.group.ext_identity()];
        for g in gs {
            acc = self.mul(&acc, g);
            out.push(ExtendedDegree::even(acc.clone()));
        }
        out
    }

    fn of_order(&self, n: u32, given: Option<&str>) -> Result<GroupElement, CatalogError> {
        match given {
            Some(s) => {
                let g = self.elem(s)?;
                if self.group.element_order(&g)? != n {
                    return Err(self.err(format!("`{s}` must have order {n}")));
                }
                Ok(g)
            }
            None => self
                .group
                .elements()
                .into_iter()
                .find(|g| self.group.element_order(g).ok() == Some(n))
                .ok_or_else(|| self.err(format!("{} has no element of order {n}", self.group))),
        }
    }

    /// Leading fixed identities followed by `free` parameters.
    fn tail<'p>(&self, params: &[&'p str], lead: usize, free: usize) -> Result<Vec<&'p str>, CatalogError> {
        if params.len() == free {
            return Ok(params.to_vec());
        }
        if params.len() == lead + free {
            for p in &params[..lead] {
                self.identity(p)?;
            }
            return Ok(params[lead..].to_vec());
        }
        Err(self.err(format!("expected {free} or {} parameters, got {}", lead + free, params.len())))
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `F ⊕ cF` with `c² = 1`, `c` odd of `G`-degree `b`.
pub fn super_scalars(group: &GroupSpec, b: &GroupElement) -> Result<GradedAlgebra, AlgebraError> {
    group.check(b)?;
    let one = Rational::one();
    let mut a = GradedAlgebra::from_entries(
        "E",
        group.clone(),
        vec!["1".into(), "c".into()],
        vec![group.ext_identity(), ExtendedDegree::odd(b.clone())],
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one)],
    )?;
    a.unit = Some(vec![Rational::one(), Rational::zero()]);
    a.wedderburn = Some(WedderburnData { components: vec![Subspace::full(2)], radical: Subspace::zero(2) });
    Ok(a)
}

/// Sum of matrix units `(i, j)` (1-based) times scalar basis element `k`
/// inside `M_n(S)` with `dim S = s`.
fn units(n: usize, s: usize, cells: &[(usize, usize, usize)]) -> Vector {
    let mut v = zero_vector(n * n * s);
    for &(i, j, k) in cells {
        v[((i - 1) * n + (j - 1)) * s + k] = Rational::one();
    }
    v
}

type Cells = &'static [(usize, usize, usize)];

fn pattern(
    ambient: &GradedAlgebra,
    n: usize,
    s: usize,
    elements: &[(&str, Cells)],
    components: &[Vec<usize>],
) -> Result<GradedAlgebra, AlgebraError> {
    let basis: Vec<(String, Vector)> = elements.iter().map(|(l, c)| (l.to_string(), units(n, s, c))).collect();
    let sub = subalgebra_from_basis(ambient, "pattern", &basis)?;
    let radical: Vec<usize> = (0..basis.len()).filter(|i| !components.iter().any(|c| c.contains(i))).collect();
    Ok(sub.with_wedderburn_indices(components, &radical))
}

const M_PATTERN: &[(&str, Cells)] = &[
    ("e12", &[(1, 2, 0)]),
    ("e13", &[(1, 3, 0)]),
    ("e14", &[(1, 4, 0)]),
    ("e15", &[(1, 5, 0)]),
    ("e22", &[(2, 2, 0)]),
    ("e23", &[(2, 3, 0)]),
    ("e24", &[(2, 4, 0)]),
    ("e25", &[(2, 5, 0)]),
    ("e33+e44", &[(3, 3, 0), (4, 4, 0)]),
    ("e34+e43", &[(3, 4, 0), (4, 3, 0)]),
    ("e35", &[(3, 5, 0)]),
    ("e45", &[(4, 5, 0)]),
];

const N_PATTERN: &[(&str, Cells)] = &[
    ("e12", &[(1, 2, 0)]),
    ("e13", &[(1, 3, 0)]),
    ("e14", &[(1, 4, 0)]),
    ("e15", &[(1, 5, 0)]),
    ("e22+e33", &[(2, 2, 0), (3, 3, 0)]),
    ("e23+e32", &[(2, 3, 0), (3, 2, 0)]),
    ("e24", &[(2, 4, 0)]),
    ("e25", &[(2, 5, 0)]),
    ("e34", &[(3, 4, 0)]),
    ("e35", &[(3, 5, 0)]),
    ("e44", &[(4, 4, 0)]),
    ("e45", &[(4, 5, 0)]),
];

const P_PATTERN: &[(&str, Cells)] = &[
    ("e11+e44", &[(1, 1, 0), (4, 4, 0)]),
    ("e12", &[(1, 2, 0)]),
    ("e13", &[(1, 3, 0)]),
    ("e14", &[(1, 4, 0)]),
    ("e22+e33", &[(2, 2, 0), (3, 3, 0)]),
    ("e23+e32", &[(2, 3, 0), (3, 2, 0)]),
    ("e24", &[(2, 4, 0)]),
    ("e34", &[(3, 4, 0)]),
];

/// `UT3(E)` with `a11 = a33` and `a22` even, over `F ⊕ cF`.
const A8_PATTERN: &[(&str, Cells)] = &[
    ("e11+e33", &[(1, 1, 0), (3, 3, 0)]),
    ("c(e11+e33)", &[(1, 1, 1), (3, 3, 1)]),
    ("e22", &[(2, 2, 0)]),
    ("e12", &[(1, 2, 0)]),
    ("ce12", &[(1, 2, 1)]),
    ("e13", &[(1, 3, 0)]),
    ("ce13", &[(1, 3, 1)]),
    ("e23", &[(2, 3, 0)]),
    ("ce23", &[(2, 3, 1)]),
];

fn m_body(group: &GroupSpec, t: &[ExtendedDegree]) -> Result<GradedAlgebra, AlgebraError> {
    pattern(&matrix_elementary(group, 5, t)?, 5, 1, M_PATTERN, &[vec![4], vec![8, 9]])
}

fn n_body(group: &GroupSpec, t: &[ExtendedDegree]) -> Result<GradedAlgebra, AlgebraError> {
    pattern(&matrix_elementary(group, 5, t)?, 5, 1, N_PATTERN, &[vec![4, 5], vec![10]])
}

fn p_body(group: &GroupSpec, t: &[ExtendedDegree]) -> Result<GradedAlgebra, AlgebraError> {
    pattern(&matrix_elementary(group, 4, t)?, 4, 1, P_PATTERN, &[vec![0], vec![4, 5]])
}

/// Parities of the five tuple entries for the `M` and `N` variants.
fn variant_parities(family: &str) -> [u8; 5] {
    match family {
        "A9" => [0, 0, 0, 1, 0],
        "A9_1" => [0, 0, 0, 1, 1],
        "A9_2" => [0, 1, 1, 0, 1],
        "A9_3" => [0, 1, 1, 0, 0],
        "A10" => [0, 0, 1, 0, 0],
        "A10_1" => [0, 1, 0, 1, 1],
        "A10_2" => [0, 0, 1, 0, 1],
        "A10_3" => [0, 1, 0, 1, 0],
        _ => unreachable!("not an M or N variant"),
    }
}

pub fn build(family: &str, params: &[&str], group: &GroupSpec) -> Result<CatalogEntry, CatalogError> {
    let fam = canonical_family(family).ok_or_else(|| CatalogError::UnknownId(family.to_string()))?;
    let cx = Ctx { family: fam, group, labels: LabelMap::standard(group) };
    let ev = ExtendedDegree::even;
    let body = match fam {
        "A1" => {
            cx.arity(params, &[2])?;
            let d = ExtendedDegree { g: cx.elem(params[0])?, parity: cx.bit(params[1])? };
            matrix_elementary(group, 2, &[group.ext_identity(), d])?
        }
        "A2" => {
            cx.arity(params, &[1, 2])?;
            let p: u32 = params[0].parse().map_err(|_| cx.err(format!("`{}` is not a prime", params[0])))?;
            if !is_prime(p) {
                return Err(cx.err(format!("{p} is not prime")));
            }
            if !group.order().is_multiple_of(p as usize) {
                return Err(cx.err(format!("{p} does not divide |G| = {}", group.order())));
            }
            let g = cx.of_order(p, params.get(1).copied())?;
            group_algebra(group, &[ev(g)])?
        }
        "A3" | "A4" => {
            cx.arity(params, &[0, 1])?;
            let g = cx.of_order(4, params.first().copied())?;
            let d = if fam == "A3" { ev(g) } else { ExtendedDegree::odd(g) };
            group_algebra(group, &[d])?
        }
        "A5" => {
            cx.arity(params, &[2, 3, 4, 5])?;
            let (i, j) = (cx.bit(params[0])?, cx.bit(params[1])?);
            let mut rest = &params[2..];
            let mut sign = true;
            if let Some(&c) = rest.first() {
                if c == "sign" || c == "trivial" {
                    sign = c == "sign";
                    rest = &rest[1..];
                }
            }
            let (g, h) = match rest {
                [] => {
                    // generators first, in factor order: g before h before gh
                    let mut twos: Vec<GroupElement> =
                        group.elements().into_iter().filter(|x| group.element_order(x).ok() == Some(2)).collect();
                    twos.sort_by_key(|x| {
                        let support: Vec<usize> = (0..x.residues.len()).filter(|&i| x.residues[i] != 0).collect();
                        (support.len(), support)
                    });
                    if twos.len() < 2 {
                        return Err(cx.err(format!("{group} has fewer than two elements of order 2")));
                    }
                    (twos[0].clone(), twos[1].clone())
                }
                [a, b] => (cx.of_order(2, Some(a))?, cx.of_order(2, Some(b))?),
                _ => return Err(cx.err("expected i,j[,sign|trivial][,g,h]")),
            };
            if g == h {
                return Err(cx.err("g and h must be distinct"));
            }
            let ext = group.extended();
            let (gi, hj) = (
                group.ext_to_element(&ExtendedDegree { g, parity: i }),
                group.ext_to_element(&ExtendedDegree { g: h, parity: j }),
            );
            let c = if sign {
                Cocycle::sign(ext.clone(), &gi, &hj)?
            } else {
                let sub = ext.subgroup_generated(&[gi, hj])?;
                Cocycle::trivial(ext.clone(), sub)
            };
            twisted_group_algebra(group, &c)?
        }
        "A6" => {
            cx.arity(params, &[3])?;
            let gs = params.iter().map(|p| cx.elem(p)).collect::<Result<Vec<_>, _>>()?;
            triangular_subalgebra(group, 4, &cx.cumulative(&gs), &[DiagConstraint::Identify(vec![1, 4])])?
        }
        "A7" => {
            cx.arity(params, &[4])?;
            let gs = params.iter().map(|p| cx.elem(p)).collect::<Result<Vec<_>, _>>()?;
            triangular_subalgebra(group, 5, &cx.cumulative(&gs), &[DiagConstraint::Zero(1), DiagConstraint::Zero(5)])?
        }
        "A8" => {
            cx.arity(params, &[2])?;
            let (g1, g2) = (cx.elem(params[0])?, cx.elem(params[1])?);
            let t = cx.cumulative(&[g2, g1]);
            let amb = matrix_over(group, &super_scalars(group, &group.identity())?, &t)?;
            pattern(&amb, 3, 2, A8_PATTERN, &[vec![0, 1], vec![2]])?
        }
        "A9" | "A9_1" | "A9_2" | "A9_3" | "A10" | "A10_1" | "A10_2" | "A10_3" => {
            cx.arity(params, &[3])?;
            let gs = params.iter().map(|p| cx.elem(p)).collect::<Result<Vec<_>, _>>()?;
            let c = cx.cumulative(&gs);
            let par = variant_parities(fam);
            // M repeats g1g2 at positions 3 and 4, N repeats g1 at positions 2 and 3
            let gsq: Vec<&GroupElement> = if fam.starts_with("A9") {
                vec![&c[0].g, &c[1].g, &c[2].g, &c[2].g, &c[3].g]
            } else {
                vec![&c[0].g, &c[1].g, &c[1].g, &c[2].g, &c[3].g]
            };
            let t: Vec<ExtendedDegree> =
                gsq.iter().zip(par).map(|(g, p)| ExtendedDegree { g: (*g).clone(), parity: p }).collect();
            if fam.starts_with("A9") {
                m_body(group, &t)?
            } else {
                n_body(group, &t)?
            }
        }
        "A11" | "A12" => {
            cx.arity(params, &[2])?;
            let (g1, g2) = (cx.elem(params[0])?, cx.elem(params[1])?);
            let g12 = cx.mul(&g1, &g2);
            let last = if fam == "A11" { 0 } else { 1 };
            let t = [
                group.ext_identity(),
                ev(g1.clone()),
                ExtendedDegree::odd(g1),
                ExtendedDegree { g: g12, parity: last },
            ];
            p_body(group, &t)?
        }
        "M" | "N" | "P" => {
            let n = if fam == "P" { 4 } else { 5 };
            cx.arity(params, &[n])?;
            let t = params.iter().map(|p| cx.ext(p)).collect::<Result<Vec<_>, _>>()?;
            match fam {
                "M" => m_body(group, &t)?,
                "N" => n_body(group, &t)?,
                _ => p_body(group, &t)?,
            }
        }
        "B1" | "C2" => {
            let g = cx.elem(cx.tail(params, 1, 1)?[0])?;
            let m = matrix_elementary(group, 2, &[group.ext_identity(), ev(g)])?;
            if fam == "B1" {
                pattern(&m, 2, 1, &[("e12", &[(1, 2, 0)]), ("e22", &[(2, 2, 0)])], &[vec![1]])?
            } else {
                pattern(&m, 2, 1, &[("e11", &[(1, 1, 0)]), ("e12", &[(1, 2, 0)])], &[vec![0]])?
            }
        }
        "B2" => {
            let g = cx.elem(cx.tail(params, 2, 1)?[0])?;
            let t = [group.ext_identity(), ExtendedDegree::odd(group.identity()), ev(g)];
            let m = matrix_elementary(group, 3, &t)?;
            let cells: &[(&str, Cells)] = &[
                ("e11+e22", &[(1, 1, 0), (2, 2, 0)]),
                ("e12+e21", &[(1, 2, 0), (2, 1, 0)]),
                ("e13", &[(1, 3, 0)]),
                ("e23", &[(2, 3, 0)]),
            ];
            pattern(&m, 3, 1, cells, &[vec![0, 1]])?
        }
        "C1" => {
            let rest = match params.len() {
                1 => params.to_vec(),
                2 => vec![params[1]],
                3 => {
                    cx.identity(params[0])?;
                    if cx.elem(params[1])? != cx.elem(params[2])? {
                        return Err(cx.err("the tuple must have the form (1,g,g)"));
                    }
                    vec![params[1]]
                }
                k => return Err(cx.err(format!("expected 1 or 3 parameters, got {k}"))),
            };
            if params.len() == 2 {
                cx.identity(params[0])?;
            }
            let g = cx.elem(rest[0])?;
            let t = [group.ext_identity(), ev(g.clone()), ExtendedDegree::odd(g)];
            let m = matrix_elementary(group, 3, &t)?;
            let cells: &[(&str, Cells)] = &[
                ("e12", &[(1, 2, 0)]),
                ("e13", &[(1, 3, 0)]),
                ("e22+e33", &[(2, 2, 0), (3, 3, 0)]),
                ("e23+e32", &[(2, 3, 0), (3, 2, 0)]),
            ];
            pattern(&m, 3, 1, cells, &[vec![2, 3]])?
        }
        "D" => {
            let rest = cx.tail(params, 1, 2)?;
            let t = [group.ext_identity(), ev(cx.elem(rest[0])?), ev(cx.elem(rest[1])?)];
            triangular_subalgebra(group, 3, &t, &[DiagConstraint::Identify(vec![1, 3])])?
        }
        "D0" => {
            let rest = cx.tail(params, 1, 3)?;
            let mut t = vec![group.ext_identity()];
            for p in rest {
                t.push(ev(cx.elem(p)?));
            }
            triangular_subalgebra(group, 4, &t, &[DiagConstraint::Zero(1), DiagConstraint::Zero(4)])?
        }
        "E" => {
            cx.arity(params, &[0])?;
            super_scalars(group, &group.identity())?
        }
        "E_b" => {
            cx.arity(params, &[1])?;
            super_scalars(group, &cx.elem(params[0])?)?
        }
        _ => unreachable!("family table and builder disagree on {fam}"),
    };
    let id = if params.is_empty() { fam.to_string() } else { format!("{fam}({})", params.join(",")) };
    Ok(CatalogEntry {
        id: id.clone(),
        family: fam,
        params: params.iter().map(|s| s.to_string()).collect(),
        body: body.with_name(id),
    })
}

/// A row of `catalog list`: the family's example instance and its size.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ListRow {
    pub id: &'static str,
    pub params: &'static str,
    pub about: &'static str,
    pub example: &'static str,
    pub dim: usize,
    pub odd_dim: usize,
}

pub fn list() -> Vec<ListRow> {
    FAMILIES
        .iter()
        .map(|f| {
            let e = build_spec(f.example).expect("catalog examples build");
            ListRow {
                id: f.id,
                params: f.params,
                about: f.about,
                example: f.example,
                dim: e.body.dim(),
                odd_dim: e.body.degree.iter().filter(|d| d.parity == 1).count(),
            }
        })
        .collect()
}

/// A polynomial that is an identity of one catalog algebra and not of
/// another. Polynomial text uses the standard labels of the shared group.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WitnessEntry {
    pub polynomial: String,
    pub holds_in: String,
    pub fails_in: String,
    pub note: Option<String>,
}

fn w(polynomial: &str, holds_in: &str, fails_in: &str, note: Option<&str>) -> WitnessEntry {
    WitnessEntry {
        polynomial: polynomial.into(),
        holds_in: holds_in.into(),
        fails_in: fails_in.into(),
        note: note.map(Into::into),
    }
}

/// Separating polynomials for the non-comparability of the catalog
/// varieties, on concrete instances.
pub fn witness_table() -> Vec<WitnessEntry> {
    vec![
        // chains e12 e23 e34 and e12 e23 e34 e45 with the degrees of the other instance
        w("x1:g x2:g x3:g", "A6(g^2,g^2,g^2)@Z3", "A6(g,g,g)@Z3", None),
        w("x1:g^2 x2:g^2 x3:g^2", "A6(g,g,g)@Z3", "A6(g^2,g^2,g^2)@Z3", None),
        w("x1:g x2:g x3:g x4:g", "A7(g^2,g^2,g^2,g^2)@Z3", "A7(g,g,g,g)@Z3", None),
        w("x1:g^2 x2:g^2 x3:g^2 x4:g^2", "A7(g,g,g,g)@Z3", "A7(g^2,g^2,g^2,g^2)@Z3", None),
        w(
            "x1:g^2 x2:g",
            "A8(g^2,g)@Z3",
            "A8(g,g^2)@Z3",
            Some("e12 e23 has degrees (g2, g1) in A8(g1,g2); see the flagged literal reading"),
        ),
        w("x1:g x2:g^2", "A8(g,g^2)@Z3", "A8(g^2,g)@Z3", None),
        w("x1:g x2:g x3:g", "A9(g^2,g^2,g^2)@Z3", "A9(g,g,g)@Z3", Some("chain e12 e23 e35")),
        w("x1:g^2 x2:g^2 x3:g^2", "A9(g,g,g)@Z3", "A9(g^2,g^2,g^2)@Z3", None),
        w("x1:g x2:g x3:g", "A10(g^2,g^2,g^2)@Z3", "A10(g,g,g)@Z3", Some("chain e12 e24 e45")),
        w("x1:g^2 x2:g^2 x3:g^2", "A10(g,g,g)@Z3", "A10(g^2,g^2,g^2)@Z3", None),
        w("ac(x1:g, x2:g)", "A5(1,0)@Z2xZ2", "A5(0,0)@Z2xZ2", Some("degree-g part odd in A5(1,0), even in A5(0,0)")),
        w(
            "x1:h x2:g + x2:g x1:h",
            "A5(0,0)@Z2xZ2",
            "A5(1,1)@Z2xZ2",
            Some("a(g,h) y z - a(h,g) z y for the sign cocycle, y of degree h and z of degree g"),
        ),
        w("[x1:g, x2:g]", "A3@Z4", "A4@Z4", None),
        w("ac(x1:g, x2:g)", "A4@Z4", "A3@Z4", None),
        w("x1:g x2:g", "A1(g,0)@Z3", "A2(3)@Z3", None),
        w("x1:g^2 x2:g^2", "A1(g^2,1)@Z3", "A2(3)@Z3", None),
        w("[x1:1, x2:1]", "A3@Z4", "A1(1,0)@Z4", None),
        w("[x1:g^2, x2:g^2]", "A3@Z4", "A1(g^2,0)@Z4", None),
        w("[x1:1, x2:g]", "A3@Z4", "A1(g,0)@Z4", None),
        w("[x1:1, x2:g]", "A4@Z4", "A1(g,1)@Z4", Some("the commutator, not x1:1 o x2:g, separates A4 from A1")),
        w("[x1:1, x2:g]", "A5(0,1)@Z2xZ2", "A1(g,0)@Z2xZ2", None),
        w("[x1:1, x2:1]", "A5(1,1)@Z2xZ2", "A1(1,1)@Z2xZ2", None),
        w("[x1:1, x2:g]", "A2(3)@Z3", "A11(g,1)@Z3", None),
        w("[x1:1, x2:g]", "A3@Z4", "A11(g,g)@Z4", None),
        w("ac(x1:1, x2:h)", "A4(g)@Z4xZ2", "A11(h,1)@Z4xZ2", Some("needs g1 outside <g>; A4 has no degree-h part")),
        w("[x1:1, x2:g]", "A5(1,0)@Z2xZ2", "A11(g,h)@Z2xZ2", None),
        w("[x1:1, x2:g]", "A5(0,0)@Z2xZ2", "A12(g,1)@Z2xZ2", None),
    ]
}

/// A literal reading of a printed separating polynomial, kept to report
/// the machine verdict next to the claim.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FlaggedReading {
    pub polynomial: String,
    pub algebra: String,
    pub claimed_identity: bool,
    pub note: String,
}

pub fn flagged_readings() -> Vec<FlaggedReading> {
    vec![
        FlaggedReading {
            polynomial: "x1:g x2:g^2".into(),
            algebra: "A8(g,g^2)@Z3".into(),
            claimed_identity: false,
            note: "x1^{g1} x2^{g2} read with g1 = g, g2 = g^2; the nonzero product e12 e23 has degrees (g2, g1)".into(),
        },
        FlaggedReading {
            polynomial: "ac(x1:1, x2:g)".into(),
            algebra: "A4@Z4".into(),
            claimed_identity: true,
            note: "the unit of degree 1 gives 1 o b = 2b; the commutator [x1:1, x2:g] is the identity instead".into(),
        },
        FlaggedReading {
            polynomial: "x1:h x2:g + x1:g x2:h".into(),
            algebra: "A5(0,0)@Z2xZ2".into(),
            claimed_identity: true,
            note: "four distinct variables when x1:h and x1:g are read as different variables".into(),
        },
    ]
}

#[cfg(test)]
mod tests;
