//! Subalgebras generated by idempotents and radical elements, mapped onto
//! triangular models.
//!
//! An instance names elements of a body `B` (`e1`, `ce2`, `j1`, …), a list
//! of generator words with their images in the model, the words spanning
//! the claimed kernel `I`, and the words claimed to be a basis of `B̄/I`.
//! The map is checked through its graph: the subalgebra of `B × model`
//! generated by the pairs `(generator, image)`.

use super::tideal::{first_difference, tuples_up_to};
use super::{envelope, CheckKind, CheckRecord, Counterexample, HarnessOptions, SuiteResult};
use crate::algebra::{
    jacobson_radical, matrix_over, subalgebra_from_basis, triangular_subalgebra, AlgebraError, DiagConstraint,
    GradedAlgebra,
};
use crate::catalog::{build_spec, super_scalars, CatalogError};
use crate::codim::identity_kernel;
use crate::envelope::Envelope;
use crate::group::{ExtendedDegree, GroupSpec};
use crate::linalg::{is_zero, zero_vector, Subspace, Vector};
use crate::poly::LabelMap;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Construction {
    pub id: String,
    pub kind: CheckKind,
    pub about: String,
    pub body: GradedAlgebra,
    /// Named elements of the body, as label sums such as `e11+e44`.
    pub symbols: Vec<(String, String)>,
    /// Generator words and model labels of their images.
    pub generators: Vec<(String, String)>,
    pub model: GradedAlgebra,
    pub kernel: Vec<String>,
    pub listed: Vec<String>,
    /// Word whose nonvanishing is the hypothesis.
    pub hypothesis: String,
    /// Catalog algebra whose identities should contain those of `E(model)`.
    pub catalog: Option<String>,
}

/// Basis vector for a label, or a sum of labelled basis vectors.
fn element(a: &GradedAlgebra, expr: &str) -> Vector {
    if let Some(i) = a.basis_labels.iter().position(|l| l == expr) {
        return a.basis_vector(i);
    }
    let mut v = a.zero();
    for part in expr.split('+') {
        let i = a
            .basis_labels
            .iter()
            .position(|l| l == part.trim())
            .unwrap_or_else(|| panic!("no basis element `{part}` in {}", a.name));
        v[i] += &Rational::one();
    }
    v
}

struct Eval<'a> {
    c: &'a Construction,
    symbols: Vec<(String, Vector)>,
}

impl<'a> Eval<'a> {
    fn new(c: &'a Construction) -> Self {
        let mut symbols: Vec<(String, Vector)> =
            c.symbols.iter().map(|(n, e)| (n.clone(), element(&c.body, e))).collect();
        symbols.sort_by_key(|(n, _)| std::cmp::Reverse(n.len()));
        Eval { c, symbols }
    }

    fn symbol(&self, name: &str) -> &Vector {
        &self.symbols.iter().find(|(n, _)| n == name).expect("declared symbol").1
    }

    /// Product of the symbols spelled by `word`, matched longest first.
    fn word(&self, word: &str) -> Vector {
        let mut rest = word;
        let mut acc: Option<Vector> = None;
        while !rest.is_empty() {
            let (name, v) = self
                .symbols
                .iter()
                .find(|(n, _)| rest.starts_with(n.as_str()))
                .unwrap_or_else(|| panic!("cannot spell `{word}` with the declared symbols"));
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => self.c.body.mul(&a, v),
            });
            rest = &rest[name.len()..];
        }
        acc.expect("nonempty word")
    }
}

fn pair_mul(b: &GradedAlgebra, m: &GradedAlgebra, x: &[Rational], y: &[Rational]) -> Vector {
    let (xb, xm) = x.split_at(b.dim());
    let (yb, ym) = y.split_at(b.dim());
    let mut out = b.mul(xb, yb);
    out.extend(m.mul(xm, ym));
    out
}

/// Closure of `gens` under right multiplication by `gens`.
fn generated(gens: &[Vector], mul: impl Fn(&[Rational], &[Rational]) -> Vector, dim: usize) -> Subspace {
    let mut s = Subspace::zero(dim);
    let mut frontier = Vec::new();
    for g in gens {
        if s.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = mul(&v, g);
            if s.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    s
}

/// Ideal of the subalgebra spanned by `sub` generated by `seeds`.
fn ideal_in(a: &GradedAlgebra, sub: &Subspace, seeds: &[Vector]) -> Subspace {
    let mut ideal = Subspace::zero(a.dim());
    let mut frontier = Vec::new();
    for s in seeds {
        if ideal.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for b in sub.basis() {
            for w in [a.mul(&v, b), a.mul(b, &v)] {
                if ideal.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
    }
    ideal
}

/// Span of the coordinate vectors in `range`.
fn coords(range: std::ops::Range<usize>, total: usize) -> Subspace {
    Subspace::span(
        total,
        range.map(|i| {
            let mut v = zero_vector(total);
            v[i] = Rational::one();
            v
        }),
    )
}

fn project(s: &Subspace, range: std::ops::Range<usize>) -> Subspace {
    let len = range.len();
    Subspace::span(len, s.basis().iter().map(|v| v[range.clone()].to_vec()))
}

/// Outcome of the two construction checks.
struct Findings {
    basis: Result<String, Counterexample>,
    homomorphism: Result<String, Counterexample>,
}

fn examine(c: &Construction) -> Findings {
    let ev = Eval::new(c);
    let (b, m) = (&c.body, &c.model);
    let (db, dm) = (b.dim(), m.dim());

    let mut degree_error = None;
    let mut pairs = Vec::new();
    for (w, img) in &c.generators {
        let x = ev.word(w);
        let y = element(m, img);
        let (dx, dy) = (b.homogeneous_degree(&x), m.homogeneous_degree(&y));
        if degree_error.is_none() && (dx.is_none() || dx != dy) {
            degree_error = Some(Counterexample::detail(format!(
                "generator {w} has degree {} but its image {img} has degree {}",
                show(&dx),
                show(&dy)
            )));
        }
        let mut p = x;
        p.extend(y);
        pairs.push(p);
    }
    let graph = generated(&pairs, |x, y| pair_mul(b, m, x, y), db + dm);
    let bbar = project(&graph, 0..db);
    let image = project(&graph, db..db + dm);
    let kernel_of_phi = project(&graph.intersection(&coords(0..db, db + dm)), 0..db);
    let stray = graph.intersection(&coords(db..db + dm, db + dm));

    let kernel_values: Vec<Vector> = c.kernel.iter().map(|w| ev.word(w)).collect();
    let ideal = ideal_in(b, &bbar, &kernel_values);

    let homomorphism = if let Some(cx) = degree_error {
        Err(cx)
    } else if let Some(v) = stray.basis().first() {
        Err(Counterexample::detail(format!("not well defined: 0 maps to {}", m.label_of(&v[db..]))))
    } else if image.dim() != dm {
        Err(Counterexample::detail(format!("image has dimension {} in a model of dimension {dm}", image.dim())))
    } else if kernel_of_phi != ideal {
        let extra = kernel_of_phi.basis().iter().find(|v| !ideal.contains(v));
        Err(Counterexample::detail(match extra {
            Some(v) => format!("kernel element {} lies outside the stated ideal", b.label_of(v)),
            None => format!("stated ideal (dim {}) exceeds the kernel (dim {})", ideal.dim(), kernel_of_phi.dim()),
        }))
    } else {
        Ok(format!("dim B̄ = {}, onto a model of dimension {dm}, kernel dimension {}", bbar.dim(), ideal.dim()))
    };

    let mut span = ideal.clone();
    let mut basis = Ok(String::new());
    for w in &c.listed {
        let v = ev.word(w);
        if !bbar.contains(&v) {
            basis = Err(Counterexample::detail(format!("{w} is not in the generated subalgebra")));
            break;
        }
        if !span.insert(v) {
            basis = Err(Counterexample::detail(format!("{w} depends on the earlier elements modulo I")));
            break;
        }
    }
    if basis.is_ok() {
        let rank = span.dim() - ideal.dim();
        basis = if span.dim() == bbar.dim() {
            Ok(format!("rank {rank} = dim B̄ − dim I = {} − {}", bbar.dim(), ideal.dim()))
        } else {
            Err(Counterexample::detail(format!(
                "{} elements span {rank} of dim B̄/I = {}",
                c.listed.len(),
                bbar.dim() - ideal.dim()
            )))
        };
    }
    Findings { basis, homomorphism }
}

fn show(d: &Option<ExtendedDegree>) -> String {
    d.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "inhomogeneous".into())
}

fn hypotheses(c: &Construction) -> Option<Counterexample> {
    let ev = Eval::new(c);
    let b = &c.body;
    let unit_degree = b.group.ext_identity();
    let idem: Vec<(&String, &Vector)> =
        ev.symbols.iter().filter(|(n, _)| n.starts_with('e')).map(|(n, v)| (n, v)).collect();
    for (n, v) in &idem {
        if b.mul(v, v) != **v || b.homogeneous_degree(v) != Some(unit_degree.clone()) {
            return Some(Counterexample::detail(format!("{n} is not an idempotent of degree (1,0)")));
        }
        for (n2, v2) in &idem {
            if n != n2 && !is_zero(&b.mul(v, v2)) {
                return Some(Counterexample::detail(format!("{n} {n2} ≠ 0")));
            }
        }
    }
    let radical = match jacobson_radical(b) {
        Ok(r) => r,
        Err(e) => return Some(Counterexample::detail(format!("radical: {e}"))),
    };
    for (n, v) in &ev.symbols {
        if n.starts_with('j') && !radical.contains(v) {
            return Some(Counterexample::detail(format!("{n} is not in the radical")));
        }
        if let Some(e) = n.strip_prefix('c') {
            let base = ev.symbol(e);
            if b.mul(v, v) != *base || b.mul(base, v) != *v || b.mul(v, base) != *v {
                return Some(Counterexample::detail(format!("{n} is not c·{e} with c² = 1")));
            }
        }
    }
    if is_zero(&ev.word(&c.hypothesis)) {
        return Some(Counterexample::detail(format!("{} = 0", c.hypothesis)));
    }
    None
}

const CONCLUSION_N: usize = 3;

fn conclusion(c: &Construction, spec: &str, opts: &HarnessOptions) -> Result<CheckRecord, CatalogError> {
    let target = envelope(spec)?;
    let model = Envelope::new(c.model.clone());
    let labels = LabelMap::standard(model.group());
    let n = opts.effective_n(&[&target, &model], opts.max_degree.unwrap_or(CONCLUSION_N).min(CONCLUSION_N));
    let tuples = tuples_up_to(&model, n);
    // containment: a kernel of E(model) outside the catalog kernel is a failure
    let cx = first_difference(
        &tuples,
        |t| identity_kernel(&model, t),
        |t| {
            let k = identity_kernel(&model, t);
            k.intersection(&identity_kernel(&target, t)).expect("same tuple")
        },
        &labels,
        ("identities of E(model)", spec),
    );
    Ok(CheckRecord::new(
        format!("{}/conclusion", c.id),
        CheckKind::Claim,
        format!("identities of E({}) are identities of {spec}", c.model.name),
        spec,
    )
    .up_to(n)
    .outcome(cx))
}

pub fn check_construction(c: &Construction, opts: &HarnessOptions) -> Result<Vec<CheckRecord>, CatalogError> {
    let f = examine(c);
    let params = format!("{} in {}", c.about, c.body.name);
    if c.kind == CheckKind::Control {
        let cx = f.basis.err().or(f.homomorphism.err());
        return Ok(vec![CheckRecord::new(c.id.clone(), CheckKind::Control, c.about.clone(), params).outcome(cx)]);
    }
    let mut out = vec![CheckRecord::new(
        format!("{}/hypotheses", c.id),
        CheckKind::Claim,
        "idempotents, radical elements and nonzero product",
        &params,
    )
    .note(c.hypothesis.clone())
    .outcome(hypotheses(c))];
    let (note_b, cx_b) = split_result(f.basis);
    let mut r = CheckRecord::new(
        format!("{}/basis", c.id),
        CheckKind::Claim,
        format!("the {} listed elements are a basis of B̄ modulo I", c.listed.len()),
        &params,
    )
    .outcome(cx_b);
    r.note = note_b;
    out.push(r);
    let (note_h, cx_h) = split_result(f.homomorphism);
    let mut r = CheckRecord::new(
        format!("{}/homomorphism", c.id),
        CheckKind::Claim,
        "graded homomorphism onto the model with kernel I",
        &params,
    )
    .outcome(cx_h);
    r.note = note_h;
    out.push(r);
    if let Some(spec) = &c.catalog {
        out.push(conclusion(c, spec, opts)?);
    }
    Ok(out)
}

fn split_result(r: Result<String, Counterexample>) -> (Option<String>, Option<Counterexample>) {
    match r {
        Ok(s) => (Some(s), None),
        Err(cx) => (None, Some(cx)),
    }
}

fn pairs(items: &[(&str, &str)]) -> Vec<(String, String)> {
    items.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn words(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// `(e, h1, h1h2, …)` of length `len`, cycling through `hs`.
fn periodic(group: &GroupSpec, hs: &[ExtendedDegree], len: usize) -> Vec<ExtendedDegree> {
    let mut out = vec![group.ext_identity()];
    let mut acc = group.ext_identity();
    for i in 0..len - 1 {
        acc = group.ext_mul(&acc, &hs[i % hs.len()]);
        out.push(acc.clone());
    }
    out
}

fn upper_over(ambient: &GradedAlgebra, n: usize, s: usize) -> Result<GradedAlgebra, AlgebraError> {
    let elems: Vec<(String, Vector)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (0..s).map(move |k| (i * n + j) * s + k)))
        .map(|idx| (ambient.basis_labels[idx].clone(), ambient.basis_vector(idx)))
        .collect();
    subalgebra_from_basis(ambient, format!("UT{n}(F+cF)"), &elems)
}

const L41: &[&str] = &["e1", "e2", "e3", "e1j1e2", "e2j2e3", "e3j3e1", "e1j1e2j2e3", "e2j2e3j3e1", "e1j1e2j2e3j3e1"];
const G41: &[(&str, &str)] =
    &[("e1", "e11+e44"), ("e2", "e22"), ("e3", "e33"), ("e1j1e2", "e12"), ("e2j2e3", "e23"), ("e3j3e1", "e34")];

const L42: &[&str] = &[
    "e1",
    "e2",
    "e3",
    "j1e1",
    "e1j2e2",
    "e2j3e3",
    "e3j4",
    "j1e1j2e2",
    "e1j2e2j3e3",
    "e2j3e3j4",
    "j1e1j2e2j3e3",
    "e1j2e2j3e3j4",
    "j1e1j2e2j3e3j4",
];
const G42: &[(&str, &str)] = &[
    ("e1", "e22"),
    ("e2", "e33"),
    ("e3", "e44"),
    ("j1e1", "e12"),
    ("e1j2e2", "e23"),
    ("e2j3e3", "e34"),
    ("e3j4", "e45"),
];
const K42: &[&str] = &["e3j4e1", "e3j4e2", "e3j4e3", "e3j4j1e1", "e3j1e1", "e2j1e1", "e1j1e1"];

const L43: &[&str] = &["e1", "e2", "ce2", "e1j1e2", "e2j2e1", "e1j1ce2", "ce2j2e1", "e2j2e1j1e2", "ce2j2e1j1e2"];
const G43: &[(&str, &str)] =
    &[("e1", "e22"), ("e2", "e11+e33"), ("ce2", "c(e11+e33)"), ("e1j1e2", "e23"), ("e2j2e1", "e12")];
const K43: &[&str] = &["e1j1e2j2e1", "e1j1ce2j2e1"];

/// The built-in instances, claims first.
pub fn instances() -> Result<Vec<Construction>, CatalogError> {
    let z2 = GroupSpec::cyclic(2);
    let z3 = GroupSpec::cyclic(3);
    let g2 = z2.element(&[1]).expect("Z2 generator");
    let g3 = z3.element(&[1]).expect("Z3 generator");
    let g3sq = z3.element(&[2]).expect("Z3 element");
    let mut out = Vec::new();

    // three idempotents on a closed chain
    let h41 = [ExtendedDegree::even(g2.clone()), ExtendedDegree::odd(z2.identity()), ExtendedDegree::odd(g2.clone())];
    let t4 = periodic(&z2, &h41, 4);
    let model41 =
        triangular_subalgebra(&z2, 4, &t4, &[DiagConstraint::Identify(vec![1, 4])])?.with_name("UT4 (a11=a44)");
    let own41 = Construction {
        id: "4.1".into(),
        kind: CheckKind::Claim,
        about: "three idempotents, e1j1e2j2e3j3e1 ≠ 0".into(),
        body: model41.clone(),
        symbols: pairs(&[("e1", "e11+e44"), ("e2", "e22"), ("e3", "e33"), ("j1", "e12"), ("j2", "e23"), ("j3", "e34")]),
        generators: pairs(G41),
        model: model41.clone(),
        kernel: words(&["e3j3e1j1e2"]),
        listed: words(L41),
        hypothesis: "e1j1e2j2e3j3e1".into(),
        catalog: Some("A6(g,1,g)@Z2".into()),
    };
    let t7 = periodic(&z2, &h41, 7);
    let ut7 = triangular_subalgebra(&z2, 7, &t7, &[])?.with_name("UT7");
    let wrapped41 = Construction {
        id: "4.1-wrapped".into(),
        body: ut7,
        symbols: pairs(&[
            ("e1", "e11+e44+e77"),
            ("e2", "e22+e55"),
            ("e3", "e33+e66"),
            ("j1", "e12+e45"),
            ("j2", "e23+e56"),
            ("j3", "e34+e67"),
        ]),
        catalog: None,
        ..own41.clone()
    };
    let m3_triv = GroupSpec::trivial();
    let m3 = crate::algebra::matrix_elementary(&m3_triv, 3, &vec![m3_triv.ext_identity(); 3])?.with_name("M3");
    let model41_triv =
        triangular_subalgebra(&m3_triv, 4, &vec![m3_triv.ext_identity(); 4], &[DiagConstraint::Identify(vec![1, 4])])?;
    let controls41 = vec![
        Construction {
            id: "4.1-control-no-quotient".into(),
            kind: CheckKind::Control,
            about: "UT7 instance with the kernel ideal omitted".into(),
            kernel: Vec::new(),
            ..wrapped41.clone()
        },
        Construction {
            id: "4.1-control-closed-cycle".into(),
            kind: CheckKind::Control,
            about: "M3 with j3 = e31, so e3j3e1j1e2 = e32 is not killed and the cycle returns to e1".into(),
            body: m3,
            symbols: pairs(&[("e1", "e11"), ("e2", "e22"), ("e3", "e33"), ("j1", "e12"), ("j2", "e23"), ("j3", "e31")]),
            model: model41_triv,
            kernel: Vec::new(),
            catalog: None,
            ..own41.clone()
        },
        Construction {
            id: "4.1-control-wrong-image".into(),
            kind: CheckKind::Control,
            about: "e1j1e2 sent to e13 instead of e12".into(),
            generators: pairs(&[
                ("e1", "e11+e44"),
                ("e2", "e22"),
                ("e3", "e33"),
                ("e1j1e2", "e13"),
                ("e2j2e3", "e23"),
                ("e3j3e1", "e34"),
            ]),
            catalog: None,
            ..own41.clone()
        },
    ];
    out.push(own41);
    out.push(wrapped41);

    // radical elements on both ends of a three-idempotent chain
    let h42 = [
        ExtendedDegree::even(g3.clone()),
        ExtendedDegree::odd(g3.clone()),
        ExtendedDegree::even(z3.identity()),
        ExtendedDegree::odd(g3sq.clone()),
    ];
    let t5 = periodic(&z3, &h42, 5);
    let model42 = triangular_subalgebra(&z3, 5, &t5, &[DiagConstraint::Zero(1), DiagConstraint::Zero(5)])?
        .with_name("UT5 (a11=a55=0)");
    let own42 = Construction {
        id: "4.2".into(),
        kind: CheckKind::Claim,
        about: "three idempotents, j1e1j2e2j3e3j4 ≠ 0".into(),
        body: triangular_subalgebra(&z3, 5, &t5, &[])?.with_name("UT5"),
        symbols: pairs(&[
            ("e1", "e22"),
            ("e2", "e33"),
            ("e3", "e44"),
            ("j1", "e12"),
            ("j2", "e23"),
            ("j3", "e34"),
            ("j4", "e45"),
        ]),
        generators: pairs(G42),
        model: model42,
        kernel: words(K42),
        listed: words(L42),
        hypothesis: "j1e1j2e2j3e3j4".into(),
        catalog: Some("A7(g,g,1,g^2)@Z3".into()),
    };
    let t9 = periodic(&z3, &h42, 9);
    let wrapped42 = Construction {
        id: "4.2-wrapped".into(),
        body: triangular_subalgebra(&z3, 9, &t9, &[])?.with_name("UT9"),
        symbols: pairs(&[
            ("e1", "e22+e66"),
            ("e2", "e33+e77"),
            ("e3", "e44+e88"),
            ("j1", "e12+e56"),
            ("j2", "e23+e67"),
            ("j3", "e34+e78"),
            ("j4", "e45+e89"),
        ]),
        catalog: None,
        ..own42.clone()
    };
    let controls42 = vec![
        Construction {
            id: "4.2-control-no-quotient".into(),
            kind: CheckKind::Control,
            about: "UT9 instance with the kernel ideal omitted".into(),
            kernel: Vec::new(),
            ..wrapped42.clone()
        },
        Construction {
            id: "4.2-control-wrong-image".into(),
            kind: CheckKind::Control,
            about: "e3j4 sent to e35 instead of e45".into(),
            generators: pairs(&[
                ("e1", "e22"),
                ("e2", "e33"),
                ("e3", "e44"),
                ("j1e1", "e12"),
                ("e1j2e2", "e23"),
                ("e2j3e3", "e34"),
                ("e3j4", "e35"),
            ]),
            catalog: None,
            ..own42.clone()
        },
    ];
    out.push(own42);
    out.push(wrapped42);

    // a block F + cF between two copies of an idempotent
    let a8 = build_spec("A8(g,g^2)@Z3")?.body;
    let own43 = Construction {
        id: "4.3".into(),
        kind: CheckKind::Claim,
        about: "e2 in F + cF, e2j2e1j1e2 ≠ 0".into(),
        body: a8.clone(),
        symbols: pairs(&[("e1", "e22"), ("e2", "e11+e33"), ("ce2", "c(e11+e33)"), ("j1", "e23"), ("j2", "e12")]),
        generators: pairs(G43),
        model: a8.clone(),
        kernel: words(K43),
        listed: words(L43),
        hypothesis: "e2j2e1j1e2".into(),
        catalog: Some("A8(g,g^2)@Z3".into()),
    };
    let k = ExtendedDegree::even(g3sq.clone());
    let h = ExtendedDegree::even(g3.clone());
    let t5c = periodic(&z3, &[k, h], 5);
    let ut5c = upper_over(&matrix_over(&z3, &super_scalars(&z3, &z3.identity())?, &t5c)?, 5, 2)?;
    let wrapped43 = Construction {
        id: "4.3-wrapped".into(),
        body: ut5c,
        symbols: pairs(&[
            ("e1", "e22+e44"),
            ("e2", "e11+e33+e55"),
            ("ce2", "ce11+ce33+ce55"),
            ("j1", "e23+e45"),
            ("j2", "e12+e34"),
        ]),
        catalog: None,
        ..own43.clone()
    };
    let control43 = Construction {
        id: "4.3-control-no-quotient".into(),
        kind: CheckKind::Control,
        about: "UT5(F+cF) instance with the kernel ideal omitted".into(),
        kernel: Vec::new(),
        ..wrapped43.clone()
    };
    out.push(own43);
    out.push(wrapped43);

    let a9 = build_spec("A9(g,1,g)@Z2")?.body;
    out.push(Construction {
        id: "4.4".into(),
        kind: CheckKind::Claim,
        about: "e2 in F + cF, j1e1j2e2j3 ≠ 0".into(),
        body: a9.clone(),
        symbols: pairs(&[
            ("e1", "e22"),
            ("e2", "e33+e44"),
            ("ce2", "e34+e43"),
            ("j1", "e12"),
            ("j2", "e23"),
            ("j3", "e35"),
        ]),
        generators: pairs(&[
            ("e1", "e22"),
            ("e2", "e33+e44"),
            ("ce2", "e34+e43"),
            ("j1e1", "e12"),
            ("e1j2e2", "e23"),
            ("e2j3", "e35"),
        ]),
        model: a9,
        kernel: Vec::new(),
        listed: words(&[
            "e1",
            "e2",
            "ce2",
            "j1e1",
            "e1j2e2",
            "e2j3",
            "j1e1j2e2",
            "j1e1j2ce2",
            "j1e1j2e2j3",
            "e1j2ce2",
            "e1j2e2j3",
            "ce2j3",
        ]),
        hypothesis: "j1e1j2e2j3".into(),
        catalog: Some("A9(g,1,g)@Z2".into()),
    });

    let a10 = build_spec("A10(g,1,g)@Z2")?.body;
    out.push(Construction {
        id: "4.5".into(),
        kind: CheckKind::Claim,
        about: "e2 in F + cF, j1e2j2e1j3 ≠ 0".into(),
        body: a10.clone(),
        symbols: pairs(&[
            ("e1", "e44"),
            ("e2", "e22+e33"),
            ("ce2", "e23+e32"),
            ("j1", "e12"),
            ("j2", "e24"),
            ("j3", "e45"),
        ]),
        generators: pairs(&[
            ("e1", "e44"),
            ("e2", "e22+e33"),
            ("ce2", "e23+e32"),
            ("j1e2", "e12"),
            ("e2j2e1", "e24"),
            ("e1j3", "e45"),
        ]),
        model: a10,
        kernel: Vec::new(),
        listed: words(&[
            "e1",
            "e2",
            "ce2",
            "j1e2",
            "j1ce2",
            "e2j2e1",
            "ce2j2e1",
            "e1j3",
            "j1e2j2e1",
            "j1e2j2e1j3",
            "e2j2e1j3",
            "ce2j2e1j3",
        ]),
        hypothesis: "j1e2j2e1j3".into(),
        catalog: Some("A10(g,1,g)@Z2".into()),
    });

    let a11 = build_spec("A11(g,1)@Z2")?.body;
    out.push(Construction {
        id: "4.6".into(),
        kind: CheckKind::Claim,
        about: "e2 in F + cF, e1j1e2j2e1 ≠ 0".into(),
        body: a11.clone(),
        symbols: pairs(&[("e1", "e11+e44"), ("e2", "e22+e33"), ("ce2", "e23+e32"), ("j1", "e12"), ("j2", "e24")]),
        generators: pairs(&[
            ("e1", "e11+e44"),
            ("e2", "e22+e33"),
            ("ce2", "e23+e32"),
            ("e1j1e2", "e12"),
            ("e2j2e1", "e24"),
        ]),
        model: a11,
        kernel: words(&["e2j2e1j1e2", "e1j1ce2j2e1"]),
        listed: words(&["e1", "e2", "ce2", "e1j1e2", "e1j1ce2", "e1j1e2j2e1", "e2j2e1", "ce2j2e1"]),
        hypothesis: "e1j1e2j2e1".into(),
        catalog: Some("A11(g,1)@Z2".into()),
    });

    out.extend(controls41);
    out.extend(controls42);
    out.push(control43);
    Ok(out)
}

pub fn constructions(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    let mut checks = Vec::new();
    for c in instances()? {
        checks.extend(check_construction(&c, opts)?);
    }
    Ok(SuiteResult::new("section4", checks))
}
