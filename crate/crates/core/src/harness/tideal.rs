//! Generating sets of T-ideals and products of T-ideals, compared with
//! identity kernels tuple by tuple.

use super::{envelope, space_difference, CheckKind, CheckRecord, Counterexample, HarnessOptions, SuiteResult};
use crate::catalog::CatalogError;
use crate::codim::{classify, identity_kernel, Membership};
use crate::envelope::Envelope;
use crate::group::GroupElement;
use crate::poly::{all_tuples, parse, product_span, ConsequenceGenerators, GradedPoly, LabelMap, PolySubspace};

/// A generating set claimed for the identities of one catalog algebra.
/// Monomials `x1:h` for every `h` outside the support are added.
#[derive(Clone, Debug)]
pub struct GeneratorCase {
    pub id: &'static str,
    pub algebra: &'static str,
    pub generators: &'static [&'static str],
}

pub const B_CASES: &[GeneratorCase] = &[
    GeneratorCase { id: "3.2(1)", algebra: "B1(1,g)@Z2", generators: &["[x1:1, x2:1]", "x1:g x2:g", "x1:1 x2:g"] },
    GeneratorCase {
        id: "3.2(2)",
        algebra: "B2(1,1,g)@Z2",
        generators: &["[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:g x2:1"],
    },
    GeneratorCase { id: "3.2(3)", algebra: "B1(1,1)@Z2", generators: &["x1:1 [x2:1, x3:1]"] },
    GeneratorCase { id: "3.2(4)", algebra: "B2(1,1,1)@Z2", generators: &["[x1:1, x2:1, x3:1] x4:1"] },
];

pub const C_CASES: &[GeneratorCase] = &[
    GeneratorCase {
        id: "3.3(1)",
        algebra: "C1(1,g,g)@Z2",
        generators: &["[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:1 x2:g"],
    },
    GeneratorCase { id: "3.3(2)", algebra: "C2(1,g)@Z2", generators: &["[x1:1, x2:1]", "x1:g x2:g", "x1:g x2:1"] },
    GeneratorCase { id: "3.3(3)", algebra: "C1(1,1,1)@Z2", generators: &["x1:1 [x2:1, x3:1, x4:1]"] },
    GeneratorCase { id: "3.3(4)", algebra: "C2(1,1)@Z2", generators: &["[x1:1, x2:1] x3:1"] },
];

const DEFAULT_N: usize = 4;
const PRODUCT_DEFAULT_N: usize = 3;

pub(crate) struct Prepared {
    pub env: Envelope,
    pub labels: LabelMap,
    pub texts: Vec<String>,
    pub polys: Vec<GradedPoly>,
}

pub(crate) fn prepare(case: &GeneratorCase) -> Result<Prepared, CatalogError> {
    prepare_on(case, case.algebra)
}

/// The case's generators against another instance of its algebra.
pub(crate) fn prepare_on(case: &GeneratorCase, algebra: &str) -> Result<Prepared, CatalogError> {
    let env = envelope(algebra)?;
    let labels = LabelMap::standard(env.group());
    let support = env.support();
    let mut texts: Vec<String> = case.generators.iter().map(|s| s.to_string()).collect();
    for h in env.group().elements() {
        if !support.contains(&h) {
            texts.push(format!("x1:{}", labels.name(&h)));
        }
    }
    let polys = texts.iter().map(|t| parse(t, &labels).expect("generator text parses")).collect();
    Ok(Prepared { env, labels, texts, polys })
}

/// First tuple, by degree then index, on which the two sides differ.
pub(crate) fn first_difference<L, R>(
    tuples: &[Vec<Vec<GroupElement>>],
    left: L,
    right: R,
    labels: &LabelMap,
    names: (&str, &str),
) -> Option<Counterexample>
where
    L: Fn(&[GroupElement]) -> PolySubspace + Sync + Send,
    R: Fn(&[GroupElement]) -> PolySubspace + Sync + Send,
{
    for level in tuples {
        let found =
            crate::par::map(level.clone(), |t| space_difference(&left(&t), &right(&t), labels, names.0, names.1));
        if let Some(cx) = found.into_iter().flatten().next() {
            return Some(cx);
        }
    }
    None
}

pub(crate) fn tuples_up_to(env: &Envelope, n: usize) -> Vec<Vec<Vec<GroupElement>>> {
    (1..=n).map(|k| all_tuples(env.group(), k)).collect()
}

fn generator_case(case: &GeneratorCase, opts: &HarnessOptions) -> Result<Vec<CheckRecord>, CatalogError> {
    let p = prepare(case)?;
    let n = opts.effective_n(&[&p.env], opts.max_degree.unwrap_or(DEFAULT_N));
    let params = format!("{}; generators {}", case.algebra, p.texts.join(", "));
    let mut out = Vec::new();

    let mut bad = None;
    for (text, f) in p.texts.iter().zip(&p.polys) {
        let v = classify(&p.env, f);
        if v.membership != Membership::Identity {
            let (m, a, _) = v.witness.expect("non-identities carry a witness");
            bad = Some(Counterexample {
                tuple: Some(p.labels.tuple(&m.tuple)),
                polynomial: Some(text.clone()),
                assignment: Some(a.iter().map(|&i| p.env.body().basis_labels[i].clone()).collect()),
                detail: Some("nonzero value".into()),
            });
            break;
        }
    }
    out.push(
        CheckRecord::new(
            format!("{}/generators", case.id),
            CheckKind::Claim,
            "every generator is an identity",
            &params,
        )
        .outcome(bad),
    );

    let tuples = tuples_up_to(&p.env, n);
    let kernel = |t: &[GroupElement]| identity_kernel(&p.env, t);
    let full = ConsequenceGenerators::new(p.env.group(), &p.polys);
    let cx = first_difference(&tuples, |t| full.span(t), kernel, &p.labels, ("consequences", "identity kernel"));
    out.push(
        CheckRecord::new(
            format!("{}/span", case.id),
            CheckKind::Claim,
            "consequence span equals identity kernel for every tuple",
            &params,
        )
        .up_to(n)
        .outcome(cx),
    );

    for (k, text) in p.texts.iter().enumerate() {
        let low = p.polys[k].terms().map(|(w, _)| w.len()).min().unwrap_or(0);
        if low > n {
            // its consequences start above the bound, so dropping it is invisible
            out.push(
                CheckRecord::new(
                    format!("{}/drop-{}", case.id, k + 1),
                    CheckKind::Note,
                    format!("without `{text}` the span is too small"),
                    case.algebra,
                )
                .up_to(n)
                .note(format!("skipped: generator has degree {low} > N = {n}"))
                .outcome(None),
            );
            continue;
        }
        let rest: Vec<GradedPoly> =
            p.polys.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, f)| f.clone()).collect();
        let gens = ConsequenceGenerators::new(p.env.group(), &rest);
        let cx = first_difference(&tuples, |t| gens.span(t), kernel, &p.labels, ("consequences", "identity kernel"));
        out.push(
            CheckRecord::new(
                format!("{}/drop-{}", case.id, k + 1),
                CheckKind::Control,
                format!("without `{text}` the span is too small"),
                case.algebra,
            )
            .up_to(n)
            .outcome(cx),
        );
    }
    Ok(out)
}

fn generator_suite(name: &str, cases: &[GeneratorCase], opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    let mut checks = Vec::new();
    for c in cases {
        checks.extend(generator_case(c, opts)?);
    }
    Ok(SuiteResult::new(name, checks))
}

pub fn b_generators(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    generator_suite("lemma3.2", B_CASES, opts)
}

pub fn c_generators(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    generator_suite("lemma3.3", C_CASES, opts)
}

/// `(product, left factor, right factor, control)`; all on `Z4` with
/// `g1 = g2 = g3 = g` so that the product algebra has full support.
pub(crate) type ProductCase = (&'static str, &'static str, &'static str, &'static str);

/// The equality is claimed for every parameter choice. Among these only
/// the (g,g,g)@Z2 instances satisfy it; the others fail in degree 2 or 3.
pub const PRODUCTS: &[ProductCase] = &[
    ("A9(g,g,g)@Z2", "3.2(1)", "3.2(2)", "A6(g,1,g)@Z2"),
    ("A10(g,g,g)@Z2", "3.3(1)", "3.3(2)", "A6(g,1,g)@Z2"),
    ("A9(g,1,g)@Z2", "3.2(1)", "3.2(2)", "A6(g,1,g)@Z2"),
    ("A10(g,1,g)@Z2", "3.3(1)", "3.3(2)", "A6(g,1,g)@Z2"),
    ("A9(g,g,g)@Z4", "3.2(1)", "3.2(2)", "A6(g,g,g)@Z4"),
    ("A10(g,g,g)@Z4", "3.3(1)", "3.3(2)", "A6(g,g,g)@Z4"),
];

fn case_on(id: &str, group: &str) -> Result<Prepared, CatalogError> {
    let case = B_CASES.iter().chain(C_CASES).find(|c| c.id == id).expect("known case");
    let (family, _) = case.algebra.split_once('@').expect("case specs name a group");
    prepare_on(case, &format!("{family}@{group}"))
}

pub fn products(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    product_suite(PRODUCTS, opts)
}

pub(crate) fn product_suite(cases: &[ProductCase], opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    let mut checks = Vec::new();
    for &(spec, left_id, right_id, control) in cases {
        let env = envelope(spec)?;
        let labels = LabelMap::standard(env.group());
        let group = spec.rsplit_once('@').expect("specs name a group").1;
        let left = case_on(left_id, group)?;
        let right = case_on(right_id, group)?;
        let ctrl = envelope(control)?;
        let n = opts.effective_n(&[&env, &left.env, &right.env, &ctrl], opts.max_degree.unwrap_or(PRODUCT_DEFAULT_N));
        let tuples = tuples_up_to(&env, n);
        let lg = ConsequenceGenerators::new(env.group(), &left.polys);
        let rg = ConsequenceGenerators::new(env.group(), &right.polys);

        for (side, p, g) in [("left", &left, &lg), ("right", &right, &rg)] {
            let cx = first_difference(
                &tuples,
                |t| g.span(t),
                |t| identity_kernel(&p.env, t),
                &labels,
                ("consequences", "identity kernel"),
            );
            checks.push(
                CheckRecord::new(
                    format!("{spec}/{side}-factor"),
                    CheckKind::Claim,
                    "factor generators span the factor's identity kernel",
                    p.texts.join(", ") + " in " + &p.env.body().name,
                )
                .up_to(n)
                .outcome(cx),
            );
        }

        // variables of a degree outside the support vanish on their own
        // and are not products, so they join the product as extra generators
        let support = env.support();
        let outside: Vec<GradedPoly> = env
            .group()
            .elements()
            .into_iter()
            .filter(|h| !support.contains(h))
            .map(|h| GradedPoly::var(1, h))
            .collect();
        let og = ConsequenceGenerators::new(env.group(), &outside);
        let product = |t: &[GroupElement]| {
            let p = product_span(t, |s| lg.span(s), |s| rg.span(s));
            if outside.is_empty() {
                p
            } else {
                p.sum(&og.span(t)).expect("same tuple")
            }
        };
        let cx = first_difference(
            &tuples,
            |t| identity_kernel(&env, t),
            product,
            &labels,
            ("identity kernel", "product of T-ideals"),
        );
        checks.push(
            CheckRecord::new(
                format!("{spec}/product"),
                CheckKind::Claim,
                format!("identities of {spec} are the product of the factor T-ideals"),
                format!(
                    "{spec} = Id({}) Id({}) + ({} outside-support variables)",
                    left.env.body().name,
                    right.env.body().name,
                    outside.len()
                ),
            )
            .up_to(n)
            .outcome(cx),
        );

        let cx = first_difference(
            &tuples,
            |t| identity_kernel(&ctrl, t),
            product,
            &labels,
            ("identity kernel", "product of T-ideals"),
        );
        checks.push(
            CheckRecord::new(
                format!("{spec}/control"),
                CheckKind::Control,
                format!("the same product differs from the identities of {control}"),
                control,
            )
            .up_to(n)
            .outcome(cx),
        );
    }
    Ok(SuiteResult::new("prop3.5", checks))
}

const VARIANTS: &[(&str, &[&str])] = &[
    ("A9(g,g,g)@Z4", &["A9_1(g,g,g)@Z4", "A9_2(g,g,g)@Z4", "A9_3(g,g,g)@Z4"]),
    ("A10(g,g,g)@Z4", &["A10_1(g,g,g)@Z4", "A10_2(g,g,g)@Z4", "A10_3(g,g,g)@Z4"]),
    ("A9(g,1,g)@Z2", &["A9_1(g,1,g)@Z2", "A9_2(g,1,g)@Z2", "A9_3(g,1,g)@Z2"]),
    ("A10(g,1,g)@Z2", &["A10_1(g,1,g)@Z2", "A10_2(g,1,g)@Z2", "A10_3(g,1,g)@Z2"]),
];

pub fn variants(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    let mut checks = Vec::new();
    for &(base, variants) in VARIANTS {
        let env = envelope(base)?;
        let labels = LabelMap::standard(env.group());
        let others = variants.iter().map(|v| envelope(v)).collect::<Result<Vec<_>, _>>()?;
        let mut all: Vec<&Envelope> = others.iter().collect();
        all.push(&env);
        let n = opts.effective_n(&all, opts.max_degree.unwrap_or(PRODUCT_DEFAULT_N));
        let tuples = tuples_up_to(&env, n);
        for (v, e) in variants.iter().zip(&others) {
            let cx =
                first_difference(&tuples, |t| identity_kernel(&env, t), |t| identity_kernel(e, t), &labels, (base, v));
            checks.push(
                CheckRecord::new(
                    format!("{v}=={base}"),
                    CheckKind::Claim,
                    "equal identity kernels",
                    format!("{v}, {base}"),
                )
                .up_to(n)
                .outcome(cx),
            );
        }
    }
    // the two families are not interchangeable
    // over Z2 the first separating tuple has degree 5
    for (a, b, want) in [("A9(g,g,g)@Z4", "A10(g,g,g)@Z4", 3), ("A9(g,1,g)@Z2", "A10(g,1,g)@Z2", 5)] {
        let (ea, eb) = (envelope(a)?, envelope(b)?);
        let labels = LabelMap::standard(ea.group());
        let n = opts.effective_n(&[&ea, &eb], opts.max_degree.map_or(want, |m| m.max(want)));
        let tuples = tuples_up_to(&ea, n);
        let cx = first_difference(&tuples, |t| identity_kernel(&ea, t), |t| identity_kernel(&eb, t), &labels, (a, b));
        checks.push(
            CheckRecord::new(
                format!("control {a}!={b}"),
                CheckKind::Control,
                "different identity kernels",
                format!("{a}, {b}"),
            )
            .up_to(n)
            .outcome(cx),
        );
    }
    Ok(SuiteResult::new("remark3.6", checks))
}
