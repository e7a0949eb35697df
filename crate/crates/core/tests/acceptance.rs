//! Acceptance run: one line per criterion with its tolerance and runtime
//! limit. Criterion 5 fails because the product equality is false on most
//! parameter choices; the test pins that outcome instead of hiding it.

use std::time::{Duration, Instant};

use gpi_core::catalog::{build_spec, flagged_readings, witness_table, FAMILIES};
use gpi_core::codim::{canonical_tuples, codim_report, direct_kernels, tuple_kernels};
use gpi_core::envelope::oracle::Oracle;
use gpi_core::envelope::Envelope;
use gpi_core::exponent::{admissible_max, exponent_report, SearchMode, SearchOptions, WitnessSearch};
use gpi_core::harness::{self, CheckKind, HarnessOptions, SuiteResult};
use gpi_core::poly::{multilinearize, parse, LabelMap};

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

struct Line {
    id: usize,
    passed: bool,
}

fn run(id: usize, title: &str, tolerance: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> Line {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let passed = o.passed && took <= limit;
    let late = if took > limit { format!(" (over the {}s limit)", limit.as_secs()) } else { String::new() };
    println!(
        "criterion {id} {} {title} [tolerance: {tolerance}] {:.1}s{late}: {}",
        if passed { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        o.detail
    );
    Line { id, passed }
}

fn exp_g(spec: &str) -> usize {
    admissible_max(&build_spec(spec).unwrap().body).unwrap().dim
}

fn exponent_values() -> Outcome {
    let mut want: Vec<(String, usize)> = vec![
        ("A1(g,0)@Z2".into(), 4),
        ("A1(g,1)@Z2".into(), 4),
        ("A2(3)@Z3".into(), 3),
        ("A6(g,1,g)@Z2".into(), 3),
        ("A7(g,1,g,1)@Z2".into(), 3),
        ("A7(1,g,1,g)@Z2".into(), 3),
        ("A7(g,g,g,g)@Z2".into(), 3),
    ];
    for p in [2, 3, 5] {
        want.push((format!("A2({p})@Z{p}"), p));
    }
    let bad: Vec<String> = want
        .iter()
        .filter_map(|(s, e)| {
            let got = exp_g(s);
            (got != *e).then(|| format!("{s}: {got} != {e}"))
        })
        .collect();
    ok(bad.is_empty(), if bad.is_empty() { format!("{} bodies match", want.len()) } else { bad.join("; ") })
}

fn delta_certificates() -> Outcome {
    let mut notes = Vec::new();
    let mut all = true;
    for p in [2, 3, 5] {
        let body = build_spec(&format!("A2({p})@Z{p}")).unwrap().body;
        let r = exponent_report(&body, Some(&SearchOptions::new(SearchMode::Template, 1))).unwrap();
        let good = r.delta_exact == Some(p) && r.delta_witness.as_ref().is_some_and(|w| w.poly.n() == 1);
        all &= good;
        notes.push(format!("FC_{p} delta {:?}", r.delta_exact));
    }

    // the product of three commutators on the trivially graded A6, every assignment
    let body = build_spec("A6(1,1,1)@Z1").unwrap().body;
    let search = WitnessSearch::new(&body).unwrap();
    let env = search.envelope();
    let owner = &search.adapted().owner;
    let labels = LabelMap::standard(&body.group);
    let f = parse("[x1:1, x2:1][x3:1, x4:1][x5:1, x6:1]", &labels).unwrap();
    let f = multilinearize(&f).pop().unwrap();
    let tuple = vec![body.group.identity(); 6];
    let (mut checked, mut central, mut touching) = (0u64, 0u64, None);
    for a in env.assignments(&tuple) {
        let v = env.eval_poly(&f, &a).unwrap();
        checked += 1;
        if env.is_central(&v) {
            central += 1;
        }
        if touching.is_none() && !v.is_zero() {
            let mut seen: Vec<usize> = a.iter().filter_map(|&i| owner[i]).collect();
            seen.sort();
            seen.dedup();
            if seen.len() == search.adapted().component_dims.len() {
                touching = Some(a.clone());
            }
        }
    }
    let searched = exponent_report(&body, Some(&SearchOptions::new(SearchMode::Template, 6))).unwrap();
    let a6 = checked == 9u64.pow(6) && central == checked && touching.is_some() && searched.delta_exact == Some(3);
    all &= a6;
    notes.push(format!(
        "A6 trivial: {central}/{checked} central, touching assignment {}, delta {:?}",
        touching.map_or("none".into(), |a| format!("{a:?}")),
        searched.delta_exact
    ));
    ok(all, notes.join("; "))
}

/// Codimension totals of the sign-rule engine for n = 1..=n_max.
fn engine_totals(spec: &str, n_max: usize) -> Vec<(u64, u64)> {
    let env = Envelope::new(build_spec(spec).unwrap().body);
    (1..=n_max).map(|n| codim_report(&env, n)).map(|r| (r.totals.c, r.totals.cz)).collect()
}

/// The same totals from the generic-element oracle.
fn oracle_totals(spec: &str, n_max: usize) -> Vec<(u64, u64)> {
    let body = build_spec(spec).unwrap().body;
    let oracle = Oracle::new(&body);
    (1..=n_max)
        .map(|n| {
            let mut c = 0;
            let mut cz = 0;
            for (t, mult) in canonical_tuples(&body.group, n) {
                c += mult * oracle.identity_kernel(&t).unwrap().codim() as u64;
                cz += mult * oracle.central_kernel(&t).unwrap().codim() as u64;
            }
            (c, cz)
        })
        .collect()
}

fn codimension_tables() -> Outcome {
    let fc2 = engine_totals("A2(2)@Z2", 5);
    let fc2_ok = fc2.iter().enumerate().all(|(k, &(c, cz))| c == 1 << (k + 1) && cz == 0);
    let e = engine_totals("E@Z1", 6);
    let e_ok = e.iter().enumerate().all(|(k, &(c, _))| c == 1 << k);
    let oracle = oracle_totals("E@Z1", 4);
    let agree = oracle == e[..4];
    let fmt = |v: &[(u64, u64)]| v.iter().map(|p| p.0.to_string()).collect::<Vec<_>>().join(",");
    ok(
        fc2_ok && e_ok && agree,
        format!(
            "FC_2 c=[{}] cz all 0: {fc2_ok}; E c=[{}]; oracle c=[{}] agrees on (c, cz): {agree}",
            fmt(&fc2),
            fmt(&e),
            fmt(&oracle)
        ),
    )
}

fn summary(r: &SuiteResult) -> String {
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    format!(
        "{} {} checks, N = {}, failed [{}]",
        r.suite,
        r.checks.len(),
        r.effective_n.map_or("-".into(), |n| n.to_string()),
        failed.join(", ")
    )
}

fn generator_suites() -> Outcome {
    let opts = HarnessOptions::default();
    let a = harness::b_generators(&opts).unwrap();
    let b = harness::c_generators(&opts).unwrap();
    let cases = [&a, &b].iter().flat_map(|r| r.checks.iter()).filter(|c| c.id.ends_with("/span")).count();
    let n_ok = a.effective_n >= Some(3) && b.effective_n >= Some(3);
    ok(a.passed && b.passed && cases == 8 && n_ok, format!("{}; {}; {cases} span cases", summary(&a), summary(&b)))
}

/// Product checks known to fail: the equality holds only on (g,g,g) over Z2.
const PRODUCT_FAILURES: &[&str] =
    &["A10(g,1,g)@Z2/product", "A10(g,g,g)@Z4/product", "A9(g,1,g)@Z2/product", "A9(g,g,g)@Z4/product"];

fn product_suites(failures: &mut Vec<String>, variant_ok: &mut bool) -> Outcome {
    let opts = HarnessOptions::default().with_max_degree(3);
    let p = harness::products(&opts).unwrap();
    let r = harness::variants(&opts).unwrap();
    *failures = p.failures().map(|c| c.id.clone()).collect();
    *variant_ok = r.passed;
    let witness: Vec<String> = p
        .failures()
        .filter_map(|c| c.counterexample.as_ref())
        .filter_map(|cx| cx.polynomial.clone().zip(cx.tuple.clone()))
        .map(|(f, t)| format!("{f} at {t}"))
        .collect();
    ok(p.passed && r.passed, format!("{}; {}; counterexamples: {}", summary(&p), summary(&r), witness.join(", ")))
}

fn witness_suite() -> Outcome {
    let r = harness::witnesses(&HarnessOptions::default()).unwrap();
    let family = |s: &str| s.split(['(', '@']).next().unwrap_or(s).to_string();
    let pair = witness_table().iter().any(|w| {
        let mut f = [family(&w.holds_in), family(&w.fails_in)];
        f.sort();
        f == ["A3", "A4"]
    });
    let readings = flagged_readings().len();
    let recorded = r.checks.iter().filter(|c| c.kind == CheckKind::Note).count();
    ok(
        r.passed && pair && readings > 0 && recorded == readings,
        format!("{}; A3/A4 entry present: {pair}; {recorded} flagged readings recorded", summary(&r)),
    )
}

fn construction_suite() -> Outcome {
    let r = harness::constructions(&HarnessOptions::default()).unwrap();
    let ranks: Vec<&str> = r
        .checks
        .iter()
        .filter_map(|c| c.note.as_deref())
        .filter(|n| n.starts_with("rank 9") || n.starts_with("rank 13"))
        .collect();
    let controls = r.checks.iter().filter(|c| c.kind == CheckKind::Control).count();
    let nine = ranks.iter().any(|n| n.starts_with("rank 9"));
    let thirteen = ranks.iter().any(|n| n.starts_with("rank 13"));
    ok(
        r.passed && nine && thirteen && controls > 0,
        format!("{}; rank 9 seen: {nine}; rank 13 seen: {thirteen}; {controls} mutation controls", summary(&r)),
    )
}

fn invariants() -> Outcome {
    let mut bad = Vec::new();
    let mut tuples = 0usize;
    let mut direct = 0usize;
    let mut exps = 0usize;
    for fam in FAMILIES {
        let spec = fam.example;
        let body = build_spec(spec).unwrap().body;
        let env = Envelope::new(body.clone());
        let n_max = if body.dim() > 9 { 3 } else { 4 };
        for n in 1..=n_max {
            for (t, _) in canonical_tuples(&body.group, n) {
                let k = tuple_kernels(&env, &t);
                tuples += 1;
                if !k.identity.is_subspace_of(&k.central).unwrap() {
                    bad.push(format!("{spec} {t:?}: identity kernel not inside central kernel"));
                }
                if k.cz() > k.c() {
                    bad.push(format!("{spec} {t:?}: negative proper central codimension"));
                }
                if !body.has_odd_part() && n <= 3 {
                    let d = direct_kernels(&body, &t).unwrap();
                    direct += 1;
                    let same = |x: &gpi_core::poly::PolySubspace, y: &gpi_core::poly::PolySubspace| {
                        x.is_subspace_of(y).unwrap() && y.is_subspace_of(x).unwrap()
                    };
                    if !same(&d.identity, &k.identity) || !same(&d.central, &k.central) {
                        bad.push(format!("{spec} {t:?}: envelope and direct evaluation disagree"));
                    }
                }
            }
        }
        if body.wedderburn.is_some() {
            let r = exponent_report(&body, Some(&SearchOptions::new(SearchMode::Template, 3))).unwrap();
            exps += 1;
            if !r.consistent() {
                bad.push(format!("{spec}: delta {} > exp_G {}", r.delta_lower_bound, r.exp_g));
            }
        }
    }
    ok(
        bad.is_empty() && direct > 0,
        if bad.is_empty() {
            format!("{tuples} tuples, {direct} direct comparisons, {exps} exponent reports")
        } else {
            bad.join("; ")
        },
    )
}

fn main() {
    let secs = Duration::from_secs;
    let mut product_failures = Vec::new();
    let mut variant_ok = false;
    let lines = [
        run(1, "exponent values", "exact integers", secs(5), exponent_values),
        run(2, "proper central exponent certificates", "exact", secs(120), delta_certificates),
        run(3, "codimension tables", "exact integers", secs(300), codimension_tables),
        run(4, "generator suites", "exact subspace equality", secs(300), generator_suites),
        run(5, "product and variant suites", "exact", secs(300), || {
            product_suites(&mut product_failures, &mut variant_ok)
        }),
        run(6, "separating witnesses", "exact booleans", secs(300), witness_suite),
        run(7, "construction suite", "exact ranks", secs(300), construction_suite),
        run(8, "cross-cutting invariants", "zero tolerance", secs(300), invariants),
    ];
    let failed: Vec<usize> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    println!("{} of {} criteria pass", lines.len() - failed.len(), lines.len());

    // Criterion 5 is expected to fail, with exactly these product checks.
    assert_eq!(failed, vec![5], "unexpected criterion outcomes");
    assert!(variant_ok);
    let mut got = product_failures.clone();
    got.sort();
    assert_eq!(got, PRODUCT_FAILURES);
}
