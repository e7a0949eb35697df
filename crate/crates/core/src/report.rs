//! Report emission: JSON, CSV and plain text.
//!
//! Every report is built from ordered data only (vectors and sorted
//! maps), so identical inputs give identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::catalog::ListRow;
use crate::codim::{CodimReport, Membership, Verdict};
use crate::envelope::TaggedValue;
use crate::exponent::{adapted_basis, ExponentReport, SearchMode};
use crate::harness::SuiteResult;
use crate::linalg::Vector;
use crate::poly::{emit, LabelMap};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown output format `{other}`; expected json, csv or text")),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// `2 e12 - e13`, or `0`.
pub fn vector_text(labels: &[String], v: &Vector) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != Rational::one() {
            let _ = write!(out, "{abs} ");
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `ε1ε3 ⊗ (…)` for a tagged envelope value.
pub fn tagged_text(labels: &[String], v: &TaggedValue) -> String {
    let body = vector_text(labels, &v.element);
    if v.tag.is_empty() {
        return body;
    }
    let tag: String = v.tag.iter().map(|i| format!("ε{}", i + 1)).collect();
    format!("{tag} ⊗ ({body})")
}

#[derive(Serialize)]
struct CodimRow {
    tuple: String,
    multiplicity: u64,
    c: u64,
    cz: u64,
    cdelta: u64,
}

#[derive(Serialize)]
struct CodimDegree {
    n: usize,
    tuples: Vec<CodimRow>,
    totals: crate::codim::Totals,
}

#[derive(Serialize)]
struct Sequences {
    c: Vec<u64>,
    cz: Vec<u64>,
    cdelta: Vec<u64>,
}

#[derive(Serialize)]
struct CodimDoc<'a> {
    algebra: &'a str,
    group: String,
    /// Totals by degree, `n = 1, 2, …`.
    totals: Sequences,
    degrees: Vec<CodimDegree>,
}

/// Codimension sequences. Tuples are listed sorted, each standing for
/// `multiplicity` reorderings with the same values.
pub fn codim(a: &GradedAlgebra, reports: &[CodimReport], labels: &LabelMap, format: Format) -> String {
    let totals = Sequences {
        c: reports.iter().map(|r| r.totals.c).collect(),
        cz: reports.iter().map(|r| r.totals.cz).collect(),
        cdelta: reports.iter().map(|r| r.totals.cdelta).collect(),
    };
    match format {
        Format::Json => {
            let degrees = reports
                .iter()
                .map(|r| CodimDegree {
                    n: r.n,
                    tuples: r
                        .tuples
                        .iter()
                        .map(|t| CodimRow {
                            tuple: labels.tuple(&t.tuple),
                            multiplicity: t.multiplicity,
                            c: t.c,
                            cz: t.cz,
                            cdelta: t.cdelta,
                        })
                        .collect(),
                    totals: r.totals,
                })
                .collect();
            json(&CodimDoc { algebra: &a.name, group: a.group.to_string(), totals, degrees })
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for r in reports {
                for t in &r.tuples {
                    rows.push(vec![
                        r.n.to_string(),
                        labels.tuple(&t.tuple),
                        t.c.to_string(),
                        t.cz.to_string(),
                        t.cdelta.to_string(),
                        t.multiplicity.to_string(),
                    ]);
                }
            }
            csv_text(&["n", "tuple", "c", "cz", "cdelta", "multiplicity"], rows)
        }
        Format::Text => {
            let mut s = format!("{} over {}\n", a.name, a.group);
            let _ = writeln!(s, "{:>3} {:>12} {:>12} {:>12}", "n", "c", "cz", "cdelta");
            for r in reports {
                let _ = writeln!(s, "{:>3} {:>12} {:>12} {:>12}", r.n, r.totals.c, r.totals.cz, r.totals.cdelta);
            }
            s
        }
    }
}

#[derive(Serialize)]
struct ChainDoc {
    components: Vec<usize>,
    component_dims: Vec<usize>,
    /// A nonzero element of `B_{i1} J B_{i2} ⋯ J B_{ik}`.
    element: String,
}

#[derive(Serialize)]
struct WitnessDoc {
    targets: Vec<usize>,
    dim: usize,
    degree: usize,
    polynomial: String,
    assignment: Vec<String>,
    value: String,
    centrality_checks: String,
}

#[derive(Serialize)]
struct ExponentDoc<'a> {
    algebra: &'a str,
    group: String,
    exp_g: usize,
    admissible: ChainDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<DeltaDoc>,
}

#[derive(Serialize)]
struct DeltaDoc {
    mode: &'static str,
    max_degree: usize,
    lower_bound: usize,
    exact: Option<usize>,
    witness: Option<WitnessDoc>,
    consistent: bool,
}

pub fn mode_name(m: SearchMode) -> &'static str {
    match m {
        SearchMode::Full => "full",
        SearchMode::Template => "template",
    }
}

pub fn exponent(a: &GradedAlgebra, r: &ExponentReport, delta: bool, labels: &LabelMap, format: Format) -> String {
    let comp_dims: Vec<usize> = a
        .wedderburn
        .as_ref()
        .map(|w| r.admissible.components.iter().map(|&i| w.components[i].dim()).collect())
        .unwrap_or_default();
    let chain = ChainDoc {
        components: r.admissible.components.clone(),
        component_dims: comp_dims,
        element: vector_text(&a.basis_labels, &r.admissible.witness),
    };
    let witness = r.delta_witness.as_ref().map(|w| {
        let adapted = adapted_basis(a).expect("a report implies Wedderburn data");
        let names = &adapted.algebra.basis_labels;
        WitnessDoc {
            targets: w.targets.clone(),
            dim: w.dim,
            degree: w.poly.n(),
            polynomial: emit(&w.poly.to_graded(), Some(labels)),
            assignment: w.assignment.iter().map(|&i| names[i].clone()).collect(),
            value: tagged_text(names, &w.value),
            centrality_checks: w.checked.to_string(),
        }
    });
    let delta_doc = delta.then(|| DeltaDoc {
        mode: mode_name(r.mode),
        max_degree: r.max_degree,
        lower_bound: r.delta_lower_bound,
        exact: r.delta_exact,
        witness,
        consistent: r.consistent(),
    });
    let doc = ExponentDoc {
        algebra: &a.name,
        group: a.group.to_string(),
        exp_g: r.exp_g,
        admissible: chain,
        delta: delta_doc,
    };
    match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let d = doc.delta.as_ref();
            csv_text(
                &["algebra", "exp_g", "components", "delta_lower_bound", "delta_exact", "witness"],
                vec![vec![
                    doc.algebra.to_string(),
                    doc.exp_g.to_string(),
                    format!("{:?}", doc.admissible.components),
                    d.map(|d| d.lower_bound.to_string()).unwrap_or_default(),
                    d.and_then(|d| d.exact).map(|e| e.to_string()).unwrap_or_default(),
                    d.and_then(|d| d.witness.as_ref()).map(|w| w.polynomial.clone()).unwrap_or_default(),
                ]],
            )
        }
        Format::Text => {
            let mut s = format!("{} over {}\n", doc.algebra, doc.group);
            let _ = writeln!(
                s,
                "exp_G = {} via components {:?} (dims {:?}), chain element {}",
                doc.exp_g, doc.admissible.components, doc.admissible.component_dims, doc.admissible.element
            );
            if let Some(d) = &doc.delta {
                let exact = d.exact.map(|e| e.to_string()).unwrap_or_else(|| "not certified".into());
                let _ = writeln!(
                    s,
                    "delta ≥ {} ({} mode, degree ≤ {}); exact: {}",
                    d.lower_bound, d.mode, d.max_degree, exact
                );
                if let Some(w) = &d.witness {
                    let _ = writeln!(s, "  witness {}", w.polynomial);
                    let _ = writeln!(s, "  at {} = {}", w.assignment.join(", "), w.value);
                    let _ = writeln!(s, "  central on {} assignments", w.centrality_checks);
                }
            }
            s
        }
    }
}

pub fn suite(r: &SuiteResult, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let rows = r
                .checks
                .iter()
                .map(|c| {
                    let cx = c.counterexample.as_ref().map(|x| serde_json::to_string(x).expect("serializes"));
                    vec![
                        c.id.clone(),
                        serde_json::to_value(c.kind).expect("serializes").as_str().unwrap_or_default().to_string(),
                        c.passed.to_string(),
                        c.verified_up_to.map(|n| n.to_string()).unwrap_or_default(),
                        c.claim.clone(),
                        c.parameters.clone(),
                        cx.unwrap_or_default(),
                        c.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_text(&["id", "kind", "passed", "verified_up_to", "claim", "parameters", "counterexample", "note"], rows)
        }
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                let n = c.verified_up_to.map(|n| format!(" [verified up to N={n}]")).unwrap_or_default();
                let _ = writeln!(s, "{} {}: {}{}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.claim, n);
                if let Some(note) = &c.note {
                    let _ = writeln!(s, "     {note}");
                }
                if let Some(x) = &c.counterexample {
                    let mut parts = Vec::new();
                    if let Some(t) = &x.tuple {
                        parts.push(format!("tuple {t}"));
                    }
                    if let Some(p) = &x.polynomial {
                        parts.push(format!("polynomial {p}"));
                    }
                    if let Some(a) = &x.assignment {
                        parts.push(format!("at {}", a.join(", ")));
                    }
                    if let Some(d) = &x.detail {
                        parts.push(d.clone());
                    }
                    let what = if c.passed { "evidence" } else { "counterexample" };
                    let _ = writeln!(s, "     {what}: {}", parts.join("; "));
                }
            }
            let n = r.effective_n.map(|n| format!(", effective N = {n}")).unwrap_or_default();
            let failed = r.failures().count();
            let _ = writeln!(s, "{}: {} checks, {} failed{}", r.suite, r.checks.len(), failed, n);
            s
        }
    }
}

#[derive(Serialize)]
struct ClassifyDoc<'a> {
    polynomial: &'a str,
    algebra: &'a str,
    verdict: Membership,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ClassifyWitness>,
}

#[derive(Serialize)]
struct ClassifyWitness {
    tuple: String,
    component: String,
    assignment: Vec<String>,
    value: String,
}

pub fn classify(poly: &str, a: &GradedAlgebra, v: &Verdict, labels: &LabelMap, format: Format) -> String {
    let witness = v.witness.as_ref().map(|(m, asg, val)| ClassifyWitness {
        tuple: labels.tuple(&m.tuple),
        component: emit(&m.to_graded(), Some(labels)),
        assignment: asg.iter().map(|&i| a.basis_labels[i].clone()).collect(),
        value: tagged_text(&a.basis_labels, val),
    });
    let doc = ClassifyDoc { polynomial: poly, algebra: &a.name, verdict: v.membership, witness };
    let verdict = serde_json::to_value(doc.verdict).expect("serializes").as_str().unwrap_or_default().to_string();
    match format {
        Format::Json => json(&doc),
        Format::Csv => csv_text(
            &["polynomial", "algebra", "verdict", "assignment", "value"],
            vec![vec![
                poly.to_string(),
                a.name.clone(),
                verdict,
                doc.witness.as_ref().map(|w| w.assignment.join(" ")).unwrap_or_default(),
                doc.witness.as_ref().map(|w| w.value.clone()).unwrap_or_default(),
            ]],
        ),
        Format::Text => {
            let mut s = format!("{poly} on {}: {verdict}\n", a.name);
            if let Some(w) = &doc.witness {
                let _ = writeln!(s, "  {} at {} = {}", w.component, w.assignment.join(", "), w.value);
            }
            s
        }
    }
}

pub fn catalog(rows: &[ListRow], format: Format) -> String {
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_text(
            &["id", "params", "example", "dim", "odd_dim", "about"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.params.to_string(),
                        r.example.to_string(),
                        r.dim.to_string(),
                        r.odd_dim.to_string(),
                        r.about.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let w = rows.iter().map(|r| r.example.len()).max().unwrap_or(0);
            let mut s = String::new();
            for r in rows {
                let _ = writeln!(s, "{:<w$}  dim {:>2} (odd {:>2})  {}", r.example, r.dim, r.odd_dim, r.about);
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_spec;
    use crate::codim::codim_report;
    use crate::envelope::Envelope;

    #[test]
    fn codim_csv_columns_and_stability() {
        let a = build_spec("A2(3)@Z3").unwrap().body;
        let labels = LabelMap::standard(&a.group);
        let env = Envelope::new(a.clone());
        let reports: Vec<_> = (1..=3).map(|n| codim_report(&env, n)).collect();
        let text = codim(&a, &reports, &labels, Format::Csv);
        assert!(text.starts_with("n,tuple,c,cz,cdelta,multiplicity\n"));
        assert!(text.contains("2,\"(1,g)\",1,0,1,2\n"));
        assert_eq!(text, codim(&a, &reports, &labels, Format::Csv));
        let doc: serde_json::Value = serde_json::from_str(&codim(&a, &reports, &labels, Format::Json)).unwrap();
        assert_eq!(doc["totals"]["c"], serde_json::json!([3, 9, 27]));
    }

    #[test]
    fn vectors_print_as_label_sums() {
        let labels: Vec<String> = ["e12", "e13", "e14"].iter().map(|s| s.to_string()).collect();
        let v = vec![Rational::from(2), Rational::from(-1), Rational::zero()];
        assert_eq!(vector_text(&labels, &v), "2 e12 - e13");
        assert_eq!(vector_text(&labels, &vec![Rational::zero(); 3]), "0");
    }
}
