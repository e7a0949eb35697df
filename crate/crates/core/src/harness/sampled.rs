//! Seeded sign-rule spot checks at degrees 5 and 6.

use super::{envelope, CheckKind, CheckRecord, Counterexample, HarnessOptions, SuiteResult};
use crate::catalog::CatalogError;
use crate::envelope::sample::sampled_agreement;
use crate::poly::LabelMap;

pub const SAMPLED_BODIES: &[&str] =
    &["A4@Z4", "A5(1,1)@Z2xZ2", "A8(g,g^2)@Z3", "A9(g,1,g)@Z2", "A10(g,1,g)@Z2", "A11(g,1)@Z2"];

const WORDS: usize = 12;

pub fn sampled(opts: &HarnessOptions) -> Result<SuiteResult, CatalogError> {
    let degrees: Vec<usize> = match opts.max_degree {
        Some(n) => vec![n],
        None => vec![5, 6],
    };
    let mut jobs = Vec::new();
    for spec in SAMPLED_BODIES {
        for &n in &degrees {
            jobs.push((*spec, n));
        }
    }
    let seed = opts.seed;
    let rows = crate::par::map(jobs, |(spec, n)| -> Result<CheckRecord, CatalogError> {
        let env = envelope(spec)?;
        let labels = LabelMap::standard(env.group());
        let record = CheckRecord::new(
            format!("{spec}/n{n}"),
            CheckKind::Claim,
            "sign rule agrees with the generic-element model",
            format!("{spec}; {WORDS} random words; seed {seed}"),
        )
        .up_to(n);
        Ok(match sampled_agreement(&env, n, WORDS, seed) {
            Err(e) => record.outcome(Some(Counterexample::detail(e.to_string()))),
            Ok(r) => {
                let cx = r.mismatch.map(|m| Counterexample {
                    tuple: Some(labels.tuple(&m.tuple)),
                    polynomial: Some(
                        m.word
                            .iter()
                            .map(|&i| format!("x{}:{}", i + 1, labels.name(&m.tuple[i])))
                            .collect::<Vec<_>>()
                            .join(" "),
                    ),
                    assignment: Some(m.assignment.iter().map(|&i| env.body().basis_labels[i].clone()).collect()),
                    detail: Some("values differ".into()),
                });
                record.note(format!("{} assignments compared", r.assignments)).outcome(cx)
            }
        })
    });
    let checks = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteResult::new("sampled", checks))
}
