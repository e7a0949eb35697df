//! Bounded-degree verification suites over the catalog.
//!
//! Every equality of T-ideals is checked tuple by tuple up to a degree
//! bound `N` and reported as "verified up to N". Control checks run a
//! deliberately broken variant and pass when the variant is rejected.

mod construction;
mod exponents;
mod sampled;
mod tideal;

use serde::Serialize;

use crate::catalog::{build_spec, CatalogError};
use crate::codim::{estimate_work, Budget};
use crate::envelope::Envelope;
use crate::poly::{emit, LabelMap, MultilinearPoly, PolySubspace};

pub use construction::{constructions, Construction};
pub use exponents::{exponent_certificates, witnesses};
pub use sampled::{sampled, SAMPLED_BODIES};
pub use tideal::{b_generators, c_generators, products, variants, GeneratorCase};

pub const SUITES: &[&str] =
    &["lemma3.2", "lemma3.3", "prop3.5", "remark3.6", "section4", "prop5.4", "thm5.1", "sampled"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// The claim itself.
    Claim,
    /// A broken variant expected to be rejected.
    Control,
    /// Recorded for reference; never fails the suite.
    Note,
}

/// Enough to reproduce a failure by hand: the degree tuple, a polynomial
/// and where relevant an assignment of basis labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Counterexample {
    pub fn detail(s: impl Into<String>) -> Self {
        Counterexample { detail: Some(s.into()), ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub kind: CheckKind,
    pub claim: String,
    pub parameters: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_up_to: Option<usize>,
    pub passed: bool,
    /// For a failed claim, why; for a passing control, the evidence that
    /// the broken variant was rejected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(
        id: impl Into<String>,
        kind: CheckKind,
        claim: impl Into<String>,
        parameters: impl Into<String>,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            kind,
            claim: claim.into(),
            parameters: parameters.into(),
            verified_up_to: None,
            passed: false,
            counterexample: None,
            note: None,
        }
    }

    pub fn up_to(mut self, n: usize) -> Self {
        self.verified_up_to = Some(n);
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }

    /// Claims pass without a counterexample; controls pass with one.
    pub fn outcome(mut self, cx: Option<Counterexample>) -> Self {
        self.passed = match self.kind {
            CheckKind::Claim => cx.is_none(),
            CheckKind::Control => cx.is_some(),
            CheckKind::Note => true,
        };
        self.counterexample = cx;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    /// Smallest degree bound any check of the suite ran with.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub effective_n: Option<usize>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl SuiteResult {
    pub fn new(suite: &str, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().all(|c| c.passed);
        let effective_n = checks.iter().filter_map(|c| c.verified_up_to).min();
        SuiteResult { suite: suite.to_string(), effective_n, checks, passed }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown suite `{name}`; expected one of {known}", name = .0, known = SUITES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Options shared by the suites.
#[derive(Clone, Debug)]
pub struct HarnessOptions {
    /// Requested degree bound; suites with their own defaults use them when unset.
    pub max_degree: Option<usize>,
    pub budget: Budget,
    /// Seed of the randomized checks.
    pub seed: u64,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions { max_degree: None, budget: Budget::from_env(8), seed: 0 }
    }
}

impl HarnessOptions {
    pub fn with_max_degree(mut self, n: usize) -> Self {
        self.max_degree = Some(n);
        self
    }

    /// Largest `n ≤ want` whose cumulative kernel work over all tuples of
    /// the given envelopes fits the budget; at least 1.
    pub fn effective_n(&self, envs: &[&Envelope], want: usize) -> usize {
        let mut total = 0u128;
        for n in 1..=want {
            total += envs.iter().map(|e| estimate_work(e, n)).sum::<u128>();
            if self.budget.check(n, total).is_err() {
                return (n - 1).max(1);
            }
        }
        want
    }
}

pub fn run_suite(suite: &str, opts: &HarnessOptions) -> Result<SuiteResult, HarnessError> {
    Ok(match suite {
        "lemma3.2" => b_generators(opts)?,
        "lemma3.3" => c_generators(opts)?,
        "prop3.5" => products(opts)?,
        "remark3.6" => variants(opts)?,
        "section4" => constructions(opts)?,
        "prop5.4" => witnesses(opts)?,
        "thm5.1" => exponent_certificates(opts)?,
        "sampled" => sampled(opts)?,
        other => return Err(HarnessError::UnknownSuite(other.to_string())),
    })
}

pub(crate) fn envelope(spec: &str) -> Result<Envelope, CatalogError> {
    Ok(Envelope::new(build_spec(spec)?.body))
}

pub(crate) fn poly_text(f: &MultilinearPoly, labels: &LabelMap) -> String {
    emit(&f.to_graded(), Some(labels))
}

/// A polynomial in one space and not the other, if the two differ.
pub(crate) fn space_difference(
    left: &PolySubspace,
    right: &PolySubspace,
    labels: &LabelMap,
    left_name: &str,
    right_name: &str,
) -> Option<Counterexample> {
    let tuple = labels.tuple(&left.tuple);
    for (a, b, an, bn) in [(left, right, left_name, right_name), (right, left, right_name, left_name)] {
        if let Some(f) = a.basis_polys().into_iter().find(|f| !b.contains(f).expect("same tuple")) {
            return Some(Counterexample {
                tuple: Some(tuple),
                polynomial: Some(poly_text(&f, labels)),
                assignment: None,
                detail: Some(format!("in {an} (dim {}), not in {bn} (dim {})", a.dim(), b.dim())),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests;
