//! Seeded spot checks of the sign rule against the generic-element model
//! at degrees where exhaustive comparison is too slow.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::oracle::{Oracle, OracleError};
use super::Envelope;
use crate::group::GroupElement;
use crate::poly::MultilinearPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub tuple: Vec<GroupElement>,
    pub word: Vec<usize>,
    pub assignment: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub n: usize,
    pub seed: u64,
    pub words: usize,
    /// Assignments compared over all sampled words.
    pub assignments: usize,
    pub mismatch: Option<Mismatch>,
}

/// Draws `words` random (degree tuple, monomial) pairs of length `n` over
/// the body's support and compares every basis assignment of each.
pub fn sampled_agreement(env: &Envelope, n: usize, words: usize, seed: u64) -> Result<SampleReport, OracleError> {
    let oracle = Oracle::new(env.body()).with_budget(n.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support = env.support();
    let mut report = SampleReport { n, seed, words: 0, assignments: 0, mismatch: None };
    if support.is_empty() {
        return Ok(report);
    }
    for _ in 0..words {
        let tuple: Vec<GroupElement> = (0..n).map(|_| support[rng.gen_range(0..support.len())].clone()).collect();
        let mut word: Vec<usize> = (0..n).collect();
        word.shuffle(&mut rng);
        let mut f = MultilinearPoly::new(tuple.clone());
        f.add_term(word.clone(), &Rational::one());
        let expansion = oracle.eval(&f)?;
        report.words += 1;
        for a in env.assignments(&tuple) {
            report.assignments += 1;
            if expansion.coefficient(env.body(), &a) != env.eval_monomial(&word, &a).element {
                report.mismatch = Some(Mismatch { tuple, word, assignment: a });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
