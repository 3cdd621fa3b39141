//! Exhaustive small-subgroup corpora and decider-vs-oracle agreement runs.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::conjstab::{decide_stability, validate_certificate, Certificate, StabilityReport};
use crate::error::Result;
use crate::oracle::{brute_stability_witness, enumerate_ball, BallSpec, OracleVerdict};
use crate::stallings::{StallingsGraph, Subgroup};
use crate::words::{Alphabet, Word};

/// One subgroup of the corpus, with every presentation that produced it.
#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub presentations: Vec<Vec<Word>>,
    pub subgroup: Subgroup,
}

/// All sets of at most `max_gens` distinct nontrivial reduced words of length
/// at most `max_len`, ordered by size and then lexicographically.
pub fn presentations(alphabet: &Alphabet, max_gens: usize, max_len: usize) -> Result<Vec<Vec<Word>>> {
    let spec = BallSpec::with_guard(alphabet.clone(), max_len, usize::MAX)?;
    let words: Vec<Word> = enumerate_ball(&spec)?.into_iter().skip(1).collect();
    let mut out = Vec::new();
    for size in 0..=max_gens {
        let mut current = Vec::with_capacity(size);
        combinations(&words, size, 0, &mut current, &mut out);
    }
    Ok(out)
}

fn combinations(
    words: &[Word],
    size: usize,
    from: usize,
    current: &mut Vec<Word>,
    out: &mut Vec<Vec<Word>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for i in from..words.len() {
        current.push(words[i].clone());
        combinations(words, size, i + 1, current, out);
        current.pop();
    }
}

/// Presentations grouped by canonical folded graph, in order of first
/// appearance.
pub fn corpus(alphabet: &Alphabet, max_gens: usize, max_len: usize) -> Result<Vec<CorpusCase>> {
    let mut index: HashMap<StallingsGraph, usize> = HashMap::new();
    let mut cases: Vec<CorpusCase> = Vec::new();
    for gens in presentations(alphabet, max_gens, max_len)? {
        let subgroup = Subgroup::new(alphabet, gens.clone())?;
        match index.get(subgroup.graph()) {
            Some(&i) => cases[i].presentations.push(gens),
            None => {
                index.insert(subgroup.graph().clone(), cases.len());
                cases.push(CorpusCase {
                    presentations: vec![gens],
                    subgroup,
                });
            }
        }
    }
    Ok(cases)
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub report: StabilityReport,
    pub oracle: OracleVerdict,
    pub decide_time: Duration,
    /// Whether the decider's certificate (if any) validates.
    pub certificate_valid: Option<bool>,
    /// Whether the oracle's witness (if any) validates as a certificate.
    pub oracle_witness_valid: Option<bool>,
}

impl CaseResult {
    pub fn agrees(&self) -> bool {
        self.report.is_stable() == self.oracle.witness.is_none()
    }
}

/// Decides every case and runs the oracle at `radius`, in parallel; results
/// keep the input order.
pub fn run_agreement(cases: &[CorpusCase], spec: &BallSpec) -> Result<Vec<CaseResult>> {
    cases
        .par_iter()
        .map(|case| {
            let h = &case.subgroup;
            let start = Instant::now();
            let report = decide_stability(h);
            let decide_time = start.elapsed();
            let oracle = brute_stability_witness(h, spec)?;
            let certificate_valid = report
                .certificate
                .as_ref()
                .map(|c| validate_certificate(h, c));
            let oracle_witness_valid = oracle.witness.as_ref().map(|w| {
                validate_certificate(
                    h,
                    &Certificate {
                        u: w.u.clone(),
                        v: w.v.clone(),
                        g: w.g.clone(),
                    },
                )
            });
            Ok(CaseResult {
                report,
                oracle,
                decide_time,
                certificate_valid,
                oracle_witness_valid,
            })
        })
        .collect()
}
