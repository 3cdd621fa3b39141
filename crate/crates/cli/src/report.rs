//! JSON rendering of stability reports.

use anyhow::{anyhow, Result};
use serde::{Deserialize, Serialize};

use conjstab_core::{Alphabet, Certificate, Outcome, StabilityReport, Verdict, Word};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub verdict: String,
    pub alphabet: String,
    pub generators: Vec<String>,
    pub reps: Vec<RepDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDocument {
    pub g: String,
    pub rank: usize,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub u: String,
    pub v: String,
    pub g: String,
}

/// Report fields recovered from a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedRep {
    pub g: Word,
    pub rank: usize,
    pub outcome: Outcome,
    pub generator: Option<Word>,
    pub root: Option<Word>,
    pub exponent: Option<usize>,
    pub witness: Option<Word>,
}

impl ReportDocument {
    pub fn new(alphabet: &Alphabet, generators: &[Word], report: &StabilityReport) -> Self {
        let fmt = |w: &Word| alphabet.format_machine(w);
        Self {
            verdict: report.verdict.as_str().to_string(),
            alphabet: alphabet.names().iter().collect(),
            generators: generators.iter().map(fmt).collect(),
            reps: report
                .analyses
                .iter()
                .map(|a| RepDocument {
                    g: fmt(&a.rep.g),
                    rank: a.rep.intersection_rank,
                    outcome: a.outcome.as_str().to_string(),
                    generator: a.generator.as_ref().map(fmt),
                    root: a.root.as_ref().map(fmt),
                    exponent: a.exponent,
                    witness: a.witness.as_ref().map(fmt),
                })
                .collect(),
            certificate: report.certificate.as_ref().map(|c| CertificateDocument {
                u: fmt(&c.u),
                v: fmt(&c.v),
                g: fmt(&c.g),
            }),
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Ok(Alphabet::parse(&self.alphabet)?)
    }

    pub fn verdict(&self) -> Result<Verdict> {
        match self.verdict.as_str() {
            "stable" => Ok(Verdict::Stable),
            "not_stable" => Ok(Verdict::NotStable),
            other => Err(anyhow!("unknown verdict `{other}`")),
        }
    }

    pub fn certificate(&self) -> Result<Option<Certificate>> {
        let alphabet = self.alphabet()?;
        self.certificate
            .as_ref()
            .map(|c| {
                Ok(Certificate {
                    u: alphabet.parse_word(&c.u)?,
                    v: alphabet.parse_word(&c.v)?,
                    g: alphabet.parse_word(&c.g)?,
                })
            })
            .transpose()
    }

    pub fn reps(&self) -> Result<Vec<ParsedRep>> {
        let alphabet = self.alphabet()?;
        let word = |s: &str| -> Result<Word> { Ok(alphabet.parse_word(s)?) };
        let opt = |s: &Option<String>| s.as_deref().map(word).transpose();
        self.reps
            .iter()
            .map(|r| {
                Ok(ParsedRep {
                    g: word(&r.g)?,
                    rank: r.rank,
                    outcome: Outcome::parse(&r.outcome)
                        .ok_or_else(|| anyhow!("unknown outcome `{}`", r.outcome))?,
                    generator: opt(&r.generator)?,
                    root: opt(&r.root)?,
                    exponent: r.exponent,
                    witness: opt(&r.witness)?,
                })
            })
            .collect()
    }

    /// Whether the document carries exactly the fields of `report`.
    pub fn describes(&self, report: &StabilityReport) -> Result<bool> {
        let reps = self.reps()?;
        let same_reps = reps.len() == report.analyses.len()
            && reps.iter().zip(&report.analyses).all(|(p, a)| {
                p.g == a.rep.g
                    && p.rank == a.rep.intersection_rank
                    && p.outcome == a.outcome
                    && p.generator == a.generator
                    && p.root == a.root
                    && p.exponent == a.exponent
                    && p.witness == a.witness
            });
        Ok(same_reps && self.verdict()? == report.verdict && self.certificate()? == report.certificate)
    }
}
