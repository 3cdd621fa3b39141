//! Command-line front end for `conjstab-core`.

pub mod input;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use conjstab_core::corpus::{corpus, run_agreement};
use conjstab_core::oracle::{brute_stability_witness, BallSpec, DEFAULT_MAX_RADIUS};
use conjstab_core::stallings::{intersection, to_dot};
use conjstab_core::{candidate_reps, decide_stability, Alphabet, Error};

pub use input::SubgroupFile;
pub use report::ReportDocument;

/// Environment variable overriding the largest oracle radius.
pub const MAX_BALL_VAR: &str = "CONJSTAB_MAX_BALL";

/// Largest number of presentations `corpus` will enumerate.
pub const MAX_PRESENTATIONS: u128 = 2_000_000;

#[derive(Debug, Parser)]
#[command(name = "conjstab", version, about = "Conjugacy stability of subgroups of free groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide conjugacy stability (exit 0 stable, 1 not stable).
    Decide {
        path: PathBuf,
        /// Emit the JSON report.
        #[arg(long)]
        json: bool,
        /// Print the certificate of non-stability.
        #[arg(long)]
        certificate: bool,
        /// Read the subgroup from a JSON object with `alphabet` and `generators`.
        #[arg(long)]
        input_json: bool,
    },
    /// Test membership of a word.
    Membership {
        path: PathBuf,
        word: String,
        #[arg(long)]
        input_json: bool,
    },
    /// Print a basis of the intersection of two subgroups.
    Intersect {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        input_json: bool,
    },
    /// Print candidate double coset representatives with intersection ranks.
    Reps {
        path: PathBuf,
        #[arg(long)]
        input_json: bool,
    },
    /// Write the core graph in Graphviz DOT.
    Dot {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        input_json: bool,
    },
    /// Brute-force search for a non-stability witness in a ball.
    Oracle {
        path: PathBuf,
        radius: usize,
        #[arg(long)]
        input_json: bool,
    },
    /// Compare the decider against the oracle on every small subgroup of F(a, b).
    Corpus {
        max_gens: usize,
        max_len: usize,
        radius: usize,
        /// Print only the summary line.
        #[arg(short, long)]
        quiet: bool,
    },
}

/// Runs a command, writing its normal output to `out`; the returned value is
/// the process exit code.
pub fn run(command: Command, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Decide {
            path,
            json,
            certificate,
            input_json,
        } => decide(&path, json, certificate, input_json, out),
        Command::Membership {
            path,
            word,
            input_json,
        } => {
            let file = SubgroupFile::read(&path, input_json)?;
            let w = file
                .alphabet
                .parse_word(&word)
                .with_context(|| format!("word `{word}`"))?;
            writeln!(out, "{}", file.subgroup()?.contains(&w)?)?;
            Ok(0)
        }
        Command::Intersect {
            left,
            right,
            input_json,
        } => {
            let a = SubgroupFile::read(&left, input_json)?;
            let b = SubgroupFile::read(&right, input_json)?;
            let both = intersection(&a.subgroup()?, &b.subgroup()?)?;
            writeln!(out, "rank {}", both.rank())?;
            for w in both.basis() {
                writeln!(out, "{}", a.alphabet.display(&w))?;
            }
            Ok(0)
        }
        Command::Reps { path, input_json } => {
            let file = SubgroupFile::read(&path, input_json)?;
            let h = file.subgroup()?;
            if h.is_trivial() || h.is_full() {
                return Ok(0);
            }
            for rep in candidate_reps(&h)? {
                writeln!(out, "{}\trank {}", file.alphabet.display(&rep.g), rep.intersection_rank)?;
            }
            Ok(0)
        }
        Command::Dot {
            path,
            out: target,
            input_json,
        } => {
            let file = SubgroupFile::read(&path, input_json)?;
            let dot = to_dot(file.subgroup()?.graph());
            match target {
                Some(p) => std::fs::write(&p, dot).with_context(|| format!("cannot write {}", p.display()))?,
                None => out.write_all(dot.as_bytes())?,
            }
            Ok(0)
        }
        Command::Oracle {
            path,
            radius,
            input_json,
        } => {
            let file = SubgroupFile::read(&path, input_json)?;
            let spec = BallSpec::with_guard(file.alphabet.clone(), radius, max_ball()?)?;
            let verdict = brute_stability_witness(&file.subgroup()?, &spec)?;
            match verdict.witness {
                Some(w) => {
                    let a = &file.alphabet;
                    writeln!(
                        out,
                        "witness u={} v={} g={} (exact h-bound {})",
                        a.display(&w.u),
                        a.display(&w.v),
                        a.display(&w.g),
                        verdict.h_bound_used
                    )?;
                    Ok(1)
                }
                None => {
                    writeln!(
                        out,
                        "none up to radius {} (exact h-bound {})",
                        verdict.searched_radius, verdict.h_bound_used
                    )?;
                    Ok(0)
                }
            }
        }
        Command::Corpus {
            max_gens,
            max_len,
            radius,
            quiet,
        } => run_corpus(max_gens, max_len, radius, quiet, out),
    }
}

fn decide(path: &Path, json: bool, certificate: bool, input_json: bool, out: &mut dyn Write) -> Result<u8> {
    let file = SubgroupFile::read(path, input_json)?;
    let h = file.subgroup()?;
    let start = Instant::now();
    let report = decide_stability(&h);
    let elapsed = start.elapsed();
    let a = &file.alphabet;
    if json {
        let doc = ReportDocument::new(a, &file.generators, &report);
        writeln!(out, "{}", doc.to_json())?;
    } else {
        writeln!(out, "verdict: {}", report.verdict.as_str())?;
        writeln!(out, "rank: {}", h.rank())?;
        for an in &report.analyses {
            write!(
                out,
                "rep {}\trank {}\t{}",
                a.display(&an.rep.g),
                an.rep.intersection_rank,
                an.outcome.as_str()
            )?;
            if let (Some(r), Some(e)) = (&an.root, an.exponent) {
                write!(out, "\troot {}^{}", a.display(r), e)?;
            }
            if let Some(wit) = &an.witness {
                write!(out, "\twitness {}", a.display(wit))?;
            }
            writeln!(out)?;
        }
        if certificate {
            if let Some(c) = &report.certificate {
                writeln!(
                    out,
                    "certificate u={} v={} g={}",
                    a.display(&c.u),
                    a.display(&c.v),
                    a.display(&c.g)
                )?;
            }
        }
        writeln!(out, "time: {:.3} ms", elapsed.as_secs_f64() * 1e3)?;
    }
    Ok(if report.is_stable() { 0 } else { 1 })
}

fn run_corpus(max_gens: usize, max_len: usize, radius: usize, quiet: bool, out: &mut dyn Write) -> Result<u8> {
    let alphabet = Alphabet::standard(2)?;
    let spec = BallSpec::with_guard(alphabet.clone(), radius, max_ball()?)?;
    let count = presentation_count(&alphabet, max_gens, max_len);
    if count > MAX_PRESENTATIONS {
        return Err(Error::GuardExceeded {
            name: "presentations",
            value: count.min(usize::MAX as u128) as usize,
            max: MAX_PRESENTATIONS as usize,
        }
        .into());
    }
    let cases = corpus(&alphabet, max_gens, max_len)?;
    let start = Instant::now();
    let results = run_agreement(&cases, &spec)?;
    let elapsed = start.elapsed();
    if !quiet {
        writeln!(out, "{:>5}  {:<20} {:>5}  {:<10} {:<10} agree", "case", "generators", "pres", "decider", "oracle")?;
    }
    let mut agreements = 0;
    let mut unstable = 0;
    let mut bad_certificates = 0;
    for (i, (case, result)) in cases.iter().zip(&results).enumerate() {
        agreements += usize::from(result.agrees());
        unstable += usize::from(!result.report.is_stable());
        bad_certificates += usize::from(result.certificate_valid == Some(false));
        if quiet {
            continue;
        }
        let gens: Vec<String> = case.presentations[0]
            .iter()
            .map(|w| alphabet.display(w).to_string())
            .collect();
        let gens = if gens.is_empty() { "-".to_string() } else { gens.join(",") };
        let oracle = if result.oracle.witness.is_some() { "not_stable" } else { "stable" };
        writeln!(
            out,
            "{:>5}  {:<20} {:>5}  {:<10} {:<10} {}",
            i,
            gens,
            case.presentations.len(),
            result.report.verdict.as_str(),
            oracle,
            if result.agrees() { "yes" } else { "NO" }
        )?;
    }
    let total = results.len();
    let percent = if agreements == total {
        "100%".to_string()
    } else {
        format!("{:.2}%", 100.0 * agreements as f64 / total.max(1) as f64)
    };
    writeln!(
        out,
        "subgroups {total}, presentations {}, not_stable {unstable}, invalid certificates {bad_certificates}, radius {radius}, {:.2}s: agreement {percent}",
        cases.iter().map(|c| c.presentations.len()).sum::<usize>(),
        elapsed.as_secs_f64()
    )?;
    Ok(if agreements == total && bad_certificates == 0 { 0 } else { 1 })
}

/// `Σ_{k ≤ max_gens} C(words, k)` where `words` counts nontrivial reduced
/// words of length at most `max_len`.
fn presentation_count(alphabet: &Alphabet, max_gens: usize, max_len: usize) -> u128 {
    let letters = alphabet.num_letters() as u128;
    let mut words: u128 = 0;
    let mut layer = letters;
    for _ in 0..max_len {
        words = words.saturating_add(layer);
        layer = layer.saturating_mul(letters - 1);
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=max_gens as u128 {
        if k > words {
            break;
        }
        if let Some(next) = binom.saturating_mul(words + 1 - k).checked_div(k) {
            binom = next;
        }
        total = total.saturating_add(binom);
    }
    total
}

/// The oracle radius guard, from the environment or the default.
pub fn max_ball() -> Result<usize> {
    match std::env::var(MAX_BALL_VAR) {
        Ok(v) => match v.trim().parse() {
            Ok(n) => Ok(n),
            Err(_) => bail!("{MAX_BALL_VAR}={v} is not a nonnegative integer"),
        },
        Err(_) => Ok(DEFAULT_MAX_RADIUS),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_presentations() {
        let ab = Alphabet::standard(2).unwrap();
        assert_eq!(presentation_count(&ab, 2, 3), 1 + 52 + 52 * 51 / 2);
        assert_eq!(presentation_count(&ab, 1, 1), 5);
        assert!(presentation_count(&ab, 40, 40) > MAX_PRESENTATIONS);
    }
}
