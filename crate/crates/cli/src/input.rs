//! Subgroup files.
//!
//! ```text
//! # comments start with '#'
//! alphabet: ab
//! aa
//! baaB
//! ```

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use conjstab_core::{Alphabet, Subgroup, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupFile {
    pub alphabet: Alphabet,
    pub generators: Vec<Word>,
}

impl SubgroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut generators = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match &alphabet {
                None => {
                    let rest = line
                        .strip_prefix("alphabet:")
                        .ok_or_else(|| anyhow!("line {}: expected `alphabet: <letters>`", number + 1))?;
                    let parsed = Alphabet::parse(rest.trim())
                        .with_context(|| format!("line {}", number + 1))?;
                    alphabet = Some(parsed);
                }
                Some(a) => {
                    let word = a
                        .parse_word(line)
                        .with_context(|| format!("line {}: generator `{line}`", number + 1))?;
                    generators.push(word);
                }
            }
        }
        match alphabet {
            Some(alphabet) => Ok(Self {
                alphabet,
                generators,
            }),
            None => bail!("missing `alphabet:` line"),
        }
    }

    /// Reads the `alphabet` and `generators` fields of a JSON object, as
    /// found in emitted reports. Other fields are ignored.
    pub fn parse_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            alphabet: String,
            #[serde(default)]
            generators: Vec<String>,
        }
        let doc: Doc = serde_json::from_str(text).context("invalid JSON subgroup")?;
        let alphabet = Alphabet::parse(&doc.alphabet)?;
        let generators = doc
            .generators
            .iter()
            .map(|g| {
                alphabet
                    .parse_word(g)
                    .with_context(|| format!("generator `{g}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            alphabet,
            generators,
        })
    }

    pub fn read(path: &std::path::Path, json: bool) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let parsed = if json {
            Self::parse_json(&text)
        } else {
            Self::parse(&text)
        };
        parsed.with_context(|| format!("{}", path.display()))
    }

    pub fn subgroup(&self) -> Result<Subgroup> {
        Ok(Subgroup::new(&self.alphabet, self.generators.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let f = SubgroupFile::parse("# H\n\nalphabet: ab\naa  # square\n\nbaaB\n").unwrap();
        assert_eq!(f.alphabet.rank(), 2);
        assert_eq!(f.generators.len(), 2);
        assert_eq!(f.generators[1], f.alphabet.parse_word("baaB").unwrap());
    }

    #[test]
    fn empty_generator_list() {
        let f = SubgroupFile::parse("alphabet: ab\n").unwrap();
        assert!(f.generators.is_empty());
        assert!(f.subgroup().unwrap().is_trivial());
    }

    #[test]
    fn identity_generator() {
        let f = SubgroupFile::parse("alphabet: ab\n1\n").unwrap();
        assert_eq!(f.generators, vec![Word::identity()]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SubgroupFile::parse("").is_err());
        assert!(SubgroupFile::parse("aa\n").is_err());
        assert!(SubgroupFile::parse("alphabet: aa\n").is_err());
        assert!(SubgroupFile::parse("alphabet: ab\nac\n").is_err());
        assert!(SubgroupFile::parse("alphabet: ab\na-b\n").is_err());
    }

    #[test]
    fn json_input() {
        let f = SubgroupFile::parse_json(r#"{"alphabet":"ab","generators":["aa","baaB"],"verdict":"x"}"#)
            .unwrap();
        assert_eq!(f, SubgroupFile::parse("alphabet: ab\naa\nbaaB\n").unwrap());
        assert!(SubgroupFile::parse_json(r#"{"generators":[]}"#).is_err());
    }
}
