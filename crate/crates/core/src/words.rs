//! Elements of a free group of finite rank, stored as freely reduced words.
//!
//! Generators are written with lowercase letters and their inverses with the
//! matching uppercase letter, so `abA` is `a b a⁻¹`. The identity prints as
//! `1` in human-readable output; both `1` and the empty string parse to it.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The free generators of a free group, named by distinct lowercase letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<char>,
}

impl Alphabet {
    pub fn new(names: impl IntoIterator<Item = char>) -> Result<Self> {
        let names: Vec<char> = names.into_iter().collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must have rank >= 1".into()));
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!(
                    "generator name {c:?} is not a lowercase ASCII letter"
                )));
            }
            if names[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator {c:?}")));
            }
        }
        Ok(Self { names })
    }

    /// `a, b, c, ...` up to the given rank.
    pub fn standard(rank: usize) -> Result<Self> {
        if rank > 26 {
            return Err(Error::InvalidAlphabet(format!("rank {rank} exceeds 26 letters")));
        }
        Self::new((b'a'..b'a' + rank as u8).map(char::from))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars().filter(|c| !c.is_whitespace()))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    /// Number of signed letters, i.e. twice the rank.
    pub fn num_letters(&self) -> usize {
        2 * self.rank()
    }

    /// All signed letters in canonical order `a < A < b < B < ...`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.num_letters() as u32).map(Letter::from_code)
    }

    pub fn letter(&self, symbol: char) -> Result<Letter> {
        let lower = symbol.to_ascii_lowercase();
        let index = self
            .names
            .iter()
            .position(|&c| c == lower)
            .ok_or(Error::UnknownSymbol(symbol))?;
        Ok(Letter::new(index, symbol.is_ascii_lowercase()))
    }

    pub fn symbol(&self, letter: Letter) -> char {
        let c = self.names[letter.index()];
        if letter.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    /// Parses a word, applying free reduction.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::identity());
        }
        let letters = text
            .chars()
            .map(|c| self.letter(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(letters))
    }

    /// Checks that every letter of `word` belongs to this alphabet.
    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters.iter().find(|l| l.index() >= self.rank()) {
            Some(l) => Err(Error::LetterOutOfRange {
                index: l.index(),
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Human-readable rendering (`1` for the identity).
    pub fn display<'a>(&'a self, word: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            alphabet: self,
            word,
            identity: "1",
        }
    }

    /// Machine rendering (empty string for the identity).
    pub fn format_machine(&self, word: &Word) -> String {
        word.letters.iter().map(|&l| self.symbol(l)).collect()
    }
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
    identity: &'static str,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str(self.identity);
        }
        for &l in &self.word.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

/// A generator or its inverse, encoded as `2 * index + (inverse as u32)`.
///
/// The encoding orders letters as `a < A < b < B < ...` and is also the
/// column index used by transition tables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        Letter(2 * index as u32 + u32::from(!positive))
    }

    pub fn from_code(code: u32) -> Self {
        Letter(code)
    }

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn sign(self) -> i8 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// The positive letter with the same generator.
    pub fn positive(self) -> Self {
        Letter(self.0 & !1)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = char::from(b'a' + (self.index() % 26) as u8);
        if self.is_inverse() {
            write!(f, "{}", c.to_ascii_uppercase())
        } else {
            write!(f, "{c}")
        }
    }
}

/// A freely reduced word. The empty word is the identity.
///
/// Words compare in shortlex order: shorter words first, then
/// lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Freely reduces an arbitrary letter sequence. No alphabet check.
    pub fn from_letters(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let overlap = self
            .letters
            .iter()
            .rev()
            .zip(&other.letters)
            .take_while(|(x, y)| x.inverse() == **y)
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * overlap);
        letters.extend_from_slice(&self.letters[..self.len() - overlap]);
        letters.extend_from_slice(&other.letters[overlap..]);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        (0..exponent.unsigned_abs()).fold(Word::identity(), |acc, _| acc.multiply(&base))
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate_by(&self, t: &Word) -> Word {
        t.inverse().multiply(self).multiply(t)
    }

    pub fn commutes_with(&self, other: &Word) -> bool {
        self.multiply(other) == other.multiply(self)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (
            Word {
                letters: self.letters[..k].to_vec(),
            },
            Word {
                letters: self.letters[k..n - k].to_vec(),
            },
        )
    }

    /// Maximal-exponent root `self = root^exponent`; fails on the identity.
    pub fn root(&self) -> Result<RootDecomposition> {
        if self.is_identity() {
            return Err(Error::EmptyWord);
        }
        let (conjugator, core) = self.cyclic_reduce();
        let n = core.len();
        // decreasing exponent, so the first period that tiles the core wins
        let period = (1..=n)
            .filter(|p| n % p == 0)
            .find(|&p| core.letters.iter().enumerate().all(|(i, l)| *l == core.letters[i % p]))
            .unwrap_or(n);
        let primitive = Word {
            letters: core.letters[..period].to_vec(),
        };
        Ok(RootDecomposition {
            root: conjugator.multiply(&primitive).multiply(&conjugator.inverse()),
            exponent: n / period,
        })
    }

    pub fn is_proper_power(&self) -> bool {
        self.root().map(|r| r.exponent > 1).unwrap_or(false)
    }
}

/// `root^exponent` with `root` not a proper power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
}

/// Free reduction of a raw letter sequence, checked against `alphabet`.
pub fn reduce(alphabet: &Alphabet, raw: &[Letter]) -> Result<Word> {
    if let Some(l) = raw.iter().find(|l| l.index() >= alphabet.rank()) {
        return Err(Error::LetterOutOfRange {
            index: l.index(),
            rank: alphabet.rank(),
        });
    }
    Ok(Word::from_letters(raw.iter().copied()))
}

pub fn multiply(u: &Word, v: &Word) -> Word {
    u.multiply(v)
}

pub fn invert(u: &Word) -> Word {
    u.inverse()
}

pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    w.cyclic_reduce()
}

pub fn root(w: &Word) -> Result<RootDecomposition> {
    w.root()
}

/// Generator of the centralizer `C_F(w) = ⟨root(w)⟩`; fails on the identity.
pub fn centralizer_generator(w: &Word) -> Result<Word> {
    Ok(w.root()?.root)
}

/// Finds `t` with `t⁻¹ · u · t = v`, if `u` and `v` are conjugate in the free group.
pub fn conjugate_in_free(u: &Word, v: &Word) -> Option<Word> {
    if u == v {
        return Some(Word::identity());
    }
    let (cu, core_u) = u.cyclic_reduce();
    let (cv, core_v) = v.cyclic_reduce();
    if core_u.len() != core_v.len() {
        return None;
    }
    let n = core_u.len();
    let rotation = (0..n.max(1)).find(|&k| {
        (0..n).all(|i| core_u.letters[(k + i) % n] == core_v.letters[i])
    })?;
    // core_v = s⁻¹ core_u s where s is the first `rotation` letters of core_u
    let s = Word {
        letters: core_u.letters[..rotation].to_vec(),
    };
    let t = cu.multiply(&s).multiply(&cv.inverse());
    debug_assert_eq!(u.conjugate_by(&t), *v);
    Some(t)
}
