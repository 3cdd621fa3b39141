//! Brute-force ground truth at small radius.
//!
//! Nothing here uses [`crate::conjstab`]; the search relies only on word
//! arithmetic and subgroup membership.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::stallings::Subgroup;
use crate::words::{Alphabet, Word};

pub const DEFAULT_MAX_RADIUS: usize = 8;
pub const LS_MAX_LEN: usize = 3;
pub const LS_MAX_EXP: u32 = 3;

/// A ball of reduced words around the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSpec {
    pub alphabet: Alphabet,
    pub radius: usize,
    pub max_radius: usize,
}

impl BallSpec {
    pub fn new(alphabet: Alphabet, radius: usize) -> Result<Self> {
        Self::with_guard(alphabet, radius, DEFAULT_MAX_RADIUS)
    }

    pub fn with_guard(alphabet: Alphabet, radius: usize, max_radius: usize) -> Result<Self> {
        if radius > max_radius {
            return Err(Error::RadiusGuard {
                radius,
                max: max_radius,
            });
        }
        Ok(Self {
            alphabet,
            radius,
            max_radius,
        })
    }

    /// `1 + Σ_{1 ≤ L ≤ r} 2n(2n−1)^(L−1)`.
    pub fn size(&self) -> usize {
        let letters = self.alphabet.num_letters();
        let mut total = 1;
        let mut layer = letters;
        for _ in 0..self.radius {
            total += layer;
            layer *= letters - 1;
        }
        total
    }
}

/// All reduced words of length at most the radius, in shortlex order.
pub fn enumerate_ball(spec: &BallSpec) -> Result<Vec<Word>> {
    if spec.radius > spec.max_radius {
        return Err(Error::RadiusGuard {
            radius: spec.radius,
            max: spec.max_radius,
        });
    }
    let mut ball = Vec::with_capacity(spec.size());
    ball.push(Word::identity());
    let mut layer = vec![Word::identity()];
    for _ in 0..spec.radius {
        let mut next = Vec::with_capacity(layer.len() * spec.alphabet.num_letters());
        for w in &layer {
            for l in spec.alphabet.letters() {
                if w.last() != Some(l.inverse()) {
                    next.push(w.multiply(&Word::letter(l)));
                }
            }
        }
        ball.extend(next.iter().cloned());
        layer = next;
    }
    Ok(ball)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OracleWitness {
    pub u: Word,
    pub v: Word,
    pub g: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub witness: Option<OracleWitness>,
    pub searched_radius: usize,
    /// Largest conjugator length bound `|V(Γ(H))|·(|V(Γ(H))| + |u| + |g|)`
    /// used; for a witness, the bound for that pair.
    pub h_bound_used: usize,
}

/// Searches for `u ∈ H` and `g ∉ H` in the ball with `v = g⁻¹ug ∈ H` but no
/// `h ∈ H` satisfying `h⁻¹uh = v`. Scans `u` then `g` in shortlex order and
/// returns the first witness.
///
/// Every such `h` lies in `C_F(u)·g = ⟨r⟩·g` (`r` the root of `u`), and if
/// one exists then one of length at most `|V|·(|V| + |u| + |g|)` does: it is
/// the label of a path in the product of `Γ(H)` with the `|r| + |g|`-vertex
/// automaton of `⟨r⟩·g`. The search below tries every `rᵏ·g` up to that
/// length, so a reported witness is exact.
pub fn brute_stability_witness(h: &Subgroup, spec: &BallSpec) -> Result<OracleVerdict> {
    if h.alphabet() != &spec.alphabet {
        return Err(Error::AlphabetMismatch {
            left: h.alphabet().rank(),
            right: spec.alphabet.rank(),
        });
    }
    let ball = enumerate_ball(spec)?;
    let outside: Vec<&Word> = ball.iter().filter(|g| !h.accepts(g)).collect();
    let n = h.graph().num_vertices() as usize;
    let mut h_bound_used = 0;
    for u in ball.iter().filter(|u| !u.is_identity() && h.accepts(u)) {
        let root = u.root()?.root;
        for &g in &outside {
            let v = u.conjugate_by(g);
            if !h.accepts(&v) {
                continue;
            }
            let bound = n * (n + u.len() + g.len());
            h_bound_used = h_bound_used.max(bound);
            if !has_conjugator_within(h, &root, g, bound) {
                return Ok(OracleVerdict {
                    witness: Some(OracleWitness {
                        u: u.clone(),
                        v,
                        g: g.clone(),
                    }),
                    searched_radius: spec.radius,
                    h_bound_used: bound,
                });
            }
        }
    }
    Ok(OracleVerdict {
        witness: None,
        searched_radius: spec.radius,
        h_bound_used,
    })
}

/// Whether some `rᵏ·g` of length at most `bound` lies in `H`.
fn has_conjugator_within(h: &Subgroup, root: &Word, g: &Word, bound: usize) -> bool {
    let (conjugator, core) = root.cyclic_reduce();
    // |rᵏ·g| ≥ 2|c| + |k|·|core| − |g|
    let reach = |k: usize| (2 * conjugator.len() + k * core.len()).saturating_sub(g.len());
    for step in [root.clone(), root.inverse()] {
        let mut candidate = g.clone();
        let mut k = 0;
        while reach(k) <= bound {
            if candidate.len() <= bound && h.accepts(&candidate) {
                return true;
            }
            candidate = step.multiply(&candidate);
            k += 1;
        }
    }
    false
}

/// A solution of `aᵏ·bˡ = cᵐ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsSolution {
    pub a: Word,
    pub k: u32,
    pub b: Word,
    pub l: u32,
    pub c: Word,
    pub m: u32,
}

impl LsSolution {
    pub fn pairwise_commute(&self) -> bool {
        self.a.commutes_with(&self.b)
            && self.a.commutes_with(&self.c)
            && self.b.commutes_with(&self.c)
    }
}

/// Every solution of `aᵏ·bˡ = cᵐ` over rank two with `|a|, |b|, |c| ≤ max_len`
/// and `2 ≤ k, l, m ≤ max_exp`.
pub fn ls_solutions(max_len: usize, max_exp: u32) -> Result<Vec<LsSolution>> {
    if max_len > LS_MAX_LEN {
        return Err(Error::GuardExceeded {
            name: "max_len",
            value: max_len,
            max: LS_MAX_LEN,
        });
    }
    if max_exp > LS_MAX_EXP {
        return Err(Error::GuardExceeded {
            name: "max_exp",
            value: max_exp as usize,
            max: LS_MAX_EXP as usize,
        });
    }
    let alphabet = Alphabet::standard(2)?;
    let words = enumerate_ball(&BallSpec::new(alphabet, max_len)?)?;
    let powers: Vec<(usize, u32, Word)> = words
        .iter()
        .enumerate()
        .flat_map(|(i, w)| (2..=max_exp).map(move |e| (i, e, w.pow(e as i64))))
        .collect();
    let mut by_value: HashMap<&Word, Vec<(usize, u32)>> = HashMap::new();
    for (i, e, p) in &powers {
        by_value.entry(p).or_default().push((*i, *e));
    }
    let mut solutions = Vec::new();
    for (ia, k, ak) in &powers {
        for (ib, l, bl) in &powers {
            let product = ak.multiply(bl);
            for &(ic, m) in by_value.get(&product).into_iter().flatten() {
                solutions.push(LsSolution {
                    a: words[*ia].clone(),
                    k: *k,
                    b: words[*ib].clone(),
                    l: *l,
                    c: words[ic].clone(),
                    m,
                });
            }
        }
    }
    Ok(solutions)
}

/// Solutions of `aᵏ·bˡ = cᵐ` in which `a`, `b`, `c` do not pairwise commute.
pub fn ls_exhaustive_check(max_len: usize, max_exp: u32) -> Result<Vec<LsSolution>> {
    Ok(ls_solutions(max_len, max_exp)?
        .into_iter()
        .filter(|s| !s.pairwise_commute())
        .collect())
}
