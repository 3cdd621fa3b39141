//! Deciding conjugacy stability of a finitely generated subgroup `H ≤ F`.
//!
//! `H` is conjugacy stable when any two elements of `H` that are conjugate in
//! `F` are conjugate by an element of `H`. Equivalently, for every `g ∉ H`
//! and every nontrivial `u ∈ gHg⁻¹ ∩ H`, the set `H ∩ C_F(u)·g` is nonempty.
//! It suffices to test one `g` per double coset `HgH` with
//! `gHg⁻¹ ∩ H ≠ 1`, and in a free group the test for a given `g` reduces to:
//!
//! - `gHg⁻¹ ∩ H` of rank at least two: not stable, since it contains an
//!   element that is not a proper power;
//! - cyclic, generated by `w = rⁿ` with `r` not a proper power: not stable
//!   if `n = 1`, otherwise stable at `g` iff `H ∩ ⟨r⟩·g` is nonempty.
//!
//! Double coset representatives come from the pullback `Γ(H) × Γ(H)`: a
//! pair `(p, q)` gives `g = γ_p·γ_q⁻¹`, where `γ_v` is the spanning-tree label
//! of `v`. Pairs in one component give the same double coset, and the
//! component rank equals the rank of `gHg⁻¹ ∩ H`.

use crate::error::{Error, Result};
use crate::stallings::{coset_intersect, intersection, pullback, CosetAutomaton, Subgroup};
use crate::words::{conjugate_in_free, Word};

/// Candidate counts above this trigger double-coset deduplication.
pub const DEFAULT_DEDUPE_THRESHOLD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRep {
    pub g: Word,
    /// Vertex pair of Γ(H) the representative was read from, when it came
    /// from the pullback.
    pub source: Option<(u32, u32)>,
    /// `gHg⁻¹ ∩ H`.
    pub intersection: Subgroup,
    pub intersection_rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    SkipTrivial,
    FailRankGe2,
    FailPrimitiveGenerator,
    FailEmptyCoset,
    Pass,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::SkipTrivial => "skip_trivial",
            Outcome::FailRankGe2 => "fail_rank_ge_2",
            Outcome::FailPrimitiveGenerator => "fail_primitive_generator",
            Outcome::FailEmptyCoset => "fail_empty_coset",
            Outcome::Pass => "pass",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Outcome::SkipTrivial,
            Outcome::FailRankGe2,
            Outcome::FailPrimitiveGenerator,
            Outcome::FailEmptyCoset,
            Outcome::Pass,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
    }

    pub fn is_failure(self) -> bool {
        matches!(
            self,
            Outcome::FailRankGe2 | Outcome::FailPrimitiveGenerator | Outcome::FailEmptyCoset
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepAnalysis {
    pub rep: CandidateRep,
    pub outcome: Outcome,
    /// Generator `w` of a cyclic intersection.
    pub generator: Option<Word>,
    /// `w = root^exponent`.
    pub root: Option<Word>,
    pub exponent: Option<usize>,
    /// An element of `H ∩ ⟨root⟩·g`, on `Pass`.
    pub witness: Option<Word>,
}

/// `(u, v, g)` with `u, v ∈ H`, `g ∉ H`, `g⁻¹ug = v` and `H ∩ C_F(u)·g = ∅`:
/// `u` and `v` are conjugate in `F` but not in `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub u: Word,
    pub v: Word,
    pub g: Word,
}

impl Certificate {
    fn from_conjugate(u: Word, g: &Word) -> Self {
        Certificate {
            v: u.conjugate_by(g),
            u,
            g: g.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Stable,
    NotStable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Stable => "stable",
            Verdict::NotStable => "not_stable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub analyses: Vec<RepAnalysis>,
    pub certificate: Option<Certificate>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.verdict == Verdict::Stable
    }

    fn stable() -> Self {
        StabilityReport {
            verdict: Verdict::Stable,
            analyses: Vec::new(),
            certificate: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateOptions {
    pub dedupe_threshold: usize,
}

impl Default for CandidateOptions {
    fn default() -> Self {
        Self {
            dedupe_threshold: DEFAULT_DEDUPE_THRESHOLD,
        }
    }
}

/// Double coset representatives `g ∉ H` with `gHg⁻¹ ∩ H ≠ 1`, one per
/// component of `Γ(H) × Γ(H)` of positive rank.
///
/// Every `g'` with `g'Hg'⁻¹ ∩ H ≠ 1` and `g' ∉ H` lies in `H·g·H` for some
/// returned `g`. Within a component the shortlex-least `γ_p·γ_q⁻¹` is used.
pub fn candidate_reps(h: &Subgroup) -> Result<Vec<CandidateRep>> {
    candidate_reps_with(h, CandidateOptions::default())
}

pub fn candidate_reps_with(h: &Subgroup, options: CandidateOptions) -> Result<Vec<CandidateRep>> {
    if h.is_trivial() {
        return Err(Error::TrivialSubgroup);
    }
    let graph = h.graph();
    let (paths, _) = graph.spanning_tree();
    let components = pullback(graph, graph)?;
    let mut reps = Vec::new();
    for component in components.iter().filter(|c| c.rank > 0) {
        let (g, source) = component
            .pairs
            .iter()
            .map(|&(p, q)| {
                let g = paths[p as usize].multiply(&paths[q as usize].inverse());
                (g, (p, q))
            })
            .min()
            .expect("components are nonempty");
        if h.accepts(&g) {
            continue;
        }
        let rep = make_rep(h, g, Some(source))?;
        debug_assert_eq!(rep.intersection_rank, component.rank);
        if rep.intersection_rank > 0 {
            reps.push(rep);
        }
    }
    if reps.len() > options.dedupe_threshold {
        reps = dedupe_double_cosets(h, reps)?;
    }
    Ok(reps)
}

fn make_rep(h: &Subgroup, g: Word, source: Option<(u32, u32)>) -> Result<CandidateRep> {
    let k = intersection(&h.conjugate(&g), h)?;
    Ok(CandidateRep {
        g,
        source,
        intersection_rank: k.rank(),
        intersection: k,
    })
}

/// Keeps the first representative of each double coset `HgH`.
fn dedupe_double_cosets(h: &Subgroup, reps: Vec<CandidateRep>) -> Result<Vec<CandidateRep>> {
    let mut kept: Vec<(CandidateRep, CosetAutomaton)> = Vec::new();
    for rep in reps {
        if kept.iter().any(|(_, d)| d.accepts(&rep.g)) {
            continue;
        }
        let d = CosetAutomaton::double_coset(h, &rep.g, h)?;
        kept.push((rep, d));
    }
    Ok(kept.into_iter().map(|(r, _)| r).collect())
}

/// Whether `x ∈ H·g·H`.
pub fn in_double_coset(h: &Subgroup, g: &Word, x: &Word) -> Result<bool> {
    Ok(CosetAutomaton::double_coset(h, g, h)?.accepts(x))
}

pub fn decide_stability(h: &Subgroup) -> StabilityReport {
    if h.is_trivial() || h.is_full() {
        return StabilityReport::stable();
    }
    let reps = candidate_reps(h).expect("nontrivial subgroup over its own alphabet");
    decide_over(h, reps)
}

/// Runs the per-representative analysis on an explicit representative list.
///
/// The verdict is meaningful when `reps` covers every double coset `HgH`
/// (`g ∉ H`) with nontrivial `gHg⁻¹ ∩ H`; any representatives of those double
/// cosets give the same verdict.
pub fn decide_with_reps(h: &Subgroup, reps: &[Word]) -> Result<StabilityReport> {
    let reps = reps
        .iter()
        .filter(|g| !h.accepts(g))
        .map(|g| {
            h.alphabet().check(g)?;
            make_rep(h, g.clone(), None)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(decide_over(h, reps))
}

fn decide_over(h: &Subgroup, reps: Vec<CandidateRep>) -> StabilityReport {
    let mut certificate = None;
    let analyses = reps
        .into_iter()
        .map(|rep| {
            let (analysis, cert) = analyze(h, rep);
            if certificate.is_none() {
                certificate = cert;
            }
            analysis
        })
        .collect();
    StabilityReport {
        verdict: if certificate.is_some() {
            Verdict::NotStable
        } else {
            Verdict::Stable
        },
        analyses,
        certificate,
    }
}

fn analyze(h: &Subgroup, rep: CandidateRep) -> (RepAnalysis, Option<Certificate>) {
    let mut analysis = RepAnalysis {
        outcome: Outcome::SkipTrivial,
        generator: None,
        root: None,
        exponent: None,
        witness: None,
        rep,
    };
    let g = analysis.rep.g.clone();
    match analysis.rep.intersection_rank {
        0 => (analysis, None),
        1 => {
            let w = analysis.rep.intersection.basis().remove(0);
            let decomposition = w.root().expect("generator of a rank-one subgroup");
            analysis.generator = Some(w.clone());
            analysis.root = Some(decomposition.root.clone());
            analysis.exponent = Some(decomposition.exponent);
            if decomposition.exponent == 1 {
                analysis.outcome = Outcome::FailPrimitiveGenerator;
                return (analysis, Some(Certificate::from_conjugate(w, &g)));
            }
            let centralizer = Subgroup::new(h.alphabet(), vec![decomposition.root])
                .expect("root uses the subgroup alphabet");
            match centralizer_coset_meets(h, &centralizer, &g) {
                Some(witness) => {
                    analysis.outcome = Outcome::Pass;
                    analysis.witness = Some(witness);
                    (analysis, None)
                }
                None => {
                    analysis.outcome = Outcome::FailEmptyCoset;
                    (analysis, Some(Certificate::from_conjugate(w, &g)))
                }
            }
        }
        _ => {
            let basis = analysis.rep.intersection.basis();
            let (x, y) = (&basis[0], &basis[1]);
            // aᵏbˡ = cᵐ with k, l, m ≥ 2 forces a, b, c to commute, so one of
            // these is not a proper power
            let u = [x.clone(), y.clone(), x.multiply(y)]
                .into_iter()
                .find(|c| !c.is_proper_power())
                .expect("a free basis pair never consists of three proper powers");
            analysis.outcome = Outcome::FailRankGe2;
            let centralizer = Subgroup::new(h.alphabet(), vec![u.clone()])
                .expect("basis words use the subgroup alphabet");
            debug_assert!(centralizer_coset_meets(h, &centralizer, &g).is_none());
            (analysis, Some(Certificate::from_conjugate(u, &g)))
        }
    }
}

fn centralizer_coset_meets(h: &Subgroup, centralizer: &Subgroup, g: &Word) -> Option<Word> {
    let coset = CosetAutomaton::coset(centralizer, g).expect("same alphabet");
    coset_intersect(&CosetAutomaton::loops(h), &coset).expect("same alphabet")
}

/// Some `h ∈ H` with `h⁻¹·u·h = v`, if one exists.
pub fn conjugacy_in_subgroup(h: &Subgroup, u: &Word, v: &Word) -> Result<Option<Word>> {
    for x in [u, v] {
        if !h.contains(x)? {
            return Err(Error::NotInSubgroup(h.alphabet().display(x).to_string()));
        }
    }
    if u.is_identity() {
        return Ok(v.is_identity().then(Word::identity));
    }
    let Some(t) = conjugate_in_free(u, v) else {
        return Ok(None);
    };
    let centralizer = Subgroup::new(h.alphabet(), vec![u.root()?.root])?;
    let coset = CosetAutomaton::coset(&centralizer, &t)?;
    coset_intersect(&CosetAutomaton::loops(h), &coset)
}

/// Rechecks every certificate condition from scratch.
pub fn validate_certificate(h: &Subgroup, c: &Certificate) -> bool {
    let alphabet = h.alphabet();
    if [&c.u, &c.v, &c.g].iter().any(|x| alphabet.check(x).is_err()) {
        return false;
    }
    if !h.accepts(&c.u) || !h.accepts(&c.v) || h.accepts(&c.g) {
        return false;
    }
    if c.u.conjugate_by(&c.g) != c.v {
        return false;
    }
    let Ok(root) = c.u.root() else {
        return false;
    };
    let Ok(centralizer) = Subgroup::new(alphabet, vec![root.root]) else {
        return false;
    };
    centralizer_coset_meets(h, &centralizer, &c.g).is_none()
}
