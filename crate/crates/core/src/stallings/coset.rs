//! Automata for cosets `S·g` and double cosets `A·g·B`, and emptiness of
//! their intersections.

use std::collections::VecDeque;

use super::{
    check_same_alphabet, core_trim_keeping, fold_tracking, LabeledGraph, StallingsGraph, Subgroup,
    NONE,
};
use crate::error::Result;
use crate::words::{Letter, Word};

/// A folded graph with distinguished start and accept vertices. The reduced
/// labels of paths from `start` to `accept` are exactly the reduced words of
/// one (double) coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetAutomaton {
    graph: StallingsGraph,
    accept: u32,
}

impl CosetAutomaton {
    /// The subgroup itself: start and accept at the basepoint.
    pub fn loops(h: &Subgroup) -> Self {
        Self {
            graph: h.graph().clone(),
            accept: h.graph().basepoint(),
        }
    }

    /// The right coset `S·g`.
    pub fn coset(s: &Subgroup, g: &Word) -> Result<Self> {
        s.alphabet().check(g)?;
        let mut raw = s.graph().to_labeled();
        let end = raw.add_path(raw.basepoint, g, None);
        Ok(Self::fold_pointed(&raw, end))
    }

    /// The double coset `A·g·B`: a copy of Γ(A) joined to a copy of Γ(B) by
    /// a path spelling `g`.
    pub fn double_coset(left: &Subgroup, g: &Word, right: &Subgroup) -> Result<Self> {
        left.check_alphabet(right.alphabet())?;
        left.alphabet().check(g)?;
        let mut raw = left.graph().to_labeled();
        let offset = raw.append(right.graph());
        let right_base = offset + right.graph().basepoint();
        raw.add_path(raw.basepoint, g, Some(right_base));
        Ok(Self::fold_pointed(&raw, right_base))
    }

    fn fold_pointed(raw: &LabeledGraph, accept: u32) -> Self {
        let (folded, pos) = fold_tracking(raw, &[accept]);
        let accept = pos[0].expect("accept vertex is connected to start");
        let (graph, map) = core_trim_keeping(&folded, &[accept]);
        let accept = map[accept as usize].expect("kept vertex survives trimming");
        Self { graph, accept }
    }

    pub fn graph(&self) -> &StallingsGraph {
        &self.graph
    }

    pub fn start(&self) -> u32 {
        self.graph.basepoint()
    }

    pub fn accept(&self) -> u32 {
        self.accept
    }

    /// Whether the reduced word `w` labels a path from start to accept.
    pub fn accepts(&self, w: &Word) -> bool {
        self.graph.trace(self.start(), w) == Some(self.accept)
    }
}

pub fn coset_automaton(s: &Subgroup, g: &Word) -> Result<CosetAutomaton> {
    CosetAutomaton::coset(s, g)
}

/// A shortest word accepted by both automata, if one exists.
///
/// Breadth-first search over the product automaton, expanding letters in the
/// order `a, A, b, B, ...`, so ties break toward the shortlex-least witness.
/// The product of folded graphs is folded, so the witness is reduced.
pub fn coset_intersect(a: &CosetAutomaton, b: &CosetAutomaton) -> Result<Option<Word>> {
    let (ga, gb) = (&a.graph, &b.graph);
    check_same_alphabet(ga.alphabet(), gb.alphabet())?;
    let nb = gb.num_vertices() as usize;
    let total = ga.num_vertices() as usize * nb;
    let start = a.start() as usize * nb + b.start() as usize;
    let goal = a.accept() as usize * nb + b.accept() as usize;
    // predecessor pair and letter for every reached pair
    let mut seen: Vec<(u32, u32)> = vec![(NONE, NONE); total];
    seen[start] = (start as u32, NONE);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            let mut letters = Vec::new();
            let mut at = cur;
            while at != start {
                let (prev, code) = seen[at];
                letters.push(Letter::from_code(code));
                at = prev as usize;
            }
            letters.reverse();
            return Ok(Some(Word::from_letters(letters)));
        }
        let (p, q) = ((cur / nb) as u32, (cur % nb) as u32);
        for l in ga.alphabet().letters() {
            if let (Some(p2), Some(q2)) = (ga.target(p, l), gb.target(q, l)) {
                let next = p2 as usize * nb + q2 as usize;
                if seen[next].0 == NONE {
                    seen[next] = (cur as u32, l.code());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::standard(2).unwrap()
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    fn sub(gens: &[&str]) -> Subgroup {
        Subgroup::new(&ab(), gens.iter().map(|s| w(s)).collect()).unwrap()
    }

    #[test]
    fn coset_of_member_is_the_subgroup() {
        let c = CosetAutomaton::coset(&sub(&["a"]), &w("a")).unwrap();
        assert_eq!(c.start(), c.accept());
        assert!(c.accepts(&w("")));
        assert!(c.accepts(&w("aaa")));
    }

    #[test]
    fn odd_powers() {
        let c = CosetAutomaton::coset(&sub(&["aa"]), &w("a")).unwrap();
        assert_eq!(c.graph().num_vertices(), 2);
        assert_ne!(c.start(), c.accept());
        for k in -5i64..=5 {
            assert_eq!(c.accepts(&w("a").pow(k)), k % 2 != 0, "a^{k}");
        }
        assert!(!c.accepts(&w("b")));
    }

    #[test]
    fn conjugate_coset_language() {
        // ⟨b a b⁻¹⟩·b = { b aᵏ }
        let c = CosetAutomaton::coset(&sub(&["baB"]), &w("b")).unwrap();
        for k in -4i64..=4 {
            assert!(c.accepts(&w("b").multiply(&w("a").pow(k))));
        }
        assert!(!c.accepts(&w("")));
        assert!(!c.accepts(&w("ab")));
    }

    #[test]
    fn intersect_examples() {
        let h = CosetAutomaton::loops(&sub(&["aa"]));
        let c = CosetAutomaton::coset(&sub(&["a"]), &w("a")).unwrap();
        assert_eq!(coset_intersect(&h, &c).unwrap(), Some(w("")));

        let h = CosetAutomaton::loops(&sub(&["aa", "baaB"]));
        let c = CosetAutomaton::coset(&sub(&["baB"]), &w("b")).unwrap();
        assert_eq!(coset_intersect(&h, &c).unwrap(), None);

        let t = CosetAutomaton::loops(&sub(&[]));
        assert_eq!(coset_intersect(&t, &t).unwrap(), Some(w("")));
    }

    #[test]
    fn double_coset_membership() {
        let h = sub(&["aa"]);
        let d = CosetAutomaton::double_coset(&h, &w("b"), &h).unwrap();
        assert!(d.accepts(&w("aabAA")));
        assert!(d.accepts(&w("b")));
        assert!(!d.accepts(&w("abA")));
        let d = CosetAutomaton::double_coset(&h, &w(""), &h).unwrap();
        assert_eq!(d.start(), d.accept());
    }
}
