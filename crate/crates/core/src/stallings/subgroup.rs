use super::{check_same_alphabet, core_trim, fold, LabeledGraph, StallingsGraph};
use crate::error::Result;
use crate::words::{Alphabet, Word};

/// A finitely generated subgroup together with its canonical core graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    generators: Vec<Word>,
    graph: StallingsGraph,
}

impl Subgroup {
    pub fn new(alphabet: &Alphabet, generators: Vec<Word>) -> Result<Self> {
        for g in &generators {
            alphabet.check(g)?;
        }
        let graph = core_trim(&fold(&LabeledGraph::bouquet(alphabet.clone(), &generators)));
        Ok(Self { generators, graph })
    }

    /// Wraps a folded graph; the generators are its spanning-tree basis.
    pub fn from_graph(graph: StallingsGraph) -> Self {
        let graph = core_trim(&graph);
        Self {
            generators: graph.basis(),
            graph,
        }
    }

    pub fn trivial(alphabet: &Alphabet) -> Self {
        Self {
            generators: Vec::new(),
            graph: StallingsGraph::trivial(alphabet.clone()),
        }
    }

    pub fn full(alphabet: &Alphabet) -> Self {
        Self::from_graph(StallingsGraph::rose(alphabet.clone()))
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.graph.alphabet()
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn graph(&self) -> &StallingsGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn is_trivial(&self) -> bool {
        self.graph.num_edges() == 0
    }

    pub fn is_full(&self) -> bool {
        self.graph.is_rose()
    }

    /// Membership by tracing a closed loop at the basepoint.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.alphabet().check(w)?;
        Ok(self.accepts(w))
    }

    /// Unchecked membership; foreign letters make the trace fail.
    pub fn accepts(&self, w: &Word) -> bool {
        self.graph.trace(self.graph.basepoint(), w) == Some(self.graph.basepoint())
    }

    pub fn basis(&self) -> Vec<Word> {
        self.graph.basis()
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Subgroup {
        let ginv = g.inverse();
        let gens: Vec<Word> = self
            .generators
            .iter()
            .map(|h| g.multiply(h).multiply(&ginv))
            .collect();
        let graph = core_trim(&fold(&LabeledGraph::bouquet(self.alphabet().clone(), &gens)));
        Subgroup {
            generators: gens,
            graph,
        }
    }

    /// Same subgroup (as a set), regardless of generators.
    pub fn same_subgroup(&self, other: &Subgroup) -> bool {
        self.graph == other.graph
    }

    pub(crate) fn check_alphabet(&self, other: &Alphabet) -> Result<()> {
        check_same_alphabet(self.alphabet(), other)
    }
}

pub fn build_graph(gens: Vec<Word>, alphabet: &Alphabet) -> Result<Subgroup> {
    Subgroup::new(alphabet, gens)
}

pub fn conjugate_subgroup(h: &Subgroup, g: &Word) -> Result<Subgroup> {
    h.alphabet().check(g)?;
    Ok(h.conjugate(g))
}
