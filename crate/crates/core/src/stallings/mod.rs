//! Stallings graphs (folded inverse automata) for finitely generated
//! subgroups of a free group.
//!
//! A [`StallingsGraph`] stores each edge once, in positive orientation, and
//! derives a dense transition table indexed by signed letter. Reading `x⁻¹`
//! along an edge `p -x-> q` goes from `q` to `p`, so the graph is involutive
//! by construction. After folding, vertices are renumbered in breadth-first
//! order from the basepoint, exploring letters in the order `a, A, b, B, ...`;
//! equal subgroups therefore produce identical graphs.

mod coset;
mod dot;
mod fold;
mod pullback;
mod subgroup;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

pub use coset::{coset_automaton, coset_intersect, CosetAutomaton};
pub use dot::to_dot;
pub use fold::{fold, fold_tracking};
pub use pullback::{intersection, pullback, pullback_graph, PullbackComponent};
pub use subgroup::{build_graph, conjugate_subgroup, Subgroup};

pub(crate) const NONE: u32 = u32::MAX;

/// A positively oriented labeled edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: u32,
    pub label: Letter,
    pub target: u32,
}

/// A possibly unfolded involutive labeled graph with a basepoint.
///
/// Used as input to [`fold`]. `identifications` lists vertex pairs that the
/// fold must merge (for example the two ends of an empty path).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub alphabet: Alphabet,
    pub num_vertices: u32,
    pub basepoint: u32,
    pub edges: Vec<Edge>,
    pub identifications: Vec<(u32, u32)>,
}

impl LabeledGraph {
    /// One vertex, which is the basepoint.
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            num_vertices: 1,
            basepoint: 0,
            edges: Vec::new(),
            identifications: Vec::new(),
        }
    }

    /// The bouquet of subdivided loops spelling each generator at the basepoint.
    pub fn bouquet(alphabet: Alphabet, gens: &[Word]) -> Self {
        let mut g = Self::new(alphabet);
        for w in gens {
            g.add_path(0, w, Some(0));
        }
        g
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.num_vertices += 1;
        self.num_vertices - 1
    }

    pub fn add_edge(&mut self, source: u32, label: Letter, target: u32) {
        let edge = if label.is_inverse() {
            Edge {
                source: target,
                label: label.inverse(),
                target: source,
            }
        } else {
            Edge {
                source,
                label,
                target,
            }
        };
        self.edges.push(edge);
    }

    /// Adds a path reading `word` from `from`, ending at `to` (or at a fresh
    /// vertex when `to` is `None`). Returns the end vertex.
    pub fn add_path(&mut self, from: u32, word: &Word, to: Option<u32>) -> u32 {
        let letters = word.letters();
        if letters.is_empty() {
            return match to {
                Some(t) => {
                    if t != from {
                        self.identifications.push((from, t));
                    }
                    t
                }
                None => from,
            };
        }
        let mut current = from;
        for (i, &l) in letters.iter().enumerate() {
            let next = match to {
                Some(t) if i + 1 == letters.len() => t,
                _ => self.add_vertex(),
            };
            self.add_edge(current, l, next);
            current = next;
        }
        current
    }

    /// Copies a folded graph into this one, returning the vertex offset.
    pub fn append(&mut self, graph: &StallingsGraph) -> u32 {
        let offset = self.num_vertices;
        self.num_vertices += graph.num_vertices();
        self.edges.extend(graph.edges().iter().map(|e| Edge {
            source: e.source + offset,
            label: e.label,
            target: e.target + offset,
        }));
        offset
    }
}

/// A folded, connected, pointed graph with canonical vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    alphabet: Alphabet,
    basepoint: u32,
    num_vertices: u32,
    edges: Vec<Edge>,
    table: Vec<u32>,
}

impl StallingsGraph {
    /// The one-vertex graph of the trivial subgroup.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let letters = alphabet.num_letters();
        Self {
            alphabet,
            basepoint: 0,
            num_vertices: 1,
            edges: Vec::new(),
            table: vec![NONE; letters],
        }
    }

    /// One vertex with a loop for every generator: the whole free group.
    pub fn rose(alphabet: Alphabet) -> Self {
        let table = vec![0; alphabet.num_letters()];
        Self::from_table(alphabet, 0, 1, table)
    }

    /// Builds from a deterministic, involutive transition table. Vertex
    /// numbering is taken as given.
    pub(crate) fn from_table(
        alphabet: Alphabet,
        basepoint: u32,
        num_vertices: u32,
        table: Vec<u32>,
    ) -> Self {
        let width = alphabet.num_letters();
        debug_assert_eq!(table.len(), num_vertices as usize * width);
        let mut edges = Vec::new();
        for v in 0..num_vertices {
            for code in (0..width as u32).step_by(2) {
                let t = table[v as usize * width + code as usize];
                if t != NONE {
                    debug_assert_eq!(table[t as usize * width + code as usize + 1], v);
                    edges.push(Edge {
                        source: v,
                        label: Letter::from_code(code),
                        target: t,
                    });
                }
            }
        }
        Self {
            alphabet,
            basepoint,
            num_vertices,
            edges,
            table,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn basepoint(&self) -> u32 {
        self.basepoint
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Positive edges sorted by `(source, label)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub(crate) fn width(&self) -> usize {
        self.alphabet.num_letters()
    }

    pub fn target(&self, v: u32, letter: Letter) -> Option<u32> {
        if letter.index() >= self.alphabet.rank() {
            return None;
        }
        let t = self.table[v as usize * self.width() + letter.code() as usize];
        (t != NONE).then_some(t)
    }

    /// Follows `word` from `v`; `None` if the path leaves the graph.
    pub fn trace(&self, v: u32, word: &Word) -> Option<u32> {
        word.letters()
            .iter()
            .try_fold(v, |at, &l| self.target(at, l))
    }

    pub fn degree(&self, v: u32) -> usize {
        let row = &self.table[v as usize * self.width()..(v as usize + 1) * self.width()];
        row.iter().filter(|&&t| t != NONE).count()
    }

    /// `edges − vertices + 1`: the rank of the fundamental group.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.num_vertices as usize
    }

    pub fn is_rose(&self) -> bool {
        self.num_vertices == 1 && self.edges.len() == self.alphabet.rank()
    }

    /// Re-roots at `v` and renumbers canonically.
    pub fn rebased(&self, v: u32) -> StallingsGraph {
        canonicalize(self, v).0
    }

    pub fn to_labeled(&self) -> LabeledGraph {
        LabeledGraph {
            alphabet: self.alphabet.clone(),
            num_vertices: self.num_vertices,
            basepoint: self.basepoint,
            edges: self.edges.clone(),
            identifications: Vec::new(),
        }
    }

    /// Labels of breadth-first spanning-tree paths from the basepoint, and
    /// for each vertex the signed letter by which it was first reached.
    pub(crate) fn spanning_tree(&self) -> (Vec<Word>, Vec<Option<(u32, Letter)>>) {
        let n = self.num_vertices as usize;
        let mut labels: Vec<Option<Word>> = vec![None; n];
        let mut parent = vec![None; n];
        labels[self.basepoint as usize] = Some(Word::identity());
        let mut queue = VecDeque::from([self.basepoint]);
        while let Some(v) = queue.pop_front() {
            for l in self.alphabet.letters() {
                if let Some(t) = self.target(v, l) {
                    if labels[t as usize].is_none() {
                        let path = labels[v as usize]
                            .as_ref()
                            .map(|p| p.multiply(&Word::letter(l)));
                        labels[t as usize] = path;
                        parent[t as usize] = Some((v, l));
                        queue.push_back(t);
                    }
                }
            }
        }
        let labels = labels
            .into_iter()
            .map(|l| l.expect("stallings graph is connected"))
            .collect();
        (labels, parent)
    }

    /// Free basis of the fundamental group at the basepoint: one word per
    /// edge outside the breadth-first spanning tree.
    pub fn basis(&self) -> Vec<Word> {
        let (paths, parent) = self.spanning_tree();
        self.edges
            .iter()
            .filter(|e| {
                parent[e.target as usize] != Some((e.source, e.label))
                    && parent[e.source as usize] != Some((e.target, e.label.inverse()))
            })
            .map(|e| {
                paths[e.source as usize]
                    .multiply(&Word::letter(e.label))
                    .multiply(&paths[e.target as usize].inverse())
            })
            .collect()
    }
}

/// Renumbers the vertices reachable from `root` in breadth-first order,
/// making `root` the basepoint. Returns the map from old to new ids.
pub(crate) fn canonicalize(
    graph: &StallingsGraph,
    root: u32,
) -> (StallingsGraph, Vec<Option<u32>>) {
    let (order, map) = bfs_order(graph.num_vertices, graph.width(), &graph.table, root);
    let width = graph.width();
    let mut table = vec![NONE; order.len() * width];
    for (new, &old) in order.iter().enumerate() {
        for code in 0..width {
            let t = graph.table[old as usize * width + code];
            if t != NONE {
                table[new * width + code] = map[t as usize].expect("reachable");
            }
        }
    }
    (
        StallingsGraph::from_table(graph.alphabet.clone(), 0, order.len() as u32, table),
        map,
    )
}

pub(crate) fn bfs_order(
    num_vertices: u32,
    width: usize,
    table: &[u32],
    root: u32,
) -> (Vec<u32>, Vec<Option<u32>>) {
    let mut map = vec![None; num_vertices as usize];
    let mut order = vec![root];
    map[root as usize] = Some(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head] as usize;
        head += 1;
        for code in 0..width {
            let t = table[v * width + code];
            if t != NONE && map[t as usize].is_none() {
                map[t as usize] = Some(order.len() as u32);
                order.push(t);
            }
        }
    }
    (order, map)
}

/// Repeatedly removes degree-one vertices other than the basepoint.
pub fn core_trim(graph: &StallingsGraph) -> StallingsGraph {
    core_trim_keeping(graph, &[graph.basepoint]).0
}

/// Like [`core_trim`] but never removes any vertex in `keep`. The result is
/// rooted at the basepoint; the returned map sends old ids to new ones.
pub fn core_trim_keeping(
    graph: &StallingsGraph,
    keep: &[u32],
) -> (StallingsGraph, Vec<Option<u32>>) {
    let n = graph.num_vertices as usize;
    let width = graph.width();
    let mut table = graph.table.clone();
    let mut degree: Vec<usize> = (0..n as u32).map(|v| graph.degree(v)).collect();
    let kept = |v: usize| v as u32 == graph.basepoint || keep.contains(&(v as u32));
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1 && !kept(v)).collect();
    while let Some(v) = stack.pop() {
        if degree[v] != 1 {
            continue;
        }
        let code = (0..width)
            .find(|&c| table[v * width + c] != NONE)
            .expect("degree one");
        let u = table[v * width + code] as usize;
        table[v * width + code] = NONE;
        table[u * width + (code ^ 1)] = NONE;
        degree[v] = 0;
        degree[u] -= 1;
        if degree[u] == 1 && !kept(u) {
            stack.push(u);
        }
    }
    let pruned =
        StallingsGraph::from_table(graph.alphabet.clone(), graph.basepoint, graph.num_vertices, table);
    canonicalize(&pruned, graph.basepoint)
}

pub(crate) fn check_same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            left: a.rank(),
            right: b.rank(),
        })
    }
}

pub fn rank(graph: &StallingsGraph) -> usize {
    graph.rank()
}
