//! Stallings folding with union-find and a worklist of label clashes.

use super::{canonicalize, LabeledGraph, StallingsGraph, NONE};

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grandparent = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grandparent;
            x = grandparent;
        }
        x
    }

    /// Merges two roots; returns `(survivor, absorbed)`.
    fn union_roots(&mut self, a: u32, b: u32) -> (u32, u32) {
        let (big, small) = if self.size[a as usize] >= self.size[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        (big, small)
    }
}

struct Folder {
    width: usize,
    sets: UnionFind,
    // outgoing half-edges per class representative; targets may be stale ids
    out: Vec<u32>,
    clashes: Vec<(u32, u32)>,
}

impl Folder {
    fn new(num_vertices: usize, width: usize) -> Self {
        Self {
            width,
            sets: UnionFind::new(num_vertices),
            out: vec![NONE; num_vertices * width],
            clashes: Vec::new(),
        }
    }

    fn insert(&mut self, v: u32, code: usize, target: u32) {
        let v = self.sets.find(v);
        let slot = &mut self.out[v as usize * self.width + code];
        if *slot == NONE {
            *slot = target;
        } else {
            self.clashes.push((*slot, target));
        }
    }

    fn add_edge(&mut self, source: u32, code: usize, target: u32) {
        self.insert(source, code, target);
        self.insert(target, code ^ 1, source);
    }

    fn run(&mut self) {
        while let Some((x, y)) = self.clashes.pop() {
            let (x, y) = (self.sets.find(x), self.sets.find(y));
            if x == y {
                continue;
            }
            let (keep, absorbed) = self.sets.union_roots(x, y);
            for code in 0..self.width {
                let idx = absorbed as usize * self.width + code;
                let t = std::mem::replace(&mut self.out[idx], NONE);
                if t != NONE {
                    self.insert(keep, code, t);
                }
            }
        }
    }
}

/// Folds `graph` into a deterministic graph recognizing the same subgroup.
///
/// Vertices not connected to the basepoint are dropped.
pub fn fold(graph: &LabeledGraph) -> StallingsGraph {
    fold_tracking(graph, &[]).0
}

/// Folds `graph` and reports where each vertex of `tracked` ended up.
pub fn fold_tracking(graph: &LabeledGraph, tracked: &[u32]) -> (StallingsGraph, Vec<Option<u32>>) {
    let n = graph.num_vertices as usize;
    let width = graph.alphabet.num_letters();
    let mut folder = Folder::new(n, width);
    for e in &graph.edges {
        folder.add_edge(e.source, e.label.code() as usize, e.target);
    }
    folder.clashes.extend(graph.identifications.iter().copied());
    folder.run();

    // compress classes to consecutive ids before the canonical renumbering
    let mut class_id = vec![NONE; n];
    let mut reps = Vec::new();
    for v in 0..n as u32 {
        let r = folder.sets.find(v);
        if class_id[r as usize] == NONE {
            class_id[r as usize] = reps.len() as u32;
            reps.push(r);
        }
    }
    let mut table = vec![NONE; reps.len() * width];
    for (i, &r) in reps.iter().enumerate() {
        for code in 0..width {
            let t = folder.out[r as usize * width + code];
            if t != NONE {
                table[i * width + code] = class_id[folder.sets.find(t) as usize];
            }
        }
    }
    let root = class_id[folder.sets.find(graph.basepoint) as usize];
    let merged = StallingsGraph::from_table(graph.alphabet.clone(), root, reps.len() as u32, table);
    let (folded, map) = canonicalize(&merged, root);
    let positions = tracked
        .iter()
        .map(|&v| map[class_id[folder.sets.find(v) as usize] as usize])
        .collect();
    (folded, positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Alphabet, Letter, Word};

    fn ab() -> Alphabet {
        Alphabet::standard(2).unwrap()
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    #[test]
    fn double_loop_folds_to_single_loop() {
        let mut g = LabeledGraph::new(ab());
        g.add_edge(0, Letter::new(0, true), 0);
        g.add_edge(0, Letter::new(0, true), 0);
        let folded = fold(&g);
        assert_eq!(folded.num_vertices(), 1);
        assert_eq!(folded.num_edges(), 1);
    }

    #[test]
    fn folded_graph_is_fixed() {
        let g = fold(&LabeledGraph::bouquet(ab(), &[w("aa"), w("baaB")]));
        assert_eq!(fold(&g.to_labeled()), g);
    }

    #[test]
    fn bouquet_of_ab_and_a_b_inverse() {
        // ab and aB share the prefix a: two vertices, a-edge plus b-loop
        let g = fold(&LabeledGraph::bouquet(ab(), &[w("ab"), w("aB")]));
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.rank(), 2);
        assert_eq!(g.trace(0, &w("abbA")), Some(0));
        assert_eq!(g.trace(0, &w("abA")), None);
        assert_eq!(g.trace(0, &w("a")), Some(1));
    }

    #[test]
    fn identification_merges_endpoints() {
        let mut g = LabeledGraph::new(ab());
        let end = g.add_path(0, &w("a"), None);
        g.identifications.push((0, end));
        let folded = fold(&g);
        assert_eq!(folded.num_vertices(), 1);
        assert_eq!(folded.edges().len(), 1);
    }

    #[test]
    fn tracking_follows_merges() {
        let mut g = LabeledGraph::new(ab());
        let x = g.add_path(0, &w("ab"), None);
        let y = g.add_path(0, &w("ab"), None);
        let (folded, pos) = fold_tracking(&g, &[x, y, 0]);
        assert_eq!(folded.num_vertices(), 3);
        assert_eq!(pos, vec![Some(2), Some(2), Some(0)]);
    }
}
