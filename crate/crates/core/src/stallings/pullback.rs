//! Fiber products of Stallings graphs and subgroup intersection.

use super::{check_same_alphabet, core_trim, Edge, StallingsGraph, Subgroup, NONE};
use crate::error::Result;
use crate::words::Letter;

/// One connected component of the product `A ×_X B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackComponent {
    /// Vertex pairs in breadth-first discovery order from the first pair.
    pub pairs: Vec<(u32, u32)>,
    /// Positive edges, as `(pair, label, pair)` with pair indices into `pairs`.
    pub edges: Vec<Edge>,
    /// `edges − vertices + 1`; zero for trees.
    pub rank: usize,
}

/// All components of the product graph. Components are listed in the order
/// their smallest pair `(p, q)` appears in lexicographic order.
pub fn pullback(a: &StallingsGraph, b: &StallingsGraph) -> Result<Vec<PullbackComponent>> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    let nb = b.num_vertices() as usize;
    let total = a.num_vertices() as usize * nb;
    let mut local = vec![NONE; total];
    let mut components = Vec::new();
    for start in 0..total {
        if local[start] != NONE {
            continue;
        }
        let mut pairs = vec![start];
        local[start] = 0;
        let mut edges = Vec::new();
        let mut head = 0;
        while head < pairs.len() {
            let cur = pairs[head];
            let (p, q) = ((cur / nb) as u32, (cur % nb) as u32);
            for l in a.alphabet().letters() {
                let (Some(p2), Some(q2)) = (a.target(p, l), b.target(q, l)) else {
                    continue;
                };
                let next = p2 as usize * nb + q2 as usize;
                if local[next] == NONE {
                    local[next] = pairs.len() as u32;
                    pairs.push(next);
                }
                if !l.is_inverse() {
                    edges.push(Edge {
                        source: head as u32,
                        label: l,
                        target: local[next],
                    });
                }
            }
            head += 1;
        }
        let rank = edges.len() + 1 - pairs.len();
        components.push(PullbackComponent {
            pairs: pairs
                .into_iter()
                .map(|x| ((x / nb) as u32, (x % nb) as u32))
                .collect(),
            edges,
            rank,
        });
    }
    Ok(components)
}

/// The component of `(pa, pb)` as a folded graph based there, trimmed to its
/// core. Only that component is explored.
pub fn pullback_graph(
    a: &StallingsGraph,
    b: &StallingsGraph,
    pa: u32,
    pb: u32,
) -> Result<StallingsGraph> {
    check_same_alphabet(a.alphabet(), b.alphabet())?;
    let width = a.width();
    let nb = b.num_vertices() as usize;
    let mut index = std::collections::HashMap::new();
    let mut pairs = vec![(pa, pb)];
    index.insert(pa as usize * nb + pb as usize, 0u32);
    let mut table: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        table.extend(std::iter::repeat_n(NONE, width));
        for code in 0..width as u32 {
            let l = Letter::from_code(code);
            if let (Some(p2), Some(q2)) = (a.target(p, l), b.target(q, l)) {
                let key = p2 as usize * nb + q2 as usize;
                let id = *index.entry(key).or_insert_with(|| {
                    pairs.push((p2, q2));
                    pairs.len() as u32 - 1
                });
                table[head * width + code as usize] = id;
            }
        }
        head += 1;
    }
    let product = StallingsGraph::from_table(a.alphabet().clone(), 0, pairs.len() as u32, table);
    Ok(core_trim(&product))
}

/// `A ∩ B`, read off the basepoint component of the pullback.
pub fn intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    let (ga, gb) = (a.graph(), b.graph());
    let graph = pullback_graph(ga, gb, ga.basepoint(), gb.basepoint())?;
    Ok(Subgroup::from_graph(graph))
}
