//! Witness and corpus graphs: cycles, Schrijver graphs, Mycielskians and a
//! few small classics.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::binomial;
use crate::graph::{Graph, GraphBuilder};

/// Default cap on the number of Schrijver graph vertices.
pub const DEFAULT_SCHRIJVER_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("Schrijver parameters must be positive (m = {m}, d = {d})")]
    InvalidSchrijverParams { m: usize, d: usize },
    #[error("Schrijver graph would have {predicted} vertices, above the cap of {cap}")]
    TooLarge { predicted: String, cap: usize },
}

pub fn cycle_graph(len: usize) -> Result<Graph, ConstructionError> {
    if len < 3 {
        return Err(ConstructionError::CycleTooShort(len));
    }
    Ok(Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len))).unwrap())
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{1,leaves}` with the center at index 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn petersen_graph() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Erdős–Rényi `G(n, p)` drawn from a seeded ChaCha stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

/// Mycielskian of `g`: originals `0..n`, shadows `n..2n` (shadow of `i`
/// adjacent to the neighbors of `i`), apex `2n` adjacent to every shadow.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut b = GraphBuilder::new(2 * n + 1);
    for (u, v) in g.edges() {
        b.add_edge(u, v).unwrap();
        b.add_edge(u, n + v).unwrap();
        b.add_edge(v, n + u).unwrap();
    }
    for i in 0..n {
        b.add_edge(n + i, 2 * n).unwrap();
    }
    b.build()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SchrijverParams {
    pub m: usize,
    pub d: usize,
}

impl SchrijverParams {
    pub fn new(m: usize, d: usize) -> Result<Self, ConstructionError> {
        if m == 0 || d == 0 {
            return Err(ConstructionError::InvalidSchrijverParams { m, d });
        }
        Ok(SchrijverParams { m, d })
    }

    /// Size of the ground set `{1, ..., 2m + d}`.
    pub fn ground_size(&self) -> usize {
        2 * self.m + self.d
    }
}

/// Schrijver graph with its vertices' `m`-subset labels (1-based elements).
#[derive(Debug, Clone)]
pub struct SchrijverGraph {
    pub params: SchrijverParams,
    pub graph: Graph,
    pub labels: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchrijverPrediction {
    #[serde(serialize_with = "decimal")]
    pub vertex_count: BigUint,
    pub chromatic_number: usize,
    /// Smallest odd integer that is at least `(2m + d) / d`.
    pub odd_girth_lower_bound: usize,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn predicted_schrijver_properties(p: SchrijverParams) -> SchrijverPrediction {
    let (m, d) = (p.m, p.d);
    let ground = 2 * m + d;
    let num = BigUint::from(ground) * binomial(m + d, d);
    let den = BigUint::from(m + d);
    debug_assert!((&num % &den) == BigUint::from(0u32));
    let mut girth = ground.div_ceil(d);
    if girth % 2 == 0 {
        girth += 1;
    }
    SchrijverPrediction {
        vertex_count: num / den,
        chromatic_number: d + 2,
        odd_girth_lower_bound: girth,
    }
}

/// Stable `m`-subsets of the `(2m + d)`-cycle, joined when disjoint.
///
/// Subsets are generated lexicographically; a partial subset is abandoned as
/// soon as two chosen elements would be circularly adjacent.
pub fn schrijver_graph(
    p: SchrijverParams,
    cap: usize,
) -> Result<SchrijverGraph, ConstructionError> {
    let predicted = predicted_schrijver_properties(p).vertex_count;
    if predicted.to_usize().is_none_or(|c| c > cap) {
        return Err(ConstructionError::TooLarge {
            predicted: predicted.to_string(),
            cap,
        });
    }
    let ground = p.ground_size();
    let mut labels = Vec::new();
    let mut current = Vec::with_capacity(p.m);
    stable_subsets(ground, p.m, 1, &mut current, &mut labels);

    let masks: Vec<Vec<bool>> = labels
        .iter()
        .map(|l| {
            let mut mask = vec![false; ground + 1];
            for &x in l {
                mask[x] = true;
            }
            mask
        })
        .collect();
    let mut b = GraphBuilder::new(labels.len());
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if labels[j].iter().all(|&x| !masks[i][x]) {
                b.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(SchrijverGraph {
        params: p,
        graph: b.build(),
        labels,
    })
}

fn stable_subsets(
    ground: usize,
    m: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    let remaining = m - current.len();
    // Each later element sits at least two above the previous one.
    let mut x = start;
    while x + 2 * (remaining - 1) <= ground {
        let wraps = current.first() == Some(&1) && x == ground;
        if !wraps {
            current.push(x);
            stable_subsets(ground, m, x + 2, current, out);
            current.pop();
        }
        x += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oddgirth::{odd_girth, odd_girth_at_least};

    #[test]
    fn cycles() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert_eq!(odd_girth(&cycle_graph(7).unwrap()), Some(7));
        assert!(cycle_graph(4).unwrap().is_bipartite());
        assert_eq!(cycle_graph(2), Err(ConstructionError::CycleTooShort(2)));
    }

    #[test]
    fn schrijver_small_cases() {
        let s = schrijver_graph(SchrijverParams::new(2, 1).unwrap(), 100).unwrap();
        assert_eq!(
            s.labels,
            vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]
        );
        assert_eq!(s.graph.edge_count(), 5);
        assert!(s.graph.vertices().all(|v| s.graph.degree(v) == 2));
        assert!(s.graph.is_connected());

        let s = schrijver_graph(SchrijverParams::new(2, 2).unwrap(), 100).unwrap();
        assert_eq!(s.graph.vertex_count(), 9);

        let s = schrijver_graph(SchrijverParams::new(1, 1).unwrap(), 100).unwrap();
        assert_eq!(s.graph, complete_graph(3));
    }

    #[test]
    fn schrijver_cap_and_params() {
        let p = SchrijverParams::new(3, 2).unwrap();
        assert!(matches!(
            schrijver_graph(p, 15),
            Err(ConstructionError::TooLarge { .. })
        ));
        assert!(SchrijverParams::new(0, 1).is_err());
    }

    #[test]
    fn predictions() {
        let pred = |m, d| {
            let p = predicted_schrijver_properties(SchrijverParams::new(m, d).unwrap());
            (
                p.vertex_count.to_usize().unwrap(),
                p.chromatic_number,
                p.odd_girth_lower_bound,
            )
        };
        assert_eq!(pred(2, 1), (5, 3, 5));
        assert_eq!(pred(2, 2), (9, 4, 3));
        assert_eq!(pred(3, 2), (16, 4, 5));
    }

    #[test]
    fn mycielskians() {
        let g = mycielski(&cycle_graph(5).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));
        assert!(odd_girth_at_least(&g, 5));

        let c5 = mycielski(&complete_graph(2));
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2) && c5.is_connected());

        // Shadow of an isolated vertex has no neighbors but the apex.
        let k1 = mycielski(&Graph::empty(1));
        assert_eq!(k1.vertex_count(), 3);
        assert_eq!(k1.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_graph(20, 0.3, 7), random_graph(20, 0.3, 7));
        assert_eq!(random_graph(10, 0.0, 1).edge_count(), 0);
        assert_eq!(random_graph(10, 1.0, 1).edge_count(), 45);
    }
}
