//! Immutable undirected simple graphs and the metric primitives (distances,
//! balls, spheres, outer boundaries, induced subgraphs) everything else is
//! built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::oddgirth::OddCycleCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph with sorted adjacency lists. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() == self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: s.universe().max(self.vertex_count()),
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Breadth-first distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(v)?;
        Ok(bfs_layers(self, v, usize::MAX, None).0)
    }

    /// `U_r(v)`: vertices at distance at most `r` from `v`.
    pub fn ball(&self, v: usize, r: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let (dist, _) = bfs_layers(self, v, r, None);
        Ok(VertexSet::from_mask(
            dist.iter().map(|d| d.is_some()).collect(),
        ))
    }

    /// `S_r(v)`: vertices at distance exactly `r` from `v`.
    pub fn sphere(&self, v: usize, r: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let (dist, _) = bfs_layers(self, v, r, None);
        Ok(VertexSet::from_mask(
            dist.iter().map(|d| *d == Some(r)).collect(),
        ))
    }

    /// Vertices outside `s` adjacent to some vertex of `s`.
    pub fn outer_boundary(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(s)?;
        let mut out = VertexSet::new(self.vertex_count());
        for v in s.iter() {
            for &u in &self.adj[v] {
                if !s.contains(u) {
                    out.insert(u);
                }
            }
        }
        Ok(out)
    }

    /// Induced subgraph on `s`. The returned map sends old indices to new ones
    /// (`None` for vertices outside `s`); new indices follow ascending order.
    pub fn induced_subgraph(
        &self,
        s: &VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_set(s)?;
        let mut relabel = vec![None; self.vertex_count()];
        for (new, old) in s.iter().enumerate() {
            relabel[old] = Some(new);
        }
        let mut adj = vec![Vec::new(); s.len()];
        let mut edge_count = 0;
        for old in s.iter() {
            let new = relabel[old].unwrap();
            adj[new] = self.adj[old].iter().filter_map(|&w| relabel[w]).collect();
            edge_count += adj[new].len();
        }
        Ok((
            Graph {
                adj,
                edge_count: edge_count / 2,
            },
            relabel,
        ))
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        bfs_layers(self, 0, usize::MAX, None)
            .0
            .iter()
            .all(Option::is_some)
    }

    /// Proper 2-coloring, or an odd cycle proving none exists.
    pub fn bipartite_2_coloring(&self) -> TwoColoring {
        let n = self.vertex_count();
        let mut color: Vec<Option<usize>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return TwoColoring::OddCycle(tree_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let num_colors = if self.edge_count > 0 { 2 } else { 1 };
        TwoColoring::Colored(Coloring::new(
            color.into_iter().map(|c| c.unwrap_or(0)).collect(),
            num_colors,
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartite_2_coloring(), TwoColoring::Colored(_))
    }
}

/// Closes the cycle formed by the tree paths from `u` and `w` to their lowest
/// common ancestor plus the edge `u`-`w`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> OddCycleCertificate {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddCycleCertificate::new_unchecked(left)
}

/// Outcome of [`Graph::bipartite_2_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Colored(Coloring),
    OddCycle(OddCycleCertificate),
}

/// BFS from `source` up to depth `max_depth`, optionally restricted to the
/// vertices marked in `alive`. Returns distances and the per-layer sizes.
pub(crate) fn bfs_layers(
    g: &Graph,
    source: usize,
    max_depth: usize,
    alive: Option<&[bool]>,
) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut dist = vec![None; g.vertex_count()];
    let mut layers = vec![1];
    dist[source] = Some(0);
    let mut frontier = vec![source];
    let mut depth = 0;
    while !frontier.is_empty() && depth < max_depth {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if dist[w].is_none() && alive.is_none_or(|a| a[w]) {
                    dist[w] = Some(depth + 1);
                    next.push(w);
                }
            }
        }
        depth += 1;
        if next.is_empty() {
            break;
        }
        layers.push(next.len());
        frontier = next;
    }
    (dist, layers)
}

/// BFS parents from `source` (`usize::MAX` for the root and unreached vertices).
pub(crate) fn bfs_tree(g: &Graph, source: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut dist = vec![None; g.vertex_count()];
    let mut parent = vec![usize::MAX; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Path from the BFS root to `v`, root first.
pub(crate) fn tree_path(parent: &[usize], v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while parent[cur] != usize::MAX {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::InvalidVertex {
                    vertex: x,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        for ns in &mut self.adj {
            ns.sort_unstable();
        }
        Graph {
            adj: self.adj,
            edge_count: self.edge_count,
        }
    }
}

/// Subset of `0..universe`, iterated in ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Vec<bool>,
    len: usize,
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            mask: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            mask: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let len = mask.iter().filter(|&&b| b).count();
        VertexSet { mask, len }
    }

    pub fn from_members<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = VertexSet::new(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    vertex_count: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    /// Returns `true` if `v` was not already present. Panics if `v` is out of range.
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.mask[v];
        if fresh {
            self.mask[v] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.mask[v] = false;
            self.len -= 1;
        }
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(
            self.mask
                .iter()
                .enumerate()
                .map(|(i, &a)| a && !other.contains(i))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_graph, path_graph};

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn distances_on_c5() {
        let c5 = cycle_graph(5).unwrap();
        let d = c5.distances_from(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(2), Some(1)]);
    }

    #[test]
    fn distances_single_vertex_and_disconnected() {
        assert_eq!(Graph::empty(1).distances_from(0).unwrap(), vec![Some(0)]);
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            g.distances_from(0).unwrap(),
            vec![Some(0), Some(1), None, None]
        );
        assert!(matches!(
            g.distances_from(4),
            Err(GraphError::InvalidVertex { vertex: 4, .. })
        ));
    }

    #[test]
    fn balls() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.ball(0, 1).unwrap().to_vec(), vec![0, 1, 4]);
        assert_eq!(c5.ball(3, 0).unwrap().to_vec(), vec![3]);
        let c7 = cycle_graph(7).unwrap();
        assert_eq!(c7.ball(0, 3).unwrap().len(), 7);
        assert!(c7.ball(7, 1).is_err());
    }

    #[test]
    fn spheres() {
        let c7 = cycle_graph(7).unwrap();
        assert_eq!(c7.sphere(0, 2).unwrap().to_vec(), vec![2, 5]);
        let c5 = cycle_graph(5).unwrap();
        assert!(c5.sphere(0, 3).unwrap().is_empty());
        let p3 = path_graph(3);
        assert_eq!(p3.sphere(0, 2).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn outer_boundaries() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(
            c5.outer_boundary(&set(5, &[0])).unwrap().to_vec(),
            vec![1, 4]
        );
        assert!(c5.outer_boundary(&VertexSet::full(5)).unwrap().is_empty());
        let c7 = cycle_graph(7).unwrap();
        assert_eq!(
            c7.outer_boundary(&set(7, &[0, 1])).unwrap().to_vec(),
            vec![2, 6]
        );
        assert!(c7.outer_boundary(&set(5, &[0])).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle_graph(5).unwrap();
        let (p, map) = c5.induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(p, path_graph(3));
        assert_eq!(map, vec![Some(0), Some(1), Some(2), None, None]);
        let (e, _) = c5.induced_subgraph(&VertexSet::new(5)).unwrap();
        assert_eq!(e.vertex_count(), 0);
        let (two, _) = c5.induced_subgraph(&set(5, &[0, 2])).unwrap();
        assert_eq!(two, Graph::empty(2));
        let (same, _) = c5.induced_subgraph(&VertexSet::full(5)).unwrap();
        assert_eq!(same, c5);
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn two_colorings() {
        match cycle_graph(4).unwrap().bipartite_2_coloring() {
            TwoColoring::Colored(c) => assert_eq!(c.assignment(), &[0, 1, 0, 1]),
            other => panic!("unexpected {other:?}"),
        }
        let c5 = cycle_graph(5).unwrap();
        match c5.bipartite_2_coloring() {
            TwoColoring::OddCycle(cert) => {
                assert_eq!(cert.len(), 5);
                assert!(cert.verify(&c5));
            }
            other => panic!("unexpected {other:?}"),
        }
        match Graph::empty(3).bipartite_2_coloring() {
            TwoColoring::Colored(c) => {
                assert_eq!(c.assignment(), &[0, 0, 0]);
                assert_eq!(c.num_colors(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn vertex_set_serializes_as_sorted_array() {
        let s = set(6, &[4, 1, 3]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3,4]");
    }
}
