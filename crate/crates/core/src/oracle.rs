//! Exact small values of `f(n, k)` by isomorph-free enumeration.
//!
//! Graphs on up to [`MAX_VERTICES`] vertices are stored as bitmask adjacency.
//! Level `v + 1` is grown from the canonical classes of level `v` by adding a
//! vertex with every admissible neighborhood, canonizing, and deduplicating.
//! Odd girth is hereditary, so the odd-girth filter prunes every level; the
//! remaining filters only apply to the level being reported.
//!
//! A smallest graph without short odd cycles that is not `n`-colorable is
//! vertex-critical, so the search at each size may skip disconnected graphs,
//! graphs of minimum degree below `n`, and graphs with a ball
//! `|U_{k-1}(v)| < n(k-1) + 1`. Each prune can be switched off.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::io::write_dimacs;
use crate::oddgirth::odd_girth;

/// Hard limit of the bitmask representation.
pub const MAX_VERTICES: usize = 16;
/// Default cap on `v_max` for [`exact_f`].
pub const DEFAULT_V_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex bound {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("n must be at least 1")]
    InvalidN,
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("v_max must be at least 1")]
    EmptySearch,
}

/// Bitmask graph on at most [`MAX_VERTICES`] vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SmallGraph {
            n,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn from_graph(g: &Graph) -> Result<Self, OracleError> {
        if g.vertex_count() > MAX_VERTICES {
            return Err(OracleError::TooManyVertices(g.vertex_count()));
        }
        let mut s = SmallGraph::empty(g.vertex_count());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|u| {
            (u + 1..self.n)
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        });
        Graph::from_edges(self.n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Adds vertex `n` adjacent to `neighbors`.
    fn extended(&self, neighbors: u16) -> SmallGraph {
        let mut g = *self;
        let x = g.n;
        g.n += 1;
        g.adj[x] = neighbors;
        for u in 0..x {
            if neighbors >> u & 1 == 1 {
                g.adj[u] |= 1 << x;
            }
        }
        g
    }

    fn relabeled(&self, order: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(order[i], order[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    fn neighborhood(&self, set: u16) -> u16 {
        bits(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Size of the ball `U_r(v)`.
    fn ball_size(&self, v: usize, r: usize) -> usize {
        let mut ball = 1u16 << v;
        for _ in 0..r {
            let grown = ball | self.neighborhood(ball);
            if grown == ball {
                break;
            }
            ball = grown;
        }
        ball.count_ones() as usize
    }

    fn eccentricity_at_least(&self, v: usize, r: usize) -> bool {
        let mut ball = 1u16 << v;
        for _ in 0..r {
            let grown = ball | self.neighborhood(ball);
            if grown == ball {
                return false;
            }
            ball = grown;
        }
        true
    }

    fn is_connected(&self) -> bool {
        self.n == 0 || self.ball_size(0, self.n) == self.n
    }

    /// No odd closed walk through `x` shorter than `min_len`.
    fn odd_walks_through_at_least(&self, x: usize, min_len: usize) -> bool {
        let mut seen = [1u16 << x, 0u16];
        let mut frontier = 1u16 << x;
        for len in 1..min_len {
            let parity = len % 2;
            let next = self.neighborhood(frontier) & !seen[parity];
            if parity == 1 && next >> x & 1 == 1 {
                return false;
            }
            if next == 0 {
                return true;
            }
            seen[parity] |= next;
            frontier = next;
        }
        true
    }

    /// Encoding of the adjacency matrix under `order`, upper triangle row by
    /// row, first pair most significant.
    fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | self.has_edge(order[i], order[j]) as u128;
            }
        }
        code
    }
}

fn bits(mut set: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Canonical code and labeling: the largest adjacency code over the leaves
/// of the individualization-refinement tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: u128,
    /// `order[i]` is the input vertex placed at position `i`.
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let mut search = CanonSearch {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let cells = vec![(0..g.n).collect::<Vec<_>>()];
    search.explore(cells, &mut Vec::new());
    let (code, order) = search.best.unwrap_or((0, Vec::new()));
    CanonicalForm { code, order }
}

pub fn canonical_graph(g: &SmallGraph) -> (SmallGraph, u128) {
    let form = canonical_form(g);
    (g.relabeled(&form.order), form.code)
}

/// Splits cells by neighbor counts into every cell until stable. Cells stay
/// ordered by (old position, signature), which is labeling-independent.
fn refine(g: &SmallGraph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let signature =
            |v: usize| -> Vec<u32> { masks.iter().map(|&m| (g.adj[v] & m).count_ones()).collect() };
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 == w[1].0 {
                    group.push(w[1].1);
                } else {
                    next.push(std::mem::take(&mut group));
                    group.push(w[1].1);
                }
            }
            next.push(group);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

struct CanonSearch<'a> {
    g: &'a SmallGraph,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn explore(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = self.g.code(&order);
            match &self.best {
                Some((best, best_order)) if *best == code => {
                    let mut perm = vec![0; self.g.n];
                    for (i, &v) in best_order.iter().enumerate() {
                        perm[v] = order[i];
                    }
                    self.automorphisms.push(perm);
                }
                Some((best, _)) if *best > code => {}
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.equivalent(u, v, prefix)) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
        }
    }

    /// `u` and `v` are exchanged by a known automorphism fixing `prefix`
    /// pointwise: either they are twins, or they share an orbit of the
    /// discovered automorphisms that fix the prefix.
    fn equivalent(&self, u: usize, v: usize, prefix: &[usize]) -> bool {
        let (au, av) = (self.g.adj[u] & !(1 << v), self.g.adj[v] & !(1 << u));
        if au == av {
            return true;
        }
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|p| prefix.iter().all(|&x| p[x] == x))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.g.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for p in gens {
            for x in 0..self.g.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, p[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
}

/// Filters for [`enumerate_graphs`]. `odd_girth_min` rejects graphs with an odd
/// cycle shorter than the given length.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilters {
    pub odd_girth_min: Option<usize>,
    pub min_degree: Option<usize>,
    pub connected: bool,
}

fn admissible_child(
    parent: &SmallGraph,
    neighbors: u16,
    girth_min: Option<usize>,
) -> Option<SmallGraph> {
    if let Some(gm) = girth_min {
        // Triangle through the new vertex: two adjacent neighbors.
        if gm > 3 && bits(neighbors).any(|u| parent.adj[u] & neighbors != 0) {
            return None;
        }
        let child = parent.extended(neighbors);
        child
            .odd_walks_through_at_least(parent.n, gm)
            .then_some(child)
    } else {
        Some(parent.extended(neighbors))
    }
}

/// Canonical classes on `v + 1` vertices grown from the classes on `v`.
fn next_level(
    parents: &[SmallGraph],
    girth_min: Option<usize>,
    min_new_degree: usize,
) -> Vec<SmallGraph> {
    let found: HashSet<(u128, SmallGraph)> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let p = *p;
            (0..=p.all() as u32).filter_map(move |s| {
                let s = s as u16;
                if (s.count_ones() as usize) < min_new_degree {
                    return None;
                }
                let child = admissible_child(&p, s, girth_min)?;
                let (canon, code) = canonical_graph(&child);
                Some((code, canon))
            })
        })
        .collect();
    let mut level: Vec<(u128, SmallGraph)> = found.into_iter().collect();
    level.sort_by_key(|(code, _)| *code);
    level.into_iter().map(|(_, g)| g).collect()
}

/// All graphs on `v` vertices up to isomorphism passing `filters`, each
/// returned in canonical labeling, ordered by canonical code.
pub fn enumerate_graphs(v: usize, filters: EnumFilters) -> Result<Vec<Graph>, OracleError> {
    if v > MAX_VERTICES {
        return Err(OracleError::CapExceeded {
            requested: v,
            cap: MAX_VERTICES,
        });
    }
    let mut level = vec![SmallGraph::empty(v.min(1))];
    for size in 1..v {
        let min_new = if size + 1 == v {
            filters.min_degree.unwrap_or(0)
        } else {
            0
        };
        level = next_level(&level, filters.odd_girth_min, min_new);
    }
    Ok(level
        .iter()
        .filter(|g| !filters.connected || g.is_connected())
        .filter(|g| {
            filters
                .min_degree
                .is_none_or(|d| (0..g.n).all(|x| g.degree(x) >= d))
        })
        .map(SmallGraph::to_graph)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub v_cap: usize,
    /// Only connected graphs can be smallest counterexamples.
    pub prune_connected: bool,
    /// Minimum degree at least `n` (vertex-criticality).
    pub prune_min_degree: bool,
    /// Every ball `U_{k-1}(v)` has at least `n(k-1)+1` vertices.
    pub prune_ball_size: bool,
    /// Every sphere `S_r(v)` with `r <= k` is nonempty.
    pub prune_spheres: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            v_cap: DEFAULT_V_CAP,
            prune_connected: true,
            prune_min_degree: true,
            prune_ball_size: true,
            prune_spheres: false,
        }
    }
}

impl OracleConfig {
    pub fn without_prunes(self) -> Self {
        OracleConfig {
            prune_connected: false,
            prune_min_degree: false,
            prune_ball_size: false,
            prune_spheres: false,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleStatus {
    Exact,
    LowerBoundOnly,
}

/// Evidence that the witness is a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    /// Shortest odd cycle length of the witness.
    pub odd_girth: Option<usize>,
    /// Search nodes visited while refuting every `n`-coloring.
    pub coloring_nodes: u64,
}

fn graph_edges<S: Serializer>(g: &Option<Graph>, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.collect_seq(g.edges().map(|(u, v)| [u, v])),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub n: usize,
    pub k: usize,
    pub status: OracleStatus,
    /// `f(n, k)` when exact, otherwise a proven lower bound on it.
    pub value: usize,
    #[serde(rename = "witness_edges", serialize_with = "graph_edges")]
    pub witness: Option<Graph>,
    pub witness_certificate: Option<WitnessCertificate>,
    /// Largest vertex count examined.
    pub vertices_searched: usize,
    /// Candidates that reached the colorability test.
    pub candidates_tested: u64,
}

impl OracleResult {
    pub fn witness_dimacs(&self) -> Option<String> {
        self.witness.as_ref().map(|g| {
            write_dimacs(
                g,
                &[&format!(
                    "smallest graph with odd girth >= {} that is not {}-colorable",
                    2 * self.k + 1,
                    self.n
                )],
            )
        })
    }
}

/// Violation of the ball-size condition: `|U_{k-1}(vertex)| < n(k-1) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BallSizeViolation {
    pub vertex: usize,
    pub ball_size: usize,
    pub required: usize,
}

/// Checks `|U_{k-1}(v)| >= n(k-1) + 1` at every vertex, a property of every
/// smallest non-`n`-colorable graph without odd cycles of length at most `2k-1`.
pub fn check_lemma1(g: &Graph, n: usize, k: usize) -> Result<(), BallSizeViolation> {
    let required = n * (k - 1) + 1;
    for v in g.vertices() {
        let ball_size = g.ball(v, k - 1).expect("vertex in range").len();
        if ball_size < required {
            return Err(BallSizeViolation {
                vertex: v,
                ball_size,
                required,
            });
        }
    }
    Ok(())
}

/// Colors with at most `n` colors, counting visited search nodes.
fn colorable(g: &SmallGraph, n: usize, nodes: &mut u64) -> bool {
    fn go(g: &SmallGraph, n: usize, color: &mut [Option<u8>], nodes: &mut u64) -> bool {
        let mut pick: Option<(u32, usize)> = None;
        for v in 0..g.n {
            if color[v].is_some() {
                continue;
            }
            let forbidden = bits(g.adj[v])
                .filter_map(|u| color[u])
                .fold(0u32, |m, c| m | 1 << c);
            let key = forbidden.count_ones();
            if pick.is_none_or(|(s, _)| key > s) {
                pick = Some((key, v));
            }
        }
        let Some((_, v)) = pick else { return true };
        let forbidden = bits(g.adj[v])
            .filter_map(|u| color[u])
            .fold(0u32, |m, c| m | 1 << c);
        let used = color
            .iter()
            .flatten()
            .map(|&c| c as usize + 1)
            .max()
            .unwrap_or(0);
        // Colors beyond the first unused one are symmetric.
        for c in 0..n.min(used + 1) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            *nodes += 1;
            color[v] = Some(c as u8);
            if go(g, n, color, nodes) {
                return true;
            }
            color[v] = None;
        }
        false
    }
    let mut color = vec![None; g.n];
    go(g, n, &mut color, nodes)
}

struct Prunes {
    n: usize,
    k: usize,
    cfg: OracleConfig,
}

impl Prunes {
    fn passes(&self, g: &SmallGraph) -> bool {
        let cfg = &self.cfg;
        (!cfg.prune_connected || g.is_connected())
            && (!cfg.prune_min_degree || (0..g.n).all(|v| g.degree(v) >= self.n))
            && (!cfg.prune_ball_size
                || (0..g.n).all(|v| g.ball_size(v, self.k - 1) > self.n * (self.k - 1)))
            && (!cfg.prune_spheres || (0..g.n).all(|v| g.eccentricity_at_least(v, self.k)))
    }
}

/// Smallest size at which a graph with odd girth at least `2k + 1` fails to
/// be `n`-colorable, searched up to `v_max` vertices.
pub fn exact_f(
    n: usize,
    k: usize,
    v_max: usize,
    cfg: OracleConfig,
) -> Result<OracleResult, OracleError> {
    if n == 0 {
        return Err(OracleError::InvalidN);
    }
    if k < 2 {
        return Err(OracleError::InvalidK(k));
    }
    if v_max == 0 {
        return Err(OracleError::EmptySearch);
    }
    let cap = cfg.v_cap.min(MAX_VERTICES);
    if v_max > cap {
        return Err(OracleError::CapExceeded {
            requested: v_max,
            cap,
        });
    }
    let girth = 2 * k + 1;
    let prunes = Prunes { n, k, cfg };
    let mut tested = 0u64;
    let mut level = vec![SmallGraph::empty(1)];
    for v in 1..=v_max {
        let candidates: Vec<SmallGraph> = if v == 1 {
            level.clone()
        } else if v < v_max {
            level = next_level(&level, Some(girth), 0);
            level.clone()
        } else {
            // Last size: test every child directly, no canonization needed.
            let min_new = if cfg.prune_min_degree { n } else { 0 };
            level
                .par_iter()
                .flat_map_iter(|p| {
                    let p = *p;
                    (0..=p.all() as u32).filter_map(move |s| {
                        if ((s as u16).count_ones() as usize) < min_new {
                            return None;
                        }
                        admissible_child(&p, s as u16, Some(girth))
                    })
                })
                .filter(|g| prunes.passes(g))
                .collect()
        };
        let survivors: Vec<&SmallGraph> = candidates.iter().filter(|g| prunes.passes(g)).collect();
        tested += survivors.len() as u64;
        let counterexamples: Vec<&SmallGraph> = survivors
            .into_par_iter()
            .filter(|g| !colorable(g, n, &mut 0))
            .collect();
        if let Some((witness, _)) = counterexamples
            .iter()
            .map(|g| canonical_graph(g))
            .min_by_key(|(_, code)| *code)
        {
            let mut nodes = 0;
            let refuted = !colorable(&witness, n, &mut nodes);
            debug_assert!(refuted);
            let graph = witness.to_graph();
            return Ok(OracleResult {
                n,
                k,
                status: OracleStatus::Exact,
                value: v - 1,
                witness_certificate: Some(WitnessCertificate {
                    odd_girth: odd_girth(&graph),
                    coloring_nodes: nodes,
                }),
                witness: Some(graph),
                vertices_searched: v,
                candidates_tested: tested,
            });
        }
    }
    Ok(OracleResult {
        n,
        k,
        status: OracleStatus::LowerBoundOnly,
        value: v_max,
        witness: None,
        witness_certificate: None,
        vertices_searched: v_max,
        candidates_tested: tested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph, mycielski, path_graph, star_graph};

    fn is_iso(a: &Graph, b: &Graph) -> bool {
        let (a, b) = (
            SmallGraph::from_graph(a).unwrap(),
            SmallGraph::from_graph(b).unwrap(),
        );
        a.n == b.n && canonical_graph(&a) == canonical_graph(&b)
    }

    #[test]
    fn base_values() {
        let r = exact_f(2, 2, 6, OracleConfig::default()).unwrap();
        assert_eq!((r.status, r.value), (OracleStatus::Exact, 4));
        assert!(is_iso(
            r.witness.as_ref().unwrap(),
            &cycle_graph(5).unwrap()
        ));

        let r = exact_f(2, 3, 8, OracleConfig::default()).unwrap();
        assert_eq!((r.status, r.value), (OracleStatus::Exact, 6));
        assert!(is_iso(
            r.witness.as_ref().unwrap(),
            &cycle_graph(7).unwrap()
        ));

        let r = exact_f(1, 2, 3, OracleConfig::default()).unwrap();
        assert_eq!((r.status, r.value), (OracleStatus::Exact, 1));
        assert!(is_iso(r.witness.as_ref().unwrap(), &complete_graph(2)));
    }

    #[test]
    fn lower_bound_when_nothing_found() {
        let r = exact_f(2, 2, 4, OracleConfig::default()).unwrap();
        assert_eq!((r.status, r.value), (OracleStatus::LowerBoundOnly, 4));
        assert!(r.witness.is_none());
    }

    #[test]
    fn cap_and_argument_errors() {
        assert_eq!(
            exact_f(3, 2, 11, OracleConfig::default()),
            Err(OracleError::CapExceeded {
                requested: 11,
                cap: 10
            })
        );
        assert_eq!(
            exact_f(0, 2, 3, OracleConfig::default()),
            Err(OracleError::InvalidN)
        );
        assert_eq!(
            exact_f(2, 1, 3, OracleConfig::default()),
            Err(OracleError::InvalidK(1))
        );
    }

    #[test]
    fn prunes_do_not_change_the_answer() {
        let with = exact_f(2, 2, 6, OracleConfig::default()).unwrap();
        let without = exact_f(2, 2, 6, OracleConfig::default().without_prunes()).unwrap();
        assert_eq!(with.value, without.value);
        assert_eq!(with.status, without.status);
        assert_eq!(with.witness, without.witness);
        let spheres = OracleConfig {
            prune_spheres: true,
            ..OracleConfig::default()
        };
        assert_eq!(exact_f(2, 2, 6, spheres).unwrap().witness, with.witness);
    }

    #[test]
    fn ball_size_condition() {
        assert_eq!(check_lemma1(&cycle_graph(5).unwrap(), 2, 2), Ok(()));
        assert_eq!(
            check_lemma1(&mycielski(&cycle_graph(5).unwrap()), 3, 2),
            Ok(())
        );
        assert_eq!(
            check_lemma1(&complete_graph(2), 2, 2),
            Err(BallSizeViolation {
                vertex: 0,
                ball_size: 2,
                required: 3
            })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_graphs(3, EnumFilters::default()).unwrap().len(),
            4
        );
        let connected = EnumFilters {
            connected: true,
            ..EnumFilters::default()
        };
        assert_eq!(enumerate_graphs(3, connected).unwrap().len(), 2);
        let tf4 = EnumFilters {
            odd_girth_min: Some(5),
            connected: true,
            ..EnumFilters::default()
        };
        let found = enumerate_graphs(4, tf4).unwrap();
        assert_eq!(found.len(), 3);
        for want in [path_graph(4), star_graph(3), cycle_graph(4).unwrap()] {
            assert!(found.iter().any(|g| is_iso(g, &want)));
        }
        let deg2 = EnumFilters {
            odd_girth_min: Some(5),
            min_degree: Some(2),
            connected: true,
        };
        let found = enumerate_graphs(5, deg2).unwrap();
        assert!(found.iter().any(|g| is_iso(g, &cycle_graph(5).unwrap())));
        assert_eq!(
            enumerate_graphs(0, EnumFilters::default()).unwrap().len(),
            1
        );
    }

    #[test]
    fn canonical_form_is_labeling_invariant() {
        let g = SmallGraph::from_graph(&mycielski(&cycle_graph(5).unwrap())).unwrap();
        let (canon, code) = canonical_graph(&g);
        let order: Vec<usize> = (0..11).rev().collect();
        let h = g.relabeled(&order);
        assert_eq!(canonical_graph(&h), (canon, code));
        let e = SmallGraph::empty(12);
        assert_eq!(canonical_graph(&e).1, 0);
    }

    #[test]
    fn witness_dimacs_has_comment() {
        let r = exact_f(2, 2, 5, OracleConfig::default()).unwrap();
        let text = r.witness_dimacs().unwrap();
        assert!(text.starts_with("c smallest graph with odd girth >= 5"));
        assert!(text.contains("p edge 5 5"));
    }
}
