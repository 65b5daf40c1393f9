//! Colorings: verification, the constructive colorings used in the
//! minimal-counterexample arguments (layer parity, extension into a ball,
//! carve-and-recurse), and an exact DSATUR branch-and-bound solver.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{carve_with, CarveVariant, CenterRule, DecompositionError};
use crate::graph::{bfs_layers, Graph, GraphError, TwoColoring, VertexSet};
use crate::oddgirth::{check_sphere_independence, SphereViolation};

/// Default node budget for [`exact_chromatic`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Vertex-to-color assignment; colors are `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, num_colors: usize) -> Self {
        Coloring {
            assignment,
            num_colors,
        }
    }

    /// Uses `max color + 1` as the color count.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let num_colors = assignment.iter().max().map_or(0, |&c| c + 1);
        Coloring::new(assignment, num_colors)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.assignment.iter().collect::<BTreeSet<_>>().len()
    }

    /// `v <vertex> <color>` lines with 1-based vertices and 0-based colors.
    pub fn to_dimacs_lines(&self) -> String {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, c)| format!("v {} {}\n", v + 1, c))
            .collect()
    }
}

/// The search node budget ran out before the question was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {budget} nodes exhausted")]
pub struct BudgetExhausted {
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, but only {num_colors} colors are allowed")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        num_colors: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("at least one color is required")]
    NoColors,
    #[error("sphere S_{} around {} contains the edge {:?}", .0.radius, .0.center, .0.edge)]
    SphereIndependence(SphereViolation),
    #[error("vertex {vertex} is not reachable from {center}")]
    Unreachable { center: usize, vertex: usize },
    #[error("eccentricity of {center} is {eccentricity}, above k - 1 = {limit}")]
    EccentricityTooLarge {
        center: usize,
        eccentricity: usize,
        limit: usize,
    },
    #[error("radius {r} outside 1..={max}")]
    InvalidRadius { r: usize, max: usize },
    #[error("vertex {0} outside the ball has no color")]
    OutsideUncolored(usize),
    #[error("outside coloring is improper on edge ({0}, {1})")]
    ImproperOutside(usize, usize),
    #[error("all {n} colors appear on the sphere of radius {r}")]
    NoAbsentColor { r: usize, n: usize },
    #[error("a second color is needed for the inner spheres but only one is available")]
    NeedsTwoColors,
    #[error("carving failed: {0}")]
    Carve(DecompositionError),
    #[error("internal: produced an improper coloring on edge ({0}, {1})")]
    Internal(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ColoringCheck {
    Proper,
    Conflict { u: usize, v: usize },
}

/// First monochromatic edge in ascending order, or `Proper`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<ColoringCheck, ColoringError> {
    if c.assignment.len() != g.vertex_count() {
        return Err(ColoringError::SizeMismatch {
            expected: g.vertex_count(),
            got: c.assignment.len(),
        });
    }
    if let Some((v, &color)) = c
        .assignment
        .iter()
        .enumerate()
        .find(|(_, &color)| color >= c.num_colors)
    {
        return Err(ColoringError::ColorOutOfRange {
            vertex: v,
            color,
            num_colors: c.num_colors,
        });
    }
    Ok(g.edges()
        .find(|&(u, v)| c.assignment[u] == c.assignment[v])
        .map_or(ColoringCheck::Proper, |(u, v)| ColoringCheck::Conflict {
            u,
            v,
        }))
}

fn is_proper(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    match verify_coloring(g, c)? {
        ColoringCheck::Proper => Ok(()),
        ColoringCheck::Conflict { u, v } => Err(ColoringError::Internal(u, v)),
    }
}

/// Two colors by parity of the distance from `v`.
///
/// Requires the sphere-independence property for `k`, every vertex reachable
/// from `v`, and eccentricity of `v` at most `k - 1`.
pub fn layer_2_coloring(g: &Graph, v: usize, k: usize) -> Result<Coloring, ColoringError> {
    if k < 2 {
        return Err(ColoringError::InvalidK(k));
    }
    let dist = g.distances_from(v)?;
    check_sphere_independence(g, k).map_err(ColoringError::SphereIndependence)?;
    let mut ecc = 0;
    for (u, d) in dist.iter().enumerate() {
        match d {
            None => {
                return Err(ColoringError::Unreachable {
                    center: v,
                    vertex: u,
                })
            }
            Some(d) => ecc = ecc.max(*d),
        }
    }
    if ecc > k - 1 {
        return Err(ColoringError::EccentricityTooLarge {
            center: v,
            eccentricity: ecc,
            limit: k - 1,
        });
    }
    let c = Coloring::new(dist.iter().map(|d| d.unwrap() % 2).collect(), 2);
    is_proper(g, &c)?;
    Ok(c)
}

/// Recolors the ball `U_{r-1}(v)` given an `n`-coloring of everything outside it.
///
/// The sphere `S_{r-1}` takes a color `a` missing from `S_r`; inner spheres
/// alternate `a` and a second color `b` outward from the center so that
/// `S_{r-1-j}` gets `a` for even `j`. `outside[u]` must be `Some` exactly for
/// the vertices at distance at least `r`.
pub fn extend_inside_ball(
    g: &Graph,
    v: usize,
    r: usize,
    outside: &[Option<usize>],
    n: usize,
    k: usize,
) -> Result<Coloring, ColoringError> {
    if k < 2 {
        return Err(ColoringError::InvalidK(k));
    }
    if r == 0 || r > k - 1 {
        return Err(ColoringError::InvalidRadius { r, max: k - 1 });
    }
    if outside.len() != g.vertex_count() {
        return Err(ColoringError::SizeMismatch {
            expected: g.vertex_count(),
            got: outside.len(),
        });
    }
    g.check_vertex(v)?;
    let (dist, _) = bfs_layers(g, v, r, None);
    check_sphere_independence(g, k).map_err(ColoringError::SphereIndependence)?;

    let inside = |u: usize| matches!(dist[u], Some(d) if d < r);
    for u in g.vertices() {
        if inside(u) {
            continue;
        }
        match outside[u] {
            None => return Err(ColoringError::OutsideUncolored(u)),
            Some(c) if c >= n => {
                return Err(ColoringError::ColorOutOfRange {
                    vertex: u,
                    color: c,
                    num_colors: n,
                })
            }
            Some(_) => {}
        }
    }
    if let Some((a, b)) = g
        .edges()
        .find(|&(a, b)| !inside(a) && !inside(b) && outside[a] == outside[b])
    {
        return Err(ColoringError::ImproperOutside(a, b));
    }

    let on_sphere: BTreeSet<usize> = g
        .vertices()
        .filter(|&u| dist[u] == Some(r))
        .map(|u| outside[u].unwrap())
        .collect();
    let a = (0..n)
        .find(|c| !on_sphere.contains(c))
        .ok_or(ColoringError::NoAbsentColor { r, n })?;
    let b = (0..n).find(|&c| c != a);
    if r >= 2 && b.is_none() {
        return Err(ColoringError::NeedsTwoColors);
    }

    let assignment = g
        .vertices()
        .map(|u| match dist[u] {
            Some(d) if d < r => {
                if (r - 1 - d).is_multiple_of(2) {
                    a
                } else {
                    b.unwrap()
                }
            }
            _ => outside[u].unwrap(),
        })
        .collect();
    let c = Coloring::new(assignment, n);
    is_proper(g, &c)?;
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CarveColoringOptions {
    pub center_rule: CenterRule,
    pub variant: CarveVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureReport {
    /// Recursion depth at which coloring failed (0 is the input graph).
    pub level: usize,
    /// Colors that were available at that level.
    pub colors: usize,
    /// Vertices (input indices) of the subgraph that could not be colored.
    pub residual: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CarveColoringOutcome {
    Colored { coloring: Coloring },
    Failed { report: FailureReport },
}

/// Colors `g` with `n` colors by carving: the boundary is colored recursively
/// with the lowest `n - 2` colors and every ball with the top two.
///
/// Sound but incomplete: a `Failed` outcome does not mean `g` needs more than
/// `n` colors.
pub fn recursive_carve_coloring(
    g: &Graph,
    n: usize,
    k: usize,
    opts: CarveColoringOptions,
) -> Result<CarveColoringOutcome, ColoringError> {
    if k < 2 {
        return Err(ColoringError::InvalidK(k));
    }
    if n == 0 {
        return Err(ColoringError::NoColors);
    }
    check_sphere_independence(g, k).map_err(ColoringError::SphereIndependence)?;
    let labels: Vec<usize> = g.vertices().collect();
    let outcome = match carve_level(g, n, k, opts, 0, &labels)? {
        Ok(assignment) => {
            let c = Coloring::new(assignment, n);
            is_proper(g, &c)?;
            CarveColoringOutcome::Colored { coloring: c }
        }
        Err(report) => CarveColoringOutcome::Failed { report },
    };
    Ok(outcome)
}

fn carve_level(
    g: &Graph,
    n: usize,
    k: usize,
    opts: CarveColoringOptions,
    level: usize,
    labels: &[usize],
) -> Result<Result<Vec<usize>, FailureReport>, ColoringError> {
    let fail = |reason: String| FailureReport {
        level,
        colors: n,
        residual: labels.to_vec(),
        reason,
    };
    if g.edge_count() == 0 {
        return Ok(Ok(vec![0; g.vertex_count()]));
    }
    match n {
        0 => return Ok(Err(fail("no colors left for a nonempty subgraph".into()))),
        1 => {
            let (u, v) = g.edges().next().unwrap();
            return Ok(Err(fail(format!(
                "edge ({}, {}) needs two colors",
                labels[u], labels[v]
            ))));
        }
        2 => {
            return Ok(match g.bipartite_2_coloring() {
                TwoColoring::Colored(c) => Ok(c.assignment().to_vec()),
                TwoColoring::OddCycle(cycle) => Err(fail(format!(
                    "odd cycle of length {} needs three colors",
                    cycle.len()
                ))),
            })
        }
        _ => {}
    }

    let carved = carve_with(g, k, opts.center_rule, opts.variant).map_err(ColoringError::Carve)?;
    let (sub, relabel) = g.induced_subgraph(&carved.boundary)?;
    let sub_labels: Vec<usize> = carved.boundary.iter().map(|v| labels[v]).collect();
    let inner = match carve_level(&sub, n - 2, k, opts, level + 1, &sub_labels)? {
        Ok(a) => a,
        Err(report) => return Ok(Err(report)),
    };

    let mut assignment = vec![usize::MAX; g.vertex_count()];
    for v in carved.boundary.iter() {
        assignment[v] = inner[relabel[v].unwrap()];
    }
    for ball in &carved.balls {
        color_ball(g, ball, n, &mut assignment)?;
    }
    Ok(Ok(assignment))
}

fn color_ball(
    g: &Graph,
    ball: &VertexSet,
    n: usize,
    assignment: &mut [usize],
) -> Result<(), ColoringError> {
    let (sub, relabel) = g.induced_subgraph(ball)?;
    match sub.bipartite_2_coloring() {
        TwoColoring::Colored(c) => {
            for v in ball.iter() {
                assignment[v] = n - 2 + c.color(relabel[v].unwrap());
            }
            Ok(())
        }
        TwoColoring::OddCycle(cycle) => {
            let vs = cycle.vertices();
            let back: Vec<usize> = ball.iter().collect();
            Err(ColoringError::Internal(back[vs[0]], back[vs[1]]))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ChromaticOutcome {
    Exact {
        chromatic_number: usize,
        witness: Coloring,
    },
    /// The node budget ran out; the chromatic number lies in `[lower, upper]`
    /// and `best` is a proper `upper`-coloring.
    BudgetExceeded {
        lower: usize,
        upper: usize,
        best: Coloring,
    },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact {
                chromatic_number, ..
            } => Some(*chromatic_number),
            ChromaticOutcome::BudgetExceeded { .. } => None,
        }
    }
}

/// Chromatic number by DSATUR branch and bound.
///
/// The lower bound is the larger of 3 (the graph is not bipartite by then)
/// and a greedily grown clique; the upper bound comes from greedy DSATUR. Branching picks the
/// uncolored vertex of highest saturation, then highest degree, then lowest
/// index. `budget` counts color assignments made by the search.
pub fn exact_chromatic(g: &Graph, budget: u64) -> ChromaticOutcome {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticOutcome::Exact {
            chromatic_number: 0,
            witness: Coloring::new(Vec::new(), 0),
        };
    }
    if g.edge_count() == 0 {
        return ChromaticOutcome::Exact {
            chromatic_number: 1,
            witness: Coloring::new(vec![0; n], 1),
        };
    }
    if let TwoColoring::Colored(c) = g.bipartite_2_coloring() {
        return ChromaticOutcome::Exact {
            chromatic_number: 2,
            witness: c,
        };
    }
    let lower = greedy_clique(g).max(3);
    let greedy = dsatur_greedy(g);
    let upper = greedy.num_colors();
    if upper == lower {
        return ChromaticOutcome::Exact {
            chromatic_number: upper,
            witness: greedy,
        };
    }
    let mut search = Search::new(g, upper, lower, budget);
    search.best_assignment = greedy.assignment().to_vec();
    let finished = search.run();
    let best = Coloring::new(search.best_assignment.clone(), search.best);
    if finished {
        ChromaticOutcome::Exact {
            chromatic_number: search.best,
            witness: best,
        }
    } else {
        ChromaticOutcome::BudgetExceeded {
            lower,
            upper: search.best,
            best,
        }
    }
}

/// Size of the largest clique found by growing one greedily from each vertex,
/// preferring high-degree candidates.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for v in g.vertices() {
        let mut clique = vec![v];
        let mut candidates: Vec<usize> = g.neighbors(v).to_vec();
        while let Some(&u) = candidates
            .iter()
            .max_by_key(|&&u| (g.degree(u), std::cmp::Reverse(u)))
        {
            clique.push(u);
            candidates.retain(|&w| w != u && g.has_edge(u, w));
        }
        best = best.max(clique.len());
    }
    best
}

/// An `n`-coloring if one exists.
pub fn find_coloring(
    g: &Graph,
    n: usize,
    budget: u64,
) -> Result<Option<Coloring>, BudgetExhausted> {
    let v = g.vertex_count();
    if v == 0 {
        return Ok(Some(Coloring::new(Vec::new(), n)));
    }
    if n == 0 {
        return Ok(None);
    }
    let greedy = dsatur_greedy(g);
    if greedy.num_colors() <= n {
        return Ok(Some(Coloring::new(greedy.assignment().to_vec(), n)));
    }
    let mut search = Search::new(g, n + 1, n, budget);
    if !search.run() {
        return Err(BudgetExhausted { budget });
    }
    Ok((search.best <= n).then(|| Coloring::new(search.best_assignment, n)))
}

/// Greedy DSATUR; colors are numbered in order of first use.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let mut state = SaturationState::new(g, max_degree + 1);
    let mut used = 0;
    for _ in 0..n {
        let v = state.pick(g);
        let c = (0..).find(|&c| state.counts[v][c] == 0).unwrap();
        state.assign(g, v, c);
        used = used.max(c + 1);
    }
    Coloring::new(state.color.iter().map(|c| c.unwrap()).collect(), used)
}

struct SaturationState {
    color: Vec<Option<usize>>,
    /// `counts[v][c]`: colored neighbors of `v` with color `c`.
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl SaturationState {
    fn new(g: &Graph, max_colors: usize) -> Self {
        let n = g.vertex_count();
        SaturationState {
            color: vec![None; n],
            counts: vec![vec![0; max_colors]; n],
            saturation: vec![0; n],
        }
    }

    fn pick(&self, g: &Graph) -> usize {
        g.vertices()
            .filter(|&v| self.color[v].is_none())
            .max_by(|&a, &b| {
                (self.saturation[a], g.degree(a))
                    .cmp(&(self.saturation[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap()
    }

    fn assign(&mut self, g: &Graph, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &w in g.neighbors(v) {
            if self.counts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, g: &Graph, v: usize) {
        let c = self.color[v].take().unwrap();
        for &w in g.neighbors(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

/// Searches for colorings with fewer than `best` colors, stopping once
/// `best <= stop_at`.
struct Search<'a> {
    g: &'a Graph,
    state: SaturationState,
    best: usize,
    best_assignment: Vec<usize>,
    stop_at: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, best: usize, stop_at: usize, budget: u64) -> Self {
        Search {
            g,
            state: SaturationState::new(g, best.max(1)),
            best,
            best_assignment: Vec::new(),
            stop_at,
            nodes: 0,
            budget,
        }
    }

    /// `true` when the search space was exhausted (or the target reached).
    fn run(&mut self) -> bool {
        self.dfs(0, 0).is_ok()
    }

    fn dfs(&mut self, colored: usize, used: usize) -> Result<(), ()> {
        if used >= self.best || self.best <= self.stop_at {
            return Ok(());
        }
        if colored == self.g.vertex_count() {
            self.best = used;
            self.best_assignment = self.state.color.iter().map(|c| c.unwrap()).collect();
            return Ok(());
        }
        let v = self.state.pick(self.g);
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if c < used && self.state.counts[v][c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            self.state.assign(self.g, v, c);
            let r = self.dfs(colored + 1, used.max(c + 1));
            self.state.unassign(self.g, v);
            r?;
            if used >= self.best || self.best <= self.stop_at {
                break;
            }
        }
        Ok(())
    }
}
