//! Ball carving for graphs without odd cycles of length at most `2k - 1`.
//!
//! Repeatedly pick a center in the remaining graph, grow balls around it until
//! the growth ratio `|U_m| / |U_{m-1}|` drops to the threshold `T`, keep the
//! inner ball `U_{m-1}` (bipartite, since all spheres of radius below `k` are
//! independent) and move the sphere `S_m` to the boundary. The result is a
//! partition `V = U_1 ⊔ ... ⊔ U_s ⊔ N` with
//!
//! * (i) `∂U_i ⊆ N` for every ball,
//! * (ii) every `G(U_i)` bipartite,
//! * (iii) `(T - 1) · Σ|U_i| ≥ |N|`, hence `|N| ≤ |V| (T - 1) / T`.
//!
//! With [`CarveVariant::Standard`] the threshold is `d^{1/(k-1)}` where
//! `d = max_v |U_{k-1}(v)|` and radii range over `1..=k-1`; with
//! [`CarveVariant::VertexCountRoot`] it is `|V|^{1/k}` and radii range over
//! `1..=k`.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{bfs_layers, Graph, TwoColoring, VertexSet};
use crate::oddgirth::{check_sphere_independence, OddCycleCertificate, SphereViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("sphere S_{} around {} contains the edge {:?}", .0.radius, .0.center, .0.edge)]
    SphereIndependence(SphereViolation),
    #[error("no radius met the growth threshold at step {step}")]
    NoQualifyingRadius { step: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterRule {
    /// Lowest-indexed remaining vertex.
    #[default]
    First,
    /// Remaining vertex minimising `|U_{k-1}(u, G_rem)|`, ties to the lowest index.
    MinBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CarveVariant {
    /// Threshold `d^{1/(k-1)}`, radii `1..=k-1`.
    #[default]
    Standard,
    /// Threshold `|V|^{1/k}`, radii `1..=k`.
    VertexCountRoot,
}

/// Threshold `T = base^{1/root}`; `value` is only for display.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CarveThreshold {
    pub base: usize,
    pub root: usize,
    pub value: f64,
}

impl CarveThreshold {
    fn new(base: usize, root: usize) -> Self {
        CarveThreshold {
            base,
            root,
            value: (base as f64).powf(1.0 / root as f64),
        }
    }

    /// `outer / inner <= T`, decided exactly as `outer^root <= base * inner^root`.
    pub fn admits(&self, inner: usize, outer: usize) -> bool {
        BigUint::from(outer).pow(self.root as u32)
            <= BigUint::from(self.base) * BigUint::from(inner).pow(self.root as u32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CarveStep {
    pub center: usize,
    /// Radius `m - 1` of the kept ball.
    pub radius: usize,
    /// `|U_{m-1}|`
    pub ball_size: usize,
    /// `|U_m|`
    pub outer_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CarveResult {
    pub k: usize,
    pub center_rule: CenterRule,
    pub variant: CarveVariant,
    pub threshold: CarveThreshold,
    pub balls: Vec<VertexSet>,
    pub boundary: VertexSet,
    pub trace: Vec<CarveStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantViolation {
    #[error("vertex {vertex} is covered {count} times")]
    NotAPartition { vertex: usize, count: usize },
    #[error("ball {ball} has outer-boundary vertex {vertex} outside the boundary set")]
    BoundaryEscape { ball: usize, vertex: usize },
    #[error("ball {ball} is not bipartite")]
    BallNotBipartite {
        ball: usize,
        cycle: OddCycleCertificate,
    },
    #[error("edge ({0}, {1}) joins two different balls")]
    EdgeBetweenBalls(usize, usize),
    #[error("boundary of size {boundary} exceeds (T - 1) times the ball total {balls}")]
    BoundaryTooLarge { boundary: usize, balls: usize },
}

/// `d = max_v |U_{k-1}(v)|`.
pub fn compute_d(g: &Graph, k: usize) -> Result<usize, DecompositionError> {
    if k < 2 {
        return Err(DecompositionError::InvalidK(k));
    }
    if g.is_empty() {
        return Err(DecompositionError::EmptyGraph);
    }
    Ok(g.vertices()
        .map(|v| ball_size(g, v, k - 1, None))
        .max()
        .unwrap())
}

fn ball_size(g: &Graph, v: usize, r: usize, alive: Option<&[bool]>) -> usize {
    bfs_layers(g, v, r, alive).1.iter().sum()
}

/// Carving with the `d^{1/(k-1)}` threshold.
pub fn carve(g: &Graph, k: usize, rule: CenterRule) -> Result<CarveResult, DecompositionError> {
    carve_with(g, k, rule, CarveVariant::Standard)
}

/// Carving with the `|V|^{1/k}` threshold over radii `1..=k`.
pub fn carve_vertex_count_root(
    g: &Graph,
    k: usize,
    rule: CenterRule,
) -> Result<CarveResult, DecompositionError> {
    carve_with(g, k, rule, CarveVariant::VertexCountRoot)
}

pub fn carve_with(
    g: &Graph,
    k: usize,
    rule: CenterRule,
    variant: CarveVariant,
) -> Result<CarveResult, DecompositionError> {
    if k < 2 {
        return Err(DecompositionError::InvalidK(k));
    }
    if g.is_empty() {
        return Err(DecompositionError::EmptyGraph);
    }
    check_sphere_independence(g, k).map_err(DecompositionError::SphereIndependence)?;

    let n = g.vertex_count();
    // d is fixed on the whole graph: balls in the shrinking remainder only get smaller.
    let (threshold, max_radius) = match variant {
        CarveVariant::Standard => (CarveThreshold::new(compute_d(g, k)?, k - 1), k - 1),
        CarveVariant::VertexCountRoot => (CarveThreshold::new(n, k), k),
    };

    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut balls = Vec::new();
    let mut boundary = VertexSet::new(n);
    let mut trace = Vec::new();

    while remaining > 0 {
        let center = match rule {
            CenterRule::First => alive.iter().position(|&a| a).unwrap(),
            CenterRule::MinBall => (0..n)
                .filter(|&u| alive[u])
                .min_by_key(|&u| (ball_size(g, u, k - 1, Some(&alive)), u))
                .unwrap(),
        };
        let (dist, layers) = bfs_layers(g, center, max_radius, Some(&alive));
        let size_at = |r: usize| -> usize { layers.iter().take(r + 1).sum() };
        let m = (1..=max_radius)
            .find(|&m| threshold.admits(size_at(m - 1), size_at(m)))
            .ok_or(DecompositionError::NoQualifyingRadius { step: balls.len() })?;

        let mut ball = VertexSet::new(n);
        for v in 0..n {
            match dist[v] {
                Some(dv) if dv < m => {
                    ball.insert(v);
                }
                Some(dv) if dv == m => {
                    boundary.insert(v);
                }
                _ => continue,
            }
            alive[v] = false;
            remaining -= 1;
        }
        trace.push(CarveStep {
            center,
            radius: m - 1,
            ball_size: size_at(m - 1),
            outer_size: size_at(m),
        });
        balls.push(ball);
    }

    Ok(CarveResult {
        k,
        center_rule: rule,
        variant,
        threshold,
        balls,
        boundary,
        trace,
    })
}

impl CarveResult {
    pub fn ball_total(&self) -> usize {
        self.balls.iter().map(VertexSet::len).sum()
    }

    /// Exact form of (iii): `(T - 1) S >= N` with `T = base^{1/root}` is
    /// `base * S^root >= (N + S)^root`.
    pub fn boundary_bound_holds(&self) -> bool {
        let s = self.ball_total();
        let nb = self.boundary.len();
        if s == 0 {
            return nb == 0;
        }
        let root = self.threshold.root as u32;
        BigUint::from(self.threshold.base) * BigUint::from(s).pow(root)
            >= BigUint::from(nb + s).pow(root)
    }

    /// `|N| <= |V| (T - 1) / T`, in floating point with an absolute slack.
    pub fn boundary_fraction_holds(&self, slack: f64) -> bool {
        let t = self.threshold.value;
        let v = (self.ball_total() + self.boundary.len()) as f64;
        self.boundary.len() as f64 <= v * (t - 1.0) / t + slack
    }

    /// Checks the partition property, (i), (ii), (iii), and that no edge
    /// joins two different balls.
    pub fn check_invariants(&self, g: &Graph) -> Result<(), InvariantViolation> {
        let n = g.vertex_count();
        let mut owner = vec![None; n];
        let mut count = vec![0usize; n];
        for (i, ball) in self.balls.iter().enumerate() {
            for v in ball.iter() {
                owner[v] = Some(i);
                count[v] += 1;
            }
        }
        for v in self.boundary.iter() {
            count[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| count[v] != 1) {
            return Err(InvariantViolation::NotAPartition {
                vertex: v,
                count: count[v],
            });
        }
        for (i, ball) in self.balls.iter().enumerate() {
            let outer = g
                .outer_boundary(ball)
                .expect("ball over the same vertex set");
            if let Some(v) = outer.iter().find(|&v| !self.boundary.contains(v)) {
                return Err(InvariantViolation::BoundaryEscape { ball: i, vertex: v });
            }
            let (sub, _) = g
                .induced_subgraph(ball)
                .expect("ball over the same vertex set");
            if let TwoColoring::OddCycle(cycle) = sub.bipartite_2_coloring() {
                return Err(InvariantViolation::BallNotBipartite { ball: i, cycle });
            }
        }
        for (u, w) in g.edges() {
            if let (Some(a), Some(b)) = (owner[u], owner[w]) {
                if a != b {
                    return Err(InvariantViolation::EdgeBetweenBalls(u, w));
                }
            }
        }
        if !self.boundary_bound_holds() {
            return Err(InvariantViolation::BoundaryTooLarge {
                boundary: self.boundary.len(),
                balls: self.ball_total(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_graph, path_graph};

    #[test]
    fn d_values() {
        assert_eq!(compute_d(&cycle_graph(5).unwrap(), 2), Ok(3));
        assert_eq!(compute_d(&cycle_graph(7).unwrap(), 3), Ok(5));
        assert_eq!(compute_d(&Graph::empty(4), 2), Ok(1));
        assert_eq!(
            compute_d(&Graph::empty(0), 2),
            Err(DecompositionError::EmptyGraph)
        );
    }

    #[test]
    fn carve_c5_by_hand() {
        let c5 = cycle_graph(5).unwrap();
        let r = carve(&c5, 2, CenterRule::First).unwrap();
        assert_eq!(r.threshold.base, 3);
        assert_eq!(r.threshold.root, 1);
        let balls: Vec<_> = r.balls.iter().map(VertexSet::to_vec).collect();
        assert_eq!(balls, vec![vec![0], vec![2]]);
        assert_eq!(r.boundary.to_vec(), vec![1, 3, 4]);
        // (3 - 1) * 2 = 4 >= 3
        assert!(r.boundary_bound_holds());
        r.check_invariants(&c5).unwrap();
    }

    #[test]
    fn carve_edgeless_gives_singletons() {
        let g = Graph::empty(5);
        let r = carve(&g, 2, CenterRule::First).unwrap();
        assert_eq!(r.balls.len(), 5);
        assert!(r.balls.iter().all(|b| b.len() == 1));
        assert!(r.boundary.is_empty());
        r.check_invariants(&g).unwrap();
    }

    #[test]
    fn carve_c7_k3() {
        let c7 = cycle_graph(7).unwrap();
        for rule in [CenterRule::First, CenterRule::MinBall] {
            let r = carve(&c7, 3, rule).unwrap();
            assert!((r.threshold.value - 5f64.sqrt()).abs() < 1e-12);
            r.check_invariants(&c7).unwrap();
            assert!(r.boundary_fraction_holds(1e-9));
        }
        // first rule: center 0, |U_0| = 1, |U_1| = 3 > sqrt(5), |U_2| = 5 <= sqrt(5) * 3,
        // so m = 2 keeps {6, 0, 1} and sends {2, 5} to the boundary; then the
        // path 3-4 is carved from 3 with m = 1.
        let r = carve(&c7, 3, CenterRule::First).unwrap();
        let balls: Vec<_> = r.balls.iter().map(VertexSet::to_vec).collect();
        assert_eq!(balls, vec![vec![0, 1, 6], vec![3]]);
        assert_eq!(r.boundary.to_vec(), vec![2, 4, 5]);
    }

    #[test]
    fn vertex_count_root_variant() {
        let c5 = cycle_graph(5).unwrap();
        let r = carve_vertex_count_root(&c5, 2, CenterRule::First).unwrap();
        assert_eq!((r.threshold.base, r.threshold.root), (5, 2));
        r.check_invariants(&c5).unwrap();
        assert!(r.boundary_fraction_holds(1e-9));

        let one = Graph::empty(1);
        let r = carve_vertex_count_root(&one, 2, CenterRule::First).unwrap();
        assert_eq!(r.balls.len(), 1);
        assert_eq!(r.balls[0].to_vec(), vec![0]);
        assert!(r.boundary.is_empty());

        let c9 = cycle_graph(9).unwrap();
        let r = carve_vertex_count_root(&c9, 2, CenterRule::First).unwrap();
        assert_eq!(r.threshold.value, 3.0);
        r.check_invariants(&c9).unwrap();
        assert!(r.boundary_fraction_holds(1e-9));
    }

    #[test]
    fn precondition_failure_is_typed() {
        let c5 = cycle_graph(5).unwrap();
        match carve(&c5, 3, CenterRule::First) {
            Err(DecompositionError::SphereIndependence(v)) => {
                assert_eq!((v.center, v.radius, v.edge), (0, 2, (2, 3)))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            carve(&path_graph(3), 1, CenterRule::First).unwrap_err(),
            DecompositionError::InvalidK(1)
        );
    }

    #[test]
    fn serializes_balls_as_arrays() {
        let r = carve(&cycle_graph(5).unwrap(), 2, CenterRule::First).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["balls"], serde_json::json!([[0], [2]]));
        assert_eq!(json["boundary"], serde_json::json!([1, 3, 4]));
        assert_eq!(json["center_rule"], "first");
    }
}
