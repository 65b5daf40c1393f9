//! Short odd cycles and the sphere-independence characterisation: a graph has
//! no odd cycle of length at most `2k - 1` exactly when every sphere `S_r(v)`
//! with `1 <= r < k` is an independent set.

use serde::Serialize;

use crate::graph::{bfs_tree, tree_path, Graph};

/// Odd closed walk given as its vertex sequence (the closing edge from the
/// last vertex back to the first is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OddCycleCertificate {
    vertices: Vec<usize>,
}

impl OddCycleCertificate {
    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() % 2 == 1 && vertices.len() >= 3);
        OddCycleCertificate { vertices }
    }

    /// Accepts `vertices` only if it is an odd closed walk of length at least 3 in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Option<Self> {
        let cert = OddCycleCertificate { vertices };
        cert.verify(g).then_some(cert)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let n = self.vertices.len();
        n >= 3
            && n % 2 == 1
            && (0..n).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// `true` when no vertex repeats, i.e. the walk is a simple cycle.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// An edge inside the sphere `S_radius(center)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SphereViolation {
    pub center: usize,
    pub radius: usize,
    pub edge: (usize, usize),
}

impl SphereViolation {
    /// Joins the violating edge with shortest paths back to the center, giving
    /// an odd closed walk of length `2 * radius + 1`.
    pub fn to_certificate(&self, g: &Graph) -> OddCycleCertificate {
        let (_, parent) = bfs_tree(g, self.center);
        let mut walk = tree_path(&parent, self.edge.0);
        let mut back = tree_path(&parent, self.edge.1);
        back.reverse();
        back.pop();
        walk.extend(back);
        OddCycleCertificate::new_unchecked(walk)
    }
}

/// A minimum-length odd cycle, or `None` if `g` is bipartite.
///
/// BFS from every vertex; an edge joining two vertices of the same layer `d`
/// closes an odd walk of length `2d + 1`, and the minimum over all sources is
/// the odd girth. Ties go to the smallest source, then the first such edge.
pub fn shortest_odd_cycle(g: &Graph) -> Option<OddCycleCertificate> {
    let mut best: Option<(usize, usize, (usize, usize))> = None;
    for s in g.vertices() {
        // Layer bound: only layers strictly below the current best half-length help.
        let limit = best.map_or(usize::MAX, |(len, _, _)| (len - 1) / 2);
        if let Some((d, edge)) = first_layer_edge(g, s, limit) {
            let len = 2 * d + 1;
            if best.is_none_or(|(b, _, _)| len < b) {
                best = Some((len, s, edge));
            }
        }
    }
    best.map(|(len, s, edge)| {
        let cert = SphereViolation {
            center: s,
            radius: (len - 1) / 2,
            edge,
        }
        .to_certificate(g);
        debug_assert_eq!(cert.len(), len);
        cert
    })
}

/// Smallest layer `d < limit` of the BFS from `s` containing an edge, with the
/// lexicographically first such edge.
fn first_layer_edge(g: &Graph, s: usize, limit: usize) -> Option<(usize, (usize, usize))> {
    let (dist, _) = bfs_tree(g, s);
    let mut found: Option<(usize, (usize, usize))> = None;
    for (u, w) in g.edges() {
        if let (Some(du), Some(dw)) = (dist[u], dist[w]) {
            if du == dw && du < limit && found.is_none_or(|(d, _)| du < d) {
                found = Some((du, (u, w)));
            }
        }
    }
    found
}

/// Checks that every sphere `S_r(v)` with `1 <= r < k` is independent.
/// Scan order: `v` ascending, then `r`, then edges lexicographically.
pub fn check_sphere_independence(g: &Graph, k: usize) -> Result<(), SphereViolation> {
    for v in g.vertices() {
        let (dist, _) = bfs_tree(g, v);
        let mut hit: Option<(usize, (usize, usize))> = None;
        for (a, b) in g.edges() {
            if let (Some(da), Some(db)) = (dist[a], dist[b]) {
                if da == db && da >= 1 && da < k && hit.is_none_or(|(r, _)| da < r) {
                    hit = Some((da, (a, b)));
                }
            }
        }
        if let Some((radius, edge)) = hit {
            return Err(SphereViolation {
                center: v,
                radius,
                edge,
            });
        }
    }
    Ok(())
}

/// `true` iff every odd cycle of `g` has length at least `threshold`.
pub fn odd_girth_at_least(g: &Graph, threshold: usize) -> bool {
    odd_girth(g).is_none_or(|len| len >= threshold)
}

/// Length of the shortest odd cycle, `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    shortest_odd_cycle(g).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_graph, petersen_graph};

    #[test]
    fn shortest_odd_cycles() {
        let c5 = cycle_graph(5).unwrap();
        let cert = shortest_odd_cycle(&c5).unwrap();
        assert_eq!(cert.len(), 5);
        assert!(cert.verify(&c5) && cert.is_simple());
        assert!(shortest_odd_cycle(&cycle_graph(4).unwrap()).is_none());
        let p = petersen_graph();
        let cert = shortest_odd_cycle(&p).unwrap();
        assert_eq!(cert.len(), 5);
        assert!(cert.verify(&p) && cert.is_simple());
    }

    #[test]
    fn shortest_odd_cycle_prefers_the_short_one() {
        // C9 with a chord making a triangle 0-1-2.
        let mut edges: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.push((0, 2));
        let g = Graph::from_edges(9, edges).unwrap();
        let cert = shortest_odd_cycle(&g).unwrap();
        assert_eq!(cert.len(), 3);
        assert!(cert.verify(&g));
    }

    #[test]
    fn sphere_independence_on_cycles() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(check_sphere_independence(&c5, 2), Ok(()));
        let v = check_sphere_independence(&c5, 3).unwrap_err();
        assert_eq!(
            v,
            SphereViolation {
                center: 0,
                radius: 2,
                edge: (2, 3)
            }
        );
        let cert = v.to_certificate(&c5);
        assert_eq!(cert.len(), 5);
        assert!(cert.verify(&c5));
        assert_eq!(
            check_sphere_independence(&cycle_graph(7).unwrap(), 3),
            Ok(())
        );
    }

    #[test]
    fn odd_girth_thresholds() {
        let c5 = cycle_graph(5).unwrap();
        assert!(odd_girth_at_least(&c5, 5));
        assert!(!odd_girth_at_least(&c5, 7));
        assert!(odd_girth_at_least(&cycle_graph(4).unwrap(), 999));
    }

    #[test]
    fn certificate_rejects_even_or_broken_walks() {
        let c5 = cycle_graph(5).unwrap();
        assert!(OddCycleCertificate::new(&c5, vec![0, 1, 2, 3, 4]).is_some());
        assert!(OddCycleCertificate::new(&c5, vec![0, 1, 2, 3]).is_none());
        assert!(OddCycleCertificate::new(&c5, vec![0, 2, 4]).is_none());
    }
}
