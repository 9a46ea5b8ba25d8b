//! Edge-anchored distance partitions and the distance-balance predicates.
//!
//! For an edge `uv`, `D^k_l(u, v)` is the set of vertices at distance `k`
//! from `u` and `l` from `v`. Only `D^k_{k-1}`, `D^k_k` and `D^{k-1}_k` can be
//! nonempty, so a partition is three counts per level `k = 1..=d`.
//!
//! Each whole-graph predicate comes with an independent second route:
//! strong balance is decided both from partition cells and from sphere
//! profiles, and plain balance both from partition sums and from triples.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Cell counts of the distance partition with respect to edge `(u, v)`.
///
/// Levels are 1-based: `below(k) = |D^k_{k-1}(u,v)|`,
/// `level(k) = |D^k_k(u,v)|` and `above(k) = |D^{k-1}_k(u,v)|` for
/// `k = 1..=depth`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistancePartition {
    pub u: Vertex,
    pub v: Vertex,
    pub depth: usize,
    below: Vec<usize>,
    level: Vec<usize>,
    above: Vec<usize>,
}

impl DistancePartition {
    fn from_rows(u: Vertex, v: Vertex, depth: usize, du: &[u32], dv: &[u32]) -> Self {
        let mut below = vec![0; depth];
        let mut level = vec![0; depth];
        let mut above = vec![0; depth];
        for (&a, &b) in du.iter().zip(dv) {
            let (a, b) = (a as usize, b as usize);
            if a == b + 1 {
                below[a - 1] += 1;
            } else if a == b {
                level[a - 1] += 1;
            } else {
                debug_assert_eq!(b, a + 1);
                above[b - 1] += 1;
            }
        }
        DistancePartition {
            u,
            v,
            depth,
            below,
            level,
            above,
        }
    }

    /// `|D^k_{k-1}(u,v)|`, for `1 ≤ k ≤ depth`.
    pub fn below(&self, k: usize) -> usize {
        self.below[k - 1]
    }

    /// `|D^k_k(u,v)|`.
    pub fn level(&self, k: usize) -> usize {
        self.level[k - 1]
    }

    /// `|D^{k-1}_k(u,v)|`.
    pub fn above(&self, k: usize) -> usize {
        self.above[k - 1]
    }

    /// `below(k)` for `k = 1..=depth`.
    pub fn below_counts(&self) -> &[usize] {
        &self.below
    }

    pub fn level_counts(&self) -> &[usize] {
        &self.level
    }

    pub fn above_counts(&self) -> &[usize] {
        &self.above
    }

    pub fn total(&self) -> usize {
        self.below.iter().chain(&self.level).chain(&self.above).sum()
    }

    /// Smallest `k` with `below(k) ≠ above(k)`.
    pub fn first_imbalance(&self) -> Option<SdbWitness> {
        (1..=self.depth)
            .find(|&k| self.below(k) != self.above(k))
            .map(|k| SdbWitness {
                u: self.u,
                v: self.v,
                k,
                below: self.below(k),
                above: self.above(k),
            })
    }

    /// The balance triple of the arc `(u, v)` read off the partition.
    pub fn triple(&self) -> BalanceTriple {
        BalanceTriple {
            u: self.u,
            v: self.v,
            left: self.above.iter().sum(),
            central: self.level.iter().sum(),
            right: self.below.iter().sum(),
        }
    }
}

/// Distance-balance triple of an arc: vertices strictly closer to the tail
/// `u`, equidistant, strictly closer to the head `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BalanceTriple {
    pub u: Vertex,
    pub v: Vertex,
    pub left: usize,
    pub central: usize,
    pub right: usize,
}

impl BalanceTriple {
    pub fn reversed(&self) -> BalanceTriple {
        BalanceTriple {
            u: self.v,
            v: self.u,
            left: self.right,
            central: self.central,
            right: self.left,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.left == self.right
    }
}

/// An edge and level where `|D^k_{k-1}(u,v)| ≠ |D^{k-1}_k(u,v)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SdbWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub k: usize,
    pub below: usize,
    pub above: usize,
}

/// Outcome of a whole-graph predicate, carrying the smallest witness on
/// failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    fn from_first(witness: Option<W>) -> Self {
        witness.map_or(Verdict::Holds, Verdict::Fails)
    }
}

/// Partition for a single edge, from two BFS runs.
pub fn distance_partition(g: &Graph, u: Vertex, v: Vertex) -> Result<DistancePartition> {
    g.check_edge(u, v)?;
    let du = g.bfs_distances(u)?.into_finite()?;
    let dv = g.bfs_distances(v)?.into_finite()?;
    let depth = g.diameter()? as usize;
    Ok(DistancePartition::from_rows(u, v, depth, &du, &dv))
}

/// Balance triple of the arc `(u, v)`, counted directly from the distance
/// comparison rather than from partition cells.
pub fn balance_triple(g: &Graph, u: Vertex, v: Vertex) -> Result<BalanceTriple> {
    g.check_edge(u, v)?;
    let du = g.bfs_distances(u)?.into_finite()?;
    let dv = g.bfs_distances(v)?.into_finite()?;
    Ok(triple_from_rows(u, v, &du, &dv))
}

fn triple_from_rows(u: Vertex, v: Vertex, du: &[u32], dv: &[u32]) -> BalanceTriple {
    let mut triple = BalanceTriple {
        u,
        v,
        left: 0,
        central: 0,
        right: 0,
    };
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => triple.left += 1,
            std::cmp::Ordering::Equal => triple.central += 1,
            std::cmp::Ordering::Greater => triple.right += 1,
        }
    }
    triple
}

/// All-pairs distances plus the per-edge views derived from them. Build it
/// once when several predicates are evaluated on the same graph.
#[derive(Debug, Clone)]
pub struct EdgeMetrics<'g> {
    graph: &'g Graph,
    matrix: DistanceMatrix,
    depth: usize,
}

impl<'g> EdgeMetrics<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let matrix = DistanceMatrix::new(graph)?;
        let depth = matrix.diameter() as usize;
        Ok(EdgeMetrics {
            graph,
            matrix,
            depth,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.matrix
    }

    pub fn diameter(&self) -> usize {
        self.depth
    }

    pub fn partition(&self, u: Vertex, v: Vertex) -> Result<DistancePartition> {
        self.graph.check_edge(u, v)?;
        Ok(DistancePartition::from_rows(
            u,
            v,
            self.depth,
            self.matrix.row(u),
            self.matrix.row(v),
        ))
    }

    pub fn triple(&self, u: Vertex, v: Vertex) -> Result<BalanceTriple> {
        self.graph.check_edge(u, v)?;
        Ok(triple_from_rows(u, v, self.matrix.row(u), self.matrix.row(v)))
    }

    fn edge_list(&self) -> Vec<(Vertex, Vertex)> {
        self.graph.edges().collect()
    }

    /// Partition of every edge, tail = lower id, in edge order.
    pub fn partitions(&self) -> Vec<DistancePartition> {
        self.edge_list()
            .into_par_iter()
            .map(|(u, v)| {
                DistancePartition::from_rows(u, v, self.depth, self.matrix.row(u), self.matrix.row(v))
            })
            .collect()
    }

    /// Triple of every edge, tail = lower id, in edge order.
    pub fn triples(&self) -> Vec<BalanceTriple> {
        self.edge_list()
            .into_par_iter()
            .map(|(u, v)| triple_from_rows(u, v, self.matrix.row(u), self.matrix.row(v)))
            .collect()
    }

    /// Equation form: `Σ_k below(k) = Σ_k above(k)` on every edge. The
    /// witness is the first unbalanced edge's triple.
    pub fn distance_balanced(&self) -> Verdict<BalanceTriple> {
        let first = self
            .edge_list()
            .into_par_iter()
            .map(|(u, v)| {
                DistancePartition::from_rows(u, v, self.depth, self.matrix.row(u), self.matrix.row(v))
            })
            .find_map_first(|p| {
                let below: usize = p.below_counts().iter().sum();
                let above: usize = p.above_counts().iter().sum();
                (below != above).then(|| p.triple())
            });
        Verdict::from_first(first)
    }

    /// Triple form: `left = right` for every arc.
    pub fn distance_balanced_by_triples(&self) -> Verdict<BalanceTriple> {
        let first = self
            .edge_list()
            .into_par_iter()
            .map(|(u, v)| triple_from_rows(u, v, self.matrix.row(u), self.matrix.row(v)))
            .find_map_first(|t| (!t.is_balanced()).then_some(t));
        Verdict::from_first(first)
    }

    /// `below(k) = above(k)` for every edge and every level; the witness is
    /// the lexicographically smallest `(u, v, k)` with `u < v`.
    pub fn strongly_distance_balanced(&self) -> Verdict<SdbWitness> {
        let first = self
            .edge_list()
            .into_par_iter()
            .find_map_first(|(u, v)| {
                DistancePartition::from_rows(u, v, self.depth, self.matrix.row(u), self.matrix.row(v))
                    .first_imbalance()
            });
        Verdict::from_first(first)
    }
}

pub fn is_distance_balanced(g: &Graph) -> Result<Verdict<BalanceTriple>> {
    Ok(EdgeMetrics::new(g)?.distance_balanced())
}

pub fn is_strongly_distance_balanced(g: &Graph) -> Result<Verdict<SdbWitness>> {
    Ok(EdgeMetrics::new(g)?.strongly_distance_balanced())
}

/// Sphere profiles of every vertex, each from its own BFS.
pub fn sphere_profiles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    (0..g.vertex_count())
        .into_par_iter()
        .map(|v| g.sphere_profile(v).map(|p| p.sizes))
        .collect()
}

/// Strong balance decided from sphere sizes: `|S_i(u)| = |S_i(v)|` for every
/// edge `uv` and every `i`. Shares nothing with the partition route beyond
/// BFS.
pub fn is_sdb_via_spheres(g: &Graph) -> Result<bool> {
    let profiles = sphere_profiles(g)?;
    Ok(g.edges().all(|(u, v)| profiles[u] == profiles[v]))
}

/// Whether every vertex has the same sphere profile.
pub fn is_distance_degree_regular(g: &Graph) -> Result<bool> {
    let profiles = sphere_profiles(g)?;
    Ok(profiles.windows(2).all(|w| w[0] == w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::GpSpec;

    fn k2() -> Graph {
        Graph::from_edges(2, [(0, 1)]).unwrap()
    }

    fn gp(n: usize, k: usize) -> Graph {
        GpSpec::new(n, k).unwrap().build()
    }

    #[test]
    fn k2_partition() {
        let p = distance_partition(&k2(), 0, 1).unwrap();
        assert_eq!(p.below_counts(), &[1]);
        assert_eq!(p.level_counts(), &[0]);
        assert_eq!(p.above_counts(), &[1]);
        let t = balance_triple(&k2(), 1, 0).unwrap();
        assert_eq!((t.left, t.central, t.right), (1, 0, 1));
        assert!(is_sdb_via_spheres(&k2()).unwrap());
    }

    #[test]
    fn endpoints_fill_first_level() {
        let g = gp(7, 2);
        let m = EdgeMetrics::new(&g).unwrap();
        for p in m.partitions() {
            assert_eq!((p.below(1), p.above(1)), (1, 1));
            assert_eq!(p.total(), g.vertex_count());
        }
    }

    #[test]
    fn not_an_edge() {
        let g = gp(5, 2);
        assert_eq!(
            distance_partition(&g, 0, 2),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        );
        assert!(balance_triple(&g, 0, 7).is_err());
    }

    #[test]
    fn disconnected_is_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            is_distance_balanced(&g),
            Err(Error::Disconnected { .. })
        ));
        assert!(is_strongly_distance_balanced(&g).is_err());
        assert!(is_sdb_via_spheres(&g).is_err());
        assert!(is_distance_degree_regular(&g).is_err());
        assert!(distance_partition(&g, 0, 1).is_err());
    }

    #[test]
    fn star_is_not_distance_degree_regular() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_distance_degree_regular(&star).unwrap());
        // leaves are closer to themselves than the centre is: not balanced
        assert!(!is_distance_balanced(&star).unwrap().holds());
    }

    #[test]
    fn path_witness_is_smallest() {
        // path 0-1-2-3: edge (0,1) is the first unbalanced one
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let verdict = is_strongly_distance_balanced(&g).unwrap();
        let w = *verdict.witness().unwrap();
        assert_eq!((w.u, w.v, w.k), (0, 1, 2));
        assert_eq!((w.below, w.above), (1, 0));
        let db = is_distance_balanced(&g).unwrap();
        let t = db.witness().unwrap();
        assert_eq!((t.u, t.v, t.left, t.central, t.right), (0, 1, 1, 0, 3));
    }

    #[test]
    fn petersen_predicates() {
        let g = gp(5, 2);
        assert!(is_distance_balanced(&g).unwrap().holds());
        assert!(is_strongly_distance_balanced(&g).unwrap().holds());
        assert!(is_distance_degree_regular(&g).unwrap());
        let t = balance_triple(&g, 0, 1).unwrap();
        assert_eq!(t.left, t.right);
    }
}
