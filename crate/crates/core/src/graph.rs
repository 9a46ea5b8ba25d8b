//! Immutable simple undirected graphs and the BFS metric primitives every
//! other module is built on.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense 0-based vertex id.
pub type Vertex = usize;

/// Shortest-path length in edges.
pub type Distance = u32;

/// A simple undirected graph with sorted adjacency lists.
///
/// The graph never changes after construction, so it can be shared freely
/// between threads running BFS from different sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range ids are
    /// rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, vertex: Vertex) -> Result<()> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                vertex_count: self.vertex_count(),
            })
        }
    }

    pub(crate) fn check_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge { u, v })
        }
    }

    /// Single-source BFS.
    pub fn bfs_distances(&self, source: Vertex) -> Result<DistanceVector> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let next = dist[x].map(|d: Distance| d + 1);
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
        Ok(DistanceVector { source, dist })
    }

    pub fn sphere_profile(&self, center: Vertex) -> Result<SphereProfile> {
        let dist = self.bfs_distances(center)?.into_finite()?;
        let eccentricity = dist.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0; eccentricity + 1];
        for d in dist {
            sizes[d as usize] += 1;
        }
        Ok(SphereProfile { center, sizes })
    }

    pub fn eccentricity(&self, v: Vertex) -> Result<Distance> {
        let dist = self.bfs_distances(v)?.into_finite()?;
        Ok(dist.into_iter().max().unwrap_or(0))
    }

    pub fn is_connected(&self) -> bool {
        match self.adjacency.len() {
            0 => true,
            _ => self
                .bfs_distances(0)
                .map(|d| d.unreachable().is_none())
                .unwrap_or(false),
        }
    }

    /// Largest eccentricity over all vertices.
    pub fn diameter(&self) -> Result<Distance> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        (0..self.vertex_count())
            .into_par_iter()
            .map(|v| self.eccentricity(v))
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))
    }

    /// Two-colors every component by BFS parity; fails on the first odd cycle.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let mut color: Vec<Option<u8>> = vec![None; self.vertex_count()];
        for root in 0..self.vertex_count() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap_or(0);
                for &y in &self.adjacency[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(1 - cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return Bipartiteness::NotBipartite,
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color.into_iter().map(|c| c.unwrap_or(0)).collect())
    }

    /// Checks that `coloring` is a proper 2-coloring of this graph.
    pub fn is_proper_two_coloring(&self, coloring: &[u8]) -> bool {
        coloring.len() == self.vertex_count()
            && coloring.iter().all(|&c| c <= 1)
            && self.edges().all(|(u, v)| coloring[u] != coloring[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Color (0 or 1) per vertex.
    Bipartite(Vec<u8>),
    NotBipartite,
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// BFS distances from one source; `None` marks vertices in other components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: Vertex,
    pub dist: Vec<Option<Distance>>,
}

impl DistanceVector {
    pub fn get(&self, x: Vertex) -> Option<Distance> {
        self.dist[x]
    }

    /// First vertex not reachable from the source, if any.
    pub fn unreachable(&self) -> Option<Vertex> {
        self.dist.iter().position(Option::is_none)
    }

    /// Strips the reachability markers, failing if any vertex is unreachable.
    pub fn into_finite(self) -> Result<Vec<Distance>> {
        if let Some(unreachable) = self.unreachable() {
            return Err(Error::Disconnected {
                from: self.source,
                unreachable,
            });
        }
        Ok(self.dist.into_iter().flatten().collect())
    }
}

/// `sizes[i]` is the number of vertices at distance exactly `i` from `center`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereProfile {
    pub center: Vertex,
    pub sizes: Vec<usize>,
}

impl SphereProfile {
    /// Size of the sphere of radius `i`; zero beyond the eccentricity.
    pub fn size(&self, i: usize) -> usize {
        self.sizes.get(i).copied().unwrap_or(0)
    }

    pub fn eccentricity(&self) -> usize {
        self.sizes.len() - 1
    }
}

/// All-pairs distances of a connected graph, one BFS per source.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let rows = (0..g.vertex_count())
            .into_par_iter()
            .map(|s| g.bfs_distances(s)?.into_finite())
            .collect::<Result<Vec<_>>>()?;
        Ok(DistanceMatrix { rows })
    }

    pub fn row(&self, source: Vertex) -> &[Distance] {
        &self.rows[source]
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> Distance {
        self.rows[a][b]
    }

    pub fn diameter(&self) -> Distance {
        self.rows
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }
}
