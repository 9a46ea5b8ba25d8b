//! Vertex permutations: automorphism and isomorphism verification, the
//! rotation/reflection generators of `GP(n, k)`, the inverse-step
//! isomorphism `GP(n, k) ≅ GP(n, k⁻¹)`, and the closed-form
//! vertex-transitivity criterion.

use serde::{Deserialize, Serialize};

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::families::GpSpec;
use crate::graph::{Graph, Vertex};

/// A bijection on `0..len`; serializes as the JSON array of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Permutation {
    image: Vec<Vertex>,
}

impl Permutation {
    pub fn new(image: Vec<Vertex>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() {
                return Err(Error::NotAPermutation(format!(
                    "image {x} out of range for {} points",
                    image.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            image: (0..len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.image
    }

    /// `self` after `other`: `v ↦ self(other(v))`.
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Permutation { image }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        (0..exp).fold(Permutation::identity(self.len()), |acc, _| self.after(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }
}

impl TryFrom<Vec<Vertex>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<Vertex>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<Vertex> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

/// Whether `map` carries the edge set of `from` exactly onto that of `to`.
pub fn verify_iso(from: &Graph, to: &Graph, map: &Permutation) -> Result<bool> {
    if from.vertex_count() != to.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: to.vertex_count(),
            found: from.vertex_count(),
        });
    }
    if map.len() != from.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: from.vertex_count(),
            found: map.len(),
        });
    }
    // a bijection that maps every edge to an edge is onto iff counts agree
    Ok(from.edge_count() == to.edge_count()
        && from
            .edges()
            .all(|(u, v)| to.has_edge(map.apply(u), map.apply(v))))
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    verify_iso(g, g, p)
}

/// `u_i ↦ u_{i+1}`, `v_i ↦ v_{i+1}` on the `2n` ids of `GP(n, ·)`.
pub fn gp_rho(n: usize) -> Permutation {
    let image = (0..2 * n)
        .map(|id| {
            let (block, i) = (id / n, id % n);
            block * n + (i + 1) % n
        })
        .collect();
    Permutation { image }
}

/// `u_i ↦ u_{-i}`, `v_i ↦ v_{-i}`.
pub fn gp_tau(n: usize) -> Permutation {
    let image = (0..2 * n)
        .map(|id| {
            let (block, i) = (id / n, id % n);
            block * n + (n - i) % n
        })
        .collect();
    Permutation { image }
}

/// An explicit isomorphism `GP(n, k) → GP(n, target.k())`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpIsomorphism {
    pub source: GpSpec,
    pub target: GpSpec,
    pub map: Permutation,
}

/// `u_i ↦ v_{k⁻¹ i}`, `v_i ↦ u_{k⁻¹ i}` into `GP(n, k⁻¹ mod n)`; `None` when
/// `k` has no inverse mod `n`.
pub fn gp_iso_map(spec: &GpSpec) -> Result<Option<GpIsomorphism>> {
    let (n, k) = (spec.n() as i64, spec.k() as i64);
    let Some(inv) = mod_inverse(k, n) else {
        return Ok(None);
    };
    let target = GpSpec::new(spec.n(), inv as usize)?;
    let image = (0..spec.vertex_count())
        .map(|id| match spec.coordinate(id) {
            crate::families::GpVertex::Outer(i) => target.inner(inv * i as i64),
            crate::families::GpVertex::Inner(i) => target.outer(inv * i as i64),
        })
        .collect();
    Ok(Some(GpIsomorphism {
        source: *spec,
        target,
        map: Permutation { image },
    }))
}

/// `GP(n, k)` is vertex-transitive iff `k² ≡ ±1 (mod n)`.
pub fn gp_is_vertex_transitive(spec: &GpSpec) -> bool {
    let (n, k) = (spec.n() as u64, spec.k() as u64);
    let sq = k * k % n;
    sq == 1 % n || sq == n - 1
}
