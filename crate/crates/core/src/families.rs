//! Deterministic constructors for generalized Petersen graphs,
//! tetracirculants and (generalized) Folkman graphs.
//!
//! Vertex labeling is fixed so that coordinates map bijectively onto ids:
//!
//! * `GP(n, k)`: `u_i ↦ i`, `v_i ↦ n + i`.
//! * tetracirculant on `Z_n`: `x_a ↦ a`, `y_a ↦ n + a`, `u_a ↦ 2n + a`,
//!   `w_a ↦ 3n + a`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, nonsquares_mod, normalize, squares_mod};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Parameters of a generalized Petersen graph `GP(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GpSpec {
    n: usize,
    k: usize,
}

impl GpSpec {
    /// Requires `n ≥ 3`, `1 ≤ k ≤ n - 1` and `2k ≠ n`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("GP({n},{k}): n must be at least 3")));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidSpec(format!(
                "GP({n},{k}): k must lie in 1..={}",
                n - 1
            )));
        }
        if 2 * k == n {
            return Err(Error::InvalidSpec(format!("GP({n},{k}): k = n/2")));
        }
        Ok(GpSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    /// Id of `u_i`, index taken mod `n`.
    pub fn outer(&self, i: i64) -> Vertex {
        normalize(i, self.n as i64) as Vertex
    }

    /// Id of `v_i`, index taken mod `n`.
    pub fn inner(&self, i: i64) -> Vertex {
        self.n + normalize(i, self.n as i64) as Vertex
    }

    pub fn coordinate(&self, id: Vertex) -> GpVertex {
        if id < self.n {
            GpVertex::Outer(id)
        } else {
            GpVertex::Inner(id - self.n)
        }
    }

    pub fn build(&self) -> Graph {
        gp(self)
    }
}

impl fmt::Display for GpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GP({},{})", self.n, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpVertex {
    Outer(usize),
    Inner(usize),
}

impl fmt::Display for GpVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpVertex::Outer(i) => write!(f, "u_{i}"),
            GpVertex::Inner(i) => write!(f, "v_{i}"),
        }
    }
}

/// Outer cycle `u_i u_{i+1}`, spokes `u_i v_i`, inner edges `v_i v_{i+k}`.
pub fn gp(spec: &GpSpec) -> Graph {
    let (n, k) = (spec.n, spec.k);
    let edges = (0..n).flat_map(|i| {
        [
            (i, (i + 1) % n),
            (i, n + i),
            (n + i, n + (i + k) % n),
        ]
    });
    Graph::from_edges(2 * n, edges).expect("GP edges are valid by construction")
}

/// A residue set of `Z_n`, stored normalized and sorted.
pub type ResidueSet = BTreeSet<usize>;

/// Normalizes possibly negative residues mod `n`; rejects empty sets and
/// duplicates that appear after normalization.
pub fn residue_set(n: usize, values: &[i64]) -> Result<ResidueSet> {
    if n == 0 {
        return Err(Error::InvalidSpec("modulus must be positive".into()));
    }
    if values.is_empty() {
        return Err(Error::InvalidSpec("residue sets must be nonempty".into()));
    }
    let mut set = ResidueSet::new();
    for &value in values {
        if !set.insert(normalize(value, n as i64) as usize) {
            return Err(Error::InvalidSpec(format!(
                "duplicate residue {value} mod {n}"
            )));
        }
    }
    Ok(set)
}

/// Parameters of `T(n, S00, S01, S10, S11)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetraSpec {
    n: usize,
    sets: [ResidueSet; 4],
}

impl TetraSpec {
    /// Sets in the order `S00, S01, S10, S11`; each must be nonempty with
    /// elements in `0..n`.
    pub fn new(n: usize, sets: [ResidueSet; 4]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("tetracirculant needs n ≥ 1".into()));
        }
        for (idx, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidSpec(format!(
                    "S{:02b} must be nonempty",
                    idx
                )));
            }
            if let Some(&bad) = set.iter().find(|&&s| s >= n) {
                return Err(Error::InvalidSpec(format!(
                    "residue {bad} in S{:02b} is not below {n}",
                    idx
                )));
            }
        }
        Ok(TetraSpec { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[ResidueSet; 4] {
        &self.sets
    }

    pub fn vertex_count(&self) -> usize {
        4 * self.n
    }

    pub fn id(&self, vertex: TetraVertex) -> Vertex {
        let n = self.n;
        match vertex {
            TetraVertex::X(a) => a % n,
            TetraVertex::Y(a) => n + a % n,
            TetraVertex::U(a) => 2 * n + a % n,
            TetraVertex::W(a) => 3 * n + a % n,
        }
    }

    pub fn coordinate(&self, id: Vertex) -> TetraVertex {
        let (block, a) = (id / self.n, id % self.n);
        match block {
            0 => TetraVertex::X(a),
            1 => TetraVertex::Y(a),
            2 => TetraVertex::U(a),
            _ => TetraVertex::W(a),
        }
    }

    /// Side of the bipartition `(V00 ∪ V01) | (V10 ∪ V11)`.
    pub fn side(&self, id: Vertex) -> u8 {
        match self.coordinate(id) {
            TetraVertex::X(_) | TetraVertex::U(_) => 0,
            TetraVertex::Y(_) | TetraVertex::W(_) => 1,
        }
    }

    pub fn build(&self) -> Graph {
        tetracirculant(self)
    }
}

/// Tetracirculant vertex: `x ∈ V00`, `y ∈ V11`, `u ∈ V01`, `w ∈ V10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TetraVertex {
    X(usize),
    Y(usize),
    U(usize),
    W(usize),
}

impl fmt::Display for TetraVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TetraVertex::X(a) => write!(f, "x_{a}"),
            TetraVertex::Y(a) => write!(f, "y_{a}"),
            TetraVertex::U(a) => write!(f, "u_{a}"),
            TetraVertex::W(a) => write!(f, "w_{a}"),
        }
    }
}

/// Edges `(a,0,i)(b,1,j)` whenever `b - a ∈ S_ij`, with the subscript read
/// as (third coordinate of the left end, third coordinate of the right end):
/// `x_a w_b` for `S00`, `x_a y_b` for `S01`, `u_a w_b` for `S10` and
/// `u_a y_b` for `S11`.
pub fn tetracirculant(spec: &TetraSpec) -> Graph {
    use TetraVertex::*;
    let n = spec.n;
    type Ctor = fn(usize) -> TetraVertex;
    let rules: [(Ctor, Ctor); 4] = [(X, W), (X, Y), (U, W), (U, Y)];
    let mut edges = Vec::new();
    for (set, (left, right)) in spec.sets.iter().zip(rules) {
        for a in 0..n {
            for &s in set {
                edges.push((spec.id(left(a)), spec.id(right(a + s))));
            }
        }
    }
    Graph::from_edges(4 * n, edges).expect("tetracirculant edges are valid by construction")
}

/// `T(n, R, R, T, T)`.
pub fn generalized_folkman(n: usize, r: &ResidueSet, t: &ResidueSet) -> Result<Graph> {
    TetraSpec::new(n, [r.clone(), r.clone(), t.clone(), t.clone()]).map(|s| s.build())
}

/// The tetracirculant spec `T(p, S, S, N, N)` with `S` the squares and `N`
/// the nonsquares mod `p`.
pub fn folkman_qr_spec(p: u64) -> Result<TetraSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidSpec(format!("qrfolk needs p ≥ 5, got {p}")));
    }
    let to_usize = |set: BTreeSet<u64>| set.into_iter().map(|x| x as usize).collect();
    let squares: ResidueSet = to_usize(squares_mod(p)?);
    let nonsquares: ResidueSet = to_usize(nonsquares_mod(p)?);
    TetraSpec::new(
        p as usize,
        [squares.clone(), squares, nonsquares.clone(), nonsquares],
    )
}

pub fn folkman_qr(p: u64) -> Result<Graph> {
    folkman_qr_spec(p).map(|s| s.build())
}

/// A constructible family instance, in the textual grammar
/// `gp:<n>,<k>` | `tetra:<n>;<s00>;<s01>;<s10>;<s11>` | `gfolk:<n>;<R>;<T>` |
/// `qrfolk:<p>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Gp(GpSpec),
    Tetra(TetraSpec),
    GeneralizedFolkman {
        n: usize,
        r: ResidueSet,
        t: ResidueSet,
    },
    QrFolkman(u64),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Gp(spec) => Ok(spec.build()),
            FamilySpec::Tetra(spec) => Ok(spec.build()),
            FamilySpec::GeneralizedFolkman { n, r, t } => generalized_folkman(*n, r, t),
            FamilySpec::QrFolkman(p) => folkman_qr(*p),
        }
    }

    pub fn as_gp(&self) -> Option<&GpSpec> {
        match self {
            FamilySpec::Gp(spec) => Some(spec),
            _ => None,
        }
    }

    fn tetra_spec(&self) -> Option<TetraSpec> {
        match self {
            FamilySpec::Gp(_) => None,
            FamilySpec::Tetra(spec) => Some(spec.clone()),
            FamilySpec::GeneralizedFolkman { n, r, t } => {
                TetraSpec::new(*n, [r.clone(), r.clone(), t.clone(), t.clone()]).ok()
            }
            FamilySpec::QrFolkman(p) => folkman_qr_spec(*p).ok(),
        }
    }

    /// Human-readable coordinate of vertex `id` under the family labeling.
    pub fn label(&self, id: Vertex) -> String {
        match self {
            FamilySpec::Gp(spec) => spec.coordinate(id).to_string(),
            _ => match self.tetra_spec() {
                Some(spec) => spec.coordinate(id).to_string(),
                None => id.to_string(),
            },
        }
    }
}

fn parse_usize(field: &str, what: &str) -> Result<usize> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(format!("{what}: expected a nonnegative integer, got {field:?}")))
}

fn parse_residues(n: usize, field: &str) -> Result<ResidueSet> {
    let values = field
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidSpec(format!("bad residue {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    residue_set(n, &values)
}

fn format_set(set: &ResidueSet) -> String {
    set.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, body) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("{s:?}: missing ':'")))?;
        match family {
            "gp" => {
                let (n, k) = body
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidSpec(format!("{s:?}: expected gp:<n>,<k>")))?;
                Ok(FamilySpec::Gp(GpSpec::new(parse_usize(n, "n")?, parse_usize(k, "k")?)?))
            }
            "tetra" => {
                let fields: Vec<&str> = body.split(';').collect();
                if fields.len() != 5 {
                    return Err(Error::InvalidSpec(format!(
                        "{s:?}: expected tetra:<n>;<s00>;<s01>;<s10>;<s11>"
                    )));
                }
                let n = parse_usize(fields[0], "n")?;
                let sets = [
                    parse_residues(n, fields[1])?,
                    parse_residues(n, fields[2])?,
                    parse_residues(n, fields[3])?,
                    parse_residues(n, fields[4])?,
                ];
                Ok(FamilySpec::Tetra(TetraSpec::new(n, sets)?))
            }
            "gfolk" => {
                let fields: Vec<&str> = body.split(';').collect();
                if fields.len() != 3 {
                    return Err(Error::InvalidSpec(format!(
                        "{s:?}: expected gfolk:<n>;<R>;<T>"
                    )));
                }
                let n = parse_usize(fields[0], "n")?;
                let r = parse_residues(n, fields[1])?;
                let t = parse_residues(n, fields[2])?;
                Ok(FamilySpec::GeneralizedFolkman { n, r, t })
            }
            "qrfolk" => {
                let p = parse_usize(body, "p")? as u64;
                folkman_qr_spec(p)?;
                Ok(FamilySpec::QrFolkman(p))
            }
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gp(spec) => write!(f, "gp:{},{}", spec.n, spec.k),
            FamilySpec::Tetra(spec) => {
                write!(f, "tetra:{}", spec.n)?;
                for set in &spec.sets {
                    write!(f, ";{}", format_set(set))?;
                }
                Ok(())
            }
            FamilySpec::GeneralizedFolkman { n, r, t } => {
                write!(f, "gfolk:{n};{};{}", format_set(r), format_set(t))
            }
            FamilySpec::QrFolkman(p) => write!(f, "qrfolk:{p}"),
        }
    }
}
