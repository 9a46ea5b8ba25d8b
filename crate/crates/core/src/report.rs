//! Per-graph analysis record shared by the CLI and the sweeps.

use serde::Serialize;

use crate::error::Result;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::partition::{is_distance_degree_regular, BalanceTriple, EdgeMetrics, SdbWitness};
use crate::symmetry::{gp_is_vertex_transitive, is_automorphism, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub u: usize,
    pub v: usize,
    pub k: usize,
    pub below: usize,
    pub above: usize,
    pub u_label: String,
    pub v_label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub u: usize,
    pub v: usize,
    pub left: usize,
    pub central: usize,
    pub right: usize,
}

impl From<BalanceTriple> for TripleReport {
    fn from(t: BalanceTriple) -> Self {
        TripleReport {
            u: t.u,
            v: t.v,
            left: t.left,
            central: t.central,
            right: t.right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub spec: String,
    pub vertices: usize,
    pub edges: usize,
    pub bipartite: bool,
    pub db: bool,
    pub sdb: bool,
    pub ddr: bool,
    pub diameter: usize,
    /// Closed-form vertex-transitivity, generalized Petersen graphs only.
    pub vt: Option<bool>,
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triples: Option<Vec<TripleReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub triples: bool,
    pub check_perm: Option<Permutation>,
}

/// Runs every predicate on a connected graph. `family` supplies coordinate
/// labels and the closed-form VT flag when the graph came from a spec.
pub fn analyze(
    source: &str,
    g: &Graph,
    family: Option<&FamilySpec>,
    options: &AnalyzeOptions,
) -> Result<AnalyzeReport> {
    let metrics = EdgeMetrics::new(g)?;
    let label = |v: usize| family.map_or_else(|| v.to_string(), |f| f.label(v));
    let sdb = metrics.strongly_distance_balanced();
    let witness = sdb.witness().map(|w: &SdbWitness| WitnessReport {
        u: w.u,
        v: w.v,
        k: w.k,
        below: w.below,
        above: w.above,
        u_label: label(w.u),
        v_label: label(w.v),
    });
    let automorphism = options
        .check_perm
        .as_ref()
        .map(|p| is_automorphism(g, p))
        .transpose()?;
    Ok(AnalyzeReport {
        spec: source.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        bipartite: g.is_bipartite().is_bipartite(),
        db: metrics.distance_balanced().holds(),
        sdb: sdb.holds(),
        ddr: is_distance_degree_regular(g)?,
        diameter: metrics.diameter(),
        vt: family.and_then(FamilySpec::as_gp).map(gp_is_vertex_transitive),
        witness,
        triples: options
            .triples
            .then(|| metrics.triples().into_iter().map(Into::into).collect()),
        automorphism,
    })
}
