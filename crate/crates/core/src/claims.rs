//! Executable checks of the classification results, each producing one row
//! per compared quantity. The command-line `verify` subcommand drives these.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{cross_check, predicted_profile_3k3, predicted_sets_3k3, GpFamily};
use crate::error::{Error, Result};
use crate::families::{folkman_qr_spec, GpSpec, TetraVertex};
use crate::graph::Graph;
use crate::partition::{is_sdb_via_spheres, EdgeMetrics};
use crate::symmetry::{gp_is_vertex_transitive, gp_iso_map, gp_rho, gp_tau, is_automorphism, verify_iso};
use crate::arith::is_prime;

/// Claim ids accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// `GP(n, 2)` classification.
    StepTwo,
    /// `GP(5k+1, k)` classification.
    FiveKPlusOne,
    /// `GP(3k±3, k)` classification.
    ThreeKPlusMinusThree,
    /// `GP(2k+2, k)` classification.
    TwoKPlusTwo,
    /// Strong balance ⇔ equal sphere sizes across every edge.
    SphereCriterion,
    /// Vertex-transitive ⇒ strongly distance-balanced.
    VertexTransitiveImpliesSdb,
    /// Quadratic-residue Folkman graphs are not distance-balanced.
    QrFolkmanUnbalanced,
    /// Exact level sets around `u_0` in `GP(3k+3, k)`.
    LevelSets3k3,
    /// Sphere sizes around `u_0` in `GP(3k+3, k)`.
    Profile3k3,
    /// Sphere sizes around `v_0` in `GP(3k+3, k)` via the inverse-step map.
    InverseProfile3k3,
    /// `GP(n, k) ≅ GP(n, k⁻¹)` under the explicit map.
    InverseStepIsomorphism,
    /// Rotation and reflection are automorphisms.
    RotationReflection,
}

impl Claim {
    pub const ALL: [Claim; 12] = [
        Claim::StepTwo,
        Claim::FiveKPlusOne,
        Claim::ThreeKPlusMinusThree,
        Claim::TwoKPlusTwo,
        Claim::SphereCriterion,
        Claim::VertexTransitiveImpliesSdb,
        Claim::QrFolkmanUnbalanced,
        Claim::LevelSets3k3,
        Claim::Profile3k3,
        Claim::InverseProfile3k3,
        Claim::InverseStepIsomorphism,
        Claim::RotationReflection,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::StepTwo => "prop4.1",
            Claim::FiveKPlusOne => "prop4.2",
            Claim::ThreeKPlusMinusThree => "thm4.7",
            Claim::TwoKPlusTwo => "thm4.8",
            Claim::SphereCriterion => "prop2.1",
            Claim::VertexTransitiveImpliesSdb => "cor2.2",
            Claim::QrFolkmanUnbalanced => "prop3.1",
            Claim::LevelSets3k3 => "lemma4.3",
            Claim::Profile3k3 => "cor4.4",
            Claim::InverseProfile3k3 => "cor4.6",
            Claim::InverseStepIsomorphism => "eq-iso",
            Claim::RotationReflection => "eq-grupa",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown claim {s:?}")))
    }
}

/// Range overrides; `None` fields fall back to each claim's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClaimParams {
    pub k_min: Option<i64>,
    pub k_max: Option<i64>,
    pub n_max: Option<usize>,
    pub p_max: Option<u64>,
}

impl ClaimParams {
    /// A single parameter value.
    pub fn single_k(k: i64) -> Self {
        ClaimParams {
            k_min: Some(k),
            k_max: Some(k),
            ..Default::default()
        }
    }

    fn k_range(&self, lo: i64, hi: i64) -> (i64, i64) {
        (self.k_min.unwrap_or(lo), self.k_max.unwrap_or(hi))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub subject: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CheckRow {
    fn new(subject: impl Into<String>, expected: impl fmt::Debug, observed: impl fmt::Debug) -> Self {
        let expected = format!("{expected:?}");
        let observed = format!("{observed:?}");
        CheckRow {
            subject: subject.into(),
            pass: expected == observed,
            expected,
            observed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub rows: Vec<CheckRow>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn gp(n: usize, k: usize) -> Result<GpSpec> {
    GpSpec::new(n, k)
}

/// Every valid `(n, k)` with `3 ≤ n ≤ n_max` and `1 ≤ k < n/2`.
pub fn gp_specs_up_to(n_max: usize) -> Vec<GpSpec> {
    (3..=n_max)
        .flat_map(|n| (1..n.div_ceil(2)).filter_map(move |k| GpSpec::new(n, k).ok()))
        .collect()
}

fn sphere_sizes(spec: &GpSpec, center: usize, i: usize) -> Result<usize> {
    Ok(spec.build().sphere_profile(center)?.size(i))
}

fn family_rows(family: GpFamily, lo: i64, hi: i64) -> Vec<CheckRow> {
    cross_check(family, lo..=hi)
        .into_iter()
        .filter(|r| r.in_domain())
        .map(|r| CheckRow::new(format!("GP({},{}) sdb", r.n, r.k), r.predicted_sdb, r.oracle_sdb))
        .collect()
}

fn sphere_pair_rows(
    family: GpFamily,
    params: std::ops::RangeInclusive<i64>,
    radius: usize,
    expected: (usize, usize),
) -> Result<Vec<CheckRow>> {
    params
        .map(|p| {
            let spec = family.spec(p)?;
            let observed = (
                sphere_sizes(&spec, spec.outer(0), radius)?,
                sphere_sizes(&spec, spec.inner(0), radius)?,
            );
            Ok(CheckRow::new(
                format!("{spec} (|S_{radius}(u_0)|, |S_{radius}(v_0)|)"),
                expected,
                observed,
            ))
        })
        .collect()
}

impl Claim {
    pub fn run(&self, params: &ClaimParams) -> Result<ClaimReport> {
        let rows = match self {
            Claim::StepTwo => {
                let (lo, hi) = (3, params.n_max.map_or(60, |n| n as i64));
                let mut rows = family_rows(GpFamily::StepTwo, lo, hi);
                for n in lo.max(13)..=hi {
                    let spec = GpFamily::StepTwo.spec(n)?;
                    let su = sphere_sizes(&spec, spec.outer(0), 3)?;
                    let sv = sphere_sizes(&spec, spec.inner(0), 3)?;
                    rows.push(CheckRow::new(format!("{spec} |S_3(u_0)|"), 6, su));
                    rows.push(CheckRow::new(format!("{spec} |S_3(u_0)| != |S_3(v_0)| ({su} vs {sv})"), true, su != sv));
                }
                rows
            }
            Claim::FiveKPlusOne => {
                let (lo, hi) = params.k_range(1, 12);
                let mut rows = family_rows(GpFamily::FiveKPlusOne, lo, hi);
                rows.extend(sphere_pair_rows(GpFamily::FiveKPlusOne, lo.max(6)..=hi, 4, (18, 16))?);
                rows
            }
            Claim::ThreeKPlusMinusThree => {
                let (lo, hi) = params.k_range(1, 16);
                let mut rows = family_rows(GpFamily::ThreeKPlusThree, lo, hi);
                rows.extend(family_rows(GpFamily::ThreeKMinusThree, lo.max(2), hi + 1));
                if params.k_min.is_none() && params.k_max.is_none() {
                    for (n, k) in [(9, 2), (18, 5), (27, 8), (36, 11)] {
                        let sdb = crate::classify::gp_oracle(&gp(n, k)?)?.sdb;
                        rows.push(CheckRow::new(format!("GP({n},{k}) sdb"), (n, k) != (9, 2), sdb));
                    }
                }
                rows
            }
            Claim::TwoKPlusTwo => {
                let (lo, hi) = params.k_range(1, 20);
                family_rows(GpFamily::TwoKPlusTwo, lo, hi)
            }
            Claim::SphereCriterion => {
                let mut graphs: Vec<(String, Graph)> = gp_specs_up_to(params.n_max.unwrap_or(30))
                    .into_iter()
                    .map(|s| (s.to_string(), s.build()))
                    .collect();
                for p in primes_up_to(params.p_max.unwrap_or(13)) {
                    graphs.push((format!("qrfolk:{p}"), folkman_qr_spec(p)?.build()));
                }
                graphs
                    .into_par_iter()
                    .map(|(name, g)| {
                        let by_cells = EdgeMetrics::new(&g)?.strongly_distance_balanced().holds();
                        Ok(CheckRow::new(format!("{name} partition vs spheres"), by_cells, is_sdb_via_spheres(&g)?))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Claim::VertexTransitiveImpliesSdb => gp_specs_up_to(params.n_max.unwrap_or(40))
                .into_par_iter()
                .filter(gp_is_vertex_transitive)
                .map(|s| Ok(CheckRow::new(format!("{s} vt => sdb"), true, crate::classify::gp_oracle(&s)?.sdb)))
                .collect::<Result<Vec<_>>>()?,
            Claim::QrFolkmanUnbalanced => {
                let mut rows = Vec::new();
                for p in primes_up_to(params.p_max.unwrap_or(23)) {
                    rows.extend(qr_folkman_rows(p)?);
                }
                rows
            }
            Claim::LevelSets3k3 => {
                let (lo, hi) = params.k_range(13, 13);
                let mut rows = Vec::new();
                for k in lo..=hi {
                    let spec = gp((3 * k + 3) as usize, k as usize)?;
                    let dist = spec.build().bfs_distances(spec.outer(0))?.into_finite()?;
                    let ecc = *dist.iter().max().unwrap_or(&0) as i64;
                    for i in 1..=ecc {
                        let observed: std::collections::BTreeSet<usize> =
                            (0..dist.len()).filter(|&x| dist[x] as i64 == i).collect();
                        rows.push(CheckRow::new(
                            format!("{spec} S_{i}(u_0)"),
                            predicted_sets_3k3(k, i)?,
                            observed,
                        ));
                    }
                }
                rows
            }
            Claim::Profile3k3 => {
                let (lo, hi) = params.k_range(13, 20);
                (lo..=hi)
                    .map(|k| {
                        let spec = gp((3 * k + 3) as usize, k as usize)?;
                        let observed = spec.build().sphere_profile(spec.outer(0))?.sizes;
                        Ok(CheckRow::new(
                            format!("{spec} profile of u_0"),
                            predicted_profile_3k3(k)?.sizes_u0,
                            observed,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Claim::InverseProfile3k3 => {
                let (lo, hi) = params.k_range(13, 20);
                let mut rows = Vec::new();
                for k in (lo..=hi).filter(|k| k % 3 == 2) {
                    let spec = gp((3 * k + 3) as usize, k as usize)?;
                    let g = spec.build();
                    let predicted = predicted_profile_3k3(k)?.sizes_v0;
                    rows.push(CheckRow::new(
                        format!("{spec} profile of v_0"),
                        predicted,
                        Some(g.sphere_profile(spec.inner(0))?.sizes),
                    ));
                    let iso = gp_iso_map(&spec)?;
                    let target_k = iso.as_ref().map(|i| i.target.k());
                    rows.push(CheckRow::new(format!("{spec} inverse step"), Some((2 * k + 1) as usize), target_k));
                    let verified = match &iso {
                        Some(iso) => verify_iso(&g, &iso.target.build(), &iso.map)?,
                        None => false,
                    };
                    rows.push(CheckRow::new(format!("{spec} ≅ GP({},{})", 3 * k + 3, 2 * k + 1), true, verified));
                }
                rows
            }
            Claim::InverseStepIsomorphism => {
                let n_max = params.n_max.unwrap_or(40);
                let specs: Vec<GpSpec> = (3..=n_max)
                    .flat_map(|n| (1..n).filter_map(move |k| GpSpec::new(n, k).ok()))
                    .collect();
                specs
                    .into_par_iter()
                    .filter_map(|s| gp_iso_map(&s).transpose())
                    .map(|iso| {
                        let iso = iso?;
                        let ok = verify_iso(&iso.source.build(), &iso.target.build(), &iso.map)?;
                        Ok(CheckRow::new(format!("{} ≅ {}", iso.source, iso.target), true, ok))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Claim::RotationReflection => {
                let n_max = params.n_max.unwrap_or(40);
                let specs: Vec<GpSpec> = (3..=n_max)
                    .flat_map(|n| (1..n).filter_map(move |k| GpSpec::new(n, k).ok()))
                    .collect();
                specs
                    .into_par_iter()
                    .map(|s| {
                        let g = s.build();
                        let observed = (
                            is_automorphism(&g, &gp_rho(s.n()))?,
                            is_automorphism(&g, &gp_tau(s.n()))?,
                        );
                        Ok(CheckRow::new(format!("{s} rho, tau"), (true, true), observed))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(ClaimReport {
            claim: self.id().to_string(),
            rows,
        })
    }
}

/// Primes `5 ≤ p ≤ max`.
pub fn primes_up_to(max: u64) -> Vec<u64> {
    (5..=max).filter(|&p| is_prime(p)).collect()
}

fn qr_folkman_rows(p: u64) -> Result<Vec<CheckRow>> {
    let spec = folkman_qr_spec(p)?;
    let g = spec.build();
    let name = format!("qrfolk:{p}");
    let mut rows = vec![
        CheckRow::new(format!("{name} connected"), true, g.is_connected()),
        CheckRow::new(format!("{name} bipartite"), true, g.is_bipartite().is_bipartite()),
        CheckRow::new(format!("{name} regular degree"), Some(p as usize - 1), g.regular_degree()),
    ];
    let metrics = EdgeMetrics::new(&g)?;
    rows.push(CheckRow::new(format!("{name} diameter"), 4, metrics.diameter()));
    rows.push(CheckRow::new(format!("{name} distance-balanced"), false, metrics.distance_balanced().holds()));
    if p > 5 {
        let part = metrics.partition(spec.id(TetraVertex::X(0)), spec.id(TetraVertex::Y(1)))?;
        let p = p as usize;
        rows.push(CheckRow::new(
            format!("{name} (|D^1_2|,|D^2_3|,|D^3_4|) at (x_0,y_1)"),
            (p - 2, p, 0),
            (part.above(2), part.above(3), part.above(4)),
        ));
        rows.push(CheckRow::new(
            format!("{name} (|D^2_1|,|D^3_2|,|D^4_3|) at (x_0,y_1)"),
            (p - 2, p + 1, 1),
            (part.below(2), part.below(3), part.below(4)),
        ));
    }
    Ok(rows)
}
