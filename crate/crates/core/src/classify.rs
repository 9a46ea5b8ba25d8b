//! Closed-form strong-balance classifications for families of generalized
//! Petersen graphs, the sphere-size formulas for `GP(3k+3, k)`, and a
//! harness comparing each closed form against the BFS oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::GpSpec;
use crate::graph::Vertex;
use crate::partition::EdgeMetrics;
use crate::symmetry::gp_is_vertex_transitive;

/// `GP(n, 2)` is strongly distance-balanced iff `n ∈ {3, 5, 7, 10}`.
pub fn classify_gp_n2(n: i64) -> Result<bool> {
    if n < 3 || n == 4 {
        return Err(Error::OutOfDomain(n));
    }
    Ok(matches!(n, 3 | 5 | 7 | 10))
}

/// `GP(5k+1, k)` is strongly distance-balanced iff `k = 1`.
pub fn classify_gp_5k1(k: i64) -> Result<bool> {
    if k < 1 {
        return Err(Error::OutOfDomain(k));
    }
    Ok(k == 1)
}

/// `GP(3k+3, k)`: strongly distance-balanced iff `k ≢ 0 (mod 3)`, except
/// `GP(9, 2)`.
pub fn classify_gp_3k3(k: i64) -> Result<bool> {
    if k < 1 {
        return Err(Error::OutOfDomain(k));
    }
    Ok(k % 3 != 0 && k != 2)
}

/// `GP(3k-3, k)`: strongly distance-balanced iff `k ≢ 0 (mod 3)`, except
/// `GP(9, 4)`. `k = 3` gives `GP(6, 3)`, which is not a generalized Petersen
/// graph, and is out of domain.
pub fn classify_gp_3km3(k: i64) -> Result<bool> {
    if k < 2 || k == 3 {
        return Err(Error::OutOfDomain(k));
    }
    Ok(k % 3 != 0 && k != 4)
}

/// `GP(2k+2, k)` is strongly distance-balanced iff `k` is odd.
pub fn classify_gp_2k2(k: i64) -> Result<bool> {
    if k < 1 {
        return Err(Error::OutOfDomain(k));
    }
    Ok(k % 2 == 1)
}

/// One-parameter families of generalized Petersen graphs with a known
/// classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GpFamily {
    /// `GP(n, 2)`, parameter `n`.
    #[serde(rename = "n2")]
    StepTwo,
    /// `GP(5k+1, k)`.
    #[serde(rename = "5k1")]
    FiveKPlusOne,
    /// `GP(3k+3, k)`.
    #[serde(rename = "3k3")]
    ThreeKPlusThree,
    /// `GP(3k-3, k)`.
    #[serde(rename = "3km3")]
    ThreeKMinusThree,
    /// `GP(2k+2, k)`.
    #[serde(rename = "2k2")]
    TwoKPlusTwo,
}

impl GpFamily {
    pub const ALL: [GpFamily; 5] = [
        GpFamily::StepTwo,
        GpFamily::FiveKPlusOne,
        GpFamily::ThreeKPlusThree,
        GpFamily::ThreeKMinusThree,
        GpFamily::TwoKPlusTwo,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            GpFamily::StepTwo => "n2",
            GpFamily::FiveKPlusOne => "5k1",
            GpFamily::ThreeKPlusThree => "3k3",
            GpFamily::ThreeKMinusThree => "3km3",
            GpFamily::TwoKPlusTwo => "2k2",
        }
    }

    /// `(n, k)` of the family member with parameter `param`, before any
    /// domain check.
    pub fn parameters(&self, param: i64) -> (i64, i64) {
        match self {
            GpFamily::StepTwo => (param, 2),
            GpFamily::FiveKPlusOne => (5 * param + 1, param),
            GpFamily::ThreeKPlusThree => (3 * param + 3, param),
            GpFamily::ThreeKMinusThree => (3 * param - 3, param),
            GpFamily::TwoKPlusTwo => (2 * param + 2, param),
        }
    }

    pub fn spec(&self, param: i64) -> Result<GpSpec> {
        let (n, k) = self.parameters(param);
        if n < 0 || k < 0 {
            return Err(Error::InvalidSpec(format!("GP({n},{k})")));
        }
        GpSpec::new(n as usize, k as usize)
    }

    pub fn predict(&self, param: i64) -> Result<bool> {
        match self {
            GpFamily::StepTwo => classify_gp_n2(param),
            GpFamily::FiveKPlusOne => classify_gp_5k1(param),
            GpFamily::ThreeKPlusThree => classify_gp_3k3(param),
            GpFamily::ThreeKMinusThree => classify_gp_3km3(param),
            GpFamily::TwoKPlusTwo => classify_gp_2k2(param),
        }
    }
}

impl fmt::Display for GpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for GpFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GpFamily::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown GP family {s:?}")))
    }
}

/// Metric verdicts of one graph as computed by BFS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub db: bool,
    pub sdb: bool,
    pub diameter: usize,
}

pub fn gp_oracle(spec: &GpSpec) -> Result<OracleVerdict> {
    let g = spec.build();
    let metrics = EdgeMetrics::new(&g)?;
    Ok(OracleVerdict {
        db: metrics.distance_balanced().holds(),
        sdb: metrics.strongly_distance_balanced().holds(),
        diameter: metrics.diameter(),
    })
}

/// Closed-form prediction next to the oracle for one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub family: GpFamily,
    pub param: i64,
    pub n: i64,
    pub k: i64,
    /// `None` when the parameter is outside the classification's domain.
    pub predicted_sdb: Option<bool>,
    pub oracle_sdb: Option<bool>,
    /// `None` unless both a prediction and an oracle verdict exist.
    pub agree: Option<bool>,
    pub vt: Option<bool>,
    pub db: Option<bool>,
    pub diameter: Option<usize>,
    pub error: Option<String>,
}

impl FamilyVerdict {
    pub fn evaluate(family: GpFamily, param: i64) -> Self {
        let (n, k) = family.parameters(param);
        let predicted_sdb = family.predict(param).ok();
        let mut verdict = FamilyVerdict {
            family,
            param,
            n,
            k,
            predicted_sdb,
            oracle_sdb: None,
            agree: None,
            vt: None,
            db: None,
            diameter: None,
            error: None,
        };
        match family.spec(param).and_then(|spec| Ok((spec, gp_oracle(&spec)?))) {
            Ok((spec, oracle)) => {
                verdict.oracle_sdb = Some(oracle.sdb);
                verdict.db = Some(oracle.db);
                verdict.diameter = Some(oracle.diameter);
                verdict.vt = Some(gp_is_vertex_transitive(&spec));
                verdict.agree = predicted_sdb.map(|p| p == oracle.sdb);
            }
            Err(e) => verdict.error = Some(e.to_string()),
        }
        verdict
    }

    pub fn in_domain(&self) -> bool {
        self.predicted_sdb.is_some()
    }

    /// In-domain rows must agree; out-of-domain rows are never failures.
    pub fn is_failure(&self) -> bool {
        self.in_domain() && self.agree != Some(true)
    }
}

/// Builds every member in `params`, runs the oracle and compares it with the
/// closed form. Per-item construction errors are recorded, never fatal.
/// Rows come back ordered by parameter.
pub fn cross_check(family: GpFamily, params: RangeInclusive<i64>) -> Vec<FamilyVerdict> {
    let mut rows: Vec<FamilyVerdict> = params
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|param| FamilyVerdict::evaluate(family, param))
        .collect();
    rows.sort_by_key(|r| r.param);
    rows
}

/// Predicted sphere sizes around `u_0` (and `v_0` where known) in
/// `GP(3k+3, k)`, valid for `k ≥ 13`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedProfile {
    pub k: i64,
    /// `⌈(k+1)/2⌉`
    pub b: i64,
    pub sizes_u0: Vec<usize>,
    /// Only for `k ≡ 2 (mod 3)`, where `v_0` corresponds to `u_0` of
    /// `GP(3k+3, 2k+1)` under the inverse-step isomorphism.
    pub sizes_v0: Option<Vec<usize>>,
}

fn band_b(k: i64) -> i64 {
    (k + 2) / 2
}

pub fn predicted_profile_3k3(k: i64) -> Result<PredictedProfile> {
    if k < 13 {
        return Err(Error::OutOfDomain(k));
    }
    let b = band_b(k);
    let mut sizes = vec![1, 3, 6, 12, 16, 14];
    sizes.extend(std::iter::repeat_n(12, (b - 5) as usize));
    if k % 2 == 1 {
        sizes.extend([7, 1]);
    } else {
        sizes.push(2);
    }
    let sizes_v0 = (k % 3 == 2).then(|| sizes.clone());
    Ok(PredictedProfile {
        k,
        b,
        sizes_u0: sizes,
        sizes_v0,
    })
}

/// The exact sphere `S_i(u_0)` in `GP(3k+3, k)` for `k ≥ 13`, as vertex ids.
/// Levels past the eccentricity are empty.
pub fn predicted_sets_3k3(k: i64, i: i64) -> Result<BTreeSet<Vertex>> {
    if k < 13 {
        return Err(Error::OutOfDomain(k));
    }
    let b = band_b(k);
    if i < 0 || i > b + 2 {
        return Err(Error::OutOfDomain(i));
    }
    let spec = GpSpec::new((3 * k + 3) as usize, k as usize)?;
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut single = Vec::new();
    match i {
        0 => single.push(spec.outer(0)),
        1 => {
            outer.push(1);
            single.push(spec.inner(0));
        }
        2 => {
            outer.push(2);
            inner.extend([1, k]);
        }
        3 => {
            outer.extend([3, k]);
            inner.extend([2, k + 1, k - 1, 2 * k]);
        }
        4 => {
            outer.extend([4, k + 1, k - 1, 2 * k]);
            inner.extend([3, k + 2, k - 2, k + 4]);
        }
        5 => {
            outer.extend([5, k + 2, k - 2, k + 4]);
            inner.extend([4, k - 3, k + 5]);
        }
        i if i <= b => {
            outer.extend([i, k + i - 1, k - i + 3]);
            inner.extend([i - 1, k - i + 2, k + i]);
        }
        i if k % 2 == 1 && i == b + 1 => {
            outer.extend([(k + 3) / 2, (3 * k + 1) / 2]);
            inner.push((k + 1) / 2);
            single.push(spec.inner((3 * k + 3) / 2));
        }
        i if k % 2 == 1 && i == b + 2 => single.push(spec.outer((3 * k + 3) / 2)),
        i if k % 2 == 0 && i == b + 1 => outer.push((3 * k + 2) / 2),
        _ => {}
    }
    // indices below are written as ±t
    let mut set: BTreeSet<Vertex> = single.into_iter().collect();
    for t in outer {
        set.extend([spec.outer(t), spec.outer(-t)]);
    }
    for t in inner {
        set.extend([spec.inner(t), spec.inner(-t)]);
    }
    Ok(set)
}
