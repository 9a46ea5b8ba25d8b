use anyhow::{bail, Result};
use clap::ValueEnum;
use distbal::claims::{gp_specs_up_to, primes_up_to};
use distbal::classify::{cross_check, FamilyVerdict, GpFamily};
use distbal::families::folkman_qr;
use distbal::partition::EdgeMetrics;
use distbal::symmetry::gp_is_vertex_transitive;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Gp,
    Qrfolk,
    N2,
    #[value(name = "5k1")]
    FiveK1,
    #[value(name = "3k3")]
    ThreeK3,
    #[value(name = "3km3")]
    ThreeKm3,
    #[value(name = "2k2")]
    TwoK2,
}

impl SweepFamily {
    fn id(self) -> &'static str {
        match self {
            SweepFamily::Gp => "gp",
            SweepFamily::Qrfolk => "qrfolk",
            other => other.classified().map_or("", |f| f.id()),
        }
    }

    fn classified(self) -> Option<GpFamily> {
        match self {
            SweepFamily::N2 => Some(GpFamily::StepTwo),
            SweepFamily::FiveK1 => Some(GpFamily::FiveKPlusOne),
            SweepFamily::ThreeK3 => Some(GpFamily::ThreeKPlusThree),
            SweepFamily::ThreeKm3 => Some(GpFamily::ThreeKMinusThree),
            SweepFamily::TwoK2 => Some(GpFamily::TwoKPlusTwo),
            SweepFamily::Gp | SweepFamily::Qrfolk => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFilter {
    DbNotSdb,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Bounds {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    pub k_min: Option<i64>,
    pub k_max: Option<i64>,
    pub p_max: Option<u64>,
}

/// Prediction column: absent when the family has no closed form, marked
/// when the parameter lies outside the closed form's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Value(bool),
    OutOfDomain,
}

impl Serialize for Prediction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Prediction::Value(b) => s.serialize_bool(*b),
            Prediction::OutOfDomain => s.serialize_str("out-of-domain"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: &'static str,
    pub n: i64,
    pub k: Option<i64>,
    pub predicted_sdb: Option<Prediction>,
    pub oracle_sdb: Option<bool>,
    pub agree: Option<bool>,
    pub vt: Option<bool>,
    pub db: Option<bool>,
    pub diameter: Option<usize>,
}

impl SweepRow {
    fn db_not_sdb(&self) -> bool {
        self.db == Some(true) && self.oracle_sdb == Some(false)
    }
}

impl From<FamilyVerdict> for SweepRow {
    fn from(v: FamilyVerdict) -> Self {
        SweepRow {
            family: v.family.id(),
            n: v.n,
            k: Some(v.k),
            predicted_sdb: Some(v.predicted_sdb.map_or(Prediction::OutOfDomain, Prediction::Value)),
            oracle_sdb: v.oracle_sdb,
            agree: v.agree,
            vt: v.vt,
            db: v.db,
            diameter: v.diameter,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub db: usize,
    pub sdb: usize,
    pub db_not_sdb: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub family: &'static str,
    pub range: (i64, i64),
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

pub fn run(family: SweepFamily, bounds: Bounds, filter: Option<SweepFilter>) -> Result<SweepReport> {
    let (range, mut rows) = match family {
        SweepFamily::Gp => {
            let lo = bounds.n_min.unwrap_or(3);
            let hi = bounds.n_max.unwrap_or(20);
            if hi < 3 || lo > hi {
                bail!("bad range for gp: --n-min {lo} --n-max {hi} (need 3 <= n-min <= n-max)");
            }
            let rows = gp_specs_up_to(hi)
                .into_par_iter()
                .filter(|s| s.n() >= lo)
                .map(|s| -> Result<SweepRow> {
                    let g = s.build();
                    let m = EdgeMetrics::new(&g)?;
                    Ok(SweepRow {
                        family: "gp",
                        n: s.n() as i64,
                        k: Some(s.k() as i64),
                        predicted_sdb: None,
                        oracle_sdb: Some(m.strongly_distance_balanced().holds()),
                        agree: None,
                        vt: Some(gp_is_vertex_transitive(&s)),
                        db: Some(m.distance_balanced().holds()),
                        diameter: Some(m.diameter()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ((lo as i64, hi as i64), rows)
        }
        SweepFamily::Qrfolk => {
            let hi = bounds.p_max.unwrap_or(23);
            if hi < 5 {
                bail!("bad range for qrfolk: --p-max {hi} (need at least 5)");
            }
            let rows = primes_up_to(hi)
                .into_par_iter()
                .map(|p| -> Result<SweepRow> {
                    let g = folkman_qr(p)?;
                    let m = EdgeMetrics::new(&g)?;
                    Ok(SweepRow {
                        family: "qrfolk",
                        n: p as i64,
                        k: None,
                        predicted_sdb: None,
                        oracle_sdb: Some(m.strongly_distance_balanced().holds()),
                        agree: None,
                        vt: None,
                        db: Some(m.distance_balanced().holds()),
                        diameter: Some(m.diameter()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ((5, hi as i64), rows)
        }
        classified => {
            let gp_family = classified.classified().expect("classified family");
            let (lo, hi) = if gp_family == GpFamily::StepTwo {
                let lo = bounds.n_min.unwrap_or(3) as i64;
                let hi = bounds.n_max.map_or(60, |n| n as i64);
                (lo, hi)
            } else {
                (bounds.k_min.unwrap_or(1), bounds.k_max.unwrap_or(12))
            };
            if lo < 0 || lo > hi || hi < 1 {
                bail!("bad range for {}: {lo}..={hi}", classified.id());
            }
            let rows = cross_check(gp_family, lo..=hi).into_iter().map(SweepRow::from).collect();
            ((lo, hi), rows)
        }
    };
    if filter == Some(SweepFilter::DbNotSdb) {
        rows.retain(SweepRow::db_not_sdb);
    }
    let summary = Summary {
        rows: rows.len(),
        db: rows.iter().filter(|r| r.db == Some(true)).count(),
        sdb: rows.iter().filter(|r| r.oracle_sdb == Some(true)).count(),
        db_not_sdb: rows.iter().filter(|r| r.db_not_sdb()).count(),
        disagreements: rows.iter().filter(|r| r.agree == Some(false)).count(),
    };
    Ok(SweepReport {
        family: family.id(),
        range,
        rows,
        summary,
    })
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn to_csv(report: &SweepReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "k", "predicted_sdb", "oracle_sdb", "agree", "vt", "db", "diameter"])?;
    for r in &report.rows {
        let predicted = match r.predicted_sdb {
            Some(Prediction::Value(b)) => b.to_string(),
            Some(Prediction::OutOfDomain) => "out-of-domain".to_string(),
            None => String::new(),
        };
        w.write_record([
            r.family.to_string(),
            r.n.to_string(),
            cell(r.k),
            predicted,
            cell(r.oracle_sdb),
            cell(r.agree),
            cell(r.vt),
            cell(r.db),
            cell(r.diameter),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
