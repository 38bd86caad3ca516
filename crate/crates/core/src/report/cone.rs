//! Reports for spherical joins and the flat cone metric.

use super::input::{ConeInput, SCHEMA_VERSION};
use crate::cone::{cone_metric_check, join_all, prime_decompose, sample_grid, unit_tangent_cone, ConeManifold, JoinPoint};
use crate::error::{Error, Result};
use crate::numeric::{format_rat, to_f64};
use serde::Serialize;

/// Largest acceptable metric deviation.
pub const METRIC_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinRow {
    pub factors: Vec<String>,
    pub normalized: ConeManifold,
    pub display: String,
    pub dim: i64,
    /// `k` in `S^k * N`; `-1` when there is no sphere factor.
    pub sphere_index: i64,
    pub prime_part: Option<ConeManifold>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentRow {
    pub join: String,
    pub at: String,
    pub cone: ConeManifold,
    pub display: String,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricRow {
    pub beta: String,
    pub samples: usize,
    pub max_deviation: f64,
    pub within_tolerance: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeReport {
    pub schema: u32,
    pub kind: &'static str,
    pub joins: Vec<JoinRow>,
    pub tangent_cones: Vec<TangentRow>,
    pub tolerance: f64,
    pub metric: Vec<MetricRow>,
}

impl ConeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn cone_report(input: &ConeInput) -> Result<ConeReport> {
    let joins = input
        .joins
        .iter()
        .map(|parts| {
            let normalized = join_all(parts);
            let (sphere_index, prime_part) = prime_decompose(&normalized);
            JoinRow {
                factors: parts.iter().map(ToString::to_string).collect(),
                display: normalized.to_string(),
                dim: normalized.dim(),
                normalized,
                sphere_index,
                prime_part,
            }
        })
        .collect();

    let mut tangent_cones = Vec::new();
    for (i, q) in input.tangent_cones.iter().enumerate() {
        let missing = |which: &str| Error::schema(format!("tangent_cones[{i}].{which}"), "required for this point");
        let point = match q.at.as_str() {
            "first" => JoinPoint::InFirst {
                link: q.link_first.clone().ok_or_else(|| missing("link_first"))?,
            },
            "second" => JoinPoint::InSecond {
                link: q.link_second.clone().ok_or_else(|| missing("link_second"))?,
            },
            "arc" => JoinPoint::OnArc {
                link_first: q.link_first.clone().ok_or_else(|| missing("link_first"))?,
                link_second: q.link_second.clone().ok_or_else(|| missing("link_second"))?,
            },
            other => {
                return Err(Error::schema(
                    format!("tangent_cones[{i}].at"),
                    format!("expected \"first\", \"second\" or \"arc\", got {other:?}"),
                ))
            }
        };
        let cone = unit_tangent_cone(&q.first, &q.second, &point)?;
        tangent_cones.push(TangentRow {
            join: join_all(&[q.first.clone(), q.second.clone()]).to_string(),
            at: q.at.clone(),
            display: cone.to_string(),
            dim: cone.dim(),
            cone,
        });
    }

    let grid = input.grid.clone().unwrap_or(super::input::GridSpec {
        count: 100,
        r_min: 0.1,
        r_max: 2.0,
    });
    if grid.count == 0 || !(grid.r_min > 0.0 && grid.r_max >= grid.r_min) {
        return Err(Error::schema("grid", "need count >= 1 and 0 < r_min <= r_max"));
    }
    let samples = sample_grid(grid.count, grid.r_min, grid.r_max);
    let mut metric = Vec::new();
    for (i, b) in input.betas.iter().enumerate() {
        let beta = b.parse_rat(&format!("betas[{i}]"))?;
        let check = cone_metric_check(to_f64(&beta), &samples).map_err(|e| match e {
            Error::InvalidBeta(_) => Error::InvalidBeta(format_rat(&beta)),
            e => e,
        })?;
        metric.push(MetricRow {
            beta: format_rat(&beta),
            samples: check.samples,
            max_deviation: check.max_deviation,
            within_tolerance: check.max_deviation <= METRIC_TOLERANCE,
        });
    }
    Ok(ConeReport {
        schema: SCHEMA_VERSION,
        kind: "cone",
        joins,
        tangent_cones,
        tolerance: METRIC_TOLERANCE,
        metric,
    })
}
