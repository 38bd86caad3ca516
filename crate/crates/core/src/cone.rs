//! Spherical joins of cone-manifolds and the flat cone metric of angle `2*pi*beta`.
//!
//! Join dimensions add with a shift: `dim(A * B) = dim A + dim B + 1`, so the
//! empty set behaves as `S^-1` and is the unit for joining.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConeManifold {
    /// The round sphere `S^k`; `k = -1` is the empty set.
    Sphere { k: i64 },
    /// A cone-manifold taken to be prime, known only by label and dimension.
    Prime { label: String, dim: i64 },
    Join { parts: Vec<ConeManifold> },
}

impl ConeManifold {
    pub fn sphere(k: i64) -> Self {
        ConeManifold::Sphere { k }
    }

    pub fn prime(label: impl Into<String>, dim: i64) -> Self {
        ConeManifold::Prime {
            label: label.into(),
            dim,
        }
    }

    pub fn empty() -> Self {
        ConeManifold::Sphere { k: -1 }
    }

    pub fn dim(&self) -> i64 {
        match self {
            ConeManifold::Sphere { k } => *k,
            ConeManifold::Prime { dim, .. } => *dim,
            ConeManifold::Join { parts } => parts.iter().map(|p| p.dim() + 1).sum::<i64>() - 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == -1
    }

    fn collect(&self, sphere: &mut i64, primes: &mut Vec<(String, i64)>) {
        match self {
            ConeManifold::Sphere { k } => *sphere += k + 1,
            ConeManifold::Prime { label, dim } => primes.push((label.clone(), *dim)),
            ConeManifold::Join { parts } => {
                for p in parts {
                    p.collect(sphere, primes);
                }
            }
        }
    }

    /// Flattens nested joins, merges all sphere factors into one prefix
    /// `S^k` and sorts the prime factors.
    pub fn normalize(&self) -> ConeManifold {
        let mut sphere_plus_one = 0;
        let mut primes = Vec::new();
        self.collect(&mut sphere_plus_one, &mut primes);
        primes.sort();
        let k = sphere_plus_one - 1;
        let mut parts: Vec<ConeManifold> = Vec::with_capacity(primes.len() + 1);
        if k >= 0 {
            parts.push(ConeManifold::sphere(k));
        }
        parts.extend(primes.into_iter().map(|(label, dim)| ConeManifold::Prime { label, dim }));
        match parts.len() {
            0 => ConeManifold::empty(),
            1 => parts.pop().expect("one part"),
            _ => ConeManifold::Join { parts },
        }
    }
}

impl fmt::Display for ConeManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeManifold::Sphere { k } => write!(f, "S^{k}"),
            ConeManifold::Prime { label, dim } => write!(f, "{label}[{dim}]"),
            ConeManifold::Join { parts } => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// Normalized spherical join.
pub fn join(a: &ConeManifold, b: &ConeManifold) -> ConeManifold {
    ConeManifold::Join {
        parts: vec![a.clone(), b.clone()],
    }
    .normalize()
}

pub fn join_all(parts: &[ConeManifold]) -> ConeManifold {
    ConeManifold::Join {
        parts: parts.to_vec(),
    }
    .normalize()
}

/// `M = S^k * N` with `N` prime or absent; `k = -1` when there is no sphere factor.
pub fn prime_decompose(m: &ConeManifold) -> (i64, Option<ConeManifold>) {
    match m.normalize() {
        ConeManifold::Sphere { k } => (k, None),
        p @ ConeManifold::Prime { .. } => (-1, Some(p)),
        ConeManifold::Join { mut parts } => {
            let k = match parts.first() {
                Some(ConeManifold::Sphere { k }) => {
                    let k = *k;
                    parts.remove(0);
                    k
                }
                _ => -1,
            };
            let rest = if parts.len() == 1 {
                parts.pop().expect("one part")
            } else {
                ConeManifold::Join { parts }
            };
            (k, Some(rest))
        }
    }
}

/// Where a point of `K * N` sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinPoint {
    /// A point of `K` with unit tangent cone `link` there.
    InFirst { link: ConeManifold },
    /// A point of `N` with unit tangent cone `link` there.
    InSecond { link: ConeManifold },
    /// A point inside the arc from `a` in `K` to `b` in `N`.
    OnArc {
        link_first: ConeManifold,
        link_second: ConeManifold,
    },
}

fn check_link(factor: &ConeManifold, link: &ConeManifold, which: &str) -> Result<()> {
    if factor.is_empty() {
        return Err(Error::InvalidJoin(format!("the {which} factor is empty")));
    }
    if link.dim() != factor.dim() - 1 {
        return Err(Error::InvalidJoin(format!(
            "link {link} has dimension {} but the {which} factor {factor} has dimension {}",
            link.dim(),
            factor.dim()
        )));
    }
    if let ConeManifold::Sphere { k } = factor.normalize() {
        if link.normalize() != ConeManifold::sphere(k - 1) {
            return Err(Error::InvalidJoin(format!(
                "every unit tangent cone of S^{k} is S^{}",
                k - 1
            )));
        }
    }
    Ok(())
}

/// Unit tangent cone of `first * second` at the given point.
pub fn unit_tangent_cone(first: &ConeManifold, second: &ConeManifold, at: &JoinPoint) -> Result<ConeManifold> {
    match at {
        JoinPoint::InFirst { link } => {
            check_link(first, link, "first")?;
            Ok(join(link, second))
        }
        JoinPoint::InSecond { link } => {
            check_link(second, link, "second")?;
            Ok(join(first, link))
        }
        JoinPoint::OnArc {
            link_first,
            link_second,
        } => {
            check_link(first, link_first, "first")?;
            check_link(second, link_second, "second")?;
            Ok(join_all(&[ConeManifold::sphere(0), link_first.clone(), link_second.clone()]))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricCheck {
    pub beta: f64,
    pub samples: usize,
    pub max_deviation: f64,
}

/// Pulls `beta^2 |xi|^(2(beta-1)) |dxi|^2` back along `xi = r^(1/beta) e^(i theta)`
/// and compares it with `dr^2 + beta^2 r^2 dtheta^2` at each `(r, theta)`.
/// The flat `w` directions are unchanged by the coordinate map and are omitted.
pub fn cone_metric_check(beta: f64, samples: &[(f64, f64)]) -> Result<MetricCheck> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::InvalidBeta(beta.to_string()));
    }
    let mut worst: f64 = 0.0;
    for &(r, theta) in samples {
        if r <= 0.0 || !r.is_finite() {
            return Err(Error::ConePoint(r));
        }
        let rho = r.powf(1.0 / beta);
        let drho_dr = rho / (beta * r);
        let (s, c) = theta.sin_cos();
        // Jacobian of (x, y) = (rho cos, rho sin) in (r, theta).
        let j = [[drho_dr * c, -rho * s], [drho_dr * s, rho * c]];
        let conformal = beta * beta * (rho * rho).powf(beta - 1.0);
        let mut g = [[0.0; 2]; 2];
        for (a, row) in g.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                *entry = conformal * (j[0][a] * j[0][b] + j[1][a] * j[1][b]);
            }
        }
        let target = [[1.0, 0.0], [0.0, beta * beta * r * r]];
        for a in 0..2 {
            for b in 0..2 {
                worst = worst.max((g[a][b] - target[a][b]).abs());
            }
        }
    }
    Ok(MetricCheck {
        beta,
        samples: samples.len(),
        max_deviation: worst,
    })
}

/// `count` points with `r` evenly spaced in `[r_min, r_max]` and `theta`
/// sweeping a full turn.
pub fn sample_grid(count: usize, r_min: f64, r_max: f64) -> Vec<(f64, f64)> {
    let steps = count.max(2) - 1;
    (0..count)
        .map(|i| {
            let t = i as f64 / steps as f64;
            (r_min + t * (r_max - r_min), t * std::f64::consts::TAU)
        })
        .collect()
}
