//! Presets for three moduli problems: plane quartics, rational elliptic
//! surfaces and cubic threefolds.
//!
//! Only lattice-level facts are recomputed. Orbit counts and divisor classes
//! are carried as labelled constants, never as results.

use super::analysis::{analyze, AnalysisOptions, AnalysisReport};
use super::input::{Model, SCHEMA_VERSION};
use super::lattice::{complement_section, perpendicular_pair, ComplementSection, PerpendicularPair, SignatureSummary};
use crate::error::{Error, Result};
use crate::lattice::{cubic_threefold_lattice, eisenstein_a, gaussian_e7, HermitianLattice, RingTag, RootSearch};
use crate::numeric::Vector;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

/// Coefficient bound for the root search in every preset.
pub const ROOT_BOUND: u32 = 2;
const LISTED_ROOTS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStudy {
    Quartic,
    Res,
    Cubic3,
}

impl CaseStudy {
    pub const ALL: [CaseStudy; 3] = [CaseStudy::Quartic, CaseStudy::Res, CaseStudy::Cubic3];

    pub fn name(self) -> &'static str {
        match self {
            CaseStudy::Quartic => "quartic",
            CaseStudy::Res => "res",
            CaseStudy::Cubic3 => "cubic3",
        }
    }

    pub fn lattice(self) -> HermitianLattice {
        match self {
            CaseStudy::Quartic => gaussian_e7(),
            CaseStudy::Res => eisenstein_a(10),
            CaseStudy::Cubic3 => cubic_threefold_lattice(),
        }
    }

    fn description(self) -> &'static str {
        match self {
            CaseStudy::Quartic => "smooth plane quartics; Gaussian lattice of type E7",
            CaseStudy::Res => "rational elliptic surfaces; hyperball in the Eisenstein lattice of type A10",
            CaseStudy::Cubic3 => "cubic threefolds; Eisenstein lattice (3) + A4 + A4 + U",
        }
    }

    fn recipe(self) -> &'static str {
        match self {
            CaseStudy::Quartic => "tree E7 over Z[zeta_4], diagonal 2, edges 1+i",
            CaseStudy::Res => "path A10 over Z[zeta_6], diagonal 3, edges sqrt(-3)",
            CaseStudy::Cubic3 => "(3) + A4 + A4 + U over Z[zeta_6], U with pairing sqrt(-3)",
        }
    }

    fn expected_ball_dimension(self) -> usize {
        match self {
            CaseStudy::Quartic => 6,
            CaseStudy::Res => 9,
            CaseStudy::Cubic3 => 10,
        }
    }

    fn fixtures(self) -> Vec<Fixture> {
        let f = Fixture::new;
        match self {
            CaseStudy::Quartic => vec![
                f("ball_dimension", json!(6)),
                f("cusp_orbits", json!(1)),
                f("arrangement_orbits", json!(["H_n", "H_h"])),
                f("divisor_classes", json!(["D_n", "D_h"])),
                f("contracted_arrangement", json!("H_h")),
                f("self_disjoint_divisor", json!("D_h")),
            ],
            CaseStudy::Res => vec![
                f("ball_dimension", json!(9)),
                f("cusp_orbits", json!(1)),
                f("ambient_arrangement_orbits", json!(1)),
                f("phi_vector_norm", json!(6)),
                f("restricted_arrangement_invariants", json!([6, 9, 15, 18])),
                f("divisor_classes", json!(["D_6", "D_9", "D_15", "D_18"])),
                f("outside_period_image", json!(["D_6", "D_9"])),
            ],
            CaseStudy::Cubic3 => vec![
                f("ball_dimension", json!(10)),
                f("cusp_orbits", json!(2)),
                f("arrangement_orbits", json!(["H_c", "H_Delta"])),
                f("divisor_classes", json!(["D_c", "D_Delta"])),
                f("contracted_arrangement", json!("H_c")),
                f("self_disjoint_divisor", json!("D_c")),
            ],
        }
    }
}

impl fmt::Display for CaseStudy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseStudy {
    type Err = Error;

    fn from_str(s: &str) -> Result<CaseStudy> {
        CaseStudy::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::schema("case_study", format!("unknown case study {s:?}; expected quartic, res or cubic3")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Asserted constant, not recomputed here.
    Fixture,
    Computed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub value: Value,
    pub provenance: Provenance,
}

impl Fixture {
    fn new(name: &'static str, value: Value) -> Fixture {
        Fixture {
            name,
            value,
            provenance: Provenance::Fixture,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Computed<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn computed<T>(value: T) -> Computed<T> {
    Computed {
        value,
        provenance: Provenance::Computed,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: usize,
    pub actual: Option<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseStudyReport {
    pub schema: u32,
    pub kind: &'static str,
    pub name: CaseStudy,
    pub description: &'static str,
    pub recipe: &'static str,
    pub ring: RingTag,
    pub lattice: Computed<SignatureSummary>,
    pub root_bound: u32,
    pub first_roots: Computed<Vec<Vector>>,
    pub perpendicular_roots: Option<Computed<Option<PerpendicularPair>>>,
    pub phi: Option<Computed<ComplementSection>>,
    pub checks: Vec<Check>,
    pub fixtures: Vec<Fixture>,
    /// Analysis of a user-supplied local excerpt of the arrangement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excerpt: Option<AnalysisReport>,
    pub notes: Vec<&'static str>,
}

impl CaseStudyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

const EXCERPT_NOTE: &str = "no finite presentation of the global arrangement is built in; \
singularity analysis runs only on a supplied local excerpt";

pub fn run_case_study(study: CaseStudy, excerpt: Option<(&Model, &AnalysisOptions)>) -> Result<CaseStudyReport> {
    let lattice = study.lattice();
    let summary = SignatureSummary::of(&lattice);
    let first_roots: Vec<Vector> = RootSearch::new(&lattice, ROOT_BOUND).take(LISTED_ROOTS).collect();
    let mut checks = vec![Check {
        name: "ball_dimension",
        expected: study.expected_ball_dimension(),
        actual: summary.ball_dimension,
        pass: summary.ball_dimension == Some(study.expected_ball_dimension()),
    }];

    let (perpendicular_roots, phi) = if study == CaseStudy::Res {
        let pair = perpendicular_pair(&lattice, ROOT_BOUND)?;
        let phi = match &pair {
            Some(p) => Some(complement_section(&lattice, p.sum.clone())?),
            None => None,
        };
        let norm = pair.as_ref().and_then(|p| p.sum_norm.to_integer().try_into().ok());
        checks.push(Check {
            name: "perpendicular_sum_norm",
            expected: 6,
            actual: norm,
            pass: norm == Some(6),
        });
        let rank = phi.as_ref().map(|c| c.signature.rank);
        checks.push(Check {
            name: "phi_rank",
            expected: 9,
            actual: rank,
            pass: rank == Some(9),
        });
        let ball = phi.as_ref().and_then(|c| c.signature.ball_dimension);
        checks.push(Check {
            name: "phi_ball_dimension",
            expected: 8,
            actual: ball,
            pass: ball == Some(8),
        });
        (Some(computed(pair)), phi.map(computed))
    } else {
        (None, None)
    };
    let excerpt = excerpt.map(|(m, o)| analyze(m, o)).transpose()?;
    Ok(CaseStudyReport {
        schema: SCHEMA_VERSION,
        kind: "case_study",
        name: study,
        description: study.description(),
        recipe: study.recipe(),
        ring: lattice.ring(),
        lattice: computed(summary),
        root_bound: ROOT_BOUND,
        first_roots: computed(first_roots),
        perpendicular_roots,
        phi,
        checks,
        fixtures: study.fixtures(),
        excerpt,
        notes: vec![EXCERPT_NOTE],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in CaseStudy::ALL {
            assert_eq!(c.name().parse::<CaseStudy>().unwrap(), c);
        }
        assert!("quintic".parse::<CaseStudy>().is_err());
    }

    #[test]
    fn quartic_and_cubic() {
        let q = run_case_study(CaseStudy::Quartic, None).unwrap();
        assert!(q.passed());
        assert_eq!(q.lattice.value.rank, 7);
        let c = run_case_study(CaseStudy::Cubic3, None).unwrap();
        assert!(c.passed());
        assert_eq!(c.lattice.value.rank, 11);
        assert!(c.fixtures.iter().all(|f| f.provenance == Provenance::Fixture));
    }
}
