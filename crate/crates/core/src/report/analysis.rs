//! Arrangement analysis: lattice, blow-up ledger, singularities, flatness.

use super::input::{Analysis, Model, SCHEMA_VERSION};
use crate::arrangement::IntersectionLattice;
use crate::connection::{check_flatness, natural_residues, scalar_on_normal, FlatnessReport, ResidueSystem, ScalarVerdict};
use crate::error::Result;
use crate::numeric::Field;
use crate::singularity::{pair_report, SingularityReport};
use crate::stratification::{
    blowup_schedule, enumerate_flags, hat_strata, stratum_descriptor, HatStratum, ScheduleGroup, StratumDescriptor,
};
use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Longest flag to enumerate; `None` means the lattice height.
    pub max_flag_len: Option<usize>,
    /// Overrides the analyses requested in the input.
    pub only: Option<Vec<Analysis>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatRow {
    pub index: usize,
    pub members: Vec<String>,
    pub codim: usize,
    pub dim: usize,
    /// Hyperplanes of `H_L` whose traces on this flat coincide with another.
    pub trace_collisions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementSection {
    pub flats: Vec<FlatRow>,
    pub height: usize,
    pub schedule: Vec<ScheduleGroup>,
    pub max_flag_len: usize,
    pub strata: Vec<StratumDescriptor>,
    pub hat_strata: Vec<HatStratum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueSource {
    Explicit,
    /// Weighted orthogonal projections for the supplied or standard form.
    Natural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessSection {
    pub source: ResidueSource,
    pub criterion: FlatnessReport,
    pub scalar_on_normal: Vec<ScalarVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub kind: &'static str,
    pub field: Field,
    pub ambient_dim: usize,
    pub hyperplanes: Vec<String>,
    pub cusps: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<ArrangementSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singularities: Option<SingularityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flatness: Option<FlatnessSection>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn arrangement_section(lattice: &IntersectionLattice, max_flag_len: Option<usize>) -> Result<ArrangementSection> {
    let ids: Vec<&str> = lattice.arrangement().hyperplanes().iter().map(|h| h.id.as_str()).collect();
    let mut flats = Vec::with_capacity(lattice.len());
    for f in lattice.flats() {
        let restriction = lattice.restrict_arrangement(f.index)?;
        flats.push(FlatRow {
            index: f.index,
            members: f.members.iter().map(|&i| ids[i].to_string()).collect(),
            codim: f.codim,
            dim: f.dim(),
            trace_collisions: restriction
                .traces
                .iter()
                .filter(|t| t.multiplicity() > 1)
                .map(|t| t.multiplicity())
                .sum(),
        });
    }
    let max_len = max_flag_len.unwrap_or_else(|| lattice.height());
    let strata = enumerate_flags(lattice, Some(max_len))
        .iter()
        .map(|flag| stratum_descriptor(lattice, flag))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArrangementSection {
        flats,
        height: lattice.height(),
        schedule: blowup_schedule(lattice),
        max_flag_len: max_len,
        strata,
        hat_strata: hat_strata(lattice).strata,
    })
}

fn flatness_section(model: &Model) -> Result<FlatnessSection> {
    let w = &model.weighted;
    let (source, system) = match &model.residues {
        Some(r) => (ResidueSource::Explicit, ResidueSystem::explicit(w, r.clone())?),
        None => (ResidueSource::Natural, natural_residues(w, model.form.as_ref())?),
    };
    let criterion = check_flatness(&system)?;
    let scalars = w
        .lattice()
        .proper_flats()
        .filter(|f| f.codim >= 2)
        .map(|f| scalar_on_normal(&system, f.index))
        .collect::<Result<Vec<_>>>()?;
    Ok(FlatnessSection {
        source,
        criterion,
        scalar_on_normal: scalars,
    })
}

/// Runs the requested analyses. Without an explicit request every section is
/// produced, except flatness, which needs residues or a form.
pub fn analyze(model: &Model, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let requested = options.only.clone().or_else(|| model.analyses.clone());
    let wants = |a: Analysis| match &requested {
        Some(list) => list.contains(&a),
        None => a != Analysis::Flatness || model.residues.is_some() || model.form.is_some(),
    };
    let w = &model.weighted;
    let lattice = w.lattice();
    let arr = lattice.arrangement();
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        kind: "analysis",
        field: arr.field(),
        ambient_dim: arr.ambient_dim(),
        hyperplanes: arr.hyperplanes().iter().map(|h| h.id.clone()).collect(),
        cusps: w.cusps().to_vec(),
        arrangement: wants(Analysis::Arrangement)
            .then(|| arrangement_section(lattice, options.max_flag_len))
            .transpose()?,
        singularities: wants(Analysis::Singularities).then(|| pair_report(w)).transpose()?,
        flatness: wants(Analysis::Flatness).then(|| flatness_section(model)).transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::input::InputSpec;

    fn model(text: &str) -> Model {
        InputSpec::from_json(text).unwrap().build().unwrap()
    }

    #[test]
    fn empty_arrangement_is_lc() {
        let m = model(r#"{"schema": 1, "field": "Q", "ambient_dim": 3, "hyperplanes": []}"#);
        let r = analyze(&m, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.singularities.unwrap().git_side.summary, "lc everywhere");
        assert!(r.flatness.is_none());
    }

    #[test]
    fn orthogonal_pair() {
        let m = model(
            r#"{"schema": 1, "field": "Q", "ambient_dim": 2, "hyperplanes": [
                {"id": "A", "normal": [1, 0], "m": 2}, {"id": "B", "normal": [0, 1], "m": 2}]}"#,
        );
        let r = analyze(&m, &AnalysisOptions::default()).unwrap();
        let s = r.singularities.as_ref().unwrap();
        assert!(s.git_side.non_lc);
        let p = s.flats.iter().find(|f| f.codim == 2).unwrap();
        assert_eq!(crate::numeric::format_rat(&p.exponent), "1/2");
        assert_eq!(p.discrepancy.as_ref().map(crate::numeric::format_rat).as_deref(), Some("-2/1"));
        let a = r.arrangement.as_ref().unwrap();
        assert_eq!(a.strata.len(), 5);
        assert_eq!(r.to_json(), analyze(&m, &AnalysisOptions::default()).unwrap().to_json());
        let only = AnalysisOptions {
            only: Some(vec![Analysis::Flatness]),
            ..Default::default()
        };
        let f = analyze(&m, &only).unwrap();
        assert!(f.arrangement.is_none() && f.singularities.is_none());
        assert!(f.flatness.unwrap().criterion.flat);
    }
}
