//! Reports for Hermitian lattices: signature, bounded roots, complements.

use super::input::{LatticeInput, RootQuery, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::lattice::{find_perpendicular_roots, orthogonal_complement, HermitianLattice, RingTag, RootSearch, SignConvention, Signature};
use crate::numeric::{serialize_rat, Matrix, Rat, Vector};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureSummary {
    pub rank: usize,
    pub signature: Signature,
    /// Unordered inertia `{min, max}`.
    pub profile: (usize, usize),
    pub convention: SignConvention,
    pub ball_dimension: Option<usize>,
}

impl SignatureSummary {
    pub fn of(lattice: &HermitianLattice) -> SignatureSummary {
        let s = lattice.signature();
        SignatureSummary {
            rank: lattice.rank(),
            signature: s,
            profile: s.profile(),
            convention: s.convention(),
            ball_dimension: s.ball_dimension(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerpendicularPair {
    pub first: Vector,
    pub second: Vector,
    pub sum: Vector,
    #[serde(serialize_with = "serialize_rat")]
    pub sum_norm: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSection {
    pub bound: u32,
    #[serde(serialize_with = "serialize_rat")]
    pub norm: Rat,
    pub max_support: usize,
    /// The first vectors in search order: support size, then support, then coefficients.
    pub listed: Vec<Vector>,
    /// Whether the search had more vectors than `listed`.
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perpendicular: Option<Option<PerpendicularPair>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementSection {
    pub vector: Vector,
    #[serde(serialize_with = "serialize_rat")]
    pub vector_norm: Rat,
    pub basis: Vec<Vector>,
    pub gram: Matrix,
    pub signature: SignatureSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub schema: u32,
    pub kind: &'static str,
    pub ring: RingTag,
    pub gram: Matrix,
    pub signature: SignatureSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<ComplementSection>,
}

impl LatticeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn perpendicular_pair(lattice: &HermitianLattice, bound: u32) -> Result<Option<PerpendicularPair>> {
    find_perpendicular_roots(lattice, bound)?
        .map(|(first, second)| {
            let sum: Vector = first.iter().zip(&second).map(|(x, y)| x + y).collect();
            let sum_norm = lattice.norm(&sum)?;
            Ok(PerpendicularPair {
                first,
                second,
                sum,
                sum_norm,
            })
        })
        .transpose()
}

pub fn complement_section(lattice: &HermitianLattice, v: Vector) -> Result<ComplementSection> {
    let c = orthogonal_complement(lattice, &v)?;
    Ok(ComplementSection {
        vector_norm: lattice.norm(&v)?,
        vector: v,
        gram: c.lattice.gram().clone(),
        signature: SignatureSummary::of(&c.lattice),
        basis: c.basis,
    })
}

fn root_section(lattice: &HermitianLattice, q: &RootQuery) -> Result<RootSection> {
    let norm = match &q.norm {
        Some(s) => s.parse_rat("roots.norm")?,
        None => lattice.ring().root_norm(),
    };
    let max_support = q.max_support.unwrap_or(lattice.rank()).min(lattice.rank());
    let mut search = RootSearch::new(lattice, q.bound)
        .with_target(norm.clone())
        .with_max_support(max_support);
    let listed: Vec<Vector> = search.by_ref().take(q.limit).collect();
    let truncated = search.next().is_some();
    let perpendicular = q.perpendicular.then(|| perpendicular_pair(lattice, q.bound)).transpose()?;
    Ok(RootSection {
        bound: q.bound,
        norm,
        max_support,
        listed,
        truncated,
        perpendicular,
    })
}

pub fn lattice_report(input: &LatticeInput) -> Result<LatticeReport> {
    let lattice = input.lattice.build()?;
    let roots = input.roots.as_ref().map(|q| root_section(&lattice, q)).transpose()?;
    let complement = match &input.complement_of {
        None => None,
        Some(v) => {
            if v.len() != lattice.rank() {
                return Err(Error::schema(
                    "complement_of",
                    format!("expected {} coordinates, got {}", lattice.rank(), v.len()),
                ));
            }
            let vector = v
                .iter()
                .enumerate()
                .map(|(i, s)| s.parse(lattice.field(), &format!("complement_of[{i}]")))
                .collect::<Result<Vector>>()?;
            Some(complement_section(&lattice, vector)?)
        }
    };
    Ok(LatticeReport {
        schema: SCHEMA_VERSION,
        kind: "lattice",
        ring: lattice.ring(),
        gram: lattice.gram().clone(),
        signature: SignatureSummary::of(&lattice),
        roots,
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots_and_complement() {
        let text = r#"{"schema": 1, "lattice": {"tree": {"m": 6, "n": 2, "edges": [[1, 2]]}},
            "roots": {"bound": 1, "limit": 3}, "complement_of": [1, 0]}"#;
        let r = lattice_report(&LatticeInput::from_json(text).unwrap()).unwrap();
        assert_eq!(r.signature.profile, (0, 2));
        let roots = r.roots.as_ref().unwrap();
        assert_eq!(roots.listed.len(), 3);
        assert!(roots.truncated);
        assert_eq!(r.complement.as_ref().unwrap().signature.rank, 1);
        let bad = text.replace("[1, 0]", "[1]");
        assert!(matches!(
            lattice_report(&LatticeInput::from_json(&bad).unwrap()),
            Err(Error::Schema { .. })
        ));
    }
}
