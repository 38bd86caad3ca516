//! JSON input documents and their conversion into validated models.

use crate::arrangement::{build_intersection_lattice, Arrangement, Hyperplane};
use crate::cone::ConeManifold;
use crate::connection::{Form, FormKind};
use crate::error::{Error, Result};
use crate::lattice::{self, HermitianLattice, RingTag, TreeGraph};
use crate::numeric::{parse_rat, Field, FieldElem, Matrix, Rat, Vector};
use crate::singularity::{Order, WeightedArrangement};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// An exact scalar: a JSON string in the exact encoding, or a plain integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn parse(&self, field: Field, path: &str) -> Result<FieldElem> {
        match self {
            Scalar::Int(n) => Ok(FieldElem::from_int(field, *n)),
            Scalar::Text(s) => {
                FieldElem::parse(field, s).map_err(|e| Error::schema(path, e.to_string()))
            }
        }
    }

    pub fn parse_rat(&self, path: &str) -> Result<Rat> {
        match self {
            Scalar::Int(n) => Ok(Rat::from_integer((*n).into())),
            Scalar::Text(s) => parse_rat(s).map_err(|e| Error::schema(path, e.to_string())),
        }
    }

    pub fn exact(x: &FieldElem) -> Scalar {
        Scalar::Text(x.to_string())
    }
}

fn parse_vector(field: Field, v: &[Scalar], path: &str) -> Result<Vector> {
    v.iter()
        .enumerate()
        .map(|(i, s)| s.parse(field, &format!("{path}[{i}]")))
        .collect()
}

fn parse_matrix(field: Field, rows: &[Vec<Scalar>], path: &str) -> Result<Matrix> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != cols {
                return Err(Error::schema(
                    format!("{path}[{i}]"),
                    format!("row has {} entries, expected {cols}", r.len()),
                ));
            }
            parse_vector(field, r, &format!("{path}[{i}]"))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, parsed)
}

fn matrix_to_scalars(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Scalar::exact).collect())
        .collect()
}

/// Parses any input document, reporting JSON errors with line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::schema(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn check_schema(version: u32) -> Result<()> {
    if version != SCHEMA_VERSION {
        return Err(Error::schema(
            "schema",
            format!("unsupported schema version {version}, expected {SCHEMA_VERSION}"),
        ));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneSpec {
    pub id: String,
    pub normal: Vec<Scalar>,
    pub m: Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Order>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub kind: FormKind,
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Analysis {
    Arrangement,
    Singularities,
    Flatness,
}

/// Arrangement input: hyperplanes with ramification orders, optional cusps,
/// residues and splitting form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub schema: u32,
    pub field: Field,
    pub ambient_dim: usize,
    #[serde(default)]
    pub hyperplanes: Vec<HyperplaneSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cusps: Vec<CuspSpec>,
    /// Residue matrix per hyperplane id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residues: Option<BTreeMap<String, Vec<Vec<Scalar>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analyses: Option<Vec<Analysis>>,
}

/// Validated content of an [`InputSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub weighted: WeightedArrangement,
    pub residues: Option<Vec<Matrix>>,
    pub form: Option<Form>,
    pub analyses: Option<Vec<Analysis>>,
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<InputSpec> {
        parse_json(text)
    }

    pub fn build(&self) -> Result<Model> {
        check_schema(self.schema)?;
        let field = self.field;
        let mut hyperplanes = Vec::with_capacity(self.hyperplanes.len());
        let mut orders = Vec::with_capacity(self.hyperplanes.len());
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let path = format!("hyperplanes[{i}].normal");
            if h.normal.len() != self.ambient_dim {
                return Err(Error::schema(
                    path,
                    format!("expected {} coordinates, got {}", self.ambient_dim, h.normal.len()),
                ));
            }
            hyperplanes.push(Hyperplane::new(h.id.clone(), parse_vector(field, &h.normal, &path)?));
            orders.push(Some(h.m));
        }
        let arrangement = Arrangement::new(field, self.ambient_dim, hyperplanes)?;
        for (i, c) in self.cusps.iter().enumerate() {
            if matches!(c.m, Some(Order::Finite(_))) {
                return Err(Error::schema(format!("cusps[{i}].m"), "cusps have m = \"inf\""));
            }
        }
        let cusps = self.cusps.iter().map(|c| c.id.clone()).collect();
        let weighted = WeightedArrangement::new(build_intersection_lattice(&arrangement), orders, cusps)?;

        let residues = match &self.residues {
            None => None,
            Some(map) => {
                for id in map.keys() {
                    arrangement
                        .index_of(id)
                        .map_err(|_| Error::schema(format!("residues.{id}"), "no hyperplane with this id"))?;
                }
                let mut out = Vec::new();
                for h in arrangement.hyperplanes() {
                    let rows = map.get(&h.id).ok_or_else(|| {
                        Error::schema("residues", format!("missing residue for hyperplane {}", h.id))
                    })?;
                    out.push(parse_matrix(field, rows, &format!("residues.{}", h.id))?);
                }
                Some(out)
            }
        };
        let form = self
            .form
            .as_ref()
            .map(|f| {
                Ok(Form {
                    kind: f.kind,
                    matrix: parse_matrix(field, &f.matrix, "form.matrix")?,
                })
            })
            .transpose()?;
        Ok(Model {
            weighted,
            residues,
            form,
            analyses: self.analyses.clone(),
        })
    }

    /// Canonical document for a weighted arrangement.
    pub fn from_weighted(w: &WeightedArrangement) -> InputSpec {
        let arr = w.lattice().arrangement();
        InputSpec {
            schema: SCHEMA_VERSION,
            field: arr.field(),
            ambient_dim: arr.ambient_dim(),
            hyperplanes: arr
                .hyperplanes()
                .iter()
                .zip(w.orders())
                .map(|(h, m)| HyperplaneSpec {
                    id: h.id.clone(),
                    normal: h.normal.iter().map(Scalar::exact).collect(),
                    m: *m,
                })
                .collect(),
            cusps: w
                .cusps()
                .iter()
                .map(|id| CuspSpec {
                    id: id.clone(),
                    m: Some(Order::Infinite),
                })
                .collect(),
            residues: None,
            form: None,
            analyses: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("input documents serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum LatticeSpec {
    Gram {
        ring: RingTag,
        matrix: Vec<Vec<Scalar>>,
    },
    Tree {
        m: u32,
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    HyperbolicPlane {
        ring: RingTag,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pairing: Option<Scalar>,
    },
    RankOne {
        ring: RingTag,
        value: i64,
    },
    DirectSum {
        ring: RingTag,
        parts: Vec<LatticeSpec>,
    },
}

impl LatticeSpec {
    pub fn build(&self) -> Result<HermitianLattice> {
        self.build_at("lattice")
    }

    fn build_at(&self, path: &str) -> Result<HermitianLattice> {
        match self {
            LatticeSpec::Gram { ring, matrix } => {
                let n = matrix.len();
                if let Some((i, _)) = matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
                    return Err(Error::schema(format!("{path}.gram.matrix[{i}]"), "Gram matrix must be square"));
                }
                let m = parse_matrix(ring.field(), matrix, &format!("{path}.gram.matrix"))?;
                let m = if n == 0 { Matrix::zeros(ring.field(), 0, 0) } else { m };
                HermitianLattice::new(*ring, m)
            }
            LatticeSpec::Tree { m, n, edges } => lattice::lattice_from_tree(&TreeGraph::new(*n, edges.clone())?, *m),
            LatticeSpec::HyperbolicPlane { ring, pairing } => match pairing {
                None => lattice::hyperbolic_plane(*ring),
                Some(p) => lattice::hyperbolic_plane_with_pairing(
                    *ring,
                    p.parse(ring.field(), &format!("{path}.hyperbolic_plane.pairing"))?,
                ),
            },
            LatticeSpec::RankOne { ring, value } => Ok(lattice::rank_one(*ring, *value)),
            LatticeSpec::DirectSum { ring, parts } => {
                let built = parts
                    .iter()
                    .enumerate()
                    .map(|(i, p)| p.build_at(&format!("{path}.direct_sum.parts[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                lattice::direct_sum(*ring, &built)
            }
        }
    }

    /// Canonical `gram` form of a lattice.
    pub fn from_lattice(l: &HermitianLattice) -> LatticeSpec {
        LatticeSpec::Gram {
            ring: l.ring(),
            matrix: matrix_to_scalars(l.gram()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootQuery {
    pub bound: u32,
    /// Norm to search for; defaults to the root norm `m/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_support: Option<usize>,
    /// Number of vectors to list, in search order.
    #[serde(default = "default_root_limit")]
    pub limit: usize,
    /// Also look for a perpendicular pair and report its sum.
    #[serde(default)]
    pub perpendicular: bool,
}

fn default_root_limit() -> usize {
    16
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeInput {
    pub schema: u32,
    pub lattice: LatticeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootQuery>,
    /// Vector whose orthogonal complement is wanted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_of: Option<Vec<Scalar>>,
}

impl LatticeInput {
    pub fn from_json(text: &str) -> Result<LatticeInput> {
        let input: LatticeInput = parse_json(text)?;
        check_schema(input.schema)?;
        Ok(input)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub count: usize,
    pub r_min: f64,
    pub r_max: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TangentQuery {
    pub first: ConeManifold,
    pub second: ConeManifold,
    /// `"first"`, `"second"` or `"arc"`.
    pub at: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_first: Option<ConeManifold>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_second: Option<ConeManifold>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeInput {
    pub schema: u32,
    #[serde(default)]
    pub joins: Vec<Vec<ConeManifold>>,
    #[serde(default)]
    pub tangent_cones: Vec<TangentQuery>,
    /// Cone parameters as exact rationals, e.g. `"1/3"`.
    #[serde(default)]
    pub betas: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
}

impl ConeInput {
    pub fn from_json(text: &str) -> Result<ConeInput> {
        let input: ConeInput = parse_json(text)?;
        check_schema(input.schema)?;
        Ok(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_LINES: &str = r#"{
        "schema": 1, "field": "Q", "ambient_dim": 2,
        "hyperplanes": [
            {"id": "H1", "normal": ["1", "0"], "m": 2},
            {"id": "H2", "normal": [0, 1], "m": "inf"}
        ],
        "cusps": [{"id": "C"}]
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let spec = InputSpec::from_json(TWO_LINES).unwrap();
        let model = spec.build().unwrap();
        assert_eq!(model.weighted.lattice().len(), 4);
        let again = InputSpec::from_json(&InputSpec::from_weighted(&model.weighted).to_json())
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(again.weighted, model.weighted);
    }

    #[test]
    fn diagnostics_carry_paths() {
        let bad = TWO_LINES.replace("\"1\", \"0\"", "\"1\", \"x\"");
        match InputSpec::from_json(&bad).unwrap().build() {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "hyperplanes[0].normal[1]"),
            other => panic!("unexpected {other:?}"),
        }
        match InputSpec::from_json("{\"schema\": 1,\n \"field\": \"R\"}") {
            Err(Error::Schema { path, .. }) => assert!(path.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
        let zero = TWO_LINES.replace("\"1\", \"0\"", "\"0\", \"0\"");
        assert!(matches!(
            InputSpec::from_json(&zero).unwrap().build(),
            Err(Error::ZeroNormal(_))
        ));
        let v2 = TWO_LINES.replace("\"schema\": 1", "\"schema\": 2");
        assert!(matches!(InputSpec::from_json(&v2).unwrap().build(), Err(Error::Schema { .. })));
    }

    #[test]
    fn lattice_specs() {
        let text = r#"{"schema": 1, "lattice": {"direct_sum": {"ring": "eisenstein", "parts": [
            {"rank_one": {"ring": "eisenstein", "value": 3}},
            {"tree": {"m": 6, "n": 4, "edges": [[1,2],[2,3],[3,4]]}},
            {"hyperbolic_plane": {"ring": "eisenstein"}}
        ]}}}"#;
        let l = LatticeInput::from_json(text).unwrap().lattice.build().unwrap();
        assert_eq!(l.rank(), 7);
        let back = LatticeSpec::from_lattice(&l);
        let json = serde_json::to_string(&back).unwrap();
        let again: LatticeSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(again.build().unwrap(), l);
    }
}
