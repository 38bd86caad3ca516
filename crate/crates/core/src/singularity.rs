//! Weights, exponents, cone angles and discrepancies of weighted arrangements.

use crate::arrangement::IntersectionLattice;
use crate::error::{Error, Result};
use crate::numeric::{rat_int, serialize_opt_rat, serialize_rat, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Ramification order along a divisor; `Infinite` marks a cusp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn new(m: i64) -> Result<Order> {
        if m < 1 {
            return Err(Error::InvalidOrder(m));
        }
        Ok(Order::Finite(m as u64))
    }

    /// `1 - 1/m`, and `1` for `m = inf`.
    pub fn weight(self) -> Rat {
        match self {
            Order::Finite(m) => Rat::one() - Rat::new(1.into(), m.into()),
            Order::Infinite => Rat::one(),
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(m) => s.serialize_u64(*m),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(m) => Order::new(m).map_err(serde::de::Error::custom),
            Raw::Str(s) if s == "inf" => Ok(Order::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "order must be an integer >= 1 or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// `1 - 1/m`; rejects `m <= 0`.
pub fn weight_from_order(m: i64) -> Result<Rat> {
    Order::new(m).map(Order::weight)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MmpClass {
    Terminal,
    Canonical,
    Klt,
    LcBoundary,
    NonLc,
}

impl MmpClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MmpClass::Terminal => "terminal",
            MmpClass::Canonical => "canonical",
            MmpClass::Klt => "klt",
            MmpClass::LcBoundary => "lc_boundary",
            MmpClass::NonLc => "non_lc",
        }
    }
}

/// Most specific class for a discrepancy value.
pub fn classify(d: &Rat) -> MmpClass {
    let minus_one = -Rat::one();
    if d.is_positive() {
        MmpClass::Terminal
    } else if d.is_zero() {
        MmpClass::Canonical
    } else if *d > minus_one {
        MmpClass::Klt
    } else if *d == minus_one {
        MmpClass::LcBoundary
    } else {
        MmpClass::NonLc
    }
}

/// `-k*lambda - 1` for an exceptional divisor over a centre of codimension `k`.
pub fn discrepancy_from_exponent(k: usize, lambda: &Rat) -> Result<Rat> {
    if k < 2 {
        return Err(Error::CodimTooSmall(k));
    }
    Ok(-(rat_int(k as i64) * lambda) - Rat::one())
}

/// An arrangement with a ramification order on every hyperplane, plus
/// abstract cusp divisors of infinite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedArrangement {
    lattice: IntersectionLattice,
    orders: Vec<Order>,
    cusps: Vec<String>,
}

/// Either a flat of the lattice or one of the cusp divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    Flat(usize),
    Cusp(usize),
}

impl WeightedArrangement {
    /// `orders[i]` belongs to hyperplane `i`; `None` entries are rejected.
    pub fn new(
        lattice: IntersectionLattice,
        orders: Vec<Option<Order>>,
        cusps: Vec<String>,
    ) -> Result<Self> {
        let hs = lattice.arrangement().hyperplanes();
        if orders.len() != hs.len() {
            let missing = hs.get(orders.len()).map_or("?", |h| h.id.as_str());
            return Err(Error::MissingWeight(missing.to_string()));
        }
        let mut out = Vec::with_capacity(orders.len());
        for (h, o) in hs.iter().zip(orders) {
            out.push(o.ok_or_else(|| Error::MissingWeight(h.id.clone()))?);
        }
        let mut seen: std::collections::BTreeSet<&str> = hs.iter().map(|h| h.id.as_str()).collect();
        for c in &cusps {
            if !seen.insert(c.as_str()) {
                return Err(Error::DuplicateId(c.clone()));
            }
        }
        Ok(WeightedArrangement {
            lattice,
            orders: out,
            cusps,
        })
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    pub fn orders(&self) -> &[Order] {
        &self.orders
    }

    pub fn cusps(&self) -> &[String] {
        &self.cusps
    }

    pub fn weight(&self, hyperplane: usize) -> Result<Rat> {
        self.orders
            .get(hyperplane)
            .map(|o| o.weight())
            .ok_or_else(|| Error::UnknownHyperplane(hyperplane.to_string()))
    }

    /// `a_L = (sum of a_i over H_i ⊇ L) / codim L`.
    pub fn stratum_exponent(&self, flat: usize) -> Result<Rat> {
        let f = self.lattice.flat(flat)?;
        if f.is_ambient() {
            return Err(Error::AmbientFlat);
        }
        let sum: Rat = f.members.iter().map(|&i| self.orders[i].weight()).sum();
        Ok(sum / rat_int(f.codim as i64))
    }

    /// A codim-1 flat whose hyperplane has infinite order behaves as a cusp.
    fn is_cusp_flat(&self, flat: usize) -> Result<bool> {
        let f = self.lattice.flat(flat)?;
        Ok(f.codim == 1 && f.members.len() == 1 && self.orders[f.members[0]].is_infinite())
    }

    pub fn cone_angle(&self, site: Site) -> Result<ConeAngle> {
        match site {
            Site::Cusp(c) => {
                self.cusp(c)?;
                Ok(ConeAngle {
                    fraction: Rat::zero(),
                    violation: false,
                    cusp: true,
                })
            }
            Site::Flat(flat) => {
                let cusp = self.is_cusp_flat(flat)?;
                let fraction = Rat::one() - self.stratum_exponent(flat)?;
                Ok(ConeAngle {
                    violation: !cusp && !fraction.is_positive(),
                    fraction,
                    cusp,
                })
            }
        }
    }

    fn cusp(&self, c: usize) -> Result<&str> {
        self.cusps
            .get(c)
            .map(String::as_str)
            .ok_or_else(|| Error::UnknownHyperplane(format!("cusp #{c}")))
    }

    /// `k (a_L - 1) - 1` with `k = codim L`; `-1` at a cusp.
    pub fn exceptional_discrepancy(&self, site: Site) -> Result<Rat> {
        match site {
            Site::Cusp(c) => {
                self.cusp(c)?;
                Ok(-Rat::one())
            }
            Site::Flat(flat) => {
                if self.is_cusp_flat(flat)? {
                    return Ok(-Rat::one());
                }
                let f = self.lattice.flat(flat)?;
                if f.codim < 2 {
                    return Err(if f.codim == 0 {
                        Error::AmbientFlat
                    } else {
                        Error::NotExceptional(flat)
                    });
                }
                discrepancy_from_exponent(f.codim, &(Rat::one() - self.stratum_exponent(flat)?))
            }
        }
    }

    /// Discrepancy of the divisor over the point to which `P(L, X)°` collapses
    /// when `L` is contracted: `k (a_L - 1) - 1` with `k = dim L + 1`.
    pub fn contracted_discrepancy(&self, flat: usize) -> Result<Rat> {
        let f = self.lattice.flat(flat)?;
        if f.is_ambient() {
            return Err(Error::AmbientFlat);
        }
        let k = f.dim() + 1;
        let a = self.stratum_exponent(flat)?;
        Ok(rat_int(k as i64) * (a - Rat::one()) - Rat::one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeAngle {
    /// Angle as a fraction of a full turn.
    #[serde(serialize_with = "serialize_rat")]
    pub fraction: Rat,
    pub violation: bool,
    pub cusp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatRow {
    pub flat: usize,
    pub members: Vec<String>,
    pub codim: usize,
    #[serde(serialize_with = "serialize_rat")]
    pub exponent: Rat,
    pub cone_angle: ConeAngle,
    /// `None` on codim-1 flats, which are not exceptional.
    #[serde(serialize_with = "serialize_opt_rat")]
    pub discrepancy: Option<Rat>,
    pub class: Option<MmpClass>,
    #[serde(serialize_with = "serialize_rat")]
    pub contracted_discrepancy: Rat,
    pub contracted_class: MmpClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspRow {
    pub id: String,
    pub order: Order,
    #[serde(serialize_with = "serialize_rat")]
    pub weight: Rat,
    pub cone_angle: ConeAngle,
    #[serde(serialize_with = "serialize_rat")]
    pub discrepancy: Rat,
    pub class: MmpClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRule {
    /// Divisor over a flat of codimension at least two.
    Exceptional,
    /// Divisor over the point where a contracted codim-1 flat collapses.
    Contracted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub flat: usize,
    pub members: Vec<String>,
    pub rule: WitnessRule,
    #[serde(serialize_with = "serialize_rat")]
    pub discrepancy: Rat,
    pub class: MmpClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GitSide {
    pub non_lc: bool,
    pub witness: Option<Witness>,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BailyBorelSide {
    pub lc: bool,
    pub cusp_rows: usize,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub flats: Vec<FlatRow>,
    pub cusps: Vec<CuspRow>,
    pub git_side: GitSide,
    pub bailyborel_side: BailyBorelSide,
    pub transformation: Option<String>,
    pub notes: Vec<String>,
}

pub const LAMBDA_RANGE_NOTE: &str = "the discrepancy formula -k*lambda - 1 is evaluated for every \
rational lambda; exceptional rows use lambda = 1 - a_L, which lies in (0,1) whenever a_L lies in (0,1), \
whereas the formula is usually stated for lambda in (-1,0)";

const TRANSFORMATION: &str = "passing from the GIT model to the Baily-Borel model replaces the \
non-lc singularities above by log canonical ones: cusp divisors enter with coefficient 1 and \
discrepancy exactly -1";

pub fn pair_report(w: &WeightedArrangement) -> Result<SingularityReport> {
    let lattice = w.lattice();
    let hs = lattice.arrangement().hyperplanes();
    let mut flats = Vec::new();
    for f in lattice.proper_flats() {
        let members: Vec<String> = f.members.iter().map(|&i| hs[i].id.clone()).collect();
        let exponent = w.stratum_exponent(f.index)?;
        let cone_angle = w.cone_angle(Site::Flat(f.index))?;
        let discrepancy = match w.exceptional_discrepancy(Site::Flat(f.index)) {
            Ok(d) => Some(d),
            Err(Error::NotExceptional(_)) => None,
            Err(e) => return Err(e),
        };
        let contracted = w.contracted_discrepancy(f.index)?;
        flats.push(FlatRow {
            flat: f.index,
            members,
            codim: f.codim,
            exponent,
            cone_angle,
            class: discrepancy.as_ref().map(classify),
            discrepancy,
            contracted_class: classify(&contracted),
            contracted_discrepancy: contracted,
        });
    }

    let cusps: Vec<CuspRow> = w
        .cusps()
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let d = w.exceptional_discrepancy(Site::Cusp(i))?;
            Ok(CuspRow {
                id: id.clone(),
                order: Order::Infinite,
                weight: Order::Infinite.weight(),
                cone_angle: w.cone_angle(Site::Cusp(i))?,
                class: classify(&d),
                discrepancy: d,
            })
        })
        .collect::<Result<_>>()?;

    let one = Rat::one();
    let relevant = |r: &&FlatRow| r.exponent < one;
    let witness = flats
        .iter()
        .filter(relevant)
        .filter(|r| r.codim >= 2)
        .filter_map(|r| r.discrepancy.as_ref().map(|d| (r, d, WitnessRule::Exceptional)))
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.flat.cmp(&b.0.flat)))
        .or_else(|| {
            flats
                .iter()
                .filter(relevant)
                .filter(|r| r.codim == 1 && !r.cone_angle.cusp)
                .map(|r| (r, &r.contracted_discrepancy, WitnessRule::Contracted))
                .min_by(|a, b| a.1.cmp(b.1).then(a.0.flat.cmp(&b.0.flat)))
        })
        .map(|(r, d, rule)| Witness {
            flat: r.flat,
            members: r.members.clone(),
            rule,
            discrepancy: d.clone(),
            class: classify(d),
        });

    let non_lc = witness.as_ref().is_some_and(|x| x.class == MmpClass::NonLc);
    let git_side = GitSide {
        non_lc,
        summary: match &witness {
            Some(x) if non_lc => format!(
                "non-lc: flat {{{}}} gives discrepancy {}",
                x.members.join(","),
                crate::numeric::format_rat(&x.discrepancy)
            ),
            Some(_) => "no non-lc witness among the flats with a_L < 1".into(),
            None if flats.is_empty() && cusps.is_empty() => "lc everywhere".into(),
            None => "no flat with a_L < 1; no non-lc witness".into(),
        },
        witness,
    };
    let bailyborel_side = BailyBorelSide {
        lc: true,
        cusp_rows: cusps.len(),
        summary: if cusps.is_empty() {
            "lc; no cusp divisors supplied".into()
        } else {
            format!("lc; {} cusp divisor(s) with discrepancy -1", cusps.len())
        },
    };
    let transformation = git_side.non_lc.then(|| TRANSFORMATION.to_string());
    Ok(SingularityReport {
        flats,
        cusps,
        git_side,
        bailyborel_side,
        transformation,
        notes: vec![LAMBDA_RANGE_NOTE.to_string()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_intersection_lattice, Arrangement, Hyperplane};
    use crate::numeric::{rat, Field, FieldElem};

    fn weighted(n: usize, normals: &[&[i64]], ms: &[i64], cusps: &[&str]) -> WeightedArrangement {
        let hs = normals
            .iter()
            .enumerate()
            .map(|(i, v)| {
                Hyperplane::new(
                    format!("H{}", i + 1),
                    v.iter().map(|&x| FieldElem::from_int(Field::Rational, x)).collect(),
                )
            })
            .collect();
        let l = build_intersection_lattice(&Arrangement::new(Field::Rational, n, hs).unwrap());
        WeightedArrangement::new(
            l,
            ms.iter().map(|&m| Some(Order::new(m).unwrap())).collect(),
            cusps.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(weight_from_order(2).unwrap(), rat(1, 2));
        assert_eq!(weight_from_order(1).unwrap(), rat(0, 1));
        assert_eq!(Order::Infinite.weight(), rat(1, 1));
        assert_eq!(weight_from_order(0), Err(Error::InvalidOrder(0)));
        assert_eq!(weight_from_order(-3), Err(Error::InvalidOrder(-3)));
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&rat(-2, 1)), MmpClass::NonLc);
        assert_eq!(classify(&rat(-1, 1)), MmpClass::LcBoundary);
        assert_eq!(classify(&rat(-1, 2)), MmpClass::Klt);
        assert_eq!(classify(&rat(0, 1)), MmpClass::Canonical);
        assert_eq!(classify(&rat(1, 2)), MmpClass::Terminal);
    }

    #[test]
    fn discrepancy_formula() {
        assert_eq!(discrepancy_from_exponent(5, &rat(0, 1)).unwrap(), rat(-1, 1));
        assert_eq!(discrepancy_from_exponent(2, &rat(1, 2)).unwrap(), rat(-2, 1));
        assert_eq!(discrepancy_from_exponent(3, &rat(-1, 3)).unwrap(), rat(0, 1));
        assert_eq!(discrepancy_from_exponent(1, &rat(0, 1)), Err(Error::CodimTooSmall(1)));
    }

    #[test]
    fn generic_pair_of_involutions() {
        let w = weighted(2, &[&[1, 0], &[0, 1]], &[2, 2], &[]);
        assert_eq!(w.stratum_exponent(1).unwrap(), rat(1, 2));
        assert_eq!(w.stratum_exponent(3).unwrap(), rat(1, 2));
        assert_eq!(w.exceptional_discrepancy(Site::Flat(3)).unwrap(), rat(-2, 1));
        assert_eq!(w.exceptional_discrepancy(Site::Flat(1)), Err(Error::NotExceptional(1)));
        assert_eq!(w.cone_angle(Site::Flat(3)).unwrap().fraction, rat(1, 2));
        let r = pair_report(&w).unwrap();
        assert!(r.git_side.non_lc);
        let wit = r.git_side.witness.unwrap();
        assert_eq!(wit.flat, 3);
        assert_eq!(wit.discrepancy, rat(-2, 1));
        assert!(r.transformation.is_some());
    }

    #[test]
    fn three_lines_exponent() {
        let w = weighted(2, &[&[1, 0], &[0, 1], &[1, 1]], &[3, 3, 3], &[]);
        let origin = w.lattice().len() - 1;
        assert_eq!(w.stratum_exponent(origin).unwrap(), rat(1, 1));
        let ang = w.cone_angle(Site::Flat(origin)).unwrap();
        assert!(ang.violation);
        let w = weighted(2, &[&[1, 0], &[0, 1], &[1, 1]], &[6, 6, 6], &[]);
        assert_eq!(w.stratum_exponent(origin).unwrap(), rat(5, 4));
        assert!(w.cone_angle(Site::Flat(origin)).unwrap().violation);
    }

    #[test]
    fn cusps_and_empty() {
        let w = weighted(2, &[], &[], &[]);
        let r = pair_report(&w).unwrap();
        assert!(!r.git_side.non_lc);
        assert_eq!(r.git_side.summary, "lc everywhere");
        let w = weighted(2, &[&[1, 0]], &[2], &["C"]);
        assert_eq!(w.exceptional_discrepancy(Site::Cusp(0)).unwrap(), rat(-1, 1));
        assert_eq!(w.cone_angle(Site::Cusp(0)).unwrap().fraction, rat(0, 1));
        let r = pair_report(&w).unwrap();
        assert_eq!(r.cusps.len(), 1);
        assert_eq!(r.cusps[0].class, MmpClass::LcBoundary);
        assert!(r.bailyborel_side.lc);
    }

    #[test]
    fn missing_weight() {
        let hs = vec![Hyperplane::new("a", vec![FieldElem::from_int(Field::Rational, 1)])];
        let l = build_intersection_lattice(&Arrangement::new(Field::Rational, 1, hs).unwrap());
        assert_eq!(
            WeightedArrangement::new(l, vec![None], vec![]),
            Err(Error::MissingWeight("a".into()))
        );
    }

    #[test]
    fn order_serde() {
        let o: Order = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(o, Order::Infinite);
        let o: Order = serde_json::from_str("4").unwrap();
        assert_eq!(o, Order::Finite(4));
        assert!(serde_json::from_str::<Order>("0").is_err());
        assert_eq!(serde_json::to_string(&Order::Infinite).unwrap(), "\"inf\"");
    }
}
