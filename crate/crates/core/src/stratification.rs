//! Combinatorial ledger of the iterated blow-up: schedule, flags, strata.
//!
//! Dimensions are those of the local model: the ambient space has dimension
//! `n = N` and a flat of codimension `c` has dimension `n - c`.

use crate::arrangement::IntersectionLattice;
use crate::error::{Error, Result};
use serde::Serialize;

/// Flats of one dimension, blown up together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScheduleGroup {
    pub dim: usize,
    pub flats: Vec<usize>,
}

/// Proper flats of codimension at least two, grouped by increasing dimension.
pub fn blowup_schedule(lattice: &IntersectionLattice) -> Vec<ScheduleGroup> {
    let n = lattice.ambient_dim();
    let mut groups: Vec<ScheduleGroup> = Vec::new();
    let mut flats: Vec<_> = lattice.proper_flats().filter(|f| f.codim >= 2).collect();
    flats.sort_by_key(|f| (n - f.codim, f.index));
    for f in flats {
        let dim = n - f.codim;
        match groups.last_mut() {
            Some(g) if g.dim == dim => g.flats.push(f.index),
            _ => groups.push(ScheduleGroup {
                dim,
                flats: vec![f.index],
            }),
        }
    }
    groups
}

/// Strictly increasing chain `L_0 ⊂ L_1 ⊂ ... ⊂ L_k` of proper flats.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Flag {
    chain: Vec<usize>,
}

impl Flag {
    pub fn new(lattice: &IntersectionLattice, chain: Vec<usize>) -> Result<Flag> {
        if chain.is_empty() {
            return Err(Error::InvalidFlag("empty chain".into()));
        }
        for &i in &chain {
            if lattice.flat(i)?.is_ambient() {
                return Err(Error::InvalidFlag(format!("flat {i} is the ambient space")));
            }
        }
        for w in chain.windows(2) {
            if w[0] == w[1] || !lattice.is_subflat(w[0], w[1])? {
                return Err(Error::InvalidFlag(format!(
                    "flat {} is not strictly contained in flat {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Flag { chain })
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

/// All flags of length at most `max_len` (default: the lattice height), sorted
/// by length and then by chain.
pub fn enumerate_flags(lattice: &IntersectionLattice, max_len: Option<usize>) -> Vec<Flag> {
    let cap = max_len.unwrap_or_else(|| lattice.height());
    let above: Vec<Vec<usize>> = (0..lattice.len())
        .map(|i| {
            if i == 0 {
                Vec::new()
            } else {
                lattice.proper_superflats(i).expect("index in range")
            }
        })
        .collect();
    let starts: Vec<usize> = lattice.proper_flats().map(|f| f.index).collect();
    enumerate_chains(&above, &starts, cap)
        .into_iter()
        .map(|chain| Flag { chain })
        .collect()
}

/// Strict chains in a finite poset given by `above[i]` (all elements strictly
/// greater than `i`), starting from any element of `starts`, with at most
/// `cap` elements. Sorted by length, then lexicographically.
pub fn enumerate_chains(above: &[Vec<usize>], starts: &[usize], cap: usize) -> Vec<Vec<usize>> {
    fn extend(chain: &mut Vec<usize>, above: &[Vec<usize>], cap: usize, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        if chain.len() == cap {
            return;
        }
        let last = *chain.last().expect("nonempty");
        for &next in &above[last] {
            chain.push(next);
            extend(chain, above, cap, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    if cap == 0 {
        return out;
    }
    for &s in starts {
        extend(&mut vec![s], above, cap, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Factor {
    /// `L_0°`, the open part of the smallest flat.
    Open { flat: usize, dim: usize },
    /// `P(L_{i-1}, L_i)°`; `upper = None` stands for the ambient space.
    Projective {
        lower: usize,
        upper: Option<usize>,
        dim: usize,
    },
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Open { dim, .. } | Factor::Projective { dim, .. } => *dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumDescriptor {
    pub flag: Flag,
    pub factors: Vec<Factor>,
}

impl StratumDescriptor {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }
}

/// Product decomposition `L_0° × P(L_0, L_1)° × ... × P(L_k, X)°` of the open
/// stratum over `flag`.
pub fn stratum_descriptor(lattice: &IntersectionLattice, flag: &Flag) -> Result<StratumDescriptor> {
    let checked = Flag::new(lattice, flag.chain.clone())?;
    let n = lattice.ambient_dim();
    let codim = |i: usize| lattice.flat(i).map(|f| f.codim);
    let first = checked.chain[0];
    let mut factors = vec![Factor::Open {
        flat: first,
        dim: n - codim(first)?,
    }];
    for w in checked.chain.windows(2) {
        factors.push(Factor::Projective {
            lower: w[0],
            upper: Some(w[1]),
            dim: codim(w[0])? - codim(w[1])? - 1,
        });
    }
    let last = *checked.chain.last().expect("nonempty");
    factors.push(Factor::Projective {
        lower: last,
        upper: None,
        dim: codim(last)? - 1,
    });
    Ok(StratumDescriptor {
        flag: checked,
        factors,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatStratum {
    pub flat: usize,
    /// `n` for the open stratum `X°`, `codim - 1` for `P(L, X)°`.
    pub dim: usize,
}

/// Strata of the contracted space: `X°` and one `P(L, X)°` per proper flat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatStratification {
    pub strata: Vec<HatStratum>,
    #[serde(skip)]
    members: Vec<Vec<usize>>,
}

impl HatStratification {
    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// Whether the stratum of flat `a` lies in the closure of the stratum of flat `b`.
    /// `X°` is dense; among proper flats `a ⊆ b` gives `S_b ⊆ closure(S_a)`.
    pub fn in_closure(&self, a: usize, b: usize) -> Result<bool> {
        let ma = self.members.get(a).ok_or(Error::UnknownFlat(a))?;
        let mb = self.members.get(b).ok_or(Error::UnknownFlat(b))?;
        if mb.is_empty() {
            return Ok(true);
        }
        if ma.is_empty() {
            return Ok(false);
        }
        // b ⊆ a as flats, i.e. members(a) ⊆ members(b).
        Ok(ma.iter().all(|m| mb.binary_search(m).is_ok()))
    }
}

pub fn hat_strata(lattice: &IntersectionLattice) -> HatStratification {
    let n = lattice.ambient_dim();
    let strata = lattice
        .flats()
        .iter()
        .map(|f| HatStratum {
            flat: f.index,
            dim: if f.is_ambient() { n } else { f.codim - 1 },
        })
        .collect();
    HatStratification {
        strata,
        members: lattice.flats().iter().map(|f| f.members.clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_intersection_lattice, Arrangement, Hyperplane};
    use crate::numeric::{Field, FieldElem};

    fn lattice(n: usize, normals: &[&[i64]]) -> IntersectionLattice {
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
        build_intersection_lattice(&Arrangement::new(Field::Rational, n, hs).unwrap())
    }

    #[test]
    fn schedule() {
        assert!(blowup_schedule(&lattice(2, &[&[1, 0]])).is_empty());
        let s = blowup_schedule(&lattice(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(s, vec![ScheduleGroup { dim: 0, flats: vec![3] }]);
    }

    #[test]
    fn flags_of_generic_pair() {
        let l = lattice(2, &[&[1, 0], &[0, 1]]);
        let flags: Vec<Vec<usize>> = enumerate_flags(&l, None).iter().map(|f| f.chain().to_vec()).collect();
        assert_eq!(flags, vec![vec![1], vec![2], vec![3], vec![3, 1], vec![3, 2]]);
        assert!(enumerate_flags(&lattice(2, &[]), None).is_empty());
        assert_eq!(enumerate_flags(&l, Some(1)).len(), 3);
    }

    #[test]
    fn chain_poset() {
        let above = vec![vec![1, 2], vec![2], vec![]];
        assert_eq!(enumerate_chains(&above, &[0, 1, 2], 3).len(), 7);
        assert_eq!(enumerate_chains(&above, &[0, 1, 2], 0).len(), 0);
    }

    #[test]
    fn descriptors() {
        let l = lattice(2, &[&[1, 0], &[0, 1]]);
        let f = Flag::new(&l, vec![1]).unwrap();
        let d = stratum_descriptor(&l, &f).unwrap();
        assert_eq!(d.factors.iter().map(Factor::dim).collect::<Vec<_>>(), vec![1, 0]);
        assert_eq!(d.total_dim(), 1);
        let f = Flag::new(&l, vec![3, 1]).unwrap();
        let d = stratum_descriptor(&l, &f).unwrap();
        assert_eq!(d.factors.iter().map(Factor::dim).collect::<Vec<_>>(), vec![0, 0, 0]);
        assert!(Flag::new(&l, vec![1, 3]).is_err());
        assert!(Flag::new(&l, vec![0]).is_err());
        assert!(Flag::new(&l, vec![]).is_err());
    }

    #[test]
    fn hat() {
        let l = lattice(2, &[&[1, 0], &[0, 1]]);
        let h = hat_strata(&l);
        assert_eq!(h.strata.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![2, 0, 0, 1]);
        assert!(h.in_closure(1, 3).unwrap());
        assert!(!h.in_closure(3, 1).unwrap());
        assert!(h.in_closure(3, 0).unwrap());
        assert!(!h.in_closure(0, 3).unwrap());
    }
}
