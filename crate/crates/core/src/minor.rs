//! Minor search through prescribed elements, and the pair relation it induces.
//!
//! Every minor of `M` can be written `M/C\D` with `C` independent and `D`
//! coindependent, in which case `|C| = r(M) - r(N)` and
//! `|D| = r*(M) - r*(N)`. The search walks `C` in increasing bitmask order,
//! then `D`, and returns the first pair whose minor is isomorphic to `N`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::connectivity::kappa_masks;
use crate::error::{Error, Result};
use crate::iso::{self, IsoTarget};
use crate::matroid::Matroid;

/// Certificate that `M/C\D` is isomorphic to `N` via `map`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub contract: Vec<String>,
    pub delete: Vec<String>,
    pub map: BTreeMap<String, String>,
}

impl MinorWitness {
    /// Recomputes the minor from scratch and checks every stated property.
    pub fn verify(&self, m: &Matroid, n: &Matroid) -> bool {
        let (Ok(c), Ok(d)) = (
            m.ground().mask_of(&self.contract),
            m.ground().mask_of(&self.delete),
        ) else {
            return false;
        };
        if c & d != 0 || !m.is_independent(c) || !m.is_coindependent(d) {
            return false;
        }
        let Ok(minor) = m.minor(c, d) else {
            return false;
        };
        if minor.size() != self.map.len() {
            return false;
        }
        let map: Option<Vec<usize>> = minor
            .labels()
            .iter()
            .map(|l| self.map.get(l).and_then(|t| n.ground().index_of(t)))
            .collect();
        match map {
            Some(map) => iso::check_isomorphism(&minor, n, &map),
            None => false,
        }
    }

    /// Elements of `M` kept in the minor.
    pub fn used(&self) -> Vec<String> {
        self.map.keys().cloned().collect()
    }

    pub fn used_mask(&self, m: &Matroid) -> Result<Mask> {
        m.ground().mask_of(&self.used())
    }
}

/// Reusable search for minors of `m` isomorphic to `n`.
pub struct MinorSearch<'a> {
    m: &'a Matroid,
    n: &'a Matroid,
    target: IsoTarget,
    pair_kappa_floor: OnceLock<usize>,
}

impl<'a> MinorSearch<'a> {
    pub fn new(m: &'a Matroid, n: &'a Matroid) -> Self {
        MinorSearch {
            m,
            n,
            target: IsoTarget::new(n),
            pair_kappa_floor: OnceLock::new(),
        }
    }

    /// Minimum of κ_N({a},{b}) over distinct elements of N.
    fn pair_kappa_floor(&self) -> usize {
        *self.pair_kappa_floor.get_or_init(|| {
            let n = self.n;
            let k = n.size();
            (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .map(|(a, b)| kappa_masks(n, bits::bit(a), bits::bit(b)))
                .min()
                .unwrap_or(0)
        })
    }

    /// A minor isomorphic to `n` using every element of `z`, if one exists.
    pub fn find(&self, z: Mask) -> Option<MinorWitness> {
        let (m, n) = (self.m, self.n);
        if n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank() {
            return None;
        }
        if bits::size(z) > n.size() {
            return None;
        }
        if bits::size(z) == 2 {
            let mut it = bits::elements(z);
            let (e, f) = (it.next().unwrap(), it.next().unwrap());
            if kappa_masks(m, bits::bit(e), bits::bit(f)) < self.pair_kappa_floor() {
                return None;
            }
        }
        let full = m.full();
        let k = m.rank() - n.rank();
        let d = m.corank() - n.corank();
        let free = full & !z;
        let mut table = vec![0u8; 1 << n.size()];
        for c in bits::k_subsets(free, k) {
            if !m.is_independent(c) {
                continue;
            }
            let rc = m.rank_of(c);
            for del in bits::k_subsets(free & !c, d) {
                if !m.is_coindependent(del) {
                    continue;
                }
                let keep = full & !(c | del);
                let positions: Vec<usize> = bits::elements(keep).collect();
                for (a, slot) in table.iter_mut().enumerate() {
                    *slot = (m.rank_of(bits::expand(a as Mask, &positions) | c) - rc) as u8;
                }
                if let Some(map) = self.target.match_table(positions.len(), &table) {
                    return Some(MinorWitness {
                        contract: m.ground().labels_of(c),
                        delete: m.ground().labels_of(del),
                        map: positions
                            .iter()
                            .zip(&map)
                            .map(|(&i, &j)| {
                                (
                                    m.ground().label(i).to_string(),
                                    n.ground().label(j).to_string(),
                                )
                            })
                            .collect(),
                    });
                }
            }
        }
        None
    }

    pub fn pair(&self, e: usize, f: usize) -> bool {
        self.find(bits::bit(e) | bits::bit(f)).is_some()
    }
}

/// A minor of `m` isomorphic to `n` that uses every element of `z`.
pub fn has_minor_using(m: &Matroid, n: &Matroid, z: Mask) -> Option<MinorWitness> {
    MinorSearch::new(m, n).find(z)
}

pub fn has_minor_using_labels<S: AsRef<str>>(
    m: &Matroid,
    n: &Matroid,
    z: &[S],
) -> Result<Option<MinorWitness>> {
    Ok(has_minor_using(m, n, m.ground().mask_of(z)?))
}

pub fn has_minor(m: &Matroid, n: &Matroid) -> bool {
    has_minor_using(m, n, 0).is_some()
}

/// No `U(2,4)`-minor.
pub fn is_binary(m: &Matroid) -> bool {
    !has_minor(m, &Matroid::uniform(2, 4))
}

impl Matroid {
    pub fn is_binary(&self) -> bool {
        is_binary(self)
    }
}

/// Symmetric relation on `E(M)`: `e ~ f` iff some `N`-minor uses `{e, f}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRelation {
    labels: Vec<String>,
    adjacency: Vec<Mask>,
}

impl PairRelation {
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![0; labels.len()];
        for &(e, f) in edges {
            assert_ne!(e, f);
            adjacency[e] |= bits::bit(f);
            adjacency[f] |= bits::bit(e);
        }
        PairRelation { labels, adjacency }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn related(&self, e: usize, f: usize) -> bool {
        bits::contains(self.adjacency[e], f)
    }

    /// Edges `(e, f)` with `e < f`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|e| (e + 1..n).map(move |f| (e, f)))
            .filter(|&(e, f)| self.related(e, f))
            .collect()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(e, f)| (self.labels[e].clone(), self.labels[f].clone()))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.size();
        (0..n).all(|e| self.adjacency[e] == bits::full(n) & !bits::bit(e))
    }

    /// First pair `(e, f)`, `e < f`, not related.
    pub fn first_missing(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|e| (e + 1..n).map(move |f| (e, f)))
            .find(|&(e, f)| !self.related(e, f))
    }

    /// First `(e, f, g)` with `e ~ f`, `f ~ g`, `e ≠ g` and `e ≁ g`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for e in 0..n {
            for f in bits::elements(self.adjacency[e]) {
                for g in bits::elements(self.adjacency[f]) {
                    if g != e && !self.related(e, g) {
                        return Some((e, f, g));
                    }
                }
            }
        }
        None
    }
}

fn require_two(m: &Matroid) -> Result<()> {
    if m.size() < 2 {
        Err(Error::TooSmall(format!(
            "N-connectivity needs at least two elements, got {}",
            m.size()
        )))
    } else {
        Ok(())
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|e| (e + 1..n).map(move |f| (e, f)))
        .collect()
}

pub fn pair_relation(m: &Matroid, n: &Matroid) -> Result<PairRelation> {
    require_two(m)?;
    let search = MinorSearch::new(m, n);
    let edges: Vec<(usize, usize)> = pairs(m.size())
        .into_par_iter()
        .filter(|&(e, f)| search.pair(e, f))
        .collect();
    Ok(PairRelation::from_edges(m.labels().to_vec(), &edges))
}

/// Every pair of distinct elements lies in an `N`-minor.
pub fn is_n_connected(m: &Matroid, n: &Matroid) -> Result<bool> {
    require_two(m)?;
    let search = MinorSearch::new(m, n);
    Ok(pairs(m.size())
        .into_par_iter()
        .all(|(e, f)| search.pair(e, f)))
}

/// `is_n_connected`, reporting `false` for matroids with fewer than two elements.
pub fn n_connected(m: &Matroid, n: &Matroid) -> bool {
    is_n_connected(m, n).unwrap_or(false)
}

/// First oracle-list member with a minor using the triple `z3`.
pub fn has_minor_using_triple(
    m: &Matroid,
    oracle: &[(String, Matroid)],
    z3: Mask,
) -> Result<Option<(String, MinorWitness)>> {
    if z3 & !m.full() != 0 {
        return Err(Error::UnknownElement(format!("{z3:#b}")));
    }
    if bits::size(z3) != 3 {
        return Err(Error::BadSize {
            expected: 3,
            got: bits::size(z3),
        });
    }
    Ok(oracle
        .iter()
        .find_map(|(name, n)| has_minor_using(m, n, z3).map(|w| (name.clone(), w))))
}
