//! Isomorphism testing by invariant-refined backtracking.
//!
//! Candidate images of each element are restricted to elements with the same
//! circuit/cocircuit profile. A partial map is rejected as soon as a circuit
//! whose elements are all mapped lands on a non-circuit. Once every element is
//! placed, every circuit of one matroid maps to a circuit of the other, and
//! since both have equally many circuits the map is an isomorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::matroid::{self, Matroid};

/// Counts of circuits and cocircuits through one element, indexed by size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementProfile {
    pub circuits: Vec<u32>,
    pub cocircuits: Vec<u32>,
}

/// Isomorphism invariant; equal fingerprints are necessary for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub size: usize,
    pub rank: usize,
    pub corank: usize,
    /// Number of circuits of each size.
    pub circuit_sizes: Vec<u32>,
    /// Number of cocircuits of each size.
    pub cocircuit_sizes: Vec<u32>,
    /// Sorted multiset of element profiles.
    pub elements: Vec<ElementProfile>,
}

impl Fingerprint {
    pub fn of(m: &Matroid) -> Self {
        Shape::new(m.size(), m.rank_table()).fingerprint()
    }

    /// Fingerprint of the dual, computed by swapping roles.
    pub fn dual(&self) -> Self {
        let mut elements: Vec<ElementProfile> = self
            .elements
            .iter()
            .map(|p| ElementProfile {
                circuits: p.cocircuits.clone(),
                cocircuits: p.circuits.clone(),
            })
            .collect();
        elements.sort();
        Fingerprint {
            size: self.size,
            rank: self.corank,
            corank: self.rank,
            circuit_sizes: self.cocircuit_sizes.clone(),
            cocircuit_sizes: self.circuit_sizes.clone(),
            elements,
        }
    }

    /// Compact text form, used as the header of enumeration cache lines.
    pub fn digest(&self) -> String {
        let hist = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(".");
        format!(
            "n{}r{}c{}k{}",
            self.size,
            self.rank,
            hist(&self.circuit_sizes),
            hist(&self.cocircuit_sizes)
        )
    }
}

/// Precomputed structure of a rank table used by the backtracking search.
pub(crate) struct Shape {
    n: usize,
    rank: usize,
    circuits: Vec<Mask>,
    is_circuit: Vec<bool>,
    circuit_sizes: Vec<u32>,
    cocircuit_sizes: Vec<u32>,
    profiles: Vec<ElementProfile>,
}

impl Shape {
    pub(crate) fn new(n: usize, ranks: &[u8]) -> Self {
        let full = bits::full(n);
        let rank = ranks[full as usize] as usize;
        let circuits = matroid::circuits_of_table(n, ranks);
        let mut is_circuit = vec![false; 1 << n];
        for &c in &circuits {
            is_circuit[c as usize] = true;
        }
        let cocircuits: Vec<Mask> = (0..=full)
            .filter(|&h| {
                ranks[h as usize] as usize + 1 == rank
                    && bits::elements(full & !h)
                        .all(|x| ranks[(h | bits::bit(x)) as usize] as usize == rank)
            })
            .map(|h| full & !h)
            .collect();
        let mut circuit_sizes = vec![0u32; n + 1];
        let mut cocircuit_sizes = vec![0u32; n + 1];
        let mut profiles = vec![
            ElementProfile {
                circuits: vec![0; n + 1],
                cocircuits: vec![0; n + 1],
            };
            n
        ];
        for &c in &circuits {
            let k = bits::size(c);
            circuit_sizes[k] += 1;
            for e in bits::elements(c) {
                profiles[e].circuits[k] += 1;
            }
        }
        for &c in &cocircuits {
            let k = bits::size(c);
            cocircuit_sizes[k] += 1;
            for e in bits::elements(c) {
                profiles[e].cocircuits[k] += 1;
            }
        }
        Shape {
            n,
            rank,
            circuits,
            is_circuit,
            circuit_sizes,
            cocircuit_sizes,
            profiles,
        }
    }

    pub(crate) fn fingerprint(&self) -> Fingerprint {
        let mut elements = self.profiles.clone();
        elements.sort();
        Fingerprint {
            size: self.n,
            rank: self.rank,
            corank: self.n - self.rank,
            circuit_sizes: self.circuit_sizes.clone(),
            cocircuit_sizes: self.cocircuit_sizes.clone(),
            elements,
        }
    }

    fn compatible(&self, other: &Shape) -> bool {
        if self.n != other.n
            || self.rank != other.rank
            || self.circuit_sizes != other.circuit_sizes
            || self.cocircuit_sizes != other.cocircuit_sizes
        {
            return false;
        }
        let mut a = self.profiles.clone();
        let mut b = other.profiles.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// Finds `map` with `map[i]` the image in `other` of element `i` of `self`.
    pub(crate) fn isomorphism_to(&self, other: &Shape) -> Option<Vec<usize>> {
        if !self.compatible(other) {
            return None;
        }
        let n = self.n;
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| other.profiles[j] == self.profiles[i])
                    .collect()
            })
            .collect();
        // most constrained first, ties by index
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (candidates[i].len(), i));
        let mut position = vec![0usize; n];
        for (k, &i) in order.iter().enumerate() {
            position[i] = k;
        }
        let mut closing: Vec<Vec<Mask>> = vec![Vec::new(); n];
        for &c in &self.circuits {
            let last = bits::elements(c).map(|e| position[e]).max().unwrap_or(0);
            closing[last].push(c);
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend(other, &order, &candidates, &closing, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        other: &Shape,
        order: &[usize],
        candidates: &[Vec<usize>],
        closing: &[Vec<Mask>],
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            map[i] = j;
            let ok = closing[k]
                .iter()
                .all(|&c| other.is_circuit[matroid::map_mask(c, map) as usize]);
            if ok {
                used[j] = true;
                if self.extend(other, order, candidates, closing, k + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        map[i] = usize::MAX;
        false
    }
}

/// Precomputed isomorphism target, for testing many candidates against one
/// matroid.
pub struct IsoTarget {
    shape: Shape,
    bases: usize,
}

impl IsoTarget {
    pub fn new(m: &Matroid) -> Self {
        IsoTarget {
            shape: Shape::new(m.size(), m.rank_table()),
            bases: m.bases().len(),
        }
    }

    pub fn size(&self) -> usize {
        self.shape.n
    }

    pub fn rank(&self) -> usize {
        self.shape.rank
    }

    /// Matches a raw rank table on `n` elements against the target.
    pub(crate) fn match_table(&self, n: usize, ranks: &[u8]) -> Option<Vec<usize>> {
        if n != self.shape.n || ranks[bits::full(n) as usize] as usize != self.shape.rank {
            return None;
        }
        let r = self.shape.rank as u8;
        let bases = (0..ranks.len())
            .filter(|&s| ranks[s] == r && bits::size(s as Mask) == r as usize)
            .count();
        if bases != self.bases {
            return None;
        }
        Shape::new(n, ranks).isomorphism_to(&self.shape)
    }
}

/// Index map `i ↦ map[i]` from `m` onto `n`, or `None`.
pub fn isomorphism(m: &Matroid, n: &Matroid) -> Option<Vec<usize>> {
    if m.size() != n.size() || m.rank() != n.rank() || m.bases().len() != n.bases().len() {
        return None;
    }
    Shape::new(m.size(), m.rank_table()).isomorphism_to(&Shape::new(n.size(), n.rank_table()))
}

/// A basis-preserving bijection from `m` to `n` by label, or `None`.
pub fn isomorphic(m: &Matroid, n: &Matroid) -> Option<BTreeMap<String, String>> {
    isomorphism(m, n).map(|map| {
        map.iter()
            .enumerate()
            .map(|(i, &j)| {
                (
                    m.ground().label(i).to_string(),
                    n.ground().label(j).to_string(),
                )
            })
            .collect()
    })
}

pub fn is_isomorphic(m: &Matroid, n: &Matroid) -> bool {
    isomorphism(m, n).is_some()
}

/// Checks that `map` carries the bases of `m` exactly onto the bases of `n`.
pub fn check_isomorphism(m: &Matroid, n: &Matroid, map: &[usize]) -> bool {
    if m.size() != n.size() || map.len() != m.size() {
        return false;
    }
    let mut seen = vec![false; n.size()];
    for &j in map {
        if j >= n.size() || std::mem::replace(&mut seen[j], true) {
            return false;
        }
    }
    let mut img: Vec<Mask> = m
        .bases()
        .iter()
        .map(|&b| matroid::map_mask(b, map))
        .collect();
    img.sort_unstable();
    img == n.bases()
}
