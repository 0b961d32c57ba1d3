//! Brute-force reference computations working only from the rank function.
//! Nothing here uses the library's minor search, isomorphism test,
//! decomposition or structural predicates.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use nconn::bits::{self, Mask};
use nconn::Matroid;

fn permute(s: Mask, perm: &[usize]) -> Mask {
    bits::elements(s).fold(0, |acc, i| acc | bits::bit(perm[i]))
}

/// Sorted basis family of a matroid on `0..n`.
pub fn basis_family(n: usize, rank: impl Fn(Mask) -> usize) -> Vec<Mask> {
    let r = rank(bits::full(n));
    (0..=bits::full(n))
        .filter(|&s| bits::size(s) == r && rank(s) == r)
        .collect()
}

/// Lexicographically least relabeling of a basis family.
pub fn canonical(n: usize, bases: &[Mask]) -> Vec<Mask> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut f: Vec<Mask> = bases.iter().map(|&b| permute(b, &p)).collect();
            f.sort_unstable();
            f
        })
        .min()
        .unwrap_or_default()
}

/// Every relabeling of the basis family of `n`, for constant-time
/// isomorphism lookups.
pub struct Target {
    pub size: usize,
    pub rank: usize,
    families: HashSet<Vec<Mask>>,
}

impl Target {
    pub fn new(n: &Matroid) -> Self {
        let k = n.size();
        let bases = basis_family(k, |s| n.rank_of(s));
        let families = (0..k)
            .permutations(k)
            .map(|p| {
                let mut f: Vec<Mask> = bases.iter().map(|&b| permute(b, &p)).collect();
                f.sort_unstable();
                f
            })
            .collect();
        Target {
            size: k,
            rank: n.rank(),
            families,
        }
    }
}

/// Sets `E - (C u D)` over all disjoint `C, D` with `M/C\D` isomorphic to
/// the target. No independence or normalization assumptions.
pub fn used_sets(m: &Matroid, t: &Target) -> Vec<Mask> {
    let n = m.size();
    if n < t.size {
        return Vec::new();
    }
    let mut out = Vec::new();
    for keep in bits::k_subsets(bits::full(n), t.size) {
        let pos: Vec<usize> = bits::elements(keep).collect();
        let rest = bits::full(n) & !keep;
        let found = bits::subsets(rest).any(|c| {
            let rc = m.rank_of(c);
            if m.rank_of(c | keep) - rc != t.rank {
                return false;
            }
            let family = basis_family(t.size, |s| m.rank_of(c | bits::expand(s, &pos)) - rc);
            t.families.contains(&family)
        });
        if found {
            out.push(keep);
        }
    }
    out
}

/// `covered[e][f]`: some N-minor uses both `e` and `f`.
pub fn covered_pairs(m: &Matroid, t: &Target) -> Vec<Vec<bool>> {
    let n = m.size();
    let mut cov = vec![vec![false; n]; n];
    for s in used_sets(m, t) {
        for e in bits::elements(s) {
            for f in bits::elements(s) {
                cov[e][f] = true;
            }
        }
    }
    cov
}

pub fn n_connected(m: &Matroid, t: &Target) -> bool {
    let n = m.size();
    if n < 2 {
        return false;
    }
    let cov = covered_pairs(m, t);
    (0..n).all(|e| (e + 1..n).all(|f| cov[e][f]))
}

pub fn minor_through(m: &Matroid, t: &Target, z: Mask) -> bool {
    used_sets(m, t).iter().any(|&s| s & z == z)
}

/// A triple `(e, f, g)` with `e~f`, `f~g` and not `e~g`.
pub fn transitivity_violation(m: &Matroid, t: &Target) -> Option<(usize, usize, usize)> {
    let cov = covered_pairs(m, t);
    let n = m.size();
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .map(|((e, f), g)| (e, f, g))
        .find(|&(e, f, g)| e != f && f != g && e != g && cov[e][f] && cov[f][g] && !cov[e][g])
}

pub fn lambda(m: &Matroid, x: Mask) -> usize {
    m.rank_of(x) + m.rank_of(m.full() & !x) - m.rank()
}

pub fn corank_of(m: &Matroid, x: Mask) -> usize {
    bits::size(x) + m.rank_of(m.full() & !x) - m.rank()
}

/// Minimum of `lambda(X)` over `A <= X <= E - B`.
pub fn kappa(m: &Matroid, a: Mask, b: Mask) -> usize {
    let free = m.full() & !(a | b);
    bits::subsets(free).map(|y| lambda(m, a | y)).min().unwrap()
}

/// No nonempty proper subset `Y` of `x` with `r(Y) + r(x - Y) = r(x)`.
pub fn restriction_connected(m: &Matroid, x: Mask) -> bool {
    if x == 0 {
        return true;
    }
    let low = x & x.wrapping_neg();
    bits::subsets(x & !low).all(|y| {
        let y = y | low;
        y == x || m.rank_of(y) + m.rank_of(x & !y) != m.rank_of(x)
    })
}

/// Connected with at least two elements.
pub fn is_connected(m: &Matroid) -> bool {
    m.size() >= 2 && restriction_connected(m, m.full())
}

pub fn is_component(m: &Matroid, x: Mask) -> bool {
    x != 0 && lambda(m, x) == 0 && restriction_connected(m, x)
}

pub fn is_3_connected(m: &Matroid) -> bool {
    let full = m.full();
    m.size() >= 2
        && bits::subsets(full).all(|x| {
            let small = bits::size(x).min(bits::size(full & !x));
            (small < 1 || lambda(m, x) >= 1) && (small < 2 || lambda(m, x) >= 2)
        })
}

pub fn is_simple(m: &Matroid) -> bool {
    bits::k_subsets(m.full(), 1).all(|s| m.rank_of(s) == 1)
        && bits::k_subsets(m.full(), 2).all(|s| m.rank_of(s) == 2)
}

pub fn is_cosimple(m: &Matroid) -> bool {
    bits::k_subsets(m.full(), 1).all(|s| corank_of(m, s) == 1)
        && bits::k_subsets(m.full(), 2).all(|s| corank_of(m, s) == 2)
}

pub fn is_uniform(m: &Matroid) -> bool {
    bits::k_subsets(m.full(), m.rank()).all(|s| m.rank_of(s) == m.rank())
}

pub fn is_circuit(m: &Matroid, s: Mask) -> bool {
    s != 0
        && m.rank_of(s) + 1 == bits::size(s)
        && bits::elements(s).all(|e| m.rank_of(s & !bits::bit(e)) == m.rank_of(s))
}

pub fn is_cocircuit(m: &Matroid, s: Mask) -> bool {
    let h = m.full() & !s;
    s != 0
        && m.rank_of(h) + 1 == m.rank()
        && bits::elements(s).all(|e| m.rank_of(h | bits::bit(e)) == m.rank())
}

/// Swapping `e` and `f` preserves every rank.
pub fn are_clones(m: &Matroid, e: usize, f: usize) -> bool {
    let mut p: Vec<usize> = (0..m.size()).collect();
    p.swap(e, f);
    (0..=m.full()).all(|s| m.rank_of(s) == m.rank_of(permute(s, &p)))
}

pub fn loops(m: &Matroid) -> usize {
    (0..m.size())
        .filter(|&e| m.rank_of(bits::bit(e)) == 0)
        .count()
}

pub fn coloops(m: &Matroid) -> usize {
    (0..m.size())
        .filter(|&e| m.rank_of(m.full() & !bits::bit(e)) < m.rank())
        .count()
}

/// Not a coloop, and every circuit through it is spanning.
pub fn is_free(m: &Matroid, e: usize) -> bool {
    let full = m.full();
    m.rank_of(full & !bits::bit(e)) == m.rank()
        && bits::subsets(full)
            .filter(|&c| bits::contains(c, e) && is_circuit(m, c))
            .all(|c| m.rank_of(c) == m.rank())
}

/// All matroids on `0..n`, as basis families satisfying basis exchange.
pub fn all_basis_families(n: usize) -> Vec<Vec<Mask>> {
    let mut out = Vec::new();
    for r in 0..=n {
        let sets: Vec<Mask> = bits::k_subsets(bits::full(n), r).collect();
        for pick in 1u64..(1u64 << sets.len()) {
            let family: Vec<Mask> = (0..sets.len())
                .filter(|&i| pick >> i & 1 == 1)
                .map(|i| sets[i])
                .collect();
            if exchange_holds(&family) {
                out.push(family);
            }
        }
    }
    out
}

fn exchange_holds(family: &[Mask]) -> bool {
    let set: HashSet<Mask> = family.iter().copied().collect();
    family.iter().all(|&a| {
        family.iter().all(|&b| {
            bits::elements(a & !b).all(|x| {
                bits::elements(b & !a).any(|y| set.contains(&(a & !bits::bit(x) | bits::bit(y))))
            })
        })
    })
}
