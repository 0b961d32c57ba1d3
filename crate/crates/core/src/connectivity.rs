//! The connectivity function, 2-separations, fans, and the transitivity and
//! element-removal properties of N-connectivity.

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::minor::{self, n_connected};

/// `λ(X) = r(X) + r(E - X) - r(M)`.
pub fn lambda(m: &Matroid, x: Mask) -> usize {
    m.rank_of(x) + m.rank_of(m.full() & !x) - m.rank()
}

pub(crate) fn kappa_masks(m: &Matroid, a: Mask, b: Mask) -> usize {
    let free = m.full() & !(a | b);
    bits::subsets(free)
        .map(|s| lambda(m, a | s))
        .min()
        .unwrap_or(0)
}

/// `κ(A, B)`: minimum of `λ(X)` over `A ⊆ X ⊆ E - B`, by exhaustion.
pub fn kappa(m: &Matroid, a: Mask, b: Mask) -> Result<usize> {
    if a & b != 0 {
        return Err(Error::Overlap);
    }
    Ok(kappa_masks(m, a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoSeparation {
    pub side_x: Mask,
    pub side_y: Mask,
    pub order: usize,
}

impl TwoSeparation {
    pub fn is_exact(&self) -> bool {
        self.order == 1
    }
}

/// All 2-separations, each unordered partition once with the least element on
/// `side_x`.
pub fn two_separations(m: &Matroid) -> Vec<TwoSeparation> {
    let n = m.size();
    if n < 4 {
        return Vec::new();
    }
    let full = m.full();
    bits::subsets(full & !1)
        .map(|s| s | 1)
        .filter(|&x| bits::size(x) >= 2 && bits::size(full & !x) >= 2)
        .filter_map(|x| {
            let order = lambda(m, x);
            (order <= 1).then_some(TwoSeparation {
                side_x: x,
                side_y: full & !x,
                order,
            })
        })
        .collect()
}

/// First exact 2-separation `(X, E - X)` in increasing bitmask order of `X`.
pub fn first_exact_two_separation(m: &Matroid) -> Option<TwoSeparation> {
    let full = m.full();
    (0..=full)
        .filter(|&x| bits::size(x) >= 2 && bits::size(full & !x) >= 2)
        .find(|&x| lambda(m, x) == 1)
        .map(|x| TwoSeparation {
            side_x: x,
            side_y: full & !x,
            order: 1,
        })
}

pub fn is_3_connected(m: &Matroid) -> bool {
    m.is_connected() && two_separations(m).is_empty()
}

/// `k`-connectivity for `k ≤ 3`; 2-connected means connected.
pub fn is_k_connected(m: &Matroid, k: usize) -> bool {
    match k {
        0 | 1 => true,
        2 => m.is_connected(),
        3 => is_3_connected(m),
        _ => panic!("is_k_connected supports k <= 3"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FanStep {
    Triangle,
    Triad,
}

impl FanStep {
    fn flip(self) -> Self {
        match self {
            FanStep::Triangle => FanStep::Triad,
            FanStep::Triad => FanStep::Triangle,
        }
    }
}

/// A fan ordering with the type of each consecutive triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub ordering: Vec<usize>,
    pub step_types: Vec<FanStep>,
}

impl Fan {
    pub fn elements(&self) -> Mask {
        self.ordering.iter().fold(0, |m, &e| m | bits::bit(e))
    }

    pub fn labels(&self, m: &Matroid) -> Vec<String> {
        self.ordering
            .iter()
            .map(|&e| m.ground().label(e).to_string())
            .collect()
    }
}

fn is_triangle(m: &Matroid, s: Mask) -> bool {
    bits::size(s) == 3 && m.is_circuit(s)
}

fn is_triad(m: &Matroid, s: Mask) -> bool {
    bits::size(s) == 3 && m.is_cocircuit(s)
}

fn step_holds(m: &Matroid, s: Mask, t: FanStep) -> bool {
    match t {
        FanStep::Triangle => is_triangle(m, s),
        FanStep::Triad => is_triad(m, s),
    }
}

/// Alternating triple types for `seq`, preferring a leading triangle.
pub fn fan_types(m: &Matroid, seq: &[usize]) -> Option<Vec<FanStep>> {
    if seq.len() < 3 {
        return None;
    }
    let mut distinct = 0;
    for &e in seq {
        if bits::contains(distinct, e) {
            return None;
        }
        distinct |= bits::bit(e);
    }
    [FanStep::Triangle, FanStep::Triad]
        .into_iter()
        .find_map(|start| {
            let mut t = start;
            let mut types = Vec::with_capacity(seq.len() - 2);
            for w in seq.windows(3) {
                if !step_holds(m, bits::bit(w[0]) | bits::bit(w[1]) | bits::bit(w[2]), t) {
                    return None;
                }
                types.push(t);
                t = t.flip();
            }
            Some(types)
        })
}

/// Every fan ordering of the matroid (both directions).
pub fn all_fan_orderings(m: &Matroid) -> Vec<Fan> {
    let n = m.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let mut seq = vec![a, b];
                grow_fans(m, &mut seq, None, &mut out);
            }
        }
    }
    out.sort_by(|a, b| a.ordering.cmp(&b.ordering));
    out.dedup_by(|a, b| a.ordering == b.ordering);
    out
}

fn grow_fans(m: &Matroid, seq: &mut Vec<usize>, last: Option<FanStep>, out: &mut Vec<Fan>) {
    let k = seq.len();
    let used = seq.iter().fold(0, |s, &e| s | bits::bit(e));
    for c in bits::elements(m.full() & !used) {
        let tri = bits::bit(seq[k - 2]) | bits::bit(seq[k - 1]) | bits::bit(c);
        let options: Vec<FanStep> = match last {
            Some(t) => vec![t.flip()],
            None => vec![FanStep::Triangle, FanStep::Triad],
        };
        for t in options {
            if step_holds(m, tri, t) {
                seq.push(c);
                if let Some(step_types) = fan_types(m, seq) {
                    out.push(Fan {
                        ordering: seq.clone(),
                        step_types,
                    });
                }
                grow_fans(m, seq, Some(t), out);
                seq.pop();
            }
        }
    }
}

/// Maximal fan orderings (not extendable at either end), one per reversal pair,
/// sorted lexicographically.
pub fn find_fans(m: &Matroid) -> Vec<Fan> {
    let all = all_fan_orderings(m);
    let extendable = |seq: &[usize]| {
        let used = seq.iter().fold(0, |s, &e| s | bits::bit(e));
        bits::elements(m.full() & !used).any(|c| {
            let mut fwd = seq.to_vec();
            fwd.push(c);
            let mut back = vec![c];
            back.extend_from_slice(seq);
            fan_types(m, &fwd).is_some() || fan_types(m, &back).is_some()
        })
    };
    all.into_iter()
        .filter(|f| {
            let mut rev = f.ordering.clone();
            rev.reverse();
            f.ordering <= rev && !extendable(&f.ordering)
        })
        .collect()
}

/// The first two elements of the fan form a cocircuit.
pub fn is_special_fan(m: &Matroid, fan: &Fan) -> bool {
    fan.ordering.len() >= 2
        && m.is_cocircuit(bits::bit(fan.ordering[0]) | bits::bit(fan.ordering[1]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanLemmaReport {
    /// Fans whose end pairs are both circuits or cocircuits.
    pub fans_checked: usize,
    /// Such fans whose element set is not a component.
    pub violations: Vec<Fan>,
}

/// Checks that every fan whose two end pairs are each a circuit or a cocircuit
/// spans a whole component.
pub fn check_special_fan_lemma(m: &Matroid) -> FanLemmaReport {
    let comps = m.components();
    let end_ok = |a: usize, b: usize| {
        let s = bits::bit(a) | bits::bit(b);
        m.is_circuit(s) || m.is_cocircuit(s)
    };
    let mut fans_checked = 0;
    let mut violations = Vec::new();
    for fan in all_fan_orderings(m) {
        let o = &fan.ordering;
        let k = o.len();
        if end_ok(o[0], o[1]) && end_ok(o[k - 2], o[k - 1]) {
            fans_checked += 1;
            if !comps.contains(&fan.elements()) {
                violations.push(fan);
            }
        }
    }
    FanLemmaReport {
        fans_checked,
        violations,
    }
}

/// A triple `(e, f, g)` witnessing that the `N`-minor pair relation of `m` is
/// not transitive.
pub fn is_transitive(m: &Matroid, n: &Matroid) -> Result<Option<(String, String, String)>> {
    let rel = minor::pair_relation(m, n)?;
    Ok(rel.transitivity_violation().map(|(e, f, g)| {
        let l = |i: usize| m.ground().label(i).to_string();
        (l(e), l(f), l(g))
    }))
}

/// First matroid in `universe` whose `N`-minor pair relation is not transitive.
pub fn search_transitivity_counterexample<'a>(
    n: &Matroid,
    universe: impl IntoIterator<Item = &'a Matroid>,
) -> Option<(Matroid, (String, String, String))> {
    universe
        .into_iter()
        .filter(|m| m.size() > n.size())
        .find_map(|m| match is_transitive(m, n) {
            Ok(Some(t)) => Some((m.clone(), t)),
            _ => None,
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalOutcome {
    pub element: String,
    pub deletion_n_connected: bool,
    pub contraction_n_connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalReport {
    pub outcomes: Vec<RemovalOutcome>,
}

impl RemovalReport {
    /// Elements where neither deletion nor contraction stays N-connected.
    pub fn failures(&self) -> Vec<String> {
        self.outcomes
            .iter()
            .filter(|o| !o.deletion_n_connected && !o.contraction_n_connected)
            .map(|o| o.element.clone())
            .collect()
    }
}

/// For each element `e`, whether `M\e` or `M/e` is still N-connected.
pub fn hereditary_removal_check(m: &Matroid, n: &Matroid) -> Result<RemovalReport> {
    if m.size() <= n.size() {
        return Err(Error::PreconditionFailed(format!(
            "|E(M)| = {} must exceed |E(N)| = {}",
            m.size(),
            n.size()
        )));
    }
    if !n_connected(m, n) {
        return Err(Error::PreconditionFailed("M is not N-connected".into()));
    }
    let outcomes = (0..m.size())
        .map(|e| RemovalOutcome {
            element: m.ground().label(e).to_string(),
            deletion_n_connected: n_connected(&m.delete(bits::bit(e)), n),
            contraction_n_connected: n_connected(&m.contract(bits::bit(e)), n),
        })
        .collect();
    Ok(RemovalReport { outcomes })
}
