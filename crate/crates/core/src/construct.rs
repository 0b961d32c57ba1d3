//! Minors, sums, connections, extensions, truncation and relaxation.

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::matroid::{GroundSet, Matroid};

/// The two parts of a matroid written as a 2-sum across `basepoint`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSumDecomposition {
    pub part_x: Matroid,
    pub part_y: Matroid,
    pub basepoint: String,
}

impl TwoSumDecomposition {
    pub fn reconstruct(&self) -> Result<Matroid> {
        two_sum(&self.part_x, &self.part_y, &self.basepoint)
    }
}

impl Matroid {
    /// `M/C` restricted to `keep`, with `keep` and `contract` disjoint.
    pub fn contract_restrict(&self, contract: Mask, keep: Mask) -> Matroid {
        debug_assert_eq!(contract & keep, 0);
        let positions: Vec<usize> = bits::elements(keep).collect();
        let ground = GroundSet::new(
            positions
                .iter()
                .map(|&i| self.ground().label(i).to_string()),
        )
        .expect("subset of a valid ground set");
        let rc = self.rank_of(contract);
        Matroid::from_rank_fn(ground, |a| {
            (self.rank_of(bits::expand(a, &positions) | contract) - rc) as u8
        })
    }

    pub fn delete(&self, s: Mask) -> Matroid {
        self.contract_restrict(0, self.full() & !s)
    }

    pub fn contract(&self, s: Mask) -> Matroid {
        self.contract_restrict(s, self.full() & !s)
    }

    pub fn restrict(&self, s: Mask) -> Matroid {
        self.contract_restrict(0, s)
    }

    /// `M/C\D`.
    pub fn minor(&self, contract: Mask, delete: Mask) -> Result<Matroid> {
        if contract & delete != 0 {
            return Err(Error::Overlap);
        }
        Ok(self.contract_restrict(contract, self.full() & !(contract | delete)))
    }

    pub fn delete_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.delete(self.ground().mask_of(labels)?))
    }

    pub fn contract_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.contract(self.ground().mask_of(labels)?))
    }

    pub fn minor_labels<S: AsRef<str>>(&self, contract: &[S], delete: &[S]) -> Result<Matroid> {
        self.minor(
            self.ground().mask_of(contract)?,
            self.ground().mask_of(delete)?,
        )
    }
}

fn check_disjoint(a: &Matroid, b: &Matroid, except: Option<&str>) -> Result<()> {
    for l in b.labels() {
        if Some(l.as_str()) != except && a.ground().index_of(l).is_some() {
            return Err(Error::LabelCollision(l.clone()));
        }
    }
    Ok(())
}

pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    check_disjoint(m1, m2, None)?;
    let n1 = m1.size();
    let ground = GroundSet::new(m1.labels().iter().chain(m2.labels()).cloned())?;
    let low = m1.full();
    Ok(Matroid::from_rank_fn(ground, |s| {
        (m1.rank_of(s & low) + m2.rank_of(s >> n1)) as u8
    }))
}

fn nondegenerate(m: &Matroid, p: &str) -> Result<usize> {
    let i = m.ground().index(p)?;
    if m.is_loop(i) || m.is_coloop(i) {
        return Err(Error::DegenerateBasepoint(p.to_string()));
    }
    Ok(i)
}

/// Parallel connection of `m1` and `m2` identifying `p2` with `p1`; the shared
/// element keeps the label `p1`.
pub fn parallel_connection(m1: &Matroid, m2: &Matroid, p1: &str, p2: &str) -> Result<Matroid> {
    let i1 = nondegenerate(m1, p1)?;
    let i2 = nondegenerate(m2, p2)?;
    for l in m2.labels() {
        if l != p2 && m1.ground().index_of(l).is_some() {
            return Err(Error::LabelCollision(l.clone()));
        }
    }
    // positions in m2 of the elements appended after m1's ground set
    let rest: Vec<usize> = (0..m2.size()).filter(|&j| j != i2).collect();
    let n1 = m1.size();
    let ground = GroundSet::new(
        m1.labels()
            .iter()
            .cloned()
            .chain(rest.iter().map(|&j| m2.ground().label(j).to_string())),
    )?;
    let low = m1.full();
    let b1 = bits::bit(i1);
    let b2 = bits::bit(i2);
    Ok(Matroid::from_rank_fn(ground, |s| {
        let x1 = s & low;
        let mut x2 = bits::expand(s >> n1, &rest);
        if x1 & b1 != 0 {
            x2 |= b2;
            (m1.rank_of(x1) + m2.rank_of(x2) - 1) as u8
        } else {
            let apart = m1.rank_of(x1) + m2.rank_of(x2);
            let joined = m1.rank_of(x1 | b1) + m2.rank_of(x2 | b2) - 1;
            apart.min(joined) as u8
        }
    }))
}

/// Parallel connection of several matroids, each at its own basepoint; the
/// shared element keeps the first basepoint's label.
pub fn parallel_connection_many(parts: &[(&Matroid, &str)]) -> Result<Matroid> {
    let (first, p) = parts.first().ok_or(Error::TooSmall("no parts".into()))?;
    let mut acc = (*first).clone();
    for (m, q) in &parts[1..] {
        acc = parallel_connection(&acc, m, p, q)?;
    }
    Ok(acc)
}

pub fn series_connection(m1: &Matroid, m2: &Matroid, p1: &str, p2: &str) -> Result<Matroid> {
    Ok(parallel_connection(&m1.dual(), &m2.dual(), p1, p2)?.dual())
}

/// 2-sum of `m1` and `m2` across the element `p` common to both.
pub fn two_sum(m1: &Matroid, m2: &Matroid, p: &str) -> Result<Matroid> {
    for m in [m1, m2] {
        if m.size() < 3 {
            return Err(Error::TooSmall(format!(
                "2-sum parts need at least 3 elements, got {}",
                m.size()
            )));
        }
    }
    let pc = parallel_connection(m1, m2, p, p)?;
    let i = pc.ground().index(p)?;
    Ok(pc.delete(bits::bit(i)))
}

/// The part on `x ∪ {p}` of the 2-sum decomposition induced by the exact
/// 2-separation `(x, E - x)` of a connected matroid.
pub fn extract_part(m: &Matroid, x: Mask, p: &str) -> Result<Matroid> {
    let full = m.full();
    let y = full & !x;
    if x & !full != 0
        || bits::size(x) < 2
        || bits::size(y) < 2
        || !m.is_connected()
        || m.rank_of(x) + m.rank_of(y) != m.rank() + 1
    {
        return Err(Error::NotA2Separation);
    }
    if m.ground().index_of(p).is_some() {
        return Err(Error::LabelCollision(p.to_string()));
    }
    let positions: Vec<usize> = bits::elements(x).collect();
    let k = positions.len();
    let ground = GroundSet::new(
        positions
            .iter()
            .map(|&i| m.ground().label(i).to_string())
            .chain(std::iter::once(p.to_string())),
    )?;
    let ry = m.rank_of(y);
    Ok(Matroid::from_rank_fn(ground, |s| {
        let a = bits::expand(s & bits::full(k), &positions);
        let ra = m.rank_of(a);
        if bits::contains(s, k) {
            (ra + 1).min(m.rank_of(a | y) - ry + 1) as u8
        } else {
            ra as u8
        }
    }))
}

/// Both parts of the 2-sum decomposition induced by `(x, E - x)`.
pub fn split(m: &Matroid, x: Mask, p: &str) -> Result<TwoSumDecomposition> {
    Ok(TwoSumDecomposition {
        part_x: extract_part(m, x, p)?,
        part_y: extract_part(m, m.full() & !x, p)?,
        basepoint: p.to_string(),
    })
}

fn check_new_label(m: &Matroid, new: &str) -> Result<()> {
    if m.ground().index_of(new).is_some() {
        Err(Error::LabelCollision(new.to_string()))
    } else {
        Ok(())
    }
}

/// Adds `new` in parallel with the non-loop `e`.
pub fn add_parallel(m: &Matroid, e: &str, new: &str) -> Result<Matroid> {
    let i = m.ground().index(e)?;
    if m.is_loop(i) {
        return Err(Error::DegenerateElement(e.to_string()));
    }
    check_new_label(m, new)?;
    let n = m.size();
    let ground = GroundSet::new(
        m.labels()
            .iter()
            .cloned()
            .chain(std::iter::once(new.to_string())),
    )?;
    let low = m.full();
    Ok(Matroid::from_rank_fn(ground, |s| {
        if bits::contains(s, n) {
            m.rank_of((s & low) | bits::bit(i)) as u8
        } else {
            m.rank_of(s) as u8
        }
    }))
}

/// Adds `new` in series with the non-coloop `e`.
pub fn add_series(m: &Matroid, e: &str, new: &str) -> Result<Matroid> {
    let i = m.ground().index(e)?;
    if m.is_coloop(i) {
        return Err(Error::DegenerateElement(e.to_string()));
    }
    Ok(add_parallel(&m.dual(), e, new)?.dual())
}

pub fn truncation(m: &Matroid) -> Result<Matroid> {
    let r = m.rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    Ok(Matroid::from_rank_fn(m.ground().clone(), |s| {
        m.rank_of(s).min(r - 1) as u8
    }))
}

/// Relaxes the circuit-hyperplane `c` into a basis.
pub fn relax(m: &Matroid, c: Mask) -> Result<Matroid> {
    let r = m.rank();
    if !m.is_circuit(c) || m.rank_of(c) + 1 != r || !m.is_flat(c) {
        return Err(Error::NotCircuitHyperplane);
    }
    Ok(Matroid::from_rank_fn(m.ground().clone(), |s| {
        if s == c {
            r as u8
        } else {
            m.rank_of(s) as u8
        }
    }))
}

/// All circuit-hyperplanes, in increasing bitmask order.
pub fn circuit_hyperplanes(m: &Matroid) -> Vec<Mask> {
    let r = m.rank();
    m.circuits()
        .iter()
        .copied()
        .filter(|&c| m.rank_of(c) + 1 == r && m.is_flat(c))
        .collect()
}
