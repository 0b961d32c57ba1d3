//! Immutable matroids on small labeled ground sets.
//!
//! A [`Matroid`] stores its full rank table (one byte per subset of the ground
//! set), so rank queries are a single lookup. Circuits, cocircuits and bases are
//! derived on first use and memoized.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// Default maximum ground-set size.
pub const DEFAULT_CAP: usize = 16;
/// Largest cap that [`set_ground_cap`] accepts.
pub const MAX_CAP: usize = 24;

static GROUND_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_CAP);

pub fn ground_cap() -> usize {
    GROUND_CAP.load(Ordering::Relaxed)
}

/// Changes the ground-set cap; values above [`MAX_CAP`] are clamped.
pub fn set_ground_cap(cap: usize) {
    GROUND_CAP.store(cap.min(MAX_CAP), Ordering::Relaxed);
}

/// Ordered list of distinct element labels. Element `i` is `labels[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let cap = ground_cap();
        if labels.len() > cap {
            return Err(Error::CapExceeded {
                size: labels.len(),
                cap,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Labels `a`, `b`, `c`, ... (continuing `a1`, `b1`, ... past `z`).
    pub fn letters(n: usize) -> Self {
        GroundSet {
            labels: (0..n).map(letter_label).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels
            .iter()
            .try_fold(0, |m, l| Ok(m | bits::bit(self.index(l.as_ref())?)))
    }

    pub fn labels_of(&self, m: Mask) -> Vec<String> {
        bits::elements(m).map(|i| self.labels[i].clone()).collect()
    }

    pub fn full(&self) -> Mask {
        bits::full(self.len())
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

pub(crate) fn letter_label(i: usize) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{}{}", c, i / 26)
    }
}

/// Generates names `p0`, `p1`, ... skipping any label already in use.
#[derive(Debug, Clone, Default)]
pub struct FreshNames {
    next: usize,
    taken: Vec<String>,
}

impl FreshNames {
    pub fn avoiding<S: AsRef<str>>(taken: impl IntoIterator<Item = S>) -> Self {
        FreshNames {
            next: 0,
            taken: taken.into_iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn reserve(&mut self, label: &str) {
        self.taken.push(label.to_string());
    }

    pub fn fresh(&mut self) -> String {
        loop {
            let name = format!("p{}", self.next);
            self.next += 1;
            if !self.taken.contains(&name) {
                self.taken.push(name.clone());
                return name;
            }
        }
    }
}

#[derive(Debug, Default)]
struct Derived {
    bases: OnceLock<Vec<Mask>>,
    circuits: OnceLock<Vec<Mask>>,
    cocircuits: OnceLock<Vec<Mask>>,
}

/// A matroid on a labeled ground set, represented by its rank function.
pub struct Matroid {
    ground: GroundSet,
    ranks: Vec<u8>,
    derived: Derived,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            ground: self.ground.clone(),
            ranks: self.ranks.clone(),
            derived: Derived::default(),
        }
    }
}

/// Labeled equality: same label set and the same rank on every labeled subset.
impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.ranks == other.ranks;
        }
        if self.size() != other.size() {
            return false;
        }
        let map: Option<Vec<usize>> = self
            .ground
            .labels()
            .iter()
            .map(|l| other.ground.index_of(l))
            .collect();
        match map {
            Some(map) => (0..self.ranks.len() as u32)
                .all(|s| self.rank_of(s) == other.rank_of(map_mask(s, &map))),
            None => false,
        }
    }
}

impl Eq for Matroid {}

pub(crate) fn map_mask(s: Mask, map: &[usize]) -> Mask {
    bits::elements(s).fold(0, |acc, i| acc | bits::bit(map[i]))
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self
            .bases()
            .iter()
            .map(|&b| self.ground.labels_of(b).concat())
            .collect();
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank())
            .field("bases", &bases)
            .finish()
    }
}

/// Loops, coloops, and parallel/series classes of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClassification {
    pub loops: Mask,
    pub coloops: Mask,
    pub parallel_classes: Vec<Mask>,
    pub series_classes: Vec<Mask>,
}

/// Checks the rank axioms on a full table: normalization, unit increase and
/// local submodularity. Returns the first failing `(S, x, y)`.
pub(crate) fn check_rank_table(
    n: usize,
    ranks: &[u8],
) -> std::result::Result<(), (Mask, usize, usize)> {
    if ranks[0] != 0 {
        return Err((0, 0, 0));
    }
    let full = bits::full(n);
    for s in 0..=full {
        let rs = ranks[s as usize];
        for x in bits::elements(!s & full) {
            let rx = ranks[(s | bits::bit(x)) as usize];
            if rx < rs || rx > rs + 1 {
                return Err((s, x, x));
            }
            for y in bits::elements(!s & full & !bits::full(x + 1)) {
                let ry = ranks[(s | bits::bit(y)) as usize];
                let rxy = ranks[(s | bits::bit(x) | bits::bit(y)) as usize];
                if u16::from(rx) + u16::from(ry) < u16::from(rxy) + u16::from(rs) {
                    return Err((s, x, y));
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Builds a matroid from a rank table assumed to satisfy the axioms.
    pub(crate) fn from_rank_table(ground: GroundSet, ranks: Vec<u8>) -> Self {
        debug_assert_eq!(ranks.len(), 1usize << ground.len());
        Matroid {
            ground,
            ranks,
            derived: Derived::default(),
        }
    }

    pub(crate) fn from_rank_fn(ground: GroundSet, f: impl Fn(Mask) -> u8) -> Self {
        let ranks = (0..1u64 << ground.len()).map(|s| f(s as Mask)).collect();
        Self::from_rank_table(ground, ranks)
    }

    /// Builds a matroid from a rank table, validating the rank axioms.
    pub fn from_rank_checked(ground: GroundSet, ranks: Vec<u8>) -> Result<Self> {
        if ranks.len() != 1usize << ground.len() {
            return Err(Error::AxiomViolation(
                "rank table has the wrong length".into(),
            ));
        }
        if let Err((s, x, y)) = check_rank_table(ground.len(), &ranks) {
            return Err(Error::AxiomViolation(format!(
                "rank axioms fail at {:?} with {} and {}",
                ground.labels_of(s),
                ground.label(x),
                ground.label(y)
            )));
        }
        Ok(Self::from_rank_table(ground, ranks))
    }

    /// Builds a matroid from its basis family.
    pub fn from_bases(ground: GroundSet, bases: &[Mask]) -> Result<Self> {
        let n = ground.len();
        let full = bits::full(n);
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(&b) = bases.iter().find(|&&b| b & !full != 0) {
            return Err(Error::AxiomViolation(format!(
                "basis {b:#b} is not a subset of the ground set"
            )));
        }
        let r = bits::size(bases[0]);
        if let Some(&b) = bases.iter().find(|&&b| bits::size(b) != r) {
            return Err(Error::AxiomViolation(format!(
                "bases {:?} and {:?} have different cardinalities",
                ground.labels_of(bases[0]),
                ground.labels_of(b)
            )));
        }
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &b in bases {
            indep[b as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] {
                for x in bits::elements(s as Mask) {
                    indep[s & !(1 << x)] = true;
                }
            }
        }
        let ranks = rank_from_independence(n, &indep);
        if check_rank_table(n, &ranks).is_err() {
            return Err(exchange_failure(&ground, bases));
        }
        Ok(Self::from_rank_table(ground, ranks))
    }

    /// Builds a matroid from its circuit family, checking the circuit axioms.
    pub fn from_circuits(ground: GroundSet, circuits: &[Mask]) -> Result<Self> {
        let n = ground.len();
        let full = bits::full(n);
        for (i, &c) in circuits.iter().enumerate() {
            if c == 0 {
                return Err(Error::AxiomViolation(
                    "the empty set is not a circuit".into(),
                ));
            }
            if c & !full != 0 {
                return Err(Error::AxiomViolation(format!(
                    "circuit {c:#b} is not a subset of the ground set"
                )));
            }
            for &d in &circuits[..i] {
                if c & d == c || c & d == d {
                    return Err(Error::AxiomViolation(format!(
                        "circuits {:?} and {:?} are nested",
                        ground.labels_of(d),
                        ground.labels_of(c)
                    )));
                }
            }
        }
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[..i] {
                for e in bits::elements(c1 & c2) {
                    let u = (c1 | c2) & !bits::bit(e);
                    if !circuits.iter().any(|&c| c & !u == 0) {
                        return Err(Error::AxiomViolation(format!(
                            "circuit elimination fails for {:?} and {:?} at {}",
                            ground.labels_of(c2),
                            ground.labels_of(c1),
                            ground.label(e)
                        )));
                    }
                }
            }
        }
        let size = 1usize << n;
        let mut dep = vec![false; size];
        for &c in circuits {
            dep[c as usize] = true;
        }
        for s in 0..size {
            if !dep[s] {
                dep[s] = bits::elements(s as Mask).any(|x| dep[s & !(1 << x)]);
            }
        }
        let indep: Vec<bool> = dep.iter().map(|d| !d).collect();
        let ranks = rank_from_independence(n, &indep);
        Ok(Self::from_rank_table(ground, ranks))
    }

    /// Cycle matroid of a multigraph given as `(u, v, label)` triples.
    /// Self-loops become matroid loops.
    pub fn from_graph<S: AsRef<str>>(edges: &[(S, S, S)]) -> Result<Self> {
        let ground = GroundSet::new(edges.iter().map(|e| e.2.as_ref().to_string()))?;
        let mut vertices: Vec<&str> = Vec::new();
        let mut ends: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v, _) in edges {
            let mut pair = [0usize; 2];
            for (slot, name) in pair.iter_mut().zip([u.as_ref(), v.as_ref()]) {
                *slot = match vertices.iter().position(|&w| w == name) {
                    Some(i) => i,
                    None => {
                        vertices.push(name);
                        vertices.len() - 1
                    }
                };
            }
            ends.push((pair[0], pair[1]));
        }
        let nv = vertices.len();
        Ok(Self::from_rank_fn(ground, |s| {
            let mut parent: Vec<usize> = (0..nv).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            let mut rank = 0;
            for i in bits::elements(s) {
                let (a, b) = ends[i];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    rank += 1;
                }
            }
            rank
        }))
    }

    /// The uniform matroid `U(r,n)` on letters `a`, `b`, ...
    pub fn uniform(r: usize, n: usize) -> Self {
        assert!(r <= n);
        Self::from_rank_fn(GroundSet::letters(n), |s| bits::size(s).min(r) as u8)
    }

    /// The uniform matroid on the given labels.
    pub fn uniform_on(r: usize, ground: GroundSet) -> Self {
        assert!(r <= ground.len());
        Self::from_rank_fn(ground, |s| bits::size(s).min(r) as u8)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn labels(&self) -> &[String] {
        self.ground.labels()
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Mask {
        self.ground.full()
    }

    pub(crate) fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank_of(&self, s: Mask) -> usize {
        self.ranks[s as usize] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.full())
    }

    pub fn corank(&self) -> usize {
        self.size() - self.rank()
    }

    /// Rank of a labeled subset.
    pub fn rank_labels<S: AsRef<str>>(&self, s: &[S]) -> Result<usize> {
        Ok(self.rank_of(self.ground.mask_of(s)?))
    }

    /// Rank in the dual matroid.
    #[inline]
    pub fn corank_of(&self, s: Mask) -> usize {
        bits::size(s) + self.rank_of(self.full() & !s) - self.rank()
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rank_of(s) == bits::size(s)
    }

    pub fn is_coindependent(&self, s: Mask) -> bool {
        self.rank_of(self.full() & !s) == self.rank()
    }

    pub fn is_spanning(&self, s: Mask) -> bool {
        self.rank_of(s) == self.rank()
    }

    pub fn closure(&self, s: Mask) -> Mask {
        let r = self.rank_of(s);
        bits::elements(self.full())
            .filter(|&e| self.rank_of(s | bits::bit(e)) == r)
            .fold(0, |m, e| m | bits::bit(e))
    }

    pub fn is_flat(&self, s: Mask) -> bool {
        self.closure(s) == s
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let r = self.rank();
        Matroid::from_rank_fn(self.ground.clone(), |s| {
            (bits::size(s) + self.rank_of(full & !s) - r) as u8
        })
    }

    /// Bases in increasing bitmask order.
    pub fn bases(&self) -> &[Mask] {
        self.derived.bases.get_or_init(|| {
            let r = self.rank();
            bits::k_subsets(self.full(), r)
                .filter(|&b| self.rank_of(b) == r)
                .collect()
        })
    }

    /// Circuits in increasing bitmask order.
    pub fn circuits(&self) -> &[Mask] {
        self.derived
            .circuits
            .get_or_init(|| circuits_of_table(self.size(), &self.ranks))
    }

    /// Cocircuits in increasing bitmask order.
    pub fn cocircuits(&self) -> &[Mask] {
        self.derived.cocircuits.get_or_init(|| {
            let full = self.full();
            let r = self.rank();
            // complements of hyperplanes
            let mut out: Vec<Mask> = (0..=full)
                .filter(|&h| {
                    self.rank_of(h) + 1 == r
                        && bits::elements(full & !h).all(|x| self.rank_of(h | bits::bit(x)) == r)
                })
                .map(|h| full & !h)
                .collect();
            out.sort_unstable();
            out
        })
    }

    pub fn is_circuit(&self, s: Mask) -> bool {
        s != 0
            && self.rank_of(s) + 1 == bits::size(s)
            && bits::elements(s).all(|x| self.is_independent(s & !bits::bit(x)))
    }

    pub fn is_cocircuit(&self, s: Mask) -> bool {
        s != 0
            && self.corank_of(s) + 1 == bits::size(s)
            && bits::elements(s).all(|x| self.is_coindependent(s & !bits::bit(x)))
    }

    /// All flats in increasing bitmask order.
    pub fn flats(&self) -> Vec<Mask> {
        (0..=self.full()).filter(|&s| self.is_flat(s)).collect()
    }

    pub fn loops(&self) -> Mask {
        self.closure(0)
    }

    pub fn coloops(&self) -> Mask {
        let full = self.full();
        let r = self.rank();
        bits::elements(full)
            .filter(|&e| self.rank_of(full & !bits::bit(e)) < r)
            .fold(0, |m, e| m | bits::bit(e))
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(bits::bit(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.full() & !bits::bit(e)) < self.rank()
    }

    pub fn classify_elements(&self) -> ElementClassification {
        let loops = self.loops();
        let coloops = self.coloops();
        let parallel_classes = classes(self.full() & !loops, |e, f| {
            self.rank_of(bits::bit(e) | bits::bit(f)) == 1
        });
        let series_classes = classes(self.full() & !coloops, |e, f| {
            self.corank_of(bits::bit(e) | bits::bit(f)) == 1
        });
        ElementClassification {
            loops,
            coloops,
            parallel_classes,
            series_classes,
        }
    }

    /// Connected components, ordered by least element. Elements in no circuit
    /// form singleton components.
    pub fn components(&self) -> Vec<Mask> {
        let n = self.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &c in self.circuits() {
            let mut it = bits::elements(c);
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut by_root: BTreeMap<usize, Mask> = BTreeMap::new();
        for e in 0..n {
            let r = find(&mut parent, e);
            *by_root.entry(r).or_default() |= bits::bit(e);
        }
        let mut comps: Vec<Mask> = by_root.into_values().collect();
        comps.sort_by_key(|c| c.trailing_zeros());
        comps
    }

    /// Connected with at least two elements.
    pub fn is_connected(&self) -> bool {
        self.size() >= 2 && self.components().len() == 1
    }

    pub fn is_uniform(&self) -> bool {
        let r = self.rank();
        (0..=self.full())
            .filter(|&s| bits::size(s) == r)
            .all(|s| self.rank_of(s) == r)
    }

    pub fn is_simple(&self) -> bool {
        let n = self.size();
        (0..n).all(|e| !self.is_loop(e))
            && (0..n).all(|e| (e + 1..n).all(|f| self.rank_of(bits::bit(e) | bits::bit(f)) == 2))
    }

    pub fn is_cosimple(&self) -> bool {
        let n = self.size();
        (0..n).all(|e| !self.is_coloop(e))
            && (0..n).all(|e| (e + 1..n).all(|f| self.corank_of(bits::bit(e) | bits::bit(f)) == 2))
    }

    /// The whole ground set is a circuit (`U(n-1,n)`).
    pub fn is_circuit_matroid(&self) -> bool {
        self.size() >= 1 && self.is_circuit(self.full())
    }

    /// The whole ground set is a cocircuit (`U(1,n)`).
    pub fn is_cocircuit_matroid(&self) -> bool {
        self.size() >= 1 && self.is_cocircuit(self.full())
    }

    /// Flats whose restriction has no coloops, in increasing bitmask order.
    pub fn cyclic_flats(&self) -> Vec<Mask> {
        (0..=self.full())
            .filter(|&f| {
                self.is_flat(f)
                    && bits::elements(f).all(|e| self.rank_of(f & !bits::bit(e)) == self.rank_of(f))
            })
            .collect()
    }

    /// Classes of elements lying in exactly the same cyclic flats, ordered by
    /// least element.
    pub fn clonal_classes(&self) -> Vec<Mask> {
        let cf = self.cyclic_flats();
        let sig = |e: usize| -> Vec<bool> { cf.iter().map(|&f| bits::contains(f, e)).collect() };
        let sigs: Vec<Vec<bool>> = (0..self.size()).map(sig).collect();
        classes(self.full(), |e, f| sigs[e] == sigs[f])
    }

    /// Not a coloop, and every circuit through `e` is spanning.
    pub fn is_free(&self, e: usize) -> bool {
        let r = self.rank();
        !self.is_coloop(e)
            && self
                .circuits()
                .iter()
                .filter(|&&c| bits::contains(c, e))
                .all(|&c| self.rank_of(c) == r)
    }

    pub fn is_free_element(&self, label: &str) -> Result<bool> {
        Ok(self.is_free(self.ground.index(label)?))
    }

    /// The same matroid with labels replaced through `rename`.
    pub fn relabeled(&self, rename: impl Fn(&str) -> String) -> Result<Matroid> {
        let ground = GroundSet::new(self.labels().iter().map(|l| rename(l)))?;
        Ok(Matroid::from_rank_table(ground, self.ranks.clone()))
    }

    /// The same matroid with the ground set reordered to `labels`.
    pub fn reordered<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        if labels.len() != self.size() {
            return Err(Error::BadSize {
                expected: self.size(),
                got: labels.len(),
            });
        }
        let ground = GroundSet::new(labels.iter().map(|l| l.as_ref().to_string()))?;
        let map: Vec<usize> = ground
            .labels()
            .iter()
            .map(|l| self.ground.index(l))
            .collect::<Result<_>>()?;
        Ok(Matroid::from_rank_fn(ground, |s| {
            self.ranks[map_mask(s, &map) as usize]
        }))
    }

    /// Verifies the rank axioms on the stored table.
    pub fn validate(&self) -> Result<()> {
        check_rank_table(self.size(), &self.ranks).map_err(|(s, x, y)| {
            Error::AxiomViolation(format!(
                "rank axioms fail at {:?} ({}, {})",
                self.ground.labels_of(s),
                x,
                y
            ))
        })
    }
}

pub(crate) fn rank_from_independence(n: usize, indep: &[bool]) -> Vec<u8> {
    let size = 1usize << n;
    let mut ranks = vec![0u8; size];
    for s in 1..size {
        ranks[s] = if indep[s] {
            bits::size(s as Mask) as u8
        } else {
            bits::elements(s as Mask)
                .map(|x| ranks[s & !(1 << x)])
                .max()
                .unwrap_or(0)
        };
    }
    ranks
}

pub(crate) fn circuits_of_table(n: usize, ranks: &[u8]) -> Vec<Mask> {
    let indep = |s: Mask| ranks[s as usize] as usize == bits::size(s);
    (1..=bits::full(n))
        .filter(|&s| !indep(s) && bits::elements(s).all(|x| indep(s & !bits::bit(x))))
        .collect()
}

fn exchange_failure(ground: &GroundSet, bases: &[Mask]) -> Error {
    let set: std::collections::HashSet<Mask> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in bits::elements(b1 & !b2) {
                let ok = bits::elements(b2 & !b1)
                    .any(|y| set.contains(&((b1 & !bits::bit(x)) | bits::bit(y))));
                if !ok {
                    return Error::AxiomViolation(format!(
                        "basis exchange fails for {:?} and {:?} at {}",
                        ground.labels_of(b1),
                        ground.labels_of(b2),
                        ground.label(x)
                    ));
                }
            }
        }
    }
    Error::AxiomViolation("basis family does not define a matroid".into())
}

/// Partition of `within` into classes of an equivalence relation, ordered by
/// least element.
fn classes(within: Mask, same: impl Fn(usize, usize) -> bool) -> Vec<Mask> {
    let mut out: Vec<Mask> = Vec::new();
    for e in bits::elements(within) {
        match out
            .iter_mut()
            .find(|c| same(c.trailing_zeros() as usize, e))
        {
            Some(c) => *c |= bits::bit(e),
            None => out.push(bits::bit(e)),
        }
    }
    out
}
