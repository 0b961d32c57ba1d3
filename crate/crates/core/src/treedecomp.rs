//! Canonical tree decompositions of connected matroids and the tree-shaped
//! predicates built on them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::{self, Mask};
use crate::connectivity::{self, lambda, TwoSeparation};
use crate::construct::{extract_part, two_sum};
use crate::error::{Error, Result};
use crate::json;
use crate::matroid::{FreshNames, Matroid};
use crate::minor::{self, MinorWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Circuit,
    Cocircuit,
    ThreeConnected,
}

impl VertexClass {
    pub fn of(m: &Matroid) -> Self {
        if m.is_circuit_matroid() {
            VertexClass::Circuit
        } else if m.is_cocircuit_matroid() {
            VertexClass::Cocircuit
        } else {
            VertexClass::ThreeConnected
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexClass::Circuit => "circuit",
            VertexClass::Cocircuit => "cocircuit",
            VertexClass::ThreeConnected => "three_connected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub basepoint: String,
    pub ends: (usize, usize),
}

/// A matroid-labeled tree whose 2-sums recover `matroid`.
#[derive(Debug, Clone)]
pub struct DecompTree {
    matroid: Matroid,
    vertices: Vec<Matroid>,
    edges: Vec<TreeEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexInfo {
    pub class: VertexClass,
    pub binary: bool,
    pub n_connected: Option<bool>,
    pub ground_elements: usize,
    pub degree: usize,
}

fn needs_split(m: &Matroid) -> bool {
    !(m.is_circuit_matroid() || m.is_cocircuit_matroid() || connectivity::is_3_connected(m))
}

/// The canonical tree decomposition, splitting on the first exact
/// 2-separation of the first splittable vertex.
pub fn canonical_tree(m: &Matroid) -> Result<DecompTree> {
    build(
        m,
        |labels| labels.iter().position(needs_split),
        |v| connectivity::first_exact_two_separation(v).map(|s| s.side_x),
    )
}

/// The canonical tree decomposition, splitting vertices and separations in
/// random order. The result agrees with [`canonical_tree`] up to basepoint
/// names.
pub fn canonical_tree_with<R: Rng>(m: &Matroid, rng: &mut R) -> Result<DecompTree> {
    let rng = std::cell::RefCell::new(rng);
    build(
        m,
        |labels| {
            let open: Vec<usize> = (0..labels.len())
                .filter(|&i| needs_split(&labels[i]))
                .collect();
            open.choose(&mut **rng.borrow_mut()).copied()
        },
        |v| {
            let seps: Vec<Mask> = connectivity::two_separations(v)
                .into_iter()
                .filter(TwoSeparation::is_exact)
                .map(|s| s.side_x)
                .collect();
            seps.choose(&mut **rng.borrow_mut()).copied()
        },
    )
}

fn build(
    m: &Matroid,
    mut pick_vertex: impl FnMut(&[Matroid]) -> Option<usize>,
    mut pick_side: impl FnMut(&Matroid) -> Option<Mask>,
) -> Result<DecompTree> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut names = FreshNames::avoiding(m.labels());
    let mut vertices = vec![m.clone()];
    let mut edges: Vec<TreeEdge> = Vec::new();
    while let Some(v) = pick_vertex(&vertices) {
        let label = vertices[v].clone();
        let x = pick_side(&label)
            .expect("a connected matroid that is not 3-connected has an exact 2-separation");
        let p = names.fresh();
        let px = extract_part(&label, x, &p)?;
        let py = extract_part(&label, label.full() & !x, &p)?;
        let w = vertices.len();
        for e in edges.iter_mut() {
            for end in [&mut e.ends.0, &mut e.ends.1] {
                if *end == v && px.ground().index_of(&e.basepoint).is_none() {
                    *end = w;
                }
            }
        }
        vertices[v] = px;
        vertices.push(py);
        edges.push(TreeEdge {
            basepoint: p,
            ends: (v, w),
        });
    }

    let mut slots: Vec<Option<Matroid>> = vertices.into_iter().map(Some).collect();
    loop {
        let found = edges.iter().position(|e| {
            let (a, b) = (
                slots[e.ends.0].as_ref().unwrap(),
                slots[e.ends.1].as_ref().unwrap(),
            );
            let (ca, cb) = (VertexClass::of(a), VertexClass::of(b));
            ca == cb && ca != VertexClass::ThreeConnected
        });
        let Some(i) = found else { break };
        let e = edges.remove(i);
        let (a, b) = e.ends;
        let merged = two_sum(
            slots[a].as_ref().unwrap(),
            slots[b].as_ref().unwrap(),
            &e.basepoint,
        )?;
        slots[a] = Some(merged);
        slots[b] = None;
        for f in edges.iter_mut() {
            for end in [&mut f.ends.0, &mut f.ends.1] {
                if *end == b {
                    *end = a;
                }
            }
        }
    }

    let mut index = vec![usize::MAX; slots.len()];
    let mut vertices = Vec::new();
    for (i, s) in slots.into_iter().enumerate() {
        if let Some(s) = s {
            index[i] = vertices.len();
            vertices.push(s);
        }
    }
    let mut names = FreshNames::avoiding(m.labels());
    let mut rename: BTreeMap<String, String> = BTreeMap::new();
    for e in edges.iter_mut() {
        let (a, b) = (index[e.ends.0], index[e.ends.1]);
        e.ends = (a.min(b), a.max(b));
        let new = names.fresh();
        rename.insert(e.basepoint.clone(), new.clone());
        e.basepoint = new;
    }
    let vertices = vertices
        .into_iter()
        .map(|v| v.relabeled(|l| rename.get(l).cloned().unwrap_or_else(|| l.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompTree {
        matroid: m.clone(),
        vertices,
        edges,
    })
}

impl DecompTree {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn vertices(&self) -> &[Matroid] {
        &self.vertices
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn is_basepoint(&self, label: &str) -> bool {
        self.edges.iter().any(|e| e.basepoint == label)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.ends.0 == v || e.ends.1 == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match e.ends {
                (a, b) if a == v => Some(b),
                (a, b) if b == v => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Edges meeting `v`, by index.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].ends.0 == v || self.edges[i].ends.1 == v)
            .collect()
    }

    /// Elements of the decomposed matroid appearing in vertex `v`.
    pub fn ground_elements(&self, v: usize) -> Mask {
        self.vertices[v]
            .labels()
            .iter()
            .filter_map(|l| self.matroid.ground().index_of(l))
            .fold(0, |s, i| s | bits::bit(i))
    }

    pub fn class(&self, v: usize) -> VertexClass {
        VertexClass::of(&self.vertices[v])
    }

    /// Folds every edge by 2-sums in the given order.
    pub fn reconstruct_in_order(&self, order: &[usize]) -> Result<Matroid> {
        let mut group: Vec<usize> = (0..self.vertices.len()).collect();
        let mut label: Vec<Option<Matroid>> = self.vertices.iter().cloned().map(Some).collect();
        fn find(group: &mut [usize], mut v: usize) -> usize {
            while group[v] != v {
                group[v] = group[group[v]];
                v = group[v];
            }
            v
        }
        for &i in order {
            let e = self
                .edges
                .get(i)
                .ok_or_else(|| Error::BadEdge(i.to_string()))?;
            let a = find(&mut group, e.ends.0);
            let b = find(&mut group, e.ends.1);
            let merged = two_sum(
                label[a].as_ref().unwrap(),
                label[b].as_ref().unwrap(),
                &e.basepoint,
            )?;
            label[b] = None;
            label[a] = Some(merged);
            group[b] = a;
        }
        let root = find(&mut group, 0);
        Ok(label[root].take().unwrap())
    }

    pub fn reconstruct(&self) -> Result<Matroid> {
        let order: Vec<usize> = (0..self.edges.len()).collect();
        self.reconstruct_in_order(&order)
    }

    /// Vertices on the side of `edge` containing its first end.
    fn side(&self, edge: usize) -> Vec<bool> {
        let start = self.edges[edge].ends.0;
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for (i, e) in self.edges.iter().enumerate() {
                if i == edge {
                    continue;
                }
                let w = match e.ends {
                    (a, b) if a == v => b,
                    (a, b) if b == v => a,
                    _ => continue,
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// The 2-separation displayed by `edge`; `side_x` holds the elements on
    /// the side of the edge's first end.
    pub fn displayed_separation(&self, edge: usize) -> Result<TwoSeparation> {
        if edge >= self.edges.len() {
            return Err(Error::BadEdge(edge.to_string()));
        }
        let side = self.side(edge);
        let x = (0..self.vertices.len())
            .filter(|&v| side[v])
            .fold(0, |s, v| s | self.ground_elements(v));
        Ok(TwoSeparation {
            side_x: x,
            side_y: self.matroid.full() & !x,
            order: lambda(&self.matroid, x),
        })
    }

    /// The path of vertices from `a` to `b`, both ends included.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.vertices.len()];
        parent[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    }

    fn edge_between(&self, a: usize, b: usize) -> usize {
        self.edges
            .iter()
            .position(|e| e.ends == (a.min(b), a.max(b)))
            .expect("adjacent vertices share an edge")
    }

    pub fn classify_vertices(&self, n: Option<&Matroid>) -> Vec<VertexInfo> {
        (0..self.vertices.len())
            .map(|v| {
                let label = &self.vertices[v];
                VertexInfo {
                    class: VertexClass::of(label),
                    binary: label.is_binary(),
                    n_connected: n.map(|n| minor::n_connected(label, n)),
                    ground_elements: bits::size(self.ground_elements(v)),
                    degree: self.degree(v),
                }
            })
            .collect()
    }

    /// Conditions (i) and (ii): every bad vertex has at most one element of
    /// the matroid, and every path between two bad vertices with exactly one
    /// such element passes through a good vertex.
    fn path_condition(&self, good: &[bool]) -> bool {
        let counts: Vec<usize> = (0..self.vertices.len())
            .map(|v| bits::size(self.ground_elements(v)))
            .collect();
        let bad = |v: usize| !good[v];
        if (0..self.vertices.len()).any(|v| bad(v) && counts[v] > 1) {
            return false;
        }
        let singles: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| bad(v) && counts[v] == 1)
            .collect();
        singles.iter().enumerate().all(|(i, &a)| {
            singles[i + 1..].iter().all(|&b| {
                let path = self.path(a, b);
                path[1..path.len() - 1].iter().any(|&v| good[v])
            })
        })
    }

    /// Tree criterion for `U(2,4)`-connectivity.
    pub fn u24_condition(&self) -> bool {
        if !self.matroid.is_connected() || self.matroid.is_binary() {
            return false;
        }
        let good: Vec<bool> = self.vertices.iter().map(|v| !v.is_binary()).collect();
        self.path_condition(&good)
    }

    /// Tree criterion for `N`-connectivity with `N` 3-connected on at least
    /// four elements.
    pub fn general_condition(&self, n: &Matroid) -> Result<bool> {
        if n.size() < 4 || !connectivity::is_3_connected(n) {
            return Err(Error::BadN);
        }
        if !self.matroid.is_connected() || !minor::has_minor(&self.matroid, n) {
            return Ok(false);
        }
        let good: Vec<bool> = self
            .vertices
            .iter()
            .map(|v| minor::n_connected(v, n))
            .collect();
        Ok(self.path_condition(&good))
    }

    /// True when no vertex of degree at most two labeled by a rank-2 uniform
    /// matroid has only cocircuit neighbors that contain elements of the
    /// matroid.
    pub fn u34_forbidden_config_absent(&self) -> bool {
        !(0..self.vertices.len()).any(|v| {
            let label = &self.vertices[v];
            self.degree(v) <= 2
                && label.rank() == 2
                && label.is_uniform()
                && self.neighbors(v).iter().all(|&w| {
                    self.class(w) == VertexClass::Cocircuit && self.ground_elements(w) != 0
                })
        })
    }

    /// Every vertex label has rank and corank at least three.
    pub fn mk4_vertex_condition(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.rank() >= 3 && v.corank() >= 3)
    }

    /// For each edge at `v`, its basepoint together with the elements of the
    /// matroid on the far side.
    pub fn far_sides(&self, v: usize) -> Vec<(String, Mask)> {
        self.incident_edges(v)
            .into_iter()
            .map(|i| {
                let sep = self.displayed_separation(i).expect("edge index in range");
                let far = if self.edges[i].ends.0 == v {
                    sep.side_y
                } else {
                    sep.side_x
                };
                (self.edges[i].basepoint.clone(), far)
            })
            .collect()
    }

    /// The label of `v` with each basepoint renamed to the chosen element on
    /// its far side, together with a witness that it is a minor of the
    /// decomposed matroid.
    pub fn specially_relabeled(
        &self,
        v: usize,
        choices: &BTreeMap<String, String>,
    ) -> Result<(Matroid, MinorWitness)> {
        if v >= self.vertices.len() {
            return Err(Error::BadChoice(format!("no vertex {v}")));
        }
        let m = &self.matroid;
        let mut rename = BTreeMap::new();
        for (p, far) in self.far_sides(v) {
            let y = choices
                .get(&p)
                .ok_or_else(|| Error::BadChoice(format!("no element chosen for {p}")))?;
            match m.ground().index_of(y) {
                Some(i) if bits::contains(far, i) => {
                    rename.insert(p, y.clone());
                }
                _ => {
                    return Err(Error::BadChoice(format!(
                        "{y} is not on the far side of {p}"
                    )))
                }
            }
        }
        let relabeled = self.vertices[v]
            .relabeled(|l| rename.get(l).cloned().unwrap_or_else(|| l.to_string()))?;
        let kept = m.ground().mask_of(relabeled.labels())?;
        let rest = m.full() & !kept;
        let k = m.rank() - relabeled.rank();
        for c in bits::k_subsets(rest, k) {
            if !m.is_independent(c) {
                continue;
            }
            let minor = m.minor(c, rest & !c)?;
            if minor == relabeled {
                let witness = MinorWitness {
                    contract: m.ground().labels_of(c),
                    delete: m.ground().labels_of(rest & !c),
                    map: relabeled
                        .labels()
                        .iter()
                        .map(|l| (l.clone(), l.clone()))
                        .collect(),
                };
                return Ok((relabeled, witness));
            }
        }
        Err(Error::PreconditionFailed(
            "no minor realizes the relabeled vertex".into(),
        ))
    }

    /// Specially relabeled minor of `v` choosing, on each far side, the
    /// first element of `prefer` found there, else the least element.
    pub fn specially_relabeled_preferring(
        &self,
        v: usize,
        prefer: Mask,
    ) -> Result<(Matroid, MinorWitness)> {
        let g = self.matroid.ground();
        let choices = self
            .far_sides(v)
            .into_iter()
            .map(|(p, far)| {
                let pick = if far & prefer != 0 { far & prefer } else { far };
                (p, g.label(pick.trailing_zeros() as usize).to_string())
            })
            .collect();
        self.specially_relabeled(v, &choices)
    }

    /// Vertices lying, for every edge, on the same side as at least
    /// `needed` elements of `used`.
    pub fn central_vertices(&self, used: Mask, needed: usize) -> Vec<usize> {
        let sides: Vec<(Vec<bool>, Mask)> = (0..self.edges.len())
            .map(|i| (self.side(i), self.displayed_separation(i).unwrap().side_x))
            .collect();
        (0..self.vertices.len())
            .filter(|&v| {
                sides.iter().all(|(side, x)| {
                    let s = if side[v] {
                        *x
                    } else {
                        self.matroid.full() & !x
                    };
                    bits::size(s & used) >= needed
                })
            })
            .collect()
    }

    /// The 2-sum of the labels of two distinct vertices across the first and
    /// last edges of the path joining them.
    pub fn path_two_sum(&self, a: usize, b: usize) -> Result<Matroid> {
        let path = self.path(a, b);
        if path.len() < 2 {
            return Err(Error::BadChoice("vertices must be distinct".into()));
        }
        let p1 = self.edges[self.edge_between(path[0], path[1])]
            .basepoint
            .clone();
        let p2 = self.edges[self.edge_between(path[path.len() - 2], path[path.len() - 1])]
            .basepoint
            .clone();
        let mb =
            self.vertices[b].relabeled(|l| if l == p2 { p1.clone() } else { l.to_string() })?;
        two_sum(&self.vertices[a], &mb, &p1)
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = (0..self.vertices.len())
            .map(|v| {
                json!({
                    "matroid": json::to_value(&self.vertices[v]),
                    "class": self.class(v).name(),
                    "elements": self.matroid.ground().labels_of(self.ground_elements(v)),
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({"basepoint": e.basepoint, "ends": [e.ends.0, e.ends.1]}))
            .collect();
        json!({"vertices": vertices, "edges": edges})
    }

    /// Indented text rendering, walking the tree from vertex 0.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let describe = |v: usize| {
            let m = &self.vertices[v];
            format!(
                "v{v} {} r={} {{{}}}",
                self.class(v).name(),
                m.rank(),
                m.labels().join(" ")
            )
        };
        let _ = writeln!(out, "{}", describe(0));
        let mut stack: Vec<(usize, usize, String)> = self
            .neighbors(0)
            .into_iter()
            .rev()
            .map(|w| (w, 0, "  ".to_string()))
            .collect();
        while let Some((v, parent, indent)) = stack.pop() {
            let p = &self.edges[self.edge_between(v, parent)].basepoint;
            let _ = writeln!(out, "{indent}-{p}- {}", describe(v));
            for w in self.neighbors(v).into_iter().rev() {
                if w != parent {
                    stack.push((w, v, format!("{indent}  ")));
                }
            }
        }
        out
    }
}

/// Whether two decompositions of the same matroid agree up to the names of
/// their basepoints: same displayed separations, same vertex contents, and
/// equal labels once basepoints are matched.
pub fn same_up_to_basepoints(t1: &DecompTree, t2: &DecompTree) -> bool {
    if t1.vertices.len() != t2.vertices.len()
        || t1.edges.len() != t2.edges.len()
        || t1.matroid != t2.matroid
    {
        return false;
    }
    let full = t1.matroid.full();
    let key = |t: &DecompTree, i: usize| {
        let s = t.displayed_separation(i).unwrap().side_x;
        if s & 1 != 0 {
            s
        } else {
            full & !s
        }
    };
    let mut edge_map = vec![usize::MAX; t1.edges.len()];
    for (i, slot) in edge_map.iter_mut().enumerate() {
        let k = key(t1, i);
        match (0..t2.edges.len()).find(|&j| key(t2, j) == k) {
            Some(j) => *slot = j,
            None => return false,
        }
    }
    let rename: BTreeMap<&str, &str> = (0..t1.edges.len())
        .map(|i| {
            (
                t1.edges[i].basepoint.as_str(),
                t2.edges[edge_map[i]].basepoint.as_str(),
            )
        })
        .collect();
    (0..t1.vertices.len()).all(|v| {
        let mut inc: Vec<usize> = t1
            .incident_edges(v)
            .into_iter()
            .map(|i| edge_map[i])
            .collect();
        inc.sort_unstable();
        let g = t1.ground_elements(v);
        let Some(w) = (0..t2.vertices.len())
            .find(|&w| t2.ground_elements(w) == g && t2.incident_edges(w) == inc)
        else {
            return false;
        };
        match t1.vertices[v].relabeled(|l| {
            rename
                .get(l)
                .map_or_else(|| l.to_string(), |s| s.to_string())
        }) {
            Ok(r) => r == t2.vertices[w],
            Err(_) => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::direct_sum;
    use crate::matroid::GroundSet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn k4() -> Matroid {
        Matroid::from_graph(&[
            ("1", "2", "a"),
            ("1", "3", "b"),
            ("1", "4", "c"),
            ("2", "3", "d"),
            ("2", "4", "e"),
            ("3", "4", "f"),
        ])
        .unwrap()
    }

    fn k23() -> Matroid {
        Matroid::from_graph(&[
            ("u1", "v1", "a"),
            ("u2", "v1", "b"),
            ("u1", "v2", "c"),
            ("u2", "v2", "d"),
            ("u1", "v3", "e"),
            ("u2", "v3", "f"),
        ])
        .unwrap()
    }

    fn whirl3() -> Matroid {
        crate::construct::relax(&k4(), k4().ground().mask_of(&["a", "b", "d"]).unwrap()).unwrap()
    }

    #[test]
    fn circuit_is_single_vertex() {
        let t = canonical_tree(&Matroid::uniform(4, 5)).unwrap();
        assert_eq!(t.vertices().len(), 1);
        assert_eq!(t.class(0), VertexClass::Circuit);
        assert_eq!(t.reconstruct().unwrap(), Matroid::uniform(4, 5));
    }

    #[test]
    fn k4_is_single_vertex() {
        let t = canonical_tree(&k4()).unwrap();
        assert_eq!(t.vertices().len(), 1);
        assert_eq!(t.class(0), VertexClass::ThreeConnected);
        assert!(t.mk4_vertex_condition());
    }

    #[test]
    fn k23_star() {
        let m = k23();
        let t = canonical_tree(&m).unwrap();
        assert_eq!(t.vertices().len(), 4);
        let center = (0..4).find(|&v| t.degree(v) == 3).unwrap();
        assert_eq!(t.class(center), VertexClass::Cocircuit);
        assert_eq!(t.vertices()[center].size(), 3);
        assert_eq!(t.ground_elements(center), 0);
        for v in (0..4).filter(|&v| v != center) {
            assert_eq!(t.class(v), VertexClass::Circuit);
            assert_eq!(t.vertices()[v].rank(), 2);
            assert_eq!(bits::size(t.ground_elements(v)), 2);
        }
        for i in 0..3 {
            let s = t.displayed_separation(i).unwrap();
            assert_eq!(s.order, 1);
            let sizes = [bits::size(s.side_x), bits::size(s.side_y)];
            assert!(sizes == [2, 4] || sizes == [4, 2]);
        }
        assert_eq!(t.reconstruct().unwrap(), m);
        assert!(!t.mk4_vertex_condition());
        assert!(t.u34_forbidden_config_absent());
        assert!(matches!(t.displayed_separation(7), Err(Error::BadEdge(_))));
    }

    #[test]
    fn rejects_disconnected() {
        let m = direct_sum(
            &Matroid::uniform(1, 2),
            &Matroid::uniform_on(1, GroundSet::new(["c"]).unwrap()),
        )
        .unwrap();
        assert_eq!(canonical_tree(&m).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn random_orders_agree() {
        let m = k23();
        let base = canonical_tree(&m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let t = canonical_tree_with(&m, &mut rng).unwrap();
            assert!(same_up_to_basepoints(&base, &t));
        }
    }

    #[test]
    fn k23_special_relabeling() {
        let m = k23();
        let t = canonical_tree(&m).unwrap();
        let center = (0..4).find(|&v| t.degree(v) == 3).unwrap();
        let (rel, w) = t.specially_relabeled_preferring(center, 0).unwrap();
        assert!(rel.is_cocircuit_matroid() && rel.size() == 3);
        assert!(w.verify(&m, &rel));
        let bad: BTreeMap<String, String> = t
            .far_sides(center)
            .into_iter()
            .map(|(p, far)| {
                let near = m.full() & !far;
                (
                    p,
                    m.ground().label(near.trailing_zeros() as usize).to_string(),
                )
            })
            .collect();
        assert!(matches!(
            t.specially_relabeled(center, &bad),
            Err(Error::BadChoice(_))
        ));
        let single = canonical_tree(&k4()).unwrap();
        let (rel, _) = single.specially_relabeled(0, &BTreeMap::new()).unwrap();
        assert_eq!(rel, k4());
    }

    #[test]
    fn u24_predicate_examples() {
        let w = canonical_tree(&whirl3()).unwrap();
        assert!(w.u24_condition());
        assert!(!canonical_tree(&k23()).unwrap().u24_condition());
        // U(2,4) 2-summed with a triangle keeps two elements on a binary vertex
        let u24 = Matroid::uniform(2, 4);
        let tri = Matroid::uniform_on(2, GroundSet::new(["d", "x", "y"]).unwrap());
        let m = two_sum(&u24, &tri, "d").unwrap();
        let t = canonical_tree(&m).unwrap();
        assert!(!t.u24_condition());
        assert!(!minor::n_connected(&m, &u24));
        assert_eq!(t.general_condition(&u24), Ok(false));
    }

    #[test]
    fn general_predicate_examples() {
        let t = canonical_tree(&k4()).unwrap();
        assert_eq!(t.general_condition(&k4()), Ok(true));
        let tri = Matroid::uniform_on(2, GroundSet::new(["f", "x", "y"]).unwrap());
        let m = two_sum(&k4(), &tri, "f").unwrap();
        let t = canonical_tree(&m).unwrap();
        assert_eq!(t.general_condition(&k4()), Ok(false));
        assert!(!minor::n_connected(&m, &k4()));
        assert_eq!(
            t.general_condition(&Matroid::uniform(1, 3)),
            Err(Error::BadN)
        );
    }

    #[test]
    fn u34_configuration_present() {
        // two triangles sharing c: the leaf triangle {a,b,p0} meets a cocircuit holding c
        let t1 = Matroid::uniform_on(2, GroundSet::new(["a", "b", "p"]).unwrap());
        let mid = Matroid::uniform_on(1, GroundSet::new(["p", "c", "q"]).unwrap());
        let t2 = Matroid::uniform_on(2, GroundSet::new(["q", "d", "e"]).unwrap());
        let m = two_sum(&two_sum(&t1, &mid, "p").unwrap(), &t2, "q").unwrap();
        assert!(m.is_connected() && m.is_simple());
        let t = canonical_tree(&m).unwrap();
        assert!(!t.u34_forbidden_config_absent());
        assert!(!minor::n_connected(&m, &Matroid::uniform(3, 4)));
        assert!(canonical_tree(&Matroid::uniform(3, 4))
            .unwrap()
            .u34_forbidden_config_absent());
    }

    #[test]
    fn two_k4_sum() {
        let a = k4();
        let b = k4()
            .relabeled(|l| {
                if l == "a" {
                    "a".into()
                } else {
                    format!("{l}2")
                }
            })
            .unwrap();
        let m = two_sum(&a, &b, "a").unwrap();
        let t = canonical_tree(&m).unwrap();
        assert_eq!(t.vertices().len(), 2);
        assert!(t.mk4_vertex_condition());
        assert_eq!(t.reconstruct().unwrap(), m);
        let (x, y) = (0, 1);
        let s = t.path_two_sum(x, y).unwrap();
        assert!(crate::iso::is_isomorphic(&s, &m));
    }

    #[test]
    fn json_shape() {
        let t = canonical_tree(&k23()).unwrap();
        let v = t.to_json();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(v["edges"][0]["basepoint"], "p0");
        assert!(t.render().contains("cocircuit"));
    }
}
