//! Named matroids, a small composition grammar, and the explicit
//! counterexample constructions for the removal and transitivity properties.
//!
//! Names: `U(r,n)`, `MW(n)` (wheel, spokes `s1..` and rims `r1..`), `W(r)`
//! (whirl), `MK4`, `MK23`, `Q6`, `P6`. Expressions combine names with
//! `A+B` (direct sum), `A~B@p` (2-sum across `p`) and `A||B@p` (parallel
//! connection across `p`), left to right, with parentheses for grouping.
//! Labels of the right operand that clash with the left are renamed to the
//! next unused letters; the basepoint `p` is shared.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::construct::{
    add_parallel, add_series, circuit_hyperplanes, direct_sum, parallel_connection, relax,
    truncation, two_sum,
};
use crate::error::{Error, Result};
use crate::iso;
use crate::matroid::{letter_label, GroundSet, Matroid};
use crate::minor;

fn graph(edges: &[(&str, &str, &str)]) -> Matroid {
    Matroid::from_graph(edges).expect("catalog graphs are small")
}

pub fn k4() -> Matroid {
    graph(&[
        ("1", "2", "a"),
        ("1", "3", "b"),
        ("1", "4", "c"),
        ("2", "3", "d"),
        ("2", "4", "e"),
        ("3", "4", "f"),
    ])
}

pub fn k23() -> Matroid {
    graph(&[
        ("u1", "v1", "a"),
        ("u2", "v1", "b"),
        ("u1", "v2", "c"),
        ("u2", "v2", "d"),
        ("u1", "v3", "e"),
        ("u2", "v3", "f"),
    ])
}

/// Cycle matroid of the wheel with `n` spokes.
pub fn wheel(n: usize) -> Matroid {
    let hub = "h".to_string();
    let rim = |i: usize| format!("v{}", i % n + 1);
    let mut edges: Vec<(String, String, String)> = (1..=n)
        .map(|i| (hub.clone(), rim(i - 1), format!("s{i}")))
        .collect();
    edges.extend((1..=n).map(|i| (rim(i - 1), rim(i), format!("r{i}"))));
    Matroid::from_graph(&edges).expect("wheels are small")
}

/// The rank-`r` whirl: the wheel with its rim relaxed.
pub fn whirl(r: usize) -> Matroid {
    let w = wheel(r);
    let rim: Vec<String> = (1..=r).map(|i| format!("r{i}")).collect();
    relax(&w, w.ground().mask_of(&rim).unwrap()).expect("the rim is a circuit-hyperplane")
}

/// `MK4` relaxed `steps` times, each time at the first circuit-hyperplane.
fn relaxation_chain(steps: usize) -> Matroid {
    let mut m = k4();
    for _ in 0..steps {
        let c = circuit_hyperplanes(&m)[0];
        m = relax(&m, c).expect("listed circuit-hyperplane");
    }
    m
}

/// The rank-3 whirl, as `MK4` with one triangle relaxed.
pub fn w3() -> Matroid {
    relaxation_chain(1)
}

pub fn q6() -> Matroid {
    relaxation_chain(2)
}

pub fn p6() -> Matroid {
    relaxation_chain(3)
}

fn parse_args(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// A single catalog name.
pub fn named_base(name: &str) -> Result<Matroid> {
    let unknown = || Error::UnknownName(name.to_string());
    let name = name.trim();
    let args = |prefix: &str| -> Option<Vec<usize>> {
        name.strip_prefix(prefix)?
            .strip_prefix('(')?
            .strip_suffix(')')
            .and_then(parse_args)
    };
    if let Some(a) = args("U") {
        return match a[..] {
            [r, n] if r <= n => {
                if n > crate::matroid::ground_cap() {
                    return Err(Error::CapExceeded {
                        size: n,
                        cap: crate::matroid::ground_cap(),
                    });
                }
                Ok(Matroid::uniform(r, n))
            }
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args("MW") {
        return match a[..] {
            [n] if n >= 2 && 2 * n <= crate::matroid::ground_cap() => Ok(wheel(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args("W") {
        return match a[..] {
            [r] if r >= 2 && 2 * r <= crate::matroid::ground_cap() => Ok(whirl(r)),
            _ => Err(unknown()),
        };
    }
    match name {
        "MK4" => Ok(k4()),
        "MK23" => Ok(k23()),
        "W3" => Ok(w3()),
        "Q6" => Ok(q6()),
        "P6" => Ok(p6()),
        _ => Err(unknown()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Sum,
    TwoSum,
    Parallel,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self) -> Error {
        Error::UnknownName(self.src.to_string())
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Matroid> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            let op = if self.rest().starts_with('+') {
                self.pos += 1;
                Op::Sum
            } else if self.rest().starts_with('~') {
                self.pos += 1;
                Op::TwoSum
            } else if self.rest().starts_with("||") {
                self.pos += 2;
                Op::Parallel
            } else {
                return Ok(left);
            };
            let right = self.term()?;
            left = match op {
                Op::Sum => combine_sum(&left, &right)?,
                _ => {
                    self.skip_ws();
                    if !self.rest().starts_with('@') {
                        return Err(self.err());
                    }
                    self.pos += 1;
                    let p = self.label()?;
                    combine_at(&left, &right, &p, op)?
                }
            };
        }
    }

    fn label(&mut self) -> Result<String> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.err());
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    fn term(&mut self) -> Result<Matroid> {
        self.skip_ws();
        if self.rest().starts_with('(') {
            self.pos += 1;
            let m = self.expr()?;
            self.skip_ws();
            if !self.rest().starts_with(')') {
                return Err(self.err());
            }
            self.pos += 1;
            return Ok(m);
        }
        let mut name = self.label()?;
        if self.rest().starts_with('(') {
            let close = self.rest().find(')').ok_or_else(|| self.err())?;
            name.push_str(&self.rest()[..=close]);
            self.pos += close + 1;
        }
        named_base(&name)
    }
}

/// Renames labels of `right` that occur in `left` (other than `keep`) to the
/// next letters unused by either.
fn rename_apart(left: &Matroid, right: &Matroid, keep: Option<&str>) -> Result<Matroid> {
    let mut used: BTreeSet<String> = left
        .labels()
        .iter()
        .chain(right.labels())
        .cloned()
        .collect();
    let mut next = 0;
    let mut fresh = move || loop {
        let l = letter_label(next);
        next += 1;
        if used.insert(l.clone()) {
            return l;
        }
    };
    let renamed: Vec<String> = right
        .labels()
        .iter()
        .map(|l| {
            if Some(l.as_str()) != keep && left.ground().index_of(l).is_some() {
                fresh()
            } else {
                l.clone()
            }
        })
        .collect();
    let ground = GroundSet::new(renamed)?;
    right.relabeled(|l| {
        ground
            .label(right.ground().index_of(l).unwrap())
            .to_string()
    })
}

fn combine_sum(left: &Matroid, right: &Matroid) -> Result<Matroid> {
    direct_sum(left, &rename_apart(left, right, None)?)
}

fn combine_at(left: &Matroid, right: &Matroid, p: &str, op: Op) -> Result<Matroid> {
    left.ground().index(p)?;
    right.ground().index(p)?;
    let right = rename_apart(left, right, Some(p))?;
    match op {
        Op::TwoSum => two_sum(left, &right, p),
        _ => parallel_connection(left, &right, p, p),
    }
}

/// A catalog name or composition expression.
pub fn named(expr: &str) -> Result<Matroid> {
    let mut p = Parser { src: expr, pos: 0 };
    let m = p.expr()?;
    p.skip_ws();
    if p.pos != expr.len() {
        return Err(p.err());
    }
    Ok(m)
}

/// Names listed in help output and exercised by tests.
pub const NAMES: &[&str] = &["U(r,n)", "MW(n)", "W(r)", "W3", "MK4", "MK23", "Q6", "P6"];

/// The five matroids one of which appears through every triple of a
/// 3-connected matroid of rank and corank at least three.
pub fn triple_oracles() -> Vec<(String, Matroid)> {
    vec![
        ("U(3,6)".into(), Matroid::uniform(3, 6)),
        ("P6".into(), p6()),
        ("Q6".into(), q6()),
        ("W3".into(), w3()),
        ("MK4".into(), k4()),
    ]
}

/// A matroid built by one of the explicit constructions, tagged with the step
/// it instantiates.
#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub step: String,
    #[serde(serialize_with = "serialize_matroid")]
    pub matroid: Matroid,
}

fn serialize_matroid<S: serde::Serializer>(
    m: &Matroid,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    crate::json::MatroidDoc::of(m).serialize(s)
}

fn construction(step: impl Into<String>, matroid: Matroid) -> Construction {
    Construction {
        step: step.into(),
        matroid,
    }
}

/// The parallel connection of two copies of `m` at `g`, and the matroid left
/// after removing the rest of the first copy other than `e`, `f`, `g` while
/// keeping `N`-connectivity, if such a removal sequence exists.
pub fn doubled_parallel_connection(m: &Matroid, n: &Matroid) -> Result<Vec<Construction>> {
    if m.size() < 3 {
        return Err(Error::UnsupportedN);
    }
    let (e, f, g) = (
        m.ground().label(0),
        m.ground().label(1),
        m.ground().label(2),
    );
    let copy = m.relabeled(|l| {
        if l == g {
            l.to_string()
        } else {
            format!("{l}2")
        }
    })?;
    let m3 = parallel_connection(m, &copy, g, g)?;
    let mut out = vec![construction(
        "parallel connection of two copies",
        m3.clone(),
    )];
    let first: Vec<String> = m
        .labels()
        .iter()
        .filter(|l| ![e, f, g].contains(&l.as_str()))
        .cloned()
        .collect();
    if let Some(m4) = remove_keeping(&m3, &first, n) {
        out.push(construction(
            format!("reduced to {{{e},{f},{g}}} on the first copy"),
            m4,
        ));
    }
    Ok(out)
}

/// Deletes or contracts each of `labels` in turn so that every intermediate
/// matroid stays `N`-connected; the first such sequence in
/// delete-before-contract order.
fn remove_keeping(m: &Matroid, labels: &[String], n: &Matroid) -> Option<Matroid> {
    let Some((first, rest)) = labels.split_first() else {
        return Some(m.clone());
    };
    let i = m.ground().index_of(first)?;
    for next in [m.delete(bits::bit(i)), m.contract(bits::bit(i))] {
        if minor::n_connected(&next, n) {
            if let Some(done) = remove_keeping(&next, rest, n) {
                return Some(done);
            }
        }
    }
    None
}

fn components_are_points(n: &Matroid) -> Option<(usize, usize)> {
    (n.loops() | n.coloops() == n.full()).then(|| (bits::size(n.loops()), bits::size(n.coloops())))
}

fn next_letters(m: &Matroid, count: usize) -> Vec<String> {
    (0..)
        .map(letter_label)
        .filter(|l| m.ground().index_of(l).is_none())
        .take(count)
        .collect()
}

/// Rank-2 truncation recipe: a triangle `{c0, z, c1}` with `a` attached by
/// parallel connection at `c0` and `b` at `c1`, then truncated.
pub fn truncated_triangle_connection(
    a: &Matroid,
    a_at: &str,
    b: &Matroid,
    b_at: &str,
) -> Result<Matroid> {
    let tri = Matroid::uniform_on(2, GroundSet::new(["c0", "z", "c1"])?);
    let a = a.relabeled(|l| {
        if l == a_at {
            "c0".into()
        } else {
            format!("{l}_0")
        }
    })?;
    let b = b.relabeled(|l| {
        if l == b_at {
            "c1".into()
        } else {
            format!("{l}_1")
        }
    })?;
    let m = parallel_connection(&tri, &a, "c0", "c0")?;
    let m = parallel_connection(&m, &b, "c1", "c1")?;
    truncation(&m)
}

/// The explicit constructions from the arguments that no matroid other than
/// the known ones has the element-removal or transitivity property, for `n`.
pub fn proof_constructions(n: &Matroid) -> Result<Vec<Construction>> {
    let mut out = Vec::new();
    let u23 = Matroid::uniform(2, 3);
    if iso::is_isomorphic(n, &u23) {
        out.extend(doubled_parallel_connection(&Matroid::uniform(2, 4), n)?);
    }
    if let Some((loops, coloops)) = components_are_points(n) {
        let size = n.size();
        if loops == 0 && size >= 3 {
            let m = direct_sum(
                &u23,
                &Matroid::uniform(size - 2, size - 2).relabeled(|l| format!("{l}1"))?,
            )?;
            out.push(construction("U(2,3) plus free elements", m));
        }
        if coloops == 0 && size >= 3 {
            let m = direct_sum(
                &Matroid::uniform(1, 3),
                &Matroid::uniform(0, size - 2).relabeled(|l| format!("{l}1"))?,
            )?;
            out.push(construction("U(1,3) plus loops", m));
        }
        if loops == 1 && coloops == 1 {
            out.push(construction("MK4", k4()));
        }
        if loops >= 2 && coloops >= 1 {
            let m = direct_sum(
                &Matroid::uniform(0, loops + 1),
                &Matroid::uniform(coloops, coloops).relabeled(|l| format!("{l}1"))?,
            )?;
            out.push(construction("one more loop", m));
        }
        if coloops >= 2 && loops >= 1 {
            let m = direct_sum(
                &Matroid::uniform(coloops + 1, coloops + 1),
                &Matroid::uniform(0, loops).relabeled(|l| format!("{l}1"))?,
            )?;
            out.push(construction("one more coloop", m));
        }
    }
    for e in 0..n.size() {
        let label = n.ground().label(e);
        let new = &next_letters(n, 1)[0];
        if !n.is_loop(e) {
            out.push(construction(
                format!("parallel element at {label}"),
                add_parallel(n, label, new)?,
            ));
        }
        if !n.is_coloop(e) {
            out.push(construction(
                format!("series element at {label}"),
                add_series(n, label, new)?,
            ));
        }
    }
    let comps = n.components();
    let largest = comps.iter().map(|&c| bits::size(c)).max().unwrap_or(0);
    let big: Vec<Mask> = comps
        .iter()
        .copied()
        .filter(|&c| bits::size(c) == largest)
        .collect();
    if largest >= 2 && big.len() >= 2 {
        let (c0, c1) = (big[0], big[1]);
        let with_series = |c: Mask| -> Option<(Matroid, String)> {
            let part = n.restrict(c);
            let pair = part
                .circuits()
                .iter()
                .copied()
                .find(|&x| bits::size(x) == 2)?;
            let mut it = bits::elements(pair);
            let b = part.ground().label(it.nth(1)?).to_string();
            let grown = add_series(&part, &b, "cc").ok()?;
            Some((grown, "cc".to_string()))
        };
        if let (Some((p0, at0)), Some((p1, at1))) = (with_series(c0), with_series(c1)) {
            let joined = truncated_triangle_connection(&p0, &at0, &p1, &at1)?;
            let rest = n.restrict(n.full() & !(c0 | c1));
            let m = if rest.size() == 0 {
                joined
            } else {
                direct_sum(&joined, &rest)?
            };
            out.push(construction(
                "truncated connection of the two largest components",
                m,
            ));
        }
    }
    if out.is_empty() {
        return Err(Error::UnsupportedN);
    }
    Ok(out)
}
