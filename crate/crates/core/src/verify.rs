//! Exhaustive and seeded-random checks of the characterization theorems.
//!
//! Each suite compares a structural characterization against direct minor
//! search over every isomorphism class up to `max_n` elements (plus catalog
//! matroids and explicit constructions where relevant) and reports any
//! disagreement with the offending matroid attached.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::bits::{self, Mask};
use crate::catalog::{self, named};
use crate::connectivity::{self, hereditary_removal_check, is_3_connected, kappa};
use crate::construct::two_sum;
use crate::enumerate::{self, classes_up_to};
use crate::error::{Error, Result};
use crate::iso;
use crate::json;
use crate::matroid::{letter_label, GroundSet, Matroid};
use crate::minor::{self, n_connected, MinorSearch};
use crate::treedecomp::{canonical_tree, canonical_tree_with, same_up_to_basepoints, VertexClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjecturePass,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjecturePass => "conjecture-pass",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub matroid: Value,
    pub detail: String,
}

impl Counterexample {
    pub fn new(m: &Matroid, detail: impl Into<String>) -> Self {
        Counterexample {
            matroid: json::to_value(m),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub statement: String,
    pub universe: String,
    pub instances_checked: usize,
    pub status: Status,
    /// Instances violating the statement.
    pub counterexamples: Vec<Counterexample>,
    /// Expected witnesses the suite had to find, such as matroids without
    /// the transitivity property.
    pub findings: Vec<Counterexample>,
    pub notes: Vec<String>,
    /// Seconds.
    pub wall_time: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 7, seed: 0 }
    }
}

pub const THEOREM_IDS: [&str; 17] = [
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14", "T15",
    "T16", "T17",
];

/// One-line statement checked by each suite.
pub fn statement(id: &str) -> Option<&'static str> {
    Some(match id {
        "T1" => "U(2,3)-connected iff connected and simple; U(1,3)-connected iff connected and cosimple",
        "T2" => "U(2,4)-connected iff connected, non-binary, and the canonical tree has every binary vertex with at most one element and a non-binary vertex between any two binary vertices with one element each",
        "T3" => "for 3-connected N with at least four elements (U(2,4), MK4, W3): N-connected iff connected, has an N-minor, and the canonical tree satisfies the vertex and path conditions with N-connected vertices",
        "T4" => "MW(2)-connected iff connected and non-uniform",
        "T5" => "a 3-connected matroid is U(1,4)-connected iff it is U(2,n) with n >= 5 or has rank and corank at least 3; dually for U(3,4)",
        "T6" => "a connected simple matroid that is not 3-connected is U(3,4)-connected iff its canonical tree has no degree <= 2 vertex labeled U(2,n) whose neighbors are all cocircuits containing elements",
        "T7" => "for n in {2,3}: U(n,n)-connected iff simple of rank at least n",
        "T8" => "U(0,1)+U(1,1)-connected iff every clonal class is trivial",
        "T9" => "U(1,2)+U(1,1)-connected iff loopless with at most one coloop and at most one free element; dually for U(1,2)+U(0,1)",
        "T10" => "for N in {U(1,2), U(0,2), U(2,2)}: every element of an N-connected matroid with more than two elements can be deleted or contracted keeping N-connectivity",
        "T11" => "explicit matroids where neither deletion nor contraction of some element keeps N-connectivity, for N = U(2,3), U(3,3), U(0,1)+U(1,1)",
        "T12" => "the pair relation is transitive for N in {U(1,2), MW(2)}; counterexamples exist for other small N",
        "T13" => "a fan whose two end pairs are circuits or cocircuits is a component",
        "T14" => "3-connected non-binary matroids have a U(2,4)-minor through every pair; 3-connected matroids of rank and corank at least 3 have a U(3,6), P6, Q6, W3 or MK4 minor through every triple",
        "T15" => "a connected binary matroid has an MK4-minor through every triple iff every vertex of its canonical tree has rank and corank at least 3",
        "T16" => "kappa_N(A,B) <= kappa_M(A,B) for every minor N of M and disjoint A, B in E(N)",
        "T17" => "the canonical tree is independent of split order and reconstructs the matroid",
        _ => return None,
    })
}

const MAX_REPORTED: usize = 25;

struct Suite {
    report: VerificationReport,
    start: Instant,
}

impl Suite {
    fn new(id: &str, universe: impl Into<String>) -> Self {
        Suite {
            report: VerificationReport {
                theorem_id: id.to_string(),
                statement: statement(id).unwrap_or_default().to_string(),
                universe: universe.into(),
                instances_checked: 0,
                status: Status::Pass,
                counterexamples: Vec::new(),
                findings: Vec::new(),
                notes: Vec::new(),
                wall_time: 0.0,
            },
            start: Instant::now(),
        }
    }

    /// Runs `check` over `universe` in parallel; failures are recorded in
    /// universe order.
    fn check_all(
        &mut self,
        universe: &[Matroid],
        check: impl Fn(&Matroid) -> Option<String> + Sync,
    ) {
        let failures: Vec<(usize, String)> = universe
            .par_iter()
            .enumerate()
            .filter_map(|(i, m)| check(m).map(|d| (i, d)))
            .collect();
        self.report.instances_checked += universe.len();
        self.report.notes.push(size_note(universe));
        for (i, d) in failures {
            self.fail(&universe[i], d);
        }
    }

    fn fail(&mut self, m: &Matroid, detail: impl Into<String>) {
        self.report.status = Status::Fail;
        if self.report.counterexamples.len() < MAX_REPORTED {
            self.report
                .counterexamples
                .push(Counterexample::new(m, detail));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.report.notes.push(s.into());
    }

    fn finish(mut self) -> VerificationReport {
        self.report.wall_time = self.start.elapsed().as_secs_f64();
        self.report
    }
}

fn mismatch(name: &str, direct: bool, predicted: bool) -> Option<String> {
    (direct != predicted)
        .then(|| format!("{name}: minor search says {direct}, characterization says {predicted}"))
}

fn universe(max_n: usize, keep: impl Fn(&Matroid) -> bool + Sync) -> Result<Vec<Matroid>> {
    Ok(classes_up_to(max_n)?
        .into_iter()
        .filter(|m| keep(m))
        .collect())
}

/// Instance counts by ground set size, e.g. `"by size: 2:4 3:8"`.
fn size_note(list: &[Matroid]) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for x in list {
        *counts.entry(x.size()).or_insert(0usize) += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(n, c)| format!("{n}:{c}")).collect();
    format!("by size: {}", parts.join(" "))
}

fn describe(max_n: usize, what: &str) -> String {
    format!("{what} on at most {max_n} elements")
}

fn m(expr: &str) -> Matroid {
    named(expr).expect("catalog expression")
}

/// Runs the suite `id`.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    if opts.max_n > enumerate::ENUM_CAP {
        return Err(Error::CapExceeded {
            size: opts.max_n,
            cap: enumerate::ENUM_CAP,
        });
    }
    match id {
        "T1" => t1(opts),
        "T2" => t2(opts),
        "T3" => t3(opts),
        "T4" => t4(opts),
        "T5" => t5(opts),
        "T6" => t6(opts),
        "T7" => t7(opts),
        "T8" => t8(opts),
        "T9" => t9(opts),
        "T10" => t10(opts),
        "T11" => t11(),
        "T12" => t12(opts),
        "T13" => t13(opts),
        "T14" => t14(opts),
        "T15" => t15(opts),
        "T16" => t16(opts),
        "T17" => t17(opts),
        _ => Err(Error::UnknownName(id.to_string())),
    }
}

fn t1(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T1",
        describe(o.max_n, "all classes with at least two elements"),
    );
    let (u23, u13) = (m("U(2,3)"), m("U(1,3)"));
    s.check_all(&universe(o.max_n, |x| x.size() >= 2)?, |x| {
        mismatch(
            "U(2,3)",
            n_connected(x, &u23),
            x.is_connected() && x.is_simple(),
        )
        .or_else(|| {
            mismatch(
                "U(1,3)",
                n_connected(x, &u13),
                x.is_connected() && x.is_cosimple(),
            )
        })
    });
    Ok(s.finish())
}

/// A random 2-sum of catalog pieces with at most `max_size` elements,
/// relabeled `a, b, ...`.
pub fn random_composition<R: Rng>(rng: &mut R, max_size: usize) -> Matroid {
    const PIECES: &[&str] = &[
        "U(2,3)", "U(1,3)", "U(2,4)", "U(1,4)", "U(3,4)", "U(2,5)", "U(3,5)", "MW(2)", "MK4", "W3",
        "Q6", "P6", "U(3,6)",
    ];
    let pick = |rng: &mut R| m(PIECES.choose(rng).unwrap());
    let target = rng.gen_range(4..=max_size);
    let mut cur = pick(rng);
    while cur.size() > max_size {
        cur = pick(rng);
    }
    let mut tries = 0;
    while cur.size() < target && tries < 20 {
        tries += 1;
        let part = pick(rng);
        if cur.size() + part.size() - 2 > max_size {
            continue;
        }
        let p = cur.ground().label(rng.gen_range(0..cur.size())).to_string();
        let q = rng.gen_range(0..part.size());
        let mut next = 0;
        let mut fresh = || loop {
            let l = format!("x{next}");
            next += 1;
            if cur.ground().index_of(&l).is_none() {
                return l;
            }
        };
        let names: Vec<String> = (0..part.size())
            .map(|i| if i == q { p.clone() } else { fresh() })
            .collect();
        let part = part
            .relabeled(|l| names[part.ground().index_of(l).unwrap()].clone())
            .expect("fresh labels");
        cur = two_sum(&cur, &part, &p).expect("catalog pieces are connected");
    }
    let ground = GroundSet::letters(cur.size());
    let old = cur.clone();
    old.relabeled(|l| ground.label(old.ground().index_of(l).unwrap()).to_string())
        .expect("letters are distinct")
}

fn random_compositions(seed: u64, count: usize, max_size: usize) -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_composition(&mut rng, max_size))
        .collect()
}

const COMPOSITIONS: usize = 200;

fn tree_universe(o: &VerifyOptions) -> Result<(Vec<Matroid>, Vec<Matroid>)> {
    Ok((
        universe(o.max_n, |x| x.size() >= 2 && x.is_connected())?,
        random_compositions(o.seed, COMPOSITIONS, 12),
    ))
}

fn t2(o: &VerifyOptions) -> Result<VerificationReport> {
    let (classes, random) = tree_universe(o)?;
    let mut s = Suite::new(
        "T2",
        format!(
            "{}; {COMPOSITIONS} random 2-sums of catalog matroids with at most 12 elements (seed {})",
            describe(o.max_n, "connected classes"),
            o.seed
        ),
    );
    let u24 = m("U(2,4)");
    let check = |x: &Matroid| {
        let t = canonical_tree(x).expect("connected");
        mismatch("U(2,4)", n_connected(x, &u24), t.u24_condition())
    };
    s.check_all(&classes, check);
    s.check_all(&random, check);
    Ok(s.finish())
}

fn t3(o: &VerifyOptions) -> Result<VerificationReport> {
    let (classes, random) = tree_universe(o)?;
    let mut s = Suite::new(
        "T3",
        format!(
            "N in U(2,4), MK4, W3; {}; {COMPOSITIONS} random 2-sums with at most 12 elements (seed {})",
            describe(o.max_n, "connected classes"),
            o.seed
        ),
    );
    let ns = [
        ("U(2,4)", m("U(2,4)")),
        ("MK4", catalog::k4()),
        ("W3", catalog::w3()),
    ];
    let check = |x: &Matroid| {
        let t = canonical_tree(x).expect("connected");
        ns.iter().find_map(|(name, n)| {
            mismatch(
                name,
                n_connected(x, n),
                t.general_condition(n).expect("3-connected N"),
            )
        })
    };
    s.check_all(&classes, check);
    s.check_all(&random, check);
    if s.report.status == Status::Pass {
        s.report.status = Status::ConjecturePass;
        s.note("characterization agrees with minor search on every instance tested");
    }
    Ok(s.finish())
}

fn t4(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T4",
        describe(o.max_n, "all classes with at least two elements"),
    );
    let w2 = catalog::wheel(2);
    s.check_all(&universe(o.max_n, |x| x.size() >= 2)?, |x| {
        mismatch(
            "MW(2)",
            n_connected(x, &w2),
            x.is_connected() && !x.is_uniform(),
        )
    });
    Ok(s.finish())
}

fn t5(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new("T5", describe(o.max_n, "3-connected classes"));
    let (u14, u34) = (m("U(1,4)"), m("U(3,4)"));
    s.check_all(
        &universe(o.max_n, |x| x.size() >= 2 && is_3_connected(x))?,
        |x| {
            let big = x.rank() >= 3 && x.corank() >= 3;
            let line = x.is_uniform() && x.size() >= 5;
            mismatch(
                "U(1,4)",
                n_connected(x, &u14),
                big || (line && x.rank() == 2),
            )
            .or_else(|| {
                mismatch(
                    "U(3,4)",
                    n_connected(x, &u34),
                    big || (line && x.corank() == 2),
                )
            })
        },
    );
    Ok(s.finish())
}

fn t6(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T6",
        describe(o.max_n, "connected simple classes that are not 3-connected") + ", plus MK23",
    );
    let u34 = m("U(3,4)");
    let mut list = universe(o.max_n, |x| {
        x.size() >= 2 && x.is_connected() && x.is_simple() && !is_3_connected(x)
    })?;
    list.push(catalog::k23());
    s.check_all(&list, |x| {
        let t = canonical_tree(x).expect("connected");
        mismatch(
            "U(3,4)",
            n_connected(x, &u34),
            t.u34_forbidden_config_absent(),
        )
    });
    let k23 = catalog::k23();
    let t = canonical_tree(&k23)?;
    if !n_connected(&k23, &u34) {
        s.fail(&k23, "MK23 is not U(3,4)-connected");
    }
    if let Some(v) = t.vertices().iter().position(|v| n_connected(v, &u34)) {
        s.fail(&k23, format!("tree vertex {v} of MK23 is U(3,4)-connected"));
    }
    Ok(s.finish())
}

fn t7(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T7",
        describe(o.max_n, "all classes with at least two elements"),
    );
    let ns = [(2, m("U(2,2)")), (3, m("U(3,3)"))];
    s.check_all(&universe(o.max_n, |x| x.size() >= 2)?, |x| {
        ns.iter().find_map(|(r, n)| {
            mismatch(
                &format!("U({r},{r})"),
                n_connected(x, n),
                x.is_simple() && x.rank() >= *r,
            )
        })
    });
    Ok(s.finish())
}

fn t8(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T8",
        describe(o.max_n, "all classes with at least two elements"),
    );
    let n = m("U(0,1)+U(1,1)");
    s.check_all(&universe(o.max_n, |x| x.size() >= 2)?, |x| {
        mismatch(
            "U(0,1)+U(1,1)",
            n_connected(x, &n),
            x.clonal_classes().len() == x.size(),
        )
    });
    Ok(s.finish())
}

fn free_count(x: &Matroid) -> usize {
    (0..x.size()).filter(|&e| x.is_free(e)).count()
}

/// Elements lying in every dependent flat.
fn in_every_dependent_flat(x: &Matroid) -> usize {
    let dependent: Vec<Mask> = x
        .flats()
        .into_iter()
        .filter(|&f| !x.is_independent(f))
        .collect();
    (0..x.size())
        .filter(|&e| dependent.iter().all(|&f| bits::contains(f, e)))
        .count()
}

fn t9(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T9",
        describe(o.max_n, "all classes with at least two elements"),
    );
    let (n, nd) = (m("U(1,2)+U(1,1)"), m("U(1,2)+U(0,1)"));
    s.check_all(&universe(o.max_n, |x| x.size() >= 2)?, |x| {
        let loops = bits::size(x.loops());
        let coloops = bits::size(x.coloops());
        let direct_dual = n_connected(x, &nd);
        mismatch(
            "U(1,2)+U(1,1)",
            n_connected(x, &n),
            loops == 0 && coloops <= 1 && free_count(x) <= 1,
        )
        .or_else(|| {
            mismatch(
                "U(1,2)+U(0,1) (dual form)",
                direct_dual,
                coloops == 0 && loops <= 1 && free_count(&x.dual()) <= 1,
            )
        })
        .or_else(|| {
            mismatch(
                "U(1,2)+U(0,1) (dependent-flat form)",
                direct_dual,
                coloops == 0 && in_every_dependent_flat(x) <= 1,
            )
        })
    });
    Ok(s.finish())
}

fn t10(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T10",
        describe(o.max_n, "N-connected classes with at least three elements")
            + ", N in U(1,2), U(0,2), U(2,2)",
    );
    let ns = [
        ("U(1,2)", m("U(1,2)")),
        ("U(0,2)", m("U(0,2)")),
        ("U(2,2)", m("U(2,2)")),
    ];
    let list = universe(o.max_n, |x| x.size() >= 3)?;
    for (name, n) in &ns {
        let members: Vec<Matroid> = list.iter().filter(|x| n_connected(x, n)).cloned().collect();
        s.check_all(&members, |x| {
            let rep = hereditary_removal_check(x, n).expect("precondition holds");
            let f = rep.failures();
            (!f.is_empty())
                .then(|| format!("{name}: no removal keeps N-connectivity at {}", f.join(",")))
        });
    }
    Ok(s.finish())
}

fn t11() -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T11",
        "explicit constructions for U(2,3), U(3,3), U(0,1)+U(1,1)",
    );
    let u23 = m("U(2,3)");
    let built = catalog::proof_constructions(&u23)?;
    match built.get(1) {
        Some(c) => {
            let m4 = &c.matroid;
            s.report.instances_checked += 1;
            let rep = hereditary_removal_check(m4, &u23)?;
            if rep.failures().is_empty() {
                s.fail(m4, "U(2,3): every element removable");
            } else {
                s.report.findings.push(Counterexample::new(
                    m4,
                    format!(
                        "U(2,3): neither deletion nor contraction keeps N-connectivity at {}",
                        rep.failures().join(",")
                    ),
                ));
            }
        }
        None => s.fail(
            &built[0].matroid,
            "U(2,3): no reduction of the doubled parallel connection",
        ),
    }

    let u33 = m("U(3,3)");
    let w = m("U(2,3)+U(1,1)");
    s.report.instances_checked += 1;
    let rep = hereditary_removal_check(&w, &u33)?;
    let coloop = w
        .ground()
        .label(w.coloops().trailing_zeros() as usize)
        .to_string();
    if rep.failures().contains(&coloop) {
        s.report.findings.push(Counterexample::new(
            &w,
            format!("U(3,3): removal fails at the coloop {coloop}"),
        ));
    } else {
        s.fail(&w, "U(3,3): the coloop is removable");
    }

    let n = m("U(0,1)+U(1,1)");
    let k4 = catalog::k4();
    s.report.instances_checked += 1;
    let rep = hereditary_removal_check(&k4, &n)?;
    if rep.failures().len() == k4.size() {
        s.report.findings.push(Counterexample::new(
            &k4,
            "U(0,1)+U(1,1): removal fails at every element",
        ));
    } else {
        s.fail(
            &k4,
            format!(
                "U(0,1)+U(1,1): removal fails only at {}",
                rep.failures().join(",")
            ),
        );
    }
    Ok(s.finish())
}

/// Enumerated classes larger than `n` together with the explicit
/// constructions for `n`.
pub fn transitivity_universe(n: &Matroid, max_n: usize) -> Result<Vec<Matroid>> {
    let mut list = universe(max_n, |x| x.size() > n.size())?;
    if let Ok(c) = catalog::proof_constructions(n) {
        list.extend(c.into_iter().map(|c| c.matroid));
    }
    Ok(list)
}

fn t12(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T12",
        describe(o.max_n, "all classes")
            + ", plus explicit parallel, series and truncated constructions",
    );
    let list = universe(o.max_n, |x| x.size() >= 2)?;
    for (name, n) in [("U(1,2)", m("U(1,2)")), ("MW(2)", catalog::wheel(2))] {
        s.check_all(&list, |x| {
            connectivity::is_transitive(x, &n)
                .expect("at least two elements")
                .map(|(e, f, g)| format!("{name}: {e}~{f}, {f}~{g} but not {e}~{g}"))
        });
    }
    for name in [
        "U(2,2)", "U(0,2)", "U(2,3)", "U(1,3)", "U(2,4)", "U(1,4)", "U(3,4)", "U(2,5)",
    ] {
        let n = m(name);
        let candidates = transitivity_universe(&n, o.max_n)?;
        s.report.instances_checked += candidates.len();
        match connectivity::search_transitivity_counterexample(&n, &candidates) {
            Some((x, (e, f, g))) => {
                if name == "U(2,2)" && x.size() > 3 {
                    s.fail(
                        &x,
                        "U(2,2): first counterexample has more than three elements",
                    );
                }
                s.report.findings.push(Counterexample::new(
                    &x,
                    format!("{name}: {e}~{f}, {f}~{g} but not {e}~{g}"),
                ));
            }
            None => s.fail(
                &n,
                format!("{name}: no transitivity counterexample in the universe"),
            ),
        }
    }
    Ok(s.finish())
}

fn t13(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new("T13", describe(o.max_n, "all classes"));
    let list = universe(o.max_n, |_| true)?;
    let fans: usize = list
        .par_iter()
        .map(|x| connectivity::check_special_fan_lemma(x).fans_checked)
        .sum();
    s.check_all(&list, |x| {
        let rep = connectivity::check_special_fan_lemma(x);
        rep.violations
            .first()
            .map(|f| format!("fan {} is not a component", f.labels(x).join(",")))
    });
    s.note(format!(
        "{fans} fan orderings with circuit or cocircuit end pairs examined"
    ));
    Ok(s.finish())
}

fn triples(n: usize) -> Vec<Mask> {
    bits::k_subsets(bits::full(n), 3).collect()
}

fn t14(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new("T14", describe(o.max_n, "3-connected classes"));
    let u24 = m("U(2,4)");
    let three = universe(o.max_n, |x| x.size() >= 2 && is_3_connected(x))?;
    let nonbinary: Vec<Matroid> = three.iter().filter(|x| !x.is_binary()).cloned().collect();
    s.check_all(&nonbinary, |x| {
        minor::pair_relation(x, &u24)
            .unwrap()
            .first_missing()
            .map(|(e, f)| {
                format!(
                    "no U(2,4)-minor through {}",
                    x.ground().labels_of(bits::bit(e) | bits::bit(f)).join(",")
                )
            })
    });
    let oracles = catalog::triple_oracles();
    let big: Vec<Matroid> = three
        .iter()
        .filter(|x| x.rank() >= 3 && x.corank() >= 3)
        .cloned()
        .collect();
    s.check_all(&big, |x| {
        triples(x.size())
            .into_par_iter()
            .find_first(|&z| {
                minor::has_minor_using_triple(x, &oracles, z)
                    .unwrap()
                    .is_none()
            })
            .map(|z| {
                format!(
                    "no listed minor through {}",
                    x.ground().labels_of(z).join(",")
                )
            })
    });
    s.note(format!(
        "{} non-binary, {} of rank and corank >= 3",
        nonbinary.len(),
        big.len()
    ));
    Ok(s.finish())
}

fn t15(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T15",
        describe(
            o.max_n,
            "connected binary classes with at least three elements",
        ),
    );
    let k4 = catalog::k4();
    let list = universe(o.max_n, |x| {
        x.size() >= 3 && x.is_connected() && x.is_binary()
    })?;
    s.check_all(&list, |x| {
        let search = MinorSearch::new(x, &k4);
        let all = triples(x.size())
            .into_par_iter()
            .all(|z| search.find(z).is_some());
        let t = canonical_tree(x).expect("connected");
        mismatch("MK4 through every triple", all, t.mk4_vertex_condition())
    });
    Ok(s.finish())
}

/// A random matroid with at most `max_size` elements: an enumerated class, a
/// random 2-sum, or the cycle matroid of a random multigraph.
fn random_matroid<R: Rng>(rng: &mut R, pool: &[Matroid], max_size: usize) -> Matroid {
    match rng.gen_range(0..3) {
        0 => pool.choose(rng).unwrap().clone(),
        1 => random_composition(rng, max_size),
        _ => {
            let edges = rng.gen_range(2..=max_size);
            let verts = rng.gen_range(2..=6);
            let list: Vec<(String, String, String)> = (0..edges)
                .map(|i| {
                    (
                        rng.gen_range(0..verts).to_string(),
                        rng.gen_range(0..verts).to_string(),
                        letter_label(i),
                    )
                })
                .collect();
            Matroid::from_graph(&list).expect("small graph")
        }
    }
}

const KAPPA_INSTANCES: usize = 1000;

fn t16(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T16",
        format!(
            "{KAPPA_INSTANCES} random (M, minor, A, B) with |E(M)| <= 10 (seed {})",
            o.seed
        ),
    );
    let pool = universe(o.max_n.min(7), |x| x.size() >= 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut instances = Vec::with_capacity(KAPPA_INSTANCES);
    while instances.len() < KAPPA_INSTANCES {
        let x = random_matroid(&mut rng, &pool, 10);
        let (mut c, mut d) = (0, 0);
        for e in 0..x.size() {
            match rng.gen_range(0..5) {
                0 => c |= bits::bit(e),
                1 => d |= bits::bit(e),
                _ => {}
            }
        }
        let keep = x.full() & !(c | d);
        if bits::size(keep) < 2 {
            continue;
        }
        let (mut a, mut b) = (0, 0);
        for e in bits::elements(keep) {
            match rng.gen_range(0..3) {
                0 => a |= bits::bit(e),
                1 => b |= bits::bit(e),
                _ => {}
            }
        }
        if a == 0 || b == 0 {
            continue;
        }
        instances.push((x, c, d, a, b));
    }
    let failures: Vec<(usize, String)> = instances
        .par_iter()
        .enumerate()
        .filter_map(|(i, (x, c, d, a, b))| {
            let n = x.minor(*c, *d).unwrap();
            let g = n.ground();
            let am = g.mask_of(&x.ground().labels_of(*a)).unwrap();
            let bm = g.mask_of(&x.ground().labels_of(*b)).unwrap();
            let (kn, km) = (kappa(&n, am, bm).unwrap(), kappa(x, *a, *b).unwrap());
            (kn > km).then(|| {
                let l = |s: Mask| x.ground().labels_of(s);
                (
                    i,
                    format!(
                        "contract {:?} delete {:?}, A={:?}, B={:?}: {kn} > {km}",
                        l(*c),
                        l(*d),
                        l(*a),
                        l(*b)
                    ),
                )
            })
        })
        .collect();
    s.report.instances_checked = instances.len();
    for (i, d) in failures {
        s.fail(&instances[i].0, d);
    }
    Ok(s.finish())
}

const SPLIT_ORDERS: usize = 10;

/// Structural checks on a canonical tree; the first problem found.
pub fn tree_problem(x: &Matroid, seed: u64) -> Option<String> {
    let t = match canonical_tree(x) {
        Ok(t) => t,
        Err(e) => return Some(format!("decomposition failed: {e}")),
    };
    match t.reconstruct() {
        Ok(r) if r == *x => {}
        Ok(_) => return Some("reconstruction differs".into()),
        Err(e) => return Some(format!("reconstruction failed: {e}")),
    }
    let k = t.vertices().len();
    for (i, e) in t.edges().iter().enumerate() {
        if t.displayed_separation(i).map(|s| s.order) != Ok(1) {
            return Some(format!(
                "edge {} displays no exact 2-separation",
                e.basepoint
            ));
        }
        let (a, b) = (t.class(e.ends.0), t.class(e.ends.1));
        if a == b && a != VertexClass::ThreeConnected {
            return Some(format!(
                "edge {} joins two {} vertices",
                e.basepoint,
                a.name()
            ));
        }
    }
    for (v, label) in t.vertices().iter().enumerate() {
        if k > 1 && label.size() < 3 {
            return Some(format!("vertex {v} has fewer than three elements"));
        }
        if t.class(v) == VertexClass::ThreeConnected && !is_3_connected(label) {
            return Some(format!("vertex {v} is not 3-connected"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ iso::Fingerprint::of(x).digest().len() as u64);
    for round in 0..SPLIT_ORDERS {
        let other = canonical_tree_with(x, &mut rng).expect("connected");
        if !same_up_to_basepoints(&t, &other) {
            return Some(format!("split order {round} gives a different tree"));
        }
        let mut order: Vec<usize> = (0..other.edges().len()).collect();
        order.shuffle(&mut rng);
        if other.reconstruct_in_order(&order).ok().as_ref() != Some(x) {
            return Some(format!("reconstruction in shuffled order {round} differs"));
        }
    }
    None
}

fn t17(o: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Suite::new(
        "T17",
        describe(o.max_n, "connected classes")
            + &format!(
                ", {SPLIT_ORDERS} random split orders each (seed {})",
                o.seed
            ),
    );
    s.check_all(
        &universe(o.max_n, |x| x.size() >= 2 && x.is_connected())?,
        |x| tree_problem(x, o.seed),
    );
    Ok(s.finish())
}

/// Every suite, in order.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    THEOREM_IDS.iter().map(|id| verify(id, opts)).collect()
}
