//! Acceptance gate: one PASS/FAIL line per criterion. Each criterion runs the
//! library's verification suite and independently re-derives the same facts
//! with the brute-force oracle in `common`.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::Target;
use nconn::bits::{self, Mask};
use nconn::catalog::{self, named};
use nconn::connectivity;
use nconn::enumerate::classes;
use nconn::minor;
use nconn::treedecomp::{canonical_tree, VertexClass};
use nconn::verify::{self, Status, VerifyOptions};
use nconn::Matroid;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

const MAX_N: usize = 7;

struct Ctx {
    all: Vec<Matroid>,
}

impl Ctx {
    fn universe(&self, keep: impl Fn(&Matroid) -> bool + Sync) -> Vec<Matroid> {
        self.all.par_iter().filter(|m| keep(m)).cloned().collect()
    }
}

fn m(expr: &str) -> Matroid {
    named(expr).unwrap()
}

fn suite(id: &str) -> Result<verify::VerificationReport, String> {
    let r = verify::verify(id, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    match r.status {
        Status::Fail => Err(format!(
            "{id} suite failed: {}",
            r.counterexamples
                .first()
                .map(|c| c.detail.as_str())
                .unwrap_or("no detail")
        )),
        _ => Ok(r),
    }
}

/// Oracle N-connectivity, library N-connectivity and the characterization
/// must agree on every instance.
fn agree(
    universe: &[Matroid],
    n_name: &str,
    n: &Matroid,
    characterization: impl Fn(&Matroid) -> bool + Sync,
) -> Result<usize, String> {
    let t = Target::new(n);
    let bad = universe.par_iter().find_first(|x| {
        let oracle = common::n_connected(x, &t);
        oracle != minor::n_connected(x, n) || oracle != characterization(x)
    });
    match bad {
        Some(x) => Err(format!(
            "{n_name}: disagreement on {}",
            nconn::json::to_string(x)
        )),
        None => Ok(universe.len()),
    }
}

fn c1(ctx: &Ctx) -> Outcome {
    suite("T1")?;
    let u = ctx.universe(|x| x.size() >= 2);
    agree(&u, "U(2,3)", &m("U(2,3)"), |x| {
        common::is_connected(x) && common::is_simple(x)
    })?;
    agree(&u, "U(1,3)", &m("U(1,3)"), |x| {
        common::is_connected(x) && common::is_cosimple(x)
    })?;
    Ok(format!("{} classes, U(2,3) and U(1,3)", u.len()))
}

fn c2(ctx: &Ctx) -> Outcome {
    suite("T4")?;
    let u = ctx.universe(|x| x.size() >= 2);
    agree(&u, "MW(2)", &catalog::wheel(2), |x| {
        common::is_connected(x) && !common::is_uniform(x)
    })?;
    let sevens = u.iter().filter(|x| x.size() == 7).count();
    Ok(format!("{} classes ({sevens} on 7 elements)", u.len()))
}

fn c3(ctx: &Ctx) -> Outcome {
    suite("T7")?;
    let u = ctx.universe(|x| x.size() >= 2);
    for r in [2, 3] {
        let name = format!("U({r},{r})");
        agree(&u, &name, &m(&name), |x| {
            common::is_simple(x) && x.rank() >= r
        })?;
    }
    Ok(format!("{} classes, n = 2, 3", u.len()))
}

fn c4(ctx: &Ctx) -> Outcome {
    suite("T8")?;
    let u = ctx.universe(|x| x.size() >= 2);
    agree(&u, "U(0,1)+U(1,1)", &m("U(0,1)+U(1,1)"), |x| {
        (0..x.size()).all(|e| (e + 1..x.size()).all(|f| !common::are_clones(x, e, f)))
    })?;
    Ok(format!("{} classes", u.len()))
}

fn c5(ctx: &Ctx) -> Outcome {
    suite("T9")?;
    let u = ctx.universe(|x| x.size() >= 2);
    let free = |x: &Matroid| (0..x.size()).filter(|&e| common::is_free(x, e)).count();
    agree(&u, "U(1,2)+U(1,1)", &m("U(1,2)+U(1,1)"), |x| {
        common::loops(x) == 0 && common::coloops(x) <= 1 && free(x) <= 1
    })?;
    agree(&u, "U(1,2)+U(0,1)", &m("U(1,2)+U(0,1)"), |x| {
        common::coloops(x) == 0 && common::loops(x) <= 1 && free(&x.dual()) <= 1
    })?;
    Ok(format!("{} classes, both forms", u.len()))
}

fn c6(ctx: &Ctx) -> Outcome {
    suite("T5")?;
    let u = ctx.universe(|x| x.size() >= 2 && common::is_3_connected(x));
    let corank = |x: &Matroid| x.size() - x.rank();
    let big = |x: &Matroid| x.rank() >= 3 && corank(x) >= 3;
    let line = |x: &Matroid| common::is_uniform(x) && x.size() >= 5;
    agree(&u, "U(1,4)", &m("U(1,4)"), |x| {
        big(x) || (line(x) && x.rank() == 2)
    })?;
    agree(&u, "U(3,4)", &m("U(3,4)"), |x| {
        big(x) || (line(x) && corank(x) == 2)
    })?;
    Ok(format!("{} 3-connected classes", u.len()))
}

fn compositions() -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(VerifyOptions::default().seed);
    (0..200)
        .map(|_| verify::random_composition(&mut rng, 12))
        .collect()
}

fn c7(ctx: &Ctx) -> Outcome {
    suite("T2")?;
    let t3 = suite("T3")?;
    let mut u = ctx.universe(|x| x.size() >= 2 && common::is_connected(x));
    let classes = u.len();
    u.extend(compositions());
    agree(&u, "U(2,4)", &m("U(2,4)"), |x| {
        canonical_tree(x).unwrap().u24_condition()
    })?;
    for (name, n) in [("MK4", catalog::k4()), ("W3", catalog::w3())] {
        agree(&u, name, &n, |x| {
            canonical_tree(x).unwrap().general_condition(&n).unwrap()
        })?;
    }
    let n = m("U(2,4)");
    agree(&u, "U(2,4) general", &n, |x| {
        canonical_tree(x).unwrap().general_condition(&n).unwrap()
    })?;
    Ok(format!(
        "{classes} connected classes + 200 random 2-sums; U(2,4) tree theorem and general condition for U(2,4), MK4, W3 ({})",
        t3.status.as_str()
    ))
}

fn c8(ctx: &Ctx) -> Outcome {
    suite("T6")?;
    let mut u = ctx.universe(|x| {
        x.size() >= 2
            && common::is_connected(x)
            && common::is_simple(x)
            && !common::is_3_connected(x)
    });
    let k23 = catalog::k23();
    u.push(k23.clone());
    let u34 = m("U(3,4)");
    agree(&u, "U(3,4)", &u34, |x| {
        canonical_tree(x).unwrap().u34_forbidden_config_absent()
    })?;
    let t = Target::new(&u34);
    if !common::n_connected(&k23, &t) {
        return Err("MK23 is not U(3,4)-connected".into());
    }
    let tree = canonical_tree(&k23).unwrap();
    if tree.vertices().iter().any(|v| common::n_connected(v, &t)) {
        return Err("MK23 has a U(3,4)-connected tree vertex".into());
    }
    Ok(format!(
        "{} instances incl. MK23; MK23 has no U(3,4)-connected vertex",
        u.len()
    ))
}

fn removable(x: &Matroid, t: &Target, e: usize) -> bool {
    common::n_connected(&x.delete(bits::bit(e)), t)
        || common::n_connected(&x.contract(bits::bit(e)), t)
}

fn c9(ctx: &Ctx) -> Outcome {
    suite("T10")?;
    let mut checked = 0;
    for name in ["U(1,2)", "U(0,2)", "U(2,2)"] {
        let t = Target::new(&m(name));
        let u = ctx.universe(|x| x.size() > 2 && common::n_connected(x, &t));
        if let Some(x) = u
            .par_iter()
            .find_first(|x| !(0..x.size()).all(|e| removable(x, &t, e)))
        {
            return Err(format!("{name}: {}", nconn::json::to_string(x)));
        }
        checked += u.len();
    }
    Ok(format!("{checked} (N, M) pairs"))
}

fn c10(_: &Ctx) -> Outcome {
    let r = suite("T11")?;
    if r.findings.len() != 3 {
        return Err(format!(
            "expected 3 constructions, got {}",
            r.findings.len()
        ));
    }
    let u23 = m("U(2,3)");
    let m4 = catalog::proof_constructions(&u23).map_err(|e| e.to_string())?[1]
        .matroid
        .clone();
    let t = Target::new(&u23);
    let stuck: Vec<String> = (0..m4.size())
        .filter(|&e| !removable(&m4, &t, e))
        .map(|e| m4.ground().label(e).to_string())
        .collect();
    if !common::n_connected(&m4, &t) || stuck.is_empty() {
        return Err("M4 does not witness failure for U(2,3)".into());
    }
    let w = m("U(2,3)+U(1,1)");
    let t = Target::new(&m("U(3,3)"));
    if !common::n_connected(&w, &t) || removable(&w, &t, 3) {
        return Err("U(2,3)+U(1,1) does not fail at its coloop".into());
    }
    let k4 = catalog::k4();
    let t = Target::new(&m("U(0,1)+U(1,1)"));
    if !common::n_connected(&k4, &t) || (0..6).any(|e| removable(&k4, &t, e)) {
        return Err("MK4 does not fail at every element".into());
    }
    Ok(format!(
        "M4 ({} elements) stuck at {}; coloop of U(2,3)+U(1,1); all of MK4",
        m4.size(),
        stuck.join(",")
    ))
}

fn c11(ctx: &Ctx) -> Outcome {
    let r = suite("T12")?;
    let u = ctx.universe(|x| x.size() >= 2);
    for (name, n) in [("U(1,2)", m("U(1,2)")), ("MW(2)", catalog::wheel(2))] {
        let t = Target::new(&n);
        if let Some(x) = u
            .par_iter()
            .find_first(|x| common::transitivity_violation(x, &t).is_some())
        {
            return Err(format!(
                "{name} not transitive on {}",
                nconn::json::to_string(x)
            ));
        }
    }
    let expected = [
        "U(2,2)", "U(0,2)", "U(2,3)", "U(1,3)", "U(2,4)", "U(1,4)", "U(3,4)", "U(2,5)",
    ];
    if r.findings.len() != expected.len() {
        return Err(format!(
            "{} counterexamples, expected {}",
            r.findings.len(),
            expected.len()
        ));
    }
    let mut sizes = Vec::new();
    for (name, f) in expected.iter().zip(&r.findings) {
        let x = nconn::json::from_value(&f.matroid).map_err(|e| e.to_string())?;
        if !f.detail.starts_with(name)
            || common::transitivity_violation(&x, &Target::new(&m(name))).is_none()
        {
            return Err(format!(
                "{name}: reported counterexample does not re-verify"
            ));
        }
        sizes.push(format!("{name}:{}", x.size()));
    }
    if !sizes[0].ends_with(":3") {
        return Err("U(2,2) counterexample is larger than U(1,2)+U(1,1)".into());
    }
    Ok(format!(
        "transitive for U(1,2), MW(2) on {} classes; counterexamples {}",
        u.len(),
        sizes.join(" ")
    ))
}

/// Every fan ordering with both end pairs a circuit or cocircuit, by
/// exhaustive search over sequences; returns (count, violations).
fn brute_fans(x: &Matroid) -> (usize, usize) {
    fn grow(
        x: &Matroid,
        seq: &mut Vec<usize>,
        first_triangle: Option<bool>,
        acc: &mut (usize, usize),
    ) {
        let k = seq.len();
        if k >= 3 {
            let ends = |a: usize, b: usize| {
                let s = bits::bit(a) | bits::bit(b);
                common::is_circuit(x, s) || common::is_cocircuit(x, s)
            };
            if ends(seq[0], seq[1]) && ends(seq[k - 2], seq[k - 1]) {
                acc.0 += 1;
                let set = seq.iter().fold(0, |s, &e| s | bits::bit(e));
                if !common::is_component(x, set) {
                    acc.1 += 1;
                }
            }
        }
        let used: Mask = seq.iter().fold(0, |s, &e| s | bits::bit(e));
        for c in 0..x.size() {
            if bits::contains(used, c) {
                continue;
            }
            if k < 2 {
                seq.push(c);
                grow(x, seq, first_triangle, acc);
                seq.pop();
                continue;
            }
            let tri = bits::bit(seq[k - 2]) | bits::bit(seq[k - 1]) | bits::bit(c);
            let bits3 = bits::size(tri) == 3;
            let options: Vec<bool> = match first_triangle {
                Some(t) => vec![t ^ ((k - 2) % 2 == 1)],
                None => vec![true, false],
            };
            for triangle in options {
                let holds = bits3
                    && if triangle {
                        common::is_circuit(x, tri)
                    } else {
                        common::is_cocircuit(x, tri)
                    };
                if holds {
                    let start = first_triangle.unwrap_or(triangle);
                    seq.push(c);
                    grow(x, seq, Some(start), acc);
                    seq.pop();
                }
            }
        }
    }
    let mut acc = (0, 0);
    let mut seq = Vec::new();
    grow(x, &mut seq, None, &mut acc);
    acc
}

fn c12(ctx: &Ctx) -> Outcome {
    suite("T13")?;
    let per: Vec<((usize, usize), usize)> = ctx
        .all
        .par_iter()
        .map(|x| {
            (
                brute_fans(x),
                connectivity::check_special_fan_lemma(x).fans_checked,
            )
        })
        .collect();
    let brute: usize = per.iter().map(|p| p.0 .0).sum();
    let violations: usize = per.iter().map(|p| p.0 .1).sum();
    let library: usize = per.iter().map(|p| p.1).sum();
    if violations > 0 {
        return Err(format!("{violations} fans are not components"));
    }
    if brute != library {
        return Err(format!(
            "oracle found {brute} qualifying fan orderings, library {library}"
        ));
    }
    Ok(format!(
        "{} classes, {brute} qualifying fan orderings, 0 violations",
        ctx.all.len()
    ))
}

fn c13(ctx: &Ctx) -> Outcome {
    suite("T14")?;
    let u24 = Target::new(&m("U(2,4)"));
    let three = ctx.universe(|x| x.size() >= 2 && common::is_3_connected(x));
    let nonbinary: Vec<&Matroid> = three
        .iter()
        .filter(|x| !common::used_sets(x, &u24).is_empty())
        .collect();
    if let Some(x) = nonbinary
        .par_iter()
        .find_first(|x| !common::n_connected(x, &u24))
    {
        return Err(format!(
            "U(2,4) misses a pair of {}",
            nconn::json::to_string(x)
        ));
    }
    let oracles: Vec<Target> = catalog::triple_oracles()
        .iter()
        .map(|(_, n)| Target::new(n))
        .collect();
    let big: Vec<&Matroid> = three
        .iter()
        .filter(|x| x.rank() >= 3 && x.size() - x.rank() >= 3)
        .collect();
    let bad = big.par_iter().find_first(|x| {
        let used: Vec<Mask> = oracles
            .iter()
            .flat_map(|t| common::used_sets(x, t))
            .collect();
        bits::k_subsets(x.full(), 3).any(|z| !used.iter().any(|&s| s & z == z))
    });
    if let Some(x) = bad {
        return Err(format!(
            "a triple misses every listed minor in {}",
            nconn::json::to_string(x)
        ));
    }
    Ok(format!(
        "{} non-binary, {} of rank and corank >= 3",
        nonbinary.len(),
        big.len()
    ))
}

fn c14(ctx: &Ctx) -> Outcome {
    suite("T15")?;
    let u24 = Target::new(&m("U(2,4)"));
    let k4 = Target::new(&catalog::k4());
    let u = ctx.universe(|x| {
        x.size() >= 3 && common::is_connected(x) && common::used_sets(x, &u24).is_empty()
    });
    let bad = u.par_iter().find_first(|x| {
        let used = common::used_sets(x, &k4);
        let all = bits::k_subsets(x.full(), 3).all(|z| used.iter().any(|&s| s & z == z));
        all != canonical_tree(x).unwrap().mk4_vertex_condition()
    });
    match bad {
        Some(x) => Err(format!("disagreement on {}", nconn::json::to_string(x))),
        None => Ok(format!("{} connected binary classes", u.len())),
    }
}

fn c15(ctx: &Ctx) -> Outcome {
    suite("T16")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b61707061);
    let mut instances = Vec::new();
    while instances.len() < 1000 {
        let x = if rng.gen_bool(0.5) {
            ctx.all[rng.gen_range(0..ctx.all.len())].clone()
        } else {
            verify::random_composition(&mut rng, 10)
        };
        let n = x.size();
        let roles: Vec<u8> = (0..n).map(|_| rng.gen_range(0..5)).collect();
        let pick = |r: u8| {
            (0..n)
                .filter(|&e| roles[e] == r)
                .fold(0, |s, e| s | bits::bit(e))
        };
        let (c, d, a, b) = (pick(0), pick(1), pick(2), pick(3));
        if a != 0 && b != 0 {
            instances.push((x, c, d, a, b));
        }
    }
    let bad = instances.par_iter().find_first(|(x, c, d, a, b)| {
        let minor = x.minor(*c, *d).unwrap();
        let relabel = |s: Mask| minor.ground().mask_of(&x.ground().labels_of(s)).unwrap();
        common::kappa(&minor, relabel(*a), relabel(*b)) > common::kappa(x, *a, *b)
    });
    match bad {
        Some(_) => Err("kappa increased under taking a minor".into()),
        None => Ok("1000 suite instances + 1000 oracle instances".into()),
    }
}

fn c16(ctx: &Ctx) -> Outcome {
    suite("T17")?;
    let u = ctx.universe(|x| x.size() >= 2 && common::is_connected(x));
    let problem = u.par_iter().find_map_first(|x| {
        let t = canonical_tree(x).unwrap();
        if t.reconstruct().ok().as_ref() != Some(x) {
            return Some("reconstruction".to_string());
        }
        for i in 0..t.edges().len() {
            let s = t.displayed_separation(i).unwrap();
            if common::lambda(x, s.side_x) != 1
                || bits::size(s.side_x) < 2
                || bits::size(s.side_y) < 2
            {
                return Some(format!("edge {i} is not an exact 2-separation"));
            }
            let (a, b) = t.edges()[i].ends;
            if t.class(a) == t.class(b) && t.class(a) != VertexClass::ThreeConnected {
                return Some(format!("edge {i} joins two {} vertices", t.class(a).name()));
            }
        }
        let many = t.vertices().len() > 1;
        for (v, label) in t.vertices().iter().enumerate() {
            let ok = match t.class(v) {
                VertexClass::Circuit => common::is_circuit(label, label.full()),
                VertexClass::Cocircuit => common::is_cocircuit(label, label.full()),
                VertexClass::ThreeConnected => common::is_3_connected(label),
            };
            if !ok || (many && label.size() < 3) {
                return Some(format!("vertex {v} is malformed"));
            }
        }
        None
    });
    match problem {
        Some(p) => Err(p),
        None => Ok(format!(
            "{} connected classes, 10 random split orders each",
            u.len()
        )),
    }
}

fn c17(_: &Ctx) -> Outcome {
    let mut counts = Vec::new();
    for n in 0..=5 {
        let brute: HashSet<Vec<Mask>> = common::all_basis_families(n)
            .par_iter()
            .map(|f| common::canonical(n, f))
            .collect();
        let lib: HashSet<Vec<Mask>> = classes(n)
            .unwrap()
            .par_iter()
            .map(|x| common::canonical(n, &common::basis_family(n, |s| x.rank_of(s))))
            .collect();
        if brute != lib {
            return Err(format!(
                "n = {n}: oracle {} classes, library {}",
                brute.len(),
                lib.len()
            ));
        }
        counts.push(brute.len());
    }
    if counts != [1, 2, 4, 8, 17, 38] {
        return Err(format!("counts {counts:?}"));
    }
    let mut larger = BTreeMap::new();
    for n in 0..=MAX_N {
        let list = classes(n).unwrap();
        let forms: Vec<Vec<Mask>> = list
            .par_iter()
            .map(|x| common::canonical(n, &common::basis_family(n, |s| x.rank_of(s))))
            .collect();
        let set: HashSet<&Vec<Mask>> = forms.iter().collect();
        if set.len() != forms.len() {
            return Err(format!("n = {n}: isomorphic classes listed twice"));
        }
        let closed = list.par_iter().all(|x| {
            let d = x.dual();
            set.contains(&common::canonical(
                n,
                &common::basis_family(n, |s| d.rank_of(s)),
            ))
        });
        if !closed {
            return Err(format!("n = {n}: not closed under duality"));
        }
        larger.insert(n, list.len());
    }
    Ok(format!(
        "n = 0..5: {counts:?} (oracle); n = 6, 7: {}, {}; distinct and dual-closed for n <= 7",
        larger[&6], larger[&7]
    ))
}

fn main() -> ExitCode {
    let ctx = Ctx {
        all: nconn::enumerate::classes_up_to(MAX_N).expect("enumeration"),
    };
    let criteria: [Criterion; 17] = [
        ("T1 U(2,3)/U(1,3)-connectivity", c1),
        ("T4 MW(2)-connectivity", c2),
        ("T7 U(n,n)-connectivity", c3),
        ("T8 trivial clonal classes", c4),
        ("T9 free elements", c5),
        ("T5 U(1,4)/U(3,4) on 3-connected", c6),
        ("T2/T3 tree theorems", c7),
        ("T6 U(3,4) forbidden configuration", c8),
        ("T10 hereditary removal", c9),
        ("T11 removal counterexamples", c10),
        ("T12 transitivity", c11),
        ("T13 special fans", c12),
        ("T14 minors through pairs and triples", c13),
        ("T15 MK4 through triples", c14),
        ("T16 kappa monotonicity", c15),
        ("T17 canonical tree uniqueness", c16),
        ("enumeration oracle", c17),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check(&ctx);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
