use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use nconn::bits::{self, Mask};
use nconn::catalog;
use nconn::connectivity::{self, kappa, lambda};
use nconn::json;
use nconn::minor;
use nconn::treedecomp::canonical_tree;
use nconn::verify::{self, Status, VerifyOptions};
use nconn::Matroid;

#[derive(Parser)]
#[command(
    name = "nconn",
    version,
    about = "N-connectivity and 2-sum decompositions of small matroids"
)]
struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print derived structure of a matroid.
    Show {
        /// JSON file or catalog expression such as "U(2,4)" or "MK4~U(2,3)@a".
        input: String,
        #[command(flatten)]
        queries: Queries,
    },
    /// Check whether every pair of elements of M lies in an N-minor.
    Nconn {
        m: String,
        n: String,
        /// Only this pair; prints the witnessing minor.
        #[arg(long, value_name = "E,F")]
        pair: Option<String>,
        /// List every related pair.
        #[arg(long)]
        relation: bool,
    },
    /// Canonical 2-sum tree decomposition of a connected matroid.
    Decompose {
        input: String,
        /// Also classify vertices and evaluate the general tree condition for N.
        #[arg(long = "n", value_name = "N")]
        n: Option<String>,
    },
    /// Run a theorem verification suite (T1..T17, or "all").
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Default)]
struct Queries {
    #[arg(long)]
    rank: bool,
    #[arg(long)]
    circuits: bool,
    #[arg(long)]
    cocircuits: bool,
    #[arg(long)]
    flats: bool,
    #[arg(long)]
    cyclic_flats: bool,
    #[arg(long)]
    clones: bool,
    #[arg(long)]
    components: bool,
    #[arg(long)]
    fans: bool,
    #[arg(long)]
    binary: bool,
    #[arg(long)]
    uniform: bool,
}

impl Queries {
    fn any(&self) -> bool {
        self.rank
            || self.circuits
            || self.cocircuits
            || self.flats
            || self.cyclic_flats
            || self.clones
            || self.components
            || self.fans
            || self.binary
            || self.uniform
    }
}

/// A successful run that found a violated property.
struct Violation;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Violation)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Option<Violation>> {
    match &cli.command {
        Command::Show { input, queries } => show(&load(input)?, queries, cli.json).map(|_| None),
        Command::Nconn {
            m,
            n,
            pair,
            relation,
        } => nconn_cmd(&load(m)?, &load(n)?, pair.as_deref(), *relation, cli.json).map(|_| None),
        Command::Decompose { input, n } => {
            let n = n.as_deref().map(load).transpose()?;
            decompose(&load(input)?, n.as_ref(), cli.json).map(|_| None)
        }
        Command::Verify {
            theorem,
            max_n,
            seed,
        } => verify_cmd(theorem, *max_n, *seed, cli.json),
    }
}

/// Reads a JSON document if `input` names a file, otherwise parses a
/// catalog expression.
fn load(input: &str) -> Result<Matroid> {
    let path = Path::new(input);
    if path.is_file() || input.ends_with(".json") {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return json::from_str(&text).with_context(|| format!("parsing {input}"));
    }
    catalog::named(input).with_context(|| format!("unrecognized matroid {input:?}"))
}

fn set(m: &Matroid, s: Mask) -> String {
    format!("{{{}}}", m.ground().labels_of(s).join(","))
}

fn sets_text(m: &Matroid, sets: &[Mask]) -> String {
    let mut sets = sets.to_vec();
    json::sort_sets(&mut sets);
    sets.iter()
        .map(|&s| set(m, s))
        .collect::<Vec<_>>()
        .join(" ")
}

fn sets_json(m: &Matroid, sets: &[Mask]) -> Value {
    json!(json::sets_to_labels(m, sets))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show(m: &Matroid, q: &Queries, as_json: bool) -> Result<()> {
    if !q.any() {
        if as_json {
            println!("{}", json::to_string(m));
        } else {
            println!("ground: {}", m.labels().join(" "));
            println!("rank: {}", m.rank());
            println!("bases: {}", sets_text(m, m.bases()));
        }
        return Ok(());
    }
    let mut fields: Vec<(&str, String, Value)> = Vec::new();
    let mut add = |name, text, value| fields.push((name, text, value));
    if q.rank {
        add("rank", m.rank().to_string(), json!(m.rank()));
    }
    if q.circuits {
        add(
            "circuits",
            sets_text(m, m.circuits()),
            sets_json(m, m.circuits()),
        );
    }
    if q.cocircuits {
        add(
            "cocircuits",
            sets_text(m, m.cocircuits()),
            sets_json(m, m.cocircuits()),
        );
    }
    if q.flats {
        let f = m.flats();
        add("flats", sets_text(m, &f), sets_json(m, &f));
    }
    if q.cyclic_flats {
        let f = m.cyclic_flats();
        add("cyclic-flats", sets_text(m, &f), sets_json(m, &f));
    }
    if q.clones {
        let c = m.clonal_classes();
        add("clones", sets_text(m, &c), sets_json(m, &c));
    }
    if q.components {
        let c = m.components();
        add("components", sets_text(m, &c), sets_json(m, &c));
    }
    if q.fans {
        let fans = connectivity::find_fans(m);
        let text = fans
            .iter()
            .map(|f| format!("({})", f.labels(m).join(",")))
            .collect::<Vec<_>>()
            .join(" ");
        let value = json!(fans
            .iter()
            .map(|f| json!({"ordering": f.labels(m), "steps": f.step_types}))
            .collect::<Vec<_>>());
        add("fans", text, value);
    }
    if q.binary {
        let b = m.is_binary();
        add("binary", yes(b).into(), json!(b));
    }
    if q.uniform {
        let u = m.is_uniform();
        add("uniform", yes(u).into(), json!(u));
    }
    if as_json {
        let obj: Map<String, Value> = fields
            .into_iter()
            .map(|(k, _, v)| (k.to_string(), v))
            .collect();
        println!("{}", Value::Object(obj));
    } else {
        for (k, text, _) in fields {
            println!("{k}: {text}");
        }
    }
    Ok(())
}

fn nconn_cmd(
    m: &Matroid,
    n: &Matroid,
    pair: Option<&str>,
    relation: bool,
    as_json: bool,
) -> Result<()> {
    if let Some(pair) = pair {
        let labels: Vec<&str> = pair.split(',').map(str::trim).collect();
        let [e, f] = labels[..] else {
            bail!("--pair expects two labels separated by a comma");
        };
        let z = m.ground().mask_of(&[e, f])?;
        if bits::size(z) != 2 {
            bail!("--pair needs two distinct elements");
        }
        let witness = minor::has_minor_using(m, n, z);
        if as_json {
            println!(
                "{}",
                json!({"pair": [e, f], "related": witness.is_some(), "witness": witness})
            );
        } else if let Some(w) = witness {
            println!("related: yes");
            println!("contract: {{{}}}", w.contract.join(","));
            println!("delete: {{{}}}", w.delete.join(","));
            let map: Vec<String> = w.map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            println!("map: {}", map.join(" "));
        } else {
            println!("related: no");
        }
        return Ok(());
    }
    let rel = minor::pair_relation(m, n)?;
    let total = m.size() * (m.size() - 1) / 2;
    let related = rel.edges().len();
    let missing = rel.first_missing().map(|(e, f)| {
        let (a, b) = (bits::bit(e), bits::bit(f));
        (
            [
                m.ground().label(e).to_string(),
                m.ground().label(f).to_string(),
            ],
            kappa(m, a, b).expect("disjoint"),
            lambda(m, a),
            lambda(m, b),
        )
    });
    let relation_labels = rel.edge_labels();
    if as_json {
        let mut out = json!({
            "connected": m.is_connected(),
            "has_minor": minor::has_minor(m, n),
            "verdict": rel.is_complete(),
            "related_pairs": related,
            "pairs": total,
        });
        if let Some((p, k, le, lf)) = &missing {
            out["first_missing"] = json!({"pair": p, "kappa": k, "lambda": [le, lf]});
        }
        if relation {
            out["relation"] = json!(relation_labels
                .iter()
                .map(|(a, b)| [a, b])
                .collect::<Vec<_>>());
        }
        println!("{out}");
        return Ok(());
    }
    println!("connected: {}", yes(m.is_connected()));
    println!("has minor: {}", yes(minor::has_minor(m, n)));
    println!("related pairs: {related}/{total}");
    println!("verdict: {}", yes(rel.is_complete()));
    if let Some(([e, f], k, le, lf)) = missing {
        println!("first missing pair: {e},{f} (kappa({e};{f}) = {k}, lambda({e}) = {le}, lambda({f}) = {lf})");
    }
    if relation {
        for (a, b) in relation_labels {
            println!("{{{a},{b}}}");
        }
    }
    Ok(())
}

fn decompose(m: &Matroid, n: Option<&Matroid>, as_json: bool) -> Result<()> {
    let tree = canonical_tree(m)?;
    let info = tree.classify_vertices(n);
    let mut predicates = json!({
        "u24_condition": tree.u24_condition(),
        "u34_forbidden_config_absent": tree.u34_forbidden_config_absent(),
        "mk4_vertex_condition": tree.mk4_vertex_condition(),
    });
    if let Some(n) = n {
        predicates["general_condition"] = json!(tree.general_condition(n)?);
    }
    if as_json {
        let mut out = tree.to_json();
        out["classification"] = json!(info);
        out["predicates"] = predicates;
        println!("{out}");
        return Ok(());
    }
    print!("{}", tree.render());
    for (v, i) in info.iter().enumerate() {
        let mut line = format!(
            "v{v}: {} binary={} degree={} ground={}",
            i.class.name(),
            yes(i.binary),
            i.degree,
            i.ground_elements
        );
        if let Some(c) = i.n_connected {
            line.push_str(&format!(" n_connected={}", yes(c)));
        }
        println!("{line}");
    }
    for (k, v) in predicates.as_object().expect("object") {
        println!("{k}: {}", yes(v.as_bool().unwrap_or(false)));
    }
    Ok(())
}

fn verify_cmd(theorem: &str, max_n: usize, seed: u64, as_json: bool) -> Result<Option<Violation>> {
    let opts = VerifyOptions { max_n, seed };
    let reports = if theorem.eq_ignore_ascii_case("all") {
        verify::verify_all(&opts)?
    } else if verify::THEOREM_IDS.contains(&theorem) {
        vec![verify::verify(theorem, &opts)?]
    } else {
        bail!("unknown theorem id {theorem:?} (expected T1..T17 or all)");
    };
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    if as_json {
        if let [r] = &reports[..] {
            println!("{}", serde_json::to_string(r)?);
        } else {
            println!("{}", serde_json::to_string(&reports)?);
        }
    } else {
        for r in &reports {
            println!(
                "{} {}: {} instances ({}) in {:.2}s",
                r.theorem_id,
                r.status.as_str(),
                r.instances_checked,
                r.universe,
                r.wall_time
            );
            for c in &r.counterexamples {
                println!("  counterexample: {} {}", c.detail, c.matroid);
            }
            for c in &r.findings {
                println!("  found: {} {}", c.detail, c.matroid);
            }
            for note in &r.notes {
                println!("  note: {note}");
            }
        }
    }
    Ok(failed.then_some(Violation))
}
