//! Enumeration of all matroids on `n` elements up to isomorphism, by
//! single-element extensions along modular cuts.
//!
//! Classes are computed once per process and, when `MATROID_CACHE_DIR` is
//! set, stored there as newline-delimited JSON and reused on later runs.

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::connectivity;
use crate::error::{Error, Result};
use crate::iso::{self, Fingerprint};
use crate::json::MatroidDoc;
use crate::matroid::{letter_label, GroundSet, Matroid};

/// Largest ground set size accepted by [`classes`].
pub const ENUM_CAP: usize = 8;

const CACHE_VERSION: u32 = 1;

/// Every modular cut of the flat lattice of `m`, each as a membership vector
/// over `m.flats()`.
pub fn modular_cuts(m: &Matroid) -> Vec<Vec<bool>> {
    let flats = m.flats();
    let k = flats.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(m.rank_of(flats[i])));
    let covers: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| {
                    flats[j] & flats[i] == flats[i]
                        && flats[j] != flats[i]
                        && m.rank_of(flats[j]) == m.rank_of(flats[i]) + 1
                })
                .collect()
        })
        .collect();
    let index: HashMap<Mask, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    // incomparable modular pairs, grouped by their intersection
    let mut meets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for a in 0..k {
        for b in a + 1..k {
            let (fa, fb) = (flats[a], flats[b]);
            let meet = fa & fb;
            if meet == fa || meet == fb {
                continue;
            }
            if m.rank_of(fa) + m.rank_of(fb) == m.rank_of(fa | fb) + m.rank_of(meet) {
                meets[index[&meet]].push((a, b));
            }
        }
    }
    let mut out = Vec::new();
    let mut cut = vec![false; k];
    search_cuts(0, &order, &covers, &meets, &mut cut, &mut out);
    out
}

fn search_cuts(
    step: usize,
    order: &[usize],
    covers: &[Vec<usize>],
    meets: &[Vec<(usize, usize)>],
    cut: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
) {
    let Some(&f) = order.get(step) else {
        out.push(cut.clone());
        return;
    };
    let allowed = covers[f].iter().all(|&g| cut[g]);
    let forced = meets[f].iter().any(|&(a, b)| cut[a] && cut[b]);
    if forced && !allowed {
        return;
    }
    if !forced {
        cut[f] = false;
        search_cuts(step + 1, order, covers, meets, cut, out);
    }
    if allowed {
        cut[f] = true;
        search_cuts(step + 1, order, covers, meets, cut, out);
        cut[f] = false;
    }
}

/// All single-element extensions of `m` by a new element `label`, one per
/// modular cut.
pub fn extensions(m: &Matroid, label: &str) -> Result<Vec<Matroid>> {
    let n = m.size();
    let ground = GroundSet::new(
        m.labels()
            .iter()
            .cloned()
            .chain(std::iter::once(label.to_string())),
    )?;
    let flats = m.flats();
    let low = m.full();
    Ok(modular_cuts(m)
        .into_iter()
        .map(|cut| {
            let in_cut: HashMap<Mask, bool> = flats.iter().copied().zip(cut).collect();
            Matroid::from_rank_fn(ground.clone(), |s| {
                let x = s & low;
                let r = m.rank_of(x);
                if bits::contains(s, n) && !in_cut[&m.closure(x)] {
                    (r + 1) as u8
                } else {
                    r as u8
                }
            })
        })
        .collect())
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Matroid>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Matroid>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_file(n: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("MATROID_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("classes-v{CACHE_VERSION}-n{n}.ndjson")))
}

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    format: String,
    version: u32,
    n: usize,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    fingerprint: String,
    #[serde(flatten)]
    doc: MatroidDoc,
}

fn read_cache(n: usize) -> Option<Vec<Matroid>> {
    let text = fs::read_to_string(cache_file(n)?).ok()?;
    let mut lines = text.lines();
    let header: CacheHeader = serde_json::from_str(lines.next()?).ok()?;
    if header.format != "nconn-classes" || header.version != CACHE_VERSION || header.n != n {
        return None;
    }
    let mut out = Vec::with_capacity(header.count);
    for line in lines {
        let entry: CacheLine = serde_json::from_str(line).ok()?;
        let m = entry.doc.to_matroid().ok()?;
        if m.size() != n || Fingerprint::of(&m).digest() != entry.fingerprint {
            return None;
        }
        out.push(m);
    }
    (out.len() == header.count).then_some(out)
}

fn write_cache(n: usize, classes: &[Matroid]) {
    let Some(path) = cache_file(n) else { return };
    if let Some(dir) = path.parent() {
        let _ = fs::create_dir_all(dir);
    }
    let mut text = serde_json::to_string(&CacheHeader {
        format: "nconn-classes".into(),
        version: CACHE_VERSION,
        n,
        count: classes.len(),
    })
    .unwrap();
    text.push('\n');
    for m in classes {
        let line = CacheLine {
            fingerprint: Fingerprint::of(m).digest(),
            doc: MatroidDoc::of(m),
        };
        text.push_str(&serde_json::to_string(&line).unwrap());
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    if let Ok(mut f) = fs::File::create(&tmp) {
        if f.write_all(text.as_bytes()).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

fn extend_classes(parents: &[Matroid], n: usize) -> Vec<Matroid> {
    let label = letter_label(n - 1);
    let candidates: Vec<Vec<(Fingerprint, Matroid)>> = parents
        .par_iter()
        .map(|p| {
            extensions(p, &label)
                .expect("fresh label")
                .into_iter()
                .map(|m| (Fingerprint::of(&m), m))
                .collect()
        })
        .collect();
    let mut by_print: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    let mut out: Vec<Matroid> = Vec::new();
    for (fp, m) in candidates.into_iter().flatten() {
        let bucket = by_print.entry(fp).or_default();
        if bucket.iter().any(|&i| iso::is_isomorphic(&out[i], &m)) {
            continue;
        }
        bucket.push(out.len());
        out.push(m);
    }
    out
}

/// One representative of every isomorphism class of matroids on `n`
/// elements, labeled `a, b, ...`.
pub fn classes(n: usize) -> Result<Arc<Vec<Matroid>>> {
    if n > ENUM_CAP {
        return Err(Error::CapExceeded {
            size: n,
            cap: ENUM_CAP,
        });
    }
    if let Some(c) = cache().lock().unwrap().get(&n) {
        return Ok(c.clone());
    }
    let computed = if n == 0 {
        vec![Matroid::uniform(0, 0)]
    } else if let Some(c) = read_cache(n) {
        c
    } else {
        let parents = classes(n - 1)?;
        let c = extend_classes(&parents, n);
        write_cache(n, &c);
        c
    };
    let arc = Arc::new(computed);
    cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone());
    Ok(cache().lock().unwrap()[&n].clone())
}

/// All classes on at most `max_n` elements, smallest first.
pub fn classes_up_to(max_n: usize) -> Result<Vec<Matroid>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(classes(n)?.iter().cloned());
    }
    Ok(out)
}

/// Structural filters for [`enumerate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    pub connected: bool,
    pub simple: bool,
    pub three_connected: bool,
    pub binary: Option<bool>,
    pub min_rank: Option<usize>,
    pub max_rank: Option<usize>,
}

impl Filter {
    pub fn accepts(&self, m: &Matroid) -> bool {
        (!self.connected || m.is_connected())
            && (!self.simple || m.is_simple())
            && (!self.three_connected || connectivity::is_3_connected(m))
            && self.min_rank.is_none_or(|r| m.rank() >= r)
            && self.max_rank.is_none_or(|r| m.rank() <= r)
            && self.binary.is_none_or(|b| m.is_binary() == b)
    }
}

/// Classes on `n` elements passing `filter`.
pub fn enumerate(n: usize, filter: &Filter) -> Result<Vec<Matroid>> {
    Ok(classes(n)?
        .iter()
        .filter(|m| filter.accepts(m))
        .cloned()
        .collect())
}
