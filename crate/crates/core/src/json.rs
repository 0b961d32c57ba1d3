//! JSON matroid documents.
//!
//! A document has exactly one defining key:
//! `{"ground": [...], "bases": [[...], ...]}`,
//! `{"ground": [...], "circuits": [[...], ...]}`, or
//! `{"graph": [["u", "v", "label"], ...]}`.
//! Output always uses the bases form with bases in lexicographic order of
//! ground positions, so a written document reads back to the same bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::matroid::{GroundSet, Matroid};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<Vec<[String; 3]>>,
}

/// Sorts sets by their ascending lists of ground positions.
pub fn sort_sets(sets: &mut [Mask]) {
    sets.sort_by_cached_key(|&s| bits::elements(s).collect::<Vec<_>>());
}

fn label_sets(m: &Matroid, sets: &[Mask]) -> Vec<Vec<String>> {
    let mut sets = sets.to_vec();
    sort_sets(&mut sets);
    sets.iter().map(|&s| m.ground().labels_of(s)).collect()
}

impl MatroidDoc {
    pub fn of(m: &Matroid) -> Self {
        MatroidDoc {
            ground: Some(m.labels().to_vec()),
            bases: Some(label_sets(m, m.bases())),
            ..Default::default()
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let defining = [
            self.bases.is_some(),
            self.circuits.is_some(),
            self.graph.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if defining != 1 {
            return Err(Error::Document(
                "expected exactly one of \"bases\", \"circuits\", \"graph\"".into(),
            ));
        }
        if let Some(edges) = &self.graph {
            if self.ground.is_some() {
                return Err(Error::Document(
                    "\"graph\" documents take no \"ground\"".into(),
                ));
            }
            let edges: Vec<(&str, &str, &str)> = edges
                .iter()
                .map(|[u, v, l]| (u.as_str(), v.as_str(), l.as_str()))
                .collect();
            return Matroid::from_graph(&edges);
        }
        let ground = GroundSet::new(
            self.ground
                .clone()
                .ok_or_else(|| Error::Document("missing \"ground\"".into()))?,
        )?;
        let masks = |sets: &[Vec<String>]| -> Result<Vec<Mask>> {
            sets.iter().map(|s| ground.mask_of(s)).collect()
        };
        if let Some(bases) = &self.bases {
            Matroid::from_bases(ground.clone(), &masks(bases)?)
        } else {
            Matroid::from_circuits(
                ground.clone(),
                &masks(self.circuits.as_deref().unwrap_or(&[]))?,
            )
        }
    }
}

pub fn to_value(m: &Matroid) -> Value {
    serde_json::to_value(MatroidDoc::of(m)).expect("documents serialize")
}

pub fn to_string(m: &Matroid) -> String {
    serde_json::to_string(&MatroidDoc::of(m)).expect("documents serialize")
}

pub fn from_value(v: &Value) -> Result<Matroid> {
    let doc: MatroidDoc =
        serde_json::from_value(v.clone()).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_matroid()
}

pub fn from_str(s: &str) -> Result<Matroid> {
    let doc: MatroidDoc = serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_matroid()
}

/// Label lists for a family of sets, sorted like document output.
pub fn sets_to_labels(m: &Matroid, sets: &[Mask]) -> Vec<Vec<String>> {
    label_sets(m, sets)
}
