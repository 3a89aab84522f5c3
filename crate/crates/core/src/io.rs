//! File formats: the JSON quiver document, DOT export and CSV facet tables.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dissection::{Dissection, FacetOrbit};
use crate::error::{Error, Result};
use crate::quiver::{Quiver, TranslationQuiver};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub construction: String,
    pub version: String,
}

impl Metadata {
    pub fn new(construction: impl Into<String>, n: Option<u32>, m: Option<u32>) -> Self {
        Self {
            n,
            m,
            construction: construction.into(),
            version: TOOL_VERSION.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub src: usize,
    pub dst: usize,
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauEntry {
    pub from: usize,
    pub to: usize,
}

/// Serialized translation quiver. Arrow and τ entries refer to vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDocument {
    pub metadata: Metadata,
    pub vertices: Vec<VertexEntry>,
    pub arrows: Vec<ArrowEntry>,
    pub tau: Vec<TauEntry>,
}

impl QuiverDocument {
    /// Vertex ids are the quiver's indices.
    pub fn from_translation_quiver(tq: &TranslationQuiver, metadata: Metadata) -> Self {
        Self {
            metadata,
            vertices: (0..tq.len())
                .map(|id| VertexEntry {
                    id,
                    label: tq.label(id).to_string(),
                })
                .collect(),
            arrows: tq
                .quiver()
                .arrows()
                .map(|((src, dst), mult)| ArrowEntry { src, dst, mult })
                .collect(),
            tau: (0..tq.len())
                .filter_map(|v| tq.tau(v).map(|to| TauEntry { from: v, to }))
                .collect(),
        }
    }

    /// Vertices are numbered in document order; ids may be arbitrary but must
    /// be distinct.
    pub fn to_translation_quiver(&self) -> Result<TranslationQuiver> {
        let mut pos = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if pos.insert(v.id, i).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex id {}", v.id)));
            }
        }
        let lookup = |id: usize| {
            pos.get(&id)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown vertex id {id}")))
        };
        let mut quiver = Quiver::new(self.vertices.iter().map(|v| v.label.clone()))?;
        for a in &self.arrows {
            quiver.add_arrows(lookup(a.src)?, lookup(a.dst)?, a.mult)?;
        }
        let mut tau = vec![None; self.vertices.len()];
        for t in &self.tau {
            let from = lookup(t.from)?;
            if tau[from].replace(lookup(t.to)?).is_some() {
                return Err(Error::Malformed(format!(
                    "vertex id {} has two tau images",
                    t.from
                )));
            }
        }
        TranslationQuiver::new(quiver, tau)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

fn dot_id(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz rendering: solid edges for arrows (labelled when multiple),
/// dashed edges from each vertex to its translate.
pub fn to_dot(tq: &TranslationQuiver, name: &str) -> String {
    let mut s = format!("digraph {} {{\n", dot_id(name));
    for v in 0..tq.len() {
        let _ = writeln!(s, "  {};", dot_id(tq.label(v)));
    }
    for ((a, b), k) in tq.quiver().arrows() {
        let _ = write!(s, "  {} -> {}", dot_id(tq.label(a)), dot_id(tq.label(b)));
        if k > 1 {
            let _ = write!(s, " [label=\"{k}\"]");
        }
        s.push_str(";\n");
    }
    for v in 0..tq.len() {
        if let Some(t) = tq.tau(v) {
            let _ = writeln!(
                s,
                "  {} -> {} [style=dashed, constraint=false];",
                dot_id(tq.label(v)),
                dot_id(tq.label(t))
            );
        }
    }
    s.push_str("}\n");
    s
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("csv: {e}"))
}

fn write_csv(header: Vec<String>, rows: impl Iterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).map_err(csv_error)?;
    for row in rows {
        w.write_record(&row).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

fn diagonal_header(width: usize) -> impl Iterator<Item = String> {
    (1..=width).map(|i| format!("d{i}"))
}

/// One row per facet, one `i-j` token per column.
pub fn facets_to_csv(facets: &[Dissection]) -> Result<String> {
    let width = facets.iter().map(Dissection::len).max().unwrap_or(0);
    write_csv(
        diagonal_header(width).collect(),
        facets.iter().map(Dissection::tokens),
    )
}

/// One row per rotation orbit: its size, then the representative's tokens.
pub fn orbits_to_csv(orbits: &[FacetOrbit]) -> Result<String> {
    let width = orbits
        .iter()
        .map(|o| o.representative.len())
        .max()
        .unwrap_or(0);
    let header = std::iter::once("size".to_string())
        .chain(diagonal_header(width))
        .collect();
    write_csv(
        header,
        orbits.iter().map(|o| {
            std::iter::once(o.size.to_string())
                .chain(o.representative.tokens())
                .collect()
        }),
    )
}

/// JSON shape for facet listings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetsDocument {
    pub n: u32,
    pub m: u32,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub size: usize,
    pub representative: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissection::{facets, rotation_orbits};
    use crate::gamma::build_gamma;
    use crate::polygon::PolygonConfig;
    use crate::quiver::fixtures::five_vertex;

    #[test]
    fn round_trip_gamma() {
        let tq = build_gamma(4, 2).unwrap().into_translation_quiver();
        let doc =
            QuiverDocument::from_translation_quiver(&tq, Metadata::new("gamma", Some(4), Some(2)));
        let text = doc.to_json();
        let back = QuiverDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_translation_quiver().unwrap(), tq);
        assert_eq!(doc.arrows.len(), 20);
        assert_eq!(doc.tau.len(), 15);
    }

    #[test]
    fn arbitrary_ids_and_bad_documents() {
        let text = r#"{"metadata":{"construction":"hand","version":"0"},
            "vertices":[{"id":7,"label":"x"},{"id":3,"label":"y"}],
            "arrows":[{"src":7,"dst":3,"mult":2}],
            "tau":[]}"#;
        let tq = QuiverDocument::from_json(text)
            .unwrap()
            .to_translation_quiver()
            .unwrap();
        assert_eq!(tq.mult(0, 1), 2);
        let bad = text.replace("\"dst\":3", "\"dst\":4");
        assert!(QuiverDocument::from_json(&bad)
            .unwrap()
            .to_translation_quiver()
            .is_err());
        assert!(matches!(
            QuiverDocument::from_json("{"),
            Err(Error::Parse(_))
        ));
        let dup = text.replace("\"id\":3", "\"id\":7");
        assert!(QuiverDocument::from_json(&dup)
            .unwrap()
            .to_translation_quiver()
            .is_err());
    }

    #[test]
    fn dot_shape() {
        let dot = to_dot(&five_vertex(), "fixture");
        assert!(dot.starts_with("digraph \"fixture\" {\n"));
        assert!(dot.contains("  \"A\" -> \"B\";\n"));
        assert!(dot.contains("  \"E\" -> \"D\" [style=dashed, constraint=false];\n"));
        assert!(dot.ends_with("}\n"));
        assert_eq!(dot_id("a\"b"), "\"a\\\"b\"");
    }

    #[test]
    fn facet_tables() {
        let cfg = PolygonConfig::new(4, 1).unwrap();
        let fs = facets(&cfg);
        let table = facets_to_csv(&fs).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 15);
        assert_eq!(lines[0], "d1,d2,d3");
        assert_eq!(lines[1], "1-3,1-4,1-5");
        let orbits = orbits_to_csv(&rotation_orbits(&cfg, &fs)).unwrap();
        assert_eq!(orbits.lines().next(), Some("size,d1,d2,d3"));
        assert_eq!(orbits.lines().count(), 5);
    }
}
