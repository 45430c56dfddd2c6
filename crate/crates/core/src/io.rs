//! JSON file formats and text exports.
//!
//! Instances use the tag `reconfig-instance/v1`, sequences use
//! `reconfig-sequence/v1`. Multicolored Clique inputs share the instance
//! shape with variant `"mcc"`; their `source` and `target` are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::engine::{ReconfInstance, ReconfSequence, Variant};
use crate::error::{Error, Result};
use crate::gadgets::MccInstance;
use crate::graph::{Coloring, Graph, Vertex, VertexSet};
use crate::planar::RotationSystem;

pub const INSTANCE_FORMAT: &str = "reconfig-instance/v1";
pub const SEQUENCE_FORMAT: &str = "reconfig-sequence/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileVariant {
    Ds,
    Cds,
    Ccs,
    Mcc,
}

impl From<Variant> for FileVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Ds => FileVariant::Ds,
            Variant::Cds => FileVariant::Cds,
            Variant::Ccs => FileVariant::Ccs,
        }
    }
}

/// Raw on-disk instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format: String,
    pub variant: FileVariant,
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<u32>>,
    #[serde(default)]
    pub source: Vec<Vertex>,
    #[serde(default)]
    pub target: Vec<Vertex>,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<Vertex>>>,
}

/// A validated input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Reconf {
        instance: ReconfInstance,
        rotation: Option<RotationSystem>,
    },
    Mcc {
        instance: MccInstance,
        rotation: Option<RotationSystem>,
    },
}

fn field(name: &str, err: impl ToString) -> Error {
    Error::Field {
        field: name.into(),
        message: err.to_string(),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    // serde reports missing fields as "missing field `x`", which already
    // names the field
    Error::Json(e.to_string())
}

fn vertex_set(name: &str, list: &[Vertex], n: usize) -> Result<VertexSet> {
    if let Some(&v) = list.iter().find(|&&v| v >= n) {
        return Err(field(name, format!("vertex {v} out of range for n = {n}")));
    }
    let set: VertexSet = list.iter().copied().collect();
    if set.len() != list.len() {
        return Err(field(name, "duplicate vertex"));
    }
    Ok(set)
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_err)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn from_instance(inst: &ReconfInstance, rotation: Option<&RotationSystem>) -> Self {
        InstanceFile {
            format: INSTANCE_FORMAT.into(),
            variant: inst.variant().into(),
            n: inst.graph().n(),
            edges: inst.graph().edges().collect(),
            colors: inst.coloring().map(|c| c.as_slice().to_vec()),
            source: inst.source().as_slice().to_vec(),
            target: inst.target().as_slice().to_vec(),
            k: inst.k(),
            rotation: rotation.map(|r| r.as_lists().to_vec()),
        }
    }

    pub fn from_mcc(mcc: &MccInstance) -> Self {
        InstanceFile {
            format: INSTANCE_FORMAT.into(),
            variant: FileVariant::Mcc,
            n: mcc.graph().n(),
            edges: mcc.graph().edges().collect(),
            colors: Some(mcc.coloring().as_slice().to_vec()),
            source: Vec::new(),
            target: Vec::new(),
            k: mcc.k(),
            rotation: None,
        }
    }

    /// Validates the file, reporting the first offending field.
    pub fn validate(&self) -> Result<Parsed> {
        if self.format != INSTANCE_FORMAT {
            return Err(field("format", format!("expected {INSTANCE_FORMAT:?}, got {:?}", self.format)));
        }
        let mut edges = self.edges.clone();
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(field("edges", "duplicate edge"));
        }
        let graph = Graph::from_edges(self.n, edges).map_err(|e| field("edges", e))?;
        let coloring = match &self.colors {
            None => None,
            Some(c) => {
                if c.len() != self.n {
                    return Err(field("colors", format!("has {} entries for n = {}", c.len(), self.n)));
                }
                Some(Coloring::from_colors(c.clone()).map_err(|e| field("colors", e))?)
            }
        };
        let rotation = match &self.rotation {
            None => None,
            Some(lists) => {
                let rs = RotationSystem::new(lists.clone());
                rs.validate(&graph).map_err(|e| field("rotation", e))?;
                Some(rs)
            }
        };
        let variant = match self.variant {
            FileVariant::Mcc => {
                let coloring = coloring.ok_or_else(|| field("colors", "required for variant mcc"))?;
                let instance = MccInstance::new(graph, coloring, self.k).map_err(|e| field("colors", e))?;
                return Ok(Parsed::Mcc { instance, rotation });
            }
            FileVariant::Ds => Variant::Ds,
            FileVariant::Cds => Variant::Cds,
            FileVariant::Ccs => Variant::Ccs,
        };
        match (variant, &coloring) {
            (Variant::Ccs, None) => return Err(field("colors", "required for variant ccs")),
            (Variant::Ds | Variant::Cds, Some(_)) => {
                return Err(field("colors", format!("not allowed for variant {variant}")))
            }
            _ => {}
        }
        let source = vertex_set("source", &self.source, self.n)?;
        let target = vertex_set("target", &self.target, self.n)?;
        let instance = ReconfInstance::new(variant, graph, coloring, source, target, self.k).map_err(|e| {
            let msg = e.to_string();
            let name = ["source", "target", "colors"]
                .into_iter()
                .find(|f| msg.contains(&format!("{f}:")))
                .unwrap_or("k");
            field(name, msg)
        })?;
        Ok(Parsed::Reconf { instance, rotation })
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(bytes: &[u8]) -> Result<Parsed> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Json(format!("not UTF-8: {e}")))?;
    InstanceFile::from_json(text)?.validate()
}

/// Like [`parse_instance`] but rejects Multicolored Clique files.
pub fn parse_reconf_instance(bytes: &[u8]) -> Result<(ReconfInstance, Option<RotationSystem>)> {
    match parse_instance(bytes)? {
        Parsed::Reconf { instance, rotation } => Ok((instance, rotation)),
        Parsed::Mcc { .. } => Err(field("variant", "expected ds, cds or ccs, got mcc")),
    }
}

pub fn instance_to_json(inst: &ReconfInstance, rotation: Option<&RotationSystem>) -> String {
    InstanceFile::from_instance(inst, rotation).to_json()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    format: String,
    #[serde(flatten)]
    sequence: ReconfSequence,
}

pub fn sequence_to_json(seq: &ReconfSequence) -> String {
    let file = SequenceFile {
        format: SEQUENCE_FORMAT.into(),
        sequence: seq.clone(),
    };
    serde_json::to_string_pretty(&file).expect("sequence serializes")
}

pub fn parse_sequence(bytes: &[u8]) -> Result<ReconfSequence> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Json(format!("not UTF-8: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
    match value.get("format").and_then(|f| f.as_str()) {
        Some(SEQUENCE_FORMAT) => {}
        other => return Err(field("format", format!("expected {SEQUENCE_FORMAT:?}, got {other:?}"))),
    }
    let file: SequenceFile = serde_json::from_value(value).map_err(json_err)?;
    Ok(file.sequence)
}

/// Graphviz rendering; `highlight` vertices are filled.
pub fn to_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if highlight.contains(v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// Plain `n m` header followed by one `a b` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Reads a whitespace edge list. Lines starting with `c` or `#` are
/// comments; an optional `p edge n m` or `n m` header fixes the vertex
/// count, otherwise it is one more than the largest id. With
/// `one_based`, ids are shifted down by one (DIMACS style).
pub fn parse_edge_list(text: &str, one_based: bool) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut header_seen = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| field("edges", format!("line {}: bad number {t:?}", lineno + 1)))
        };
        if toks[0] == "p" {
            if toks.len() < 3 {
                return Err(field("edges", format!("line {}: short header", lineno + 1)));
            }
            n = Some(num(toks[2])?);
            header_seen = true;
            continue;
        }
        let toks: &[&str] = if toks[0] == "e" { &toks[1..] } else { &toks };
        if toks.len() != 2 {
            return Err(field("edges", format!("line {}: expected two ids", lineno + 1)));
        }
        let (a, b) = (num(toks[0])?, num(toks[1])?);
        if !header_seen && edges.is_empty() && first_is_header(text) {
            n = Some(a);
            header_seen = true;
            continue;
        }
        let shift = |x: usize| {
            if one_based {
                x.checked_sub(1)
                    .ok_or_else(|| field("edges", format!("line {}: id 0 in one-based input", lineno + 1)))
            } else {
                Ok(x)
            }
        };
        edges.push((shift(a)?, shift(b)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges).map_err(|e| field("edges", e))
}

/// Whether the first data line is an `n m` header, judged by the count of
/// the remaining data lines matching `m`.
fn first_is_header(text: &str) -> bool {
    let data: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
        .collect();
    let Some(first) = data.first() else { return false };
    let toks: Vec<&str> = first.split_whitespace().collect();
    toks.len() == 2 && toks[1].parse::<usize>().ok() == Some(data.len() - 1)
}
