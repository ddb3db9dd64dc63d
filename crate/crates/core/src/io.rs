//! JSON file formats for graphs, splines, generating sets, and pinwheels.
//!
//! All numeric content is exact rational text; maps are emitted with sorted
//! keys so identical inputs produce byte-identical outputs.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_poly, FactoredGen, LinForm, Poly, Rat};
use crate::classical::Pinwheel;
use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::spline::{verify_gkm, GeneratingSet, Spline};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeFile {
    pub u: String,
    pub v: String,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<(String, u32)>>,
}

/// `{"graph": <inline or path>, "entries": {"vertex": "poly"}}`; the graph
/// field is optional when the graph arrives separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplineFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphRef>,
    pub entries: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphRef {
    Path(String),
    Inline(GraphFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenSetFile {
    pub generators: Vec<GeneratorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_sequence: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub entries: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

/// `{"center": [qx, qy], "rays": ["<form>" | ["<form>"]], "r": 1}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PinwheelFile {
    pub center: [RatText; 2],
    pub rays: Vec<RayFile>,
    pub r: u32,
}

/// A rational written either as a JSON number or as exact text like "3/2".
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatText {
    Int(i64),
    Text(String),
}

impl RatText {
    pub fn to_rat(&self) -> Result<Rat, Error> {
        match self {
            RatText::Int(n) => Ok(Rat::from_int(*n)),
            RatText::Text(s) => Ok(s.parse::<Rat>()?),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RayFile {
    Form(String),
    Wrapped([String; 1]),
}

impl RayFile {
    fn as_str(&self) -> &str {
        match self {
            RayFile::Form(s) => s,
            RayFile::Wrapped([s]) => s,
        }
    }
}

pub fn graph_from_file(file: &GraphFile) -> Result<EdgeLabeledGraph, Error> {
    let mut edges = Vec::with_capacity(file.edges.len());
    for e in &file.edges {
        let label = parse_poly(&e.label)?;
        let factors = match &e.factors {
            None => None,
            Some(list) => {
                let parsed: Result<Vec<(Poly, u32)>, Error> =
                    list.iter().map(|(f, m)| Ok((parse_poly(f)?, *m))).collect();
                Some(FactoredGen::new(Rat::one(), parsed?)?)
            }
        };
        edges.push((e.u.clone(), e.v.clone(), label, factors));
    }
    Ok(EdgeLabeledGraph::new(file.vertices.clone(), edges)?)
}

pub fn graph_to_file(graph: &EdgeLabeledGraph) -> GraphFile {
    GraphFile {
        vertices: graph.vertex_ids().to_vec(),
        edges: graph
            .edges()
            .iter()
            .map(|e| EdgeFile {
                u: graph.vertex_id(e.u).to_string(),
                v: graph.vertex_id(e.v).to_string(),
                label: e.label.to_string(),
                factors: e.factors.as_ref().map(|fg| {
                    fg.factors()
                        .iter()
                        .map(|(f, m)| (f.to_string(), *m))
                        .collect()
                }),
            })
            .collect(),
    }
}

pub fn load_graph(path: &Path) -> Result<EdgeLabeledGraph, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: GraphFile = serde_json::from_str(&text)?;
    graph_from_file(&file)
}

/// Resolve a spline file against a graph: entries must cover exactly the
/// graph's vertices. When the file embeds or references a graph it must
/// match the one supplied.
pub fn spline_from_file(
    file: &SplineFile,
    graph: &Arc<EdgeLabeledGraph>,
    base_dir: Option<&Path>,
) -> Result<Spline, Error> {
    if let Some(graph_ref) = &file.graph {
        let other = match graph_ref {
            GraphRef::Inline(gf) => graph_from_file(gf)?,
            GraphRef::Path(p) => {
                let path = match base_dir {
                    Some(dir) => dir.join(p),
                    None => std::path::PathBuf::from(p),
                };
                load_graph(&path)?
            }
        };
        if other != **graph {
            return Err(Error::Format(
                "spline file references a different graph".into(),
            ));
        }
    }
    let mut entries = Vec::with_capacity(graph.num_vertices());
    for id in graph.vertex_ids() {
        let text = file
            .entries
            .get(id)
            .ok_or_else(|| Error::Format(format!("missing entry for vertex `{id}`")))?;
        entries.push(parse_poly(text)?);
    }
    if file.entries.len() != graph.num_vertices() {
        return Err(Error::Format(
            "spline file has entries for unknown vertices".into(),
        ));
    }
    Ok(verify_gkm(graph, entries).map_err(crate::error::MgsError::Spline)?)
}

pub fn load_spline(path: &Path, graph: &Arc<EdgeLabeledGraph>) -> Result<Spline, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: SplineFile = serde_json::from_str(&text)?;
    spline_from_file(&file, graph, path.parent())
}

pub fn genset_to_file(set: &GeneratingSet) -> GenSetFile {
    let graph = set.graph();
    let generators = set
        .elements()
        .iter()
        .enumerate()
        .map(|(i, s)| GeneratorFile {
            entries: graph
                .vertex_ids()
                .iter()
                .enumerate()
                .map(|(vi, id)| (id.clone(), s.entry(vi).to_string()))
                .collect(),
            degree: set.element_degree(i).ok(),
        })
        .collect();
    GenSetFile {
        generators,
        degree_sequence: set.degree_sequence().ok(),
    }
}

pub fn genset_from_file(
    file: &GenSetFile,
    graph: &Arc<EdgeLabeledGraph>,
) -> Result<GeneratingSet, Error> {
    let mut elements = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        let spline_file = SplineFile {
            graph: None,
            entries: g.entries.clone(),
        };
        elements.push(spline_from_file(&spline_file, graph, None)?);
    }
    Ok(
        GeneratingSet::new(graph.clone(), elements, None)
            .map_err(crate::error::MgsError::Spline)?,
    )
}

pub fn load_genset(path: &Path, graph: &Arc<EdgeLabeledGraph>) -> Result<GeneratingSet, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: GenSetFile = serde_json::from_str(&text)?;
    genset_from_file(&file, graph)
}

pub fn pinwheel_from_file(file: &PinwheelFile) -> Result<Pinwheel, Error> {
    let center = (file.center[0].to_rat()?, file.center[1].to_rat()?);
    let rays: Result<Vec<LinForm>, Error> = file
        .rays
        .iter()
        .map(|r| {
            let poly = parse_poly(r.as_str())?;
            if poly.used_vars() > 2 {
                return Err(Error::Format(format!(
                    "ray `{}` must be a linear form in x, y",
                    r.as_str()
                )));
            }
            Ok(LinForm::from_poly(&poly.with_nvars(2))?)
        })
        .collect();
    Ok(Pinwheel::new(center, rays?, file.r)?)
}

pub fn load_pinwheel(path: &Path) -> Result<Pinwheel, Error> {
    let text = std::fs::read_to_string(path)?;
    let file: PinwheelFile = serde_json::from_str(&text)?;
    pinwheel_from_file(&file)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
