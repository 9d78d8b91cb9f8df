//! Versioned JSON documents for graphs, diagrams, loop systems and
//! corpora, plus the one-line text form of braid words.
//!
//! Every document is `{"format", "version", "content"}`. Parsing only
//! checks shape; graph invariants are left to `validate`.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cell::CellGraph;
use crate::config::SectorConfig;
use crate::enumeration::ChordDiagram;
use crate::error::{Error, Result};
use crate::graph::{Item, StandardGraph, VertexId};
use crate::loops::LoopSystem;

pub const VERSION: u32 = 1;

/// A value with a JSON document form.
pub trait Document: Sized {
    const FORMAT: &'static str;
    /// Conventional file extension, without the dot.
    const EXTENSION: &'static str;
    type Body: Serialize + DeserializeOwned;

    fn to_body(&self) -> Self::Body;
    fn from_body(body: Self::Body) -> Result<Self>;
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    format: String,
    version: u32,
    content: T,
}

#[derive(Deserialize)]
struct Header {
    format: String,
    version: u32,
    #[allow(dead_code)]
    content: serde::de::IgnoredAny,
}

pub fn to_text<D: Document>(x: &D) -> String {
    let env = Envelope { format: D::FORMAT.to_string(), version: VERSION, content: x.to_body() };
    let mut s = serde_json::to_string_pretty(&env).expect("documents serialize");
    s.push('\n');
    s
}

fn json_error(e: serde_path_to_error::Error<serde_json::Error>) -> Error {
    let path = e.path().to_string();
    let inner = e.into_inner();
    Error::parse(inner.line(), if path == "." { "document".into() } else { path }, inner.to_string())
}

pub fn from_text<D: Document>(s: &str) -> Result<D> {
    let de = &mut serde_json::Deserializer::from_str(s);
    let header: Header = serde_path_to_error::deserialize(de).map_err(json_error)?;
    if header.format != D::FORMAT {
        return Err(Error::parse(
            1,
            "format",
            format!("expected {:?}, found {:?}", D::FORMAT, header.format),
        ));
    }
    if header.version != VERSION {
        return Err(Error::parse(1, "version", format!("unsupported version {}", header.version)));
    }
    let de = &mut serde_json::Deserializer::from_str(s);
    let env: Envelope<D::Body> = serde_path_to_error::deserialize(de).map_err(json_error)?;
    D::from_body(env.content)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: u32,
    /// Counterclockwise rotation, `v<id>` for edges and `r<ray>` for rays.
    pub rotation: Vec<Item>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphBody {
    pub config: SectorConfig,
    pub vertices: Vec<VertexEntry>,
}

impl Document for StandardGraph {
    const FORMAT: &'static str = "stokes-sgraph";
    const EXTENSION: &'static str = "sgraph";
    type Body = GraphBody;

    fn to_body(&self) -> GraphBody {
        GraphBody {
            config: self.config().clone(),
            vertices: self
                .rotations()
                .iter()
                .map(|(v, items)| VertexEntry { id: v.0, rotation: items.clone() })
                .collect(),
        }
    }

    fn from_body(body: GraphBody) -> Result<Self> {
        let mut vertices = BTreeMap::new();
        for (i, v) in body.vertices.into_iter().enumerate() {
            if vertices.insert(VertexId(v.id), v.rotation).is_some() {
                return Err(Error::parse(0, format!("content.vertices[{i}].id"), format!("duplicate vertex id {}", v.id)));
            }
        }
        Ok(StandardGraph::from_rotations(body.config, vertices))
    }
}

impl Document for CellGraph {
    const FORMAT: &'static str = "stokes-cgraph";
    const EXTENSION: &'static str = "cgraph";
    type Body = CellGraph;

    fn to_body(&self) -> CellGraph {
        self.clone()
    }

    fn from_body(body: CellGraph) -> Result<Self> {
        Ok(body)
    }
}

impl Document for ChordDiagram {
    const FORMAT: &'static str = "stokes-chords";
    const EXTENSION: &'static str = "chords";
    type Body = ChordDiagram;

    fn to_body(&self) -> ChordDiagram {
        self.clone()
    }

    fn from_body(body: ChordDiagram) -> Result<Self> {
        Ok(body)
    }
}

impl Document for LoopSystem {
    const FORMAT: &'static str = "stokes-loops";
    const EXTENSION: &'static str = "loops";
    type Body = LoopSystem;

    fn to_body(&self) -> LoopSystem {
        self.clone()
    }

    fn from_body(body: LoopSystem) -> Result<Self> {
        Ok(body)
    }
}

/// A set of standard graphs sharing one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub config: SectorConfig,
    pub max_chain: Option<usize>,
    pub graphs: Vec<StandardGraph>,
}

#[derive(Serialize, Deserialize)]
pub struct CorpusBody {
    pub config: SectorConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_chain: Option<usize>,
    pub graphs: Vec<Vec<VertexEntry>>,
}

impl Document for Corpus {
    const FORMAT: &'static str = "stokes-corpus";
    const EXTENSION: &'static str = "corpus";
    type Body = CorpusBody;

    fn to_body(&self) -> CorpusBody {
        CorpusBody {
            config: self.config.clone(),
            max_chain: self.max_chain,
            graphs: self.graphs.iter().map(|g| g.to_body().vertices).collect(),
        }
    }

    fn from_body(body: CorpusBody) -> Result<Self> {
        let graphs = body
            .graphs
            .into_iter()
            .enumerate()
            .map(|(i, vertices)| {
                StandardGraph::from_body(GraphBody { config: body.config.clone(), vertices }).map_err(|e| match e {
                    Error::Parse { line, field, message } => {
                        Error::Parse { line, field: field.replace("content.", &format!("content.graphs[{i}].")), message }
                    }
                    other => other,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Corpus { config: body.config, max_chain: body.max_chain, graphs })
    }
}
