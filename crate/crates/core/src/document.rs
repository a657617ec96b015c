//! The serialized drawing consumed by the SVG renderer and the viewer.

use serde::{Deserialize, Serialize};

use crate::ctc::{CtcEntry, CtcLists};
use crate::decomposition::Decomposition;
use crate::graph::Digraph;
use crate::layout::{count_channel_crossings, EdgeKind, Layout, OverlapMode, Point};
use crate::ordering::{theta, CrossMatrix};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DrawMode {
    /// Path decomposition, drawing `H` or `H′`.
    Pch,
    /// Channel decomposition, drawing the compressed-closure graph.
    Cch,
}

impl DrawMode {
    pub fn name(self) -> &'static str {
        match self {
            DrawMode::Pch => "pch",
            DrawMode::Cch => "cch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OverlapName {
    Merge,
    Shift,
    Prune,
    AllBend,
}

impl From<OverlapMode> for OverlapName {
    fn from(m: OverlapMode) -> Self {
        match m {
            OverlapMode::Merge => OverlapName::Merge,
            OverlapMode::Shift => OverlapName::Shift,
            OverlapMode::Prune => OverlapName::Prune,
            OverlapMode::AllBend => OverlapName::AllBend,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelSlot {
    pub channel: usize,
    pub x: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: usize,
    pub label: String,
    pub x: i64,
    pub y: i64,
    pub channel: usize,
    /// Position inside the channel.
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKindName {
    Channel,
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeEntry {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKindName,
    pub bend: Option<Point>,
    pub in_original: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiddenEdge {
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReachIndex {
    /// Per-vertex compressed closure lists.
    Ctc { lists: Vec<Vec<CtcEntry>> },
    /// Chain membership only.
    Chains { chains: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Stats {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub cross_edges: usize,
    pub bends: usize,
    pub theta: u64,
    pub channel_crossings: usize,
    pub removed_edges: usize,
    pub box_width: i64,
    pub box_height: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LayoutDocument {
    pub version: u32,
    pub mode: DrawMode,
    pub overlap_mode: OverlapName,
    /// Left to right.
    pub channel_order: Vec<ChannelSlot>,
    pub vertices: Vec<VertexEntry>,
    pub drawn_edges: Vec<EdgeEntry>,
    pub hidden_edges: Vec<HiddenEdge>,
    pub reach_index: ReachIndex,
    pub stats: Stats,
}

/// Everything [`LayoutDocument::new`] needs besides the layout itself.
pub struct DocumentParts<'a> {
    pub mode: DrawMode,
    pub dag: &'a Digraph,
    pub decomposition: &'a Decomposition,
    pub cross: &'a CrossMatrix,
    pub ctc: Option<&'a CtcLists>,
    pub removed_edges: usize,
}

impl LayoutDocument {
    pub fn new(layout: &Layout, parts: DocumentParts<'_>) -> Self {
        let d = parts.decomposition;
        let vertices = layout
            .positions
            .iter()
            .enumerate()
            .map(|(v, p)| VertexEntry {
                id: v,
                label: parts.dag.label(v).to_string(),
                x: p.x,
                y: p.y,
                channel: d.chain_of(v),
                index: d.position_of(v),
            })
            .collect();
        let drawn_edges = layout
            .edges
            .iter()
            .map(|e| EdgeEntry {
                source: e.source,
                target: e.target,
                kind: match e.kind {
                    EdgeKind::Chain => EdgeKindName::Channel,
                    EdgeKind::Cross => EdgeKindName::Cross,
                },
                bend: e.bend,
                in_original: e.in_original,
            })
            .collect();
        let reach_index = match parts.ctc {
            Some(ctc) => ReachIndex::Ctc {
                lists: ctc.lists().to_vec(),
            },
            None => ReachIndex::Chains {
                chains: d.chains().to_vec(),
            },
        };
        let (box_width, box_height) = match layout.bounding_box() {
            Some((lo, hi)) => (hi.x - lo.x + 1, hi.y - lo.y + 1),
            None => (0, 0),
        };
        LayoutDocument {
            version: DOCUMENT_VERSION,
            mode: parts.mode,
            overlap_mode: layout.overlap.into(),
            channel_order: layout
                .order
                .iter()
                .map(|&c| ChannelSlot {
                    channel: c,
                    x: layout.chain_x[c],
                })
                .collect(),
            vertices,
            drawn_edges,
            hidden_edges: layout
                .hidden
                .iter()
                .map(|&(source, target)| HiddenEdge { source, target })
                .collect(),
            reach_index,
            stats: Stats {
                k: d.k(),
                n: parts.dag.n(),
                m: parts.dag.m(),
                cross_edges: layout
                    .edges
                    .iter()
                    .filter(|e| e.kind == EdgeKind::Cross)
                    .count(),
                bends: layout.bends(),
                theta: theta(&layout.order, parts.cross),
                channel_crossings: count_channel_crossings(layout),
                removed_edges: parts.removed_edges,
                box_width,
                box_height,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// A plain two-column table of [`Stats`].
    pub fn stats_table(&self) -> String {
        let s = &self.stats;
        let rows: [(&str, String); 10] = [
            ("k", s.k.to_string()),
            ("n", s.n.to_string()),
            ("m", s.m.to_string()),
            ("cross edges", s.cross_edges.to_string()),
            ("bends", s.bends.to_string()),
            ("theta", s.theta.to_string()),
            ("channel crossings", s.channel_crossings.to_string()),
            ("removed edges", s.removed_edges.to_string()),
            ("bounding box", format!("{}x{}", s.box_width, s.box_height)),
            (
                "mode",
                format!("{} / {}", self.mode.name(), overlap_name(self.overlap_mode)),
            ),
        ];
        rows.iter().map(|(k, v)| format!("{k:<18}{v}\n")).collect()
    }
}

fn overlap_name(o: OverlapName) -> &'static str {
    match o {
        OverlapName::Merge => "merge",
        OverlapName::Shift => "shift",
        OverlapName::Prune => "prune",
        OverlapName::AllBend => "all-bend",
    }
}
