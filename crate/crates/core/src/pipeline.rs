//! Edge list in, [`LayoutDocument`] out.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::acyclic::{condense, greedy_cycle_removal, AcyclifyMode, AcyclifyResult};
use crate::ctc::{build_ctc_graph, compute_ctc, query, CtcGraph, CtcLists, Witness};
use crate::decomposition::{
    min_channel_decomposition, min_path_decomposition, parse_decomposition, validate, Decomposition,
};
use crate::document::{DocumentParts, DrawMode, LayoutDocument};
use crate::error::Error;
use crate::graph::{parse_edge_list, topological_ranks, Digraph, TopoRanks};
use crate::layout::{build_path_graph, draw, prune, DerivedGraph, Layout, OverlapMode};
use crate::ordering::{
    best_order, cross_counts, greedy_order, CrossMatrix, DEFAULT_BEST_ORDER_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleMode {
    Remove,
    Condense,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Decompose {
    MinPath,
    MinChannel,
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderMode {
    /// Chains left to right in decomposition order.
    Input,
    Best,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub mode: DrawMode,
    pub cycles: CycleMode,
    /// `None` picks the minimum decomposition matching `mode`.
    pub decompose: Option<Decompose>,
    pub order: OrderMode,
    pub overlap: OverlapMode,
    pub best_order_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            mode: DrawMode::Pch,
            cycles: CycleMode::Remove,
            decompose: None,
            order: OrderMode::Input,
            overlap: OverlapMode::Merge,
            best_order_cap: DEFAULT_BEST_ORDER_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Read,
    Parse,
    Acyclify,
    Decompose,
    Derive,
    Order,
    Draw,
    Query,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Read => "read",
            Stage::Parse => "parse",
            Stage::Acyclify => "acyclify",
            Stage::Decompose => "decompose",
            Stage::Derive => "derive",
            Stage::Order => "order",
            Stage::Draw => "draw",
            Stage::Query => "query",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {error}")]
pub struct PipelineError {
    pub stage: Stage,
    pub error: Error,
}

impl PipelineError {
    pub fn is_constraint(&self) -> bool {
        self.error.is_constraint()
    }
}

fn at(stage: Stage) -> impl Fn(Error) -> PipelineError {
    move |error| PipelineError { stage, error }
}

/// Every intermediate product up to, but not including, the drawing.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub mode: DrawMode,
    pub input: Digraph,
    pub acyclic: AcyclifyResult,
    pub ranks: TopoRanks,
    /// Channel kind in `cch` mode.
    pub decomposition: Decomposition,
    pub ctc: Option<(CtcLists, CtcGraph)>,
    pub derived: DerivedGraph,
    pub cross: CrossMatrix,
    pub order: Vec<usize>,
}

impl Prepared {
    pub fn dag(&self) -> &Digraph {
        &self.acyclic.dag
    }

    pub fn draw(&self, overlap: OverlapMode) -> Result<Layout, PipelineError> {
        draw(
            &self.derived,
            &self.decomposition,
            &self.ranks,
            &self.order,
            overlap,
        )
        .map_err(at(Stage::Draw))
    }

    pub fn document(&self, layout: &Layout) -> LayoutDocument {
        LayoutDocument::new(
            layout,
            DocumentParts {
                mode: self.mode,
                dag: self.dag(),
                decomposition: &self.decomposition,
                cross: &self.cross,
                ctc: self.ctc.as_ref().map(|(lists, _)| lists),
                removed_edges: self.acyclic.removed.len(),
            },
        )
    }
}

/// Runs every stage before drawing on edge-list `text`.
pub fn prepare(text: &str, cfg: &Config) -> Result<Prepared, PipelineError> {
    let input = parse_edge_list(text).map_err(at(Stage::Parse))?.graph;
    let acyclic = match cfg.cycles {
        CycleMode::Remove => greedy_cycle_removal(&input),
        CycleMode::Condense => condense(&input),
        CycleMode::Fail => {
            topological_ranks(&input).map_err(at(Stage::Acyclify))?;
            AcyclifyResult {
                dag: input.clone(),
                removed: Vec::new(),
                supernode_map: (0..input.n()).collect(),
                mode: AcyclifyMode::Removal,
            }
        }
    };
    let dag = &acyclic.dag;
    let ranks = topological_ranks(dag).map_err(at(Stage::Acyclify))?;

    let decompose = cfg.decompose.clone().unwrap_or(match cfg.mode {
        DrawMode::Pch => Decompose::MinPath,
        DrawMode::Cch => Decompose::MinChannel,
    });
    let d = match &decompose {
        Decompose::MinPath => min_path_decomposition(dag).map_err(at(Stage::Decompose))?,
        Decompose::MinChannel => min_channel_decomposition(dag).map_err(at(Stage::Decompose))?,
        Decompose::File(path) => {
            let text = read(path).map_err(at(Stage::Read))?;
            let d = parse_decomposition(&text, dag).map_err(at(Stage::Decompose))?;
            validate(dag, &d).map_err(|v| at(Stage::Decompose)(v.into()))?;
            d
        }
    };

    let (decomposition, ctc, mut derived) = match cfg.mode {
        DrawMode::Pch => {
            let h = build_path_graph(dag, &d).map_err(at(Stage::Derive))?;
            (d, None, h)
        }
        DrawMode::Cch => {
            let sc = d.as_channels();
            let lists = compute_ctc(dag, &sc).map_err(at(Stage::Derive))?;
            let q = build_ctc_graph(&lists, &sc);
            let derived = DerivedGraph::from_ctc(&q, dag, &sc);
            (sc, Some((lists, q)), derived)
        }
    };
    if cfg.overlap == OverlapMode::Prune {
        derived = prune(&derived, &decomposition);
    }

    let cross = cross_counts(&derived, &decomposition);
    let order = match cfg.order {
        OrderMode::Input => (0..decomposition.k()).collect(),
        OrderMode::Best => {
            best_order(&cross, cfg.best_order_cap)
                .map_err(at(Stage::Order))?
                .0
        }
        OrderMode::Greedy => greedy_order(&cross),
    };

    Ok(Prepared {
        mode: cfg.mode,
        input,
        acyclic,
        ranks,
        decomposition,
        ctc,
        derived,
        cross,
        order,
    })
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// The whole pipeline on edge-list `text`.
///
/// ```
/// use chandraw::pipeline::{run_text, Config, OrderMode};
///
/// let cfg = Config { order: OrderMode::Best, ..Config::default() };
/// let doc = run_text("0 1\n0 2\n1 3\n2 3\n", &cfg).unwrap();
/// assert_eq!((doc.stats.k, doc.stats.bends, doc.stats.theta), (2, 0, 0));
/// ```
pub fn run_text(text: &str, cfg: &Config) -> Result<LayoutDocument, PipelineError> {
    let prepared = prepare(text, cfg)?;
    let layout = prepared.draw(cfg.overlap)?;
    Ok(prepared.document(&layout))
}

pub fn run_pipeline(input: &Path, cfg: &Config) -> Result<LayoutDocument, PipelineError> {
    run_text(&read(input).map_err(at(Stage::Read))?, cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryAnswer {
    Witness(Witness),
    /// Both labels were folded into the same supernode by condensation.
    SameComponent(usize),
}

/// Reachability between two input labels, answered on `Q`.
pub fn query_labels(p: &Prepared, u: &str, v: &str) -> Result<QueryAnswer, PipelineError> {
    let Some((_, q)) = &p.ctc else {
        return Err(at(Stage::Query)(Error::Mismatch(
            "queries need the cch mode".into(),
        )));
    };
    let lookup = |label: &str| {
        p.input
            .vertex(label)
            .map(|x| p.acyclic.supernode_map[x])
            .ok_or_else(|| at(Stage::Query)(Error::UnknownVertex(label.to_string())))
    };
    let (a, b) = (lookup(u)?, lookup(v)?);
    if a == b && u != v {
        return Ok(QueryAnswer::SameComponent(a));
    }
    query(q, &p.decomposition, a, b)
        .map(QueryAnswer::Witness)
        .map_err(at(Stage::Query))
}

/// One line: `unreachable`, `mc-path: a -> b`, or
/// `dc-path: a -> b => c -> d` with `=>` marking the cross edge.
pub fn format_answer(answer: &QueryAnswer, dag: &Digraph) -> String {
    let names = |vs: &[usize]| vs.iter().map(|&v| dag.label(v)).collect::<Vec<_>>();
    match answer {
        QueryAnswer::SameComponent(s) => format!("same component: {}", dag.label(*s)),
        QueryAnswer::Witness(Witness::Unreachable) => "unreachable".to_string(),
        QueryAnswer::Witness(Witness::MonoChannel(path)) => {
            format!("mc-path: {}", names(path).join(" -> "))
        }
        QueryAnswer::Witness(Witness::DoubleChannel { path, cross }) => {
            let split = path
                .iter()
                .position(|&x| x == cross.0)
                .expect("cross edge on path")
                + 1;
            format!(
                "dc-path: {} => {}",
                names(&path[..split]).join(" -> "),
                names(&path[split..]).join(" -> ")
            )
        }
    }
}
