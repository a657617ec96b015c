//! Compressed transitive closure over a channel decomposition.
//!
//! For each vertex `v` the list `L_v` records, per channel, the earliest
//! vertex of that channel reachable from `v`; everything later in the channel
//! is then reachable too. The lists induce a sparse graph `Q` with the same
//! reachability as the input, in which any reachable pair is joined by a path
//! that uses at most one edge between channels.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decomposition::{validate, Decomposition};
use crate::error::Error;
use crate::graph::{topological_ranks, Digraph};

/// One entry of a list `L_v`: the earliest vertex of `channel` reachable
/// from `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CtcEntry {
    pub channel: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtcLists {
    lists: Vec<Vec<CtcEntry>>,
}

impl CtcLists {
    /// `L_v`, sorted by channel.
    pub fn list(&self, v: usize) -> &[CtcEntry] {
        &self.lists[v]
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn lists(&self) -> &[Vec<CtcEntry>] {
        &self.lists
    }

    /// Total number of entries over all lists.
    pub fn size(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }
}

/// Reverse-topological sweep: `L_v` is the per-channel minimum over every
/// successor `w` and every entry of `L_w`.
pub fn compute_ctc(dag: &Digraph, sc: &Decomposition) -> Result<CtcLists, Error> {
    validate(dag, sc)?;
    let ranks = topological_ranks(dag)?;
    let k = sc.k();
    let mut lists: Vec<Vec<CtcEntry>> = vec![Vec::new(); dag.n()];
    let mut best: Vec<Option<usize>> = vec![None; k];

    for &v in ranks.order().iter().rev() {
        best.iter_mut().for_each(|b| *b = None);
        let offer = |w: usize, best: &mut Vec<Option<usize>>| {
            let c = sc.chain_of(w);
            let pos = sc.position_of(w);
            if best[c].is_none_or(|p| pos < p) {
                best[c] = Some(pos);
            }
        };
        for &w in dag.successors(v) {
            offer(w, &mut best);
            for e in &lists[w] {
                offer(e.vertex, &mut best);
            }
        }
        lists[v] = best
            .iter()
            .enumerate()
            .filter_map(|(channel, pos)| {
                pos.map(|p| CtcEntry {
                    channel,
                    vertex: sc.chain(channel)[p],
                })
            })
            .collect();
    }
    Ok(CtcLists { lists })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CtcEdgeKind {
    /// Joins two consecutive vertices of one channel.
    Channel,
    /// Joins vertices of two different channels.
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CtcEdge {
    pub source: usize,
    pub target: usize,
    pub kind: CtcEdgeKind,
}

/// The graph `Q = (V, I)` induced by a set of CTC lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtcGraph {
    n: usize,
    edges: Vec<CtcEdge>,
    out: Vec<Vec<usize>>,
}

impl CtcGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> &[CtcEdge] {
        &self.edges
    }

    /// Indices into [`CtcGraph::edges`] of the edges leaving `u`.
    fn out_edges(&self, u: usize) -> impl Iterator<Item = &CtcEdge> {
        self.out[u].iter().map(|&i| &self.edges[i])
    }

    pub fn cross_edges(&self) -> impl Iterator<Item = &CtcEdge> {
        self.edges.iter().filter(|e| e.kind == CtcEdgeKind::Cross)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_edges(u).any(|e| e.target == v)
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for e in &self.edges {
            g.add_edge(e.source, e.target);
        }
        g
    }
}

/// For every channel `C` and every listed target `v`, keeps a single edge
/// into `v`: the one from the last vertex of `C` whose list contains `v`.
pub fn build_ctc_graph(ctc: &CtcLists, sc: &Decomposition) -> CtcGraph {
    let mut chosen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, list) in ctc.lists.iter().enumerate() {
        let (cu, pu) = (sc.chain_of(u), sc.position_of(u));
        for e in list {
            chosen
                .entry((cu, e.vertex))
                .and_modify(|best| {
                    if sc.position_of(*best) < pu {
                        *best = u;
                    }
                })
                .or_insert(u);
        }
    }
    let mut edges: Vec<CtcEdge> = chosen
        .into_iter()
        .map(|((cu, target), source)| CtcEdge {
            source,
            target,
            kind: if sc.chain_of(target) == cu {
                CtcEdgeKind::Channel
            } else {
                CtcEdgeKind::Cross
            },
        })
        .collect();
    edges.sort();
    let mut out = vec![Vec::new(); ctc.n()];
    for (i, e) in edges.iter().enumerate() {
        out[e.source].push(i);
    }
    CtcGraph {
        n: ctc.n(),
        edges,
        out,
    }
}

/// A reachability answer read off `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Unreachable,
    /// A run of channel edges inside one channel.
    MonoChannel(Vec<usize>),
    /// A channel run, one cross edge, then a second channel run.
    DoubleChannel {
        path: Vec<usize>,
        cross: (usize, usize),
    },
}

impl Witness {
    pub fn is_reachable(&self) -> bool {
        !matches!(self, Witness::Unreachable)
    }

    pub fn path(&self) -> &[usize] {
        match self {
            Witness::Unreachable => &[],
            Witness::MonoChannel(p) => p,
            Witness::DoubleChannel { path, .. } => path,
        }
    }
}

/// Answers "does `u` reach `v`?" with an mc-path or a dc-path of `Q`.
///
/// Among several dc-paths the one whose cross edge leaves `u`'s channel
/// earliest is returned.
pub fn query(q: &CtcGraph, sc: &Decomposition, u: usize, v: usize) -> Result<Witness, Error> {
    for x in [u, v] {
        if x >= q.n() || x >= sc.n() {
            return Err(Error::UnknownVertex(x.to_string()));
        }
    }
    if u == v {
        return Err(Error::Mismatch("query endpoints must differ".into()));
    }
    let (cu, pu) = (sc.chain_of(u), sc.position_of(u));
    let (cv, pv) = (sc.chain_of(v), sc.position_of(v));

    if cu == cv {
        return Ok(if pu < pv {
            Witness::MonoChannel(sc.chain(cu)[pu..=pv].to_vec())
        } else {
            Witness::Unreachable
        });
    }
    let source_chain = sc.chain(cu);
    for (offset, &from) in source_chain[pu..].iter().enumerate() {
        let hit = q
            .out_edges(from)
            .find(|e| sc.chain_of(e.target) == cv && sc.position_of(e.target) <= pv);
        if let Some(e) = hit {
            let mut path = source_chain[pu..=pu + offset].to_vec();
            path.extend_from_slice(&sc.chain(cv)[sc.position_of(e.target)..=pv]);
            return Ok(Witness::DoubleChannel {
                path,
                cross: (from, e.target),
            });
        }
    }
    Ok(Witness::Unreachable)
}
