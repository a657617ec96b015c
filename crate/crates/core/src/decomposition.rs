//! Path and channel decompositions of a DAG.
//!
//! A decomposition partitions the vertices into ordered chains. In a *path*
//! decomposition consecutive vertices of a chain are joined by an edge; in a
//! *channel* decomposition they only need to be connected by some path. Every
//! path decomposition is therefore also a channel decomposition.

use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::graph::{closure, topological_ranks, Digraph, TopoRanks};
use crate::matching::maximum_matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Path,
    Channel,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Path => "path",
            ChainKind::Channel => "channel",
        })
    }
}

/// Why a list of chains is not a valid decomposition of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {vertex} appears more than once")]
    Duplicate { vertex: usize },
    #[error("vertex {vertex} is not covered")]
    Missing { vertex: usize },
    #[error("chain {chain} is empty")]
    EmptyChain { chain: usize },
    #[error("decomposition covers {found} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("chain {chain}: ({from}, {to}) is not an edge")]
    NotAnEdge {
        chain: usize,
        from: usize,
        to: usize,
    },
    #[error("chain {chain}: {to} is not reachable from {from}")]
    NotReachable {
        chain: usize,
        from: usize,
        to: usize,
    },
}

/// An ordered partition of `0..n` into chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    kind: ChainKind,
    chains: Vec<Vec<usize>>,
    /// vertex -> (chain index, position within the chain)
    place: Vec<(usize, usize)>,
}

impl Decomposition {
    /// Checks that `chains` partition `0..n`, where `n` is the total number
    /// of listed vertices. Graph-dependent checks live in [`validate`].
    pub fn new(kind: ChainKind, chains: Vec<Vec<usize>>) -> Result<Self, Violation> {
        let n: usize = chains.iter().map(Vec::len).sum();
        let mut place = vec![(usize::MAX, usize::MAX); n];
        for (i, chain) in chains.iter().enumerate() {
            if chain.is_empty() {
                return Err(Violation::EmptyChain { chain: i });
            }
            for (j, &v) in chain.iter().enumerate() {
                if v >= n {
                    // Some id below n must then be absent.
                    let missing = (0..n)
                        .find(|&w| !chains.iter().any(|c| c.contains(&w)))
                        .unwrap_or(n);
                    return Err(Violation::Missing { vertex: missing });
                }
                if place[v].0 != usize::MAX {
                    return Err(Violation::Duplicate { vertex: v });
                }
                place[v] = (i, j);
            }
        }
        Ok(Decomposition {
            kind,
            chains,
            place,
        })
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn chain(&self, i: usize) -> &[usize] {
        &self.chains[i]
    }

    /// Number of chains.
    pub fn k(&self) -> usize {
        self.chains.len()
    }

    /// Number of vertices covered.
    pub fn n(&self) -> usize {
        self.place.len()
    }

    pub fn chain_of(&self, v: usize) -> usize {
        self.place[v].0
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.place[v].1
    }

    /// Same chains, relabelled as a channel decomposition.
    pub fn as_channels(&self) -> Decomposition {
        Decomposition {
            kind: ChainKind::Channel,
            ..self.clone()
        }
    }
}

/// Checks `d` against `dag`: sizes agree and every consecutive pair is an
/// edge (paths) or a reachable pair (channels).
pub fn validate(dag: &Digraph, d: &Decomposition) -> Result<(), Violation> {
    if d.n() != dag.n() {
        return Err(Violation::SizeMismatch {
            expected: dag.n(),
            found: d.n(),
        });
    }
    match d.kind {
        ChainKind::Path => {
            for (chain, c) in d.chains.iter().enumerate() {
                for w in c.windows(2) {
                    if !dag.has_edge(w[0], w[1]) {
                        return Err(Violation::NotAnEdge {
                            chain,
                            from: w[0],
                            to: w[1],
                        });
                    }
                }
            }
        }
        ChainKind::Channel => {
            let reach = closure(dag);
            for (chain, c) in d.chains.iter().enumerate() {
                for w in c.windows(2) {
                    if !reach.get(w[0], w[1]) {
                        return Err(Violation::NotReachable {
                            chain,
                            from: w[0],
                            to: w[1],
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Minimum number of vertex-disjoint paths covering the DAG.
///
/// Each edge `(u, v)` becomes a left-`u` / right-`v` pair of a bipartite
/// graph; a maximum matching picks the successor of every vertex, leaving
/// `n - |matching|` paths.
///
/// ```
/// use chandraw::{decomposition::min_path_decomposition, Digraph};
///
/// let diamond = Digraph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
/// let sp = min_path_decomposition(&diamond).unwrap();
/// assert_eq!(sp.chains(), &[vec![0, 1, 3], vec![2]]);
/// ```
pub fn min_path_decomposition(dag: &Digraph) -> Result<Decomposition, Error> {
    let ranks = topological_ranks(dag)?;
    let adj: Vec<Vec<usize>> = (0..dag.n()).map(|u| dag.successors(u).to_vec()).collect();
    Ok(chains_from_matching(ChainKind::Path, &adj, &ranks))
}

/// Minimum chain cover, whose size equals the width of the DAG.
///
/// Same matching construction as [`min_path_decomposition`], applied to the
/// transitive closure.
pub fn min_channel_decomposition(dag: &Digraph) -> Result<Decomposition, Error> {
    let ranks = topological_ranks(dag)?;
    let adj = reachable_sets(dag, &ranks);
    Ok(chains_from_matching(ChainKind::Channel, &adj, &ranks))
}

/// Width of the DAG: the largest set of pairwise unreachable vertices.
pub fn width(dag: &Digraph) -> Result<usize, Error> {
    Ok(min_channel_decomposition(dag)?.k())
}

fn chains_from_matching(kind: ChainKind, adj: &[Vec<usize>], ranks: &TopoRanks) -> Decomposition {
    let n = adj.len();
    let mate = maximum_matching(adj, n);
    let mut has_pred = vec![false; n];
    for v in mate.iter().flatten() {
        has_pred[*v] = true;
    }
    let mut heads: Vec<usize> = (0..n).filter(|&v| !has_pred[v]).collect();
    heads.sort_by_key(|&v| ranks.rank(v));
    let chains = heads
        .into_iter()
        .map(|head| {
            let mut chain = vec![head];
            let mut at = head;
            while let Some(next) = mate[at] {
                chain.push(next);
                at = next;
            }
            chain
        })
        .collect();
    Decomposition::new(kind, chains).expect("matching yields a partition")
}

/// Sorted descendant lists, built bottom-up with bitsets.
fn reachable_sets(dag: &Digraph, ranks: &TopoRanks) -> Vec<Vec<usize>> {
    let n = dag.n();
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    for &u in ranks.order().iter().rev() {
        for &w in dag.successors(u) {
            bits[u * words + w / 64] |= 1 << (w % 64);
            for i in 0..words {
                let word = bits[w * words + i];
                bits[u * words + i] |= word;
            }
        }
    }
    (0..n)
        .map(|u| {
            let row = &bits[u * words..(u + 1) * words];
            (0..n)
                .filter(|&v| row[v / 64] >> (v % 64) & 1 == 1)
                .collect()
        })
        .collect()
}

/// Reads the decomposition file format: a `kind=path` or `kind=channel`
/// header, then one chain per line as whitespace-separated vertex labels.
/// `#` comments and blank lines are ignored.
pub fn parse_decomposition(text: &str, g: &Digraph) -> Result<Decomposition, Error> {
    let mut kind = None;
    let mut chains = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if kind.is_none() {
            let value = content.strip_prefix("kind=").ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: "expected a `kind=path` or `kind=channel` header".into(),
            })?;
            kind = Some(match value.trim() {
                "path" => ChainKind::Path,
                "channel" => ChainKind::Channel,
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("unknown decomposition kind `{other}`"),
                    })
                }
            });
            continue;
        }
        let chain = content
            .split_whitespace()
            .map(|label| {
                g.vertex(label)
                    .ok_or_else(|| Error::UnknownVertex(label.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        chains.push(chain);
    }
    let kind = kind.ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing `kind=` header".into(),
    })?;
    Ok(Decomposition::new(kind, chains)?)
}

pub fn to_text(d: &Decomposition, g: &Digraph) -> String {
    let mut out = format!("kind={}\n", d.kind);
    for chain in &d.chains {
        let labels: Vec<&str> = chain.iter().map(|&v| g.label(v)).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
