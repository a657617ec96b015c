//! Simple directed graphs with dense vertex ids.
//!
//! A [`Digraph`] never holds self-loops or parallel edges. Vertices are
//! numbered `0..n` and each carries an external label, which is how the
//! edge-list text format names them.

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;

/// A simple directed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    labels: Vec<String>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    /// Creates an edgeless graph whose labels are the decimal vertex ids.
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).map(|v| v.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Digraph {
            labels,
            succ: vec![Vec::new(); n],
            pred: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph on `0..n` from an edge slice, silently dropping
    /// self-loops and duplicates.
    ///
    /// ```
    /// use chandraw::Digraph;
    ///
    /// let g = Digraph::from_edges(3, &[(0, 1), (1, 2), (1, 2), (2, 2)]);
    /// assert_eq!(g.m(), 2);
    /// ```
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Digraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts `(u, v)`. Returns `false` if the edge is a self-loop or is
    /// already present.
    ///
    /// Panics if either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n(), "edge ({u}, {v}) out of range");
        if u == v {
            return false;
        }
        match self.succ[u].binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.succ[u].insert(at, v);
                let at = self.pred[v].binary_search(&u).unwrap_err();
                self.pred[v].insert(at, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Successors of `u` in ascending id order.
    pub fn successors(&self, u: usize) -> &[usize] {
        &self.succ[u]
    }

    /// Predecessors of `v` in ascending id order.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    /// All edges, sorted by `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks up a vertex by label.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Result of [`parse_edge_list`]: the graph plus what normalization dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Digraph,
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Parses the `<src> <dst>` edge-list format.
///
/// Labels are arbitrary whitespace-free tokens, assigned dense ids in order of
/// first appearance. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list<'a>(text: &'a str) -> Result<ParsedGraph, Error> {
    let mut ids: HashMap<&'a str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut raw: Vec<(usize, usize)> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let content = match line.find('#') {
            Some(at) => &line[..at],
            None => line,
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected `<src> <dst>`, found {} tokens", tokens.len()),
            });
        }
        let mut id = |tok: &'a str| -> usize {
            *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        };
        let u = id(tokens[0]);
        let v = id(tokens[1]);
        raw.push((u, v));
    }

    let mut graph = Digraph::with_labels(labels);
    let (mut self_loops, mut duplicates) = (0, 0);
    for (u, v) in raw {
        if u == v {
            self_loops += 1;
        } else if !graph.add_edge(u, v) {
            duplicates += 1;
        }
    }
    Ok(ParsedGraph {
        graph,
        self_loops,
        duplicates,
    })
}

/// Serializes a graph back to the edge-list format, one edge per line.
/// Isolated vertices are lost since the format has no vertex-only lines.
pub fn to_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    out
}

/// A topological numbering: `rank(v)` is the position of `v` in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoRanks {
    rank: Vec<usize>,
    order: Vec<usize>,
}

impl TopoRanks {
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Vertices in topological order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }
}

/// Kahn source elimination, always taking the smallest available id.
pub fn topological_ranks(g: &Digraph) -> Result<TopoRanks, Error> {
    let n = g.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.predecessors(v).len()).collect();
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop_first() {
        order.push(u);
        for &v in g.successors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.insert(v);
            }
        }
    }
    if order.len() < n {
        // Every leftover vertex keeps a leftover predecessor, so walking
        // backwards must revisit a vertex, and that vertex lies on a cycle.
        let mut seen = vec![false; n];
        let mut vertex = (0..n).find(|&v| indeg[v] > 0).expect("leftover vertex");
        while !seen[vertex] {
            seen[vertex] = true;
            vertex = *g
                .predecessors(vertex)
                .iter()
                .find(|&&p| indeg[p] > 0)
                .expect("leftover predecessor");
        }
        return Err(Error::Cycle {
            vertex: g.label(vertex).to_string(),
        });
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    Ok(TopoRanks { rank, order })
}

pub fn is_acyclic(g: &Digraph) -> bool {
    topological_ranks(g).is_ok()
}

/// Strongly connected components (Tarjan), listed in reverse topological
/// order of the condensation. Each component is sorted ascending.
pub fn scc(g: &Digraph) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    // Iterative DFS: (vertex, next successor offset).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        frames.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut offset)) = frames.last_mut() {
            if let Some(&w) = g.successors(u).get(*offset) {
                *offset += 1;
                if index[w] == UNVISITED {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == u {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// Dense reachability table: `get(u, v)` iff a nonempty path `u ⇝ v` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    n: usize,
    cells: Vec<bool>,
}

impl ReachMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.cells[u * self.n + v]
    }

    /// All reachable pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (0..self.n)
                .filter(move |&v| self.get(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// The table viewed as a graph (its transitive closure graph).
    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for (u, v) in self.pairs() {
            g.add_edge(u, v);
        }
        g
    }
}

/// Reachability by one traversal per source vertex. Works on cyclic graphs.
pub fn closure(g: &Digraph) -> ReachMatrix {
    let n = g.n();
    let mut cells = vec![false; n * n];
    let mut stack = Vec::new();
    for s in 0..n {
        let row = &mut cells[s * n..(s + 1) * n];
        stack.extend_from_slice(g.successors(s));
        while let Some(v) = stack.pop() {
            if !row[v] {
                row[v] = true;
                stack.extend_from_slice(g.successors(v));
            }
        }
    }
    ReachMatrix { n, cells }
}
