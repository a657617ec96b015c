//! Turning an arbitrary digraph into a DAG.
//!
//! Two strategies: delete a greedy feedback edge set, or collapse every
//! strongly connected component into a single supernode.

use std::collections::BTreeSet;

use crate::graph::{scc, Digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcyclifyMode {
    Removal,
    Condense,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclifyResult {
    pub dag: Digraph,
    /// Edges deleted from the input, in `(source, target)` order. Always
    /// empty for [`AcyclifyMode::Condense`].
    pub removed: Vec<(usize, usize)>,
    /// Input vertex -> vertex of `dag`.
    pub supernode_map: Vec<usize>,
    pub mode: AcyclifyMode,
}

impl AcyclifyResult {
    /// Input vertices folded into each vertex of `dag`, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.dag.n()];
        for (v, &s) in self.supernode_map.iter().enumerate() {
            members[s].push(v);
        }
        members
    }
}

/// Eades–Lin–Smyth vertex sequencing; every edge pointing backwards in the
/// sequence is deleted.
pub fn greedy_cycle_removal(g: &Digraph) -> AcyclifyResult {
    let sequence = greedy_sequence(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in sequence.iter().enumerate() {
        position[v] = i;
    }

    let mut dag = Digraph::with_labels(g.labels().to_vec());
    let mut removed = Vec::new();
    for (u, v) in g.edges() {
        if position[u] < position[v] {
            dag.add_edge(u, v);
        } else {
            removed.push((u, v));
        }
    }
    AcyclifyResult {
        dag,
        removed,
        supernode_map: (0..g.n()).collect(),
        mode: AcyclifyMode::Removal,
    }
}

/// The vertex sequence `s1 s2` of the greedy heuristic. Sinks are peeled to
/// the right end, sources to the left end, and otherwise the vertex with the
/// largest `outdeg - indeg` goes left. Ties go to the smallest id.
fn greedy_sequence(g: &Digraph) -> Vec<usize> {
    let n = g.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.predecessors(v).len()).collect();
    let mut outdeg: Vec<usize> = (0..n).map(|v| g.successors(v).len()).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;

    let mut sinks: BTreeSet<usize> = (0..n).filter(|&v| outdeg[v] == 0).collect();
    let mut sources: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0 && outdeg[v] > 0).collect();

    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);

    let remove = |v: usize,
                  alive: &mut Vec<bool>,
                  indeg: &mut Vec<usize>,
                  outdeg: &mut Vec<usize>,
                  sinks: &mut BTreeSet<usize>,
                  sources: &mut BTreeSet<usize>| {
        alive[v] = false;
        sinks.remove(&v);
        sources.remove(&v);
        for &w in g.successors(v) {
            if alive[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 && outdeg[w] > 0 {
                    sources.insert(w);
                }
            }
        }
        for &w in g.predecessors(v) {
            if alive[w] {
                outdeg[w] -= 1;
                if outdeg[w] == 0 {
                    sources.remove(&w);
                    sinks.insert(w);
                }
            }
        }
    };

    while remaining > 0 {
        while let Some(v) = sinks.pop_first() {
            remove(
                v,
                &mut alive,
                &mut indeg,
                &mut outdeg,
                &mut sinks,
                &mut sources,
            );
            right.push(v);
            remaining -= 1;
        }
        while let Some(v) = sources.pop_first() {
            remove(
                v,
                &mut alive,
                &mut indeg,
                &mut outdeg,
                &mut sinks,
                &mut sources,
            );
            left.push(v);
            remaining -= 1;
        }
        if remaining > 0 && sinks.is_empty() {
            let v = (0..n)
                .filter(|&v| alive[v])
                .max_by_key(|&v| (outdeg[v] as isize - indeg[v] as isize, std::cmp::Reverse(v)))
                .expect("a live vertex");
            remove(
                v,
                &mut alive,
                &mut indeg,
                &mut outdeg,
                &mut sinks,
                &mut sources,
            );
            left.push(v);
            remaining -= 1;
        }
    }

    right.reverse();
    left.extend(right);
    left
}

/// Collapses each strongly connected component to one vertex.
///
/// Supernodes are numbered by their smallest member, so a DAG maps onto
/// itself. A supernode with several members is labelled `{a,b,c}`.
pub fn condense(g: &Digraph) -> AcyclifyResult {
    let mut components = scc(g);
    components.sort_by_key(|c| c[0]);

    let mut supernode_map = vec![0; g.n()];
    let labels = components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            for &v in comp {
                supernode_map[v] = i;
            }
            if comp.len() == 1 {
                g.label(comp[0]).to_string()
            } else {
                let names: Vec<&str> = comp.iter().map(|&v| g.label(v)).collect();
                format!("{{{}}}", names.join(","))
            }
        })
        .collect();

    let mut dag = Digraph::with_labels(labels);
    for (u, v) in g.edges() {
        let (a, b) = (supernode_map[u], supernode_map[v]);
        if a != b {
            dag.add_edge(a, b);
        }
    }
    AcyclifyResult {
        dag,
        removed: Vec::new(),
        supernode_map,
        mode: AcyclifyMode::Condense,
    }
}
