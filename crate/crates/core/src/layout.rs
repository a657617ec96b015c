//! Coordinate assignment for chain-constrained hierarchical drawings.
//!
//! Every chain gets its own vertical line and every vertex sits at the row
//! given by its topological rank. An edge is drawn straight unless the
//! straight segment would pass through another vertex, in which case it gets
//! exactly one bend next to its source column, one row below its target.
//!
//! The graph being drawn is a [`DerivedGraph`]: the input minus transitive
//! edges inside a chain (`H`), the same with redundant cross edges pruned
//! (`H′`), or the compressed-closure graph `Q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ctc::{CtcEdgeKind, CtcGraph};
use crate::decomposition::{validate, ChainKind, Decomposition};
use crate::error::Error;
use crate::graph::{Digraph, TopoRanks};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphSource {
    /// The path (or channel) decomposition graph.
    H,
    /// `H` with cross edges pruned to one per (source chain, target).
    HPrime,
    /// The compressed transitive closure graph.
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// Consecutive vertices of one chain.
    Chain,
    /// Vertices of two different chains.
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivedEdge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
    /// False for edges of `Q` that do not exist in the input graph.
    pub in_original: bool,
}

/// A graph derived from a DAG and one of its decompositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedGraph {
    n: usize,
    source: GraphSource,
    edges: Vec<DerivedEdge>,
    omitted: Vec<(usize, usize)>,
    chains: Vec<Vec<usize>>,
}

impl DerivedGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> GraphSource {
        self.source
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> &[DerivedEdge] {
        &self.edges
    }

    pub fn cross_edges(&self) -> impl Iterator<Item = &DerivedEdge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Cross)
    }

    /// Input edges left out of this graph, sorted.
    pub fn omitted(&self) -> &[(usize, usize)] {
        &self.omitted
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for e in &self.edges {
            g.add_edge(e.source, e.target);
        }
        g
    }

    /// `Q` as a drawable graph, flagging edges absent from `dag`.
    pub fn from_ctc(q: &CtcGraph, dag: &Digraph, sc: &Decomposition) -> Self {
        let edges: Vec<DerivedEdge> = q
            .edges()
            .iter()
            .map(|e| DerivedEdge {
                source: e.source,
                target: e.target,
                kind: match e.kind {
                    CtcEdgeKind::Channel => EdgeKind::Chain,
                    CtcEdgeKind::Cross => EdgeKind::Cross,
                },
                in_original: dag.has_edge(e.source, e.target),
            })
            .collect();
        let omitted = dag.edges().filter(|&(u, v)| !q.has_edge(u, v)).collect();
        DerivedGraph {
            n: q.n(),
            source: GraphSource::Q,
            edges,
            omitted,
            chains: sc.chains().to_vec(),
        }
    }
}

/// Keeps an edge iff it joins consecutive vertices of a chain or vertices
/// of different chains.
pub fn build_path_graph(dag: &Digraph, d: &Decomposition) -> Result<DerivedGraph, Error> {
    if d.kind() != ChainKind::Path {
        return Err(Error::Mismatch(
            "a path graph needs a path decomposition".into(),
        ));
    }
    validate(dag, d)?;
    let mut edges = Vec::new();
    let mut omitted = Vec::new();
    for (u, v) in dag.edges() {
        let kind = if d.chain_of(u) != d.chain_of(v) {
            EdgeKind::Cross
        } else if d.position_of(v) == d.position_of(u) + 1 {
            EdgeKind::Chain
        } else {
            omitted.push((u, v));
            continue;
        };
        edges.push(DerivedEdge {
            source: u,
            target: v,
            kind,
            in_original: true,
        });
    }
    Ok(DerivedGraph {
        n: dag.n(),
        source: GraphSource::H,
        edges,
        omitted,
        chains: d.chains().to_vec(),
    })
}

/// Drops cross edge `(u, v)` whenever another cross edge `(u′, v)` leaves
/// the same chain from a later position.
pub fn prune(h: &DerivedGraph, d: &Decomposition) -> DerivedGraph {
    let mut latest: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in h.cross_edges() {
        let key = (d.chain_of(e.source), e.target);
        let slot = latest.entry(key).or_insert(e.source);
        if d.position_of(e.source) > d.position_of(*slot) {
            *slot = e.source;
        }
    }
    let mut omitted = h.omitted.clone();
    let edges = h
        .edges
        .iter()
        .copied()
        .filter(|e| {
            let keep =
                e.kind == EdgeKind::Chain || latest[&(d.chain_of(e.source), e.target)] == e.source;
            if !keep {
                omitted.push((e.source, e.target));
            }
            keep
        })
        .collect();
    omitted.sort_unstable();
    DerivedGraph {
        n: h.n,
        source: if h.source == GraphSource::Q {
            GraphSource::Q
        } else {
            GraphSource::HPrime
        },
        edges,
        omitted,
        chains: h.chains.clone(),
    }
}

/// What to do when two bends land on the same point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverlapMode {
    /// Let them share the point (edges into the same target merge).
    Merge,
    /// Open a fresh column for each extra bend.
    Shift,
    /// Draw a pruned graph, where coincidences cannot occur.
    Prune,
    /// Bend every cross edge and skip the straight-line test.
    AllBend,
}

impl OverlapMode {
    pub fn name(self) -> &'static str {
        match self {
            OverlapMode::Merge => "merge",
            OverlapMode::Shift => "shift",
            OverlapMode::Prune => "prune",
            OverlapMode::AllBend => "all-bend",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrawnEdge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
    pub in_original: bool,
    pub bend: Option<Point>,
}

/// A finished drawing on the integer grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    /// Per vertex.
    pub positions: Vec<Point>,
    /// Sorted by `(source, target)`.
    pub edges: Vec<DrawnEdge>,
    /// Input edges not drawn.
    pub hidden: Vec<(usize, usize)>,
    /// x-coordinate of each chain, indexed by chain.
    pub chain_x: Vec<i64>,
    /// Chains from left to right.
    pub order: Vec<usize>,
    pub overlap: OverlapMode,
}

impl Layout {
    pub fn bends(&self) -> usize {
        self.edges.iter().filter(|e| e.bend.is_some()).count()
    }

    /// Vertex and bend points of an edge, source first.
    pub fn polyline(&self, e: &DrawnEdge) -> Vec<Point> {
        let mut pts = vec![self.positions[e.source]];
        pts.extend(e.bend);
        pts.push(self.positions[e.target]);
        pts
    }

    /// `(min, max)` corners over all vertices and bends, or `None` when the
    /// drawing is empty.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let pts = self
            .positions
            .iter()
            .copied()
            .chain(self.edges.iter().filter_map(|e| e.bend));
        pts.fold(None, |acc, p| {
            Some(match acc {
                None => (p, p),
                Some((lo, hi)) => (
                    Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                    Point::new(hi.x.max(p.x), hi.y.max(p.y)),
                ),
            })
        })
    }

    /// Pairs of edge indices whose bends share a point.
    pub fn bend_coincidences(&self) -> Vec<(usize, usize)> {
        let mut by_point: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(b) = e.bend {
                by_point.entry(b).or_default().push(i);
            }
        }
        let mut pairs = Vec::new();
        for group in by_point.values() {
            for (a, &i) in group.iter().enumerate() {
                for &j in &group[a + 1..] {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }
}

/// Lookup structure for the straight-line test: chain columns sorted by x,
/// plus the vertex on each row.
struct Grid<'a> {
    chain_x: &'a [i64],
    columns: Vec<i64>,
    row_vertex: &'a [usize],
    d: &'a Decomposition,
}

impl<'a> Grid<'a> {
    fn new(chain_x: &'a [i64], row_vertex: &'a [usize], d: &'a Decomposition) -> Self {
        let mut columns = chain_x.to_vec();
        columns.sort_unstable();
        Grid {
            chain_x,
            columns,
            row_vertex,
            d,
        }
    }

    /// First vertex strictly inside segment `p`–`q`. Only chain columns are
    /// probed, and each column holds at most one grid point of the segment.
    fn hit(&self, p: Point, q: Point) -> Option<usize> {
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        if dx == 0 {
            return None;
        }
        let (lo, hi) = (p.x.min(q.x), p.x.max(q.x));
        let start = self.columns.partition_point(|&c| c <= lo);
        let mut inside = self.columns[start..]
            .iter()
            .take_while(|&&c| c < hi)
            .copied()
            .collect::<Vec<_>>();
        if dx < 0 {
            inside.reverse();
        }
        inside.into_iter().find_map(|c| {
            let num = dy * (c - p.x);
            if num % dx != 0 {
                return None;
            }
            let y = p.y + num / dx;
            let w = *self.row_vertex.get(usize::try_from(y).ok()?)?;
            (self.chain_x[self.d.chain_of(w)] == c).then_some(w)
        })
    }
}

/// Assigns coordinates: chain at order position `p` goes to `x = 2(p+1)`,
/// vertex `v` to `y = rank(v)`, and each edge is routed straight or with one
/// bend according to `overlap`.
pub fn draw(
    g: &DerivedGraph,
    d: &Decomposition,
    ranks: &TopoRanks,
    order: &[usize],
    overlap: OverlapMode,
) -> Result<Layout, Error> {
    let k = d.k();
    let mut seen = vec![false; k];
    if order.len() != k
        || !order
            .iter()
            .all(|&c| c < k && !std::mem::replace(&mut seen[c], true))
    {
        return Err(Error::NotAPermutation { k });
    }
    if g.chains != d.chains() {
        return Err(Error::Mismatch(
            "derived graph was built from a different decomposition".into(),
        ));
    }
    if g.n != d.n() || ranks.ranks().len() != d.n() {
        return Err(Error::Mismatch("vertex counts differ".into()));
    }
    if overlap == OverlapMode::Prune && g.source == GraphSource::H {
        return Err(Error::Mismatch("prune mode draws H′ or Q, not H".into()));
    }

    let mut chain_x = vec![0i64; k];
    for (p, &c) in order.iter().enumerate() {
        chain_x[c] = 2 * (p as i64 + 1);
    }
    let row_vertex = ranks.order();

    let mut bends: Vec<Option<Point>> = vec![None; g.edges.len()];
    loop {
        let grid = Grid::new(&chain_x, row_vertex, d);
        let at = |v: usize| Point::new(chain_x[d.chain_of(v)], ranks.rank(v) as i64);
        for (e, bend) in g.edges.iter().zip(bends.iter_mut()) {
            if e.kind != EdgeKind::Cross || bend.is_some() {
                continue;
            }
            let (p, q) = (at(e.source), at(e.target));
            if overlap == OverlapMode::AllBend || grid.hit(p, q).is_some() {
                let x = if p.x < q.x { p.x + 1 } else { p.x - 1 };
                *bend = Some(Point::new(x, q.y - 1));
            }
        }
        if overlap != OverlapMode::Shift {
            break;
        }
        let Some((point, moved)) = first_coincidence(&bends) else {
            break;
        };
        for x in chain_x.iter_mut().filter(|x| **x > point.x) {
            *x += 1;
        }
        for b in bends.iter_mut().flatten().filter(|b| b.x > point.x) {
            b.x += 1;
        }
        bends[moved] = Some(Point::new(point.x + 1, point.y));
    }

    let positions = (0..d.n())
        .map(|v| Point::new(chain_x[d.chain_of(v)], ranks.rank(v) as i64))
        .collect();
    let edges = g
        .edges
        .iter()
        .zip(bends)
        .map(|(e, bend)| DrawnEdge {
            source: e.source,
            target: e.target,
            kind: e.kind,
            in_original: e.in_original,
            bend,
        })
        .collect();
    Ok(Layout {
        positions,
        edges,
        hidden: g.omitted.clone(),
        chain_x,
        order: order.to_vec(),
        overlap,
    })
}

/// The leftmost-then-lowest shared bend point and the second edge on it.
fn first_coincidence(bends: &[Option<Point>]) -> Option<(Point, usize)> {
    let mut by_point: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for (i, b) in bends.iter().enumerate() {
        if let Some(b) = b {
            by_point.entry(*b).or_default().push(i);
        }
    }
    by_point
        .into_iter()
        .find(|(_, edges)| edges.len() > 1)
        .map(|(p, edges)| (p, edges[1]))
}

/// The vertex point of `verts` strictly between `p` and `q` on the segment
/// that is closest to `p`, if any. Exact integer arithmetic.
pub fn segment_hits_vertex(p: Point, q: Point, verts: &[Point]) -> Option<Point> {
    let (dx, dy) = (q.x - p.x, q.y - p.y);
    verts
        .iter()
        .copied()
        .filter(|&w| w != p && w != q)
        .filter(|w| dx * (w.y - p.y) - dy * (w.x - p.x) == 0)
        .filter(|w| {
            (p.x.min(q.x)..=p.x.max(q.x)).contains(&w.x)
                && (p.y.min(q.y)..=p.y.max(q.y)).contains(&w.y)
        })
        .min_by_key(|w| (w.x - p.x).abs() + (w.y - p.y).abs())
}

fn orient(a: Point, b: Point, c: Point) -> i64 {
    ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).signum()
}

/// True when the two segments cross at a single point interior to both.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

/// Number of (cross edge segment, chain edge) pairs that cross properly.
pub fn count_channel_crossings(layout: &Layout) -> usize {
    let verticals: Vec<(Point, Point)> = layout
        .edges
        .iter()
        .filter(|e| e.kind == EdgeKind::Chain)
        .map(|e| (layout.positions[e.source], layout.positions[e.target]))
        .collect();
    layout
        .edges
        .iter()
        .filter(|e| e.kind == EdgeKind::Cross)
        .map(|e| {
            let pts = layout.polyline(e);
            pts.windows(2)
                .map(|s| {
                    verticals
                        .iter()
                        .filter(|(c, d)| segments_cross(s[0], s[1], *c, *d))
                        .count()
                })
                .sum::<usize>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{closure, topological_ranks};

    fn diamond() -> (Digraph, Decomposition) {
        let g = Digraph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0, 1, 3], vec![2]]).unwrap();
        (g, d)
    }

    /// a -> b -> c plus a -> c, each vertex its own chain.
    fn skip_triangle() -> (Digraph, Decomposition) {
        let g = Digraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0], vec![1], vec![2]]).unwrap();
        (g, d)
    }

    /// Two sources on one chain both point at the same far target, so both
    /// straight segments hit vertices and the bends coincide.
    fn merging_pair() -> (Digraph, Decomposition) {
        // Rows equal ids. Chain [0,1,2] at x=2, [3,4,5] at x=4, [6] at x=6.
        // Straight 0->6 passes (4,3) and 2->6 passes (4,4).
        let g = Digraph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 6), (2, 6)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6]])
            .unwrap();
        (g, d)
    }

    fn layout_of(g: &Digraph, d: &Decomposition, order: &[usize], mode: OverlapMode) -> Layout {
        let h = build_path_graph(g, d).unwrap();
        let h = if mode == OverlapMode::Prune {
            prune(&h, d)
        } else {
            h
        };
        draw(&h, d, &topological_ranks(g).unwrap(), order, mode).unwrap()
    }

    #[test]
    fn path_graph_drops_transitive_chain_edge() {
        let g = Digraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0, 1, 2]]).unwrap();
        let h = build_path_graph(&g, &d).unwrap();
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.omitted(), &[(0, 2)]);
    }

    #[test]
    fn path_graph_of_diamond_keeps_everything() {
        let (g, d) = diamond();
        let h = build_path_graph(&g, &d).unwrap();
        assert_eq!(h.edges().len(), 4);
        assert_eq!(h.cross_edges().count(), 2);
        assert_eq!(prune(&h, &d).edges(), h.edges());
    }

    #[test]
    fn prune_keeps_latest_source() {
        // u = 0 before u' = 1 on one chain, both into 2.
        let g = Digraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0, 1], vec![2]]).unwrap();
        let hp = prune(&build_path_graph(&g, &d).unwrap(), &d);
        let cross: Vec<_> = hp.cross_edges().map(|e| (e.source, e.target)).collect();
        assert_eq!(cross, vec![(1, 2)]);
        assert_eq!(hp.omitted(), &[(0, 2)]);
        assert_eq!(hp.source(), GraphSource::HPrime);
        assert_eq!(closure(&hp.to_digraph()), closure(&g));
    }

    #[test]
    fn diamond_layout() {
        let (g, d) = diamond();
        let l = layout_of(&g, &d, &[0, 1], OverlapMode::Merge);
        assert_eq!(
            l.positions,
            vec![
                Point::new(2, 0),
                Point::new(2, 1),
                Point::new(4, 2),
                Point::new(2, 3)
            ]
        );
        assert_eq!(l.bends(), 0);
        assert_eq!(count_channel_crossings(&l), 0);
    }

    #[test]
    fn collinear_edge_bends_beside_source() {
        let (g, d) = skip_triangle();
        let l = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Merge);
        let ac = l
            .edges
            .iter()
            .find(|e| (e.source, e.target) == (0, 2))
            .unwrap();
        assert_eq!(ac.bend, Some(Point::new(3, 1)));
        assert_eq!(l.bends(), 1);
        // The middle chain is a singleton, so there is nothing to cross.
        assert_eq!(count_channel_crossings(&l), 0);
    }

    #[test]
    fn bend_to_the_left() {
        let (g, d) = skip_triangle();
        let l = layout_of(&g, &d, &[2, 1, 0], OverlapMode::Merge);
        let ac = l
            .edges
            .iter()
            .find(|e| (e.source, e.target) == (0, 2))
            .unwrap();
        // a at x = 6, c at x = 2.
        assert_eq!(ac.bend, Some(Point::new(5, 1)));
    }

    #[test]
    fn order_must_be_permutation() {
        let (g, d) = diamond();
        let h = build_path_graph(&g, &d).unwrap();
        let r = topological_ranks(&g).unwrap();
        for bad in [&[0, 0][..], &[0][..], &[0, 2][..]] {
            assert_eq!(
                draw(&h, &d, &r, bad, OverlapMode::Merge),
                Err(Error::NotAPermutation { k: 2 })
            );
        }
    }

    #[test]
    fn mismatched_decomposition_rejected() {
        let (g, d) = diamond();
        let h = build_path_graph(&g, &d).unwrap();
        let other = Decomposition::new(ChainKind::Path, vec![vec![0, 2, 3], vec![1]]).unwrap();
        let r = topological_ranks(&g).unwrap();
        assert!(matches!(
            draw(&h, &other, &r, &[0, 1], OverlapMode::Merge),
            Err(Error::Mismatch(_))
        ));
        assert!(matches!(
            draw(&h, &d, &r, &[0, 1], OverlapMode::Prune),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn merge_mode_shares_bend() {
        let (g, d) = merging_pair();
        let l = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Merge);
        let coincident = l.bend_coincidences();
        assert_eq!(coincident.len(), 1);
        let (a, b) = coincident[0];
        let (ea, eb) = (l.edges[a], l.edges[b]);
        assert_eq!(ea.target, eb.target);
        assert_eq!(d.chain_of(ea.source), d.chain_of(eb.source));
    }

    #[test]
    fn shift_and_prune_remove_coincidences() {
        let (g, d) = merging_pair();
        let shifted = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Shift);
        assert!(shifted.bend_coincidences().is_empty());
        let merged = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Merge);
        assert_eq!(shifted.bends(), merged.bends());
        let (_, hi) = shifted.bounding_box().unwrap();
        assert!(hi.x > 6, "shift should widen the drawing");

        let pruned = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Prune);
        assert!(pruned.bend_coincidences().is_empty());
        assert!(pruned.hidden.len() > merged.hidden.len());
    }

    #[test]
    fn all_bend_bends_every_cross_edge() {
        let (g, d) = diamond();
        let l = layout_of(&g, &d, &[0, 1], OverlapMode::AllBend);
        assert_eq!(l.bends(), 2);
        for e in &l.edges {
            assert_eq!(e.bend.is_some(), e.kind == EdgeKind::Cross);
        }
    }

    #[test]
    fn segment_hits() {
        let v = |x, y| Point::new(x, y);
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(6, 2), &[v(4, 1)]),
            Some(v(4, 1))
        );
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(4, 2), &[v(2, 1), v(4, 1)]),
            None
        );
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(4, 2), &[v(3, 1)]),
            Some(v(3, 1))
        );
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(2, 5), &[v(2, 3)]),
            Some(v(2, 3))
        );
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(2, 5), &[v(2, 5), v(2, 0)]),
            None
        );
        assert_eq!(
            segment_hits_vertex(v(2, 0), v(8, 3), &[v(6, 2), v(4, 1)]),
            Some(v(4, 1))
        );
    }

    #[test]
    fn crossing_predicate() {
        let v = |x, y| Point::new(x, y);
        assert!(segments_cross(v(2, 0), v(6, 3), v(4, 0), v(4, 4)));
        // Touching at an endpoint does not count.
        assert!(!segments_cross(v(2, 0), v(4, 2), v(4, 2), v(4, 4)));
        assert!(!segments_cross(v(2, 0), v(6, 4), v(4, 0), v(4, 1)));
    }

    #[test]
    fn bent_edge_crosses_middle_chain() {
        // Chains [0], [1, 3], [2] at x = 2, 4, 6; ranks equal ids.
        let g = Digraph::from_edges(4, &[(0, 1), (1, 3), (0, 2)]);
        let d = Decomposition::new(ChainKind::Path, vec![vec![0], vec![1, 3], vec![2]]).unwrap();
        let l = layout_of(&g, &d, &[0, 1, 2], OverlapMode::Merge);
        // (2,0)-(6,2) would pass vertex 1 at (4,1): bend at (3,1), after which
        // the second segment crosses the vertical 1-3 once.
        let e02 = l
            .edges
            .iter()
            .find(|e| (e.source, e.target) == (0, 2))
            .unwrap();
        assert_eq!(e02.bend, Some(Point::new(3, 1)));
        assert_eq!(count_channel_crossings(&l), 1);
    }
}
