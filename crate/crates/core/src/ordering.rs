//! Left-to-right ordering of chains.
//!
//! A cross edge between chains `i` and `j` can cross at most the chains
//! placed between them, so `theta = Σ m_ij · k_ij` bounds the number of
//! channel crossings, where `m_ij` counts cross edges between the pair and
//! `k_ij` counts the chains strictly between them. [`best_order`] minimizes
//! the bound exhaustively; [`greedy_order`] pushes low-degree chains to the
//! borders.

use rayon::prelude::*;

use crate::decomposition::Decomposition;
use crate::error::Error;
use crate::layout::DerivedGraph;

/// Default largest `k` for which [`best_order`] enumerates all `k!` orders.
pub const DEFAULT_BEST_ORDER_CAP: usize = 10;

/// Cross-edge counts per unordered pair of chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossMatrix {
    k: usize,
    counts: Vec<u64>,
}

impl CrossMatrix {
    pub fn zero(k: usize) -> Self {
        CrossMatrix {
            k,
            counts: vec![0; k * k],
        }
    }

    /// Builds a matrix from `(i, j, count)` triples; counts for a pair add up.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize, u64)]) -> Self {
        let mut m = CrossMatrix::zero(k);
        for &(i, j, c) in pairs {
            m.add(i, j, c);
        }
        m
    }

    fn add(&mut self, i: usize, j: usize, c: u64) {
        assert!(i != j, "a cross edge joins two different chains");
        self.counts[i * self.k + j] += c;
        self.counts[j * self.k + i] += c;
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.k + j]
    }

    /// Number of cross edges incident to chain `i`.
    pub fn degree(&self, i: usize) -> u64 {
        self.counts[i * self.k..(i + 1) * self.k].iter().sum()
    }

    pub fn total(&self) -> u64 {
        (0..self.k).map(|i| self.degree(i)).sum::<u64>() / 2
    }
}

pub fn cross_counts(g: &DerivedGraph, d: &Decomposition) -> CrossMatrix {
    let mut m = CrossMatrix::zero(d.k());
    for e in g.cross_edges() {
        m.add(d.chain_of(e.source), d.chain_of(e.target), 1);
    }
    m
}

/// `Σ m_ij · (|pos_i − pos_j| − 1)` over unordered pairs, where `order[p]`
/// is the chain at position `p`.
pub fn theta(order: &[usize], m: &CrossMatrix) -> u64 {
    let k = order.len();
    let mut total = 0;
    for p in 0..k {
        for q in p + 2..k {
            total += m.get(order[p], order[q]) * (q - p - 1) as u64;
        }
    }
    total
}

/// Exhaustive minimization of [`theta`], returning the lexicographically
/// smallest minimizing order.
///
/// ```
/// use chandraw::ordering::{best_order, CrossMatrix, DEFAULT_BEST_ORDER_CAP};
///
/// let m = CrossMatrix::from_pairs(3, &[(0, 1, 5), (0, 2, 1), (1, 2, 2)]);
/// let (order, theta) = best_order(&m, DEFAULT_BEST_ORDER_CAP).unwrap();
/// assert_eq!((order, theta), (vec![0, 1, 2], 1));
/// ```
pub fn best_order(m: &CrossMatrix, cap: usize) -> Result<(Vec<usize>, u64), Error> {
    let k = m.k();
    if k > cap {
        return Err(Error::TooManyChains { k, cap });
    }
    if k <= 1 {
        return Ok(((0..k).collect(), 0));
    }
    // One task per leading chain; each scans its block of permutations in
    // lexicographic order, so the reduction on (theta, order) stays exact.
    let best = (0..k)
        .into_par_iter()
        .map(|first| {
            let mut order: Vec<usize> = std::iter::once(first)
                .chain((0..k).filter(|&c| c != first))
                .collect();
            let mut best = (theta(&order, m), order.clone());
            while next_permutation(&mut order[1..]) {
                let t = theta(&order, m);
                if t < best.0 {
                    best = (t, order.clone());
                }
            }
            best
        })
        .min()
        .expect("k > 1");
    Ok((best.1, best.0))
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Places chains pairwise from the borders inwards by ascending cross-edge
/// degree (ties by index): the first of each pair takes the next left slot,
/// the second the next right slot.
pub fn greedy_order(m: &CrossMatrix) -> Vec<usize> {
    let k = m.k();
    let mut by_degree: Vec<usize> = (0..k).collect();
    by_degree.sort_by_key(|&c| (m.degree(c), c));

    let mut order = vec![usize::MAX; k];
    let (mut left, mut right) = (0, k);
    let mut picks = by_degree.into_iter();
    while left < right {
        let a = picks.next().expect("slot available");
        order[left] = a;
        left += 1;
        if left < right {
            right -= 1;
            order[right] = picks.next().expect("slot available");
        }
    }
    order
}
