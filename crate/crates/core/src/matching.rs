//! Hopcroft–Karp maximum bipartite matching.
//!
//! Left vertices are `0..adj.len()`, right vertices `0..right`. Vertices and
//! adjacency lists are visited in ascending order, so the matching returned is
//! a pure function of the input.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Returns `mate[u]`, the right vertex matched to left vertex `u`.
pub(crate) fn maximum_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let left = adj.len();
    let mut mate_left = vec![FREE; left];
    let mut mate_right = vec![FREE; right];
    let mut dist = vec![0usize; left];

    loop {
        // BFS layers from every free left vertex.
        let mut queue = VecDeque::new();
        for u in 0..left {
            if mate_left[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_right[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }

        let mut cursor = vec![0usize; left];
        for u in 0..left {
            if mate_left[u] == FREE {
                augment(
                    u,
                    adj,
                    &mut mate_left,
                    &mut mate_right,
                    &mut dist,
                    &mut cursor,
                );
            }
        }
    }

    mate_left
        .into_iter()
        .map(|v| (v != FREE).then_some(v))
        .collect()
}

/// Iterative layered DFS for one augmenting path from `root`.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    let mut path: Vec<usize> = vec![root];
    while let Some(&u) = path.last() {
        let mut advanced = false;
        while cursor[u] < adj[u].len() {
            let v = adj[u][cursor[u]];
            let w = mate_right[v];
            if w == FREE {
                // Flip the alternating path ending at v.
                let mut v = v;
                for &x in path.iter().rev() {
                    let previous = mate_left[x];
                    mate_left[x] = v;
                    mate_right[v] = x;
                    v = previous;
                }
                return true;
            }
            if dist[w] == dist[u] + 1 {
                cursor[u] += 1;
                path.push(w);
                advanced = true;
                break;
            }
            cursor[u] += 1;
        }
        if !advanced {
            dist[u] = usize::MAX;
            path.pop();
        }
    }
    false
}
