//! Trees with a marked adjacent pair of degrees.
//!
//! A multiset of n positive integers is the degree sequence of a tree exactly
//! when it sums to 2n - 2. This module realizes such multisets and, on top of
//! that, guarantees that a vertex of degree `ell` ends up adjacent to a vertex
//! of degree `k`. That is always possible except in one degenerate shape: two
//! marked leaves in a tree with more than two vertices.
//!
//! The marked-pair trees feed the 2-tree builder: coning a tree over a new
//! apex turns tree degrees d into 2-tree degrees d + 1 plus one dominating
//! vertex, and the marked pair survives as an adjacent pair.

use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;
use thiserror::Error;

/// A graph together with a marked adjacent pair of vertices.
///
/// `ell_vertex` has the degree that was requested as `ell`, `k_vertex` the
/// degree requested as `k`, and the two are joined by an edge.
#[derive(Debug, Clone)]
pub struct MarkedGraph {
    pub graph: SimpleGraph,
    pub ell_vertex: usize,
    pub k_vertex: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeRealizeError {
    #[error("empty multiset")]
    Empty,
    #[error("a tree multiset on {n} elements must total {want}, got {got}")]
    WrongSum { n: usize, want: usize, got: usize },
    #[error("need {need} elements equal to {value}, found {found}")]
    MissingMark {
        value: usize,
        need: usize,
        found: usize,
    },
    #[error("two marked leaves are only adjacent in the two-vertex tree")]
    TwoLeaves,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominatingError {
    #[error("need at least 3 elements, got {0}")]
    TooSmall(usize),
    #[error("a 2-tree multiset on {n} elements must total {want}, got {got}")]
    WrongSum { n: usize, want: usize, got: usize },
    #[error("minimum element must be at least 2")]
    MinBelowTwo,
    #[error("no element equals n - 1 = {0}")]
    NoDominatingValue(usize),
    #[error("need {need} elements equal to {value}, found {found}")]
    MissingMark {
        value: usize,
        need: usize,
        found: usize,
    },
    #[error("two marked 2s are only adjacent in the triangle")]
    TwoTwos,
}

fn check_marks(d: &DegreeSequence, ell: usize, k: usize) -> Option<(usize, usize, usize)> {
    let need_ell = if ell == k { 2 } else { 1 };
    let found = d.multiplicity(ell);
    if found < need_ell {
        return Some((ell, need_ell, found));
    }
    if ell != k {
        let found = d.multiplicity(k);
        if found < 1 {
            return Some((k, 1, found));
        }
    }
    None
}

/// Builds a tree whose vertex `v` has degree `targets[v]`, greedily: absorb a
/// leaf into the vertex with the largest remaining degree until two vertices
/// are left, then join those two. Runs in O(n).
fn greedy_tree(targets: &[usize]) -> SimpleGraph {
    let n = targets.len();
    debug_assert!(n >= 2);
    debug_assert_eq!(targets.iter().sum::<usize>(), 2 * n - 2);
    let mut g = SimpleGraph::new(n);
    let mut rem = targets.to_vec();
    let mut alive = vec![true; n];
    let max_deg = *targets.iter().max().unwrap();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    let mut leaves: Vec<usize> = Vec::new();
    for v in 0..n {
        if rem[v] == 1 {
            leaves.push(v);
        } else {
            buckets[rem[v]].push(v);
        }
    }
    let mut max_rem = max_deg;
    let mut remaining = n;
    while remaining > 2 {
        let leaf = loop {
            let u = leaves.pop().expect("a leaf exists while 3+ vertices remain");
            if alive[u] && rem[u] == 1 {
                break u;
            }
        };
        let target = loop {
            while max_rem > 1 && buckets[max_rem].is_empty() {
                max_rem -= 1;
            }
            assert!(max_rem > 1, "degree sum invariant violated");
            if let Some(t) = buckets[max_rem].pop() {
                if alive[t] && rem[t] == max_rem {
                    break t;
                }
            }
        };
        g.add_edge(leaf, target).unwrap();
        alive[leaf] = false;
        remaining -= 1;
        rem[target] -= 1;
        if rem[target] == 1 {
            leaves.push(target);
        } else {
            buckets[rem[target]].push(target);
        }
    }
    let last: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    g.add_edge(last[0], last[1]).unwrap();
    g
}

/// Rewires the tree so that `y` becomes a child of `r` without changing any
/// degree. Preconditions: `y` and `r` are not adjacent and `r` has degree at
/// least 2.
fn pull_under(g: &mut SimpleGraph, y: usize, r: usize) {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[r] = r;
    let mut stack = vec![r];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    // Child of r whose subtree holds y.
    let mut a = y;
    while parent[a] != r {
        a = parent[a];
    }
    // Any other child of r; its subtree is disjoint from y's.
    let c = g
        .neighbors(r)
        .iter()
        .copied()
        .find(|&x| x != a)
        .expect("r has a second child");
    let p = parent[y];
    // Swap the two subtrees hanging off y and c. Degrees are untouched: p and
    // r each lose one child edge and gain one.
    g.remove_edge_internal(r, c);
    g.remove_edge_internal(p, y);
    g.add_edge(p, c).unwrap();
    g.add_edge(r, y).unwrap();
}

/// Picks vertices of degree `ell` and `k` joined by an edge, rewiring once if
/// the greedy tree has no such pair.
fn place_marks(g: &mut SimpleGraph, targets: &[usize], ell: usize, k: usize) -> (usize, usize) {
    for u in 0..targets.len() {
        if targets[u] != ell {
            continue;
        }
        for &w in g.neighbors(u) {
            if targets[w] == k {
                return (u, w);
            }
        }
    }
    // No adjacent pair. Pull a vertex of the smaller degree under one of the
    // larger degree; the larger is at least 2 here, so the rewiring applies.
    let (small, big, flipped) = if ell <= k {
        (ell, k, false)
    } else {
        (k, ell, true)
    };
    let y = (0..targets.len()).find(|&v| targets[v] == small).unwrap();
    let r = (0..targets.len())
        .find(|&v| targets[v] == big && v != y)
        .unwrap();
    pull_under(g, y, r);
    if flipped {
        (r, y)
    } else {
        (y, r)
    }
}

/// Builds a tree with the given degree multiset and a vertex of degree `ell`
/// adjacent to a vertex of degree `k`.
///
/// Fails if the multiset does not sum to 2n - 2, if either mark is missing
/// (two copies are required when `ell == k`), or if `ell == k == 1` in a tree
/// with more than two vertices: two leaves are adjacent only in the
/// single-edge tree.
pub fn realize_tree(
    d: &DegreeSequence,
    ell: usize,
    k: usize,
) -> Result<MarkedGraph, TreeRealizeError> {
    let n = d.len();
    if n == 0 {
        return Err(TreeRealizeError::Empty);
    }
    let want = 2 * n - 2;
    if d.sum() != want {
        return Err(TreeRealizeError::WrongSum {
            n,
            want,
            got: d.sum(),
        });
    }
    if let Some((value, need, found)) = check_marks(d, ell, k) {
        return Err(TreeRealizeError::MissingMark { value, need, found });
    }
    if n > 2 && ell == 1 && k == 1 {
        return Err(TreeRealizeError::TwoLeaves);
    }
    // n == 1 would need sum 0, impossible for positive elements. So n >= 2.
    let targets = d.elements();
    if n == 2 {
        let mut g = SimpleGraph::new(2);
        g.add_edge(0, 1).unwrap();
        return Ok(MarkedGraph {
            graph: g,
            ell_vertex: 0,
            k_vertex: 1,
        });
    }
    let mut g = greedy_tree(&targets);
    let (ell_vertex, k_vertex) = place_marks(&mut g, &targets, ell, k);
    debug_assert!(g.is_tree());
    debug_assert_eq!(g.degrees(), targets);
    debug_assert!(g.has_edge(ell_vertex, k_vertex));
    Ok(MarkedGraph {
        graph: g,
        ell_vertex,
        k_vertex,
    })
}

/// Builds a 2-tree for a multiset containing n - 1: realize the residual tree
/// multiset (drop one n - 1, decrement the rest) and cone it over a new apex.
///
/// The marked pair (`ell`, `k`) is preserved. When the larger mark is n - 1
/// itself the apex serves as that endpoint and is adjacent to everything, so
/// the pair never fails; otherwise both marks move down to the tree. The one
/// genuinely impossible request is `ell == k == 2` beyond the triangle, since
/// degree-2 vertices of the cone are leaves of the tree.
pub fn realize_with_dominating(
    d: &DegreeSequence,
    ell: usize,
    k: usize,
) -> Result<MarkedGraph, DominatingError> {
    let n = d.len();
    if n < 3 {
        return Err(DominatingError::TooSmall(n));
    }
    let want = 4 * n - 6;
    if d.sum() != want {
        return Err(DominatingError::WrongSum {
            n,
            want,
            got: d.sum(),
        });
    }
    if d.min().unwrap() < 2 {
        return Err(DominatingError::MinBelowTwo);
    }
    if !d.contains(n - 1) {
        return Err(DominatingError::NoDominatingValue(n - 1));
    }
    if let Some((value, need, found)) = check_marks(d, ell, k) {
        return Err(DominatingError::MissingMark { value, need, found });
    }
    if n > 3 && ell == 2 && k == 2 {
        return Err(DominatingError::TwoTwos);
    }
    if n == 3 {
        // Sum 6 with minimum 2 forces the triangle.
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_edge(1, 2).unwrap();
        return Ok(MarkedGraph {
            graph: g,
            ell_vertex: 0,
            k_vertex: 1,
        });
    }
    let (big, small, flipped) = if ell >= k {
        (ell, k, false)
    } else {
        (k, ell, true)
    };
    let reduced = d.remove(n - 1, 1).unwrap().decrement_all().unwrap();
    let (graph, big_vertex, small_vertex) = if big == n - 1 {
        // The apex takes the big mark; any vertex of tree degree small - 1
        // takes the other, apex adjacency being automatic.
        let targets = reduced.elements();
        let tree = greedy_tree(&targets);
        let small_vertex = (0..targets.len())
            .find(|&v| targets[v] == small - 1)
            .expect("small mark survives the reduction");
        let g = SimpleGraph::cone(&tree).unwrap();
        let apex = g.vertex_count() - 1;
        (g, apex, small_vertex)
    } else {
        let marked = realize_tree(&reduced, big - 1, small - 1)
            .expect("residual multiset is a tree multiset with both marks");
        let g = SimpleGraph::cone(&marked.graph).unwrap();
        (g, marked.ell_vertex, marked.k_vertex)
    };
    debug_assert!(graph.has_edge(big_vertex, small_vertex));
    debug_assert_eq!(graph.degree(big_vertex), big);
    debug_assert_eq!(graph.degree(small_vertex), small);
    debug_assert!(graph.is_two_tree());
    let (ell_vertex, k_vertex) = if flipped {
        (small_vertex, big_vertex)
    } else {
        (big_vertex, small_vertex)
    };
    Ok(MarkedGraph {
        graph,
        ell_vertex,
        k_vertex,
    })
}
