//! Simple undirected graphs with 2-tree builders, a linear-time 2-tree
//! verifier, and plain-text edge-list / DOT output.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::degseq::DegreeSequence;

/// Adjacency-list graph over vertices `0..n`. No self-loops, no parallel
/// edges. Values returned to callers are never mutated afterwards; builders
/// work on their own private copies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    MissingEdge(usize, usize),
    #[error("cone base must be a tree on at least 2 vertices")]
    NotATree,
    #[error("not a 2-tree: {0}")]
    NotTwoTree(Obstruction),
    #[error("vertex {0} is isolated, degree sequences hold positive values only")]
    IsolatedVertex(usize),
}

/// Why a graph failed the 2-tree check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    TooFewVertices { n: usize },
    WrongEdgeCount { n: usize, edges: usize },
    Disconnected,
    /// More than three vertices remain but none has degree 2.
    NoRemovableVertex { remaining: usize },
    /// A degree-2 vertex whose two neighbors are not adjacent.
    NonAdjacentNeighbors { vertex: usize },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Obstruction::TooFewVertices { n } => write!(f, "only {n} vertices"),
            Obstruction::WrongEdgeCount { n, edges } => {
                write!(f, "{edges} edges, a 2-tree on {n} vertices has {}", 2 * n - 3)
            }
            Obstruction::Disconnected => write!(f, "disconnected"),
            Obstruction::NoRemovableVertex { remaining } => {
                write!(f, "no degree-2 vertex among the {remaining} remaining")
            }
            Obstruction::NonAdjacentNeighbors { vertex } => {
                write!(f, "degree-2 vertex {vertex} has non-adjacent neighbors")
            }
        }
    }
}

/// Certificate from a successful 2-tree check: ears in the order they were
/// stripped, down to the final triangle. Replaying it reproduces the exact
/// edge set, so the certificate can be validated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarTrace {
    pub vertex_count: usize,
    pub triangle: [usize; 3],
    /// `(ear, a, b)`: `ear` had exactly neighbors `a`, `b` when removed.
    pub removals: Vec<(usize, usize, usize)>,
}

impl EarTrace {
    /// Rebuilds the graph the trace was extracted from.
    pub fn replay(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count);
        let [a, b, c] = self.triangle;
        g.add_edge(a, b).unwrap();
        g.add_edge(a, c).unwrap();
        g.add_edge(b, c).unwrap();
        for &(ear, x, y) in self.removals.iter().rev() {
            g.add_edge(ear, x).unwrap();
            g.add_edge(ear, y).unwrap();
        }
        g
    }
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// The triangle K3.
    pub fn triangle() -> Self {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_edge(1, 2).unwrap();
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.adj.len() || v >= self.adj.len() {
            return false;
        }
        // scan the shorter list
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&b)
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A copy with one new vertex adjacent to both ends of the edge `u`-`v`.
    pub fn attach_ear(&self, u: usize, v: usize) -> Result<(SimpleGraph, usize), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        let w = g.push_ear(u, v);
        Ok((g, w))
    }

    /// Removes an existing edge; builder-internal.
    pub(crate) fn remove_edge_internal(&mut self, u: usize, v: usize) {
        let pos = self.adj[u].iter().position(|&x| x == v).expect("edge present");
        self.adj[u].swap_remove(pos);
        let pos = self.adj[v].iter().position(|&x| x == u).expect("edge present");
        self.adj[v].swap_remove(pos);
        self.edges -= 1;
    }

    /// In-place ear attachment for builders that own the graph. The edge
    /// `u`-`v` must exist.
    pub(crate) fn push_ear(&mut self, u: usize, v: usize) -> usize {
        debug_assert!(self.has_edge(u, v));
        let w = self.add_vertex();
        self.adj[u].push(w);
        self.adj[v].push(w);
        self.adj[w].push(u);
        self.adj[w].push(v);
        self.edges += 2;
        w
    }

    /// Apex over a tree: a new vertex adjacent to every vertex of `tree`.
    /// The apex gets the highest index.
    pub fn cone(tree: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
        let n = tree.vertex_count();
        if n < 2 || tree.edges != n - 1 || !tree.is_connected() {
            return Err(GraphError::NotATree);
        }
        let mut g = tree.clone();
        let apex = g.add_vertex();
        for v in 0..n {
            g.adj[v].push(apex);
            g.adj[apex].push(v);
        }
        g.edges += n;
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut found = 1;
        while let Some(u) = queue.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    found += 1;
                    queue.push(v);
                }
            }
        }
        found == n
    }

    pub fn is_tree(&self) -> bool {
        let n = self.adj.len();
        n >= 1 && self.edges == n - 1 && self.is_connected()
    }

    pub fn is_two_tree(&self) -> bool {
        self.check_two_tree().is_ok()
    }

    /// Strips degree-2 vertices whose neighbors are adjacent until a triangle
    /// remains. Greedy stripping is safe: in a 2-tree every degree-2 vertex
    /// sits on a triangle, and removing one leaves a 2-tree.
    pub fn check_two_tree(&self) -> Result<EarTrace, Obstruction> {
        self.check_two_tree_in_order(|stack| stack.pop())
    }

    /// Same check with a caller-chosen policy for which candidate ear to
    /// strip next; the verdict must not depend on it.
    fn check_two_tree_in_order<F>(&self, mut pick: F) -> Result<EarTrace, Obstruction>
    where
        F: FnMut(&mut Vec<usize>) -> Option<usize>,
    {
        let n = self.adj.len();
        if n < 3 {
            return Err(Obstruction::TooFewVertices { n });
        }
        if self.edges != 2 * n - 3 {
            return Err(Obstruction::WrongEdgeCount {
                n,
                edges: self.edges,
            });
        }
        if !self.is_connected() {
            return Err(Obstruction::Disconnected);
        }
        let edge_set: HashSet<(usize, usize)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u.min(v), u.max(v))))
            .collect();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; n];
        let mut candidates: Vec<usize> = (0..n).filter(|&v| deg[v] == 2).collect();
        let mut removals = Vec::with_capacity(n - 3);
        let mut remaining = n;
        while remaining > 3 {
            let u = loop {
                match pick(&mut candidates) {
                    Some(u) if alive[u] && deg[u] == 2 => break u,
                    Some(_) => continue,
                    None => {
                        return Err(Obstruction::NoRemovableVertex { remaining });
                    }
                }
            };
            let mut it = self.adj[u].iter().filter(|&&x| alive[x]);
            let a = *it.next().expect("degree-2 vertex has two live neighbors");
            let b = *it.next().expect("degree-2 vertex has two live neighbors");
            if !edge_set.contains(&(a.min(b), a.max(b))) {
                return Err(Obstruction::NonAdjacentNeighbors { vertex: u });
            }
            alive[u] = false;
            remaining -= 1;
            removals.push((u, a, b));
            for x in [a, b] {
                deg[x] -= 1;
                if deg[x] == 2 {
                    candidates.push(x);
                }
            }
        }
        let last: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let triangle = [last[0], last[1], last[2]];
        debug_assert!(
            edge_set.contains(&(triangle[0], triangle[1]))
                && edge_set.contains(&(triangle[0], triangle[2]))
                && edge_set.contains(&(triangle[1], triangle[2]))
        );
        Ok(EarTrace {
            vertex_count: n,
            triangle,
            removals,
        })
    }

    /// The degree multiset. Fails on isolated vertices, which have no
    /// representation in a positive-value multiset.
    pub fn degree_sequence(&self) -> Result<DegreeSequence, GraphError> {
        if let Some(v) = (0..self.adj.len()).find(|&v| self.adj[v].is_empty()) {
            return Err(GraphError::IsolatedVertex(v));
        }
        Ok(DegreeSequence::from_elements(self.adj.iter().map(Vec::len))
            .expect("degrees are positive"))
    }

    /// In a 2-tree, finds a degree-`ell` vertex adjacent to a degree-2
    /// vertex, lowest indices first.
    pub fn ear_adjacency_witness(
        &self,
        ell: usize,
    ) -> Result<Option<(usize, usize)>, GraphError> {
        self.check_two_tree().map_err(GraphError::NotTwoTree)?;
        for v in 0..self.adj.len() {
            if self.adj[v].len() != ell {
                continue;
            }
            let mut ears: Vec<usize> = self.adj[v]
                .iter()
                .copied()
                .filter(|&u| self.adj[u].len() == 2)
                .collect();
            ears.sort_unstable();
            if let Some(&u) = ears.first() {
                return Ok(Some((v, u)));
            }
        }
        Ok(None)
    }

    /// Edge-list text: `n m` header, one `u v` line per edge, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edges);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format. Lines after the promised edge count are
    /// ignored so annotated output can be piped back in.
    pub fn from_edge_list(text: &str) -> Result<Self, EdgeListError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(EdgeListError::MissingHeader)?;
        let mut it = header.split_whitespace();
        let (n, m) = match (it.next(), it.next(), it.next()) {
            (Some(n), Some(m), None) => (
                n.parse::<usize>()
                    .map_err(|_| EdgeListError::BadHeader(header.into()))?,
                m.parse::<usize>()
                    .map_err(|_| EdgeListError::BadHeader(header.into()))?,
            ),
            _ => return Err(EdgeListError::BadHeader(header.into())),
        };
        let mut g = SimpleGraph::new(n);
        for _ in 0..m {
            let line = lines.next().ok_or(EdgeListError::TooFewEdges {
                expected: m,
                found: g.edges,
            })?;
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (
                    u.parse::<usize>()
                        .map_err(|_| EdgeListError::BadEdge(line.into()))?,
                    v.parse::<usize>()
                        .map_err(|_| EdgeListError::BadEdge(line.into()))?,
                ),
                _ => return Err(EdgeListError::BadEdge(line.into())),
            };
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// GraphViz DOT form.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.adj.len() {
            if self.adj[v].is_empty() {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("bad header line {0:?}")]
    BadHeader(String),
    #[error("bad edge line {0:?}")]
    BadEdge(String),
    #[error("header promised {expected} edges, found {found}")]
    TooFewEdges { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn triangle_basics() {
        let g = SimpleGraph::triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_two_tree());
        assert_eq!(g.degree_sequence().unwrap().to_string(), "2^3");
    }

    #[test]
    fn attach_ear_chain_degrees() {
        let g = SimpleGraph::triangle();
        let (g, w) = g.attach_ear(0, 1).unwrap();
        assert_eq!(w, 3);
        // attaching to the fresh edge 0-3 shifts degrees, recount by hand:
        // 0:{1,2,3,4} 1:{0,2,3} 2:{0,1} 3:{0,1,4} 4:{0,3}
        let (g, _) = g.attach_ear(0, 3).unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3, 4]);
        let (g, _) = g.attach_ear(0, 4).unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3, 3, 5]);
        assert!(g.is_two_tree());
    }

    #[test]
    fn attach_ear_needs_an_edge() {
        let g = SimpleGraph::triangle();
        let (g, _) = g.attach_ear(0, 1).unwrap();
        // 2 and 3 are both ears on different edges, not adjacent
        assert_eq!(g.attach_ear(2, 3), Err(GraphError::MissingEdge(2, 3)));
    }

    #[test]
    fn book_of_three_ears() {
        let mut g = SimpleGraph::triangle();
        for _ in 0..3 {
            g.push_ear(0, 1);
        }
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 5, 5]);
        assert!(g.is_two_tree());
    }

    fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    #[test]
    fn cone_over_small_trees() {
        let edge = path(2);
        let coned = SimpleGraph::cone(&edge).unwrap();
        assert_eq!(coned.edge_count(), 3);
        assert!(coned.is_two_tree());

        let coned = SimpleGraph::cone(&path(3)).unwrap();
        // K4 minus an edge
        let mut degs = coned.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 3, 3]);
        assert!(coned.is_two_tree());

        let mut star = SimpleGraph::new(4);
        for v in 1..4 {
            star.add_edge(0, v).unwrap();
        }
        let coned = SimpleGraph::cone(&star).unwrap();
        let mut degs = coned.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 4, 4]);
        assert!(coned.is_two_tree());
    }

    #[test]
    fn cone_rejects_non_trees() {
        assert_eq!(
            SimpleGraph::cone(&SimpleGraph::triangle()),
            Err(GraphError::NotATree)
        );
        assert_eq!(
            SimpleGraph::cone(&SimpleGraph::new(1)),
            Err(GraphError::NotATree)
        );
        let mut forest = SimpleGraph::new(4);
        forest.add_edge(0, 1).unwrap();
        forest.add_edge(2, 3).unwrap();
        assert!(SimpleGraph::cone(&forest).is_err());
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn verifier_rejections() {
        assert_eq!(
            complete(4).check_two_tree(),
            Err(Obstruction::WrongEdgeCount { n: 4, edges: 6 })
        );
        let mut c4 = path(4);
        c4.add_edge(3, 0).unwrap();
        assert_eq!(
            c4.check_two_tree(),
            Err(Obstruction::WrongEdgeCount { n: 4, edges: 4 })
        );
        // 4-cycle plus a vertex joined to 0,1,2: right count, wrong shape
        let mut g = path(4);
        g.add_edge(3, 0).unwrap();
        let v = g.add_vertex();
        for u in [0, 1, 2] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(g.edge_count(), 2 * 5 - 3);
        assert!(matches!(
            g.check_two_tree(),
            Err(Obstruction::NonAdjacentNeighbors { .. })
        ));
        // K5 with a disjoint triangle: 13 = 2*8-3 edges but two components
        let mut g = complete(5);
        for _ in 0..3 {
            g.add_vertex();
        }
        g.add_edge(5, 6).unwrap();
        g.add_edge(5, 7).unwrap();
        g.add_edge(6, 7).unwrap();
        assert_eq!(g.edge_count(), 2 * 8 - 3);
        assert_eq!(g.check_two_tree(), Err(Obstruction::Disconnected));
        // K3,3 is 2-connected with 9 = 2*6-3 edges and no degree-2 vertex
        let mut k33 = SimpleGraph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(
            k33.check_two_tree(),
            Err(Obstruction::NoRemovableVertex { remaining: 6 })
        );
        assert!(matches!(
            SimpleGraph::new(2).check_two_tree(),
            Err(Obstruction::TooFewVertices { n: 2 })
        ));
    }

    #[test]
    fn trace_replays_to_the_same_graph() {
        let mut g = SimpleGraph::triangle();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for _ in 0..40 {
            let &(u, v) = &edges[rng.gen_range(0..edges.len())];
            let w = g.push_ear(u, v);
            edges.push((u, w));
            edges.push((v, w));
        }
        let trace = g.check_two_tree().unwrap();
        assert_eq!(trace.removals.len(), g.vertex_count() - 3);
        let replayed = trace.replay();
        assert_eq!(replayed.edges(), g.edges());
    }

    #[test]
    fn verdict_independent_of_strip_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for case in 0..60 {
            let mut g = SimpleGraph::triangle();
            let mut edges = vec![(0, 1), (0, 2), (1, 2)];
            for _ in 0..rng.gen_range(1..25) {
                let &(u, v) = &edges[rng.gen_range(0..edges.len())];
                let w = g.push_ear(u, v);
                edges.push((u, w));
                edges.push((v, w));
            }
            // optionally break it by rewiring one edge
            let broken = case % 3 == 0 && g.vertex_count() > 5;
            if broken {
                let n = g.vertex_count();
                let (u, v) = g.edges()[rng.gen_range(0..g.edge_count())];
                let pos = g.adj[u].iter().position(|&x| x == v).unwrap();
                g.adj[u].swap_remove(pos);
                let pos = g.adj[v].iter().position(|&x| x == u).unwrap();
                g.adj[v].swap_remove(pos);
                g.edges -= 1;
                let (mut a, mut b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                while a == b || g.has_edge(a, b) {
                    a = rng.gen_range(0..n);
                    b = rng.gen_range(0..n);
                }
                g.add_edge(a, b).unwrap();
            }
            let base = g.check_two_tree().is_ok();
            for seed in 0..5u64 {
                let mut order_rng = ChaCha8Rng::seed_from_u64(seed);
                let shuffled = g.check_two_tree_in_order(|cands| {
                    cands.shuffle(&mut order_rng);
                    cands.pop()
                });
                assert_eq!(shuffled.is_ok(), base);
            }
        }
    }

    #[test]
    fn witness_lookup() {
        let mut book = SimpleGraph::triangle();
        for _ in 0..3 {
            book.push_ear(0, 1);
        }
        assert_eq!(book.ear_adjacency_witness(5).unwrap(), Some((0, 2)));
        assert_eq!(book.ear_adjacency_witness(3).unwrap(), None);
        assert_eq!(
            SimpleGraph::triangle().ear_adjacency_witness(2).unwrap(),
            Some((0, 1))
        );
        // K4 minus an edge has no degree-4 vertex
        let coned = SimpleGraph::cone(&path(3)).unwrap();
        assert_eq!(coned.ear_adjacency_witness(4).unwrap(), None);
        assert!(matches!(
            complete(4).ear_adjacency_witness(3),
            Err(GraphError::NotTwoTree(_))
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = SimpleGraph::triangle();
        g.push_ear(1, 2);
        let text = g.to_edge_list();
        assert_eq!(text, "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
        let back = SimpleGraph::from_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        // trailing annotation lines are ignored
        let annotated = format!("{text}witness: ell=3 vertex=1 ear=3\n");
        assert_eq!(
            SimpleGraph::from_edge_list(&annotated).unwrap().edges(),
            g.edges()
        );
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            SimpleGraph::from_edge_list(""),
            Err(EdgeListError::MissingHeader)
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list("3\n"),
            Err(EdgeListError::BadHeader(_))
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list("3 2\n0 1\n"),
            Err(EdgeListError::TooFewEdges { .. })
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list("3 2\n0 1\n0 1\n"),
            Err(EdgeListError::Graph(GraphError::DuplicateEdge(0, 1)))
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list("3 1\n0 5\n"),
            Err(EdgeListError::Graph(GraphError::VertexOutOfRange(5, 3)))
        ));
    }

    #[test]
    fn dot_output() {
        let g = SimpleGraph::triangle();
        assert_eq!(g.to_dot(), "graph g {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
    }
}
