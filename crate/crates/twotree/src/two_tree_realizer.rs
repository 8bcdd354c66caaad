//! Turning integer multisets into 2-trees.
//!
//! `realize` decides whether a multiset is the degree sequence of a 2-tree
//! and, if so, builds a 2-tree realizing it together with a witness: a vertex
//! of a requested degree `ell` adjacent to an ear of degree 2. The build
//! peels the sequence down to one of a handful of directly constructible
//! shapes, then replays the peeling in reverse on the graph, attaching ears
//! as it goes. Every peeling decision reads only the first and last few runs
//! of the run-length encoded sequence and each peel removes at least one
//! element, so the whole construction runs in O(n).

use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;
use crate::recognizer::{recognize, Condition};
use crate::tree_realizer::realize_with_dominating;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// A 2-tree realizing a degree sequence, with a marked witness.
///
/// `ell_vertex` has degree `ell` and is adjacent to `witness_ear`, a vertex
/// of degree 2 whose two neighbors are themselves adjacent. The dual pair is
/// the second vertex-ear pair the final construction step produced; its
/// vertex degree depends on how the sequence was peeled.
#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: SimpleGraph,
    pub ell: usize,
    pub ell_vertex: usize,
    pub witness_ear: Option<usize>,
    pub dual_vertex: Option<usize>,
    pub dual_ear: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("not a 2-tree degree sequence: violates {0}")]
    Rejected(Condition),
    #[error("requested witness degree {0} does not occur in the sequence")]
    MarkNotPresent(usize),
    #[error("witness degree {0} is only available in the triangle")]
    MarkTooSmall(usize),
}

/// Shape classes that drive the peeling step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceClass {
    /// At most two distinct values, `2^a d^m`.
    Flat,
    Special(SpecialKind),
    Typical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// All elements even with at least three 4s.
    Even,
    /// Exactly two odd elements, a single 3 and the requested odd witness.
    OddPair,
}

/// Directly constructible shapes the peeling bottoms out in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseCase {
    /// `<2 2 2>`, the triangle.
    Triangle,
    /// `<2^(n-2) (n-1)^2>`: a triangle with all ears stacked on one edge.
    Book,
    /// `<2^(n-3) x y z>`: three hub values on a triangle, ears spread over
    /// its edges.
    ThreeHubs { x: usize, y: usize, z: usize },
    /// `<2^(n-5) x d d d (d+x-2)>`: a fan on five hubs, one heavy apex.
    FiveHubsSkew { x: usize, d: usize },
    /// `<2^(n-5) d^5>` with d even: the same fan, ears balanced.
    FiveHubsEven { d: usize },
    /// The maximum is n-1: cone a tree realization over an apex.
    Dominating,
    /// Stripping `r` ears from one edge leaves a dominating-case sequence.
    /// The edge endpoints have degrees `x` (the witness) and `y`.
    HubPair { r: usize, x: usize, y: usize },
}

/// One peeling step, replayed in reverse as a graph expansion. The expansion
/// consumes a vertex `v` at the peeled witness degree and an ear `w` adjacent
/// to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandStep {
    /// Rebuilds three vertices of degree `d` plus the ears of a flat peel.
    Flat { d: usize },
    /// Attaches k-2 ears to the edge v-w, raising v by k-2 and w to k.
    Typical { k: usize, swapped: bool },
    /// Attaches three ears, raising v by 2 and w to 4.
    Special { swapped: bool },
}

impl ExpandStep {
    fn swapped(&self) -> bool {
        match *self {
            ExpandStep::Flat { .. } => false,
            ExpandStep::Typical { swapped, .. } => swapped,
            ExpandStep::Special { swapped } => swapped,
        }
    }
}

/// The two vertex-ear pairs an expansion step produces. `ell_pair` sits at
/// the expanded witness degree, `dual_pair` at the step's k value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpandOutcome {
    pub ell_pair: (usize, usize),
    pub dual_pair: (usize, usize),
}

/// Peel parameters for one step. When the requested witness degree equals
/// the chosen k, the request is moved to the next larger value and `swapped`
/// records that the k side of the expansion carries the original request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KChoice {
    pub k: usize,
    pub ell: usize,
    pub swapped: bool,
}

/// The outcome of one peeling step on the sequence itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub step: ExpandStep,
    pub sequence: DegreeSequence,
    pub ell: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeStats {
    pub reductions: usize,
    pub promotions: usize,
    pub base: BaseCase,
}

// ---------------------------------------------------------------------------
// Run-length views

/// Read-only view of a sorted multiset as runs. Implemented by both
/// DegreeSequence and the realizer's working list so every shape decision is
/// written once and can only be right or wrong in one place.
trait RunView {
    fn total(&self) -> usize;
    fn odd_total(&self) -> usize;
    fn distinct(&self) -> usize;
    /// i-th run from the smallest value, as (value, count).
    fn front(&self, i: usize) -> Option<(usize, usize)>;
    /// i-th run from the largest value.
    fn back(&self, i: usize) -> Option<(usize, usize)>;
}

impl RunView for DegreeSequence {
    fn total(&self) -> usize {
        self.len()
    }

    fn odd_total(&self) -> usize {
        self.odd_count()
    }

    fn distinct(&self) -> usize {
        self.distinct_count()
    }

    fn front(&self, i: usize) -> Option<(usize, usize)> {
        self.runs().get(i).map(|r| (r.value, r.count))
    }

    fn back(&self, i: usize) -> Option<(usize, usize)> {
        let runs = self.runs();
        runs
            .len()
            .checked_sub(i + 1)
            .map(|j| (runs[j].value, runs[j].count))
    }
}

// ---------------------------------------------------------------------------
// Shape decisions

fn classify_view(v: &impl RunView, ell: usize) -> SequenceClass {
    if v.distinct() <= 2 {
        return SequenceClass::Flat;
    }
    // 3 and 4 can only sit in the first two runs above the 2s.
    let mut n3 = 0;
    let mut n4 = 0;
    for i in 1..=2 {
        if let Some((value, count)) = v.front(i) {
            match value {
                3 => n3 = count,
                4 => n4 = count,
                _ => {}
            }
        }
    }
    if v.odd_total() == 0 {
        if n4 >= 3 {
            return SequenceClass::Special(SpecialKind::Even);
        }
        return SequenceClass::Typical;
    }
    if v.odd_total() == 2 && n3 == 1 && n4 >= 3 && ell % 2 == 1 && ell != 3 {
        return SequenceClass::Special(SpecialKind::OddPair);
    }
    SequenceClass::Typical
}

/// Classifies the sequence for the peeling step. `ell` matters only for the
/// odd-pair special shape, where the witness must be the second odd element.
pub fn classify(d: &DegreeSequence, ell: usize) -> SequenceClass {
    classify_view(d, ell)
}

fn choose_k_view(v: &impl RunView, ell: usize) -> KChoice {
    match classify_view(v, ell) {
        SequenceClass::Flat => {
            let d = v.back(0).expect("nonempty").0;
            debug_assert_eq!(ell, d);
            KChoice {
                k: d,
                ell: d,
                swapped: false,
            }
        }
        SequenceClass::Special(SpecialKind::OddPair) => KChoice {
            k: 4,
            ell,
            swapped: false,
        },
        SequenceClass::Typical | SequenceClass::Special(SpecialKind::Even) => {
            let alpha = v.front(1).expect("a value above 2 exists").0;
            if ell == alpha {
                // The witness request moves up one run; the k side of the
                // expansion will end at the original degree.
                let next = v.front(2).expect("three distinct values").0;
                KChoice {
                    k: alpha,
                    ell: next,
                    swapped: true,
                }
            } else {
                KChoice {
                    k: alpha,
                    ell,
                    swapped: false,
                }
            }
        }
    }
}

/// Picks the degree k that the next peel works against, promoting the
/// witness request out of the way when the two collide.
pub fn choose_k(d: &DegreeSequence, ell: usize) -> KChoice {
    choose_k_view(d, ell)
}

// ---------------------------------------------------------------------------
// Base case matching

fn match_five(v: &impl RunView) -> Option<BaseCase> {
    // Collect the runs above 2, smallest first. Five elements fit in at most
    // three runs for the shapes we can build.
    let mut tail = Vec::new();
    for j in 0..4 {
        match v.back(j) {
            Some((value, count)) if value > 2 => tail.push((value, count)),
            _ => break,
        }
    }
    tail.reverse();
    match tail[..] {
        [(d, 5)] => {
            if d % 2 == 0 && d >= 6 {
                return Some(BaseCase::FiveHubsEven { d });
            }
        }
        [(a, 4), (b, 1)] => {
            if b == 2 * a - 2 && a >= 5 {
                return Some(BaseCase::FiveHubsSkew { x: a, d: a });
            }
        }
        [(a, 1), (b, 3), (c, 1)] => {
            if c == a + b - 2 && b >= 5 {
                return Some(BaseCase::FiveHubsSkew { x: a, d: b });
            }
        }
        [(a, 3), (b, 1), (c, 1)] => {
            if c == a + b - 2 && a >= 5 {
                return Some(BaseCase::FiveHubsSkew { x: b, d: a });
            }
        }
        _ => {}
    }
    None
}

fn hub_pair_free_y(v: &impl RunView, start: usize, b: usize, ell: usize, r: usize) -> Option<usize> {
    // Largest value at or below b with a copy to spare once the b and ell
    // picks are reserved. At most two runs can be exhausted by those picks,
    // so three runs suffice.
    for j in start..start + 3 {
        let (value, count) = v.back(j)?;
        if value < r + 2 {
            return None;
        }
        let mut avail = count;
        if value == b {
            avail = avail.saturating_sub(1);
        }
        if value == ell {
            avail = avail.saturating_sub(1);
        }
        if avail >= 1 {
            return Some(value);
        }
    }
    None
}

fn hub_pair_match(v: &impl RunView, ell: usize) -> Option<BaseCase> {
    let n = v.total();
    let (front_value, n2) = v.front(0)?;
    if front_value != 2 {
        return None;
    }
    // b becomes the dominating value n-r-1 after stripping r ears. Every
    // element above b must be consumed by the two strip picks, so only the
    // top three runs can host b.
    let mut above = 0;
    for j in 0..3 {
        let (b, b_count) = match v.back(j) {
            Some(run) => run,
            None => break,
        };
        if j > 0 {
            above += v.back(j - 1).expect("previous run exists").1;
        }
        if above > 2 {
            break;
        }
        if b + 1 >= n {
            continue;
        }
        let r = n - 1 - b;
        let spare_twos = n2 - usize::from(b == 2);
        if spare_twos < r || ell < r + 2 {
            continue;
        }
        if ell == b && b_count < 2 {
            continue;
        }
        let y = match above {
            0 => hub_pair_free_y(v, j, b, ell, r),
            1 => {
                let p = v.back(0).expect("top run exists").0;
                if ell == p {
                    hub_pair_free_y(v, j, b, ell, r)
                } else if p >= r + 2 {
                    Some(p)
                } else {
                    None
                }
            }
            2 => {
                let (p, p_count) = v.back(0).expect("top run exists");
                let q = if p_count == 2 {
                    p
                } else {
                    v.back(1).expect("second run exists").0
                };
                if ell == p && q >= r + 2 {
                    Some(q)
                } else if ell == q && p >= r + 2 {
                    Some(p)
                } else {
                    None
                }
            }
            _ => None,
        };
        if let Some(y) = y {
            // A pair of stripped-to-2 endpoints only works in the triangle.
            if ell - r == 2 && y - r == 2 && n - r > 3 {
                continue;
            }
            return Some(BaseCase::HubPair { r, x: ell, y });
        }
    }
    None
}

fn match_base_case_view(v: &impl RunView, ell: usize) -> Option<BaseCase> {
    let n = v.total();
    if n < 3 {
        return None;
    }
    if n == 3 {
        return Some(BaseCase::Triangle);
    }
    let (front_value, n2) = v.front(0)?;
    if front_value != 2 {
        return None;
    }
    match n - n2 {
        2 => {
            // The two values above 2 must each be n-1 for the sum to land.
            return Some(BaseCase::Book);
        }
        3 => {
            let mut hubs = Vec::new();
            for j in 0..3 {
                if let Some((value, count)) = v.back(j) {
                    if value > 2 {
                        for _ in 0..count {
                            hubs.push(value);
                        }
                    }
                }
            }
            hubs.sort_unstable();
            return Some(BaseCase::ThreeHubs {
                x: hubs[0],
                y: hubs[1],
                z: hubs[2],
            });
        }
        5 => {
            if let Some(case) = match_five(v) {
                return Some(case);
            }
        }
        _ => {}
    }
    if v.back(0)?.0 == n - 1 {
        return Some(BaseCase::Dominating);
    }
    hub_pair_match(v, ell)
}

/// Detects whether the sequence is one of the directly constructible shapes
/// for the witness degree `ell`. Meaningful only for accepted sequences.
pub fn match_base_case(d: &DegreeSequence, ell: usize) -> Option<BaseCase> {
    match_base_case_view(d, ell)
}

// ---------------------------------------------------------------------------
// Peeling a DegreeSequence

/// Runs one peel on an accepted, non-base sequence, returning the step to
/// replay later, the peeled sequence, and the witness degree within it.
///
/// Panics if the sequence cannot support the peel; that only happens when the
/// preconditions (accepted by `recognize`, `match_base_case` is None, `ell`
/// present and at least 3) are violated.
pub fn reduce(d: &DegreeSequence, ell: usize) -> Reduction {
    debug_assert!(recognize(d).accepted());
    debug_assert!(match_base_case(d, ell).is_none());
    let class = classify(d, ell);
    let choice = choose_k(d, ell);
    let (step, sequence, next_ell) = match class {
        SequenceClass::Flat => {
            let dv = choice.k;
            assert!(d.multiplicity(dv) >= 6, "flat peel needs six copies of d");
            assert!(
                d.multiplicity(2) >= 2 * dv - 7,
                "flat peel needs 2d-7 twos"
            );
            let seq = d
                .remove(2, 2 * dv - 7)
                .expect("twos checked")
                .remove(dv, 2)
                .expect("copies checked")
                .decrease(dv, dv - 2)
                .expect("copy of d remains")
                .decrease(dv, dv - 4)
                .expect("copy of d remains");
            (ExpandStep::Flat { d: dv }, seq, 4)
        }
        SequenceClass::Typical => {
            let k = choice.k;
            let seq = d
                .remove(2, k - 2)
                .expect("k-2 twos present")
                .decrease(k, k - 2)
                .expect("k present")
                .decrease(choice.ell, k - 2)
                .expect("witness present");
            (
                ExpandStep::Typical {
                    k,
                    swapped: choice.swapped,
                },
                seq,
                choice.ell - k + 2,
            )
        }
        SequenceClass::Special(_) => {
            let seq = d
                .remove(2, 2)
                .expect("two twos present")
                .remove(4, 1)
                .expect("a 4 present")
                .decrease(4, 2)
                .expect("another 4 present")
                .decrease(choice.ell, 2)
                .expect("witness present");
            (
                ExpandStep::Special {
                    swapped: choice.swapped,
                },
                seq,
                choice.ell - 2,
            )
        }
    };
    debug_assert!(recognize(&sequence).accepted(), "peel left the class: {sequence}");
    debug_assert!(sequence.contains(next_ell));
    debug_assert!(next_ell >= 3);
    Reduction {
        step,
        sequence,
        ell: next_ell,
    }
}

// ---------------------------------------------------------------------------
// The working list

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
struct WorkNode {
    value: usize,
    count: usize,
    prev: usize,
    next: usize,
}

/// Arena-backed doubly linked run list. Peels touch only the ends plus at
/// most a few hops, keeping each step O(1) amortized.
#[derive(Debug)]
struct WorkSeq {
    nodes: Vec<WorkNode>,
    free: Vec<usize>,
    head: usize,
    tail: usize,
    total: usize,
    odd: usize,
    distinct: usize,
    ell_node: usize,
    ell_value: usize,
}

impl RunView for WorkSeq {
    fn total(&self) -> usize {
        self.total
    }

    fn odd_total(&self) -> usize {
        self.odd
    }

    fn distinct(&self) -> usize {
        self.distinct
    }

    fn front(&self, i: usize) -> Option<(usize, usize)> {
        let mut node = self.head;
        for _ in 0..i {
            if node == NIL {
                return None;
            }
            node = self.nodes[node].next;
        }
        (node != NIL).then(|| (self.nodes[node].value, self.nodes[node].count))
    }

    fn back(&self, i: usize) -> Option<(usize, usize)> {
        let mut node = self.tail;
        for _ in 0..i {
            if node == NIL {
                return None;
            }
            node = self.nodes[node].prev;
        }
        (node != NIL).then(|| (self.nodes[node].value, self.nodes[node].count))
    }
}

impl WorkSeq {
    fn from_sequence(d: &DegreeSequence, ell: usize) -> Self {
        let runs = d.runs();
        let mut nodes = Vec::with_capacity(runs.len() + 4);
        let mut ell_node = NIL;
        for (i, run) in runs.iter().enumerate() {
            nodes.push(WorkNode {
                value: run.value,
                count: run.count,
                prev: if i == 0 { NIL } else { i - 1 },
                next: if i + 1 == runs.len() { NIL } else { i + 1 },
            });
            if run.value == ell {
                ell_node = i;
            }
        }
        assert!(ell_node != NIL, "witness degree must occur in the sequence");
        WorkSeq {
            nodes,
            free: Vec::new(),
            head: 0,
            tail: runs.len() - 1,
            total: d.len(),
            odd: d.odd_count(),
            distinct: runs.len(),
            ell_node,
            ell_value: ell,
        }
    }

    fn to_degree_sequence(&self) -> DegreeSequence {
        let mut runs = Vec::with_capacity(self.distinct);
        let mut node = self.head;
        while node != NIL {
            runs.push((self.nodes[node].value, self.nodes[node].count));
            node = self.nodes[node].next;
        }
        DegreeSequence::from_runs(&runs).expect("working list holds valid runs")
    }

    fn front_node(&self, i: usize) -> usize {
        let mut node = self.head;
        for _ in 0..i {
            node = self.nodes[node].next;
        }
        node
    }

    fn alloc(&mut self, value: usize, count: usize, prev: usize, next: usize) -> usize {
        let id = match self.free.pop() {
            Some(id) => {
                self.nodes[id] = WorkNode {
                    value,
                    count,
                    prev,
                    next,
                };
                id
            }
            None => {
                self.nodes.push(WorkNode {
                    value,
                    count,
                    prev,
                    next,
                });
                self.nodes.len() - 1
            }
        };
        if prev == NIL {
            self.head = id;
        } else {
            self.nodes[prev].next = id;
        }
        if next == NIL {
            self.tail = id;
        } else {
            self.nodes[next].prev = id;
        }
        self.distinct += 1;
        id
    }

    fn unlink(&mut self, node: usize) {
        let WorkNode { prev, next, .. } = self.nodes[node];
        if prev == NIL {
            self.head = next;
        } else {
            self.nodes[prev].next = next;
        }
        if next == NIL {
            self.tail = prev;
        } else {
            self.nodes[next].prev = prev;
        }
        self.distinct -= 1;
        self.free.push(node);
    }

    fn remove_head_twos(&mut self, r: usize) {
        let head = self.head;
        debug_assert_eq!(self.nodes[head].value, 2);
        debug_assert!(self.nodes[head].count >= r);
        self.nodes[head].count -= r;
        self.total -= r;
        if self.nodes[head].count == 0 {
            self.unlink(head);
        }
    }

    /// Removes copies from a run that must stay alive afterwards.
    fn remove_from_run(&mut self, node: usize, c: usize) {
        debug_assert!(self.nodes[node].count > c);
        self.nodes[node].count -= c;
        self.total -= c;
        self.odd -= c * (self.nodes[node].value & 1);
    }

    /// Moves one copy out of `node` down to value minus delta, merging into
    /// an existing run or inserting a new one. Returns the landing run.
    fn decrease_at(&mut self, node: usize, delta: usize) -> usize {
        let value = self.nodes[node].value;
        let target = value - delta;
        debug_assert!(target >= 2);
        self.nodes[node].count -= 1;
        self.total -= 1;
        self.odd -= value & 1;
        let mut p = self.nodes[node].prev;
        if self.nodes[node].count == 0 {
            self.unlink(node);
        }
        while p != NIL && self.nodes[p].value > target {
            p = self.nodes[p].prev;
        }
        self.total += 1;
        self.odd += target & 1;
        if p != NIL && self.nodes[p].value == target {
            self.nodes[p].count += 1;
            return p;
        }
        let next = if p == NIL {
            self.head
        } else {
            self.nodes[p].next
        };
        self.alloc(target, 1, p, next)
    }

    fn promote_ell(&mut self) {
        let next = self.nodes[self.ell_node].next;
        assert!(next != NIL, "promotion needs a larger run");
        self.ell_node = next;
        self.ell_value = self.nodes[next].value;
    }
}

/// One peel on the working list; mirrors `reduce` exactly.
fn reduce_in_place(work: &mut WorkSeq) -> ExpandStep {
    let class = classify_view(work, work.ell_value);
    let choice = choose_k_view(work, work.ell_value);
    if choice.swapped {
        work.promote_ell();
        debug_assert_eq!(work.ell_value, choice.ell);
    }
    match class {
        SequenceClass::Flat => {
            let d = choice.k;
            let d_node = work.tail;
            let (front_value, n2) = work.front(0).expect("nonempty");
            assert!(
                work.nodes[d_node].count >= 6,
                "flat peel needs six copies of d"
            );
            assert!(front_value == 2 && n2 >= 2 * d - 7, "flat peel needs 2d-7 twos");
            work.remove_head_twos(2 * d - 7);
            work.remove_from_run(d_node, 2);
            work.decrease_at(d_node, d - 2);
            let landing = work.decrease_at(d_node, d - 4);
            work.ell_node = landing;
            work.ell_value = 4;
            ExpandStep::Flat { d }
        }
        SequenceClass::Typical => {
            let k = choice.k;
            let k_node = work.front_node(1);
            work.remove_head_twos(k - 2);
            work.decrease_at(k_node, k - 2);
            let landing = work.decrease_at(work.ell_node, k - 2);
            work.ell_node = landing;
            work.ell_value -= k - 2;
            ExpandStep::Typical {
                k,
                swapped: choice.swapped,
            }
        }
        SequenceClass::Special(_) => {
            let four_node = {
                let f1 = work.front_node(1);
                if work.nodes[f1].value == 4 {
                    f1
                } else {
                    let f2 = work.nodes[f1].next;
                    debug_assert_eq!(work.nodes[f2].value, 4);
                    f2
                }
            };
            work.remove_head_twos(2);
            work.remove_from_run(four_node, 1);
            work.decrease_at(four_node, 2);
            let landing = work.decrease_at(work.ell_node, 2);
            work.ell_node = landing;
            work.ell_value -= 2;
            ExpandStep::Special {
                swapped: choice.swapped,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Expansion

/// Replays one peel on the graph. `ell_vertex` must have the peeled witness
/// degree and `ear` must be a degree-2 neighbor of it.
pub fn expand(
    g: &mut SimpleGraph,
    ell_vertex: usize,
    ear: usize,
    step: &ExpandStep,
) -> ExpandOutcome {
    debug_assert!(g.has_edge(ell_vertex, ear));
    debug_assert_eq!(g.degree(ear), 2);
    let (v, w) = (ell_vertex, ear);
    match *step {
        ExpandStep::Typical { k, .. } => {
            let first = g.push_ear(v, w);
            for _ in 1..k - 2 {
                g.push_ear(v, w);
            }
            ExpandOutcome {
                ell_pair: (v, first),
                dual_pair: (w, first),
            }
        }
        ExpandStep::Special { .. } => {
            let u = g.push_ear(v, w);
            let a = g.push_ear(v, u);
            let b = g.push_ear(w, u);
            ExpandOutcome {
                ell_pair: (v, a),
                dual_pair: (w, b),
            }
        }
        ExpandStep::Flat { d } => {
            // v rises from 4 back to d; w, the first new ear and the ear
            // chain below rebuild the two removed d values.
            let u = g.push_ear(v, w);
            for _ in 1..d - 4 {
                g.push_ear(v, w);
            }
            let q = g.push_ear(w, u);
            let t = g.push_ear(w, q);
            for _ in 0..d - 3 {
                g.push_ear(u, q);
            }
            ExpandOutcome {
                ell_pair: (w, t),
                dual_pair: (q, t),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Base case construction

fn other_anchor(g: &SimpleGraph, ear: usize, vertex: usize) -> usize {
    g.neighbors(ear)
        .iter()
        .copied()
        .find(|&u| u != vertex)
        .expect("an ear has two anchors")
}

fn build_triangle() -> (SimpleGraph, (usize, usize), (usize, usize)) {
    let mut g = SimpleGraph::new(3);
    g.add_edge(0, 1).unwrap();
    g.add_edge(0, 2).unwrap();
    g.add_edge(1, 2).unwrap();
    (g, (0, 1), (2, 1))
}

fn build_book(n: usize, ell: usize) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    debug_assert_eq!(ell, n - 1);
    let mut g = SimpleGraph::new(3);
    g.add_edge(0, 1).unwrap();
    g.add_edge(0, 2).unwrap();
    g.add_edge(1, 2).unwrap();
    for _ in 3..n {
        g.push_ear(0, 1);
    }
    // Vertex 2 is an ear on the spine edge whatever n is.
    (g, (0, 2), (1, 2))
}

fn build_three_hubs(
    n: usize,
    ell: usize,
    x: usize,
    y: usize,
    z: usize,
) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    debug_assert_eq!(x + y + z, 2 * n);
    let mut g = SimpleGraph::new(3);
    g.add_edge(0, 1).unwrap();
    g.add_edge(0, 2).unwrap();
    g.add_edge(1, 2).unwrap();
    let counts = [n - 1 - z, n - 1 - y, n - 1 - x];
    let edges = [(0, 1), (0, 2), (1, 2)];
    let mut first = [NIL; 3];
    for i in 0..3 {
        for j in 0..counts[i] {
            let e = g.push_ear(edges[i].0, edges[i].1);
            if j == 0 {
                first[i] = e;
            }
        }
    }
    // Hub degrees are x, y, z at vertices 0, 1, 2. Each hub touches at least
    // one eared edge because its degree is above 2.
    let (edge_idx, hub) = if ell == x {
        (if counts[0] > 0 { 0 } else { 1 }, 0)
    } else if ell == y {
        (if counts[0] > 0 { 0 } else { 2 }, 1)
    } else {
        debug_assert_eq!(ell, z);
        (if counts[1] > 0 { 1 } else { 2 }, 2)
    };
    let ear = first[edge_idx];
    let other = if edges[edge_idx].0 == hub {
        edges[edge_idx].1
    } else {
        edges[edge_idx].0
    };
    (g, (hub, ear), (other, ear))
}

fn fan_on_five() -> SimpleGraph {
    let mut g = SimpleGraph::new(5);
    for v in 1..5 {
        g.add_edge(0, v).unwrap();
    }
    g.add_edge(1, 2).unwrap();
    g.add_edge(2, 3).unwrap();
    g.add_edge(3, 4).unwrap();
    g
}

fn build_five_skew(
    ell: usize,
    x: usize,
    d: usize,
) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    debug_assert!(x >= 3 && d >= 5);
    let mut g = fan_on_five();
    // Hub degrees: apex 0 gets x+d-2, vertex 1 gets x, vertices 2..4 get d.
    let ear12 = g.push_ear(1, 2);
    g.push_ear(3, 4);
    let mut first23 = NIL;
    for j in 0..d - 4 {
        let e = g.push_ear(2, 3);
        if j == 0 {
            first23 = e;
        }
    }
    for _ in 0..x - 3 {
        g.push_ear(0, 1);
    }
    let mut first04 = NIL;
    for j in 0..d - 3 {
        let e = g.push_ear(0, 4);
        if j == 0 {
            first04 = e;
        }
    }
    if ell == x + d - 2 {
        (g, (0, first04), (4, first04))
    } else if ell == x {
        (g, (1, ear12), (2, ear12))
    } else {
        debug_assert_eq!(ell, d);
        (g, (2, first23), (3, first23))
    }
}

fn build_five_even(ell: usize, d: usize) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    debug_assert!(d >= 6 && d % 2 == 0);
    debug_assert_eq!(ell, d);
    let mut g = fan_on_five();
    for _ in 0..(d - 4) / 2 {
        g.push_ear(0, 1);
    }
    let mut first12 = NIL;
    for j in 0..d / 2 {
        let e = g.push_ear(1, 2);
        if j == 0 {
            first12 = e;
        }
    }
    for _ in 0..(d - 6) / 2 {
        g.push_ear(2, 3);
    }
    for _ in 0..d / 2 {
        g.push_ear(3, 4);
    }
    for _ in 0..(d - 4) / 2 {
        g.push_ear(0, 4);
    }
    (g, (1, first12), (2, first12))
}

fn build_dominating(
    d: &DegreeSequence,
    ell: usize,
) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    let marked = realize_with_dominating(d, ell, 2).expect("dominating shape");
    let ear = marked.k_vertex;
    let dual = other_anchor(&marked.graph, ear, marked.ell_vertex);
    (marked.graph, (marked.ell_vertex, ear), (dual, ear))
}

fn build_hub_pair(
    d: &DegreeSequence,
    ell: usize,
    r: usize,
    y: usize,
) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    let stripped = d
        .remove(2, r)
        .expect("r twos present")
        .decrease(ell, r)
        .expect("witness present")
        .decrease(y, r)
        .expect("partner present");
    let marked = realize_with_dominating(&stripped, ell - r, y - r)
        .expect("stripping leaves a dominating shape");
    let mut g = marked.graph;
    let (u, v) = (marked.ell_vertex, marked.k_vertex);
    let mut first = NIL;
    for j in 0..r {
        let e = g.push_ear(u, v);
        if j == 0 {
            first = e;
        }
    }
    (g, (u, first), (v, first))
}

fn build_base(
    d: &DegreeSequence,
    ell: usize,
    case: BaseCase,
) -> (SimpleGraph, (usize, usize), (usize, usize)) {
    let built = match case {
        BaseCase::Triangle => build_triangle(),
        BaseCase::Book => build_book(d.len(), ell),
        BaseCase::ThreeHubs { x, y, z } => build_three_hubs(d.len(), ell, x, y, z),
        BaseCase::FiveHubsSkew { x, d: deg } => build_five_skew(ell, x, deg),
        BaseCase::FiveHubsEven { d: deg } => build_five_even(ell, deg),
        BaseCase::Dominating => build_dominating(d, ell),
        BaseCase::HubPair { r, x, y } => {
            debug_assert_eq!(x, ell);
            build_hub_pair(d, ell, r, y)
        }
    };
    debug_assert_eq!(
        built.0.degree_sequence().expect("no isolated vertices"),
        *d,
        "base build degree mismatch for {case:?} on {d}"
    );
    debug_assert_eq!(built.0.degree(built.1 .0), ell);
    debug_assert_eq!(built.0.degree(built.1 .1), 2);
    built
}

// ---------------------------------------------------------------------------
// The full pipeline

/// Builds a 2-tree with the given degree sequence and a vertex of degree
/// `ell` adjacent to an ear. With `ell` of None the largest degree is used
/// (the only choice, 2, for the triangle). Runs in O(n).
pub fn realize(d: &DegreeSequence, ell: Option<usize>) -> Result<Realization, RealizeError> {
    realize_with_stats(d, ell).map(|(r, _)| r)
}

/// `realize` plus counters describing the construction path.
pub fn realize_with_stats(
    d: &DegreeSequence,
    ell: Option<usize>,
) -> Result<(Realization, RealizeStats), RealizeError> {
    if let Some(condition) = recognize(d).violation() {
        return Err(RealizeError::Rejected(condition));
    }
    let n = d.len();
    let ell = match ell {
        Some(l) => l,
        None if n == 3 => 2,
        None => d.max().expect("nonempty"),
    };
    if !d.contains(ell) {
        return Err(RealizeError::MarkNotPresent(ell));
    }
    if ell < 3 && n > 3 {
        return Err(RealizeError::MarkTooSmall(ell));
    }
    let mut work = WorkSeq::from_sequence(d, ell);
    let mut steps = Vec::new();
    let base = loop {
        if let Some(case) = match_base_case_view(&work, work.ell_value) {
            break case;
        }
        let step = reduce_in_place(&mut work);
        steps.push(step);
        // Each peel must land back inside the class with the witness intact;
        // this is the induction the whole construction rides on.
        debug_assert!(
            recognize(&work.to_degree_sequence()).accepted(),
            "peel left the class: {}",
            work.to_degree_sequence()
        );
        debug_assert!(work.ell_value >= 3);
    };
    let base_seq = work.to_degree_sequence();
    let (mut graph, mut pair, mut dual) = build_base(&base_seq, work.ell_value, base);
    let promotions = steps.iter().filter(|s| s.swapped()).count();
    for step in steps.iter().rev() {
        let outcome = expand(&mut graph, pair.0, pair.1, step);
        if step.swapped() {
            pair = outcome.dual_pair;
            dual = outcome.ell_pair;
        } else {
            pair = outcome.ell_pair;
            dual = outcome.dual_pair;
        }
    }
    debug_assert!(graph.is_two_tree());
    debug_assert_eq!(graph.degree_sequence().expect("no isolated vertices"), *d);
    debug_assert_eq!(graph.degree(pair.0), ell);
    debug_assert_eq!(graph.degree(pair.1), 2);
    let stats = RealizeStats {
        reductions: steps.len(),
        promotions,
        base,
    };
    Ok((
        Realization {
            graph,
            ell,
            ell_vertex: pair.0,
            witness_ear: Some(pair.1),
            dual_vertex: Some(dual.0),
            dual_ear: Some(dual.1),
        },
        stats,
    ))
}

/// Grows a uniform-edge random 2-tree on n vertices: starting from a
/// triangle, each new vertex becomes an ear on an edge drawn uniformly from
/// the current graph. Deterministic for a fixed seed.
pub fn random_two_tree(n: usize, seed: u64) -> Result<SimpleGraph, RealizeError> {
    if n < 3 {
        return Err(RealizeError::Rejected(Condition::Domain));
    }
    let mut g = SimpleGraph::new(3);
    g.add_edge(0, 1).unwrap();
    g.add_edge(0, 2).unwrap();
    g.add_edge(1, 2).unwrap();
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 3..n {
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let w = g.push_ear(u, v);
        edges.push((u, w));
        edges.push((v, w));
    }
    Ok(g)
}
