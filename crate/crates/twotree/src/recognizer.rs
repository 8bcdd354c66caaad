//! Decides whether a degree multiset is realizable by a 2-tree.
//!
//! A multiset D of n integers is accepted exactly when all of these hold:
//!
//! - (a) the sum is 4n - 6;
//! - (b) no element exceeds n - 1;
//! - (c) the minimum is 2 and it occurs at least twice;
//! - (d) D is not of the form ⟨2^(n-4), d^4⟩ with d >= 5;
//! - (e) if every element is even, the 2s make up at least n/3 + 1 elements.
//!
//! Everything runs on the run-length encoding, so a check costs O(distinct
//! values) regardless of n. Condition (e) is compared in integers as
//! 3·n₂ >= n + 3.

use std::fmt;

use crate::degseq::DegreeSequence;

/// Which acceptance condition a rejected multiset violates. `Domain` covers
/// inputs too small to be any 2-tree's degree multiset (fewer than three
/// elements).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Domain,
    /// (a) degree total 4n - 6
    Sum,
    /// (b) maximum at most n - 1
    MaxDegree,
    /// (c) minimum 2, occurring at least twice
    MinTwos,
    /// (d) the excluded family ⟨2^(n-4), d^4⟩, d >= 5
    SkewFour,
    /// (e) all-even multisets need 3·n₂ >= n + 3
    EvenTwos,
}

impl Condition {
    /// Short tag used in diagnostics: `a` through `e`, or `domain`.
    pub fn tag(self) -> &'static str {
        match self {
            Condition::Domain => "domain",
            Condition::Sum => "a",
            Condition::MaxDegree => "b",
            Condition::MinTwos => "c",
            Condition::SkewFour => "d",
            Condition::EvenTwos => "e",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Domain => f.write_str("domain"),
            c => write!(f, "condition {}", c.tag()),
        }
    }
}

/// Outcome of [`recognize`]: accepted, or rejected with the first violated
/// condition in (a)..(e) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Condition),
}

impl Verdict {
    pub fn accepted(self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn violation(self) -> Option<Condition> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(c) => Some(c),
        }
    }
}

/// Full membership test. Accepted multisets are exactly the degree multisets
/// of 2-trees.
pub fn recognize(d: &DegreeSequence) -> Verdict {
    for c in [
        Condition::Domain,
        Condition::Sum,
        Condition::MaxDegree,
        Condition::MinTwos,
        Condition::SkewFour,
        Condition::EvenTwos,
    ] {
        if !check_condition(d, c) {
            return Verdict::Reject(c);
        }
    }
    Verdict::Accept
}

/// Evaluates one condition in isolation; true means satisfied. Useful when a
/// caller wants every violation rather than the first.
pub fn check_condition(d: &DegreeSequence, c: Condition) -> bool {
    let n = d.len();
    match c {
        Condition::Domain => n >= 3,
        Condition::Sum => n >= 2 && d.sum() == 4 * n - 6,
        Condition::MaxDegree => d.max().is_some_and(|m| m <= n.saturating_sub(1)),
        Condition::MinTwos => d.min() == Some(2) && d.multiplicity(2) >= 2,
        Condition::SkewFour => {
            let runs = d.runs();
            !(runs.len() == 2
                && runs[0].value == 2
                && runs[1].count == 4
                && runs[1].value >= 5)
        }
        Condition::EvenTwos => !d.is_even() || 3 * d.multiplicity(2) >= n + 3,
    }
}

/// Degree multisets of trees: positive values summing to 2n - 2.
pub fn recognize_tree(d: &DegreeSequence) -> bool {
    let n = d.len();
    n >= 1 && d.sum() == 2 * n - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn accepts_small_two_trees() {
        assert_eq!(recognize(&seq("2^3")), Verdict::Accept);
        assert_eq!(recognize(&seq("2^3 4^2")), Verdict::Accept);
        assert_eq!(recognize(&seq("2 2 3 3")), Verdict::Accept);
        assert_eq!(recognize(&seq("2^6 5^6")), Verdict::Accept);
    }

    #[test]
    fn rejects_with_first_violation() {
        assert_eq!(
            recognize(&seq("2 2 3 4")),
            Verdict::Reject(Condition::Sum)
        );
        assert_eq!(
            recognize(&seq("2^5 8 8")),
            Verdict::Reject(Condition::MaxDegree)
        );
        assert_eq!(
            recognize(&seq("2 3 3 3 3 4 4")),
            Verdict::Reject(Condition::MinTwos)
        );
        assert_eq!(
            recognize(&seq("3 3 4 4")),
            Verdict::Reject(Condition::MinTwos)
        );
        assert_eq!(
            recognize(&seq("2^5 5^4")),
            Verdict::Reject(Condition::SkewFour)
        );
        assert_eq!(
            recognize(&seq("2^3 4^4")),
            Verdict::Reject(Condition::EvenTwos)
        );
        assert_eq!(recognize(&seq("2 2")), Verdict::Reject(Condition::Domain));
    }

    #[test]
    fn skew_family_boundaries() {
        // d = 4 is not excluded by (d); (e) catches it instead
        let d = seq("2^3 4^4");
        assert!(check_condition(&d, Condition::SkewFour));
        assert!(!check_condition(&d, Condition::EvenTwos));
        // d = 5 with the right sum is excluded by (d) alone
        let d = seq("2^5 5^4");
        assert!(check_condition(&d, Condition::Sum));
        assert!(!check_condition(&d, Condition::SkewFour));
        // same shape but five large values is fine shape-wise
        assert!(check_condition(&seq("2^5 5^5"), Condition::SkewFour));
    }

    #[test]
    fn even_threshold_is_exact() {
        // n = 9: need 3*n2 >= 12, so n2 = 4 passes and n2 = 3 fails
        assert_eq!(recognize(&seq("2^4 4^3 6 8")).violation(), None);
        assert_eq!(
            recognize(&seq("2^3 4^6")),
            Verdict::Reject(Condition::EvenTwos)
        );
        // odd entries disable (e) entirely
        let with_odds = seq("2^3 3 3 4^2 5 5"); // n=9 sum 30
        assert!(check_condition(&with_odds, Condition::EvenTwos));
    }

    #[test]
    fn tree_sequences() {
        assert!(recognize_tree(&seq("1 1")));
        assert!(recognize_tree(&seq("1 1 1 3")));
        assert!(recognize_tree(&seq("1 1 2 2")));
        assert!(!recognize_tree(&seq("2 2 2")));
        assert!(!recognize_tree(&seq("1 1 1 1")));
    }
}
