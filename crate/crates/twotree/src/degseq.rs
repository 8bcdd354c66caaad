//! Multisets of positive integers stored run-length encoded.
//!
//! Degree sequences are multisets: construction order never matters, and two
//! sequences compare equal exactly when every value occurs the same number of
//! times. Runs are kept ascending by value, so the encoding is canonical and
//! derived quantities (length, odd count) are maintained incrementally.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// `count` copies of `value`, one maximal group of an encoded multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub value: usize,
    pub count: usize,
}

/// A multiset of positive integers in canonical run-length form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DegreeSequence {
    runs: Vec<Run>,
    len: usize,
    odd: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegSeqError {
    #[error("values must be positive integers")]
    ZeroValue,
    #[error("run of {0} has zero length")]
    EmptyRun(usize),
    #[error("cannot remove {count} copies of {value}: only {present} present")]
    Underflow {
        value: usize,
        count: usize,
        present: usize,
    },
    #[error("decreasing {value} by {delta} would leave a non-positive value")]
    BelowOne { value: usize, delta: usize },
}

impl DegreeSequence {
    /// Builds a sequence from raw elements in any order.
    pub fn from_elements<I>(items: I) -> Result<Self, DegSeqError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut vals: Vec<usize> = items.into_iter().collect();
        if vals.iter().any(|&v| v == 0) {
            return Err(DegSeqError::ZeroValue);
        }
        vals.sort_unstable();
        let mut runs: Vec<Run> = Vec::new();
        for v in vals {
            match runs.last_mut() {
                Some(r) if r.value == v => r.count += 1,
                _ => runs.push(Run { value: v, count: 1 }),
            }
        }
        Ok(Self::from_sorted_runs(runs))
    }

    /// Builds a sequence from (value, count) pairs; pairs may repeat values
    /// and arrive in any order, counts are merged.
    pub fn from_runs<I>(pairs: I) -> Result<Self, DegSeqError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        for &(v, c) in &pairs {
            if v == 0 {
                return Err(DegSeqError::ZeroValue);
            }
            if c == 0 {
                return Err(DegSeqError::EmptyRun(v));
            }
        }
        pairs.sort_unstable();
        let mut runs: Vec<Run> = Vec::new();
        for (v, c) in pairs {
            match runs.last_mut() {
                Some(r) if r.value == v => r.count += c,
                _ => runs.push(Run { value: v, count: c }),
            }
        }
        Ok(Self::from_sorted_runs(runs))
    }

    fn from_sorted_runs(runs: Vec<Run>) -> Self {
        let len = runs.iter().map(|r| r.count).sum();
        let odd = runs
            .iter()
            .filter(|r| r.value % 2 == 1)
            .map(|r| r.count)
            .sum();
        DegreeSequence { runs, len, odd }
    }

    /// The runs, ascending by value.
    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of elements counted with multiplicity.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Sum of all elements.
    pub fn sum(&self) -> usize {
        self.runs.iter().map(|r| r.value * r.count).sum()
    }

    pub fn min(&self) -> Option<usize> {
        self.runs.first().map(|r| r.value)
    }

    pub fn max(&self) -> Option<usize> {
        self.runs.last().map(|r| r.value)
    }

    /// How many times `value` occurs.
    pub fn multiplicity(&self, value: usize) -> usize {
        match self.runs.binary_search_by_key(&value, |r| r.value) {
            Ok(i) => self.runs[i].count,
            Err(_) => 0,
        }
    }

    pub fn contains(&self, value: usize) -> bool {
        self.multiplicity(value) > 0
    }

    /// Number of distinct values.
    pub fn distinct_count(&self) -> usize {
        self.runs.len()
    }

    /// Number of odd elements, with multiplicity.
    pub fn odd_count(&self) -> usize {
        self.odd
    }

    /// True when every element is even.
    pub fn is_even(&self) -> bool {
        self.odd == 0
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat(r.value).take(r.count))
    }

    /// Expanded ascending element vector.
    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// A copy with `count` occurrences of `value` removed.
    pub fn remove(&self, value: usize, count: usize) -> Result<Self, DegSeqError> {
        let mut out = self.clone();
        out.remove_in_place(value, count)?;
        Ok(out)
    }

    /// A copy in which one occurrence of `value` is replaced by
    /// `value - delta`.
    pub fn decrease(&self, value: usize, delta: usize) -> Result<Self, DegSeqError> {
        if delta >= value {
            return Err(DegSeqError::BelowOne { value, delta });
        }
        let mut out = self.clone();
        out.remove_in_place(value, 1)?;
        out.add_in_place(value - delta, 1);
        Ok(out)
    }

    /// A copy with every element lowered by one.
    pub fn decrement_all(&self) -> Result<Self, DegSeqError> {
        if self.contains(1) {
            return Err(DegSeqError::BelowOne { value: 1, delta: 1 });
        }
        let runs = self
            .runs
            .iter()
            .map(|r| Run {
                value: r.value - 1,
                count: r.count,
            })
            .collect();
        Ok(Self::from_sorted_runs(runs))
    }

    /// A copy with every element raised by one.
    pub fn increment_all(&self) -> Self {
        let runs = self
            .runs
            .iter()
            .map(|r| Run {
                value: r.value + 1,
                count: r.count,
            })
            .collect();
        Self::from_sorted_runs(runs)
    }

    /// A copy with `count` extra occurrences of `value`.
    pub fn add(&self, value: usize, count: usize) -> Result<Self, DegSeqError> {
        if value == 0 {
            return Err(DegSeqError::ZeroValue);
        }
        let mut out = self.clone();
        out.add_in_place(value, count);
        Ok(out)
    }

    fn remove_in_place(&mut self, value: usize, count: usize) -> Result<(), DegSeqError> {
        let i = self
            .runs
            .binary_search_by_key(&value, |r| r.value)
            .map_err(|_| DegSeqError::Underflow {
                value,
                count,
                present: 0,
            })?;
        let present = self.runs[i].count;
        if present < count {
            return Err(DegSeqError::Underflow {
                value,
                count,
                present,
            });
        }
        self.runs[i].count -= count;
        if self.runs[i].count == 0 {
            self.runs.remove(i);
        }
        self.len -= count;
        if value % 2 == 1 {
            self.odd -= count;
        }
        Ok(())
    }

    fn add_in_place(&mut self, value: usize, count: usize) {
        if count == 0 {
            return;
        }
        match self.runs.binary_search_by_key(&value, |r| r.value) {
            Ok(i) => self.runs[i].count += count,
            Err(i) => self.runs.insert(i, Run { value, count }),
        }
        self.len += count;
        if value % 2 == 1 {
            self.odd += count;
        }
    }
}

impl fmt::Display for DegreeSequence {
    /// Run form: `2^5 3 6^2` means five 2s, one 3, two 6s.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.runs {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if r.count == 1 {
                write!(f, "{}", r.value)?;
            } else {
                write!(f, "{}^{}", r.value, r.count)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseSeqError {
    #[error("empty sequence")]
    Empty,
    #[error("bad token {0:?}: expected VALUE or VALUE^COUNT")]
    BadToken(String),
    #[error(transparent)]
    Invalid(#[from] DegSeqError),
}

impl FromStr for DegreeSequence {
    type Err = ParseSeqError;

    /// Accepts whitespace- or comma-separated tokens `value` or
    /// `value^count`; `⟨⟩`/`<>` brackets are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s
            .chars()
            .map(|c| match c {
                ',' | '⟨' | '⟩' | '<' | '>' => ' ',
                c => c,
            })
            .collect();
        let mut pairs = Vec::new();
        for tok in cleaned.split_whitespace() {
            let (v, c) = match tok.split_once('^') {
                Some((v, c)) => (
                    v.parse::<usize>()
                        .map_err(|_| ParseSeqError::BadToken(tok.into()))?,
                    c.parse::<usize>()
                        .map_err(|_| ParseSeqError::BadToken(tok.into()))?,
                ),
                None => (
                    tok.parse::<usize>()
                        .map_err(|_| ParseSeqError::BadToken(tok.into()))?,
                    1,
                ),
            };
            pairs.push((v, c));
        }
        if pairs.is_empty() {
            return Err(ParseSeqError::Empty);
        }
        Ok(DegreeSequence::from_runs(pairs)?)
    }
}
