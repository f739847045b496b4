//! Integer partitions and skew diagrams.
//!
//! Everything else in the crate is indexed by [`Partition`]. Partitions are
//! totally ordered by size first and then reverse-lexicographically, so
//! `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. Within one size this order
//! lists a partition before every partition it strictly dominates, which is
//! what makes the change-of-basis matrices triangular.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`: each must be positive and no larger than the one before.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(n)`, or `∅` when `n` is zero.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The transposed diagram: its parts are the column lengths of `self`.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Product of `m!` over the multiplicities `m` of the distinct parts.
    pub fn multiplicity_factorials(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .product()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the size of the centralizer of a permutation
    /// of cycle type λ. `z_∅ = 1`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| BigUint::from(i).pow(m as u32) * factorial(m))
            .product()
    }

    /// Dominance order: every partial sum of `self` is at least the
    /// corresponding partial sum of `other`. Only meaningful for equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Parts of both partitions merged into one, as in `p_λ p_μ = p_{λ∪μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Product of `p!` over the parts.
    pub fn part_factorials(&self) -> BigUint {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// Does the diagram of `inner` fit inside this one?
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[6,4,4,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Domain(format!("expected a bracketed partition, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("invalid part {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Every partition of `n`, in the canonical order (reverse-lexicographic).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            extend(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// A skew diagram `λ/μ`, stored as the pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

/// Boxes per row (horizontal strip) or per column (vertical strip), in
/// diagram order, with empty rows or columns left out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripProfile(pub Vec<usize>);

impl StripProfile {
    /// The counts sorted into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

/// Result of [`SkewDiagram::classify_strip`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripClass {
    /// At most one box per column, and some row holds two or more.
    Horizontal { rows: StripProfile },
    /// At most one box per row, and some column holds two or more.
    Vertical { columns: StripProfile },
    /// At most one box in every row and every column.
    Both { rows: StripProfile, columns: StripProfile },
    Neither,
}

impl StripClass {
    pub fn is_horizontal(&self) -> bool {
        matches!(self, StripClass::Horizontal { .. } | StripClass::Both { .. })
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self, StripClass::Vertical { .. } | StripClass::Both { .. })
    }

    pub fn row_profile(&self) -> Option<&StripProfile> {
        match self {
            StripClass::Horizontal { rows } | StripClass::Both { rows, .. } => Some(rows),
            _ => None,
        }
    }

    pub fn column_profile(&self) -> Option<&StripProfile> {
        match self {
            StripClass::Vertical { columns } | StripClass::Both { columns, .. } => Some(columns),
            _ => None,
        }
    }
}

impl SkewDiagram {
    /// Builds `outer/inner`, checking that `inner` fits inside `outer`.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(Error::NotContained {
                reason: format!(
                    "inner has {} rows but outer has only {}",
                    inner.len(),
                    outer.len()
                ),
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        if let Some(i) = (0..inner.len()).find(|&i| inner.part(i) > outer.part(i)) {
            return Err(Error::NotContained {
                reason: format!(
                    "row {} has {} inner boxes but only {} outer boxes",
                    i + 1,
                    inner.part(i),
                    outer.part(i)
                ),
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewDiagram { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewDiagram {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns `(inner_i, outer_i]` occupied in row `i` (0-based), 1-based.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    /// Is the 1-based cell `(row, col)` part of the diagram?
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Cells as 1-based `(row, column)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len()).flat_map(move |i| {
            let (lo, hi) = self.row_span(i);
            (lo + 1..=hi).map(move |j| (i + 1, j))
        })
    }

    /// Reflection across the main diagonal: `λ'/μ'`.
    pub fn transpose(&self) -> SkewDiagram {
        SkewDiagram {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    pub fn classify_strip(&self) -> StripClass {
        let rows: Vec<usize> = (0..self.outer.len())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .filter(|&c| c > 0)
            .collect();
        let t = self.transpose();
        let columns: Vec<usize> = (0..t.outer.len())
            .map(|i| t.outer.part(i) - t.inner.part(i))
            .filter(|&c| c > 0)
            .collect();
        let horizontal = columns.iter().all(|&c| c <= 1);
        let vertical = rows.iter().all(|&c| c <= 1);
        match (horizontal, vertical) {
            (true, true) => StripClass::Both {
                rows: StripProfile(rows),
                columns: StripProfile(columns),
            },
            (true, false) => StripClass::Horizontal {
                rows: StripProfile(rows),
            },
            (false, true) => StripClass::Vertical {
                columns: StripProfile(columns),
            },
            (false, false) => StripClass::Neither,
        }
    }

    /// The same cell configuration with every empty row and column deleted.
    ///
    /// Two diagrams with equal normal forms have the same skew Schur function.
    pub fn normalized(&self) -> SkewDiagram {
        let spans: Vec<(usize, usize)> = (0..self.outer.len())
            .map(|i| self.row_span(i))
            .filter(|(lo, hi)| hi > lo)
            .collect();
        let width = self.outer.part(0);
        let mut occupied = vec![false; width + 1];
        for &(lo, hi) in &spans {
            for flag in &mut occupied[lo + 1..=hi] {
                *flag = true;
            }
        }
        // rank[c] = number of occupied columns among 1..=c
        let mut rank = vec![0; width + 1];
        for c in 1..=width {
            rank[c] = rank[c - 1] + usize::from(occupied[c]);
        }
        let outer = spans.iter().map(|&(_, hi)| rank[hi]).collect();
        let inner: Vec<usize> = spans
            .iter()
            .map(|&(lo, _)| rank[lo])
            .filter(|&m| m > 0)
            .collect();
        SkewDiagram {
            outer: Partition(outer),
            inner: Partition(inner),
        }
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SkewDiagram {
    type Err = Error;

    /// Parses `[6,4,4,1]/[3,2]`, or a bare partition for a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewDiagram::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewDiagram::straight(s.parse()?)),
        }
    }
}

/// Number of partitions of each `k ≤ n`, keyed by `k`. Computed with Euler's
/// pentagonal recurrence, independently of [`partitions_of`].
pub fn partition_counts(n: usize) -> BTreeMap<usize, u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p.into_iter()
        .enumerate()
        .map(|(k, c)| (k, c as u64))
        .collect()
}
