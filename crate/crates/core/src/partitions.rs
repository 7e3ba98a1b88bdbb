//! Integer partitions and the scalar statistics attached to them.
//!
//! A [`Partition`] labels a conjugacy class of the symmetric group (by cycle
//! type) as well as an irreducible representation (by Young diagram). The
//! statistics needed elsewhere in the crate (centralizer orders, hook
//! products, cell contents) live in [`PartitionStatistics`] so that partitions
//! themselves stay small, hashable values.
//!
//! Enumeration order is reverse-lexicographic, e.g. for `n = 4`:
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. The [`Ord`] impl agrees with this
//! order within a fixed weight and sorts smaller weights first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let weight = parts.iter().sum();
        Ok(Self { parts, weight })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The single-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n], weight: n }
        }
    }

    /// The single-column partition `(1^n)`: the identity cycle type.
    pub fn column(n: u32) -> Self {
        Self { parts: vec![1; n as usize], weight: n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight minus length.
    pub fn colength(&self) -> u32 {
        self.weight - self.parts.len() as u32
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts, weight: self.weight }
    }

    /// Map `i ↦ m_i`, the number of parts equal to `i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Cells `(row, column)` of the Young diagram, both 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Cell contents `j - i` in row-major order.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.parts[i as usize - 1] - j;
                let leg = conj.parts[j as usize - 1] - i;
                arm + leg + 1
            })
            .collect()
    }

    /// Order `z_μ` of the centralizer of a permutation of cycle type `μ`.
    pub fn z_order(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| factorial(m) * BigUint::from(i).pow(m))
            .product()
    }

    /// `|aut(λ)| = Π m_i!`.
    pub fn aut_order(&self) -> BigUint {
        self.multiplicities().into_values().map(factorial).product()
    }

    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths().into_iter().map(BigUint::from).product()
    }

    /// Appends the parts of `other` and re-sorts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, weight: self.weight + other.weight }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in partition {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

/// Everything `stats` reports about a partition, computed eagerly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStatistics {
    pub z_order: BigUint,
    pub aut_order: BigUint,
    pub colength: u32,
    pub hook_product: BigUint,
    /// Contents sorted ascending, so two records compare as multisets.
    pub contents: Vec<i64>,
    pub multiplicities: BTreeMap<u32, u32>,
}

pub fn stats(lambda: &Partition) -> PartitionStatistics {
    let mut contents = lambda.contents();
    contents.sort_unstable();
    PartitionStatistics {
        z_order: lambda.z_order(),
        aut_order: lambda.aut_order(),
        colength: lambda.colength(),
        hook_product: lambda.hook_product(),
        contents,
        multiplicities: lambda.multiplicities(),
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

/// All partitions of `n`, optionally with exactly `length` parts, in
/// reverse-lexicographic order.
pub fn enumerate_partitions(n: u32, length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, length, &mut current, &mut out);
    out
}

fn fill(
    remaining: u32,
    max_part: u32,
    length: Option<usize>,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if length.map_or(true, |l| l == current.len()) {
            out.push(Partition {
                weight: current.iter().sum(),
                parts: current.clone(),
            });
        }
        return;
    }
    if let Some(l) = length {
        let slots = l.saturating_sub(current.len()) as u32;
        // Each remaining slot needs at least one box, and holds at most max_part.
        if slots == 0 || slots > remaining || (slots as u64) * (max_part as u64) < remaining as u64 {
            return;
        }
    }
    for first in (1..=max_part.min(remaining)).rev() {
        current.push(first);
        fill(remaining - first, first, length, current, out);
        current.pop();
    }
}

/// `p(n)`, or `p(n, k)` (partitions of `n` into exactly `k` parts).
pub fn partition_count(n: u32, length: Option<u32>) -> u64 {
    match length {
        None => {
            // p(n) by the standard "largest part at most j" table.
            let n = n as usize;
            let mut p = vec![0u64; n + 1];
            p[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    p[total] += p[total - part];
                }
            }
            p[n]
        }
        Some(k) => partition_count_exact(n, k),
    }
}

fn partition_count_exact(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    // p(n, k) = p(n - 1, k - 1) + p(n - k, k)
    let (n, k) = (n as usize, k as usize);
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for total in 1..=n {
        for parts in 1..=k.min(total) {
            table[total][parts] = table[total - 1][parts - 1] + table[total - parts][parts];
        }
    }
    table[n][k]
}

/// `(ℓ^m, 1^{n - ℓm})`: `m` parts equal to `ℓ` padded with ones to weight `n`.
pub fn special_partition(ell: u32, m: u32, n: u32) -> Result<Partition> {
    if ell < 2 {
        return Err(Error::InvalidArgument(format!("large part must be at least 2, got {ell}")));
    }
    let big = ell as u64 * m as u64;
    if big > n as u64 {
        return Err(Error::InvalidArgument(format!(
            "{m} parts of size {ell} do not fit in weight {n}"
        )));
    }
    let mut parts = vec![ell; m as usize];
    parts.extend(std::iter::repeat(1).take((n as u64 - big) as usize));
    Partition::new(parts)
}
