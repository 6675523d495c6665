//! Partitions, bi-partitions, interlacing, and enumeration primitives.
//!
//! A partition is a weakly decreasing list of positive integers; trailing
//! zeros are never stored, so every partition has exactly one representation.
//! A bi-partition is an ordered pair of partitions. The interlacing relation
//! `mu ⪯ nu` compares two partitions entrywise with alternating inequalities
//! and is the backbone of the correspondence relations in [`crate::theta`].

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Hard ceiling for all enumeration entry points in this crate.
pub const MAX_ENUMERATION: usize = 64;

/// A partition: weakly decreasing positive parts, canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Creates a partition from a weakly decreasing list of parts.
    /// Zero parts are dropped. Panics if the list increases anywhere.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        let parts = parts.into_iter().filter(|&p| p > 0).collect();
        Partition { parts }
    }

    /// The zero partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, with parts beyond the end read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The largest part (0 for the zero partition).
    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// Multiset-inserts `part`, keeping the weakly decreasing order.
    /// Inserting 0 returns the partition unchanged.
    pub fn insert(&self, part: usize) -> Partition {
        if part == 0 {
            return self.clone();
        }
        let pos = self.parts.partition_point(|&p| p >= part);
        let mut parts = self.parts.clone();
        parts.insert(pos, part);
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(D::Error::custom(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition::new(parts))
    }
}

/// The interlacing relation `mu ⪯ nu`: after padding both with zeros,
/// `nu_1 >= mu_1 >= nu_2 >= mu_2 >= ...`.
///
/// Both partitions are padded to one slot past the longer one so the final
/// comparison is well-defined in every case.
pub fn interlaces(mu: &Partition, nu: &Partition) -> bool {
    let k = mu.len().max(nu.len()) + 1;
    (0..k).all(|i| nu.part(i) >= mu.part(i) && mu.part(i) >= nu.part(i + 1))
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiPartition {
    top: Partition,
    bottom: Partition,
}

impl BiPartition {
    pub fn new(top: Partition, bottom: Partition) -> Self {
        BiPartition { top, bottom }
    }

    pub fn empty() -> Self {
        BiPartition::new(Partition::empty(), Partition::empty())
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn bottom(&self) -> &Partition {
        &self.bottom
    }

    /// `|top| + |bottom|`.
    pub fn size(&self) -> usize {
        self.top.size() + self.bottom.size()
    }

    /// Swaps the two rows. An involution.
    pub fn transpose(&self) -> BiPartition {
        BiPartition::new(self.bottom.clone(), self.top.clone())
    }

    /// Multiset-inserts the given values into the respective rows.
    /// Inserting 0 (or `None`) leaves a row unchanged.
    pub fn union(&self, extra_top: Option<usize>, extra_bottom: Option<usize>) -> BiPartition {
        let top = match extra_top {
            Some(v) => self.top.insert(v),
            None => self.top.clone(),
        };
        let bottom = match extra_bottom {
            Some(v) => self.bottom.insert(v),
            None => self.bottom.clone(),
        };
        BiPartition::new(top, bottom)
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.bottom)
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION {
        return Err(Error::BoundExceeded {
            requested: n,
            max: MAX_ENUMERATION,
        });
    }
    Ok(())
}

/// All partitions of `n` in reverse-lexicographic order: `[n]` first,
/// `[1,1,...,1]` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    check_bound(n)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    Ok(out)
}

fn descend(n: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for first in (1..=n.min(max_part)).rev() {
        stack.push(first);
        descend(n - first, first, stack, out);
        stack.pop();
    }
}

/// All ordered pairs `(mu, nu)` with `|mu| + |nu| = n`, top size descending.
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<BiPartition>> {
    check_bound(n)?;
    let mut out = Vec::new();
    for j in (0..=n).rev() {
        for top in enumerate_partitions(j)? {
            for bottom in enumerate_partitions(n - j)? {
                out.push(BiPartition::new(top.clone(), bottom));
            }
        }
    }
    Ok(out)
}
