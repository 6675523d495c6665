//! β-sets, symbols, the Υ bijection, and symbol families.
//!
//! A β-set is a finite strictly decreasing list of non-negative integers. A
//! symbol is an ordered pair of β-sets in which 0 does not sit in both rows
//! at once. Symbols carry two integer invariants, the defect (difference of
//! row lengths) and a rank, and parametrize the unipotent characters of the
//! classical groups: the residue of the defect mod 4 selects a symplectic or
//! even-orthogonal family, while a separate unitary rank selects the unitary
//! families.
//!
//! The Υ map subtracts a staircase from each row and lands in bi-partitions;
//! for a fixed defect it is a bijection, and [`Symbol::from_upsilon`] is the
//! inverse used everywhere for constructing symbols.

use crate::error::{Error, Result};
use crate::partitions::{enumerate_bipartitions, BiPartition, Partition, MAX_ENUMERATION};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A finite strictly decreasing list of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    /// Panics unless the entries are strictly decreasing.
    pub fn new(entries: Vec<usize>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0] > w[1]),
            "beta-set entries must be strictly decreasing: {entries:?}"
        );
        BetaSet { entries }
    }

    pub fn empty() -> Self {
        BetaSet { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.contains(&value)
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "-");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for BetaSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BetaSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<usize>::deserialize(deserializer)?;
        if !entries.windows(2).all(|w| w[0] > w[1]) {
            return Err(D::Error::custom(format!(
                "beta-set entries must be strictly decreasing: {entries:?}"
            )));
        }
        Ok(BetaSet { entries })
    }
}

/// An ordered pair of β-sets with 0 absent from at least one row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    top: BetaSet,
    bottom: BetaSet,
}

impl Symbol {
    /// Panics if 0 appears in both rows.
    pub fn new(top: BetaSet, bottom: BetaSet) -> Self {
        assert!(
            !(top.contains(0) && bottom.contains(0)),
            "0 may not appear in both rows of a symbol"
        );
        Symbol { top, bottom }
    }

    /// The symbol with two empty rows.
    pub fn empty() -> Self {
        Symbol::new(BetaSet::empty(), BetaSet::empty())
    }

    pub fn top(&self) -> &BetaSet {
        &self.top
    }

    pub fn bottom(&self) -> &BetaSet {
        &self.bottom
    }

    /// Difference of the row lengths, `m1 - m2`.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Sum of all entries minus `floor(((m1 + m2 - 1) / 2)^2)`.
    ///
    /// Equal to half the group size for symplectic and even-orthogonal
    /// family members.
    pub fn rank(&self) -> usize {
        let m = (self.top.len() + self.bottom.len()) as i64;
        let total = (self.top.sum() + self.bottom.sum()) as i64;
        let r = total - (m - 1).pow(2) / 4;
        debug_assert!(r >= 0);
        r as usize
    }

    /// The unitary rank: twice the entry sum plus `|defect|/2` minus
    /// `m(m-2)/2`, where `m` is the total number of entries.
    ///
    /// The two half-integer terms always combine to an integer; this is
    /// computed with doubled integers and asserted.
    pub fn rank_u(&self) -> usize {
        let m = (self.top.len() + self.bottom.len()) as i64;
        let total = (self.top.sum() + self.bottom.sum()) as i64;
        let doubled = 4 * total + self.defect().abs() - m * (m - 2);
        assert!(doubled % 2 == 0 && doubled >= 0, "unitary rank must be a non-negative integer");
        (doubled / 2) as usize
    }

    /// Rows swapped. Negates the defect and preserves both ranks; on
    /// even-orthogonal symbols this realizes the sgn twist.
    pub fn transpose(&self) -> Symbol {
        Symbol::new(self.bottom.clone(), self.top.clone())
    }

    /// Subtracts the staircase from each row: entry `i` (1-based) of a row of
    /// length `m` contributes the part `entry - (m - i)`.
    pub fn upsilon(&self) -> BiPartition {
        let strip = |row: &BetaSet| {
            let m = row.len();
            Partition::new(
                row.entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| e - (m - 1 - i))
                    .collect(),
            )
        };
        BiPartition::new(strip(&self.top), strip(&self.bottom))
    }

    /// The unique symbol with the given Υ image and defect.
    ///
    /// Row lengths are chosen minimally: `m1 = max(l1, l2 + d, d, 0)` and
    /// `m2 = m1 - d`, where `l1, l2` are the stored part counts. At most one
    /// row receives zero padding, so 0 never lands in both rows.
    pub fn from_upsilon(image: &BiPartition, defect: i64) -> Symbol {
        let l1 = image.top().len() as i64;
        let l2 = image.bottom().len() as i64;
        let m1 = l1.max(l2 + defect).max(defect).max(0);
        let m2 = m1 - defect;
        let row = |p: &Partition, m: i64| {
            BetaSet::new(
                (0..m as usize)
                    .map(|i| p.part(i) + (m as usize - 1 - i))
                    .collect(),
            )
        };
        Symbol::new(row(image.top(), m1), row(image.bottom(), m2))
    }

    /// `|Υ|` recomputed from rank and defect alone:
    /// `rank - (defect^2 - 1)/4` for odd defect, `rank - defect^2/4` for even.
    /// Exists as a cross-check against [`Symbol::upsilon`].
    pub fn upsilon_size_identity(&self) -> usize {
        let d = self.defect();
        let term = if d % 2 != 0 { (d * d - 1) / 4 } else { d * d / 4 };
        let v = self.rank() as i64 - term;
        debug_assert!(v >= 0);
        v as usize
    }

    /// All entries of both rows, weakly decreasing, multiplicities kept.
    pub(crate) fn entries_desc(&self) -> Vec<usize> {
        let mut z: Vec<usize> = self
            .top
            .entries()
            .iter()
            .chain(self.bottom.entries())
            .copied()
            .collect();
        z.sort_unstable_by(|a, b| b.cmp(a));
        z
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.top, self.bottom)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Parses the compact form `"[a1,a2|b1,b2]"`; an empty row is written
    /// `"-"` or left blank.
    fn from_str(s: &str) -> Result<Symbol> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("symbol must look like [a,b|c,d]: {s:?}")))?;
        let (top, bottom) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("symbol needs a | separator: {s:?}")))?;
        let parse_row = |row: &str| -> Result<Vec<usize>> {
            let row = row.trim();
            if row.is_empty() || row == "-" {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad beta-set entry {e:?}")))
                })
                .collect()
        };
        let top = parse_row(top)?;
        let bottom = parse_row(bottom)?;
        for row in [&top, &bottom] {
            if !row.windows(2).all(|w| w[0] > w[1]) {
                return Err(Error::Parse(format!(
                    "beta-set entries must be strictly decreasing: {row:?}"
                )));
            }
        }
        if top.contains(&0) && bottom.contains(&0) {
            return Err(Error::Parse("0 may not appear in both rows".into()));
        }
        Ok(Symbol::new(BetaSet::new(top), BetaSet::new(bottom)))
    }
}

/// The kind of classical group a family tag refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupKind {
    Sp,
    OPlus,
    OMinus,
    U,
}

impl GroupKind {
    pub fn is_orthogonal(self) -> bool {
        matches!(self, GroupKind::OPlus | GroupKind::OMinus)
    }

    /// Defect residue mod 4 for the symplectic/orthogonal kinds.
    pub(crate) fn defect_residue(self) -> i64 {
        match self {
            GroupKind::OPlus => 0,
            GroupKind::Sp => 1,
            GroupKind::OMinus => 2,
            GroupKind::U => unreachable!("unitary families are not selected by a defect residue"),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            GroupKind::Sp => "Sp",
            GroupKind::OPlus => "O+",
            GroupKind::OMinus => "O-",
            GroupKind::U => "U",
        };
        write!(f, "{tag}")
    }
}

/// A group family tag: a kind together with the group size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupFamily {
    kind: GroupKind,
    size: usize,
}

impl GroupFamily {
    /// Symplectic and even-orthogonal sizes must be even.
    pub fn new(kind: GroupKind, size: usize) -> Result<Self> {
        if kind != GroupKind::U && size % 2 != 0 {
            return Err(Error::OddFamilySize(format!("{kind}{size}")));
        }
        Ok(GroupFamily { kind, size })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Membership test for the family's symbol set.
    ///
    /// Symplectic/orthogonal: rank `size/2` and defect residue 0 (O+),
    /// 1 (Sp) or 2 (O-) mod 4. Unitary: unitary rank `size` and a defect
    /// that is either even and non-negative or odd and negative.
    pub fn contains(&self, s: &Symbol) -> bool {
        match self.kind {
            GroupKind::U => valid_unitary_defect(s.defect()) && s.rank_u() == self.size,
            kind => {
                s.rank() * 2 == self.size && s.defect().rem_euclid(4) == kind.defect_residue()
            }
        }
    }

    /// The complete symbol set of the family, duplicate-free, in a fixed
    /// order: defects ascending, Υ fibers in bi-partition enumeration order.
    ///
    /// Each fiber is produced through [`Symbol::from_upsilon`] on the
    /// bi-partitions of the size that rank and defect force, so no search
    /// over β-sets is needed.
    pub fn enumerate(&self) -> Result<Vec<Symbol>> {
        if self.size > MAX_ENUMERATION {
            return Err(Error::BoundExceeded {
                requested: self.size,
                max: MAX_ENUMERATION,
            });
        }
        let mut defects: Vec<(i64, usize)> = Vec::new();
        match self.kind {
            GroupKind::U => {
                // 4|Υ| = 2k - d(d+1) with d = |defect|; only fibers where
                // that is a non-negative multiple of 4 are populated.
                let k = self.size as i64;
                let mut d: i64 = 0;
                while d * (d + 1) <= 2 * k {
                    let rem = 2 * k - d * (d + 1);
                    if rem % 4 == 0 {
                        let defect = if d % 2 == 0 { d } else { -d };
                        defects.push((defect, (rem / 4) as usize));
                    }
                    d += 1;
                }
            }
            kind => {
                // |Υ| = rank - fiber_term(defect); only defects in the
                // residue class with a non-negative fiber size occur.
                let rk = (self.size / 2) as i64;
                let residue = kind.defect_residue();
                let bound = 2 * rk + 2;
                let mut d = -bound + (residue - (-bound)).rem_euclid(4);
                while d <= bound {
                    let size = rk - fiber_term(d);
                    if size >= 0 {
                        defects.push((d, size as usize));
                    }
                    d += 4;
                }
            }
        }
        defects.sort_unstable();
        let mut out = Vec::new();
        for (defect, fiber_size) in defects {
            for image in enumerate_bipartitions(fiber_size)? {
                let s = Symbol::from_upsilon(&image, defect);
                debug_assert!(self.contains(&s), "{self}: {s} from fiber {defect}");
                out.push(s);
            }
        }
        Ok(out)
    }
}

/// The Υ-size deficit forced by the defect for symplectic/orthogonal
/// symbols: `(d^2 - 1)/4` for odd `d`, `d^2/4` for even `d`.
fn fiber_term(defect: i64) -> i64 {
    if defect % 2 != 0 {
        (defect * defect - 1) / 4
    } else {
        defect * defect / 4
    }
}

/// Unitary families admit defects that are even and non-negative, or odd
/// and negative.
pub(crate) fn valid_unitary_defect(defect: i64) -> bool {
    if defect % 2 == 0 {
        defect >= 0
    } else {
        defect < 0
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.size)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    /// Parses tags like `"U6"`, `"Sp4"`, `"O+4"`, `"O-4"`.
    fn from_str(s: &str) -> Result<GroupFamily> {
        let s = s.trim();
        let (kind, rest) = if let Some(rest) = s.strip_prefix("Sp") {
            (GroupKind::Sp, rest)
        } else if let Some(rest) = s.strip_prefix("O+") {
            (GroupKind::OPlus, rest)
        } else if let Some(rest) = s.strip_prefix("O-") {
            (GroupKind::OMinus, rest)
        } else if let Some(rest) = s.strip_prefix('U') {
            (GroupKind::U, rest)
        } else {
            return Err(Error::Parse(format!("unknown family tag {s:?}")));
        };
        let size = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad family size in {s:?}")))?;
        GroupFamily::new(kind, size)
    }
}

impl Serialize for GroupFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The staircase symbol parametrizing the unipotent cuspidal character of
/// the unitary group of size `d(d+1)/2`: `[d-1,...,0|-]` for even `d` and
/// `[-|d-1,...,0]` for odd `d`. Its Υ image is empty, and its defect is `d`
/// for even `d` and `-d` for odd `d`.
pub fn cuspidal(d: usize) -> Symbol {
    let staircase = BetaSet::new((0..d).rev().collect());
    if d % 2 == 0 {
        Symbol::new(staircase, BetaSet::empty())
    } else {
        Symbol::new(BetaSet::empty(), staircase)
    }
}

/// The symbol of the Steinberg character of the unitary group of size `k`:
/// Υ image `([1,...,1],[])` with defect -1 for odd `k`, and `([],[1,...,1])`
/// with defect 0 for even `k`.
pub fn steinberg_unitary(k: usize) -> Symbol {
    assert!(k >= 1, "the Steinberg character needs k >= 1");
    let ones = Partition::new(vec![1; k / 2]);
    if k % 2 == 0 {
        Symbol::from_upsilon(&BiPartition::new(Partition::empty(), ones), 0)
    } else {
        Symbol::from_upsilon(&BiPartition::new(ones, Partition::empty()), -1)
    }
}
