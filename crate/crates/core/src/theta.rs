//! Correspondence relations between symbol families: the relation B, the
//! one-to-one map θ̄, the insertion size τ, ℓ-admissibility, and unipotent
//! Θ-rank.
//!
//! Three kinds of dual pair are supported: a symplectic group against an
//! even-orthogonal group (either order) and two unitary groups. The relation
//! B pairs symbols by interlacing their Υ images and fixing the image defect
//! as a function of the source defect; it is defined here with the
//! symplectic member first, and the orthogonal-first relation is its
//! symmetric closure, so B is symmetric under pair reversal by construction.
//!
//! θ̄ transposes the Υ image, inserts τ into one row (the top row for a `+`
//! orthogonal member or an even size sum, the bottom row otherwise), and
//! rebuilds a symbol at the forced defect. It is defined only when τ ≥ 0.
//!
//! Θ-rank is computed over unipotent partners only, with the sgn twist
//! (row transposition) admitted for orthogonal targets; linear-character
//! twists beyond sgn leave the unipotent series and cannot lower the rank,
//! so this is the natural notion of Θ-rank inside these families. Odd
//! orthogonal sizes never pair with a unipotent symplectic character and
//! are skipped.

use crate::error::{Error, Result};
use crate::partitions::interlaces;
use crate::symbols::{GroupFamily, GroupKind, Symbol};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// An ordered pair of group families forming a reductive dual pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DualPair {
    first: GroupFamily,
    second: GroupFamily,
}

impl DualPair {
    /// Allowed combinations: (Sp, O±), (O±, Sp), (U, U).
    pub fn new(first: GroupFamily, second: GroupFamily) -> Result<Self> {
        let ok = matches!(
            (first.kind(), second.kind()),
            (GroupKind::Sp, GroupKind::OPlus | GroupKind::OMinus)
                | (GroupKind::OPlus | GroupKind::OMinus, GroupKind::Sp)
                | (GroupKind::U, GroupKind::U)
        );
        if !ok {
            return Err(Error::InvalidPair(format!("({first},{second})")));
        }
        Ok(DualPair { first, second })
    }

    pub fn first(&self) -> GroupFamily {
        self.first
    }

    pub fn second(&self) -> GroupFamily {
        self.second
    }

    /// The pair with the two members swapped.
    pub fn reversed(&self) -> DualPair {
        DualPair {
            first: self.second,
            second: self.first,
        }
    }

    fn is_unitary(&self) -> bool {
        self.first.kind() == GroupKind::U
    }

    /// The sign of the orthogonal member, for symplectic/orthogonal pairs.
    fn orthogonal_sign(&self) -> GroupKind {
        if self.first.kind() == GroupKind::Sp {
            self.second.kind()
        } else {
            self.first.kind()
        }
    }

    /// Whether θ̄ inserts τ into the top row of the transposed Υ image:
    /// true for a `+` orthogonal member, or an even size sum for unitary
    /// pairs.
    fn inserts_into_top(&self) -> bool {
        if self.is_unitary() {
            (self.first.size() + self.second.size()) % 2 == 0
        } else {
            self.orthogonal_sign() == GroupKind::OPlus
        }
    }
}

impl fmt::Display for DualPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.first, self.second)
    }
}

impl FromStr for DualPair {
    type Err = Error;

    /// Parses tags like `"U3:U6"` or `"Sp2:O-4"`.
    fn from_str(s: &str) -> Result<DualPair> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pair must look like U3:U6, got {s:?}")))?;
        DualPair::new(a.parse()?, b.parse()?)
    }
}

/// A pair of symbols related by B for a given dual pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThetaPair {
    pub pair: DualPair,
    pub lhs: Symbol,
    pub rhs: Symbol,
}

impl ThetaPair {
    /// Validates the relation on construction.
    pub fn new(pair: DualPair, lhs: Symbol, rhs: Symbol) -> Result<Self> {
        if !in_b_relation(&pair, &lhs, &rhs)? {
            return Err(Error::Internal(format!(
                "({lhs},{rhs}) is not in the B relation of {pair}"
            )));
        }
        Ok(ThetaPair { pair, lhs, rhs })
    }
}

fn require_member(f: &GroupFamily, s: &Symbol) -> Result<()> {
    if !f.contains(s) {
        return Err(Error::NotInFamily {
            family: f.to_string(),
            symbol: s.to_string(),
        });
    }
    Ok(())
}

/// The defect the B relation forces on the partner of a symbol with defect
/// `d` in `pair.first`.
fn partner_defect(pair: &DualPair, d: i64) -> i64 {
    match (pair.first.kind(), pair.second.kind()) {
        (GroupKind::U, GroupKind::U) => {
            if (pair.first.size() + pair.second.size()) % 2 == 0 {
                if d == 0 {
                    0
                } else {
                    -d + 1
                }
            } else {
                -d - 1
            }
        }
        (GroupKind::Sp, GroupKind::OPlus) => -d + 1,
        (GroupKind::Sp, GroupKind::OMinus) => -d - 1,
        // orthogonal first: invert the symplectic-first rule
        (GroupKind::OPlus, GroupKind::Sp) => 1 - d,
        (GroupKind::OMinus, GroupKind::Sp) => -d - 1,
        _ => unreachable!("DualPair::new rejects other combinations"),
    }
}

/// Membership-checked B relation. For symplectic-first and unitary pairs
/// this is the defining relation; for orthogonal-first pairs it is the
/// symmetric closure, i.e. the relation of the reversed pair with the
/// arguments swapped.
pub fn in_b_relation(pair: &DualPair, l: &Symbol, r: &Symbol) -> Result<bool> {
    require_member(&pair.first, l)?;
    require_member(&pair.second, r)?;
    Ok(b_rel_unchecked(pair, l, r))
}

fn b_rel_unchecked(pair: &DualPair, l: &Symbol, r: &Symbol) -> bool {
    if pair.first.kind().is_orthogonal() {
        return b_rel_unchecked(&pair.reversed(), r, l);
    }
    if r.defect() != partner_defect(pair, l.defect()) {
        return false;
    }
    let lu = l.upsilon();
    let ru = r.upsilon();
    let (mu, nu) = (lu.top(), lu.bottom());
    let (mu_p, nu_p) = (ru.top(), ru.bottom());
    let plus_shape = if pair.is_unitary() {
        (pair.first.size() + pair.second.size()) % 2 == 0
    } else {
        pair.second.kind() == GroupKind::OPlus
    };
    if plus_shape {
        interlaces(nu, mu_p) && interlaces(nu_p, mu)
    } else {
        interlaces(mu, nu_p) && interlaces(mu_p, nu)
    }
}

/// All symbols of the second family related to `l`, in family enumeration
/// order.
pub fn theta_partners(pair: &DualPair, l: &Symbol) -> Result<Vec<Symbol>> {
    require_member(&pair.first, l)?;
    Ok(pair
        .second
        .enumerate()?
        .into_iter()
        .filter(|r| b_rel_unchecked(pair, l, r))
        .collect())
}

/// The d parameter of a symplectic/orthogonal symbol: the integer with
/// defect 4d (O+), 4d+1 (Sp) or 4d+2 (O-). May be negative.
fn sp_o_defect_parameter(kind: GroupKind, defect: i64) -> i64 {
    let residue = kind.defect_residue();
    assert_eq!(
        defect.rem_euclid(4),
        residue,
        "defect {defect} is not in the {kind} residue class"
    );
    (defect - residue).div_euclid(4)
}

/// The insertion size for θ̄.
///
/// Unitary pairs: `(n-k+d)/2` when `k+n+d` is even and `(n-k-d-1)/2` when
/// odd, with `d = |defect|`. Symplectic/orthogonal pairs: `(n-k)/2 + 2d`
/// when the orthogonal member is `+` and `(n-k)/2 - (2d+1)` when `-`, with
/// d as in [`sp_o_defect_parameter`]. May be negative.
///
/// Panics if `s` is not a member of the first family.
pub fn tau(pair: &DualPair, s: &Symbol) -> i64 {
    assert!(
        pair.first.contains(s),
        "tau: {s} is not a member of {}",
        pair.first
    );
    let k = pair.first.size() as i64;
    let n = pair.second.size() as i64;
    if pair.is_unitary() {
        let d = s.defect().abs();
        if (k + n + d) % 2 == 0 {
            (n - k + d) / 2
        } else {
            (n - k - d - 1) / 2
        }
    } else {
        let d = sp_o_defect_parameter(pair.first.kind(), s.defect());
        if pair.orthogonal_sign() == GroupKind::OPlus {
            (n - k) / 2 + 2 * d
        } else {
            (n - k) / 2 - (2 * d + 1)
        }
    }
}

/// The distinguished partner of `s`: transpose the Υ image, insert τ into
/// the appropriate row, and rebuild at the forced defect.
///
/// Errors with [`Error::UndefinedThetaBar`] when τ < 0. The result is
/// validated to land in the second family and in the B relation.
pub fn theta_bar(pair: &DualPair, s: &Symbol) -> Result<Symbol> {
    require_member(&pair.first, s)?;
    let t = tau(pair, s);
    if t < 0 {
        return Err(Error::UndefinedThetaBar { tau: t });
    }
    let image = s.upsilon().transpose();
    let image = if pair.inserts_into_top() {
        image.union(Some(t as usize), None)
    } else {
        image.union(None, Some(t as usize))
    };
    let result = Symbol::from_upsilon(&image, partner_defect(pair, s.defect()));
    if !pair.second.contains(&result) {
        return Err(Error::Internal(format!(
            "theta-bar image {result} of {s} fell outside {}",
            pair.second
        )));
    }
    if !b_rel_unchecked(pair, s, &result) {
        return Err(Error::Internal(format!(
            "theta-bar image {result} of {s} is not a B partner for {pair}"
        )));
    }
    Ok(result)
}

/// The ℓ-admissibility test: bounds on the largest parts `mu_1`, `nu_1` of
/// the Υ image, split by the parities of ℓ and the defect parameter.
///
/// Symplectic/orthogonal pairs require even ℓ. All comparisons are done on
/// doubled integers so no fractional bound is ever rounded.
pub fn is_admissible(pair: &DualPair, s: &Symbol, ell: usize) -> Result<bool> {
    require_member(&pair.first, s)?;
    let image = s.upsilon();
    let mu1 = 2 * image.top().largest() as i64;
    let nu1 = 2 * image.bottom().largest() as i64;
    let ell = ell as i64;
    if pair.is_unitary() {
        let d = s.defect().abs();
        return Ok(match (ell % 2 == 0, d % 2 == 0) {
            (true, true) => mu1 <= ell - d && nu1 <= ell + d,
            (true, false) => mu1 <= ell + d + 1 && nu1 <= ell - d - 1,
            (false, true) => mu1 <= ell - d - 1 && nu1 <= ell + d + 1,
            (false, false) => mu1 <= ell + d && nu1 <= ell - d,
        });
    }
    if ell % 2 != 0 {
        return Err(Error::OddAdmissibilityBound { ell: ell as usize });
    }
    let d = sp_o_defect_parameter(pair.first.kind(), s.defect());
    Ok(
        match (pair.first.kind(), pair.second.kind()) {
            (GroupKind::Sp, GroupKind::OPlus) => mu1 <= ell - 4 * d && nu1 <= ell + 4 * d,
            (GroupKind::Sp, GroupKind::OMinus) => {
                mu1 <= ell - 4 * d - 2 && nu1 <= ell + 4 * d + 2
            }
            (GroupKind::OPlus, GroupKind::Sp) => mu1 <= ell - 4 * d + 2 && nu1 <= ell + 4 * d,
            (GroupKind::OMinus, GroupKind::Sp) => {
                mu1 <= ell - 4 * d - 2 && nu1 <= ell + 4 * d + 4
            }
            _ => unreachable!(),
        },
    )
}

/// The sgn twist on even-orthogonal symbols: row transposition. Negates the
/// defect, so each O+ and O- family is stable under it.
pub fn sgn_twist(s: &Symbol) -> Result<Symbol> {
    let residue = s.defect().rem_euclid(4);
    if residue != 0 && residue != 2 {
        return Err(Error::NotOrthogonal { defect: s.defect() });
    }
    Ok(s.transpose())
}

/// Unipotent Θ-rank: the smallest companion size k whose family contains a
/// B partner of `s`.
///
/// Symplectic targets scan even-orthogonal sources of both signs over even
/// k; orthogonal targets scan symplectic sources over even k, admitting the
/// sgn twist of `s`; unitary targets scan every k. Returns `None` if no
/// partner exists up to the target's own size, which the verification
/// suites show never happens on these families.
///
/// Panics if `s` is not a member of `target`.
pub fn theta_rank(target: &GroupFamily, s: &Symbol) -> Option<usize> {
    assert!(
        target.contains(s),
        "theta_rank: {s} is not a member of {target}"
    );
    let n = target.size();
    match target.kind() {
        GroupKind::U => (0..=n).find(|&k| {
            let source = GroupFamily::new(GroupKind::U, k).expect("unitary sizes are unrestricted");
            let pair = DualPair::new(source, *target).expect("(U,U) is a valid pair");
            source
                .enumerate()
                .expect("size bounded by the target size")
                .iter()
                .any(|l| b_rel_unchecked(&pair, l, s))
        }),
        GroupKind::Sp => (0..=n).step_by(2).find(|&k| {
            [GroupKind::OPlus, GroupKind::OMinus].iter().any(|&kind| {
                let source = GroupFamily::new(kind, k).expect("k is even");
                let pair = DualPair::new(source, *target).expect("(O,Sp) is a valid pair");
                source
                    .enumerate()
                    .expect("size bounded by the target size")
                    .iter()
                    .any(|l| b_rel_unchecked(&pair, l, s))
            })
        }),
        GroupKind::OPlus | GroupKind::OMinus => {
            let twisted = sgn_twist(s).expect("target is orthogonal");
            (0..=n).step_by(2).find(|&k| {
                let source = GroupFamily::new(GroupKind::Sp, k).expect("k is even");
                let pair = DualPair::new(source, *target).expect("(Sp,O) is a valid pair");
                source
                    .enumerate()
                    .expect("size bounded by the target size")
                    .iter()
                    .any(|l| b_rel_unchecked(&pair, l, s) || b_rel_unchecked(&pair, l, &twisted))
            })
        }
    }
}
