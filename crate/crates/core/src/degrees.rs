//! Exact degree-in-q formulas for unipotent characters, and the full degree
//! polynomial for the unitary families as an independent oracle.
//!
//! The symplectic/orthogonal degree and the unitary degree come from closed
//! forms over the symbol's entries. For unitary symbols the whole character
//! degree is also available as an exact integer polynomial built from a
//! product formula over the hook β-sets `X^0`, `X^1`; the product must divide
//! exactly, and a nonzero remainder is reported as an error rather than
//! rounded away, since it can only come from inconsistent inputs.

use crate::error::{Error, Result};
use crate::symbols::{valid_unitary_defect, BetaSet, GroupFamily, GroupKind, Symbol};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely in ascending degree; the coefficient vector is empty for
/// the zero polynomial and never ends in a zero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: usize) -> Self {
        if c == 0 {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::from(c);
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^e` (zero beyond the end).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Multiplies in place by the two-term factor `q^hi + c_lo * q^lo`
    /// (`hi > lo`, `c_lo` never zero here).
    fn mul_two_term(&mut self, hi: usize, lo: usize, c_lo: i64) {
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + hi];
        let clo = BigInt::from(c_lo);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[i + hi] += c;
            out[i + lo] += c * &clo;
        }
        self.coeffs = out;
        self.normalize();
    }

    /// Divides in place by `q^h + c0` (`h >= 1`), requiring zero remainder.
    fn div_exact_two_term(&mut self, h: usize, c0: i64) -> Result<()> {
        if self.is_zero() {
            return Ok(());
        }
        let deg = self.coeffs.len() - 1;
        if deg < h {
            return Err(Error::InexactDivision { exponent: deg });
        }
        let c0 = BigInt::from(c0);
        let mut quo = vec![BigInt::zero(); deg - h + 1];
        for e in (h..=deg).rev() {
            if self.coeffs[e].is_zero() {
                continue;
            }
            let t = std::mem::replace(&mut self.coeffs[e], BigInt::zero());
            let lower = &t * &c0;
            self.coeffs[e - h] -= lower;
            quo[e - h] = t;
        }
        if let Some(bad) = self.coeffs.iter().position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision { exponent: bad });
        }
        self.coeffs = quo;
        self.normalize();
        Ok(())
    }

    /// Divides in place by `q^e`, requiring the low coefficients to vanish.
    fn div_exact_power(&mut self, e: usize) -> Result<()> {
        if e == 0 || self.is_zero() {
            return Ok(());
        }
        if self.coeffs.len() <= e {
            return Err(Error::InexactDivision { exponent: 0 });
        }
        if let Some(bad) = self.coeffs[..e].iter().position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision { exponent: bad });
        }
        self.coeffs.drain(..e);
        Ok(())
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &q + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for IntPolynomial {
    /// `{"coeffs": {"0": "1", "3": "-2"}}`; coefficients are decimal strings
    /// so arbitrary precision survives any JSON reader.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        let mut st = serializer.serialize_struct("IntPolynomial", 1)?;
        st.serialize_field("coeffs", &map)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut poly = IntPolynomial::zero();
        for (e, c) in raw.coeffs {
            let e: usize = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            if poly.coeffs.len() <= e {
                poly.coeffs.resize(e + 1, BigInt::zero());
            }
            poly.coeffs[e] = c;
        }
        poly.normalize();
        Ok(poly)
    }
}

/// The hook β-sets of a unitary symbol: `X^0` holds the doubled entries of
/// one row, `X^1` the doubled-plus-one entries of the other, with the rows
/// chosen by the parity of the defect.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HookData {
    pub x0: BetaSet,
    pub x1: BetaSet,
}

/// Degree in q of the order polynomial `|G|_{p'}`: `k(k+2)/4` for the
/// symplectic family, `k^2/4` for the even-orthogonal families, `k(k+1)/2`
/// for the unitary family.
pub fn group_order_degree(f: &GroupFamily) -> usize {
    let k = f.size();
    match f.kind() {
        GroupKind::Sp => k * (k + 2) / 4,
        GroupKind::OPlus | GroupKind::OMinus => k * k / 4,
        GroupKind::U => k * (k + 1) / 2,
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

/// Degree in q of the unipotent character attached to a symplectic or
/// even-orthogonal symbol.
///
/// With `z_1 >= ... >= z_m` the entries of both rows (multiplicities kept)
/// and `k` the group size, the degree is
/// `sum_i (m-i) z_i - z_i(z_i+1)` plus `k(k+2)/4 - (m-1)(m-3)(2m-1)/24` for
/// odd `m` and `k^2/4 - m(m-2)(2m-5)/24` for even `m`. Ties among equal
/// entries do not affect the value.
pub fn deg_sp_o(s: &Symbol, f: &GroupFamily) -> Result<i64> {
    if f.kind() == GroupKind::U {
        return Err(Error::NotInFamily {
            family: f.to_string(),
            symbol: s.to_string(),
        });
    }
    require_member(f, s)?;
    let z = s.entries_desc();
    let m = z.len() as i64;
    let k = f.size() as i64;
    let mut total: i64 = 0;
    for (i, &zi) in z.iter().enumerate() {
        let zi = zi as i64;
        let pos = i as i64 + 1;
        total += (m - pos) * zi - zi * (zi + 1);
    }
    total += if m % 2 != 0 {
        k * (k + 2) / 4 - (m - 1) * (m - 3) * (2 * m - 1) / 24
    } else {
        k * k / 4 - m * (m - 2) * (2 * m - 5) / 24
    };
    Ok(total)
}

/// The hook β-sets of a unitary-family symbol.
///
/// Even defect: `X^0 = {2b}`, `X^1 = {2a+1}`; odd defect swaps the roles of
/// the rows. `X^0` is all even and `X^1` all odd, so their union has no
/// repeated entries.
pub fn hook_data(s: &Symbol) -> HookData {
    let doubled = |row: &BetaSet| BetaSet::new(row.entries().iter().map(|&e| 2 * e).collect());
    let doubled_plus = |row: &BetaSet| BetaSet::new(row.entries().iter().map(|&e| 2 * e + 1).collect());
    if s.defect() % 2 == 0 {
        HookData {
            x0: doubled(s.bottom()),
            x1: doubled_plus(s.top()),
        }
    } else {
        HookData {
            x0: doubled(s.top()),
            x1: doubled_plus(s.bottom()),
        }
    }
}

/// Entries of `X^0 ∪ X^1`, strictly decreasing.
fn hook_entries_desc(s: &Symbol) -> Vec<usize> {
    let hooks = hook_data(s);
    let mut z: Vec<usize> = hooks
        .x0
        .entries()
        .iter()
        .chain(hooks.x1.entries())
        .copied()
        .collect();
    z.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert!(z.windows(2).all(|w| w[0] > w[1]));
    z
}

fn require_unitary(s: &Symbol, k: usize) -> Result<()> {
    if !(valid_unitary_defect(s.defect()) && s.rank_u() == k) {
        return Err(Error::NotInFamily {
            family: format!("U{k}"),
            symbol: s.to_string(),
        });
    }
    Ok(())
}

/// The exact character degree polynomial of a unitary-family symbol.
///
/// Numerator: `Δ(X^0) Δ(X^1) Ξ(X^0, X^1)` times the odd part of the group
/// order `Π_{h=1..k} (q^h - (-1)^h)`. Denominator: `Θ(X^0) Θ(X^1)` times
/// `q^(m(m-1)(m-2)/6)` with `m` the total number of hook entries. Division
/// is performed factor by factor and must be exact at every step.
pub fn unitary_degree_polynomial(s: &Symbol, k: usize) -> Result<IntPolynomial> {
    require_unitary(s, k)?;
    let hooks = hook_data(s);
    let mut poly = IntPolynomial::one();
    // Δ(A) = Π_{a > a'} (q^a - q^a')
    for set in [&hooks.x0, &hooks.x1] {
        let e = set.entries();
        for i in 0..e.len() {
            for j in (i + 1)..e.len() {
                poly.mul_two_term(e[i], e[j], -1);
            }
        }
    }
    // Ξ(A, B) = Π (q^a + q^b); X^0 and X^1 are disjoint by parity.
    for &a in hooks.x0.entries() {
        for &b in hooks.x1.entries() {
            poly.mul_two_term(a.max(b), a.min(b), 1);
        }
    }
    // |U_k(q)|_{p'} = Π_{h=1..k} (q^h - (-1)^h)
    for h in 1..=k {
        poly.mul_two_term(h, 0, if h % 2 == 0 { -1 } else { 1 });
    }
    // Θ(A) = Π_{a in A} Π_{h=1..a} (q^h - (-1)^h)
    for set in [&hooks.x0, &hooks.x1] {
        for &a in set.entries() {
            for h in 1..=a {
                poly.div_exact_two_term(h, if h % 2 == 0 { -1 } else { 1 })?;
            }
        }
    }
    let m = hooks.x0.len() + hooks.x1.len();
    poly.div_exact_power(m * (m.max(1) - 1) * (m.max(2) - 2) / 6)?;
    Ok(poly)
}

/// Closed-form degree in q of a unitary-family character.
///
/// With `z_1 > ... > z_m` the entries of `X^0 ∪ X^1`:
/// `sum (m-i) z_i - sum z_i(z_i+1)/2 + k(k+1)/2 - m(m-1)(m-2)/6`.
pub fn deg_unitary(s: &Symbol, k: usize) -> Result<i64> {
    require_unitary(s, k)?;
    let z = hook_entries_desc(s);
    let m = z.len() as i64;
    let k = k as i64;
    let mut total: i64 = 0;
    for (i, &zi) in z.iter().enumerate() {
        let zi = zi as i64;
        let pos = i as i64 + 1;
        total += (m - pos) * zi - zi * (zi + 1) / 2;
    }
    Ok(total + k * (k + 1) / 2 - m * (m - 1) * (m - 2) / 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{cuspidal, steinberg_unitary};

    fn sym(top: &[usize], bottom: &[usize]) -> Symbol {
        Symbol::new(BetaSet::new(top.to_vec()), BetaSet::new(bottom.to_vec()))
    }

    fn fam(tag: &str) -> GroupFamily {
        tag.parse().unwrap()
    }

    #[test]
    fn order_degrees() {
        assert_eq!(group_order_degree(&fam("Sp4")), 6);
        assert_eq!(group_order_degree(&fam("O+4")), 4);
        assert_eq!(group_order_degree(&fam("U3")), 6);
    }

    #[test]
    fn deg_sp_o_examples() {
        assert_eq!(deg_sp_o(&sym(&[1], &[]), &fam("Sp2")).unwrap(), 0);
        assert_eq!(deg_sp_o(&sym(&[0], &[]), &fam("Sp0")).unwrap(), 0);
        // Steinberg of Sp2 has degree 1
        assert_eq!(deg_sp_o(&sym(&[1, 0], &[1]), &fam("Sp2")).unwrap(), 1);
        assert!(deg_sp_o(&sym(&[1], &[]), &fam("Sp4")).is_err());
        assert!(deg_sp_o(&sym(&[1], &[1, 0]), &fam("U3")).is_err());
    }

    #[test]
    fn trivial_symplectic_character_has_degree_zero() {
        for k in (0..=12).step_by(2) {
            let s = sym(&[k / 2], &[]);
            assert_eq!(deg_sp_o(&s, &fam(&format!("Sp{k}"))).unwrap(), 0);
        }
    }

    #[test]
    fn hook_data_examples() {
        let h = hook_data(&sym(&[1], &[1, 0]));
        assert_eq!(h.x0, BetaSet::new(vec![2]));
        assert_eq!(h.x1, BetaSet::new(vec![3, 1]));
        let h = hook_data(&sym(&[], &[0]));
        assert_eq!(h.x0, BetaSet::empty());
        assert_eq!(h.x1, BetaSet::new(vec![1]));
        let h = hook_data(&sym(&[1, 0], &[]));
        assert_eq!(h.x0, BetaSet::empty());
        assert_eq!(h.x1, BetaSet::new(vec![3, 1]));
    }

    #[test]
    fn unitary_polynomial_examples() {
        // trivial character of U1
        let p = unitary_degree_polynomial(&sym(&[], &[0]), 1).unwrap();
        assert_eq!(p, IntPolynomial::one());
        // Steinberg of U3 is exactly q^3
        let p = unitary_degree_polynomial(&sym(&[1], &[1, 0]), 3).unwrap();
        assert_eq!(p, IntPolynomial::monomial(1, 3));
        // cuspidal member of U3 is q^2 - q
        let p = unitary_degree_polynomial(&sym(&[1, 0], &[]), 3).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(2), BigInt::from(1));
        assert_eq!(p.coeff(1), BigInt::from(-1));
        assert_eq!(p.coeff(0), BigInt::from(0));
    }

    #[test]
    fn deg_unitary_examples() {
        for k in 2..=8 {
            assert_eq!(
                deg_unitary(&steinberg_unitary(k), k).unwrap(),
                (k * (k - 1) / 2) as i64,
                "Steinberg U{k}"
            );
        }
        for d in 0..=6usize {
            let k = d * (d + 1) / 2;
            let want = ((d as i64) - 1) * (d as i64) * (d as i64 + 1) * (3 * d as i64 + 2) / 24;
            assert_eq!(deg_unitary(&cuspidal(d), k).unwrap(), want, "cuspidal d={d}");
        }
        assert_eq!(deg_unitary(&sym(&[], &[0]), 1).unwrap(), 0);
        assert!(deg_unitary(&sym(&[], &[0]), 2).is_err());
    }

    #[test]
    fn oracle_agreement_small() {
        for k in 0..=6 {
            for s in GroupFamily::new(GroupKind::U, k).unwrap().enumerate().unwrap() {
                let poly = unitary_degree_polynomial(&s, k).unwrap();
                assert_eq!(
                    poly.degree().expect("degree polynomial is nonzero") as i64,
                    deg_unitary(&s, k).unwrap(),
                    "U{k} {s}"
                );
            }
        }
    }

    #[test]
    fn evaluations_divide_group_order() {
        for k in 0..=6 {
            for s in GroupFamily::new(GroupKind::U, k).unwrap().enumerate().unwrap() {
                let poly = unitary_degree_polynomial(&s, k).unwrap();
                for q in [2i64, 3, 4, 5] {
                    let v = poly.eval(q);
                    assert!(v > BigInt::zero(), "U{k} {s} at q={q}");
                    let mut order = BigInt::from(q).pow((k * (k + 1) / 2) as u32);
                    for h in 1..=k as u32 {
                        let sign = if h % 2 == 0 { 1 } else { -1 };
                        order *= BigInt::from(q).pow(h) - sign;
                    }
                    assert!((&order % &v).is_zero(), "U{k} {s} at q={q}");
                }
            }
        }
    }

    #[test]
    fn inexact_division_is_an_error() {
        // (q^2 + 1) is not divisible by (q + 1)
        let mut p = IntPolynomial::monomial(1, 2);
        p.coeffs[0] = BigInt::one();
        assert!(matches!(
            p.clone().div_exact_two_term(1, 1),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            p.div_exact_power(1),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn polynomial_json_round_trip() {
        let p = unitary_degree_polynomial(&sym(&[1, 0], &[]), 3).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":{"1":"-1","2":"1"}}"#);
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn polynomial_display() {
        let p = unitary_degree_polynomial(&sym(&[1, 0], &[]), 3).unwrap();
        assert_eq!(p.to_string(), "q^2 - q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::one().to_string(), "1");
    }

    #[test]
    fn entries_with_ties_sort_consistently() {
        // both rows contribute a 1; the weakly decreasing merge keeps ties
        let s = sym(&[1], &[1, 0]);
        assert_eq!(s.entries_desc(), vec![1, 1, 0]);
    }
}
