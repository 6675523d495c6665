//! Exhaustive desk-scale verification suites.
//!
//! Each suite sweeps a bounded instance space exactly, records every failure
//! instead of stopping at the first, and reports the number of instances it
//! checked. The suites are deterministic: the same bounds always produce the
//! same counts.
//!
//! One check is expected to fail and is kept deliberately: the claim that
//! every symplectic symbol is k-admissible for a (Sp, O-) pair is false at
//! the trivial-character symbol `[k/2|-]`. Already at k = 0 it contradicts
//! the (correct) emptiness of the 0-admissible set for that pair shape. The
//! structural suite reports those instances so the defect stays visible.

use crate::degrees::{deg_sp_o, deg_unitary, unitary_degree_polynomial};
use crate::error::Result;
use crate::symbols::{cuspidal, GroupFamily, GroupKind, Symbol};
use crate::theta::{is_admissible, sgn_twist, tau, theta_bar, theta_rank, DualPair};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// One recorded failure: where, what was expected, what happened.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub pair: String,
    pub symbol: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite run. `elapsed` is kept out of the JSON form so that
/// identical inputs serialize to identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            instances: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, pair: impl Into<String>, symbol: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) {
        self.failures.push(Failure {
            pair: pair.into(),
            symbol: symbol.into(),
            expected: expected.into(),
            actual: actual.into(),
        });
    }

    /// Human-readable rendering, one line per failure.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<24} {:>10} instances  {:>4} failures  {:>8.2?}  [{}]",
            self.suite,
            self.instances,
            self.failures.len(),
            self.elapsed,
            status
        );
        for f in &self.failures {
            let _ = writeln!(
                out,
                "  {} {}: expected {}, got {}",
                f.pair, f.symbol, f.expected, f.actual
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Which dual-pair shape a degree-difference sweep runs over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairClass {
    /// (Sp_k, O±_n)
    SpO,
    /// (O±_k, Sp_n)
    OSp,
    /// (U_k, U_n)
    UU,
}

/// Which family a Θ-rank characterization sweep targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TargetClass {
    Sp,
    Orthogonal,
    U,
}

fn family(kind: GroupKind, size: usize) -> GroupFamily {
    GroupFamily::new(kind, size).expect("sizes are kept even where required")
}

fn sp_o_pairs(class: PairClass) -> Vec<(GroupKind, GroupKind)> {
    match class {
        PairClass::SpO => vec![
            (GroupKind::Sp, GroupKind::OPlus),
            (GroupKind::Sp, GroupKind::OMinus),
        ],
        PairClass::OSp => vec![
            (GroupKind::OPlus, GroupKind::Sp),
            (GroupKind::OMinus, GroupKind::Sp),
        ],
        PairClass::UU => vec![],
    }
}

/// Checks the degree-difference law on every (n-k)-admissible symbol:
/// `deg θ̄(s) - deg s` equals `k(n-k)` for unitary pairs, `k(n-k+1)/2` for
/// orthogonal-first pairs and `k(n-k-1)/2` for symplectic-first pairs.
pub fn verify_degree_difference(class: PairClass, n_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(match class {
        PairClass::SpO => "degree-diff Sp:O",
        PairClass::OSp => "degree-diff O:Sp",
        PairClass::UU => "degree-diff U:U",
    });
    if class == PairClass::UU {
        for n in 0..=n_max {
            for k in 0..=n {
                let pair = DualPair::new(family(GroupKind::U, k), family(GroupKind::U, n))?;
                for s in pair.first().enumerate()? {
                    if !is_admissible(&pair, &s, n - k)? {
                        continue;
                    }
                    report.instances += 1;
                    let want = (k * (n - k)) as i64;
                    match theta_bar(&pair, &s) {
                        Ok(image) => {
                            let got = deg_unitary(&image, n)? - deg_unitary(&s, k)?;
                            if got != want {
                                report.fail(pair.to_string(), s.to_string(), want.to_string(), got.to_string());
                            }
                        }
                        Err(e) => report.fail(pair.to_string(), s.to_string(), want.to_string(), e.to_string()),
                    }
                }
            }
        }
    } else {
        for n in (0..=n_max).step_by(2) {
            for k in (0..=n).step_by(2) {
                for (src, dst) in sp_o_pairs(class) {
                    let first = family(src, k);
                    let second = family(dst, n);
                    let pair = DualPair::new(first, second)?;
                    let want = match class {
                        PairClass::OSp => (k * (n - k + 1) / 2) as i64,
                        PairClass::SpO => (k as i64) * (n as i64 - k as i64 - 1) / 2,
                        PairClass::UU => unreachable!(),
                    };
                    for s in first.enumerate()? {
                        if !is_admissible(&pair, &s, n - k)? {
                            continue;
                        }
                        report.instances += 1;
                        match theta_bar(&pair, &s) {
                            Ok(image) => {
                                let got = deg_sp_o(&image, &second)? - deg_sp_o(&s, &first)?;
                                if got != want {
                                    report.fail(pair.to_string(), s.to_string(), want.to_string(), got.to_string());
                                }
                            }
                            Err(e) => report.fail(pair.to_string(), s.to_string(), want.to_string(), e.to_string()),
                        }
                    }
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn image_set(
    src_kinds: &[GroupKind],
    k: usize,
    target: &GroupFamily,
    sgn_closure: bool,
) -> Result<BTreeSet<String>> {
    let n = target.size();
    let mut images = BTreeSet::new();
    for &kind in src_kinds {
        let source = family(kind, k);
        let pair = DualPair::new(source, *target)?;
        for l in source.enumerate()? {
            if !is_admissible(&pair, &l, n - k)? {
                continue;
            }
            let image = theta_bar(&pair, &l)?;
            if sgn_closure {
                images.insert(sgn_twist(&image)?.to_string());
            }
            images.insert(image.to_string());
        }
    }
    Ok(images)
}

fn check_rank_sets(
    report: &mut VerificationReport,
    target: &GroupFamily,
    src_kinds: &[GroupKind],
    step: usize,
    sgn_closure: bool,
) -> Result<()> {
    let n = target.size();
    let symbols = target.enumerate()?;
    for k in (0..=n).step_by(step) {
        report.instances += 1;
        let expected = image_set(src_kinds, k, target, sgn_closure)?;
        let mut actual = BTreeSet::new();
        for s in &symbols {
            match theta_rank(target, s) {
                Some(rank) if rank == k => {
                    actual.insert(s.to_string());
                }
                Some(_) => {}
                None => report.fail(
                    format!("rank in {target}"),
                    s.to_string(),
                    "some rank <= n".to_string(),
                    "no unipotent partner".to_string(),
                ),
            }
        }
        for s in expected.difference(&actual) {
            report.fail(
                format!("rank {k} in {target}"),
                s.clone(),
                "theta-rank equal to the image's source size",
                "symbol is an admissible image but has a different rank",
            );
        }
        for s in actual.difference(&expected) {
            report.fail(
                format!("rank {k} in {target}"),
                s.clone(),
                "membership in the admissible image set",
                "symbol has this theta-rank but is not an image",
            );
        }
    }
    Ok(())
}

/// Checks that for each k the set of symbols of unipotent Θ-rank k in the
/// target family is exactly the set of θ̄ images of (n-k)-admissible
/// symbols, with sgn closure for orthogonal targets.
pub fn verify_theta_rank_characterization(
    class: TargetClass,
    n_max: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(match class {
        TargetClass::Sp => "theta-rank Sp targets",
        TargetClass::Orthogonal => "theta-rank O targets",
        TargetClass::U => "theta-rank U targets",
    });
    match class {
        TargetClass::U => {
            for n in 0..=n_max {
                let target = family(GroupKind::U, n);
                check_rank_sets(&mut report, &target, &[GroupKind::U], 1, false)?;
            }
        }
        TargetClass::Sp => {
            for n in (0..=n_max).step_by(2) {
                let target = family(GroupKind::Sp, n);
                check_rank_sets(
                    &mut report,
                    &target,
                    &[GroupKind::OPlus, GroupKind::OMinus],
                    2,
                    false,
                )?;
            }
        }
        TargetClass::Orthogonal => {
            for n in (0..=n_max).step_by(2) {
                for kind in [GroupKind::OPlus, GroupKind::OMinus] {
                    let target = family(kind, n);
                    check_rank_sets(&mut report, &target, &[GroupKind::Sp], 2, true)?;
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The invariant battery: the Υ round trip and size identities over every
/// family, the k-admissibility claims, admissibility forcing τ ≥ 0, and the
/// cuspidal admissibility parity rule.
pub fn verify_structural_lemmas(n_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("structural");

    // Υ round trip and the size identity, all families.
    let mut all_families: Vec<GroupFamily> = Vec::new();
    for k in 0..=n_max {
        all_families.push(family(GroupKind::U, k));
        if k % 2 == 0 {
            for kind in [GroupKind::Sp, GroupKind::OPlus, GroupKind::OMinus] {
                all_families.push(family(kind, k));
            }
        }
    }
    for f in &all_families {
        for s in f.enumerate()? {
            report.instances += 1;
            let round = Symbol::from_upsilon(&s.upsilon(), s.defect());
            if round != s {
                report.fail(f.to_string(), s.to_string(), s.to_string(), round.to_string());
            }
            let direct = s.upsilon().size();
            let derived = s.upsilon_size_identity();
            if direct != derived {
                report.fail(
                    format!("{f} size identity"),
                    s.to_string(),
                    derived.to_string(),
                    direct.to_string(),
                );
            }
            if f.kind() == GroupKind::U {
                let d = s.defect().unsigned_abs() as usize;
                let forced = 2 * f.size() as i64 - (d * (d + 1)) as i64;
                if 4 * direct as i64 != forced {
                    report.fail(
                        format!("{f} unitary size"),
                        s.to_string(),
                        format!("4|Y| = {forced}"),
                        format!("4|Y| = {}", 4 * direct),
                    );
                }
            }
        }
    }

    // Every unitary symbol is k-admissible.
    for k in 0..=n_max {
        let f = family(GroupKind::U, k);
        let pair = DualPair::new(f, f)?;
        for s in f.enumerate()? {
            report.instances += 1;
            if !is_admissible(&pair, &s, k)? {
                report.fail(
                    format!("k-admissibility U{k}"),
                    s.to_string(),
                    "admissible",
                    "not admissible",
                );
            }
        }
    }

    // Every symplectic/orthogonal symbol is k-admissible for its pairs.
    // The (Sp, O-) shape genuinely fails at the trivial-character symbol;
    // the failures are reported, not suppressed.
    for k in (0..=n_max).step_by(2) {
        for (src, dst) in [
            (GroupKind::Sp, GroupKind::OPlus),
            (GroupKind::Sp, GroupKind::OMinus),
            (GroupKind::OPlus, GroupKind::Sp),
            (GroupKind::OMinus, GroupKind::Sp),
        ] {
            let pair = DualPair::new(family(src, k), family(dst, k))?;
            for s in pair.first().enumerate()? {
                report.instances += 1;
                if !is_admissible(&pair, &s, k)? {
                    report.fail(
                        format!("k-admissibility {pair}"),
                        s.to_string(),
                        "admissible",
                        "not admissible",
                    );
                }
            }
        }
    }

    // (n-k)-admissibility forces τ ≥ 0.
    for n in 0..=n_max {
        for k in 0..=n {
            let pair = DualPair::new(family(GroupKind::U, k), family(GroupKind::U, n))?;
            for s in pair.first().enumerate()? {
                report.instances += 1;
                if is_admissible(&pair, &s, n - k)? && tau(&pair, &s) < 0 {
                    report.fail(
                        format!("tau sign {pair}"),
                        s.to_string(),
                        "tau >= 0",
                        tau(&pair, &s).to_string(),
                    );
                }
            }
            if n % 2 == 0 && k % 2 == 0 {
                for (src, dst) in [
                    (GroupKind::Sp, GroupKind::OPlus),
                    (GroupKind::Sp, GroupKind::OMinus),
                    (GroupKind::OPlus, GroupKind::Sp),
                    (GroupKind::OMinus, GroupKind::Sp),
                ] {
                    let pair = DualPair::new(family(src, k), family(dst, n))?;
                    for s in pair.first().enumerate()? {
                        report.instances += 1;
                        if is_admissible(&pair, &s, n - k)? && tau(&pair, &s) < 0 {
                            report.fail(
                                format!("tau sign {pair}"),
                                s.to_string(),
                                "tau >= 0",
                                tau(&pair, &s).to_string(),
                            );
                        }
                    }
                }
            }
        }
    }

    // Cuspidal admissibility parity rule.
    for d in 0..=6usize {
        let k = d * (d + 1) / 2;
        let f = family(GroupKind::U, k);
        let pair = DualPair::new(f, f)?;
        for ell in 0..=(d + 5) {
            report.instances += 1;
            let want = if (ell as i64 - d as i64) % 2 == 0 {
                ell >= d
            } else {
                ell >= d + 1
            };
            let got = is_admissible(&pair, &cuspidal(d), ell)?;
            if got != want {
                report.fail(
                    format!("cuspidal admissibility d={d}"),
                    cuspidal(d).to_string(),
                    format!("{want} at ell={ell}"),
                    got.to_string(),
                );
            }
        }
    }

    report.elapsed = start.elapsed();
    Ok(report)
}

/// Cross-checks the closed-form unitary degree against the exact degree
/// polynomial, and evaluates the polynomial at q = 2, 3.
pub fn verify_degree_oracle(k_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("degree-oracle");
    for k in 0..=k_max {
        let f = family(GroupKind::U, k);
        for s in f.enumerate()? {
            report.instances += 1;
            let closed = deg_unitary(&s, k)?;
            match unitary_degree_polynomial(&s, k) {
                Ok(poly) => {
                    let got = poly.degree().map(|d| d as i64).unwrap_or(-1);
                    if got != closed {
                        report.fail(f.to_string(), s.to_string(), closed.to_string(), got.to_string());
                    }
                    for q in [2i64, 3] {
                        let v = poly.eval(q);
                        if v <= BigInt::zero() {
                            report.fail(
                                format!("{f} at q={q}"),
                                s.to_string(),
                                "positive value",
                                v.to_string(),
                            );
                        }
                    }
                }
                Err(e) => report.fail(f.to_string(), s.to_string(), "exact division", e.to_string()),
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The five telescoping integer identities behind the degree-difference
/// bookkeeping, checked on the full (k, n, l) grid with the parities each
/// shape requires.
pub fn verify_lusztig_identities(k_max: usize, n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("lusztig-identities");
    for n in 0..=n_max as i64 {
        for k in 0..=n.min(k_max as i64) {
            for l in 0..=k {
                let mut checks: Vec<(&str, i64, i64)> = Vec::new();
                if k % 2 == 0 && n % 2 == 0 {
                    checks.push((
                        "orthogonal-first even",
                        2 * (k - 2 * l) * (n - k + 1) + n * (n + 2) - k * k
                            - (n - 2 * l) * (n - 2 * l + 2)
                            + (k - 2 * l) * (k - 2 * l),
                        2 * k * (n - k + 1),
                    ));
                    checks.push((
                        "symplectic-first even",
                        2 * (k - 2 * l) * (n - k - 1) + n * n - k * (k + 2)
                            - (n - 2 * l) * (n - 2 * l)
                            + (k - 2 * l) * (k - 2 * l + 2),
                        2 * k * (n - k - 1),
                    ));
                }
                if k % 2 == 1 && n % 2 == 0 {
                    checks.push((
                        "orthogonal-first odd source",
                        2 * (k - 2 * l - 1) * (n - k) + n * (n + 2) - (k - 1) * (k + 1)
                            - (n - 2 * l) * (n - 2 * l)
                            + (k - 1 - 2 * l) * (k + 1 - 2 * l),
                        2 * k * (n - k + 1),
                    ));
                }
                if k % 2 == 0 && n % 2 == 1 {
                    checks.push((
                        "symplectic-first odd target",
                        2 * (k - 2 * l) * (n - k) + (n - 1) * (n + 1) - k * (k + 2)
                            - (n - 1 - 2 * l) * (n + 1 - 2 * l)
                            + (k - 2 * l) * (k - 2 * l),
                        2 * k * (n - k - 1),
                    ));
                }
                checks.push((
                    "unitary",
                    2 * (k - l) * (n - k) + n * (n + 1) - k * (k + 1)
                        - (n - l) * (n - l + 1)
                        + (k - l) * (k - l + 1),
                    2 * k * (n - k),
                ));
                for (name, lhs, rhs) in checks {
                    report.instances += 1;
                    if lhs != rhs {
                        report.fail(
                            name,
                            format!("(k,n,l)=({k},{n},{l})"),
                            rhs.to_string(),
                            lhs.to_string(),
                        );
                    }
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Runs every suite at the given bound and returns the reports in a fixed
/// order.
pub fn run_all(n_max: usize) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        verify_degree_difference(PairClass::UU, n_max)?,
        verify_degree_difference(PairClass::SpO, n_max)?,
        verify_degree_difference(PairClass::OSp, n_max)?,
        verify_theta_rank_characterization(TargetClass::U, n_max)?,
        verify_theta_rank_characterization(TargetClass::Sp, n_max)?,
        verify_theta_rank_characterization(TargetClass::Orthogonal, n_max)?,
        verify_structural_lemmas(n_max)?,
        verify_degree_oracle(n_max)?,
        verify_lusztig_identities(n_max, n_max),
    ])
}
