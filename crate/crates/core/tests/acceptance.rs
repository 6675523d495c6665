//! Acceptance suite: one test per headline claim, each printed as a single
//! pass/fail line (run with `--nocapture` to see them). Bounds and runtime
//! ceilings are pinned here.
//!
//! Criterion 8 is expected to fail on one labelled sub-check: the claim
//! that every symplectic symbol is k-admissible for a (Sp, O-) pair is
//! false at the trivial-character symbol `[k/2|-]` for every even k. The
//! same source also (correctly) derives that no symbol at all is
//! 0-admissible for that pair shape, which contradicts the claim at k = 0,
//! so the two cannot both hold. Criterion 7 verifies the derivation that is
//! true; criterion 8 reports the claim that is not.

use lusztig_theta::degrees::deg_unitary;
use lusztig_theta::symbols::{cuspidal, steinberg_unitary, GroupFamily, GroupKind, Symbol};
use lusztig_theta::theta::{is_admissible, theta_bar, DualPair};
use lusztig_theta::verify::{
    verify_degree_difference, verify_degree_oracle, verify_lusztig_identities,
    verify_structural_lemmas, verify_theta_rank_characterization, PairClass, TargetClass,
};
use lusztig_theta::{BiPartition, Partition};
use std::time::{Duration, Instant};

/// p(n) by the pentagonal-number recurrence, independent of everything in
/// the library.
fn pentagonal_count(n: usize) -> u64 {
    let mut table = vec![0i64; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * table[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                total += sign * table[i - g2];
            }
            k += 1;
        }
        table[i] = total;
    }
    table[n] as u64
}

fn verdict(n: u32, name: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n:2} ({name}): {status} {detail}");
}

fn unitary(k: usize) -> GroupFamily {
    GroupFamily::new(GroupKind::U, k).unwrap()
}

#[test]
fn criterion_01_partition_count_identity() {
    let start = Instant::now();
    assert_eq!(pentagonal_count(10), 42);
    assert_eq!(pentagonal_count(20), 627);
    let mut ok = true;
    for k in 0..=20 {
        let count = unitary(k).enumerate().unwrap().len() as u64;
        if count != pentagonal_count(k) {
            ok = false;
            eprintln!("|S_U{k}| = {count}, want p({k}) = {}", pentagonal_count(k));
        }
    }
    let elapsed = start.elapsed();
    verdict(1, "unitary family sizes are partition numbers", ok, &format!("({elapsed:.2?})"));
    assert!(ok);
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
}

#[test]
fn criterion_02_unitary_degree_difference() {
    let start = Instant::now();
    let report = verify_degree_difference(PairClass::UU, 14).unwrap();
    let elapsed = start.elapsed();
    verdict(
        2,
        "unitary degree difference k(n-k)",
        report.passed(),
        &format!("({} instances, {elapsed:.2?})", report.instances),
    );
    assert!(report.passed(), "{:?}", report.failures);
    assert!(report.instances > 0);
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

#[test]
fn criterion_03_symplectic_orthogonal_degree_difference() {
    let start = Instant::now();
    let osp = verify_degree_difference(PairClass::OSp, 16).unwrap();
    let spo = verify_degree_difference(PairClass::SpO, 16).unwrap();
    let elapsed = start.elapsed();
    let ok = osp.passed() && spo.passed();
    verdict(
        3,
        "symplectic/orthogonal degree differences",
        ok,
        &format!("({} instances, {elapsed:.2?})", osp.instances + spo.instances),
    );
    assert!(osp.passed(), "{:?}", osp.failures);
    assert!(spo.passed(), "{:?}", spo.failures);
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

#[test]
fn criterion_04_theta_rank_characterization() {
    let start = Instant::now();
    let u = verify_theta_rank_characterization(TargetClass::U, 10).unwrap();
    let sp = verify_theta_rank_characterization(TargetClass::Sp, 12).unwrap();
    let orth = verify_theta_rank_characterization(TargetClass::Orthogonal, 12).unwrap();
    let elapsed = start.elapsed();
    let ok = u.passed() && sp.passed() && orth.passed();
    verdict(4, "theta-rank sets match the image characterization", ok, &format!("({elapsed:.2?})"));
    assert!(u.passed(), "{:?}", u.failures);
    assert!(sp.passed(), "{:?}", sp.failures);
    assert!(orth.passed(), "{:?}", orth.failures);
}

#[test]
fn criterion_05_degree_oracle() {
    let start = Instant::now();
    let report = verify_degree_oracle(10).unwrap();
    let elapsed = start.elapsed();
    verdict(
        5,
        "closed-form degrees match the exact polynomial",
        report.passed(),
        &format!("({} symbols, {elapsed:.2?})", report.instances),
    );
    assert!(report.passed(), "{:?}", report.failures);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn criterion_06_named_examples() {
    let mut ok = true;
    // Steinberg degrees k(k-1)/2
    for k in 1..=20usize {
        let got = deg_unitary(&steinberg_unitary(k), k).unwrap();
        if got != (k * (k - 1) / 2) as i64 {
            ok = false;
            eprintln!("Steinberg U{k}: degree {got}");
        }
    }
    // cuspidal degrees (d-1)d(d+1)(3d+2)/24
    for d in 0..=6i64 {
        let k = (d * (d + 1) / 2) as usize;
        let got = deg_unitary(&cuspidal(d as usize), k).unwrap();
        if got != (d - 1) * d * (d + 1) * (3 * d + 2) / 24 {
            ok = false;
            eprintln!("cuspidal d={d}: degree {got}");
        }
    }
    // the cuspidal chain: theta-bar sends each cuspidal symbol to the next,
    // with degrees 0, 0, 2, 11, 35, ... and target (d)(d+1)(d+2)(3d+5)/24
    let expected_degrees = [0i64, 0, 2, 11, 35];
    for d in 0..=4usize {
        let k = d * (d + 1) / 2;
        let n = (d + 1) * (d + 2) / 2;
        let pair = DualPair::new(unitary(k), unitary(n)).unwrap();
        let image = theta_bar(&pair, &cuspidal(d)).unwrap();
        if image != cuspidal(d + 1) {
            ok = false;
            eprintln!("chain broke at d={d}: {image}");
        }
        if deg_unitary(&cuspidal(d), k).unwrap() != expected_degrees[d] {
            ok = false;
            eprintln!("chain degree at d={d}");
        }
        let di = d as i64;
        let target = di * (di + 1) * (di + 2) * (3 * di + 5) / 24;
        if deg_unitary(&image, n).unwrap() != target {
            ok = false;
            eprintln!("chain target degree at d={d}");
        }
    }
    verdict(6, "Steinberg, cuspidal and chain degrees", ok, "");
    assert!(ok);
}

#[test]
fn criterion_07_zero_admissible_sets() {
    // The 0-admissible sets for the four pair shapes, k even up to 12:
    //   (Sp_k, O+): only k = 0, with the single symbol [0|-].
    //   (Sp_k, O-): empty for every k.
    //   (O+_k, Sp): exactly one symbol, Υ image ([1,...,1], []) at defect 0.
    //   (O-_k, Sp): exactly one symbol for k >= 2, image ([1,...,1], [])
    //               with one fewer part at defect -2; none for k = 0.
    let mut ok = true;
    let ones = |count: usize| {
        BiPartition::new(Partition::new(vec![1; count]), Partition::empty())
    };
    for k in (0..=12usize).step_by(2) {
        let admissible = |src: GroupKind, dst: GroupKind| -> Vec<Symbol> {
            let first = GroupFamily::new(src, k).unwrap();
            let second = GroupFamily::new(dst, k).unwrap();
            let pair = DualPair::new(first, second).unwrap();
            first
                .enumerate()
                .unwrap()
                .into_iter()
                .filter(|s| is_admissible(&pair, s, 0).unwrap())
                .collect()
        };
        let sp_plus = admissible(GroupKind::Sp, GroupKind::OPlus);
        let want: Vec<Symbol> = if k == 0 { vec!["[0|-]".parse().unwrap()] } else { vec![] };
        if sp_plus != want {
            ok = false;
            eprintln!("(Sp{k}, O+): {sp_plus:?}");
        }
        let sp_minus = admissible(GroupKind::Sp, GroupKind::OMinus);
        if !sp_minus.is_empty() {
            ok = false;
            eprintln!("(Sp{k}, O-): {sp_minus:?}");
        }
        let o_plus = admissible(GroupKind::OPlus, GroupKind::Sp);
        if o_plus != vec![Symbol::from_upsilon(&ones(k / 2), 0)] {
            ok = false;
            eprintln!("(O+{k}, Sp): {o_plus:?}");
        }
        let o_minus = admissible(GroupKind::OMinus, GroupKind::Sp);
        let want: Vec<Symbol> = if k >= 2 {
            vec![Symbol::from_upsilon(&ones(k / 2 - 1), -2)]
        } else {
            vec![]
        };
        if o_minus != want {
            ok = false;
            eprintln!("(O-{k}, Sp): {o_minus:?}");
        }
    }
    verdict(7, "0-admissible sets for the four pair shapes", ok, "");
    assert!(ok);
}

#[test]
fn criterion_08_structural_lemmas() {
    let report = verify_structural_lemmas(12).unwrap();
    verdict(
        8,
        "structural lemma battery",
        report.passed(),
        &format!("({} instances, {} failures)", report.instances, report.failures.len()),
    );
    for f in &report.failures {
        eprintln!("  {} {}: expected {}, got {}", f.pair, f.symbol, f.expected, f.actual);
    }
    // Expected to fail: the k-admissibility claim for (Sp, O-) pairs is
    // false at the trivial-character symbol (see the module docs of
    // `verify`); criterion 7 pins down the contradicting 0-admissibility
    // computation. The assertion is kept as stated rather than weakened.
    assert!(
        report.passed(),
        "known defect: {} instances fail, all of them k-admissibility of the \
         trivial-character symbol for (Sp, O-) pairs: {:?}",
        report.failures.len(),
        report
            .failures
            .iter()
            .map(|f| format!("{} {}", f.pair, f.symbol))
            .collect::<Vec<_>>()
    );
}

#[test]
fn criterion_09_identity_grid() {
    let start = Instant::now();
    let report = verify_lusztig_identities(40, 40);
    let elapsed = start.elapsed();
    verdict(
        9,
        "telescoping degree identities on the full grid",
        report.passed(),
        &format!("({} instances, {elapsed:.2?})", report.instances),
    );
    assert!(report.passed(), "{:?}", report.failures);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

#[test]
fn criterion_10_upsilon_round_trip() {
    let mut ok = true;
    let mut count = 0u64;
    let mut families: Vec<GroupFamily> = Vec::new();
    for k in 0..=14 {
        families.push(unitary(k));
    }
    for k in (0..=16usize).step_by(2) {
        for kind in [GroupKind::Sp, GroupKind::OPlus, GroupKind::OMinus] {
            families.push(GroupFamily::new(kind, k).unwrap());
        }
    }
    for f in families {
        for s in f.enumerate().unwrap() {
            count += 1;
            if Symbol::from_upsilon(&s.upsilon(), s.defect()) != s {
                ok = false;
                eprintln!("round trip failed in {f}: {s}");
            }
        }
    }
    verdict(10, "upsilon round trip on every enumerated symbol", ok, &format!("({count} symbols)"));
    assert!(ok);
}
