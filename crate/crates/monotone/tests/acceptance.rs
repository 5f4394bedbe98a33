//! Acceptance gate: ten criteria, one test (and one pass/fail line) each.
//!
//! Fixture criteria check the worked examples end to end; randomized
//! criteria compare library verdicts against the independent oracles in
//! `common` at the stated sample sizes.

mod common;

use common::{adjugate_inverse, basic_feasible_exists, random_matrix, random_vector, support_rays_oracle};
use monotone::cli::cmd_solve;
use monotone::cones::dd_rays;
use monotone::farkas::{solve_nonneg, verify_certificate, FarkasCertificate};
use monotone::linalg::{left_nullspace_basis, Matrix, Vector};
use monotone::monotonicity::{
    analyze, nonneg_left_inverse, nonneg_right_inverse, q_nonneg_shortcut, LeftInverseOutcome,
    Method, QShortcut, RightInverseOutcome,
};
use monotone::preimage::{sandwich_preimages, SandwichOutcome, SandwichSolution, SandwichStep};
use monotone::{mat, rvec};
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn criterion_01_nonneg_solve_on_rank2_fixture() {
    let a = mat![[1, -1, 4], [-1, 2, -3], [1, -2, 3]];
    let b = rvec![1, 0, 0];
    let report = cmd_solve(&a, &b, true).unwrap();
    let cert = report.certificate.expect("nonneg solve attaches a certificate");
    let FarkasCertificate::Primal { ref x } = cert else {
        panic!("expected a primal certificate, got {cert:?}");
    };
    assert_eq!(a.mul_vec(x), b);
    assert!(x.is_nonneg());
    assert!(verify_certificate(&a, &b, &cert).unwrap());
    // The reference answer is accepted by the same checker.
    let reference = FarkasCertificate::Primal { x: rvec![2, 1, 0] };
    assert!(verify_certificate(&a, &b, &reference).unwrap());
    println!("criterion 1: pass — primal certificate verifies; (2,1,0) accepted");
}

#[test]
fn criterion_02_sandwich_on_weakly_monotone_fixture() {
    let a = mat![[1, 0, 1], [0, 1, 1]];
    assert!(analyze(&a).weakly_monotone);
    let (y0, y, y1) = (rvec![0, 0], rvec![3, 1], rvec![4, 9]);
    let outcome = sandwich_preimages(&a, &y0, &y, &y1).unwrap();
    let SandwichOutcome::Solution(sol) = outcome else {
        panic!("expected a sandwich solution, got {outcome:?}");
    };
    assert!(sol.verify(&a, &y0, &y, &y1));
    // The reference triple satisfies the same invariants.
    let reference = SandwichSolution {
        x0: rvec![0, 0, 0],
        x: rvec![3, 1, 0],
        x1: rvec![3, 8, 1],
    };
    assert!(reference.verify(&a, &y0, &y, &y1));
    println!("criterion 2: pass — sandwich triple verifies; reference triple accepted");
}

#[test]
fn criterion_03_negative_verdicts_with_certificates() {
    let a = mat![[4, 3], [1, 1]];
    let report = analyze(&a);
    assert!(!report.monotone);
    assert!(!report.weakly_monotone);
    assert!(report.verify(&a), "counterexamples must verify");
    let (y0, y, y1) = (rvec![0, 0], rvec![10, 3], rvec![15, 4]);
    let outcome = sandwich_preimages(&a, &y0, &y, &y1).unwrap();
    let SandwichOutcome::Failure { step, dual } = outcome else {
        panic!("expected a sandwich failure, got {outcome:?}");
    };
    assert_eq!(step, SandwichStep::Z3);
    assert!(dual.is_dual());
    assert!(verify_certificate(&a, &y1.sub(&y), &dual).unwrap());
    println!("criterion 3: pass — both verdicts false; sandwich fails at z3 with verifying dual");
}

#[test]
fn criterion_04_rank_deficient_weakly_monotone() {
    let a = mat![[1, 0, 1], [0, 1, 1], [0, 0, 0]];
    let report = analyze(&a);
    assert!(report.weakly_monotone);
    assert_eq!(report.method, Method::ExtremeRays);
    match nonneg_left_inverse(&a) {
        LeftInverseOutcome::Witness(v) => {
            assert!(a.mul_vec(&v).is_nonneg());
            assert!(v.first_negative().is_some());
        }
        LeftInverseOutcome::Inverse(_) => panic!("rank-deficient matrix has no left inverse"),
    }
    match nonneg_right_inverse(&a) {
        RightInverseOutcome::Witness { index, dual } => {
            let unit = Vector::unit(a.rows(), index);
            assert!(verify_certificate(&a, &unit, &FarkasCertificate::Dual { y: dual }).unwrap());
        }
        RightInverseOutcome::Inverse(_) => panic!("rank-deficient matrix has no right inverse"),
    }
    println!("criterion 4: pass — ray path affirms weak monotonicity; both inverses refuted");
}

#[test]
fn criterion_05_single_row_positive_entry_rule() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.random_range(1..=6usize);
        let a = random_matrix(&mut rng, 1, n, -5, 5);
        if a.is_zero() {
            continue;
        }
        let has_positive = a.row(0).iter().any(|e| e.is_positive());
        assert_eq!(
            analyze(&a).weakly_monotone,
            has_positive,
            "single-row verdict disagrees on {a}"
        );
        checked += 1;
    }
    println!("criterion 5: pass — 200/200 single-row verdicts match the positive-entry rule");
}

#[test]
fn criterion_06_square_monotonicity_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.random_range(1..=4usize);
        let a = random_matrix(&mut rng, n, n, -4, 4);
        let Some(inv) = adjugate_inverse(&a) else {
            continue;
        };
        assert_eq!(
            analyze(&a).monotone,
            inv.is_nonneg(),
            "monotonicity verdict disagrees with adjugate inverse on {a}"
        );
        checked += 1;
    }
    println!("criterion 6: pass — 200/200 invertible matrices match the inverse-sign rule");
}

#[test]
fn criterion_07_farkas_exclusivity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for _ in 0..500 {
        let m = rng.random_range(1..=5usize);
        let n = rng.random_range(1..=5usize);
        let mat = random_matrix(&mut rng, m, n, -5, 5);
        let b = random_vector(&mut rng, m, -5, 5);
        let cert = solve_nonneg(&mat, &b).unwrap();
        assert!(verify_certificate(&mat, &b, &cert).unwrap());
        // Exactly one alternative holds: the basic-solution enumeration
        // must agree with the certificate kind, refuting the opposite.
        assert_eq!(
            cert.is_primal(),
            basic_feasible_exists(&mat, &b),
            "exclusivity violated on {mat} with b {b}"
        );
    }
    println!("criterion 7: pass — 500/500 certificates verify and exclude the opposite alternative");
}

#[test]
fn criterion_08_ray_enumeration_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for _ in 0..200 {
        let m = rng.random_range(1..=5usize);
        let n = rng.random_range(1..=5usize);
        let a = random_matrix(&mut rng, m, n, -3, 3);
        let basis = left_nullspace_basis(&a);
        let rays = dd_rays(&basis, m).unwrap();
        let oracle = support_rays_oracle(&basis, m);
        assert_eq!(
            rays.rays, oracle,
            "ray sets disagree on {a} (both sides primitive and sorted)"
        );
    }
    println!("criterion 8: pass — 200/200 ray sets match the support-enumeration oracle");
}

#[test]
fn criterion_09_implication_suite() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    for _ in 0..200 {
        let m = rng.random_range(1..=4usize);
        let n = rng.random_range(1..=4usize);
        let a = random_matrix(&mut rng, m, n, -4, 4);
        let report = analyze(&a);
        if report.monotone {
            assert!(report.weakly_monotone, "monotone must imply weakly monotone on {a}");
        }
        if q_nonneg_shortcut(&a) == QShortcut::SufficientYes {
            assert!(report.weakly_monotone, "shortcut yes must imply weakly monotone on {a}");
        }
    }
    for (m, n) in [(1, 1), (2, 3), (3, 3), (4, 2)] {
        let zero = Matrix::zeros(m, n);
        let report = analyze(&zero);
        assert!(report.weakly_monotone);
        assert!(!report.monotone);
    }
    println!("criterion 9: pass — implications hold on 200 samples and zero-matrix edge cases");
}

#[test]
fn criterion_10_json_determinism() {
    let bin = env!("CARGO_BIN_EXE_monotone");
    let fix = |name: &str| format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let commands: Vec<Vec<String>> = vec![
        vec!["analyze".into(), fix("rank2_3x3.txt"), "--json".into()],
        vec!["solve".into(), fix("rank2_3x3.txt"), fix("e1_3.txt"), "--json".into()],
        vec![
            "solve".into(),
            fix("rank2_3x3.txt"),
            fix("e1_3.txt"),
            "--nonneg".into(),
            "--json".into(),
        ],
        vec![
            "sandwich".into(),
            fix("weakly_monotone_2x3.txt"),
            fix("zero_2.txt"),
            fix("y_3_1.txt"),
            fix("y_4_9.txt"),
            "--json".into(),
        ],
        vec!["decompose".into(), fix("rank2_no_inverse_3x3.txt"), "--json".into()],
        vec!["rays".into(), fix("rank2_no_inverse_3x3.txt"), "--json".into()],
    ];
    for args in &commands {
        let run = || {
            std::process::Command::new(bin)
                .args(args)
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs between runs for {args:?}"
        );
        assert_eq!(first.status.code(), second.status.code());
        assert!(!first.stdout.is_empty(), "no JSON produced for {args:?}");
    }
    println!("criterion 10: pass — repeated runs are byte-identical for every command");
}
