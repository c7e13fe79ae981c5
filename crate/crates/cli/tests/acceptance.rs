//! Acceptance gate for the workspace.
//!
//! One test per release criterion. Each test checks exact equality (no
//! tolerances anywhere) and prints a `[PASS] criterion N` line on success,
//! so a full run reads as a checklist. Criteria that compare enumeration
//! against closed forms use explicit budgets large enough that no grid
//! point can be skipped: a budget refusal fails the test rather than
//! silently shrinking the check.
//!
//! The brute-force reference counters used by criterion 13 are written
//! here, from scratch, so they share no code with the implementations
//! they check.

use std::process::Command;

use schreier_core::closed_form::{
    count_a, count_ap, count_b, count_bp, count_c, count_k, count_s,
};
use schreier_core::enumerate::{
    enumerate_compositions, enumerate_family, compositions_of_length, EnumerationBudget,
    FamilySpec, MultSeq,
};
use schreier_core::pascal::{diagonal_sum, hockey_stick_check, s_binom, s_pascal_rows, stars_and_bars};
use schreier_core::sequences::{check_tau_recurrence, classic_fib, k_seq, s_step_fib};
use schreier_core::BigCount;

fn big(x: u64) -> BigCount {
    BigCount::from(x)
}

/// Budget that admits every grid used below except the uniform-cap sweeps.
fn wide_budget() -> EnumerationBudget {
    EnumerationBudget::new(10u128.pow(12))
}

fn family_count(spec: FamilySpec, budget: &EnumerationBudget) -> BigCount {
    enumerate_family(&spec, budget, false)
        .unwrap_or_else(|e| panic!("enumeration of {spec:?} must not be refused: {e}"))
        .count
}

#[test]
fn c01_two_step_family_counts_are_fibonacci() {
    let budget = wide_budget();
    for n in 1..=20u64 {
        let enumerated = family_count(FamilySpec::A { s: 2, n }, &budget);
        let closed = count_a(2, n);
        let fib = classic_fib(n);
        assert_eq!(enumerated, closed, "enum vs closed at n={n}");
        assert_eq!(closed, fib, "closed vs Fibonacci at n={n}");
    }
    println!("[PASS] criterion 1: two-step multiset family matches its closed form and F(n) for n = 1..20");
}

#[test]
fn c02_multiset_families_match_s_step_fibonacci() {
    let budget = wide_budget();
    for s in 2..=5u64 {
        for n in 1..=14u64 {
            let enumerated = family_count(FamilySpec::A { s, n }, &budget);
            let closed = count_a(s, n);
            assert_eq!(enumerated, closed, "enum vs closed at s={s} n={n}");
            let seq = s_step_fib(s, n as i64).unwrap();
            assert_eq!(closed, seq, "closed vs sequence at s={s} n={n}");
        }
        for n in 15..=30u64 {
            assert_eq!(
                count_a(s, n),
                s_step_fib(s, n as i64).unwrap(),
                "closed vs sequence at s={s} n={n}"
            );
        }
    }
    println!("[PASS] criterion 2: A-family enumeration, closed form, and s-step Fibonacci agree for s = 2..5");
}

#[test]
fn c03_cap_choice_does_not_change_colored_counts() {
    // The uniform-cap grid projects (n+1)^n upfront, so this criterion
    // carries its own budget; the pruned walk only touches a sliver of that.
    let budget = EnumerationBudget::new(10u128.pow(24));
    for u in 2..=5u64 {
        for n in 1..=16u64 {
            let minimal = family_count(
                FamilySpec::B { u, caps: MultSeq::Minimal, n },
                &budget,
            );
            let uniform = family_count(
                FamilySpec::B { u, caps: MultSeq::Uniform, n },
                &budget,
            );
            let closed = count_b(u, n);
            let seq = k_seq(u, n).unwrap();
            assert_eq!(minimal, uniform, "minimal vs uniform caps at u={u} n={n}");
            assert_eq!(minimal, closed, "enum vs closed at u={u} n={n}");
            assert_eq!(closed, seq, "closed vs sequence at u={u} n={n}");
            if n <= u {
                assert_eq!(closed, big(1), "only the empty multiset qualifies at u={u} n={n}");
            }
        }
    }
    println!("[PASS] criterion 3: B-family counts are cap-independent and match the u-step sequence for u = 2..5");
}

#[test]
fn c04_power_families_reindex_the_u_step_sequence() {
    let budget = wide_budget();
    for s in 2..=4u64 {
        for n in 1..=9u64 {
            let enumerated = family_count(FamilySpec::C { s, n }, &budget);
            let closed = count_c(s, n);
            let seq = k_seq(s, (s - 1) * (n - 1) + 1).unwrap();
            assert_eq!(enumerated, closed, "enum vs closed at s={s} n={n}");
            assert_eq!(closed, seq, "closed vs reindexed sequence at s={s} n={n}");
        }
    }
    println!("[PASS] criterion 4: C-family enumeration matches k_seq(s, (s-1)(n-1)+1) for s = 2..4");
}

#[test]
fn c05_four_step_sequence_golden_vector_and_tau_recurrence() {
    let expected: [u64; 22] = [
        1, 1, 1, 1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50, 69, 95, 131, 181, 250, 345, 476,
    ];
    for (i, want) in expected.iter().enumerate() {
        let n = (i + 1) as u64;
        assert_eq!(k_seq(4, n).unwrap(), big(*want), "k_seq(4, {n})");
    }
    let check = check_tau_recurrence(4, 30).unwrap();
    assert!(check.passed(), "tau recurrence mismatch: {:?}", check.first_mismatch);
    assert_eq!(check.coefficients, vec![big(1), big(3), big(3), big(1)]);
    println!("[PASS] criterion 5: k_seq(4, -) golden vector holds and tau satisfies its binomial recurrence to n = 30");
}

#[test]
fn c06_pascal_rows_and_diagonal_sums() {
    let triangle = s_pascal_rows(2, 4);
    assert_eq!(
        triangle.to_string(),
        "1\n\
         1 1 1\n\
         1 2 3 2 1\n\
         1 3 6 7 6 3 1\n\
         1 4 10 16 19 16 10 4 1\n"
    );
    for s in 1..=4u64 {
        for n in 0..=30u64 {
            assert_eq!(
                diagonal_sum(s, n),
                s_step_fib(s + 1, (n + 1) as i64).unwrap(),
                "diagonal sum at s={s} n={n}"
            );
        }
    }
    println!("[PASS] criterion 6: 2-Pascal rows match the golden block and diagonal sums give (s+1)-step Fibonacci");
}

#[test]
fn c07_composition_count_and_length_breakdown() {
    let run = enumerate_compositions(13, 1, true).unwrap();
    assert_eq!(run.count, big(12));
    assert_eq!(count_k(13, 1), big(12));

    let compositions = run.compositions.unwrap();
    assert_eq!(compositions.len(), 12);
    let by_length = |k: usize| compositions.iter().filter(|c| c.parts.len() == k).count();
    assert_eq!(by_length(1), 1);
    assert_eq!(by_length(2), 8);
    assert_eq!(by_length(3), 3);
    assert_eq!(compositions_of_length(13, 1, 1), big(1));
    assert_eq!(compositions_of_length(13, 1, 2), big(8));
    assert_eq!(compositions_of_length(13, 1, 3), big(3));
    println!("[PASS] criterion 7: compositions of 13 with parts > k split 1/8/3 by length, 12 in total");
}

#[test]
fn c08_composition_count_prefix() {
    let expected: [u64; 18] = [0, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27, 34, 42];
    for (i, want) in expected.iter().enumerate() {
        let n = (i + 1) as u64;
        assert_eq!(count_k(n, 1), big(*want), "count_k({n}, 1)");
    }
    println!("[PASS] criterion 8: count_k(n, 1) prefix matches the published values for n = 1..18");
}

#[test]
fn c09_zeroth_power_compositions_are_fibonacci() {
    for n in 1..=40u64 {
        assert_eq!(
            count_k(n, 0),
            classic_fib(n - 1),
            "count_k({n}, 0) vs F({})",
            n - 1
        );
    }
    println!("[PASS] criterion 9: compositions with parts > k reduce to F(n-1) for n = 1..40");
}

#[test]
fn c10_power_set_families_match_composition_counts() {
    let budget = wide_budget();
    for p in 1..=3u64 {
        for n in 1..=18u64 {
            let s_enum = family_count(FamilySpec::S { p, n }, &budget);
            let s_closed = count_s(p, n);
            assert_eq!(s_enum, s_closed, "S enum vs closed at p={p} n={n}");
            assert_eq!(s_closed, count_k(n, p - 1), "S vs compositions at p={p} n={n}");

            let a_enum = family_count(FamilySpec::Ap { p, n }, &budget);
            let a_closed = count_ap(p, n);
            assert_eq!(a_enum, a_closed, "Ap enum vs closed at p={p} n={n}");
            assert_eq!(a_closed, count_k(n + 1, p - 1), "Ap vs compositions at p={p} n={n}");
        }
        assert_eq!(count_s(p, 1), big(0), "S is empty at n=1 for p={p}");
    }
    println!("[PASS] criterion 10: S- and Ap-family counts equal composition counts for p = 1..3, n = 1..18");
}

#[test]
fn c11_anchored_family_and_hockey_stick() {
    let budget = wide_budget();
    for p in 1..=3u64 {
        for n in 1..=16u64 {
            let enumerated = family_count(FamilySpec::Bp { p, n }, &budget);
            let closed = count_bp(p, n);
            assert_eq!(enumerated, closed, "Bp enum vs closed at p={p} n={n}");
            assert_eq!(closed, count_ap(p, n), "Bp vs Ap at p={p} n={n}");
        }
    }
    for r in 0..=6u64 {
        assert!(hockey_stick_check(r, 25), "hockey stick fails at r={r}");
    }
    println!("[PASS] criterion 11: Bp-family counts equal Ap counts for p = 1..3 and the hockey-stick identity holds to r = 6");
}

#[test]
fn c12_anchored_subsets_are_fibonacci() {
    let budget = wide_budget();
    for n in 1..=18u64 {
        assert_eq!(
            family_count(FamilySpec::D { n }, &budget),
            classic_fib(n),
            "D count at n={n}"
        );
    }
    println!("[PASS] criterion 12: D-family counts are F(n) for n = 1..18");
}

/// Solutions of x_1 + ... + x_p = n with x_i >= bounds[i], counted by
/// direct recursion over the first coordinate.
fn bounded_solutions_brute(n: u64, bounds: &[u64]) -> u64 {
    match bounds.split_first() {
        None => u64::from(n == 0),
        Some((&lo, rest)) => (lo..=n).map(|x| bounded_solutions_brute(n - x, rest)).sum(),
    }
}

/// Ways to place `total` identical objects into `boxes` boxes of capacity
/// `cap`, counted by walking every box filling.
fn capped_occupancy_brute(boxes: u64, total: u64, cap: u64) -> u64 {
    if boxes == 0 {
        return u64::from(total == 0);
    }
    (0..=cap.min(total))
        .map(|x| capped_occupancy_brute(boxes - 1, total - x, cap))
        .sum()
}

#[test]
fn c13_binomial_utilities_match_brute_force() {
    // Every lower-bound tuple with entries <= 3, in up to four variables.
    for p in 1..=4usize {
        let mut bounds = vec![0u64; p];
        loop {
            for n in 0..=12u64 {
                assert_eq!(
                    stars_and_bars(n, &bounds),
                    big(bounded_solutions_brute(n, &bounds)),
                    "stars_and_bars({n}, {bounds:?})"
                );
            }
            // Odometer step through {0,1,2,3}^p.
            let mut i = 0;
            while i < p && bounds[i] == 3 {
                bounds[i] = 0;
                i += 1;
            }
            if i == p {
                break;
            }
            bounds[i] += 1;
        }
    }

    for n in 0..=6u64 {
        for s in 0..=3u64 {
            for k in 0..=(n * s) {
                assert_eq!(
                    s_binom(n, k as i64, s),
                    big(capped_occupancy_brute(n, k, s)),
                    "s_binom({n}, {k}, {s})"
                );
            }
            assert_eq!(s_binom(n, (n * s + 1) as i64, s), big(0));
            assert_eq!(s_binom(n, -1, s), big(0));
        }
    }
    println!("[PASS] criterion 13: stars_and_bars and s_binom agree with local brute-force counters");
}

#[test]
fn c14_verify_command_passes_clean_and_catches_injected_faults() {
    let bin = env!("CARGO_BIN_EXE_schreier");

    let clean = Command::new(bin).args(["verify", "--all"]).output().unwrap();
    assert_eq!(clean.status.code(), Some(0), "verify --all must exit 0");
    let stdout = String::from_utf8(clean.stdout).unwrap();
    let reports: Vec<&str> = stdout.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(reports.len(), 13, "one report per identity:\n{stdout}");
    for line in &reports {
        assert!(line.contains(" pass"), "report did not pass: {line}");
    }

    for fault in [
        "count_a", "count_b", "count_c", "count_k", "count_s", "count_ap", "count_bp",
    ] {
        let run = Command::new(bin)
            .args(["verify", "--all", "--inject-off-by-one", fault])
            .output()
            .unwrap();
        assert_eq!(
            run.status.code(),
            Some(1),
            "an off-by-one in {fault} must be caught"
        );
    }
    println!("[PASS] criterion 14: verify --all passes clean and flags every injected off-by-one");
}
