//! Acceptance suite: one test per shipping criterion.
//!
//! Each test prints a single `criterion N (...): PASS` line on success, so a
//! `--nocapture` run doubles as a checklist. Expected values were frozen from
//! an independent reference implementation before this crate was written;
//! nothing here is derived from the code under test.
//!
//! The order-5 exhaustive sweep (33,554,432 digraphs) is `#[ignore]`d; run it
//! with `cargo test --test acceptance -- --ignored --nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stable_index::enumerate::{
    decode, default_workers, enumerate_exhaustive, enumerate_parallel,
    enumerate_parallel_with_ceiling, enumerate_random,
};
use stable_index::families::{
    build_complete, build_cycle, build_dumbbell, build_lollipop, dumbbell_index, gcd,
    min_coefficient, residue_permutation_check,
};
use stable_index::{
    gaps, s_max, stable_index_bounded, stable_index_cycle_detect, theta_set, walk_count_oracle,
    witness, Digraph, Theta,
};

/// Runs both core algorithms and insists they agree before returning the value.
fn theta_by_both(d: &Digraph) -> Theta {
    let a = stable_index_bounded(d);
    let b = stable_index_cycle_detect(d);
    assert_eq!(a, b, "algorithms disagree on a {}-vertex digraph", d.order());
    a
}

fn pass(number: u32, what: &str, started: Instant) {
    println!(
        "criterion {number} ({what}): PASS ({:.2?})",
        started.elapsed()
    );
}

fn assert_budget(number: u32, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {number} exceeded its {budget:?} budget (took {elapsed:.2?})"
    );
}

#[test]
fn criterion_1_named_index_values() {
    let started = Instant::now();

    for n in 2..=6 {
        let d = build_complete(n).unwrap();
        assert_eq!(theta_by_both(&d), Theta::Finite(1), "complete:{n}");
    }
    for n in 1..=12 {
        let d = build_cycle(n).unwrap();
        assert_eq!(theta_by_both(&d), Theta::Infinite, "cycle:{n}");
    }
    for n in 3..=10 {
        let d = build_lollipop(n).unwrap();
        assert_eq!(theta_by_both(&d), Theta::Finite(n as u64), "lollipop:{n}");
    }
    for &(p, k, q, expected) in &[(1, 2, 2, 2), (2, 2, 3, 6), (2, 3, 3, 7), (2, 4, 3, 8)] {
        let d = build_dumbbell(p, k, q).unwrap();
        assert_eq!(theta_by_both(&d), Theta::Finite(expected), "g:{p},{k},{q}");
    }

    assert_budget(1, started, Duration::from_secs(1));
    pass(1, "named index values via both algorithms", started);
}

#[test]
fn criterion_2_dumbbell_closed_form_sweep() {
    let started = Instant::now();

    let mut cases = 0;
    for p in 1..=8 {
        for q in 1..=8 {
            for k in 2..=6 {
                let predicted = dumbbell_index(p, k, q).unwrap();
                let computed = theta_by_both(&build_dumbbell(p, k, q).unwrap());
                assert_eq!(
                    computed,
                    Theta::Finite(predicted),
                    "closed form mismatch at g:{p},{k},{q}"
                );
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 320);

    assert_budget(2, started, Duration::from_secs(10));
    pass(2, "closed form matches computation on 320 dumbbells", started);
}

#[test]
fn criterion_3_exhaustive_ground_truth_small_orders() {
    let started = Instant::now();

    for (n, expected_max) in [(2usize, 1u64), (3, 3), (4, 4)] {
        let summary = enumerate_exhaustive(n).unwrap();
        assert_eq!(summary.total, 1u64 << (n * n), "n={n} total");
        assert_eq!(summary.max_finite(), Some(expected_max), "n={n} max");
        assert_eq!(expected_max, s_max(n), "n={n} bound table");
        let expected: BTreeSet<u64> = (1..=expected_max).collect();
        assert_eq!(
            summary.achieved_finite(),
            expected,
            "n={n} achieved finite values"
        );
    }

    assert_budget(3, started, Duration::from_secs(30));
    pass(3, "exhaustive ground truth at orders 2..4", started);
}

/// Order-5 sweep over all 2^25 digraphs. Slow; excluded from the default run.
#[test]
#[ignore]
fn criterion_3_long_mode_exhaustive_order_five() {
    let started = Instant::now();

    let summary = enumerate_parallel_with_ceiling(5, default_workers(), 5).unwrap();
    assert_eq!(summary.total, 1u64 << 25);
    assert_eq!(summary.max_finite(), Some(6));
    assert_eq!(s_max(5), 6);
    let expected: BTreeSet<u64> = (1..=6).collect();
    assert_eq!(summary.achieved_finite(), expected);

    assert_budget(3, started, Duration::from_secs(600));
    pass(3, "long mode: exhaustive ground truth at order 5", started);
}

#[test]
fn criterion_4_witnesses_for_every_achievable_value() {
    let started = Instant::now();

    let expected_member_counts = [10usize, 14, 17, 21, 25, 32, 38, 44];
    for (n, &expected_count) in (7..=14).zip(&expected_member_counts) {
        let set = theta_set(n);
        assert_eq!(
            set.finite().len(),
            expected_count,
            "n={n} finite member count"
        );
        for &m in set.finite() {
            let (d, family) = witness(n, Theta::Finite(m)).unwrap();
            assert_eq!(d.order(), n, "witness for ({n}, {m}) has wrong order");
            assert_eq!(
                stable_index_bounded(&d),
                Theta::Finite(m),
                "witness for ({n}, {m}) via {family} has the wrong index"
            );
        }
    }

    assert_budget(4, started, Duration::from_secs(120));
    pass(4, "verified witnesses at orders 7..14", started);
}

/// Achievable finite values at order n, rebuilt from the structure theorem's
/// statement alone: below order 7 the interval `1..=s_max(n)` is exact, and
/// from order 7 on the set is `1..=s_max(n-1)+1` plus every lcm of a
/// two-cycle-cover profile `p + q = n`.
fn reference_gap_list(n: usize) -> Vec<u64> {
    let mut achievable: BTreeSet<u64> = BTreeSet::new();
    if (2..=6).contains(&n) {
        achievable.extend(1..=s_max(n));
    } else if n >= 7 {
        achievable.extend(1..=s_max(n - 1) + 1);
        for p in 1..n {
            let q = n - p;
            let g = gcd(p as u64, q as u64);
            achievable.insert(p as u64 / g * q as u64);
        }
    }
    (1..=s_max(n))
        .filter(|value| !achievable.contains(value))
        .collect()
}

#[test]
fn criterion_5_gap_catalogue() {
    let started = Instant::now();

    for n in [2usize, 3, 4, 5, 6, 10] {
        let report = gaps(n).unwrap();
        assert!(report.gaps.is_empty(), "unexpected gaps at order {n}");
    }

    let frozen: &[(usize, &[u64])] = &[
        (7, &[9, 11]),
        (8, &[14]),
        (9, &[17, 18, 19]),
        (11, &[23, 25, 26, 27, 29]),
        (12, &[32, 33, 34]),
        (13, &[37, 38, 39, 41]),
        (14, &[44]),
    ];
    for &(n, expected) in frozen {
        let report = gaps(n).unwrap();
        assert!(!report.gaps.is_empty(), "expected gaps at order {n}");
        assert_eq!(report.gaps, expected, "gap list at order {n}");
        assert_eq!(
            report.gaps,
            reference_gap_list(n),
            "gap list at order {n} vs in-test rederivation"
        );
        assert_eq!(
            report.witnessed.len() + report.gaps.len(),
            s_max(n) as usize,
            "witnessed values and gaps must partition 1..=s_max({n})"
        );
    }
    for n in [2usize, 3, 4, 5, 6, 10] {
        assert!(reference_gap_list(n).is_empty());
    }

    pass(5, "gap catalogue matches frozen and rederived lists", started);
}

#[test]
fn criterion_6_algorithm_agreement() {
    let started = Instant::now();

    // Exhaustive agreement of the two core algorithms at orders 1..=4.
    for n in 1..=4usize {
        for code in 0..(1u128 << (n * n)) {
            let d = decode(n, code).unwrap();
            theta_by_both(&d);
        }
    }

    // Exact walk counting agrees with the saturating-power verdict on every
    // order <= 4 digraph whose index is at most 5: no duplicate pair exists at
    // any shorter length, and one exists at length theta + 1.
    let mut oracle_checked = 0u64;
    for n in 1..=4usize {
        for code in 0..(1u128 << (n * n)) {
            let d = decode(n, code).unwrap();
            let theta = match stable_index_bounded(&d) {
                Theta::Finite(k) if k <= 5 => k as usize,
                _ => continue,
            };
            for len in 2..=theta {
                for u in 0..n {
                    for v in 0..n {
                        let count = walk_count_oracle(&d, u, v, len, 6).unwrap();
                        assert!(
                            count <= 1,
                            "duplicate {u}->{v} walk pair of length {len} below the index"
                        );
                    }
                }
            }
            let mut found = false;
            'outer: for u in 0..n {
                for v in 0..n {
                    if walk_count_oracle(&d, u, v, theta + 1, 6).unwrap() >= 2 {
                        found = true;
                        break 'outer;
                    }
                }
            }
            assert!(found, "no duplicate walk pair at length theta + 1");
            oracle_checked += 1;
        }
    }
    assert!(oracle_checked > 60_000, "oracle cross-check covered too little");

    // 100,000 seeded random digraphs of order 7.
    let n = 7usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0xA6_2EE);
    for _ in 0..100_000 {
        let mut d = Digraph::empty(n);
        for i in 0..n {
            let row = rng.next_u64() & ((1u64 << n) - 1);
            for j in 0..n {
                if row >> j & 1 == 1 {
                    d.add_arc(i, j).unwrap();
                }
            }
        }
        theta_by_both(&d);
    }

    pass(6, "bounded, cycle-detecting, and walk-count agreement", started);
}

#[test]
fn criterion_7_residue_arithmetic() {
    let started = Instant::now();

    let mut permutation_pairs = 0;
    for p in 2..=60u64 {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            assert!(
                residue_permutation_check(p, q).unwrap(),
                "residues of q, 2q, .., (p-1)q mod {p} should permute 1..{p}"
            );
            permutation_pairs += 1;
        }
    }
    assert!(permutation_pairs > 1_000);

    for p in 3..=40u64 {
        for q in 2..p {
            if gcd(p, q) != 1 {
                continue;
            }
            assert_eq!(
                min_coefficient(p, q).unwrap(),
                p - 1,
                "smallest multiplier forcing a full wrap at ({p}, {q})"
            );
        }
    }

    assert_budget(7, started, Duration::from_secs(5));
    pass(7, "residue permutation and minimal multiplier laws", started);
}

#[test]
fn criterion_8_structured_random_bounds() {
    let started = Instant::now();

    // 500 block digraphs: a p-cycle, a q-cycle, and k >= 1 forward arcs from
    // the first cycle into the second. The index is finite and at most
    // floor(pq / k).
    let mut rng = ChaCha8Rng::seed_from_u64(0xB10C);
    for case in 0..500 {
        let p = 2 + (rng.next_u64() % 5) as usize;
        let q = 2 + (rng.next_u64() % 5) as usize;
        let mut d = Digraph::empty(p + q);
        for i in 0..p {
            d.add_arc(i, (i + 1) % p).unwrap();
        }
        for j in 0..q {
            d.add_arc(p + j, p + (j + 1) % q).unwrap();
        }
        let mut cross = Vec::new();
        for i in 0..p {
            for j in 0..q {
                if rng.next_u64() & 1 == 1 {
                    cross.push((i, p + j));
                }
            }
        }
        if cross.is_empty() {
            let pick = (rng.next_u64() % (p * q) as u64) as usize;
            cross.push((pick / q, p + pick % q));
        }
        let k = cross.len();
        for (u, v) in cross {
            d.add_arc(u, v).unwrap();
        }
        let bound = (p * q / k) as u64;
        match stable_index_bounded(&d) {
            Theta::Finite(value) => assert!(
                value <= bound,
                "case {case}: index {value} exceeds pq/k bound {bound} (p={p}, q={q}, k={k})"
            ),
            Theta::Infinite => panic!("case {case}: block digraph must have a finite index"),
        }
    }

    // 500 strongly connected digraphs that are not plain cycles, orders 2..=8,
    // at varying densities: the index is finite and at most the order.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5C0);
    let mut accepted = 0;
    while accepted < 500 {
        let n = 2 + (rng.next_u64() % 7) as usize;
        let threshold =
            (u32::MAX as f64 * (0.15 + 0.45 * (rng.next_u32() as f64 / u32::MAX as f64))) as u32;
        let mut d = Digraph::empty(n);
        for i in 0..n {
            for j in 0..n {
                if rng.next_u32() < threshold {
                    d.add_arc(i, j).unwrap();
                }
            }
        }
        if !d.is_strongly_connected() || d.is_cycle_graph() {
            continue;
        }
        match stable_index_bounded(&d) {
            Theta::Finite(value) => assert!(
                value <= n as u64,
                "strongly connected non-cycle of order {n} with index {value}"
            ),
            Theta::Infinite => {
                panic!("strongly connected non-cycle of order {n} must have a finite index")
            }
        }
        accepted += 1;
    }

    pass(8, "index bounds on 1000 seeded structured digraphs", started);
}

#[test]
fn criterion_9_enumeration_determinism() {
    let started = Instant::now();

    let serial = enumerate_exhaustive(4).unwrap();
    for workers in [1usize, 4, 8] {
        let parallel = enumerate_parallel(4, workers).unwrap();
        assert_eq!(parallel, serial, "worker count {workers} changed the result");
    }

    let first = enumerate_random(7, 2_000, 99).unwrap();
    let second = enumerate_random(7, 2_000, 99).unwrap();
    assert_eq!(first, second, "same seed must reproduce the same histogram");

    let prefix = enumerate_random(7, 1_000, 99).unwrap();
    for (theta, count) in &prefix.histogram {
        assert!(
            first.histogram.get(theta).copied().unwrap_or(0) >= *count,
            "a shorter run with the same seed must be a prefix of a longer one"
        );
    }
    assert_eq!(prefix.total, 1_000);
    assert_eq!(first.total, 2_000);

    pass(9, "parallel determinism and seeded reproducibility", started);
}
