//! The acceptance gate: one test per criterion, each printing a
//! criterion-numbered PASS line once its assertions hold. Run with
//! `--nocapture` to see the lines directly; the harness result per test
//! is the pass/fail signal otherwise.

mod support;

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

use hypermoments::counting::{count_paths, zagreb_index};
use hypermoments::families::{
    attach_pendant_edges, attach_pendant_path, build_b, build_c, enumerate_linear_bicyclic,
    move_pendant_path, power_path,
};
use hypermoments::moments::{closed_form_moment, graph_trace_oracle, spectral_moment_exact};
use hypermoments::order::{stated_count_checks, verify_theorem, ExtremalClaim, VerifyStatus};
use hypermoments::{canonical_form, UniformHypergraph};
use support::*;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn small_bicyclic_extras() -> Vec<UniformHypergraph> {
    vec![
        build_c(3, 3, 1, 2, 1).unwrap(),
        build_c(2, 3, 1, 2, 1).unwrap(),
        build_c(1, 3, 1, 2, 2).unwrap(),
        build_b(3, 3, 3, 0, 3).unwrap(),
        build_c(3, 4, 1, 2, 1).unwrap(),
    ]
}

#[test]
fn acceptance_1_closed_forms_match_enumeration_through_order_k() {
    let start = Instant::now();
    let mut hosts = small_corpus();
    hosts.extend(small_bicyclic_extras());
    assert!(hosts.len() >= 30);
    let ks: std::collections::BTreeSet<usize> = hosts.iter().map(|h| h.k()).collect();
    assert!(ks.contains(&2) && ks.contains(&3) && ks.contains(&4));

    let mut comparisons = 0usize;
    let mut guard = roomy_guard();
    for h in &hosts {
        assert!(h.m() <= 6);
        for d in 0..=h.k() {
            let closed = closed_form_moment(h, d)
                .expect("orders up to k always have a closed form");
            let enumerated = spectral_moment_exact(h, d, &mut guard).unwrap();
            assert_eq!(closed, enumerated, "order {d} on {} vertices", h.n());
            comparisons += 1;
        }
    }
    assert!(start.elapsed().as_secs() < 60);
    println!(
        "criterion 1: PASS ({} hosts, {} closed-vs-enumerated comparisons, {:?})",
        hosts.len(),
        comparisons,
        start.elapsed()
    );
}

#[test]
fn acceptance_2_enumeration_matches_adjacency_traces_on_random_graphs() {
    let start = Instant::now();
    let mut runner = TestRunner::deterministic();
    let strategy = graph_strategy();
    let mut guard = roomy_guard();
    let samples = 60usize;
    let mut comparisons = 0usize;
    for _ in 0..samples {
        let g = strategy
            .new_tree(&mut runner)
            .expect("strategy is total")
            .current();
        assert!(g.n() <= 7);
        for d in 0..=8 {
            let enumerated = spectral_moment_exact(&g, d, &mut guard).unwrap();
            let trace = graph_trace_oracle(&g, d).unwrap();
            assert_eq!(
                enumerated,
                BigRational::from_integer(BigInt::from(trace)),
                "order {d} on a graph with {} vertices, {} edges",
                g.n(),
                g.m()
            );
            comparisons += 1;
        }
    }
    assert!(start.elapsed().as_secs() < 120);
    println!(
        "criterion 2: PASS ({samples} random graphs, {comparisons} trace comparisons, {:?})",
        start.elapsed()
    );
}

#[test]
fn acceptance_3_orders_not_divisible_by_k_vanish() {
    let start = Instant::now();
    let mut guard = roomy_guard();
    let mut checks = 0usize;

    for m in 4..=5 {
        let class = enumerate_linear_bicyclic(3, m, None, &mut guard).unwrap();
        assert!(!class.is_empty());
        for h in &class {
            for d in 1..9 {
                if d % 3 == 0 {
                    continue;
                }
                assert_eq!(
                    closed_form_moment(h, d),
                    Some(BigRational::zero()),
                    "order {d} with {m} edges"
                );
                let enumerated = spectral_moment_exact(h, d, &mut guard).unwrap();
                assert!(enumerated.is_zero(), "order {d} with {m} edges");
                checks += 1;
            }
        }
    }

    let sample = [
        build_c(3, 4, 1, 2, 1).unwrap(),
        build_c(2, 4, 1, 2, 1).unwrap(),
        build_c(1, 4, 1, 2, 2).unwrap(),
    ];
    for h in &sample {
        for d in 1..12 {
            if d % 4 == 0 {
                continue;
            }
            assert_eq!(closed_form_moment(h, d), Some(BigRational::zero()));
            let enumerated = spectral_moment_exact(h, d, &mut guard).unwrap();
            assert!(enumerated.is_zero(), "order {d} at edge size four");
            checks += 1;
        }
    }
    assert!(start.elapsed().as_secs() < 600);
    println!(
        "criterion 3: PASS ({checks} vanishing orders confirmed, {:?})",
        start.elapsed()
    );
}

#[test]
fn acceptance_4_subgraph_closed_forms_match_enumeration() {
    let start = Instant::now();
    let mut guard = roomy_guard();

    let theta = build_c(3, 3, 1, 2, 1).unwrap();
    let frozen = int(1656);
    assert_eq!(closed_form_moment(&theta, 6), Some(frozen.clone()));
    assert_eq!(
        spectral_moment_exact(&theta, 6, &mut guard).unwrap(),
        frozen
    );

    let mut comparisons = 0usize;
    for m in 4..=5 {
        let class = enumerate_linear_bicyclic(3, m, None, &mut guard).unwrap();
        for h in &class {
            for d in [6, 9] {
                let closed = closed_form_moment(h, d)
                    .expect("twice and thrice the edge size have closed forms here");
                let enumerated = spectral_moment_exact(h, d, &mut guard).unwrap();
                assert_eq!(closed, enumerated, "order {d} with {m} edges");
                comparisons += 1;
            }
        }
    }
    assert!(start.elapsed().as_secs() < 1800);
    println!(
        "criterion 4: PASS (frozen value 1656 reproduced two ways, {} comparisons, {:?})",
        comparisons,
        start.elapsed()
    );
}

#[test]
fn acceptance_5_two_edge_path_count_matches_degree_identity() {
    let start = Instant::now();
    let mut guard = roomy_guard();
    let mut hosts = small_corpus();
    hosts.extend(small_bicyclic_extras());
    for m in 4..=6 {
        hosts.extend(enumerate_linear_bicyclic(3, m, None, &mut guard).unwrap());
    }

    for h in &hosts {
        let zagreb = zagreb_index(h);
        let km = (h.k() * h.m()) as u64;
        assert!(zagreb >= km);
        assert_eq!((zagreb - km) % 2, 0);
        assert_eq!(
            count_paths(h, 2).unwrap(),
            (zagreb - km) / 2,
            "host with {} edges of size {}",
            h.m(),
            h.k()
        );
    }
    println!(
        "criterion 5: PASS ({} hosts satisfy the path-count identity, {:?})",
        hosts.len(),
        start.elapsed()
    );
}

#[test]
fn acceptance_6_stated_count_tables_survive_recounting() {
    let start = Instant::now();
    let tuples = [
        (ExtremalClaim::FirstAmongCycleJoins, 3, 6, 3),
        (ExtremalClaim::FirstAmongCycleJoins, 3, 7, 3),
        (ExtremalClaim::FirstAmongCycleJoins, 3, 8, 3),
        (ExtremalClaim::FirstAmongCycleJoins, 3, 8, 4),
        (ExtremalClaim::FirstAmongCycleJoins, 3, 9, 4),
        (ExtremalClaim::FirstAmongCycleJoins, 3, 10, 5),
        (ExtremalClaim::FirstAmongThetas, 3, 5, 3),
        (ExtremalClaim::FirstAmongThetas, 3, 6, 3),
        (ExtremalClaim::FirstAmongThetas, 3, 7, 3),
        (ExtremalClaim::FirstAmongThetas, 3, 8, 3),
        (ExtremalClaim::FirstAmongThetas, 3, 5, 4),
        (ExtremalClaim::FirstAmongThetas, 3, 6, 4),
        (ExtremalClaim::FirstAmongThetas, 3, 7, 4),
        (ExtremalClaim::FirstAmongThetas, 3, 8, 4),
        (ExtremalClaim::FirstAmongThetas, 3, 8, 5),
        (ExtremalClaim::FirstOverall, 3, 8, 4),
        (ExtremalClaim::FirstOverall, 3, 9, 3),
        (ExtremalClaim::FirstOverall, 3, 10, 3),
        (ExtremalClaim::FirstOverall, 3, 12, 4),
        (ExtremalClaim::FirstOverall, 3, 13, 5),
    ];
    let mut rows = 0usize;
    for &(claim, k, m, g) in &tuples {
        let checks = stated_count_checks(claim, k, m, g).unwrap();
        for check in &checks {
            assert!(
                check.matches(),
                "{} for {} at ({k},{m},{g}) under {}: stated {}, recounted {}",
                check.pattern,
                check.instance,
                claim.token(),
                check.expected,
                check.found
            );
        }
        rows += checks.len();
    }
    assert!(rows >= 60, "only {rows} table rows were exercised");
    println!(
        "criterion 6: PASS ({rows} stated counts recounted across {} parameter tuples, {:?})",
        tuples.len(),
        start.elapsed()
    );
}

struct ClaimCase {
    claim: ExtremalClaim,
    m: usize,
    girth: usize,
    resolved_at: Option<usize>,
    shape: UniformHypergraph,
}

fn junction_site(h: &UniformHypergraph) -> usize {
    let degrees = h.degree_sequence();
    (0..h.n())
        .find(|&v| degrees.degree(v) == 3)
        .expect("these shapes have a degree-three junction")
}

#[test]
fn acceptance_7_extremal_claims_hold_at_desk_scale() {
    let start = Instant::now();
    let mut guard = roomy_guard();
    let d_max = 12;

    let odd_theta = build_c(2, 3, 1, 2, 1).unwrap();
    let even_theta = build_c(1, 3, 2, 2, 2).unwrap();
    let cases = [
        ClaimCase {
            claim: ExtremalClaim::LastOverall,
            m: 6,
            girth: 3,
            resolved_at: Some(6),
            shape: attach_pendant_edges(&odd_theta, junction_site(&odd_theta), 2).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::LastOverall,
            m: 7,
            girth: 3,
            resolved_at: Some(6),
            shape: attach_pendant_edges(&odd_theta, junction_site(&odd_theta), 3).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::LastOverall,
            m: 8,
            girth: 4,
            resolved_at: Some(6),
            shape: attach_pendant_edges(&even_theta, junction_site(&even_theta), 2).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongCycleJoins,
            m: 6,
            girth: 3,
            resolved_at: Some(6),
            shape: build_b(3, 3, 3, 0, 3).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongCycleJoins,
            m: 7,
            girth: 3,
            resolved_at: Some(9),
            shape: build_b(3, 3, 3, 0, 4).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongCycleJoins,
            m: 8,
            girth: 3,
            resolved_at: Some(12),
            shape: build_b(3, 3, 3, 0, 5).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongThetas,
            m: 4,
            girth: 3,
            resolved_at: Some(6),
            shape: build_c(3, 3, 1, 2, 1).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongThetas,
            m: 5,
            girth: 3,
            resolved_at: Some(9),
            shape: build_c(3, 3, 1, 2, 2).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstAmongThetas,
            m: 6,
            girth: 3,
            resolved_at: Some(9),
            shape: build_c(3, 3, 1, 2, 3).unwrap(),
        },
        ClaimCase {
            claim: ExtremalClaim::FirstOverall,
            m: 9,
            girth: 3,
            resolved_at: Some(12),
            shape: build_b(3, 3, 3, 1, 5).unwrap(),
        },
    ];

    for case in &cases {
        let report =
            verify_theorem(case.claim, 3, case.m, case.girth, d_max, &mut guard).unwrap();
        let label = format!(
            "{} at (k=3, m={}, g={})",
            case.claim.token(),
            case.m,
            case.girth
        );
        assert_eq!(report.status, VerifyStatus::Match, "{label}");
        assert!(report.claimed, "{label} lies inside the claimed range");
        assert_eq!(report.resolved_at, case.resolved_at, "{label}");
        assert_eq!(report.found.len(), 1, "{label}");
        assert_eq!(
            canonical_form(&report.found[0]),
            canonical_form(&case.shape),
            "{label} extremal shape"
        );
        let expected = report.expected.as_ref().expect("shape is constructible");
        assert_eq!(
            canonical_form(expected),
            canonical_form(&case.shape),
            "{label} named shape"
        );
        assert!(report.class_size >= report.found.len());
        println!(
            "  {label}: MATCH over {} classes, resolved at order {:?}",
            report.class_size, report.resolved_at
        );
    }

    // Smallest overall-minimum instance: outside the claimed range, so
    // the run may legitimately stop at Unresolved; when the tie does
    // break, the survivor must be the extrapolated shape.
    let report =
        verify_theorem(ExtremalClaim::FirstOverall, 3, 8, 3, d_max, &mut guard).unwrap();
    assert!(!report.claimed, "m=8 sits outside the claimed range");
    let extrapolated = build_b(3, 3, 3, 0, 5).unwrap();
    assert_eq!(
        report.expected.as_ref().map(canonical_form),
        Some(canonical_form(&extrapolated))
    );
    assert!(
        matches!(
            report.status,
            VerifyStatus::Match | VerifyStatus::Unresolved
        ),
        "instead: {}",
        report.status
    );
    assert!(report
        .found
        .iter()
        .any(|h| canonical_form(h) == canonical_form(&extrapolated)));
    println!(
        "  T4 at (k=3, m=8, g=3): {} over {} classes, {} survivors",
        report.status,
        report.class_size,
        report.found.len()
    );

    assert!(start.elapsed().as_secs() < 7200);
    println!(
        "criterion 7: PASS (11 claim instances verified to order {d_max}, {:?})",
        start.elapsed()
    );
}

#[test]
fn acceptance_8_property_suites_hold() {
    let start = Instant::now();

    // Canonical labels are relabeling-invariant, over a hundred-plus
    // permutations of assorted shapes.
    let shapes = [
        build_c(3, 3, 1, 2, 1).unwrap(),
        build_b(1, 3, 3, 0, 3).unwrap(),
        build_c(1, 3, 2, 2, 2).unwrap(),
        power_path(4, 2).unwrap(),
    ];
    let mut runner = TestRunner::deterministic();
    let mut permutations = 0usize;
    for round in 0..112 {
        let h = &shapes[round % shapes.len()];
        let perm = permutation(h.n())
            .new_tree(&mut runner)
            .expect("strategy is total")
            .current();
        let relabeled = relabel(h, &perm);
        assert_eq!(canonical_form(&relabeled), canonical_form(h));
        permutations += 1;
    }
    assert!(permutations >= 100);

    // Constructor bookkeeping.
    for (i, expect_max) in [(1, 4), (2, 3), (3, 2)] {
        let h = build_b(i, 3, 3, 0, 4).unwrap();
        assert_eq!(h.m(), 7);
        assert_eq!(h.n(), 13);
        assert!(h.is_linear() && h.is_bicyclic());
        assert_eq!(h.girth().unwrap(), Some(3));
        assert_eq!(h.degree_sequence().max(), expect_max);
    }

    // Attachment moves adjust the counts they advertise.
    let base = build_c(3, 3, 1, 2, 1).unwrap();
    let pad = {
        let degrees = base.degree_sequence();
        (0..base.n()).find(|&v| degrees.degree(v) == 1).unwrap()
    };
    let grown = attach_pendant_edges(&base, pad, 2).unwrap();
    assert_eq!((grown.n(), grown.m()), (base.n() + 4, base.m() + 2));
    let tailed = attach_pendant_path(&base, pad, 3).unwrap();
    assert_eq!((tailed.n(), tailed.m()), (base.n() + 6, base.m() + 3));
    assert_eq!(tailed.degree_sequence().max(), 2);

    // Moving a pendant path swaps one degree from the old attachment
    // vertex to the new one and touches nothing else.
    let host = attach_pendant_path(&base, pad, 2).unwrap();
    let path_edges: Vec<usize> = (0..host.m())
        .filter(|&e| host.edge(e).iter().any(|&w| w >= base.n()))
        .collect();
    assert_eq!(path_edges.len(), 2);
    let target = {
        let degrees = host.degree_sequence();
        (0..base.n())
            .find(|&w| w != pad && degrees.degree(w) == 1)
            .unwrap()
    };
    let moved = move_pendant_path(&host, &path_edges, pad, target).unwrap();
    assert_eq!((moved.n(), moved.m()), (host.n(), host.m()));
    let before = host.degree_sequence();
    let after = moved.degree_sequence();
    assert_eq!(after.degree(pad) + 1, before.degree(pad));
    assert_eq!(after.degree(target), before.degree(target) + 1);
    for w in 0..host.n() {
        if w != pad && w != target {
            assert_eq!(after.degree(w), before.degree(w), "vertex {w}");
        }
    }
    let back_edges: Vec<usize> = (0..moved.m())
        .filter(|&e| moved.edge(e).iter().any(|&w| w >= base.n()))
        .collect();
    let back = move_pendant_path(&moved, &back_edges, target, pad).unwrap();
    assert_eq!(canonical_form(&back), canonical_form(&host));

    // The grouped enumerator agrees with the literal configuration sum
    // on every host with at most two edges, through twice the edge size.
    let mut guard = roomy_guard();
    let mut literal_checks = 0usize;
    for k in 2..=4 {
        for q in 1..=2 {
            let h = power_path(q, k).unwrap();
            for d in 1..=2 * k {
                let grouped = spectral_moment_exact(&h, d, &mut guard).unwrap();
                assert_eq!(grouped, literal_moment(&h, d), "order {d}, edge size {k}");
                literal_checks += 1;
            }
        }
    }

    println!(
        "criterion 8: PASS ({permutations} permutations, {literal_checks} literal sums, {:?})",
        start.elapsed()
    );
}
