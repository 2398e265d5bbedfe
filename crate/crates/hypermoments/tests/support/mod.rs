//! Independent oracles for the integration suites.
//!
//! Everything here recomputes a quantity the library also computes, but
//! through the dumbest correct route available: explicit configuration
//! multisets instead of grouped tables, parent-map enumeration instead of
//! determinants, subset-plus-backtracking isomorphism instead of canonical
//! forms, and raw edge-subset search instead of guided enumeration. The
//! point is that no pruning idea is shared between the two sides.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use hypermoments::arborescence::MultiDigraph;
use hypermoments::moments::{EulerianConfig, RootedEdge};
use hypermoments::{canonical_form, CanonicalForm, CostGuard, UniformHypergraph};

/// All (edge, root) pairs of the host, in index order.
fn rooted_types(h: &UniformHypergraph) -> Vec<RootedEdge> {
    let mut types = Vec::new();
    for e in 0..h.m() {
        for &v in h.edge(e) {
            types.push(RootedEdge { edge: e, root: v });
        }
    }
    types
}

/// Calls `f` on every admissible configuration of `d` rooted edges, one
/// multiset at a time.
pub fn for_each_eulerian_config(
    h: &UniformHypergraph,
    d: usize,
    f: &mut dyn FnMut(&EulerianConfig),
) {
    fn recurse(
        h: &UniformHypergraph,
        types: &[RootedEdge],
        start: usize,
        remaining: usize,
        stack: &mut Vec<RootedEdge>,
        f: &mut dyn FnMut(&EulerianConfig),
    ) {
        if remaining == 0 {
            if let Some(cfg) = EulerianConfig::new(h, stack) {
                f(&cfg);
            }
            return;
        }
        for i in start..types.len() {
            stack.push(types[i]);
            recurse(h, types, i, remaining - 1, stack, f);
            stack.pop();
        }
    }
    let types = rooted_types(h);
    let mut stack = Vec::with_capacity(d);
    recurse(h, &types, 0, d, &mut stack, f);
}

/// The d-th moment assembled configuration by configuration, with no
/// grouping: each multiset of rooted edges contributes its ordering
/// weight times its arborescence term, and the total is scaled by
/// d(k-1)^n.
pub fn literal_moment(h: &UniformHypergraph, d: usize) -> BigRational {
    assert!(d >= 1, "order zero is an eigenvalue count, not a configuration sum");
    let mut total = BigRational::zero();
    for_each_eulerian_config(h, d, &mut |cfg| {
        let weight = BigRational::from_integer(BigInt::from(cfg.ordering_weight()));
        total += weight * cfg.contribution();
    });
    let scale = BigInt::from(d as u64) * BigInt::from(h.k() as u64 - 1).pow(h.n() as u32);
    total * BigRational::from_integer(scale)
}

/// Spanning arborescences toward `root` by brute force: every non-root
/// vertex of the support picks one outgoing arc (counted with
/// multiplicity), and a choice is kept when following the picks from
/// every vertex reaches the root.
pub fn brute_arborescences(g: &MultiDigraph, root: usize) -> u64 {
    let support: Vec<usize> = (0..g.n())
        .filter(|&v| g.out_degree(v) > 0 || g.in_degree(v) > 0)
        .collect();
    let others: Vec<usize> = support.iter().copied().filter(|&v| v != root).collect();
    fn recurse(
        g: &MultiDigraph,
        others: &[usize],
        root: usize,
        idx: usize,
        pick: &mut BTreeMap<usize, usize>,
    ) -> u64 {
        if idx == others.len() {
            for &start in others {
                let mut v = start;
                let mut steps = 0;
                while v != root {
                    v = pick[&v];
                    steps += 1;
                    if steps > others.len() + 1 {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let v = others[idx];
        let mut total = 0;
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let mult = g.multiplicity(v, u);
            if mult > 0 {
                pick.insert(v, u);
                total += mult * recurse(g, others, root, idx + 1, pick);
                pick.remove(&v);
            }
        }
        total
    }
    if others.is_empty() {
        return 1;
    }
    recurse(g, &others, root, 0, &mut BTreeMap::new())
}

/// Whether two edge lists are the same hypergraph up to renaming
/// vertices, by backtracking over edge pairings and vertex images.
fn edge_sets_isomorphic(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    fn match_edges(
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        i: usize,
        used: &mut [bool],
        fwd: &mut BTreeMap<usize, usize>,
        bwd: &mut BTreeMap<usize, usize>,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || a[i].len() != b[j].len() {
                continue;
            }
            used[j] = true;
            if assign(a, b, i, j, 0, used, fwd, bwd) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    #[allow(clippy::too_many_arguments)]
    fn assign(
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        i: usize,
        j: usize,
        pos: usize,
        used: &mut [bool],
        fwd: &mut BTreeMap<usize, usize>,
        bwd: &mut BTreeMap<usize, usize>,
    ) -> bool {
        if pos == a[i].len() {
            return match_edges(a, b, i + 1, used, fwd, bwd);
        }
        let v = a[i][pos];
        if let Some(&img) = fwd.get(&v) {
            return b[j].contains(&img) && assign(a, b, i, j, pos + 1, used, fwd, bwd);
        }
        for idx in 0..b[j].len() {
            let u = b[j][idx];
            if bwd.contains_key(&u) {
                continue;
            }
            fwd.insert(v, u);
            bwd.insert(u, v);
            if assign(a, b, i, j, pos + 1, used, fwd, bwd) {
                return true;
            }
            fwd.remove(&v);
            bwd.remove(&u);
        }
        false
    }
    let mut used = vec![false; b.len()];
    match_edges(a, b, 0, &mut used, &mut BTreeMap::new(), &mut BTreeMap::new())
}

/// Occurrences of `pattern` in `h` by raw subset search: every
/// edge-subset of the right size, tested for isomorphism directly.
pub fn naive_count_pattern(h: &UniformHypergraph, pattern: &UniformHypergraph) -> u64 {
    let p = pattern.m();
    if p == 0 || p > h.m() || pattern.k() != h.k() {
        return 0;
    }
    let pattern_edges = pattern.edges().to_vec();
    fn subsets(
        h: &UniformHypergraph,
        pattern_edges: &[Vec<usize>],
        start: usize,
        need: usize,
        chosen: &mut Vec<Vec<usize>>,
        count: &mut u64,
    ) {
        if need == 0 {
            if edge_sets_isomorphic(pattern_edges, chosen) {
                *count += 1;
            }
            return;
        }
        for e in start..=h.m().saturating_sub(need) {
            chosen.push(h.edge(e).to_vec());
            subsets(h, pattern_edges, e + 1, need - 1, chosen, count);
            chosen.pop();
        }
    }
    let mut count = 0;
    subsets(h, &pattern_edges, 0, p, &mut Vec::with_capacity(p), &mut count);
    count
}

/// Every connected linear bicyclic 3-uniform hypergraph with four edges,
/// up to isomorphism, found by trying all C(35, 4) ways to pick four
/// triples out of seven vertices.
pub fn exhaustive_bicyclic_classes_m4() -> BTreeSet<CanonicalForm> {
    let mut triples: Vec<Vec<usize>> = Vec::new();
    for a in 0..7usize {
        for b in (a + 1)..7 {
            for c in (b + 1)..7 {
                triples.push(vec![a, b, c]);
            }
        }
    }
    let linear = |x: &[usize], y: &[usize]| x.iter().filter(|v| y.contains(v)).count() <= 1;
    let t = triples.len();
    let mut out = BTreeSet::new();
    for i in 0..t {
        for j in (i + 1)..t {
            if !linear(&triples[i], &triples[j]) {
                continue;
            }
            for l in (j + 1)..t {
                if !linear(&triples[l], &triples[i]) || !linear(&triples[l], &triples[j]) {
                    continue;
                }
                for r in (l + 1)..t {
                    if !linear(&triples[r], &triples[i])
                        || !linear(&triples[r], &triples[j])
                        || !linear(&triples[r], &triples[l])
                    {
                        continue;
                    }
                    let edges = vec![
                        triples[i].clone(),
                        triples[j].clone(),
                        triples[l].clone(),
                        triples[r].clone(),
                    ];
                    let h = UniformHypergraph::new(3, 7, edges)
                        .expect("distinct valid triples form a hypergraph");
                    if h.is_bicyclic() {
                        out.insert(canonical_form(&h));
                    }
                }
            }
        }
    }
    out
}

/// Applies a vertex relabeling.
pub fn relabel(h: &UniformHypergraph, perm: &[usize]) -> UniformHypergraph {
    assert_eq!(perm.len(), h.n());
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().map(|&v| perm[v]).collect())
        .collect();
    UniformHypergraph::new(h.k(), h.n(), edges).expect("relabeling preserves validity")
}

/// Uniformly shuffled relabeling of `0..n`.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Random ordinary graph: 2 to 7 vertices, 1 to 10 edges.
pub fn graph_strategy() -> impl Strategy<Value = UniformHypergraph> {
    (2usize..=7).prop_flat_map(|n| {
        let mut pairs: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                pairs.push(vec![a, b]);
            }
        }
        let most = pairs.len().min(10);
        proptest::sample::subsequence(pairs, 1..=most)
            .prop_map(move |edges| UniformHypergraph::new(2, n, edges).unwrap())
    })
}

/// Paths, cycles and stars over edge sizes 2 to 4, all within six edges:
/// the small closed-form corpus.
pub fn small_corpus() -> Vec<UniformHypergraph> {
    use hypermoments::families::{power_cycle, power_path, power_star};
    let mut shapes = Vec::new();
    for k in 2..=4 {
        for q in 1..=6 {
            shapes.push(power_path(q, k).unwrap());
        }
        for q in 3..=6 {
            shapes.push(power_cycle(q, k).unwrap());
        }
        for t in 2..=6 {
            shapes.push(power_star(t, k).unwrap());
        }
    }
    shapes
}

/// A guard large enough that desk-scale work never trips it.
pub fn roomy_guard() -> CostGuard {
    CostGuard::new(10_000_000_000)
}
