//! Exact spectral moments of k-uniform hypergraphs.
//!
//! The d-th moment is a weighted sum over configurations: d rooted edges
//! whose union of rooted stars (arcs from each root to the other k-1
//! vertices of its edge) forms an Eulerian digraph. Each configuration
//! contributes its arborescence count divided by the product of root
//! out-degrees, and the whole sum carries the factor d(k-1)^n.
//!
//! [`spectral_moment_exact`] never walks configurations one by one. It
//! groups them by support (the set of distinct edges used) and by edge
//! multiplicities: the digraph, the arborescence count, and the degree
//! product depend only on how many times each root is chosen per edge,
//! so one contingency table stands for a whole orbit of configurations
//! whose size is a product of multinomials. Divisibility of the vertex
//! load c_v (the total multiplicity of edges through v) by k is necessary
//! for balance, which prunes compositions early and is what makes moments
//! far beyond the edge count tractable.
//!
//! [`closed_form_moment`] dispatches the published low-order formulas
//! (d <= k, and for linear hosts the vanishing rule plus the 2k and 3k
//! expansions in subgraph counts) so that moment sequences only pay for
//! enumeration at genuinely hard orders.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arborescence::{arborescence_count, laplacian_minor, MultiDigraph};
use crate::counting;
use crate::guard::{CostGuard, GuardExceeded};
use crate::hypergraph::UniformHypergraph;

/// Exact rational moment value.
pub type MomentValue = BigRational;

/// Convenience constructor for integer moment values.
pub fn ratio_from_int(value: i64) -> MomentValue {
    BigRational::from_integer(BigInt::from(value))
}

/// How a moment value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    /// A published closed form in terms of n, m, and small subgraph
    /// counts.
    Closed,
    /// The grouped configuration enumeration.
    Enumerated,
}

/// One row of a moment table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentEntry {
    /// Moment order.
    pub d: usize,
    /// Exact value.
    pub value: MomentValue,
    /// Provenance of the value.
    pub method: MomentMethod,
}

/// Failure of a moment computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentError {
    /// The ordinary-graph oracle was asked about a hypergraph with k != 2.
    NotAGraph {
        /// Edge size found.
        k: usize,
    },
    /// The cost guard ran out of units.
    Guard(GuardExceeded),
}

impl fmt::Display for MomentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentError::NotAGraph { k } => {
                write!(f, "expected an ordinary graph (edge size 2), found edge size {k}")
            }
            MomentError::Guard(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for MomentError {}

impl From<GuardExceeded> for MomentError {
    fn from(e: GuardExceeded) -> Self {
        MomentError::Guard(e)
    }
}

/// One rooted edge: an edge index together with a root vertex inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedEdge {
    /// Edge index in the host hypergraph.
    pub edge: usize,
    /// Root vertex; must belong to that edge.
    pub root: usize,
}

/// A multiset of rooted edges whose union of rooted stars is Eulerian.
///
/// This is the literal object the moment formula sums over. The library
/// enumerator never materializes these (it works on grouped contingency
/// tables), but tests check the grouped sums against configurations built
/// one at a time through this type.
#[derive(Debug, Clone)]
pub struct EulerianConfig {
    k: usize,
    digraph: MultiDigraph,
    root_counts: Vec<u64>,
    multiplicities: BTreeMap<RootedEdge, u64>,
    tau: BigUint,
}

impl EulerianConfig {
    /// Builds the configuration for a multiset of rooted edges, given in
    /// any order. Returns None when the union of rooted stars is not
    /// Eulerian. Panics if an edge index is out of range or a root does
    /// not lie in its edge.
    pub fn new(h: &UniformHypergraph, rooted: &[RootedEdge]) -> Option<Self> {
        let mut digraph = MultiDigraph::new(h.n());
        let mut root_counts = vec![0u64; h.n()];
        let mut multiplicities: BTreeMap<RootedEdge, u64> = BTreeMap::new();
        for &re in rooted {
            let edge = h.edge(re.edge);
            assert!(
                edge.contains(&re.root),
                "root {} is not a vertex of edge {}",
                re.root,
                re.edge
            );
            root_counts[re.root] += 1;
            *multiplicities.entry(re).or_insert(0) += 1;
            for &u in edge {
                if u != re.root {
                    digraph.add_arcs(re.root, u, 1);
                }
            }
        }
        let tau = arborescence_count(&digraph).ok()?;
        Some(EulerianConfig {
            k: h.k(),
            digraph,
            root_counts,
            multiplicities,
            tau,
        })
    }

    /// The union of rooted stars.
    pub fn digraph(&self) -> &MultiDigraph {
        &self.digraph
    }

    /// How many of the rooted edges have root v.
    pub fn root_count(&self, v: usize) -> u64 {
        self.root_counts[v]
    }

    /// Spanning arborescence count of the rooted-star union.
    pub fn tau(&self) -> &BigUint {
        &self.tau
    }

    /// Product of out-degrees (k-1 times the root count) over covered
    /// vertices.
    pub fn out_degree_product(&self) -> BigUint {
        let mut product = BigUint::one();
        for &r in &self.root_counts {
            if r > 0 {
                product *= BigUint::from((self.k as u64 - 1) * r);
            }
        }
        product
    }

    /// Number of root-sorted tuples representing this multiset: a product
    /// of multinomials, one per root vertex.
    pub fn ordering_weight(&self) -> BigUint {
        let mut weight = BigUint::one();
        for (v, &r) in self.root_counts.iter().enumerate() {
            if r == 0 {
                continue;
            }
            let mut block = factorial(r);
            for (re, &mult) in &self.multiplicities {
                if re.root == v {
                    block /= factorial(mult);
                }
            }
            weight *= block;
        }
        weight
    }

    /// tau divided by the out-degree product: this configuration's term
    /// in the moment sum, before the global d(k-1)^n factor.
    pub fn contribution(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.tau.clone()),
            BigInt::from(self.out_degree_product()),
        )
    }
}

/// Exact d-th spectral moment via grouped configuration enumeration.
///
/// d = 0 returns the eigenvalue count n(k-1)^(n-1) directly; there is
/// nothing to enumerate. The guard is charged one unit per visited
/// support, per admissible multiplicity assignment, and per contingency
/// table.
pub fn spectral_moment_exact(
    h: &UniformHypergraph,
    d: usize,
    guard: &mut CostGuard,
) -> Result<MomentValue, MomentError> {
    if d == 0 {
        return Ok(eigenvalue_count(h));
    }
    if h.m() == 0 {
        return Ok(MomentValue::zero());
    }
    let k = h.k();
    let factorials = factorial_table(d as u64 / k as u64);
    let mut total = BigRational::zero();
    counting::for_each_connected_edge_subset(h, d.min(h.m()), &mut |subset: &[usize]| {
        guard.charge(1)?;
        total += moment_over_support(h, subset, d, &factorials, guard)?;
        Ok::<(), MomentError>(())
    })?;
    let scale = BigInt::from(d) * BigInt::from(k as u64 - 1).pow(h.n() as u32);
    Ok(total * BigRational::from_integer(scale))
}

/// Sum of configuration terms whose support is exactly `subset`.
fn moment_over_support(
    h: &UniformHypergraph,
    subset: &[usize],
    d: usize,
    factorials: &[BigUint],
    guard: &mut CostGuard,
) -> Result<BigRational, MomentError> {
    let k = h.k() as u64;
    let s = subset.len();
    let mut verts: Vec<usize> = subset
        .iter()
        .flat_map(|&e| h.edge(e).iter().copied())
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let vcount = verts.len();
    let edges: Vec<Vec<usize>> = subset
        .iter()
        .map(|&e| {
            h.edge(e)
                .iter()
                .map(|v| verts.binary_search(v).expect("vertex collected above"))
                .collect()
        })
        .collect();
    // Balance forces k to divide every vertex load; check each vertex at
    // the deepest edge that touches it so partial assignments prune.
    let mut last_touch = vec![0usize; vcount];
    for (j, e) in edges.iter().enumerate() {
        for &v in e {
            last_touch[v] = j;
        }
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); s];
    for v in 0..vcount {
        closing[last_touch[v]].push(v);
    }

    let mut state = SupportState {
        k,
        s,
        edges: &edges,
        closing: &closing,
        loads: vec![0u64; vcount],
        multiplicity: vec![0u64; s],
        factorials,
        all_verts: (0..vcount).collect(),
        acc: BigRational::zero(),
    };
    state.assign_edge(0, d as u64, guard)?;
    Ok(state.acc)
}

struct SupportState<'a> {
    k: u64,
    s: usize,
    edges: &'a [Vec<usize>],
    closing: &'a [Vec<usize>],
    loads: Vec<u64>,
    multiplicity: Vec<u64>,
    factorials: &'a [BigUint],
    all_verts: Vec<usize>,
    acc: BigRational,
}

impl SupportState<'_> {
    /// Chooses how many times edge `j` appears, keeping at least one copy
    /// for each remaining edge, and prunes on divisibility of closed
    /// vertex loads.
    fn assign_edge(
        &mut self,
        j: usize,
        remaining: u64,
        guard: &mut CostGuard,
    ) -> Result<(), MomentError> {
        let span = (self.s - 1 - j) as u64;
        let (lo, hi) = if j == self.s - 1 {
            (remaining, remaining)
        } else {
            (1, remaining - span)
        };
        for mult in lo..=hi {
            self.multiplicity[j] = mult;
            for &v in &self.edges[j] {
                self.loads[v] += mult;
            }
            if self.closing[j].iter().all(|&v| self.loads[v] % self.k == 0) {
                if j == self.s - 1 {
                    guard.charge(1)?;
                    self.sum_tables(guard)?;
                } else {
                    self.assign_edge(j + 1, remaining - mult, guard)?;
                }
            }
            for &v in &self.edges[j] {
                self.loads[v] -= mult;
            }
        }
        Ok(())
    }

    /// Sums weight times arborescence count over all contingency tables
    /// for the current multiplicity assignment, then divides once by the
    /// constant degree product.
    fn sum_tables(&mut self, guard: &mut CostGuard) -> Result<(), MomentError> {
        let vcount = self.loads.len();
        let mut roots_left: Vec<u64> = self.loads.iter().map(|&c| c / self.k).collect();
        let root_factorial_product: BigUint =
            roots_left.iter().map(|&r| self.factorials[r as usize].clone()).product();
        let mut table = vec![0u64; self.s * self.edges[0].len()];
        let mut inner = BigUint::zero();
        self.fill_edge(0, 0, self.multiplicity[0], &mut roots_left, &mut table, &root_factorial_product, &mut inner, guard)?;

        let mut denom = BigUint::from(self.k - 1).pow(vcount as u32);
        for &c in &self.loads {
            denom *= BigUint::from(c / self.k);
        }
        self.acc += BigRational::new(BigInt::from(inner), BigInt::from(denom));
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_edge(
        &self,
        j: usize,
        pos: usize,
        left: u64,
        roots_left: &mut Vec<u64>,
        table: &mut Vec<u64>,
        root_factorial_product: &BigUint,
        inner: &mut BigUint,
        guard: &mut CostGuard,
    ) -> Result<(), MomentError> {
        let k_usize = self.edges[0].len();
        if j == self.s {
            guard.charge(1)?;
            let mut orbit_divisor = BigUint::one();
            for &x in table.iter() {
                if x > 1 {
                    orbit_divisor *= &self.factorials[x as usize];
                }
            }
            let weight = root_factorial_product / orbit_divisor;
            let tau = self.tau_of_table(table);
            *inner += weight * tau;
            return Ok(());
        }
        let edge = &self.edges[j];
        if pos == k_usize - 1 {
            let v = edge[pos];
            if left <= roots_left[v] {
                roots_left[v] -= left;
                table[j * k_usize + pos] = left;
                self.fill_edge(j + 1, 0, *self.multiplicity.get(j + 1).unwrap_or(&0), roots_left, table, root_factorial_product, inner, guard)?;
                table[j * k_usize + pos] = 0;
                roots_left[v] += left;
            }
            return Ok(());
        }
        // Capacity of the rest of this edge bounds how little we may
        // place here.
        let tail_capacity: u64 = edge[pos + 1..].iter().map(|&u| roots_left[u]).sum();
        let v = edge[pos];
        let low = left.saturating_sub(tail_capacity);
        let high = left.min(roots_left[v]);
        for x in low..=high {
            roots_left[v] -= x;
            table[j * k_usize + pos] = x;
            self.fill_edge(j, pos + 1, left - x, roots_left, table, root_factorial_product, inner, guard)?;
            table[j * k_usize + pos] = 0;
            roots_left[v] += x;
        }
        Ok(())
    }

    /// Arborescence count of the rooted-star union encoded by a full
    /// table. Balance and connectivity hold by construction, which debug
    /// builds re-check.
    fn tau_of_table(&self, table: &[u64]) -> BigUint {
        let k_usize = self.edges[0].len();
        let vcount = self.loads.len();
        let mut g = MultiDigraph::new(vcount);
        for (j, edge) in self.edges.iter().enumerate() {
            for (pos, &v) in edge.iter().enumerate() {
                let x = table[j * k_usize + pos];
                if x > 0 {
                    for &u in edge {
                        if u != v {
                            g.add_arcs(v, u, x);
                        }
                    }
                }
            }
        }
        debug_assert!(g.is_eulerian(), "table produced a non-Eulerian rooted-star union");
        laplacian_minor(&g, &self.all_verts, 0)
    }
}

/// Moment of order 0: the eigenvalue count n(k-1)^(n-1).
fn eigenvalue_count(h: &UniformHypergraph) -> MomentValue {
    if h.n() == 0 {
        return MomentValue::zero();
    }
    let v = BigInt::from(h.n()) * BigInt::from(h.k() as u64 - 1).pow(h.n() as u32 - 1);
    BigRational::from_integer(v)
}

/// Published closed form for the d-th moment, when one applies.
///
/// Covers every host for d <= k (zero below k, an edge-count multiple at
/// k), and linear hosts with k >= 3 additionally at d = 2k and d = 3k
/// via subgraph counts, plus the vanishing of every order not divisible
/// by k on linear bicyclic hosts. Returns None otherwise.
pub fn closed_form_moment(h: &UniformHypergraph, d: usize) -> Option<MomentValue> {
    let k = h.k();
    let n = h.n();
    let m = h.m() as u64;
    if d == 0 {
        return Some(eigenvalue_count(h));
    }
    if d < k {
        return Some(MomentValue::zero());
    }
    if d == k {
        if m == 0 {
            return Some(MomentValue::zero());
        }
        let v = BigInt::from(m)
            * BigInt::from(k as u64).pow(k as u32 - 1)
            * BigInt::from(k as u64 - 1).pow((n - k) as u32);
        return Some(BigRational::from_integer(v));
    }
    if k >= 3 && h.is_linear() {
        if d % k != 0 && h.is_bicyclic() {
            return Some(MomentValue::zero());
        }
        if d == 2 * k {
            return Some(second_significant_moment(h));
        }
        if d == 3 * k {
            return Some(third_significant_moment(h));
        }
    }
    None
}

/// S_2k for a linear host with k >= 3: single edges walked twice plus
/// two-edge paths.
fn second_significant_moment(h: &UniformHypergraph) -> MomentValue {
    let k = h.k() as u64;
    let n = h.n() as u64;
    let mut total = BigInt::zero();
    let p1 = h.m() as u64;
    if p1 > 0 {
        total += BigInt::from(p1) * pow(k, k - 1) * pow(k - 1, n - k);
    }
    let p2 = counting::count_paths(h, 2).expect("pattern edge size matches host");
    if p2 > 0 {
        total += BigInt::from(2u64) * BigInt::from(p2) * pow(k, 2 * k - 3) * pow(k - 1, n + 1 - 2 * k);
    }
    BigRational::from_integer(total)
}

/// S_3k for a linear host with k >= 3: contributions from single edges,
/// two- and three-edge paths, three-edge stars, and triangles.
fn third_significant_moment(h: &UniformHypergraph) -> MomentValue {
    let k = h.k() as u64;
    let n = h.n() as u64;
    let mut total = BigInt::zero();
    let p1 = h.m() as u64;
    if p1 > 0 {
        total += BigInt::from(p1) * pow(k, k - 1) * pow(k - 1, n - k);
    }
    let p2 = counting::count_paths(h, 2).expect("pattern edge size matches host");
    if p2 > 0 {
        total += BigInt::from(6u64) * BigInt::from(p2) * pow(k, 2 * k - 3) * pow(k - 1, n + 1 - 2 * k);
    }
    let p3 = counting::count_paths(h, 3).expect("pattern edge size matches host");
    if p3 > 0 {
        total += BigInt::from(3u64) * BigInt::from(p3) * pow(k, 3 * k - 5) * pow(k - 1, n + 2 - 3 * k);
    }
    let s3 = counting::count_star3(h).expect("pattern edge size matches host");
    if s3 > 0 {
        total += BigInt::from(6u64) * BigInt::from(s3) * pow(k, 3 * k - 5) * pow(k - 1, n + 2 - 3 * k);
    }
    let c3 = counting::count_cycles(h, 3).expect("pattern edge size matches host");
    if c3 > 0 {
        total += BigInt::from(24u64) * BigInt::from(c3) * pow(k, 3 * k - 6) * pow(k - 1, n + 3 - 3 * k);
    }
    BigRational::from_integer(total)
}

fn pow(base: u64, exp: u64) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// Moments 0..=d_max, each through the cheapest correct route.
pub fn moment_sequence(
    h: &UniformHypergraph,
    d_max: usize,
    guard: &mut CostGuard,
) -> Result<Vec<MomentEntry>, MomentError> {
    (0..=d_max)
        .map(|d| match closed_form_moment(h, d) {
            Some(value) => Ok(MomentEntry {
                d,
                value,
                method: MomentMethod::Closed,
            }),
            None => spectral_moment_exact(h, d, guard).map(|value| MomentEntry {
                d,
                value,
                method: MomentMethod::Enumerated,
            }),
        })
        .collect()
}

/// Trace of the d-th adjacency matrix power, for ordinary graphs (k = 2).
///
/// The spectral moment of a graph is exactly this trace, computed here by
/// plain matrix powering with no shared machinery, so it serves as an
/// independent cross-check of the enumerator.
pub fn graph_trace_oracle(h: &UniformHypergraph, d: usize) -> Result<BigUint, MomentError> {
    if h.k() != 2 {
        return Err(MomentError::NotAGraph { k: h.k() });
    }
    let n = h.n();
    if d == 0 {
        return Ok(BigUint::from(n));
    }
    let mut adj = vec![BigUint::zero(); n * n];
    for e in h.edges() {
        adj[e[0] * n + e[1]] = BigUint::one();
        adj[e[1] * n + e[0]] = BigUint::one();
    }
    let mut power = adj.clone();
    for _ in 1..d {
        let mut next = vec![BigUint::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if power[i * n + l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = &power[i * n + l] * &adj[l * n + j];
                    next[i * n + j] += term;
                }
            }
        }
        power = next;
    }
    Ok((0..n).map(|i| power[i * n + i].clone()).sum())
}

fn factorial(x: u64) -> BigUint {
    (2..=x).map(BigUint::from).product()
}

fn factorial_table(max: u64) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(max as usize + 1);
    let mut value = BigUint::one();
    table.push(value.clone());
    for i in 1..=max {
        value *= BigUint::from(i);
        table.push(value.clone());
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_b, build_c, power_cycle, power_path};

    fn rational(v: i64) -> MomentValue {
        ratio_from_int(v)
    }

    #[test]
    fn single_edge_low_moments() {
        let h = power_path(1, 3).unwrap();
        let mut guard = CostGuard::default();
        let values: Vec<MomentValue> = (0..=3)
            .map(|d| spectral_moment_exact(&h, d, &mut guard).unwrap())
            .collect();
        assert_eq!(values, [rational(12), rational(0), rational(0), rational(9)]);
        for (d, v) in values.iter().enumerate() {
            assert_eq!(closed_form_moment(&h, d).as_ref(), Some(v));
        }
    }

    #[test]
    fn edge_count_moment_on_families() {
        let mut guard = CostGuard::default();
        for h in [
            build_b(3, 3, 3, 0, 3).unwrap(),
            build_c(3, 3, 1, 2, 1).unwrap(),
            power_cycle(4, 4).unwrap(),
        ] {
            let closed = closed_form_moment(&h, h.k()).unwrap();
            let enumerated = spectral_moment_exact(&h, h.k(), &mut guard).unwrap();
            assert_eq!(closed, enumerated);
        }
    }

    #[test]
    fn theta_second_significant_moment() {
        let theta = build_c(3, 3, 1, 2, 1).unwrap();
        let closed = closed_form_moment(&theta, 6).unwrap();
        assert_eq!(closed, rational(1656));
        let mut guard = CostGuard::default();
        let enumerated = spectral_moment_exact(&theta, 6, &mut guard).unwrap();
        assert_eq!(enumerated, rational(1656));
    }

    #[test]
    fn theta_third_significant_moment_two_ways() {
        let theta = build_c(3, 3, 1, 2, 1).unwrap();
        let closed = closed_form_moment(&theta, 9).unwrap();
        let mut guard = CostGuard::default();
        let enumerated = spectral_moment_exact(&theta, 9, &mut guard).unwrap();
        assert_eq!(closed, enumerated);
    }

    #[test]
    fn non_divisible_orders_vanish_on_bicyclic_hosts() {
        let theta = build_c(3, 3, 1, 2, 1).unwrap();
        let mut guard = CostGuard::default();
        for d in [4, 5, 7, 8] {
            assert_eq!(closed_form_moment(&theta, d), Some(rational(0)));
            assert_eq!(
                spectral_moment_exact(&theta, d, &mut guard).unwrap(),
                rational(0),
                "order {d}"
            );
        }
    }

    #[test]
    fn graph_moments_match_traces() {
        let square = power_cycle(4, 2).unwrap();
        let mut guard = CostGuard::default();
        for d in 0..=8 {
            let trace = graph_trace_oracle(&square, d).unwrap();
            let moment = spectral_moment_exact(&square, d, &mut guard).unwrap();
            assert_eq!(moment, BigRational::from_integer(BigInt::from(trace)), "order {d}");
        }
        let path = power_path(2, 2).unwrap();
        assert_eq!(graph_trace_oracle(&path, 4).unwrap(), BigUint::from(8u32));
        assert!(matches!(
            graph_trace_oracle(&power_path(1, 3).unwrap(), 2),
            Err(MomentError::NotAGraph { k: 3 })
        ));
    }

    #[test]
    fn moment_sequence_marks_methods() {
        let theta = build_c(3, 3, 1, 2, 1).unwrap();
        let mut guard = CostGuard::default();
        let seq = moment_sequence(&theta, 12, &mut guard).unwrap();
        assert_eq!(seq.len(), 13);
        for entry in &seq {
            let expect_closed = entry.d <= 3 || entry.d % 3 != 0 || entry.d == 6 || entry.d == 9;
            assert_eq!(
                entry.method == MomentMethod::Closed,
                expect_closed,
                "order {}",
                entry.d
            );
        }
        assert_eq!(seq[6].value, rational(1656));
    }

    #[test]
    fn eulerian_config_on_a_twice_walked_edge() {
        let h = power_path(1, 3).unwrap();
        let rooted: Vec<RootedEdge> = [0, 0, 1, 1, 2, 2]
            .iter()
            .map(|&root| RootedEdge { edge: 0, root })
            .collect();
        let config = EulerianConfig::new(&h, &rooted).unwrap();
        assert_eq!(config.tau(), &BigUint::from(12u32));
        assert_eq!(config.out_degree_product(), BigUint::from(64u32));
        assert_eq!(config.ordering_weight(), BigUint::one());
        assert_eq!(config.root_count(0), 2);
        // An unbalanced choice of roots is rejected.
        let lopsided: Vec<RootedEdge> = [0, 0, 0, 1, 1, 2]
            .iter()
            .map(|&root| RootedEdge { edge: 0, root })
            .collect();
        assert!(EulerianConfig::new(&h, &lopsided).is_none());
    }

    #[test]
    fn guard_interrupts_long_enumerations() {
        let theta = build_c(3, 3, 1, 2, 1).unwrap();
        let mut guard = CostGuard::new(2);
        assert!(matches!(
            spectral_moment_exact(&theta, 9, &mut guard),
            Err(MomentError::Guard(_))
        ));
    }
}
