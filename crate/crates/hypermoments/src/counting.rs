//! Subhypergraph counting for the small patterns that appear in moment
//! formulas: paths, cycles, the 3-edge star, two 4-edge coalescence
//! gadgets, and the first Zagreb index.
//!
//! All counts are over edge subsets: a pattern X occurs once for every
//! S ⊆ E(H) with |S| = |E(X)| whose spanned subhypergraph (on the union of
//! S's vertices) is isomorphic to X. That matches how the moment closed
//! forms weigh their configurations, where each term ranges over edge
//! tuples, not vertex-induced substructures.

use alloc::vec::Vec;
use core::fmt;

use crate::canon::canonical_form;
use crate::families::{self, FamilyError};
use crate::hypergraph::UniformHypergraph;

/// Failure of a counting operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    /// Host and pattern have different edge sizes.
    MismatchedEdgeSize {
        /// Edge size of the host.
        host_k: usize,
        /// Edge size of the pattern.
        pattern_k: usize,
    },
    /// Building a named pattern failed (bad t, for instance).
    Pattern(FamilyError),
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::MismatchedEdgeSize { host_k, pattern_k } => write!(
                f,
                "cannot count a pattern with edge size {pattern_k} inside a host with edge size {host_k}"
            ),
            CountError::Pattern(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CountError {}

impl From<FamilyError> for CountError {
    fn from(e: FamilyError) -> Self {
        CountError::Pattern(e)
    }
}

/// A pattern paired with its count in some host hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternCount {
    /// The counted pattern.
    pub pattern: UniformHypergraph,
    /// Number of matching edge subsets.
    pub count: u64,
}

/// First Zagreb index: the sum of squared vertex degrees.
pub fn zagreb_index(h: &UniformHypergraph) -> u64 {
    h.degree_sequence().iter().map(|d| (d * d) as u64).sum()
}

/// Number of edge subsets of `h` spanning a subhypergraph isomorphic to
/// `pattern`.
///
/// Connected patterns are counted by walking connected edge subsets only;
/// disconnected patterns fall back to all subsets of the right size.
/// Patterns containing isolated vertices never match (spanned
/// subhypergraphs have none).
pub fn count_pattern(
    h: &UniformHypergraph,
    pattern: &UniformHypergraph,
) -> Result<u64, CountError> {
    if h.k() != pattern.k() {
        return Err(CountError::MismatchedEdgeSize {
            host_k: h.k(),
            pattern_k: pattern.k(),
        });
    }
    let t = pattern.m();
    if t > h.m() {
        return Ok(0);
    }
    let target = canonical_form(pattern);
    let mut count = 0u64;
    let mut tally = |subset: &[usize]| {
        if subset.len() == t && canonical_form(&h.restriction(subset)) == target {
            count += 1;
        }
        Ok::<(), core::convert::Infallible>(())
    };
    if pattern.is_connected() {
        for_each_connected_edge_subset(h, t, &mut tally).unwrap_or(());
    } else {
        for_each_edge_subset_of_size(h, t, &mut tally).unwrap_or(());
    }
    Ok(count)
}

/// Count of power paths with t edges (t = 1 counts single edges, so this
/// is m).
pub fn count_paths(h: &UniformHypergraph, t: usize) -> Result<u64, CountError> {
    let pattern = families::power_path(t, h.k())?;
    count_pattern(h, &pattern)
}

/// Count of power cycles with t edges. Lengths below 3 cannot occur in a
/// simple hypergraph, so they count 0.
pub fn count_cycles(h: &UniformHypergraph, t: usize) -> Result<u64, CountError> {
    if t < 3 {
        return Ok(0);
    }
    let pattern = families::power_cycle(t, h.k())?;
    count_pattern(h, &pattern)
}

/// Count of 3-edge power stars.
pub fn count_star3(h: &UniformHypergraph) -> Result<u64, CountError> {
    let pattern = families::power_star(3, h.k())?;
    count_pattern(h, &pattern)
}

/// Count of the hypertree coalescence gadget with t edges.
pub fn count_q(h: &UniformHypergraph, t: usize) -> Result<u64, CountError> {
    let pattern = families::build_q(t, h.k())?;
    count_pattern(h, &pattern)
}

/// Count of the unicyclic coalescence gadget with t edges.
pub fn count_w(h: &UniformHypergraph, t: usize) -> Result<u64, CountError> {
    let pattern = families::build_w(t, h.k())?;
    count_pattern(h, &pattern)
}

/// Visits every connected edge subset of size 1..=max_size exactly once.
///
/// Classic exclusive-extension enumeration on the edge adjacency graph:
/// subsets grow from their minimum edge, and an edge may only join through
/// a neighbor not already reachable, so each subset has a unique build
/// order.
pub(crate) fn for_each_connected_edge_subset<E>(
    h: &UniformHypergraph,
    max_size: usize,
    visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    if max_size == 0 || h.m() == 0 {
        return Ok(());
    }
    let m = h.m();
    let mut neighbors: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
    for a in 0..m {
        for b in a + 1..m {
            if h.edge(a).iter().any(|v| h.edge(b).contains(v)) {
                neighbors[a].push(b);
                neighbors[b].push(a);
            }
        }
    }
    let mut subset: Vec<usize> = Vec::with_capacity(max_size);
    for root in 0..m {
        subset.push(root);
        visit(&subset)?;
        if max_size > 1 {
            let ext: Vec<usize> = neighbors[root].iter().copied().filter(|&e| e > root).collect();
            let mut seen = alloc::vec![false; m];
            seen[root] = true;
            for &e in &ext {
                seen[e] = true;
            }
            extend_subset(h, &neighbors, root, &mut subset, &ext, &mut seen, max_size, visit)?;
        }
        subset.pop();
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn extend_subset<E>(
    h: &UniformHypergraph,
    neighbors: &[Vec<usize>],
    root: usize,
    subset: &mut Vec<usize>,
    ext: &[usize],
    seen: &mut [bool],
    max_size: usize,
    visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    for (i, &w) in ext.iter().enumerate() {
        subset.push(w);
        visit(subset)?;
        if subset.len() < max_size {
            // Extensions: the untried remainder plus w's exclusive
            // neighbors (those not reachable from earlier choices).
            let mut next_ext: Vec<usize> = ext[i + 1..].to_vec();
            let mut added: Vec<usize> = Vec::new();
            for &u in &neighbors[w] {
                if u > root && !seen[u] {
                    seen[u] = true;
                    added.push(u);
                    next_ext.push(u);
                }
            }
            extend_subset(h, neighbors, root, subset, &next_ext, seen, max_size, visit)?;
            for &u in &added {
                seen[u] = false;
            }
        }
        subset.pop();
    }
    Ok(())
}

/// Visits every edge subset of exactly `size` edges (connected or not).
pub(crate) fn for_each_edge_subset_of_size<E>(
    h: &UniformHypergraph,
    size: usize,
    visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    fn recurse<E>(
        m: usize,
        size: usize,
        start: usize,
        subset: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> Result<(), E>,
    ) -> Result<(), E> {
        if subset.len() == size {
            return visit(subset);
        }
        let needed = size - subset.len();
        for e in start..=m.saturating_sub(needed) {
            subset.push(e);
            recurse(m, size, e + 1, subset, visit)?;
            subset.pop();
        }
        Ok(())
    }
    if size > h.m() {
        return Ok(());
    }
    let mut subset = Vec::with_capacity(size);
    recurse(h.m(), size, 0, &mut subset, visit)
}
