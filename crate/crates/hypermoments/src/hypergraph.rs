//! The validated k-uniform hypergraph type and its structural predicates.
//!
//! A hypergraph here is a set of k-element edges over dense vertex ids
//! `0..n`. Everything downstream (counting, moments, ordering) assumes the
//! invariants enforced by [`UniformHypergraph::new`]: every edge has exactly
//! `k` distinct in-range vertices, no edge repeats, edges and the edge list
//! are sorted. Vertex ids carry no meaning beyond identity; isomorphism is
//! handled separately by canonical forms.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Validation or precondition failure for hypergraph construction and
/// structure queries. Positions refer to the edge list as supplied by the
/// caller, before normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    /// Edge size `k` must be at least 2.
    EdgeSizeTooSmall {
        /// The rejected edge size.
        k: usize,
    },
    /// An edge does not have exactly `k` vertices.
    WrongEdgeSize {
        /// Index of the offending edge in the input list.
        edge: usize,
        /// Number of vertex entries found.
        found: usize,
        /// Required edge size.
        k: usize,
    },
    /// An edge lists the same vertex twice.
    RepeatedVertex {
        /// Index of the offending edge in the input list.
        edge: usize,
        /// The repeated vertex id.
        vertex: usize,
    },
    /// An edge mentions a vertex id outside `0..n`.
    VertexOutOfRange {
        /// Index of the offending edge in the input list.
        edge: usize,
        /// The out-of-range vertex id.
        vertex: usize,
        /// Vertex count of the hypergraph.
        n: usize,
    },
    /// Two edges are equal as vertex sets.
    DuplicateEdge {
        /// Input index of the earlier copy.
        first: usize,
        /// Input index of the later copy.
        second: usize,
    },
    /// A permutation passed to [`UniformHypergraph::relabel`] is not a
    /// bijection on `0..n`.
    InvalidPermutation,
    /// The operation is only defined for linear hypergraphs.
    NotLinear,
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::EdgeSizeTooSmall { k } => {
                write!(f, "edge size k={k} is too small; uniform hypergraphs need k >= 2")
            }
            HypergraphError::WrongEdgeSize { edge, found, k } => {
                write!(f, "edge {edge} has {found} vertices, expected exactly {k}")
            }
            HypergraphError::RepeatedVertex { edge, vertex } => {
                write!(f, "edge {edge} repeats vertex {vertex}")
            }
            HypergraphError::VertexOutOfRange { edge, vertex, n } => {
                write!(f, "edge {edge} mentions vertex {vertex}, outside 0..{n}")
            }
            HypergraphError::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} are the same vertex set")
            }
            HypergraphError::InvalidPermutation => {
                write!(f, "relabeling map is not a permutation of the vertex ids")
            }
            HypergraphError::NotLinear => {
                write!(f, "operation requires a linear hypergraph (pairwise edge intersections of size <= 1)")
            }
        }
    }
}

impl core::error::Error for HypergraphError {}

/// An immutable k-uniform hypergraph on vertices `0..n`.
///
/// Stored normalized: each edge ascending, edge list sorted, no duplicate
/// edges. Two values are `==` exactly when they are equal as labeled
/// hypergraphs; use [`crate::canonical_form`] for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UniformHypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    /// Validates and normalizes a hypergraph.
    ///
    /// Edges may be given in any internal order; they are sorted here.
    /// Isolated vertices (ids in `0..n` not covered by any edge) are legal.
    pub fn new(
        k: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::EdgeSizeTooSmall { k });
        }
        let mut normalized: Vec<(Vec<usize>, usize)> = Vec::with_capacity(edges.len());
        for (idx, edge) in edges.into_iter().enumerate() {
            if edge.len() != k {
                return Err(HypergraphError::WrongEdgeSize {
                    edge: idx,
                    found: edge.len(),
                    k,
                });
            }
            let mut sorted = edge;
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(HypergraphError::RepeatedVertex {
                        edge: idx,
                        vertex: pair[0],
                    });
                }
            }
            if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge: idx,
                    vertex: v,
                    n,
                });
            }
            normalized.push((sorted, idx));
        }
        normalized.sort();
        for pair in normalized.windows(2) {
            if pair[0].0 == pair[1].0 {
                let (a, b) = (pair[0].1, pair[1].1);
                return Err(HypergraphError::DuplicateEdge {
                    first: a.min(b),
                    second: a.max(b),
                });
            }
        }
        Ok(UniformHypergraph {
            k,
            n,
            edges: normalized.into_iter().map(|(e, _)| e).collect(),
        })
    }

    /// Edge size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices (including isolated ones).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The sorted edge list.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// A single edge by index.
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Vertex degrees: how many edges contain each vertex.
    pub fn degree_sequence(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                degrees[v] += 1;
            }
        }
        DegreeProfile { degrees }
    }

    /// For each vertex, the indices of the edges containing it.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(i);
            }
        }
        inc
    }

    /// True iff any two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                let mut shared = 0usize;
                let (mut x, mut y) = (0usize, 0usize);
                while x < a.len() && y < b.len() {
                    match a[x].cmp(&b[y]) {
                        core::cmp::Ordering::Less => x += 1,
                        core::cmp::Ordering::Greater => y += 1,
                        core::cmp::Ordering::Equal => {
                            shared += 1;
                            if shared > 1 {
                                return false;
                            }
                            x += 1;
                            y += 1;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff every pair of vertices is joined by a walk through edges.
    ///
    /// Hypergraphs with zero or one vertex count as connected; an isolated
    /// vertex in a larger hypergraph makes it disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let inc = self.incidence();
        let mut seen_v = vec![false; self.n];
        let mut seen_e = vec![false; self.m()];
        let mut stack = vec![0usize];
        seen_v[0] = true;
        let mut reached = 1usize;
        while let Some(v) = stack.pop() {
            for &e in &inc[v] {
                if seen_e[e] {
                    continue;
                }
                seen_e[e] = true;
                for &u in &self.edges[e] {
                    if !seen_v[u] {
                        seen_v[u] = true;
                        reached += 1;
                        stack.push(u);
                    }
                }
            }
        }
        reached == self.n
    }

    /// True iff the hypergraph is connected with `n = m(k-1) - 1`.
    ///
    /// Connected k-uniform hypergraphs satisfy `n <= m(k-1) + 1`, with
    /// equality exactly for hypertrees; each unit of deficit adds one
    /// independent cycle. Deficit two is the bicyclic case.
    pub fn is_bicyclic(&self) -> bool {
        self.m() >= 1
            && self.n + 1 == self.m() * (self.k - 1)
            && self.is_connected()
    }

    /// Length (edge count) of a shortest hypercycle subhypergraph, or
    /// `None` when the hypergraph is acyclic. Only defined for linear
    /// hypergraphs.
    ///
    /// A length-t hypercycle is the k-th power of the graph cycle C_t:
    /// t edges, consecutive ones sharing exactly one vertex. In a linear
    /// hypergraph a shortest closed vertex-edge walk cannot have chords or
    /// repeated intersections, so its edge set forms exactly that shape;
    /// we find it as half the length of a shortest cycle in the bipartite
    /// vertex-edge incidence graph.
    pub fn girth(&self) -> Result<Option<usize>, HypergraphError> {
        if !self.is_linear() {
            return Err(HypergraphError::NotLinear);
        }
        // Incidence graph nodes: 0..n vertices, then n..n+m edge nodes.
        let total = self.n + self.m();
        let mut adj = vec![Vec::new(); total];
        for (e, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                adj[v].push(self.n + e);
                adj[self.n + e].push(v);
            }
        }
        // Shortest cycle through each incidence (v, e): remove that edge of
        // the incidence graph, then BFS from v to e. Exact and cheap at the
        // scales this crate targets.
        let mut best: Option<usize> = None;
        for (e, edge) in self.edges.iter().enumerate() {
            let enode = self.n + e;
            for &v in edge {
                let mut dist = vec![usize::MAX; total];
                dist[v] = 0;
                let mut queue = alloc::collections::VecDeque::new();
                queue.push_back(v);
                'bfs: while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        // Skip the removed incidence in both directions.
                        if (x == v && y == enode) || (x == enode && y == v) {
                            continue;
                        }
                        if dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            if y == enode {
                                break 'bfs;
                            }
                            queue.push_back(y);
                        }
                    }
                }
                if dist[enode] != usize::MAX {
                    let cycle = dist[enode] + 1;
                    best = Some(best.map_or(cycle, |b: usize| b.min(cycle)));
                }
            }
        }
        Ok(best.map(|c| c / 2))
    }

    /// Vertices of degree one, ascending.
    pub fn cored_vertices(&self) -> Vec<usize> {
        self.degree_sequence()
            .iter()
            .enumerate()
            .filter(|&(_, d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Indices of edges containing exactly `k - 1` degree-one vertices.
    pub fn pendant_edges(&self) -> Vec<usize> {
        let deg = self.degree_sequence();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, edge)| {
                edge.iter().filter(|&&v| deg.degree(v) == 1).count() == self.k - 1
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff every edge contains at least one degree-one vertex.
    pub fn is_cored_hypergraph(&self) -> bool {
        let deg = self.degree_sequence();
        self.edges
            .iter()
            .all(|edge| edge.iter().any(|&v| deg.degree(v) == 1))
    }

    /// A proper k-coloring where every edge sees each color exactly once,
    /// if one exists. The witness maps vertex id to color `0..k`; isolated
    /// vertices get color 0.
    ///
    /// Backtracking search over vertices in a connectivity-aware order,
    /// with restricted-growth symmetry breaking on color introduction.
    pub fn k_partition(&self) -> Option<Vec<usize>> {
        let order = self.search_order();
        let inc = self.incidence();
        let mut colors = vec![usize::MAX; self.n];
        if self.assign_k_colors(&order, 0, &inc, &mut colors, 0) {
            for c in colors.iter_mut() {
                if *c == usize::MAX {
                    *c = 0;
                }
            }
            Some(colors)
        } else {
            None
        }
    }

    /// True iff [`UniformHypergraph::k_partition`] finds a witness.
    pub fn is_k_partite(&self) -> bool {
        self.k_partition().is_some()
    }

    fn assign_k_colors(
        &self,
        order: &[usize],
        pos: usize,
        inc: &[Vec<usize>],
        colors: &mut [usize],
        used: usize,
    ) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        // Restricted growth: a brand-new color may only be the next unused
        // one, killing the k! palette symmetry.
        let limit = (used + 1).min(self.k);
        'candidate: for c in 0..limit {
            for &e in &inc[v] {
                for &u in &self.edges[e] {
                    if colors[u] == c {
                        continue 'candidate;
                    }
                }
            }
            colors[v] = c;
            let next_used = used.max(c + 1);
            if self.assign_k_colors(order, pos + 1, inc, colors, next_used) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }

    /// A nonempty proper vertex set `V1` meeting every edge in exactly one
    /// vertex, if one exists; returned ascending.
    ///
    /// Existence of such a set forces the adjacency tensor's spectrum to be
    /// invariant under multiplication by k-th roots of unity, which is what
    /// makes the off-multiple moments vanish.
    pub fn hm_bipartition(&self) -> Option<Vec<usize>> {
        if self.n < 2 {
            return None;
        }
        if self.m() == 0 {
            // No edges: the exactly-one condition is vacuous, any split works.
            return Some(vec![0]);
        }
        let order = self.search_order();
        let inc = self.incidence();
        // state: None undecided, Some(true) in V1, Some(false) out.
        let mut side = vec![None; self.n];
        let mut hits = vec![0usize; self.m()];
        let mut undecided: Vec<usize> = self.edges.iter().map(|e| e.len()).collect();
        if self.assign_hm(&order, 0, &inc, &mut side, &mut hits, &mut undecided) {
            let v1: Vec<usize> = (0..self.n).filter(|&v| side[v] == Some(true)).collect();
            if !v1.is_empty() && v1.len() < self.n {
                return Some(v1);
            }
        }
        None
    }

    /// True iff [`UniformHypergraph::hm_bipartition`] finds a witness.
    pub fn is_hm_bipartite(&self) -> bool {
        self.hm_bipartition().is_some()
    }

    fn assign_hm(
        &self,
        order: &[usize],
        pos: usize,
        inc: &[Vec<usize>],
        side: &mut [Option<bool>],
        hits: &mut [usize],
        undecided: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(pos) else {
            // Every edge must have exactly one V1 vertex, and V1 must be
            // nonempty. Vertices never reached by `order` are isolated and
            // stay outside V1; properness then follows because every edge
            // keeps k-1 vertices outside V1.
            return hits.iter().all(|&h| h == 1) && side.iter().any(|s| *s == Some(true));
        };
        'choice: for put_in_v1 in [true, false] {
            for &e in &inc[v] {
                let h = hits[e] + usize::from(put_in_v1);
                let u = undecided[e] - 1;
                if h > 1 || (u == 0 && h == 0) {
                    continue 'choice;
                }
            }
            side[v] = Some(put_in_v1);
            for &e in &inc[v] {
                hits[e] += usize::from(put_in_v1);
                undecided[e] -= 1;
            }
            if self.assign_hm(order, pos + 1, inc, side, hits, undecided) {
                return true;
            }
            side[v] = None;
            for &e in &inc[v] {
                hits[e] -= usize::from(put_in_v1);
                undecided[e] += 1;
            }
        }
        false
    }

    /// Non-isolated vertices in a BFS order where (within a connected
    /// component) each vertex after the first shares an edge with an
    /// earlier one. Keeps the partition searches propagating constraints
    /// early instead of guessing independent regions.
    fn search_order(&self) -> Vec<usize> {
        let inc = self.incidence();
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        for start in 0..self.n {
            if seen[start] || inc[start].is_empty() {
                continue;
            }
            seen[start] = true;
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &e in &inc[v] {
                    for &u in &self.edges[e] {
                        if !seen[u] {
                            seen[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
        order
    }

    /// The same hypergraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, HypergraphError> {
        if perm.len() != self.n {
            return Err(HypergraphError::InvalidPermutation);
        }
        let mut seen = vec![false; self.n];
        for &image in perm {
            if image >= self.n || seen[image] {
                return Err(HypergraphError::InvalidPermutation);
            }
            seen[image] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|edge| edge.iter().map(|&v| perm[v]).collect())
            .collect();
        UniformHypergraph::new(self.k, self.n, edges)
    }

    /// The subhypergraph spanned by a set of edge indices, with vertices
    /// renumbered densely (ascending by original id). Carries no isolated
    /// vertices: `n` of the result is the size of the union of the chosen
    /// edges.
    pub fn restriction(&self, edge_ids: &[usize]) -> UniformHypergraph {
        let mut vertices = BTreeSet::new();
        for &e in edge_ids {
            vertices.extend(self.edges[e].iter().copied());
        }
        let rename: alloc::collections::BTreeMap<usize, usize> = vertices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let edges = edge_ids
            .iter()
            .map(|&e| self.edges[e].iter().map(|v| rename[v]).collect())
            .collect();
        UniformHypergraph::new(self.k, vertices.len(), edges)
            .expect("restriction of a valid hypergraph stays valid")
    }
}

/// Vertex degrees of a hypergraph, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
}

impl DegreeProfile {
    /// Degree of one vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// Iterator over all degrees in vertex-id order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().copied()
    }

    /// Largest degree (0 for an edgeless hypergraph).
    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Sum of all degrees; equals `k * m`.
    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Degrees as a descending multiset, for shape comparisons.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}
