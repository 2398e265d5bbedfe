//! Constructors for the named hypergraph families and exhaustive
//! enumeration of linear bicyclic isomorphism classes.
//!
//! The k-th power of a graph G replaces every graph edge by a k-edge,
//! padding it with k-2 fresh degree-one vertices. Power paths, cycles and
//! stars are written P_q, C_q, S_q below (q counts edges). On top of those,
//! two shapes exhaust the linear bicyclic world:
//!
//! * B-shapes: two power cycles of lengths p and q joined by a power path
//!   of length l (l = 0 collapses the path to one shared vertex). The
//!   variant index picks which vertices get identified: both cycle
//!   (degree-two) vertices, one cycle vertex and one degree-one vertex, or
//!   two degree-one vertices.
//! * C-shapes: three power paths of lengths p, q, l glued at their ends
//!   into a theta; the variants let one or both junctions sit on fresh
//!   vertices inside the middle path's end edges instead of its endpoints.
//!
//! Both families come with pendant attachments (extra hypertree edges
//! hanging off one vertex), plus two specific coalescence gadgets used by
//! the moment comparisons: a hypertree Q_t and a unicyclic W_t.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::guard::{CostGuard, GuardExceeded};
use crate::hypergraph::UniformHypergraph;

/// Parameter or input failure in a family constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// The constructor needs a larger edge size than requested.
    EdgeSizeTooSmall {
        /// Requested edge size.
        k: usize,
        /// Minimum edge size this constructor supports.
        required: usize,
    },
    /// Power cycles need at least three edges.
    CycleTooShort {
        /// Requested cycle length.
        q: usize,
    },
    /// Power stars need at least one edge.
    EmptyStar,
    /// Parameters outside the admissible domain of the B-shape.
    BParameters {
        /// Variant index.
        i: usize,
        /// First cycle length.
        p: usize,
        /// Connecting path length.
        l: usize,
        /// Second cycle length.
        q: usize,
    },
    /// Parameters outside the admissible domain of the C-shape.
    CParameters {
        /// Variant index.
        i: usize,
        /// First path length.
        p: usize,
        /// Middle path length.
        q: usize,
        /// Third path length.
        l: usize,
    },
    /// Coalescence gadgets Q_t / W_t need t >= 4 and k >= 3.
    GadgetParameters {
        /// Requested edge count.
        t: usize,
        /// Requested edge size.
        k: usize,
    },
    /// The base graph of a power construction is not simple.
    GraphNotSimple {
        /// Index of the offending graph edge.
        edge: usize,
    },
    /// A vertex id is outside the hypergraph being modified.
    InvalidVertex {
        /// The offending vertex id.
        vertex: usize,
        /// Vertex count of the hypergraph.
        n: usize,
    },
    /// The requested edge set is not a pendant path at the given vertex.
    NotAPendantPath {
        /// Which check failed, for diagnostics.
        reason: &'static str,
    },
    /// The destination of a pendant-path move lies inside the moved path.
    TargetInsidePath {
        /// The offending destination vertex.
        vertex: usize,
    },
    /// An attachment site descriptor did not resolve to a vertex.
    UnresolvedSite,
    /// Enumeration exceeded its work budget.
    Guard(GuardExceeded),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::EdgeSizeTooSmall { k, required } => {
                write!(f, "edge size {k} too small, this construction needs k >= {required}")
            }
            FamilyError::CycleTooShort { q } => {
                write!(f, "power cycles need at least 3 edges, got {q}")
            }
            FamilyError::EmptyStar => write!(f, "power stars need at least one edge"),
            FamilyError::BParameters { i, p, l, q } => {
                write!(f, "inadmissible B-shape parameters i={i}, p={p}, l={l}, q={q}")
            }
            FamilyError::CParameters { i, p, q, l } => {
                write!(f, "inadmissible C-shape parameters i={i}, p={p}, q={q}, l={l}")
            }
            FamilyError::GadgetParameters { t, k } => {
                write!(f, "coalescence gadgets need t >= 4 and k >= 3, got t={t}, k={k}")
            }
            FamilyError::GraphNotSimple { edge } => {
                write!(f, "graph edge {edge} is a loop, a duplicate, or out of range")
            }
            FamilyError::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} is outside 0..{n}")
            }
            FamilyError::NotAPendantPath { reason } => {
                write!(f, "edge set is not a pendant path at the given vertex: {reason}")
            }
            FamilyError::TargetInsidePath { vertex } => {
                write!(f, "destination vertex {vertex} lies inside the moved path")
            }
            FamilyError::UnresolvedSite => {
                write!(f, "attachment site does not resolve to a vertex")
            }
            FamilyError::Guard(g) => g.fmt(f),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<GuardExceeded> for FamilyError {
    fn from(g: GuardExceeded) -> Self {
        FamilyError::Guard(g)
    }
}

/// Assembles hypergraphs from pieces with freely allocated vertex labels,
/// merging identified labels and renumbering densely at the end.
struct Builder {
    k: usize,
    next: usize,
    edges: Vec<Vec<usize>>,
    merges: Vec<(usize, usize)>,
}

/// A power path piece: junction labels (length q+1) and the fresh
/// degree-one labels of each of its q edges.
struct PathPiece {
    junctions: Vec<usize>,
    cored: Vec<Vec<usize>>,
}

/// A power cycle piece: the q cycle labels and per-edge fresh labels.
struct CyclePiece {
    cycle: Vec<usize>,
    cored: Vec<Vec<usize>>,
}

impl Builder {
    fn new(k: usize) -> Self {
        Builder {
            k,
            next: 0,
            edges: Vec::new(),
            merges: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        let label = self.next;
        self.next += 1;
        label
    }

    fn fresh_many(&mut self, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.fresh()).collect()
    }

    /// Adds an edge on the given labels, padded with fresh labels to size
    /// k; returns the fresh labels.
    fn edge(&mut self, base: &[usize]) -> Vec<usize> {
        let pad = self.fresh_many(self.k - base.len());
        let mut edge = base.to_vec();
        edge.extend_from_slice(&pad);
        self.edges.push(edge);
        pad
    }

    fn path(&mut self, q: usize) -> PathPiece {
        let junctions = self.fresh_many(q + 1);
        let cored = (0..q)
            .map(|i| self.edge(&[junctions[i], junctions[i + 1]]))
            .collect();
        PathPiece { junctions, cored }
    }

    fn cycle(&mut self, q: usize) -> CyclePiece {
        let cycle = self.fresh_many(q);
        let cored = (0..q)
            .map(|i| self.edge(&[cycle[i], cycle[(i + 1) % q]]))
            .collect();
        CyclePiece { cycle, cored }
    }

    fn identify(&mut self, a: usize, b: usize) {
        self.merges.push((a, b));
    }

    fn finish(self) -> UniformHypergraph {
        // Union labels, name each class by its least member, then number
        // the classes densely in that order.
        let mut parent: Vec<usize> = (0..self.next).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let nxt = parent[cur];
                parent[cur] = root;
                cur = nxt;
            }
            root
        }
        for &(a, b) in &self.merges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                // Point the larger at the smaller so roots are minima.
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
        let mut dense = BTreeMap::new();
        for label in 0..self.next {
            let root = find(&mut parent, label);
            let next_id = dense.len();
            dense.entry(root).or_insert(next_id);
        }
        let n = dense.len();
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|edge| edge.iter().map(|&v| dense[&find(&mut parent, v)]).collect())
            .collect();
        UniformHypergraph::new(self.k, n, edges)
            .expect("assembled family instances are valid hypergraphs")
    }
}

fn require_k(k: usize, required: usize) -> Result<(), FamilyError> {
    if k < required {
        Err(FamilyError::EdgeSizeTooSmall { k, required })
    } else {
        Ok(())
    }
}

/// The k-th power of a simple graph: every graph edge becomes a k-edge by
/// adding k-2 fresh degree-one vertices. Graph vertices keep their ids;
/// fresh vertices are appended per edge in input order, then the whole
/// result is renumbered densely.
pub fn power_of_graph(
    n: usize,
    graph_edges: &[(usize, usize)],
    k: usize,
) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    let mut seen = alloc::collections::BTreeSet::new();
    for (idx, &(u, v)) in graph_edges.iter().enumerate() {
        if u == v || u >= n || v >= n || !seen.insert((u.min(v), u.max(v))) {
            return Err(FamilyError::GraphNotSimple { edge: idx });
        }
    }
    let mut b = Builder::new(k);
    let vertices = b.fresh_many(n);
    for &(u, v) in graph_edges {
        b.edge(&[vertices[u], vertices[v]]);
    }
    Ok(b.finish())
}

/// Power path with q edges (q = 0 gives the one-vertex hypergraph).
pub fn power_path(q: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    let mut b = Builder::new(k);
    b.path(q);
    Ok(b.finish())
}

/// Power cycle with q >= 3 edges.
pub fn power_cycle(q: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    if q < 3 {
        return Err(FamilyError::CycleTooShort { q });
    }
    let mut b = Builder::new(k);
    b.cycle(q);
    Ok(b.finish())
}

/// Power star with q >= 1 edges around one center.
pub fn power_star(q: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    if q == 0 {
        return Err(FamilyError::EmptyStar);
    }
    let mut b = Builder::new(k);
    let center = b.fresh();
    for _ in 0..q {
        let leaf = b.fresh();
        b.edge(&[center, leaf]);
    }
    Ok(b.finish())
}

/// Admissibility of B-shape parameters (subscript order p, l, q).
pub fn b_domain_ok(i: usize, k: usize, p: usize, l: usize, q: usize) -> bool {
    let _ = l; // any l >= 0 is admissible
    let base = (1..=3).contains(&i) && q >= p && p >= 3 && k >= 2;
    // Variants 2 and 3 glue at degree-one vertices, which power cycles
    // only have for k >= 3.
    base && (i == 1 || k >= 3)
}

/// Two power cycles of lengths p and q joined by a power path of length l
/// (the subscript order of the family name: p, l, q). Variant `i` chooses
/// the glued vertices: 1 = both cycle vertices, 2 = a cycle vertex of the
/// p-cycle and a degree-one vertex of the q-cycle, 3 = degree-one vertices
/// of both cycles. With l = 0 the two glue points coincide.
///
/// Requires q >= p >= 3; variants 2 and 3 need k >= 3. The result has
/// (p+q+l)(k-1) - 1 vertices and p+q+l edges.
pub fn build_b(
    i: usize,
    k: usize,
    p: usize,
    l: usize,
    q: usize,
) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    if !b_domain_ok(i, k, p, l, q) {
        return Err(FamilyError::BParameters { i, p, l, q });
    }
    let mut b = Builder::new(k);
    let cp = b.cycle(p);
    let cq = b.cycle(q);
    let path = b.path(l);
    let (start, end) = (path.junctions[0], path.junctions[l]);
    match i {
        1 => {
            b.identify(cp.cycle[0], start);
            b.identify(cq.cycle[0], end);
        }
        2 => {
            b.identify(cp.cycle[0], start);
            b.identify(cq.cored[0][0], end);
        }
        _ => {
            b.identify(cp.cored[0][0], start);
            b.identify(cq.cored[0][0], end);
        }
    }
    Ok(b.finish())
}

/// Variant 2 with the glue roles swapped: the path leaves the p-cycle at a
/// degree-one vertex and enters the q-cycle at a cycle vertex. For p = q
/// this is isomorphic to `build_b(2, ..)`, but for p < q it is a distinct
/// isomorphism class (the degree-three vertex sits on the longer cycle
/// instead of the shorter one) that no `build_b` call produces, so the
/// enumerator seeds it separately.
pub(crate) fn build_b2_reflected(
    k: usize,
    p: usize,
    l: usize,
    q: usize,
) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 3)?;
    if !(q > p && p >= 3) {
        return Err(FamilyError::BParameters { i: 2, p, l, q });
    }
    let mut b = Builder::new(k);
    let cp = b.cycle(p);
    let cq = b.cycle(q);
    let path = b.path(l);
    b.identify(cp.cored[0][0], path.junctions[0]);
    b.identify(cq.cycle[0], path.junctions[l]);
    Ok(b.finish())
}

/// Admissibility of C-shape parameters (subscript order p, q, l).
pub fn c_domain_ok(i: usize, k: usize, p: usize, q: usize, l: usize) -> bool {
    if k < 2 {
        return false;
    }
    match i {
        1 => (p == 1 && 1 < q && q <= l) || (1 < p && p <= q && q <= l),
        2 => k >= 3 && ((q == 1 && 1 < p && p <= l) || (q > 1 && 1 <= p && p <= q - 1 && q - 1 <= l)),
        3 => {
            k >= 3
                && ((q > 2 && 1 <= p && p <= q - 2 && q - 2 <= l)
                    || (q == 2 && 1 <= p && p <= l)
                    || (q == 1 && k > 3 && 1 < p && p <= l))
        }
        _ => false,
    }
}

/// Theta shape: three power paths of lengths p, q, l glued at their ends
/// (the subscript order of the family name: p, q, l). Variant `i` places
/// the third path's endpoints: 1 = both shared path endpoints, 2 = one
/// shared endpoint and a degree-one vertex inside the last edge of the
/// middle path, 3 = degree-one vertices inside the first and last edges of
/// the middle path (two distinct ones when the middle path is one edge,
/// which needs k > 3).
///
/// The result has (p+q+l)(k-1) - 1 vertices and p+q+l edges.
pub fn build_c(
    i: usize,
    k: usize,
    p: usize,
    q: usize,
    l: usize,
) -> Result<UniformHypergraph, FamilyError> {
    require_k(k, 2)?;
    if !c_domain_ok(i, k, p, q, l) {
        return Err(FamilyError::CParameters { i, p, q, l });
    }
    let mut b = Builder::new(k);
    let pp = b.path(p);
    let pq = b.path(q);
    let pl = b.path(l);
    let (u0, u_end) = (pp.junctions[0], pp.junctions[p]);
    let (v0, v_end) = (pq.junctions[0], pq.junctions[q]);
    let (w0, w_end) = (pl.junctions[0], pl.junctions[l]);
    b.identify(u0, v0);
    b.identify(u_end, v_end);
    match i {
        1 => {
            b.identify(w0, v0);
            b.identify(w_end, v_end);
        }
        2 => {
            b.identify(w0, v0);
            b.identify(w_end, pq.cored[q - 1][0]);
        }
        _ => {
            b.identify(w0, pq.cored[0][0]);
            let far = if q == 1 {
                // Same middle edge on both sides: pick a second fresh
                // vertex, guaranteed by k > 3.
                pq.cored[0][1]
            } else {
                pq.cored[q - 1][0]
            };
            b.identify(w_end, far);
        }
    }
    Ok(b.finish())
}

/// `count` new pendant edges at vertex `v`: each is `{v}` plus k-1 fresh
/// vertices.
pub fn attach_pendant_edges(
    h: &UniformHypergraph,
    v: usize,
    count: usize,
) -> Result<UniformHypergraph, FamilyError> {
    if v >= h.n() {
        return Err(FamilyError::InvalidVertex { vertex: v, n: h.n() });
    }
    let k = h.k();
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    let mut next = h.n();
    for _ in 0..count {
        let mut edge = vec![v];
        for _ in 0..k - 1 {
            edge.push(next);
            next += 1;
        }
        edges.push(edge);
    }
    Ok(UniformHypergraph::new(k, next, edges)
        .expect("pendant edges only introduce fresh vertices"))
}

/// A power path of `len` edges hanging from vertex `v` (len = 0 is a
/// no-op; len = 1 is a single pendant edge).
pub fn attach_pendant_path(
    h: &UniformHypergraph,
    v: usize,
    len: usize,
) -> Result<UniformHypergraph, FamilyError> {
    if v >= h.n() {
        return Err(FamilyError::InvalidVertex { vertex: v, n: h.n() });
    }
    let k = h.k();
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    let mut next = h.n();
    let mut anchor = v;
    for _ in 0..len {
        let junction = next;
        next += 1;
        let mut edge = vec![anchor, junction];
        for _ in 0..k - 2 {
            edge.push(next);
            next += 1;
        }
        edges.push(edge);
        anchor = junction;
    }
    Ok(UniformHypergraph::new(k, next, edges)
        .expect("pendant paths only introduce fresh vertices"))
}

/// Hypertree gadget: a power path of t-1 edges with one extra edge glued
/// at a degree-one vertex of the path's second edge (the degree-one
/// vertices next to the degree-two vertex of the first, pendant, edge).
/// t edges, t(k-1)+1 vertices; needs t >= 4 (the second edge must not
/// itself be pendant) and k >= 3 (it must have fresh vertices).
pub fn build_q(t: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    if t < 4 || k < 3 {
        return Err(FamilyError::GadgetParameters { t, k });
    }
    let mut b = Builder::new(k);
    let path = b.path(t - 1);
    let site = path.cored[1][0];
    b.edge(&[site]);
    Ok(b.finish())
}

/// Unicyclic gadget: a power cycle of t-1 edges with one extra edge glued
/// at a degree-one vertex (for k = 2, where cycles have none, at a cycle
/// vertex). t edges, t(k-1) vertices; needs t >= 4.
pub fn build_w(t: usize, k: usize) -> Result<UniformHypergraph, FamilyError> {
    if t < 4 || k < 2 {
        return Err(FamilyError::GadgetParameters { t, k });
    }
    let mut b = Builder::new(k);
    let cycle = b.cycle(t - 1);
    let site = if k >= 3 { cycle.cored[0][0] } else { cycle.cycle[0] };
    b.edge(&[site]);
    Ok(b.finish())
}

/// Moves the pendant path consisting of `path_edges` from its attachment
/// vertex `u` to vertex `v`: the path edge containing `u` is replaced by
/// the same edge with `u` swapped for `v`. Everything else is unchanged,
/// so the degree of `u` drops by one and the degree of `v` rises by one.
///
/// `path_edges` must form a power path one of whose end vertices is `u`,
/// attached to the rest of the hypergraph only through `u` (so `u` has
/// degree >= 2 and every other path vertex meets no outside edge), and `v`
/// must lie outside the path.
pub fn move_pendant_path(
    h: &UniformHypergraph,
    path_edges: &[usize],
    u: usize,
    v: usize,
) -> Result<UniformHypergraph, FamilyError> {
    if u >= h.n() {
        return Err(FamilyError::InvalidVertex { vertex: u, n: h.n() });
    }
    if v >= h.n() {
        return Err(FamilyError::InvalidVertex { vertex: v, n: h.n() });
    }
    let mut sorted = path_edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != path_edges.len() || sorted.iter().any(|&e| e >= h.m()) {
        return Err(FamilyError::NotAPendantPath {
            reason: "edge indices repeat or are out of range",
        });
    }
    if sorted.is_empty() {
        return Err(FamilyError::NotAPendantPath { reason: "no edges given" });
    }

    // Shape check: the chosen edges must form a power path.
    let restriction = h.restriction(&sorted);
    let len = sorted.len();
    let reference = power_path(len, h.k()).expect("k already validated");
    if canonical_form(&restriction) != canonical_form(&reference) {
        return Err(FamilyError::NotAPendantPath {
            reason: "edges do not form a power path",
        });
    }

    // Degrees within the path and in the whole hypergraph.
    let mut path_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in &sorted {
        for &w in h.edge(e) {
            *path_degree.entry(w).or_insert(0) += 1;
        }
    }
    let full_degree = h.degree_sequence();
    if path_degree.get(&u) != Some(&1) {
        return Err(FamilyError::NotAPendantPath {
            reason: "attachment vertex is not a degree-one vertex of the path",
        });
    }
    if full_degree.degree(u) < 2 {
        return Err(FamilyError::NotAPendantPath {
            reason: "attachment vertex does not connect the path to anything",
        });
    }
    for (&w, &d) in &path_degree {
        if w != u && full_degree.degree(w) != d {
            return Err(FamilyError::NotAPendantPath {
                reason: "a path vertex other than the attachment meets an outside edge",
            });
        }
    }
    if path_degree.contains_key(&v) {
        return Err(FamilyError::TargetInsidePath { vertex: v });
    }

    // The edge to rewrite: the unique path edge containing u; it must be
    // an end edge of the path (at most one vertex shared with the rest of
    // the path).
    let &host = sorted
        .iter()
        .find(|&&e| h.edge(e).contains(&u))
        .expect("u has path degree one");
    let junctions_in_host = h
        .edge(host)
        .iter()
        .filter(|&&w| path_degree[&w] >= 2)
        .count();
    if junctions_in_host > 1 {
        return Err(FamilyError::NotAPendantPath {
            reason: "attachment vertex sits on an interior edge of the path",
        });
    }

    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, edge)| {
            if idx == host {
                edge.iter().map(|&w| if w == u { v } else { w }).collect()
            } else {
                edge.clone()
            }
        })
        .collect();
    Ok(UniformHypergraph::new(h.k(), h.n(), edges)
        .expect("pendant-path moves cannot create duplicate edges"))
}

/// Site descriptor for pendant attachments in a [`FamilySpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttachSite {
    /// An explicit vertex id of the hypergraph built so far.
    Vertex(usize),
    /// The smallest-id vertex of maximum degree in the hypergraph built so
    /// far (the canonical way to say "the high-degree junction").
    MaxDegree,
}

/// One pendant attachment: a power path of `path_len` edges at `site`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    /// Where to glue.
    pub site: AttachSite,
    /// How many path edges to hang there (1 = a single pendant edge).
    pub path_len: usize,
}

/// Which named family to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    /// Power path with q edges.
    Path {
        /// Edge count.
        q: usize,
    },
    /// Power cycle with q edges.
    Cycle {
        /// Edge count.
        q: usize,
    },
    /// Power star with q edges.
    Star {
        /// Edge count.
        q: usize,
    },
    /// B-shape (two cycles and a connector).
    B {
        /// Variant index (1..=3).
        i: usize,
        /// First cycle length.
        p: usize,
        /// Connector path length.
        l: usize,
        /// Second cycle length.
        q: usize,
    },
    /// C-shape (theta of three paths).
    C {
        /// Variant index (1..=3).
        i: usize,
        /// First path length.
        p: usize,
        /// Middle path length.
        q: usize,
        /// Third path length.
        l: usize,
    },
    /// Hypertree coalescence gadget with t edges.
    Q {
        /// Edge count.
        t: usize,
    },
    /// Unicyclic coalescence gadget with t edges.
    W {
        /// Edge count.
        t: usize,
    },
}

/// Symbolic description of a family instance: a base shape plus pendant
/// attachments applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    /// The base shape.
    pub kind: FamilyKind,
    /// Edge size.
    pub k: usize,
    /// Pendant paths applied left to right; sites are resolved against
    /// the hypergraph as built so far.
    pub attachments: Vec<Attachment>,
}

impl FamilySpec {
    /// Builds the described hypergraph.
    pub fn build(&self) -> Result<UniformHypergraph, FamilyError> {
        let mut h = match self.kind {
            FamilyKind::Path { q } => power_path(q, self.k)?,
            FamilyKind::Cycle { q } => power_cycle(q, self.k)?,
            FamilyKind::Star { q } => power_star(q, self.k)?,
            FamilyKind::B { i, p, l, q } => build_b(i, self.k, p, l, q)?,
            FamilyKind::C { i, p, q, l } => build_c(i, self.k, p, q, l)?,
            FamilyKind::Q { t } => build_q(t, self.k)?,
            FamilyKind::W { t } => build_w(t, self.k)?,
        };
        for attachment in &self.attachments {
            let site = match attachment.site {
                AttachSite::Vertex(v) => v,
                AttachSite::MaxDegree => {
                    let deg = h.degree_sequence();
                    let top = deg.max();
                    (0..h.n())
                        .find(|&v| deg.degree(v) == top)
                        .ok_or(FamilyError::UnresolvedSite)?
                }
            };
            h = attach_pendant_path(&h, site, attachment.path_len)?;
        }
        Ok(h)
    }
}

/// All linear bicyclic isomorphism classes with the given edge size and
/// edge count, optionally filtered to one girth; one representative per
/// class, sorted by canonical form.
///
/// Every linear bicyclic hypergraph is a B- or C-shape base (counting the
/// reflected variant-2 join) carrying pendant hypertrees, and stripping any
/// pendant edge of such a hypergraph leaves a smaller one. So the search
/// seeds every admissible base with at most m edges and grows one pendant
/// edge at a time (at every vertex), deduplicating by canonical form per
/// level. The guard is charged one unit per candidate examined.
pub fn enumerate_linear_bicyclic(
    k: usize,
    m: usize,
    girth: Option<usize>,
    guard: &mut CostGuard,
) -> Result<Vec<UniformHypergraph>, FamilyError> {
    require_k(k, 2)?;
    let mut levels: BTreeMap<usize, BTreeMap<CanonicalForm, UniformHypergraph>> = BTreeMap::new();
    let seed = |h: UniformHypergraph,
                levels: &mut BTreeMap<usize, BTreeMap<CanonicalForm, UniformHypergraph>>| {
        levels
            .entry(h.m())
            .or_default()
            .entry(canonical_form(&h))
            .or_insert(h);
    };
    for i in 1..=3 {
        for p in 3..=m {
            for q in p..=m {
                for l in 0..=m.saturating_sub(p + q) {
                    if p + q + l <= m && b_domain_ok(i, k, p, l, q) {
                        guard.charge(1)?;
                        seed(build_b(i, k, p, l, q)?, &mut levels);
                    }
                }
            }
        }
    }
    if k >= 3 {
        // Variant 2 is the one asymmetric join, so its reflection across
        // the connecting path is a separate class whenever p < q.
        for p in 3..=m {
            for q in (p + 1)..=m {
                for l in 0..=m.saturating_sub(p + q) {
                    if p + q + l <= m {
                        guard.charge(1)?;
                        seed(build_b2_reflected(k, p, l, q)?, &mut levels);
                    }
                }
            }
        }
    }
    for i in 1..=3 {
        for p in 1..=m {
            for q in 1..=m {
                for l in 1..=m {
                    if p + q + l <= m && c_domain_ok(i, k, p, q, l) {
                        guard.charge(1)?;
                        seed(build_c(i, k, p, q, l)?, &mut levels);
                    }
                }
            }
        }
    }

    // Growing a level only ever feeds the next one, so one ascending sweep
    // visits every intermediate size after all its members exist.
    for size in 0..m {
        let current: Vec<UniformHypergraph> = levels
            .get(&size)
            .map(|level| level.values().cloned().collect())
            .unwrap_or_default();
        for h in current {
            for v in 0..h.n() {
                guard.charge(1)?;
                let grown = attach_pendant_edges(&h, v, 1)?;
                seed(grown, &mut levels);
            }
        }
    }

    let mut result: Vec<UniformHypergraph> = levels
        .remove(&m)
        .map(|level| level.into_values().collect())
        .unwrap_or_default();
    if let Some(g) = girth {
        result.retain(|h| h.girth().ok().flatten() == Some(g));
    }
    Ok(result)
}
