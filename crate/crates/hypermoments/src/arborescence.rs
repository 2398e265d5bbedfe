//! Arc-multiset digraphs and spanning-arborescence counts.
//!
//! The moment formula weighs each admissible configuration by the number
//! of spanning arborescences of its arc multiset, oriented toward a root.
//! For Eulerian digraphs that number is the same for every root (the BEST
//! theorem's counting argument), so the public entry point checks the
//! Eulerian property, picks the smallest non-isolated vertex, and
//! evaluates one cofactor of the out-degree Laplacian.
//!
//! Determinants run in fraction-free integer elimination over `i128`
//! first, falling back to arbitrary precision only when an intermediate
//! product would overflow. Desk-scale inputs never hit the fallback, but
//! correctness must not depend on that.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Directed graph with arc multiplicities on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDigraph {
    n: usize,
    mult: Vec<u64>,
}

impl MultiDigraph {
    /// Digraph on `n` vertices with no arcs.
    pub fn new(n: usize) -> Self {
        MultiDigraph {
            n,
            mult: alloc::vec![0; n * n],
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `count` parallel arcs from `from` to `to`.
    pub fn add_arcs(&mut self, from: usize, to: usize, count: u64) {
        assert!(from < self.n && to < self.n, "arc endpoint out of range");
        self.mult[from * self.n + to] += count;
    }

    /// Multiplicity of the arc from `from` to `to`.
    pub fn multiplicity(&self, from: usize, to: usize) -> u64 {
        self.mult[from * self.n + to]
    }

    /// Number of arcs leaving `v`, with multiplicity.
    pub fn out_degree(&self, v: usize) -> u64 {
        self.mult[v * self.n..(v + 1) * self.n].iter().sum()
    }

    /// Number of arcs entering `v`, with multiplicity.
    pub fn in_degree(&self, v: usize) -> u64 {
        (0..self.n).map(|u| self.mult[u * self.n + v]).sum()
    }

    /// Vertices that touch at least one arc.
    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.out_degree(v) > 0 || self.in_degree(v) > 0)
            .collect()
    }

    /// Whether every vertex has equal in- and out-degree.
    pub fn is_balanced(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == self.in_degree(v))
    }

    /// Whether the non-isolated vertices form one weakly connected piece.
    pub fn is_weakly_connected(&self) -> bool {
        let support = self.non_isolated();
        if support.len() <= 1 {
            return true;
        }
        let mut seen = alloc::vec![false; self.n];
        let mut queue = alloc::vec![support[0]];
        seen[support[0]] = true;
        while let Some(v) = queue.pop() {
            for u in 0..self.n {
                if !seen[u]
                    && (self.mult[v * self.n + u] > 0 || self.mult[u * self.n + v] > 0)
                {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        support.iter().all(|&v| seen[v])
    }

    /// Balanced and weakly connected on its non-isolated vertices.
    pub fn is_eulerian(&self) -> bool {
        self.is_balanced() && self.is_weakly_connected()
    }
}

/// Error for arborescence counts requested on a non-Eulerian digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotEulerian;

impl fmt::Display for NotEulerian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph is not Eulerian (unbalanced or weakly disconnected)")
    }
}

impl core::error::Error for NotEulerian {}

/// Number of spanning arborescences of an Eulerian digraph.
///
/// Spanning means spanning the non-isolated vertices; the arborescence is
/// oriented toward the smallest of them. For Eulerian digraphs the choice
/// of root does not change the count, which debug builds re-verify with a
/// second root. A digraph with no arcs counts 1 (the empty arborescence).
pub fn arborescence_count(g: &MultiDigraph) -> Result<BigUint, NotEulerian> {
    if !g.is_eulerian() {
        return Err(NotEulerian);
    }
    let support = g.non_isolated();
    if support.len() <= 1 {
        return Ok(BigUint::one());
    }
    let count = laplacian_minor(g, &support, 0);
    debug_assert_eq!(
        count,
        laplacian_minor(g, &support, support.len() - 1),
        "arborescence count changed with the root on an Eulerian digraph"
    );
    Ok(count)
}

/// Arborescences toward `vertices[root_pos]`, spanning `vertices`.
///
/// No Eulerian check; `vertices` must list every non-isolated vertex. The
/// moment enumerator calls this on digraphs that are Eulerian by
/// construction.
pub(crate) fn laplacian_minor(g: &MultiDigraph, vertices: &[usize], root_pos: usize) -> BigUint {
    let s = vertices.len();
    debug_assert!(s >= 1 && root_pos < s);
    if s == 1 {
        return BigUint::one();
    }
    let rows: Vec<usize> = vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != root_pos)
        .map(|(_, &v)| v)
        .collect();
    let dim = s - 1;
    let mut mat: Vec<i128> = Vec::with_capacity(dim * dim);
    for &v in &rows {
        let out = g.out_degree(v) as i128;
        for &u in &rows {
            let a = g.multiplicity(v, u) as i128;
            mat.push(if v == u { out - a } else { -a });
        }
    }
    let det = match det_bareiss_i128(mat.clone(), dim) {
        Some(d) => BigInt::from(d),
        None => det_bareiss_bigint(
            mat.into_iter().map(BigInt::from).collect(),
            dim,
        ),
    };
    debug_or_release_nonnegative(det)
}

fn debug_or_release_nonnegative(det: BigInt) -> BigUint {
    assert!(
        !det.is_negative(),
        "Laplacian cofactor came out negative; arc multiplicities corrupted"
    );
    det.magnitude().clone()
}

/// Fraction-free elimination in fixed precision. Returns None if any
/// intermediate value overflows.
fn det_bareiss_i128(mut m: Vec<i128>, dim: usize) -> Option<i128> {
    if dim == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for c in 0..dim {
        let pivot = match (c..dim).find(|&r| m[r * dim + c] != 0) {
            Some(p) => p,
            None => return Some(0),
        };
        if pivot != c {
            for j in 0..dim {
                m.swap(pivot * dim + j, c * dim + j);
            }
            sign = -sign;
        }
        let pc = m[c * dim + c];
        for i in c + 1..dim {
            for j in c + 1..dim {
                let lhs = m[i * dim + j].checked_mul(pc)?;
                let rhs = m[i * dim + c].checked_mul(m[c * dim + j])?;
                // Exact by the fraction-free identity.
                m[i * dim + j] = lhs.checked_sub(rhs)? / prev;
            }
            m[i * dim + c] = 0;
        }
        prev = pc;
    }
    m[dim * dim - 1].checked_mul(sign)
}

fn det_bareiss_bigint(mut m: Vec<BigInt>, dim: usize) -> BigInt {
    if dim == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for c in 0..dim {
        let pivot = match (c..dim).find(|&r| !m[r * dim + c].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != c {
            for j in 0..dim {
                m.swap(pivot * dim + j, c * dim + j);
            }
            negate = !negate;
        }
        for i in c + 1..dim {
            for j in c + 1..dim {
                let num = &m[i * dim + j] * &m[c * dim + c] - &m[i * dim + c] * &m[c * dim + j];
                m[i * dim + j] = num / &prev;
            }
            m[i * dim + c] = BigInt::zero();
        }
        prev = m[c * dim + c].clone();
    }
    let det = m.pop().expect("dim >= 1");
    if negate {
        -det
    } else {
        det
    }
}
