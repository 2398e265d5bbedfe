//! Exact spectral moments of uniform hypergraphs, and the orderings they induce.
//!
//! A `k`-uniform hypergraph `H` on `n` vertices has an order-`k` adjacency
//! tensor whose entries are `1/(k-1)!` on the index tuples that permute an
//! edge. The `d`-th spectral moment `S_d(H)` is the sum of the `d`-th powers
//! of all `n(k-1)^(n-1)` tensor eigenvalues. Rather than solving for
//! eigenvalues (which are algebraic numbers of high degree), this crate
//! evaluates `S_d` exactly as a rational number through a combinatorial trace
//! formula: a weighted sum over `d`-tuples of rooted edges whose union of
//! rooted directed stars is an Eulerian multidigraph, each tuple weighted by
//! its arborescence count and the reciprocal of its out-degree product.
//!
//! On top of the moment evaluator sit the pieces needed to study how moments
//! sort hypergraphs:
//!
//! * [`hypergraph`]: the validated [`UniformHypergraph`] type and its
//!   structural predicates (linearity, connectivity, girth, colorings).
//! * [`canon`]: canonical forms, so isomorphic hypergraphs compare equal.
//! * [`families`]: deterministic constructors for power paths, cycles and
//!   stars, the two shapes of linear bicyclic hypergraphs (vertex-disjoint or
//!   one-point-joined cycle pairs, and theta-like three-path joins), pendant
//!   attachments, and exhaustive enumeration of linear bicyclic isomorphism
//!   classes at desk scale.
//! * [`counting`]: small-pattern subhypergraph counts (paths, cycles, stars
//!   and two specific five-edge shapes) plus the first Zagreb index.
//! * [`moments`]: the exact evaluator itself, closed forms for low orders,
//!   and a `k = 2` matrix-trace oracle.
//! * [`order`]: lexicographic comparison of moment sequences, extremal-member
//!   search inside an isomorphism class, and replication of the published
//!   extremal claims this crate exists to check.
//!
//! Everything outside the operating system boundary is deterministic: all
//! containers iterate in sorted order, so equal inputs produce byte-equal
//! outputs. The crate is `no_std` (with `alloc`) unless the default `std`
//! feature is enabled; `std` only forwards to the arithmetic dependencies.
//!
//! ```
//! use hypermoments::{families, moments, CostGuard};
//!
//! // A single 3-uniform edge has S_0 = 12, S_1 = S_2 = 0, S_3 = 9.
//! let h = families::power_path(1, 3).unwrap();
//! let mut guard = CostGuard::default();
//! let s3 = moments::spectral_moment_exact(&h, 3, &mut guard).unwrap();
//! assert_eq!(s3, moments::ratio_from_int(9));
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arborescence;
pub mod canon;
pub mod counting;
pub mod families;
mod guard;
pub mod hypergraph;
pub mod moments;
pub mod order;

pub use canon::{canonical_form, CanonicalForm};
pub use guard::{CostGuard, GuardExceeded};
pub use hypergraph::{DegreeProfile, HypergraphError, UniformHypergraph};
pub use moments::MomentValue;
