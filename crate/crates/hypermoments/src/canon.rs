//! Canonical forms: equal byte strings exactly for isomorphic hypergraphs.
//!
//! Degree-one vertices of a k-uniform hypergraph are interchangeable within
//! their edge: any bijection between two hypergraphs' edge lists that
//! matches the edges' degree-two-or-more "cores" extends to a full
//! isomorphism by pairing up the remaining degree-one vertices edge by edge
//! and the isolated vertices arbitrarily. So the isomorphism class is
//! exactly captured by `(k, n, m)` plus the multiset of cores viewed as a
//! labeled structure on the skeleton (the vertices of degree >= 2).
//!
//! That quotient is what makes canonicalization cheap here: power
//! hypergraphs carry `k - 2` interchangeable fresh vertices per edge, which
//! would explode a naive labeling search (a star with q edges would offer
//! q! * (k-2)!^q equivalent labelings), while its skeleton is tiny. On the
//! skeleton we run ordinary partition refinement with individualization and
//! take the lexicographically smallest serialization over the search tree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::UniformHypergraph;

/// Opaque isomorphism invariant: two hypergraphs get equal forms iff they
/// are isomorphic. Ordering is lexicographic on the underlying bytes, which
/// gives every enumeration in this crate its deterministic output order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    /// The raw encoded form.
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for byte in &self.0 {
            write!(f, "{byte:02x}")?;
        }
        Ok(())
    }
}

/// Computes the canonical form of a hypergraph.
pub fn canonical_form(h: &UniformHypergraph) -> CanonicalForm {
    let deg = h.degree_sequence();
    let mut skeleton_id = vec![usize::MAX; h.n()];
    let mut skeleton_size = 0usize;
    for v in 0..h.n() {
        if deg.degree(v) >= 2 {
            skeleton_id[v] = skeleton_size;
            skeleton_size += 1;
        }
    }
    // Cores: per edge, its skeleton vertices. Repeats across edges are
    // meaningful (several pendant edges at one vertex share a core).
    let cores: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|edge| {
            edge.iter()
                .filter(|&&v| skeleton_id[v] != usize::MAX)
                .map(|&v| skeleton_id[v])
                .collect()
        })
        .collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); skeleton_size];
    for (e, core) in cores.iter().enumerate() {
        for &v in core {
            incident[v].push(e);
        }
    }

    let searcher = Searcher {
        size: skeleton_size,
        cores: &cores,
        incident: &incident,
    };
    let mut colors = vec![0usize; skeleton_size];
    searcher.refine(&mut colors);
    let mut best: Option<Vec<u8>> = None;
    searcher.descend(&colors, &mut best);
    let labels = best.expect("canonical search always reaches a leaf");

    let mut bytes = Vec::with_capacity(8 + labels.len());
    push_u16(&mut bytes, h.k());
    push_u16(&mut bytes, h.n());
    push_u16(&mut bytes, h.m());
    push_u16(&mut bytes, skeleton_size);
    bytes.extend_from_slice(&labels);
    CanonicalForm(bytes)
}

fn push_u16(out: &mut Vec<u8>, value: usize) {
    debug_assert!(value <= u16::MAX as usize, "desk-scale sizes fit in u16");
    out.extend_from_slice(&(value as u16).to_be_bytes());
}

struct Searcher<'a> {
    size: usize,
    cores: &'a [Vec<usize>],
    incident: &'a [Vec<usize>],
}

impl Searcher<'_> {
    /// Iteratively refines a coloring until stable. Colors are dense ranks
    /// `0..c`; a vertex's refinement signature combines its color with the
    /// multiset of incident cores, each seen as (size, member colors).
    fn refine(&self, colors: &mut [usize]) {
        if self.size == 0 {
            return;
        }
        loop {
            let before = count_colors(colors);
            let mut sigs: Vec<(Vec<(usize, Vec<usize>)>, usize)> = (0..self.size)
                .map(|v| {
                    let mut local: Vec<(usize, Vec<usize>)> = self.incident[v]
                        .iter()
                        .map(|&e| {
                            let mut member_colors: Vec<usize> =
                                self.cores[e].iter().map(|&u| colors[u]).collect();
                            member_colors.sort_unstable();
                            (self.cores[e].len(), member_colors)
                        })
                        .collect();
                    local.sort();
                    (local, v)
                })
                .collect();
            sigs.sort_by(|a, b| (colors[a.1], &a.0).cmp(&(colors[b.1], &b.0)));
            let mut next = vec![0usize; self.size];
            let mut rank = 0usize;
            for i in 0..sigs.len() {
                if i > 0 {
                    let prev = &sigs[i - 1];
                    let cur = &sigs[i];
                    if (colors[prev.1], &prev.0) != (colors[cur.1], &cur.0) {
                        rank += 1;
                    }
                }
                next[sigs[i].1] = rank;
            }
            let after = rank + 1;
            colors.copy_from_slice(&next);
            if after == before {
                return;
            }
        }
    }

    /// Depth-first individualization over the first non-singleton color
    /// class, keeping the smallest leaf serialization seen.
    fn descend(&self, colors: &[usize], best: &mut Option<Vec<u8>>) {
        match self.first_non_singleton(colors) {
            None => {
                let code = self.serialize(colors);
                if best.as_ref().is_none_or(|b| code < *b) {
                    *best = Some(code);
                }
            }
            Some(class) => {
                for &v in &class {
                    // Split v off in front of its old classmates, keeping
                    // all other color relations intact.
                    let mut branched: Vec<usize> = colors
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| 2 * c + usize::from(u != v && c == colors[v]))
                        .collect();
                    self.refine(&mut branched);
                    self.descend(&branched, best);
                }
            }
        }
    }

    fn first_non_singleton(&self, colors: &[usize]) -> Option<Vec<usize>> {
        let color_count = count_colors(colors);
        for c in 0..color_count {
            let class: Vec<usize> = (0..self.size).filter(|&v| colors[v] == c).collect();
            if class.len() > 1 {
                return Some(class);
            }
        }
        None
    }

    /// Leaf encoding: relabel skeleton vertices by their (now unique)
    /// colors and emit the sorted core multiset, each core length-prefixed.
    fn serialize(&self, colors: &[usize]) -> Vec<u8> {
        let mut relabeled: Vec<Vec<usize>> = self
            .cores
            .iter()
            .map(|core| {
                let mut mapped: Vec<usize> = core.iter().map(|&v| colors[v]).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        relabeled.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let mut out = Vec::new();
        for core in relabeled {
            push_u16(&mut out, core.len());
            for v in core {
                push_u16(&mut out, v);
            }
        }
        out
    }
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |c| c + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(k: usize, n: usize, edges: &[&[usize]]) -> UniformHypergraph {
        UniformHypergraph::new(k, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let g = h(3, 7, &[&[0, 1, 5], &[0, 2, 3], &[1, 2, 4], &[3, 4, 6]]);
        let base = canonical_form(&g);
        // A handful of hand-picked permutations plus rotations.
        let perms: [&[usize]; 4] = [
            &[6, 5, 4, 3, 2, 1, 0],
            &[1, 2, 3, 4, 5, 6, 0],
            &[2, 0, 1, 6, 5, 4, 3],
            &[0, 2, 1, 4, 3, 6, 5],
        ];
        for perm in perms {
            let relabeled = g.relabel(perm).unwrap();
            assert_eq!(canonical_form(&relabeled), base);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic_shapes() {
        // 3-uniform triangle vs. 3-edge star vs. 3-edge path: same k, m.
        let c3 = h(3, 6, &[&[0, 1, 3], &[1, 2, 4], &[0, 2, 5]]);
        let s3 = h(3, 7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        let p3 = h(3, 7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert_ne!(canonical_form(&c3), canonical_form(&s3));
        assert_ne!(canonical_form(&s3), canonical_form(&p3));
        assert_ne!(canonical_form(&c3), canonical_form(&p3));
    }

    #[test]
    fn distinguishes_the_two_smallest_bicyclic_classes() {
        // Theta with separate bridge vs. theta re-entering one edge: the
        // two 4-edge 3-uniform bicyclic shapes.
        let a = h(3, 7, &[&[0, 1, 5], &[0, 2, 3], &[1, 2, 4], &[3, 4, 6]]);
        let b = h(3, 7, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[0, 5, 6]]);
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn degree_one_vertices_are_interchangeable() {
        // Same star, different assignment of leaf ids.
        let a = h(3, 7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        let b = h(3, 7, &[&[0, 6, 3], &[0, 2, 5], &[0, 1, 4]]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn isolated_vertices_change_the_form() {
        let a = h(3, 3, &[&[0, 1, 2]]);
        let b = h(3, 4, &[&[0, 1, 2]]);
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn graph_paths_and_stars_differ() {
        let p3 = h(2, 4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let s3 = h(2, 4, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert_ne!(canonical_form(&p3), canonical_form(&s3));
        let p3_relabeled = h(2, 4, &[&[3, 2], &[2, 0], &[0, 1]]);
        assert_eq!(canonical_form(&p3), canonical_form(&p3_relabeled));
    }

    #[test]
    fn empty_skeleton_still_encodes_edge_count() {
        let one = h(3, 3, &[&[0, 1, 2]]);
        let two = h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_ne!(canonical_form(&one), canonical_form(&two));
    }
}
