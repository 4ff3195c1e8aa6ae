//! Circles (vertex-simple closed walks) as first-class values.
//!
//! A circle is stored as a cyclic sequence of edge ids in canonical form:
//! rotated and possibly reflected so the smallest edge id comes first and its
//! smaller cyclic neighbor second. Canonical storage makes equality, `Ord`,
//! and set membership well defined. Digons — two parallel edges — are valid
//! circles of length 2.

use std::collections::BTreeSet;

use crate::graph::{EdgeId, GraphError, SignedGraph, VertexId};

/// Sign classification of a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    AllPositive,
    WeaklyNegative,
    Other,
}

/// A vertex-simple circle of a particular graph, held in canonical edge-id
/// order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circle {
    edge_ids: Vec<EdgeId>,
}

impl Circle {
    /// Validates that `edge_ids` traces a vertex-simple closed walk in `g`
    /// and stores it canonically.
    pub fn new(g: &SignedGraph, edge_ids: Vec<EdgeId>) -> Result<Self, GraphError> {
        Self::validate_in(g, &edge_ids)?;
        Ok(Circle {
            edge_ids: canonicalize(edge_ids),
        })
    }

    /// Checks that the edge id sequence is a circle of `g`: length at least 2,
    /// distinct in-range ids, consecutive edges sharing exactly one vertex
    /// (cyclically), and no vertex visited twice.
    pub fn validate_in(g: &SignedGraph, edge_ids: &[EdgeId]) -> Result<(), GraphError> {
        let invalid = |msg: &str| Err(GraphError::InvalidCircle(msg.to_string()));

        if edge_ids.len() < 2 {
            return invalid("fewer than two edges");
        }
        let mut seen = BTreeSet::new();
        for &e in edge_ids {
            if e >= g.edge_count() {
                return invalid("edge id out of range");
            }
            if !seen.insert(e) {
                return invalid("repeated edge id");
            }
        }

        let k = edge_ids.len();
        if k == 2 {
            // A digon: two distinct parallel edges.
            let a = g.edge(edge_ids[0]);
            let b = g.edge(edge_ids[1]);
            let same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
            if !same {
                return invalid("two edges that are not parallel");
            }
            return Ok(());
        }

        // For length >= 3 the shared vertex of each consecutive pair is
        // unique: two adjacent parallel edges would force a repeated vertex.
        let mut shared = Vec::with_capacity(k);
        for i in 0..k {
            let a = g.edge(edge_ids[i]);
            let b = g.edge(edge_ids[(i + 1) % k]);
            let mut common = None;
            for x in [a.u, a.v] {
                if b.touches(x) {
                    if common.is_some() {
                        return invalid("adjacent parallel edges in a circle longer than 2");
                    }
                    common = Some(x);
                }
            }
            match common {
                Some(x) => shared.push(x),
                None => return invalid("consecutive edges share no endpoint"),
            }
        }
        let distinct: BTreeSet<_> = shared.iter().copied().collect();
        if distinct.len() != k {
            return invalid("vertex visited more than once");
        }
        // Edge i must join shared[i-1] and shared[i].
        for i in 0..k {
            let e = g.edge(edge_ids[i]);
            let prev = shared[(i + k - 1) % k];
            let here = shared[i];
            let ok = (e.u == prev && e.v == here) || (e.u == here && e.v == prev);
            if !ok {
                return invalid("edge does not connect the traversal vertices");
            }
        }
        Ok(())
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edge ids in ascending order, for intersection tests.
    pub fn sorted_edge_ids(&self) -> Vec<EdgeId> {
        let mut ids = self.edge_ids.clone();
        ids.sort_unstable();
        ids
    }

    /// True if the two circles have no edge id in common.
    pub fn edge_disjoint(&self, other: &Circle) -> bool {
        let mine: BTreeSet<_> = self.edge_ids.iter().collect();
        other.edge_ids.iter().all(|e| !mine.contains(e))
    }

    /// The vertices the circle passes through, ascending.
    pub fn vertex_set(&self, g: &SignedGraph) -> BTreeSet<VertexId> {
        let mut vs = BTreeSet::new();
        for &e in &self.edge_ids {
            let edge = g.edge(e);
            vs.insert(edge.u);
            vs.insert(edge.v);
        }
        vs
    }
}

/// Rotates/reflects a cyclic edge id sequence into canonical form: smallest
/// id first, then its smaller cyclic neighbor. Idempotent.
fn canonicalize(edge_ids: Vec<EdgeId>) -> Vec<EdgeId> {
    let k = edge_ids.len();
    debug_assert!(k >= 2);
    let start = edge_ids
        .iter()
        .enumerate()
        .min_by_key(|&(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap();
    let forward: Vec<EdgeId> = (0..k).map(|i| edge_ids[(start + i) % k]).collect();
    let backward: Vec<EdgeId> = (0..k).map(|i| edge_ids[(start + k - i) % k]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}
