//! The signed multigraph model.
//!
//! Vertices are `0..n`. Edges carry a sign and a stable integer id equal to
//! their position in the construction list, so parallel edges stay
//! distinguishable and "edge-disjoint" is well defined. Graphs are immutable
//! after construction; every algorithm in this crate is a pure function over
//! them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::circle::{Circle, SignClass};
use crate::partition::Partition;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Edge sign. Parsing accepts exactly `+` and `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        matches!(self, Sign::Positive)
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Sign::Negative)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid sign {0:?}, expected \"+\" or \"-\"")]
pub struct ParseSignError(pub String);

impl FromStr for Sign {
    type Err = ParseSignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" => Ok(Sign::Positive),
            "-" => Ok(Sign::Negative),
            other => Err(ParseSignError(other.to_string())),
        }
    }
}

/// One edge of a signed multigraph. Loops are banned at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl SignedEdge {
    /// The endpoint other than `w`. `w` must be an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge ids do not form a vertex-simple circle: {0}")]
    InvalidCircle(String),
    #[error("partition covers {got} vertices, graph has {expected}")]
    PartitionMismatch { expected: usize, got: usize },
}

/// An immutable signed multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<SignedEdge>,
}

impl SignedGraph {
    /// Builds a graph from an edge list. Edge ids are assigned by list order.
    ///
    /// Rejects loops and out-of-range endpoints; parallel edges are fine.
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (VertexId, VertexId, Sign)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (u, v, sign) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push(SignedEdge { u, v, sign });
        }
        Ok(SignedGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    /// Panics if `e` is out of range.
    pub fn edge(&self, e: EdgeId) -> SignedEdge {
        self.edges[e]
    }

    pub fn edge_ids(&self) -> std::ops::Range<EdgeId> {
        0..self.edges.len()
    }

    pub fn positive_edge_ids(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| self.edges[e].sign.is_positive())
            .collect()
    }

    pub fn negative_edge_ids(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| self.edges[e].sign.is_negative())
            .collect()
    }

    /// Classifies a circle by its number of negative edges:
    /// 0 all-positive, 1 weakly negative, 2 or more other.
    ///
    /// The circle is revalidated against this graph, so a circle built for a
    /// different graph is rejected rather than misclassified.
    pub fn circle_sign_class(&self, c: &Circle) -> Result<SignClass, GraphError> {
        Circle::validate_in(self, c.edge_ids())?;
        let negatives = c
            .edge_ids()
            .iter()
            .filter(|&&e| self.edges[e].sign.is_negative())
            .count();
        Ok(match negatives {
            0 => SignClass::AllPositive,
            1 => SignClass::WeaklyNegative,
            _ => SignClass::Other,
        })
    }

    /// Edge ids that disagree with the partition: a positive edge whose
    /// endpoints lie in different clusters, or a negative edge whose
    /// endpoints share a cluster. Returned sorted; the count is the length.
    pub fn disagreements(&self, p: &Partition) -> Result<Vec<EdgeId>, GraphError> {
        if p.vertex_count() != self.n {
            return Err(GraphError::PartitionMismatch {
                expected: self.n,
                got: p.vertex_count(),
            });
        }
        Ok(self
            .edge_ids()
            .filter(|&e| {
                let SignedEdge { u, v, sign } = self.edges[e];
                let same = p.cluster_of(u) == p.cluster_of(v);
                match sign {
                    Sign::Positive => !same,
                    Sign::Negative => same,
                }
            })
            .collect())
    }
}
