//! Vertex partitions with a canonical labeling.
//!
//! Cluster ids are renumbered so that cluster 0 contains vertex 0, cluster 1
//! contains the smallest vertex not in cluster 0, and so on. Two partitions
//! are equal exactly when they group the vertices the same way, which lets
//! tests compare them directly.

use std::collections::HashMap;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cluster_of: Vec<usize>,
    cluster_count: usize,
}

impl Partition {
    /// Builds a partition from any labeling of `0..n`; labels are mapped to
    /// dense canonical ids in order of first appearance.
    pub fn from_assignment(labels: Vec<usize>) -> Self {
        let mut remap: HashMap<usize, usize> = HashMap::new();
        let mut cluster_of = Vec::with_capacity(labels.len());
        for &label in &labels {
            let next = remap.len();
            let id = *remap.entry(label).or_insert(next);
            cluster_of.push(id);
        }
        Partition {
            cluster_of,
            cluster_count: remap.len(),
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            cluster_of: (0..n).collect(),
            cluster_count: n,
        }
    }

    pub fn single_cluster(n: usize) -> Self {
        Partition {
            cluster_of: vec![0; n],
            cluster_count: if n == 0 { 0 } else { 1 },
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    pub fn cluster_of(&self, v: VertexId) -> usize {
        self.cluster_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.cluster_of
    }

    /// The clusters as sorted vertex lists, indexed by cluster id.
    pub fn clusters(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.cluster_count];
        for (v, &c) in self.cluster_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}
