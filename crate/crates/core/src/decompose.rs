//! Sign-agnostic structural decompositions over an explicit edge subset.
//!
//! Every operation takes the host graph plus a list of edge ids, so the same
//! graph can be decomposed as its positive subgraph, as a whole, or as a
//! tree-plus-chords union without copying. Vertices are always the host
//! graph's `0..n` except for [`is_cactus`], which additionally takes the
//! vertex set of the subgraph under test.
//!
//! Parallel edges are honored throughout: a parallel pair is a circle (a
//! digon), so neither edge is a bridge, and a block of exactly two parallel
//! edges has kind [`BlockKind::Circle`]. Three or more parallel edges form an
//! `Other` block.

use crate::graph::{EdgeId, SignedGraph, VertexId};
use crate::partition::Partition;

/// Dense component ids, canonical by smallest member vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    component_of: Vec<usize>,
    component_count: usize,
}

impl ComponentLabeling {
    pub fn of(&self, v: VertexId) -> usize {
        self.component_of[v]
    }

    pub fn same(&self, u: VertexId, v: VertexId) -> bool {
        self.component_of[u] == self.component_of[v]
    }

    pub fn count(&self) -> usize {
        self.component_count
    }

    pub fn vertex_count(&self) -> usize {
        self.component_of.len()
    }

    /// Members of each component, indexed by component id, sorted.
    pub fn groups(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_assignment(self.component_of.clone())
    }
}

/// Adjacency lists over an edge subset, neighbor entries ordered by edge id.
fn adjacency(g: &SignedGraph, edge_ids: &[EdgeId]) -> Vec<Vec<(VertexId, EdgeId)>> {
    let mut sorted: Vec<EdgeId> = edge_ids.to_vec();
    sorted.sort_unstable();
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in sorted {
        let edge = g.edge(e);
        adj[edge.u].push((edge.v, e));
        adj[edge.v].push((edge.u, e));
    }
    adj
}

/// Connected components of the subgraph `(V(g), edge_ids)`. Isolated
/// vertices become singleton components.
pub fn components(g: &SignedGraph, edge_ids: &[EdgeId]) -> ComponentLabeling {
    let n = g.vertex_count();
    let adj = adjacency(g, edge_ids);
    let mut component_of = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        component_of[start] = count;
        queue.push(start);
        while let Some(v) = queue.pop() {
            for &(w, _) in &adj[v] {
                if component_of[w] == usize::MAX {
                    component_of[w] = count;
                    queue.push(w);
                }
            }
        }
        count += 1;
    }
    ComponentLabeling {
        component_of,
        component_count: count,
    }
}

/// Iterative lowpoint traversal collecting the blocks of the subgraph as
/// edge-id sets. Every edge lands in exactly one block; blocks come out
/// sorted by smallest edge id with sorted contents.
fn edge_blocks(g: &SignedGraph, edge_ids: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    const UNSET: usize = usize::MAX;
    let n = g.vertex_count();
    let adj = adjacency(g, edge_ids);

    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
    // Frame: (vertex, edge we entered by, cursor into adj).
    let mut stack: Vec<(VertexId, EdgeId, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, UNSET, 0));

        while let Some(frame) = stack.last_mut() {
            let (v, parent_edge, cursor) = (frame.0, frame.1, frame.2);
            if cursor < adj[v].len() {
                frame.2 += 1;
                let (w, e) = adj[v][cursor];
                if e == parent_edge {
                    continue; // the edge we came in by; parallels still count
                }
                if disc[w] == UNSET {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    // Back edge; the mirrored direction is skipped above.
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(parent) = stack.last_mut() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // v's subtree plus the tree edge is a finished block.
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty());
    }

    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// The isthmi (bridges) of the subgraph: edges whose removal increases its
/// component count. A parallel edge is never a bridge. Sorted.
pub fn bridges(g: &SignedGraph, edge_ids: &[EdgeId]) -> Vec<EdgeId> {
    edge_blocks(g, edge_ids)
        .into_iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .collect()
}

/// The forest formed by the isthmi of an edge subset, together with the
/// partition of all vertices into its trees. A vertex on no isthmus is a
/// single-vertex tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialBlockForest {
    pub isthmus_edge_ids: Vec<EdgeId>,
    pub tree_of: ComponentLabeling,
}

impl TrivialBlockForest {
    pub fn tree_count(&self) -> usize {
        self.tree_of.count()
    }
}

pub fn trivial_block_forest(g: &SignedGraph, edge_ids: &[EdgeId]) -> TrivialBlockForest {
    let isthmus_edge_ids = bridges(g, edge_ids);
    let tree_of = components(g, &isthmus_edge_ids);
    TrivialBlockForest {
        isthmus_edge_ids,
        tree_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// A single bridge edge.
    Isthmus,
    /// The block's edges form exactly one circle (every block vertex has
    /// degree 2 within it); includes digons.
    Circle,
    /// Anything larger, e.g. a theta or a triple parallel edge.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edge_ids: Vec<EdgeId>,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

pub fn block_decomposition(g: &SignedGraph, edge_ids: &[EdgeId]) -> BlockDecomposition {
    let blocks = edge_blocks(g, edge_ids)
        .into_iter()
        .map(|edge_ids| {
            let kind = classify_block(g, &edge_ids);
            Block { edge_ids, kind }
        })
        .collect();
    BlockDecomposition { blocks }
}

fn classify_block(g: &SignedGraph, block: &[EdgeId]) -> BlockKind {
    if block.len() == 1 {
        return BlockKind::Isthmus;
    }
    let mut degree: std::collections::HashMap<VertexId, usize> = std::collections::HashMap::new();
    for &e in block {
        let edge = g.edge(e);
        *degree.entry(edge.u).or_insert(0) += 1;
        *degree.entry(edge.v).or_insert(0) += 1;
    }
    if degree.values().all(|&d| d == 2) {
        BlockKind::Circle
    } else {
        BlockKind::Other
    }
}

/// True iff the subgraph `(vertices, edge_ids)` is connected and every block
/// is a circle or an isthmus — equivalently, every edge lies on at most one
/// circle. Both endpoints of every edge must belong to `vertices`.
pub fn is_cactus(g: &SignedGraph, vertices: &[VertexId], edge_ids: &[EdgeId]) -> bool {
    debug_assert!(edge_ids.iter().all(|&e| {
        let edge = g.edge(e);
        vertices.contains(&edge.u) && vertices.contains(&edge.v)
    }));

    if vertices.len() > 1 {
        let adj = adjacency(g, edge_ids);
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = vec![vertices[0]];
        seen[vertices[0]] = true;
        while let Some(v) = queue.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if !vertices.iter().all(|&v| seen[v]) {
            return false;
        }
    }

    edge_blocks(g, edge_ids)
        .iter()
        .all(|b| classify_block(g, b) != BlockKind::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as Neg, Positive as Pos};
    use crate::test_graphs::k4_example;

    fn all_ids(g: &SignedGraph) -> Vec<EdgeId> {
        g.edge_ids().collect()
    }

    /// Naive bridge oracle: drop each edge in turn and re-count components
    /// with a local flood fill, independent of the lowpoint code path.
    fn naive_bridges(g: &SignedGraph, edge_ids: &[EdgeId]) -> Vec<EdgeId> {
        let count = |ids: &[EdgeId]| -> usize {
            let n = g.vertex_count();
            let mut label = vec![usize::MAX; n];
            let mut c = 0;
            for start in 0..n {
                if label[start] != usize::MAX {
                    continue;
                }
                label[start] = c;
                let mut stack = vec![start];
                while let Some(v) = stack.pop() {
                    for &e in ids {
                        let edge = g.edge(e);
                        if edge.touches(v) {
                            let w = edge.other(v);
                            if label[w] == usize::MAX {
                                label[w] = c;
                                stack.push(w);
                            }
                        }
                    }
                }
                c += 1;
            }
            c
        };
        let base = count(edge_ids);
        edge_ids
            .iter()
            .copied()
            .filter(|&e| {
                let rest: Vec<EdgeId> = edge_ids.iter().copied().filter(|&f| f != e).collect();
                count(&rest) > base
            })
            .collect()
    }

    #[test]
    fn components_of_path() {
        let g = SignedGraph::new(3, [(0, 1, Pos), (1, 2, Pos)]).unwrap();
        let c = components(&g, &all_ids(&g));
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn components_no_edges_are_singletons() {
        let g = SignedGraph::new(3, []).unwrap();
        let c = components(&g, &[]);
        assert_eq!(c.count(), 3);
        assert_eq!(c.groups(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn components_of_k4_positive_subgraph() {
        let g = k4_example();
        let c = components(&g, &g.positive_edge_ids());
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn path_edges_are_bridges() {
        let g = SignedGraph::new(3, [(0, 1, Pos), (1, 2, Pos)]).unwrap();
        assert_eq!(bridges(&g, &all_ids(&g)), vec![0, 1]);
    }

    #[test]
    fn triangle_has_no_bridges() {
        let g = SignedGraph::new(3, [(0, 1, Pos), (1, 2, Pos), (0, 2, Pos)]).unwrap();
        assert!(bridges(&g, &all_ids(&g)).is_empty());
    }

    #[test]
    fn bowtie_with_pendant_has_one_bridge() {
        // Triangles 0-1-2 and 2-3-4 sharing vertex 2, plus pendant edge 2-5.
        let g = SignedGraph::new(
            6,
            [
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Pos),
                (2, 3, Pos),
                (3, 4, Pos),
                (4, 2, Pos),
                (2, 5, Pos),
            ],
        )
        .unwrap();
        let b = bridges(&g, &all_ids(&g));
        assert_eq!(b, vec![6]);
        assert_eq!(b, naive_bridges(&g, &all_ids(&g)));
    }

    #[test]
    fn parallel_edges_are_never_bridges() {
        let g = SignedGraph::new(2, [(0, 1, Pos), (0, 1, Neg)]).unwrap();
        assert!(bridges(&g, &all_ids(&g)).is_empty());
    }

    #[test]
    fn forest_of_tree_is_whole_tree() {
        let g = SignedGraph::new(4, [(0, 1, Pos), (1, 2, Pos), (1, 3, Pos)]).unwrap();
        let f = trivial_block_forest(&g, &all_ids(&g));
        assert_eq!(f.isthmus_edge_ids, vec![0, 1, 2]);
        assert_eq!(f.tree_count(), 1);
    }

    #[test]
    fn forest_of_triangle_is_singletons() {
        let g = SignedGraph::new(3, [(0, 1, Pos), (1, 2, Pos), (0, 2, Pos)]).unwrap();
        let f = trivial_block_forest(&g, &all_ids(&g));
        assert!(f.isthmus_edge_ids.is_empty());
        assert_eq!(f.tree_count(), 3);
    }

    #[test]
    fn forest_of_triangle_with_pendant_path() {
        // Triangle 0-1-2 plus path 2-3-4.
        let g = SignedGraph::new(
            5,
            [
                (0, 1, Pos),
                (1, 2, Pos),
                (0, 2, Pos),
                (2, 3, Pos),
                (3, 4, Pos),
            ],
        )
        .unwrap();
        let f = trivial_block_forest(&g, &all_ids(&g));
        assert_eq!(f.isthmus_edge_ids, vec![3, 4]);
        assert_eq!(
            f.tree_of.groups(),
            vec![vec![0], vec![1], vec![2, 3, 4]]
        );
    }

    #[test]
    fn blocks_of_triangle_with_pendant() {
        let g = SignedGraph::new(
            4,
            [(0, 1, Pos), (1, 2, Pos), (0, 2, Pos), (2, 3, Pos)],
        )
        .unwrap();
        let d = block_decomposition(&g, &all_ids(&g));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].edge_ids, vec![0, 1, 2]);
        assert_eq!(d.blocks[0].kind, BlockKind::Circle);
        assert_eq!(d.blocks[1].edge_ids, vec![3]);
        assert_eq!(d.blocks[1].kind, BlockKind::Isthmus);
    }

    #[test]
    fn theta_is_one_other_block() {
        // Vertices 0 and 3 joined by three internally disjoint paths.
        let g = SignedGraph::new(
            5,
            [
                (0, 1, Pos),
                (1, 3, Pos),
                (0, 2, Pos),
                (2, 3, Pos),
                (0, 4, Pos),
                (4, 3, Pos),
            ],
        )
        .unwrap();
        let d = block_decomposition(&g, &all_ids(&g));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].kind, BlockKind::Other);
    }

    #[test]
    fn digon_block_is_a_circle() {
        let g = SignedGraph::new(2, [(0, 1, Pos), (0, 1, Neg)]).unwrap();
        let d = block_decomposition(&g, &all_ids(&g));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].edge_ids, vec![0, 1]);
        assert_eq!(d.blocks[0].kind, BlockKind::Circle);
    }

    #[test]
    fn triple_parallel_is_other() {
        let g = SignedGraph::new(2, [(0, 1, Pos), (0, 1, Pos), (0, 1, Neg)]).unwrap();
        let d = block_decomposition(&g, &all_ids(&g));
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].kind, BlockKind::Other);
    }

    #[test]
    fn single_vertex_is_a_cactus() {
        let g = SignedGraph::new(1, []).unwrap();
        assert!(is_cactus(&g, &[0], &[]));
    }

    #[test]
    fn theta_is_not_a_cactus() {
        let g = SignedGraph::new(
            5,
            [
                (0, 1, Pos),
                (1, 3, Pos),
                (0, 2, Pos),
                (2, 3, Pos),
                (0, 4, Pos),
                (4, 3, Pos),
            ],
        )
        .unwrap();
        let vs: Vec<_> = (0..5).collect();
        assert!(!is_cactus(&g, &vs, &all_ids(&g)));
    }

    #[test]
    fn shared_vertex_triangles_are_a_cactus() {
        let g = SignedGraph::new(
            5,
            [
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Pos),
                (2, 3, Pos),
                (3, 4, Pos),
                (4, 2, Pos),
            ],
        )
        .unwrap();
        let vs: Vec<_> = (0..5).collect();
        assert!(is_cactus(&g, &vs, &all_ids(&g)));
    }

    #[test]
    fn disconnected_subgraph_is_not_a_cactus() {
        let g = SignedGraph::new(4, [(0, 1, Pos), (2, 3, Pos)]).unwrap();
        let vs: Vec<_> = (0..4).collect();
        assert!(!is_cactus(&g, &vs, &all_ids(&g)));
    }

    #[test]
    fn bridges_match_naive_oracle_on_k4() {
        let g = k4_example();
        assert_eq!(
            bridges(&g, &all_ids(&g)),
            naive_bridges(&g, &all_ids(&g))
        );
        let pos = g.positive_edge_ids();
        assert_eq!(bridges(&g, &pos), naive_bridges(&g, &pos));
    }

    #[test]
    fn blocks_partition_the_edge_set() {
        let g = SignedGraph::new(
            6,
            [
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Pos),
                (2, 3, Pos),
                (3, 4, Neg),
                (3, 4, Pos),
                (4, 5, Neg),
            ],
        )
        .unwrap();
        let d = block_decomposition(&g, &all_ids(&g));
        let mut covered: Vec<EdgeId> = d.blocks.iter().flat_map(|b| b.edge_ids.clone()).collect();
        covered.sort_unstable();
        assert_eq!(covered, all_ids(&g));
    }
}
