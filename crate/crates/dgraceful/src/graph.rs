//! Simple undirected graphs with the standard families used throughout the
//! crate: paths, stars, cycles, ladders and complete graphs.
//!
//! Vertex ids are contiguous and 0-based. The classical descriptions of these
//! families index vertices from 1 (`x_1, x_2, ...`); every constructor here
//! applies the fixed shift `x_t -> t - 1`.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Which standard family a graph was built from, with its defining parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_{e+1}`, the path with `e` edges.
    Path(usize),
    /// The star with `e` external vertices (center has id 0).
    Star(usize),
    /// `C_k`, the cycle on `k` vertices.
    Cycle(usize),
    /// `L_{2k}`, the ladder `P_2 x P_k`.
    Ladder(usize),
    /// `K_v`, the complete graph.
    Complete(usize),
    /// Anything built from an explicit edge list.
    Custom,
}

impl Family {
    fn tag(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Star(_) => "star",
            Family::Cycle(_) => "cycle",
            Family::Ladder(_) => "ladder",
            Family::Complete(_) => "complete",
            Family::Custom => "custom",
        }
    }

    fn param(&self) -> Option<usize> {
        match *self {
            Family::Path(p)
            | Family::Star(p)
            | Family::Cycle(p)
            | Family::Ladder(p)
            | Family::Complete(p) => Some(p),
            Family::Custom => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("parameter {param} out of range for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        param: usize,
        reason: &'static str,
    },
    #[error("edge [{0}, {1}] is a self-loop")]
    SelfLoop(usize, usize),
    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(usize, usize),
    #[error("edge [{0}, {1}] references a vertex outside 0..{2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// An undirected simple graph with an ordered vertex list `0..n` and an
/// ordered edge list.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// duplicate edges (compared as unordered pairs) and out-of-range
    /// endpoints.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        Self::with_family(vertices, edges, Family::Custom)
    }

    fn with_family(
        vertices: usize,
        edges: Vec<(usize, usize)>,
        family: Family,
    ) -> Result<Graph, GraphError> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a == b {
                return Err(GraphError::SelfLoop(a, b));
            }
            if a >= vertices || b >= vertices {
                return Err(GraphError::EdgeOutOfRange(a, b, vertices));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            vertices,
            edges,
            family,
        })
    }

    /// The path `x_1 ~ x_2 ~ ... ~ x_{e+1}` on ids `0..=e`, with `e` edges.
    pub fn path(e: usize) -> Result<Graph, GraphError> {
        if e < 1 {
            return Err(GraphError::InvalidParameter {
                family: "path",
                param: e,
                reason: "need at least one edge",
            });
        }
        let edges = (0..e).map(|i| (i, i + 1)).collect();
        Self::with_family(e + 1, edges, Family::Path(e))
    }

    /// The star with center id 0 and external vertices `1..=e`.
    pub fn star(e: usize) -> Result<Graph, GraphError> {
        if e < 1 {
            return Err(GraphError::InvalidParameter {
                family: "star",
                param: e,
                reason: "need at least one edge",
            });
        }
        let edges = (1..=e).map(|i| (0, i)).collect();
        Self::with_family(e + 1, edges, Family::Star(e))
    }

    /// The cycle `C_k` on ids `0..k`, edges `{i, (i+1) mod k}`.
    pub fn cycle(k: usize) -> Result<Graph, GraphError> {
        if k < 3 {
            return Err(GraphError::InvalidParameter {
                family: "cycle",
                param: k,
                reason: "need k >= 3",
            });
        }
        let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::with_family(k, edges, Family::Cycle(k))
    }

    /// The ladder `L_{2k} = P_2 x P_k`. Vertex `(i, j)` with `i` in `{0, 1}`
    /// and `j` in `0..k` is flattened to id `i*k + j`; edges are the rungs
    /// `{(0,j),(1,j)}` and the rails `{(i,j),(i,j+1)}`, giving `3k - 2` edges.
    pub fn ladder(k: usize) -> Result<Graph, GraphError> {
        if k < 2 {
            return Err(GraphError::InvalidParameter {
                family: "ladder",
                param: k,
                reason: "need k >= 2",
            });
        }
        let mut edges = Vec::with_capacity(3 * k - 2);
        for j in 0..k {
            edges.push((j, k + j)); // rung
        }
        for i in 0..2 {
            for j in 0..k - 1 {
                edges.push((i * k + j, i * k + j + 1)); // rail
            }
        }
        Self::with_family(2 * k, edges, Family::Ladder(k))
    }

    /// The complete graph `K_v`.
    pub fn complete(v: usize) -> Result<Graph, GraphError> {
        if v < 2 {
            return Err(GraphError::InvalidParameter {
                family: "complete",
                param: v,
                reason: "need v >= 2",
            });
        }
        let mut edges = Vec::with_capacity(v * (v - 1) / 2);
        for a in 0..v {
            for b in a + 1..v {
                edges.push((a, b));
            }
        }
        Self::with_family(v, edges, Family::Complete(v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Number of edges, the size `e`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Edges normalized to `a < b` and sorted, the canonical order used by
    /// the JSON encoding and by structural comparison.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn is_complete(&self) -> bool {
        self.vertices >= 2 && self.size() == self.vertices * (self.vertices - 1) / 2
    }

    /// Neighbor lists indexed by vertex id.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Two-colors the graph starting from vertex 0 (which lands in `part_a`).
    /// Returns `Ok(None)` when an odd cycle makes this impossible and
    /// `Err(Disconnected)` when the graph is not connected; only connected
    /// graphs are handled here.
    pub fn bipartition(&self) -> Result<Option<Bipartition>, GraphError> {
        if self.vertices == 0 {
            return Err(GraphError::Disconnected);
        }
        let adj = self.adjacency();
        let mut color = vec![None::<bool>; self.vertices];
        color[0] = Some(true);
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut visited = 1;
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        visited += 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        if visited != self.vertices {
            return Err(GraphError::Disconnected);
        }
        let mut part_a = Vec::new();
        let mut part_b = Vec::new();
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                part_a.push(v);
            } else {
                part_b.push(v);
            }
        }
        Ok(Some(Bipartition { part_a, part_b }))
    }
}

/// Structural equality: same vertex count, same edge set (unordered), same
/// family tag. Edge list order does not participate.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.family == other.family
            && self.canonical_edges() == other.canonical_edges()
    }
}

impl Eq for Graph {}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Path(e) => write!(f, "P_{}", e + 1),
            Family::Star(e) => write!(f, "S_{}", e + 1),
            Family::Cycle(k) => write!(f, "C_{k}"),
            Family::Ladder(k) => write!(f, "L_{}", 2 * k),
            Family::Complete(v) => write!(f, "K_{v}"),
            Family::Custom => write!(f, "graph({}v, {}e)", self.vertices, self.size()),
        }
    }
}

/// A proper 2-coloring of a connected bipartite graph. `part_a` always
/// contains vertex 0; the parts are disjoint and cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    part_a: Vec<usize>,
    part_b: Vec<usize>,
}

impl Bipartition {
    pub fn part_a(&self) -> &[usize] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.part_b
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    param: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    family: FamilyJson,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.vertices,
            edges: self.canonical_edges(),
            family: FamilyJson {
                tag: self.family.tag().to_string(),
                param: self.family.param(),
            },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        use serde::de::Error;
        let raw = GraphJson::deserialize(deserializer)?;
        let family = match (raw.family.tag.as_str(), raw.family.param) {
            ("path", Some(p)) => Family::Path(p),
            ("star", Some(p)) => Family::Star(p),
            ("cycle", Some(p)) => Family::Cycle(p),
            ("ladder", Some(p)) => Family::Ladder(p),
            ("complete", Some(p)) => Family::Complete(p),
            ("custom", _) => Family::Custom,
            (tag, param) => {
                return Err(D::Error::custom(format!(
                    "unknown graph family {tag:?} with param {param:?}"
                )))
            }
        };
        Graph::with_family(raw.vertices, raw.edges, family).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_sizes_match_closed_forms() {
        for e in 1..=40 {
            assert_eq!(Graph::path(e).unwrap().size(), e);
            assert_eq!(Graph::star(e).unwrap().size(), e);
        }
        for k in 3..=40 {
            assert_eq!(Graph::cycle(k).unwrap().size(), k);
        }
        for k in 2..=40 {
            assert_eq!(Graph::ladder(k).unwrap().size(), 3 * k - 2);
        }
        for v in 2..=20 {
            assert_eq!(Graph::complete(v).unwrap().size(), v * (v - 1) / 2);
        }
    }

    #[test]
    fn builders_reject_degenerate_parameters() {
        assert!(Graph::path(0).is_err());
        assert!(Graph::star(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::ladder(1).is_err());
        assert!(Graph::complete(1).is_err());
    }

    #[test]
    fn path_edges_follow_the_chain() {
        let g = Graph::path(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn star_center_has_full_degree() {
        let g = Graph::star(10).unwrap();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.adjacency()[0].len(), 10);
    }

    #[test]
    fn star_edge_matches_single_edge_path() {
        let s = Graph::star(1).unwrap();
        let p = Graph::path(1).unwrap();
        assert_eq!(s.canonical_edges(), p.canonical_edges());
        assert_eq!(s.vertex_count(), p.vertex_count());
        // family tags still differ
        assert_ne!(s, p);
    }

    #[test]
    fn new_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, vec![(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0, 0)
        );
        assert_eq!(
            Graph::new(3, vec![(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(1, 0)
        );
        assert_eq!(
            Graph::new(3, vec![(0, 3)]).unwrap_err(),
            GraphError::EdgeOutOfRange(0, 3, 3)
        );
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let g = Graph::cycle(6).unwrap();
        let b = g.bipartition().unwrap().unwrap();
        assert_eq!(b.part_a(), &[0, 2, 4]);
        assert_eq!(b.part_b(), &[1, 3, 5]);
    }

    #[test]
    fn odd_cycle_has_no_bipartition() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(g.bipartition().unwrap(), None);
    }

    #[test]
    fn ladder_bipartition_is_the_parity_classes() {
        let k = 4;
        let g = Graph::ladder(k).unwrap();
        let b = g.bipartition().unwrap().unwrap();
        assert_eq!(b.part_a().len(), 4);
        assert_eq!(b.part_b().len(), 4);
        // part containing (0,0) is exactly the ids i*k+j with i+j even
        for &id in b.part_a() {
            let (i, j) = (id / k, id % k);
            assert_eq!((i + j) % 2, 0);
        }
    }

    #[test]
    fn bipartition_rejects_disconnected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bipartition().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn bipartition_is_a_proper_two_coloring() {
        for g in [
            Graph::path(9).unwrap(),
            Graph::star(7).unwrap(),
            Graph::cycle(8).unwrap(),
            Graph::ladder(5).unwrap(),
        ] {
            let b = g.bipartition().unwrap().unwrap();
            let in_a: std::collections::HashSet<_> = b.part_a().iter().collect();
            for &(x, y) in g.edges() {
                assert_ne!(in_a.contains(&x), in_a.contains(&y), "edge inside a part");
            }
            assert_eq!(b.part_a().len() + b.part_b().len(), g.vertex_count());
        }
    }

    #[test]
    fn json_edges_are_normalized_and_sorted() {
        let g = Graph::cycle(4).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":4,"edges":[[0,1],[0,3],[1,2],[2,3]],"family":{"tag":"cycle","param":4}}"#
        );
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_rejects_invalid_graphs() {
        let bad = r#"{"vertices":2,"edges":[[0,0]],"family":{"tag":"custom"}}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
    }
}
