//! Finite simple graphs with the BFS-based metric toolbox: distances,
//! metric representations, resolving sets and brute-force metric dimension.
//!
//! Vertices are dense integers `0..vertex_count`; any external labelling is
//! mapped at the IO boundary. All operations that assume connectivity check
//! it and reject disconnected graphs with a distinct error.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vector::{DistanceVector, VectorSet};

/// A finite simple undirected graph. No self-loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); vertex_count], edges: Vec::new() }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Ok(_) => return Err(Error::DuplicateEdge { u: key.0, v: key.1 }),
            Err(pos) => self.edges.insert(pos, key),
        }
        let pos = self.adjacency[u].binary_search(&v).unwrap_err();
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.adjacency.len()
    }

    /// True when every vertex is reachable from every other. The empty graph
    /// and the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one vertex");
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - ... - n-1 - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        assert!(n >= 1, "complete graph needs at least one vertex");
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete edges are valid")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count() })
        }
    }
}

/// An ordered list of distinct vertices. The order is significant: it fixes
/// which coordinate of a metric representation belongs to which landmark.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LandmarkSet(Vec<usize>);

impl LandmarkSet {
    pub fn new(members: impl Into<Vec<usize>>) -> Result<Self> {
        let members = members.into();
        let mut seen = members.clone();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLandmark { vertex: pair[0] });
            }
        }
        Ok(LandmarkSet(members))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, usize> {
        self.0.iter()
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        for &w in &self.0 {
            if !g.contains_vertex(w) {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: g.vertex_count(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Shortest-path edge counts from `source`; `None` marks vertices in other
/// components.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<u32>>> {
    if !g.contains_vertex(source) {
        return Err(Error::VertexOutOfRange { vertex: source, vertex_count: g.vertex_count() });
    }
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Representation of every vertex with respect to `w`, indexed by vertex.
/// Requires a connected graph; the landmark list may be empty, in which case
/// every representation is the empty vector.
fn representations(g: &Graph, w: &LandmarkSet) -> Result<Vec<DistanceVector>> {
    w.check_against(g)?;
    require_connected(g)?;
    let mut columns = Vec::with_capacity(w.len());
    for &landmark in w.iter() {
        let dist = bfs_distances(g, landmark)?;
        let column: Vec<i32> = dist
            .into_iter()
            .map(|d| d.expect("connected graph has no unreachable vertex") as i32)
            .collect();
        columns.push(column);
    }
    Ok((0..g.vertex_count())
        .map(|v| DistanceVector::new(columns.iter().map(|c| c[v]).collect()))
        .collect())
}

/// The metric representation `r(v | W)`: distances from `v` to each landmark,
/// in landmark order.
pub fn metric_representation(g: &Graph, w: &LandmarkSet, v: usize) -> Result<DistanceVector> {
    if !g.contains_vertex(v) {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: g.vertex_count() });
    }
    w.check_against(g)?;
    require_connected(g)?;
    let dist = bfs_distances(g, v)?;
    Ok(DistanceVector::new(
        w.iter()
            .map(|&landmark| dist[landmark].expect("connected") as i32)
            .collect(),
    ))
}

/// True when all vertices receive pairwise distinct representations.
pub fn is_resolving_set(g: &Graph, w: &LandmarkSet) -> Result<bool> {
    let mut reps = representations(g, w)?;
    reps.sort_unstable();
    Ok(reps.windows(2).all(|pair| pair[0] != pair[1]))
}

/// The set `{ r(v | W) : v in V }`. Fails with the clashing vector when `w`
/// does not resolve the graph.
pub fn representation_set(g: &Graph, w: &LandmarkSet) -> Result<VectorSet> {
    if w.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let reps = representations(g, w)?;
    let mut sorted = reps.clone();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::NotResolving { vector: pair[0].clone() });
        }
    }
    VectorSet::new(w.len(), reps)
}

/// Smallest cardinality of a resolving set, with the first witnessing basis
/// in lexicographic order of sorted vertex labels. Exhaustive over subsets by
/// increasing size; meant for small graphs (roughly up to a dozen vertices).
/// By convention the one-vertex graph has dimension 0 and an empty basis.
pub fn metric_dimension(g: &Graph) -> Result<(usize, LandmarkSet)> {
    require_connected(g)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok((0, LandmarkSet::new(Vec::new())?));
    }
    let mut dist = Vec::with_capacity(n);
    for v in 0..n {
        let row: Vec<u32> = bfs_distances(g, v)?
            .into_iter()
            .map(|d| d.expect("connected"))
            .collect();
        dist.push(row);
    }
    let mut picked = Vec::new();
    for k in 1..=n {
        if let Some(basis) = first_resolving_subset(&dist, n, k, 0, &mut picked) {
            return Ok((k, LandmarkSet::new(basis)?));
        }
    }
    // The full vertex set always resolves: each vertex is the unique one at
    // distance zero from itself.
    unreachable!("the full vertex set is resolving");
}

fn first_resolving_subset(
    dist: &[Vec<u32>],
    n: usize,
    k: usize,
    start: usize,
    picked: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if picked.len() == k {
        return resolves(dist, n, picked).then(|| picked.clone());
    }
    let remaining = k - picked.len();
    for v in start..=n.saturating_sub(remaining) {
        picked.push(v);
        if let Some(found) = first_resolving_subset(dist, n, k, v + 1, picked) {
            picked.pop();
            return Some(found);
        }
        picked.pop();
    }
    None
}

fn resolves(dist: &[Vec<u32>], n: usize, landmarks: &[usize]) -> bool {
    for u in 0..n {
        for v in u + 1..n {
            if landmarks.iter().all(|&w| dist[w][u] == dist[w][v]) {
                return false;
            }
        }
    }
    true
}
