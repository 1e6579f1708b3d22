//! Realizability of vector sets and canonical realizations.
//!
//! A set `S ⊂ Z^n` is realizable exactly when three conditions hold:
//!
//! 1. every coordinate is non-negative and no vector has two zero coordinates,
//! 2. for each coordinate there is exactly one vector that is zero there,
//! 3. every vector `x` with `x_i > 0` has a companion `y` in the set with
//!    `y_i = x_i - 1` and `max_j |y_j - x_j| <= 1`.
//!
//! When they do, the canonical realization lives on `S` itself: edges are all
//! pairs at Chebyshev distance exactly 1 (the adjacency of the strong product
//! of paths) and the i-th landmark is the unique vector with `x_i = 0`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{representation_set, Graph, LandmarkSet};
use crate::vector::{DistanceVector, VectorSet};

/// Adjacency in the strong product of paths: the largest absolute coordinate
/// difference is exactly 1. A vector is never adjacent to itself.
pub fn strong_adjacent(x: &DistanceVector, y: &DistanceVector) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), found: y.len() });
    }
    Ok(x.chebyshev(y) == 1)
}

/// All strong-product edges within `vectors`, as sorted index pairs.
pub(crate) fn strong_pairs(vectors: &[DistanceVector]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if vectors[i].chebyshev(&vectors[j]) == 1 {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Why a set fails the realizability characterization. Reports name the
/// earliest failing condition in the order 1, 2, 3 and the lexicographically
/// smallest offending vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: a negative coordinate, or more than one zero coordinate.
    VectorShape { vector: DistanceVector },
    /// Condition 2: coordinate `coord` (0-based) is zero in `count` vectors
    /// instead of exactly one. `vector` is the smallest offender when any
    /// vector is zero there.
    ZeroColumn { coord: usize, count: usize, vector: Option<DistanceVector> },
    /// Condition 3: no set member lies one step closer to landmark `coord`
    /// within Chebyshev distance 1 of `vector`.
    NoDescent { vector: DistanceVector, coord: usize },
}

impl Violation {
    /// Index of the violated condition, 1 to 3.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::VectorShape { .. } => 1,
            Violation::ZeroColumn { .. } => 2,
            Violation::NoDescent { .. } => 3,
        }
    }

    pub fn offending_vector(&self) -> Option<&DistanceVector> {
        match self {
            Violation::VectorShape { vector } => Some(vector),
            Violation::ZeroColumn { vector, .. } => vector.as_ref(),
            Violation::NoDescent { vector, .. } => Some(vector),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Coordinates are reported 1-based, matching the usual x_1..x_n notation.
        match self {
            Violation::VectorShape { vector } => {
                write!(f, "condition 1 violated by vector {vector}")
            }
            Violation::ZeroColumn { coord, count, .. } => {
                write!(
                    f,
                    "condition 2 violated at coordinate {}: {count} vectors have a zero there",
                    coord + 1
                )
            }
            Violation::NoDescent { vector, coord } => {
                write!(
                    f,
                    "condition 3 violated by vector {vector} at coordinate {}",
                    coord + 1
                )
            }
        }
    }
}

/// Conditions 1 and 2 of the characterization: the structural facts forced on
/// any set of distance vectors.
pub fn check_basic_conditions(s: &VectorSet) -> core::result::Result<(), Violation> {
    for x in s.iter() {
        if x.iter().any(|&c| c < 0) || x.zero_count() > 1 {
            return Err(Violation::VectorShape { vector: x.clone() });
        }
    }
    for coord in 0..s.dimension() {
        let mut zeros = s.iter().filter(|x| x[coord] == 0);
        let first = zeros.next().cloned();
        let count = first.iter().len() + zeros.count();
        if count != 1 {
            return Err(Violation::ZeroColumn { coord, count, vector: first });
        }
    }
    Ok(())
}

/// The full characterization: conditions 1 and 2 plus the descent condition 3.
pub fn check_realizable(s: &VectorSet) -> core::result::Result<(), Violation> {
    check_basic_conditions(s)?;
    for x in s.iter() {
        for coord in 0..s.dimension() {
            if x[coord] > 0 && !has_descent(s, x, coord) {
                return Err(Violation::NoDescent { vector: x.clone(), coord });
            }
        }
    }
    Ok(())
}

pub fn is_realizable(s: &VectorSet) -> bool {
    check_realizable(s).is_ok()
}

fn has_descent(s: &VectorSet, x: &DistanceVector, coord: usize) -> bool {
    s.iter().any(|y| y[coord] == x[coord] - 1 && x.chebyshev(y) <= 1)
}

/// A graph together with an ordered resolving set, verified at construction.
/// The realized vector set and the per-vertex representations are cached.
#[derive(Debug, Clone)]
pub struct Realization {
    graph: Graph,
    landmarks: LandmarkSet,
    representations: Vec<DistanceVector>,
    realized: VectorSet,
    vertex_by_position: Vec<usize>,
}

impl Realization {
    /// Verifies that `graph` is connected and `landmarks` resolve it, then
    /// caches the realized set.
    pub fn new(graph: Graph, landmarks: LandmarkSet) -> Result<Self> {
        let realized = representation_set(&graph, &landmarks)?;
        let representations: Vec<DistanceVector> = (0..graph.vertex_count())
            .map(|v| crate::graph::metric_representation(&graph, &landmarks, v))
            .collect::<Result<_>>()?;
        let mut vertex_by_position = alloc::vec![0; realized.len()];
        for (v, rep) in representations.iter().enumerate() {
            let pos = realized.position(rep).expect("cached representation is in the set");
            vertex_by_position[pos] = v;
        }
        Ok(Realization { graph, landmarks, representations, realized, vertex_by_position })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn landmarks(&self) -> &LandmarkSet {
        &self.landmarks
    }

    pub fn realized_set(&self) -> &VectorSet {
        &self.realized
    }

    /// The cached `r(v | W)`.
    pub fn representation_of(&self, v: usize) -> &DistanceVector {
        &self.representations[v]
    }

    /// The unique vertex whose representation is `x`, if `x` is realized.
    pub fn vertex_of(&self, x: &DistanceVector) -> Option<usize> {
        self.realized.position(x).map(|pos| self.vertex_by_position[pos])
    }
}

/// The canonical realization of a realizable set: vertex `i` is the i-th
/// vector in lexicographic order, edges are all strong-product pairs within
/// the set, and the i-th landmark is the unique vector with `x_i = 0`.
pub fn canonical_realization(s: &VectorSet) -> Result<Realization> {
    check_realizable(s).map_err(|violation| Error::NotRealizable { violation })?;
    let vectors = s.vectors();
    let graph = Graph::from_edges(vectors.len(), strong_pairs(vectors))?;
    let landmark_positions: Vec<usize> = (0..s.dimension())
        .map(|coord| {
            vectors
                .iter()
                .position(|x| x[coord] == 0)
                .expect("condition 2 guarantees a zero in every coordinate")
        })
        .collect();
    let realization = Realization::new(graph, LandmarkSet::new(landmark_positions)?)?;
    if realization.realized_set() != s {
        return Err(Error::VerificationFailed);
    }
    Ok(realization)
}

/// The projection of a realization into the strong grid: every graph edge
/// becomes the pair of representations of its endpoints. Pairs are normalized
/// with the smaller vector first and the list is sorted, so two projections
/// can be compared directly.
pub fn project_realization(r: &Realization) -> Vec<(DistanceVector, DistanceVector)> {
    let mut projected: Vec<(DistanceVector, DistanceVector)> = r
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| {
            let x = r.representation_of(u).clone();
            let y = r.representation_of(v).clone();
            if x <= y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    projected.sort_unstable();
    projected
}

/// The strong product of `dimension` paths of the given order, i.e. the grid
/// `{0, .., order-1}^dimension` with Chebyshev-distance-1 adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongGrid {
    dimension: usize,
    order: usize,
}

impl StrongGrid {
    /// The smallest grid hosting the set: order `1 + max coordinate`.
    pub fn fitting(s: &VectorSet) -> Self {
        StrongGrid { dimension: s.dimension(), order: 1 + s.max_coordinate() as usize }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: &DistanceVector) -> bool {
        x.len() == self.dimension && x.iter().all(|&c| c >= 0 && (c as usize) < self.order)
    }
}

/// A graph drawn inside a strong grid: each vertex is assigned its metric
/// representation and each edge maps to a strong-product edge.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub grid: StrongGrid,
    /// Grid point of each vertex, indexed by vertex label.
    pub assignment: Vec<DistanceVector>,
    /// Projected edge set, normalized and sorted.
    pub edges: Vec<(DistanceVector, DistanceVector)>,
}

/// Embeds a connected graph with a resolving set into the strong product of
/// `|w|` paths via `v -> r(v | W)`. The default order is the smallest that
/// fits; a larger one may be requested.
pub fn embed_graph(g: &Graph, w: &LandmarkSet, order: Option<usize>) -> Result<Embedding> {
    let realization = Realization::new(g.clone(), w.clone())?;
    let fitting = StrongGrid::fitting(realization.realized_set());
    let order = order.unwrap_or(fitting.order());
    if order < fitting.order() {
        return Err(Error::OrderTooSmall { order, required: fitting.order() });
    }
    let grid = StrongGrid { dimension: fitting.dimension(), order };
    let assignment = realization.representations.clone();
    let edges = project_realization(&realization);
    Ok(Embedding { grid, assignment, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn dv(coords: &[i32]) -> DistanceVector {
        DistanceVector::from(coords)
    }

    fn vs(rows: &[&[i32]]) -> VectorSet {
        VectorSet::from_vectors(rows.iter().map(|r| dv(r))).unwrap()
    }

    fn p5_set() -> VectorSet {
        vs(&[&[0, 2], &[2, 0], &[1, 1], &[3, 1], &[1, 3]])
    }

    fn c10_set() -> VectorSet {
        vs(&[
            &[0, 3],
            &[3, 0],
            &[1, 2],
            &[2, 1],
            &[1, 4],
            &[4, 1],
            &[2, 5],
            &[5, 2],
            &[3, 4],
            &[4, 3],
        ])
    }

    fn k5_set() -> VectorSet {
        vs(&[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0], &[1, 1, 1, 1]])
    }

    #[test]
    fn strong_adjacency_is_chebyshev_one() {
        assert!(strong_adjacent(&dv(&[0, 3]), &dv(&[1, 2])).unwrap());
        assert!(!strong_adjacent(&dv(&[2, 2]), &dv(&[2, 2])).unwrap());
        assert!(!strong_adjacent(&dv(&[1, 1]), &dv(&[1, 3])).unwrap());
        assert_eq!(
            strong_adjacent(&dv(&[1]), &dv(&[1, 2])).unwrap_err(),
            Error::LengthMismatch { expected: 1, found: 2 }
        );
    }

    #[test]
    fn basic_conditions_accept_and_reject() {
        // Two vectors share a zero first coordinate.
        let bad = vs(&[&[0, 1], &[0, 2], &[1, 1]]);
        let violation = check_basic_conditions(&bad).unwrap_err();
        assert_eq!(
            violation,
            Violation::ZeroColumn { coord: 0, count: 2, vector: Some(dv(&[0, 1])) }
        );
        assert_eq!(violation.condition(), 2);

        assert!(check_basic_conditions(&k5_set()).is_ok());
        assert!(check_basic_conditions(&vs(&[&[0]])).is_ok());
    }

    #[test]
    fn basic_conditions_report_shape_violations_first() {
        let negative = vs(&[&[-1, 2], &[0, 1], &[1, 0]]);
        assert_eq!(
            check_basic_conditions(&negative).unwrap_err(),
            Violation::VectorShape { vector: dv(&[-1, 2]) }
        );
        let two_zeros = vs(&[&[0, 0], &[1, 2]]);
        assert_eq!(
            check_basic_conditions(&two_zeros).unwrap_err(),
            Violation::VectorShape { vector: dv(&[0, 0]) }
        );
        // No vector is zero in the second coordinate.
        let missing = vs(&[&[0, 1], &[1, 2]]);
        assert_eq!(
            check_basic_conditions(&missing).unwrap_err(),
            Violation::ZeroColumn { coord: 1, count: 0, vector: None }
        );
    }

    #[test]
    fn realizability_of_named_sets() {
        assert!(is_realizable(&p5_set()));
        assert!(is_realizable(&c10_set()));
        assert!(is_realizable(&k5_set()));
        assert!(!is_realizable(&vs(&[&[0, 1], &[0, 2], &[1, 1]])));
    }

    #[test]
    fn descent_failure_names_the_smallest_offender() {
        // (0,2) needs a member with second coordinate 1 next to it; none exists.
        let s = vs(&[&[0, 2], &[2, 0], &[2, 2]]);
        assert_eq!(
            check_realizable(&s).unwrap_err(),
            Violation::NoDescent { vector: dv(&[0, 2]), coord: 1 }
        );
    }

    #[test]
    fn violation_display_wording() {
        let s = vs(&[&[0, 1], &[0, 2], &[1, 1]]);
        let text = alloc::format!("{}", check_basic_conditions(&s).unwrap_err());
        assert!(text.contains("condition 2 violated at coordinate 1"), "{text}");
    }

    #[test]
    fn canonical_of_the_five_path_set_is_a_path() {
        let r = canonical_realization(&p5_set()).unwrap();
        assert_eq!(r.graph().edge_count(), 4);
        let projected = project_realization(&r);
        let expected = vec![
            (dv(&[0, 2]), dv(&[1, 1])),
            (dv(&[0, 2]), dv(&[1, 3])),
            (dv(&[1, 1]), dv(&[2, 0])),
            (dv(&[2, 0]), dv(&[3, 1])),
        ];
        assert_eq!(projected, expected);
        // Landmarks in coordinate order: the vectors zero in coordinates 1, 2.
        assert_eq!(r.representation_of(r.landmarks().members()[0]), &dv(&[0, 2]));
        assert_eq!(r.representation_of(r.landmarks().members()[1]), &dv(&[2, 0]));
        assert_eq!(r.realized_set(), &p5_set());
    }

    #[test]
    fn canonical_of_a_single_vector_is_the_one_vertex_graph() {
        let r = canonical_realization(&vs(&[&[0]])).unwrap();
        assert_eq!(r.graph().vertex_count(), 1);
        assert_eq!(r.graph().edge_count(), 0);
        assert_eq!(project_realization(&r), vec![]);
    }

    #[test]
    fn canonical_of_the_complete_graph_set_is_complete() {
        let r = canonical_realization(&k5_set()).unwrap();
        assert_eq!(r.graph().edge_count(), 10);
        // The four landmarks are the vectors with a zero coordinate.
        for (coord, &lm) in r.landmarks().members().iter().enumerate() {
            assert_eq!(r.representation_of(lm)[coord], 0);
        }
    }

    #[test]
    fn canonical_rejects_unrealizable_sets() {
        let err = canonical_realization(&vs(&[&[0, 1], &[0, 2], &[1, 1]])).unwrap_err();
        assert!(matches!(err, Error::NotRealizable { .. }));
    }

    #[test]
    fn projection_of_the_ten_cycle() {
        let g = Graph::cycle(10);
        let w = LandmarkSet::new(vec![0, 7]).unwrap();
        let r = Realization::new(g, w).unwrap();
        let projected = project_realization(&r);
        assert_eq!(projected.len(), 10);
        assert!(projected.contains(&(dv(&[0, 3]), dv(&[1, 2]))));
        assert!(projected.contains(&(dv(&[1, 4]), dv(&[2, 5]))));
    }

    #[test]
    fn projection_of_the_five_path_realization_matches_canonical() {
        let g = Graph::path(5);
        let w = LandmarkSet::new(vec![1, 3]).unwrap();
        let r = Realization::new(g, w).unwrap();
        let canonical = canonical_realization(&p5_set()).unwrap();
        assert_eq!(project_realization(&r), project_realization(&canonical));
    }

    #[test]
    fn realization_rejects_non_resolving_landmarks() {
        let g = Graph::complete(5);
        let w = LandmarkSet::new(vec![0]).unwrap();
        assert!(matches!(Realization::new(g, w), Err(Error::NotResolving { .. })));
    }

    #[test]
    fn embedding_the_ten_cycle() {
        let g = Graph::cycle(10);
        let w = LandmarkSet::new(vec![0, 7]).unwrap();
        let e = embed_graph(&g, &w, Some(8)).unwrap();
        assert_eq!(e.grid.order(), 8);
        assert_eq!(e.grid.dimension(), 2);
        assert_eq!(e.assignment.len(), 10);
        assert_eq!(e.edges.len(), 10);
        // Default order is the smallest that fits: 1 + 5.
        let fit = embed_graph(&g, &w, None).unwrap();
        assert_eq!(fit.grid.order(), 6);
        assert_eq!(
            embed_graph(&g, &w, Some(3)).unwrap_err(),
            Error::OrderTooSmall { order: 3, required: 6 }
        );
    }

    #[test]
    fn embedding_the_five_path() {
        let g = Graph::path(5);
        let w = LandmarkSet::new(vec![1, 3]).unwrap();
        let e = embed_graph(&g, &w, None).unwrap();
        assert_eq!(e.assignment.len(), 5);
        assert_eq!(e.edges.len(), 4);
        for (x, y) in &e.edges {
            assert!(strong_adjacent(x, y).unwrap());
        }
    }

    #[test]
    fn embedding_the_one_vertex_graph() {
        let g = Graph::new(1);
        let w = LandmarkSet::new(vec![0]).unwrap();
        let e = embed_graph(&g, &w, None).unwrap();
        assert_eq!(e.assignment, vec![dv(&[0])]);
        assert_eq!(e.grid.order(), 1);
        assert!(e.edges.is_empty());
    }

    #[test]
    fn canonical_contains_every_strong_pair() {
        // The canonical graph is the induced subgraph: every strong-adjacent
        // pair of the set is an edge.
        for s in [p5_set(), c10_set(), k5_set()] {
            let r = canonical_realization(&s).unwrap();
            let projected = project_realization(&r);
            let mut expected = Vec::new();
            for (i, x) in s.vectors().iter().enumerate() {
                for y in &s.vectors()[i + 1..] {
                    if strong_adjacent(x, y).unwrap() {
                        expected.push((x.clone(), y.clone()));
                    }
                }
            }
            expected.sort_unstable();
            assert_eq!(projected, expected);
        }
    }
}
