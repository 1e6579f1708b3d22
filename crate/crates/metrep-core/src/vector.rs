//! Distance vectors and finite candidate sets of them.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::error::{Error, Result};

/// A point of `Z^n`. Produced by graph operations as the vector of distances
/// from a vertex to each landmark; accepted from outside as a candidate for
/// one, in which case coordinates may still be negative until validated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistanceVector(Vec<i32>);

impl DistanceVector {
    pub fn new(coords: Vec<i32>) -> Self {
        DistanceVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, i32> {
        self.0.iter()
    }

    /// Number of coordinates equal to zero.
    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&c| c == 0).count()
    }

    /// Chebyshev distance to `other`, the metric of the strong product.
    /// Both vectors must have the same length.
    pub(crate) fn chebyshev(&self, other: &DistanceVector) -> i32 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }
}

impl Index<usize> for DistanceVector {
    type Output = i32;

    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl From<Vec<i32>> for DistanceVector {
    fn from(coords: Vec<i32>) -> Self {
        DistanceVector(coords)
    }
}

impl From<&[i32]> for DistanceVector {
    fn from(coords: &[i32]) -> Self {
        DistanceVector(coords.to_vec())
    }
}

impl<const N: usize> From<[i32; N]> for DistanceVector {
    fn from(coords: [i32; N]) -> Self {
        DistanceVector(coords.to_vec())
    }
}

impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of pairwise distinct vectors of a fixed dimension, the
/// candidate metric-representation set. Vectors are kept sorted
/// lexicographically, which fixes the iteration order everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    dimension: usize,
    vectors: Vec<DistanceVector>,
}

impl VectorSet {
    pub fn new(
        dimension: usize,
        vectors: impl IntoIterator<Item = DistanceVector>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut vectors: Vec<DistanceVector> = vectors.into_iter().collect();
        if vectors.is_empty() {
            return Err(Error::EmptyVectorSet);
        }
        for v in &vectors {
            if v.len() != dimension {
                return Err(Error::LengthMismatch { expected: dimension, found: v.len() });
            }
        }
        vectors.sort_unstable();
        for pair in vectors.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVector { vector: pair[0].clone() });
            }
        }
        Ok(VectorSet { dimension, vectors })
    }

    /// Builds a set from the vectors alone, taking the dimension from the first.
    pub fn from_vectors(vectors: impl IntoIterator<Item = DistanceVector>) -> Result<Self> {
        let vectors: Vec<DistanceVector> = vectors.into_iter().collect();
        let dimension = vectors.first().ok_or(Error::EmptyVectorSet)?.len();
        VectorSet::new(dimension, vectors)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The vectors in lexicographic order.
    pub fn vectors(&self) -> &[DistanceVector] {
        &self.vectors
    }

    pub fn iter(&self) -> core::slice::Iter<'_, DistanceVector> {
        self.vectors.iter()
    }

    pub fn contains(&self, x: &DistanceVector) -> bool {
        self.position(x).is_some()
    }

    /// Index of `x` in sorted order, if present.
    pub fn position(&self, x: &DistanceVector) -> Option<usize> {
        self.vectors.binary_search(x).ok()
    }

    /// Largest coordinate over all vectors; 0 when every coordinate is negative.
    pub fn max_coordinate(&self) -> i32 {
        self.vectors
            .iter()
            .flat_map(|v| v.iter().copied())
            .max()
            .unwrap_or(0)
            .max(0)
    }
}
