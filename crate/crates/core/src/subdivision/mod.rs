//! Regular subdivisions, triangulation enumeration, regularity and
//! refinement.

pub mod circuits;
pub mod enumerate;
pub mod flips;
pub mod refine;
pub mod regular;
pub mod regularity;
pub mod verify;

use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::exact::PointConfiguration;

pub use circuits::{circuits, Circuit};
pub use enumerate::{enumerate_triangulations, DEFAULT_SIMPLEX_CAP};
pub use flips::{fine_triangulation, flip_neighbours, flip_walk};
pub use refine::refines;
pub use regular::{lower_faces, regular_subdivision};
pub use regularity::{is_regular, Regularity};

/// Heights `ω_0, ..., ω_N`, one per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightFunction(Vec<Rational>);

impl HeightFunction {
    pub fn new(config: &PointConfiguration, heights: Vec<Rational>) -> Result<Self> {
        if heights.len() != config.len() {
            return Err(Error::HeightLength {
                expected: config.len(),
                found: heights.len(),
            });
        }
        Ok(Self(heights))
    }

    pub fn zero(config: &PointConfiguration) -> Self {
        Self(vec![Rational::from_integer(0.into()); config.len()])
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// The lifted points `(a_i, ω_i)`.
    pub fn lift(&self, config: &PointConfiguration) -> Vec<Vec<Rational>> {
        (0..config.len())
            .map(|i| {
                let mut p = config.rational_point(i);
                p.push(self.0[i].clone());
                p
            })
            .collect()
    }
}

/// A sorted set of labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(Vec<usize>);

impl Cell {
    pub fn new(mut labels: Vec<usize>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        Cell(labels)
    }

    pub fn from_mask(mask: u64) -> Self {
        Cell((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn contains(&self, label: usize) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A polyhedral subdivision of `(Q, A)` by its maximal cells, kept in
/// canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subdivision {
    cells: Vec<Cell>,
    is_triangulation: bool,
}

impl Subdivision {
    pub fn new(config: &PointConfiguration, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        cells.dedup();
        let n = config.dim();
        let is_triangulation = cells
            .iter()
            .all(|c| c.len() == n + 1 && !config.normalized_volume(c.labels()).eq(&0.into()));
        Self {
            cells,
            is_triangulation,
        }
    }

    pub fn from_masks(config: &PointConfiguration, masks: &[u64]) -> Self {
        Self::new(config, masks.iter().map(|&m| Cell::from_mask(m)).collect())
    }

    pub fn trivial(config: &PointConfiguration) -> Self {
        Self::new(config, vec![Cell::new((0..config.len()).collect())])
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_triangulation(&self) -> bool {
        self.is_triangulation
    }

    pub fn masks(&self) -> Vec<u64> {
        self.cells.iter().map(Cell::mask).collect()
    }

    /// Labels that are vertices of some cell of a triangulation.
    pub fn used_labels(&self) -> u64 {
        self.cells.iter().fold(0, |m, c| m | c.mask())
    }
}

impl std::fmt::Display for Subdivision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self
            .cells
            .iter()
            .map(|c| {
                let l: Vec<String> = c.labels().iter().map(ToString::to_string).collect();
                format!("[{}]", l.join(","))
            })
            .collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// Iterates over `k`-subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        current = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if next[i] < m - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                break Some(next);
            }
        };
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_order() {
        let c: Vec<Vec<usize>> = combinations(4, 2).collect();
        assert_eq!(
            c,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn cells_are_canonical() {
        assert_eq!(Cell::new(vec![2, 0, 1, 0]).labels(), &[0, 1, 2]);
        assert_eq!(Cell::from_mask(0b1010).labels(), &[1, 3]);
        assert_eq!(Cell::new(vec![1, 3]).mask(), 0b1010);
    }
}
