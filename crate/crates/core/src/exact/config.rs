//! Point configurations and the lattice condition on them.

use num_traits::{One, Signed};

use super::hull::{convex_hull, ConvexHull};
use super::lattice::lattice_points;
use super::linalg::{determinant, rank};
use super::rational::{factorial, rat, Int, Rational};
use super::smith::elementary_divisors;
use crate::error::{Error, Result};

/// Labels are bitmasks in a `u64`.
pub const MAX_POINTS: usize = 64;

/// An ordered list of distinct lattice points `a_0, ..., a_N` in `Z^n`
/// with full-dimensional affine span. Labels are positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() || dim == 0 {
            return Err(Error::Empty);
        }
        if points.len() > MAX_POINTS {
            return Err(Error::TooManyPoints {
                points: points.len(),
                max: MAX_POINTS,
            });
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let diffs: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| p.iter().zip(&points[0]).map(|(x, y)| rat(x - y)).collect())
            .collect();
        let r = rank(&diffs);
        if r != dim {
            return Err(Error::NotFullDimensional { rank: r, dim });
        }
        Ok(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points, `N + 1`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn rational_point(&self, i: usize) -> Vec<Rational> {
        self.points[i].iter().map(|&x| rat(x)).collect()
    }

    pub fn rational_points(&self) -> Vec<Vec<Rational>> {
        (0..self.len()).map(|i| self.rational_point(i)).collect()
    }

    /// `Q = conv(A)`.
    pub fn hull(&self) -> ConvexHull {
        convex_hull(&self.rational_points())
    }

    /// Signed determinant `det(a_{i1} - a_{i0}, ..., a_{in} - a_{i0})`.
    pub fn oriented_det(&self, cell: &[usize]) -> Rational {
        assert_eq!(cell.len(), self.dim + 1, "simplex needs n + 1 labels");
        let base = &self.points[cell[0]];
        let m: Vec<Vec<Rational>> = cell[1..]
            .iter()
            .map(|&i| {
                self.points[i]
                    .iter()
                    .zip(base)
                    .map(|(x, y)| rat(x - y))
                    .collect()
            })
            .collect();
        determinant(&m)
    }

    /// `n! Vol(conv(cell))` as an integer.
    pub fn normalized_volume(&self, cell: &[usize]) -> Int {
        self.oriented_det(cell).abs().to_integer()
    }

    /// Euclidean volume with `Vol(standard simplex) = 1/n!`.
    pub fn simplex_volume(&self, cell: &[usize]) -> Rational {
        self.oriented_det(cell).abs() / Rational::from_integer(factorial(self.dim))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarViolation {
    /// A lattice point of `Q` that is not in the configuration.
    MissingLatticePoint(Vec<Int>),
    /// The differences `a_i - a_0` generate a sublattice of this index.
    LatticeIndex { index: Int, divisors: Vec<Int> },
}

impl std::fmt::Display for StarViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StarViolation::MissingLatticePoint(p) => {
                let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "missing lattice point {}", coords.join(" "))
            }
            StarViolation::LatticeIndex { index, .. } => write!(f, "lattice index {index} > 1"),
        }
    }
}

/// A configuration known to satisfy both lattice conditions.
#[derive(Clone, Debug)]
pub struct ValidatedConfig {
    config: PointConfiguration,
}

impl ValidatedConfig {
    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn into_inner(self) -> PointConfiguration {
        self.config
    }
}

impl std::ops::Deref for ValidatedConfig {
    type Target = PointConfiguration;
    fn deref(&self) -> &PointConfiguration {
        &self.config
    }
}

/// Checks that `A = Q ∩ Z^n` and that `A` affinely generates `Z^n`.
pub fn validate_star(
    config: &PointConfiguration,
) -> std::result::Result<ValidatedConfig, StarViolation> {
    let hull = config.hull();
    let lattice = lattice_points(&hull.h, 1).expect("hull of finitely many points is bounded");
    for p in lattice {
        let as_i64: Vec<i64> = p
            .iter()
            .map(|x| i64::try_from(x).expect("coordinate fits"))
            .collect();
        if !config.points.contains(&as_i64) {
            return Err(StarViolation::MissingLatticePoint(p));
        }
    }
    let diffs: Vec<Vec<Int>> = config.points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&config.points[0])
                .map(|(x, y)| Int::from(x - y))
                .collect()
        })
        .collect();
    let divisors = elementary_divisors(&diffs);
    let index = divisors.iter().fold(Int::one(), |acc, d| acc * d);
    if !index.is_one() {
        return Err(StarViolation::LatticeIndex { index, divisors });
    }
    Ok(ValidatedConfig {
        config: config.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    fn cfg(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PointConfiguration::new(1, vec![]), Err(Error::Empty));
        assert_eq!(
            PointConfiguration::new(1, vec![vec![0], vec![0]]),
            Err(Error::DuplicatePoint {
                first: 0,
                second: 1
            })
        );
        assert_eq!(
            PointConfiguration::new(2, vec![vec![0, 0], vec![1, 1], vec![2, 2]]),
            Err(Error::NotFullDimensional { rank: 1, dim: 2 })
        );
        assert_eq!(
            PointConfiguration::new(2, vec![vec![0, 0], vec![1]]),
            Err(Error::DimensionMismatch {
                index: 1,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn star_condition() {
        assert!(validate_star(&cfg(1, &[&[0], &[1], &[2]])).is_ok());
        assert_eq!(
            validate_star(&cfg(1, &[&[0], &[2]])).unwrap_err(),
            StarViolation::MissingLatticePoint(vec![Int::from(1)])
        );
        assert_eq!(
            validate_star(&cfg(1, &[&[0], &[2]]))
                .unwrap_err()
                .to_string(),
            "missing lattice point 1"
        );
        assert!(validate_star(&cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).is_ok());
        // Q ∩ Z^2 is enumerated by brute force over the bounding box.
        assert_eq!(
            validate_star(&cfg(2, &[&[0, 0], &[2, 0], &[0, 2]])).unwrap_err(),
            StarViolation::MissingLatticePoint(vec![Int::from(0), Int::from(1)])
        );
    }

    #[test]
    fn reeve_tetrahedron_has_index_two() {
        // No lattice points besides the vertices, but the vertices
        // generate an index-2 sublattice.
        let c = cfg(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        match validate_star(&c).unwrap_err() {
            StarViolation::LatticeIndex { index, .. } => assert_eq!(index, Int::from(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn simplex_volumes() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 2]]);
        assert_eq!(c.simplex_volume(&[0, 1, 2]), ratio(1, 2));
        assert_eq!(c.simplex_volume(&[0, 1, 3]), rat(0));
        assert_eq!(c.simplex_volume(&[0, 1, 4]), rat(1));
        let d3 = cfg(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(d3.simplex_volume(&[0, 1, 2, 3]), ratio(1, 6));
    }

    proptest::proptest! {
        #[test]
        fn simplex_volume_invariances(
            raw in proptest::collection::vec(-4i64..5, 6),
            shift in proptest::collection::vec(-5i64..6, 2),
        ) {
            let pts: Vec<Vec<i64>> = raw.chunks(2).map(|c| c.to_vec()).collect();
            let moved: Vec<Vec<i64>> = pts.iter().map(|p| vec![p[0] + shift[0], p[1] + shift[1]]).collect();
            let extra = vec![vec![100, 0], vec![0, 100]];
            let build = |mut p: Vec<Vec<i64>>| {
                p.extend(extra.clone());
                p
            };
            let (a, b) = (build(pts.clone()), build(moved));
            let distinct = |p: &Vec<Vec<i64>>| (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i] != p[j]));
            proptest::prop_assume!(distinct(&a) && distinct(&b));
            let ca = PointConfiguration::new(2, a).unwrap();
            let cb = PointConfiguration::new(2, b).unwrap();
            let v = ca.simplex_volume(&[0, 1, 2]);
            proptest::prop_assert_eq!(&v, &cb.simplex_volume(&[0, 1, 2]));
            for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
                proptest::prop_assert_eq!(&v, &ca.simplex_volume(&perm));
            }
        }
    }
}
