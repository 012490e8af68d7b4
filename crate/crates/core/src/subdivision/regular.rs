//! Regular subdivisions: lift, take lower faces, project.

use num_traits::Signed;

use super::{Cell, HeightFunction, Subdivision};
use crate::error::{Error, Result};
use crate::exact::hull::convex_hull;
use crate::exact::linalg::rank;
use crate::exact::rational::{sub, Rational};
use crate::exact::PointConfiguration;

/// Maximal lower faces of the hull of `lifted` points in `R^{m+1}`, each
/// given by every input index lying on it.
///
/// A facet is lower when its outer normal has negative last coordinate.
/// If the lifted points lie in one non-vertical hyperplane the whole hull
/// is the single lower face.
pub fn lower_faces(lifted: &[Vec<Rational>]) -> Result<Vec<Vec<usize>>> {
    let width = lifted.first().map_or(0, Vec::len);
    if width < 2 {
        return Err(Error::DegenerateLift);
    }
    let m = width - 1;
    let base: Vec<Rational> = lifted[0][..m].to_vec();
    let diffs: Vec<Vec<Rational>> = lifted.iter().map(|p| sub(&p[..m], &base)).collect();
    if rank(&diffs) != m {
        return Err(Error::DegenerateLift);
    }

    let hull = convex_hull(lifted);
    if hull.dim == m {
        return Ok(vec![(0..lifted.len()).collect()]);
    }
    let mut faces: Vec<Vec<usize>> = hull
        .h
        .facets
        .iter()
        .filter(|f| f.normal[m].is_positive())
        .map(|f| hull.facet_incidence(f))
        .collect();
    faces.sort();
    Ok(faces)
}

/// The subdivision `S(A, ω)`.
pub fn regular_subdivision(
    config: &PointConfiguration,
    heights: &HeightFunction,
) -> Result<Subdivision> {
    if heights.values().len() != config.len() {
        return Err(Error::HeightLength {
            expected: config.len(),
            found: heights.values().len(),
        });
    }
    let faces = lower_faces(&heights.lift(config))?;
    Ok(Subdivision::new(
        config,
        faces.into_iter().map(Cell::new).collect(),
    ))
}

/// Affine functions `ω_j = <m, a_j> + b` induce the trivial subdivision.
pub fn is_affine_height(config: &PointConfiguration, heights: &HeightFunction) -> bool {
    let lifted = heights.lift(config);
    let base = lifted[0].clone();
    let diffs: Vec<Vec<Rational>> = lifted.iter().map(|p| sub(p, &base)).collect();
    rank(&diffs) == config.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_vec};

    fn cfg(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn h(c: &PointConfiguration, w: &[i64]) -> HeightFunction {
        HeightFunction::new(c, rat_vec(w)).unwrap()
    }

    #[test]
    fn square_lower_faces() {
        let lifted: Vec<Vec<Rational>> = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 1]]
            .iter()
            .map(|p| rat_vec(p))
            .collect();
        assert_eq!(
            lower_faces(&lifted).unwrap(),
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn flat_lift_is_single_face() {
        let lifted: Vec<Vec<Rational>> = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|p| rat_vec(p))
            .collect();
        assert_eq!(lower_faces(&lifted).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn segment_lower_faces() {
        let lifted: Vec<Vec<Rational>> = [[0, 0], [1, 1], [2, 0]]
            .iter()
            .map(|p| rat_vec(p))
            .collect();
        assert_eq!(lower_faces(&lifted).unwrap(), vec![vec![0, 2]]);
    }

    #[test]
    fn degenerate_lift_rejected() {
        let lifted: Vec<Vec<Rational>> = [[0, 0, 0], [1, 1, 0], [2, 2, 1]]
            .iter()
            .map(|p| rat_vec(p))
            .collect();
        assert_eq!(lower_faces(&lifted), Err(Error::DegenerateLift));
    }

    #[test]
    fn segment_subdivisions() {
        let c = cfg(1, &[&[0], &[1], &[2]]);
        let s = regular_subdivision(&c, &h(&c, &[0, -1, 0])).unwrap();
        assert_eq!(s.to_string(), "{[0,1],[1,2]}");
        assert!(s.is_triangulation());
        let s = regular_subdivision(&c, &h(&c, &[0, 1, 0])).unwrap();
        assert_eq!(s.to_string(), "{[0,2]}");
        assert!(s.is_triangulation());
        let s = regular_subdivision(&c, &HeightFunction::zero(&c)).unwrap();
        assert_eq!(s, Subdivision::trivial(&c));
        assert!(!s.is_triangulation());
    }

    #[test]
    fn height_length_checked() {
        let c = cfg(1, &[&[0], &[1], &[2]]);
        assert_eq!(
            HeightFunction::new(&c, vec![rat(0)]),
            Err(Error::HeightLength {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn affine_heights_detected() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(is_affine_height(&c, &h(&c, &[1, 3, 0, 2])));
        assert!(!is_affine_height(&c, &h(&c, &[0, 0, 0, 1])));
    }
}
