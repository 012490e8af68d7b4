//! The secondary polytope as the hull of the GKZ vectors of all
//! triangulations.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::facets::facet_equation;
use super::{gkz_vector, FacetEquation};
use crate::error::{Error, Result};
use crate::exact::hull::{convex_hull, ConvexHull};
use crate::exact::rational::{int_vec_to_rat, Int, Rational};
use crate::exact::PointConfiguration;
use crate::subdivision::{
    enumerate_triangulations, is_regular, regular_subdivision, HeightFunction, Regularity,
    Subdivision,
};

#[derive(Clone, Debug)]
pub struct TriangulationEntry {
    pub triangulation: Subdivision,
    pub gkz: Vec<Int>,
    pub regularity: Regularity,
}

#[derive(Clone, Debug)]
pub struct CoarseSubdivision {
    pub subdivision: Subdivision,
    /// Heights inducing the subdivision: the facet's inner normal.
    pub heights: HeightFunction,
    pub equation: FacetEquation,
}

#[derive(Clone, Debug)]
pub struct SecondaryPolytope {
    /// Every triangulation, in canonical order.
    pub triangulations: Vec<TriangulationEntry>,
    /// Hull of the GKZ vectors, listed in triangulation order.
    pub hull: ConvexHull,
    /// `vertex_triangulations[k]` is the triangulation whose GKZ vector is
    /// the `k`-th vertex.
    pub vertex_triangulations: Vec<usize>,
    /// `coarse[f]` is the coarse subdivision of facet `hull.h.facets[f]`.
    pub coarse: Vec<CoarseSubdivision>,
}

impl SecondaryPolytope {
    pub fn dim(&self) -> usize {
        self.hull.dim
    }

    pub fn gkz_points(&self) -> &[Vec<Rational>] {
        self.hull.points()
    }

    pub fn regular_count(&self) -> usize {
        self.triangulations
            .iter()
            .filter(|t| t.regularity.is_regular())
            .count()
    }
}

/// Enumerates all triangulations, takes the hull of their GKZ vectors and
/// cross-checks dimension, vertex/regularity correspondence and facets.
pub fn secondary_polytope(config: &PointConfiguration, cap: usize) -> Result<SecondaryPolytope> {
    let triangulations: Vec<TriangulationEntry> = enumerate_triangulations(config, cap)?
        .into_par_iter()
        .map(|t| TriangulationEntry {
            gkz: gkz_vector(config, &t),
            regularity: is_regular(config, &t),
            triangulation: t,
        })
        .collect();

    for (i, e) in triangulations.iter().enumerate() {
        if let Regularity::Regular(w) = &e.regularity {
            if regular_subdivision(config, w)? != e.triangulation {
                return Err(Error::Internal(format!(
                    "regularity witness of triangulation {i} fails"
                )));
            }
        } else if !e.regularity.verify_certificate(config.len()) {
            return Err(Error::Internal(format!(
                "non-regularity certificate of triangulation {i} fails"
            )));
        }
    }

    let points: Vec<Vec<Rational>> = triangulations
        .iter()
        .map(|e| int_vec_to_rat(&e.gkz))
        .collect();
    let hull = convex_hull(&points);
    let expected = config.len() - 1 - config.dim();
    if hull.dim != expected {
        return Err(Error::Internal(format!(
            "secondary polytope has dimension {}, expected {expected}",
            hull.dim
        )));
    }

    let vertex_gkz: BTreeSet<&Vec<Int>> = hull
        .vertex_indices
        .iter()
        .map(|&i| &triangulations[i].gkz)
        .collect();
    let regular_gkz: BTreeSet<&Vec<Int>> = triangulations
        .iter()
        .filter(|e| e.regularity.is_regular())
        .map(|e| &e.gkz)
        .collect();
    if vertex_gkz != regular_gkz {
        return Err(Error::Internal(
            "hull vertices differ from the GKZ vectors of regular triangulations".into(),
        ));
    }
    if let Some(&i) = hull
        .vertex_indices
        .iter()
        .find(|&&i| !triangulations[i].regularity.is_regular())
    {
        return Err(Error::Internal(format!(
            "vertex {i} comes from a non-regular triangulation"
        )));
    }

    let mut sp = SecondaryPolytope {
        vertex_triangulations: hull.vertex_indices.clone(),
        triangulations,
        hull,
        coarse: Vec::new(),
    };

    let coarse: Vec<Result<CoarseSubdivision>> = sp
        .hull
        .h
        .facets
        .par_iter()
        .map(|f| {
            let heights = HeightFunction::new(config, int_vec_to_rat(&f.normal))?;
            let subdivision = regular_subdivision(config, &heights)?;
            let equation = facet_equation(config, &sp, &heights)?;
            Ok(CoarseSubdivision {
                subdivision,
                heights,
                equation,
            })
        })
        .collect();
    sp.coarse = coarse.into_iter().collect::<Result<_>>()?;
    let distinct: BTreeSet<&Subdivision> = sp.coarse.iter().map(|c| &c.subdivision).collect();
    if distinct.len() != sp.coarse.len() {
        return Err(Error::Internal(
            "two facets induce the same subdivision".into(),
        ));
    }
    Ok(sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::DEFAULT_SIMPLEX_CAP;

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }

    fn vertex_set(sp: &SecondaryPolytope) -> BTreeSet<Vec<Rational>> {
        sp.hull.v.vertices.iter().cloned().collect()
    }

    #[test]
    fn conic() {
        let c = PointConfiguration::new(1, vec![vec![0], vec![1], vec![2]]).unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(sp.dim(), 1);
        assert_eq!(
            vertex_set(&sp),
            [rats(&[1, 2, 1]), rats(&[2, 0, 2])].into_iter().collect()
        );
        assert_eq!(sp.coarse.len(), 2);
    }

    #[test]
    fn square() {
        let c = PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
            .unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(sp.dim(), 1);
        assert_eq!(
            vertex_set(&sp),
            [rats(&[2, 1, 1, 2]), rats(&[1, 2, 2, 1])]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn simplex_vertices_give_a_point() {
        let c = PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(sp.dim(), 0);
        assert_eq!(sp.hull.v.vertices, vec![rats(&[1, 1, 1])]);
        assert!(sp.coarse.is_empty());
    }

    #[test]
    fn twisted_cubic() {
        let c = PointConfiguration::new(1, (0..4).map(|x| vec![x]).collect()).unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(sp.triangulations.len(), 4);
        assert_eq!(sp.regular_count(), 4);
        assert_eq!(sp.dim(), 2);
        let expected: BTreeSet<_> = [
            rats(&[1, 2, 2, 1]),
            rats(&[1, 3, 0, 2]),
            rats(&[2, 0, 3, 1]),
            rats(&[3, 0, 0, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(vertex_set(&sp), expected);
        // A quadrilateral: four facets, four coarse subdivisions.
        assert_eq!(sp.coarse.len(), 4);
    }

    #[test]
    fn non_regular_triangulations_are_interior_to_the_hull() {
        let c = PointConfiguration::new(
            2,
            vec![
                vec![0, 0],
                vec![4, 0],
                vec![0, 4],
                vec![1, 1],
                vec![2, 1],
                vec![1, 2],
            ],
        )
        .unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(sp.dim(), 3);
        assert_eq!(sp.triangulations.len() - sp.regular_count(), 2);
        assert_eq!(sp.vertex_triangulations.len(), sp.regular_count());
    }
}
