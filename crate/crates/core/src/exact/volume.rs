//! Volumes of convex hulls via a recursive pulling triangulation.

use num_traits::{Signed, Zero};

use super::hull::convex_hull;
use super::linalg::determinant;
use super::rational::{factorial, sub, Rational};

/// Triangulates `conv(points)` by pulling its first vertex, recursing into
/// the facets that avoid it. Returns simplices as index lists into `points`,
/// each spanning the hull's affine dimension.
pub fn pulling_triangulation(points: &[Vec<Rational>]) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..points.len()).collect();
    pull(points, &all)
}

fn pull(points: &[Vec<Rational>], subset: &[usize]) -> Vec<Vec<usize>> {
    let local: Vec<Vec<Rational>> = subset.iter().map(|&i| points[i].clone()).collect();
    let hull = convex_hull(&local);
    let verts: Vec<usize> = hull.vertex_indices.iter().map(|&k| subset[k]).collect();
    if verts.len() == hull.dim + 1 {
        return vec![verts];
    }
    let apex = verts[0];
    let mut out = Vec::new();
    for facet in &hull.h.facets {
        let on_facet: Vec<usize> = hull
            .vertex_indices
            .iter()
            .filter(|&&k| facet.eval(&local[k]).is_zero())
            .map(|&k| subset[k])
            .collect();
        if on_facet.contains(&apex) {
            continue;
        }
        for mut simplex in pull(points, &on_facet) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}

/// Lebesgue volume of a full-dimensional point set's hull in `R^n`.
pub fn volume(points: &[Vec<Rational>]) -> Rational {
    let n = points[0].len();
    let nf = Rational::from_integer(factorial(n));
    pulling_triangulation(points)
        .into_iter()
        .filter(|s| s.len() == n + 1)
        .map(|s| {
            let m: Vec<Vec<Rational>> = s[1..]
                .iter()
                .map(|&i| sub(&points[i], &points[s[0]]))
                .collect();
            determinant(&m).abs() / &nf
        })
        .fold(Rational::zero(), |a, v| a + v)
}
