//! Lattice points of dilated polytopes by bounding-box scan.

use num_traits::Zero;

use super::hull::HPolytope;
use super::lp::{LinearProgram, LpOutcome, Relation};
use super::rational::{int_to_rat, Int, Rational};
use crate::error::{Error, Result};

/// All integer points of `l * P`, in lexicographic order.
pub fn lattice_points(poly: &HPolytope, dilation: u64) -> Result<Vec<Vec<Int>>> {
    let l = Int::from(dilation);
    let n = poly.ambient_dim;
    let mut bounds = Vec::with_capacity(n);
    for coord in 0..n {
        let lo = coordinate_extreme(poly, &l, coord, false)?;
        let hi = coordinate_extreme(poly, &l, coord, true)?;
        bounds.push((lo.ceil().to_integer(), hi.floor().to_integer()));
    }
    let mut out = Vec::new();
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return Ok(out);
    }
    let mut current: Vec<Int> = bounds.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        let as_rat: Vec<Rational> = current.iter().map(int_to_rat).collect();
        if poly.contains_dilated(&as_rat, &l) {
            out.push(current.clone());
        }
        // Odometer, last coordinate fastest.
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if current[k] < bounds[k].1 {
                current[k] += 1;
                break;
            }
            current[k] = bounds[k].0.clone();
        }
    }
}

fn coordinate_extreme(poly: &HPolytope, l: &Int, coord: usize, maximize: bool) -> Result<Rational> {
    let n = poly.ambient_dim;
    let mut lp = LinearProgram::new(n);
    for v in 0..n {
        lp.set_free(v);
    }
    let mut obj = vec![Rational::zero(); n];
    obj[coord] = if maximize {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    };
    lp.set_objective(obj);
    for (halfspaces, rel) in [
        (&poly.equations, Relation::Eq),
        (&poly.facets, Relation::Ge),
    ] {
        for h in halfspaces {
            lp.add_constraint(
                h.normal.iter().map(int_to_rat).collect(),
                rel,
                Rational::from_integer(&h.offset * l),
            );
        }
    }
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => Ok(if maximize { value } else { -value }),
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => Err(Error::Internal("empty polytope in lattice scan".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::hull::convex_hull;
    use crate::exact::rational::{binomial, rat_vec};

    fn hull(v: &[&[i64]]) -> HPolytope {
        convex_hull(&v.iter().map(|p| rat_vec(p)).collect::<Vec<_>>()).h
    }

    #[test]
    fn segment_and_square() {
        let seg = hull(&[&[0], &[2]]);
        let pts = lattice_points(&seg, 1).unwrap();
        assert_eq!(
            pts,
            vec![vec![Int::from(0)], vec![Int::from(1)], vec![Int::from(2)]]
        );
        let sq = hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(lattice_points(&sq, 2).unwrap().len(), 9);
    }

    #[test]
    fn dilated_triangle_counts_match_binomials() {
        let tri = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        for l in 1..=4u64 {
            assert_eq!(
                Int::from(lattice_points(&tri, l).unwrap().len()),
                binomial(l as usize + 2, 2)
            );
        }
        assert_eq!(lattice_points(&tri, 3).unwrap().len(), 10);
    }

    #[test]
    fn lower_dimensional_polytope() {
        // Segment from (0,0) to (2,2) in the plane: (0,0), (1,1), (2,2).
        let seg = hull(&[&[0, 0], &[2, 2]]);
        assert_eq!(lattice_points(&seg, 1).unwrap().len(), 3);
        assert_eq!(lattice_points(&seg, 2).unwrap().len(), 5);
    }

    proptest::proptest! {
        #[test]
        fn counts_are_monotone_in_dilation(
            raw in proptest::collection::vec(proptest::collection::vec(-2i64..3, 2), 3..6),
        ) {
            let pts: Vec<Vec<Rational>> = raw.iter().map(|p| rat_vec(p)).collect();
            let h = convex_hull(&pts).h;
            let counts: Vec<usize> = (1..=3).map(|l| lattice_points(&h, l).unwrap().len()).collect();
            proptest::prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
