//! Structural checks on subdivisions: cover, disjoint interiors, and
//! face-to-face intersections.

use num_traits::{One, Zero};

use super::{Cell, Subdivision};
use crate::error::{Error, Result};
use crate::exact::linalg::rank;
use crate::exact::lp::{LinearProgram, LpOutcome, Relation};
use crate::exact::rational::{sub, Rational};
use crate::exact::volume::volume;
use crate::exact::PointConfiguration;

/// Whether `conv(C) ∩ conv(C')` is a common face cut out by a hyperplane
/// that contains exactly the shared labels of both cells.
///
/// Solved as LP feasibility for `(a, b)`: `<a, p> = b` on shared labels,
/// `>= b + 1` on the rest of `C`, `<= b - 1` on the rest of `C'`.
pub fn cells_meet_properly(config: &PointConfiguration, c: &Cell, d: &Cell) -> bool {
    let n = config.dim();
    let mut lp = LinearProgram::new(n + 1);
    for v in 0..=n {
        lp.set_free(v);
    }
    let row = |i: usize| {
        let mut r = config.rational_point(i);
        r.push(-Rational::one());
        r
    };
    for &i in c.labels() {
        if d.contains(i) {
            lp.add_constraint(row(i), Relation::Eq, Rational::zero());
        } else {
            lp.add_constraint(row(i), Relation::Ge, Rational::one());
        }
    }
    for &i in d.labels().iter().filter(|&&i| !c.contains(i)) {
        lp.add_constraint(row(i), Relation::Le, -Rational::one());
    }
    !matches!(lp.solve(), LpOutcome::Infeasible)
}

impl Subdivision {
    /// Verifies that the cells are full-dimensional, cover `Q` (volumes
    /// add up) and pairwise meet in common faces.
    pub fn verify(&self, config: &PointConfiguration) -> Result<()> {
        let n = config.dim();
        let points = config.rational_points();
        let mut total = Rational::zero();
        for cell in self.cells() {
            if cell.labels().iter().any(|&i| i >= config.len()) {
                return Err(Error::Internal(format!(
                    "cell {cell:?} has an unknown label"
                )));
            }
            let pts: Vec<Vec<Rational>> =
                cell.labels().iter().map(|&i| points[i].clone()).collect();
            let diffs: Vec<Vec<Rational>> = pts.iter().map(|p| sub(p, &pts[0])).collect();
            if rank(&diffs) != n {
                return Err(Error::Internal(format!(
                    "cell {cell:?} is not full-dimensional"
                )));
            }
            total += volume(&pts);
        }
        let q = volume(&points);
        if total != q {
            return Err(Error::Internal(format!(
                "cell volumes sum to {total}, Vol(Q) = {q}"
            )));
        }
        let cells = self.cells();
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if !cells_meet_properly(config, &cells[i], &cells[j]) {
                    return Err(Error::Internal(format!(
                        "cells {:?} and {:?} do not meet in a common face",
                        cells[i], cells[j]
                    )));
                }
            }
        }
        Ok(())
    }
}
