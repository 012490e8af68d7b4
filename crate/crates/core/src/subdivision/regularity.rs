//! Deciding regularity of a triangulation by exact linear programming.
//!
//! `T` is regular iff some heights `ω` put every label `j` outside a cell
//! `C` strictly above the affine interpolant of `ω` on `C`. Writing
//! `β(j, C)` for the barycentric coordinates of `a_j` in `C`, each pair
//! contributes a row `ω_j - Σ_k β_k ω_{c_k} > 0`. Strictness is handled by
//! maximizing a common slack `ε <= 1`. When the optimum is zero, Gordan's
//! alternative provides nonnegative row multipliers summing to one whose
//! combination of rows vanishes, which proves no such `ω` exists.

use num_traits::{One, Signed, Zero};

use super::{HeightFunction, Subdivision};
use crate::exact::linalg::solve;
use crate::exact::lp::{LinearProgram, LpOutcome, Relation};
use crate::exact::rational::{primitive_integer, Rational};
use crate::exact::PointConfiguration;

/// One folding row: label `label` must lie strictly above cell `cell`.
#[derive(Clone, Debug, PartialEq)]
pub struct FoldingRow {
    pub cell: usize,
    pub label: usize,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Regularity {
    /// Heights inducing the triangulation (primitive integers).
    Regular(HeightFunction),
    /// Nonnegative multipliers on folding rows, summing to one, whose
    /// weighted sum of rows is zero.
    NonRegular(Vec<(FoldingRow, Rational)>),
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }

    pub fn witness(&self) -> Option<&HeightFunction> {
        match self {
            Regularity::Regular(w) => Some(w),
            Regularity::NonRegular(_) => None,
        }
    }

    /// Re-checks a non-regularity certificate (a regularity witness is
    /// checked by recomputing the subdivision).
    pub fn verify_certificate(&self, width: usize) -> bool {
        match self {
            Regularity::Regular(_) => true,
            Regularity::NonRegular(rows) => {
                let mut sum = vec![Rational::zero(); width];
                let mut total = Rational::zero();
                for (row, y) in rows {
                    if y.is_negative() {
                        return false;
                    }
                    total += y;
                    for (s, c) in sum.iter_mut().zip(&row.coeffs) {
                        *s += y * c;
                    }
                }
                total.is_one() && sum.iter().all(Zero::is_zero)
            }
        }
    }
}

pub fn folding_rows(config: &PointConfiguration, t: &Subdivision) -> Vec<FoldingRow> {
    let n = config.dim();
    let mut rows = Vec::new();
    for (ci, cell) in t.cells().iter().enumerate() {
        let labels = cell.labels();
        // Columns (a_c, 1) for c in the cell.
        let m: Vec<Vec<Rational>> = (0..=n)
            .map(|k| {
                labels
                    .iter()
                    .map(|&c| {
                        if k < n {
                            Rational::from_integer(config.point(c)[k].into())
                        } else {
                            Rational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        for j in (0..config.len()).filter(|&j| !cell.contains(j)) {
            let mut rhs: Vec<Rational> = config
                .point(j)
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect();
            rhs.push(Rational::one());
            let beta = solve(&m, &rhs).expect("triangulation cells are simplices");
            let mut coeffs = vec![Rational::zero(); config.len()];
            coeffs[j] = Rational::one();
            for (&c, b) in labels.iter().zip(&beta) {
                coeffs[c] -= b;
            }
            rows.push(FoldingRow {
                cell: ci,
                label: j,
                coeffs,
            });
        }
    }
    rows
}

/// Decides whether triangulation `t` is regular.
pub fn is_regular(config: &PointConfiguration, t: &Subdivision) -> Regularity {
    assert!(
        t.is_triangulation(),
        "regularity is decided for triangulations"
    );
    let width = config.len();
    let rows = folding_rows(config, t);
    if rows.is_empty() {
        return Regularity::Regular(HeightFunction::zero(config));
    }

    // Rows sum to zero against constants, so ω >= 0 loses nothing.
    let mut lp = LinearProgram::new(width + 1);
    let mut obj = vec![Rational::zero(); width + 1];
    obj[width] = Rational::one();
    lp.set_objective(obj);
    for row in &rows {
        let mut coeffs = row.coeffs.clone();
        coeffs.push(-Rational::one());
        lp.add_constraint(coeffs, Relation::Ge, Rational::zero());
    }
    lp.add_sparse(&[(width, Rational::one())], Relation::Le, Rational::one());
    let (x, eps) = match lp.solve() {
        LpOutcome::Optimal { x, value } => (x, value),
        other => unreachable!("regularity LP is feasible and bounded: {other:?}"),
    };
    if eps.is_positive() {
        let heights = primitive_integer(&x[..width]);
        return Regularity::Regular(
            HeightFunction::new(
                config,
                heights.into_iter().map(Rational::from_integer).collect(),
            )
            .expect("length matches"),
        );
    }

    // Gordan: y >= 0, Σ y = 1, Σ y_r row_r = 0.
    let mut dual = LinearProgram::new(rows.len());
    for k in 0..width {
        let coeffs: Vec<Rational> = rows.iter().map(|r| r.coeffs[k].clone()).collect();
        dual.add_constraint(coeffs, Relation::Eq, Rational::zero());
    }
    dual.add_constraint(
        vec![Rational::one(); rows.len()],
        Relation::Eq,
        Rational::one(),
    );
    let y = match dual.solve() {
        LpOutcome::Optimal { x, .. } => x,
        other => unreachable!("Gordan alternative must hold when ε = 0: {other:?}"),
    };
    Regularity::NonRegular(
        rows.into_iter()
            .zip(y)
            .filter(|(_, y)| !y.is_zero())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::enumerate::{enumerate_triangulations, DEFAULT_SIMPLEX_CAP};
    use crate::subdivision::regular::regular_subdivision;
    use crate::subdivision::Cell;

    fn cfg(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_simplex_is_regular_with_zero_heights() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let t = Subdivision::trivial(&c);
        assert_eq!(
            is_regular(&c, &t),
            Regularity::Regular(HeightFunction::zero(&c))
        );
    }

    #[test]
    fn square_and_segment_round_trip() {
        for c in [
            cfg(1, &[&[0], &[1], &[2]]),
            cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
        ] {
            for t in enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap() {
                let r = is_regular(&c, &t);
                let w = r.witness().expect("regular");
                assert_eq!(regular_subdivision(&c, w).unwrap(), t);
            }
        }
    }

    /// The "mother of all examples": two nested triangles, whose twisted
    /// triangulations are not regular.
    fn mother() -> PointConfiguration {
        cfg(2, &[&[0, 0], &[4, 0], &[0, 4], &[1, 1], &[2, 1], &[1, 2]])
    }

    #[test]
    fn mother_of_all_examples() {
        let c = mother();
        // Outer 0,1,2; inner 3,4,5. Each outer edge is joined to the inner
        // triangle in a rotationally twisted way.
        let twisted = Subdivision::new(
            &c,
            vec![
                Cell::new(vec![3, 4, 5]),
                Cell::new(vec![0, 1, 3]),
                Cell::new(vec![1, 3, 4]),
                Cell::new(vec![1, 2, 4]),
                Cell::new(vec![2, 4, 5]),
                Cell::new(vec![0, 2, 5]),
                Cell::new(vec![0, 3, 5]),
            ],
        );
        twisted.verify(&c).unwrap();
        let r = is_regular(&c, &twisted);
        assert!(!r.is_regular());
        assert!(r.verify_certificate(c.len()));

        let all = enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        assert!(all.contains(&twisted));
        let non_regular = all
            .iter()
            .filter(|t| !is_regular(&c, t).is_regular())
            .count();
        assert_eq!(non_regular, 2);
    }
}
