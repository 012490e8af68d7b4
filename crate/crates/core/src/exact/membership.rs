//! Exact point-in-polytope classification with certificates.

use num_traits::{One, Signed, Zero};

use super::hull::{convex_hull, VPolytope};
use super::lp::{LinearProgram, LpOutcome, Relation};
use super::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Location {
    Outside,
    Boundary,
    RelativeInterior,
}

impl Location {
    pub fn as_str(self) -> &'static str {
        match self {
            Location::Outside => "outside",
            Location::Boundary => "boundary",
            Location::RelativeInterior => "relative-interior",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MembershipCertificate {
    /// Convex-combination coefficients over the polytope's vertex list.
    Combination(Vec<Rational>),
    /// `<normal, p> < offset <= <normal, v>` for every vertex `v`.
    Separation {
        normal: Vec<Rational>,
        offset: Rational,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub location: Location,
    /// Interior in the ambient topology, which needs a full-dimensional
    /// polytope.
    pub ambient_interior: bool,
    pub certificate: MembershipCertificate,
}

impl Membership {
    /// Re-checks the certificate against `p` and the polytope.
    pub fn verify(&self, p: &[Rational], poly: &VPolytope) -> bool {
        match &self.certificate {
            MembershipCertificate::Combination(c) => {
                if c.len() != poly.vertices.len()
                    || c.iter().any(Signed::is_negative)
                    || c.iter().fold(Rational::zero(), |a, x| a + x) != Rational::one()
                {
                    return false;
                }
                if self.location == Location::RelativeInterior
                    && c.iter().any(Zero::is_zero)
                    && poly.vertices.len() > 1
                {
                    return false;
                }
                (0..p.len()).all(|k| {
                    let s = poly
                        .vertices
                        .iter()
                        .zip(c)
                        .fold(Rational::zero(), |a, (v, w)| a + &v[k] * w);
                    s == p[k]
                })
            }
            MembershipCertificate::Separation { normal, offset } => {
                self.location == Location::Outside
                    && rational::dot(normal, p) < *offset
                    && poly
                        .vertices
                        .iter()
                        .all(|v| rational::dot(normal, v) >= *offset)
            }
        }
    }
}

/// Classifies `p` against `conv(poly.vertices)`.
///
/// The location is read off the exact H-representation; the convex
/// coefficients come from an independent LP that maximizes the smallest
/// coefficient, which is positive exactly in the relative interior.
pub fn point_in_polytope(p: &[Rational], poly: &VPolytope) -> Membership {
    assert_eq!(p.len(), poly.ambient_dim, "ambient dimensions differ");
    let hull = convex_hull(&poly.vertices);
    let h = &hull.h;

    let violated_eq = h.equations.iter().find(|e| !e.eval(p).is_zero());
    let violated_facet = h.facets.iter().find(|f| f.eval(p).is_negative());
    let separation = match (violated_eq, violated_facet) {
        (Some(e), _) => {
            let normal = rational::int_vec_to_rat(&e.normal);
            let offset = Rational::from_integer(e.offset.clone());
            Some(if e.eval(p).is_negative() {
                (normal, offset)
            } else {
                (normal.into_iter().map(|x| -x).collect(), -offset)
            })
        }
        (None, Some(f)) => Some((
            rational::int_vec_to_rat(&f.normal),
            Rational::from_integer(f.offset.clone()),
        )),
        (None, None) => None,
    };
    if let Some((normal, offset)) = separation {
        return Membership {
            location: Location::Outside,
            ambient_interior: false,
            certificate: MembershipCertificate::Separation { normal, offset },
        };
    }

    let on_boundary = h.facets.iter().any(|f| f.eval(p).is_zero());
    let location = if on_boundary {
        Location::Boundary
    } else {
        Location::RelativeInterior
    };

    let (coeffs, min_coeff) = strict_combination(p, &poly.vertices)
        .expect("H-representation places the point inside the hull");
    let lp_location = if min_coeff.is_positive() || poly.vertices.len() == 1 {
        Location::RelativeInterior
    } else {
        Location::Boundary
    };
    assert_eq!(
        location, lp_location,
        "facet test and LP disagree on relative interior"
    );

    Membership {
        location,
        ambient_interior: location == Location::RelativeInterior && hull.is_full_dimensional(),
        certificate: MembershipCertificate::Combination(coeffs),
    }
}

/// Maximizes `min_i c_i` over convex combinations `sum c_i v_i = p`.
fn strict_combination(
    p: &[Rational],
    vertices: &[Vec<Rational>],
) -> Option<(Vec<Rational>, Rational)> {
    // Variables: mu_0..mu_{k-1} >= 0, eps >= 0 with c_i = mu_i + eps.
    let k = vertices.len();
    let mut lp = LinearProgram::new(k + 1);
    let mut obj = vec![Rational::zero(); k + 1];
    obj[k] = Rational::one();
    lp.set_objective(obj);
    let mut sum = vec![Rational::one(); k + 1];
    sum[k] = Rational::from_integer(k.into());
    lp.add_constraint(sum, Relation::Eq, Rational::one());
    for (coord, target) in p.iter().enumerate() {
        let mut row: Vec<Rational> = vertices.iter().map(|v| v[coord].clone()).collect();
        row.push(vertices.iter().fold(Rational::zero(), |a, v| a + &v[coord]));
        lp.add_constraint(row, Relation::Eq, target.clone());
    }
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => {
            let eps = x[k].clone();
            Some((x[..k].iter().map(|m| m + &eps).collect(), eps))
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("coefficients are bounded by the simplex"),
    }
}
