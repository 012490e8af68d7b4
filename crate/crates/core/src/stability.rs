//! H-semistability and H-polystability of the Chow point of `X_A`, read off
//! the projected secondary polytope.
//!
//! `H ⊂ (C^×)^{N+1}` is the subtorus with product of coordinates one. Its
//! weight polytope is the image of `Σsec(A)` under `π_H`, which subtracts
//! the last coordinate from the others. The origin lying in the weight
//! polytope means semistable; lying in its relative interior means
//! polystable.

use num_traits::{One, Zero};

use crate::exact::hull::VPolytope;
use crate::exact::membership::{point_in_polytope, Location, Membership};
use crate::exact::rational::{factorial, Int, Rational};
use crate::exact::volume::volume;
use crate::exact::PointConfiguration;
use crate::secondary::SecondaryPolytope;

/// `π_H(v) = (v_0 - v_N, ..., v_{N-1} - v_N)`.
pub fn project_to_h(v: &[Rational]) -> Vec<Rational> {
    let (last, rest) = v.split_last().expect("nonempty vector");
    rest.iter().map(|x| x - last).collect()
}

/// `N_H = π_H(Σsec)`, spanned by the projected vertices.
pub fn weight_polytope_h(sp: &SecondaryPolytope) -> VPolytope {
    let vertices: Vec<Vec<Rational>> = sp.hull.v.vertices.iter().map(|v| project_to_h(v)).collect();
    VPolytope {
        ambient_dim: sp.hull.v.ambient_dim - 1,
        vertices,
    }
}

/// `n! Vol(Q)`, the degree of `X_A`.
pub fn degree(config: &PointConfiguration) -> Int {
    (volume(&config.rational_points()) * Rational::from_integer(factorial(config.dim())))
        .to_integer()
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalPoint {
    /// `t = (n+1)! Vol(Q) / (N+1)`
    pub t: Rational,
    pub location: Location,
    pub membership: Membership,
}

/// Locates `(t, ..., t)` in `Σsec`.
pub fn diagonal_point(config: &PointConfiguration, sp: &SecondaryPolytope) -> DiagonalPoint {
    let n1 = Rational::from_integer((config.dim() + 1).into());
    let t =
        Rational::from_integer(degree(config)) * n1 / Rational::from_integer(config.len().into());
    let p = vec![t.clone(); config.len()];
    let membership = point_in_polytope(&p, &sp.hull.v);
    DiagonalPoint {
        t,
        location: membership.location,
        membership,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    pub degree: Int,
    pub semistable: bool,
    pub polystable: bool,
    pub diagonal_t: Rational,
    pub diagonal_location: Location,
    pub diagonal_in_boundary: bool,
    /// Location of the origin in `N_H`, with convex coefficients over the
    /// vertices of [`weight_polytope_h`] or a separating functional.
    pub origin: Membership,
}

pub fn stability_verdict(config: &PointConfiguration, sp: &SecondaryPolytope) -> StabilityReport {
    let nh = weight_polytope_h(sp);
    let origin = point_in_polytope(&vec![Rational::zero(); nh.ambient_dim], &nh);
    let diagonal = diagonal_point(config, sp);
    StabilityReport {
        degree: degree(config),
        semistable: origin.location != Location::Outside,
        polystable: origin.location == Location::RelativeInterior,
        diagonal_t: diagonal.t,
        diagonal_in_boundary: diagonal.location == Location::Boundary,
        diagonal_location: diagonal.location,
        origin,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremStatus {
    /// Degree at least two and semistable = polystable.
    Holds,
    /// Degree one: `X_A = P^n`, with `N + 1 = (n+1)! Vol(Q)`.
    ExceptionDegreeOne,
    Violated,
}

impl TheoremStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremStatus::Holds => "holds",
            TheoremStatus::ExceptionDegreeOne => "exception-degree-one",
            TheoremStatus::Violated => "violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub status: TheoremStatus,
    pub stability: StabilityReport,
    /// `N + 1`
    pub labels: usize,
    /// `(n+1)! Vol(Q)`
    pub bound: Int,
    pub labels_equal_bound: bool,
    pub facet_count: usize,
    /// Facets of `Σsec` containing the diagonal point.
    pub diagonal_facets: Vec<usize>,
    /// `π_H` is injective on the affine hull of `Σsec`.
    pub projection_injective: bool,
    /// Diagonal point in the relative interior of `Σsec` forces the origin
    /// into the relative interior of `N_H`.
    pub interior_consistent: bool,
    /// Both membership certificates re-check.
    pub certificates_valid: bool,
}

pub fn verify_main_theorem(config: &PointConfiguration, sp: &SecondaryPolytope) -> TheoremReport {
    let stability = stability_verdict(config, sp);
    let bound = &stability.degree * Int::from(config.dim() + 1);
    let labels = config.len();
    let labels_equal_bound = bound == Int::from(labels);

    let diag = vec![stability.diagonal_t.clone(); labels];
    let diagonal_facets: Vec<usize> = (0..sp.hull.h.facets.len())
        .filter(|&i| sp.hull.h.facets[i].eval(&diag).is_zero())
        .collect();
    let projection_injective = sp
        .hull
        .h
        .equations
        .iter()
        .any(|e| !e.normal.iter().fold(Int::zero(), |a, x| a + x).is_zero());
    let interior_consistent =
        stability.diagonal_location != Location::RelativeInterior || stability.polystable;

    let nh = weight_polytope_h(sp);
    let certificates_valid = stability
        .origin
        .verify(&vec![Rational::zero(); nh.ambient_dim], &nh)
        && point_in_polytope(&diag, &sp.hull.v).verify(&diag, &sp.hull.v);

    let consistent = stability.semistable >= stability.polystable
        && projection_injective
        && interior_consistent
        && certificates_valid;
    let status = if !consistent {
        TheoremStatus::Violated
    } else if stability.degree.is_one() {
        if labels_equal_bound {
            TheoremStatus::ExceptionDegreeOne
        } else {
            TheoremStatus::Violated
        }
    } else if stability.semistable == stability.polystable {
        TheoremStatus::Holds
    } else {
        TheoremStatus::Violated
    };

    TheoremReport {
        status,
        labels,
        bound,
        labels_equal_bound,
        facet_count: sp.hull.h.facets.len(),
        diagonal_facets,
        projection_injective,
        interior_consistent,
        certificates_valid,
        stability,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::membership::MembershipCertificate;
    use crate::exact::rational::{rat, ratio};
    use crate::secondary::secondary_polytope;
    use crate::subdivision::DEFAULT_SIMPLEX_CAP;

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn segment(n: i64) -> PointConfiguration {
        PointConfiguration::new(1, (0..=n).map(|x| vec![x]).collect()).unwrap()
    }

    #[test]
    fn projection() {
        assert_eq!(project_to_h(&rats(&[1, 2, 1])), rats(&[0, 1]));
        assert_eq!(project_to_h(&rats(&[2, 0, 2])), rats(&[0, -2]));
        assert_eq!(project_to_h(&vec![ratio(5, 3); 4]), rats(&[0, 0, 0]));
    }

    #[test]
    fn conic() {
        let c = segment(2);
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        let nh = weight_polytope_h(&sp);
        let mut v = nh.vertices.clone();
        v.sort();
        assert_eq!(v, vec![rats(&[0, -2]), rats(&[0, 1])]);

        let r = stability_verdict(&c, &sp);
        assert_eq!(r.degree, 2.into());
        assert!(r.semistable && r.polystable);
        assert_eq!(r.diagonal_t, ratio(4, 3));
        assert_eq!(r.diagonal_location, Location::RelativeInterior);
        // 0 = (2/3)(0,1) + (1/3)(0,-2)
        let MembershipCertificate::Combination(coeffs) = &r.origin.certificate else {
            panic!()
        };
        let by_vertex: Vec<(Vec<Rational>, Rational)> = nh
            .vertices
            .iter()
            .cloned()
            .zip(coeffs.iter().cloned())
            .collect();
        assert!(by_vertex.contains(&(rats(&[0, 1]), ratio(2, 3))));
        assert!(by_vertex.contains(&(rats(&[0, -2]), ratio(1, 3))));

        let th = verify_main_theorem(&c, &sp);
        assert_eq!(th.status, TheoremStatus::Holds);
        assert!(th.diagonal_facets.is_empty());
    }

    #[test]
    fn square() {
        let c = PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
            .unwrap();
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        let mut v = weight_polytope_h(&sp).vertices;
        v.sort();
        assert_eq!(v, vec![rats(&[0, -1, -1]), rats(&[0, 1, 1])]);
        let d = diagonal_point(&c, &sp);
        assert_eq!(d.t, ratio(3, 2));
        let MembershipCertificate::Combination(coeffs) = &d.membership.certificate else {
            panic!()
        };
        assert_eq!(coeffs, &vec![ratio(1, 2), ratio(1, 2)]);
        let r = stability_verdict(&c, &sp);
        assert!(r.semistable && r.polystable);
        assert_eq!(verify_main_theorem(&c, &sp).status, TheoremStatus::Holds);
    }

    #[test]
    fn twisted_cubic() {
        let c = segment(3);
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        let r = stability_verdict(&c, &sp);
        assert_eq!(r.degree, 3.into());
        assert!(r.semistable && r.polystable);
        // Hand-made positive combination of the four projected vertices.
        let nh = weight_polytope_h(&sp);
        let weights = [
            (rats(&[1, 2, 2, 1]), ratio(3, 8)),
            (rats(&[1, 3, 0, 2]), ratio(1, 4)),
            (rats(&[2, 0, 3, 1]), ratio(1, 4)),
            (rats(&[3, 0, 0, 3]), ratio(1, 8)),
        ];
        let mut sum = vec![rat(0); 3];
        for (v, w) in &weights {
            for (s, x) in sum.iter_mut().zip(project_to_h(v)) {
                *s += x * w;
            }
        }
        assert_eq!(sum, rats(&[0, 0, 0]));
        assert_eq!(nh.vertices.len(), 4);
    }

    #[test]
    fn degree_one_exception() {
        for c in [
            segment(1),
            PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap(),
            PointConfiguration::new(
                3,
                vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            )
            .unwrap(),
        ] {
            let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
            let th = verify_main_theorem(&c, &sp);
            assert_eq!(th.status, TheoremStatus::ExceptionDegreeOne);
            assert!(th.labels_equal_bound);
            assert_eq!(th.stability.diagonal_t, rat(1));
            assert_eq!(th.stability.diagonal_location, Location::RelativeInterior);
            assert_eq!(
                weight_polytope_h(&sp).vertices,
                vec![vec![rat(0); c.len() - 1]]
            );
        }
    }
}
