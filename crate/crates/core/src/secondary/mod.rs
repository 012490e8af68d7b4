//! GKZ vectors, the secondary polytope and its facets.

pub mod facets;
pub mod polytope;

use num_traits::Zero;

use crate::exact::rational::{factorial, Int, Rational};
use crate::exact::PointConfiguration;
use crate::subdivision::{HeightFunction, Subdivision};

pub use facets::{
    coarse_subdivisions, face_of, face_order_reversal, facet_equation, FacetEquation,
};
pub use polytope::{secondary_polytope, CoarseSubdivision, SecondaryPolytope, TriangulationEntry};

/// `φ_A(T)`: entry `j` is the sum of `n! Vol(C)` over the simplices `C` of
/// `t` having `a_j` as a vertex.
pub fn gkz_vector(config: &PointConfiguration, t: &Subdivision) -> Vec<Int> {
    assert!(
        t.is_triangulation(),
        "GKZ vectors are defined for triangulations"
    );
    let mut phi = vec![Int::zero(); config.len()];
    for cell in t.cells() {
        let v = config.normalized_volume(cell.labels());
        for &j in cell.labels() {
            phi[j] += &v;
        }
    }
    phi
}

/// `∫_Q g_{ω,T} dv`, summed simplex by simplex in closed form.
pub fn characteristic_integral(
    config: &PointConfiguration,
    t: &Subdivision,
    omega: &HeightFunction,
) -> Rational {
    assert!(
        t.is_triangulation(),
        "the characteristic section needs a triangulation"
    );
    let n1 = Rational::from_integer((config.dim() + 1).into());
    let w = omega.values();
    t.cells().iter().fold(Rational::zero(), |acc, c| {
        let s = c.labels().iter().fold(Rational::zero(), |a, &j| a + &w[j]);
        acc + config.simplex_volume(c.labels()) / &n1 * s
    })
}

/// The three equal expressions for the pairing of heights with a GKZ
/// vector.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingCheck {
    /// `<ω, φ_A(T)>`
    pub lhs: Rational,
    /// `(n+1)! ∫_Q g_{ω,T}`
    pub rhs: Rational,
    /// `n! Σ_C Vol(C) Σ_{j ∈ C} ω_j`
    pub simplex_sum: Rational,
    pub equal: bool,
}

pub fn pairing_check(
    config: &PointConfiguration,
    t: &Subdivision,
    omega: &HeightFunction,
) -> PairingCheck {
    let phi = gkz_vector(config, t);
    let lhs = pairing(omega.values(), &phi);
    let rhs = characteristic_integral(config, t, omega)
        * Rational::from_integer(factorial(config.dim() + 1));
    let simplex_sum = simplex_sum(config, t, omega.values());
    let equal = lhs == rhs && rhs == simplex_sum;
    PairingCheck {
        lhs,
        rhs,
        simplex_sum,
        equal,
    }
}

pub(crate) fn pairing(omega: &[Rational], phi: &[Int]) -> Rational {
    omega.iter().zip(phi).fold(Rational::zero(), |a, (w, p)| {
        a + w * Rational::from_integer(p.clone())
    })
}

pub(crate) fn simplex_sum(
    config: &PointConfiguration,
    t: &Subdivision,
    omega: &[Rational],
) -> Rational {
    let nf = Rational::from_integer(factorial(config.dim()));
    t.cells().iter().fold(Rational::zero(), |acc, c| {
        let s = c
            .labels()
            .iter()
            .fold(Rational::zero(), |a, &j| a + &omega[j]);
        acc + &nf * config.simplex_volume(c.labels()) * s
    })
}
