//! Ehrhart polynomials, h-vectors and the lattice point bound
//! `Card(Q ∩ Z^n) <= (n+1)! Vol(Q)`.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::hull::{ConvexHull, HPolytope};
use crate::exact::lattice::lattice_points;
use crate::exact::linalg::solve;
use crate::exact::rational::{binomial, factorial, Int, Rational};
use crate::exact::volume::volume;

#[derive(Clone, Debug, PartialEq)]
pub struct EhrhartPolynomial {
    /// `c_0, ..., c_n` with `E(ℓ) = Σ c_k ℓ^k`.
    pub coefficients: Vec<Rational>,
    /// `E(0), ..., E(n)`, the interpolation nodes.
    pub values: Vec<Int>,
    /// `E(n+1)` counted afresh.
    pub held_out: Int,
}

impl EhrhartPolynomial {
    pub fn dim(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, l: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * l + c)
    }

    pub fn leading_coefficient(&self) -> &Rational {
        self.coefficients.last().expect("degree >= 0")
    }
}

/// Counts `ℓQ ∩ Z^n` for `ℓ = 1..=n+1`, interpolates through `ℓ = 0..=n` and
/// checks the polynomial against the count at `n + 1`.
pub fn ehrhart_polynomial(q: &HPolytope) -> Result<EhrhartPolynomial> {
    let n = q.ambient_dim;
    if !q.equations.is_empty() {
        return Err(Error::NotFullDimensional {
            rank: n - q.equations.len(),
            dim: n,
        });
    }
    let counts: Vec<Int> = (1..=n as u64 + 1)
        .into_par_iter()
        .map(|l| lattice_points(q, l).map(|p| Int::from(p.len())))
        .collect::<Result<_>>()?;
    let mut values = vec![Int::one()];
    values.extend_from_slice(&counts[..n]);
    let held_out = counts[n].clone();

    let vandermonde: Vec<Vec<Rational>> = (0..=n)
        .map(|l| {
            (0..=n)
                .map(|k| Rational::from_integer(Int::from(l).pow(k as u32)))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
    let coefficients = solve(&vandermonde, &rhs).expect("Vandermonde systems are nonsingular");
    let e = EhrhartPolynomial {
        coefficients,
        values,
        held_out,
    };
    if e.eval(&Rational::from_integer((n + 1).into())) != Rational::from_integer(e.held_out.clone())
    {
        return Err(Error::Internal(format!(
            "Ehrhart interpolant misses E({}) = {}",
            n + 1,
            e.held_out
        )));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<Int>);

/// `h_k = Σ_{i=0..k} (-1)^i C(n+1, i) E(k - i)`.
pub fn h_vector(e: &EhrhartPolynomial) -> HVector {
    let n = e.dim();
    HVector(
        (0..=n)
            .map(|k| {
                (0..=k).fold(Int::zero(), |acc, i| {
                    let term = binomial(n + 1, i) * &e.values[k - i];
                    if i % 2 == 0 {
                        acc + term
                    } else {
                        acc - term
                    }
                })
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimplexBound {
    pub card: Int,
    /// `(n+1)! Vol(Q)`
    pub bound: Int,
    pub holds: bool,
    pub equality: bool,
    /// `n + 1` vertices and `n! Vol(Q) = 1`.
    pub is_unimodular_simplex: bool,
}

pub fn simplex_bound(q: &ConvexHull) -> Result<SimplexBound> {
    let n = q.h.ambient_dim;
    if !q.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            rank: q.dim,
            dim: n,
        });
    }
    let card = Int::from(lattice_points(&q.h, 1)?.len());
    let normalized = (volume(&q.v.vertices) * Rational::from_integer(factorial(n))).to_integer();
    let bound = &normalized * Int::from(n + 1);
    Ok(SimplexBound {
        holds: card <= bound,
        equality: card == bound,
        is_unimodular_simplex: q.v.vertices.len() == n + 1 && normalized.is_one(),
        card,
        bound,
    })
}

/// The Ehrhart data of `Q` together with every property the h-vector and
/// the bound are expected to satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct EhrhartReport {
    pub polynomial: EhrhartPolynomial,
    pub h: HVector,
    pub volume: Rational,
    pub bound: SimplexBound,
    pub leading_is_volume: bool,
    /// `h_0 = 1`
    pub h0_is_one: bool,
    /// `h_1 = Card(Q ∩ Z^n) - n - 1`
    pub h1_counts_points: bool,
    /// `Σ h = n! Vol(Q)`
    pub sum_is_normalized_volume: bool,
    pub nonnegative: bool,
    /// Equality in the bound, unimodularity and `h = (1, 0, ..., 0)` all
    /// agree.
    pub equality_consistent: bool,
}

impl EhrhartReport {
    pub fn all_checks_pass(&self) -> bool {
        self.leading_is_volume
            && self.h0_is_one
            && self.h1_counts_points
            && self.sum_is_normalized_volume
            && self.nonnegative
            && self.bound.holds
            && self.equality_consistent
    }
}

pub fn ehrhart_report(q: &ConvexHull) -> Result<EhrhartReport> {
    let n = q.h.ambient_dim;
    let polynomial = ehrhart_polynomial(&q.h)?;
    let h = h_vector(&polynomial);
    let bound = simplex_bound(q)?;
    let vol = volume(&q.v.vertices);
    let normalized = &vol * Rational::from_integer(factorial(n));
    let sum = h.0.iter().fold(Int::zero(), |a, x| a + x);
    let trivial_h = h.0[0].is_one() && h.0[1..].iter().all(Zero::is_zero);
    Ok(EhrhartReport {
        leading_is_volume: *polynomial.leading_coefficient() == vol,
        h0_is_one: h.0[0].is_one(),
        h1_counts_points: n == 0 || h.0[1] == &bound.card - Int::from(n + 1),
        sum_is_normalized_volume: Rational::from_integer(sum) == normalized,
        nonnegative: !h.0.iter().any(Signed::is_negative),
        equality_consistent: bound.equality == bound.is_unimodular_simplex
            && bound.equality == trivial_h,
        polynomial,
        h,
        volume: vol,
        bound,
    })
}
