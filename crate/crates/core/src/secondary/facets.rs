//! Facet equations of the secondary polytope and the order-reversing
//! correspondence between faces and regular subdivisions.

use num_traits::Zero;

use super::polytope::SecondaryPolytope;
use super::{pairing, simplex_sum};
use crate::error::{Error, Result};
use crate::exact::linalg::rank;
use crate::exact::rational::{sub, Rational};
use crate::exact::PointConfiguration;
use crate::subdivision::{refines, regular_subdivision, HeightFunction, Subdivision};

/// `Σ_j functional_j φ_j >= constant` on the secondary polytope, with
/// equality exactly on `tight`.
#[derive(Clone, Debug, PartialEq)]
pub struct FacetEquation {
    pub functional: Vec<Rational>,
    pub constant: Rational,
    /// True when `ω` had to be negated to put the polytope on the `>=`
    /// side.
    pub negated: bool,
    /// Indices (into the triangulation list) of the triangulations whose
    /// GKZ vectors satisfy the equation.
    pub tight: Vec<usize>,
}

/// The defining equation of the facet of `Σsec` that corresponds to the
/// coarse subdivision `S(A, ω)`.
pub fn facet_equation(
    config: &PointConfiguration,
    sp: &SecondaryPolytope,
    omega: &HeightFunction,
) -> Result<FacetEquation> {
    let s = regular_subdivision(config, omega)?;
    let w = omega.values();

    let face = face_of(sp, w);
    let face_points: Vec<Vec<Rational>> =
        face.iter().map(|&i| sp.gkz_points()[i].clone()).collect();
    let face_dim = rank(
        &face_points
            .iter()
            .map(|p| sub(p, &face_points[0]))
            .collect::<Vec<_>>(),
    );
    if sp.dim() == 0 || face_dim + 1 != sp.dim() {
        return Err(Error::NotCoarse(s.to_string()));
    }

    let refining: Vec<usize> = (0..sp.triangulations.len())
        .filter(|&i| refines(&sp.triangulations[i].triangulation, &s))
        .collect();
    let Some(&first) = refining.first() else {
        return Err(Error::Internal(format!("no triangulation refines {s}")));
    };
    let constant = simplex_sum(config, &sp.triangulations[first].triangulation, w);

    let values: Vec<Rational> = sp
        .triangulations
        .iter()
        .map(|e| pairing(w, &e.gkz))
        .collect();
    let tight: Vec<usize> = (0..values.len())
        .filter(|&i| values[i] == constant)
        .collect();
    if tight != refining {
        return Err(Error::Internal(format!(
            "facet of {s}: tight triangulations {tight:?} differ from refining ones {refining:?}"
        )));
    }
    let above = values.iter().filter(|v| **v > constant).count();
    let below = values.iter().filter(|v| **v < constant).count();
    let negated = match (above, below) {
        (_, 0) => false,
        (0, _) => true,
        _ => {
            return Err(Error::Internal(format!(
                "facet of {s} does not support the secondary polytope"
            )))
        }
    };
    let (functional, constant) = if negated {
        (w.iter().map(|x| -x).collect(), -constant)
    } else {
        (w.to_vec(), constant)
    };
    Ok(FacetEquation {
        functional,
        constant,
        negated,
        tight,
    })
}

/// The coarse subdivisions, one per facet of `Σsec`.
pub fn coarse_subdivisions(sp: &SecondaryPolytope) -> Vec<&Subdivision> {
    sp.coarse.iter().map(|c| &c.subdivision).collect()
}

/// Triangulations whose GKZ vectors minimize `<ω, ·>` over `Σsec`.
pub fn face_of(sp: &SecondaryPolytope, omega: &[Rational]) -> Vec<usize> {
    let values: Vec<Rational> = sp
        .triangulations
        .iter()
        .map(|e| pairing(omega, &e.gkz))
        .collect();
    let Some(min) = values.iter().min() else {
        return Vec::new();
    };
    (0..values.len()).filter(|&i| values[i] == *min).collect()
}

/// Checks `F(S) ⊆ F(S') ⇔ S ⪯ S'` over the regular triangulations, the
/// coarse subdivisions and the trivial subdivision, where each face is
/// computed as the minimizing face of the inducing heights.
pub fn face_order_reversal(config: &PointConfiguration, sp: &SecondaryPolytope) -> Result<()> {
    let mut items: Vec<(Subdivision, Vec<usize>)> = Vec::new();
    for e in &sp.triangulations {
        if let Some(w) = e.regularity.witness() {
            items.push((e.triangulation.clone(), face_of(sp, w.values())));
        }
    }
    for c in &sp.coarse {
        items.push((c.subdivision.clone(), face_of(sp, c.heights.values())));
    }
    let zero = vec![Rational::zero(); config.len()];
    items.push((
        regular_subdivision(config, &HeightFunction::zero(config))?,
        face_of(sp, &zero),
    ));

    for (s, fs) in &items {
        for (t, ft) in &items {
            let contained = fs.iter().all(|i| ft.contains(i));
            if contained != refines(s, t) {
                return Err(Error::Internal(format!(
                    "face containment ({contained}) disagrees with refinement for {s} and {t}"
                )));
            }
        }
    }
    Ok(())
}
