//! Circuits: minimal affinely dependent subsets of a configuration.

use num_traits::{One, Signed, Zero};

use super::combinations;
use crate::exact::linalg::rref;
use crate::exact::rational::Rational;
use crate::exact::PointConfiguration;

/// A circuit `Z = Z+ ∪ Z-` with its unique (up to scale) affine
/// dependence `sum λ_z a_z = 0`, `sum λ_z = 0`; `positive` holds the labels
/// with `λ > 0`. Both parts are nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    pub positive: u64,
    pub negative: u64,
}

impl Circuit {
    pub fn support(&self) -> u64 {
        self.positive | self.negative
    }

    pub fn reversed(&self) -> Circuit {
        Circuit {
            positive: self.negative,
            negative: self.positive,
        }
    }
}

/// Every circuit of the configuration, once each (orientation chosen so
/// the lowest label is positive).
pub fn circuits(config: &PointConfiguration) -> Vec<Circuit> {
    let n = config.dim();
    let mut out = Vec::new();
    for size in 2..=n + 2 {
        for subset in combinations(config.len(), size) {
            if let Some(c) = circuit_on(config, &subset) {
                out.push(c);
            }
        }
    }
    out
}

fn circuit_on(config: &PointConfiguration, subset: &[usize]) -> Option<Circuit> {
    let n = config.dim();
    // Rows are coordinates plus the all-ones row; columns are labels.
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            subset
                .iter()
                .map(|&i| Rational::from_integer(config.point(i)[k].into()))
                .collect()
        })
        .collect();
    m.push(vec![Rational::one(); subset.len()]);
    let kernel = rref(&m, subset.len()).nullspace();
    if kernel.len() != 1 || kernel[0].iter().any(Zero::is_zero) {
        return None;
    }
    let mut lambda = kernel.into_iter().next().unwrap();
    if lambda[0].is_negative() {
        lambda = lambda.into_iter().map(|x| -x).collect();
    }
    let (mut positive, mut negative) = (0u64, 0u64);
    for (&i, l) in subset.iter().zip(&lambda) {
        if l.is_positive() {
            positive |= 1 << i;
        } else {
            negative |= 1 << i;
        }
    }
    Some(Circuit { positive, negative })
}

/// Two full-dimensional simplices (label masks) intersect properly, i.e. in
/// a common face, iff no circuit has one part in each.
pub fn properly_intersect(circuits: &[Circuit], s: u64, t: u64) -> bool {
    !circuits.iter().any(|c| {
        (c.positive & !s == 0 && c.negative & !t == 0)
            || (c.negative & !s == 0 && c.positive & !t == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(dim: usize, pts: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn segment_circuits() {
        let c = cfg(1, &[&[0], &[1], &[2]]);
        assert_eq!(
            circuits(&c),
            vec![Circuit {
                positive: 0b101,
                negative: 0b010
            }]
        );
    }

    #[test]
    fn square_has_one_circuit() {
        // a0 + a3 = a1 + a2
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            circuits(&c),
            vec![Circuit {
                positive: 0b1001,
                negative: 0b0110
            }]
        );
    }

    #[test]
    fn proper_intersection_on_segment() {
        let c = cfg(1, &[&[0], &[1], &[2]]);
        let z = circuits(&c);
        assert!(properly_intersect(&z, 0b011, 0b110));
        assert!(!properly_intersect(&z, 0b101, 0b011));
        assert!(properly_intersect(&z, 0b101, 0b101));
    }
}
