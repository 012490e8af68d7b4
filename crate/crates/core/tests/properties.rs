use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use toric_stability::ehrhart::ehrhart_report;
use toric_stability::exact::rational::{factorial, ratio, Int, Rational};
use toric_stability::exact::volume::volume;
use toric_stability::exact::{Location, PointConfiguration};
use toric_stability::secondary::{gkz_vector, pairing_check, secondary_polytope};
use toric_stability::stability::{
    project_to_h, stability_verdict, verify_main_theorem, TheoremStatus,
};
use toric_stability::subdivision::{
    circuits, enumerate_triangulations, fine_triangulation, flip_walk, is_regular, refines,
    regular_subdivision, HeightFunction, DEFAULT_SIMPLEX_CAP,
};

/// Distinct full-dimensional planar configurations inside a 4x4 box.
fn planar() -> impl Strategy<Value = PointConfiguration> {
    proptest::collection::btree_set((0i64..4, 0i64..4), 3..7)
        .prop_filter_map("not full-dimensional", |s| {
            PointConfiguration::new(2, s.into_iter().map(|(x, y)| vec![x, y]).collect()).ok()
        })
}

fn linear() -> impl Strategy<Value = PointConfiguration> {
    proptest::collection::btree_set(-4i64..5, 2..7)
        .prop_map(|s| PointConfiguration::new(1, s.into_iter().map(|x| vec![x]).collect()).unwrap())
}

fn configuration() -> impl Strategy<Value = PointConfiguration> {
    prop_oneof![linear(), planar()]
}

fn heights(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-30i64..30, 1i64..7), len)
        .prop_map(|v| v.into_iter().map(|(p, q)| ratio(p, q)).collect())
}

fn normalized_volume(c: &PointConfiguration) -> Int {
    (volume(&c.rational_points()) * Rational::from_integer(factorial(c.dim()))).to_integer()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gkz_vectors_sum_and_support(c in configuration()) {
        let target = normalized_volume(&c) * Int::from(c.dim() + 1);
        let mut moments = BTreeSet::new();
        for t in enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap() {
            t.verify(&c).unwrap();
            let phi = gkz_vector(&c, &t);
            prop_assert_eq!(phi.iter().sum::<Int>(), target.clone());
            for (j, p) in phi.iter().enumerate() {
                let used = t.used_labels() >> j & 1 == 1;
                prop_assert_eq!(p.is_zero(), !used);
            }
            let m: Vec<Int> = (0..c.dim())
                .map(|k| phi.iter().zip(c.points()).map(|(p, a)| p * Int::from(a[k])).sum())
                .collect();
            moments.insert(m);
        }
        prop_assert_eq!(moments.len(), 1);
    }

    #[test]
    fn regular_subdivisions_are_subdivisions(c in configuration(), w in heights(8)) {
        let h = HeightFunction::new(&c, w[..c.len()].to_vec()).unwrap();
        let s = regular_subdivision(&c, &h).unwrap();
        s.verify(&c).unwrap();
        prop_assert!(refines(&s, &regular_subdivision(&c, &HeightFunction::zero(&c)).unwrap()));
        if s.is_triangulation() {
            let r = is_regular(&c, &s);
            let witness = r.witness().expect("induced by heights, hence regular");
            prop_assert_eq!(regular_subdivision(&c, witness).unwrap(), s);
        }
    }

    #[test]
    fn pairing_identity(c in configuration(), w in heights(8)) {
        let h = HeightFunction::new(&c, w[..c.len()].to_vec()).unwrap();
        for t in enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap() {
            prop_assert!(pairing_check(&c, &t, &h).equal);
        }
    }

    #[test]
    fn projection_is_linear_with_diagonal_kernel(a in heights(6), b in heights(6), s in -5i64..5, t in -5i64..5) {
        let (s, t) = (Rational::from_integer(s.into()), Rational::from_integer(t.into()));
        let combo: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| &s * x + &t * y).collect();
        let lhs = project_to_h(&combo);
        let rhs: Vec<Rational> = project_to_h(&a).iter().zip(project_to_h(&b)).map(|(x, y)| &s * x + &t * y).collect();
        prop_assert_eq!(lhs, rhs);
        let zero = project_to_h(&a).iter().all(Zero::is_zero);
        let diagonal = a.iter().all(|x| *x == a[0]);
        prop_assert_eq!(zero, diagonal);
    }

    #[test]
    fn stability_flags_are_ordered(c in configuration()) {
        let sp = secondary_polytope(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        let r = stability_verdict(&c, &sp);
        prop_assert!(!r.polystable || r.semistable);
        if r.diagonal_location == Location::RelativeInterior {
            prop_assert!(r.polystable);
        }
        let th = verify_main_theorem(&c, &sp);
        prop_assert!(th.projection_injective && th.certificates_valid);
    }

    #[test]
    fn ehrhart_properties(c in configuration()) {
        let r = ehrhart_report(&c.hull()).unwrap();
        prop_assert!(r.all_checks_pass());
        prop_assert!(r.h.0[0].is_one());
    }
}

#[test]
fn flip_walk_reaches_every_planar_triangulation() {
    for pts in [
        vec![[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]],
        vec![[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [0, 2]],
        vec![[0, 0], [4, 0], [0, 4], [1, 1], [2, 1], [1, 2]],
    ] {
        let c = PointConfiguration::new(2, pts.iter().map(|p| p.to_vec()).collect()).unwrap();
        let walked = flip_walk(&c, &circuits(&c), fine_triangulation(&c));
        assert_eq!(
            walked,
            enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap()
        );
    }
}

#[test]
fn main_theorem_on_validated_configurations() {
    let configs = [
        PointConfiguration::new(1, (0..5).map(|x| vec![x]).collect()).unwrap(),
        PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap(),
        PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap(),
        PointConfiguration::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap(),
    ];
    for c in &configs {
        let sp = secondary_polytope(c, DEFAULT_SIMPLEX_CAP).unwrap();
        let th = verify_main_theorem(c, &sp);
        assert_ne!(th.status, TheoremStatus::Violated);
        if th.stability.degree > Int::one() {
            assert_eq!(th.status, TheoremStatus::Holds);
        }
    }
}
