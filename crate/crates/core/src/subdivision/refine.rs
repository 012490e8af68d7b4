//! The refinement order on subdivisions.

use super::Subdivision;

/// `S ⪯ S'`: every cell of `s` is, as a set of labels, contained in some
/// cell of `coarser`.
///
/// Cells are labeled point sets, so a label omitted from every cell of
/// `coarser` (lifted strictly above the lower hull) cannot be used by `s`.
pub fn refines(s: &Subdivision, coarser: &Subdivision) -> bool {
    let masks = coarser.masks();
    s.masks().iter().all(|&c| masks.iter().any(|&d| c & d == c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::Rational;
    use crate::exact::PointConfiguration;
    use crate::subdivision::enumerate::{enumerate_triangulations, DEFAULT_SIMPLEX_CAP};
    use crate::subdivision::regular::regular_subdivision;
    use crate::subdivision::{Cell, HeightFunction};

    fn segment(n: i64) -> PointConfiguration {
        PointConfiguration::new(1, (0..=n).map(|x| vec![x]).collect()).unwrap()
    }

    #[test]
    fn segment_refinement() {
        let c = segment(2);
        let fine = Subdivision::new(&c, vec![Cell::new(vec![0, 1]), Cell::new(vec![1, 2])]);
        let skip = Subdivision::new(&c, vec![Cell::new(vec![0, 2])]);
        let trivial = Subdivision::trivial(&c);
        assert!(refines(&fine, &trivial));
        assert!(refines(&skip, &trivial));
        assert!(!refines(&fine, &skip));
        assert!(!refines(&skip, &fine));
        assert!(!refines(&trivial, &fine));
        assert!(refines(&fine, &fine));
    }

    #[test]
    fn refinement_is_a_partial_order_on_segment_subdivisions() {
        let c = segment(4);
        let mut subs = enumerate_triangulations(&c, DEFAULT_SIMPLEX_CAP).unwrap();
        for w in [
            [0, 0, -1, 0, 0],
            [0, -1, -1, -1, 0],
            [0, -1, 0, -1, 0],
            [0, 1, 0, 1, 0],
        ] {
            let h = HeightFunction::new(
                &c,
                w.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect(),
            )
            .unwrap();
            subs.push(regular_subdivision(&c, &h).unwrap());
        }
        subs.push(Subdivision::trivial(&c));
        for a in &subs {
            assert!(refines(a, a));
            assert!(refines(a, &Subdivision::trivial(&c)));
            for b in &subs {
                if refines(a, b) && refines(b, a) {
                    assert_eq!(a, b);
                }
                for d in &subs {
                    if refines(a, b) && refines(b, d) {
                        assert!(refines(a, d));
                    }
                }
            }
        }
    }
}
