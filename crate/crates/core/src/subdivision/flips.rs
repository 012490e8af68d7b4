//! Bistellar flips and a flip-graph walk, used as an independent route to
//! the regular triangulations.

use std::collections::{BTreeSet, VecDeque};

use num_traits::One;

use super::circuits::Circuit;
use super::regular::regular_subdivision;
use super::{HeightFunction, Subdivision};
use crate::exact::rational::{Int, Rational};
use crate::exact::PointConfiguration;

/// All triangulations obtained from `t` by one flip.
///
/// For a circuit `Z = (Z+, Z-)`, the flip applies when every
/// `Z \ {z}` with `z ∈ Z+` is a face of `t` and all of them have the same
/// nonempty link `L`; it replaces `(Z \ z) ∪ l` (z ∈ Z+, l ∈ L) by
/// `(Z \ w) ∪ l` (w ∈ Z-, l ∈ L).
pub fn flip_neighbours(
    config: &PointConfiguration,
    circuits: &[Circuit],
    t: &Subdivision,
) -> Vec<Subdivision> {
    let cells = t.masks();
    let mut out = BTreeSet::new();
    for c in circuits {
        for z in [*c, c.reversed()] {
            let support = z.support();
            let mut link: Option<BTreeSet<u64>> = None;
            let mut ok = true;
            for p in bits(z.positive) {
                let face = support & !(1 << p);
                let l: BTreeSet<u64> = cells
                    .iter()
                    .filter(|&&s| s & face == face)
                    .map(|&s| s & !face)
                    .collect();
                if l.is_empty() || link.as_ref().is_some_and(|k| *k != l) {
                    ok = false;
                    break;
                }
                link = Some(l);
            }
            if !ok {
                continue;
            }
            let link = link.expect("circuits have nonempty parts");
            let removed: BTreeSet<u64> = bits(z.positive)
                .flat_map(|p| link.iter().map(move |&l| (support & !(1 << p)) | l))
                .collect();
            let mut next: Vec<u64> = cells
                .iter()
                .copied()
                .filter(|s| !removed.contains(s))
                .collect();
            next.extend(
                bits(z.negative).flat_map(|w| link.iter().map(move |&l| (support & !(1 << w)) | l)),
            );
            out.insert(Subdivision::from_masks(config, &next));
        }
    }
    out.into_iter().collect()
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// A regular triangulation using every label: the Delaunay subdivision
/// (heights `|a_j|^2`, under which every point is a lower vertex) refined
/// by a small placing perturbation `δ B^j`. Points of a Delaunay cell are in
/// convex position, so placing drops none of them.
pub fn fine_triangulation(config: &PointConfiguration) -> Subdivision {
    let mut k: u32 = 1;
    loop {
        let base = Int::from(2u32).pow(k);
        let delta = Rational::new(Int::one(), base.pow(config.len() as u32 + k));
        let heights: Vec<Rational> = (0..config.len())
            .map(|j| {
                let norm: i64 = config.point(j).iter().map(|x| x * x).sum();
                Rational::from_integer(norm.into())
                    + &delta * Rational::from_integer(base.pow(j as u32))
            })
            .collect();
        let h = HeightFunction::new(config, heights).expect("length matches");
        let s = regular_subdivision(config, &h).expect("valid configuration");
        if s.is_triangulation() && s.used_labels().count_ones() as usize == config.len() {
            return s;
        }
        k += 1;
    }
}

/// Breadth-first search of the flip graph from `start`. Returns every
/// triangulation reached, sorted.
pub fn flip_walk(
    config: &PointConfiguration,
    circuits: &[Circuit],
    start: Subdivision,
) -> Vec<Subdivision> {
    let mut seen: BTreeSet<Subdivision> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        for nb in flip_neighbours(config, circuits, &t) {
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    seen.into_iter().collect()
}
