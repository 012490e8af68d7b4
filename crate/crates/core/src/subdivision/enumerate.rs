//! Exhaustive enumeration of all triangulations of `(Q, A)`.
//!
//! Candidate cells are the full-dimensional simplices on labels of `A`;
//! two are compatible when they meet in a common face (no circuit splits
//! across them). A depth-first search grows a set of compatible simplices by
//! repeatedly closing the lowest unmatched interior facet with a simplex on
//! its other side. Every triangulation is reached this way because each
//! interior facet of a triangulation is shared by exactly two of its
//! simplices.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::circuits::{circuits, properly_intersect};
use super::{combinations, Subdivision};
use crate::error::{Error, Result};
use crate::exact::linalg::determinant;
use crate::exact::rational::{factorial, rat, Int, Rational};
use crate::exact::volume::volume;
use crate::exact::PointConfiguration;

pub const DEFAULT_SIMPLEX_CAP: usize = 5000;

struct Search<'a> {
    simplices: Vec<u64>,
    /// `compat[s]` bitset over simplex ids.
    compat: Vec<Vec<u64>>,
    /// For each interior facet: the simplices containing it and the side
    /// (+1/-1) their apex lies on.
    facet_index: HashMap<u64, Vec<(usize, i8)>>,
    /// Interior facets of each simplex with the apex side.
    facets_of: Vec<Vec<(u64, i8)>>,
    volumes: &'a [Int],
    target: Int,
}

/// All triangulations, sorted canonically. Fails with
/// [`Error::CapExceeded`] when the configuration has more than `cap`
/// full-dimensional simplices.
pub fn enumerate_triangulations(
    config: &PointConfiguration,
    cap: usize,
) -> Result<Vec<Subdivision>> {
    let n = config.dim();
    let mut simplices = Vec::new();
    let mut volumes = Vec::new();
    for s in combinations(config.len(), n + 1) {
        let v = config.normalized_volume(&s);
        if v.is_zero() {
            continue;
        }
        if simplices.len() == cap {
            let rest = combinations(config.len(), n + 1)
                .filter(|s| !config.normalized_volume(s).is_zero())
                .count();
            return Err(Error::CapExceeded { count: rest, cap });
        }
        simplices.push(s.iter().fold(0u64, |m, &i| m | 1 << i));
        volumes.push(v);
    }

    let z = circuits(config);
    let words = simplices.len().div_ceil(64);
    let compat: Vec<Vec<u64>> = (0..simplices.len())
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..simplices.len() {
                if i != j && properly_intersect(&z, simplices[i], simplices[j]) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();

    let mut sides: HashMap<u64, Vec<i8>> = HashMap::new();
    let mut facet_index: HashMap<u64, Vec<(usize, i8)>> = HashMap::new();
    let mut facets_of = Vec::with_capacity(simplices.len());
    for (id, &s) in simplices.iter().enumerate() {
        let mut fs = Vec::new();
        for apex in (0..config.len()).filter(|&i| s >> i & 1 == 1) {
            let f = s & !(1 << apex);
            let side = sides.entry(f).or_insert_with(|| facet_sides(config, f));
            let (has_pos, has_neg) = (side.iter().any(|&x| x > 0), side.iter().any(|&x| x < 0));
            if has_pos && has_neg {
                fs.push((f, side[apex]));
                facet_index.entry(f).or_default().push((id, side[apex]));
            }
        }
        facets_of.push(fs);
    }

    let points = config.rational_points();
    let target = (volume(&points) * Rational::from_integer(factorial(n))).to_integer();
    let search = Search {
        simplices,
        compat,
        facet_index,
        facets_of,
        volumes: &volumes,
        target,
    };

    // Start from every simplex containing the lexicographically smallest
    // point, which is a vertex of Q and hence used by every triangulation.
    let v0 = (0..config.len())
        .min_by(|&a, &b| config.point(a).cmp(config.point(b)))
        .unwrap();
    let starts: Vec<usize> = (0..search.simplices.len())
        .filter(|&s| search.simplices[s] >> v0 & 1 == 1)
        .collect();
    let found: Vec<BTreeSet<Vec<u64>>> = starts
        .par_iter()
        .map(|&s| {
            let mut out = BTreeSet::new();
            let mut state = State::new(&search, s);
            search.extend(&mut state, &mut out);
            out
        })
        .collect();
    let mut all: BTreeSet<Vec<u64>> = BTreeSet::new();
    for f in found {
        all.extend(f);
    }
    let mut out: Vec<Subdivision> = all
        .iter()
        .map(|m| Subdivision::from_masks(config, m))
        .collect();
    out.sort();
    Ok(out)
}

/// Orientation sign of every label relative to the hyperplane through the
/// `n` labels of facet mask `f`.
fn facet_sides(config: &PointConfiguration, f: u64) -> Vec<i8> {
    let labels: Vec<usize> = (0..config.len()).filter(|&i| f >> i & 1 == 1).collect();
    let base = config.point(labels[0]);
    let diff = |i: usize| -> Vec<Rational> {
        config
            .point(i)
            .iter()
            .zip(base)
            .map(|(x, y)| rat(x - y))
            .collect()
    };
    let fixed: Vec<Vec<Rational>> = labels[1..].iter().map(|&i| diff(i)).collect();
    (0..config.len())
        .map(|j| {
            let mut m = fixed.clone();
            m.push(diff(j));
            let d = determinant(&m);
            if d.is_positive() {
                1
            } else if d.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect()
}

struct State {
    chosen: Vec<usize>,
    compat: Vec<u64>,
    /// Interior facets used once so far, with the side of their apex.
    open: std::collections::BTreeMap<u64, i8>,
    closed: BTreeSet<u64>,
    volume: Int,
}

impl State {
    fn new(search: &Search<'_>, start: usize) -> Self {
        let mut st = State {
            chosen: Vec::new(),
            compat: vec![u64::MAX; search.compat[start].len()],
            open: Default::default(),
            closed: BTreeSet::new(),
            volume: Int::zero(),
        };
        st.push(search, start);
        st
    }

    fn push(&mut self, search: &Search<'_>, s: usize) {
        self.chosen.push(s);
        for (w, c) in self.compat.iter_mut().zip(&search.compat[s]) {
            *w &= c;
        }
        for &(f, side) in &search.facets_of[s] {
            if self.open.remove(&f).is_some() {
                self.closed.insert(f);
            } else {
                self.open.insert(f, side);
            }
        }
        self.volume += &search.volumes[s];
    }
}

impl Search<'_> {
    fn extend(&self, st: &mut State, out: &mut BTreeSet<Vec<u64>>) {
        let Some((&facet, &side)) = st.open.iter().next() else {
            if st.volume == self.target {
                let mut masks: Vec<u64> = st.chosen.iter().map(|&s| self.simplices[s]).collect();
                masks.sort_unstable();
                out.insert(masks);
            }
            return;
        };
        if st.volume >= self.target {
            return;
        }
        for &(cand, cand_side) in &self.facet_index[&facet] {
            if cand_side != -side || st.compat[cand / 64] >> (cand % 64) & 1 == 0 {
                continue;
            }
            if self.facets_of[cand]
                .iter()
                .any(|(f, _)| st.closed.contains(f))
            {
                continue;
            }
            let mut next = State {
                chosen: st.chosen.clone(),
                compat: st.compat.clone(),
                open: st.open.clone(),
                closed: st.closed.clone(),
                volume: st.volume.clone(),
            };
            next.push(self, cand);
            self.extend(&mut next, out);
        }
    }
}
