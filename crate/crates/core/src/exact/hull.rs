//! Exact convex hulls in arbitrary dimension.
//!
//! The affine hull is found by row reduction; the point set is then
//! projected injectively onto the pivot coordinates, and the facets of the
//! projected full-dimensional hull are the extreme rays of the cone
//! `{(a, b) : <a, p> - b >= 0 for every input point p}`, computed by the
//! double description method with a combinatorial adjacency test. Every
//! step is exact, so degenerate inputs (non-simplicial facets, repeated
//! points, points in the relative interior of faces) need no perturbation.

use num_traits::{One, Signed, Zero};

use super::linalg::{self, rank, rref};
use super::rational::{self, dot, primitive, primitive_integer, Int, Rational};

/// An affine constraint `<normal, x> (= | >=) offset` with integer data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<Int>,
    pub offset: Int,
}

impl Halfspace {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        rational::dot_int_rat(&self.normal, x) - Rational::from_integer(self.offset.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<Rational>>,
}

/// Affine-hull equations `<e, x> = c` plus facet inequalities
/// `<a, x> >= b` valid within the affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub ambient_dim: usize,
    pub equations: Vec<Halfspace>,
    pub facets: Vec<Halfspace>,
}

impl HPolytope {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.eval(x).is_zero())
            && self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    /// Membership in the `l`-th dilate.
    pub fn contains_dilated(&self, x: &[Rational], l: &Int) -> bool {
        let shifted = |h: &Halfspace| {
            rational::dot_int_rat(&h.normal, x) - Rational::from_integer(&h.offset * l)
        };
        self.equations.iter().all(|e| shifted(e).is_zero())
            && self.facets.iter().all(|f| !shifted(f).is_negative())
    }
}

#[derive(Clone, Debug)]
pub struct ConvexHull {
    /// Dimension of the affine hull.
    pub dim: usize,
    /// Indices of the input points that are vertices (first occurrence of
    /// repeated points), ascending.
    pub vertex_indices: Vec<usize>,
    pub v: VPolytope,
    pub h: HPolytope,
    points: Vec<Vec<Rational>>,
}

impl ConvexHull {
    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Input indices lying on the given facet.
    pub fn facet_incidence(&self, facet: &Halfspace) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| facet.eval(&self.points[i]).is_zero())
            .collect()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.h.equations.is_empty()
    }
}

/// Exact convex hull of a nonempty point list.
pub fn convex_hull(points: &[Vec<Rational>]) -> ConvexHull {
    assert!(!points.is_empty(), "convex hull of an empty point set");
    let ambient = points[0].len();
    let base = &points[0];
    let directions: Vec<Vec<Rational>> = points.iter().map(|p| rational::sub(p, base)).collect();
    let red = rref(&directions, ambient);
    let dim = red.rank();

    let equations: Vec<Halfspace> = red
        .nullspace()
        .into_iter()
        .map(|e| {
            let mut full = e.clone();
            full.push(dot(&e, base));
            let mut ints = primitive_integer(&full);
            let offset = ints.pop().unwrap();
            Halfspace {
                normal: ints,
                offset,
            }
        })
        .collect();

    let mut unique: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !unique.iter().any(|&j| points[j] == *p) {
            unique.push(i);
        }
    }

    if dim == 0 {
        return ConvexHull {
            dim,
            vertex_indices: vec![0],
            v: VPolytope {
                ambient_dim: ambient,
                vertices: vec![points[0].clone()],
            },
            h: HPolytope {
                ambient_dim: ambient,
                equations,
                facets: Vec::new(),
            },
            points: points.to_vec(),
        };
    }

    let coords = red.pivots.clone();
    let projected: Vec<Vec<Rational>> = unique
        .iter()
        .map(|&i| coords.iter().map(|&c| points[i][c].clone()).collect())
        .collect();
    let rays = facet_rays(&projected, dim);

    let mut facets: Vec<Halfspace> = rays
        .into_iter()
        .filter(|r| !rational::is_zero_vec(&r[..dim]))
        .map(|r| {
            let mut normal = vec![Int::zero(); ambient];
            for (k, &c) in coords.iter().enumerate() {
                normal[c] = r[k].clone();
            }
            Halfspace {
                normal,
                offset: r[dim].clone(),
            }
        })
        .collect();
    facets.sort();

    // A point is a vertex iff the normals of the facets through it span the
    // projected space.
    let vertex_indices: Vec<usize> = unique
        .iter()
        .copied()
        .filter(|&i| {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.eval(&points[i]).is_zero())
                .map(|f| {
                    coords
                        .iter()
                        .map(|&c| Rational::from_integer(f.normal[c].clone()))
                        .collect()
                })
                .collect();
            !tight.is_empty() && rank(&tight) == dim
        })
        .collect();

    ConvexHull {
        dim,
        v: VPolytope {
            ambient_dim: ambient,
            vertices: vertex_indices.iter().map(|&i| points[i].clone()).collect(),
        },
        vertex_indices,
        h: HPolytope {
            ambient_dim: ambient,
            equations,
            facets,
        },
        points: points.to_vec(),
    }
}

/// Extreme rays `(a, b)` of `{(a, b) : <a, p> - b >= 0}` for a
/// full-dimensional point set in `R^dim`, as primitive integer vectors.
fn facet_rays(points: &[Vec<Rational>], dim: usize) -> Vec<Vec<Int>> {
    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(-Rational::one());
            primitive_integer(&r)
        })
        .collect();
    let width = dim + 1;

    // Seed with `width` linearly independent rows.
    let mut seed: Vec<usize> = Vec::new();
    let as_rat = |r: &Vec<Int>| {
        r.iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect::<Vec<_>>()
    };
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<Rational>> = seed.iter().map(|&j| as_rat(&rows[j])).collect();
        trial.push(as_rat(&rows[i]));
        if rank(&trial) == trial.len() {
            seed.push(i);
            if seed.len() == width {
                break;
            }
        }
    }
    assert_eq!(seed.len(), width, "point set is not full-dimensional");
    let seed_matrix: Vec<Vec<Rational>> = seed.iter().map(|&j| as_rat(&rows[j])).collect();
    let inv = linalg::inverse(&seed_matrix).expect("seed rows are independent");

    let mut rays: Vec<Ray> = (0..width)
        .map(|k| {
            let col: Vec<Rational> = inv.iter().map(|row| row[k].clone()).collect();
            let mut zeros = Bits::new(rows.len());
            for (s, &j) in seed.iter().enumerate() {
                if s != k {
                    zeros.insert(j);
                }
            }
            Ray {
                v: primitive_integer(&col),
                zeros,
            }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if seed.contains(&i) {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| int_dot(row, &r.v)).collect();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        let mut next: Vec<Ray> = Vec::new();
        for (k, r) in rays.iter().enumerate() {
            if vals[k].is_positive() {
                pos.push(k);
                next.push(r.clone());
            } else if vals[k].is_negative() {
                neg.push(k);
            } else {
                let mut r = r.clone();
                r.zeros.insert(i);
                next.push(r);
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < width {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                // (row.p) q - (row.q) p lies on the new hyperplane.
                let v: Vec<Int> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray {
                    v: primitive(v),
                    zeros,
                });
            }
        }
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

fn int_dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<Int>,
    zeros: Bits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}
