//! Exact two-phase simplex method over the rationals.
//!
//! Dense tableau, Bland's rule for both the entering and the leaving
//! variable, so the method terminates on degenerate problems.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
struct Constraint {
    coeffs: Vec<Rational>,
    relation: Relation,
    rhs: Rational,
}

/// `maximize c·x` subject to linear constraints; variables are
/// nonnegative unless declared free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(&self) -> Option<(&[Rational], &Rational)> {
        match self {
            LpOutcome::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            free: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub fn set_objective(&mut self, c: Vec<Rational>) {
        assert_eq!(c.len(), self.num_vars);
        self.objective = c;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Sparse convenience form of [`add_constraint`](Self::add_constraint).
    pub fn add_sparse(&mut self, terms: &[(usize, Rational)], relation: Relation, rhs: Rational) {
        let mut coeffs = vec![Rational::zero(); self.num_vars];
        for (i, c) in terms {
            coeffs[*i] += c;
        }
        self.add_constraint(coeffs, relation, rhs);
    }

    pub fn solve(&self) -> LpOutcome {
        // Column layout: original vars (the nonnegative part of free vars),
        // then negative parts of free vars, then slacks, then artificials.
        let free_idx: Vec<usize> = (0..self.num_vars).filter(|&i| self.free[i]).collect();
        let n_struct = self.num_vars + free_idx.len();
        let m = self.constraints.len();

        let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                let mut coeffs = c.coeffs.clone();
                coeffs.extend(free_idx.iter().map(|&i| -c.coeffs[i].clone()));
                let (mut rel, mut rhs) = (c.relation, c.rhs.clone());
                if rhs.is_negative() {
                    for x in coeffs.iter_mut() {
                        *x = -x.clone();
                    }
                    rhs = -rhs;
                    rel = match rel {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                }
                (coeffs, rel, rhs)
            })
            .collect();

        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let width = n_struct + n_slack + n_art;
        let art_start = n_struct + n_slack;

        let mut tab = Tableau {
            a: Vec::with_capacity(m),
            b: Vec::with_capacity(m),
            basis: Vec::with_capacity(m),
        };
        let (mut s, mut art) = (n_struct, art_start);
        for (coeffs, rel, rhs) in rows.drain(..) {
            let mut row = coeffs;
            row.resize(width, Rational::zero());
            match rel {
                Relation::Le => {
                    row[s] = Rational::one();
                    tab.basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = -Rational::one();
                    s += 1;
                    row[art] = Rational::one();
                    tab.basis.push(art);
                    art += 1;
                }
                Relation::Eq => {
                    row[art] = Rational::one();
                    tab.basis.push(art);
                    art += 1;
                }
            }
            tab.a.push(row);
            tab.b.push(rhs);
        }

        // Phase one: maximize -(sum of artificials).
        if n_art > 0 {
            let mut cost = vec![Rational::zero(); width];
            for c in cost.iter_mut().skip(art_start) {
                *c = -Rational::one();
            }
            let allowed = |_: usize| true;
            if tab.run(&cost, &allowed).is_err() {
                unreachable!("phase one objective is bounded above by zero");
            }
            if tab.value(&cost).is_negative() {
                return LpOutcome::Infeasible;
            }
            tab.evict_artificials(art_start);
        }

        let mut cost = vec![Rational::zero(); width];
        cost[..self.num_vars].clone_from_slice(&self.objective);
        for (k, &i) in free_idx.iter().enumerate() {
            cost[self.num_vars + k] = -self.objective[i].clone();
        }
        let allowed = |j: usize| j < art_start;
        if tab.run(&cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }

        let mut full = vec![Rational::zero(); width];
        for (r, &j) in tab.basis.iter().enumerate() {
            full[j] = tab.b[r].clone();
        }
        let mut x: Vec<Rational> = full[..self.num_vars].to_vec();
        for (k, &i) in free_idx.iter().enumerate() {
            x[i] -= &full[self.num_vars + k];
        }
        let value = super::rational::dot(&self.objective, &x);
        LpOutcome::Optimal { x, value }
    }
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
}

struct Unbounded;

impl Tableau {
    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.b)
            .fold(Rational::zero(), |acc, (&j, bj)| acc + &cost[j] * bj)
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut d = cost[j].clone();
        for (r, &bj) in self.basis.iter().enumerate() {
            if !self.a[r][j].is_zero() {
                d -= &cost[bj] * &self.a[r][j];
            }
        }
        d
    }

    fn run(&mut self, cost: &[Rational], allowed: &dyn Fn(usize) -> bool) -> Result<(), Unbounded> {
        let width = cost.len();
        loop {
            // Bland: lowest-index improving column.
            let entering = (0..width)
                .filter(|&j| allowed(j) && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(e) = entering else { return Ok(()) };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.a.len() {
                if !self.a[r][e].is_positive() {
                    continue;
                }
                let ratio = &self.b[r] / &self.a[r][e];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(r, e);
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.a[r][e].recip();
        for x in self.a[r].iter_mut() {
            *x *= &inv;
        }
        self.b[r] *= &inv;
        let (pivot_row, pivot_b) = (self.a[r].clone(), self.b[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][e].is_zero() {
                continue;
            }
            let f = self.a[i][e].clone();
            for (x, p) in self.a[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.b[i] -= &f * &pivot_b;
        }
        self.basis[r] = e;
    }

    /// After a successful phase one, pivots remaining (zero-valued)
    /// artificial variables out of the basis, dropping redundant rows.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut r = 0;
        while r < self.a.len() {
            if self.basis[r] < art_start {
                r += 1;
                continue;
            }
            match (0..art_start).find(|&j| !self.a[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    self.a.remove(r);
                    self.b.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }
}
