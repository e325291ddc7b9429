//! Redundancy elimination for homogeneous inequality systems, using an exact
//! rational simplex method with Bland's rule.
//!
//! A row `c_i · x ≤ 0` is redundant in the cone `{c_j · x ≤ 0, E x = 0}` when
//! maximizing `c_i · x` over the other rows plus the normalization
//! `c_i · x ≤ 1` gives an optimum `≤ 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::InequalitySystem;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest ambient dimension accepted by the redundancy routines.
pub const MAX_DIMENSION: usize = 8;

fn q(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `max objective · x` subject to `A x ≤ b`, `E x = d`, `x` free.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RationalLP {
    pub objective: Vec<Rational>,
    pub inequalities: Vec<(Vec<Rational>, Rational)>,
    pub equalities: Vec<(Vec<Rational>, Rational)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Unbounded,
    Infeasible,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) -> Result<()> {
        let p = self.rows[r][c].clone();
        if p.is_zero() {
            return Err(Error::LpInvariant("zero pivot".into()));
        }
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
            if self.rhs[i].is_negative() {
                return Err(Error::LpInvariant(
                    "negative right-hand side after pivot".into(),
                ));
            }
        }
        self.basis[r] = c;
        Ok(())
    }

    /// Maximizes `cost` over columns `< allowed`. Returns `false` when
    /// unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<bool> {
        loop {
            // Bland: lowest-index column with positive reduced cost enters
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(c) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Ok(false),
                Some((r, _)) => self.pivot(r, c)?,
            }
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(Rational::zero(), |acc, (&b, v)| acc + &cost[b] * v)
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cols];
        for (&b, v) in self.basis.iter().zip(&self.rhs) {
            x[b] = v.clone();
        }
        x
    }
}

impl RationalLP {
    fn n(&self) -> usize {
        self.objective.len()
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.n();
        let bad = self
            .inequalities
            .iter()
            .chain(&self.equalities)
            .any(|(row, _)| row.len() != n);
        if bad {
            return Err(Error::BadParameter(
                "LP row length differs from objective".into(),
            ));
        }
        Ok(())
    }

    /// Two-phase simplex over `x = u − v`, `u, v ≥ 0`.
    pub fn solve(&self) -> Result<LpOutcome> {
        self.check_shape()?;
        let n = self.n();
        let m_ineq = self.inequalities.len();
        let m = m_ineq + self.equalities.len();
        // columns: u (n), v (n), slacks (m_ineq), artificials (m)
        let slack0 = 2 * n;
        let art0 = slack0 + m_ineq;
        let cols = art0 + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut has_artificial = false;
        for (i, (a, b)) in self.inequalities.iter().chain(&self.equalities).enumerate() {
            let flip = b.is_negative();
            let sign = if flip {
                -Rational::one()
            } else {
                Rational::one()
            };
            let mut row = vec![Rational::zero(); cols];
            for (j, x) in a.iter().enumerate() {
                row[j] = &sign * x;
                row[n + j] = -(&sign * x);
            }
            if i < m_ineq {
                row[slack0 + i] = sign.clone();
            }
            if i < m_ineq && !flip {
                basis.push(slack0 + i);
            } else {
                row[art0 + i] = Rational::one();
                basis.push(art0 + i);
                has_artificial = true;
            }
            rows.push(row);
            rhs.push(&sign * b);
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis,
            cols,
        };

        if has_artificial {
            let mut phase1 = vec![Rational::zero(); cols];
            for c in phase1.iter_mut().skip(art0) {
                *c = -Rational::one();
            }
            t.optimize(&phase1, cols)?;
            if t.value(&phase1).is_negative() {
                return Ok(LpOutcome::Infeasible);
            }
            // drive zero-level artificials out of the basis, or drop their row
            let mut r = 0;
            while r < t.rows.len() {
                if t.basis[r] < art0 {
                    r += 1;
                    continue;
                }
                match (0..art0).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(c) => {
                        t.pivot(r, c)?;
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.rhs.remove(r);
                        t.basis.remove(r);
                    }
                }
            }
        }

        let mut cost = vec![Rational::zero(); cols];
        for (j, c) in self.objective.iter().enumerate() {
            cost[j] = c.clone();
            cost[n + j] = -c.clone();
        }
        if !t.optimize(&cost, art0)? {
            return Ok(LpOutcome::Unbounded);
        }
        let cv = t.column_values();
        let point: Vec<Rational> = (0..n).map(|j| &cv[j] - &cv[n + j]).collect();
        let value = t.value(&cost);
        self.verify(&point, &value)?;
        Ok(LpOutcome::Optimal { value, point })
    }

    fn verify(&self, x: &[Rational], value: &Rational) -> Result<()> {
        let dot = |a: &[Rational]| {
            a.iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (p, q)| acc + p * q)
        };
        for (a, b) in &self.inequalities {
            if dot(a) > *b {
                return Err(Error::LpInvariant(
                    "optimal point violates an inequality".into(),
                ));
            }
        }
        for (a, b) in &self.equalities {
            if dot(a) != *b {
                return Err(Error::LpInvariant(
                    "optimal point violates an equality".into(),
                ));
            }
        }
        if dot(&self.objective) != *value {
            return Err(Error::LpInvariant("objective value mismatch".into()));
        }
        Ok(())
    }
}

/// A homogeneous cone `{x : c_j · x ≤ 0 for all j, e · x = 0 for all e}` with
/// integer data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceCone {
    pub dim: usize,
    pub rows: Vec<Vec<i64>>,
    pub equalities: Vec<Vec<i64>>,
}

impl HalfspaceCone {
    pub fn new(dim: usize, rows: Vec<Vec<i64>>, equalities: Vec<Vec<i64>>) -> Result<Self> {
        if rows.iter().chain(&equalities).any(|r| r.len() != dim) {
            return Err(Error::BadParameter(
                "row length differs from cone dimension".into(),
            ));
        }
        Ok(HalfspaceCone {
            dim,
            rows,
            equalities,
        })
    }

    /// Dimension of the ambient space after eliminating the equalities.
    pub fn effective_dim(&self) -> usize {
        self.dim.saturating_sub(integer_rank(&self.equalities))
    }

    fn guard(&self) -> Result<()> {
        let dim = self.effective_dim();
        if dim > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge {
                dim,
                limit: MAX_DIMENSION,
            });
        }
        Ok(())
    }

    /// Is row `index` implied by the rows in `others`?
    fn implied_by(&self, index: usize, others: &[usize]) -> Result<bool> {
        let target: Vec<Rational> = self.rows[index].iter().map(|&x| q(x)).collect();
        let mut lp = RationalLP {
            objective: target.clone(),
            ..Default::default()
        };
        for &j in others {
            if j != index {
                lp.inequalities.push((
                    self.rows[j].iter().map(|&x| q(x)).collect(),
                    Rational::zero(),
                ));
            }
        }
        lp.inequalities.push((target, Rational::one()));
        for e in &self.equalities {
            lp.equalities
                .push((e.iter().map(|&x| q(x)).collect(), Rational::zero()));
        }
        match lp.solve()? {
            LpOutcome::Optimal { value, .. } => Ok(!value.is_positive()),
            // x = 0 is feasible and the normalization bounds the objective
            LpOutcome::Unbounded | LpOutcome::Infeasible => Err(Error::LpInvariant(
                "redundancy LP must have an optimum".into(),
            )),
        }
    }

    pub fn is_redundant(&self, index: usize) -> Result<bool> {
        self.guard()?;
        if index >= self.rows.len() {
            return Err(Error::BadParameter(format!("row {index} out of range")));
        }
        let all: Vec<usize> = (0..self.rows.len()).collect();
        self.implied_by(index, &all)
    }

    /// Indices of an irredundant subsystem defining the same cone, found by
    /// removing redundant rows one at a time in row order.
    pub fn irredundant_indices(&self) -> Result<Vec<usize>> {
        self.guard()?;
        let mut active: Vec<usize> = (0..self.rows.len()).collect();
        let mut removed = Vec::new();
        let mut pos = 0;
        while pos < active.len() {
            let i = active[pos];
            if self.implied_by(i, &active)? {
                active.remove(pos);
                removed.push(i);
            } else {
                pos += 1;
            }
        }
        for &i in &removed {
            if !self.implied_by(i, &active)? {
                return Err(Error::LpInvariant(format!(
                    "removed row {i} is not implied by the core"
                )));
            }
        }
        Ok(active)
    }

    /// Does `x` satisfy every row and equality?
    pub fn contains(&self, x: &[Rational]) -> bool {
        let dot = |a: &[i64]| {
            a.iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (&p, y)| acc + q(p) * y)
        };
        self.rows.iter().all(|r| !dot(r).is_positive())
            && self.equalities.iter().all(|e| dot(e).is_zero())
    }
}

fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                let prow = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The cone of an inequality system: restricted coordinates when present,
/// otherwise the full weight space with the equality `σ(α) = 0`.
pub fn system_cone(system: &InequalitySystem) -> Result<HalfspaceCone> {
    match &system.coordinate_space {
        Some(basis) => HalfspaceCone::new(basis.dim(), system.restricted.clone(), Vec::new()),
        None => {
            let to_row =
                |b: &crate::quiver::DimVector| b.as_slice().iter().map(|&x| i64::from(x)).collect();
            let eq = if system.alpha.is_zero() {
                Vec::new()
            } else {
                vec![to_row(&system.alpha)]
            };
            HalfspaceCone::new(
                system.alpha.len(),
                system.normals.iter().map(to_row).collect(),
                eq,
            )
        }
    }
}

/// Is inequality `index` of `system` implied by the others?
pub fn is_redundant(system: &InequalitySystem, index: usize) -> Result<bool> {
    system_cone(system)?.is_redundant(index)
}

/// The subsystem left after greedily removing redundant rows in order.
pub fn irredundant_core(system: &InequalitySystem) -> Result<InequalitySystem> {
    let keep = system_cone(system)?.irredundant_indices()?;
    let mut core = system.clone();
    core.normals = keep.iter().map(|&i| system.normals[i].clone()).collect();
    if !system.restricted.is_empty() {
        core.restricted = keep.iter().map(|&i| system.restricted[i].clone()).collect();
    }
    Ok(core)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rational {
        q(x)
    }

    #[test]
    fn lp_basic_optimum() {
        // max x + y s.t. x ≤ 2, y ≤ 3, x + y ≤ 4
        let lp = RationalLP {
            objective: vec![r(1), r(1)],
            inequalities: vec![
                (vec![r(1), r(0)], r(2)),
                (vec![r(0), r(1)], r(3)),
                (vec![r(1), r(1)], r(4)),
            ],
            equalities: vec![],
        };
        let LpOutcome::Optimal { value, .. } = lp.solve().unwrap() else {
            panic!()
        };
        assert_eq!(value, r(4));
    }

    #[test]
    fn lp_negative_rhs_and_equality() {
        // max −x s.t. x ≥ 1 (−x ≤ −1), x − y = 0, y ≤ 5
        let lp = RationalLP {
            objective: vec![r(-1), r(0)],
            inequalities: vec![(vec![r(-1), r(0)], r(-1)), (vec![r(0), r(1)], r(5))],
            equalities: vec![(vec![r(1), r(-1)], r(0))],
        };
        let LpOutcome::Optimal { value, point } = lp.solve().unwrap() else {
            panic!()
        };
        assert_eq!(value, r(-1));
        assert_eq!(point, vec![r(1), r(1)]);
    }

    #[test]
    fn lp_fractional_optimum() {
        // max x s.t. 3x ≤ 1
        let lp = RationalLP {
            objective: vec![r(1)],
            inequalities: vec![(vec![r(3)], r(1))],
            equalities: vec![],
        };
        let LpOutcome::Optimal { value, .. } = lp.solve().unwrap() else {
            panic!()
        };
        assert_eq!(value, Rational::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn lp_infeasible_and_unbounded() {
        let lp = RationalLP {
            objective: vec![r(1)],
            inequalities: vec![(vec![r(1)], r(-1)), (vec![r(-1)], r(-1))],
            equalities: vec![],
        };
        assert_eq!(lp.solve().unwrap(), LpOutcome::Infeasible);
        let lp = RationalLP {
            objective: vec![r(1)],
            inequalities: vec![(vec![r(-1)], r(0))],
            equalities: vec![],
        };
        assert_eq!(lp.solve().unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn lp_degenerate_cycling_example_terminates() {
        // Beale's example cycles under the textbook rule; Bland's rule stops
        let f = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
        let lp = RationalLP {
            objective: vec![f(3, 4), r(-150), f(1, 50), r(-6)],
            inequalities: vec![
                (vec![f(1, 4), r(-60), f(-1, 25), r(9)], r(0)),
                (vec![f(1, 2), r(-90), f(-1, 50), r(3)], r(0)),
                (vec![r(0), r(0), r(1), r(0)], r(1)),
                (vec![r(-1), r(0), r(0), r(0)], r(0)),
                (vec![r(0), r(-1), r(0), r(0)], r(0)),
                (vec![r(0), r(0), r(-1), r(0)], r(0)),
                (vec![r(0), r(0), r(0), r(-1)], r(0)),
            ],
            equalities: vec![],
        };
        let LpOutcome::Optimal { value, .. } = lp.solve().unwrap() else {
            panic!()
        };
        assert_eq!(value, f(1, 20));
    }

    #[test]
    fn redundancy_small_cases() {
        let cone = HalfspaceCone::new(2, vec![vec![1, 0], vec![1, 0]], vec![]).unwrap();
        assert!(cone.is_redundant(1).unwrap());
        assert_eq!(cone.irredundant_indices().unwrap(), vec![1]);

        let cone = HalfspaceCone::new(2, vec![vec![1, 2]], vec![]).unwrap();
        assert!(!cone.is_redundant(0).unwrap());

        let cone = HalfspaceCone::new(3, vec![], vec![]).unwrap();
        assert!(cone.irredundant_indices().unwrap().is_empty());

        let coords =
            HalfspaceCone::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], vec![])
                .unwrap();
        assert_eq!(coords.irredundant_indices().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn zero_row_is_redundant() {
        let cone = HalfspaceCone::new(2, vec![vec![0, 0], vec![1, 1]], vec![]).unwrap();
        assert!(cone.is_redundant(0).unwrap());
        assert!(!cone.is_redundant(1).unwrap());
    }

    #[test]
    fn equality_makes_rows_redundant() {
        // on x + y = 0: x ≤ 0 and −y ≤ 0 coincide
        let cone = HalfspaceCone::new(2, vec![vec![1, 0], vec![0, -1]], vec![vec![1, 1]]).unwrap();
        assert_eq!(cone.effective_dim(), 1);
        assert!(cone.is_redundant(1).unwrap());
        assert_eq!(cone.irredundant_indices().unwrap().len(), 1);
    }

    #[test]
    fn dimension_guard() {
        let cone = HalfspaceCone::new(9, vec![vec![1; 9]], vec![]).unwrap();
        assert!(matches!(
            cone.is_redundant(0),
            Err(Error::DimensionTooLarge { dim: 9, limit: 8 })
        ));
        let cone = HalfspaceCone::new(9, vec![vec![1; 9]], vec![vec![1; 9]]).unwrap();
        assert!(cone.is_redundant(0).is_ok());
    }
}
