//! Exact rational feasibility by Fourier–Motzkin elimination, and cone
//! membership on top of it.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinError;

/// One constraint `coeffs · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Inequality {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Inequality { coeffs, rhs }
    }

    /// Scales so the leading nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &lead;
            }
            self.rhs = &self.rhs / &lead;
        }
        self
    }
}

/// Equalities are passed as two inequalities.
pub fn equality(coeffs: Vec<BigRational>, rhs: BigRational) -> [Inequality; 2] {
    let neg: Vec<BigRational> = coeffs.iter().map(|c| -c).collect();
    [Inequality::new(coeffs, rhs.clone()), Inequality::new(neg, -rhs)]
}

fn dedup(system: Vec<Inequality>) -> Vec<Inequality> {
    use std::collections::HashMap;
    let mut best: HashMap<Vec<BigRational>, BigRational> = HashMap::new();
    let mut order = Vec::new();
    for ineq in system.into_iter().map(Inequality::normalized) {
        match best.get_mut(&ineq.coeffs) {
            Some(r) => {
                if ineq.rhs < *r {
                    *r = ineq.rhs;
                }
            }
            None => {
                order.push(ineq.coeffs.clone());
                best.insert(ineq.coeffs, ineq.rhs);
            }
        }
    }
    order
        .into_iter()
        .map(|c| {
            let r = best.remove(&c).expect("key recorded");
            Inequality::new(c, r)
        })
        .collect()
}

/// Decides `∃x ∈ Q^n : A x ≤ b` and returns a witness point when feasible.
pub fn feasible_point(n: usize, system: &[Inequality]) -> Option<Vec<BigRational>> {
    // stages[k] holds the system in which variables 0..k have been eliminated
    let mut stages: Vec<Vec<Inequality>> = vec![dedup(system.to_vec())];
    for var in 0..n {
        let cur = stages.last().expect("nonempty");
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in cur {
            match ineq.coeffs[var].cmp(&BigRational::zero()) {
                std::cmp::Ordering::Greater => pos.push(ineq),
                std::cmp::Ordering::Less => neg.push(ineq),
                std::cmp::Ordering::Equal => rest.push(ineq.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[var].clone(), -q.coeffs[var].clone());
                let coeffs: Vec<BigRational> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                rest.push(Inequality::new(coeffs, &p.rhs * &b + &q.rhs * &a));
            }
        }
        stages.push(dedup(rest));
    }
    if stages[n].iter().any(|ineq| ineq.rhs.is_negative()) {
        return None;
    }
    // back substitution from the last eliminated variable
    let mut x = vec![BigRational::zero(); n];
    for var in (0..n).rev() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for ineq in &stages[var] {
            let a = &ineq.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let rest: BigRational = ineq
                .coeffs
                .iter()
                .zip(&x)
                .enumerate()
                .filter(|(j, _)| *j > var)
                .map(|(_, (c, v))| c * v)
                .sum();
            let bound = (&ineq.rhs - rest) / a;
            if a.is_positive() {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            } else {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            }
        }
        x[var] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / BigRational::from_integer(2.into()),
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => BigRational::zero(),
        };
    }
    Some(x)
}

/// The closed convex cone spanned by finitely many rational vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<BigRational>>,
}

impl RationalCone {
    pub fn new(dim: usize, generators: Vec<Vec<BigRational>>) -> Result<Self, LinError> {
        if generators.iter().any(|g| g.len() != dim) {
            return Err(LinError::DimensionMismatch);
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<BigRational>] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// `v` is a nonnegative combination of the cone generators.
pub fn cone_contains(cone: &RationalCone, v: &[BigRational]) -> Result<bool, LinError> {
    if v.len() != cone.dim {
        return Err(LinError::DimensionMismatch);
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let k = cone.generators.len();
    let mut system = Vec::new();
    for i in 0..k {
        let mut c = vec![BigRational::zero(); k];
        c[i] = -BigRational::one();
        system.push(Inequality::new(c, BigRational::zero()));
    }
    for j in 0..cone.dim {
        let row: Vec<BigRational> = cone.generators.iter().map(|g| g[j].clone()).collect();
        system.extend(equality(row, v[j].clone()));
    }
    Ok(feasible_point(k, &system).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn negative_quadrant() -> RationalCone {
        RationalCone::new(2, vec![v(&[-1, 0]), v(&[0, -1])]).unwrap()
    }

    #[test]
    fn quadrant_membership() {
        let c = negative_quadrant();
        assert!(cone_contains(&c, &v(&[-1, -2])).unwrap());
        assert!(!cone_contains(&c, &v(&[1, 1])).unwrap());
        assert!(!cone_contains(&c, &v(&[-1, 3])).unwrap());
        assert!(cone_contains(&c, &v(&[0, 0])).unwrap());
        assert!(cone_contains(&c, &v(&[0, -5])).unwrap());
    }

    #[test]
    fn empty_cone() {
        let c = RationalCone::new(2, vec![]).unwrap();
        assert!(!cone_contains(&c, &v(&[1, 0])).unwrap());
        assert!(cone_contains(&c, &v(&[0, 0])).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let c = negative_quadrant();
        assert_eq!(cone_contains(&c, &v(&[1])), Err(LinError::DimensionMismatch));
        assert_eq!(RationalCone::new(3, vec![v(&[1, 2])]), Err(LinError::DimensionMismatch));
    }

    #[test]
    fn witness_satisfies_system() {
        // x + y ≤ 4, x ≥ 1, y ≥ 2, x - y ≤ 0
        let sys = vec![
            Inequality::new(v(&[1, 1]), q(4)),
            Inequality::new(v(&[-1, 0]), q(-1)),
            Inequality::new(v(&[0, -1]), q(-2)),
            Inequality::new(v(&[1, -1]), q(0)),
        ];
        let x = feasible_point(2, &sys).unwrap();
        for ineq in &sys {
            let lhs: BigRational = ineq.coeffs.iter().zip(&x).map(|(a, b)| a * b).sum();
            assert!(lhs <= ineq.rhs);
        }
        let mut bad = sys.clone();
        bad.push(Inequality::new(v(&[-1, -1]), q(-5)));
        assert!(feasible_point(2, &bad).is_none());
    }

    #[test]
    fn non_pointed_cone() {
        let c = RationalCone::new(2, vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1])]).unwrap();
        assert!(cone_contains(&c, &v(&[-7, 3])).unwrap());
        assert!(!cone_contains(&c, &v(&[-7, -3])).unwrap());
    }
}
