//! Finitely generated subgroups of (R,+) inside the formal value space, and
//! integer row lattices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::formal::{FormalBasis, FormalReal};
use super::matrix::{hermite_rows, solve_left_rational, IntMatrix};
use super::LinError;

/// Index of one group in another: a positive count or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Index {
    pub fn is_finite(&self) -> bool {
        matches!(self, Index::Finite(_))
    }

    pub fn finite(n: i64) -> Self {
        Index::Finite(n.into())
    }

    pub fn mul(&self, other: &Index) -> Index {
        match (self, other) {
            (Index::Finite(a), Index::Finite(b)) => Index::Finite(a * b),
            _ => Index::Infinite,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// `[sup : sub]` for integer row lattices. Errors when `sub ⊄ sup`.
pub fn int_lattice_index(sup: &[Vec<BigInt>], sub: &[Vec<BigInt>], dim: usize) -> Result<Index, LinError> {
    let sup_basis = hermite_rows(&IntMatrix::from_rows(dim, sup));
    let sub_basis = hermite_rows(&IntMatrix::from_rows(dim, sub));
    let mut coords = Vec::with_capacity(sub_basis.len());
    for row in &sub_basis {
        let x = solve_left_rational(&sup_basis, row).ok_or(LinError::NotASublattice)?;
        if x.iter().any(|c| !c.is_integer()) {
            return Err(LinError::NotASublattice);
        }
        coords.push(x.into_iter().map(|c| c.to_integer()).collect::<Vec<_>>());
    }
    if sub_basis.len() < sup_basis.len() {
        return Ok(Index::Infinite);
    }
    let r = sup_basis.len();
    Ok(Index::Finite(IntMatrix::from_rows(r, &coords).det().abs()))
}

/// A finitely generated subgroup of R with values in the formal span.
#[derive(Clone)]
pub struct ValueLattice {
    generators: Vec<FormalReal>,
    /// Hermite basis of `denominator * generators`, in coefficient coordinates.
    reduced_basis: IntMatrix,
    denominator: BigInt,
}

impl ValueLattice {
    pub fn new(generators: Vec<FormalReal>) -> Self {
        let width = generators.iter().map(FormalReal::width).max().unwrap_or(0);
        let denominator = common_denominator(&generators);
        let rows = integer_rows(&generators, &denominator, width);
        let reduced_basis = IntMatrix::from_rows(width, &hermite_rows(&IntMatrix::from_rows(width, &rows)));
        ValueLattice {
            generators,
            reduced_basis,
            denominator,
        }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn generators(&self) -> &[FormalReal] {
        &self.generators
    }

    pub fn reduced_basis(&self) -> &IntMatrix {
        &self.reduced_basis
    }

    /// Rank as an abelian group.
    pub fn rank(&self) -> usize {
        self.reduced_basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// A reduced basis as formal reals.
    pub fn basis(&self) -> Vec<FormalReal> {
        let d = BigRational::from_integer(self.denominator.clone());
        self.reduced_basis
            .row_vecs()
            .into_iter()
            .map(|r| FormalReal::from_coeffs(r.into_iter().map(|c| BigRational::from_integer(c) / &d).collect()))
            .collect()
    }

    /// Cyclic (rank ≤ 1), hence discrete in R.
    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    pub fn contains(&self, x: &FormalReal) -> bool {
        lattice_index(self, &ValueLattice::new(vec![x.clone()])).is_ok()
    }

    pub fn same_as(&self, other: &ValueLattice) -> bool {
        matches!(lattice_index(self, other), Ok(Index::Finite(n)) if n.is_one()) && lattice_index(other, self).is_ok()
    }

    pub fn render(&self, basis: &FormalBasis) -> String {
        let g: Vec<String> = self.basis().iter().map(|x| basis.render(x)).collect();
        format!("<{}>", g.join(", "))
    }
}

impl fmt::Debug for ValueLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&FormalBasis::default()))
    }
}

fn common_denominator(xs: &[FormalReal]) -> BigInt {
    xs.iter()
        .flat_map(|x| x.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn integer_rows(xs: &[FormalReal], den: &BigInt, width: usize) -> Vec<Vec<BigInt>> {
    let den = BigRational::from_integer(den.clone());
    xs.iter()
        .map(|x| (0..width).map(|i| (x.coeff(i) * &den).to_integer()).collect())
        .collect()
}

/// `[sup : sub]` as subgroups of R. `INFINITE` exactly when `sub` has smaller
/// rank; errors with `NotASublattice` if some generator of `sub` lies outside `sup`.
pub fn lattice_index(sup: &ValueLattice, sub: &ValueLattice) -> Result<Index, LinError> {
    let all: Vec<FormalReal> = sup.generators.iter().chain(sub.generators.iter()).cloned().collect();
    let den = common_denominator(&all);
    let width = all.iter().map(FormalReal::width).max().unwrap_or(0);
    let a = integer_rows(&sup.generators, &den, width);
    let b = integer_rows(&sub.generators, &den, width);
    int_lattice_index(&a, &b, width)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> FormalReal {
        FormalReal::symbol(1)
    }
    fn beta() -> FormalReal {
        FormalReal::symbol(2)
    }

    #[test]
    fn index_of_doubled_lattice() {
        let sup = ValueLattice::new(vec![FormalReal::integer(1), alpha()]);
        let sub = ValueLattice::new(vec![FormalReal::integer(2), &alpha() * 2]);
        assert_eq!(lattice_index(&sup, &sub).unwrap(), Index::finite(4));
    }

    #[test]
    fn index_rank_drop_is_infinite() {
        let sup = ValueLattice::new(vec![FormalReal::integer(1), alpha(), beta()]);
        let sub = ValueLattice::new(vec![alpha(), beta()]);
        assert_eq!(lattice_index(&sup, &sub).unwrap(), Index::Infinite);
    }

    #[test]
    fn index_trivial() {
        let one = ValueLattice::new(vec![FormalReal::integer(1)]);
        assert_eq!(lattice_index(&one, &one).unwrap(), Index::finite(1));
    }

    #[test]
    fn not_a_sublattice() {
        let sup = ValueLattice::new(vec![FormalReal::integer(2)]);
        let sub = ValueLattice::new(vec![FormalReal::integer(1)]);
        assert_eq!(lattice_index(&sup, &sub), Err(LinError::NotASublattice));
        let sub = ValueLattice::new(vec![alpha()]);
        assert_eq!(lattice_index(&sup, &sub), Err(LinError::NotASublattice));
    }

    #[test]
    fn rational_generators() {
        let half = FormalReal::rational(BigRational::new(1.into(), 2.into()));
        let sup = ValueLattice::new(vec![half.clone(), FormalReal::integer(1)]);
        let sub = ValueLattice::new(vec![FormalReal::integer(3)]);
        assert_eq!(lattice_index(&sup, &sub).unwrap(), Index::finite(6));
        assert_eq!(sup.rank(), 1);
    }

    #[test]
    fn zero_lattice() {
        let z = ValueLattice::zero();
        assert!(z.is_zero());
        assert_eq!(lattice_index(&z, &z).unwrap(), Index::finite(1));
        let one = ValueLattice::new(vec![FormalReal::integer(1)]);
        assert_eq!(lattice_index(&one, &z).unwrap(), Index::Infinite);
    }
}
