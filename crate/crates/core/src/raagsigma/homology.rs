use num_bigint::BigInt;
use num_traits::One;

use super::complex::{FlagComplex, Simplex};
use crate::exactlin::{smith_normal_form, IntMatrix};

/// Reduced integral homology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedHomology {
    /// The complex has no vertices; only the degree −1 group (ℤ) is nonzero.
    EmptyComplex,
    Group {
        betti: usize,
        torsion: Vec<BigInt>,
    },
}

impl ReducedHomology {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ReducedHomology::Group { betti: 0, torsion } if torsion.is_empty())
    }

    pub fn betti(&self) -> usize {
        match self {
            ReducedHomology::EmptyComplex => 0,
            ReducedHomology::Group { betti, .. } => *betti,
        }
    }
}

/// Boundary map from `k`-simplices to `(k−1)`-simplices; `k = 0` is the augmentation.
fn boundary(simplices: &[Vec<Simplex>], k: usize) -> IntMatrix {
    let cols = &simplices[k];
    if k == 0 {
        return IntMatrix::from_rows(cols.len(), &[vec![1i64; cols.len()]]);
    }
    let rows = &simplices[k - 1];
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for drop in 0..s.len() {
            let face: Simplex = s
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &v)| v)
                .collect();
            let i = rows.binary_search(&face).expect("faces of a clique are cliques");
            m[(i, j)] = BigInt::from(if drop % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// `H̃_k(C; ℤ)` for `k ≥ 0`, via Smith normal forms of the boundary maps.
pub fn simplicial_homology(c: &FlagComplex, k: usize) -> ReducedHomology {
    if c.is_empty() {
        return ReducedHomology::EmptyComplex;
    }
    let mut simplices = c.simplices();
    for layer in simplices.iter_mut() {
        layer.sort();
    }
    if k >= simplices.len() {
        return ReducedHomology::Group {
            betti: 0,
            torsion: Vec::new(),
        };
    }
    let dk = smith_normal_form(&boundary(&simplices, k));
    let rank_k = dk.rank();
    let (rank_up, torsion) = if k + 1 < simplices.len() {
        let up = smith_normal_form(&boundary(&simplices, k + 1));
        let tors = up.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        (up.rank(), tors)
    } else {
        (0, Vec::new())
    };
    ReducedHomology::Group {
        betti: simplices[k].len() - rank_k - rank_up,
        torsion,
    }
}

/// Reduced homology vanishes in all degrees `≤ n` (`n = −1` means nonempty).
pub fn is_acyclic_through(c: &FlagComplex, n: i64) -> bool {
    if n < -1 {
        return true;
    }
    if c.is_empty() {
        return false;
    }
    (0..=n).all(|k| simplicial_homology(c, k as usize).is_trivial())
}
