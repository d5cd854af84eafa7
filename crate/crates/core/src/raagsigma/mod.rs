//! Flag complexes, their integral homology, and Σ^m membership for
//! right-angled Artin groups.

pub mod complex;
pub mod homology;

use std::collections::BTreeSet;

pub use complex::{FlagComplex, Simplex, SubcomplexView};
pub use homology::{is_acyclic_through, simplicial_homology, ReducedHomology};

use crate::exactlin::FormalReal;
use crate::verdict::{Degree, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RaagError {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("permutation {0} is not a simplicial automorphism")]
    NotSimplicial(String),
}

/// The full subcomplex on vertices fixed by every permutation.
pub fn fixed_subcomplex(l: &FlagComplex, perms: &[Vec<usize>]) -> Result<SubcomplexView, RaagError> {
    for (i, p) in perms.iter().enumerate() {
        if !l.is_automorphism(p) {
            return Err(RaagError::NotSimplicial(format!("#{i} {p:?}")));
        }
    }
    let fixed: BTreeSet<usize> = (0..l.vertex_count())
        .filter(|&v| perms.iter().all(|p| p[v] == v))
        .collect();
    Ok(l.induced(&fixed))
}

/// The full subcomplex on vertices with nonzero character value.
pub fn living_subcomplex(l: &FlagComplex, values: &[FormalReal]) -> SubcomplexView {
    let living: BTreeSet<usize> = (0..l.vertex_count()).filter(|&v| !values[v].is_zero()).collect();
    l.induced(&living)
}

/// Nonempty living vertices that dominate `L` and span a connected subcomplex.
pub fn sigma1_graph_criterion(l: &FlagComplex, values: &[FormalReal]) -> bool {
    let living = living_subcomplex(l, values);
    let alive = living.vertex_set();
    living.complex().is_connected()
        && (0..l.vertex_count()).all(|v| alive.contains(&v) || l.neighbors(v).iter().any(|w| alive.contains(w)))
}

/// `[χ] ∈ Σ^m(A_L; ℤ)` for χ given by its vertex values.
///
/// For every dead simplex σ (all vertices with value zero, including the
/// empty simplex of dimension −1), the living part of `lk(σ)` must be
/// `(m − 2 − dim σ)`-acyclic. Criteria stabilize at `m = dim L + 2`, which is
/// used for `m = ∞`. The homological criterion is decisive, so the result is
/// never `Inconclusive`.
pub fn raag_sigma_membership(l: &FlagComplex, values: &[FormalReal], m: Degree) -> Verdict {
    assert_eq!(values.len(), l.vertex_count(), "one value per vertex");
    let cap = (l.dimension() + 2).max(1) as u32;
    let m = m.capped(cap) as i64;
    let dead: BTreeSet<usize> = (0..l.vertex_count()).filter(|&v| values[v].is_zero()).collect();
    let living: BTreeSet<usize> = (0..l.vertex_count()).filter(|v| !dead.contains(v)).collect();
    let mut dead_simplices: Vec<Simplex> = vec![Vec::new()];
    dead_simplices.extend(l.induced(&dead).complex().simplices().into_iter().flatten().map(|s| {
        let parent: Vec<usize> = dead.iter().copied().collect();
        s.into_iter().map(|i| parent[i]).collect()
    }));
    for sigma in dead_simplices {
        let dim = sigma.len() as i64 - 1;
        let need = m - 2 - dim;
        if need < -1 {
            continue;
        }
        let link: BTreeSet<usize> = l.link_vertices(&sigma).intersection(&living).copied().collect();
        if !is_acyclic_through(l.induced(&link).complex(), need) {
            return Verdict::Out;
        }
    }
    Verdict::In
}
