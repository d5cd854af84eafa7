//! Split extensions `K ⋉ A_L` of a right-angled Artin group by a finite
//! group acting through simplicial automorphisms of `L`.

use std::collections::BTreeSet;

use super::finite::{FiniteGroupTable, FiniteSubgroup};
use super::GroupError;
use crate::raagsigma::{fixed_subcomplex, FlagComplex, SubcomplexView};

/// An element `w·k` with `w` a word in the vertex generators, stored as
/// `(vertex, exponent)` syllables without relator reduction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RaagElement {
    pub k: usize,
    pub word: Vec<(usize, i64)>,
}

#[derive(Clone, Debug)]
pub struct RaagExtGroup {
    l: FlagComplex,
    k: FiniteGroupTable,
    perms: Vec<Vec<usize>>,
}

impl RaagExtGroup {
    pub fn new(l: FlagComplex, k: FiniteGroupTable, perms: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if perms.len() != k.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} permutations for |K| = {}",
                perms.len(),
                k.order()
            )));
        }
        for (i, p) in perms.iter().enumerate() {
            if !l.is_automorphism(p) {
                return Err(GroupError::NotSimplicial(k.name(i).to_string()));
            }
        }
        for a in 0..k.order() {
            for b in 0..k.order() {
                let composed: Vec<usize> = (0..l.vertex_count()).map(|v| perms[a][perms[b][v]]).collect();
                if perms[k.mul(a, b)] != composed {
                    return Err(GroupError::InvalidAction(format!(
                        "permutation of {}{} is not the composite",
                        k.name(a),
                        k.name(b)
                    )));
                }
            }
        }
        Ok(RaagExtGroup { l, k, perms })
    }

    /// The bare RAAG `A_L` with trivial K.
    pub fn raag(l: FlagComplex) -> Self {
        let n = l.vertex_count();
        Self::new(l, FiniteGroupTable::trivial(), vec![(0..n).collect()]).expect("valid")
    }

    pub fn complex(&self) -> &FlagComplex {
        &self.l
    }

    pub fn k(&self) -> &FiniteGroupTable {
        &self.k
    }

    pub fn perm(&self, k: usize) -> &[usize] {
        &self.perms[k]
    }

    pub fn vertex(&self, v: usize) -> RaagElement {
        RaagElement {
            k: 0,
            word: vec![(v, 1)],
        }
    }

    pub fn finite(&self, k: usize) -> RaagElement {
        RaagElement { k, word: Vec::new() }
    }

    fn act(&self, k: usize, word: &[(usize, i64)]) -> Vec<(usize, i64)> {
        word.iter().map(|&(v, e)| (self.perms[k][v], e)).collect()
    }

    pub fn mul(&self, a: &RaagElement, b: &RaagElement) -> RaagElement {
        let mut word = a.word.clone();
        for s in self.act(a.k, &b.word) {
            push_syllable(&mut word, s);
        }
        RaagElement {
            k: self.k.mul(a.k, b.k),
            word,
        }
    }

    pub fn inv(&self, a: &RaagElement) -> RaagElement {
        let ki = self.k.inv(a.k);
        let rev: Vec<(usize, i64)> = a.word.iter().rev().map(|&(v, e)| (v, -e)).collect();
        RaagElement {
            k: ki,
            word: self.act(ki, &rev),
        }
    }

    /// The fixed subcomplex of a subgroup of K.
    pub fn fixed(&self, q: &FiniteSubgroup) -> SubcomplexView {
        let perms: Vec<Vec<usize>> = q.iter().map(|&k| self.perms[k].clone()).collect();
        fixed_subcomplex(&self.l, &perms).expect("automorphisms checked at construction")
    }

    /// `C_G(Q) = C_K(Q) ⋉ A_{L^Q}` for `Q ≤ K`.
    pub fn centralizer(&self, q: &FiniteSubgroup) -> Vec<RaagElement> {
        self.k_part_with_fixed(self.k.centralizer(q), q)
    }

    /// `N_G(Q) = N_K(Q) ⋉ A_{L^Q}` for `Q ≤ K`.
    pub fn normalizer(&self, q: &FiniteSubgroup) -> Vec<RaagElement> {
        self.k_part_with_fixed(self.k.normalizer(q), q)
    }

    fn k_part_with_fixed(&self, ks: Vec<usize>, q: &FiniteSubgroup) -> Vec<RaagElement> {
        let ks: FiniteSubgroup = ks.into_iter().collect();
        let mut gens: Vec<RaagElement> = self.k.generators_of(&ks).into_iter().map(|k| self.finite(k)).collect();
        gens.extend(self.fixed(q).parent_vertices().iter().map(|&v| self.vertex(v)));
        gens
    }

    /// Vertices fixed by `q`.
    pub fn fixed_vertices(&self, q: &FiniteSubgroup) -> BTreeSet<usize> {
        self.fixed(q).vertex_set()
    }

    /// Relation rows over generators `[non-identity K elements..., vertices...]`.
    pub fn abelian_relations(&self) -> Vec<Vec<i64>> {
        let kk = self.k.order() - 1;
        let width = kk + self.l.vertex_count();
        let mut rows = super::k_table_relations(&self.k, width);
        for k in 1..self.k.order() {
            for v in 0..self.l.vertex_count() {
                let w = self.perms[k][v];
                if w != v {
                    let mut r = vec![0; width];
                    r[kk + w] += 1;
                    r[kk + v] -= 1;
                    rows.push(r);
                }
            }
        }
        rows
    }
}

fn push_syllable(word: &mut Vec<(usize, i64)>, (v, e): (usize, i64)) {
    match word.last_mut() {
        Some((u, f)) if *u == v => {
            *f += e;
            if *f == 0 {
                word.pop();
            }
        }
        _ => word.push((v, e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raag_star_example() -> RaagExtGroup {
        let l = FlagComplex::from_labels(&["1", "2", "3", "4"], &[("1", "4"), ("2", "4"), ("3", "4")]).unwrap();
        RaagExtGroup::new(
            l,
            FiniteGroupTable::cyclic(2, "t"),
            vec![vec![0, 1, 2, 3], vec![1, 0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn centralizer_of_swap_is_k_times_fixed_raag() {
        let g = raag_star_example();
        let q: FiniteSubgroup = [0, 1].into();
        let c = g.centralizer(&q);
        assert_eq!(c, vec![g.finite(1), g.vertex(2), g.vertex(3)]);
        assert_eq!(g.normalizer(&q), c);
    }

    #[test]
    fn conjugation_by_t_swaps_vertices() {
        let g = raag_star_example();
        let t = g.finite(1);
        let x = g.mul(&g.mul(&t, &g.vertex(0)), &g.inv(&t));
        assert_eq!(x, g.vertex(1));
        let w = g.mul(&g.vertex(0), &g.vertex(2));
        assert_eq!(g.mul(&w, &g.inv(&w)), g.finite(0));
    }

    #[test]
    fn rejects_non_automorphism() {
        let l = FlagComplex::from_labels(&["1", "2", "3", "4"], &[("1", "4"), ("2", "4"), ("3", "4")]).unwrap();
        let r = RaagExtGroup::new(
            l,
            FiniteGroupTable::cyclic(2, "t"),
            vec![vec![0, 1, 2, 3], vec![3, 1, 2, 0]],
        );
        assert!(matches!(r, Err(GroupError::NotSimplicial(_))));
    }

    #[test]
    fn hexagon_normalizer_is_k() {
        let l = FlagComplex::cycle(6);
        let rot: Vec<usize> = (0..6).map(|i| (i + 3) % 6).collect();
        let g = RaagExtGroup::new(l, FiniteGroupTable::cyclic(2, "r"), vec![(0..6).collect(), rot]).unwrap();
        let q: FiniteSubgroup = [0, 1].into();
        assert_eq!(g.normalizer(&q), vec![g.finite(1)]);
    }
}
