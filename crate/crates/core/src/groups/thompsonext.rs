//! Extensions of Thompson's group F by a finite group K, where each element
//! of K either centralizes F or acts by the orientation-reversing flip.
//!
//! F is modeled through its abelianization `F/F' = ℤ²`: `f1` and `f2` are
//! elements dual to the characters `χ₁, χ₂`, and the flip swaps them.

use super::finite::{FiniteGroupTable, FiniteSubgroup};
use super::GroupError;

/// An element `f·k`, with `f ∈ F` recorded by its image in `F/F'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThompsonElement {
    pub k: usize,
    pub ab: [i64; 2],
}

#[derive(Clone, Debug)]
pub struct ThompsonExtGroup {
    k: FiniteGroupTable,
    flip: Vec<bool>,
}

impl ThompsonExtGroup {
    pub fn new(k: FiniteGroupTable, flip: Vec<bool>) -> Result<Self, GroupError> {
        if flip.len() != k.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} flip values for |K| = {}",
                flip.len(),
                k.order()
            )));
        }
        for a in 0..k.order() {
            for b in 0..k.order() {
                if flip[k.mul(a, b)] != (flip[a] ^ flip[b]) {
                    return Err(GroupError::InvalidAction("flip is not a homomorphism to C2".into()));
                }
            }
        }
        Ok(ThompsonExtGroup { k, flip })
    }

    /// `F` itself.
    pub fn thompson() -> Self {
        Self::new(FiniteGroupTable::trivial(), vec![false]).expect("valid")
    }

    /// `C₂` acting by the flip.
    pub fn flip_extension() -> Self {
        Self::new(FiniteGroupTable::cyclic(2, "s"), vec![false, true]).expect("valid")
    }

    pub fn k(&self) -> &FiniteGroupTable {
        &self.k
    }

    pub fn flips(&self, k: usize) -> bool {
        self.flip[k]
    }

    pub fn has_nontrivial_flip(&self) -> bool {
        self.flip.iter().any(|&f| f)
    }

    pub fn finite(&self, k: usize) -> ThompsonElement {
        ThompsonElement { k, ab: [0, 0] }
    }

    pub fn f(&self, ab: [i64; 2]) -> ThompsonElement {
        ThompsonElement { k: 0, ab }
    }

    fn act(&self, k: usize, ab: [i64; 2]) -> [i64; 2] {
        if self.flip[k] {
            [ab[1], ab[0]]
        } else {
            ab
        }
    }

    pub fn mul(&self, a: &ThompsonElement, b: &ThompsonElement) -> ThompsonElement {
        let w = self.act(a.k, b.ab);
        ThompsonElement {
            k: self.k.mul(a.k, b.k),
            ab: [a.ab[0] + w[0], a.ab[1] + w[1]],
        }
    }

    pub fn inv(&self, a: &ThompsonElement) -> ThompsonElement {
        let ki = self.k.inv(a.k);
        let w = self.act(ki, a.ab);
        ThompsonElement {
            k: ki,
            ab: [-w[0], -w[1]],
        }
    }

    pub fn subgroup_flips(&self, q: &FiniteSubgroup) -> bool {
        q.iter().any(|&k| self.flip[k])
    }

    /// Generators of `C_F(Q)` in abelianized form: the symmetric elements
    /// (image on the diagonal) when Q flips, all of F otherwise.
    pub fn f_centralizer(&self, q: &FiniteSubgroup) -> Vec<ThompsonElement> {
        if self.subgroup_flips(q) {
            vec![self.f([1, 1])]
        } else {
            vec![self.f([1, 0]), self.f([0, 1])]
        }
    }

    pub fn centralizer(&self, q: &FiniteSubgroup) -> Vec<ThompsonElement> {
        self.with_k_part(self.k.centralizer(q), q)
    }

    pub fn normalizer(&self, q: &FiniteSubgroup) -> Vec<ThompsonElement> {
        self.with_k_part(self.k.normalizer(q), q)
    }

    fn with_k_part(&self, ks: Vec<usize>, q: &FiniteSubgroup) -> Vec<ThompsonElement> {
        let ks: FiniteSubgroup = ks.into_iter().collect();
        let mut gens: Vec<ThompsonElement> = self.k.generators_of(&ks).into_iter().map(|k| self.finite(k)).collect();
        gens.extend(self.f_centralizer(q));
        gens
    }

    /// Relation rows over generators `[non-identity K elements..., f1, f2]`.
    pub fn abelian_relations(&self) -> Vec<Vec<i64>> {
        let kk = self.k.order() - 1;
        let width = kk + 2;
        let mut rows = super::k_table_relations(&self.k, width);
        if self.has_nontrivial_flip() {
            let mut r = vec![0; width];
            r[kk] = -1;
            r[kk + 1] = 1;
            rows.push(r);
        }
        rows
    }
}
