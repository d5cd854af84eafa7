//! Split extensions `K ⋉ Z^n` of a finite group acting through integer matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::finite::{FiniteGroupTable, FiniteSubgroup};
use super::GroupError;
use crate::exactlin::matrix::{hermite_rows, solve_integer};
use crate::exactlin::IntMatrix;

pub type Vector = Vec<i64>;
pub type Matrix = Vec<Vec<i64>>;

/// An element `(k, v)` with product `(k,v)(h,w) = (kh, v + M_k w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub k: usize,
    pub v: Vector,
}

impl Affine {
    pub fn norm(&self) -> i64 {
        self.v.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct FinByAbelianGroup {
    k: FiniteGroupTable,
    rank: usize,
    action: Vec<Matrix>,
    basis_names: Vec<String>,
}

/// A finite subgroup stored as its full element set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSubgroup {
    elements: BTreeSet<Affine>,
}

impl AffineSubgroup {
    pub fn elements(&self) -> &BTreeSet<Affine> {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Affine) -> bool {
        self.elements.contains(a)
    }

    pub fn is_subgroup_of(&self, other: &AffineSubgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn k_parts(&self) -> FiniteSubgroup {
        self.elements.iter().map(|a| a.k).collect()
    }

    /// The element with a given K-part, if any (unique: Q ∩ Z^n = 1).
    pub fn with_k(&self, k: usize) -> Option<&Affine> {
        self.elements.iter().find(|a| a.k == k)
    }

    pub fn norm(&self) -> i64 {
        self.elements.iter().map(Affine::norm).max().unwrap_or(0)
    }
}

/// Conjugacy class representatives of finite subgroups found within a
/// norm bound, and whether the bound certifies the list complete.
#[derive(Clone, Debug)]
pub struct FiniteClasses {
    pub classes: Vec<AffineSubgroup>,
    pub complete: bool,
    /// Smallest bound for which the completeness certificate applies.
    pub certified_bound: i64,
}

impl FinByAbelianGroup {
    pub fn new(
        k: FiniteGroupTable,
        rank: usize,
        action: Vec<Matrix>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if action.len() != k.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} matrices for |K| = {}",
                action.len(),
                k.order()
            )));
        }
        for (i, m) in action.iter().enumerate() {
            if m.len() != rank || m.iter().any(|r| r.len() != rank) {
                return Err(GroupError::InvalidAction(format!(
                    "matrix for {} is not {rank}x{rank}",
                    k.name(i)
                )));
            }
            let det = to_big(m).det();
            if det.abs() != BigInt::from(1) {
                return Err(GroupError::InvalidAction(format!(
                    "matrix for {} is not unimodular",
                    k.name(i)
                )));
            }
        }
        for a in 0..k.order() {
            for b in 0..k.order() {
                if action[k.mul(a, b)] != mat_mul(&action[a], &action[b]) {
                    return Err(GroupError::InvalidAction(format!(
                        "M_{{{}{}}} != M_{} M_{}",
                        k.name(a),
                        k.name(b),
                        k.name(a),
                        k.name(b)
                    )));
                }
            }
        }
        let basis_names = basis_names.unwrap_or_else(|| (0..rank).map(|i| format!("b{i}")).collect());
        if basis_names.len() != rank {
            return Err(GroupError::InvalidAction(format!(
                "{} basis names for rank {rank}",
                basis_names.len()
            )));
        }
        Ok(FinByAbelianGroup {
            k,
            rank,
            action,
            basis_names,
        })
    }

    /// `Z^n` with trivial K.
    pub fn free_abelian(rank: usize) -> Self {
        Self::new(FiniteGroupTable::trivial(), rank, vec![identity(rank)], None).expect("valid")
    }

    pub fn k(&self) -> &FiniteGroupTable {
        &self.k
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self, k: usize) -> &Matrix {
        &self.action[k]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn identity(&self) -> Affine {
        Affine {
            k: 0,
            v: vec![0; self.rank],
        }
    }

    pub fn translation(&self, v: Vector) -> Affine {
        Affine { k: 0, v }
    }

    pub fn finite(&self, k: usize) -> Affine {
        Affine {
            k,
            v: vec![0; self.rank],
        }
    }

    pub fn mul(&self, a: &Affine, b: &Affine) -> Affine {
        let mw = mat_vec(&self.action[a.k], &b.v);
        Affine {
            k: self.k.mul(a.k, b.k),
            v: a.v.iter().zip(&mw).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn inv(&self, a: &Affine) -> Affine {
        let ki = self.k.inv(a.k);
        let w = mat_vec(&self.action[ki], &a.v);
        Affine {
            k: ki,
            v: w.into_iter().map(|x| -x).collect(),
        }
    }

    /// `g a g⁻¹`
    pub fn conj(&self, g: &Affine, a: &Affine) -> Affine {
        self.mul(&self.mul(g, a), &self.inv(g))
    }

    pub fn pow(&self, a: &Affine, e: i64) -> Affine {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        (0..e.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(&acc, &base))
    }

    /// Subgroup generated by `gens`, if it has at most `limit` elements.
    pub fn finite_closure(&self, gens: &[Affine], limit: usize) -> Option<AffineSubgroup> {
        let mut set = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul(&x, g);
                if !set.contains(&y) {
                    if set.len() >= limit {
                        return None;
                    }
                    set.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        Some(AffineSubgroup { elements: set })
    }

    pub fn conjugate_subgroup(&self, g: &Affine, q: &AffineSubgroup) -> AffineSubgroup {
        AffineSubgroup {
            elements: q.elements.iter().map(|a| self.conj(g, a)).collect(),
        }
    }

    pub fn subgroup_generators(&self, q: &AffineSubgroup) -> Vec<Affine> {
        self.k
            .generators_of(&q.k_parts())
            .into_iter()
            .map(|k| q.with_k(k).expect("k-part present").clone())
            .collect()
    }

    /// Some `g` with `g Q₁ g⁻¹ = Q₂`, searching all of G exactly.
    pub fn conjugator(&self, q1: &AffineSubgroup, q2: &AffineSubgroup) -> Option<Affine> {
        if q1.order() != q2.order() {
            return None;
        }
        let p1 = q1.k_parts();
        let p2 = q2.k_parts();
        for k in 0..self.k.order() {
            if self.k.conjugate_subgroup(k, &p1) != p2 {
                continue;
            }
            let moved = self.conjugate_subgroup(&self.finite(k), q1);
            // translation (1,w): (p, c) ↦ (p, c + (I - M_p) w)
            let gens = self.k.generators_of(&p2);
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for &p in &gens {
                let a = moved.with_k(p).expect("present");
                let b = q2.with_k(p).expect("present");
                let im = i_minus(&self.action[p]);
                for j in 0..self.rank {
                    rows.push(im[j].clone());
                    rhs.push(BigInt::from(b.v[j] - a.v[j]));
                }
            }
            let a = IntMatrix::from_rows(self.rank, &rows);
            if let Some((w, _)) = solve_integer(&a, &rhs) {
                let w: Vector = w.iter().map(|x| x.to_i64().expect("small")).collect();
                let g = self.mul(&self.translation(w), &self.finite(k));
                debug_assert_eq!(self.conjugate_subgroup(&g, q1), *q2);
                return Some(g);
            }
        }
        None
    }

    /// All finite subgroups whose generator values have max-norm ≤ `bound`,
    /// grouped into G-conjugacy classes.
    pub fn finite_subgroup_classes(&self, bound: i64) -> FiniteClasses {
        let mut classes: Vec<AffineSubgroup> = Vec::new();
        let mut certified = 0;
        for p in self.k.subgroup_classes() {
            let gens = self.k.generators_of(&p);
            certified = certified.max(self.coboundary_box(&gens));
            let mut found = self.cocycle_subgroups(&p, &gens, bound);
            found.sort_by_key(|q| (q.norm(), q.clone()));
            for q in found {
                if !classes.iter().any(|c| self.conjugator(c, &q).is_some()) {
                    classes.push(q);
                }
            }
        }
        classes.sort_by_key(|q| (q.order(), q.norm()));
        FiniteClasses {
            classes,
            complete: bound >= certified,
            certified_bound: certified,
        }
    }

    /// Every finite subgroup projecting onto a conjugate of `p`... restricted
    /// to projection exactly `p`, with generator vector parts bounded.
    pub fn cocycle_subgroups(&self, p: &FiniteSubgroup, gens: &[usize], bound: i64) -> Vec<AffineSubgroup> {
        let n = self.rank;
        let slots = gens.len() * n;
        let mut out = BTreeSet::new();
        let mut values = vec![-bound; slots];
        loop {
            let elems: Vec<Affine> = gens
                .iter()
                .enumerate()
                .map(|(i, &k)| Affine {
                    k,
                    v: values[i * n..(i + 1) * n].to_vec(),
                })
                .collect();
            if let Some(q) = self.finite_closure(&elems, p.len()) {
                if q.order() == p.len() {
                    out.insert(q);
                }
            }
            // odometer
            let mut i = 0;
            loop {
                if i == slots {
                    return out.into_iter().collect();
                }
                if values[i] < bound {
                    values[i] += 1;
                    break;
                }
                values[i] = -bound;
                i += 1;
            }
        }
    }

    /// Max-norm bound on reduced cocycle representatives: every cocycle on
    /// `gens` is cohomologous to one whose values lie in the fundamental
    /// parallelepiped of the coboundary lattice.
    fn coboundary_box(&self, gens: &[usize]) -> i64 {
        let n = self.rank;
        if gens.is_empty() || n == 0 {
            return 0;
        }
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                gens.iter()
                    .flat_map(|&p| i_minus(&self.action[p]).into_iter().map(move |r| r[j]))
                    .collect()
            })
            .collect();
        let basis = hermite_rows(&IntMatrix::from_rows(gens.len() * n, &rows));
        (0..gens.len() * n)
            .map(|c| basis.iter().map(|b| b[c].abs()).sum::<BigInt>())
            .max()
            .and_then(|x| x.to_i64())
            .unwrap_or(i64::MAX)
    }

    /// Solutions of `g h g⁻¹ = target(h)` for `g = (k, v)`, all generators `h` of `q`.
    fn conjugation_solutions(&self, q: &AffineSubgroup, k: usize, target: &AffineSubgroup) -> Option<Affine> {
        let gens = self.subgroup_generators(q);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for h in &gens {
            let kh = self.k.conj(k, h.k);
            let t = target.with_k(kh)?;
            // (k,v)(h,w)(k,v)⁻¹ = (khk⁻¹, v + M_k w - M_{khk⁻¹} v)
            let mw = mat_vec(&self.action[k], &h.v);
            let im = i_minus(&self.action[kh]);
            for j in 0..self.rank {
                rows.push(im[j].clone());
                rhs.push(BigInt::from(t.v[j] - mw[j]));
            }
        }
        let a = IntMatrix::from_rows(self.rank, &rows);
        let (v, _) = solve_integer(&a, &rhs)?;
        Some(Affine {
            k,
            v: v.iter().map(|x| x.to_i64().expect("small")).collect(),
        })
    }

    /// Translations fixed by every K-part of `q`.
    fn fixed_translations(&self, q: &AffineSubgroup) -> Vec<Affine> {
        let ks: Vec<usize> = self.k.generators_of(&q.k_parts());
        let rows: Vec<Vec<i64>> = ks.iter().flat_map(|&k| i_minus(&self.action[k])).collect();
        if rows.is_empty() {
            return (0..self.rank).map(|j| self.translation(unit(self.rank, j))).collect();
        }
        let a = IntMatrix::from_rows(self.rank, &rows);
        let (_, kernel) = solve_integer(&a, &vec![BigInt::zero(); rows.len()]).expect("homogeneous");
        kernel
            .into_iter()
            .map(|v| self.translation(v.iter().map(|x| x.to_i64().expect("small")).collect()))
            .collect()
    }

    pub fn centralizer(&self, q: &AffineSubgroup) -> Vec<Affine> {
        let mut gens = self.fixed_translations(q);
        for k in self.k.centralizer(&q.k_parts()) {
            if k == 0 {
                continue;
            }
            if let Some(g) = self.conjugation_solutions(q, k, q) {
                gens.push(g);
            }
        }
        gens
    }

    pub fn normalizer(&self, q: &AffineSubgroup) -> Vec<Affine> {
        let mut gens = self.fixed_translations(q);
        for k in self.k.normalizer(&q.k_parts()) {
            if k == 0 {
                continue;
            }
            if let Some(g) = self.conjugation_solutions(q, k, q) {
                gens.push(g);
            }
        }
        gens
    }

    pub fn normalizes(&self, g: &Affine, q: &AffineSubgroup) -> bool {
        self.conjugate_subgroup(g, q) == *q
    }

    pub fn centralizes(&self, g: &Affine, q: &AffineSubgroup) -> bool {
        q.elements.iter().all(|a| self.conj(g, a) == *a)
    }

    /// Relation rows of the abelianization, over generators
    /// `[non-identity K elements..., basis...]`.
    pub fn abelian_relations(&self) -> Vec<Vec<i64>> {
        let kk = self.k.order() - 1;
        let width = kk + self.rank;
        let mut rows = super::k_table_relations(&self.k, width);
        for k in 1..self.k.order() {
            for j in 0..self.rank {
                let mut r = vec![0; width];
                for i in 0..self.rank {
                    r[kk + i] += self.action[k][i][j];
                }
                r[kk + j] -= 1;
                if r.iter().any(|&x| x != 0) {
                    rows.push(r);
                }
            }
        }
        rows
    }

    /// Group of elements indexed by `v` for enumeration: all `(k, v)` with `|v|∞ ≤ norm`.
    pub fn ball(&self, norm: i64) -> Vec<Affine> {
        let mut out = Vec::new();
        let mut v = vec![-norm; self.rank];
        loop {
            for k in 0..self.k.order() {
                out.push(Affine { k, v: v.clone() });
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    return out;
                }
                if v[i] < norm {
                    v[i] += 1;
                    break;
                }
                v[i] = -norm;
                i += 1;
            }
        }
    }

    /// Every finite subgroup (not up to conjugacy) whose generators lie in
    /// the norm ball, sorted.
    pub fn finite_subgroups_within(&self, bound: i64) -> Vec<AffineSubgroup> {
        let mut all = BTreeSet::new();
        for p in self.k.all_subgroups() {
            let gens = self.k.generators_of(&p);
            for q in self.cocycle_subgroups(&p, &gens, bound) {
                if q.norm() <= bound {
                    all.insert(q);
                }
            }
        }
        let mut v: Vec<_> = all.into_iter().collect();
        v.sort_by_key(|q| (q.order(), q.norm()));
        v
    }
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit(n, i)).collect()
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[i64]) -> Vector {
    a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn i_minus(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j) - m[i][j]).collect())
        .collect()
}

fn to_big(m: &Matrix) -> IntMatrix {
    IntMatrix::from_rows(m.len(), m)
}

/// Permutation matrix sending `e_i` to `e_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut m = vec![vec![0; n]; n];
    for (i, &j) in perm.iter().enumerate() {
        m[j][i] = 1;
    }
    m
}

/// Convenience: the C₂ ⋉ Z⁴ group with `t` swapping `b0,b1` and `b2,b3`.
pub fn swap_pairs_example() -> FinByAbelianGroup {
    let k = FiniteGroupTable::cyclic(2, "t");
    let m = permutation_matrix(&[1, 0, 3, 2]);
    FinByAbelianGroup::new(k, 4, vec![identity(4), m], None).expect("valid")
}

#[allow(dead_code)]
pub(crate) fn class_map(classes: &[AffineSubgroup]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for c in classes {
        *m.entry(c.order()).or_insert(0) += 1;
    }
    m
}
