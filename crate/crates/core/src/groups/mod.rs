//! The three supported group families behind one interface: element
//! arithmetic, abelianization, finite subgroups up to conjugacy, and
//! centralizers and normalizers of finite subgroups.

pub mod finbyab;
pub mod finite;
pub mod parse;
pub mod raagext;
pub mod thompsonext;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use finbyab::{swap_pairs_example, Affine, AffineSubgroup, FinByAbelianGroup};
pub use finite::{FiniteGroupTable, FiniteSubgroup};
pub use raagext::{RaagElement, RaagExtGroup};
pub use thompsonext::{ThompsonElement, ThompsonExtGroup};

use crate::exactlin::{smith_normal_form, IntMatrix, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("action of {0} is not a simplicial automorphism")]
    NotSimplicial(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("subgroup is not finite")]
    SubgroupNotFinite,
    #[error("unsupported for this family: {0}")]
    UnsupportedFamily(String),
}

/// A group element in one of the three families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Affine(Affine),
    Raag(RaagElement),
    Thompson(ThompsonElement),
}

impl Element {
    /// The image in the finite group K.
    pub fn k_part(&self) -> usize {
        match self {
            Element::Affine(a) => a.k,
            Element::Raag(r) => r.k,
            Element::Thompson(t) => t.k,
        }
    }

    /// The image in K is the whole element (no infinite-part component).
    pub fn lies_in_k(&self) -> bool {
        match self {
            Element::Affine(a) => a.v.iter().all(|&x| x == 0),
            Element::Raag(r) => r.word.is_empty(),
            Element::Thompson(t) => t.ab == [0, 0],
        }
    }

    pub fn as_affine(&self) -> Option<&Affine> {
        match self {
            Element::Affine(a) => Some(a),
            _ => None,
        }
    }
}

/// A subgroup given by generators, with a label describing its role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupDescriptor {
    pub generators: Vec<Element>,
    pub tag: String,
}

impl SubgroupDescriptor {
    pub fn new(generators: Vec<Element>, tag: impl Into<String>) -> Self {
        SubgroupDescriptor {
            generators,
            tag: tag.into(),
        }
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new(), "1")
    }
}

/// `G/G'` from the Smith form of the relation matrix `R`: coordinates
/// `x ↦ x·V`, reduced modulo the diagonal of `D = U·R·V`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    relations: IntMatrix,
    snf: SnfResult,
    diagonal: Vec<BigInt>,
}

impl Abelianization {
    pub fn from_relations(gens: usize, rows: &[Vec<i64>]) -> Self {
        let relations = IntMatrix::from_rows(gens, rows);
        let snf = smith_normal_form(&relations);
        let diagonal = (0..gens)
            .map(|i| {
                if i < snf.d.rows() {
                    snf.d[(i, i)].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        Abelianization {
            relations,
            snf,
            diagonal,
        }
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.diagonal.len()
    }

    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.diagonal.len())
            .filter(|&i| self.diagonal[i].is_zero())
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.free_coordinates().len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// Image of an exponent vector in Smith coordinates (unreduced).
    pub fn image(&self, exponents: &[i64]) -> Vec<BigInt> {
        let n = self.generator_count();
        (0..n)
            .map(|j| (0..n).map(|i| &self.snf.v[(i, j)] * exponents[i]).sum())
            .collect()
    }

    /// Image in the free quotient `ℤ^{free rank}`.
    pub fn free_image(&self, exponents: &[i64]) -> Vec<BigInt> {
        let full = self.image(exponents);
        self.free_coordinates().into_iter().map(|i| full[i].clone()).collect()
    }

    /// Projection of each generator: row `i` of `V`.
    pub fn projection(&self) -> Vec<Vec<BigInt>> {
        self.snf.v.row_vecs()
    }
}

/// Finite subgroup class representatives and whether the list is complete.
#[derive(Clone, Debug)]
pub struct FiniteClassList {
    pub classes: Vec<SubgroupDescriptor>,
    pub complete: bool,
}

/// A concrete group from one of the supported families.
#[derive(Clone, Debug)]
pub enum GroupInstance {
    FinByAb(FinByAbelianGroup),
    Raag(RaagExtGroup),
    Thompson(ThompsonExtGroup),
}

/// The finite subgroup behind a descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteView {
    Affine(AffineSubgroup),
    InK(FiniteSubgroup),
}

impl GroupInstance {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupInstance::FinByAb(_) => "finbyab",
            GroupInstance::Raag(_) => "raagext",
            GroupInstance::Thompson(_) => "thompsonext",
        }
    }

    pub fn k(&self) -> &FiniteGroupTable {
        match self {
            GroupInstance::FinByAb(g) => g.k(),
            GroupInstance::Raag(g) => g.k(),
            GroupInstance::Thompson(g) => g.k(),
        }
    }

    /// Generators: non-identity elements of K, then the infinite-part generators.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.k().names()[1..].to_vec();
        match self {
            GroupInstance::FinByAb(g) => names.extend(g.basis_names().iter().cloned()),
            GroupInstance::Raag(g) => names.extend(g.complex().labels().iter().map(|l| format!("g{l}"))),
            GroupInstance::Thompson(_) => names.extend(["f1".to_string(), "f2".to_string()]),
        }
        names
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names().len()
    }

    /// Number of K generators preceding the infinite-part generators.
    pub fn k_offset(&self) -> usize {
        self.k().order() - 1
    }

    pub fn generator(&self, i: usize) -> Element {
        let kk = self.k_offset();
        if i < kk {
            return self.finite(i + 1);
        }
        let j = i - kk;
        match self {
            GroupInstance::FinByAb(g) => Element::Affine(g.translation(finbyab::unit(g.rank(), j))),
            GroupInstance::Raag(g) => Element::Raag(g.vertex(j)),
            GroupInstance::Thompson(g) => Element::Thompson(g.f(if j == 0 { [1, 0] } else { [0, 1] })),
        }
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.generator_count()).map(|i| self.generator(i)).collect()
    }

    pub fn finite(&self, k: usize) -> Element {
        match self {
            GroupInstance::FinByAb(g) => Element::Affine(g.finite(k)),
            GroupInstance::Raag(g) => Element::Raag(g.finite(k)),
            GroupInstance::Thompson(g) => Element::Thompson(g.finite(k)),
        }
    }

    pub fn identity(&self) -> Element {
        self.finite(0)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (GroupInstance::FinByAb(g), Element::Affine(x), Element::Affine(y)) => Element::Affine(g.mul(x, y)),
            (GroupInstance::Raag(g), Element::Raag(x), Element::Raag(y)) => Element::Raag(g.mul(x, y)),
            (GroupInstance::Thompson(g), Element::Thompson(x), Element::Thompson(y)) => Element::Thompson(g.mul(x, y)),
            _ => panic!("element from a different family"),
        }
    }

    pub fn inv(&self, a: &Element) -> Element {
        match (self, a) {
            (GroupInstance::FinByAb(g), Element::Affine(x)) => Element::Affine(g.inv(x)),
            (GroupInstance::Raag(g), Element::Raag(x)) => Element::Raag(g.inv(x)),
            (GroupInstance::Thompson(g), Element::Thompson(x)) => Element::Thompson(g.inv(x)),
            _ => panic!("element from a different family"),
        }
    }

    pub fn pow(&self, a: &Element, e: i64) -> Element {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        (0..e.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(&acc, &base))
    }

    /// Exponent vector over the generators of a word for the element; well
    /// defined modulo the abelian relations.
    pub fn exponents(&self, a: &Element) -> Vec<i64> {
        let kk = self.k_offset();
        let mut e = vec![0; self.generator_count()];
        let k = a.k_part();
        if k != 0 {
            e[k - 1] = 1;
        }
        match a {
            Element::Affine(x) => e[kk..].copy_from_slice(&x.v),
            Element::Raag(x) => {
                for &(v, p) in &x.word {
                    e[kk + v] += p;
                }
            }
            Element::Thompson(x) => e[kk..].copy_from_slice(&x.ab),
        }
        e
    }

    pub fn relation_rows(&self) -> Vec<Vec<i64>> {
        match self {
            GroupInstance::FinByAb(g) => g.abelian_relations(),
            GroupInstance::Raag(g) => g.abelian_relations(),
            GroupInstance::Thompson(g) => g.abelian_relations(),
        }
    }

    pub fn abelianization(&self) -> Abelianization {
        Abelianization::from_relations(self.generator_count(), &self.relation_rows())
    }

    pub fn whole(&self) -> SubgroupDescriptor {
        SubgroupDescriptor::new(self.generators(), "G")
    }

    /// Resolves a descriptor of a finite subgroup. For the RAAG and Thompson
    /// families the subgroup must be given inside K.
    pub fn finite_view(&self, q: &SubgroupDescriptor) -> Result<FiniteView, GroupError> {
        match self {
            GroupInstance::FinByAb(g) => {
                let gens: Vec<Affine> = q
                    .generators
                    .iter()
                    .map(|e| {
                        e.as_affine()
                            .cloned()
                            .ok_or(GroupError::UnsupportedFamily("mixed families".into()))
                    })
                    .collect::<Result<_, _>>()?;
                g.finite_closure(&gens, g.k().order())
                    .map(FiniteView::Affine)
                    .ok_or(GroupError::SubgroupNotFinite)
            }
            _ => {
                if let Some(bad) = q.generators.iter().find(|e| !e.lies_in_k()) {
                    return Err(if bad.k_part() == 0 {
                        GroupError::SubgroupNotFinite
                    } else {
                        GroupError::UnsupportedFamily("finite subgroups must be given inside K".into())
                    });
                }
                Ok(FiniteView::InK(
                    self.k().closure(q.generators.iter().map(Element::k_part)),
                ))
            }
        }
    }

    fn descriptor_of(&self, q: &FiniteView, tag: &str) -> SubgroupDescriptor {
        let gens = match (self, q) {
            (GroupInstance::FinByAb(g), FiniteView::Affine(a)) => {
                g.subgroup_generators(a).into_iter().map(Element::Affine).collect()
            }
            (_, FiniteView::InK(s)) => self.k().generators_of(s).into_iter().map(|k| self.finite(k)).collect(),
            _ => unreachable!("view matches family"),
        };
        SubgroupDescriptor::new(gens, tag)
    }

    /// Representatives of conjugacy classes of finite subgroups. For
    /// `K ⋉ ℤⁿ` the search is bounded by `bound` on vector parts and flagged
    /// complete when the bound covers the cocycle fundamental box; for the
    /// other families finite subgroups are subconjugate to K.
    pub fn finite_subgroup_classes(&self, bound: i64) -> FiniteClassList {
        match self {
            GroupInstance::FinByAb(g) => {
                let fc = g.finite_subgroup_classes(bound);
                let classes = fc
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(i, q)| self.descriptor_of(&FiniteView::Affine(q.clone()), &format!("K{i}")))
                    .collect();
                FiniteClassList {
                    classes,
                    complete: fc.complete,
                }
            }
            _ => {
                let classes = self
                    .k()
                    .subgroup_classes()
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| self.descriptor_of(&FiniteView::InK(s), &format!("K{i}")))
                    .collect();
                FiniteClassList {
                    classes,
                    complete: true,
                }
            }
        }
    }

    pub fn centralizer(&self, q: &SubgroupDescriptor) -> Result<SubgroupDescriptor, GroupError> {
        let view = self.finite_view(q)?;
        let gens = match (self, &view) {
            (GroupInstance::FinByAb(g), FiniteView::Affine(a)) => {
                g.centralizer(a).into_iter().map(Element::Affine).collect()
            }
            (GroupInstance::Raag(g), FiniteView::InK(s)) => g.centralizer(s).into_iter().map(Element::Raag).collect(),
            (GroupInstance::Thompson(g), FiniteView::InK(s)) => {
                g.centralizer(s).into_iter().map(Element::Thompson).collect()
            }
            _ => unreachable!("view matches family"),
        };
        Ok(SubgroupDescriptor::new(gens, format!("C_G({})", q.tag)))
    }

    pub fn normalizer(&self, q: &SubgroupDescriptor) -> Result<SubgroupDescriptor, GroupError> {
        let view = self.finite_view(q)?;
        let gens = match (self, &view) {
            (GroupInstance::FinByAb(g), FiniteView::Affine(a)) => {
                g.normalizer(a).into_iter().map(Element::Affine).collect()
            }
            (GroupInstance::Raag(g), FiniteView::InK(s)) => g.normalizer(s).into_iter().map(Element::Raag).collect(),
            (GroupInstance::Thompson(g), FiniteView::InK(s)) => {
                g.normalizer(s).into_iter().map(Element::Thompson).collect()
            }
            _ => unreachable!("view matches family"),
        };
        Ok(SubgroupDescriptor::new(gens, format!("N_G({})", q.tag)))
    }

    /// Parses a word such as `t*b0^-1*b2^3`; `e` or `1` is the identity.
    pub fn parse_element(&self, word: &str) -> Result<Element, GroupError> {
        let names = self.generator_names();
        let mut acc = self.identity();
        for tok in word.split('*').map(str::trim) {
            if tok.is_empty() {
                return Err(GroupError::UnknownGenerator(word.to_string()));
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| GroupError::UnknownGenerator(tok.into()))?,
                ),
                None => (tok, 1),
            };
            let g = if name == "1" || name == self.k().name(0) {
                self.identity()
            } else {
                let i = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| GroupError::UnknownGenerator(name.into()))?;
                self.generator(i)
            };
            acc = self.mul(&acc, &self.pow(&g, exp));
        }
        Ok(acc)
    }

    /// Parses a comma-separated generator list; an empty list is the trivial subgroup.
    pub fn parse_subgroup(&self, spec: &str, tag: &str) -> Result<SubgroupDescriptor, GroupError> {
        let gens = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|w| self.parse_element(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubgroupDescriptor::new(gens, tag))
    }

    /// A word for the element in the generators.
    pub fn render(&self, a: &Element) -> String {
        let names = self.generator_names();
        let kk = self.k_offset();
        let mut parts: Vec<String> = Vec::new();
        let mut push = |name: &str, e: i64| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        };
        match a {
            Element::Affine(x) => x.v.iter().enumerate().for_each(|(j, &e)| push(&names[kk + j], e)),
            Element::Raag(x) => x.word.iter().for_each(|&(v, e)| push(&names[kk + v], e)),
            Element::Thompson(x) => x.ab.iter().enumerate().for_each(|(j, &e)| push(&names[kk + j], e)),
        }
        if a.k_part() != 0 {
            parts.push(self.k().name(a.k_part()).to_string());
        }
        if parts.is_empty() {
            self.k().name(0).to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn render_subgroup(&self, s: &SubgroupDescriptor) -> String {
        let g: Vec<String> = s.generators.iter().map(|e| self.render(e)).collect();
        format!("<{}>", g.join(", "))
    }
}

impl fmt::Display for GroupInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on generators {}", self.kind(), self.generator_names().join(" "))
    }
}

/// Rows `e_a + e_b − e_{ab}` of the K multiplication table over the
/// non-identity elements of K (placed first), padded to `width`.
pub(crate) fn k_table_relations(k: &FiniteGroupTable, width: usize) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    for a in 1..k.order() {
        for b in 1..k.order() {
            let mut r = vec![0; width];
            r[a - 1] += 1;
            r[b - 1] += 1;
            let ab = k.mul(a, b);
            if ab != 0 {
                r[ab - 1] -= 1;
            }
            rows.push(r);
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raagsigma::FlagComplex;

    fn swap_pairs() -> GroupInstance {
        GroupInstance::FinByAb(finbyab::swap_pairs_example())
    }

    #[test]
    fn abelianization_of_swap_example() {
        let ab = swap_pairs().abelianization();
        assert_eq!(ab.free_rank(), 2);
        assert_eq!(ab.torsion(), vec![BigInt::from(2)]);
    }

    #[test]
    fn swap_example_difference_lies_in_commutator() {
        // oracle: b0·b1⁻¹ = [t, b0]⁻¹ explicitly, so it dies in G/G'
        let g = swap_pairs();
        let t = g.parse_element("t").unwrap();
        let b0 = g.parse_element("b0").unwrap();
        let comm = g.mul(&g.mul(&t, &b0), &g.mul(&g.inv(&t), &g.inv(&b0)));
        assert_eq!(g.inv(&comm), g.parse_element("b0*b1^-1").unwrap());
        let ab = g.abelianization();
        let img = ab.image(&g.exponents(&g.parse_element("b0*b1^-1").unwrap()));
        let diag: Vec<BigInt> = (0..5).map(|i| ab.diagonal[i].clone()).collect();
        for (x, d) in img.iter().zip(&diag) {
            if d.is_zero() {
                assert!(x.is_zero());
            } else {
                assert!((x % d).is_zero());
            }
        }
    }

    #[test]
    fn raag_and_thompson_abelianizations() {
        let l = FlagComplex::cycle(5);
        let g = GroupInstance::Raag(RaagExtGroup::raag(l));
        let ab = g.abelianization();
        assert_eq!((ab.free_rank(), ab.torsion().len()), (5, 0));
        let f = GroupInstance::Thompson(ThompsonExtGroup::thompson());
        assert_eq!(f.abelianization().free_rank(), 2);
        let flip = GroupInstance::Thompson(ThompsonExtGroup::flip_extension());
        let ab = flip.abelianization();
        assert_eq!((ab.free_rank(), ab.torsion()), (1, vec![BigInt::from(2)]));
    }

    #[test]
    fn abelianization_is_independent_of_generator_order() {
        // permuting the basis by conjugating the action gives the same invariants
        let k = FiniteGroupTable::cyclic(2, "t");
        let m = finbyab::permutation_matrix(&[2, 3, 0, 1]);
        let g = GroupInstance::FinByAb(FinByAbelianGroup::new(k, 4, vec![finbyab::identity(4), m], None).unwrap());
        let a = g.abelianization();
        let b = swap_pairs().abelianization();
        assert_eq!((a.free_rank(), a.torsion()), (b.free_rank(), b.torsion()));
    }

    #[test]
    fn centralizer_matches_swap_pairs() {
        let g = swap_pairs();
        let k = g.parse_subgroup("t", "K").unwrap();
        let c = g.centralizer(&k).unwrap();
        assert_eq!(g.render_subgroup(&c), "<b0*b1, b2*b3, t>");
        let n = g.normalizer(&k).unwrap();
        assert_eq!(n.generators, c.generators);
        assert_eq!(c.tag, "C_G(K)");
    }

    #[test]
    fn parse_and_render_roundtrip() {
        let g = swap_pairs();
        let x = g.parse_element("b0^2*b3^-1*t").unwrap();
        assert_eq!(g.render(&x), "b0^2*b3^-1*t");
        assert_eq!(g.render(&g.parse_element("e").unwrap()), "e");
        assert!(matches!(g.parse_element("q"), Err(GroupError::UnknownGenerator(_))));
    }

    #[test]
    fn infinite_subgroup_is_rejected() {
        let g = swap_pairs();
        let s = g.parse_subgroup("b0", "S").unwrap();
        assert_eq!(g.centralizer(&s), Err(GroupError::SubgroupNotFinite));
    }

    #[test]
    fn trivial_subgroup_centralizer_is_everything() {
        let g = swap_pairs();
        let c = g.centralizer(&SubgroupDescriptor::trivial()).unwrap();
        let ab = g.abelianization();
        // same image in G/G' free part as G
        let mine: Vec<Vec<BigInt>> = c.generators.iter().map(|e| ab.free_image(&g.exponents(e))).collect();
        let all: Vec<Vec<BigInt>> = g.generators().iter().map(|e| ab.free_image(&g.exponents(e))).collect();
        assert_eq!(
            crate::exactlin::int_lattice_index(&all, &mine, 2).unwrap(),
            crate::exactlin::Index::finite(1)
        );
    }
}
