//! Bredon Σ membership certificates, the openness test and the subsphere test.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chars::{character_from_values, image_lattice, CharError, Character, SpherePoint};
use crate::exactlin::{
    equality, feasible_point, int_lattice_index, lattice_index, rational_kernel, smith_normal_form, FormalBasis,
    FormalReal, Index, Inequality, IntMatrix, LinError, ValueLattice,
};
use crate::groups::{Element, FiniteClassList, FiniteView, GroupError, GroupInstance, SubgroupDescriptor};
use crate::raagsigma::raag_sigma_membership;
use crate::thompson::sigma_f_by_signs;
use crate::verdict::{Degree, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BredonError {
    #[error("the zero character has no point on the sphere")]
    ZeroCharacter,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// The Σ^m oracle applied to a normalizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    /// Virtually abelian: every nonzero character lies in every Σ^m.
    VirtuallyAbelian,
    /// The homological link criterion on the fixed subcomplex.
    Raag,
    /// Closed form for Thompson's group F.
    ThompsonF,
    /// Normalizer of a flipping subgroup: only the positive side of `χ₁ + χ₂`.
    ThompsonFlip,
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Oracle::VirtuallyAbelian => "virtually-abelian",
            Oracle::Raag => "raag",
            Oracle::ThompsonF => "thompson-F",
            Oracle::ThompsonFlip => "thompson-flip",
        })
    }
}

/// Outcome of the second condition for one class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cond2 {
    /// `χ(N_G(K)) = 0`.
    ImageZero,
    Oracle(Oracle, Verdict),
}

impl Cond2 {
    pub fn verdict(&self) -> Verdict {
        match self {
            Cond2::ImageZero => Verdict::Out,
            Cond2::Oracle(_, v) => *v,
        }
    }
}

impl fmt::Display for Cond2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond2::ImageZero => f.write_str("chi(N_G(K)) = 0"),
            Cond2::Oracle(o, Verdict::In) => write!(f, "pass (oracle: {o})"),
            Cond2::Oracle(o, Verdict::Out) => write!(f, "fail (oracle: {o})"),
            Cond2::Oracle(o, Verdict::Inconclusive) => write!(f, "inconclusive (oracle: {o})"),
        }
    }
}

/// Evidence for one conjugacy class of finite subgroups.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub k: SubgroupDescriptor,
    pub ngk: SubgroupDescriptor,
    pub chi_ngk: ValueLattice,
    pub index_in_chi_g: Index,
    pub cond1: Verdict,
    pub cond2: Cond2,
}

/// Finite-index subgroup witnessing the first condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gtilde {
    /// `χ(N_G(K)) = χ(G)` for every K.
    Whole,
    /// The intersection of the `N_G(K_j)·Ker χ`, all of finite index.
    Intersection,
    /// Some `N_G(K)·Ker χ` has infinite index.
    None,
}

impl fmt::Display for Gtilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gtilde::Whole => "G",
            Gtilde::Intersection => "intersection of N_G(K_j)*Ker(chi)",
            Gtilde::None => "none (infinite index)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BredonCertificate {
    pub chi: SpherePoint,
    pub m: Degree,
    pub chi_g: ValueLattice,
    pub classes: Vec<ClassRecord>,
    pub classes_complete: bool,
    pub gtilde: Gtilde,
    pub verdict: Verdict,
}

impl BredonCertificate {
    /// Flat `key: value` report.
    pub fn render(&self, g: &GroupInstance, basis: &FormalBasis) -> String {
        let mut out = Vec::new();
        out.push(format!("chi: {}", self.chi.rep().render(basis)));
        out.push(format!("m: {}", self.m));
        out.push(format!("chi(G): {}", self.chi_g.render(basis)));
        let status = if self.classes_complete {
            "complete"
        } else {
            "incomplete"
        };
        out.push(format!("classes: {} ({status})", self.classes.len()));
        for (i, c) in self.classes.iter().enumerate() {
            out.push(format!("class[{i}].K: {}", g.render_subgroup(&c.k)));
            out.push(format!("class[{i}].N_G(K): {}", g.render_subgroup(&c.ngk)));
            out.push(format!("class[{i}].chi(N_G(K)): {}", c.chi_ngk.render(basis)));
            out.push(format!("class[{i}].index: {}", c.index_in_chi_g));
            let cond1 = match c.cond1 {
                Verdict::In => "pass".to_string(),
                _ => format!("fail (index {})", c.index_in_chi_g),
            };
            out.push(format!("class[{i}].cond1: {cond1}"));
            out.push(format!("class[{i}].cond2: {}", c.cond2));
        }
        out.push(format!("gtilde: {}", self.gtilde));
        out.push(format!("verdict: {}", self.verdict));
        out.join("\n") + "\n"
    }
}

/// `[χ|_N] ∈ Σ^m(N)` for `N = N_G(K)`, assuming `χ(N) ≠ 0`.
fn normalizer_sigma(
    g: &GroupInstance,
    k: &SubgroupDescriptor,
    chi: &Character,
    m: Degree,
) -> Result<(Oracle, Verdict), BredonError> {
    match (g, g.finite_view(k)?) {
        (GroupInstance::FinByAb(_), _) => Ok((Oracle::VirtuallyAbelian, Verdict::In)),
        (GroupInstance::Raag(r), FiniteView::InK(q)) => {
            let fixed = r.fixed(&q);
            let values: Vec<FormalReal> = fixed
                .parent_vertices()
                .iter()
                .map(|&v| chi.eval(g, &Element::Raag(r.vertex(v))))
                .collect();
            Ok((Oracle::Raag, raag_sigma_membership(fixed.complex(), &values, m)))
        }
        (GroupInstance::Thompson(t), FiniteView::InK(q)) => {
            if t.subgroup_flips(&q) {
                let s = chi.eval(g, &Element::Thompson(t.f([1, 1])));
                let v = match s.signum() {
                    Ordering::Greater => Verdict::In,
                    Ordering::Less => Verdict::Out,
                    Ordering::Equal => return Err(BredonError::ZeroCharacter),
                };
                Ok((Oracle::ThompsonFlip, v))
            } else {
                let a = chi.eval(g, &Element::Thompson(t.f([1, 0]))).signum();
                let b = chi.eval(g, &Element::Thompson(t.f([0, 1]))).signum();
                let inside = sigma_f_by_signs(a, b, m).map_err(|_| BredonError::ZeroCharacter)?;
                Ok((Oracle::ThompsonF, Verdict::from_bool(inside)))
            }
        }
        (_, view) => Err(BredonError::UnsupportedFamily(format!("{} with {view:?}", g.kind()))),
    }
}

fn class_record(
    g: &GroupInstance,
    k: &SubgroupDescriptor,
    chi: &Character,
    chi_g: &ValueLattice,
    m: Degree,
) -> Result<ClassRecord, BredonError> {
    let ngk = g.normalizer(k)?;
    let chi_ngk = image_lattice(g, chi, &ngk)?;
    let index = lattice_index(chi_g, &chi_ngk)?;
    let cond2 = if chi_ngk.is_zero() {
        Cond2::ImageZero
    } else {
        let (o, v) = normalizer_sigma(g, k, chi, m)?;
        Cond2::Oracle(o, v)
    };
    Ok(ClassRecord {
        k: k.clone(),
        ngk,
        chi_ngk,
        cond1: Verdict::from_bool(index.is_finite()),
        index_in_chi_g: index,
        cond2,
    })
}

/// Decides `[χ] ∈ Σ̲^m(G)` over the finite subgroup classes found within `bound`.
pub fn bredon_membership(
    g: &GroupInstance,
    chi: &Character,
    m: Degree,
    bound: i64,
) -> Result<BredonCertificate, BredonError> {
    bredon_membership_with_classes(g, chi, m, &g.finite_subgroup_classes(bound))
}

/// As [`bredon_membership`] with caller-supplied class representatives.
pub fn bredon_membership_with_classes(
    g: &GroupInstance,
    chi: &Character,
    m: Degree,
    classes: &FiniteClassList,
) -> Result<BredonCertificate, BredonError> {
    if chi.is_zero() {
        return Err(BredonError::ZeroCharacter);
    }
    let point = SpherePoint::new(chi)?;
    let chi_g = image_lattice(g, chi, &g.whole())?;
    let records = classes
        .classes
        .iter()
        .map(|k| class_record(g, k, chi, &chi_g, m))
        .collect::<Result<Vec<_>, _>>()?;
    let gtilde = if records.iter().all(|r| r.chi_ngk.same_as(&chi_g)) {
        Gtilde::Whole
    } else if records.iter().all(|r| r.index_in_chi_g.is_finite()) {
        Gtilde::Intersection
    } else {
        Gtilde::None
    };
    let mut verdict = records
        .iter()
        .fold(Verdict::In, |acc, r| acc.and(r.cond1).and(r.cond2.verdict()));
    if verdict == Verdict::In && !classes.complete {
        verdict = Verdict::Inconclusive;
    }
    Ok(BredonCertificate {
        chi: point,
        m,
        chi_g,
        classes: records,
        classes_complete: classes.complete,
        gtilde,
        verdict,
    })
}

/// Classical `[χ] ∈ Σ^m(G)` through the family's finite-index subgroup.
pub fn classical_sigma(g: &GroupInstance, chi: &Character, m: Degree) -> Result<(Oracle, Verdict), BredonError> {
    if chi.is_zero() {
        return Err(BredonError::ZeroCharacter);
    }
    normalizer_sigma(g, &SubgroupDescriptor::trivial(), chi, m)
}

#[derive(Clone, Debug)]
pub struct OpennessReport {
    pub verdict: Verdict,
    pub free_rank: usize,
    /// `[G^ab/torsion : image of N_G(K)]` per class.
    pub indices: Vec<(SubgroupDescriptor, Index)>,
    pub complete: bool,
}

impl OpennessReport {
    pub fn render(&self, g: &GroupInstance) -> String {
        let mut out = vec![format!("free_rank: {}", self.free_rank)];
        let status = if self.complete { "complete" } else { "incomplete" };
        out.push(format!("classes: {} ({status})", self.indices.len()));
        for (i, (k, idx)) in self.indices.iter().enumerate() {
            out.push(format!("class[{i}].K: {}", g.render_subgroup(k)));
            out.push(format!("class[{i}].index: {idx}"));
        }
        out.push(format!("verdict: {}", self.verdict));
        out.join("\n") + "\n"
    }
}

/// `Σ̲^m(G)` is open in `S(G)` iff every `N_G(K)·G′` has finite index.
pub fn openness_check(g: &GroupInstance, bound: i64) -> Result<OpennessReport, BredonError> {
    let classes = g.finite_subgroup_classes(bound);
    let ab = g.abelianization();
    let r = ab.free_rank();
    let full: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut indices = Vec::new();
    for k in &classes.classes {
        let n = g.normalizer(k)?;
        let images: Vec<Vec<BigInt>> = n.generators.iter().map(|x| ab.free_image(&g.exponents(x))).collect();
        indices.push((k.clone(), int_lattice_index(&full, &images, r)?));
    }
    let mut verdict = Verdict::from_bool(indices.iter().all(|(_, i)| i.is_finite()));
    if verdict == Verdict::In && !classes.complete {
        verdict = Verdict::Inconclusive;
    }
    Ok(OpennessReport {
        verdict,
        free_rank: r,
        indices,
        complete: classes.complete,
    })
}

#[derive(Clone, Debug)]
pub struct SubsphereReport {
    pub verdict: Verdict,
    /// Dimension of the character space vanishing on H.
    pub dimension: usize,
    pub patterns_checked: usize,
    /// First failing class and the character witnessing the failure.
    pub failure: Option<(SubgroupDescriptor, Option<Character>, String)>,
}

impl SubsphereReport {
    pub fn render(&self, g: &GroupInstance) -> String {
        let mut out = vec![
            format!("dimension: {}", self.dimension),
            format!("patterns: {}", self.patterns_checked),
        ];
        if let Some((k, witness, why)) = &self.failure {
            out.push(format!("failure.K: {}", g.render_subgroup(k)));
            if let Some(w) = witness {
                out.push(format!("failure.chi: {}", w.render(&FormalBasis::new::<&str>(&[]))));
            }
            out.push(format!("failure.reason: {why}"));
        }
        out.push(format!("verdict: {}", self.verdict));
        out.join("\n") + "\n"
    }
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn dot(a: &[i64], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| BigInt::from(*x) * y).sum()
}

/// All nonzero sign patterns of the linear forms `c_j · t`, with a witness each.
fn sign_pattern_witnesses(forms: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigRational>> {
    let p = forms.len();
    let mut witnesses = Vec::new();
    let total = 3usize.pow(p as u32);
    for code in 0..total {
        let mut c = code;
        let signs: Vec<i8> = (0..p)
            .map(|_| {
                let s = (c % 3) as i8 - 1;
                c /= 3;
                s
            })
            .collect();
        if signs.iter().all(|&s| s == 0) {
            let mat = IntMatrix::from_rows(dim, forms);
            if let Some(k) = rational_kernel(&mat).into_iter().next() {
                witnesses.push(k.iter().map(rat).collect());
            }
            continue;
        }
        let mut system = Vec::new();
        for (form, &s) in forms.iter().zip(&signs) {
            let coeffs: Vec<BigRational> = form.iter().map(rat).collect();
            match s {
                0 => system.extend(equality(coeffs, BigRational::zero())),
                1 => system.push(Inequality::new(
                    coeffs.iter().map(|x| -x).collect(),
                    -BigRational::one(),
                )),
                _ => system.push(Inequality::new(coeffs, -BigRational::one())),
            }
        }
        if let Some(t) = feasible_point(dim, &system) {
            witnesses.push(t);
        }
    }
    witnesses
}

/// Decides `S(G,H) ⊆ Σ̲^m(G)` with H read as the subgroup generated by its
/// generators together with `G′`.
pub fn subsphere_check(
    g: &GroupInstance,
    h: &SubgroupDescriptor,
    m: Degree,
    bound: i64,
) -> Result<SubsphereReport, BredonError> {
    let n = g.generator_count();
    let mut rows = g.relation_rows();
    rows.extend(h.generators.iter().map(|x| g.exponents(x)));
    let rel = IntMatrix::from_rows(n, &rows);
    let snf = smith_normal_form(&rel);
    let factors = snf.invariant_factors();
    if factors.iter().any(|d| !d.is_one()) {
        return Err(BredonError::HypothesisViolated("G/H has torsion".into()));
    }
    if factors.len() == n {
        return Err(BredonError::HypothesisViolated("G/H is trivial".into()));
    }
    let w = rational_kernel(&rel);
    let dim = w.len();
    let classes = g.finite_subgroup_classes(bound);
    let mut verdict = Verdict::In;
    let mut patterns = 0;
    let mut failure = None;
    for k in &classes.classes {
        let ngk = g.normalizer(k)?;
        let nexps: Vec<Vec<i64>> = ngk.generators.iter().map(|x| g.exponents(x)).collect();
        let forms: Vec<Vec<BigInt>> = nexps
            .iter()
            .map(|e| w.iter().map(|wi| dot(e, wi)).collect::<Vec<BigInt>>())
            .filter(|f| f.iter().any(|x| !x.is_zero()))
            .collect();
        let rank = IntMatrix::from_rows(dim, &forms).rank();
        if rank < dim {
            verdict = Verdict::Out;
            failure = Some((k.clone(), None, "image of N_G(K) in G/H has infinite index".to_string()));
            break;
        }
        for t in sign_pattern_witnesses(&forms, dim) {
            patterns += 1;
            let values: Vec<FormalReal> = (0..n)
                .map(|i| {
                    let x: BigRational = t.iter().zip(&w).map(|(ti, wi)| ti * rat(&wi[i])).sum();
                    FormalReal::rational(x)
                })
                .collect();
            let chi = character_from_values(g, values)?;
            let chi_ngk = image_lattice(g, &chi, &ngk)?;
            let cond2 = if chi_ngk.is_zero() {
                Cond2::ImageZero
            } else {
                let (o, v) = normalizer_sigma(g, k, &chi, m)?;
                Cond2::Oracle(o, v)
            };
            match cond2.verdict() {
                Verdict::In => {}
                Verdict::Inconclusive => verdict = verdict.and(Verdict::Inconclusive),
                Verdict::Out => {
                    verdict = Verdict::Out;
                    failure = Some((k.clone(), Some(chi), cond2.to_string()));
                    break;
                }
            }
        }
        if verdict == Verdict::Out {
            break;
        }
    }
    if verdict == Verdict::In && !classes.complete {
        verdict = Verdict::Inconclusive;
    }
    Ok(SubsphereReport {
        verdict,
        dimension: dim,
        patterns_checked: patterns,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::make_character;
    use crate::groups::{swap_pairs_example, FiniteGroupTable, RaagExtGroup, ThompsonExtGroup};
    use crate::raagsigma::FlagComplex;
    use std::collections::BTreeMap;

    const INF: Degree = Degree::Infinite;

    fn chi(g: &GroupInstance, pairs: &[(&str, FormalReal)]) -> Character {
        let map: BTreeMap<String, FormalReal> = g
            .generator_names()
            .into_iter()
            .map(|n| {
                let v = pairs
                    .iter()
                    .find(|(k, _)| *k == n)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(FormalReal::zero);
                (n, v)
            })
            .collect();
        make_character(g, &map).unwrap()
    }

    fn int(n: i64) -> FormalReal {
        FormalReal::integer(n)
    }

    fn raag_star() -> GroupInstance {
        let l = FlagComplex::from_labels(&["1", "2", "3", "4"], &[("1", "4"), ("2", "4"), ("3", "4")]).unwrap();
        let g = RaagExtGroup::new(
            l,
            FiniteGroupTable::cyclic(2, "t"),
            vec![vec![0, 1, 2, 3], vec![1, 0, 2, 3]],
        )
        .unwrap();
        GroupInstance::Raag(g)
    }

    fn hexflip() -> GroupInstance {
        let rot: Vec<usize> = (0..6).map(|i| (i + 3) % 6).collect();
        let g = RaagExtGroup::new(
            FlagComplex::cycle(6),
            FiniteGroupTable::cyclic(2, "r"),
            vec![(0..6).collect(), rot],
        )
        .unwrap();
        GroupInstance::Raag(g)
    }

    #[test]
    fn raag_star_fails_first_condition() {
        let g = raag_star();
        let names = g.generator_names();
        let c = chi(
            &g,
            &[
                (&names[1], int(1)),
                (&names[2], int(1)),
                (&names[3], FormalReal::symbol(1)),
                (&names[4], FormalReal::symbol(2)),
            ],
        );
        let cert = bredon_membership(&g, &c, Degree::Finite(1), 4).unwrap();
        assert_eq!(cert.chi_g.rank(), 3);
        assert_eq!(cert.verdict, Verdict::Out);
        let rec = &cert.classes[1];
        assert_eq!(rec.chi_ngk.rank(), 2);
        assert_eq!(rec.index_in_chi_g, Index::Infinite);
        assert_eq!(rec.cond1, Verdict::Out);
        assert_eq!(cert.gtilde, Gtilde::None);
    }

    #[test]
    fn swap_pairs_dense_character_is_inside() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        let c = chi(
            &g,
            &[
                ("b0", int(1)),
                ("b1", int(1)),
                ("b2", FormalReal::symbol(1)),
                ("b3", FormalReal::symbol(1)),
            ],
        );
        let cert = bredon_membership(&g, &c, INF, 2).unwrap();
        assert!(cert.classes_complete);
        assert_eq!(cert.verdict, Verdict::In);
        assert_eq!(cert.gtilde, Gtilde::Intersection);
        assert!(cert.classes.iter().all(|r| r.index_in_chi_g.is_finite()));
    }

    #[test]
    fn hexagon_with_free_rotation_fails_second_condition() {
        let g = hexflip();
        let names = g.generator_names();
        let vals: Vec<(&str, FormalReal)> = names[1..].iter().map(|n| (n.as_str(), int(1))).collect();
        let c = chi(&g, &vals);
        for m in [Degree::Finite(1), Degree::Finite(2), INF] {
            let cert = bredon_membership(&g, &c, m, 1).unwrap();
            assert_eq!(cert.verdict, Verdict::Out);
            assert_eq!(cert.classes[1].cond2, Cond2::ImageZero);
            let text = cert.render(&g, &FormalBasis::new::<&str>(&[]));
            assert!(text.contains("class[1].cond2: chi(N_G(K)) = 0\n"), "{text}");
        }
    }

    #[test]
    fn thompson_flip_keeps_only_nu() {
        let g = GroupInstance::Thompson(ThompsonExtGroup::flip_extension());
        let nu = chi(&g, &[("f1", int(1)), ("f2", int(1))]);
        for m in [Degree::Finite(1), INF] {
            assert_eq!(bredon_membership(&g, &nu, m, 1).unwrap().verdict, Verdict::In);
            assert_eq!(bredon_membership(&g, &nu.neg(), m, 1).unwrap().verdict, Verdict::Out);
        }
        assert_eq!(
            classical_sigma(&g, &nu.neg(), Degree::Finite(1)).unwrap().1,
            Verdict::In
        );
        assert_eq!(
            classical_sigma(&g, &nu.neg(), Degree::Finite(2)).unwrap().1,
            Verdict::Out
        );
    }

    #[test]
    fn zero_character_is_rejected() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        let z = chi(&g, &[]);
        assert!(matches!(
            bredon_membership(&g, &z, INF, 2),
            Err(BredonError::ZeroCharacter)
        ));
    }

    #[test]
    fn openness_indices() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        let rep = openness_check(&g, 2).unwrap();
        assert_eq!(rep.verdict, Verdict::In);
        let idx: Vec<Index> = rep.indices.iter().map(|(_, i)| i.clone()).collect();
        assert_eq!(idx, vec![Index::finite(1), Index::finite(4)]);
        let rep = openness_check(&raag_star(), 1).unwrap();
        assert_eq!(rep.verdict, Verdict::Out);
        assert_eq!(rep.indices[1].1, Index::Infinite);
        let trivial_flip = GroupInstance::Thompson(
            ThompsonExtGroup::new(FiniteGroupTable::cyclic(2, "s"), vec![false, false]).unwrap(),
        );
        assert_eq!(openness_check(&trivial_flip, 1).unwrap().verdict, Verdict::In);
    }

    #[test]
    fn subsphere_examples() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        let h = g.parse_subgroup("t, b0*b1^-1, b2*b3^-1", "H").unwrap();
        let rep = subsphere_check(&g, &h, INF, 2).unwrap();
        assert_eq!(rep.verdict, Verdict::In);
        assert_eq!(rep.dimension, 2);

        let t = GroupInstance::Thompson(ThompsonExtGroup::flip_extension());
        let h = t.parse_subgroup("s, f1*f2^-1", "H").unwrap();
        let rep = subsphere_check(&t, &h, INF, 1).unwrap();
        assert_eq!(rep.verdict, Verdict::Out);
        assert!(rep.failure.is_some());
    }

    #[test]
    fn subsphere_rejects_torsion_quotient() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        let h = g.parse_subgroup("t, b0^2, b2", "H").unwrap();
        assert!(matches!(
            subsphere_check(&g, &h, INF, 2),
            Err(BredonError::HypothesisViolated(_))
        ));
        let all = g.parse_subgroup("t, b0, b2", "H").unwrap();
        assert!(matches!(
            subsphere_check(&g, &all, INF, 2),
            Err(BredonError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn bredon_inside_classical_and_antitone() {
        let g = GroupInstance::FinByAb(swap_pairs_example());
        for (a, b) in [(1, 0), (0, 1), (-1, 2), (3, -1), (-1, -1)] {
            let c = chi(&g, &[("b0", int(a)), ("b1", int(a)), ("b2", int(b)), ("b3", int(b))]);
            let cert = bredon_membership(&g, &c, INF, 2).unwrap();
            if cert.verdict == Verdict::In {
                assert_eq!(classical_sigma(&g, &c, INF).unwrap().1, Verdict::In);
            }
        }
        let r = raag_star();
        let names = r.generator_names();
        let c = chi(&r, &[(&names[3], int(1))]);
        let v: Vec<Verdict> = [1, 2, 3]
            .iter()
            .map(|&m| bredon_membership(&r, &c, Degree::Finite(m), 1).unwrap().verdict)
            .collect();
        for w in v.windows(2) {
            assert!(w[0] == Verdict::In || w[1] != Verdict::In);
        }
    }
}
