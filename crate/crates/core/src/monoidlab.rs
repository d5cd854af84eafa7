//! Bounded enumeration of the monoid `M = G_χ = {g : χ(g) ≥ 0}` for
//! `G = K ⋉ ℤⁿ`: morphism sets `[M/K, M/H]`, their Ω-decomposition, orbits of
//! the Weyl monoid `W_MK`, the conjugation property and FP₀ witnesses.

use std::collections::{BTreeMap, BTreeSet};

use crate::chars::{image_lattice, CharError, Character};
use crate::exactlin::{FormalBasis, FormalReal, ValueLattice};
use crate::groups::{
    Affine, AffineSubgroup, FinByAbelianGroup, FiniteView, GroupError, GroupInstance, SubgroupDescriptor,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("subgroup is not finite")]
    SubgroupNotFinite,
    #[error("negative height bound")]
    NegativeBound,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// All `g` with `0 ≤ χ(g) ≤ height` and `‖v‖∞ ≤ norm`.
#[derive(Clone, Debug)]
pub struct MonoidSlice {
    instance: GroupInstance,
    group: FinByAbelianGroup,
    chi: Character,
    translation_values: Vec<FormalReal>,
    height: FormalReal,
    norm: i64,
    elements: Vec<(Affine, FormalReal)>,
}

impl MonoidSlice {
    pub fn new(g: &GroupInstance, chi: &Character, height: FormalReal, norm: i64) -> Result<Self, MonoidError> {
        let GroupInstance::FinByAb(group) = g else {
            return Err(MonoidError::UnsupportedFamily(g.kind().to_string()));
        };
        if height.signum() == std::cmp::Ordering::Less || norm < 0 {
            return Err(MonoidError::NegativeBound);
        }
        let translation_values: Vec<FormalReal> = (0..group.rank())
            .map(|i| {
                let mut v = vec![0; group.rank()];
                v[i] = 1;
                chi.eval(g, &crate::groups::Element::Affine(group.translation(v)))
            })
            .collect();
        let mut slice = MonoidSlice {
            instance: g.clone(),
            group: group.clone(),
            chi: chi.clone(),
            translation_values,
            height,
            norm,
            elements: Vec::new(),
        };
        let zero = FormalReal::zero();
        slice.elements = group
            .ball(norm)
            .into_iter()
            .filter_map(|a| {
                let x = slice.value(&a);
                (x >= zero && x <= slice.height).then_some((a, x))
            })
            .collect();
        Ok(slice)
    }

    pub fn value(&self, a: &Affine) -> FormalReal {
        a.v.iter()
            .zip(&self.translation_values)
            .fold(FormalReal::zero(), |acc, (&n, c)| &acc + &(c * n))
    }

    pub fn elements(&self) -> &[(Affine, FormalReal)] {
        &self.elements
    }

    pub fn contains(&self, a: &Affine) -> bool {
        let x = self.value(a);
        a.norm() <= self.norm && x >= FormalReal::zero() && x <= self.height
    }

    pub fn group(&self) -> &FinByAbelianGroup {
        &self.group
    }

    pub fn instance(&self) -> &GroupInstance {
        &self.instance
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn height(&self) -> &FormalReal {
        &self.height
    }

    fn resolve(&self, q: &SubgroupDescriptor) -> Result<AffineSubgroup, MonoidError> {
        match self.instance.finite_view(q) {
            Ok(FiniteView::Affine(a)) => Ok(a),
            Ok(FiniteView::InK(_)) => Err(MonoidError::UnsupportedFamily(self.instance.kind().to_string())),
            Err(GroupError::SubgroupNotFinite) => Err(MonoidError::SubgroupNotFinite),
            Err(e) => Err(e.into()),
        }
    }

    /// `m⁻¹ Q m`
    fn pullback(&self, m: &Affine, q: &AffineSubgroup) -> AffineSubgroup {
        self.group.conjugate_subgroup(&self.group.inv(m), q)
    }
}

/// A coset `mH`, recorded by its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: Affine,
    pub value: FormalReal,
    /// Least norm of a coset element found in the slice.
    pub min_norm: i64,
}

/// `Ωᵢ = {mH : Km = mKᵢ}` with `Kᵢ` taken up to H-conjugacy.
#[derive(Clone, Debug)]
pub struct Omega {
    pub k_i: AffineSubgroup,
    /// The H-conjugates of `Kᵢ` that label the same member set.
    pub labels: BTreeSet<AffineSubgroup>,
    pub members: Vec<Coset>,
}

#[derive(Clone, Debug)]
pub struct OmegaDecomposition {
    pub k: AffineSubgroup,
    pub h: AffineSubgroup,
    pub omegas: Vec<Omega>,
    pub disjoint: bool,
    /// Some member was found on the boundary of the slice.
    pub bound_exhausted: bool,
}

/// Enumerates `[M/K, M/H] = {mH : Km ⊆ mH}` within the slice.
pub fn morphism_set(
    slice: &MonoidSlice,
    k: &SubgroupDescriptor,
    h: &SubgroupDescriptor,
) -> Result<OmegaDecomposition, MonoidError> {
    let kq = slice.resolve(k)?;
    let hq = slice.resolve(h)?;
    let g = &slice.group;
    let mut cosets: BTreeMap<Affine, (Coset, BTreeSet<AffineSubgroup>)> = BTreeMap::new();
    let mut bound_exhausted = false;
    let kgens = g.subgroup_generators(&kq);
    for (m, x) in &slice.elements {
        let minv = g.inv(m);
        if !kgens.iter().all(|a| hq.contains(&g.conj(&minv, a))) {
            continue;
        }
        let conj = slice.pullback(m, &kq);
        if !conj.is_subgroup_of(&hq) {
            continue;
        }
        let km: BTreeSet<Affine> = kq.elements().iter().map(|a| g.mul(a, m)).collect();
        let mki: BTreeSet<Affine> = conj.elements().iter().map(|a| g.mul(m, a)).collect();
        assert_eq!(km, mki, "Km = mK_i");
        if m.norm() == slice.norm || *x == slice.height {
            bound_exhausted = true;
        }
        let rep = hq.elements().iter().map(|a| g.mul(m, a)).min().expect("nonempty");
        let entry = cosets.entry(rep.clone()).or_insert_with(|| {
            let labels = hq
                .elements()
                .iter()
                .map(|a| g.conjugate_subgroup(&g.inv(a), &conj))
                .collect();
            (
                Coset {
                    rep,
                    value: x.clone(),
                    min_norm: m.norm(),
                },
                labels,
            )
        });
        entry.0.min_norm = entry.0.min_norm.min(m.norm());
    }
    let mut groups: BTreeMap<AffineSubgroup, (BTreeSet<AffineSubgroup>, Vec<Coset>)> = BTreeMap::new();
    for (_, (coset, labels)) in cosets {
        let key = labels.iter().next().expect("nonempty").clone();
        let e = groups.entry(key).or_insert_with(|| (labels.clone(), Vec::new()));
        debug_assert_eq!(e.0, labels);
        e.1.push(coset);
    }
    let mut omegas: Vec<Omega> = groups
        .into_iter()
        .map(|(k_i, (labels, mut members))| {
            members.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.rep.cmp(&b.rep)));
            Omega { k_i, labels, members }
        })
        .collect();
    omegas.sort_by(|a, b| {
        a.members[0]
            .value
            .cmp(&b.members[0].value)
            .then_with(|| a.k_i.cmp(&b.k_i))
    });
    let disjoint = omegas.iter().enumerate().all(|(i, a)| {
        omegas[i + 1..].iter().all(|b| {
            a.labels.is_disjoint(&b.labels) && a.members.iter().all(|x| b.members.iter().all(|y| x.rep != y.rep))
        })
    });
    Ok(OmegaDecomposition {
        k: kq,
        h: hq,
        omegas,
        disjoint,
        bound_exhausted,
    })
}

/// Which case of the finite-generation trichotomy holds for `χ(N_G(K))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    ImageZero,
    Cyclic,
    Full,
    None,
}

impl std::fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Trichotomy::ImageZero => "(i) chi(N_G(K)) = 0",
            Trichotomy::Cyclic => "(ii) chi(N_G(K)) cyclic",
            Trichotomy::Full => "(iii) chi(N_G(K)) = chi(G)",
            Trichotomy::None => "none",
        })
    }
}

/// Bounded evidence about one Ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observation {
    /// One orbit, generated by a member of certified minimal value.
    Transitive,
    /// At least three strictly decreasing orbit minima and no certified minimum.
    NotFinitelyGenerated,
    Undetermined,
}

impl std::fmt::Display for Observation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Observation::Transitive => "transitive",
            Observation::NotFinitelyGenerated => "not finitely generated within bound",
            Observation::Undetermined => "undetermined within bound",
        })
    }
}

#[derive(Clone, Debug)]
pub struct OmegaReport {
    pub k_i: AffineSubgroup,
    pub members: usize,
    /// Number of source components of the reachability relation.
    pub sources: usize,
    pub min_value: FormalReal,
    /// Orbit minima as the norm bound grows, strictly decreasing.
    pub fresh_minima: Vec<FormalReal>,
    pub observed: Observation,
    pub predicted_fg: bool,
    pub agreement: bool,
}

#[derive(Clone, Debug)]
pub struct MonoidOrbitReport {
    pub chi_g: ValueLattice,
    pub chi_ngk: ValueLattice,
    pub predicate: Trichotomy,
    pub omegas: Vec<OmegaReport>,
    pub disjoint: bool,
    pub bound_exhausted: bool,
    pub agreement: bool,
}

impl MonoidOrbitReport {
    pub fn render(&self, basis: &FormalBasis) -> String {
        let mut out = vec![
            format!("chi(G): {}", self.chi_g.render(basis)),
            format!("chi(N_G(K)): {}", self.chi_ngk.render(basis)),
            format!("predicate: {}", self.predicate),
            format!("omegas: {}", self.omegas.len()),
        ];
        for (i, o) in self.omegas.iter().enumerate() {
            let mins: Vec<String> = o.fresh_minima.iter().map(|x| basis.render(x)).collect();
            out.push(format!("omega[{i}].members: {}", o.members));
            out.push(format!("omega[{i}].min_value: {}", basis.render(&o.min_value)));
            out.push(format!("omega[{i}].fresh_minima: {}", mins.join(", ")));
            out.push(format!("omega[{i}].observed: {}", o.observed));
            let p = if o.predicted_fg {
                "finitely generated"
            } else {
                "not finitely generated"
            };
            out.push(format!("omega[{i}].predicted: {p}"));
        }
        out.push(format!("disjoint: {}", self.disjoint));
        out.push(format!("bound_exhausted: {}", self.bound_exhausted));
        out.push(format!("agreement: {}", self.agreement));
        out.join("\n") + "\n"
    }
}

/// `W_MK` moves `aH` to `bH` iff some `x = b h a⁻¹` normalizes K with `χ(x) ≥ 0`.
fn reaches(slice: &MonoidSlice, k: &AffineSubgroup, h: &AffineSubgroup, a: &Coset, b: &Coset) -> bool {
    if b.value < a.value {
        return false;
    }
    let g = &slice.group;
    let ainv = g.inv(&a.rep);
    h.elements()
        .iter()
        .any(|y| g.normalizes(&g.mul(&g.mul(&b.rep, y), &ainv), k))
}

/// Compares bounded orbit evidence for each Ω with the trichotomy prediction.
pub fn wmk_transitivity(slice: &MonoidSlice, d: &OmegaDecomposition) -> Result<MonoidOrbitReport, MonoidError> {
    let g = &slice.instance;
    let kd = SubgroupDescriptor::new(
        slice
            .group
            .subgroup_generators(&d.k)
            .into_iter()
            .map(crate::groups::Element::Affine)
            .collect(),
        "K",
    );
    let chi_g = image_lattice(g, &slice.chi, &g.whole())?;
    let chi_ngk = image_lattice(g, &slice.chi, &g.normalizer(&kd)?)?;
    let predicate = if chi_ngk.is_zero() {
        Trichotomy::ImageZero
    } else if chi_ngk.is_cyclic() {
        Trichotomy::Cyclic
    } else if chi_ngk.same_as(&chi_g) {
        Trichotomy::Full
    } else {
        Trichotomy::None
    };
    let generator = chi_ngk
        .basis()
        .first()
        .map(|x| if x.signum().is_lt() { -x } else { x.clone() });
    let zero = FormalReal::zero();
    let mut omegas = Vec::new();
    for o in &d.omegas {
        let n = o.members.len();
        let reach: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| reaches(slice, &d.k, &d.h, &o.members[i], &o.members[j]))
                    .collect()
            })
            .collect();
        let sources: BTreeSet<usize> = (0..n)
            .filter(|&j| (0..n).all(|i| !reach[i][j] || reach[j][i]))
            .map(|j| (0..n).find(|&i| reach[i][j] && reach[j][i]).unwrap_or(j))
            .collect();
        let min_value = o.members[0].value.clone();
        let c = &o.members[0].value;
        let predicted_fg = predicate != Trichotomy::None || chi_ngk.contains(&-c);
        let certified = match (&predicate, &generator) {
            (Trichotomy::ImageZero, _) => true,
            (Trichotomy::Cyclic, Some(l)) => min_value < *l,
            _ => min_value == zero,
        };
        let mut fresh_minima: Vec<FormalReal> = Vec::new();
        for r in 0..=slice.norm {
            if let Some(x) = o.members.iter().filter(|m| m.min_norm <= r).map(|m| &m.value).min() {
                if fresh_minima.last().is_none_or(|last| x < last) {
                    fresh_minima.push(x.clone());
                }
            }
        }
        let observed = if sources.len() == 1 && certified {
            Observation::Transitive
        } else if fresh_minima.len() >= 3 && !certified {
            Observation::NotFinitelyGenerated
        } else {
            Observation::Undetermined
        };
        let agreement = sources.len() <= 1 && !(observed == Observation::Transitive && !predicted_fg);
        omegas.push(OmegaReport {
            k_i: o.k_i.clone(),
            members: n,
            sources: sources.len(),
            min_value,
            fresh_minima,
            observed,
            predicted_fg,
            agreement,
        });
    }
    let agreement = d.disjoint && omegas.iter().all(|o| o.agreement);
    Ok(MonoidOrbitReport {
        chi_g,
        chi_ngk,
        predicate,
        omegas,
        disjoint: d.disjoint,
        bound_exhausted: d.bound_exhausted,
        agreement,
    })
}

#[derive(Clone, Debug)]
pub struct ConjugationReport {
    /// Every conjugation `H₁g = gH₂` seen in the slice is realized by a unit.
    pub left: bool,
    /// `χ(N_G(K)) = χ(G)` for every class representative.
    pub right: bool,
    /// `(K, g)` with `g⁻¹Kg` not reached by any unit within the bound.
    pub counterexample: Option<(AffineSubgroup, Affine)>,
    pub classes_complete: bool,
    pub bound_exhausted: bool,
    pub agree: bool,
}

/// Checks both sides of the conjugation criterion for `G_χ` independently.
pub fn conjugation_property(slice: &MonoidSlice) -> Result<ConjugationReport, MonoidError> {
    let g = &slice.group;
    let inst = &slice.instance;
    let fc = g.finite_subgroup_classes(slice.norm.max(1));
    let chi_g = image_lattice(inst, &slice.chi, &inst.whole())?;
    let zero = FormalReal::zero();
    let units: Vec<&Affine> = slice
        .elements
        .iter()
        .filter(|(_, x)| *x == zero)
        .map(|(a, _)| a)
        .collect();
    let mut right = true;
    let mut counterexample = None;
    for k in &fc.classes {
        let kd = SubgroupDescriptor::new(
            g.subgroup_generators(k)
                .into_iter()
                .map(crate::groups::Element::Affine)
                .collect(),
            "K",
        );
        let chi_n = image_lattice(inst, &slice.chi, &inst.normalizer(&kd)?)?;
        right &= chi_n.same_as(&chi_g);
        if counterexample.is_some() {
            continue;
        }
        let by_units: BTreeSet<AffineSubgroup> = units.iter().map(|u| slice.pullback(u, k)).collect();
        counterexample = slice
            .elements
            .iter()
            .find(|(m, _)| !by_units.contains(&slice.pullback(m, k)))
            .map(|(m, _)| (k.clone(), m.clone()));
    }
    let left = counterexample.is_none();
    Ok(ConjugationReport {
        left,
        right,
        bound_exhausted: !left,
        counterexample,
        classes_complete: fc.complete,
        agree: left == right,
    })
}

#[derive(Clone, Debug)]
pub struct Fp0Report {
    /// The covering family, or `None` when no family exists within the slice.
    pub family: Option<Vec<AffineSubgroup>>,
    /// `(target, index into family, m)` with `m⁻¹ target m ⊆ family[index]`.
    pub witnesses: Vec<(AffineSubgroup, usize, Affine)>,
    pub targets: usize,
    pub bound_exhausted: bool,
}

/// Greedy search for finite subgroups `H₁..Hₙ` of the slice such that every
/// finite subgroup `Q` with norm at most `max(1, norm)` satisfies
/// `m⁻¹Qm ⊆ Hᵢ` for some `m` in the slice.
pub fn fp0_witness(slice: &MonoidSlice) -> Fp0Report {
    let g = &slice.group;
    let targets = g.finite_subgroups_within(slice.norm.max(1));
    let candidates = g.finite_subgroups_within(slice.norm);
    // cover[t][c] = some m with m⁻¹ T m ⊆ C
    let cover: Vec<Vec<Option<Affine>>> = targets
        .iter()
        .map(|t| {
            let mut row: Vec<Option<Affine>> = vec![None; candidates.len()];
            for (m, _) in &slice.elements {
                let p = slice.pullback(m, t);
                for (ci, c) in candidates.iter().enumerate() {
                    if row[ci].is_none() && p.is_subgroup_of(c) {
                        row[ci] = Some(m.clone());
                    }
                }
                if row.iter().all(Option::is_some) {
                    break;
                }
            }
            row
        })
        .collect();
    let none_found = Fp0Report {
        family: None,
        witnesses: Vec::new(),
        targets: targets.len(),
        bound_exhausted: true,
    };
    if cover.iter().any(|row| row.iter().all(Option::is_none)) {
        return none_found;
    }
    let mut uncovered: BTreeSet<usize> = (0..targets.len()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..candidates.len())
            .max_by_key(|&c| {
                (
                    uncovered.iter().filter(|&&t| cover[t][c].is_some()).count(),
                    std::cmp::Reverse(c),
                )
            })
            .expect("candidates nonempty");
        uncovered.retain(|&t| cover[t][best].is_none());
        chosen.push(best);
    }
    let witnesses = targets
        .iter()
        .enumerate()
        .map(|(t, q)| {
            let (i, m) = chosen
                .iter()
                .enumerate()
                .find_map(|(i, &c)| cover[t][c].clone().map(|m| (i, m)))
                .expect("covered");
            (q.clone(), i, m)
        })
        .collect();
    Fp0Report {
        family: Some(chosen.into_iter().map(|c| candidates[c].clone()).collect()),
        witnesses,
        targets: targets.len(),
        bound_exhausted: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::make_character;
    use crate::groups::{swap_pairs_example, RaagExtGroup};
    use crate::raagsigma::FlagComplex;

    fn swap_pairs() -> GroupInstance {
        GroupInstance::FinByAb(swap_pairs_example())
    }

    fn chi(g: &GroupInstance, b0: FormalReal, b2: FormalReal) -> Character {
        let mut map = BTreeMap::new();
        map.insert("t".to_string(), FormalReal::zero());
        map.insert("b0".to_string(), b0.clone());
        map.insert("b1".to_string(), b0);
        map.insert("b2".to_string(), b2.clone());
        map.insert("b3".to_string(), b2);
        make_character(g, &map).unwrap()
    }

    fn int(n: i64) -> FormalReal {
        FormalReal::integer(n)
    }

    #[test]
    fn free_cyclic_monoid() {
        let g = GroupInstance::FinByAb(FinByAbelianGroup::free_abelian(1));
        let names = g.generator_names();
        let mut map = BTreeMap::new();
        map.insert(names[0].clone(), int(1));
        let c = make_character(&g, &map).unwrap();
        let slice = MonoidSlice::new(&g, &c, int(5), 5).unwrap();
        assert_eq!(slice.elements().len(), 6);
        let one = SubgroupDescriptor::trivial();
        let d = morphism_set(&slice, &one, &one).unwrap();
        assert_eq!(d.omegas.len(), 1);
        assert_eq!(d.omegas[0].members.len(), 6);
        let r = wmk_transitivity(&slice, &d).unwrap();
        assert_eq!(r.omegas[0].observed, Observation::Transitive);
        assert!(r.agreement);
    }

    #[test]
    fn discrete_character_is_transitive() {
        let g = swap_pairs();
        let c = chi(&g, int(1), int(1));
        let slice = MonoidSlice::new(&g, &c, int(6), 3).unwrap();
        let k = g.parse_subgroup("t", "K").unwrap();
        let d = morphism_set(&slice, &k, &k).unwrap();
        assert!(d.disjoint);
        assert!(d.omegas.iter().all(|o| o.k_i == d.k));
        let r = wmk_transitivity(&slice, &d).unwrap();
        assert_eq!(r.predicate, Trichotomy::Cyclic);
        assert!(r.omegas.iter().all(|o| o.observed == Observation::Transitive));
        assert!(r.agreement);
    }

    #[test]
    fn dense_character_shows_fresh_minima() {
        let g = swap_pairs();
        let c = chi(&g, int(1), FormalReal::symbol(1));
        let slice = MonoidSlice::new(&g, &c, int(4), 9).unwrap();
        let k = g.parse_subgroup("t", "K").unwrap();
        let h = g.parse_subgroup("b0^-1*t*b0", "H").unwrap();
        let d = morphism_set(&slice, &k, &h).unwrap();
        assert_eq!(d.omegas.len(), 1);
        let r = wmk_transitivity(&slice, &d).unwrap();
        assert_eq!(r.predicate, Trichotomy::None);
        let o = &r.omegas[0];
        assert!(!o.predicted_fg);
        assert!(o.fresh_minima.len() >= 3, "{:?}", o.fresh_minima);
        assert!(o.fresh_minima.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(o.observed, Observation::NotFinitelyGenerated);
        assert!(r.agreement);
    }

    #[test]
    fn conjugation_sides_on_swap_pairs() {
        let g = swap_pairs();
        let slice = MonoidSlice::new(&g, &chi(&g, int(1), int(1)), int(2), 2).unwrap();
        let r = conjugation_property(&slice).unwrap();
        assert!(!r.right);
        assert!(!r.left);
        assert!(r.agree);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn conjugation_trivial_for_free_abelian() {
        let g = GroupInstance::FinByAb(FinByAbelianGroup::free_abelian(2));
        let names = g.generator_names();
        let mut map = BTreeMap::new();
        map.insert(names[0].clone(), int(1));
        map.insert(names[1].clone(), FormalReal::symbol(1));
        let c = make_character(&g, &map).unwrap();
        let slice = MonoidSlice::new(&g, &c, int(3), 3).unwrap();
        let r = conjugation_property(&slice).unwrap();
        assert!(r.left && r.right && r.agree);
        let f = fp0_witness(&slice);
        assert_eq!(f.family.unwrap().len(), 1);
    }

    #[test]
    fn raag_family_is_unsupported() {
        let l = FlagComplex::from_labels(&["1", "2"], &[("1", "2")]).unwrap();
        let g = GroupInstance::Raag(RaagExtGroup::raag(l));
        let names = g.generator_names();
        let mut map = BTreeMap::new();
        map.insert(names[0].clone(), int(1));
        map.insert(names[1].clone(), int(1));
        let c = make_character(&g, &map).unwrap();
        assert!(matches!(
            MonoidSlice::new(&g, &c, int(1), 1),
            Err(MonoidError::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn fp0_family_on_swap_pairs() {
        let g = swap_pairs();
        let slice = MonoidSlice::new(&g, &chi(&g, int(1), int(1)), int(4), 2).unwrap();
        let f = fp0_witness(&slice);
        let fam = f.family.expect("found");
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].order(), 2);
        for (q, i, m) in &f.witnesses {
            assert!(slice.contains(m));
            assert!(slice.pullback(m, q).is_subgroup_of(&fam[*i]));
        }
    }

    #[test]
    fn fp0_none_found_at_bound_zero() {
        let g = swap_pairs();
        let slice = MonoidSlice::new(&g, &chi(&g, int(1), int(1)), int(0), 0).unwrap();
        let f = fp0_witness(&slice);
        assert!(f.family.is_none());
        assert!(f.bound_exhausted);
    }

    #[test]
    fn slice_invariants() {
        let g = swap_pairs();
        let slice = MonoidSlice::new(&g, &chi(&g, int(1), FormalReal::symbol(1)), int(3), 2).unwrap();
        let grp = slice.group();
        let els: Vec<&Affine> = slice.elements().iter().map(|(a, _)| a).collect();
        for (a, x) in slice.elements() {
            assert!(*x >= FormalReal::zero());
            assert_eq!(*x, slice.value(a));
        }
        for a in els.iter().take(20) {
            for b in els.iter().take(20) {
                // left linear: one of x·a = b, x·b = a has x in the monoid
                let x = grp.mul(b, &grp.inv(a));
                let y = grp.inv(&x);
                assert!(slice.value(&x) >= FormalReal::zero() || slice.value(&y) >= FormalReal::zero());
                for c in els.iter().take(5) {
                    if grp.mul(c, a) == grp.mul(c, b) {
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}
