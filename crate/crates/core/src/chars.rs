//! Characters `G → ℝ`, the character sphere, image lattices, Meinert's
//! convex-hull operator, and characters extendable from a finite-index
//! normal subgroup.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactlin::matrix::rational_kernel;
use crate::exactlin::{FormalBasis, FormalReal, IntMatrix, LinError, RationalCone, ValueLattice};
use crate::groups::{Element, GroupInstance, SubgroupDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("character does not kill relator {0}")]
    DoesNotKillRelators(String),
    #[error("generator '{0}' has no value")]
    MissingGenerator(String),
    #[error("'{0}' is not a generator of the group")]
    UnknownGenerator(String),
    #[error("element is not in the group: {0}")]
    GeneratorNotInGroup(String),
    #[error("the zero character has no point on the sphere")]
    ZeroCharacter,
    #[error("points lie on different spheres")]
    MixedSpheres,
    #[error("value is not fixed by the finite group")]
    NotFixed,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// A homomorphism to ℝ, stored by its values on the group's generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    names: Vec<String>,
    values: Vec<FormalReal>,
}

impl Character {
    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn values(&self) -> &[FormalReal] {
        &self.values
    }

    pub fn value_of(&self, name: &str) -> Option<&FormalReal> {
        self.names.iter().position(|n| n == name).map(|i| &self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(FormalReal::is_zero)
    }

    pub fn scale(&self, q: &BigRational) -> Character {
        Character {
            names: self.names.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn neg(&self) -> Character {
        Character {
            names: self.names.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        assert_eq!(self.names, other.names, "characters of different groups");
        Character {
            names: self.names.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    /// `χ` of an element from its exponent vector.
    pub fn eval_exponents(&self, exps: &[i64]) -> FormalReal {
        self.values
            .iter()
            .zip(exps)
            .fold(FormalReal::zero(), |acc, (v, &e)| &acc + &(v * e))
    }

    pub fn eval(&self, g: &GroupInstance, x: &Element) -> FormalReal {
        self.eval_exponents(&g.exponents(x))
    }

    /// Largest coefficient width of any value.
    pub fn width(&self) -> usize {
        self.values.iter().map(FormalReal::width).max().unwrap_or(0)
    }

    pub fn render(&self, basis: &FormalBasis) -> String {
        self.names
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("{n}={}", basis.render(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds a character, checking that it kills every abelian relator.
pub fn make_character(g: &GroupInstance, values: &BTreeMap<String, FormalReal>) -> Result<Character, CharError> {
    let names = g.generator_names();
    if let Some(unknown) = values.keys().find(|k| !names.contains(k)) {
        return Err(CharError::UnknownGenerator(unknown.clone()));
    }
    let vals = names
        .iter()
        .map(|n| {
            values
                .get(n)
                .cloned()
                .ok_or_else(|| CharError::MissingGenerator(n.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let chi = Character { names, values: vals };
    for row in g.relation_rows() {
        if !chi.eval_exponents(&row).is_zero() {
            return Err(CharError::DoesNotKillRelators(render_relator(&chi.names, &row)));
        }
    }
    Ok(chi)
}

/// Builds a character from values listed in generator order.
pub fn character_from_values(g: &GroupInstance, values: Vec<FormalReal>) -> Result<Character, CharError> {
    let map = g.generator_names().into_iter().zip(values).collect();
    make_character(g, &map)
}

fn render_relator(names: &[String], row: &[i64]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(row)
        .filter(|(_, &e)| e != 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

/// `χ(S)` for the subgroup generated by the listed elements.
pub fn image_lattice(g: &GroupInstance, chi: &Character, s: &SubgroupDescriptor) -> Result<ValueLattice, CharError> {
    let vals = s
        .generators
        .iter()
        .map(|x| {
            check_membership(g, x)?;
            Ok(chi.eval(g, x))
        })
        .collect::<Result<Vec<_>, CharError>>()?;
    Ok(ValueLattice::new(vals))
}

fn check_membership(g: &GroupInstance, x: &Element) -> Result<(), CharError> {
    let ok = x.k_part() < g.k().order()
        && match (g, x) {
            (GroupInstance::FinByAb(h), Element::Affine(a)) => a.v.len() == h.rank(),
            (GroupInstance::Raag(h), Element::Raag(r)) => r.word.iter().all(|&(v, _)| v < h.complex().vertex_count()),
            (GroupInstance::Thompson(_), Element::Thompson(_)) => true,
            _ => false,
        };
    if ok {
        Ok(())
    } else {
        Err(CharError::GeneratorNotInGroup(format!("{x:?}")))
    }
}

/// A nonzero character up to positive scaling. The representative has its
/// first nonzero coefficient equal to ±1, scanning generators by name and
/// then basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpherePoint {
    rep: Character,
}

impl SpherePoint {
    pub fn new(chi: &Character) -> Result<Self, CharError> {
        let mut order: Vec<usize> = (0..chi.names.len()).collect();
        order.sort_by(|&a, &b| chi.names[a].cmp(&chi.names[b]));
        let lead = order
            .iter()
            .flat_map(|&i| chi.values[i].coeffs().iter())
            .find(|c| !c.is_zero())
            .ok_or(CharError::ZeroCharacter)?;
        Ok(SpherePoint {
            rep: chi.scale(&lead.abs().recip()),
        })
    }

    pub fn rep(&self) -> &Character {
        &self.rep
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint { rep: self.rep.neg() }
    }

    /// Flattened coefficient vector `(gen, basis index)` padded to `width`.
    pub fn vector(&self, width: usize) -> Option<Vec<BigRational>> {
        if self.rep.width() > width {
            return None;
        }
        Some(
            self.rep
                .values
                .iter()
                .flat_map(|v| (0..width).map(move |i| v.coeff(i)))
                .collect(),
        )
    }
}

/// `S(G, H)`: the classes of characters vanishing on `H ⊇ G'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubSphere {
    pub vanishing: SubgroupDescriptor,
}

impl SubSphere {
    pub fn new(vanishing: SubgroupDescriptor) -> Self {
        SubSphere { vanishing }
    }

    pub fn contains(&self, g: &GroupInstance, chi: &Character) -> bool {
        self.vanishing.generators.iter().all(|h| chi.eval(g, h).is_zero())
    }

    /// Linear conditions on generator values cutting out `Hom(G/H, ℝ)`.
    pub fn conditions(&self, g: &GroupInstance) -> Vec<Vec<i64>> {
        let mut rows = g.relation_rows();
        rows.extend(self.vanishing.generators.iter().map(|h| g.exponents(h)));
        rows
    }

    /// Integer basis of `Hom(G/H, ℝ)` as generator-value vectors.
    pub fn basis(&self, g: &GroupInstance) -> Vec<Vec<BigInt>> {
        rational_kernel(&IntMatrix::from_rows(g.generator_count(), &self.conditions(g)))
    }
}

/// The closed cone spanned by sphere points, kept with its coordinate layout.
#[derive(Clone, Debug)]
pub struct MeinertCone {
    names: Option<Vec<String>>,
    width: usize,
    cone: RationalCone,
}

impl MeinertCone {
    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    /// `[χ]` lies in the hull. An empty hull contains nothing.
    pub fn contains(&self, p: &SpherePoint) -> Result<bool, CharError> {
        if self.cone.is_empty() {
            return Ok(false);
        }
        if self.names.as_deref() != Some(p.rep.generator_names()) {
            return Err(CharError::MixedSpheres);
        }
        match p.vector(self.width) {
            Some(v) => Ok(crate::exactlin::cone_contains(&self.cone, &v)?),
            None => Ok(false),
        }
    }
}

/// `conv` of the given points as a cone; `Σ^∞(G)^c` when the points are `Σ¹(G)^c`
/// and G is nilpotent-by-abelian of type FP_∞.
pub fn meinert_complement(points: &[SpherePoint]) -> Result<MeinertCone, CharError> {
    let names = points.first().map(|p| p.rep.names.clone());
    if points.iter().any(|p| Some(&p.rep.names) != names.as_ref()) {
        return Err(CharError::MixedSpheres);
    }
    let width = points.iter().map(|p| p.rep.width()).max().unwrap_or(0).max(1);
    let dim = names.as_ref().map_or(0, Vec::len) * width;
    let gens = points
        .iter()
        .map(|p| p.vector(width).expect("width covers all points"))
        .collect();
    Ok(MeinertCone {
        names,
        width,
        cone: RationalCone::new(dim, gens)?,
    })
}

/// `Hom(H, ℝ)^K` for `G = K ⋉ H`, as integer conditions and a basis over
/// the generators of H (the non-K generators of G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubspace {
    pub h_generators: Vec<String>,
    pub conditions: Vec<Vec<i64>>,
    pub basis: Vec<Vec<BigInt>>,
}

impl FixedSubspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, nu: &[FormalReal]) -> bool {
        self.conditions.iter().all(|row| {
            row.iter()
                .zip(nu)
                .fold(FormalReal::zero(), |acc, (&c, v)| &acc + &(v * c))
                .is_zero()
        })
    }

    /// `χ(k h) := ν(h)`: the extension of a fixed `ν` to G.
    pub fn extend(&self, g: &GroupInstance, nu: &[FormalReal]) -> Result<Character, CharError> {
        if nu.len() != self.h_generators.len() || !self.contains(nu) {
            return Err(CharError::NotFixed);
        }
        let mut values = vec![FormalReal::zero(); g.k_offset()];
        values.extend(nu.iter().cloned());
        character_from_values(g, values)
    }
}

pub fn extendable_characters(g: &GroupInstance) -> FixedSubspace {
    let names = g.generator_names()[g.k_offset()..].to_vec();
    let n = names.len();
    let mut conditions = Vec::new();
    for k in 1..g.k().order() {
        match g {
            GroupInstance::FinByAb(h) => {
                // ν M_k = ν, one row per column of M_k
                let m = h.matrix(k);
                for j in 0..n {
                    let row: Vec<i64> = (0..n).map(|i| m[i][j] - i64::from(i == j)).collect();
                    conditions.push(row);
                }
            }
            GroupInstance::Raag(h) => {
                for v in 0..n {
                    let w = h.perm(k)[v];
                    if w != v {
                        let mut row = vec![0; n];
                        row[w] += 1;
                        row[v] -= 1;
                        conditions.push(row);
                    }
                }
            }
            GroupInstance::Thompson(h) => {
                if h.flips(k) {
                    conditions.push(vec![1, -1]);
                }
            }
        }
    }
    conditions.retain(|r| r.iter().any(|&x| x != 0));
    for r in conditions.iter_mut() {
        if r.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            r.iter_mut().for_each(|x| *x = -*x);
        }
    }
    conditions.sort();
    conditions.dedup();
    let basis = rational_kernel(&IntMatrix::from_rows(n, &conditions));
    FixedSubspace {
        h_generators: names,
        conditions,
        basis,
    }
}

/// Parses a character file: `basis a b` then lines `gen = 1 + 2*a - b/3`.
/// Generators of K left unassigned get value zero.
pub fn parse_character(g: &GroupInstance, text: &str) -> Result<(FormalBasis, Character), CharError> {
    let mut basis = FormalBasis::default();
    let mut values = BTreeMap::new();
    let mut lines_of = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("basis") {
            if !values.is_empty() || basis.rank() > 1 {
                return Err(CharError::Parse {
                    line,
                    msg: "basis must be declared once, before values".into(),
                });
            }
            let syms: Vec<&str> = rest.split_whitespace().collect();
            if let Some(bad) = syms.iter().find(|s| {
                !s.chars().all(|c| c.is_alphanumeric() || c == '_')
                    || s.chars().next().is_some_and(|c| c.is_ascii_digit())
            }) {
                return Err(CharError::Parse {
                    line,
                    msg: format!("bad basis symbol '{bad}'"),
                });
            }
            basis = FormalBasis::new(&syms);
            continue;
        }
        let (name, expr) = content.split_once('=').ok_or(CharError::Parse {
            line,
            msg: "expected 'gen = value'".into(),
        })?;
        let name = name.trim().to_string();
        let value = parse_formal(&basis, expr).map_err(|msg| CharError::Parse { line, msg })?;
        if values.insert(name.clone(), value).is_some() {
            return Err(CharError::Parse {
                line,
                msg: format!("'{name}' assigned twice"),
            });
        }
        lines_of.insert(name, line);
    }
    let names = g.generator_names();
    for n in &names[..g.k_offset()] {
        values.entry(n.clone()).or_insert_with(FormalReal::zero);
    }
    match make_character(g, &values) {
        Err(CharError::UnknownGenerator(n)) => Err(CharError::Parse {
            line: lines_of[&n],
            msg: format!("'{n}' is not a generator of the group"),
        }),
        other => other.map(|chi| (basis, chi)),
    }
}

/// Parses `rational ([+|-] rational '*' symbol | [+|-] symbol)*`.
pub fn parse_formal(basis: &FormalBasis, expr: &str) -> Result<FormalReal, String> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty value".into());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && i > start {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut acc = FormalReal::zero();
    for t in terms {
        let (neg, body) = match t.as_bytes()[0] {
            b'+' => (false, &t[1..]),
            b'-' => (true, &t[1..]),
            _ => (false, t),
        };
        let (coef, sym) = match body.split_once('*') {
            Some((c, s)) => (parse_rational(c)?, Some(s)),
            None if body.chars().next().is_some_and(|c| c.is_ascii_digit()) => (parse_rational(body)?, None),
            None => (BigRational::from_integer(1.into()), Some(body)),
        };
        let term = match sym {
            None => FormalReal::rational(coef),
            Some(s) => {
                let idx = basis
                    .index_of(s)
                    .ok_or_else(|| format!("undeclared basis symbol '{s}'"))?;
                FormalReal::symbol(idx).scale(&coef)
            }
        };
        acc = if neg { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad rational '{s}'");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Sign of `χ(x)` as an ordering against zero.
pub fn sign(x: &FormalReal) -> Ordering {
    x.signum()
}
