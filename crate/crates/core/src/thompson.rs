//! Σ-invariants of Thompson's group F and of its finite extensions, in the
//! coordinates `aχ₁ + bχ₂` of `S(F)`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::groups::ThompsonExtGroup;
use crate::verdict::Degree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThompsonError {
    #[error("the zero character has no point on the sphere")]
    ZeroCharacter,
    #[error("point is not on the character sphere of the extension")]
    PointNotOnSphere,
}

/// The character `aχ₁ + bχ₂` of F.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FCharacter {
    pub a: BigRational,
    pub b: BigRational,
}

impl FCharacter {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        FCharacter { a, b }
    }

    pub fn int(a: i64, b: i64) -> Self {
        FCharacter::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        FCharacter::new(-&self.a, -&self.b)
    }

    /// Same ray: `self = λ·other` for some `λ > 0`.
    pub fn same_ray(&self, other: &FCharacter) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && &self.a * &other.b == &self.b * &other.a
            && self.a.signum() == other.a.signum()
            && self.b.signum() == other.b.signum()
    }
}

impl fmt::Display for FCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `[aχ₁ + bχ₂] ∈ Σ^m(F; ℤ)`.
///
/// `Σ¹(F)^c = {−[χ₁], −[χ₂]}` and for `m ≥ 2` the complement is the closed
/// negative quadrant.
pub fn sigma_f_membership(p: &FCharacter, m: Degree) -> Result<bool, ThompsonError> {
    sigma_f_by_signs(sign(&p.a), sign(&p.b), m)
}

fn sign(x: &BigRational) -> Ordering {
    x.cmp(&BigRational::zero())
}

/// Membership depends only on the signs of `a` and `b`.
pub fn sigma_f_by_signs(a: Ordering, b: Ordering, m: Degree) -> Result<bool, ThompsonError> {
    use Ordering::{Equal, Less};
    let out = match (a, b, m) {
        (Equal, Equal, _) => return Err(ThompsonError::ZeroCharacter),
        (_, _, Degree::Finite(1)) => matches!((a, b), (Less, Equal) | (Equal, Less)),
        _ => a != Ordering::Greater && b != Ordering::Greater,
    };
    Ok(!out)
}

/// The character sphere of `K ⋉ F` in F-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtSphere {
    /// Nontrivial flip: `{[ν], [−ν]}` with `ν|_F = χ₁ + χ₂`.
    TwoPoints { nu: FCharacter },
    /// Trivial flip: every character of F extends.
    Circle,
}

impl ExtSphere {
    pub fn contains(&self, p: &FCharacter) -> bool {
        match self {
            ExtSphere::TwoPoints { nu } => p.same_ray(nu) || p.same_ray(&nu.neg()),
            ExtSphere::Circle => !p.is_zero(),
        }
    }

    pub fn points(&self) -> Option<Vec<FCharacter>> {
        match self {
            ExtSphere::TwoPoints { nu } => Some(vec![nu.clone(), nu.neg()]),
            ExtSphere::Circle => None,
        }
    }
}

pub fn ext_sphere(g: &ThompsonExtGroup) -> ExtSphere {
    if g.has_nontrivial_flip() {
        ExtSphere::TwoPoints {
            nu: FCharacter::int(1, 1),
        }
    } else {
        ExtSphere::Circle
    }
}

/// Bredon membership on the extension. With a nontrivial flip only `[ν]`
/// belongs: the flip's centralizer in F sees `ν` as a positive multiple of
/// one endpoint character. With a trivial flip it is `Σ^m(F)` of the restriction.
pub fn bredon_sigma_ext(g: &ThompsonExtGroup, p: &FCharacter, m: Degree) -> Result<bool, ThompsonError> {
    let sphere = ext_sphere(g);
    if !sphere.contains(p) {
        return Err(if p.is_zero() {
            ThompsonError::ZeroCharacter
        } else {
            ThompsonError::PointNotOnSphere
        });
    }
    match sphere {
        ExtSphere::TwoPoints { nu } => Ok(p.same_ray(&nu)),
        ExtSphere::Circle => sigma_f_membership(p, m),
    }
}

/// Classical membership on the extension, through the finite-index subgroup F.
pub fn classical_sigma_ext(g: &ThompsonExtGroup, p: &FCharacter, m: Degree) -> Result<bool, ThompsonError> {
    if !ext_sphere(g).contains(p) {
        return Err(if p.is_zero() {
            ThompsonError::ZeroCharacter
        } else {
            ThompsonError::PointNotOnSphere
        });
    }
    sigma_f_membership(p, m)
}

/// The eight compass directions of `S(F)`, counterclockwise from `(1,0)`.
pub fn compass() -> Vec<FCharacter> {
    [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
        .iter()
        .map(|&(a, b)| FCharacter::int(a, b))
        .collect()
}
