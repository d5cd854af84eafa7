//! Exact reals in a finite-rank rational span `Q·1 + Q·τ₁ + ... + Q·τ_{d-1}`.
//!
//! The basis symbols are linearly independent over Q by definition. For
//! ordering purposes symbol `τᵢ` is given the numeric witness `√pᵢ` where
//! `pᵢ` is the i-th prime, so the order is a genuine order on a subfield of R.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Names for the non-constant basis symbols, declared once per session.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalBasis {
    names: Vec<String>,
}

impl FormalBasis {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        FormalBasis {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    /// Rank of the value space, counting the constant `1`.
    pub fn rank(&self) -> usize {
        self.names.len() + 1
    }

    /// Coefficient index of a symbol (the constant has index 0).
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    pub fn symbol(&self, idx: usize) -> Option<&str> {
        idx.checked_sub(1).and_then(|i| self.names.get(i)).map(String::as_str)
    }

    pub fn render(&self, x: &FormalReal) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sym = match i {
                0 => None,
                _ => Some(self.symbol(i).map(str::to_string).unwrap_or_else(|| format!("t{i}"))),
            };
            parts.push(match sym {
                None => c.to_string(),
                Some(s) if c.is_one() => s,
                Some(s) if *c == -BigRational::one() => format!("-{s}"),
                Some(s) => format!("{c}*{s}"),
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// An element `c₀ + c₁τ₁ + ...`. Trailing zero coefficients are never stored,
/// so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FormalReal {
    coeffs: Vec<BigRational>,
}

impl FormalReal {
    pub fn zero() -> Self {
        FormalReal { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        FormalReal { coeffs }
    }

    pub fn rational(q: BigRational) -> Self {
        Self::from_coeffs(vec![q])
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// The basis symbol with coefficient index `idx` (`idx ≥ 1`).
    pub fn symbol(idx: usize) -> Self {
        let mut c = vec![BigRational::zero(); idx + 1];
        c[idx] = BigRational::one();
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Number of stored coefficients (one past the highest nonzero index).
    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if self.coeffs.len() == 1 {
            return self.coeffs[0].cmp(&BigRational::zero());
        }
        // Interval evaluation at the witnesses with growing precision. The
        // value is nonzero, so some precision separates it from 0.
        let mut bits = 32u64;
        loop {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// Rational bounds `lo ≤ x ≤ hi` using `bits` binary digits per witness.
    pub fn enclosure(&self, bits: u64) -> (BigRational, BigRational) {
        let mut lo = self.coeff(0);
        let mut hi = lo.clone();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let (wl, wh) = sqrt_bounds(nth_prime(i - 1), bits);
            if c.is_positive() {
                lo += c * &wl;
                hi += c * &wh;
            } else {
                lo += c * &wh;
                hi += c * &wl;
            }
        }
        (lo, hi)
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let (lo, hi) = self.enclosure(64);
        ((lo + hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

fn sqrt_bounds(p: u64, bits: u64) -> (BigRational, BigRational) {
    let scale = BigUint::one() << bits;
    let n = BigUint::from(p) * &scale * &scale;
    let s = n.sqrt();
    let den = BigInt::from(scale);
    let s = BigInt::from(s);
    (BigRational::new(s.clone(), den.clone()), BigRational::new(s + 1, den))
}

/// The i-th prime, 0-based.
fn nth_prime(i: usize) -> u64 {
    let mut found = 0;
    let mut n = 1u64;
    loop {
        n += 1;
        if (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d)) {
            if found == i {
                return n;
            }
            found += 1;
        }
    }
}

impl PartialOrd for FormalReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FormalReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum()
    }
}

impl<'a> Add<&'a FormalReal> for &'a FormalReal {
    type Output = FormalReal;
    fn add(self, rhs: &FormalReal) -> FormalReal {
        let n = self.width().max(rhs.width());
        FormalReal::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a FormalReal> for &'a FormalReal {
    type Output = FormalReal;
    fn sub(self, rhs: &FormalReal) -> FormalReal {
        let n = self.width().max(rhs.width());
        FormalReal::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Add for FormalReal {
    type Output = FormalReal;
    fn add(self, rhs: FormalReal) -> FormalReal {
        &self + &rhs
    }
}

impl Sub for FormalReal {
    type Output = FormalReal;
    fn sub(self, rhs: FormalReal) -> FormalReal {
        &self - &rhs
    }
}

impl Neg for &FormalReal {
    type Output = FormalReal;
    fn neg(self) -> FormalReal {
        FormalReal::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for FormalReal {
    type Output = FormalReal;
    fn neg(self) -> FormalReal {
        -&self
    }
}

impl Mul<i64> for &FormalReal {
    type Output = FormalReal;
    fn mul(self, k: i64) -> FormalReal {
        self.scale(&BigRational::from_integer(k.into()))
    }
}

impl fmt::Debug for FormalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", FormalBasis::default().render(self))
    }
}

impl fmt::Display for FormalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", FormalBasis::default().render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primes() {
        let p: Vec<u64> = (0..6).map(nth_prime).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn sqrt2_ordering() {
        let a = FormalReal::symbol(1); // √2
        assert!(a > FormalReal::rational(q(141, 100)));
        assert!(a < FormalReal::rational(q(142, 100)));
        // 140/99 < √2 < 99/70, both very close
        assert!(a > FormalReal::rational(q(140, 99)));
        assert!(a < FormalReal::rational(q(99, 70)));
        assert!(a < FormalReal::rational(q(577, 408)));
    }

    #[test]
    fn close_combination_sign() {
        // √2 + √3 - √5 - 0.5462 ≈ 0.000015...; tests precision escalation
        let x = FormalReal::from_coeffs(vec![q(-5462, 10000), q(1, 1), q(1, 1), q(-1, 1)]);
        let approx = 2f64.sqrt() + 3f64.sqrt() - 5f64.sqrt() - 0.5462;
        assert_eq!(x.signum(), approx.partial_cmp(&0.0).unwrap());
    }

    #[test]
    fn equality_is_coefficientwise() {
        let a = FormalReal::from_coeffs(vec![q(1, 2), q(0, 1), q(0, 1)]);
        assert_eq!(a, FormalReal::rational(q(1, 2)));
        assert_eq!((&a - &a), FormalReal::zero());
    }

    #[test]
    fn render() {
        let b = FormalBasis::new(&["a", "b"]);
        let x = FormalReal::from_coeffs(vec![q(1, 1), q(2, 1), q(-1, 1)]);
        assert_eq!(b.render(&x), "1 + 2*a - b");
    }
}
