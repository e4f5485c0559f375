//! Elements of the real quadratic field Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b·√5` with rational coordinates.
///
/// Since √5 is irrational the pair `(a, b)` is unique, so equality is
/// componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt5 {
    pub a: BigRational,
    pub b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadExt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadExt5 { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadExt5 { a, b: BigRational::zero() }
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        QuadExt5::new(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        QuadExt5::new(rat(1, 2), rat(1, 2))
    }

    /// φ⁻¹ = (√5 − 1)/2 = φ − 1.
    pub fn phi_inv() -> Self {
        QuadExt5::new(rat(-1, 2), rat(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        QuadExt5::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(5, 1) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt5::new(c.a / &n, c.b / n))
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            (sa, sb) => {
                // opposite signs: the larger magnitude wins, and a² ≠ 5b²
                let a2 = &self.a * &self.a;
                let b2 = rat(5, 1) * &self.b * &self.b;
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }
}

impl PartialOrd for QuadExt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a QuadExt5> for &'a QuadExt5 {
    type Output = QuadExt5;
    fn add(self, rhs: &QuadExt5) -> QuadExt5 {
        QuadExt5::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadExt5> for &'a QuadExt5 {
    type Output = QuadExt5;
    fn sub(self, rhs: &QuadExt5) -> QuadExt5 {
        QuadExt5::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadExt5> for &'a QuadExt5 {
    type Output = QuadExt5;
    fn mul(self, rhs: &QuadExt5) -> QuadExt5 {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let a = &self.a * &rhs.a + rat(5, 1) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt5::new(a, b)
    }
}

impl Neg for QuadExt5 {
    type Output = QuadExt5;
    fn neg(self) -> QuadExt5 {
        QuadExt5::new(-self.a, -self.b)
    }
}

impl fmt::Display for QuadExt5 {
    /// `a+b√5` or `a-b√5`, with `a` and `|b|` in `p/q` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}√5", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}√5", self.a, self.b)
        }
    }
}
