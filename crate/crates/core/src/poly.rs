//! Dense univariate polynomials over Q, with exact real-root finding for the
//! low degrees that come out of substituting a family line into Ceva's
//! condition.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::scalar::{QuadExt5, Scalar};

/// Coefficients in ascending order of degree; never has a zero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c0 + c1·x`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Polynomial::new(vec![c0, c1])
    }

    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monic(&self) -> Self {
        let lc = self.leading();
        if lc.is_zero() {
            return self.clone();
        }
        Polynomial::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + Scalar::Rational(c.clone()))
    }

    /// Long division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Polynomial::new(vec![]), self.clone());
        }
        let lc = divisor.leading();
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let k = &rem[i + dlen - 1] / &lc;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &k * d;
            }
            quot[i] = k;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Rational roots by the rational root theorem, without multiplicity.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.is_zero() {
            return vec![];
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.coeffs[0].is_zero() {
            roots.push(BigRational::zero());
            let shift = p.coeffs.iter().take_while(|c| c.is_zero()).count();
            p = Polynomial::new(p.coeffs[shift..].to_vec());
        }
        if p.degree() == 0 {
            return roots;
        }
        let ints = p.integer_coefficients();
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        for num in divisors(&constant) {
            for den in divisors(&lead) {
                for sign in [1, -1] {
                    let cand = BigRational::new(BigInt::from(sign) * &num, den.clone());
                    if !roots.contains(&cand) && p.eval(&Scalar::Rational(cand.clone())).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Scales by the lcm of denominators to integer coefficients.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
    }

    /// Splits off rational linear factors, then solves a remaining quadratic
    /// exactly when its roots are real and lie in Q(√5).
    pub fn factor(&self) -> Factorization {
        let leading = self.leading();
        let mut rest = self.monic();
        let mut factors = Vec::new();
        let mut roots = Vec::new();
        for r in self.rational_roots() {
            let lin = Polynomial::linear(-r.clone(), BigRational::one());
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                factors.push(lin.clone());
                roots.push(Scalar::Rational(r.clone()));
                rest = q;
            }
        }
        let mut residual = None;
        if rest.degree() == 2 {
            match quadratic_roots(&rest) {
                QuadraticRoots::None => factors.push(rest),
                QuadraticRoots::Pair(r1, r2) => {
                    roots.push(r1);
                    roots.push(r2);
                    factors.push(rest);
                }
                QuadraticRoots::Unsupported => residual = Some(rest),
            }
        } else if rest.degree() > 0 {
            residual = Some(rest);
        }
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Factorization { leading, factors, residual, real_roots: roots }
    }
}

#[allow(clippy::large_enum_variant)]
enum QuadraticRoots {
    None,
    Pair(Scalar, Scalar),
    Unsupported,
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Roots of an irreducible monic quadratic `x² + bx + c`.
fn quadratic_roots(p: &Polynomial) -> QuadraticRoots {
    let (c, b) = (&p.coeffs[0], &p.coeffs[1]);
    let disc = b * b - int(4) * c;
    if disc.is_negative() {
        return QuadraticRoots::None;
    }
    // √disc = k√5 with k rational
    match rational_sqrt(&(disc / int(5))) {
        Some(k) => {
            let half = BigRational::new(BigInt::from(1), BigInt::from(2));
            let a = -b * &half;
            let s = k * half;
            QuadraticRoots::Pair(Scalar::Quad(QuadExt5::new(a.clone(), -s.clone())), Scalar::Quad(QuadExt5::new(a, s)))
        }
        None => QuadraticRoots::Unsupported,
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let j = n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

/// `leading · Π factors · residual`, all factors monic.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub leading: BigRational,
    pub factors: Vec<Polynomial>,
    /// Part of degree ≥ 2 whose real roots were not isolated exactly.
    pub residual: Option<Polynomial>,
    /// All exactly found real roots, ascending.
    pub real_roots: Vec<Scalar>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        let start = Polynomial::constant(self.leading.clone());
        let p = self.factors.iter().fold(start, |acc, f| &acc * f);
        match &self.residual {
            Some(r) => &p * r,
            None => p,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
        Polynomial::new((0..n).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    /// e.g. `2ξ^3 - 3ξ^2 - ξ + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "ξ")?,
                _ => write!(f, "ξ^{}", i)?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
