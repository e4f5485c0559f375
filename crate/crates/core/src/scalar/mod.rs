//! The number tower all geometry runs on: exact rationals, exact elements of
//! Q(√5), and an `f64` fallback for arbitrary real input.
//!
//! Mixed exact arithmetic promotes `Rational` to `QuadExt5`. A `Float`
//! operand demotes the result to `Float`.

mod quad;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use quad::QuadExt5;

/// Tolerance for comparisons involving `Float` values.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Quad(QuadExt5),
    Float(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

enum Promoted {
    Rational(BigRational, BigRational),
    Quad(QuadExt5, QuadExt5),
    Float(f64, f64),
}

fn promote(x: &Scalar, y: &Scalar) -> Promoted {
    use Scalar::*;
    match (x, y) {
        (Rational(a), Rational(b)) => Promoted::Rational(a.clone(), b.clone()),
        (Float(_), _) | (_, Float(_)) => Promoted::Float(x.to_f64(), y.to_f64()),
        _ => Promoted::Quad(x.to_quad().unwrap(), y.to_quad().unwrap()),
    }
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`; panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    /// `a + b√5` with rational `a`, `b`.
    pub fn quad(a: BigRational, b: BigRational) -> Self {
        Scalar::Quad(QuadExt5::new(a, b))
    }

    pub fn phi() -> Self {
        Scalar::Quad(QuadExt5::phi())
    }

    pub fn phi_inv() -> Self {
        Scalar::Quad(QuadExt5::phi_inv())
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Float(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quad(q) => q.to_f64(),
            Scalar::Float(f) => *f,
        }
    }

    fn to_quad(&self) -> Option<QuadExt5> {
        match self {
            Scalar::Rational(r) => Some(QuadExt5::from_rational(r.clone())),
            Scalar::Quad(q) => Some(q.clone()),
            Scalar::Float(_) => None,
        }
    }

    /// The value as a rational, if it is one (a `Quad` with zero √5 part counts).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Quad(q) if q.is_rational() => Some(q.a.clone()),
            _ => None,
        }
    }

    /// Exact zero test on exact variants; `|x| < FLOAT_TOLERANCE` on floats.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
            Scalar::Float(f) => f.abs() < FLOAT_TOLERANCE,
        }
    }

    /// Exact equality on exact pairs, relative tolerance once a float is involved.
    pub fn approx_eq(&self, other: &Scalar) -> bool {
        match promote(self, other) {
            Promoted::Float(a, b) => {
                let scale = a.abs().max(b.abs()).max(1.0);
                (a - b).abs() <= FLOAT_TOLERANCE * scale
            }
            _ => self == other,
        }
    }

    /// Sign of the value; `None` for NaN.
    pub fn signum(&self) -> Option<Ordering> {
        match self {
            Scalar::Rational(r) => Some(r.cmp(&BigRational::zero())),
            Scalar::Quad(q) => Some(q.signum()),
            Scalar::Float(f) => f.partial_cmp(&0.0),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Some(Ordering::Greater)
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Some(Ordering::Less)
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            Scalar::Quad(q) => Scalar::Quad(q.abs()),
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        match promote(self, rhs) {
            Promoted::Rational(a, b) => {
                if b.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(a / b))
            }
            Promoted::Quad(a, b) => {
                let inv = b.inverse().ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Quad(&a * &inv))
            }
            Promoted::Float(a, b) => {
                if b == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Float(a / b))
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one().checked_div(self)
    }
}

/// Binary arithmetic with the promotion rules of [`Scalar`].
pub fn scalar_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => Ok(x + y),
        ArithOp::Sub => Ok(x - y),
        ArithOp::Mul => Ok(x * y),
        ArithOp::Div => x.checked_div(y),
    }
}

/// True iff `xi` is φ or −φ⁻¹, the two roots of `ξ² − ξ − 1`.
pub fn is_golden_excluded(xi: &Scalar) -> bool {
    let v = &(&xi.square() - xi) - &Scalar::one();
    v.is_zero()
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $quad:expr, $float:expr) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                match promote(self, rhs) {
                    Promoted::Rational(a, b) => Scalar::Rational($rat(&a, &b)),
                    Promoted::Quad(a, b) => Scalar::Quad($quad(&a, &b)),
                    Promoted::Float(a, b) => Scalar::Float($float(a, b)),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: &QuadExt5, b: &QuadExt5| a + b, |a: f64, b: f64| a + b);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: &QuadExt5, b: &QuadExt5| a - b, |a: f64, b: f64| a - b);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: &QuadExt5, b: &QuadExt5| a * b, |a: f64, b: f64| a * b);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(q) => Scalar::Quad(-q),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match promote(self, other) {
            Promoted::Rational(a, b) => a == b,
            Promoted::Quad(a, b) => a == b,
            Promoted::Float(a, b) => a == b,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match promote(self, other) {
            Promoted::Rational(a, b) => Some(a.cmp(&b)),
            Promoted::Quad(a, b) => Some(a.cmp(&b)),
            Promoted::Float(a, b) => a.partial_cmp(&b),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<QuadExt5> for Scalar {
    fn from(q: QuadExt5) -> Self {
        Scalar::Quad(q)
    }
}

impl From<f64> for Scalar {
    fn from(f: f64) -> Self {
        Scalar::Float(f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Quad(q) => write!(f, "{}", q),
            // Debug keeps a '.' or exponent so the text re-parses as a float.
            Scalar::Float(x) => write!(f, "{:?}", x),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::Parse(format!("invalid rational '{}'", s));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(unsigned) {
        return Err(err());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
    let d: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{}'", s)));
    }
    Ok(BigRational::new(n, d))
}

fn parse_quad(s: &str) -> Result<QuadExt5> {
    let body = s
        .strip_suffix("√5")
        .or_else(|| s.strip_suffix("*r5"))
        .ok_or_else(|| Error::Parse(format!("invalid quadratic '{}'", s)))?;
    // split at the last sign that is not in leading position
    let split = body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
    let (a_text, b_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let b_text = b_text.strip_suffix('*').unwrap_or(b_text);
    let b = match b_text {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t)?,
    };
    Ok(QuadExt5::new(parse_rational(a_text)?, b))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q`, integers, `a+b√5` / `a+b*r5`, decimal literals and the
    /// keywords `phi`, `-phi`, `phi_inv`, `-phi_inv`, `phi^2`, `phi^-2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let phi = QuadExt5::phi();
        match s {
            "phi" => return Ok(Scalar::Quad(phi)),
            "-phi" => return Ok(Scalar::Quad(-phi)),
            "phi_inv" => return Ok(Scalar::phi_inv()),
            "-phi_inv" => return Ok(-Scalar::phi_inv()),
            "phi^2" => return Ok(Scalar::Quad(&phi * &phi)),
            "phi^-2" => {
                let inv = QuadExt5::phi_inv();
                return Ok(Scalar::Quad(&inv * &inv));
            }
            _ => {}
        }
        if s.ends_with("√5") || s.ends_with("r5") {
            return parse_quad(s).map(Scalar::Quad);
        }
        if let Ok(r) = parse_rational(s) {
            return Ok(Scalar::Rational(r));
        }
        if s.bytes().all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b)) && s.bytes().any(|b| b.is_ascii_digit()) {
            if let Ok(f) = s.parse::<f64>() {
                if f.is_finite() {
                    return Ok(Scalar::Float(f));
                }
            }
        }
        Err(Error::Parse(format!("invalid scalar '{}'", s)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&Scalar::ratio(1, 2) + &Scalar::ratio(1, 3), Scalar::ratio(5, 6));
        assert!(matches!(
            scalar_arith(&Scalar::ratio(1, 2), &Scalar::ratio(1, 3), ArithOp::Add).unwrap(),
            Scalar::Rational(_)
        ));
    }

    #[test]
    fn phi_times_phi() {
        let sq = &Scalar::phi() * &Scalar::phi();
        assert_eq!(sq, s("3/2+1/2√5"));
        assert_eq!(sq, &Scalar::phi() + &Scalar::one());
    }

    #[test]
    fn promotion_rules() {
        let r = Scalar::ratio(1, 2);
        assert!(matches!(&r * &Scalar::phi(), Scalar::Quad(_)));
        assert!(matches!(&r + &Scalar::Float(0.25), Scalar::Float(_)));
        assert!(matches!(&Scalar::phi() - &Scalar::Float(0.25), Scalar::Float(_)));
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(scalar_arith(&Scalar::one(), &Scalar::zero(), ArithOp::Div), Err(Error::DivisionByZero)));
        assert!(matches!(Scalar::phi().checked_div(&s("0+0√5")), Err(Error::DivisionByZero)));
        assert!(matches!(Scalar::Float(1.0).checked_div(&Scalar::Float(0.0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn golden_exclusion() {
        assert!(!is_golden_excluded(&Scalar::ratio(1, 2)));
        assert!(is_golden_excluded(&Scalar::phi()));
        assert!(is_golden_excluded(&s("1/2-1/2√5")));
        assert!(is_golden_excluded(&-Scalar::phi_inv()));
        assert!(is_golden_excluded(&Scalar::Float(1.618033988749895)));
        assert!(!is_golden_excluded(&Scalar::Float(1.618)));

        let set = ["phi", "-phi_inv", "phi_inv", "phi^2", "1/2", "0", "1"];
        let hits = set.iter().filter(|t| is_golden_excluded(&s(t))).count();
        assert_eq!(hits, 2);
    }

    #[test]
    fn parsing() {
        assert_eq!(s("5/6"), Scalar::ratio(5, 6));
        assert_eq!(s("-3"), Scalar::int(-3));
        assert_eq!(s("+4/6"), Scalar::ratio(2, 3));
        assert!("4/-2".parse::<Scalar>().is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(s("1/2+1/2*r5"), Scalar::phi());
        assert_eq!(s("-1/2+1/2√5"), Scalar::phi_inv());
        assert_eq!(s("√5"), s("0+1√5"));
        assert_eq!(s("-2√5"), s("0-2√5"));
        assert_eq!(s("3-√5"), s("3-1√5"));
        assert!(matches!(s("0.4"), Scalar::Float(f) if f == 0.4));
        assert!(matches!(s("1e-3"), Scalar::Float(_)));
        for bad in ["", "bad", "1/0", "1/", "/2", "1.2.3", "phi2", "1+", "nan", "inf"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn float_display_reparses_as_float() {
        assert_eq!(Scalar::Float(1.0).to_string(), "1.0");
        assert!(matches!(s(&Scalar::Float(1.0).to_string()), Scalar::Float(_)));
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn arb_exact() -> impl Strategy<Value = Scalar> {
        prop_oneof![
            arb_rational().prop_map(Scalar::Rational),
            (arb_rational(), arb_rational()).prop_map(|(a, b)| Scalar::quad(a, b)),
        ]
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop_oneof![arb_exact(), (-1e3f64..1e3).prop_map(Scalar::Float)]
    }

    proptest! {
        #[test]
        fn multiplicative_identity(x in arb_scalar()) {
            let y = &x * &Scalar::one();
            prop_assert_eq!(y, x);
        }

        #[test]
        fn exact_round_trips(x in arb_exact(), y in arb_exact()) {
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x);
            }
        }

        #[test]
        fn text_round_trip(x in arb_scalar()) {
            let back: Scalar = x.to_string().parse().unwrap();
            prop_assert_eq!(back.to_string(), x.to_string());
            prop_assert_eq!(back, x);
        }

        #[test]
        fn quad_mul_matches_float(
            a in -1000i64..=1000, b in -1000i64..=1000,
            c in -1000i64..=1000, d in -1000i64..=1000,
        ) {
            let x = Scalar::quad(BigInt::from(a).into(), BigInt::from(b).into());
            let y = Scalar::quad(BigInt::from(c).into(), BigInt::from(d).into());
            let exact = (&x * &y).to_f64();
            let float = x.to_f64() * y.to_f64();
            // relative to the product of magnitudes |a| + |b|√5, which bounds
            // the cancellation inherent in evaluating a + b√5 in f64
            let r5 = 5f64.sqrt();
            let mag = (a.abs() as f64 + b.abs() as f64 * r5) * (c.abs() as f64 + d.abs() as f64 * r5);
            prop_assert!((exact - float).abs() <= 1e-12 * mag.max(1.0));
        }

        #[test]
        fn ordering_matches_float(x in arb_exact(), y in arb_exact()) {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x.partial_cmp(&y), fx.partial_cmp(&fy));
            }
        }
    }
}
