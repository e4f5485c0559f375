//! Which cevian triples form triangles.
//!
//! A triangle with sides congruent and parallel to `AA_ρ`, `BB_σ`, `CC_τ`
//! exists iff `AA_ρ ± BB_σ ± CC_τ = 0` for one of the four sign choices.
//! Writing `a + b + c = 0` for the side vectors and comparing coefficients of
//! the independent vectors `a`, `b` gives one line in parameter space per
//! sign choice:
//!
//! | signs  | family | triple                 |
//! |--------|--------|------------------------|
//! | (+, +) | D      | `(ξ, ξ, ξ)`            |
//! | (+, −) | F      | `(−ξ, 2−ξ, ξ)`         |
//! | (−, +) | E      | `(2−ξ, ξ, −ξ)`         |
//! | (−, −) | G      | `(ξ, −ξ, 2−ξ)`         |
//!
//! On E, F and G the values `ξ ∈ {φ, −φ⁻¹}` give parallel cevians and a
//! degenerate triangle. Triples outside the four lines can still form a
//! (non-parallel) triangle when the three cevians are mutually parallel with
//! `ξ` in one of three golden-ratio intervals.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::calculus::{ceva_value, CevianTriple};
use crate::error::{Error, Result};
use crate::poly::{Factorization, Polynomial};
use crate::scalar::{is_golden_excluded, QuadExt5, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

/// The two signs in `AA_ρ ±₁ BB_σ ±₂ CC_τ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignChoice {
    pub first: Sign,
    pub second: Sign,
}

impl SignChoice {
    pub const PLUS_PLUS: SignChoice = SignChoice { first: Sign::Plus, second: Sign::Plus };
    pub const PLUS_MINUS: SignChoice = SignChoice { first: Sign::Plus, second: Sign::Minus };
    pub const MINUS_PLUS: SignChoice = SignChoice { first: Sign::Minus, second: Sign::Plus };
    pub const MINUS_MINUS: SignChoice = SignChoice { first: Sign::Minus, second: Sign::Minus };
    pub const ALL: [SignChoice; 4] =
        [SignChoice::PLUS_PLUS, SignChoice::PLUS_MINUS, SignChoice::MINUS_PLUS, SignChoice::MINUS_MINUS];
}

impl fmt::Display for SignChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: Sign| if s.is_plus() { '+' } else { '-' };
        write!(f, "({},{})", c(self.first), c(self.second))
    }
}

/// The four one-parameter families of triangle-forming triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::D, Family::E, Family::F, Family::G];
    pub const OUTER: [Family; 3] = [Family::E, Family::F, Family::G];

    pub fn sign_choice(self) -> SignChoice {
        match self {
            Family::D => SignChoice::PLUS_PLUS,
            Family::E => SignChoice::MINUS_PLUS,
            Family::F => SignChoice::PLUS_MINUS,
            Family::G => SignChoice::MINUS_MINUS,
        }
    }

    /// Each coordinate as `c0 + c1·ξ`.
    pub fn linear_forms(self) -> [(i64, i64); 3] {
        match self {
            Family::D => [(0, 1), (0, 1), (0, 1)],
            Family::E => [(2, -1), (0, 1), (0, -1)],
            Family::F => [(0, -1), (2, -1), (0, 1)],
            Family::G => [(0, 1), (0, -1), (2, -1)],
        }
    }

    pub fn triple(self, xi: &Scalar) -> CevianTriple {
        let [r, s, t] = self.linear_forms().map(|(c0, c1)| Scalar::int(c0) + Scalar::int(c1) * xi);
        CevianTriple::new(r, s, t)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        }
    }
}

/// The family whose line solves the vector equation for `s`.
pub fn family_parameterization(s: SignChoice) -> Family {
    Family::ALL.into_iter().find(|f| f.sign_choice() == s).expect("every sign choice has a family")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    D,
    E,
    F,
    G,
    Parallel,
    None,
}

impl From<Family> for FamilyKind {
    fn from(f: Family) -> Self {
        match f {
            Family::D => FamilyKind::D,
            Family::E => FamilyKind::E,
            Family::F => FamilyKind::F,
            Family::G => FamilyKind::G,
        }
    }
}

impl FamilyKind {
    pub fn family(self) -> Option<Family> {
        match self {
            FamilyKind::D => Some(Family::D),
            FamilyKind::E => Some(Family::E),
            FamilyKind::F => Some(Family::F),
            FamilyKind::G => Some(Family::G),
            _ => None,
        }
    }
}

/// Coefficients with `AA_ρ = λ·CC_τ` and `BB_σ = μ·CC_τ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParallelWitness {
    pub lambda: Scalar,
    pub mu: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyMembership {
    pub kind: FamilyKind,
    pub xi: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallel_witness: Option<ParallelWitness>,
}

impl FamilyMembership {
    pub fn family(family: Family, xi: Scalar) -> Self {
        FamilyMembership { kind: family.into(), xi: Some(xi), parallel_witness: None }
    }

    pub fn none() -> Self {
        FamilyMembership { kind: FamilyKind::None, xi: None, parallel_witness: None }
    }
}

/// A triple whose three cevians are parallel, with `ξ = τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParallelTriple {
    pub xi: Scalar,
    pub witness: ParallelWitness,
}

/// `ρ = 1/(1−τ)`, `σ = 1 − 1/τ` with `τ ∉ {0, 1}`.
pub fn is_parallel_triple(t: &CevianTriple) -> Option<ParallelTriple> {
    let tau = &t.tau;
    let one = Scalar::one();
    if tau.is_zero() || (tau - &one).is_zero() {
        return None;
    }
    let rho = (&one - tau).recip().ok()?;
    let sigma = &one - &tau.recip().ok()?;
    if !(rho.approx_eq(&t.rho) && sigma.approx_eq(&t.sigma)) {
        return None;
    }
    let lambda = (tau - &one).recip().ok()?;
    let mu = -tau.recip().ok()?;
    Some(ParallelTriple { xi: tau.clone(), witness: ParallelWitness { lambda, mu } })
}

fn matches_family(f: Family, t: &CevianTriple) -> Option<Scalar> {
    let xi = match f {
        Family::D | Family::G => t.rho.clone(),
        Family::E => t.sigma.clone(),
        Family::F => t.tau.clone(),
    };
    let expect = f.triple(&xi);
    let ok = expect.rho.approx_eq(&t.rho) && expect.sigma.approx_eq(&t.sigma) && expect.tau.approx_eq(&t.tau);
    ok.then_some(xi)
}

/// Tests D, E, F, G, then the parallel family.
///
/// A triple on E, F or G at a golden parameter is reported as
/// [`Error::GoldenDegenerate`].
pub fn classify_triple(t: &CevianTriple) -> Result<FamilyMembership> {
    for f in Family::ALL {
        if let Some(xi) = matches_family(f, t) {
            if f != Family::D && is_golden_excluded(&xi) {
                return Err(Error::GoldenDegenerate { family: f, xi: Box::new(xi) });
            }
            return Ok(FamilyMembership::family(f, xi));
        }
    }
    if let Some(p) = is_parallel_triple(t) {
        return Ok(FamilyMembership { kind: FamilyKind::Parallel, xi: Some(p.xi), parallel_witness: Some(p.witness) });
    }
    Ok(FamilyMembership::none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleVerdict {
    NonDegenerateTriangle,
    DegenerateTriangle,
    NotATriangleTriple,
}

/// Open intervals of `ξ` for which parallel cevians still have lengths that
/// satisfy the strict triangle inequality:
/// `(−φ, −φ⁻¹)`, `(φ⁻², φ⁻¹)`, `(φ, φ²)`.
pub fn parallel_triangle_intervals() -> [(Scalar, Scalar); 3] {
    let phi = QuadExt5::phi();
    let inv = QuadExt5::phi_inv();
    let q = Scalar::Quad;
    [(q(-phi.clone()), q(-inv.clone())), (q(&inv * &inv), q(inv)), (q(phi.clone()), q(&phi * &phi))]
}

pub fn in_parallel_triangle_intervals(xi: &Scalar) -> bool {
    parallel_triangle_intervals().iter().any(|(lo, hi)| (xi - lo).is_positive() && (hi - xi).is_positive())
}

pub fn forms_triangle(m: &FamilyMembership) -> TriangleVerdict {
    use TriangleVerdict::*;
    let Some(xi) = m.xi.as_ref() else {
        return NotATriangleTriple;
    };
    match m.kind {
        FamilyKind::D => NonDegenerateTriangle,
        FamilyKind::E | FamilyKind::F | FamilyKind::G => {
            if is_golden_excluded(xi) {
                DegenerateTriangle
            } else {
                NonDegenerateTriangle
            }
        }
        FamilyKind::Parallel => {
            if in_parallel_triangle_intervals(xi) {
                NonDegenerateTriangle
            } else {
                DegenerateTriangle
            }
        }
        FamilyKind::None => NotATriangleTriple,
    }
}

/// Ceva's condition restricted to a family line, as a polynomial in `ξ`.
pub fn ceva_restriction(f: Family) -> Polynomial {
    let [r, s, t] = f
        .linear_forms()
        .map(|(c0, c1)| Polynomial::linear(BigRational::from_integer(c0.into()), BigRational::from_integer(c1.into())));
    let one = Polynomial::from_ints(&[1]);
    let prod = &(&r * &s) * &t;
    let co = &(&(&one - &r) * &(&one - &s)) * &(&one - &t);
    &prod - &co
}

/// The factored restriction with its admissible roots.
#[derive(Clone, Debug, PartialEq)]
pub struct CevaAnalysis {
    pub family: Family,
    pub polynomial: Polynomial,
    pub factorization: Factorization,
    /// Real roots that are allowed parameters of the family, with their triples.
    pub admissible: Vec<(Scalar, CevianTriple)>,
}

pub fn ceva_analysis(f: Family) -> CevaAnalysis {
    let polynomial = ceva_restriction(f);
    let factorization = polynomial.factor();
    let admissible = factorization
        .real_roots
        .iter()
        .filter(|xi| f == Family::D || !is_golden_excluded(xi))
        .map(|xi| (xi.clone(), f.triple(xi)))
        .collect();
    CevaAnalysis { family: f, polynomial, factorization, admissible }
}

/// Concurrent triples on a family line.
pub fn ceva_intersection(f: Family) -> Vec<(Scalar, CevianTriple)> {
    let out = ceva_analysis(f).admissible;
    debug_assert!(out.iter().all(|(_, t)| ceva_value(t).is_zero()));
    out
}
