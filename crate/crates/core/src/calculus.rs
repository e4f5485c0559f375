//! Ceva's condition, the Stewart matrix, Heron's squared-area functional and
//! concurrency points of cevian triples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cevian_foot, is_on_line, line_intersection, squared_side_lengths, Point, Triangle, Vertex};
use crate::scalar::Scalar;

/// Cevian parameters: `rho` for vertex A, `sigma` for B, `tau` for C.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CevianTriple {
    pub rho: Scalar,
    pub sigma: Scalar,
    pub tau: Scalar,
}

impl CevianTriple {
    pub fn new(rho: Scalar, sigma: Scalar, tau: Scalar) -> Self {
        CevianTriple { rho, sigma, tau }
    }

    pub fn uniform(xi: Scalar) -> Self {
        CevianTriple::new(xi.clone(), xi.clone(), xi)
    }

    pub fn param(&self, v: Vertex) -> &Scalar {
        match v {
            Vertex::A => &self.rho,
            Vertex::B => &self.sigma,
            Vertex::C => &self.tau,
        }
    }
}

impl fmt::Display for CevianTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.rho, self.sigma, self.tau)
    }
}

impl FromStr for CevianTriple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.trim().split(',').map(str::parse::<Scalar>).collect::<Result<Vec<_>>>()?;
        let [rho, sigma, tau]: [Scalar; 3] =
            parts.try_into().map_err(|_| Error::Parse(format!("invalid triple '{}': expected three scalars", s)))?;
        Ok(CevianTriple::new(rho, sigma, tau))
    }
}

/// Squared side lengths `(|BC|², |CA|², |AB|²)`.
///
/// [`SquaredSides::new`] enforces realizability. Cevian-length triples that
/// may be degenerate are built with [`SquaredSides::unchecked`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquaredSides {
    pub a2: Scalar,
    pub b2: Scalar,
    pub c2: Scalar,
}

impl SquaredSides {
    pub fn new(a2: Scalar, b2: Scalar, c2: Scalar) -> Result<Self> {
        let s = SquaredSides::unchecked(a2, b2, c2);
        if !s.is_realizable() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(s)
    }

    pub fn unchecked(a2: Scalar, b2: Scalar, c2: Scalar) -> Self {
        SquaredSides { a2, b2, c2 }
    }

    pub fn of_triangle(t: &Triangle) -> Self {
        let [a2, b2, c2] = squared_side_lengths(t);
        SquaredSides { a2, b2, c2 }
    }

    /// Positive entries satisfying the strict triangle inequality.
    pub fn is_realizable(&self) -> bool {
        self.a2.is_positive()
            && self.b2.is_positive()
            && self.c2.is_positive()
            && heron_squared_area(self).is_positive()
            && !heron_squared_area(self).is_zero()
    }

    pub fn as_array(&self) -> [Scalar; 3] {
        [self.a2.clone(), self.b2.clone(), self.c2.clone()]
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        SquaredSides::unchecked(&self.a2 * k, &self.b2 * k, &self.c2 * k)
    }

    pub fn approx_eq(&self, other: &SquaredSides) -> bool {
        self.a2.approx_eq(&other.a2) && self.b2.approx_eq(&other.b2) && self.c2.approx_eq(&other.c2)
    }
}

/// 3×3 matrix of scalars, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix3 {
    pub rows: [[Scalar; 3]; 3],
}

/// The matrix taking `(a², b², c²)` to `(CC_τ², BB_σ², AA_ρ²)`.
pub type StewartMatrix = Matrix3;

impl Matrix3 {
    pub fn new(rows: [[Scalar; 3]; 3]) -> Self {
        Matrix3 { rows }
    }

    pub fn scalar_identity(k: &Scalar) -> Self {
        let z = Scalar::zero;
        Matrix3::new([[k.clone(), z(), z()], [z(), k.clone(), z()], [z(), z(), k.clone()]])
    }

    pub fn mul(&self, other: &Matrix3) -> Matrix3 {
        let entry =
            |i: usize, j: usize| (0..3).fold(Scalar::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j]);
        Matrix3::new([
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ])
    }

    pub fn mul_vec(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        let row = |i: usize| (0..3).fold(Scalar::zero(), |acc, k| acc + &self.rows[i][k] * &v[k]);
        [row(0), row(1), row(2)]
    }

    pub fn approx_eq(&self, other: &Matrix3) -> bool {
        self.rows.iter().flatten().zip(other.rows.iter().flatten()).all(|(x, y)| x.approx_eq(y))
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2])).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `ρστ − (1−ρ)(1−σ)(1−τ)`; zero exactly when the cevian lines are concurrent.
pub fn ceva_value(t: &CevianTriple) -> Scalar {
    let one = Scalar::one();
    let prod = &t.rho * &t.sigma * &t.tau;
    let co = (&one - &t.rho) * (&one - &t.sigma) * (&one - &t.tau);
    prod - co
}

/// Rows `[τ, 1−τ, τ(τ−1)]`, `[1−σ, σ(σ−1), σ]`, `[ρ(ρ−1), ρ, 1−ρ]`.
pub fn stewart_matrix(t: &CevianTriple) -> StewartMatrix {
    let one = Scalar::one();
    let (r, s, u) = (&t.rho, &t.sigma, &t.tau);
    Matrix3::new([
        [u.clone(), &one - u, u * (u - &one)],
        [&one - s, s * (s - &one), s.clone()],
        [r * (r - &one), r.clone(), &one - r],
    ])
}

/// Squared cevian lengths `(CC_τ², BB_σ², AA_ρ²)` by Stewart's theorem.
pub fn squared_cevian_lengths(t: &CevianTriple, s: &SquaredSides) -> (Scalar, Scalar, Scalar) {
    let [cc2, bb2, aa2] = stewart_matrix(t).mul_vec(&s.as_array());
    (cc2, bb2, aa2)
}

/// The cevian squared lengths read as the squared sides of the triangle they
/// form, in the same `(a², b², c²)` order as the Stewart output.
pub fn cevian_squared_sides(t: &CevianTriple, s: &SquaredSides) -> SquaredSides {
    let (cc2, bb2, aa2) = squared_cevian_lengths(t, s);
    SquaredSides::unchecked(cc2, bb2, aa2)
}

/// Heron's formula for the squared area in terms of squared sides:
/// `(2(a²b² + b²c² + c²a²) − (a⁴ + b⁴ + c⁴)) / 16`.
///
/// Non-realizable inputs give zero or a negative value.
pub fn heron_squared_area(s: &SquaredSides) -> Scalar {
    let (a, b, c) = (&s.a2, &s.b2, &s.c2);
    let pairs = a * b + b * c + c * a;
    let quads = a.square() + b.square() + c.square();
    let v = &Scalar::int(2) * &pairs - quads;
    v.checked_div(&Scalar::int(16)).unwrap()
}

/// Common point of three concurrent cevian lines.
///
/// `ratios[i] = λ` with `point = vertex + λ·(foot − vertex)`, i.e. the point
/// divides the cevian as `λ : (1 − λ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcurrencyResult {
    pub point: Point,
    pub ratios: [Scalar; 3],
}

pub fn concurrency_point(tri: &Triangle, t: &CevianTriple) -> Result<ConcurrencyResult> {
    let value = ceva_value(t);
    if !value.is_zero() {
        return Err(Error::NotConcurrent(Box::new(value)));
    }
    let feet: Vec<Point> = Vertex::ALL.iter().map(|&v| cevian_foot(tri, v, t.param(v))).collect();
    let ends = |i: usize| (tri.vertices()[i].clone(), feet[i].clone());
    let lines = [ends(0), ends(1), ends(2)];
    for i in 0..3 {
        let j = (i + 1) % 3;
        if tri.vertices()[i].to(&feet[i]).cross(&tri.vertices()[j].to(&feet[j])).is_zero() {
            return Err(Error::ParallelLines);
        }
    }
    let point = line_intersection(&lines[0].0, &lines[0].1, &lines[1].0, &lines[1].1)?;
    if !is_on_line(&point, &lines[2].0, &lines[2].1) {
        // unreachable for triples on the Ceva surface
        return Err(Error::NotConcurrent(Box::new(value)));
    }
    let ratio = |i: usize| -> Result<Scalar> {
        let (v, f) = &lines[i];
        let d = v.to(f);
        v.to(&point).dot(&d).checked_div(&d.norm_squared())
    };
    let ratios = [ratio(0)?, ratio(1)?, ratio(2)?];
    Ok(ConcurrencyResult { point, ratios })
}
