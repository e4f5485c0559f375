//! Planar points, vectors, triangles and cevians, plus the coordinate oracle
//! that the symbolic results in [`crate::calculus`] are checked against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::calculus::CevianTriple;
use crate::error::{Error, Result};
use crate::families::SignChoice;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    pub dx: Scalar,
    pub dy: Scalar,
}

impl Point {
    pub fn new(x: impl Into<Scalar>, y: impl Into<Scalar>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Point::new(0, 0)
    }

    pub fn to(&self, other: &Point) -> Vector {
        Vector::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn translate(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.dx, &self.y + &v.dy)
    }

    pub fn approx_eq(&self, other: &Point) -> bool {
        self.x.approx_eq(&other.x) && self.y.approx_eq(&other.y)
    }
}

impl Vector {
    pub fn new(dx: impl Into<Scalar>, dy: impl Into<Scalar>) -> Self {
        Vector { dx: dx.into(), dy: dy.into() }
    }

    pub fn zero() -> Self {
        Vector::new(0, 0)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(&self.dx + &other.dx, &self.dy + &other.dy)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector::new(&self.dx - &other.dx, &self.dy - &other.dy)
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector::new(&self.dx * k, &self.dy * k)
    }

    pub fn neg(&self) -> Vector {
        Vector::new(-&self.dx, -&self.dy)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        &self.dx * &other.dx + &self.dy * &other.dy
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Vector) -> Scalar {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn norm_squared(&self) -> Scalar {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn label(self) -> &'static str {
        match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        }
    }
}

/// Three non-collinear points `A`, `B`, `C`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[Point; 3]", into = "[Point; 3]")]
pub struct Triangle {
    vertices: [Point; 3],
}

impl TryFrom<[Point; 3]> for Triangle {
    type Error = Error;
    fn try_from(v: [Point; 3]) -> Result<Self> {
        let [a, b, c] = v;
        Triangle::new(a, b, c)
    }
}

impl From<Triangle> for [Point; 3] {
    fn from(t: Triangle) -> Self {
        t.vertices
    }
}

/// Twice the signed area of `pqr`.
pub fn twice_signed_area(p: &Point, q: &Point, r: &Point) -> Scalar {
    p.to(q).cross(&p.to(r))
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if twice_signed_area(&a, &b, &c).is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle { vertices: [a, b, c] })
    }

    /// The 3-4-5 right triangle `A = (0,3)`, `B = (0,0)`, `C = (4,0)`.
    pub fn right_345() -> Self {
        Triangle::new(Point::new(0, 3), Point::new(0, 0), Point::new(4, 0)).unwrap()
    }

    pub fn a(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn b(&self) -> &Point {
        &self.vertices[1]
    }

    pub fn c(&self) -> &Point {
        &self.vertices[2]
    }

    pub fn vertex(&self, v: Vertex) -> &Point {
        match v {
            Vertex::A => self.a(),
            Vertex::B => self.b(),
            Vertex::C => self.c(),
        }
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.vertices
    }

    pub fn twice_signed_area(&self) -> Scalar {
        twice_signed_area(self.a(), self.b(), self.c())
    }

    pub fn centroid(&self) -> Point {
        let three = Scalar::int(3);
        let sx = self.a().x.clone() + &self.b().x + &self.c().x;
        let sy = self.a().y.clone() + &self.b().y + &self.c().y;
        Point::new(sx.checked_div(&three).unwrap(), sy.checked_div(&three).unwrap())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Display for Triangle {
    /// `Ax,Ay;Bx,By;Cx,Cy`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.a(), self.b(), self.c())
    }
}

impl FromStr for Point {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s.split_once(',').ok_or_else(|| Error::Parse(format!("invalid point '{}': expected x,y", s)))?;
        Ok(Point::new(x.parse::<Scalar>()?, y.parse::<Scalar>()?))
    }
}

impl FromStr for Triangle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let points = s.trim().split(';').map(str::parse::<Point>).collect::<Result<Vec<_>>>()?;
        let [a, b, c]: [Point; 3] =
            points.try_into().map_err(|_| Error::Parse(format!("invalid triangle '{}': expected three points", s)))?;
        Triangle::new(a, b, c)
    }
}

/// Side vectors `a = C − B`, `b = A − C`, `c = B − A`; they sum to zero.
pub fn side_vectors(t: &Triangle) -> (Vector, Vector, Vector) {
    (t.b().to(t.c()), t.c().to(t.a()), t.a().to(t.b()))
}

/// The foot of the cevian from `vertex` with parameter `param`.
///
/// Each foot is measured along the opposite side from the next vertex in the
/// cycle A → B → C → A: `A_ρ = B + ρ(C − B)`, `B_σ = C + σ(A − C)`,
/// `C_τ = A + τ(B − A)`.
pub fn cevian_foot(t: &Triangle, vertex: Vertex, param: &Scalar) -> Point {
    let (from, to) = match vertex {
        Vertex::A => (t.b(), t.c()),
        Vertex::B => (t.c(), t.a()),
        Vertex::C => (t.a(), t.b()),
    };
    from.translate(&from.to(to).scale(param))
}

/// Vector from `vertex` to its cevian foot.
pub fn cevian_vector(t: &Triangle, vertex: Vertex, param: &Scalar) -> Vector {
    t.vertex(vertex).to(&cevian_foot(t, vertex, param))
}

/// Same vector as [`cevian_vector`] via the side-vector closed forms
/// `c + ρa`, `a + σb`, `b + τc`.
pub fn cevian_vector_closed_form(t: &Triangle, vertex: Vertex, param: &Scalar) -> Vector {
    let (a, b, c) = side_vectors(t);
    match vertex {
        Vertex::A => c.add(&a.scale(param)),
        Vertex::B => a.add(&b.scale(param)),
        Vertex::C => b.add(&c.scale(param)),
    }
}

pub fn squared_distance(p: &Point, q: &Point) -> Scalar {
    p.to(q).norm_squared()
}

/// Squared area from coordinates, `(cross / 2)²`. Zero for collinear points.
pub fn squared_area_of_points(p: &Point, q: &Point, r: &Point) -> Scalar {
    let s = twice_signed_area(p, q, r).square();
    s.checked_div(&Scalar::int(4)).unwrap()
}

pub fn heron_squared_area_from_points(t: &Triangle) -> Scalar {
    squared_area_of_points(t.a(), t.b(), t.c())
}

/// Intersection of line `p1p2` with line `q1q2`.
pub fn line_intersection(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Result<Point> {
    let d = p1.to(p2);
    let e = q1.to(q2);
    let denom = d.cross(&e);
    if denom.is_zero() {
        return Err(Error::ParallelLines);
    }
    // p1 + t·d lies on q1q2 when (p1 + t·d − q1) × e = 0
    let t = p1.to(q1).cross(&e).checked_div(&denom)?;
    Ok(p1.translate(&d.scale(&t)))
}

/// True if `p` lies on the line through `q1` and `q2`.
pub fn is_on_line(p: &Point, q1: &Point, q2: &Point) -> bool {
    twice_signed_area(q1, q2, p).is_zero()
}

/// Chains the three cevian vectors head to tail from the origin using the
/// signs of `AA_ρ ± BB_σ ± CC_τ = 0`.
///
/// With `u = AA_ρ`, `v = ±BB_σ` the chain visits `O`, `O + u`, `O + u + v`.
/// Vertices are labelled so that side lengths line up with the row order of
/// the Stewart matrix: `B' = O`, `A' = O + u`, `C' = O + u + v`, hence
/// `|B'C'| = |CC_τ|`, `|C'A'| = |BB_σ|` and `|A'B'| = |AA_ρ|`.
pub fn oracle_cevian_triangle(t: &Triangle, triple: &CevianTriple, signs: SignChoice) -> Result<Triangle> {
    oracle_cevian_triangle_at(t, triple, signs, &Point::origin())
}

/// [`oracle_cevian_triangle`] with the chain starting at `start` instead of the origin.
pub fn oracle_cevian_triangle_at(
    t: &Triangle,
    triple: &CevianTriple,
    signs: SignChoice,
    start: &Point,
) -> Result<Triangle> {
    let u = cevian_vector(t, Vertex::A, &triple.rho);
    let v = cevian_vector(t, Vertex::B, &triple.sigma);
    let w = cevian_vector(t, Vertex::C, &triple.tau);
    let v = if signs.first.is_plus() { v } else { v.neg() };
    let w = if signs.second.is_plus() { w } else { w.neg() };
    if !u.add(&v).add(&w).is_zero() {
        return Err(Error::NonClosingChain);
    }
    let p1 = start.translate(&u);
    let p2 = p1.translate(&v);
    Triangle::new(p1, start.clone(), p2).map_err(|_| Error::DegenerateChain)
}

/// Squared side lengths `(|BC|², |CA|², |AB|²)`.
pub fn squared_side_lengths(t: &Triangle) -> [Scalar; 3] {
    [squared_distance(t.b(), t.c()), squared_distance(t.c(), t.a()), squared_distance(t.a(), t.b())]
}
