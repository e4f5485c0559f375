//! ξ-median and ξ-outer median triangles, their area ratios and the
//! iterated-similarity matrix identities.
//!
//! Similarity is checked on squared-side vectors: if `M·M = k²·I` then
//! applying the construction twice scales every squared side by `k²`, and
//! the result is similar to the original triangle by SSS.

use serde::{Deserialize, Serialize};

use crate::calculus::{
    cevian_squared_sides, concurrency_point, heron_squared_area, stewart_matrix, CevianTriple, Matrix3, SquaredSides,
    StewartMatrix,
};
use crate::error::{Error, Result};
use crate::families::{classify_triple, Family, FamilyMembership};
use crate::geometry::{oracle_cevian_triangle, squared_side_lengths, Point, Triangle};
use crate::scalar::{is_golden_excluded, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MedianTriangleReport {
    pub family: FamilyMembership,
    pub triple: CevianTriple,
    pub cevian_squared_lengths: SquaredSides,
    pub squared_area_ratio: Scalar,
    pub realized_triangle: Option<Triangle>,
}

/// `1 − ξ + ξ²`.
pub fn median_ratio(xi: &Scalar) -> Scalar {
    Scalar::one() - xi + xi.square()
}

/// `1 + ξ − ξ²`, before taking the absolute value.
pub fn outer_ratio(xi: &Scalar) -> Scalar {
    Scalar::one() + xi - xi.square()
}

fn report(t: &Triangle, family: Family, xi: &Scalar) -> Result<MedianTriangleReport> {
    let triple = family.triple(xi);
    let membership = match classify_triple(&triple) {
        Ok(m) => m,
        Err(Error::GoldenDegenerate { .. }) => FamilyMembership::family(family, xi.clone()),
        Err(e) => return Err(e),
    };
    let base = SquaredSides::of_triangle(t);
    let lengths = cevian_squared_sides(&triple, &base);
    let ratio = heron_squared_area(&lengths).checked_div(&heron_squared_area(&base))?;
    let realized = oracle_cevian_triangle(t, &triple, family.sign_choice()).ok();
    Ok(MedianTriangleReport {
        family: membership,
        triple,
        cevian_squared_lengths: lengths,
        squared_area_ratio: ratio,
        realized_triangle: realized,
    })
}

/// The triangle formed by the cevians `(ξ, ξ, ξ)`.
pub fn xi_median_triangle(t: &Triangle, xi: &Scalar) -> Result<MedianTriangleReport> {
    report(t, Family::D, xi)
}

/// Reports for the E, F and G triples at `ξ`, in that order.
pub fn xi_outer_median_triangles(t: &Triangle, xi: &Scalar) -> Result<[MedianTriangleReport; 3]> {
    if is_golden_excluded(xi) {
        return Err(Error::GoldenDegenerate { family: Family::E, xi: Box::new(xi.clone()) });
    }
    Ok([report(t, Family::E, xi)?, report(t, Family::F, xi)?, report(t, Family::G, xi)?])
}

/// Area ratio (not squared): `1 − ξ + ξ²` for D, `|1 + ξ − ξ²|` otherwise.
pub fn area_ratio_formula(family: Family, xi: &Scalar) -> Result<Scalar> {
    match family {
        Family::D => Ok(median_ratio(xi)),
        _ if is_golden_excluded(xi) => Err(Error::GoldenDegenerate { family, xi: Box::new(xi.clone()) }),
        _ => Ok(outer_ratio(xi).abs()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimilarityCheck {
    pub product: StewartMatrix,
    pub expected_scalar: Scalar,
    pub holds: bool,
}

/// The matrix whose product with the squared sides gives the iterated
/// construction, and the factors in multiplication order.
pub fn similarity_factors(family: Family, xi: &Scalar) -> (Matrix3, Matrix3) {
    let m = |f: Family| stewart_matrix(&f.triple(xi));
    match family {
        Family::D => (m(Family::D), m(Family::D)),
        Family::E => (m(Family::E), m(Family::E)),
        // an F triangle's G triangle, and a G triangle's F triangle
        Family::F => (m(Family::G), m(Family::F)),
        Family::G => (m(Family::F), m(Family::G)),
    }
}

/// Checks `M(ξ,ξ,ξ)² = (1−ξ+ξ²)²I`, `M(2−ξ,ξ,−ξ)² = (1+ξ−ξ²)²I`,
/// `M(ξ,−ξ,2−ξ)·M(−ξ,2−ξ,ξ) = (1+ξ−ξ²)²I` and the reversed product.
pub fn similarity_identity_check(family: Family, xi: &Scalar) -> SimilarityCheck {
    let (left, right) = similarity_factors(family, xi);
    let product = left.mul(&right);
    let k = match family {
        Family::D => median_ratio(xi),
        _ => outer_ratio(xi),
    };
    let expected_scalar = k.square();
    let holds = product.approx_eq(&Matrix3::scalar_identity(&expected_scalar));
    SimilarityCheck { product, expected_scalar, holds }
}

/// Expected constants for the classical checks at `ξ = 1/2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExpectedConstants {
    /// Position of the centroid along each median, from the vertex.
    pub centroid_division: Scalar,
    /// Position of the outer concurrency point along each outer median.
    pub outer_division: Scalar,
    pub median_area_ratio: Scalar,
    pub outer_area_ratio: Scalar,
    /// The unique concurrent parameter on each family line.
    pub concurrent_xi: Scalar,
}

impl Default for ExpectedConstants {
    fn default() -> Self {
        ExpectedConstants {
            centroid_division: Scalar::ratio(2, 3),
            outer_division: Scalar::ratio(2, 5),
            median_area_ratio: Scalar::ratio(3, 4),
            outer_area_ratio: Scalar::ratio(5, 4),
            concurrent_xi: Scalar::ratio(1, 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<(String, Scalar)>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        CheckResult { name: name.into(), passed, witnesses: Vec::new() }
    }

    pub fn witness(mut self, key: impl Into<String>, value: Scalar) -> Self {
        self.witnesses.push((key.into(), value));
        self
    }

    fn point(self, key: &str, p: &Point) -> Self {
        self.witness(format!("{}.x", key), p.x.clone()).witness(format!("{}.y", key), p.y.clone())
    }
}

/// Squared sides of the triangle realized by chaining cevians, with the
/// vertex labelling that matches Stewart row order.
fn realized_sides(t: &Triangle, family: Family, xi: &Scalar) -> Option<(Triangle, SquaredSides)> {
    let r = oracle_cevian_triangle(t, &family.triple(xi), family.sign_choice()).ok()?;
    let [a2, b2, c2] = squared_side_lengths(&r);
    Some((r, SquaredSides::unchecked(a2, b2, c2)))
}

/// Builds the `second` construction on the realized `first` triangle and
/// compares its squared sides against `k²` times those of `t`, entry by entry.
fn iterated_similarity(t: &Triangle, first: Family, second: Family, xi: &Scalar, k2: &Scalar) -> bool {
    let Some((once, _)) = realized_sides(t, first, xi) else {
        return false;
    };
    let Some((_, twice)) = realized_sides(&once, second, xi) else {
        return false;
    };
    twice.approx_eq(&SquaredSides::of_triangle(t).scale(k2))
}

/// Runs the eight classical median and outer-median checks on `t`.
pub fn classical_properties_suite(t: &Triangle) -> Vec<CheckResult> {
    classical_properties_suite_with(t, &ExpectedConstants::default())
}

pub fn classical_properties_suite_with(t: &Triangle, expected: &ExpectedConstants) -> Vec<CheckResult> {
    let half = Scalar::ratio(1, 2);
    let base = SquaredSides::of_triangle(t);
    let base_area = heron_squared_area(&base);
    let mut out = Vec::with_capacity(8);

    // (a) centroid divides medians 2:1
    let medians = CevianTriple::uniform(half.clone());
    out.push(match concurrency_point(t, &medians) {
        Ok(r) => {
            let passed =
                r.ratios.iter().all(|l| l.approx_eq(&expected.centroid_division)) && r.point.approx_eq(&t.centroid());
            let mut c = CheckResult::new("medians_concurrent_2_1", passed).point("centroid", &r.point);
            for (v, l) in ["A", "B", "C"].iter().zip(r.ratios.iter()) {
                c = c.witness(format!("lambda.{}", v), l.clone());
            }
            c
        }
        Err(_) => CheckResult::new("medians_concurrent_2_1", false),
    });

    // (b) medians form a triangle
    let med = realized_sides(t, Family::D, &half);
    let med_lengths = cevian_squared_sides(&medians, &base);
    out.push(
        CheckResult::new(
            "median_triangle_exists",
            med.as_ref().is_some_and(|(_, s)| s.approx_eq(&med_lengths) && s.is_realizable()),
        )
        .witness("heron", heron_squared_area(&med_lengths)),
    );

    // (c) area ratio 3/4
    let ratio = heron_squared_area(&med_lengths).checked_div(&base_area).unwrap_or(Scalar::zero());
    out.push(
        CheckResult::new("median_area_ratio", ratio.approx_eq(&expected.median_area_ratio.square()))
            .witness("squared_ratio", ratio),
    );

    // (d) median triangle of the median triangle ~ ABC with ratio 3/4
    let k2 = expected.median_area_ratio.square();
    let sim = similarity_identity_check(Family::D, &half);
    let passed =
        sim.expected_scalar.approx_eq(&k2) && sim.holds && iterated_similarity(t, Family::D, Family::D, &half, &k2);
    out.push(CheckResult::new("median_similarity", passed).witness("k_squared", sim.expected_scalar));

    // (A) outer triples concurrent, outer medians divided 2:3
    let mut passed = true;
    let mut check = CheckResult::new("outer_medians_concurrent_2_3", true);
    for f in Family::OUTER {
        let triple = f.triple(&half);
        match concurrency_point(t, &triple) {
            Ok(r) => {
                check = check.point(&format!("{}.point", f.name()), &r.point);
                for (i, l) in r.ratios.iter().enumerate() {
                    let is_outer = !triple.param(crate::geometry::Vertex::ALL[i]).approx_eq(&half);
                    if is_outer {
                        passed &= l.approx_eq(&expected.outer_division);
                        check = check.witness(format!("{}.lambda.{}", f.name(), ["A", "B", "C"][i]), l.clone());
                    }
                }
            }
            Err(_) => passed = false,
        }
    }
    check.passed = passed;
    out.push(check);

    // (B) three outer median triangles exist
    let mut passed = true;
    let mut check = CheckResult::new("outer_median_triangles_exist", true);
    for f in Family::OUTER {
        let lengths = cevian_squared_sides(&f.triple(&half), &base);
        let realized = realized_sides(t, f, &half);
        passed &= realized.is_some_and(|(_, s)| s.approx_eq(&lengths) && s.is_realizable());
        check = check.witness(format!("{}.heron", f.name()), heron_squared_area(&lengths));
    }
    check.passed = passed;
    out.push(check);

    // (C) area ratio 5/4
    let mut passed = true;
    let mut check = CheckResult::new("outer_area_ratio", true);
    for f in Family::OUTER {
        let lengths = cevian_squared_sides(&f.triple(&half), &base);
        let ratio = heron_squared_area(&lengths).checked_div(&base_area).unwrap_or(Scalar::zero());
        passed &= ratio.approx_eq(&expected.outer_area_ratio.square());
        check = check.witness(format!("{}.squared_ratio", f.name()), ratio);
    }
    check.passed = passed;
    out.push(check);

    // (D) an outer median triangle of each outer median triangle ~ ABC, ratio 5/4
    let k2 = expected.outer_area_ratio.square();
    let mut passed = true;
    let mut check = CheckResult::new("outer_similarity", true);
    for (first, second) in [(Family::E, Family::E), (Family::F, Family::G), (Family::G, Family::F)] {
        let sim = similarity_identity_check(first, &half);
        passed &= sim.holds && sim.expected_scalar.approx_eq(&k2);
        passed &= iterated_similarity(t, first, second, &half, &k2);
        check = check.witness(format!("{}.k_squared", first.name()), sim.expected_scalar);
    }
    check.passed = passed;
    out.push(check);

    out
}

/// Checks for the ξ-median and ξ-outer median triangles at an arbitrary `ξ`.
pub fn xi_suite(t: &Triangle, xi: &Scalar) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let d = xi_median_triangle(t, xi)?;
    let expected = area_ratio_formula(Family::D, xi)?;
    out.push(xi_report_check("xi_median_area_ratio", &d, &expected));
    out.push(oracle_check("xi_median_oracle", &d));
    if is_golden_excluded(xi) {
        out.push(CheckResult::new("xi_outer_golden_degenerate", true).witness("xi", xi.clone()));
        for f in Family::OUTER {
            let lengths = cevian_squared_sides(&f.triple(xi), &SquaredSides::of_triangle(t));
            let heron = heron_squared_area(&lengths);
            out.push(CheckResult::new(format!("xi_outer_{}_flat", f.name()), heron.is_zero()).witness("heron", heron));
        }
        return Ok(out);
    }
    let expected = area_ratio_formula(Family::E, xi)?;
    for (f, r) in Family::OUTER.iter().zip(xi_outer_median_triangles(t, xi)?.iter()) {
        out.push(xi_report_check(&format!("xi_outer_{}_area_ratio", f.name()), r, &expected));
        out.push(oracle_check(&format!("xi_outer_{}_oracle", f.name()), r));
    }
    Ok(out)
}

fn xi_report_check(name: &str, r: &MedianTriangleReport, expected_ratio: &Scalar) -> CheckResult {
    let expected = expected_ratio.square();
    CheckResult::new(name, r.squared_area_ratio.approx_eq(&expected))
        .witness("squared_ratio", r.squared_area_ratio.clone())
        .witness("expected", expected)
        .witness("area_ratio", expected_ratio.clone())
}

fn oracle_check(name: &str, r: &MedianTriangleReport) -> CheckResult {
    let passed = r
        .realized_triangle
        .as_ref()
        .is_some_and(|tri| SquaredSides::of_triangle(tri).approx_eq(&r.cevian_squared_lengths));
    CheckResult::new(name, passed)
}

/// Matrix identities for all four families at `ξ`, including `G·F`.
pub fn identities_suite(xi: &Scalar) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = Family::ALL
        .iter()
        .map(|&f| {
            let c = similarity_identity_check(f, xi);
            CheckResult::new(format!("identity_{}", f.name()), c.holds).witness("k_squared", c.expected_scalar)
        })
        .collect();
    let (g, f) = similarity_factors(Family::G, xi);
    let commute = g.mul(&f).approx_eq(&f.mul(&g));
    out.push(CheckResult::new("identity_FG_commute", commute));
    out
}
