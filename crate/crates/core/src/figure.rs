//! SVG figures of cevians, concurrency points and cevian triangles.
//!
//! All geometry is computed exactly; coordinates are converted to `f64` once,
//! when mapped onto the canvas.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::calculus::{concurrency_point, CevianTriple};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::geometry::{cevian_foot, oracle_cevian_triangle_at, Point, Triangle, Vertex};
use crate::scalar::{is_golden_excluded, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FigureKind {
    /// Three medians and six outer medians with their concurrency points.
    MedianGrid,
    /// The three outer median triangles.
    OuterMedianTriangles,
    /// The ξ-median triangle.
    XiMedian,
    /// The three ξ-outer median triangles.
    XiOuterMedian,
    /// Median triangle and its own median triangle.
    MedianTriangleProof,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureSpec {
    pub kind: FigureKind,
    pub triangle: Triangle,
    pub xi: Scalar,
    pub width: f64,
    pub height: f64,
}

impl FigureSpec {
    pub fn new(kind: FigureKind, triangle: Triangle, xi: Scalar) -> Self {
        FigureSpec { kind, triangle, xi, width: 800.0, height: 600.0 }
    }

    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(self.width) || !ok(self.height) {
            return Err(Error::InvalidCanvas(format!("{}x{}", self.width, self.height)));
        }
        Ok(())
    }
}

struct Cevian {
    vertex: Vertex,
    param: Scalar,
}

#[derive(Default)]
struct Scene {
    cevians: Vec<(Point, Point, String)>,
    feet: Vec<(Point, String)>,
    triangles: Vec<(Triangle, String)>,
    concurrency: Vec<(Point, String)>,
    centroid: Option<Point>,
    /// Extended side lines, drawn when feet fall outside the sides.
    side_lines: Vec<(Point, Point)>,
}

/// Foot label in the plain-text subscript style `A_1/2`.
fn foot_label(v: Vertex, param: &Scalar) -> String {
    format!("{}_{}", v.label(), param)
}

impl Scene {
    fn add_cevians(&mut self, t: &Triangle, cevians: &[Cevian]) {
        for c in cevians {
            let foot = cevian_foot(t, c.vertex, &c.param);
            let label = foot_label(c.vertex, &c.param);
            if !self.feet.iter().any(|(p, _)| *p == foot) {
                self.feet.push((foot.clone(), label.clone()));
            }
            self.cevians.push((t.vertex(c.vertex).clone(), foot, format!("{}{}", c.vertex.label(), label)));
        }
    }

    fn add_family(&mut self, t: &Triangle, f: Family, xi: &Scalar) {
        let triple = f.triple(xi);
        let cevians: Vec<Cevian> =
            Vertex::ALL.iter().map(|&v| Cevian { vertex: v, param: triple.param(v).clone() }).collect();
        self.add_cevians(t, &cevians);
    }

    fn add_triangle(&mut self, t: &Triangle, f: Family, xi: &Scalar) -> Result<Triangle> {
        let tri = oracle_cevian_triangle_at(t, &f.triple(xi), f.sign_choice(), t.a())?;
        self.triangles.push((tri.clone(), f.name().to_string()));
        Ok(tri)
    }

    fn points(&self, base: &Triangle) -> Vec<Point> {
        let mut out: Vec<Point> = base.vertices().to_vec();
        out.extend(self.cevians.iter().flat_map(|(a, b, _)| [a.clone(), b.clone()]));
        out.extend(self.triangles.iter().flat_map(|(t, _)| t.vertices().to_vec()));
        out.extend(self.concurrency.iter().map(|(p, _)| p.clone()));
        out.extend(self.side_lines.iter().flat_map(|(a, b)| [a.clone(), b.clone()]));
        out
    }
}

fn build_scene(spec: &FigureSpec) -> Result<Scene> {
    let t = &spec.triangle;
    let half = Scalar::ratio(1, 2);
    let mut scene = Scene::default();
    let extend = |scene: &mut Scene, lo: &Scalar, hi: &Scalar| {
        for v in Vertex::ALL {
            scene.side_lines.push((cevian_foot(t, v, lo), cevian_foot(t, v, hi)));
        }
    };
    match spec.kind {
        FigureKind::MedianGrid => {
            extend(&mut scene, &Scalar::ratio(-1, 2), &Scalar::ratio(3, 2));
            let params = [Scalar::ratio(-1, 2), half.clone(), Scalar::ratio(3, 2)];
            let cevians: Vec<Cevian> = Vertex::ALL
                .iter()
                .flat_map(|&v| params.iter().map(move |p| Cevian { vertex: v, param: p.clone() }))
                .collect();
            scene.add_cevians(t, &cevians);
            scene.centroid = Some(concurrency_point(t, &CevianTriple::uniform(half.clone()))?.point);
            for (f, label) in Family::OUTER.iter().zip(["G_a", "G_b", "G_c"]) {
                let p = concurrency_point(t, &f.triple(&half))?.point;
                scene.concurrency.push((p, label.to_string()));
            }
        }
        FigureKind::OuterMedianTriangles => {
            extend(&mut scene, &Scalar::ratio(-1, 2), &Scalar::ratio(3, 2));
            for f in Family::OUTER {
                scene.add_family(t, f, &half);
                scene.add_triangle(t, f, &half)?;
            }
        }
        FigureKind::XiMedian => {
            extend(&mut scene, &Scalar::zero(), &Scalar::one());
            scene.add_family(t, Family::D, &spec.xi);
            scene.add_triangle(t, Family::D, &spec.xi)?;
        }
        FigureKind::XiOuterMedian => {
            if is_golden_excluded(&spec.xi) {
                return Err(Error::GoldenDegenerate { family: Family::E, xi: Box::new(spec.xi.clone()) });
            }
            let xi = &spec.xi;
            let params = [Scalar::int(2) - xi, xi.clone(), -xi.clone(), Scalar::zero(), Scalar::one()];
            let pick = |better: fn(&Scalar, &Scalar) -> bool| {
                params.iter().skip(1).fold(params[0].clone(), |m, v| if better(v, &m) { v.clone() } else { m })
            };
            let (min, max) = (pick(|a, b| a < b), pick(|a, b| a > b));
            extend(&mut scene, &min, &max);
            for f in Family::OUTER {
                scene.add_family(t, f, xi);
                scene.add_triangle(t, f, xi)?;
            }
        }
        FigureKind::MedianTriangleProof => {
            extend(&mut scene, &Scalar::zero(), &Scalar::one());
            scene.add_family(t, Family::D, &half);
            let med = scene.add_triangle(t, Family::D, &half)?;
            let twice =
                oracle_cevian_triangle_at(&med, &CevianTriple::uniform(half.clone()), Family::D.sign_choice(), t.a())?;
            scene.triangles.push((twice, "DD".to_string()));
        }
    }
    Ok(scene)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Viewport {
    min_x: f64,
    max_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Viewport {
    fn fit(points: &[Point], width: f64, height: f64) -> Self {
        let xs: Vec<f64> = points.iter().map(|p| p.x.to_f64()).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.y.to_f64()).collect();
        let fold = |v: &[f64], init: f64, f: fn(f64, f64) -> f64| v.iter().copied().fold(init, f);
        let (min_x, max_x) = (fold(&xs, f64::INFINITY, f64::min), fold(&xs, f64::NEG_INFINITY, f64::max));
        let (min_y, max_y) = (fold(&ys, f64::INFINITY, f64::min), fold(&ys, f64::NEG_INFINITY, f64::max));
        let margin = 0.08 * width.min(height);
        let span_x = (max_x - min_x).max(f64::EPSILON);
        let span_y = (max_y - min_y).max(f64::EPSILON);
        let scale = ((width - 2.0 * margin) / span_x).min((height - 2.0 * margin) / span_y);
        let off_x = (width - scale * span_x) / 2.0;
        let off_y = (height - scale * span_y) / 2.0;
        Viewport { min_x, max_y, scale, off_x, off_y }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let x = self.off_x + (p.x.to_f64() - self.min_x) * self.scale;
        // SVG y grows downward
        let y = self.off_y + (self.max_y - p.y.to_f64()) * self.scale;
        (x, y)
    }
}

fn polygon_points(vp: &Viewport, t: &Triangle) -> String {
    t.vertices()
        .iter()
        .map(|p| {
            let (x, y) = vp.map(p);
            format!("{:.3},{:.3}", x, y)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the figure as a standalone SVG 1.1 document.
pub fn render_svg(spec: &FigureSpec) -> Result<String> {
    spec.validate()?;
    let scene = build_scene(spec)?;
    let t = &spec.triangle;
    let vp = Viewport::fit(&scene.points(t), spec.width, spec.height);
    let mut s = String::new();
    let (w, h) = (spec.width, spec.height);
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);

    for (a, b) in &scene.side_lines {
        let ((x1, y1), (x2, y2)) = (vp.map(a), vp.map(b));
        let _ = writeln!(
            s,
            r##"<line class="side-line" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#999" stroke-dasharray="4 3"/>"##
        );
    }
    for (tri, family) in &scene.triangles {
        let _ = writeln!(
            s,
            r##"<polygon class="cevian-triangle" data-family="{}" points="{}" fill="#4a90d9" fill-opacity="0.15" stroke="#4a90d9"/>"##,
            escape(family),
            polygon_points(&vp, tri)
        );
    }
    let _ = writeln!(
        s,
        r#"<polygon class="base-triangle" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        polygon_points(&vp, t)
    );
    for (a, b, label) in &scene.cevians {
        let ((x1, y1), (x2, y2)) = (vp.map(a), vp.map(b));
        let _ = writeln!(
            s,
            r##"<line class="cevian" data-label="{}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#c0392b"/>"##,
            escape(label)
        );
    }
    for v in Vertex::ALL {
        let (x, y) = vp.map(t.vertex(v));
        let _ = writeln!(
            s,
            r#"<text class="vertex-label" x="{:.3}" y="{:.3}" font-size="14">{}</text>"#,
            x + 4.0,
            y - 4.0,
            v.label()
        );
    }
    for (p, label) in &scene.feet {
        let (x, y) = vp.map(p);
        let _ = writeln!(s, r#"<circle class="foot" cx="{x:.3}" cy="{y:.3}" r="2.5" fill="black"/>"#);
        let _ = writeln!(
            s,
            r#"<text class="foot-label" x="{:.3}" y="{:.3}" font-size="11">{}</text>"#,
            x + 3.0,
            y + 13.0,
            escape(label)
        );
    }
    if let Some(g) = &scene.centroid {
        let (x, y) = vp.map(g);
        let _ = writeln!(s, r##"<circle class="centroid" cx="{x:.3}" cy="{y:.3}" r="4" fill="#27ae60"/>"##);
    }
    for (p, label) in &scene.concurrency {
        let (x, y) = vp.map(p);
        let _ = writeln!(s, r##"<circle class="concurrency" cx="{x:.3}" cy="{y:.3}" r="4" fill="#8e44ad"/>"##);
        let _ = writeln!(
            s,
            r#"<text class="concurrency-label" x="{:.3}" y="{:.3}" font-size="11">{}</text>"#,
            x + 5.0,
            y - 5.0,
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Number of cevian segments the figure draws.
pub fn cevian_count(spec: &FigureSpec) -> Result<usize> {
    Ok(build_scene(spec)?.cevians.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_grid_counts() {
        let spec = FigureSpec::new(FigureKind::MedianGrid, Triangle::right_345(), Scalar::ratio(1, 2));
        let scene = build_scene(&spec).unwrap();
        assert_eq!(scene.cevians.len(), 9);
        assert_eq!(scene.concurrency.len(), 3);
        assert_eq!(scene.centroid, Some(Point::new(Scalar::ratio(4, 3), 1)));
        assert_eq!(scene.feet.len(), 9);
    }

    #[test]
    fn labels() {
        assert_eq!(foot_label(Vertex::B, &Scalar::ratio(-1, 2)), "B_-1/2");
    }

    #[test]
    fn bad_canvas() {
        let mut spec = FigureSpec::new(FigureKind::XiMedian, Triangle::right_345(), Scalar::ratio(1, 3));
        spec.width = 0.0;
        assert!(matches!(render_svg(&spec), Err(Error::InvalidCanvas(_))));
    }

    #[test]
    fn golden_outer_figure_rejected() {
        let spec = FigureSpec::new(FigureKind::XiOuterMedian, Triangle::right_345(), Scalar::phi());
        assert!(matches!(render_svg(&spec), Err(Error::GoldenDegenerate { .. })));
    }
}
