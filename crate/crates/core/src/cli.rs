//! Command implementations shared by the `cevian` binary and the C ABI.
//!
//! Every command produces a [`ReportDocument`]. Its JSON form has the
//! top-level keys `input`, `classification`, `checks`, `figures` and
//! `version`; scalars are strings in exact text form (`p/q`, `a+b√5`) unless
//! the computation ran in floating point.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::calculus::{ceva_value, CevianTriple};
use crate::error::{Error, Result};
use crate::families::{
    ceva_analysis, classify_triple, forms_triangle, Family, FamilyKind, FamilyMembership, TriangleVerdict,
};
use crate::figure::{render_svg, FigureSpec};
use crate::geometry::Triangle;
use crate::median::{classical_properties_suite_with, identities_suite, xi_suite, CheckResult, ExpectedConstants};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Suite {
    /// The eight median and outer-median properties at ξ = 1/2.
    Classical,
    /// Area ratios and oracle agreement for ξ-median and ξ-outer median triangles.
    XiSuite,
    /// Iterated-similarity matrix identities.
    Identities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub triple: CevianTriple,
    pub membership: FamilyMembership,
    pub verdict: TriangleVerdict,
    pub ceva_value: Scalar,
    pub concurrent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputEcho,
    pub classification: Vec<Classification>,
    pub checks: Vec<CheckResult>,
    pub figures: Vec<String>,
    pub version: String,
}

impl ReportDocument {
    fn new(input: InputEcho) -> Self {
        ReportDocument {
            input,
            classification: Vec::new(),
            checks: Vec::new(),
            figures: Vec::new(),
            version: VERSION.to_string(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Text => Ok(render_text(self)),
        }
    }
}

/// Exit code for an error raised before any check ran.
pub fn error_exit_code(_e: &Error) -> i32 {
    EXIT_INPUT_ERROR
}

/// Parses a triangle from text, or from a file when prefixed with `@`.
pub fn read_triangle(arg: &str) -> Result<Triangle> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?.trim().parse(),
        None => arg.parse(),
    }
}

/// Loads expected constants from a JSON fixture; missing keys keep defaults.
pub fn read_expected(path: &Path) -> Result<ExpectedConstants> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

pub fn classify_entry(triple: &CevianTriple) -> Classification {
    let membership = match classify_triple(triple) {
        Ok(m) => m,
        Err(Error::GoldenDegenerate { family, xi }) => FamilyMembership::family(family, *xi),
        Err(_) => FamilyMembership::none(),
    };
    let verdict = forms_triangle(&membership);
    let value = ceva_value(triple);
    Classification { triple: triple.clone(), membership, verdict, concurrent: value.is_zero(), ceva_value: value }
}

pub fn cmd_classify(triples: &[CevianTriple]) -> ReportDocument {
    let text = triples.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(";");
    let mut doc = ReportDocument::new(InputEcho { triple: Some(text), ..Default::default() });
    doc.classification = triples.iter().map(classify_entry).collect();
    doc
}

pub fn run_suite(t: &Triangle, xi: &Scalar, suite: Suite, expected: &ExpectedConstants) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::Classical => Ok(classical_properties_suite_with(t, expected)),
        Suite::XiSuite => xi_suite(t, xi),
        Suite::Identities => Ok(identities_suite(xi)),
    }
}

pub fn cmd_verify(t: &Triangle, xi: &Scalar, suite: Suite, expected: &ExpectedConstants) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new(InputEcho {
        triangle: Some(t.to_string()),
        xi: Some(xi.clone()),
        suite: Some(suite),
        ..Default::default()
    });
    doc.checks = run_suite(t, xi, suite, expected)?;
    Ok(doc)
}

/// The factors printed for Ceva's condition on each family line:
/// `ξ³ − (1−ξ)³ = (2ξ − 1)(ξ² − ξ + 1)` on D and `(2ξ − 1)(ξ² − ξ − 1)`
/// on E, F and G.
pub fn expected_ceva_factors(f: Family) -> [Polynomial; 2] {
    let linear = Polynomial::from_ints(&[-1, 2]);
    match f {
        Family::D => [linear, Polynomial::from_ints(&[1, -1, 1])],
        _ => [linear, Polynomial::from_ints(&[-1, -1, 1])],
    }
}

fn ceva_intersection_check(f: Family, expected: &ExpectedConstants) -> CheckResult {
    let analysis = ceva_analysis(f);
    let [p, q] = expected_ceva_factors(f);
    let factors_match = &p * &q == analysis.polynomial;
    let xi = &expected.concurrent_xi;
    let unique =
        analysis.admissible.len() == 1 && analysis.admissible[0].0 == *xi && analysis.admissible[0].1 == f.triple(xi);
    let mut check = CheckResult::new(format!("ceva_intersection_{}", f.name()), factors_match && unique);
    for (i, root) in analysis.factorization.real_roots.iter().enumerate() {
        check = check.witness(format!("real_root.{}", i), root.clone());
    }
    for (xi, triple) in &analysis.admissible {
        check = check
            .witness("xi", xi.clone())
            .witness("rho", triple.rho.clone())
            .witness("sigma", triple.sigma.clone())
            .witness("tau", triple.tau.clone());
    }
    check
}

/// Classification of the four ξ = 1/2 triples, all verification suites and
/// the Ceva-surface intersections.
pub fn cmd_report(t: &Triangle, expected: &ExpectedConstants) -> Result<ReportDocument> {
    let half = Scalar::ratio(1, 2);
    let mut doc =
        ReportDocument::new(InputEcho { triangle: Some(t.to_string()), xi: Some(half.clone()), ..Default::default() });
    doc.classification = Family::ALL.iter().map(|f| classify_entry(&f.triple(&half))).collect();
    let mut checks = vec![];
    for (c, f) in doc.classification.iter().zip(Family::ALL) {
        let ok = c.membership.kind == FamilyKind::from(f)
            && c.concurrent
            && c.verdict == TriangleVerdict::NonDegenerateTriangle;
        checks.push(CheckResult::new(format!("classify_{}", f.name()), ok).witness("ceva_value", c.ceva_value.clone()));
    }
    for suite in [Suite::Classical, Suite::XiSuite, Suite::Identities] {
        checks.extend(run_suite(t, &half, suite, expected)?);
    }
    checks.extend(Family::ALL.iter().map(|&f| ceva_intersection_check(f, expected)));
    doc.checks = checks;
    Ok(doc)
}

/// Writes the SVG; nothing is created when the figure cannot be built.
pub fn cmd_figure(spec: &FigureSpec, out: &Path) -> Result<ReportDocument> {
    let svg = render_svg(spec)?;
    std::fs::write(out, svg)?;
    let mut doc = ReportDocument::new(InputEcho {
        triangle: Some(spec.triangle.to_string()),
        xi: Some(spec.xi.clone()),
        ..Default::default()
    });
    doc.figures.push(out.display().to_string());
    Ok(doc)
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cevian {}", doc.version);
    if let Some(t) = &doc.input.triangle {
        let _ = writeln!(s, "triangle: {}", t);
    }
    if let Some(xi) = &doc.input.xi {
        let _ = writeln!(s, "xi: {}", xi);
    }
    if !doc.classification.is_empty() {
        let _ =
            writeln!(s, "\n{:<28} {:<9} {:<14} {:<24} {:<12} concurrent", "triple", "family", "xi", "verdict", "ceva");
        for c in &doc.classification {
            let xi = c.membership.xi.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                s,
                "{:<28} {:<9} {:<14} {:<24} {:<12} {}",
                c.triple.to_string(),
                format!("{:?}", c.membership.kind),
                xi,
                format!("{:?}", c.verdict),
                c.ceva_value.to_string(),
                if c.concurrent { "yes" } else { "no" }
            );
        }
    }
    if !doc.checks.is_empty() {
        let _ = writeln!(s);
        for c in &doc.checks {
            let witnesses: Vec<String> = c.witnesses.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
            let _ = writeln!(s, "[{}] {:<32} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, witnesses.join(" "));
        }
        let passed = doc.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(s, "\n{}/{} checks passed", passed, doc.checks.len());
    }
    for f in &doc.figures {
        let _ = writeln!(s, "figure: {}", f);
    }
    s
}
