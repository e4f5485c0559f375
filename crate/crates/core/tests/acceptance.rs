//! Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.
//! All comparisons are exact unless a line says otherwise.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cevian::calculus::{cevian_squared_sides, SquaredSides};
use cevian::families::{ceva_analysis, in_parallel_triangle_intervals, parallel_triangle_intervals};
use cevian::geometry::{
    cevian_foot, cevian_vector, heron_squared_area_from_points, oracle_cevian_triangle, squared_distance,
};
use cevian::median::{median_ratio, outer_ratio};
use cevian::{
    ceva_intersection, classify_triple, concurrency_point, forms_triangle, heron_squared_area, is_parallel_triple,
    similarity_identity_check, squared_cevian_lengths, CevianTriple, Error, Family, FamilyKind, FamilyMembership,
    Matrix3, Scalar, Triangle, TriangleVerdict, Vertex,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn squared_area_ratio(t: &Triangle, triple: &CevianTriple) -> Result<Scalar, String> {
    let base = SquaredSides::of_triangle(t);
    heron_squared_area(&cevian_squared_sides(triple, &base))
        .checked_div(&heron_squared_area(&base))
        .map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = Scalar::ratio(3, 4).square();
    let half = Scalar::ratio(1, 2);
    for (i, t) in common::triangles(1, 500).iter().enumerate() {
        let r = squared_area_ratio(t, &Family::D.triple(&half))?;
        ensure(r == expected, || format!("triangle #{} {}: ratio {}", i, t, r))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {:?}", elapsed))?;
    Ok(format!("500 triangles, ratio 9/16 exact, {:.2?}", elapsed))
}

fn criterion_2() -> Outcome {
    let expected = Scalar::ratio(5, 4).square();
    let half = Scalar::ratio(1, 2);
    for (i, t) in common::triangles(2, 500).iter().enumerate() {
        for f in Family::OUTER {
            let r = squared_area_ratio(t, &f.triple(&half))?;
            ensure(r == expected, || format!("triangle #{} {} family {}: ratio {}", i, t, f.name(), r))?;
        }
    }
    Ok("500 triangles x 3 outer triples, ratio 25/16 exact".into())
}

fn criterion_3() -> Outcome {
    let mut rng = common::rng(3);
    for i in 0..300 {
        let t = common::triangle(&mut rng);
        let xi = common::rational(&mut rng, 40, 11);
        let d = squared_area_ratio(&t, &Family::D.triple(&xi))?;
        ensure(d == median_ratio(&xi).square(), || format!("#{} D at xi={}: {}", i, xi, d))?;
        for f in Family::OUTER {
            let r = squared_area_ratio(&t, &f.triple(&xi))?;
            ensure(r == outer_ratio(&xi).square(), || format!("#{} {} at xi={}: {}", i, f.name(), xi, r))?;
        }
        // coordinate realization agrees with the Heron value
        let realized = oracle_cevian_triangle(&t, &Family::D.triple(&xi), Family::D.sign_choice())
            .map_err(|e| format!("#{} oracle: {}", i, e))?;
        let ratio = heron_squared_area_from_points(&realized)
            .checked_div(&heron_squared_area_from_points(&t))
            .map_err(|e| e.to_string())?;
        ensure(ratio == d, || format!("#{} oracle ratio {} vs {}", i, ratio, d))?;
    }
    Ok("300 (triangle, xi) pairs, D and E/F/G ratios exact".into())
}

fn criterion_4() -> Outcome {
    let mut xis: Vec<Scalar> =
        [(1, 2), (2, 5), (-3, 7), (0, 1), (5, 3), (-1, 1), (11, 4)].iter().map(|&(p, q)| Scalar::ratio(p, q)).collect();
    xis.push(Scalar::phi_inv());
    for xi in &xis {
        for f in Family::ALL {
            let check = similarity_identity_check(f, xi);
            let identity = Matrix3::scalar_identity(&check.expected_scalar);
            ensure(check.product == identity, || format!("{} at xi={}: {}", f.name(), xi, check.product))?;
        }
    }
    Ok("7 rational xi and phi^-1, all entries exact".into())
}

fn criterion_5() -> Outcome {
    let half = Scalar::ratio(1, 2);
    let two_thirds = Scalar::ratio(2, 3);
    let two_fifths = Scalar::ratio(2, 5);
    for (i, t) in common::triangles(5, 100).iter().enumerate() {
        let c = concurrency_point(t, &Family::D.triple(&half)).map_err(|e| format!("#{}: {}", i, e))?;
        ensure(c.ratios.iter().all(|r| *r == two_thirds), || format!("#{} medians {:?}", i, c.ratios))?;
        ensure(c.point == t.centroid(), || format!("#{} point is not the centroid", i))?;
        for f in Family::OUTER {
            let triple = f.triple(&half);
            let c = concurrency_point(t, &triple).map_err(|e| format!("#{} {}: {}", i, f.name(), e))?;
            for v in Vertex::ALL {
                if *triple.param(v) != half {
                    let r = &c.ratios[v as usize];
                    ensure(*r == two_fifths, || format!("#{} {} at {}: {}", i, f.name(), v.label(), r))?;
                }
            }
        }
    }
    Ok("100 triangles, medians 2/3 and outer medians 2/5 exact".into())
}

fn criterion_6() -> Outcome {
    let half = Scalar::ratio(1, 2);
    for f in Family::ALL {
        let found = ceva_intersection(f);
        ensure(found == vec![(half.clone(), f.triple(&half))], || format!("{}: {:?}", f.name(), found))?;
        let a = ceva_analysis(f);
        let roots = &a.factorization.real_roots;
        match f {
            Family::D => {
                ensure(a.polynomial.coeffs() == cevian::poly::Polynomial::from_ints(&[-1, 3, -3, 2]).coeffs(), || {
                    format!("D polynomial {}", a.polynomial)
                })?;
                ensure(*roots == vec![half.clone()], || format!("D roots {:?}", roots))?;
            }
            _ => {
                ensure(a.polynomial.coeffs() == cevian::poly::Polynomial::from_ints(&[1, -1, -3, 2]).coeffs(), || {
                    format!("{} polynomial {}", f.name(), a.polynomial)
                })?;
                // (ξ − φ)(ξ + φ⁻¹)(2ξ − 1), expanded in Q(√5)
                let (p, q) = (Scalar::phi(), Scalar::phi_inv());
                let quad = [-(&p * &q), &q - &p, Scalar::one()];
                let lin = [Scalar::int(-1), Scalar::int(2)];
                let mut prod = vec![Scalar::zero(); 4];
                for (i, x) in quad.iter().enumerate() {
                    for (j, y) in lin.iter().enumerate() {
                        prod[i + j] = &prod[i + j] + &(x * y);
                    }
                }
                let coeffs: Vec<Scalar> = a.polynomial.coeffs().iter().cloned().map(Scalar::from).collect();
                ensure(prod == coeffs, || format!("{} printed factors expand to {:?}", f.name(), prod))?;
                let expected = vec![-Scalar::phi_inv(), half.clone(), Scalar::phi()];
                ensure(*roots == expected, || format!("{} roots {:?}", f.name(), roots))?;
                ensure(a.factorization.expand() == a.polynomial, || format!("{} factorization", f.name()))?;
            }
        }
    }
    Ok("xi = 1/2 unique on D, E, F, G; factors coefficient-exact".into())
}

fn criterion_7() -> Outcome {
    let mut ts = common::triangles(7, 20);
    ts.push(Triangle::right_345());
    for xi in [Scalar::phi(), -Scalar::phi_inv()] {
        for t in &ts {
            for f in Family::OUTER {
                let sides = cevian_squared_sides(&f.triple(&xi), &SquaredSides::of_triangle(t));
                let h = heron_squared_area(&sides);
                ensure(h.is_exact() && h.is_zero(), || format!("{} at xi={} on {}: {}", f.name(), xi, t, h))?;
            }
        }
    }
    Ok("E/F/G at phi and -phi^-1 on 21 triangles, Heron exactly 0".into())
}

fn criterion_8() -> Outcome {
    let mut rng = common::rng(8);
    for i in 0..500 {
        let t = common::triangle(&mut rng);
        let triple = common::triple(&mut rng);
        let (cc, bb, aa) = squared_cevian_lengths(&triple, &SquaredSides::of_triangle(&t));
        let coord = |v: Vertex| squared_distance(t.vertex(v), &cevian_foot(&t, v, triple.param(v)));
        ensure(aa == coord(Vertex::A) && bb == coord(Vertex::B) && cc == coord(Vertex::C), || {
            format!("#{} {} on {}", i, triple, t)
        })?;
    }
    let mut xi_rng = common::rng(80);
    for i in 0..100 {
        let t = common::triangle(&mut xi_rng);
        let xi = common::rational(&mut xi_rng, 40, 11);
        for f in Family::ALL {
            let triple = f.triple(&xi);
            let o = oracle_cevian_triangle(&t, &triple, f.sign_choice()).map_err(|e| format!("#{}: {}", i, e))?;
            let [bp, ap, cp] = [o.b(), o.a(), o.c()];
            // B'→A' along AA_ρ, A'→C' along BB_σ, C'→B' along CC_τ
            let sides = [(bp.to(ap), Vertex::A), (ap.to(cp), Vertex::B), (cp.to(bp), Vertex::C)];
            for (side, v) in sides {
                let cev = cevian_vector(&t, v, triple.param(v));
                ensure(side.cross(&cev).is_zero() && side.norm_squared() == cev.norm_squared(), || {
                    format!("#{} {} side {} at xi={}", i, f.name(), v.label(), xi)
                })?;
            }
        }
    }
    Ok("500 Stewart/coordinate pairs; 400 family oracle triangles congruent and parallel".into())
}

fn parallel_triple(tau: &Scalar) -> CevianTriple {
    let one = Scalar::one();
    let rho = (&one - tau).recip().unwrap();
    let sigma = &one - &tau.recip().unwrap();
    CevianTriple::new(rho, sigma, tau.clone())
}

fn criterion_9() -> Outcome {
    let mut samples = vec![];
    for (lo, hi) in parallel_triangle_intervals() {
        samples.push(lo.clone());
        samples.push(hi.clone());
        samples.push((&lo + &hi) * Scalar::ratio(1, 2));
        samples.push((&lo * Scalar::ratio(99, 100)) + (&hi * Scalar::ratio(1, 100)));
    }
    samples.push(Scalar::phi().square() + Scalar::ratio(1, 10));
    samples.push(-Scalar::phi() - Scalar::ratio(1, 10));
    samples.push(Scalar::ratio(1, 2) * Scalar::phi());
    samples.push(Scalar::ratio(-1, 1000));
    // rationals n/7 on both sides of every interval, skipping τ ∈ {0, 1}
    let rationals = (-25..=25).filter(|n| *n != 0 && *n != 7).map(|n| Scalar::ratio(n, 7));
    samples.extend(rationals.take(50 - samples.len()));
    samples.truncate(50);
    ensure(samples.len() == 50, || format!("only {} samples", samples.len()))?;

    let mut inside = 0;
    for tau in &samples {
        let triple = parallel_triple(tau);
        let t = Triangle::right_345();
        let (a, b, c) = (
            cevian_vector(&t, Vertex::A, &triple.rho),
            cevian_vector(&t, Vertex::B, &triple.sigma),
            cevian_vector(&t, Vertex::C, &triple.tau),
        );
        ensure(a.cross(&b).is_zero() && b.cross(&c).is_zero() && a.cross(&c).is_zero(), || {
            format!("tau={} not parallel", tau)
        })?;
        ensure(is_parallel_triple(&triple).is_some(), || format!("tau={} not recognized", tau))?;
        let membership = match classify_triple(&triple) {
            Ok(m) => m,
            Err(Error::GoldenDegenerate { family, xi }) => FamilyMembership::family(family, *xi),
            Err(e) => return Err(format!("tau={}: {}", tau, e)),
        };
        ensure(
            matches!(membership.kind, FamilyKind::Parallel | FamilyKind::E | FamilyKind::F | FamilyKind::G),
            || format!("tau={} classified {:?}", tau, membership.kind),
        )?;
        let verdict = forms_triangle(&membership);
        // independent decision: Heron on the Stewart lengths
        let heron = heron_squared_area(&cevian_squared_sides(&triple, &SquaredSides::of_triangle(&t)));
        let oracle = heron.is_positive();
        ensure((verdict == TriangleVerdict::NonDegenerateTriangle) == oracle, || {
            format!("tau={}: verdict {:?}, heron {}", tau, verdict, heron)
        })?;
        ensure(in_parallel_triangle_intervals(tau) == oracle, || format!("tau={}: interval test", tau))?;
        inside += oracle as usize;
    }
    Ok(format!("50 samples ({} inside the intervals), cross products exactly 0", inside))
}

fn criterion_10() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_cevian");
    let run = |args: &[&str]| Command::new(exe).args(args).output().map_err(|e| e.to_string());

    let out = run(&["report", "--triangle", "0,3;0,0;4,0", "--format", "json"])?;
    ensure(out.status.code() == Some(0), || format!("report exit {:?}", out.status.code()))?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let checks = doc["checks"].as_array().ok_or("no checks")?;
    ensure(checks.iter().all(|c| c["passed"] == true), || "a report check failed".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fixture = dir.path().join("expected.json");
    std::fs::write(&fixture, r#"{"outer_area_ratio": "4/5"}"#).map_err(|e| e.to_string())?;
    let fixture = fixture.to_str().unwrap();
    let out = run(&["report", "--triangle", "0,3;0,0;4,0", "--expected", fixture])?;
    ensure(out.status.code() == Some(1), || format!("corrupted fixture exit {:?}", out.status.code()))?;

    let svg_path = dir.path().join("grid.svg");
    let out =
        run(&["figure", "--kind", "median_grid", "--triangle", "0,3;0,0;4,0", "--out", svg_path.to_str().unwrap()])?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let svg = std::fs::read_to_string(&svg_path).map_err(|e| e.to_string())?;
    let xml = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
    let cevians =
        xml.descendants().filter(|n| n.has_tag_name("line") && n.attribute("class") == Some("cevian")).count();
    ensure(cevians == 9, || format!("{} cevian segments", cevians))?;
    Ok(format!("report exit 0 with {} checks, corrupted fixture exit 1, 9 cevian segments", checks.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("median area ratio", criterion_1),
        ("outer median area ratio", criterion_2),
        ("xi-generalized ratios", criterion_3),
        ("matrix identities", criterion_4),
        ("concurrency ratios", criterion_5),
        ("Ceva-intersection uniqueness", criterion_6),
        ("degeneracy at golden points", criterion_7),
        ("oracle equivalence", criterion_8),
        ("parallel family", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {} ({})", i + 1, name, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {} ({})", i + 1, name, detail);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
