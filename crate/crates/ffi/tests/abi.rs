use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use cevian_ffi::*;

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let json = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cevian_string_free(s) };
    serde_json::from_str(&json).unwrap()
}

fn last_error() -> String {
    let p = cevian_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn report_on_345() {
    let t = cevian_triangle_new_345();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cevian_report(t, &mut out) }, CevianStatus::Ok);
    let doc = take(out);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert_eq!(doc["classification"].as_array().unwrap().len(), 4);
    unsafe { cevian_triangle_free(t) };
}

#[test]
fn triangle_from_text_and_verify() {
    let text = CString::new("0,0;7,1;2,5").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { cevian_triangle_new(text.as_ptr(), &mut t) }, CevianStatus::Ok);
    let xi = CString::new("phi_inv").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { cevian_verify(t, xi.as_ptr(), CevianSuite::Identities, &mut out) };
    assert_eq!(status, CevianStatus::Ok);
    let doc = take(out);
    assert_eq!(doc["input"]["xi"], "-1/2+1/2√5");
    unsafe { cevian_triangle_free(t) };
}

#[test]
fn degenerate_triangle_code() {
    let text = CString::new("0,0;1,1;2,2").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { cevian_triangle_new(text.as_ptr(), &mut t) }, CevianStatus::DegenerateTriangle);
    assert!(t.is_null());
    assert!(last_error().contains("degenerate"));
}

#[test]
fn classify_and_parse_errors() {
    let good = CString::new("3/2,1/2,-1/2").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cevian_classify(good.as_ptr(), &mut out) }, CevianStatus::Ok);
    let doc = take(out);
    assert_eq!(doc["classification"][0]["membership"]["kind"], "E");
    assert!(cevian_last_error().is_null());

    let bad = CString::new("1,2,bad").unwrap();
    assert_eq!(unsafe { cevian_classify(bad.as_ptr(), &mut out) }, CevianStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("bad"));
}

#[test]
fn golden_xi_suite_reports_flat_triangles() {
    let t = cevian_triangle_new_345();
    let xi = CString::new("phi").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { cevian_verify(t, xi.as_ptr(), CevianSuite::XiSuite, &mut out) };
    assert_eq!(status, CevianStatus::Ok, "{}", if out.is_null() { last_error() } else { String::new() });
    take(out);
    unsafe { cevian_triangle_free(t) };
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(cevian_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/cevian.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["cevian_triangle_new", "cevian_report", "cevian_string_free", "cevian_last_error"] {
        assert!(text.contains(f), "{} missing from header", f);
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"cevian.h\"\nint main(void) {\n  CevianTriangle *t = cevian_triangle_new_345();\n  char *json = 0;\n  CevianStatus s = cevian_report(t, &json);\n  cevian_string_free(json);\n  cevian_triangle_free(t);\n  return s == CEVIAN_STATUS_OK ? 0 : 1;\n}\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
        .expect("C compiler");
    assert!(status.success());
}
