//! C ABI over the `cevian` crate.
//!
//! Functions return a [`CevianStatus`]. Results that are documents come back
//! as NUL-terminated JSON strings owned by the caller and released with
//! [`cevian_string_free`]. After a failure, [`cevian_last_error`] describes
//! it for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cevian::cli::{self, ReportDocument};
use cevian::median::ExpectedConstants;
use cevian::{CevianTriple, Error, Scalar, Triangle};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CevianStatus {
    Ok = 0,
    /// The document was produced but at least one check failed.
    CheckFailed = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    DegenerateTriangle = 5,
    Arithmetic = 6,
    Io = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CevianSuite {
    Classical = 0,
    XiSuite = 1,
    Identities = 2,
}

impl From<CevianSuite> for cli::Suite {
    fn from(s: CevianSuite) -> Self {
        match s {
            CevianSuite::Classical => cli::Suite::Classical,
            CevianSuite::XiSuite => cli::Suite::XiSuite,
            CevianSuite::Identities => cli::Suite::Identities,
        }
    }
}

/// Opaque triangle handle.
pub struct CevianTriangle(Triangle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CevianStatus {
    match e {
        Error::Parse(_) => CevianStatus::Parse,
        Error::DegenerateTriangle => CevianStatus::DegenerateTriangle,
        Error::Io(_) => CevianStatus::Io,
        Error::Json(_) => CevianStatus::Parse,
        Error::DivisionByZero
        | Error::ParallelLines
        | Error::NonClosingChain
        | Error::DegenerateChain
        | Error::NotConcurrent(_)
        | Error::GoldenDegenerate { .. } => CevianStatus::Arithmetic,
        Error::InvalidCanvas(_) => CevianStatus::Parse,
    }
}

enum Failure {
    Status(CevianStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<CevianStatus, Failure>) -> CevianStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            CevianStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(CevianStatus::NullPointer, format!("{} is null", what)));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Status(CevianStatus::InvalidUtf8, format!("{} is not UTF-8", what)))
}

unsafe fn handle<'a>(t: *const CevianTriangle) -> Result<&'a Triangle, Failure> {
    t.as_ref().map(|h| &h.0).ok_or_else(|| Failure::Status(CevianStatus::NullPointer, "triangle is null".into()))
}

fn null_out() -> Failure {
    Failure::Status(CevianStatus::NullPointer, "output pointer is null".into())
}

unsafe fn emit(doc: &ReportDocument, out: *mut *mut c_char) -> Result<CevianStatus, Failure> {
    let json = CString::new(doc.to_json()?).map_err(|e| Failure::Status(CevianStatus::Internal, e.to_string()))?;
    *out = json.into_raw();
    Ok(if doc.all_passed() { CevianStatus::Ok } else { CevianStatus::CheckFailed })
}

/// Parses `"Ax,Ay;Bx,By;Cx,Cy"` into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cevian_triangle_new(text: *const c_char, out: *mut *mut CevianTriangle) -> CevianStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out());
        }
        *out = ptr::null_mut();
        let t: Triangle = read_str(text, "text")?.parse()?;
        *out = Box::into_raw(Box::new(CevianTriangle(t)));
        Ok(CevianStatus::Ok)
    })
}

/// The 3-4-5 right triangle A=(0,3), B=(0,0), C=(4,0).
#[no_mangle]
pub extern "C" fn cevian_triangle_new_345() -> *mut CevianTriangle {
    Box::into_raw(Box::new(CevianTriangle(Triangle::right_345())))
}

/// # Safety
/// `t` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cevian_triangle_free(t: *mut CevianTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Classifies one triple `"rho,sigma,tau"`; JSON report in `*out_json`.
///
/// # Safety
/// `triple` must be a valid C string and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cevian_classify(triple: *const c_char, out_json: *mut *mut c_char) -> CevianStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null_out());
        }
        *out_json = ptr::null_mut();
        let t: CevianTriple = read_str(triple, "triple")?.parse()?;
        emit(&cli::cmd_classify(&[t]), out_json)
    })
}

/// Runs one suite. Returns `CEVIAN_STATUS_CHECK_FAILED` (with the document
/// still written) when any check fails.
///
/// # Safety
/// `t` must be a live handle, `xi` a valid C string, `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cevian_verify(
    t: *const CevianTriangle,
    xi: *const c_char,
    suite: CevianSuite,
    out_json: *mut *mut c_char,
) -> CevianStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null_out());
        }
        *out_json = ptr::null_mut();
        let tri = handle(t)?;
        let xi: Scalar = read_str(xi, "xi")?.parse()?;
        let doc = cli::cmd_verify(tri, &xi, suite.into(), &ExpectedConstants::default())?;
        emit(&doc, out_json)
    })
}

/// Full report: the four ξ = 1/2 triples, every suite, Ceva intersections.
///
/// # Safety
/// `t` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cevian_report(t: *const CevianTriangle, out_json: *mut *mut c_char) -> CevianStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null_out());
        }
        *out_json = ptr::null_mut();
        let doc = cli::cmd_report(handle(t)?, &ExpectedConstants::default())?;
        emit(&doc, out_json)
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cevian_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn cevian_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn cevian_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_arguments() {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { cevian_classify(ptr::null(), &mut out) }, CevianStatus::NullPointer);
        assert!(!cevian_last_error().is_null());
        assert_eq!(unsafe { cevian_report(ptr::null(), &mut out) }, CevianStatus::NullPointer);
        assert!(out.is_null());
    }

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::DegenerateTriangle), CevianStatus::DegenerateTriangle);
        assert_eq!(status_of(&Error::Parse("x".into())), CevianStatus::Parse);
    }
}
