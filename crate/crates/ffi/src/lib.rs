//! C ABI over `liesymp`.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Every fallible call returns an [`LsStatus`];
//! on failure, [`ls_last_error`] gives a message for the calling thread.
//! Strings returned through out-parameters are released with
//! [`ls_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liesymp::catalog::{build_entry, parse_assignment, split_name, Params};
use liesymp::cli::report::algebra_report;
use liesymp::cli::load_source;
use liesymp::structure::TorusAction;
use liesymp::symplectic::{decide_symplectic, Existence, SymplecticVerdict};
use liesymp::{Error, LieAlgebra};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// The structure-constant text could not be parsed.
    ParseError = 3,
    /// Parsed, but not a Lie algebra (Jacobi, nilpotency, torus checks).
    InvalidAlgebra = 4,
    UnknownEntry = 5,
    InvalidParameter = 6,
    /// No witness inside the configured search box.
    WitnessBound = 7,
    /// A bug; the message says where.
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsExistence {
    Yes = 0,
    No = 1,
    OddDimension = 2,
}

pub struct LsAlgebra {
    name: String,
    algebra: LieAlgebra,
    torus: Option<TorusAction>,
}

pub struct LsVerdict {
    report: String,
    verdict: SymplecticVerdict,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> LsStatus {
    match e {
        Error::InvalidStructure(_) | Error::PolyParse { .. } => LsStatus::ParseError,
        Error::JacobiFails(..)
        | Error::NotNilpotent
        | Error::RankBoundExceeded { .. }
        | Error::Torus(_)
        | Error::NotRationallyDiagonalizable(_) => LsStatus::InvalidAlgebra,
        Error::UnknownEntry(_) => LsStatus::UnknownEntry,
        Error::InvalidParams { .. } | Error::InvalidConfig(_) => LsStatus::InvalidParameter,
        Error::WitnessBoundExceeded(_) => LsStatus::WitnessBound,
        _ => LsStatus::Internal,
    }
}

/// Runs `f`, records any error or panic, and maps it to a status.
fn guard(f: impl FnOnce() -> Result<(), (LsStatus, String)>) -> LsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            LsStatus::Internal
        }
    }
}

fn lib(e: Error) -> (LsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LsStatus, String) {
    (LsStatus::NullArgument, format!("`{what}` is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LsStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (LsStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message for the last failing call on this thread. Empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ls_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses an algebra from the text format, checking Jacobi and the torus.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_algebra_parse(source: *const c_char, out: *mut *mut LsAlgebra) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let src = str_arg(source, "source")?;
        let l = load_source(src).map_err(lib)?;
        let h = LsAlgebra { name: l.file.name, algebra: l.algebra, torus: l.torus };
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// Builds a catalog entry (`n4_1`, `L4`, `Q5`, `abelian3`, ...). `a` is an
/// optional rational such as `"3/2"` for rows with a parameter; pass NULL
/// for the default.
///
/// # Safety
/// `name` must be a NUL-terminated string, `a` NULL or NUL-terminated, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_algebra_from_catalog(
    name: *const c_char,
    a: *const c_char,
    out: *mut *mut LsAlgebra,
) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let name = str_arg(name, "name")?;
        let a = if a.is_null() {
            None
        } else {
            Some(parse_assignment(&format!("a={}", str_arg(a, "a")?)).map_err(lib)?.1)
        };
        let (family, n) = split_name(name);
        let e = build_entry(&family, &Params { n, a }).map_err(lib)?;
        let h = LsAlgebra { name: e.display_name(), algebra: e.algebra, torus: Some(e.torus) };
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// Dimension of the algebra, or 0 for NULL.
///
/// # Safety
/// `algebra` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_algebra_dim(algebra: *const LsAlgebra) -> usize {
    algebra.as_ref().map_or(0, |h| h.algebra.dim())
}

/// # Safety
/// `algebra` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_algebra_free(algebra: *mut LsAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// Decides symplectic and exact symplectic existence.
///
/// # Safety
/// `algebra` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_decide_symplectic(algebra: *const LsAlgebra, out: *mut *mut LsVerdict) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let h = algebra.as_ref().ok_or_else(|| null("algebra"))?;
        let verdict = decide_symplectic(&h.algebra).map_err(lib)?;
        let report = algebra_report(&h.name, &h.algebra, h.torus.as_ref(), &verdict).map_err(lib)?;
        let report = serde_json::to_string(&report).map_err(|e| (LsStatus::Internal, e.to_string()))?;
        *out = Box::into_raw(Box::new(LsVerdict { report, verdict }));
        Ok(())
    })
}

/// # Safety
/// `verdict` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_verdict_existence(verdict: *const LsVerdict, out: *mut LsExistence) -> LsStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = match v.verdict.existence {
            Existence::Yes => LsExistence::Yes,
            Existence::No => LsExistence::No,
            Existence::OddDimension => LsExistence::OddDimension,
        };
        Ok(())
    })
}

/// Whether an exact symplectic form `dα` exists.
///
/// # Safety
/// `verdict` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_verdict_exact(verdict: *const LsVerdict, out: *mut bool) -> LsStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = v.verdict.exact.exists;
        Ok(())
    })
}

/// Dimension of the space of closed 2-forms.
///
/// # Safety
/// `verdict` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_verdict_z2_dim(verdict: *const LsVerdict, out: *mut usize) -> LsStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = v.verdict.z2_dim;
        Ok(())
    })
}

/// The full report as JSON, in the same schema as `liesymp symplectic
/// --json`. Release with [`ls_string_free`].
///
/// # Safety
/// `verdict` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_verdict_json(verdict: *const LsVerdict, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        *out = into_c_string(v.report.clone());
        Ok(())
    })
}

/// # Safety
/// `verdict` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_verdict_free(verdict: *mut LsVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
