//! C interface to `charvar`.
//!
//! Results are returned through out-pointers; every function returns a
//! [`CvStatus`]. On failure a message is kept per thread and can be read
//! with [`cv_last_error`]. Polynomials and reports are opaque handles owned
//! by the caller and released with their `_free` function. Strings handed
//! out by the library are released with [`cv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use charvar::error::Error;
use charvar::qinv::q4_tau;
use charvar::sl2trace::{reduce_trace, reduce_trace_copy};
use charvar::verify::{run_named, Report, RunConfig};
use charvar::zerosum::{davenport, Budget};
use charvar::{FreeWord, Polynomial};
use num_traits::Zero;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    BudgetExceeded = 5,
    Dimension = 6,
    Internal = 7,
}

/// Opaque polynomial handle.
pub struct CvPolynomial(Polynomial);

/// Opaque verification report handle.
pub struct CvReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CvStatus {
    match e {
        Error::Parse { .. } | Error::ZeroExponent(_) | Error::InvalidVariable(_) => CvStatus::Parse,
        Error::BudgetExceeded { .. } | Error::TooLarge(..) => CvStatus::BudgetExceeded,
        Error::DimensionMismatch(_) | Error::OddDimension(_) | Error::NotSkew => CvStatus::Dimension,
        _ => CvStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into a status and a message.
fn guard(f: impl FnOnce() -> Result<(), (CvStatus, String)>) -> CvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CvStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CvStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (CvStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (CvStatus, String)> {
    if p.is_null() {
        return Err((CvStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (CvStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (CvStatus, String)> {
    if out.is_null() {
        return Err((CvStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn word(text: &str) -> Result<FreeWord, (CvStatus, String)> {
    FreeWord::parse(text, 2).map_err(lib_err)
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn cv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Trace polynomial of a word in the free group of rank 2. `copy` is 0 for
/// plain coordinates `t1, t2, t12`, or 1 or 2 for copy-indexed ones.
///
/// # Safety
/// `word_text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_reduce_trace(word_text: *const c_char, copy: u32, out: *mut *mut CvPolynomial) -> CvStatus {
    guard(|| {
        let w = word(read_str(word_text)?)?;
        let p = match copy {
            0 => reduce_trace(&w),
            1 | 2 => reduce_trace_copy(&w, copy as usize),
            _ => return Err((CvStatus::InvalidInput, format!("copy must be 0, 1 or 2, got {copy}"))),
        }
        .map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(CvPolynomial(p))))
    })
}

/// `Q₄` of two words as a polynomial in the copy-indexed coordinates.
///
/// # Safety
/// Both strings must be valid NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_q4(w1: *const c_char, w2: *const c_char, out: *mut *mut CvPolynomial) -> CvStatus {
    guard(|| {
        let p = q4_tau(&word(read_str(w1)?)?, &word(read_str(w2)?)?).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(CvPolynomial(p))))
    })
}

/// Parses a polynomial in the library's text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_polynomial_parse(text: *const c_char, out: *mut *mut CvPolynomial) -> CvStatus {
    guard(|| {
        let p = Polynomial::parse(read_str(text)?).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(CvPolynomial(p))))
    })
}

/// Renders a polynomial; free the result with [`cv_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_polynomial_to_string(p: *const CvPolynomial, out: *mut *mut c_char) -> CvStatus {
    guard(|| {
        let p = p.as_ref().ok_or((CvStatus::NullPointer, "null polynomial".into()))?;
        write_out(out, to_c_string(p.0.to_string()))
    })
}

/// 1 if the polynomial is zero, 0 otherwise, -1 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cv_polynomial_is_zero(p: *const CvPolynomial) -> i32 {
    p.as_ref().map_or(-1, |p| i32::from(p.0.is_zero()))
}

/// 1 if the two polynomials are equal, 0 otherwise, -1 if either is null.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn cv_polynomial_equal(a: *const CvPolynomial, b: *const CvPolynomial) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.0 == b.0),
        _ => -1,
    }
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cv_polynomial_free(p: *mut CvPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Davenport constant of `(ℤ/m)^n`. `budget` bounds the group order; 0
/// selects the default.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_davenport(m: u32, n: u32, budget: u64, out: *mut u64) -> CvStatus {
    guard(|| {
        let budget = if budget == 0 { Budget::default() } else { Budget(budget) };
        let d = davenport(m, n as usize, budget).map_err(lib_err)?;
        write_out(out, d as u64)
    })
}

/// Runs a verification suite by name (`all` included) with the given seed.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_verify(suite: *const c_char, seed: u64, out: *mut *mut CvReport) -> CvStatus {
    guard(|| {
        let cfg = RunConfig { seed, ..RunConfig::default() };
        let r = run_named(read_str(suite)?, &cfg).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(CvReport(r))))
    })
}

/// 1 if every item of the report passed, 0 otherwise, -1 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cv_report_ok(r: *const CvReport) -> i32 {
    r.as_ref().map_or(-1, |r| i32::from(r.0.ok()))
}

/// Number of items in the report, 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cv_report_len(r: *const CvReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.items.len())
}

/// The report as JSON; free the result with [`cv_string_free`].
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cv_report_json(r: *const CvReport, out: *mut *mut c_char) -> CvStatus {
    guard(|| {
        let r = r.as_ref().ok_or((CvStatus::NullPointer, "null report".into()))?;
        write_out(out, to_c_string(r.0.to_json()))
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cv_report_free(r: *mut CvReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
