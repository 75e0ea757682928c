use std::ffi::{CStr, CString};
use std::ptr;

use charvar_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn render(p: *const CvPolynomial) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(cv_polynomial_to_string(p, &mut s), CvStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cv_string_free(s);
    out
}

#[test]
fn reduce_trace_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(cv_reduce_trace(c("g1^2 g2").as_ptr(), 0, &mut p), CvStatus::Ok);
        assert_eq!(render(p), "t1*t12 - t2");
        let mut q = ptr::null_mut();
        assert_eq!(cv_polynomial_parse(c("t1*t12 - t2").as_ptr(), &mut q), CvStatus::Ok);
        assert_eq!(cv_polynomial_equal(p, q), 1);
        assert_eq!(cv_polynomial_is_zero(p), 0);
        cv_polynomial_free(p);
        cv_polynomial_free(q);
        assert!(cv_last_error().is_null());
    }
}

#[test]
fn q4_diagonal() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(cv_q4(c("g1").as_ptr(), c("g1").as_ptr(), &mut p), CvStatus::Ok);
        assert_eq!(render(p), "8*t1_1^2 - 8*t1_2^2");
        cv_polynomial_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(cv_reduce_trace(c("g1^").as_ptr(), 0, &mut p), CvStatus::Parse);
        assert!(p.is_null());
        let msg = CStr::from_ptr(cv_last_error()).to_str().unwrap();
        assert!(msg.contains("position"), "{msg}");
        assert_eq!(cv_reduce_trace(ptr::null(), 0, &mut p), CvStatus::NullPointer);
        assert_eq!(cv_reduce_trace(c("g1").as_ptr(), 3, &mut p), CvStatus::InvalidInput);
        assert_eq!(cv_reduce_trace(c("g1").as_ptr(), 0, ptr::null_mut()), CvStatus::NullPointer);
        let mut d = 0u64;
        assert_eq!(cv_davenport(4, 2, 10, &mut d), CvStatus::BudgetExceeded);
        assert_eq!(cv_polynomial_is_zero(ptr::null()), -1);
        cv_polynomial_free(ptr::null_mut());
        cv_string_free(ptr::null_mut());
    }
}

#[test]
fn davenport_and_version() {
    unsafe {
        let mut d = 0u64;
        assert_eq!(cv_davenport(3, 2, 0, &mut d), CvStatus::Ok);
        assert_eq!(d, 5);
        assert_eq!(CStr::from_ptr(cv_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn verify_report_handle() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(cv_verify(c("independence").as_ptr(), 1, &mut r), CvStatus::Ok);
        assert_eq!(cv_report_ok(r), 1);
        assert!(cv_report_len(r) >= 6);
        let mut s = ptr::null_mut();
        assert_eq!(cv_report_json(r, &mut s), CvStatus::Ok);
        let json = CStr::from_ptr(s).to_str().unwrap();
        assert!(json.contains("\"suite\": \"independence\""));
        cv_string_free(s);
        cv_report_free(r);
        assert_eq!(cv_verify(c("nope").as_ptr(), 1, &mut r), CvStatus::InvalidInput);
    }
}
