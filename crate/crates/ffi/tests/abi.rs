use std::ffi::{CStr, CString};
use std::ptr;

use liesymp_ffi::*;

const N4_1: &str = "algebra n4_1
basis e1 e2 e3 e4
[e2,e4] = e1
[e3,e4] = e2
torus e5 e6
[e5,e1] = e1
[e5,e3] = -e3
[e5,e4] = e4
[e6,e2] = e2
[e6,e3] = 2*e3
[e6,e4] = -e4
";

fn last_error() -> String {
    unsafe { CStr::from_ptr(ls_last_error()) }.to_str().unwrap().to_string()
}

fn parse(src: &str) -> (LsStatus, *mut LsAlgebra) {
    let src = CString::new(src).unwrap();
    let mut h = ptr::null_mut();
    let s = unsafe { ls_algebra_parse(src.as_ptr(), &mut h) };
    (s, h)
}

#[test]
fn parse_decide_and_free() {
    let (s, h) = parse(N4_1);
    assert_eq!(s, LsStatus::Ok);
    unsafe {
        assert_eq!(ls_algebra_dim(h), 6);
        let mut v = ptr::null_mut();
        assert_eq!(ls_decide_symplectic(h, &mut v), LsStatus::Ok);
        let mut e = LsExistence::No;
        assert_eq!(ls_verdict_existence(v, &mut e), LsStatus::Ok);
        assert_eq!(e, LsExistence::Yes);
        let mut exact = false;
        assert_eq!(ls_verdict_exact(v, &mut exact), LsStatus::Ok);
        assert!(exact);
        let mut z2 = 0;
        assert_eq!(ls_verdict_z2_dim(v, &mut z2), LsStatus::Ok);
        assert_eq!(z2, 5);
        let mut json = ptr::null_mut();
        assert_eq!(ls_verdict_json(v, &mut json), LsStatus::Ok);
        let parsed: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(parsed["algebra"], "n4_1");
        assert_eq!(parsed["verdicts"]["symplectic"]["z2_dim"], 5);
        ls_string_free(json);
        ls_verdict_free(v);
        ls_algebra_free(h);
    }
}

#[test]
fn jacobi_failure_sets_status_and_message() {
    let (s, h) = parse("algebra bad\nbasis e1 e2 e3\n[e1,e2] = e3\n[e2,e3] = e1\n[e1,e3] = e1\n");
    assert_eq!(s, LsStatus::InvalidAlgebra);
    assert!(h.is_null());
    assert!(last_error().contains("Jacobi"), "{}", last_error());
}

#[test]
fn parse_failure() {
    let (s, h) = parse("basis e1\n");
    assert_eq!(s, LsStatus::ParseError);
    assert!(h.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(ls_algebra_parse(ptr::null(), &mut h), LsStatus::NullArgument);
        assert_eq!(ls_algebra_parse(c"x".as_ptr(), ptr::null_mut()), LsStatus::NullArgument);
        let mut v = ptr::null_mut();
        assert_eq!(ls_decide_symplectic(ptr::null(), &mut v), LsStatus::NullArgument);
        assert_eq!(ls_algebra_dim(ptr::null()), 0);
        ls_algebra_free(ptr::null_mut());
        ls_verdict_free(ptr::null_mut());
        ls_string_free(ptr::null_mut());
    }
}

#[test]
fn catalog_entries() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(ls_algebra_from_catalog(c"n6_2".as_ptr(), ptr::null(), &mut h), LsStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(ls_decide_symplectic(h, &mut v), LsStatus::Ok);
        let mut e = LsExistence::Yes;
        ls_verdict_existence(v, &mut e);
        assert_eq!(e, LsExistence::No);
        ls_verdict_free(v);
        ls_algebra_free(h);

        assert_eq!(ls_algebra_from_catalog(c"n6_5".as_ptr(), c"3".as_ptr(), &mut h), LsStatus::Ok);
        ls_algebra_free(h);
        assert_eq!(ls_algebra_from_catalog(c"n6_5".as_ptr(), c"0".as_ptr(), &mut h), LsStatus::InvalidParameter);
        assert!(h.is_null());
        assert_eq!(ls_algebra_from_catalog(c"n9_9".as_ptr(), ptr::null(), &mut h), LsStatus::UnknownEntry);

        assert_eq!(ls_algebra_from_catalog(c"Q5".as_ptr(), ptr::null(), &mut h), LsStatus::Ok);
        assert_eq!(ls_algebra_dim(h), 8);
        ls_algebra_free(h);
    }
}

#[test]
fn errors_are_per_thread() {
    let (s, _) = parse("basis e1\n");
    assert_eq!(s, LsStatus::ParseError);
    let other = std::thread::spawn(last_error).join().unwrap();
    assert!(other.is_empty());
}
