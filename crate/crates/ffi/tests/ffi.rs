use std::ffi::{CStr, CString};
use std::ptr;

use qgalois_ffi::*;

fn parse(order: usize, text: &str) -> *mut QgElement {
    let s = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qg_parse(order, s.as_ptr(), &mut out) }, QgStatus::Ok, "{text}");
    out
}

fn text(e: *const QgElement) -> String {
    unsafe {
        let s = qg_to_string(e);
        let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
        qg_string_free(s);
        owned
    }
}

fn last_error() -> String {
    let p = qg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn commutation_relation_holds() {
    let x = parse(3, "x");
    let y = parse(3, "y");
    let qyx = parse(3, "q*y*x");
    let mut xy = ptr::null_mut();
    let mut eq = false;
    unsafe {
        assert_eq!(qg_mul(x, y, &mut xy), QgStatus::Ok);
        assert_eq!(qg_equal(xy, qyx, &mut eq), QgStatus::Ok);
        assert!(eq);
        assert_eq!(qg_order(xy), 3);
        for e in [x, y, qyx, xy] {
            qg_element_free(e);
        }
    }
}

#[test]
fn differential_and_partial() {
    let a = parse(3, "x^2");
    let mut pa = ptr::null_mut();
    let mut d = ptr::null_mut();
    let mut dd = ptr::null_mut();
    let mut ddd = ptr::null_mut();
    let mut zero = false;
    unsafe {
        assert_eq!(qg_partial(a, &mut pa), QgStatus::Ok);
        assert_eq!(text(pa), "(1+q)x");
        assert_eq!(qg_differential(a, &mut d), QgStatus::Ok);
        assert_eq!(qg_differential(d, &mut dd), QgStatus::Ok);
        assert_eq!(qg_differential(dd, &mut ddd), QgStatus::Ok);
        assert_eq!(qg_is_zero(ddd, &mut zero), QgStatus::Ok);
        assert!(zero);
        assert_eq!(qg_partial(d, &mut pa), QgStatus::NotDegreeZero);
        for e in [a, d, dd, ddd] {
            qg_element_free(e);
        }
    }
}

#[test]
fn sums_and_json() {
    let a = parse(2, "x + y");
    let b = parse(2, "x");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(qg_sub(a, b, &mut s), QgStatus::Ok);
        assert_eq!(text(s), "y");
        let mut t = ptr::null_mut();
        assert_eq!(qg_add(s, b, &mut t), QgStatus::Ok);
        let j = qg_to_json(t);
        let json = CStr::from_ptr(j).to_str().unwrap().to_string();
        qg_string_free(j);
        assert!(json.contains("\"order\""), "{json}");
        for e in [a, b, s, t] {
            qg_element_free(e);
        }
    }
}

#[test]
fn errors_report_codes_and_messages() {
    let bad = CString::new("x*(").unwrap();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(qg_parse(3, bad.as_ptr(), &mut out), QgStatus::ParseError);
        assert!(last_error().contains("offset 3"), "{}", last_error());
        assert!(out.is_null());
        let x = CString::new("x").unwrap();
        assert_eq!(qg_parse(1, x.as_ptr(), &mut out), QgStatus::InvalidOrder);
        assert_eq!(qg_parse(3, ptr::null(), &mut out), QgStatus::NullPointer);

        let a = parse(2, "x");
        let b = parse(3, "x");
        assert_eq!(qg_mul(a, b, &mut out), QgStatus::OrderMismatch);
        let mut eq = true;
        assert_eq!(qg_equal(a, b, &mut eq), QgStatus::OrderMismatch);
        assert!(qg_to_string(ptr::null()).is_null());
        assert_eq!(qg_order(ptr::null()), 0);
        qg_element_free(a);
        qg_element_free(b);
        qg_element_free(ptr::null_mut());
        qg_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_small_order() {
    let mut pass = false;
    unsafe {
        assert_eq!(qg_verify(2, 1, 3, &mut pass), QgStatus::Ok);
        assert!(pass);
        assert_eq!(qg_verify(1, 1, 3, &mut pass), QgStatus::InvalidOrder);
        assert_eq!(qg_verify(2, 1, 3, ptr::null_mut()), QgStatus::NullPointer);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/qgalois.h")).unwrap();
    for name in [
        "typedef struct QgElement QgElement",
        "QG_STATUS_OK",
        "qg_parse",
        "qg_mul",
        "qg_differential",
        "qg_partial",
        "qg_verify",
        "qg_string_free",
        "qg_last_error",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
