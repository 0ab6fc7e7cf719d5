//! C ABI over the quantum plane: parse, multiply, differentiate, print.
//!
//! Every fallible call returns a [`QgStatus`]. On failure a message is kept
//! per thread and can be read with [`qg_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qgalois::error::AlgebraError;
use qgalois::expr::{parse, Evaluator};
use qgalois::output::{format_plane, plane_json, to_json_string};
use qgalois::qplane::{PlaneElement, QuantumPlane};
use qgalois::verify;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidOrder = 4,
    OrderMismatch = 5,
    NotDegreeZero = 6,
    DegreeOutOfRange = 7,
    AlgebraError = 8,
    VerifyFailed = 9,
    Panic = 10,
}

/// Opaque handle to an element of the reduced quantum plane.
pub struct QgElement {
    inner: PlaneElement,
}

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

fn fail(status: QgStatus, msg: impl Into<String>) -> QgStatus {
    set_error(msg);
    status
}

fn algebra_status(e: &AlgebraError) -> QgStatus {
    match e {
        AlgebraError::InvalidOrder(_) => QgStatus::InvalidOrder,
        AlgebraError::OrderMismatch { .. } => QgStatus::OrderMismatch,
        AlgebraError::NotDegreeZero => QgStatus::NotDegreeZero,
        AlgebraError::DegreeOutOfRange { .. } => QgStatus::DegreeOutOfRange,
        _ => QgStatus::AlgebraError,
    }
}

fn from_algebra(e: AlgebraError) -> QgStatus {
    fail(algebra_status(&e), e.to_string())
}

/// Runs `f` with panics turned into `QgStatus::Panic`.
fn guarded(f: impl FnOnce() -> QgStatus) -> QgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(QgStatus::Panic, "internal panic"),
    }
}

unsafe fn element<'a>(p: *const QgElement) -> Option<&'a PlaneElement> {
    p.as_ref().map(|e| &e.inner)
}

unsafe fn store(out: *mut *mut QgElement, inner: PlaneElement) {
    *out = Box::into_raw(Box::new(QgElement { inner }));
}

unsafe fn binary(
    a: *const QgElement,
    b: *const QgElement,
    out: *mut *mut QgElement,
    op: fn(&PlaneElement, &PlaneElement) -> qgalois::error::Result<PlaneElement>,
) -> QgStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (element(a), element(b)) else {
            return fail(QgStatus::NullPointer, "null element");
        };
        if out.is_null() {
            return fail(QgStatus::NullPointer, "null output pointer");
        }
        match op(a, b) {
            Ok(c) => {
                store(out, c);
                QgStatus::Ok
            }
            Err(e) => from_algebra(e),
        }
    })
}

/// Parses and evaluates `expr` in the plane of order `order`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a valid pointer. On success
/// `*out` owns a new element that must be released with [`qg_element_free`].
#[no_mangle]
pub unsafe extern "C" fn qg_parse(order: usize, expr: *const c_char, out: *mut *mut QgElement) -> QgStatus {
    guarded(|| {
        if expr.is_null() || out.is_null() {
            return fail(QgStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(expr).to_str() else {
            return fail(QgStatus::InvalidUtf8, "expression is not UTF-8");
        };
        let ev = match Evaluator::new(order) {
            Ok(ev) => ev,
            Err(e) => return from_algebra(e),
        };
        let parsed = match parse(text) {
            Ok(p) => p,
            Err(e) => return fail(QgStatus::ParseError, e.to_string()),
        };
        match ev.eval(&parsed) {
            Ok(a) => {
                store(out, a);
                QgStatus::Ok
            }
            Err(e) => from_algebra(e),
        }
    })
}

/// Releases an element. Null is ignored.
///
/// # Safety
/// `e` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qg_element_free(e: *mut QgElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Order `N` of the element's plane, or 0 for null.
///
/// # Safety
/// `e` must be null or a live element.
#[no_mangle]
pub unsafe extern "C" fn qg_order(e: *const QgElement) -> usize {
    element(e).map_or(0, PlaneElement::order)
}

/// `*out = a + b`.
///
/// # Safety
/// `a` and `b` must be live elements and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_add(a: *const QgElement, b: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    binary(a, b, out, PlaneElement::checked_add)
}

/// `*out = a - b`.
///
/// # Safety
/// `a` and `b` must be live elements and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_sub(a: *const QgElement, b: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    binary(a, b, out, PlaneElement::checked_sub)
}

/// `*out = a b`.
///
/// # Safety
/// `a` and `b` must be live elements and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_mul(a: *const QgElement, b: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    binary(a, b, out, PlaneElement::checked_mul)
}

/// `*out = d(a)`.
///
/// # Safety
/// `a` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_differential(a: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    guarded(|| {
        let Some(a) = element(a) else {
            return fail(QgStatus::NullPointer, "null element");
        };
        if out.is_null() {
            return fail(QgStatus::NullPointer, "null output pointer");
        }
        match QuantumPlane::new(a.order()) {
            Ok(p) => {
                store(out, p.differential(a));
                QgStatus::Ok
            }
            Err(e) => from_algebra(e),
        }
    })
}

/// `*out = ∂(a)` for a degree-zero `a`.
///
/// # Safety
/// `a` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_partial(a: *const QgElement, out: *mut *mut QgElement) -> QgStatus {
    guarded(|| {
        let Some(a) = element(a) else {
            return fail(QgStatus::NullPointer, "null element");
        };
        if out.is_null() {
            return fail(QgStatus::NullPointer, "null output pointer");
        }
        let Some(r) = a.as_xpoly() else {
            return from_algebra(AlgebraError::NotDegreeZero);
        };
        match Evaluator::new(a.order()) {
            Ok(ev) => {
                store(out, PlaneElement::from_row(0, &ev.calculus().partial(&r)));
                QgStatus::Ok
            }
            Err(e) => from_algebra(e),
        }
    })
}

/// Writes whether `a` is zero.
///
/// # Safety
/// `a` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_is_zero(a: *const QgElement, out: *mut bool) -> QgStatus {
    guarded(|| match (element(a), out.is_null()) {
        (Some(a), false) => {
            *out = a.is_zero();
            QgStatus::Ok
        }
        _ => fail(QgStatus::NullPointer, "null argument"),
    })
}

/// Writes whether `a == b`. Elements of different orders are an error.
///
/// # Safety
/// `a` and `b` must be live elements and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_equal(a: *const QgElement, b: *const QgElement, out: *mut bool) -> QgStatus {
    guarded(|| match (element(a), element(b), out.is_null()) {
        (Some(a), Some(b), false) => match a.checked_sub(b) {
            Ok(diff) => {
                *out = diff.is_zero();
                QgStatus::Ok
            }
            Err(e) => from_algebra(e),
        },
        _ => fail(QgStatus::NullPointer, "null argument"),
    })
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Normal form of `a` as text, e.g. `(1+q)x`. Null for a null handle.
///
/// # Safety
/// `a` must be null or a live element. Free the result with [`qg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qg_to_string(a: *const QgElement) -> *mut c_char {
    element(a).map_or(ptr::null_mut(), |a| into_c(format_plane(a)))
}

/// Normal form of `a` as JSON. Null for a null handle.
///
/// # Safety
/// `a` must be null or a live element. Free the result with [`qg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qg_to_json(a: *const QgElement) -> *mut c_char {
    element(a).map_or(ptr::null_mut(), |a| into_c(to_json_string(&plane_json(a))))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from [`qg_to_string`] or [`qg_to_json`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn qg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs the identity battery at one order. `*pass` is set even when some rows fail,
/// in which case the status is `VerifyFailed` and the last error names them.
///
/// # Safety
/// `pass` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qg_verify(order: usize, seed: u64, cases: usize, pass: *mut bool) -> QgStatus {
    guarded(|| {
        if pass.is_null() {
            return fail(QgStatus::NullPointer, "null output pointer");
        }
        match verify::run(order, seed, cases) {
            Ok(report) => {
                *pass = report.all_pass();
                if report.all_pass() {
                    QgStatus::Ok
                } else {
                    let failed: Vec<&str> =
                        report.rows.iter().filter(|r| !r.pass).map(|r| r.identity.as_str()).collect();
                    fail(QgStatus::VerifyFailed, format!("failed: {}", failed.join(", ")))
                }
            }
            Err(e) => from_algebra(e),
        }
    })
}

/// Message for the last failure on this thread, or null. The pointer stays valid
/// until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_errors_map_to_codes() {
        assert_eq!(algebra_status(&AlgebraError::InvalidOrder(1)), QgStatus::InvalidOrder);
        assert_eq!(algebra_status(&AlgebraError::NotInvertible), QgStatus::AlgebraError);
    }

    #[test]
    fn error_slot_is_cleared() {
        set_error("boom");
        assert!(!qg_last_error().is_null());
        guarded(|| QgStatus::Ok);
        assert!(qg_last_error().is_null());
    }
}
