//! C interface to `superfuse`.
//!
//! Elements of the Deligne ring and Gl(2|2) decompositions cross the boundary
//! as opaque handles. Every function returns an [`SfStatus`]; on failure the
//! message is available from [`sf_last_error_message`] on the same thread.
//! Strings handed out by the library are released with [`sf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use superfuse::deligne::{gl0_tensor, lift, lift_inv, project_max_atypical, rt_tensor, truncate, RtElement};
use superfuse::gl22::{decompose, TensorDecomposition};
use superfuse::parse::parse_operand;
use superfuse::partition::{lr_coeff, Partition};
use superfuse::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Inconsistency = 5,
    Panic = 6,
}

/// A formal sum of bipartitions.
pub struct SfRtElement(RtElement);

/// The decomposition of `S^i ⊗ S^j` for Gl(2|2).
pub struct SfDecomposition(TensorDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(SfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => SfStatus::Parse,
            Error::InvalidArgument(_) | Error::Malformed(_) => SfStatus::InvalidArgument,
            Error::Inconsistency(_) => SfStatus::Inconsistency,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SfStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside superfuse");
            SfStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_elem<'a>(p: *const SfRtElement, what: &str) -> Result<&'a RtElement, Fail> {
    p.as_ref().map(|e| &e.0).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|_| Fail(SfStatus::Inconsistency, "interior NUL".into()))?.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn sf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses an operand such as `AS3`, `AL2`, `R(3,1)` or `(3|1,1,1)`, or an
/// element in its JSON encoding.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_parse(src: *const c_char, out: *mut *mut SfRtElement) -> SfStatus {
    guard(|| {
        let s = read_str(src, "src")?;
        let x = if s.trim_start().starts_with('[') {
            let v: serde_json::Value =
                serde_json::from_str(s).map_err(|e| Fail(SfStatus::Parse, format!("bad JSON: {e}")))?;
            RtElement::from_json(&v)?
        } else {
            RtElement::basis(parse_operand(s)?)
        };
        write_out(out, SfRtElement(x))
    })
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_to_json(x: *const SfRtElement, out: *mut *mut c_char) -> SfStatus {
    guard(|| write_string(out, read_elem(x, "x")?.to_json().to_string()))
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_to_text(x: *const SfRtElement, out: *mut *mut c_char) -> SfStatus {
    guard(|| write_string(out, read_elem(x, "x")?.to_text()))
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_lift(x: *const SfRtElement, out: *mut *mut SfRtElement) -> SfStatus {
    guard(|| write_out(out, SfRtElement(lift(read_elem(x, "x")?))))
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_lift_inv(x: *const SfRtElement, out: *mut *mut SfRtElement) -> SfStatus {
    guard(|| write_out(out, SfRtElement(lift_inv(read_elem(x, "x")?))))
}

/// Product in the generic ring.
///
/// # Safety
/// `x` and `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_tensor(
    x: *const SfRtElement,
    y: *const SfRtElement,
    out: *mut *mut SfRtElement,
) -> SfStatus {
    guard(|| write_out(out, SfRtElement(rt_tensor(read_elem(x, "x")?, read_elem(y, "y")?))))
}

/// Product of indecomposables at `δ = 0`.
///
/// # Safety
/// `x` and `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_gl0_tensor(
    x: *const SfRtElement,
    y: *const SfRtElement,
    out: *mut *mut SfRtElement,
) -> SfStatus {
    guard(|| write_out(out, SfRtElement(gl0_tensor(read_elem(x, "x")?, read_elem(y, "y")?)?)))
}

/// Keeps the terms surviving in Gl(n|n).
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_truncate(x: *const SfRtElement, n: u32, out: *mut *mut SfRtElement) -> SfStatus {
    guard(|| write_out(out, SfRtElement(truncate(read_elem(x, "x")?, n))))
}

/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_project_max_atypical(x: *const SfRtElement, out: *mut *mut SfRtElement) -> SfStatus {
    guard(|| write_out(out, SfRtElement(project_max_atypical(read_elem(x, "x")?))))
}

/// # Safety
/// `x` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_rt_free(x: *mut SfRtElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Decomposes `S^i ⊗ S^j` for `i, j ≥ 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_fuse(i: i64, j: i64, out: *mut *mut SfDecomposition) -> SfStatus {
    guard(|| write_out(out, SfDecomposition(decompose(i, j)?)))
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_decomposition_to_json(d: *const SfDecomposition, out: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("d"))?;
        write_string(out, d.0.to_json().to_string())
    })
}

/// # Safety
/// `d` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_decomposition_free(d: *mut SfDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Littlewood-Richardson coefficient `c^λ_{αβ}` for partitions given as
/// text, e.g. `"(2,1)"`.
///
/// # Safety
/// The three strings must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_lr_coeff(
    alpha: *const c_char,
    beta: *const c_char,
    lambda: *const c_char,
    out: *mut u64,
) -> SfStatus {
    guard(|| {
        let p = |s: *const c_char, what: &str| -> Result<Partition, Fail> { Ok(read_str(s, what)?.parse()?) };
        let (a, b, l) = (p(alpha, "alpha")?, p(beta, "beta")?, p(lambda, "lambda")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lr_coeff(&a, &b, &l);
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
