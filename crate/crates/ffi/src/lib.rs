//! C ABI over `cyclohecke`.
//!
//! Every fallible entry point returns a `CycloStatus` and writes its result
//! through an out-pointer. On a nonzero status the out-pointer is untouched
//! and `cyclo_last_error` describes the failure on the calling thread.
//! Handles and strings returned here are owned by the caller and released
//! with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclohecke::expr::{self, EvalContext, Value};
use cyclohecke::verify::{self, SuiteParams};
use cyclohecke::Error;

/// Result codes; zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Context = 4,
    Dimension = 5,
    Range = 6,
    Unsupported = 7,
    Guard = 8,
    VerifyFailed = 9,
    Other = 10,
    Panic = 11,
}

/// An algebra in which expressions are evaluated: cyclotomic or affine.
pub struct CycloContext {
    inner: EvalContext,
}

/// An element of the algebra of the context that produced it.
pub struct CycloElement {
    inner: Value,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CycloStatus {
    match e {
        Error::Syntax { .. } | Error::Parse(_) => CycloStatus::Syntax,
        Error::Context(_) => CycloStatus::Context,
        Error::Dimension(_) => CycloStatus::Dimension,
        Error::Range(_) => CycloStatus::Range,
        Error::Unsupported(_) => CycloStatus::Unsupported,
        Error::Guard(_) => CycloStatus::Guard,
        _ => CycloStatus::Other,
    }
}

/// Runs `f`, recording any error or panic; `Ok` clears the last error.
fn guarded(f: impl FnOnce() -> Result<(), (CycloStatus, String)>) -> CycloStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CycloStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("panic inside cyclohecke".into());
            CycloStatus::Panic
        }
    }
}

fn lib(e: Error) -> (CycloStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CycloStatus, String) {
    (CycloStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CycloStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (CycloStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CycloStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), (CycloStatus, String)> {
    let c = CString::new(s).map_err(|e| (CycloStatus::Other, e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cyclo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Creates ℋ_u(r) with `m` parameters, or the affine algebra when `affine`
/// is nonzero.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn cyclo_context_new(m: usize, r: usize, affine: i32, out: *mut *mut CycloContext) -> CycloStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = if affine != 0 { EvalContext::affine(m, r) } else { EvalContext::cyclotomic(m, r) }.map_err(lib)?;
        *out = Box::into_raw(Box::new(CycloContext { inner }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must be null or a handle from `cyclo_context_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cyclo_context_free(ctx: *mut CycloContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Parses and evaluates `src`, e.g. `"T1*L2 - (q-1)*L1"`.
///
/// # Safety
/// `ctx` must be a live context, `src` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cyclo_eval(ctx: *const CycloContext, src: *const c_char, out: *mut *mut CycloElement) -> CycloStatus {
    guarded(|| {
        let ctx = ref_arg(ctx, "ctx")?;
        let src = str_arg(src, "src")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = expr::eval_str(src, &ctx.inner).map_err(lib)?;
        *out = Box::into_raw(Box::new(CycloElement { inner: v }));
        Ok(())
    })
}

/// # Safety
/// `el` must be null or a handle returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_free(el: *mut CycloElement) {
    if !el.is_null() {
        drop(Box::from_raw(el));
    }
}

unsafe fn binary(
    ctx: *const CycloContext,
    a: *const CycloElement,
    b: *const CycloElement,
    out: *mut *mut CycloElement,
    mul: bool,
) -> CycloStatus {
    guarded(|| {
        let ctx = ref_arg(ctx, "ctx")?;
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let v = match (&ctx.inner, &a.inner, &b.inner) {
            (EvalContext::Cyclotomic(h), Value::Hecke(x), Value::Hecke(y)) => {
                Value::Hecke(if mul { h.multiply(x, y).map_err(lib)? } else { x.try_add(y).map_err(lib)? })
            }
            (EvalContext::Affine(h), Value::Affine(x), Value::Affine(y)) => {
                Value::Affine(if mul { h.multiply(x, y).map_err(lib)? } else { x.add(y) })
            }
            _ => return Err((CycloStatus::Context, "elements do not belong to this context".into())),
        };
        *out = Box::into_raw(Box::new(CycloElement { inner: v }));
        Ok(())
    })
}

/// `a·b` in the algebra of `ctx`.
///
/// # Safety
/// All handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_mul(
    ctx: *const CycloContext,
    a: *const CycloElement,
    b: *const CycloElement,
    out: *mut *mut CycloElement,
) -> CycloStatus {
    binary(ctx, a, b, out, true)
}

/// `a + b` in the algebra of `ctx`.
///
/// # Safety
/// All handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_add(
    ctx: *const CycloContext,
    a: *const CycloElement,
    b: *const CycloElement,
    out: *mut *mut CycloElement,
) -> CycloStatus {
    binary(ctx, a, b, out, false)
}

/// Writes 1 to `out` when the normal forms coincide, else 0.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_equal(a: *const CycloElement, b: *const CycloElement, out: *mut i32) -> CycloStatus {
    guarded(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = i32::from(a.inner == b.inner);
        Ok(())
    })
}

/// Normal form in expression syntax; parse it back with `cyclo_eval`.
///
/// # Safety
/// `el` must be live; the string written to `out` is freed with `cyclo_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_to_string(el: *const CycloElement, out: *mut *mut c_char) -> CycloStatus {
    guarded(|| {
        let el = ref_arg(el, "el")?;
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(el.inner.to_string(), out)
    })
}

/// Normal form as JSON `{m, r, terms: [{w, a, poly}]}`.
///
/// # Safety
/// As for `cyclo_element_to_string`.
#[no_mangle]
pub unsafe extern "C" fn cyclo_element_to_json(el: *const CycloElement, out: *mut *mut c_char) -> CycloStatus {
    guarded(|| {
        let el = ref_arg(el, "el")?;
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(el.inner.to_json().to_string(), out)
    })
}

/// Runs a verification suite and writes its JSON report. Returns
/// `VerifyFailed` (with the report still written) when a check fails.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cyclo_verify(
    suite: *const c_char,
    m: usize,
    n: usize,
    r: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> CycloStatus {
    let mut pass = true;
    let st = guarded(|| {
        let suite = str_arg(suite, "suite")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let p = SuiteParams { seed, ..SuiteParams::new(m, n, r) };
        let report = verify::run_suite(suite, &p).map_err(lib)?;
        pass = report.pass;
        let json = serde_json::to_string(&report).map_err(|e| (CycloStatus::Other, e.to_string()))?;
        out_string(json, out)
    });
    if st == CycloStatus::Ok && !pass {
        set_error(format!("suite failed for m={m} n={n} r={r}"));
        return CycloStatus::VerifyFailed;
    }
    st
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cyclo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
