//! C ABI over the f1rep engine.
//!
//! Every fallible function returns an [`F1Status`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`f1_last_error`] on the same thread. Strings returned by the library are
//! owned by the caller and released with [`f1_string_free`]; handles are
//! released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use f1rep::cli::{parse_quiver, parse_rep};
use f1rep::colored::{gamma_of, key_rep, rep_key, CanonicalKey};
use f1rep::enumerate::ni;
use f1rep::hall::{HallAlgebra, HallElement};
use f1rep::rep::is_indecomposable;
use f1rep::verify::{run_suite, Params};
use f1rep::{Error, Quiver, Representation};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F1Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    ContractViolation = 5,
    MissingTable = 6,
    Panic = 7,
}

/// Opaque quiver handle.
pub struct F1Quiver(Quiver);

/// Opaque representation handle.
pub struct F1Rep(Representation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> F1Status {
    match e {
        Error::Parse(_) => F1Status::Parse,
        Error::MissingTable(_) => F1Status::MissingTable,
        Error::DimensionMismatch(_)
        | Error::InvalidMap(_)
        | Error::InvalidQuiver(_)
        | Error::InvalidRepresentation(_)
        | Error::InvalidSubrep(_)
        | Error::InvalidShape(_)
        | Error::InvalidPermutation(_) => F1Status::InvalidInput,
        _ => F1Status::ContractViolation,
    }
}

enum Fail {
    Status(F1Status, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Run `f`, record any error, and turn panics into `F1Status::Panic`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> F1Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => F1Status::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            F1Status::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(F1Status::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Status(F1Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn quiver_ref<'a>(q: *const F1Quiver) -> Result<&'a Quiver, Fail> {
    q.as_ref().map(|q| &q.0).ok_or_else(|| null("quiver"))
}

unsafe fn rep_ref<'a>(r: *const F1Rep) -> Result<&'a Representation, Fail> {
    r.as_ref().map(|r| &r.0).ok_or_else(|| null("representation"))
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn f1_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn f1_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn f1_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a quiver from a built-in name (`L2`, `C3:++-`, `K2`, ...) or JSON
/// `{"vertices": n, "arrows": [[s, t], ...]}`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_quiver_parse(text: *const c_char, out: *mut *mut F1Quiver) -> F1Status {
    guard(|| {
        let q = parse_quiver(read_str(text, "text")?)?;
        put(out, Box::into_raw(Box::new(F1Quiver(q))), "out")
    })
}

/// # Safety
/// `q` must be NULL or a handle from [`f1_quiver_parse`] that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn f1_quiver_free(q: *mut F1Quiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// `q` must be a valid quiver handle and `vertices`, `arrows` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn f1_quiver_size(q: *const F1Quiver, vertices: *mut usize, arrows: *mut usize) -> F1Status {
    guard(|| {
        let q = quiver_ref(q)?;
        put(vertices, q.num_vertices(), "vertices")?;
        put(arrows, q.num_arrows(), "arrows")
    })
}

/// Number of nilpotent indecomposable classes of total dimension `n`.
///
/// # Safety
/// `q` must be a valid quiver handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_ni(q: *const F1Quiver, n: usize, out: *mut usize) -> F1Status {
    guard(|| {
        let q = quiver_ref(q)?;
        put(out, ni(q, n), "out")
    })
}

/// Parse a representation from JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_parse(json: *const c_char, out: *mut *mut F1Rep) -> F1Status {
    guard(|| {
        let text = read_str(json, "json")?;
        if !text.trim_start().starts_with('{') {
            return Err(Fail::Status(F1Status::Parse, "expected a JSON object".into()));
        }
        let r = parse_rep(text)?;
        put(out, Box::into_raw(Box::new(F1Rep(r))), "out")
    })
}

/// The canonical representative of the class with hex key `key` over `q`.
///
/// # Safety
/// `q` must be a valid quiver handle, `key` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_from_key(q: *const F1Quiver, key: *const c_char, out: *mut *mut F1Rep) -> F1Status {
    guard(|| {
        let q = quiver_ref(q)?;
        let k = CanonicalKey::from_hex(read_str(key, "key")?)?;
        put(out, Box::into_raw(Box::new(F1Rep(key_rep(&k, q)?))), "out")
    })
}

/// # Safety
/// `r` must be NULL or a representation handle that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_free(r: *mut F1Rep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a valid representation handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_total_dim(r: *const F1Rep, out: *mut usize) -> F1Status {
    guard(|| put(out, rep_ref(r)?.total_dim(), "out"))
}

/// Canonical key of the isomorphism class, as a hex string.
///
/// # Safety
/// `r` must be a valid representation handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_key(r: *const F1Rep, out: *mut *mut c_char) -> F1Status {
    guard(|| put(out, to_c(rep_key(rep_ref(r)?).to_hex()), "out"))
}

/// # Safety
/// `r` must be a valid representation handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_is_indecomposable(r: *const F1Rep, out: *mut bool) -> F1Status {
    guard(|| put(out, is_indecomposable(rep_ref(r)?), "out"))
}

/// DOT text for the colored quiver of `r`.
///
/// # Safety
/// `r` must be a valid representation handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_rep_dot(r: *const F1Rep, out: *mut *mut c_char) -> F1Status {
    guard(|| put(out, to_c(gamma_of(rep_ref(r)?).to_dot()), "out"))
}

/// Hall product of two nilpotent classes, as JSON `{"<key>": "p/q", ...}`.
///
/// # Safety
/// `x` and `y` must be valid representation handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_hall_product(x: *const F1Rep, y: *const F1Rep, out: *mut *mut c_char) -> F1Status {
    guard(|| {
        let (a, b) = (rep_ref(x)?, rep_ref(y)?);
        if a.quiver() != b.quiver() {
            return Err(Error::QuiverMismatch.into());
        }
        let h = HallAlgebra::new(a.quiver(), a.total_dim() + b.total_dim())?;
        let p = h.product(&HallElement::basis(h.key_of(a)?), &HallElement::basis(h.key_of(b)?))?;
        let text = serde_json::to_string(&p.to_json()).map_err(Error::from)?;
        put(out, to_c(text), "out")
    })
}

/// Run a named verification suite with its default parameters. Writes the
/// JSON report to `report` (may be NULL) and the overall verdict to `pass`.
///
/// # Safety
/// `suite` must be a NUL-terminated string, `pass` a valid pointer and
/// `report` NULL or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn f1_verify(suite: *const c_char, pass: *mut bool, report: *mut *mut c_char) -> F1Status {
    guard(|| {
        let reports = run_suite(read_str(suite, "suite")?, &Params::default())?;
        put(pass, reports.iter().all(|r| r.pass), "pass")?;
        if !report.is_null() {
            let text = serde_json::to_string(&reports).map_err(Error::from)?;
            report.write(to_c(text));
        }
        Ok(())
    })
}
