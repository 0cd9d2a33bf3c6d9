//! C ABI for hopfkit.
//!
//! Algebras are opaque `HkAlgebra` handles created by `hk_algebra_from_*` and
//! released with `hk_algebra_free`. Every call returns an `HkStatus`; on
//! failure `hk_last_error_message` describes the problem. Strings handed out
//! by the library are freed with `hk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hopfkit::center::hopf_center;
use hopfkit::cocenter::hopf_cocenter;
use hopfkit::hopf::verify_axioms;
use hopfkit::{Error, HopfAlgebra};

/// Status codes. `HK_STATUS_OK` and the next two match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkStatus {
    Ok = 0,
    CertificateFailed = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Internal = 4,
}

/// A verified Hopf algebra.
pub struct HkAlgebra {
    inner: Arc<HopfAlgebra>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> HkStatus {
    if e.is_input_error() {
        HkStatus::InvalidInput
    } else {
        HkStatus::CertificateFailed
    }
}

/// Runs `f`, recording errors and converting panics to `HK_STATUS_INTERNAL`.
fn guard(f: impl FnOnce() -> Result<(), (HkStatus, String)>) -> HkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HkStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic)");
            HkStatus::Internal
        }
    }
}

fn fail(e: Error) -> (HkStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (HkStatus, String) {
    (HkStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (HkStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a NUL-terminated string.
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HkStatus::InvalidInput, format!("{what} is not valid UTF-8")))
}

unsafe fn algebra<'a>(h: *const HkAlgebra) -> Result<&'a HkAlgebra, (HkStatus, String)> {
    if h.is_null() {
        return Err(null("algebra"));
    }
    // SAFETY: non-null handles come from hk_algebra_from_*.
    Ok(&*h)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

fn publish(h: HopfAlgebra, out: *mut *mut HkAlgebra) -> Result<(), (HkStatus, String)> {
    let cert = verify_axioms(&h);
    if let Some(f) = cert.failures().next() {
        return Err((HkStatus::CertificateFailed, format!("axiom {} fails at {:?}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let boxed = Box::new(HkAlgebra { inner: Arc::new(h) });
    // SAFETY: out checked non-null by the caller.
    unsafe { *out = Box::into_raw(boxed) };
    Ok(())
}

/// Builds a builtin algebra from a spec such as `"group-algebra:Q8"` or
/// `"small-quantum-sl2:p=3"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_algebra_from_builtin(spec: *const c_char, out: *mut *mut HkAlgebra) -> HkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let spec = read_str(spec, "spec")?;
        publish(hopfkit::cli::builtin(spec).map_err(fail)?, out)
    })
}

/// Parses structure constants in the JSON file format and verifies the axioms.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_algebra_from_json(json: *const c_char, out: *mut *mut HkAlgebra) -> HkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        publish(hopfkit::format::parse_str(text).map_err(fail)?, out)
    })
}

/// # Safety
/// `h` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hk_algebra_free(h: *mut HkAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_algebra_dim(h: *const HkAlgebra, out: *mut usize) -> HkStatus {
    guard(|| {
        let h = algebra(h)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = h.inner.dim();
        Ok(())
    })
}

/// Serializes to the JSON file format; free the result with `hk_string_free`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_algebra_to_json(h: *const HkAlgebra, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        let h = algebra(h)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(hopfkit::format::serialize(&h.inner));
        Ok(())
    })
}

/// Dimension of the largest Hopf subalgebra inside the center.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_hopf_center_dim(h: *const HkAlgebra, out: *mut usize) -> HkStatus {
    guard(|| {
        let h = algebra(h)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = hopf_center(&h.inner).map_err(fail)?.dim();
        Ok(())
    })
}

/// Dimension of the universal cocentral quotient.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_hopf_cocenter_dim(h: *const HkAlgebra, out: *mut usize) -> HkStatus {
    guard(|| {
        let h = algebra(h)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = hopf_cocenter(&h.inner).map_err(fail)?.dim();
        Ok(())
    })
}

/// Runs a CLI command, e.g. `{"hopf-center", "--builtin", "sweedler", "--format", "json"}`
/// (no program name). `out_report` receives stdout, or stderr when the command
/// failed before producing a report; `out_exit_code` receives the CLI exit code.
/// The return value is `HK_STATUS_OK` whenever the command ran.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn hk_run(
    argc: usize,
    argv: *const *const c_char,
    out_report: *mut *mut c_char,
    out_exit_code: *mut c_int,
) -> HkStatus {
    guard(|| {
        if out_report.is_null() || out_exit_code.is_null() {
            return Err(null("out"));
        }
        if argv.is_null() && argc > 0 {
            return Err(null("argv"));
        }
        let mut args = vec!["hopfkit".to_string()];
        for i in 0..argc {
            args.push(read_str(*argv.add(i), "argv entry")?.to_string());
        }
        let out = hopfkit::cli::run_args(args);
        *out_exit_code = out.code;
        *out_report = into_c_string(if out.stdout.is_empty() { out.stderr } else { out.stdout });
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or NULL. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
