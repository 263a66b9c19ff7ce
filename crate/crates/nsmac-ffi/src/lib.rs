//! C ABI for the Macdonald polynomial engine.
//!
//! Conventions:
//! - Every function returns an `NsmacStatus` code; `NSMAC_OK` (0) is success.
//! - Engines are opaque handles created with [`nsmac_engine_new`] and
//!   released with [`nsmac_engine_free`]. An engine is not thread-safe;
//!   use one per thread.
//! - String results are UTF-8, allocated by this library, written to an
//!   out-parameter, and must be released with [`nsmac_string_free`].
//! - On error, [`nsmac_last_error`] returns a message for the failing call
//!   on the same engine.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nsmac::denom::{den_of, factored_json};
use nsmac::error::Error;
use nsmac::graph::{canonical_path, Composition, MacEngine};
use nsmac::specialize::{parse_identity, specialize_mac, SpecPoint};
use nsmac::spectral::{spectre_hat, spectre_y, std_perm};
use nsmac::staircase::{verify_unreachable_pole, CellLimits};

/// Status codes mirrored by the generated header.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum NsmacStatus {
    /// Success.
    Ok = 0,
    /// Verification failed (a checked property does not hold).
    VerifyFailed = 1,
    /// Malformed input (parse or range error).
    BadInput = 2,
    /// A denominator fell outside the product form.
    NotProductForm = 3,
    /// The computation hit a resource guard.
    ResourceLimit = 4,
    /// The polynomial degenerates at the requested point.
    Degenerate = 5,
    /// Null pointer or invalid handle.
    NullPointer = 6,
    /// Any other error.
    Internal = 7,
}

/// Opaque engine handle holding the polynomial memo and the last error.
pub struct NsmacEngine {
    engine: MacEngine,
    last_error: CString,
}

fn status_of(e: &Error) -> NsmacStatus {
    match e {
        Error::Parse(_) | Error::RangeViolation(_) => NsmacStatus::BadInput,
        Error::NotProductForm { .. } => NsmacStatus::NotProductForm,
        Error::ResourceLimit(_) => NsmacStatus::ResourceLimit,
        Error::DegeneratePolynomial { .. } => NsmacStatus::Degenerate,
        _ => NsmacStatus::Internal,
    }
}

/// Creates a fresh engine. Returns null on allocation failure.
#[no_mangle]
pub extern "C" fn nsmac_engine_new() -> *mut NsmacEngine {
    let boxed = Box::new(NsmacEngine {
        engine: MacEngine::new(),
        last_error: CString::new("").unwrap(),
    });
    Box::into_raw(boxed)
}

/// Releases an engine created by [`nsmac_engine_new`].
///
/// # Safety
/// `engine` must be a pointer previously returned by [`nsmac_engine_new`]
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn nsmac_engine_free(engine: *mut NsmacEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Releases a string returned through an out-parameter.
///
/// # Safety
/// `s` must be a pointer previously written by this library.
#[no_mangle]
pub unsafe extern "C" fn nsmac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the most recent error on this engine.
///
/// The pointer stays valid until the next failing call on the same engine.
///
/// # Safety
/// `engine` must be a valid engine handle.
#[no_mangle]
pub unsafe extern "C" fn nsmac_last_error(engine: *const NsmacEngine) -> *const c_char {
    if engine.is_null() {
        return std::ptr::null();
    }
    (*engine).last_error.as_ptr()
}

unsafe fn with_engine<F>(engine: *mut NsmacEngine, out: *mut *mut c_char, f: F) -> NsmacStatus
where
    F: FnOnce(&mut MacEngine) -> Result<String, Error>,
{
    if engine.is_null() || out.is_null() {
        return NsmacStatus::NullPointer;
    }
    let handle = &mut *engine;
    let result = catch_unwind(AssertUnwindSafe(|| f(&mut handle.engine)));
    match result {
        Ok(Ok(text)) => {
            let c = CString::new(text).unwrap_or_default();
            *out = c.into_raw();
            NsmacStatus::Ok
        }
        Ok(Err(e)) => {
            handle.last_error = CString::new(e.to_string()).unwrap_or_default();
            NsmacStatus::from_error(&e)
        }
        Err(_) => {
            handle.last_error = CString::new("internal panic").unwrap_or_default();
            NsmacStatus::Internal
        }
    }
}

impl NsmacStatus {
    fn from_error(e: &Error) -> Self {
        status_of(e)
    }
}

unsafe fn parse_comp(s: *const c_char) -> Result<Composition, Error> {
    if s.is_null() {
        return Err(Error::Parse("null composition".into()));
    }
    let text = CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Error::Parse(format!("invalid UTF-8: {e}")))?;
    text.parse()
}

/// JSON rendering of M_v. `v` is a composition like `"1,0,2"` or `"102"`.
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_mac_json(
    engine: *mut NsmacEngine,
    v: *const c_char,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |eng| {
        let v = parse_comp(v)?;
        let m = eng.mac(&v)?;
        Ok(m.to_json().to_string())
    })
}

/// JSON rendering of the factored denominator Den(v).
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_den_json(
    engine: *mut NsmacEngine,
    v: *const c_char,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |eng| {
        let v = parse_comp(v)?;
        let d = den_of(eng, &v)?;
        Ok(factored_json(&d).to_string())
    })
}

/// JSON with std(v) and both spectral vectors.
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_spectre_json(
    engine: *mut NsmacEngine,
    v: *const c_char,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |_| {
        let v = parse_comp(v)?;
        Ok(serde_json::json!({
            "std": std_perm(v.parts()),
            "hat": spectre_hat(v.parts()).to_json(),
            "y": spectre_y(v.parts()).to_json(),
        })
        .to_string())
    })
}

/// Canonical path text `000 -Phi-> 001 -s2-> ...` from `0^N` to `v`.
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_path_text(
    engine: *mut NsmacEngine,
    v: *const c_char,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |_| {
        let v = parse_comp(v)?;
        Ok(canonical_path(&v).to_string())
    })
}

/// Pole-absence report for `staircase(k, a, n)` as JSON.
///
/// `max_terms` guards the brute-force walk (0 means the default guard).
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_staircase_verify_json(
    engine: *mut NsmacEngine,
    k: c_int,
    a: c_int,
    n: c_int,
    max_terms: c_int,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |eng| {
        if k <= 0 || a <= 0 || n <= 0 {
            return Err(Error::RangeViolation("k, a, n must be positive".into()));
        }
        let limits = if max_terms > 0 {
            CellLimits { max_terms: max_terms as usize }
        } else {
            CellLimits::default()
        };
        let report = verify_unreachable_pole(eng, k as usize, a as u32, n as usize, limits)?;
        Ok(report.to_json().to_string())
    })
}

/// Specializes M_v at `q^a t^b = 1` with `omega = zeta_a^omega_pow` and
/// renders the result as text.
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_specialize_text(
    engine: *mut NsmacEngine,
    v: *const c_char,
    a: c_int,
    b: c_int,
    omega_pow: c_int,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |eng| {
        let v = parse_comp(v)?;
        if a <= 0 || b <= 0 || omega_pow < 0 {
            return Err(Error::RangeViolation("a, b must be positive".into()));
        }
        let point = SpecPoint::new(a as u32, b as u32, omega_pow as u32)?;
        let s = specialize_mac(eng, &v, point)?;
        Ok(s.to_string())
    })
}

/// Checks a declarative identity (same format as the CLI identity files).
/// Writes `"true"` or `"false"`.
///
/// # Safety
/// Pointers must be valid; see the crate conventions.
#[no_mangle]
pub unsafe extern "C" fn nsmac_check_identity(
    engine: *mut NsmacEngine,
    identity_text: *const c_char,
    out: *mut *mut c_char,
) -> NsmacStatus {
    with_engine(engine, out, |eng| {
        if identity_text.is_null() {
            return Err(Error::Parse("null identity".into()));
        }
        let text = CStr::from_ptr(identity_text)
            .to_str()
            .map_err(|e| Error::Parse(format!("invalid UTF-8: {e}")))?;
        let id = parse_identity(text)?;
        Ok(id.check(eng)?.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn call_str(
        f: unsafe extern "C" fn(*mut NsmacEngine, *const c_char, *mut *mut c_char) -> NsmacStatus,
        eng: *mut NsmacEngine,
        arg: &str,
    ) -> (NsmacStatus, String) {
        let c = CString::new(arg).unwrap();
        let mut out: *mut c_char = std::ptr::null_mut();
        let status = f(eng, c.as_ptr(), &mut out);
        let text = if out.is_null() {
            String::new()
        } else {
            let s = CStr::from_ptr(out).to_str().unwrap().to_string();
            nsmac_string_free(out);
            s
        };
        (status, text)
    }

    #[test]
    fn roundtrip_through_c_abi() {
        unsafe {
            let eng = nsmac_engine_new();
            assert!(!eng.is_null());

            let (status, den) = call_str(nsmac_den_json, eng, "3,1,0");
            assert!(matches!(status, NsmacStatus::Ok));
            let parsed: serde_json::Value = serde_json::from_str(&den).unwrap();
            assert_eq!(parsed["q"], 3);

            let (status, mac) = call_str(nsmac_mac_json, eng, "102");
            assert!(matches!(status, NsmacStatus::Ok));
            let parsed: serde_json::Value = serde_json::from_str(&mac).unwrap();
            assert_eq!(parsed["terms"].as_array().unwrap().len(), 3);

            let (status, _) = call_str(nsmac_mac_json, eng, "not a composition");
            assert!(matches!(status, NsmacStatus::BadInput));
            let msg = CStr::from_ptr(nsmac_last_error(eng)).to_str().unwrap();
            assert!(msg.contains("parse"));

            let (status, path) = call_str(nsmac_path_text, eng, "102");
            assert!(matches!(status, NsmacStatus::Ok));
            assert!(path.starts_with("000 -"));

            let mut out: *mut c_char = std::ptr::null_mut();
            let status = nsmac_staircase_verify_json(eng, 1, 1, 2, 0, &mut out);
            assert!(matches!(status, NsmacStatus::Ok));
            let report: serde_json::Value =
                serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
            assert_eq!(report["absent"], true);
            nsmac_string_free(out);

            nsmac_engine_free(eng);
        }
    }

    #[test]
    fn specialize_and_identity_through_abi() {
        unsafe {
            let eng = nsmac_engine_new();
            let v = CString::new("2,1,0,0").unwrap();
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = nsmac_specialize_text(eng, v.as_ptr(), 1, 2, 1, &mut out);
            assert!(matches!(status, NsmacStatus::Ok));
            nsmac_string_free(out);

            // degenerate case surfaces the right status
            let v = CString::new("3,1,0").unwrap();
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = nsmac_specialize_text(eng, v.as_ptr(), 1, 1, 1, &mut out);
            assert!(matches!(status, NsmacStatus::Degenerate));

            let identity = "\
mac 3,2,1,0
point q t^2
vars x1 x2 x3 x4
rhs u^8
rhs u x4 - x3
rhs u x4 - x2
rhs u x3 - x2
rhs u x4 - x1
rhs u x3 - x1
rhs u x2 - x1
";
            let c = CString::new(identity).unwrap();
            let mut out: *mut c_char = std::ptr::null_mut();
            let status = nsmac_check_identity(eng, c.as_ptr(), &mut out);
            assert!(matches!(status, NsmacStatus::Ok));
            assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "true");
            nsmac_string_free(out);

            nsmac_engine_free(eng);
        }
    }
}
