//! C interface to the curves engine.
//!
//! Handles returned by [`curves_system_new`] are opaque; release them with
//! [`curves_system_free`]. Strings cross the boundary as NUL-terminated
//! UTF-8. Every fallible call reports a [`CurvesStatus`]; panics are caught
//! at the boundary and surface as [`CurvesStatus::InternalError`].

#![deny(unsafe_op_in_unsafe_fn)]

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use curves::codes::{build_x0, CurveCode};
use curves::verify::{self, Engine, VerifyError};

/// A fixed collection of curves on the closed genus-3 surface.
pub struct CurvesSystem {
    members: Vec<CurveCode>,
}

/// Status code returned by every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurvesStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A curve code failed to parse.
    ParseError = 3,
    /// An argument was outside the supported range.
    DomainError = 4,
    /// The engine failed an internal consistency check.
    InternalError = 5,
}

fn status_of(err: &VerifyError) -> CurvesStatus {
    match err {
        VerifyError::WindowTooSmall(_) | VerifyError::Formula(_) => CurvesStatus::DomainError,
        _ => CurvesStatus::InternalError,
    }
}

fn guarded(f: impl FnOnce() -> CurvesStatus) -> CurvesStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CurvesStatus::InternalError)
}

fn write_c_string(text: &str, buf: *mut c_char, cap: usize) -> CurvesStatus {
    let bytes = text.as_bytes();
    if bytes.len() + 1 > cap {
        return CurvesStatus::DomainError;
    }
    // SAFETY: the caller promised `cap` writable bytes behind `buf`.
    unsafe {
        std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), bytes.len());
        buf.add(bytes.len()).write(0);
    }
    CurvesStatus::Ok
}

/// Parses a caller-supplied curve code.
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string.
unsafe fn parse_arg(text: *const c_char) -> Result<CurveCode, CurvesStatus> {
    if text.is_null() {
        return Err(CurvesStatus::NullArgument);
    }
    // SAFETY: non-null and NUL-terminated per the caller contract.
    let raw = unsafe { CStr::from_ptr(text) };
    let s = raw.to_str().map_err(|_| CurvesStatus::InvalidUtf8)?;
    CurveCode::parse(s).map_err(|_| CurvesStatus::ParseError)
}

/// Builds the standard 33-curve system. Returns NULL only if construction
/// fails; release the handle with [`curves_system_free`].
#[no_mangle]
pub extern "C" fn curves_system_new() -> *mut CurvesSystem {
    catch_unwind(|| {
        Box::into_raw(Box::new(CurvesSystem {
            members: build_x0(),
        }))
    })
    .unwrap_or(std::ptr::null_mut())
}

/// Releases a system handle. NULL is a no-op.
///
/// # Safety
/// `sys` must be NULL or an unreleased pointer from [`curves_system_new`].
#[no_mangle]
pub unsafe extern "C" fn curves_system_free(sys: *mut CurvesSystem) {
    if !sys.is_null() {
        // SAFETY: ownership is returned exactly once per the caller contract.
        drop(unsafe { Box::from_raw(sys) });
    }
}

/// Number of curves in the system; 0 for NULL.
///
/// # Safety
/// `sys` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn curves_system_len(sys: *const CurvesSystem) -> usize {
    if sys.is_null() {
        return 0;
    }
    // SAFETY: live handle per the caller contract.
    unsafe { &(*sys).members }.len()
}

/// Writes the code of curve `index` into `buf` as a NUL-terminated string.
/// Fails with `DomainError` when the index is out of range or `cap` cannot
/// hold the text plus terminator.
///
/// # Safety
/// `sys` must be a live handle and `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn curves_system_code(
    sys: *const CurvesSystem,
    index: usize,
    buf: *mut c_char,
    cap: usize,
) -> CurvesStatus {
    if sys.is_null() || buf.is_null() {
        return CurvesStatus::NullArgument;
    }
    guarded(|| {
        // SAFETY: live handle per the caller contract.
        let members = unsafe { &(*sys).members };
        match members.get(index) {
            Some(code) => write_c_string(&code.to_string(), buf, cap),
            None => CurvesStatus::DomainError,
        }
    })
}

/// Geometric intersection number of two curve codes, computed by both
/// engines and cross-checked.
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn curves_intersection(
    a: *const c_char,
    b: *const c_char,
    out: *mut u32,
) -> CurvesStatus {
    if out.is_null() {
        return CurvesStatus::NullArgument;
    }
    guarded(|| {
        // SAFETY: NUL-terminated strings per the caller contract.
        let a = match unsafe { parse_arg(a) } {
            Ok(code) => code,
            Err(status) => return status,
        };
        // SAFETY: as above.
        let b = match unsafe { parse_arg(b) } {
            Ok(code) => code,
            Err(status) => return status,
        };
        match verify::intersection(&a, &b, Engine::Both) {
            Ok(i) => match i.value() {
                Some(v) => {
                    // SAFETY: `out` is non-null and writable.
                    unsafe { out.write(v) };
                    CurvesStatus::Ok
                }
                None => CurvesStatus::InternalError,
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Checks every pair in the system with both engines and writes the largest
/// pairwise intersection number to `out_max`. `Ok` means the check ran;
/// the system is a 1-system exactly when `*out_max <= 1`.
///
/// # Safety
/// `sys` must be a live handle and `out_max` must be writable.
#[no_mangle]
pub unsafe extern "C" fn curves_verify_1system(
    sys: *const CurvesSystem,
    out_max: *mut u32,
) -> CurvesStatus {
    if sys.is_null() || out_max.is_null() {
        return CurvesStatus::NullArgument;
    }
    guarded(|| {
        // SAFETY: live handle per the caller contract.
        let members = unsafe { &(*sys).members };
        match verify::is_k_system(members, 1, Engine::Both) {
            Ok(report) => {
                // SAFETY: `out_max` is non-null and writable.
                unsafe { out_max.write(report.max_pairwise) };
                CurvesStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Runs the saturation check over the twist window `[-radius, radius + 1]`
/// and writes the number of admissible non-members to `out_admissible`.
/// `Ok` with 0 admissible means no curve can be added to the system. Needs
/// `radius >= 2` for the window tail argument; smaller radii fail with
/// `DomainError`.
///
/// # Safety
/// `sys` must be a live handle and `out_admissible` must be writable.
#[no_mangle]
pub unsafe extern "C" fn curves_saturation(
    sys: *const CurvesSystem,
    radius: i32,
    out_admissible: *mut usize,
) -> CurvesStatus {
    if sys.is_null() || out_admissible.is_null() {
        return CurvesStatus::NullArgument;
    }
    guarded(|| {
        // SAFETY: live handle per the caller contract.
        let members = unsafe { &(*sys).members };
        match verify::saturation_check(members, radius, Engine::Formula) {
            Ok(report) => {
                // SAFETY: `out_admissible` is non-null and writable.
                unsafe { out_admissible.write(report.admissible.len()) };
                if report.tail.sound {
                    CurvesStatus::Ok
                } else {
                    CurvesStatus::InternalError
                }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Static description of a status code. Never NULL.
#[no_mangle]
pub extern "C" fn curves_status_message(status: CurvesStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        CurvesStatus::Ok => b"ok\0",
        CurvesStatus::NullArgument => b"null argument\0",
        CurvesStatus::InvalidUtf8 => b"string is not valid utf-8\0",
        CurvesStatus::ParseError => b"unparseable curve code\0",
        CurvesStatus::DomainError => b"argument outside the supported range\0",
        CurvesStatus::InternalError => b"internal engine failure\0",
    };
    text.as_ptr().cast::<c_char>()
}
