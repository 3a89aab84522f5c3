//! C interface to `mcluster`.
//!
//! Quivers are opaque [`McqQuiver`] handles released with
//! [`mcq_quiver_free`]. Every fallible function returns an [`McqStatus`] and
//! writes its result through an out-pointer; on failure a description is
//! available from [`mcq_last_error_message`] on the same thread. Strings
//! returned by the library are released with [`mcq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mcluster::derived::build_quotient;
use mcluster::dissection::facets;
use mcluster::gamma::build_gamma;
use mcluster::io::{Metadata, QuiverDocument};
use mcluster::polygon::PolygonConfig;
use mcluster::power::power;
use mcluster::quiver::{
    check_translation_quiver, is_stable, stable_components, tq_isomorphism, TranslationQuiver,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McqStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    Parse = 3,
    PropertyFailed = 4,
    Internal = 5,
}

/// Opaque translation quiver.
pub struct McqQuiver {
    tq: TranslationQuiver,
    metadata: Metadata,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn fail(status: McqStatus, msg: impl Into<String>) -> McqStatus {
    set_error(msg);
    status
}

fn status_of(e: &mcluster::Error) -> McqStatus {
    match e {
        mcluster::Error::Parse(_) | mcluster::Error::Malformed(_) => McqStatus::Parse,
        mcluster::Error::NotStable | mcluster::Error::PsiVerification(_) => {
            McqStatus::PropertyFailed
        }
        _ => McqStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> McqStatus) -> McqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == McqStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(McqStatus::Internal, "internal panic"),
    }
}

unsafe fn quiver_ref<'a>(q: *const McqQuiver) -> Result<&'a McqQuiver, McqStatus> {
    // SAFETY: the caller passes null or a live handle from this library.
    unsafe { q.as_ref() }.ok_or_else(|| fail(McqStatus::NullPointer, "null quiver handle"))
}

unsafe fn emit<T>(out: *mut T, value: T) -> McqStatus {
    if out.is_null() {
        return fail(McqStatus::NullPointer, "null output pointer");
    }
    // SAFETY: checked non-null; the caller provides writable storage.
    unsafe { out.write(value) };
    McqStatus::Ok
}

unsafe fn emit_quiver(out: *mut *mut McqQuiver, q: McqQuiver) -> McqStatus {
    if out.is_null() {
        return fail(McqStatus::NullPointer, "null output pointer");
    }
    // SAFETY: as in `emit`.
    unsafe { out.write(Box::into_raw(Box::new(q))) };
    McqStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Quiver of m-diagonals of the `(nm+2)`-gon.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_gamma_new(n: u32, m: u32, out: *mut *mut McqQuiver) -> McqStatus {
    guard(|| match build_gamma(n, m) {
        Ok(g) => unsafe {
            emit_quiver(
                out,
                McqQuiver {
                    tq: g.into_translation_quiver(),
                    metadata: Metadata::new("gamma", Some(n), Some(m)),
                },
            )
        },
        Err(e) => fail(status_of(&e), e.to_string()),
    })
}

/// `ZA_{n-1}` modulo `τ^{-1} S^m`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_ar_quiver_new(n: u32, m: u32, out: *mut *mut McqQuiver) -> McqStatus {
    guard(|| match build_quotient(n, m) {
        Ok(q) => unsafe {
            emit_quiver(
                out,
                McqQuiver {
                    tq: q.into_translation_quiver(),
                    metadata: Metadata::new("ar-quiver", Some(n), Some(m)),
                },
            )
        },
        Err(e) => fail(status_of(&e), e.to_string()),
    })
}

/// Parse a JSON quiver document.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_from_json(
    json: *const c_char,
    out: *mut *mut McqQuiver,
) -> McqStatus {
    guard(|| {
        if json.is_null() {
            return fail(McqStatus::NullPointer, "null json string");
        }
        // SAFETY: non-null and NUL-terminated per the contract.
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(_) => return fail(McqStatus::Parse, "json is not valid UTF-8"),
        };
        let parsed = QuiverDocument::from_json(text)
            .and_then(|d| Ok((d.to_translation_quiver()?, d.metadata)));
        match parsed {
            Ok((tq, metadata)) => unsafe { emit_quiver(out, McqQuiver { tq, metadata }) },
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Serialize to a JSON document; free the result with [`mcq_string_free`].
///
/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_to_json(
    q: *const McqQuiver,
    out: *mut *mut c_char,
) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        let json = QuiverDocument::from_translation_quiver(&q.tq, q.metadata.clone()).to_json();
        match CString::new(json) {
            Ok(s) => unsafe { emit(out, s.into_raw()) },
            Err(_) => fail(McqStatus::Internal, "document contains a NUL byte"),
        }
    })
}

/// # Safety
/// `q` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_free(q: *mut McqQuiver) {
    if !q.is_null() {
        // SAFETY: produced by `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(q) });
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mcq_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_vertex_count(
    q: *const McqQuiver,
    out: *mut usize,
) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        unsafe { emit(out, q.tq.len()) }
    })
}

/// Number of arrows counted with multiplicity.
///
/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_arrow_count(q: *const McqQuiver, out: *mut u32) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        unsafe { emit(out, q.tq.quiver().arrow_count()) }
    })
}

/// The m-th power as a new handle.
///
/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_power(
    q: *const McqQuiver,
    m: u32,
    out: *mut *mut McqQuiver,
) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        if m == 0 {
            return fail(
                McqStatus::InvalidArgument,
                "power exponent must be at least 1",
            );
        }
        let metadata = Metadata {
            construction: format!("{}^{m}", q.metadata.construction),
            ..q.metadata.clone()
        };
        unsafe {
            emit_quiver(
                out,
                McqQuiver {
                    tq: power(&q.tq, m),
                    metadata,
                },
            )
        }
    })
}

/// `Ok` when the translation axiom holds, `PropertyFailed` with the first
/// violation otherwise.
///
/// # Safety
/// `q` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_check(q: *const McqQuiver) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        match check_translation_quiver(&q.tq)
            .describe(&q.tq)
            .into_iter()
            .next()
        {
            None => McqStatus::Ok,
            Some(v) => fail(McqStatus::PropertyFailed, v),
        }
    })
}

/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_is_stable(q: *const McqQuiver, out: *mut bool) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        unsafe { emit(out, is_stable(&q.tq)) }
    })
}

/// Number of stable components; `PropertyFailed` if the quiver is not stable.
///
/// # Safety
/// `q` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_component_count(
    q: *const McqQuiver,
    out: *mut usize,
) -> McqStatus {
    guard(|| {
        let q = try_status!(unsafe { quiver_ref(q) });
        match stable_components(&q.tq) {
            Ok(c) => unsafe { emit(out, c.len()) },
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `a` and `b` must be null or live handles; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_quiver_isomorphic(
    a: *const McqQuiver,
    b: *const McqQuiver,
    out: *mut bool,
) -> McqStatus {
    guard(|| {
        let a = try_status!(unsafe { quiver_ref(a) });
        let b = try_status!(unsafe { quiver_ref(b) });
        unsafe { emit(out, tq_isomorphism(&a.tq, &b.tq).is_some()) }
    })
}

/// Number of facets of the m-divisible dissection complex.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcq_facet_count(n: u32, m: u32, out: *mut u64) -> McqStatus {
    guard(|| match PolygonConfig::new(n, m) {
        Ok(cfg) => unsafe { emit(out, facets(&cfg).len() as u64) },
        Err(e) => fail(status_of(&e), e.to_string()),
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn mcq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}
