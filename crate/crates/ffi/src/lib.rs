//! C ABI over `gbsf`.
//!
//! Every fallible function returns a [`GbsfStatus`] and writes its result
//! through an out pointer. On failure the message is available from
//! [`gbsf_last_error`] on the same thread. Handles and strings returned by
//! the library are owned by the caller and released with the matching
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gbsf::closed_form::closed_form_basis;
use gbsf::groebner::GroebnerBasis;
use gbsf::lefschetz::{verify_wlp, WlpOptions};
use gbsf::poly::{OrderFamily, TermOrder};
use gbsf::resolution::{
    betti_from_mvt, betti_ghp, betti_murai, build_mvt, initial_ideal, BettiTable,
};
use gbsf::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbsfStatus {
    Ok = 0,
    InvalidArgument = 1,
    InvalidPermutation = 2,
    NotSquarefree = 3,
    Parse = 4,
    Degenerate = 5,
    Mismatch = 6,
    Internal = 7,
    NullPointer = 8,
    OutOfRange = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbsfOrder {
    DegRevLex = 0,
    Lex = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbsfBettiMethod {
    /// Table of the squarefree part `J` of the initial ideal.
    Ghp = 0,
    Murai = 1,
    Mvt = 2,
}

/// Opaque reduced Gröbner basis.
pub struct GbsfBasis {
    inner: GroebnerBasis,
}

/// Opaque graded Betti table.
pub struct GbsfBetti {
    inner: BettiTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GbsfStatus {
    match e {
        Error::InvalidArgument(_) | Error::LengthMismatch { .. } | Error::ZeroPolynomial => {
            GbsfStatus::InvalidArgument
        }
        Error::InvalidPermutation(_) => GbsfStatus::InvalidPermutation,
        Error::NotSquarefree(_) => GbsfStatus::NotSquarefree,
        Error::Parse { .. } => GbsfStatus::Parse,
        Error::Degenerate(_) => GbsfStatus::Degenerate,
        Error::Mismatch(_) => GbsfStatus::Mismatch,
        Error::Internal(_) => GbsfStatus::Internal,
    }
}

/// Runs `f`, recording errors and panics.
fn guard(f: impl FnOnce() -> Result<(), (GbsfStatus, String)>) -> GbsfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GbsfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("panic: {msg}"));
            GbsfStatus::Panic
        }
    }
}

fn lib<T>(r: gbsf::Result<T>) -> Result<T, (GbsfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (GbsfStatus, String) {
    (GbsfStatus::NullPointer, format!("{what} is null"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("interior NULs removed")
        .into_raw()
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (GbsfStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gbsf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gbsf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gbsf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Closed-form reduced Gröbner basis of `I_{n,k}`. `sigma` lists the
/// variable ranking (largest first, 1-based) and may be null for the
/// identity ranking.
///
/// # Safety
/// `sigma` must point to `sigma_len` values or be null; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_basis_new(
    n: usize,
    k: usize,
    order: GbsfOrder,
    sigma: *const usize,
    sigma_len: usize,
    out: *mut *mut GbsfBasis,
) -> GbsfStatus {
    guard(|| {
        let family = match order {
            GbsfOrder::DegRevLex => OrderFamily::DegRevLex,
            GbsfOrder::Lex => OrderFamily::Lex,
        };
        let sigma: Vec<usize> = if sigma.is_null() {
            (1..=n).collect()
        } else {
            std::slice::from_raw_parts(sigma, sigma_len).to_vec()
        };
        let order = lib(TermOrder::from_sigma(family, &sigma))?;
        let inner = lib(closed_form_basis(n, k, &order))?;
        write_out(out, Box::into_raw(Box::new(GbsfBasis { inner })))
    })
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `basis` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gbsf_basis_len(basis: *const GbsfBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.inner.len())
}

/// Generator `index` as text, e.g. `x1*x2 + x1*x3`. Free with
/// [`gbsf_string_free`].
///
/// # Safety
/// `basis` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_basis_generator(
    basis: *const GbsfBasis,
    index: usize,
    out: *mut *mut c_char,
) -> GbsfStatus {
    guard(|| {
        let b = basis.as_ref().ok_or_else(|| null("basis"))?;
        let g = b.inner.generators().get(index).ok_or_else(|| {
            (
                GbsfStatus::OutOfRange,
                format!(
                    "index {index} out of range for {} generators",
                    b.inner.len()
                ),
            )
        })?;
        write_out(out, into_c_string(g.to_string()))
    })
}

/// # Safety
/// `basis` must come from [`gbsf_basis_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gbsf_basis_free(basis: *mut GbsfBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Hilbert series coefficients of `R/I_{n,k}`, space separated.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_hilbert_series(
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> GbsfStatus {
    guard(|| {
        let h = lib(gbsf::lattice::hilbert_series(n, k))?;
        write_out(out, into_c_string(h.to_string()))
    })
}

/// Number of distinct reduced Gröbner bases over all variable rankings, in
/// decimal.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_count_bases(n: usize, k: usize, out: *mut *mut c_char) -> GbsfStatus {
    guard(|| {
        let c = lib(gbsf::closed_form::count_distinct_bases(n, k))?;
        write_out(out, into_c_string(c.to_string()))
    })
}

/// Predicted WLP verdict for `R/I_{n,k}`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_classify_wlp(n: usize, k: usize, out: *mut bool) -> GbsfStatus {
    guard(|| {
        let v = lib(gbsf::lefschetz::classify_wlp(n, k))?;
        write_out(out, v)
    })
}

/// Exact rank check of WLP. `holds` receives the computed verdict and
/// `agrees` whether it matches the classification. Either may be null.
///
/// # Safety
/// Non-null out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_verify_wlp(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
    holds: *mut bool,
    agrees: *mut bool,
) -> GbsfStatus {
    guard(|| {
        let opts = WlpOptions {
            trials,
            seed,
            want_witness: false,
            ..WlpOptions::default()
        };
        let v = lib(verify_wlp(n, k, &opts))?;
        if !holds.is_null() {
            holds.write(v.holds);
        }
        if !agrees.is_null() {
            agrees.write(v.agrees());
        }
        Ok(())
    })
}

/// Graded Betti table of `in(I_{n,k})`, or of its squarefree part for
/// [`GbsfBettiMethod::Ghp`].
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_betti_new(
    n: usize,
    k: usize,
    method: GbsfBettiMethod,
    out: *mut *mut GbsfBetti,
) -> GbsfStatus {
    guard(|| {
        let inner = match method {
            GbsfBettiMethod::Ghp => lib(betti_ghp(n, k))?,
            GbsfBettiMethod::Murai => lib(betti_murai(n, k))?,
            GbsfBettiMethod::Mvt => {
                let b = betti_from_mvt(&build_mvt(&lib(initial_ideal(n, k))?));
                if !b.minimal_certified {
                    return Err((
                        GbsfStatus::Mismatch,
                        "Mayer-Vietoris tree is not certified minimal".into(),
                    ));
                }
                b.table
            }
        };
        write_out(out, Box::into_raw(Box::new(GbsfBetti { inner })))
    })
}

/// `β_{p,p+s}`: homological degree `p`, row `s`. 0 for a null handle.
///
/// # Safety
/// `table` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gbsf_betti_get(table: *const GbsfBetti, p: usize, s: usize) -> u64 {
    table.as_ref().map_or(0, |t| t.inner.get(p, s))
}

/// Projective dimension and regularity. Both are 0 for an empty table.
///
/// # Safety
/// `table` must be a live handle; out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_betti_pd_reg(
    table: *const GbsfBetti,
    pd: *mut usize,
    reg: *mut usize,
) -> GbsfStatus {
    guard(|| {
        let t = table.as_ref().ok_or_else(|| null("table"))?;
        write_out(pd, t.inner.pd().unwrap_or(0))?;
        write_out(reg, t.inner.reg().unwrap_or(0))
    })
}

/// Betti diagram as text.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gbsf_betti_to_string(
    table: *const GbsfBetti,
    out: *mut *mut c_char,
) -> GbsfStatus {
    guard(|| {
        let t = table.as_ref().ok_or_else(|| null("table"))?;
        write_out(out, into_c_string(t.inner.to_string()))
    })
}

/// # Safety
/// `table` must come from [`gbsf_betti_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gbsf_betti_free(table: *mut GbsfBetti) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Copies a C string for tests and Rust callers.
///
/// # Safety
/// `s` must be a valid NUL-terminated string or null.
pub unsafe fn to_owned_string(s: *const c_char) -> Option<String> {
    (!s.is_null()).then(|| CStr::from_ptr(s).to_string_lossy().into_owned())
}
