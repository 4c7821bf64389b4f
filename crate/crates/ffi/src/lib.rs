//! C ABI over the `schubert` crate.
//!
//! Every fallible function returns a [`SchubertStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`schubert_last_error_message`] on the same thread. Objects returned
//! through out-pointers are owned by the caller and released with the
//! matching `*_free` function; strings with [`schubert_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schubert::{Error, Monomial, Permutation, Polynomial, SchubertMethod, SkewMethod};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidPermutation = 3,
    SizeMismatch = 4,
    NotBruhatLeq = 5,
    Overflow = 6,
    InvalidArgument = 7,
    Panic = 8,
}

/// Route used by [`schubert_polynomial`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertPolyMethod {
    RcGraph = 0,
    Chain = 1,
}

/// Route used by [`schubert_skew`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertSkewMethod {
    NormalForm = 0,
    Chains = 1,
    Lr = 2,
}

/// Opaque permutation handle.
pub struct SchubertPermutation(Permutation);

/// Opaque polynomial handle.
pub struct SchubertPolynomial {
    poly: Polynomial,
    n: usize,
}

/// Opaque handle to a linear combination of Schubert classes.
pub struct SchubertExpansion(schubert::SchubertExpansion);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> SchubertStatus {
    match err {
        Error::InvalidPermutation(_) | Error::InvalidCode { .. } | Error::Parse(_) => SchubertStatus::InvalidPermutation,
        Error::SizeMismatch { .. } | Error::Embed { .. } => SchubertStatus::SizeMismatch,
        Error::NotBruhatLeq { .. } => SchubertStatus::NotBruhatLeq,
        Error::Overflow => SchubertStatus::Overflow,
        _ => SchubertStatus::InvalidArgument,
    }
}

struct Failure(SchubertStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SchubertStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any error and converts panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SchubertStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SchubertStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            SchubertStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Ambient size: `n` if nonzero, else the size of the largest argument.
fn ambient(n: usize, perms: &[&Permutation]) -> usize {
    if n == 0 {
        perms.iter().map(|p| p.n()).max().unwrap_or(1)
    } else {
        n
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[unsafe(no_mangle)]
pub extern "C" fn schubert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses a permutation in one-line notation, e.g. `"2413"` or `"10,2,…"`.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_perm_parse(text: *const c_char, out: *mut *mut SchubertPermutation) -> SchubertStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| Failure(SchubertStatus::InvalidUtf8, e.to_string()))?;
        let p: Permutation = s.parse()?;
        unsafe { write_out(out, Box::into_raw(Box::new(SchubertPermutation(p)))) }
    })
}

/// # Safety
/// `p` must be null or a handle from [`schubert_perm_parse`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_perm_free(p: *mut SchubertPermutation) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of inversions.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_perm_length(p: *const SchubertPermutation, out: *mut usize) -> SchubertStatus {
    guard(|| {
        let p = unsafe { borrow(p, "permutation") }?;
        unsafe { write_out(out, p.0.length()) }
    })
}

/// Size `n` of the permutation, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_perm_size(p: *const SchubertPermutation) -> usize {
    unsafe { p.as_ref() }.map_or(0, |p| p.0.n())
}

/// One-line notation; free with [`schubert_string_free`]. Null on a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_perm_to_string(p: *const SchubertPermutation) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => to_c_string(p.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// The Schubert polynomial of `w` in `S_n` (`n = 0` uses the size of `w`).
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_polynomial(
    w: *const SchubertPermutation,
    n: usize,
    method: SchubertPolyMethod,
    out: *mut *mut SchubertPolynomial,
) -> SchubertStatus {
    guard(|| {
        let w = unsafe { borrow(w, "w") }?;
        let n = ambient(n, &[&w.0]);
        let method = match method {
            SchubertPolyMethod::RcGraph => SchubertMethod::RcGraph,
            SchubertPolyMethod::Chain => SchubertMethod::Chain,
        };
        let poly = schubert::schubert(&w.0.embed(n)?, n, method)?;
        unsafe { write_out(out, Box::into_raw(Box::new(SchubertPolynomial { poly, n }))) }
    })
}

/// The skew Schubert polynomial `S_{w/u}` (`n = 0` uses the larger size).
///
/// # Safety
/// `w` and `u` must be live handles and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_skew(
    w: *const SchubertPermutation,
    u: *const SchubertPermutation,
    n: usize,
    method: SchubertSkewMethod,
    out: *mut *mut SchubertPolynomial,
) -> SchubertStatus {
    guard(|| {
        let w = unsafe { borrow(w, "w") }?;
        let u = unsafe { borrow(u, "u") }?;
        let n = ambient(n, &[&w.0, &u.0]);
        let method = match method {
            SchubertSkewMethod::NormalForm => SkewMethod::NormalForm,
            SchubertSkewMethod::Chains => SkewMethod::Chains,
            SchubertSkewMethod::Lr => SkewMethod::Lr,
        };
        let poly = schubert::skew(&w.0.embed(n)?, &u.0.embed(n)?, n, method)?;
        unsafe { write_out(out, Box::into_raw(Box::new(SchubertPolynomial { poly, n }))) }
    })
}

/// # Safety
/// `p` must be null or a polynomial handle from this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_free(p: *mut SchubertPolynomial) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_num_terms(p: *const SchubertPolynomial) -> usize {
    unsafe { p.as_ref() }.map_or(0, |p| p.poly.len())
}

/// Text form such as `x1^2*x2 + x1*x2^2`. Null on a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_to_string(p: *const SchubertPolynomial) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => to_c_string(p.poly.to_string()),
        None => ptr::null_mut(),
    }
}

/// JSON list of `{"exp": [...], "coef": c}` terms. Null on a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_to_json(p: *const SchubertPolynomial) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(p) => to_c_string(p.poly.to_json(p.n)),
        None => ptr::null_mut(),
    }
}

/// Coefficient of `x^exps`, where `exps` holds `len` exponents.
///
/// # Safety
/// `p` must be a live handle, `exps` must point to `len` values (or be null
/// with `len == 0`) and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_coefficient(
    p: *const SchubertPolynomial,
    exps: *const u32,
    len: usize,
    out: *mut i64,
) -> SchubertStatus {
    guard(|| {
        let p = unsafe { borrow(p, "polynomial") }?;
        let exps = if len == 0 {
            &[][..]
        } else if exps.is_null() {
            return Err(null("exps"));
        } else {
            unsafe { std::slice::from_raw_parts(exps, len) }
        };
        let m = Monomial::new(exps.to_vec());
        unsafe { write_out(out, p.poly.coefficient(&m)) }
    })
}

/// The coefficients `c^w_{u,v}` of `S_u · S_v` in `S_n` (`n = 0` uses the
/// larger size).
///
/// # Safety
/// `u` and `v` must be live handles and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_lr(
    u: *const SchubertPermutation,
    v: *const SchubertPermutation,
    n: usize,
    out: *mut *mut SchubertExpansion,
) -> SchubertStatus {
    guard(|| {
        let u = unsafe { borrow(u, "u") }?;
        let v = unsafe { borrow(v, "v") }?;
        let n = ambient(n, &[&u.0, &v.0]);
        let e = schubert::lr_coefficients(&u.0.embed(n)?, &v.0.embed(n)?, n)?;
        unsafe { write_out(out, Box::into_raw(Box::new(SchubertExpansion(e)))) }
    })
}

/// Expands a polynomial in the Schubert basis of its ambient `S_n`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_poly_expand(
    p: *const SchubertPolynomial,
    out: *mut *mut SchubertExpansion,
) -> SchubertStatus {
    guard(|| {
        let p = unsafe { borrow(p, "polynomial") }?;
        let e = schubert::expand_in_schubert_basis(&p.poly, p.n)?;
        unsafe { write_out(out, Box::into_raw(Box::new(SchubertExpansion(e)))) }
    })
}

/// # Safety
/// `e` must be null or an expansion handle from this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_expansion_free(e: *mut SchubertExpansion) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_expansion_len(e: *const SchubertExpansion) -> usize {
    unsafe { e.as_ref() }.map_or(0, |e| e.0.len())
}

/// Coefficient of the class of `w`.
///
/// # Safety
/// `e` and `w` must be live handles and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_expansion_coefficient(
    e: *const SchubertExpansion,
    w: *const SchubertPermutation,
    out: *mut i64,
) -> SchubertStatus {
    guard(|| {
        let e = unsafe { borrow(e, "expansion") }?;
        let w = unsafe { borrow(w, "w") }?;
        let c = if w.0.n() > e.0.n() { 0 } else { e.0.get(&w.0.embed(e.0.n())?) };
        unsafe { write_out(out, c) }
    })
}

/// JSON object mapping permutations to coefficients. Null on a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_expansion_to_json(e: *const SchubertExpansion) -> *mut c_char {
    match unsafe { e.as_ref() } {
        Some(e) => to_c_string(e.0.to_json()),
        None => ptr::null_mut(),
    }
}

/// Number of rc-graphs of `w` in `S_n` (`n = 0` uses the size of `w`).
///
/// # Safety
/// `w` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn schubert_rcgraph_count(
    w: *const SchubertPermutation,
    n: usize,
    out: *mut usize,
) -> SchubertStatus {
    guard(|| {
        let w = unsafe { borrow(w, "w") }?;
        let w = w.0.embed(ambient(n, &[&w.0]))?;
        unsafe { write_out(out, schubert::rcgraph::enumerate(&w).count()) }
    })
}
