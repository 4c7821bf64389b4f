use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use schubert_ffi::*;

fn perm(s: &str) -> *mut SchubertPermutation {
    let text = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { schubert_perm_parse(text.as_ptr(), &mut out) }, SchubertStatus::Ok);
    out
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { schubert_string_free(s) };
    owned
}

fn last_error() -> String {
    let msg = schubert_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }.to_str().unwrap().to_owned()
}

#[test]
fn permutation_round_trip() {
    let p = perm("2413");
    let mut len = 0;
    assert_eq!(unsafe { schubert_perm_length(p, &mut len) }, SchubertStatus::Ok);
    assert_eq!(len, 3);
    assert_eq!(unsafe { schubert_perm_size(p) }, 4);
    assert_eq!(take_string(unsafe { schubert_perm_to_string(p) }), "2413");
    unsafe { schubert_perm_free(p) };
}

#[test]
fn parse_errors_set_status_and_message() {
    let bad = CString::new("2213").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { schubert_perm_parse(bad.as_ptr(), &mut out) };
    assert_eq!(status, SchubertStatus::InvalidPermutation);
    assert!(out.is_null());
    assert!(last_error().contains("permutation"));

    assert_eq!(unsafe { schubert_perm_parse(ptr::null(), &mut out) }, SchubertStatus::NullPointer);
    let text = CString::new("12").unwrap();
    assert_eq!(unsafe { schubert_perm_parse(text.as_ptr(), ptr::null_mut()) }, SchubertStatus::NullPointer);
}

#[test]
fn schubert_polynomial_text_and_coefficients() {
    let w = perm("1432");
    let mut p = ptr::null_mut();
    let status = unsafe { schubert_polynomial(w, 0, SchubertPolyMethod::RcGraph, &mut p) };
    assert_eq!(status, SchubertStatus::Ok);
    assert_eq!(unsafe { schubert_poly_num_terms(p) }, 5);
    assert_eq!(
        take_string(unsafe { schubert_poly_to_string(p) }),
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3"
    );
    let mut c = 0;
    let exps = [1u32, 1, 1];
    assert_eq!(unsafe { schubert_poly_coefficient(p, exps.as_ptr(), 3, &mut c) }, SchubertStatus::Ok);
    assert_eq!(c, 1);
    let absent = [3u32];
    assert_eq!(unsafe { schubert_poly_coefficient(p, absent.as_ptr(), 1, &mut c) }, SchubertStatus::Ok);
    assert_eq!(c, 0);
    assert!(take_string(unsafe { schubert_poly_to_json(p) }).starts_with('['));

    let mut q = ptr::null_mut();
    assert_eq!(unsafe { schubert_polynomial(w, 0, SchubertPolyMethod::Chain, &mut q) }, SchubertStatus::Ok);
    assert_eq!(take_string(unsafe { schubert_poly_to_string(q) }), take_string(unsafe { schubert_poly_to_string(p) }));
    unsafe {
        schubert_poly_free(p);
        schubert_poly_free(q);
        schubert_perm_free(w);
    }
}

#[test]
fn skew_routes_agree_and_reject_incomparable() {
    let w = perm("2413");
    let u = perm("1324");
    let mut texts = Vec::new();
    for method in [SchubertSkewMethod::NormalForm, SchubertSkewMethod::Chains, SchubertSkewMethod::Lr] {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { schubert_skew(w, u, 4, method, &mut p) }, SchubertStatus::Ok);
        texts.push(take_string(unsafe { schubert_poly_to_string(p) }));
        unsafe { schubert_poly_free(p) };
    }
    assert!(texts.windows(2).all(|t| t[0] == t[1]));

    let v = perm("3124");
    let mut p = ptr::null_mut();
    let status = unsafe { schubert_skew(v, w, 4, SchubertSkewMethod::NormalForm, &mut p) };
    assert_eq!(status, SchubertStatus::NotBruhatLeq);
    assert!(p.is_null());
    assert!(last_error().contains("Bruhat"));
    unsafe {
        schubert_perm_free(w);
        schubert_perm_free(u);
        schubert_perm_free(v);
    }
}

#[test]
fn lr_expansion() {
    let u = perm("1324");
    let v = perm("2314");
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { schubert_lr(u, v, 4, &mut e) }, SchubertStatus::Ok);
    let w = perm("2413");
    let mut c = 0;
    assert_eq!(unsafe { schubert_expansion_coefficient(e, w, &mut c) }, SchubertStatus::Ok);
    assert_eq!(c, 1);
    assert!(unsafe { schubert_expansion_len(e) } >= 1);
    let json = take_string(unsafe { schubert_expansion_to_json(e) });
    assert!(json.contains("\"2413\":1"));
    unsafe {
        schubert_expansion_free(e);
        schubert_perm_free(u);
        schubert_perm_free(v);
        schubert_perm_free(w);
    }
}

#[test]
fn expand_polynomial() {
    let w = perm("2413");
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { schubert_polynomial(w, 0, SchubertPolyMethod::RcGraph, &mut p) }, SchubertStatus::Ok);
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { schubert_poly_expand(p, &mut e) }, SchubertStatus::Ok);
    assert_eq!(take_string(unsafe { schubert_expansion_to_json(e) }), "{\"2413\":1}");
    unsafe {
        schubert_expansion_free(e);
        schubert_poly_free(p);
        schubert_perm_free(w);
    }
}

#[test]
fn rcgraph_counts() {
    let w = perm("1432");
    let mut count = 0;
    assert_eq!(unsafe { schubert_rcgraph_count(w, 0, &mut count) }, SchubertStatus::Ok);
    assert_eq!(count, 5);
    assert_eq!(unsafe { schubert_rcgraph_count(w, 2, &mut count) }, SchubertStatus::SizeMismatch);
    unsafe { schubert_perm_free(w) };
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        schubert_perm_free(ptr::null_mut());
        schubert_poly_free(ptr::null_mut());
        schubert_expansion_free(ptr::null_mut());
        schubert_string_free(ptr::null_mut());
        assert!(schubert_perm_to_string(ptr::null()).is_null());
        assert_eq!(schubert_poly_num_terms(ptr::null()), 0);
        let mut len = 0;
        assert_eq!(schubert_perm_length(ptr::null(), &mut len), SchubertStatus::NullPointer);
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/schubert.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["schubert_perm_parse", "schubert_skew", "schubert_lr", "SchubertStatus", "SCHUBERT_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c"]).arg(&header).output() else {
        eprintln!("no C compiler; skipped syntax check");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
