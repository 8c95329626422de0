use std::ffi::{c_char, CStr, CString};
use std::ptr;

use topcoh_ffi::*;

fn cstrings(items: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = items.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs = owned.iter().map(|c| c.as_ptr()).collect();
    (owned, ptrs)
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    topcoh_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(topcoh_last_error()).to_str().unwrap().to_owned()
}

unsafe fn ring(names: &[&str]) -> *mut TopcohRing {
    let (_keep, ptrs) = cstrings(names);
    let mut out = ptr::null_mut();
    assert_eq!(
        topcoh_ring_new(ptrs.as_ptr(), ptrs.len(), 0, &mut out),
        TopcohStatus::Ok
    );
    out
}

unsafe fn ideal(r: *const TopcohRing, gens: &[&str]) -> *mut TopcohIdeal {
    let (_keep, ptrs) = cstrings(gens);
    let mut out = ptr::null_mut();
    assert_eq!(
        topcoh_ideal_new(r, ptrs.as_ptr(), ptrs.len(), &mut out),
        TopcohStatus::Ok
    );
    out
}

#[test]
fn handles_round_trip() {
    unsafe {
        let r = ring(&["x", "y"]);
        let i = ideal(r, &["x^2", "x*y + y^2"]);
        let mut dim = 0i64;
        assert_eq!(topcoh_ideal_krull_dim(i, &mut dim), TopcohStatus::Ok);
        assert_eq!(dim, 0);
        let mut s = ptr::null_mut();
        assert_eq!(topcoh_ideal_gb_json(i, &mut s), TopcohStatus::Ok);
        let gb: Vec<String> = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(gb.len(), 3);
        topcoh_ideal_free(i);
        topcoh_ring_free(r);
    }
}

#[test]
fn ann_top_through_handles() {
    unsafe {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(r, &["x*y"]);
        let a = ideal(r, &["x", "z"]);
        let mut s = ptr::null_mut();
        assert_eq!(topcoh_ann_top_json(i, a, &mut s), TopcohStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["annihilator"], serde_json::json!(["y"]));
        assert_eq!(v["attached"], serde_json::json!([["y"]]));
        topcoh_ideal_free(a);
        topcoh_ideal_free(i);
        topcoh_ring_free(r);
    }
}

#[test]
fn error_codes_match_exit_codes() {
    unsafe {
        let r = ring(&["x", "y"]);
        let (_keep, ptrs) = cstrings(&["x + w"]);
        let mut out = ptr::null_mut();
        assert_eq!(
            topcoh_ideal_new(r, ptrs.as_ptr(), 1, &mut out),
            TopcohStatus::Parse
        );
        assert!(out.is_null());
        assert!(last_error().contains("unknown variable"));

        let job = CString::new(r#"{"ring":{"variables":["x","y"]},"ideal":["x"],"a":["x"]}"#).unwrap();
        let cmd = CString::new("ann-top").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            topcoh_run_json(cmd.as_ptr(), job.as_ptr(), &mut s),
            TopcohStatus::HypothesisNotMet
        );
        assert!(last_error().starts_with("hypothesis-not-met"));

        assert_eq!(
            topcoh_ideal_krull_dim(ptr::null(), &mut 0),
            TopcohStatus::NullPointer
        );
        topcoh_ring_free(r);
    }
}

#[test]
fn run_json_uses_document_command() {
    unsafe {
        let job = CString::new(r#"{"ideal":["x^2","x*y"],"command":"filtration"}"#).unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            topcoh_run_json(ptr::null(), job.as_ptr(), &mut s),
            TopcohStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["levels"][0]["by_intersection"], serde_json::json!(["x"]));
        assert_eq!(last_error(), "");
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/topcoh.h")).unwrap();
    for name in [
        "topcoh_ring_new",
        "topcoh_ideal_new",
        "topcoh_ann_top_json",
        "topcoh_run_json",
        "topcoh_string_free",
        "typedef struct TopcohIdeal TopcohIdeal",
        "TOPCOH_STATUS_HYPOTHESIS_NOT_MET = 3",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
