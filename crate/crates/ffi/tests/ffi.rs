use std::ffi::{CStr, CString};
use std::ptr;

use mcluster_ffi::*;

fn last_error() -> String {
    let p = mcq_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn gamma(n: u32, m: u32) -> *mut McqQuiver {
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { mcq_gamma_new(n, m, &mut q) }, McqStatus::Ok);
    q
}

#[test]
fn counts_and_properties() {
    let q = gamma(4, 2);
    let mut vertices = 0usize;
    let mut arrows = 0u32;
    let mut stable = false;
    let mut comps = 0usize;
    unsafe {
        assert_eq!(mcq_quiver_vertex_count(q, &mut vertices), McqStatus::Ok);
        assert_eq!(mcq_quiver_arrow_count(q, &mut arrows), McqStatus::Ok);
        assert_eq!(mcq_quiver_is_stable(q, &mut stable), McqStatus::Ok);
        assert_eq!(mcq_quiver_component_count(q, &mut comps), McqStatus::Ok);
        assert_eq!(mcq_quiver_check(q), McqStatus::Ok);
        mcq_quiver_free(q);
    }
    assert_eq!((vertices, arrows, stable, comps), (15, 20, true, 1));
    assert!(mcq_last_error_message().is_null());
}

#[test]
fn gamma_matches_ar_quiver() {
    let g = gamma(5, 2);
    let mut a = ptr::null_mut();
    let mut iso = false;
    unsafe {
        assert_eq!(mcq_ar_quiver_new(5, 2, &mut a), McqStatus::Ok);
        assert_eq!(mcq_quiver_isomorphic(g, a, &mut iso), McqStatus::Ok);
        mcq_quiver_free(g);
        mcq_quiver_free(a);
    }
    assert!(iso);
}

#[test]
fn json_round_trip() {
    let q = gamma(4, 1);
    let mut json = ptr::null_mut();
    let mut back = ptr::null_mut();
    let mut iso = false;
    unsafe {
        assert_eq!(mcq_quiver_to_json(q, &mut json), McqStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_string();
        assert!(text.contains("\"construction\": \"gamma\""));
        assert_eq!(mcq_quiver_from_json(json, &mut back), McqStatus::Ok);
        assert_eq!(mcq_quiver_isomorphic(q, back, &mut iso), McqStatus::Ok);
        mcq_string_free(json);
        mcq_quiver_free(q);
        mcq_quiver_free(back);
    }
    assert!(iso);
}

#[test]
fn power_square_of_octagon_quiver() {
    let q = gamma(6, 1);
    let mut sq = ptr::null_mut();
    let mut comps = 0usize;
    unsafe {
        assert_eq!(mcq_quiver_power(q, 2, &mut sq), McqStatus::Ok);
        assert_eq!(mcq_quiver_component_count(sq, &mut comps), McqStatus::Ok);
        assert_eq!(mcq_quiver_power(q, 0, &mut sq), McqStatus::InvalidArgument);
        mcq_quiver_free(sq);
        mcq_quiver_free(q);
    }
    assert_eq!(comps, 3);
}

#[test]
fn error_codes() {
    let mut q = ptr::null_mut();
    let mut n = 0usize;
    unsafe {
        assert_eq!(mcq_gamma_new(1, 1, &mut q), McqStatus::InvalidArgument);
        assert!(last_error().contains("n=1"));
        assert_eq!(mcq_gamma_new(3, 1, ptr::null_mut()), McqStatus::NullPointer);
        assert_eq!(
            mcq_quiver_vertex_count(ptr::null(), &mut n),
            McqStatus::NullPointer
        );
        let bad = CString::new("{").unwrap();
        assert_eq!(mcq_quiver_from_json(bad.as_ptr(), &mut q), McqStatus::Parse);
        let unstable = CString::new(
            r#"{"metadata":{"construction":"hand","version":"0"},
               "vertices":[{"id":0,"label":"a"},{"id":1,"label":"b"}],
               "arrows":[{"src":0,"dst":1,"mult":1}],"tau":[{"from":1,"to":0}]}"#,
        )
        .unwrap();
        assert_eq!(
            mcq_quiver_from_json(unstable.as_ptr(), &mut q),
            McqStatus::Ok
        );
        assert_eq!(mcq_quiver_check(q), McqStatus::PropertyFailed);
        assert!(last_error().contains("arrow"));
        assert_eq!(
            mcq_quiver_component_count(q, &mut n),
            McqStatus::PropertyFailed
        );
        mcq_quiver_free(q);
        mcq_quiver_free(ptr::null_mut());
        mcq_string_free(ptr::null_mut());
    }
}

#[test]
fn facet_counts() {
    let mut k = 0u64;
    unsafe {
        assert_eq!(mcq_facet_count(4, 1, &mut k), McqStatus::Ok);
        assert_eq!(k, 14);
        assert_eq!(mcq_facet_count(4, 2, &mut k), McqStatus::Ok);
        assert_eq!(k, 55);
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/mcluster.h"))
            .unwrap();
    for name in [
        "mcq_gamma_new",
        "mcq_ar_quiver_new",
        "mcq_quiver_from_json",
        "mcq_quiver_to_json",
        "mcq_quiver_free",
        "mcq_string_free",
        "mcq_quiver_vertex_count",
        "mcq_quiver_arrow_count",
        "mcq_quiver_power",
        "mcq_quiver_check",
        "mcq_quiver_is_stable",
        "mcq_quiver_component_count",
        "mcq_quiver_isomorphic",
        "mcq_facet_count",
        "mcq_last_error_message",
        "typedef struct McqQuiver McqQuiver;",
        "MCQ_STATUS_PROPERTY_FAILED = 4",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
