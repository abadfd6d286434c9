use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use spinekit_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { spk_string_free(s) };
    out
}

fn last_error() -> String {
    let p = spk_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn g5_through_the_c_interface() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(spk_ograph_generate(0, &mut g), SpkStatus::Ok);
        assert_eq!(spk_ograph_vertex_count(g), 5);
        let mut text = ptr::null_mut();
        assert_eq!(spk_ograph_serialize(g, &mut text), SpkStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("ograph v1\nvertices 5\n"));

        let mut spine = ptr::null_mut();
        assert_eq!(spk_spine_from_ograph(g, &mut spine), SpkStatus::Ok);
        spk_ograph_free(g);

        let mut summary = SpkSummary::default();
        assert_eq!(spk_spine_summary(spine, &mut summary), SpkStatus::Ok);
        assert_eq!(
            (summary.tetrahedra, summary.triple_edges, summary.edge_classes, summary.euler, summary.boundary_components),
            (5, 10, 2, -3, 1)
        );

        let mut sizes = [0usize; 4];
        let mut len = 0;
        assert_eq!(spk_spine_edge_class_sizes(spine, sizes.as_mut_ptr(), 4, &mut len), SpkStatus::Ok);
        assert_eq!(&sizes[..len], &[15, 15]);
        assert_eq!(spk_spine_edge_class_sizes(spine, sizes.as_mut_ptr(), 1, &mut len), SpkStatus::BufferTooSmall);
        assert_eq!(len, 2);

        let mut poor = false;
        assert_eq!(spk_spine_is_poor(spine, &mut poor), SpkStatus::Ok);
        assert!(poor);

        let mut eps = ptr::null_mut();
        let mut value = 0.0;
        assert_eq!(spk_spine_epsilon(spine, &mut eps, &mut value), SpkStatus::Ok);
        assert_eq!(take_string(eps), "-33 + 21*eps");
        assert!((value - 0.978_713_763_747_791_8).abs() < 1e-12);

        let mut report = ptr::null_mut();
        assert_eq!(spk_spine_report(spine, &mut report), SpkStatus::Ok);
        assert!(take_string(report).contains("boundary_genera: 4\n"));

        let mut tri = ptr::null_mut();
        assert_eq!(spk_spine_serialize(spine, &mut tri), SpkStatus::Ok);
        let tri = CString::new(take_string(tri)).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(spk_spine_parse(tri.as_ptr(), &mut again), SpkStatus::Ok);
        let mut s2 = SpkSummary::default();
        spk_spine_summary(again, &mut s2);
        assert_eq!(s2.euler, -3);
        spk_spine_free(again);
        spk_spine_free(spine);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let bad = CString::new("ograph v1\nvertices 0\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(spk_ograph_parse(bad.as_ptr(), &mut g), SpkStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().contains("no vertices"));

        let mut spine = ptr::null_mut();
        assert_eq!(spk_spine_parse(ptr::null(), &mut spine), SpkStatus::NullPointer);
        let junk = CString::new("hello").unwrap();
        assert_eq!(spk_spine_parse(junk.as_ptr(), &mut spine), SpkStatus::ParseError);

        let mut summary = SpkSummary::default();
        assert_eq!(spk_spine_summary(ptr::null(), &mut summary), SpkStatus::NullPointer);

        let mut v = SpkVolume::default();
        assert_eq!(spk_volume_regular(2.0, &mut v), SpkStatus::VolumeError);
        assert_eq!(spk_volume_family(7, 5, &mut v), SpkStatus::InvalidArgument);
        assert_eq!(spk_volume_family(SPK_FAMILY_WN, 6, &mut v), SpkStatus::VolumeError);

        let mut x = 0.0;
        assert_eq!(spk_lobachevsky(f64::NAN, &mut x), SpkStatus::InvalidArgument);
        assert_eq!(spk_lobachevsky(0.5, &mut x), SpkStatus::Ok);
        assert!(spk_last_error_message().is_null());
        spk_ograph_free(ptr::null_mut());
        spk_spine_free(ptr::null_mut());
        spk_string_free(ptr::null_mut());
    }
}

#[test]
fn volumes() {
    unsafe {
        let mut v = SpkVolume::default();
        assert_eq!(spk_volume_family(SPK_FAMILY_WN, 5, &mut v), SpkStatus::Ok);
        assert!(v.agreed);
        assert!((v.via_lobachevsky - 16.951_382_465_449_75).abs() < 1e-9);
        assert_eq!(spk_volume_regular(0.0, &mut v), SpkStatus::Ok);
        assert!((v.via_integral - 3.663_862_376_708_876).abs() < 1e-12);
        let mut x = 0.0;
        spk_lobachevsky(std::f64::consts::FRAC_PI_4, &mut x);
        assert!((x - 0.457_982_797_088_609_5).abs() < 1e-14);
    }
    let version = unsafe { CStr::from_ptr(spk_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/spinekit.h");
    assert!(header.exists());
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["spk_spine_from_ograph", "spk_volume_family", "SPK_STATUS_BUFFER_TOO_SMALL", "typedef struct SpkSpine SpkSpine"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .output()
        else {
            eprintln!("{compiler} not available; skipping");
            continue;
        };
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
