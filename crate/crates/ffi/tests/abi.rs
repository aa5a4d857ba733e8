use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use superfuse_ffi::*;

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { sf_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sf_last_error_message()) }.to_str().unwrap().to_string()
}

fn parse(src: &str) -> *mut SfRtElement {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sf_rt_parse(c.as_ptr(), &mut out) }, SfStatus::Ok, "{}", last_error());
    out
}

fn text(x: *const SfRtElement) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sf_rt_to_text(x, &mut s) }, SfStatus::Ok);
    take_string(s)
}

#[test]
fn gl0_pipeline_through_handles() {
    let a = parse("AS2");
    let mut prod = ptr::null_mut();
    let mut cut = ptr::null_mut();
    let mut proj = ptr::null_mut();
    unsafe {
        assert_eq!(sf_gl0_tensor(a, a, &mut prod), SfStatus::Ok);
        assert_eq!(sf_rt_truncate(prod, 2, &mut cut), SfStatus::Ok);
        assert_eq!(sf_rt_project_max_atypical(cut, &mut proj), SfStatus::Ok);
    }
    assert_eq!(text(proj), "(4) + (3,1) + (2^2) + 2 (3) + 2 (2,1) + (2)");
    unsafe {
        for h in [a, prod, cut, proj] {
            sf_rt_free(h);
        }
    }
}

#[test]
fn lift_roundtrip_and_json() {
    let x = parse("(3|1,1,1)");
    let (mut up, mut down, mut json) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(sf_rt_lift(x, &mut up), SfStatus::Ok);
        assert_eq!(sf_rt_lift_inv(up, &mut down), SfStatus::Ok);
        assert_eq!(sf_rt_to_json(down, &mut json), SfStatus::Ok);
    }
    assert_eq!(text(up), "(3) + (2)");
    let json = take_string(json);
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&json).unwrap(),
        serde_json::json!([{ "left": [3], "right": [1, 1, 1], "mult": 1 }])
    );
    let back = parse(&json);
    assert_eq!(text(back), text(x));
    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { sf_rt_tensor(x, back, &mut sum) }, SfStatus::Ok);
    unsafe {
        for h in [x, up, down, back, sum] {
            sf_rt_free(h);
        }
    }
}

#[test]
fn fuse_to_json() {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sf_fuse(2, 1, &mut d) }, SfStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sf_decomposition_to_json(d, &mut s) }, SfStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["factors"], serde_json::json!([2, 1]));
    assert_eq!(v["typicals"].as_array().unwrap().len(), 2);
    unsafe { sf_decomposition_free(d) };
}

#[test]
fn lr_coefficient() {
    let c = |s: &str| CString::new(s).unwrap();
    let mut out = 0u64;
    let status = unsafe { sf_lr_coeff(c("(2,1)").as_ptr(), c("(2,1)").as_ptr(), c("(3,2,1)").as_ptr(), &mut out) };
    assert_eq!(status, SfStatus::Ok);
    assert_eq!(out, 2);
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let bad = CString::new("(1,2|)").unwrap();
    assert_eq!(unsafe { sf_rt_parse(bad.as_ptr(), &mut out) }, SfStatus::Parse);
    assert!(last_error().contains("weakly decreasing"), "{}", last_error());
    assert!(out.is_null());

    assert_eq!(unsafe { sf_rt_parse(ptr::null(), &mut out) }, SfStatus::NullPointer);
    let invalid = [0xffu8, 0];
    assert_eq!(unsafe { sf_rt_parse(invalid.as_ptr().cast(), &mut out) }, SfStatus::InvalidUtf8);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { sf_fuse(0, 1, &mut d) }, SfStatus::InvalidArgument);
    assert!(!last_error().is_empty());

    let x = parse("AS1");
    assert_eq!(unsafe { sf_rt_lift(x, ptr::null_mut()) }, SfStatus::NullPointer);
    assert_eq!(unsafe { sf_rt_lift(x, &mut out) }, SfStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        sf_rt_free(x);
        sf_rt_free(out);
        sf_rt_free(ptr::null_mut());
        sf_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/superfuse.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "sf_rt_parse",
        "sf_rt_to_json",
        "sf_rt_lift",
        "sf_rt_lift_inv",
        "sf_rt_tensor",
        "sf_gl0_tensor",
        "sf_rt_truncate",
        "sf_rt_project_max_atypical",
        "sf_rt_free",
        "sf_fuse",
        "sf_decomposition_to_json",
        "sf_decomposition_free",
        "sf_lr_coeff",
        "sf_string_free",
        "sf_last_error_message",
        "typedef struct SfRtElement SfRtElement",
        "SF_STATUS_PANIC = 6",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let dir = std::env::temp_dir().join(format!("superfuse-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use_header.c");
    std::fs::write(
        &src,
        "#include \"superfuse.h\"\nint main(void) { SfRtElement *x = 0; return sf_rt_parse(\"AS1\", &x) == SF_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    match Command::new("cc").arg("-fsyntax-only").arg("-I").arg(header.parent().unwrap()).arg(&src).output() {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(e) => eprintln!("no C compiler available ({e}); compile check skipped"),
    }
}
