use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use liemin_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { liemin_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(liemin_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn g2_round_trip() {
    let mut rep = ptr::null_mut();
    assert_eq!(unsafe { liemin_rep_new(c("G2").as_ptr(), c("fund:1,0").as_ptr(), &mut rep) }, LieminStatus::Ok);
    let mut dim = 0;
    assert_eq!(unsafe { liemin_rep_dim(rep, &mut dim) }, LieminStatus::Ok);
    assert_eq!(dim, 7);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { liemin_minpoly_latex(rep, c("1").as_ptr(), c("psi").as_ptr(), &mut out) }, LieminStatus::Ok);
    let want = &liemin::goldens::table("g2_fund1").unwrap().rows[1].1;
    assert_eq!(&take(out), want);

    assert_eq!(unsafe { liemin_certify_json(rep, c("1").as_ptr(), c("psi").as_ptr(), c("0").as_ptr(), &mut out) }, LieminStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["verdict"], "certified");
    assert_eq!(last_error(), "");
    unsafe { liemin_rep_free(rep) };
}

#[test]
fn status_codes() {
    let mut rep = ptr::null_mut();
    assert_eq!(unsafe { liemin_rep_new(ptr::null(), c("adjoint").as_ptr(), &mut rep) }, LieminStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { liemin_rep_new(bad.as_ptr().cast(), c("adjoint").as_ptr(), &mut rep) }, LieminStatus::InvalidUtf8);
    assert_eq!(unsafe { liemin_rep_new(c("Q3").as_ptr(), c("adjoint").as_ptr(), &mut rep) }, LieminStatus::Validation);
    assert!(last_error().contains("Q3"));
    assert_eq!(unsafe { liemin_rep_new(c("B2").as_ptr(), c("fund:-1,0").as_ptr(), &mut rep) }, LieminStatus::Precondition);

    assert_eq!(unsafe { liemin_rep_new(c("B2").as_ptr(), c("adjoint").as_ptr(), &mut rep) }, LieminStatus::Ok);
    let mut out = ptr::null_mut();
    let s = unsafe { liemin_minpoly_latex(rep, c("1,2").as_ptr(), c("psi").as_ptr(), &mut out) };
    assert_eq!(s, LieminStatus::Precondition);
    assert_eq!(unsafe { liemin_rep_dim(ptr::null(), ptr::null_mut()) }, LieminStatus::NullPointer);
    unsafe { liemin_rep_free(rep) };
    unsafe { liemin_rep_free(ptr::null_mut()) };
}

/// Compile and run a C program against the static library and header.
#[test]
fn c_program_links() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libliemin_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("abi_check.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "liemin.h"
int main(void) {
    LieminRep *rep = NULL;
    if (liemin_rep_new("E6", "fund:1,0,0,0,0,0", &rep) != LieminStatus_Ok) return 1;
    uint64_t dim = 0;
    if (liemin_rep_dim(rep, &dim) != LieminStatus_Ok || dim != 27) return 2;
    char *q = NULL;
    if (liemin_minpoly_latex(rep, "2,3,4,5,6", "psi-prime", &q) != LieminStatus_Ok) return 3;
    printf("%s\n", q);
    liemin_string_free(q);
    liemin_rep_free(rep);
    if (liemin_rep_new("E6", "fund:x", &rep) != LieminStatus_Validation) return 4;
    if (strlen(liemin_last_error()) == 0) return 5;
    return 0;
}
"#,
    )
    .unwrap();
    let bin = tmp.join("abi_check");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.starts_with("(x - \\frac{2}{9}\\lambda_{1})"), "{line}");
}
