use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use lie_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { lie_string_free(p) };
    s
}

fn table(ct: &str) -> *mut LieTable {
    let ct = CString::new(ct).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { lie_table_new(ct.as_ptr(), &mut t) }, LieStatus::Ok);
    t
}

fn parse(t: *const LieTable, text: &str) -> Result<*mut LieElem, LieStatus> {
    let text = CString::new(text).unwrap();
    let mut e = ptr::null_mut();
    match unsafe { lie_element_parse(t, text.as_ptr(), &mut e) } {
        LieStatus::Ok => Ok(e),
        s => Err(s),
    }
}

fn last_error() -> String {
    let p = lie_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn bracket_round_trip() {
    let t = table("E8");
    assert_eq!(unsafe { lie_table_dim(t) }, 248);
    let a = parse(t, "X[112]").unwrap();
    let b = parse(t, "Y[112]").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { lie_element_bracket(t, a, b, &mut c) },
        LieStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lie_element_to_string(c, &mut s) }, LieStatus::Ok);
    let text = take_string(s);
    assert!(text.starts_with("1*H[1] + 3*H[2]"), "{text}");
    unsafe {
        lie_element_free(a);
        lie_element_free(b);
        lie_element_free(c);
        lie_table_free(t);
    }
}

#[test]
fn error_codes() {
    let t = table("A2");
    assert_eq!(parse(t, "X[").unwrap_err(), LieStatus::Parse);
    assert!(last_error().contains("byte 2"));
    assert_eq!(parse(t, "X[4]").unwrap_err(), LieStatus::IndexOutOfRange);
    assert_eq!(
        parse(ptr::null(), "X[1]").unwrap_err(),
        LieStatus::NullArgument
    );

    let bad = CString::new("G2").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { lie_table_new(bad.as_ptr(), &mut out) },
        LieStatus::Unsupported
    );
    assert!(out.is_null());

    let e8 = table("E8");
    let x = parse(t, "X[1]").unwrap();
    let y = parse(e8, "Y[1]").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { lie_element_bracket(t, x, y, &mut c) },
        LieStatus::Mismatch
    );
    unsafe {
        lie_element_free(x);
        lie_element_free(y);
        lie_table_free(t);
        lie_table_free(e8);
    }
    // Successful calls clear the message.
    let t = table("A1");
    assert!(lie_last_error().is_null());
    unsafe { lie_table_free(t) };
}

#[test]
fn dump_and_load() {
    let t = table("D4");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lie_table_dump(t, &mut s) }, LieStatus::Ok);
    let dump = CString::new(take_string(s)).unwrap();
    let mut u = ptr::null_mut();
    assert_eq!(
        unsafe { lie_table_load(dump.as_ptr(), &mut u) },
        LieStatus::Ok
    );
    assert_eq!(unsafe { lie_table_dim(u) }, 28);
    let junk = CString::new("nonsense").unwrap();
    let mut v = ptr::null_mut();
    assert_eq!(
        unsafe { lie_table_load(junk.as_ptr(), &mut v) },
        LieStatus::Parse
    );
    unsafe {
        lie_table_free(t);
        lie_table_free(u);
    }
}

#[test]
fn representation_queries() {
    let d7 = CString::new("D7").unwrap();
    let l6 = [0i64, 0, 0, 0, 0, 1, 0];
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { lie_weyl_dim(d7.as_ptr(), l6.as_ptr(), 7, &mut s) },
        LieStatus::Ok
    );
    assert_eq!(take_string(s), "64");

    let neg = [0i64, 0, 0, 0, 0, -1, 0];
    assert_eq!(
        unsafe { lie_weyl_dim(d7.as_ptr(), neg.as_ptr(), 7, &mut s) },
        LieStatus::NotDominant
    );
    assert_eq!(
        unsafe { lie_weyl_dim(d7.as_ptr(), l6.as_ptr(), 3, &mut s) },
        LieStatus::Invalid
    );

    let a1 = CString::new("A1").unwrap();
    let two = [2i64];
    assert_eq!(
        unsafe { lie_tensor_decompose(a1.as_ptr(), two.as_ptr(), two.as_ptr(), 1, &mut s) },
        LieStatus::Ok
    );
    assert_eq!(
        take_string(s),
        "SUMMAND 4 mult=1 dim=5\nSUMMAND 2 mult=1 dim=3\nSUMMAND 0 mult=1 dim=1\n"
    );
}

#[test]
fn verify_single_claim() {
    let only = CString::new("roots,generators").unwrap();
    let mut s = ptr::null_mut();
    let mut ok = false;
    assert_eq!(
        unsafe { lie_verify(only.as_ptr(), 3, &mut s, &mut ok) },
        LieStatus::Ok
    );
    assert!(ok);
    assert!(take_string(s).ends_with("SUMMARY 2/2\n"));
}

/// Compiles the C smoke test against the generated header and the static
/// library. Skipped when no C compiler or static library is available.
#[test]
fn c_program_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("liblie_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lie_ffi_smoke");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
