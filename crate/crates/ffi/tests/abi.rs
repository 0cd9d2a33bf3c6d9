use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hopfkit_ffi::*;

fn message() -> String {
    let p = hk_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn builtin(spec: &str) -> *mut HkAlgebra {
    let spec = CString::new(spec).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hk_algebra_from_builtin(spec.as_ptr(), &mut h) }, HkStatus::Ok);
    h
}

#[test]
fn handles_and_dimensions() {
    let h = builtin("sweedler");
    let mut d = 0usize;
    unsafe {
        assert_eq!(hk_algebra_dim(h, &mut d), HkStatus::Ok);
        assert_eq!(d, 4);
        assert_eq!(hk_hopf_center_dim(h, &mut d), HkStatus::Ok);
        assert_eq!(d, 1);
        assert_eq!(hk_hopf_cocenter_dim(h, &mut d), HkStatus::Ok);
        assert_eq!(d, 1);

        let mut json = ptr::null_mut();
        assert_eq!(hk_algebra_to_json(h, &mut json), HkStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(hk_algebra_from_json(json, &mut back), HkStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        let mut again = ptr::null_mut();
        assert_eq!(hk_algebra_to_json(back, &mut again), HkStatus::Ok);
        assert_eq!(CStr::from_ptr(again).to_str().unwrap(), text);
        hk_string_free(json);
        hk_string_free(again);
        hk_algebra_free(back);
        hk_algebra_free(h);
    }
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    let mut d = 0usize;
    unsafe {
        assert_eq!(hk_algebra_from_builtin(ptr::null(), &mut h), HkStatus::NullPointer);
        assert_eq!(hk_algebra_dim(ptr::null(), &mut d), HkStatus::NullPointer);
        assert!(message().contains("NULL"));

        let spec = CString::new("taft:n=1").unwrap();
        assert_eq!(hk_algebra_from_builtin(spec.as_ptr(), &mut h), HkStatus::InvalidInput);
        assert!(h.is_null());

        let malformed = CString::new("{\"field\": \"Q\"").unwrap();
        assert_eq!(hk_algebra_from_json(malformed.as_ptr(), &mut h), HkStatus::InvalidInput);
        assert!(message().contains("line 1"), "{}", message());

        // k[Z/2]: the identity is its antipode
        let bad = r#"{"field":"Q","dim":2,"unit":["1","0"],"counit":["1","1"],
            "mult":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
            "comult":[[0,0,0,"1"],[1,1,1,"1"]],"antipode":[[0,0,"1"],[1,1,"1"]]}"#;
        let bad = CString::new(bad).unwrap();
        assert_eq!(hk_algebra_from_json(bad.as_ptr(), &mut h), HkStatus::Ok);
        hk_algebra_free(h);
        // the swap is invertible but not an antipode
        let worse = bad.to_str().unwrap().replace(r#"[[0,0,"1"],[1,1,"1"]]}"#, r#"[[0,1,"1"],[1,0,"1"]]}"#);
        let worse = CString::new(worse).unwrap();
        assert_eq!(hk_algebra_from_json(worse.as_ptr(), &mut h), HkStatus::CertificateFailed);
        assert!(message().contains("antipode"), "{}", message());
        hk_algebra_free(ptr::null_mut());
        hk_string_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_cli_contract() {
    let call = |args: &[&str]| -> (HkStatus, i32, String) {
        let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
        let ptrs: Vec<*const c_char> = owned.iter().map(|a| a.as_ptr()).collect();
        let mut out = ptr::null_mut();
        let mut code = -1;
        let status = unsafe { hk_run(ptrs.len(), ptrs.as_ptr(), &mut out, &mut code) };
        let text = unsafe { CStr::from_ptr(out) }.to_string_lossy().into_owned();
        unsafe { hk_string_free(out) };
        (status, code, text)
    };
    let (s, code, text) = call(&["hopf-center", "--builtin", "group-algebra:Q8", "--format", "json"]);
    assert_eq!((s, code), (HkStatus::Ok, 0));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["results"]["hopf_center"]["dim"], 2);
    let (s, code, text) = call(&["verify", "--builtin", "nothing"]);
    assert_eq!((s, code), (HkStatus::Ok, 2));
    assert!(text.starts_with("error:"));
}

/// Compiles the C smoke test against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|deps| deps.parent()).unwrap();
    let lib = profile_dir.join("libhopfkit_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let bin = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
