use std::ffi::{c_char, CStr, CString};
use std::ptr;

use verma_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    verma_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(verma_last_error())
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn bracket_through_handles() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            verma_algebra_new(c("1").as_ptr(), ptr::null(), &mut alg),
            VermaStatus::Ok
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            verma_bracket(alg, c("L(2)").as_ptr(), c("I(-2)").as_ptr(), &mut out),
            VermaStatus::Ok
        );
        assert_eq!(take(out), "(-4)·I(0) + (1/2)·CLI1");
        assert_eq!(
            verma_bracket(alg, c("CI").as_ptr(), c("L(1)").as_ptr(), &mut out),
            VermaStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        verma_algebra_free(alg);
    }
}

#[test]
fn forbidden_lambda_reports_error() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            verma_algebra_new(c("-1").as_ptr(), ptr::null(), &mut alg),
            VermaStatus::InvalidArgument
        );
        assert!(alg.is_null());
        assert!(last_error().contains("-1"));
        assert_eq!(
            verma_algebra_new(ptr::null(), ptr::null(), &mut alg),
            VermaStatus::NullPointer
        );
    }
}

#[test]
fn determinant_and_decision() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            verma_algebra_new(c("1").as_ptr(), ptr::null(), &mut alg),
            VermaStatus::Ok
        );
        let mut w = ptr::null_mut();
        assert_eq!(verma_weight_new(alg, ptr::null(), &mut w), VermaStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(verma_gram_det(w, 1, true, &mut out), VermaStatus::Ok);
        assert_eq!(take(out), "4*hI^2");
        verma_weight_free(w);

        let json = c(r#"{"I0":"1","CLI1":"3","L0":"0","CL":"0"}"#);
        assert_eq!(
            verma_weight_new(alg, json.as_ptr(), &mut w),
            VermaStatus::Ok
        );
        assert_eq!(verma_decide(w, 5, &mut out), VermaStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(doc["verdict"], "Reducible");
        assert_eq!(doc["witness"], 3);
        verma_weight_free(w);
        verma_algebra_free(alg);
    }
}

#[test]
fn job_runner_exit_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let mut code = -1;
        let job = c(r#"{"command":"factor","algebra":{"lambda":"1"},"params":{"grade":2}}"#);
        assert_eq!(
            verma_run_job(job.as_ptr(), &mut out, &mut code),
            VermaStatus::Ok
        );
        assert_eq!(code, 0);
        let doc: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(doc["residual"], "0");

        let job = c(r#"{"command":"verify-jacobi","algebra":{"lambda":"0"}}"#);
        assert_eq!(
            verma_run_job(job.as_ptr(), &mut out, &mut code),
            VermaStatus::InvalidArgument
        );
        assert_eq!(code, 1);
        verma_string_free(out);

        let mut text = ptr::null_mut();
        assert_eq!(
            verma_job_json(
                c("det").as_ptr(),
                c("2").as_ptr(),
                ptr::null(),
                ptr::null(),
                1,
                &mut text
            ),
            VermaStatus::Ok
        );
        let text = take(text);
        assert_eq!(
            verma_run_job(c(&text).as_ptr(), &mut out, &mut code),
            VermaStatus::Ok
        );
        let doc: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(doc["det"], "9*hI^2");
    }
}

#[test]
fn header_declares_the_interface() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/verma.h")).unwrap();
    for name in [
        "verma_algebra_new",
        "verma_weight_new",
        "verma_run_job",
        "verma_string_free",
        "VERMA_STATUS_OK",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
