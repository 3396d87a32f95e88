//! C interface to `verma-core`.
//!
//! Handles are opaque pointers created by `*_new` and released by the
//! matching `*_free`. Every fallible call returns a [`VermaStatus`]; on
//! failure [`verma_last_error`] describes what went wrong on the calling
//! thread. Strings returned through out-parameters are owned by the caller
//! and must be released with [`verma_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use verma_core::cli::{run_json, AlgebraJson, JobSpec, Params, WeightJson};
use verma_core::criteria::{decide_dense, decide_discrete, decide_z};
use verma_core::grading::{GroupSpec, OrderClass};
use verma_core::liealg::{AlgebraSpec, Generator, LambdaMode};
use verma_core::shapovalov::{DetMode, Shapovalov};
use verma_core::verma::Weight;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VermaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    VerificationFailed = 4,
    Internal = 5,
}

/// An algebra `g(G, λ)`.
pub struct VermaAlgebra {
    spec: AlgebraSpec,
}

/// A weight on `g_0`, tied to the algebra it was built for.
pub struct VermaWeight {
    spec: AlgebraSpec,
    weight: Weight,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn guarded(f: impl FnOnce() -> Result<(), (VermaStatus, String)>) -> VermaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VermaStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            VermaStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (VermaStatus, String)> {
    if p.is_null() {
        return Err((VermaStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        (
            VermaStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn read_opt_str<'a>(
    p: *const c_char,
    what: &str,
) -> Result<Option<&'a str>, (VermaStatus, String)> {
    if p.is_null() {
        Ok(None)
    } else {
        read_str(p, what).map(Some)
    }
}

fn invalid(e: impl ToString) -> (VermaStatus, String) {
    (VermaStatus::InvalidArgument, e.to_string())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (VermaStatus, String)> {
    if out.is_null() {
        return Err((VermaStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s.replace('\0', " ")).expect("nul bytes removed");
    *out = c.into_raw();
    Ok(())
}

/// Text of the last error on this thread; empty after a successful call.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn verma_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn verma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an algebra from a λ string (`"1"`, `"-1/2"`, `"generic"`) and an
/// optional group JSON (`NULL` means `G = Z`).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn verma_algebra_new(
    lambda: *const c_char,
    group_json: *const c_char,
    out: *mut *mut VermaAlgebra,
) -> VermaStatus {
    guarded(|| {
        if out.is_null() {
            return Err((VermaStatus::NullPointer, "output pointer is null".into()));
        }
        let lambda = LambdaMode::parse(read_str(lambda, "lambda")?).map_err(invalid)?;
        let group = match read_opt_str(group_json, "group")? {
            None => GroupSpec::integers(),
            Some(text) => GroupSpec::from_json(&serde_json::from_str(text).map_err(invalid)?)
                .map_err(invalid)?,
        };
        let spec = AlgebraSpec::new(group, lambda).map_err(invalid)?;
        *out = Box::into_raw(Box::new(VermaAlgebra { spec }));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from [`verma_algebra_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn verma_algebra_free(alg: *mut VermaAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Bracket of two generators written as `L(2)`, `I(-1)`, `CL`, `CLI1`.
///
/// # Safety
/// `alg` must be a live handle; strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn verma_bracket(
    alg: *const VermaAlgebra,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> VermaStatus {
    guarded(|| {
        let alg = alg
            .as_ref()
            .ok_or((VermaStatus::NullPointer, "algebra is null".to_string()))?;
        let x: Generator = read_str(x, "x")?.parse().map_err(invalid)?;
        let y: Generator = read_str(y, "y")?.parse().map_err(invalid)?;
        alg.spec.check_generator(&x).map_err(invalid)?;
        alg.spec.check_generator(&y).map_err(invalid)?;
        write_string(out, alg.spec.bracket_gen(&x, &y).to_string())
    })
}

/// Builds a weight from a JSON map of slot values (`{"I0": "1"}`); unlisted
/// slots stay symbolic. `NULL` gives the fully symbolic weight.
///
/// # Safety
/// `alg` must be a live handle; `weight_json` NUL-terminated or null; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn verma_weight_new(
    alg: *const VermaAlgebra,
    weight_json: *const c_char,
    out: *mut *mut VermaWeight,
) -> VermaStatus {
    guarded(|| {
        let alg = alg
            .as_ref()
            .ok_or((VermaStatus::NullPointer, "algebra is null".to_string()))?;
        if out.is_null() {
            return Err((VermaStatus::NullPointer, "output pointer is null".into()));
        }
        let mut weight = Weight::symbolic(&alg.spec);
        if let Some(text) = read_opt_str(weight_json, "weight")? {
            let map: std::collections::BTreeMap<String, String> =
                serde_json::from_str(text).map_err(invalid)?;
            for (name, value) in map {
                let slot = verma_core::verma::Slot::parse(&name)
                    .ok_or_else(|| invalid(format!("unknown slot {name}")))?;
                let tag_ok = |v: &verma_core::exact::Scalar| {
                    v.field_tag().is_none()
                        || alg
                            .spec
                            .group()
                            .field_tag()
                            .is_none_or(|g| Some(g) == v.field_tag())
                };
                let v: verma_core::exact::Scalar = value.parse().map_err(invalid)?;
                if !tag_ok(&v) {
                    return Err(invalid(format!(
                        "{name} lies in a different quadratic field"
                    )));
                }
                weight = weight.with(slot, v);
            }
        }
        let weight = Weight::new(&alg.spec, weight.values().clone()).map_err(invalid)?;
        *out = Box::into_raw(Box::new(VermaWeight {
            spec: alg.spec.clone(),
            weight,
        }));
        Ok(())
    })
}

/// # Safety
/// `w` must come from [`verma_weight_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn verma_weight_free(w: *mut VermaWeight) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Determinant of the grade-`grade` Gram matrix of the rank-one module.
/// `brute` selects elimination instead of the diagonal product.
///
/// # Safety
/// `w` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn verma_gram_det(
    w: *const VermaWeight,
    grade: u32,
    brute: bool,
    out: *mut *mut c_char,
) -> VermaStatus {
    guarded(|| {
        let w = w
            .as_ref()
            .ok_or((VermaStatus::NullPointer, "weight is null".to_string()))?;
        if !w.spec.group().is_integers() {
            return Err(invalid("the Gram matrix needs the rank-one algebra over Z"));
        }
        if grade > 8 {
            return Err(invalid("grade is limited to 8"));
        }
        let form = Shapovalov::new(w.spec.clone(), w.weight.clone()).map_err(invalid)?;
        let mode = if brute {
            DetMode::Brute
        } else {
            DetMode::Triangular
        };
        let d = form.det(grade, mode).map_err(invalid)?;
        write_string(out, d.to_string())
    })
}

/// Irreducibility decision as a JSON document with `verdict`, `witness` and
/// `trace`.
///
/// # Safety
/// `w` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn verma_decide(
    w: *const VermaWeight,
    bound: u64,
    out: *mut *mut c_char,
) -> VermaStatus {
    guarded(|| {
        let w = w
            .as_ref()
            .ok_or((VermaStatus::NullPointer, "weight is null".to_string()))?;
        let result = if w.spec.group().is_integers() {
            decide_z(&w.spec, &w.weight, bound)
        } else {
            match w.spec.group().classify().map_err(invalid)? {
                OrderClass::Discrete(_) => decide_discrete(&w.spec, &w.weight, bound),
                OrderClass::Dense => decide_dense(&w.spec, &w.weight, false),
            }
        }
        .map_err(invalid)?;
        write_string(out, serde_json::to_string(&result).expect("serializable"))
    })
}

/// Runs a JSON job as the command-line tool would. The output document is
/// written to `out`; `exit_code` (if non-null) receives 0, 1 or 2. The
/// status is `InvalidArgument` for exit code 1 and `VerificationFailed` for
/// exit code 2.
///
/// # Safety
/// `job_json` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn verma_run_job(
    job_json: *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> VermaStatus {
    guarded(|| {
        let text = read_str(job_json, "job")?;
        let (doc, code) = run_json(text);
        if !exit_code.is_null() {
            *exit_code = code;
        }
        write_string(out, doc.to_string())?;
        match code {
            0 => Ok(()),
            1 => Err(invalid(
                doc.get("error")
                    .and_then(|e| e.as_str())
                    .unwrap_or("usage error"),
            )),
            _ => Err((
                VermaStatus::VerificationFailed,
                "verification failed".into(),
            )),
        }
    })
}

/// Builds the JSON job text for a command with default parameters; useful to
/// bindings that prefer structured construction.
///
/// # Safety
/// Strings must be NUL-terminated (`group_json`, `weight_json` may be null);
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn verma_job_json(
    command: *const c_char,
    lambda: *const c_char,
    group_json: *const c_char,
    weight_json: *const c_char,
    grade: u32,
    out: *mut *mut c_char,
) -> VermaStatus {
    guarded(|| {
        let command = serde_json::from_value(serde_json::Value::String(
            read_str(command, "command")?.to_owned(),
        ))
        .map_err(invalid)?;
        let group = read_opt_str(group_json, "group")?
            .map(serde_json::from_str)
            .transpose()
            .map_err(invalid)?;
        let weight: Option<WeightJson> = read_opt_str(weight_json, "weight")?
            .map(serde_json::from_str)
            .transpose()
            .map_err(invalid)?;
        let job = JobSpec {
            command,
            algebra: AlgebraJson {
                lambda: read_str(lambda, "lambda")?.to_owned(),
                group,
            },
            weight,
            params: Params {
                grade: Some(grade),
                ..Params::default()
            },
        };
        write_string(out, serde_json::to_string(&job).expect("serializable"))
    })
}
