//! C interface to `topcoh`.
//!
//! Rings and ideals are opaque heap handles released with their `_free`
//! function. Strings returned through `char **` out-parameters are owned by
//! the caller and released with `topcoh_string_free`. Every fallible call
//! returns a `TopcohStatus`; on failure `topcoh_last_error` describes the
//! error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use serde_json::json;
use topcoh::cd::{ann_top, CyclicModule};
use topcoh::job::{parse_job, run};
use topcoh::primdec::primary_decomposition;
use topcoh::{parse_polynomial, Error, Ideal, Ring};

/// Status codes. Values 2 to 4 match the exit codes of the `topcoh` binary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopcohStatus {
    Ok = 0,
    Error = 1,
    Parse = 2,
    HypothesisNotMet = 3,
    TheoremViolation = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque polynomial ring.
pub struct TopcohRing(Arc<Ring>);

/// Opaque ideal.
pub struct TopcohIdeal(Ideal);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TopcohStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            TopcohStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(&format!("{}: {e}", e.kind()));
            match e.exit_code() {
                2 => TopcohStatus::Parse,
                3 => TopcohStatus::HypothesisNotMet,
                4 => TopcohStatus::TheoremViolation,
                _ => TopcohStatus::Error,
            }
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(&format!("null pointer: {what}"));
            TopcohStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_last_error("string argument is not valid UTF-8");
            TopcohStatus::InvalidUtf8
        }
        Err(_) => {
            set_last_error("internal panic");
            TopcohStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn str_array<'a>(
    p: *const *const c_char,
    len: usize,
    what: &'static str,
) -> Result<Vec<&'a str>, Failure> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    (0..len).map(|i| str_arg(*p.add(i), what)).collect()
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).expect("JSON text has no interior NUL");
    write_out(out, c.into_raw(), "out")
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next `topcoh_*` call on this thread.
#[no_mangle]
pub extern "C" fn topcoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a ring over Q (`characteristic == 0`) or F_p with the given
/// variable names, ordered by graded reverse lexicographic order.
///
/// # Safety
/// `names` must point to `len` NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ring_new(
    names: *const *const c_char,
    len: usize,
    characteristic: u64,
    out: *mut *mut TopcohRing,
) -> TopcohStatus {
    guard(|| {
        let names = str_array(names, len, "names")?;
        let ring = Ring::new(&names, characteristic)?;
        write_out(out, Box::into_raw(Box::new(TopcohRing(ring))), "out")
    })
}

/// # Safety
/// `ring` must come from `topcoh_ring_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ring_free(ring: *mut TopcohRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Creates the ideal generated by the parsed polynomials.
///
/// # Safety
/// `ring` must be a live handle, `generators` must point to `len`
/// NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ideal_new(
    ring: *const TopcohRing,
    generators: *const *const c_char,
    len: usize,
    out: *mut *mut TopcohIdeal,
) -> TopcohStatus {
    guard(|| {
        let ring = &ref_arg(ring, "ring")?.0;
        let polys = str_array(generators, len, "generators")?
            .into_iter()
            .map(|g| parse_polynomial(g, ring))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = Ideal::new(ring, polys)?;
        write_out(out, Box::into_raw(Box::new(TopcohIdeal(ideal))), "out")
    })
}

/// # Safety
/// `ideal` must come from `topcoh_ideal_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ideal_free(ideal: *mut TopcohIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Krull dimension of `R/I`; `-1` for the unit ideal.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ideal_krull_dim(ideal: *const TopcohIdeal, out: *mut i64) -> TopcohStatus {
    guard(|| {
        let ideal = &ref_arg(ideal, "ideal")?.0;
        write_out(out, ideal.krull_dim(), "out")
    })
}

/// Reduced Gröbner basis as a JSON array of polynomial strings.
///
/// # Safety
/// `ideal` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ideal_gb_json(
    ideal: *const TopcohIdeal,
    out: *mut *mut c_char,
) -> TopcohStatus {
    guard(|| {
        let ideal = &ref_arg(ideal, "ideal")?.0;
        write_string(out, json!(ideal.to_strings()).to_string())
    })
}

/// Attached primes and annihilator of the top local cohomology of `R/I`
/// with support in `a`, as a JSON object. `I` must be a monomial ideal.
///
/// # Safety
/// `ideal` and `a` must be live handles over the same ring; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_ann_top_json(
    ideal: *const TopcohIdeal,
    a: *const TopcohIdeal,
    out: *mut *mut c_char,
) -> TopcohStatus {
    guard(|| {
        let ideal = &ref_arg(ideal, "ideal")?.0;
        let a = &ref_arg(a, "a")?.0;
        if !ideal.ring().same_base(a.ring()) {
            return Err(Error::RingMismatch.into());
        }
        let module = CyclicModule::new(ideal.clone())?;
        let dec = primary_decomposition(ideal)?;
        let rep = ann_top(&module, a, &dec)?;
        let strings = |i: &Ideal| i.to_strings();
        let value = json!({
            "d": rep.d,
            "nonvanishing": rep.nonvanishing,
            "attached": rep.attached.iter().map(strings).collect::<Vec<_>>(),
            "annihilator": rep.annihilator.as_ref().map(strings),
            "radical_ann": rep.radical_ann.as_ref().map(strings),
            "supp_bound": rep.supp_bound.iter().map(strings).collect::<Vec<_>>(),
        });
        write_string(out, value.to_string())
    })
}

/// Runs a CLI command on a JSON job document and returns the JSON result.
/// `command` may be null to use the command named in the document.
///
/// # Safety
/// `job_json` must be a NUL-terminated string, `command` null or
/// NUL-terminated, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topcoh_run_json(
    command: *const c_char,
    job_json: *const c_char,
    out: *mut *mut c_char,
) -> TopcohStatus {
    guard(|| {
        let command = if command.is_null() {
            None
        } else {
            Some(str_arg(command, "command")?)
        };
        let job = parse_job(str_arg(job_json, "job_json")?)?;
        let value = run(command, &job)?;
        write_string(out, value.to_string())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn topcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
