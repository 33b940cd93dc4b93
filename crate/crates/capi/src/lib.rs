//! C ABI for the bi-objective convex-quadratic benchmark library.
//!
//! Instances are opaque handles created by the `bq_instance_*`
//! constructors and released with [`bq_instance_free`]. Every fallible
//! call returns a [`BqStatus`]; on failure a thread-local message with
//! the details is available from [`bq_last_error_message`] until the
//! next failing call on the same thread. Buffers are caller-allocated;
//! their required lengths are documented per function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use biobj_quad::oracle::{front_samples, GridKind, NormalizationMode};
use biobj_quad::quadratic::{is_proportional, BiQuadraticProblem};
use biobj_quad::suite::{
    make_instance, make_p10, InstanceDescriptor, ProblemClass, SpectrumChoice,
};
use biobj_quad::{hypervolume_2d, phi, tangent_limit_at_one, tangent_limit_at_zero, Error};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPositiveDefinite = 3,
    NotProportional = 4,
    IoError = 5,
    ParseError = 6,
    InternalError = 7,
}

/// Opaque benchmark instance: a materialized descriptor plus its
/// evaluable problem.
pub struct BqInstance {
    descriptor: InstanceDescriptor,
    problem: BiQuadraticProblem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn fail(err: &Error) -> BqStatus {
    set_last_error(err.to_string());
    match err {
        Error::NotPositiveDefinite { .. } => BqStatus::NotPositiveDefinite,
        Error::NotProportional => BqStatus::NotProportional,
        Error::Io(_) => BqStatus::IoError,
        Error::Parse(_) | Error::MalformedCsv { .. } => BqStatus::ParseError,
        _ => BqStatus::InvalidArgument,
    }
}

fn null_pointer(what: &str) -> BqStatus {
    set_last_error(format!("{what} must not be null"));
    BqStatus::NullPointer
}

fn guarded<F: FnOnce() -> BqStatus>(body: F) -> BqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic".to_string());
            BqStatus::InternalError
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string or null.
unsafe fn parse_c_str(text: *const c_char, what: &str) -> Result<String, BqStatus> {
    if text.is_null() {
        return Err(null_pointer(what));
    }
    match CStr::from_ptr(text).to_str() {
        Ok(s) => Ok(s.to_string()),
        Err(_) => {
            set_last_error(format!("{what} is not valid UTF-8"));
            Err(BqStatus::InvalidArgument)
        }
    }
}

fn box_out(instance: BqInstance, out: *mut *mut BqInstance) -> BqStatus {
    unsafe { *out = Box::into_raw(Box::new(instance)) };
    BqStatus::Ok
}

fn build_instance(descriptor: InstanceDescriptor) -> Result<BqInstance, Error> {
    let problem = descriptor.problem()?;
    Ok(BqInstance {
        descriptor,
        problem,
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn bq_status_name(status: BqStatus) -> *const c_char {
    let name: &'static str = match status {
        BqStatus::Ok => "ok\0",
        BqStatus::NullPointer => "null-pointer\0",
        BqStatus::InvalidArgument => "invalid-argument\0",
        BqStatus::NotPositiveDefinite => "not-positive-definite\0",
        BqStatus::NotProportional => "not-proportional\0",
        BqStatus::IoError => "io-error\0",
        BqStatus::ParseError => "parse-error\0",
        BqStatus::InternalError => "internal-error\0",
    };
    name.as_ptr() as *const c_char
}

/// Message of the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}

/// Generates an instance of one of the seven classes.
///
/// `class` is one of "sep-k", "sep-o", "sep-two-o", "one", "one-o",
/// "two", "two-o"; `k` is the 1-based axis index for "sep-k" and must be
/// 0 otherwise; `spectrum` is "sphere", "cigtab", "ellipsoid" or a
/// comma-separated list of positive reals; `normalization` is "fig2",
/// "kappa-unit" or "none".
///
/// # Safety
/// String arguments must be valid NUL-terminated strings; `out` must be a
/// valid pointer. On success `*out` owns the instance and must be
/// released with [`bq_instance_free`].
#[no_mangle]
pub unsafe extern "C" fn bq_instance_generate(
    class: *const c_char,
    k: usize,
    n: usize,
    spectrum: *const c_char,
    seed: u64,
    normalization: *const c_char,
    out: *mut *mut BqInstance,
) -> BqStatus {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let class = match parse_c_str(class, "class") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let spectrum = match parse_c_str(spectrum, "spectrum") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let normalization = match parse_c_str(normalization, "normalization") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let result = (|| -> Result<BqInstance, Error> {
            let class = ProblemClass::parse(&class, if k == 0 { None } else { Some(k) })?;
            let spectrum = SpectrumChoice::parse(&spectrum)?;
            let normalization: NormalizationMode = normalization.parse()?;
            build_instance(make_instance(class, n, &spectrum, seed, normalization)?)
        })();
        match result {
            Ok(instance) => box_out(instance, out),
            Err(err) => fail(&err),
        }
    })
}

/// The fixed 10-dimensional power-law instance.
///
/// # Safety
/// As for [`bq_instance_generate`].
#[no_mangle]
pub unsafe extern "C" fn bq_instance_p10(
    normalization: *const c_char,
    out: *mut *mut BqInstance,
) -> BqStatus {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let normalization = match parse_c_str(normalization, "normalization") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let result = (|| -> Result<BqInstance, Error> {
            let normalization: NormalizationMode = normalization.parse()?;
            build_instance(make_p10(normalization)?)
        })();
        match result {
            Ok(instance) => box_out(instance, out),
            Err(err) => fail(&err),
        }
    })
}

/// Loads an instance from a JSON file written by [`bq_instance_save`].
///
/// # Safety
/// As for [`bq_instance_generate`].
#[no_mangle]
pub unsafe extern "C" fn bq_instance_load(
    path: *const c_char,
    out: *mut *mut BqInstance,
) -> BqStatus {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let path = match parse_c_str(path, "path") {
            Ok(s) => PathBuf::from(s),
            Err(status) => return status,
        };
        let result = (|| -> Result<BqInstance, Error> {
            build_instance(InstanceDescriptor::from_file(&path)?)
        })();
        match result {
            Ok(instance) => box_out(instance, out),
            Err(err) => fail(&err),
        }
    })
}

/// Writes the instance to a JSON file, byte-identical for identical
/// instances.
///
/// # Safety
/// `instance` must be a live handle; `path` a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_save(
    instance: *const BqInstance,
    path: *const c_char,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        let path = match parse_c_str(path, "path") {
            Ok(s) => PathBuf::from(s),
            Err(status) => return status,
        };
        match instance.descriptor.to_file(&path) {
            Ok(()) => BqStatus::Ok,
            Err(err) => fail(&err),
        }
    })
}

/// Releases an instance handle. Null is ignored.
///
/// # Safety
/// `instance` must be a pointer returned by a constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_free(instance: *mut BqInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Search-space dimension, or 0 for a null handle.
///
/// # Safety
/// `instance` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_dimension(instance: *const BqInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.problem.dimension())
}

/// Evaluates both objectives at `x` (length `len`, which must equal the
/// instance dimension).
///
/// # Safety
/// `x` must point to `len` readable doubles; output pointers must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_evaluate(
    instance: *const BqInstance,
    x: *const f64,
    len: usize,
    out_f1: *mut f64,
    out_f2: *mut f64,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        if x.is_null() {
            return null_pointer("x");
        }
        if out_f1.is_null() || out_f2.is_null() {
            return null_pointer("output");
        }
        let n = instance.problem.dimension();
        if len != n {
            return fail(&Error::DimensionMismatch {
                expected: n,
                actual: len,
            });
        }
        let point = std::slice::from_raw_parts(x, len);
        *out_f1 = instance.problem.f1().evaluate(point);
        *out_f2 = instance.problem.f2().evaluate(point);
        BqStatus::Ok
    })
}

/// The Pareto-optimal point at curve parameter `t` in [0, 1], written to
/// `out_x` (length `len` = dimension).
///
/// # Safety
/// `out_x` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_pareto_point(
    instance: *const BqInstance,
    t: f64,
    out_x: *mut f64,
    len: usize,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        if out_x.is_null() {
            return null_pointer("out_x");
        }
        let n = instance.problem.dimension();
        if len != n {
            return fail(&Error::DimensionMismatch {
                expected: n,
                actual: len,
            });
        }
        match phi(&instance.problem, t) {
            Ok(x) => {
                std::slice::from_raw_parts_mut(out_x, len).copy_from_slice(&x);
                BqStatus::Ok
            }
            Err(err) => fail(&err),
        }
    })
}

/// Samples the exact Pareto front at `m >= 2` parameters.
///
/// `grid` is "uniform" or "chebyshev". `out_t`, `out_f1` and `out_f2`
/// must each hold `m` doubles. `out_x` may be null; otherwise it must
/// hold `m * dimension` doubles and receives the decision vectors
/// row-major.
///
/// # Safety
/// Output buffers must have the stated capacities.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_front(
    instance: *const BqInstance,
    m: usize,
    grid: *const c_char,
    out_t: *mut f64,
    out_f1: *mut f64,
    out_f2: *mut f64,
    out_x: *mut f64,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        if out_t.is_null() || out_f1.is_null() || out_f2.is_null() {
            return null_pointer("output");
        }
        let grid = match parse_c_str(grid, "grid") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let result = (|| -> Result<Vec<biobj_quad::FrontSample>, Error> {
            let grid: GridKind = grid.parse()?;
            front_samples(&instance.problem, m, grid)
        })();
        let samples = match result {
            Ok(samples) => samples,
            Err(err) => return fail(&err),
        };
        let n = instance.problem.dimension();
        let t_out = std::slice::from_raw_parts_mut(out_t, m);
        let f1_out = std::slice::from_raw_parts_mut(out_f1, m);
        let f2_out = std::slice::from_raw_parts_mut(out_f2, m);
        for (i, s) in samples.iter().enumerate() {
            t_out[i] = s.t;
            f1_out[i] = s.f1;
            f2_out[i] = s.f2;
        }
        if !out_x.is_null() {
            let x_out = std::slice::from_raw_parts_mut(out_x, m * n);
            for (i, s) in samples.iter().enumerate() {
                x_out[i * n..(i + 1) * n].copy_from_slice(&s.x);
            }
        }
        BqStatus::Ok
    })
}

/// Writes the proportionality factor of the scaled Hessians to
/// `out_gamma`, or returns `NotProportional`.
///
/// # Safety
/// `out_gamma` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_proportionality(
    instance: *const BqInstance,
    out_gamma: *mut f64,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        if out_gamma.is_null() {
            return null_pointer("out_gamma");
        }
        match is_proportional(&instance.problem) {
            Some(gamma) => {
                *out_gamma = gamma;
                BqStatus::Ok
            }
            None => fail(&Error::NotProportional),
        }
    })
}

/// The endpoint tangent limits of the front: the left limit is strictly
/// positive, the right strictly negative.
///
/// # Safety
/// Output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bq_instance_tangent_limits(
    instance: *const BqInstance,
    out_zero: *mut f64,
    out_one: *mut f64,
) -> BqStatus {
    guarded(|| {
        let Some(instance) = instance.as_ref() else {
            return null_pointer("instance");
        };
        if out_zero.is_null() || out_one.is_null() {
            return null_pointer("output");
        }
        *out_zero = tangent_limit_at_zero(&instance.problem);
        *out_one = tangent_limit_at_one(&instance.problem);
        BqStatus::Ok
    })
}

/// 2-D hypervolume of `len` objective pairs against the reference point.
/// Dominated, duplicated and out-of-reference points contribute nothing.
///
/// # Safety
/// `f1` and `f2` must point to `len` readable doubles; `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn bq_hypervolume_2d(
    f1: *const f64,
    f2: *const f64,
    len: usize,
    ref_f1: f64,
    ref_f2: f64,
    out: *mut f64,
) -> BqStatus {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if len > 0 && (f1.is_null() || f2.is_null()) {
            return null_pointer("points");
        }
        let points: Vec<(f64, f64)> = if len == 0 {
            Vec::new()
        } else {
            let a = std::slice::from_raw_parts(f1, len);
            let b = std::slice::from_raw_parts(f2, len);
            a.iter().copied().zip(b.iter().copied()).collect()
        };
        if points.iter().any(|(a, b)| a.is_nan() || b.is_nan()) {
            set_last_error("hypervolume input must not contain NaN".to_string());
            return BqStatus::InvalidArgument;
        }
        *out = hypervolume_2d(&points, (ref_f1, ref_f2));
        BqStatus::Ok
    })
}
