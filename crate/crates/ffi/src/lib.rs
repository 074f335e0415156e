//! C ABI surface over `qlattice-core`.
//!
//! Conventions:
//! - Handles (`QlField`, `QlMatrix`, `QlIncidence`) are opaque; create them
//!   through the `ql_*_new`/`ql_*_build` functions and release them with the
//!   matching `ql_*_free`. Passing null to a free function is a no-op.
//! - Every fallible function returns a [`QlStatus`] and writes its result
//!   through an out-pointer, which is left untouched on failure.
//! - Strings returned through out-pointers are NUL-terminated, UTF-8, and
//!   owned by the caller; release them with [`ql_string_free`].
//! - Big integers cross the boundary as decimal strings.
//!
//! The companion header `include/qlattice.h` is generated by cbindgen at
//! build time.

use qlattice_core::det;
use qlattice_core::field::FieldCtx;
use qlattice_core::gorenstein;
use qlattice_core::incidence::{self, IncidencePair};
use qlattice_core::matrix::IntMatrix;
use qlattice_core::report::{render_report, run_suite, Suite};
use qlattice_core::table::{compute_table, render_table, OutputFormat};
use qlattice_core::{counting, Error};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a documented precondition (non-prime order,
    /// dimension too small, unknown name, ...).
    InvalidArgument = 2,
    /// The requested computation exceeds the step budget.
    BudgetExceeded = 3,
    /// Text input failed to parse.
    ParseError = 4,
    /// Input bytes were not valid UTF-8.
    Utf8Error = 5,
    /// An internal arithmetic invariant failed; report this as a bug.
    InternalError = 6,
}

/// Opaque finite-field context handle.
pub struct QlField(FieldCtx);

/// Opaque exact integer matrix handle.
pub struct QlMatrix(IntMatrix);

/// Opaque incidence-pair handle.
pub struct QlIncidence(IncidencePair);

/// Which matrix of an incidence pair to take.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlMatrixKind {
    Incidence = 0,
    Complement = 1,
}

fn status_of(err: &Error) -> QlStatus {
    match err {
        Error::BudgetExceeded { .. } => QlStatus::BudgetExceeded,
        Error::ParseMatrix(_) => QlStatus::ParseError,
        Error::Io { .. } => QlStatus::InternalError,
        _ => QlStatus::InvalidArgument,
    }
}

/// Runs `f`, converting panics (precondition assertions deep in the core)
/// into a status instead of unwinding across the boundary.
fn guarded<T>(out: *mut T, f: impl FnOnce() -> Result<T, QlStatus>) -> QlStatus {
    if out.is_null() {
        return QlStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => {
            unsafe { out.write(value) };
            QlStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => QlStatus::InvalidArgument,
    }
}

fn to_c_string(s: String) -> Result<*mut c_char, QlStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| QlStatus::InternalError)
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn from_c_str<'a>(ptr: *const c_char) -> Result<&'a str, QlStatus> {
    if ptr.is_null() {
        return Err(QlStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| QlStatus::Utf8Error)
}

/// Builds the field of order p^k. On success writes a handle the caller
/// must release with `ql_field_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_field_new(p: u64, k: u32, out: *mut *mut QlField) -> QlStatus {
    guarded(out, || {
        FieldCtx::new(p, k)
            .map(|ctx| Box::into_raw(Box::new(QlField(ctx))))
            .map_err(|e| status_of(&e))
    })
}

/// Builds the field of the given order, which must be a prime power.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_field_from_order(q: u64, out: *mut *mut QlField) -> QlStatus {
    guarded(out, || {
        FieldCtx::from_order(q)
            .map(|ctx| Box::into_raw(Box::new(QlField(ctx))))
            .map_err(|e| status_of(&e))
    })
}

/// The order of the field, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle from `ql_field_new`.
#[no_mangle]
pub unsafe extern "C" fn ql_field_order(field: *const QlField) -> u64 {
    if field.is_null() {
        return 0;
    }
    unsafe { &*field }.0.q()
}

/// Releases a field handle.
///
/// # Safety
/// `field` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_field_free(field: *mut QlField) {
    if !field.is_null() {
        drop(unsafe { Box::from_raw(field) });
    }
}

/// Builds the incidence pair for dimension `n >= 2` over the given field.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_incidence_build(
    n: u32,
    field: *const QlField,
    out: *mut *mut QlIncidence,
) -> QlStatus {
    if field.is_null() {
        return QlStatus::NullPointer;
    }
    let ctx = &unsafe { &*field }.0;
    guarded(out, || {
        incidence::build_incidence(n, ctx)
            .map(|pair| Box::into_raw(Box::new(QlIncidence(pair))))
            .map_err(|e| status_of(&e))
    })
}

/// Number of points indexing the incidence matrices, or 0 for null.
///
/// # Safety
/// `inc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ql_incidence_point_count(inc: *const QlIncidence) -> u64 {
    if inc.is_null() {
        return 0;
    }
    unsafe { &*inc }.0.a.dim() as u64
}

/// Copies one of the pair's matrices into a fresh matrix handle.
///
/// # Safety
/// `inc` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_incidence_matrix(
    inc: *const QlIncidence,
    kind: QlMatrixKind,
    out: *mut *mut QlMatrix,
) -> QlStatus {
    if inc.is_null() {
        return QlStatus::NullPointer;
    }
    let pair = &unsafe { &*inc }.0;
    guarded(out, || {
        let m = match kind {
            QlMatrixKind::Incidence => pair.a.clone(),
            QlMatrixKind::Complement => pair.b.clone(),
        };
        Ok(Box::into_raw(Box::new(QlMatrix(m))))
    })
}

/// Releases an incidence handle.
///
/// # Safety
/// `inc` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_incidence_free(inc: *mut QlIncidence) {
    if !inc.is_null() {
        drop(unsafe { Box::from_raw(inc) });
    }
}

/// Parses a matrix from the text exchange format (first line the dimension,
/// then one line per row).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_from_text(
    text: *const c_char,
    out: *mut *mut QlMatrix,
) -> QlStatus {
    let text = match unsafe { from_c_str(text) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    guarded(out, || {
        IntMatrix::from_text(text)
            .map(|m| Box::into_raw(Box::new(QlMatrix(m))))
            .map_err(|e| status_of(&e))
    })
}

/// Serializes a matrix to the text exchange format.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_to_text(
    matrix: *const QlMatrix,
    out: *mut *mut c_char,
) -> QlStatus {
    if matrix.is_null() {
        return QlStatus::NullPointer;
    }
    let m = &unsafe { &*matrix }.0;
    guarded(out, || to_c_string(m.to_text()))
}

/// The dimension of a matrix handle, or 0 for null.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_dim(matrix: *const QlMatrix) -> u64 {
    if matrix.is_null() {
        return 0;
    }
    unsafe { &*matrix }.0.dim() as u64
}

/// Signed determinant by fraction-free elimination, as a decimal string.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_det_exact(
    matrix: *const QlMatrix,
    out: *mut *mut c_char,
) -> QlStatus {
    if matrix.is_null() {
        return QlStatus::NullPointer;
    }
    let m = &unsafe { &*matrix }.0;
    guarded(out, || to_c_string(det::det_exact(m).to_string()))
}

/// Signed determinant by the multi-modular engine, as a decimal string.
/// Always equal to `ql_matrix_det_exact`; exposed so bindings can check.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_det_modular(
    matrix: *const QlMatrix,
    out: *mut *mut c_char,
) -> QlStatus {
    if matrix.is_null() {
        return QlStatus::NullPointer;
    }
    let m = &unsafe { &*matrix }.0;
    guarded(out, || to_c_string(det::det_modular(m).to_string()))
}

/// Releases a matrix handle.
///
/// # Safety
/// `matrix` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_matrix_free(matrix: *mut QlMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// The Gaussian binomial coefficient as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_q_binom(n: i64, j: i64, q: u64, out: *mut *mut c_char) -> QlStatus {
    guarded(out, || {
        if q < 2 {
            return Err(QlStatus::InvalidArgument);
        }
        to_c_string(counting::q_binom(n, j, q).to_string())
    })
}

/// Closed form of |det A| as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_det_a_closed(n: u32, q: u64, out: *mut *mut c_char) -> QlStatus {
    guarded(out, || {
        if q < 2 || n < 2 {
            return Err(QlStatus::InvalidArgument);
        }
        to_c_string(incidence::det_a_closed(n, q).to_string())
    })
}

/// Closed form of |det B| as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_det_b_closed(n: u32, q: u64, out: *mut *mut c_char) -> QlStatus {
    guarded(out, || {
        if q < 2 || n < 2 {
            return Err(QlStatus::InvalidArgument);
        }
        to_c_string(incidence::det_b_closed(n, q).to_string())
    })
}

/// The basis-set text dump (one 1-based index tuple per line).
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_basis_set_text(
    n: u32,
    field: *const QlField,
    budget: u64,
    out: *mut *mut c_char,
) -> QlStatus {
    if field.is_null() {
        return QlStatus::NullPointer;
    }
    let ctx = &unsafe { &*field }.0;
    guarded(out, || {
        gorenstein::build_basis_set(n, ctx, budget)
            .map_err(|e| status_of(&e))
            .and_then(|bs| to_c_string(bs.to_text()))
    })
}

/// Runs a verification suite ("all", "incidence", "gorenstein", or
/// "counting") and returns the JSON report.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_verify_json(
    n: u32,
    q: u64,
    suite: *const c_char,
    budget: u64,
    out: *mut *mut c_char,
) -> QlStatus {
    let suite = match unsafe { from_c_str(suite) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(_) => return QlStatus::InvalidArgument,
    };
    guarded(out, || {
        run_suite(n, q, suite, budget)
            .map(|report| render_report(&report, OutputFormat::Json))
            .map_err(|e| status_of(&e))
            .and_then(to_c_string)
    })
}

/// Renders the determinant table for `n_min..=n_max` in the given format
/// ("text", "csv", or "json").
///
/// # Safety
/// `format` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ql_table_render(
    q: u64,
    n_min: u32,
    n_max: u32,
    format: *const c_char,
    budget: u64,
    out: *mut *mut c_char,
) -> QlStatus {
    let format = match unsafe { from_c_str(format) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    let format: OutputFormat = match format.parse() {
        Ok(f) => f,
        Err(_) => return QlStatus::InvalidArgument,
    };
    guarded(out, || {
        compute_table(q, n_min, n_max, budget)
            .map(|table| render_table(&table, format))
            .map_err(|e| status_of(&e))
            .and_then(to_c_string)
    })
}

/// Releases a string returned by any `ql_*` function.
///
/// # Safety
/// `s` must be null or a string previously returned by this library; it
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
