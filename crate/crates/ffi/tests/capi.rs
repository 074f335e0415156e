//! Exercises the C ABI surface through the exported functions themselves:
//! handle lifecycles, status codes, and string ownership.

use qlattice_ffi::*;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { ql_string_free(ptr) };
    s
}

#[test]
fn field_lifecycle_and_errors() {
    unsafe {
        let mut field: *mut QlField = ptr::null_mut();
        assert_eq!(ql_field_new(2, 1, &mut field), QlStatus::Ok);
        assert_eq!(ql_field_order(field), 2);
        ql_field_free(field);

        let mut field: *mut QlField = ptr::null_mut();
        assert_eq!(ql_field_new(4, 1, &mut field), QlStatus::InvalidArgument);
        assert!(field.is_null());

        assert_eq!(ql_field_from_order(9, &mut field), QlStatus::Ok);
        assert_eq!(ql_field_order(field), 9);
        ql_field_free(field);

        assert_eq!(
            ql_field_from_order(6, &mut field),
            QlStatus::InvalidArgument
        );
        assert_eq!(ql_field_new(2, 1, ptr::null_mut()), QlStatus::NullPointer);
        // Freeing null is a no-op.
        ql_field_free(ptr::null_mut());
    }
}

#[test]
fn incidence_determinant_round_trip() {
    unsafe {
        let mut field: *mut QlField = ptr::null_mut();
        assert_eq!(ql_field_new(2, 1, &mut field), QlStatus::Ok);

        let mut inc: *mut QlIncidence = ptr::null_mut();
        assert_eq!(ql_incidence_build(3, field, &mut inc), QlStatus::Ok);
        assert_eq!(ql_incidence_point_count(inc), 7);

        let mut a: *mut QlMatrix = ptr::null_mut();
        assert_eq!(
            ql_incidence_matrix(inc, QlMatrixKind::Incidence, &mut a),
            QlStatus::Ok
        );
        assert_eq!(ql_matrix_dim(a), 7);

        let mut det: *mut c_char = ptr::null_mut();
        assert_eq!(ql_matrix_det_exact(a, &mut det), QlStatus::Ok);
        assert_eq!(take_string(det), "-24");

        let mut det2: *mut c_char = ptr::null_mut();
        assert_eq!(ql_matrix_det_modular(a, &mut det2), QlStatus::Ok);
        assert_eq!(take_string(det2), "-24");

        // Text round trip through the exchange format.
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(ql_matrix_to_text(a, &mut text), QlStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("7\n"));
        let ctext = CString::new(text).unwrap();
        let mut parsed: *mut QlMatrix = ptr::null_mut();
        assert_eq!(
            ql_matrix_from_text(ctext.as_ptr(), &mut parsed),
            QlStatus::Ok
        );
        let mut det3: *mut c_char = ptr::null_mut();
        assert_eq!(ql_matrix_det_exact(parsed, &mut det3), QlStatus::Ok);
        assert_eq!(take_string(det3), "-24");

        ql_matrix_free(parsed);
        ql_matrix_free(a);
        ql_incidence_free(inc);
        ql_field_free(field);
    }
}

#[test]
fn incidence_rejects_small_dimension() {
    unsafe {
        let mut field: *mut QlField = ptr::null_mut();
        assert_eq!(ql_field_new(3, 1, &mut field), QlStatus::Ok);
        let mut inc: *mut QlIncidence = ptr::null_mut();
        assert_eq!(
            ql_incidence_build(1, field, &mut inc),
            QlStatus::InvalidArgument
        );
        assert!(inc.is_null());
        ql_field_free(field);
    }
}

#[test]
fn malformed_matrix_text_is_parse_error() {
    unsafe {
        let text = CString::new("2\n1 2\nbroken row").unwrap();
        let mut m: *mut QlMatrix = ptr::null_mut();
        assert_eq!(
            ql_matrix_from_text(text.as_ptr(), &mut m),
            QlStatus::ParseError
        );
        assert_eq!(
            ql_matrix_from_text(ptr::null(), &mut m),
            QlStatus::NullPointer
        );
    }
}

#[test]
fn scalar_functions() {
    unsafe {
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ql_q_binom(3, 1, 2, &mut s), QlStatus::Ok);
        assert_eq!(take_string(s), "7");

        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ql_q_binom(3, 1, 1, &mut s), QlStatus::InvalidArgument);

        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ql_det_a_closed(3, 2, &mut s), QlStatus::Ok);
        assert_eq!(take_string(s), "24");
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ql_det_b_closed(3, 2, &mut s), QlStatus::Ok);
        assert_eq!(take_string(s), "32");
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ql_det_a_closed(1, 2, &mut s), QlStatus::InvalidArgument);
    }
}

#[test]
fn basis_set_text_through_handle() {
    unsafe {
        let mut field: *mut QlField = ptr::null_mut();
        assert_eq!(ql_field_new(2, 1, &mut field), QlStatus::Ok);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_basis_set_text(3, field, 100_000_000, &mut s),
            QlStatus::Ok
        );
        let text = take_string(s);
        assert_eq!(text.lines().count(), 28);
        assert!(text.starts_with("1 2 4\n"));

        // Budget exhaustion surfaces as a status, not a panic.
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_basis_set_text(3, field, 1, &mut s),
            QlStatus::BudgetExceeded
        );
        ql_field_free(field);
    }
}

#[test]
fn verify_json_parses_and_passes() {
    unsafe {
        let suite = CString::new("incidence").unwrap();
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_verify_json(3, 2, suite.as_ptr(), 100_000_000, &mut s),
            QlStatus::Ok
        );
        let json = take_string(s);
        let report: qlattice_core::report::VerificationReport =
            serde_json::from_str(&json).expect("valid report json");
        assert!(report.all_pass());
        assert!(report.engine_agreement);

        let bad = CString::new("nonsense").unwrap();
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_verify_json(3, 2, bad.as_ptr(), 100_000_000, &mut s),
            QlStatus::InvalidArgument
        );
    }
}

#[test]
fn table_render_formats() {
    unsafe {
        let csv = CString::new("csv").unwrap();
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_table_render(2, 3, 4, csv.as_ptr(), 100_000_000, &mut s),
            QlStatus::Ok
        );
        let text = take_string(s);
        assert!(text.starts_with("q,n,N,"));
        assert!(text.contains("2^14\u{b7}7"));

        let bad = CString::new("yaml").unwrap();
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(
            ql_table_render(2, 3, 4, bad.as_ptr(), 100_000_000, &mut s),
            QlStatus::InvalidArgument
        );
    }
}
