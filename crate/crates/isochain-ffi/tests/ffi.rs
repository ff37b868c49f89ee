//! Exercises the C ABI end to end through raw pointers, covering both the
//! success paths and every status code a caller can hit.

use std::ffi::{CStr, CString};
use std::ptr;

use isochain_ffi::*;

unsafe fn parsed(text: &str) -> *mut IsochainElement {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        isochain_element_parse(text.as_ptr(), &mut out),
        IsochainStatus::Ok
    );
    assert!(!out.is_null());
    out
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
    isochain_string_free(s);
    text
}

#[test]
fn parse_render_round_trip() {
    unsafe {
        let el = parsed("[n=3] 2->2 3->1");
        let mut text = ptr::null_mut();
        assert_eq!(isochain_element_to_text(el, &mut text), IsochainStatus::Ok);
        assert_eq!(take_string(text), "[n=3] 2->2 3->1");
        let mut json = ptr::null_mut();
        assert_eq!(isochain_element_to_json(el, &mut json), IsochainStatus::Ok);
        let value: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(value["n"], 3);
        assert_eq!(value["pairs"], serde_json::json!([[2, 2], [3, 1]]));
        isochain_element_free(el);
    }
}

#[test]
fn make_apply_and_pairs_round_trip() {
    unsafe {
        let domain = [2u32, 3];
        let image = [2u32, 1];
        let mut el = ptr::null_mut();
        assert_eq!(
            isochain_element_make(3, domain.as_ptr(), image.as_ptr(), 2, &mut el),
            IsochainStatus::Ok
        );

        let mut defined = false;
        let mut value = 0u32;
        assert_eq!(
            isochain_element_apply(el, 3, &mut defined, &mut value),
            IsochainStatus::Ok
        );
        assert!(defined);
        assert_eq!(value, 1);
        assert_eq!(
            isochain_element_apply(el, 1, &mut defined, &mut value),
            IsochainStatus::Ok
        );
        assert!(!defined);

        let mut len = 0usize;
        assert_eq!(
            isochain_element_pairs(el, ptr::null_mut(), ptr::null_mut(), 0, &mut len),
            IsochainStatus::Ok
        );
        assert_eq!(len, 2);
        let mut xs = [0u32; 2];
        let mut ys = [0u32; 2];
        assert_eq!(
            isochain_element_pairs(el, xs.as_mut_ptr(), ys.as_mut_ptr(), 2, &mut len),
            IsochainStatus::Ok
        );
        assert_eq!(xs, domain);
        assert_eq!(ys, image);

        let mut n = 0u32;
        assert_eq!(isochain_element_chain(el, &mut n), IsochainStatus::Ok);
        assert_eq!(n, 3);
        isochain_element_free(el);
    }
}

#[test]
fn compose_inverse_and_stats() {
    unsafe {
        let a = parsed("[n=4] 2->1 3->2");
        let b = parsed("[n=4] 1->1 2->2");
        let mut ab = ptr::null_mut();
        assert_eq!(isochain_element_compose(a, b, &mut ab), IsochainStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(isochain_element_to_text(ab, &mut text), IsochainStatus::Ok);
        assert_eq!(take_string(text), "[n=4] 2->1 3->2");

        let mut inv = ptr::null_mut();
        assert_eq!(isochain_element_inverse(a, &mut inv), IsochainStatus::Ok);
        let mut inv_text = ptr::null_mut();
        assert_eq!(
            isochain_element_to_text(inv, &mut inv_text),
            IsochainStatus::Ok
        );
        assert_eq!(take_string(inv_text), "[n=4] 1->2 2->3");

        let mut stats = IsochainStats {
            n: 0,
            height: 0,
            fix: 0,
            is_isometry: false,
            is_order_preserving: false,
            is_order_reversing: false,
            is_order_decreasing: false,
            is_idempotent: false,
            is_partial_identity: false,
            is_nilpotent: false,
        };
        assert_eq!(isochain_element_stats(a, &mut stats), IsochainStatus::Ok);
        assert_eq!(stats.n, 4);
        assert_eq!(stats.height, 2);
        assert_eq!(stats.fix, 0);
        assert!(stats.is_isometry);
        assert!(stats.is_order_preserving);
        assert!(stats.is_order_decreasing);
        assert!(stats.is_nilpotent);
        assert!(!stats.is_idempotent);

        let mut member = false;
        assert_eq!(
            isochain_element_is_member(
                a,
                IsochainFamily::OrderPreservingDecreasingIsometry,
                &mut member
            ),
            IsochainStatus::Ok
        );
        assert!(member);

        for p in [a, b, ab, inv] {
            isochain_element_free(p);
        }
    }
}

#[test]
fn enumerate_lists_the_family_in_canonical_order() {
    unsafe {
        for fast in [false, true] {
            let mut list = ptr::null_mut();
            assert_eq!(
                isochain_enumerate(
                    IsochainFamily::OrderPreservingDecreasingIsometry,
                    3,
                    8,
                    fast,
                    &mut list
                ),
                IsochainStatus::Ok
            );
            assert_eq!(isochain_list_len(list), 12);
            let first = isochain_list_get(list, 0);
            assert!(!first.is_null());
            let mut text = ptr::null_mut();
            assert_eq!(
                isochain_element_to_text(first, &mut text),
                IsochainStatus::Ok
            );
            assert_eq!(take_string(text), "[n=3] 0");
            assert!(isochain_list_get(list, 12).is_null());

            let mut cloned = ptr::null_mut();
            assert_eq!(
                isochain_element_clone(isochain_list_get(list, 1), &mut cloned),
                IsochainStatus::Ok
            );
            isochain_list_free(list);
            let mut n = 0u32;
            assert_eq!(isochain_element_chain(cloned, &mut n), IsochainStatus::Ok);
            assert_eq!(n, 3);
            isochain_element_free(cloned);
        }
    }
}

#[test]
fn counting_entry_points_agree_with_known_values() {
    unsafe {
        let mut count = 0u64;
        assert_eq!(
            isochain_order(IsochainFamily::DecreasingIsometry, 5, 8, &mut count),
            IsochainStatus::Ok
        );
        assert_eq!(count, 66);

        assert_eq!(
            isochain_closed_order(IsochainFamily::DecreasingIsometry, 5, &mut count),
            IsochainStatus::Ok
        );
        assert_eq!(count, 66);
        assert_eq!(
            isochain_closed_order(
                IsochainFamily::OrderPreservingDecreasingIsometry,
                62,
                &mut count
            ),
            IsochainStatus::Ok
        );
        assert_eq!(count, (1u64 << 63) - 63);

        let mut len = 0usize;
        assert_eq!(
            isochain_count_histogram(
                IsochainFamily::OrderPreservingDecreasingIsometry,
                IsochainStat::Fix,
                4,
                8,
                ptr::null_mut(),
                0,
                &mut len
            ),
            IsochainStatus::Ok
        );
        assert_eq!(len, 5);
        let mut buf = [0u64; 5];
        assert_eq!(
            isochain_count_histogram(
                IsochainFamily::OrderPreservingDecreasingIsometry,
                IsochainStat::Fix,
                4,
                8,
                buf.as_mut_ptr(),
                5,
                &mut len
            ),
            IsochainStatus::Ok
        );
        assert_eq!(buf, [12, 4, 6, 4, 1]);
    }
}

#[test]
fn property_report_is_valid_json() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            isochain_property_report_json(IsochainFamily::DecreasingIsometry, 3, 8, &mut out),
            IsochainStatus::Ok
        );
        let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(value["family"], "ddp");
        assert_eq!(value["order"], 13);
        assert_eq!(value["zero_e_unitary"], false);
    }
}

#[test]
fn every_failure_path_reports_its_status() {
    unsafe {
        let mut el = ptr::null_mut();
        assert_eq!(
            isochain_element_parse(ptr::null(), &mut el),
            IsochainStatus::NullPointer
        );

        let bad_utf8 = [0xffu8, 0];
        assert_eq!(
            isochain_element_parse(bad_utf8.as_ptr().cast(), &mut el),
            IsochainStatus::InvalidUtf8
        );

        let nonsense = CString::new("not an element").unwrap();
        assert_eq!(
            isochain_element_parse(nonsense.as_ptr(), &mut el),
            IsochainStatus::InvalidArgument
        );
        let message = isochain_last_error_message();
        assert!(!message.is_null());
        assert!(!take_string(message).is_empty());

        let domain = [1u32, 2];
        let image = [1u32, 1];
        assert_eq!(
            isochain_element_make(3, domain.as_ptr(), image.as_ptr(), 2, &mut el),
            IsochainStatus::InvalidArgument
        );

        let a = parsed("[n=2] 1->1");
        let b = parsed("[n=3] 1->1");
        let mut ab = ptr::null_mut();
        assert_eq!(
            isochain_element_compose(a, b, &mut ab),
            IsochainStatus::ChainMismatch
        );

        let mut count = 0u64;
        assert_eq!(
            isochain_order(IsochainFamily::Full, 9, 8, &mut count),
            IsochainStatus::CeilingExceeded
        );
        assert_eq!(
            isochain_closed_order(IsochainFamily::Full, 3, &mut count),
            IsochainStatus::Unsupported
        );
        assert_eq!(
            isochain_closed_order(IsochainFamily::DecreasingIsometry, 63, &mut count),
            IsochainStatus::InvalidArgument
        );

        let mut list = ptr::null_mut();
        assert_eq!(
            isochain_enumerate(IsochainFamily::Full, 3, 8, true, &mut list),
            IsochainStatus::Unsupported
        );

        assert_eq!(
            isochain_order(IsochainFamily::Full, 2, 8, &mut count),
            IsochainStatus::Ok
        );
        assert!(isochain_last_error_message().is_null());

        let status_text = CStr::from_ptr(isochain_status_text(IsochainStatus::ChainMismatch));
        assert_eq!(
            status_text.to_str().unwrap(),
            "elements live on chains of different sizes"
        );

        isochain_element_free(a);
        isochain_element_free(b);
        isochain_element_free(ptr::null_mut());
        isochain_list_free(ptr::null_mut());
        isochain_string_free(ptr::null_mut());
    }
}
