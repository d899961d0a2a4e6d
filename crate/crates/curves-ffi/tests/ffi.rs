use std::ffi::{c_char, CStr, CString};

use curves_ffi::*;

fn read_code(sys: *const CurvesSystem, index: usize) -> String {
    let mut buf = [0 as c_char; 64];
    let status = unsafe { curves_system_code(sys, index, buf.as_mut_ptr(), buf.len()) };
    assert_eq!(status, CurvesStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn pair_value(a: &str, b: &str) -> (CurvesStatus, u32) {
    let a = CString::new(a).unwrap();
    let b = CString::new(b).unwrap();
    let mut out = u32::MAX;
    let status = unsafe { curves_intersection(a.as_ptr(), b.as_ptr(), &mut out) };
    (status, out)
}

#[test]
fn system_lifecycle_and_codes() {
    let sys = curves_system_new();
    assert!(!sys.is_null());
    unsafe {
        assert_eq!(curves_system_len(sys), 33);
    }

    let codes: Vec<String> = (0..33).map(|i| read_code(sys, i)).collect();
    assert!(codes.contains(&"a1".to_owned()));
    assert!(codes.contains(&"1,_,0,_,0,1".to_owned()));
    let unique: std::collections::BTreeSet<&String> = codes.iter().collect();
    assert_eq!(unique.len(), 33);

    let mut buf = [0 as c_char; 64];
    unsafe {
        assert_eq!(
            curves_system_code(sys, 33, buf.as_mut_ptr(), buf.len()),
            CurvesStatus::DomainError
        );
        assert_eq!(
            curves_system_code(sys, 0, buf.as_mut_ptr(), 1),
            CurvesStatus::DomainError
        );
        curves_system_free(sys);
    }
}

#[test]
fn intersection_values_and_errors() {
    assert_eq!(
        pair_value("1,0,0,_,_,_", "1,_,0,_,0,1"),
        (CurvesStatus::Ok, 0)
    );
    assert_eq!(
        pair_value("0,0,0,_,_,_", "1,_,0,_,0,1"),
        (CurvesStatus::Ok, 1)
    );
    assert_eq!(pair_value("a1", "1,0,0,_,_,_"), (CurvesStatus::Ok, 1));
    assert_eq!(pair_value("a4", "1,0,0,_,_,_"), (CurvesStatus::Ok, 0));
    assert_eq!(pair_value("1,0,0,_,_,_", "2,0,0,_,_,_").0, CurvesStatus::Ok);

    assert_eq!(pair_value("zzz", "a1").0, CurvesStatus::ParseError);
    assert_eq!(
        pair_value("1,0,0,_,_,_", "1,0,_,0,_,_").0,
        CurvesStatus::ParseError
    );

    let good = CString::new("a1").unwrap();
    let mut out = 0u32;
    unsafe {
        assert_eq!(
            curves_intersection(std::ptr::null(), good.as_ptr(), &mut out),
            CurvesStatus::NullArgument
        );
        assert_eq!(
            curves_intersection(good.as_ptr(), good.as_ptr(), std::ptr::null_mut()),
            CurvesStatus::NullArgument
        );
        let bad_utf8 = [0xffu8 as c_char, 0];
        assert_eq!(
            curves_intersection(bad_utf8.as_ptr(), good.as_ptr(), &mut out),
            CurvesStatus::InvalidUtf8
        );
    }
}

#[test]
fn verify_and_saturation() {
    let sys = curves_system_new();
    assert!(!sys.is_null());
    unsafe {
        let mut max = u32::MAX;
        assert_eq!(curves_verify_1system(sys, &mut max), CurvesStatus::Ok);
        assert_eq!(max, 1);

        let mut admissible = usize::MAX;
        assert_eq!(
            curves_saturation(sys, 1, &mut admissible),
            CurvesStatus::DomainError
        );
        assert_eq!(curves_saturation(sys, 2, &mut admissible), CurvesStatus::Ok);
        assert_eq!(admissible, 0);

        curves_system_free(sys);
    }
}

#[test]
fn null_handles_are_rejected() {
    unsafe {
        assert_eq!(curves_system_len(std::ptr::null()), 0);
        let mut buf = [0 as c_char; 8];
        assert_eq!(
            curves_system_code(std::ptr::null(), 0, buf.as_mut_ptr(), buf.len()),
            CurvesStatus::NullArgument
        );
        let mut out = 0u32;
        assert_eq!(
            curves_verify_1system(std::ptr::null(), &mut out),
            CurvesStatus::NullArgument
        );
        let mut admissible = 0usize;
        assert_eq!(
            curves_saturation(std::ptr::null(), 2, &mut admissible),
            CurvesStatus::NullArgument
        );
        curves_system_free(std::ptr::null_mut());
    }
}

#[test]
fn status_messages_are_static_strings() {
    for status in [
        CurvesStatus::Ok,
        CurvesStatus::NullArgument,
        CurvesStatus::InvalidUtf8,
        CurvesStatus::ParseError,
        CurvesStatus::DomainError,
        CurvesStatus::InternalError,
    ] {
        let ptr = curves_status_message(status);
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!text.is_empty());
    }
    let ok = unsafe { CStr::from_ptr(curves_status_message(CurvesStatus::Ok)) };
    assert_eq!(ok.to_str().unwrap(), "ok");
}
