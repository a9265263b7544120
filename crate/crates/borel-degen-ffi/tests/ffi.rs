use std::ffi::{CStr, CString};
use std::ptr;

use borel_degen_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = bd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn monomial_ideal_round_trip() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_parse(c("x^2, x*y, y^4, x*w").as_ptr(), 4, &mut h), BdStatus::Ok);
        let mut n = 0;
        assert_eq!(bd_monomial_ideal_num_generators(h, &mut n), BdStatus::Ok);
        assert_eq!(n, 4);
        let mut s = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_to_string(h, &mut s), BdStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        bd_string_free(s);
        let mut again = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_parse(c(&text).as_ptr(), 4, &mut again), BdStatus::Ok);
        let mut eq = 0;
        assert_eq!(bd_monomial_ideal_equal(h, again, &mut eq), BdStatus::Ok);
        assert_eq!(eq, 1);
        let mut sat = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_saturation(h, &mut sat), BdStatus::Ok);
        let mut twisted = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_parse(c("x^2, x*y, y^4").as_ptr(), 4, &mut twisted), BdStatus::Ok);
        assert_eq!(bd_monomial_ideal_equal(sat, twisted, &mut eq), BdStatus::Ok);
        assert_eq!(eq, 0, "x*w survives saturation since (x^2, x y, y^4) : w does not contain x");
        let mut hf = 0;
        assert_eq!(bd_monomial_ideal_hilbert_function(twisted, 10, &mut hf), BdStatus::Ok);
        assert_eq!(hf, 5 * 10 - 2);
        for p in [h, again, sat, twisted] {
            bd_monomial_ideal_free(p);
        }
    }
}

#[test]
fn catalogue_access() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(bd_catalog_enumerate(c("5t-2").as_ptr(), 4, &mut cat), BdStatus::Ok);
        let mut n = 0;
        assert_eq!(bd_catalog_len(cat, &mut n), BdStatus::Ok);
        assert_eq!(n, 7);
        let mut j7 = ptr::null_mut();
        assert_eq!(bd_catalog_get(cat, 7, &mut j7), BdStatus::Ok);
        let mut label = 0;
        assert_eq!(bd_catalog_label(cat, j7, &mut label), BdStatus::Ok);
        assert_eq!(label, 7);
        let mut none = ptr::null_mut();
        assert_eq!(bd_catalog_get(cat, 8, &mut none), BdStatus::OutOfRange);
        assert!(none.is_null());
        assert!(last_error().contains("label 8"));
        bd_monomial_ideal_free(j7);
        bd_catalog_free(cat);
    }
}

#[test]
fn algebra_entry_points() {
    unsafe {
        let mut init = ptr::null_mut();
        assert_eq!(bd_initial_ideal(c("x^2, x*y, y^4 + x*z^3").as_ptr(), c("lex").as_ptr(), 4, &mut init), BdStatus::Ok);
        let mut expected = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_parse(c("x^2, x*y, x*z^3, y^5").as_ptr(), 4, &mut expected), BdStatus::Ok);
        let mut eq = 0;
        assert_eq!(bd_monomial_ideal_equal(init, expected, &mut eq), BdStatus::Ok);
        assert_eq!(eq, 1);
        bd_monomial_ideal_free(init);
        bd_monomial_ideal_free(expected);

        let mut g = 0;
        assert_eq!(bd_gotzmann_number(c("5t-2").as_ptr(), &mut g), BdStatus::Ok);
        assert_eq!(g, 8);

        let (mut p, mut f1, mut f2) = (0, 0, 0);
        assert_eq!(bd_filter_counts(1, 3, 1, &mut p, &mut f1, &mut f2), BdStatus::Ok);
        assert_eq!((p, f1, f2), (2, 4, 1));

        let mut ok = 0;
        let status = bd_witness_verify(
            3,
            1,
            c("y^2z + yz^2 + zw^2").as_ptr(),
            c("bracket(10,3,2,1)").as_ptr(),
            c("x^2, xy^3, xy^2z, xyz^2, y^6z, y^7").as_ptr(),
            &mut ok,
        );
        assert_eq!(status, BdStatus::Ok);
        assert_eq!(ok, 1);

        assert_eq!(bd_verify_prediction(c("EqProq2.1").as_ptr(), 2, 2, 1, 0, &mut ok), BdStatus::Ok);
        assert_eq!(ok, 1);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(bd_monomial_ideal_parse(ptr::null(), 4, &mut h), BdStatus::NullPointer);
        assert_eq!(bd_monomial_ideal_parse(c("x^2").as_ptr(), 4, ptr::null_mut()), BdStatus::NullPointer);
        let mut cat = ptr::null_mut();
        assert_eq!(bd_catalog_enumerate(c("bogus").as_ptr(), 4, &mut cat), BdStatus::ParseError);
        assert!(last_error().contains("cannot parse Hilbert polynomial"));
        let bad = [0xffu8, 0];
        assert_eq!(bd_gotzmann_number(bad.as_ptr().cast(), &mut 0), BdStatus::InvalidUtf8);
        let mut ok = 0;
        assert_eq!(bd_verify_prediction(c("NoSuchCase").as_ptr(), 2, 2, 1, 0, &mut ok), BdStatus::InvalidInput);
        assert_eq!(bd_monomial_ideal_parse(c("x").as_ptr(), 4, &mut h), BdStatus::Ok);
        assert!(bd_last_error_message().is_null());
        bd_monomial_ideal_free(h);
        bd_monomial_ideal_free(ptr::null_mut());
        bd_string_free(ptr::null_mut());
    }
}
