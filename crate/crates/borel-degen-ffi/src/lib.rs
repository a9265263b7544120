//! C ABI for `borel-degen`.
//!
//! Every function returns a [`BdStatus`]; results are written through out
//! pointers.  Objects are opaque handles owned by the caller and released with
//! the matching `*_free` function.  Strings returned by the library are
//! NUL-terminated and released with [`bd_string_free`].  After a non-`Ok`
//! status, [`bd_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use borel_degen::acm_component::{filter_candidates_with, C1Check};
use borel_degen::borel_enum::{enumerate_saturated_borel, BorelCatalog};
use borel_degen::degeneration::{prediction_catalogue, verify_prediction, CaseId, CaseParams};
use borel_degen::error::Error;
use borel_degen::groebner::{initial_ideal, PolynomialIdeal};
use borel_degen::monomial_ideal::{gotzmann_number, MonomialIdeal};
use borel_degen::parse::{parse_hilbert_polynomial, parse_monomial_ideal, parse_polynomial, parse_polynomial_list, parse_term_order};
use borel_degen::witness::{verify_witness, WitnessProblem};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    HypothesisViolated = 5,
    ComputationFailed = 6,
    OutOfRange = 7,
    Panic = 8,
}

/// Opaque monomial ideal in a polynomial ring.
pub struct BdMonomialIdeal(MonomialIdeal);

/// Opaque catalogue of saturated Borel-fixed ideals.
pub struct BdCatalog(BorelCatalog);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_for(e: &Error) -> BdStatus {
    match e {
        Error::Parse(_) | Error::HilbertPolynomialParse(_) | Error::InvalidTermOrder(_) => BdStatus::ParseError,
        Error::InvalidInput(_) | Error::RingMismatch(_) | Error::NotAHilbertPolynomial(_) | Error::DimensionMismatch(_) | Error::HilbertPolynomialMismatch(_) => {
            BdStatus::InvalidInput
        }
        Error::HypothesisViolated(_) | Error::InconsistentPreorder(_) => BdStatus::HypothesisViolated,
        _ => BdStatus::ComputationFailed,
    }
}

struct Failure(BdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_for(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BdStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            BdStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or a NUL-terminated string valid for reads.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BdStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(BdStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for one write.
unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(BdStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

/// # Safety
/// `h` must be null or a live handle.
unsafe fn deref<'a, T>(h: *const T) -> Result<&'a T, Failure> {
    h.as_ref().ok_or_else(|| Failure(BdStatus::NullPointer, "handle is null".into()))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no NUL").into_raw()
}

/// Message for the most recent failure on this thread, or null.  The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn bd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a monomial ideal such as `"x^2, x*y, y^4"` in `nvars` variables.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_parse(text: *const c_char, nvars: usize, out: *mut *mut BdMonomialIdeal) -> BdStatus {
    guard(|| {
        let j = parse_monomial_ideal(read_str(text, "text")?, nvars)?;
        write_out(out, Box::into_raw(Box::new(BdMonomialIdeal(j))))
    })
}

/// Releases a monomial ideal handle.
///
/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_free(h: *mut BdMonomialIdeal) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Writes the minimal generators as a newly allocated string.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_to_string(h: *const BdMonomialIdeal, out: *mut *mut c_char) -> BdStatus {
    guard(|| {
        let j = deref(h)?;
        write_out(out, to_c_string(j.0.to_string()))
    })
}

/// Number of minimal generators.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_num_generators(h: *const BdMonomialIdeal, out: *mut usize) -> BdStatus {
    guard(|| write_out(out, deref(h)?.0.gens().len()))
}

/// Whether two ideals have the same minimal generators (`1` or `0`).
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_equal(a: *const BdMonomialIdeal, b: *const BdMonomialIdeal, out: *mut i32) -> BdStatus {
    guard(|| write_out(out, i32::from(deref(a)?.0 == deref(b)?.0)))
}

/// Saturation with respect to the irrelevant ideal, as a new handle.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_saturation(h: *const BdMonomialIdeal, out: *mut *mut BdMonomialIdeal) -> BdStatus {
    guard(|| {
        let s = deref(h)?.0.saturation();
        write_out(out, Box::into_raw(Box::new(BdMonomialIdeal(s))))
    })
}

/// Dimension of the degree-`d` piece of the quotient ring.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_monomial_ideal_hilbert_function(h: *const BdMonomialIdeal, d: u32, out: *mut u64) -> BdStatus {
    guard(|| {
        let v = deref(h)?.0.hf_quotient(d);
        let v = u64::try_from(v).map_err(|_| Failure(BdStatus::OutOfRange, "value exceeds 64 bits".into()))?;
        write_out(out, v)
    })
}

/// Gotzmann number of a Hilbert polynomial such as `"7t-5"`.
///
/// # Safety
/// `hp` must be a NUL-terminated string; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_gotzmann_number(hp: *const c_char, out: *mut usize) -> BdStatus {
    guard(|| {
        let p = parse_hilbert_polynomial(read_str(hp, "hp")?)?;
        write_out(out, gotzmann_number(&p)?)
    })
}

/// Enumerates the saturated Borel-fixed ideals with a Hilbert polynomial.
///
/// # Safety
/// `hp` must be a NUL-terminated string; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_catalog_enumerate(hp: *const c_char, nvars: usize, out: *mut *mut BdCatalog) -> BdStatus {
    guard(|| {
        let p = parse_hilbert_polynomial(read_str(hp, "hp")?)?;
        let c = enumerate_saturated_borel(&p, nvars)?;
        write_out(out, Box::into_raw(Box::new(BdCatalog(c))))
    })
}

/// Releases a catalogue handle.
///
/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_catalog_free(h: *mut BdCatalog) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of ideals in a catalogue.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_catalog_len(h: *const BdCatalog, out: *mut usize) -> BdStatus {
    guard(|| write_out(out, deref(h)?.0.len()))
}

/// Copy of the ideal with 1-based `label`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_catalog_get(h: *const BdCatalog, label: usize, out: *mut *mut BdMonomialIdeal) -> BdStatus {
    guard(|| {
        let c = deref(h)?;
        let j = c.0.get(label).ok_or_else(|| Failure(BdStatus::OutOfRange, format!("label {label} is outside 1..={}", c.0.len())))?;
        write_out(out, Box::into_raw(Box::new(BdMonomialIdeal(j.clone()))))
    })
}

/// 1-based label of an ideal in a catalogue.
///
/// # Safety
/// `h` and `j` must be live handles; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_catalog_label(h: *const BdCatalog, j: *const BdMonomialIdeal, out: *mut usize) -> BdStatus {
    guard(|| {
        let label = deref(h)?.0.label(&deref(j)?.0)?;
        write_out(out, label)
    })
}

/// Initial ideal of the ideal generated by comma-separated polynomials.
///
/// # Safety
/// `gens` and `order` must be NUL-terminated strings; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_initial_ideal(gens: *const c_char, order: *const c_char, nvars: usize, out: *mut *mut BdMonomialIdeal) -> BdStatus {
    guard(|| {
        let g = parse_polynomial_list(read_str(gens, "gens")?, nvars)?;
        let o = parse_term_order(read_str(order, "order")?, nvars)?;
        let init = initial_ideal(&PolynomialIdeal::new(nvars, g)?, &o)?;
        write_out(out, Box::into_raw(Box::new(BdMonomialIdeal(init))))
    })
}

/// Sizes of the three parts of the C1/C2 partition for `J(l,m)`.
/// `top_power_only` selects the variant of C1 that tests only `y^{2l+m}`.
///
/// # Safety
/// The three out pointers must be valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn bd_filter_counts(l: u32, m: u32, top_power_only: i32, pass: *mut usize, fail_c1: *mut usize, fail_c2: *mut usize) -> BdStatus {
    guard(|| {
        let check = if top_power_only != 0 { C1Check::TopPower } else { C1Check::Full };
        let f = filter_candidates_with(l, m, check)?;
        write_out(pass, f.passing.len())?;
        write_out(fail_c1, f.failing_c1.len())?;
        write_out(fail_c2, f.failing_c2.len())
    })
}

/// Checks a witness: writes `1` when `in(I_F)` under `order` saturates to `target`.
///
/// # Safety
/// The string arguments must be NUL-terminated; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_witness_verify(l: u32, m: u32, f: *const c_char, order: *const c_char, target: *const c_char, out: *mut i32) -> BdStatus {
    guard(|| {
        let target = parse_monomial_ideal(read_str(target, "target")?, 4)?;
        let order = parse_term_order(read_str(order, "order")?, 4)?;
        let f = parse_polynomial(read_str(f, "F")?, 4)?;
        let p = WitnessProblem::new(l, m, target, order, Some(f))?;
        write_out(out, i32::from(verify_witness(&p)?.is_verified()))
    })
}

/// Verifies a prediction case by name (for example `"EqProq2.1"`); writes
/// `1` when every branch is confirmed.  `i` and `j` are ignored by `Part`,
/// which uses the zero vector.
///
/// # Safety
/// `case_name` must be NUL-terminated; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bd_verify_prediction(case_name: *const c_char, l: u32, m: u32, i: u32, j: u32, out: *mut i32) -> BdStatus {
    guard(|| {
        let id = CaseId::parse(read_str(case_name, "case_name")?)?;
        let params = if id == CaseId::Part { CaseParams::part(l, m, Vec::new()) } else { CaseParams::new(l, m, i, j) };
        let case = prediction_catalogue(id, &params)?;
        write_out(out, i32::from(verify_prediction(&case)?.is_confirmed()))
    })
}
