//! C ABI for `ai-core`.
//!
//! Every fallible function returns an [`AiStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`ai_last_error_message`] on the same thread. Handles are opaque and
//! released with the matching `_free` function; strings returned to the
//! caller are released with [`ai_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use ai_core::error::Error;
use ai_core::groebner::{colength_poly, initial_ideal, MonomialOrder, OrderKind, PolynomialIdeal};
use ai_core::monomial::{Exponent, MonomialIdeal};
use ai_core::multiplier::multiplier_ideal;
use ai_core::newton::{lct, multiplicity};
use ai_core::parse::{parse_monomial_ideal, parse_polynomials};
use ai_core::rational::{format_rational, Rational};
use ai_core::report::{sequence_report_for, Column, ExperimentSpec, Format};
use ai_core::sequences::{parse_descriptor, GradedSequence};
use ai_core::verify::run_suite;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AiStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    DimensionMismatch = 5,
    NotZeroDimensional = 6,
    UnitIdeal = 7,
    ZeroIdeal = 8,
    WorkLimit = 9,
    Overflow = 10,
    Io = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AiOrder {
    Lex = 0,
    Grlex = 1,
    Grevlex = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AiFormat {
    Csv = 0,
    Json = 1,
    Text = 2,
}

/// Opaque monomial ideal.
pub struct AiMonomialIdeal(MonomialIdeal);

/// Opaque polynomial ideal over the rationals.
pub struct AiPolynomialIdeal(PolynomialIdeal);

/// Opaque graded sequence of monomial ideals.
pub struct AiSequence(GradedSequence);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AiStatus {
    match e {
        Error::Parse { .. } | Error::DimensionInference | Error::EmptyInput => AiStatus::Parse,
        Error::DimensionMismatch { .. } | Error::EmptyDimension => AiStatus::DimensionMismatch,
        Error::NotZeroDimensional | Error::InfiniteColength => AiStatus::NotZeroDimensional,
        Error::UnitIdeal => AiStatus::UnitIdeal,
        Error::ZeroIdeal | Error::ZeroPolynomial => AiStatus::ZeroIdeal,
        Error::WorkLimit(_) | Error::GeneratorExplosion { .. } => AiStatus::WorkLimit,
        Error::Overflow => AiStatus::Overflow,
        Error::Io(_) => AiStatus::Io,
        _ => AiStatus::InvalidArgument,
    }
}

enum Fail {
    Status(AiStatus, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

type FfiResult<T> = std::result::Result<T, Fail>;

/// Runs `f`, converting errors and panics to a status.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> AiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AiStatus::Ok,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            AiStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(AiStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(AiStatus::Utf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail::Status(AiStatus::InvalidArgument, "string contains a nul byte".into()))
}

fn dim_arg(dim: size_t) -> Option<usize> {
    (dim != 0).then_some(dim)
}

fn order_of(order: AiOrder, dim: usize) -> MonomialOrder {
    let kind = match order {
        AiOrder::Lex => OrderKind::Lex,
        AiOrder::Grlex => OrderKind::Grlex,
        AiOrder::Grevlex => OrderKind::Grevlex,
    };
    MonomialOrder::new(kind, dim)
}

fn rational_parts(r: &Rational) -> FfiResult<(i64, i64)> {
    let overflow = || Fail::Core(Error::Overflow);
    let n = i64::try_from(r.numer()).map_err(|_| overflow())?;
    let d = i64::try_from(r.denom()).map_err(|_| overflow())?;
    Ok((n, d))
}

fn rational_arg(num: i64, den: i64) -> FfiResult<Rational> {
    if den == 0 {
        return Err(Fail::Status(AiStatus::InvalidArgument, "zero denominator".into()));
    }
    Ok(Rational::new(num.into(), den.into()))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ai_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn ai_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ai_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses comma-separated monomials. `dim = 0` infers the number of
/// variables from the highest index.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_parse(
    text: *const c_char,
    dim: size_t,
    out: *mut *mut AiMonomialIdeal,
) -> AiStatus {
    guard(|| {
        let a = parse_monomial_ideal(self::text(text, "text")?, dim_arg(dim))?;
        write(out, Box::into_raw(Box::new(AiMonomialIdeal(a))))
    })
}

/// Builds a monomial ideal from `count` exponent vectors of length `dim`,
/// stored row by row in `exponents`.
///
/// # Safety
/// `exponents` must point to `dim * count` readable values (it may be null
/// when `count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_from_exponents(
    dim: size_t,
    count: size_t,
    exponents: *const u32,
    out: *mut *mut AiMonomialIdeal,
) -> AiStatus {
    guard(|| {
        let len = dim.checked_mul(count).ok_or(Error::Overflow)?;
        let data: &[u32] = if len == 0 {
            &[]
        } else if exponents.is_null() {
            return Err(null("exponents"));
        } else {
            std::slice::from_raw_parts(exponents, len)
        };
        let gens = data.chunks(dim.max(1)).map(|c| Exponent::new(c.to_vec())).collect();
        let a = MonomialIdeal::minimalize(dim, gens)?;
        write(out, Box::into_raw(Box::new(AiMonomialIdeal(a))))
    })
}

/// # Safety
/// `ideal` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_free(ideal: *mut AiMonomialIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_dim(ideal: *const AiMonomialIdeal, out: *mut size_t) -> AiStatus {
    guard(|| write(out, handle(ideal, "ideal")?.0.dim()))
}

/// Number of minimal generators.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_generator_count(
    ideal: *const AiMonomialIdeal,
    out: *mut size_t,
) -> AiStatus {
    guard(|| write(out, handle(ideal, "ideal")?.0.gens().len()))
}

/// Copies generator `index` into `exponent`, which holds `dim` values.
///
/// # Safety
/// `ideal` must be a live handle; `exponent` must have room for `dim`
/// values.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_generator(
    ideal: *const AiMonomialIdeal,
    index: size_t,
    exponent: *mut u32,
) -> AiStatus {
    guard(|| {
        let a = &handle(ideal, "ideal")?.0;
        let g = a.gens().get(index).ok_or(Error::IndexOutOfRange(index as u64))?;
        if exponent.is_null() {
            return Err(null("exponent"));
        }
        ptr::copy_nonoverlapping(g.coords().as_ptr(), exponent, g.dim());
        Ok(())
    })
}

/// Canonical text of the ideal; free with [`ai_string_free`].
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_monomial_ideal_to_string(
    ideal: *const AiMonomialIdeal,
    out: *mut *mut c_char,
) -> AiStatus {
    guard(|| write(out, c_string(handle(ideal, "ideal")?.0.to_string())?))
}

/// Hilbert–Samuel multiplicity of a zero-dimensional ideal.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_multiplicity(ideal: *const AiMonomialIdeal, out: *mut u64) -> AiStatus {
    guard(|| write(out, multiplicity(&handle(ideal, "ideal")?.0)?))
}

/// `length(R/a)` of a zero-dimensional ideal.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_colength(ideal: *const AiMonomialIdeal, out: *mut u64) -> AiStatus {
    guard(|| write(out, handle(ideal, "ideal")?.0.colength()?))
}

/// Order at the maximal ideal: the least total degree of a generator.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_order(ideal: *const AiMonomialIdeal, out: *mut u64) -> AiStatus {
    guard(|| write(out, handle(ideal, "ideal")?.0.order()?))
}

/// Log canonical threshold as a reduced fraction.
///
/// # Safety
/// `ideal` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_lct(ideal: *const AiMonomialIdeal, num: *mut i64, den: *mut i64) -> AiStatus {
    guard(|| {
        let (n, d) = rational_parts(&lct(&handle(ideal, "ideal")?.0)?)?;
        if den.is_null() {
            return Err(null("den"));
        }
        write(num, n)?;
        write(den, d)
    })
}

/// `I(λ·a)` with `λ = num/den > 0`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_multiplier_ideal(
    ideal: *const AiMonomialIdeal,
    num: i64,
    den: i64,
    out: *mut *mut AiMonomialIdeal,
) -> AiStatus {
    guard(|| {
        let j = multiplier_ideal(&handle(ideal, "ideal")?.0, &rational_arg(num, den)?)?;
        write(out, Box::into_raw(Box::new(AiMonomialIdeal(j))))
    })
}

/// Parses comma-separated polynomials with rational coefficients.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_polynomial_ideal_parse(
    text: *const c_char,
    dim: size_t,
    out: *mut *mut AiPolynomialIdeal,
) -> AiStatus {
    guard(|| {
        let (n, gens) = parse_polynomials(self::text(text, "text")?, dim_arg(dim))?;
        let i = PolynomialIdeal::new(n, gens)?;
        write(out, Box::into_raw(Box::new(AiPolynomialIdeal(i))))
    })
}

/// # Safety
/// `ideal` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ai_polynomial_ideal_free(ideal: *mut AiPolynomialIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Initial monomial ideal under `order`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_polynomial_initial_ideal(
    ideal: *const AiPolynomialIdeal,
    order: AiOrder,
    out: *mut *mut AiMonomialIdeal,
) -> AiStatus {
    guard(|| {
        let i = &handle(ideal, "ideal")?.0;
        let init = initial_ideal(i, &order_of(order, i.dim()))?;
        write(out, Box::into_raw(Box::new(AiMonomialIdeal(init))))
    })
}

/// `length(R/I)`, read off the initial ideal under `order`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_polynomial_colength(
    ideal: *const AiPolynomialIdeal,
    order: AiOrder,
    out: *mut u64,
) -> AiStatus {
    guard(|| {
        let i = &handle(ideal, "ideal")?.0;
        write(out, colength_poly(i, &order_of(order, i.dim()))?)
    })
}

/// Parses a sequence descriptor such as `weighted 5 7 5` or
/// `powers x^2, y^3`.
///
/// # Safety
/// `descriptor` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_sequence_parse(
    descriptor: *const c_char,
    dim: size_t,
    out: *mut *mut AiSequence,
) -> AiStatus {
    guard(|| {
        let words: Vec<String> = text(descriptor, "descriptor")?
            .split_whitespace()
            .map(String::from)
            .collect();
        let seq = parse_descriptor(&words, dim_arg(dim))?;
        write(out, Box::into_raw(Box::new(AiSequence(seq))))
    })
}

/// # Safety
/// `seq` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ai_sequence_free(seq: *mut AiSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// The ideal `a_m`; `m = 0` gives the unit ideal.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_sequence_get(seq: *const AiSequence, m: u64, out: *mut *mut AiMonomialIdeal) -> AiStatus {
    guard(|| {
        let a = handle(seq, "sequence")?.0.get(m)?;
        write(out, Box::into_raw(Box::new(AiMonomialIdeal(a))))
    })
}

/// Per-index report for `m = 1..=max_index`. `columns` is a
/// comma-separated subset of `mult,vol,lct,bracket,ord,saturate,colon`,
/// or null for the default. Free the result with [`ai_string_free`].
///
/// # Safety
/// `seq` must be a live handle; `columns` must be null or a nul-terminated
/// string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_sequence_report(
    seq: *const AiSequence,
    max_index: u64,
    p_budget: u64,
    r_budget: u64,
    columns: *const c_char,
    format: AiFormat,
    out: *mut *mut c_char,
) -> AiStatus {
    guard(|| {
        let seq = &handle(seq, "sequence")?.0;
        let mut spec = ExperimentSpec::new(Vec::new());
        spec.max_index = max_index;
        spec.p_budget = p_budget;
        spec.r_budget = r_budget;
        if !columns.is_null() {
            spec.columns = text(columns, "columns")?
                .split(',')
                .map(str::parse::<Column>)
                .collect::<ai_core::Result<_>>()?;
        }
        let format = match format {
            AiFormat::Csv => Format::Csv,
            AiFormat::Json => Format::Json,
            AiFormat::Text => Format::Text,
        };
        let report = sequence_report_for(seq, &spec)?;
        write(out, c_string(report.render(format)?)?)
    })
}

/// Runs a seeded property suite by name and reports the number of failed
/// and inconclusive checks.
///
/// # Safety
/// `suite` must be a nul-terminated string; `failed` and `inconclusive`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_verify(
    suite: *const c_char,
    seed: u64,
    count: size_t,
    failed: *mut u64,
    inconclusive: *mut u64,
) -> AiStatus {
    guard(|| {
        let suite = text(suite, "suite")?.parse()?;
        let report = run_suite(suite, seed, count)?;
        if inconclusive.is_null() {
            return Err(null("inconclusive"));
        }
        write(failed, report.failed as u64)?;
        write(inconclusive, report.inconclusive as u64)
    })
}

/// Exact rational rendering `p/q` of `num/den` in lowest terms; mainly a
/// convenience for callers printing results of [`ai_lct`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ai_rational_to_string(num: i64, den: i64, out: *mut *mut c_char) -> AiStatus {
    guard(|| write(out, c_string(format_rational(&rational_arg(num, den)?))?))
}
