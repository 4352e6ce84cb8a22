//! C ABI for the `hurwitz` crate.
//!
//! Conventions: every function returns an [`HwStatus`] error code and writes
//! results through out-pointers. Handles (`HwTuple`, `HwMoves`, `HwMatrix`)
//! are opaque; free them with the matching `hw_*_free`. Strings returned
//! through `char**` out-parameters are NUL-terminated, UTF-8, and owned by
//! the caller; release them with `hw_string_free`. All functions catch
//! panics and turn them into `HW_ERR_PANIC` rather than unwinding across
//! the boundary.
//!
//! Safety contract, shared by every `unsafe` entry point: pointer arguments
//! must be NULL or valid for their stated use (strings NUL-terminated,
//! handles previously returned by this library and not yet freed, array
//! pointers covering `n` elements); NULL is reported as `HW_ERR_NULL`,
//! never dereferenced. Handles are not thread-safe to free twice.
#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hurwitz::error::Error;
use hurwitz::files::{
    format_matrix, format_moves, format_tuple, parse_matrix, parse_moves_file, parse_tuple_file,
};
use hurwitz::hurwitz::{
    concat, matrix_of_tuple, standard_tuple, IntersectionMatrix, MoveSequence, StandardTuple,
    TwistTuple,
};
use hurwitz::search::{search_nonzero, SearchConfig, Strategy};
use hurwitz::symplectic::chain_classes;
use hurwitz::verify::{
    check_relation, example1_check, example2_check, ivanov_lower_bound, min_power_n,
    verify_lemma_case, RelationName, VerificationReport,
};

/// Status code returned by every FFI entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwStatus {
    HwOk = 0,
    /// A required pointer argument was NULL.
    HwErrNull = 1,
    /// A string argument was not valid UTF-8.
    HwErrUtf8 = 2,
    /// Text input failed to parse.
    HwErrParse = 3,
    /// An argument was outside its domain (bad case number, zero exponent, …).
    HwErrDomain = 4,
    /// Dimension or genus mismatch.
    HwErrDimension = 5,
    /// A Hurwitz move index was out of bounds.
    HwErrBounds = 6,
    /// An internal invariant failed.
    HwErrInternal = 7,
    /// A panic was caught at the FFI boundary.
    HwErrPanic = 8,
}

fn status_of(err: &Error) -> HwStatus {
    match err {
        Error::Parse { .. } => HwStatus::HwErrParse,
        Error::Domain(_) | Error::Precondition(_) => HwStatus::HwErrDomain,
        Error::GenusMismatch(..) | Error::Dimension(_) => HwStatus::HwErrDimension,
        Error::MoveOutOfBounds { .. } => HwStatus::HwErrBounds,
        Error::Invariant(_) | Error::Io(_) => HwStatus::HwErrInternal,
    }
}

/// An ordered tuple of twist classes (opaque).
pub struct HwTuple(TwistTuple);

/// A sequence of Hurwitz moves (opaque).
pub struct HwMoves(MoveSequence);

/// A skew-symmetric intersection matrix (opaque).
pub struct HwMatrix(IntersectionMatrix);

/// One multi-twist term for the intersection lower bound: exponent and the
/// two geometric intersection counts with the twisting curve.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct HwIvanovTerm {
    pub exponent: i64,
    pub int_gamma1: u64,
    pub int_gamma2: u64,
}

fn guard(f: impl FnOnce() -> HwStatus) -> HwStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(HwStatus::HwErrPanic)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, HwStatus> {
    if ptr.is_null() {
        return Err(HwStatus::HwErrNull);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| HwStatus::HwErrUtf8)
}

fn give_string(out: *mut *mut c_char, text: String) -> HwStatus {
    if out.is_null() {
        return HwStatus::HwErrNull;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            HwStatus::HwOk
        }
        Err(_) => HwStatus::HwErrInternal,
    }
}

fn give_report(
    report: &VerificationReport,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> HwStatus {
    if out_passed.is_null() {
        return HwStatus::HwErrNull;
    }
    unsafe { *out_passed = report.passed };
    if out_report.is_null() {
        // Report text is optional.
        return HwStatus::HwOk;
    }
    give_string(out_report, report.to_string())
}

/// Crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn hw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Frees a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn hw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------- tuples

/// Parses a tuple file (see the text formats in the core crate docs).
#[no_mangle]
pub unsafe extern "C" fn hw_tuple_parse(
    text: *const c_char,
    out: *mut *mut HwTuple,
) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_tuple_file(text) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(HwTuple(t)));
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds the standard tuple `A1`, `A2` or `A3` (`which` in 1..=3), with the
/// extra `γ1` entry appended when `with_gamma1` is true.
#[no_mangle]
pub unsafe extern "C" fn hw_tuple_standard(
    which: u8,
    with_gamma1: bool,
    out: *mut *mut HwTuple,
) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        let base = match which {
            1 => standard_tuple(StandardTuple::A1),
            2 => standard_tuple(StandardTuple::A2),
            3 => standard_tuple(StandardTuple::A3),
            _ => return HwStatus::HwErrDomain,
        };
        let tuple = if with_gamma1 {
            let chain = chain_classes(2).expect("genus 2");
            let g1 = TwistTuple::new(2, vec![chain[0].clone()]).expect("genus 2");
            concat(&base, &g1).expect("same genus")
        } else {
            base
        };
        *out = Box::into_raw(Box::new(HwTuple(tuple)));
        HwStatus::HwOk
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_tuple_len(t: *const HwTuple, out: *mut usize) -> HwStatus {
    guard(|| {
        if t.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        *out = (*t).0.len();
        HwStatus::HwOk
    })
}

/// Serializes a tuple back to its text format.
#[no_mangle]
pub unsafe extern "C" fn hw_tuple_format(
    t: *const HwTuple,
    out: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        if t.is_null() {
            return HwStatus::HwErrNull;
        }
        give_string(out, format_tuple(&(*t).0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_tuple_free(t: *mut HwTuple) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

// ----------------------------------------------------------------- moves

/// Parses whitespace-separated `L<k>` / `R<k>` tokens.
#[no_mangle]
pub unsafe extern "C" fn hw_moves_parse(
    text: *const c_char,
    out: *mut *mut HwMoves,
) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_moves_file(text) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(HwMoves(m)));
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The shipped certificate sequence `q1`, `q2` or `q3` (`case` in 1..=3).
#[no_mangle]
pub unsafe extern "C" fn hw_moves_shipped(case: u8, out: *mut *mut HwMoves) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        let Some(text) = hurwitz::data::q_moves_text(case) else {
            return HwStatus::HwErrDomain;
        };
        let moves = parse_moves_file(text).expect("shipped data parses");
        *out = Box::into_raw(Box::new(HwMoves(moves)));
        HwStatus::HwOk
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_moves_len(m: *const HwMoves, out: *mut usize) -> HwStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        *out = (*m).0.len();
        HwStatus::HwOk
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_moves_format(
    m: *const HwMoves,
    out: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        if m.is_null() {
            return HwStatus::HwErrNull;
        }
        give_string(out, format_moves(&(*m).0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_moves_free(m: *mut HwMoves) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

// -------------------------------------------------------------- matrices

#[no_mangle]
pub unsafe extern "C" fn hw_matrix_of_tuple(
    t: *const HwTuple,
    out: *mut *mut HwMatrix,
) -> HwStatus {
    guard(|| {
        if t.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        *out = Box::into_raw(Box::new(HwMatrix(matrix_of_tuple(&(*t).0))));
        HwStatus::HwOk
    })
}

/// Parses comma-separated rows; the matrix must be skew-symmetric.
#[no_mangle]
pub unsafe extern "C" fn hw_matrix_parse(
    text: *const c_char,
    out: *mut *mut HwMatrix,
) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_matrix(text) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(HwMatrix(m)));
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_matrix_size(m: *const HwMatrix, out: *mut usize) -> HwStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        *out = (*m).0.size();
        HwStatus::HwOk
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_matrix_all_offdiagonal_nonzero(
    m: *const HwMatrix,
    out: *mut bool,
) -> HwStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        *out = (*m).0.all_offdiagonal_nonzero();
        HwStatus::HwOk
    })
}

/// Serializes as lines of comma-separated integers.
#[no_mangle]
pub unsafe extern "C" fn hw_matrix_format(
    m: *const HwMatrix,
    out: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        if m.is_null() {
            return HwStatus::HwErrNull;
        }
        give_string(out, format_matrix(&(*m).0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_matrix_free(m: *mut HwMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

// ------------------------------------------------------ move application

/// Applies a move sequence at the tuple level.
#[no_mangle]
pub unsafe extern "C" fn hw_apply_sharp(
    t: *const HwTuple,
    m: *const HwMoves,
    out: *mut *mut HwTuple,
) -> HwStatus {
    guard(|| {
        if t.is_null() || m.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        match (*t).0.apply_moves(&(*m).0) {
            Ok(result) => {
                *out = Box::into_raw(Box::new(HwTuple(result)));
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Applies a move sequence at the matrix level.
#[no_mangle]
pub unsafe extern "C" fn hw_apply_flat(
    m: *const HwMatrix,
    moves: *const HwMoves,
    out: *mut *mut HwMatrix,
) -> HwStatus {
    guard(|| {
        if m.is_null() || moves.is_null() || out.is_null() {
            return HwStatus::HwErrNull;
        }
        match (*m).0.apply_moves(&(*moves).0) {
            Ok(result) => {
                *out = Box::into_raw(Box::new(HwMatrix(result)));
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

// ----------------------------------------------------------- verification

/// Runs the certificate check for `case` in 1..=3. `out_report` may be NULL
/// if only the verdict is wanted.
#[no_mangle]
pub unsafe extern "C" fn hw_verify_lemma(
    case: u8,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> HwStatus {
    guard(|| match verify_lemma_case(case) {
        Ok(report) => give_report(&report, out_passed, out_report),
        Err(e) => status_of(&e),
    })
}

/// Checks a chain relation: `chain4-pow5`, `chain5-pow6` or `palindrome-sq`.
#[no_mangle]
pub unsafe extern "C" fn hw_verify_relation(
    name: *const c_char,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        let name = match read_str(name) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let relation: RelationName = match name.parse() {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        give_report(&check_relation(relation), out_passed, out_report)
    })
}

/// Checks a worked monodromy family: `ex41` or `ex42`.
#[no_mangle]
pub unsafe extern "C" fn hw_verify_example(
    name: *const c_char,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        let name = match read_str(name) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let result = match name {
            "ex41" => example1_check(),
            "ex42" => example2_check(),
            _ => return HwStatus::HwErrDomain,
        };
        match result {
            Ok(report) => give_report(&report, out_passed, out_report),
            Err(e) => status_of(&e),
        }
    })
}

// ----------------------------------------------------------------- search

/// Deterministic certificate search. `strategy` is 0 for greedy-random, 1
/// for pure-random. On return `*out_found` says whether a sequence was
/// found; `*out_moves` holds it (or NULL).
#[no_mangle]
pub unsafe extern "C" fn hw_search_nonzero(
    t: *const HwTuple,
    seed: u64,
    max_moves: usize,
    restarts: usize,
    time_limit_seconds: f64,
    strategy: u8,
    out_found: *mut bool,
    out_moves: *mut *mut HwMoves,
) -> HwStatus {
    guard(|| {
        if t.is_null() || out_found.is_null() || out_moves.is_null() {
            return HwStatus::HwErrNull;
        }
        let strategy = match strategy {
            0 => Strategy::GreedyRandom,
            1 => Strategy::PureRandom,
            _ => return HwStatus::HwErrDomain,
        };
        let cfg = SearchConfig {
            seed,
            max_moves,
            time_limit_seconds,
            restarts,
            strategy,
        };
        match search_nonzero(&(*t).0, &cfg) {
            Ok(outcome) => {
                *out_found = outcome.found;
                *out_moves = match outcome.sequence {
                    Some(seq) => Box::into_raw(Box::new(HwMoves(seq))),
                    None => std::ptr::null_mut(),
                };
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

// ------------------------------------------------------------ calculators

unsafe fn write_f64(value: Result<f64, Error>, out: *mut f64) -> HwStatus {
    if out.is_null() {
        return HwStatus::HwErrNull;
    }
    match value {
        Ok(v) => {
            *out = v;
            HwStatus::HwOk
        }
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_wolpert(d: f64, out: *mut f64) -> HwStatus {
    guard(|| write_f64(hurwitz::bounds::wolpert_factor(d), out))
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_penner(h: u32, out: *mut f64) -> HwStatus {
    guard(|| write_f64(hurwitz::bounds::penner_bound(h), out))
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_eppa_systole(h: u32, out: *mut f64) -> HwStatus {
    guard(|| write_f64(hurwitz::bounds::eppa_systole_bound(h), out))
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_lmax(h: u32, mu: u32, out: *mut f64) -> HwStatus {
    guard(|| write_f64(hurwitz::bounds::lmax(h, mu), out))
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_collar_partner(l: f64, out: *mut f64) -> HwStatus {
    guard(|| write_f64(hurwitz::bounds::collar_partner(l), out))
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_k5(
    k1: f64,
    mu1: u32,
    mu2: u32,
    out_12: *mut f64,
    out_21: *mut f64,
) -> HwStatus {
    guard(|| {
        if out_12.is_null() || out_21.is_null() {
            return HwStatus::HwErrNull;
        }
        match hurwitz::bounds::k5_constants(k1, mu1, mu2) {
            Ok((a, b)) => {
                *out_12 = a;
                *out_21 = b;
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn hw_bounds_cusp_bracket(
    eps1: f64,
    eps2: f64,
    out_lower: *mut f64,
    out_upper: *mut f64,
) -> HwStatus {
    guard(|| {
        if out_lower.is_null() || out_upper.is_null() {
            return HwStatus::HwErrNull;
        }
        match hurwitz::bounds::cusp_distance_bracket(eps1, eps2) {
            Ok((lo, hi)) => {
                *out_lower = lo;
                *out_upper = hi;
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Multi-twist geometric-intersection lower bound over the given terms.
#[no_mangle]
pub unsafe extern "C" fn hw_ivanov_lower_bound(
    terms: *const HwIvanovTerm,
    n_terms: usize,
    cross: u64,
    out: *mut i64,
) -> HwStatus {
    guard(|| {
        if (terms.is_null() && n_terms > 0) || out.is_null() {
            return HwStatus::HwErrNull;
        }
        let slice: &[HwIvanovTerm] = if n_terms == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(terms, n_terms)
        };
        let converted: Vec<(i64, u64, u64)> = slice
            .iter()
            .map(|t| (t.exponent, t.int_gamma1, t.int_gamma2))
            .collect();
        match ivanov_lower_bound(&converted, cross) {
            Ok(v) => {
                *out = v;
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Smallest twisting power that forces intersections positive.
#[no_mangle]
pub unsafe extern "C" fn hw_min_power_n(
    i_delta: u64,
    i_delta_prime: u64,
    cross_upper: u64,
    out: *mut u64,
) -> HwStatus {
    guard(|| {
        if out.is_null() {
            return HwStatus::HwErrNull;
        }
        match min_power_n(i_delta, i_delta_prime, cross_upper) {
            Ok(v) => {
                *out = v;
                HwStatus::HwOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Monte-Carlo check of the hyperbolic separation bound.
#[no_mangle]
pub unsafe extern "C" fn hw_hplane_check_lemma(
    samples: u64,
    seed: u64,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> HwStatus {
    guard(|| {
        if samples == 0 {
            return HwStatus::HwErrDomain;
        }
        let report = hurwitz::hplane::mc_check_separation_lemma(samples, seed);
        give_report(&report, out_passed, out_report)
    })
}
