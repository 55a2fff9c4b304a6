//! C ABI over the `hessenberg` crate.
//!
//! Every fallible entry point returns a [`HessStatus`]; on failure the
//! message is available from [`hess_last_error`] on the same thread.
//! Strings handed out by the library must be released with
//! [`hess_string_free`], decompositions with [`hess_decomposition_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hessenberg::components::{component_data, make_semisimple, report_json, ReportJson};
use hessenberg::gkm::{build_gkm, to_dot, Highlight};
use hessenberg::patch::{
    patch_ideal, singular_scan, type_a_group, verify_against_combinatorics, LocalDimSource,
};
use hessenberg::rational::parse_rationals;
use hessenberg::root_system::CartanType;
use hessenberg::weyl::WeylGroup;
use hessenberg::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HessStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotStandardPosition = 2,
    Inconsistency = 3,
    GuardExceeded = 4,
    Internal = 5,
}

pub const HESS_HIGHLIGHT_NONE: c_int = 0;
pub const HESS_HIGHLIGHT_COMPONENTS: c_int = 1;
pub const HESS_HIGHLIGHT_SINGULAR: c_int = 2;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(HessStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotStandardPosition { .. } => HessStatus::NotStandardPosition,
            Error::Inconsistency { .. } => HessStatus::Inconsistency,
            Error::GuardExceeded { .. } | Error::GroupTooLarge { .. } => HessStatus::GuardExceeded,
            _ => HessStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: &str) -> Failure {
    Failure(HessStatus::InvalidArgument, msg.to_string())
}

/// Run `f`, recording any failure or panic.
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> HessStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HessStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            HessStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` is null or valid for one write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    let c = CString::new(s).map_err(|_| invalid("output contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

fn cartan(t: c_char) -> Result<CartanType, Failure> {
    match (t as u8).to_ascii_uppercase() {
        b'A' => Ok(CartanType::A),
        b'B' => Ok(CartanType::B),
        b'C' => Ok(CartanType::C),
        b'D' => Ok(CartanType::D),
        _ => Err(invalid("cartan type must be one of A, B, C, D")),
    }
}

fn parse_h(p: *const c_char, n: usize) -> Result<Vec<usize>, Failure> {
    if p.is_null() {
        return Ok(hessenberg::components::standard_hessenberg_function(n));
    }
    // SAFETY: non-null, caller contract
    let s = unsafe { read_str(p, "h") }?;
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| invalid("h must be comma-separated integers")))
        .collect()
}

/// Opaque decomposition of `B(S, H_Δ)`.
pub struct HessDecomposition {
    report: ReportJson,
}

/// Message of the last failure on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hess_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Decompose `B(S, H_Δ)` for type `cartan_type` (`'A'`..`'D'`) of the given
/// rank; `s_values` is comma-separated (`"1,1,-1,-1"`, fractions as `p/q`).
///
/// # Safety
/// `s_values` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_new(
    cartan_type: c_char,
    rank: usize,
    s_values: *const c_char,
    out: *mut *mut HessDecomposition,
) -> HessStatus {
    guarded(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let t = cartan(cartan_type)?;
        let values = parse_rationals(read_str(s_values, "s_values")?)?;
        let wg = WeylGroup::of_type(t, rank)?;
        let s = make_semisimple(wg.root_system(), values.clone())?;
        let report = report_json(&wg, &values, &component_data(&wg, &s)?);
        *out = Box::into_raw(Box::new(HessDecomposition { report }));
        Ok(())
    })
}

/// # Safety
/// `d` is null or came from [`hess_decomposition_new`] and is not used again.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_free(d: *mut HessDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of irreducible components; 0 for a null handle.
///
/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_component_count(d: *const HessDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.report.components.len())
}

/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_variety_dim(d: *const HessDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.report.variety_dim)
}

/// Number of singular fixed points.
///
/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_singular_count(d: *const HessDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.report.singular.len())
}

/// # Safety
/// `d` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_decomposition_to_json(
    d: *const HessDecomposition,
    out: *mut *mut c_char,
) -> HessStatus {
    guarded(|| {
        let d = d.as_ref().ok_or_else(|| invalid("handle is null"))?;
        let text = serde_json::to_string(&d.report).map_err(|e| invalid(&e.to_string()))?;
        write_string(out, text)
    })
}

/// GKM graph of `B(S, H_Δ)` as DOT; `highlight` is one of the
/// `HESS_HIGHLIGHT_*` constants.
///
/// # Safety
/// `s_values` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_gkm_dot(
    cartan_type: c_char,
    rank: usize,
    s_values: *const c_char,
    highlight: c_int,
    out: *mut *mut c_char,
) -> HessStatus {
    guarded(|| {
        let t = cartan(cartan_type)?;
        let values = parse_rationals(read_str(s_values, "s_values")?)?;
        let highlight = match highlight {
            HESS_HIGHLIGHT_NONE => Highlight::None,
            HESS_HIGHLIGHT_COMPONENTS => Highlight::Components,
            HESS_HIGHLIGHT_SINGULAR => Highlight::Singular,
            _ => return Err(invalid("unknown highlight mode")),
        };
        let wg = WeylGroup::of_type(t, rank)?;
        let s = make_semisimple(wg.root_system(), values)?;
        let mut g = build_gkm(&wg, &s)?;
        g.annotate(&component_data(&wg, &s)?);
        write_string(out, to_dot(&g, &wg, highlight))
    })
}

/// Patch ideal at `w` (a word such as `"s2s1"`) in type A with `n` = the
/// number of values in `s_values`. A null `h` selects the standard
/// Hessenberg function.
///
/// # Safety
/// String arguments are NUL-terminated (`h` may be null); `out` is valid
/// for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_patch_json(
    s_values: *const c_char,
    h: *const c_char,
    w: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> HessStatus {
    guarded(|| {
        let values = parse_rationals(read_str(s_values, "s_values")?)?;
        let n = values.len();
        let h = parse_h(h, n)?;
        let wg = type_a_group(n)?;
        let w = wg.parse_word(read_str(w, "w")?)?;
        let summary = patch_ideal(&w, &values, &h)?.summary(seed)?;
        write_string(out, serde_json::to_string(&summary).map_err(|e| invalid(&e.to_string()))?)
    })
}

/// Tangent-dimension scan in type A. `local_dim >= 0` supplies the local
/// dimension; a negative value selects the combinatorial dimension for the
/// standard `h` and no dimension otherwise.
///
/// # Safety
/// String arguments are NUL-terminated (`h` may be null); `out` is valid
/// for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_scan_json(
    s_values: *const c_char,
    h: *const c_char,
    local_dim: i64,
    seed: u64,
    out: *mut *mut c_char,
) -> HessStatus {
    guarded(|| {
        let values = parse_rationals(read_str(s_values, "s_values")?)?;
        let n = values.len();
        let standard = h.is_null();
        let h = parse_h(h, n)?;
        let source = match usize::try_from(local_dim) {
            Ok(d) => LocalDimSource::Supplied(d),
            Err(_) if standard || h == hessenberg::components::standard_hessenberg_function(n) => {
                LocalDimSource::Combinatorial
            }
            Err(_) => LocalDimSource::Unknown,
        };
        let report = singular_scan(&values, &h, source, seed)?;
        write_string(out, serde_json::to_string(&report).map_err(|e| invalid(&e.to_string()))?)
    })
}

/// Compare the Jacobian criterion with the combinatorial singular locus;
/// `*agree` is set to 1 or 0.
///
/// # Safety
/// `s_values` is a NUL-terminated string; `agree` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn hess_verify(s_values: *const c_char, agree: *mut c_int) -> HessStatus {
    guarded(|| {
        if agree.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let values = parse_rationals(read_str(s_values, "s_values")?)?;
        let report = verify_against_combinatorics(&values)?;
        *agree = c_int::from(report.agree);
        Ok(())
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hess_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
