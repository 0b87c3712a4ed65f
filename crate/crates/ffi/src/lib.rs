//! C ABI over `jackpos`. Objects cross the boundary as opaque handles that
//! the caller releases with the matching `*_free` function; strings returned
//! to the caller are released with `jp_string_free`. Every function returns a
//! `JpStatus`; on failure `jp_last_error` describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jackpos::interp::{binomial, interp_linear, interp_tableau, Normalization};
use jackpos::symfunc::{jack, schur, SymPoly};
use jackpos::{cone_member, ConeStatus, Error, Partition, RatFun};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JpStatus {
    Ok = 0,
    Counterexample = 1,
    InvalidInput = 2,
    UnsupportedRange = 3,
    Io = 4,
    NullPointer = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JpCone {
    Zero = 0,
    Positive = 1,
    NonMember = 2,
}

/// Opaque element of `Q(t)`.
pub struct JpRatFun(RatFun);

/// Opaque symmetric polynomial.
pub struct JpSymPoly(SymPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> JpStatus {
    match e {
        Error::InvalidPartition(_) | Error::Parse(_) => JpStatus::InvalidInput,
        Error::TooLong { .. } | Error::UnsupportedRange(_) => JpStatus::UnsupportedRange,
        Error::DivisionByZero | Error::Pole(_) => JpStatus::InvalidInput,
        _ => JpStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<JpStatus, (JpStatus, String)>) -> JpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            JpStatus::Internal
        }
    }
}

fn lib<T>(r: jackpos::Result<T>) -> Result<T, (JpStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (JpStatus, String)> {
    if p.is_null() {
        return Err((JpStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (JpStatus::InvalidInput, "argument is not UTF-8".into()))
}

unsafe fn partition(p: *const c_char) -> Result<Partition, (JpStatus, String)> {
    lib(text(p)?.parse::<Partition>())
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<JpStatus, (JpStatus, String)> {
    if out.is_null() {
        return Err((JpStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(JpStatus::Ok)
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn jp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Generalized binomial coefficient `binom(lambda, mu)` in `n` variables.
/// Partitions are comma-separated parts, e.g. `"3,1"`.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jp_binomial(lambda: *const c_char, mu: *const c_char, n: usize, out: *mut *mut JpRatFun) -> JpStatus {
    guard(|| {
        let v = lib(binomial(&partition(lambda)?, &partition(mu)?, n))?;
        put(out, JpRatFun(v))
    })
}

/// Parses a rational function such as `"(2*t+2)/(t+2)"`.
///
/// # Safety
/// `s` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jp_ratfun_parse(s: *const c_char, out: *mut *mut JpRatFun) -> JpStatus {
    guard(|| put(out, JpRatFun(lib(text(s)?.parse::<RatFun>())?)))
}

/// Canonical text form. Release with `jp_string_free`.
///
/// # Safety
/// `f` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn jp_ratfun_to_string(f: *const JpRatFun) -> *mut c_char {
    match f.as_ref() {
        Some(f) => owned_string(f.0.to_string()),
        None => {
            set_error("null handle");
            ptr::null_mut()
        }
    }
}

/// Decides membership in the positivity cone.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jp_cone_member(f: *const JpRatFun, out: *mut JpCone) -> JpStatus {
    guard(|| {
        let (Some(f), false) = (f.as_ref(), out.is_null()) else {
            return Err((JpStatus::NullPointer, "null argument".into()));
        };
        *out = match cone_member(&f.0) {
            ConeStatus::Zero => JpCone::Zero,
            ConeStatus::MemberPositive { .. } => JpCone::Positive,
            ConeStatus::NonMember => JpCone::NonMember,
        };
        Ok(JpStatus::Ok)
    })
}

/// # Safety
/// `f` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn jp_ratfun_free(f: *mut JpRatFun) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Monic Jack polynomial `P_shape` in `n` variables, monomial basis.
///
/// # Safety
/// `shape` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jp_jack(shape: *const c_char, n: usize, out: *mut *mut JpSymPoly) -> JpStatus {
    guard(|| put(out, JpSymPoly(lib(jack(&partition(shape)?, n))?)))
}

/// Schur polynomial in `n` variables, monomial basis.
///
/// # Safety
/// As for `jp_jack`.
#[no_mangle]
pub unsafe extern "C" fn jp_schur(shape: *const c_char, n: usize, out: *mut *mut JpSymPoly) -> JpStatus {
    guard(|| put(out, JpSymPoly(lib(schur(&partition(shape)?, n))?)))
}

/// Interpolation polynomial; `monic` selects the monic normalization,
/// otherwise unital. `tableau` selects the tableau-sum construction (monic only).
///
/// # Safety
/// As for `jp_jack`.
#[no_mangle]
pub unsafe extern "C" fn jp_interp(shape: *const c_char, n: usize, monic: bool, tableau: bool, out: *mut *mut JpSymPoly) -> JpStatus {
    guard(|| {
        let mu = partition(shape)?;
        let p = match (monic, tableau) {
            (true, true) => lib(interp_tableau(&mu, n))?,
            (true, false) => lib(interp_linear(&mu, n, Normalization::Monic))?,
            (false, false) => lib(interp_linear(&mu, n, Normalization::Unital))?,
            (false, true) => return Err((JpStatus::InvalidInput, "the tableau construction is monic".into())),
        };
        put(out, JpSymPoly(p.poly))
    })
}

/// JSON form `{"n", "basis", "terms": [{"partition", "coeff"}]}`. Release
/// with `jp_string_free`.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn jp_sympoly_to_json(p: *const JpSymPoly) -> *mut c_char {
    match p.as_ref().map(|p| jackpos_json(&p.0)) {
        Some(Ok(s)) => owned_string(s),
        Some(Err(e)) => {
            set_error(e);
            ptr::null_mut()
        }
        None => {
            set_error("null handle");
            ptr::null_mut()
        }
    }
}

fn jackpos_json(p: &SymPoly) -> Result<String, String> {
    serde_json::to_string(p).map_err(|e| e.to_string())
}

/// # Safety
/// `p` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn jp_sympoly_free(p: *mut JpSymPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs a verification sweep (`claim` as on the command line, e.g.
/// `"thm2"`) and writes its JSON report to `out_json`. Returns `Ok` on pass
/// and `Counterexample` when the report lists counterexamples.
///
/// # Safety
/// `claim` must be a valid NUL-terminated string; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jp_verify(claim: *const c_char, d: usize, n: usize, out_json: *mut *mut c_char) -> JpStatus {
    guard(|| {
        if out_json.is_null() {
            return Err((JpStatus::NullPointer, "null output pointer".into()));
        }
        let claim = text(claim)?.to_string();
        let (d, n) = (d.to_string(), n.to_string());
        let args = ["jackpos", "verify", &claim, "-d", &d, "-n", &n, "--format", "json"];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = jackpos::cli::run(args, &mut out, &mut err);
        let status = match code {
            0 => JpStatus::Ok,
            1 => JpStatus::Counterexample,
            2 => JpStatus::InvalidInput,
            3 => JpStatus::UnsupportedRange,
            4 => JpStatus::Io,
            _ => JpStatus::Internal,
        };
        if matches!(status, JpStatus::Ok | JpStatus::Counterexample) {
            *out_json = owned_string(String::from_utf8_lossy(&out).into_owned());
            Ok(status)
        } else {
            Err((status, String::from_utf8_lossy(&err).trim().to_string()))
        }
    })
}

/// # Safety
/// `s` must be a string returned by this library or null.
#[no_mangle]
pub unsafe extern "C" fn jp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
