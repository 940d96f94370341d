//! C ABI for the liemin engine. Every call returns a [`LieminStatus`];
//! results come back through out-pointers. Strings returned by the library
//! are freed with [`liemin_string_free`], handles with [`liemin_rep_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use liemin::exactalg::parse_rational_list;
use liemin::gap::gap_certify;
use liemin::latex;
use liemin::minpoly::min_poly_for;
use liemin::params::{Convention, Setting};
use liemin::rootsys::{trace_form, NormalizedForm, RootSystem};
use liemin::weights::WeightSystem;
use liemin::Error;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieminStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input such as a bad type label or rational.
    Validation = 3,
    /// Well-formed input violating a mathematical precondition.
    Precondition = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

/// An irreducible representation together with its trace form.
pub struct LieminRep {
    ws: WeightSystem,
    form: NormalizedForm,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Failure {
    Null,
    Utf8,
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LieminStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LieminStatus::Ok
        }
        Ok(Err(Failure::Null)) => {
            set_error("null pointer argument");
            LieminStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("argument is not valid UTF-8");
            LieminStatus::InvalidUtf8
        }
        Ok(Err(Failure::Engine(e))) => {
            set_error(&e.to_string());
            match e {
                Error::Invalid(_) => LieminStatus::Validation,
                Error::Precondition(_) => LieminStatus::Precondition,
            }
        }
        Err(_) => {
            set_error("internal panic");
            LieminStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null);
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn rep_ref<'a>(p: *const LieminRep) -> Result<&'a LieminRep, Failure> {
    p.as_ref().ok_or(Failure::Null)
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null);
    }
    *out = CString::new(s).expect("engine output has no NUL bytes").into_raw();
    Ok(())
}

fn setting(rs: &RootSystem, theta: &str, convention: &str) -> Result<Setting, Error> {
    let mut idx = Vec::new();
    for t in theta.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match t.parse::<usize>() {
            Ok(i) if (1..=rs.rank()).contains(&i) => idx.push(i - 1),
            _ => return Err(Error::Invalid(format!("bad simple-root index '{t}'"))),
        }
    }
    Setting::fundamental(rs, convention.parse::<Convention>()?, &idx)
}

/// Build the representation with highest weight `pi` (`adjoint`,
/// `fund:…` or `eps:…`) of the algebra `type_label`.
///
/// # Safety
/// `type_label` and `pi` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn liemin_rep_new(type_label: *const c_char, pi: *const c_char, out: *mut *mut LieminRep) -> LieminStatus {
    guard(|| {
        let (label, spec) = (text(type_label)?, text(pi)?);
        if out.is_null() {
            return Err(Failure::Null);
        }
        let rs = Arc::new(RootSystem::parse(label)?);
        let ws = WeightSystem::from_spec(rs, spec)?;
        let form = trace_form(&ws)?;
        *out = Box::into_raw(Box::new(LieminRep { ws, form }));
        Ok(())
    })
}

/// # Safety
/// `rep` must come from [`liemin_rep_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn liemin_rep_free(rep: *mut LieminRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// # Safety
/// `rep` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liemin_rep_dim(rep: *const LieminRep, out: *mut u64) -> LieminStatus {
    guard(|| {
        let r = rep_ref(rep)?;
        let out = out.as_mut().ok_or(Failure::Null)?;
        *out = r.ws.dim();
        Ok(())
    })
}

/// `q_{π,Θ}(x; λ)` in LaTeX. `theta` lists 1-based simple-root indices
/// separated by commas; `convention` is `psi` or `psi-prime`.
///
/// # Safety
/// String arguments must be NUL-terminated, `rep` live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liemin_minpoly_latex(
    rep: *const LieminRep,
    theta: *const c_char,
    convention: *const c_char,
    out: *mut *mut c_char,
) -> LieminStatus {
    guard(|| {
        let r = rep_ref(rep)?;
        let s = setting(r.ws.root_system(), text(theta)?, text(convention)?)?;
        let q = min_poly_for(&r.ws, &s, &r.form).q;
        give_string(out, latex::factored(&q, &s.param.labels()))
    })
}

/// Gap certificate as JSON at the parameter values `lambda`
/// (comma-separated rationals, one per parameter).
///
/// # Safety
/// String arguments must be NUL-terminated, `rep` live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liemin_certify_json(
    rep: *const LieminRep,
    theta: *const c_char,
    convention: *const c_char,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> LieminStatus {
    guard(|| {
        let r = rep_ref(rep)?;
        let rs = r.ws.root_system();
        let s = setting(rs, text(theta)?, text(convention)?)?;
        let raw = text(lambda)?;
        let values = if raw.trim().is_empty() { Vec::new() } else { parse_rational_list(raw)? };
        let a = s.param.assignment(&values)?;
        let cert = gap_certify(&r.ws, &s, &r.form, &a)?;
        give_string(out, cert.to_json(rs).to_string())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn liemin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn liemin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
