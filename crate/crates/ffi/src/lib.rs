//! C ABI over `lie_core`.
//!
//! Every fallible function returns a [`LieStatus`]; on anything other than
//! `LIE_STATUS_OK` a message is available from [`lie_last_error`] on the same
//! thread. Handles are opaque and must be released with their `_free`
//! function. Strings returned through `out` parameters are owned by the
//! caller and released with [`lie_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use lie_core::chevalley::{LieElement, StructureTable};
use lie_core::claims::{run_all_claims, Config};
use lie_core::error::LieError;
use lie_core::expr::parse_element;
use lie_core::rep_theory::{tensor_decompose, weyl_dim};
use lie_core::root_system::{CartanType, RootSystem, Weight};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    IndexOutOfRange = 4,
    Mismatch = 5,
    NotDominant = 6,
    Unsupported = 7,
    Invalid = 8,
    Panic = 9,
}

/// Structure table of a simple Lie algebra.
pub struct LieTable(Arc<StructureTable>);

/// Element of the algebra of the table it was created from.
pub struct LieElem(LieElement);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &LieError) -> LieStatus {
    match e {
        LieError::Parse { .. } | LieError::TableFormat { .. } => LieStatus::Parse,
        LieError::IndexOutOfRange { .. } | LieError::EmptySequence => LieStatus::IndexOutOfRange,
        LieError::RootSystemMismatch { .. } => LieStatus::Mismatch,
        LieError::NotDominant(_) => LieStatus::NotDominant,
        LieError::UnsupportedType(_) => LieStatus::Unsupported,
        _ => LieStatus::Invalid,
    }
}

struct Failure(LieStatus, String);

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LieStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LieStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LieStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(LieStatus::NullArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LieStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c =
        CString::new(s).map_err(|_| Failure(LieStatus::Invalid, "string contains nul".into()))?;
    write_out(out, c.into_raw(), "out")
}

unsafe fn read_weight(rs: &RootSystem, coords: *const i64, len: usize) -> Result<Weight, Failure> {
    if coords.is_null() && len > 0 {
        return Err(null("coords"));
    }
    if len != rs.rank() {
        return Err(Failure(
            LieStatus::Invalid,
            format!("weight has {len} coordinates, rank is {}", rs.rank()),
        ));
    }
    let v = if len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(coords, len).to_vec()
    };
    Ok(Weight::new(v))
}

unsafe fn read_type(p: *const c_char) -> Result<CartanType, Failure> {
    Ok(read_str(p, "cartan_type")?.parse::<CartanType>()?)
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn lie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the structure table for a Cartan type such as `"E8"` or `"D7"`.
///
/// # Safety
/// `cartan_type` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_table_new(
    cartan_type: *const c_char,
    out: *mut *mut LieTable,
) -> LieStatus {
    guard(|| {
        let ct = read_type(cartan_type)?;
        let t = StructureTable::build(ct)?;
        write_out(out, Box::into_raw(Box::new(LieTable(Arc::new(t)))), "out")
    })
}

/// Loads a table from its text dump.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_table_load(text: *const c_char, out: *mut *mut LieTable) -> LieStatus {
    guard(|| {
        let t = StructureTable::load(read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(LieTable(Arc::new(t)))), "out")
    })
}

/// # Safety
/// `table` must be null or a handle from `lie_table_new`/`lie_table_load`.
#[no_mangle]
pub unsafe extern "C" fn lie_table_free(table: *mut LieTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn lie_table_dim(table: *const LieTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.dim())
}

/// Text dump of the table.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_table_dump(
    table: *const LieTable,
    out: *mut *mut c_char,
) -> LieStatus {
    guard(|| {
        let t = read_ref(table, "table")?;
        write_string(out, t.0.dump())
    })
}

/// Parses an element such as `"3/2*X[47] - Y[1]"` or `"X[4,5,6]"`.
///
/// # Safety
/// `table` must be a live handle, `text` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn lie_element_parse(
    table: *const LieTable,
    text: *const c_char,
    out: *mut *mut LieElem,
) -> LieStatus {
    guard(|| {
        let t = read_ref(table, "table")?;
        let e = parse_element(&t.0, read_str(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(LieElem(e))), "out")
    })
}

/// `[a, b]`.
///
/// # Safety
/// All handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_element_bracket(
    table: *const LieTable,
    a: *const LieElem,
    b: *const LieElem,
    out: *mut *mut LieElem,
) -> LieStatus {
    guard(|| {
        let t = read_ref(table, "table")?;
        let (a, b) = (read_ref(a, "a")?, read_ref(b, "b")?);
        let e = t.0.bracket(&a.0, &b.0)?;
        write_out(out, Box::into_raw(Box::new(LieElem(e))), "out")
    })
}

/// Canonical text form, e.g. `"-3/2*H[2] + 1*X[47]"`.
///
/// # Safety
/// `elem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_element_to_string(
    elem: *const LieElem,
    out: *mut *mut c_char,
) -> LieStatus {
    guard(|| {
        let e = read_ref(elem, "elem")?;
        write_string(out, e.0.to_string())
    })
}

/// # Safety
/// `elem` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn lie_element_free(elem: *mut LieElem) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// Dimension of the irreducible module with highest weight `coords`
/// (fundamental-weight coordinates), as a decimal string.
///
/// # Safety
/// `coords` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_weyl_dim(
    cartan_type: *const c_char,
    coords: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> LieStatus {
    guard(|| {
        let rs = RootSystem::new(read_type(cartan_type)?)?;
        let w = read_weight(&rs, coords, len)?;
        write_string(out, weyl_dim(&rs, &w)?.to_string())
    })
}

/// Decomposition of `V(a) ⊗ V(b)`, one `SUMMAND` line per irreducible.
///
/// # Safety
/// `a` and `b` must each point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_tensor_decompose(
    cartan_type: *const c_char,
    a: *const i64,
    b: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> LieStatus {
    guard(|| {
        let rs = RootSystem::new(read_type(cartan_type)?)?;
        let (a, b) = (read_weight(&rs, a, len)?, read_weight(&rs, b, len)?);
        write_string(out, tensor_decompose(&rs, &a, &b)?.render(&rs)?)
    })
}

/// Runs the claim registry and writes the text report. `only` is null for
/// all claims or a comma-separated list of ids. `all_passed` may be null.
///
/// # Safety
/// `only` must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lie_verify(
    only: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
    all_passed: *mut bool,
) -> LieStatus {
    guard(|| {
        let only = if only.is_null() {
            Vec::new()
        } else {
            read_str(only, "only")?
                .split(',')
                .map(|s| s.trim().to_string())
                .collect()
        };
        let report = run_all_claims(&Config {
            only,
            seed,
            ..Config::default()
        })?;
        if !all_passed.is_null() {
            all_passed.write(report.all_passed());
        }
        write_string(out, report.render_text())
    })
}
