//! C interface to `meander-core`.
//!
//! Meanders cross the boundary as opaque `MeanderHandle` pointers owned by
//! the caller and released with `meander_free`. Every function returns a
//! `MeanderStatus`; on failure `meander_last_error` describes the problem.
//! Strings returned through out-parameters are freed with
//! `meander_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use meander_core::decompose::decompose;
use meander_core::enumerate::count_tables;
use meander_core::{render, Class, Error, MeanderCode, RenderFormat, Slot, SlotKind};

/// Largest total order `meander_count` accepts.
pub const MEANDER_MAX_COUNT_ORDER: u32 = 12;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanderStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Syntax = 3,
    /// Parsed but the arcs cross.
    InvalidMeander = 4,
    ColorMismatch = 5,
    LabelOutOfRange = 6,
    EmptyMeander = 7,
    OutOfRange = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanderClass {
    Empty = 0,
    Snake = 1,
    IteratedSnake = 2,
    Irreducible = 3,
    Composite = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanderSlotKind {
    Crossing = 0,
    Touch = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanderRenderFormat {
    Ascii = 0,
    Svg = 1,
    Tikz = 2,
}

/// Which count table `meander_count` reads.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanderCountClass {
    All = 0,
    Snake = 1,
    /// Snakes included.
    IteratedSnake = 2,
    Irreducible = 3,
}

/// A valid or invalid meander code.
pub struct MeanderHandle {
    code: MeanderCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: MeanderStatus, msg: impl Into<String>) -> MeanderStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> MeanderStatus {
    let status = match e {
        Error::Syntax { .. } | Error::LengthMismatch { .. } | Error::NotBijective { .. } | Error::Json(_) => {
            MeanderStatus::Syntax
        }
        Error::InvalidMeander { .. } => MeanderStatus::InvalidMeander,
        Error::ColorMismatch { .. } => MeanderStatus::ColorMismatch,
        Error::LabelOutOfRange { .. } => MeanderStatus::LabelOutOfRange,
        Error::EmptyMeander => MeanderStatus::EmptyMeander,
        _ => MeanderStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Runs `f`, clearing the last error first and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> MeanderStatus) -> MeanderStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(MeanderStatus::Internal, "panic inside meander-core"))
}

unsafe fn handle<'a>(h: *const MeanderHandle) -> Result<&'a MeanderHandle, MeanderStatus> {
    h.as_ref().ok_or_else(|| fail(MeanderStatus::NullPointer, "null handle"))
}

unsafe fn out_string(out: *mut *mut c_char, s: String) -> MeanderStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            MeanderStatus::Ok
        }
        Err(_) => fail(MeanderStatus::Internal, "string contains a nul byte"),
    }
}

fn new_handle(code: MeanderCode) -> *mut MeanderHandle {
    Box::into_raw(Box::new(MeanderHandle { code }))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn meander_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the text form `TYPES|VISIT` or JSON. The code need not be planar.
///
/// # Safety
/// `text` is a nul-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_parse(text: *const c_char, out: *mut *mut MeanderHandle) -> MeanderStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(MeanderStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(MeanderStatus::Utf8, "input is not UTF-8");
        };
        match text.parse::<MeanderCode>() {
            Ok(code) => {
                *out = new_handle(code);
                MeanderStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `h` is null or came from this library and was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn meander_free(h: *mut MeanderHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` is null or a string returned by this library and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn meander_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Text form of the code.
///
/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_to_string(h: *const MeanderHandle, out: *mut *mut c_char) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        out_string(out, h.code.to_string())
    })
}

/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_is_valid(h: *const MeanderHandle, out: *mut bool) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        *out = h.code.is_valid();
        MeanderStatus::Ok
    })
}

/// Numbers of crossings and touches.
///
/// # Safety
/// `h` is a live handle; `n` and `k` are writable.
#[no_mangle]
pub unsafe extern "C" fn meander_order(h: *const MeanderHandle, n: *mut u32, k: *mut u32) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if n.is_null() || k.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        let o = h.code.order();
        *n = o.n as u32;
        *k = o.k as u32;
        MeanderStatus::Ok
    })
}

/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_classify(h: *const MeanderHandle, out: *mut MeanderClass) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        if let Err(e) = h.code.ensure_valid() {
            return from_error(e);
        }
        *out = match Class::of(&h.code) {
            Class::Empty => MeanderClass::Empty,
            Class::Snake => MeanderClass::Snake,
            Class::IteratedSnake => MeanderClass::IteratedSnake,
            Class::Irreducible => MeanderClass::Irreducible,
            Class::Composite => MeanderClass::Composite,
        };
        MeanderStatus::Ok
    })
}

/// Inserts `piece` at the slot of `host` with the given kind and 1-based
/// label. The result is a new handle.
///
/// # Safety
/// `host` and `piece` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_insert(
    host: *const MeanderHandle,
    kind: MeanderSlotKind,
    label: u32,
    piece: *const MeanderHandle,
    out: *mut *mut MeanderHandle,
) -> MeanderStatus {
    guard(|| {
        let (host, piece) = match (handle(host), handle(piece)) {
            (Ok(h), Ok(p)) => (h, p),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        let slot = Slot {
            kind: match kind {
                MeanderSlotKind::Crossing => SlotKind::Crossing,
                MeanderSlotKind::Touch => SlotKind::Touch,
            },
            label: label as usize,
        };
        match meander_core::insert(&host.code, slot, &piece.code) {
            Ok(code) => {
                *out = new_handle(code);
                MeanderStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Canonical decomposition as JSON.
///
/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_decompose_json(h: *const MeanderHandle, out: *mut *mut c_char) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        match decompose(&h.code) {
            Ok(tree) => out_string(out, tree.to_json().to_string()),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_render(
    h: *const MeanderHandle,
    format: MeanderRenderFormat,
    out: *mut *mut c_char,
) -> MeanderStatus {
    guard(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        let format = match format {
            MeanderRenderFormat::Ascii => RenderFormat::Ascii,
            MeanderRenderFormat::Svg => RenderFormat::Svg,
            MeanderRenderFormat::Tikz => RenderFormat::Tikz,
        };
        match render(&h.code, format) {
            Ok(text) => out_string(out, text),
            Err(e) => from_error(e),
        }
    })
}

/// Number of meanders of order `(n, k)` in a class. `n + k` is at most
/// `MEANDER_MAX_COUNT_ORDER`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn meander_count(n: u32, k: u32, class: MeanderCountClass, out: *mut u64) -> MeanderStatus {
    guard(|| {
        if out.is_null() {
            return fail(MeanderStatus::NullPointer, "null out");
        }
        let total = n.saturating_add(k);
        if total > MEANDER_MAX_COUNT_ORDER {
            return fail(
                MeanderStatus::OutOfRange,
                format!("total order {total} exceeds {MEANDER_MAX_COUNT_ORDER}"),
            );
        }
        let census = count_tables(total as usize);
        let table = match class {
            MeanderCountClass::All => &census.all,
            MeanderCountClass::Snake => &census.snake,
            MeanderCountClass::IteratedSnake => &census.iterated_snake,
            MeanderCountClass::Irreducible => &census.irreducible,
        };
        *out = table.get(n as usize, k as usize);
        MeanderStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> *mut MeanderHandle {
        let text = CString::new(s).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { meander_parse(text.as_ptr(), &mut h) }, MeanderStatus::Ok);
        h
    }

    #[test]
    fn parse_and_print() {
        let h = parse("CCT|1,3,2");
        let mut s = ptr::null_mut();
        unsafe {
            assert_eq!(meander_to_string(h, &mut s), MeanderStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "CCT|1,3,2");
            meander_string_free(s);
            meander_free(h);
        }
    }

    #[test]
    fn errors_set_message() {
        let text = CString::new("CX|1,2").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { meander_parse(text.as_ptr(), &mut h) }, MeanderStatus::Syntax);
        assert!(h.is_null());
        assert!(!meander_last_error().is_null());
        let mut valid = true;
        assert_eq!(unsafe { meander_is_valid(ptr::null(), &mut valid) }, MeanderStatus::NullPointer);
    }
}
