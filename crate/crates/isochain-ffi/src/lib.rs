//! C ABI over the partial-isometry enumeration library.
//!
//! Conventions: every fallible function returns an [`IsochainStatus`] and
//! writes its result through out pointers, which are left untouched on
//! failure. Handles are opaque and released with their matching `_free`
//! function. Returned strings are NUL-terminated, heap-allocated, and
//! released with [`isochain_string_free`]. All functions are safe to call
//! from any thread as long as each handle is used from one thread at a time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use isochain::algebra::{build_semigroup, PropertyReport};
use isochain::counting::{
    closed_order_ddp, closed_order_oddp, count_by_fix, count_by_height, order,
};
use isochain::element::{ChainSize, PartialInjection};
use isochain::error::Error;
use isochain::family::{enumerate_fast, enumerate_oracle, FamilyId};

/// Result code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsochainStatus {
    /// The call succeeded and the out parameters are valid.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An argument was rejected; see `isochain_last_error_message`.
    InvalidArgument = 3,
    /// Two elements live on chains of different sizes.
    ChainMismatch = 4,
    /// The requested chain size exceeds the configured ceiling.
    CeilingExceeded = 5,
    /// The operation is not defined for the requested family.
    Unsupported = 6,
    /// An internal invariant failed; the handle state is unchanged.
    InternalError = 7,
}

/// Element family selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsochainFamily {
    /// All partial injections on the chain.
    Full = 0,
    /// Partial injections that move no point up.
    DecreasingInjective = 1,
    /// Distance-preserving partial injections.
    Isometry = 2,
    /// Order-preserving distance-preserving partial injections.
    OrderPreservingIsometry = 3,
    /// Distance-preserving partial injections that move no point up.
    DecreasingIsometry = 4,
    /// Order-preserving members of the decreasing isometries.
    OrderPreservingDecreasingIsometry = 5,
}

impl From<IsochainFamily> for FamilyId {
    fn from(family: IsochainFamily) -> Self {
        match family {
            IsochainFamily::Full => FamilyId::FullSymmetricInverse,
            IsochainFamily::DecreasingInjective => FamilyId::DecreasingInjective,
            IsochainFamily::Isometry => FamilyId::Isometry,
            IsochainFamily::OrderPreservingIsometry => FamilyId::OrderPreservingIsometry,
            IsochainFamily::DecreasingIsometry => FamilyId::DecreasingIsometry,
            IsochainFamily::OrderPreservingDecreasingIsometry => {
                FamilyId::OrderPreservingDecreasingIsometry
            }
        }
    }
}

/// Histogram selector for `isochain_count_histogram`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsochainStat {
    /// Count elements by domain size.
    Height = 0,
    /// Count elements by number of fixed points.
    Fix = 1,
}

/// Scalar facts about one element.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsochainStats {
    /// Size of the underlying chain.
    pub n: u32,
    /// Number of points in the domain.
    pub height: u32,
    /// Number of fixed points.
    pub fix: u32,
    /// The element preserves all pairwise distances.
    pub is_isometry: bool,
    /// The element preserves the chain order on its domain.
    pub is_order_preserving: bool,
    /// The element reverses the chain order on its domain.
    pub is_order_reversing: bool,
    /// The element moves no point up.
    pub is_order_decreasing: bool,
    /// The element equals its own square.
    pub is_idempotent: bool,
    /// The element fixes every point of its domain.
    pub is_partial_identity: bool,
    /// Some power of the element is the empty map.
    pub is_nilpotent: bool,
}

/// Opaque handle to one partial injection.
pub struct IsochainElement {
    inner: PartialInjection,
}

/// Opaque handle to an ordered list of elements.
pub struct IsochainElementList {
    items: Vec<IsochainElement>,
}

thread_local! {
    static LAST_MESSAGE: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_message(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("NUL bytes were replaced");
    LAST_MESSAGE.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_message() {
    LAST_MESSAGE.with(|slot| *slot.borrow_mut() = None);
}

fn fail(err: Error) -> IsochainStatus {
    set_message(&err.to_string());
    match err {
        Error::ChainMismatch { .. } => IsochainStatus::ChainMismatch,
        Error::CeilingExceeded { .. } => IsochainStatus::CeilingExceeded,
        Error::UnsupportedFamily { .. } => IsochainStatus::Unsupported,
        _ => IsochainStatus::InvalidArgument,
    }
}

fn invalid(message: &str) -> IsochainStatus {
    set_message(message);
    IsochainStatus::InvalidArgument
}

fn entry(body: impl FnOnce() -> IsochainStatus) -> IsochainStatus {
    clear_message();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_message("internal panic");
            IsochainStatus::InternalError
        }
    }
}

unsafe fn borrow<'a>(el: *const IsochainElement) -> Result<&'a PartialInjection, IsochainStatus> {
    el.as_ref()
        .map(|handle| &handle.inner)
        .ok_or(IsochainStatus::NullPointer)
}

unsafe fn give(out: *mut *mut IsochainElement, value: PartialInjection) -> IsochainStatus {
    if out.is_null() {
        return IsochainStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(IsochainElement { inner: value }));
    IsochainStatus::Ok
}

unsafe fn give_string(out: *mut *mut c_char, value: String) -> IsochainStatus {
    if out.is_null() {
        return IsochainStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(text) => {
            *out = text.into_raw();
            IsochainStatus::Ok
        }
        Err(_) => invalid("string contains an interior NUL byte"),
    }
}

/// Parses an element from its text form, e.g. `"[n=3] 2->2 3->1"`.
///
/// On success writes a new handle to `out`; free it with
/// `isochain_element_free`.
/// # Safety
/// `text`, when non-NULL, must point to a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_parse(
    text: *const c_char,
    out: *mut *mut IsochainElement,
) -> IsochainStatus {
    entry(|| {
        if text.is_null() || out.is_null() {
            return IsochainStatus::NullPointer;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            set_message("element text is not valid UTF-8");
            return IsochainStatus::InvalidUtf8;
        };
        match text.parse::<PartialInjection>() {
            Ok(el) => give(out, el),
            Err(err) => fail(err),
        }
    })
}

/// Builds an element on the chain `{1..n}` from parallel arrays mapping
/// `domain[i]` to `image[i]`. The arrays may be NULL when `len` is 0.
/// # Safety
/// `domain` and `image`, when non-NULL, must be readable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_make(
    n: u32,
    domain: *const u32,
    image: *const u32,
    len: usize,
    out: *mut *mut IsochainElement,
) -> IsochainStatus {
    entry(|| {
        if out.is_null() || (len > 0 && (domain.is_null() || image.is_null())) {
            return IsochainStatus::NullPointer;
        }
        let pairs: Vec<(u32, u32)> = (0..len).map(|i| (*domain.add(i), *image.add(i))).collect();
        match PartialInjection::make(ChainSize::new(n), pairs) {
            Ok(el) => give(out, el),
            Err(err) => fail(err),
        }
    })
}

/// Copies an element into a new independently owned handle.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_clone(
    el: *const IsochainElement,
    out: *mut *mut IsochainElement,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => give(out, inner.clone()),
        Err(status) => status,
    })
}

/// Releases an element handle. NULL is ignored.
/// # Safety
/// `el` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_free(el: *mut IsochainElement) {
    if !el.is_null() {
        drop(Box::from_raw(el));
    }
}

/// Renders an element in its canonical text form.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_to_text(
    el: *const IsochainElement,
    out: *mut *mut c_char,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => give_string(out, inner.to_string()),
        Err(status) => status,
    })
}

/// Renders an element as a JSON object with fields `n` and `pairs`.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_to_json(
    el: *const IsochainElement,
    out: *mut *mut c_char,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => give_string(
            out,
            serde_json::to_string(inner).expect("element serializes"),
        ),
        Err(status) => status,
    })
}

/// Writes the chain size the element lives on.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_chain(
    el: *const IsochainElement,
    out_n: *mut u32,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => {
            if out_n.is_null() {
                return IsochainStatus::NullPointer;
            }
            *out_n = inner.n().get();
            IsochainStatus::Ok
        }
        Err(status) => status,
    })
}

/// Evaluates the element at `x`. Writes whether the value is defined and,
/// when defined, the value itself.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_apply(
    el: *const IsochainElement,
    x: u32,
    out_defined: *mut bool,
    out_value: *mut u32,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => {
            if out_defined.is_null() || out_value.is_null() {
                return IsochainStatus::NullPointer;
            }
            match inner.apply(x) {
                Some(y) => {
                    *out_defined = true;
                    *out_value = y;
                }
                None => *out_defined = false,
            }
            IsochainStatus::Ok
        }
        Err(status) => status,
    })
}

/// Composes two elements left to right: the result maps `x` to `b(a(x))`.
/// # Safety
/// `a` and `b`, when non-NULL, must be live handles from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_compose(
    a: *const IsochainElement,
    b: *const IsochainElement,
    out: *mut *mut IsochainElement,
) -> IsochainStatus {
    entry(|| {
        let a = match borrow(a) {
            Ok(inner) => inner,
            Err(status) => return status,
        };
        let b = match borrow(b) {
            Ok(inner) => inner,
            Err(status) => return status,
        };
        match a.compose(b) {
            Ok(product) => give(out, product),
            Err(err) => fail(err),
        }
    })
}

/// Builds the inverse element, which swaps domain and image.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_inverse(
    el: *const IsochainElement,
    out: *mut *mut IsochainElement,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => give(out, inner.inverse()),
        Err(status) => status,
    })
}

/// Fills a stats record for the element.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_stats(
    el: *const IsochainElement,
    out: *mut IsochainStats,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => {
            if out.is_null() {
                return IsochainStatus::NullPointer;
            }
            let stats = inner.stats();
            *out = IsochainStats {
                n: inner.n().get(),
                height: stats.height,
                fix: stats.fix,
                is_isometry: inner.is_isometry(),
                is_order_preserving: inner.is_order_preserving(),
                is_order_reversing: inner.is_order_reversing(),
                is_order_decreasing: inner.is_order_decreasing(),
                is_idempotent: inner.is_idempotent(),
                is_partial_identity: inner.is_partial_identity(),
                is_nilpotent: inner.is_nilpotent(),
            };
            IsochainStatus::Ok
        }
        Err(status) => status,
    })
}

/// Writes whether the element belongs to the given family.
/// # Safety
/// `el`, when non-NULL, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_is_member(
    el: *const IsochainElement,
    family: IsochainFamily,
    out: *mut bool,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => {
            if out.is_null() {
                return IsochainStatus::NullPointer;
            }
            *out = FamilyId::from(family).member(inner);
            IsochainStatus::Ok
        }
        Err(status) => status,
    })
}

/// Copies the element's pairs into parallel arrays using the two-call
/// pattern: the required length is always written to `out_len`, and the
/// arrays are filled only when `cap` is large enough.
/// # Safety
/// `el`, when non-NULL, must be a live handle; `domain` and `image`,
/// when non-NULL, must be writable for `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn isochain_element_pairs(
    el: *const IsochainElement,
    domain: *mut u32,
    image: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> IsochainStatus {
    entry(|| match borrow(el) {
        Ok(inner) => {
            if out_len.is_null() {
                return IsochainStatus::NullPointer;
            }
            let pairs = inner.pairs();
            *out_len = pairs.len();
            if pairs.len() > cap {
                return IsochainStatus::Ok;
            }
            if !pairs.is_empty() && (domain.is_null() || image.is_null()) {
                return IsochainStatus::NullPointer;
            }
            for (i, &(x, y)) in pairs.iter().enumerate() {
                *domain.add(i) = x;
                *image.add(i) = y;
            }
            IsochainStatus::Ok
        }
        Err(status) => status,
    })
}

/// Enumerates a family on the chain `{1..n}` in canonical order. With
/// `fast` set, uses the direct constructions where available instead of
/// filtering all partial injections.
/// # Safety
/// `out`, when non-NULL, must be writable.
#[no_mangle]
pub unsafe extern "C" fn isochain_enumerate(
    family: IsochainFamily,
    n: u32,
    ceiling: u32,
    fast: bool,
    out: *mut *mut IsochainElementList,
) -> IsochainStatus {
    entry(|| {
        if out.is_null() {
            return IsochainStatus::NullPointer;
        }
        let family = FamilyId::from(family);
        let chain = ChainSize::new(n);
        let elements = if fast {
            enumerate_fast(family, chain, ceiling)
        } else {
            enumerate_oracle(family, chain, ceiling)
        };
        match elements {
            Ok(elements) => {
                let items = elements
                    .into_iter()
                    .map(|inner| IsochainElement { inner })
                    .collect();
                *out = Box::into_raw(Box::new(IsochainElementList { items }));
                IsochainStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Number of elements in a list; 0 for NULL.
/// # Safety
/// `list` must be NULL or a live list handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_list_len(list: *const IsochainElementList) -> usize {
    list.as_ref().map_or(0, |list| list.items.len())
}

/// Borrows the element at `index`. The pointer is valid until the list is
/// freed; returns NULL when the index is out of range.
/// # Safety
/// `list` must be NULL or a live list handle from this library.
#[no_mangle]
pub unsafe extern "C" fn isochain_list_get(
    list: *const IsochainElementList,
    index: usize,
) -> *const IsochainElement {
    list.as_ref()
        .and_then(|list| list.items.get(index))
        .map_or(std::ptr::null(), |el| el as *const IsochainElement)
}

/// Releases a list and every element it owns. NULL is ignored.
/// # Safety
/// `list` must be NULL or a list handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isochain_list_free(list: *mut IsochainElementList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Counts a family on the chain `{1..n}` by enumeration.
/// # Safety
/// `out`, when non-NULL, must be writable.
#[no_mangle]
pub unsafe extern "C" fn isochain_order(
    family: IsochainFamily,
    n: u32,
    ceiling: u32,
    out: *mut u64,
) -> IsochainStatus {
    entry(|| {
        if out.is_null() {
            return IsochainStatus::NullPointer;
        }
        match order(FamilyId::from(family), ChainSize::new(n), ceiling) {
            Ok(count) => {
                *out = count;
                IsochainStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Evaluates the closed-form order without enumerating. Defined for the
/// decreasing-isometry families on chains up to 62 points.
/// # Safety
/// `out`, when non-NULL, must be writable.
#[no_mangle]
pub unsafe extern "C" fn isochain_closed_order(
    family: IsochainFamily,
    n: u32,
    out: *mut u64,
) -> IsochainStatus {
    entry(|| {
        if out.is_null() {
            return IsochainStatus::NullPointer;
        }
        if n > 62 {
            return invalid("chain size exceeds the closed-form range (max 62)");
        }
        let count = match family {
            IsochainFamily::DecreasingIsometry => closed_order_ddp(n),
            IsochainFamily::OrderPreservingDecreasingIsometry => closed_order_oddp(n),
            _ => {
                set_message("closed-form order is only defined for ddp and oddp");
                return IsochainStatus::Unsupported;
            }
        };
        *out = count;
        IsochainStatus::Ok
    })
}

/// Writes a histogram of element counts (index 0 through n) using the
/// two-call pattern: `out_len` always receives `n + 1`, and `buf` is
/// filled only when `cap` is large enough.
/// # Safety
/// `buf`, when non-NULL, must be writable for `cap` entries; `out_len`,
/// when non-NULL, must be writable.
#[no_mangle]
pub unsafe extern "C" fn isochain_count_histogram(
    family: IsochainFamily,
    stat: IsochainStat,
    n: u32,
    ceiling: u32,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> IsochainStatus {
    entry(|| {
        if out_len.is_null() {
            return IsochainStatus::NullPointer;
        }
        let family = FamilyId::from(family);
        let chain = ChainSize::new(n);
        let hist = match stat {
            IsochainStat::Height => count_by_height(family, chain, ceiling),
            IsochainStat::Fix => count_by_fix(family, chain, ceiling),
        };
        match hist {
            Ok(hist) => {
                *out_len = hist.len();
                if hist.len() > cap {
                    return IsochainStatus::Ok;
                }
                if buf.is_null() {
                    return IsochainStatus::NullPointer;
                }
                for (i, count) in hist.iter().enumerate() {
                    *buf.add(i) = *count;
                }
                IsochainStatus::Ok
            }
            Err(err) => fail(err),
        }
    })
}

/// Builds the multiplication structure for a family on `{1..n}` and
/// returns its property report as a JSON object.
/// # Safety
/// `out`, when non-NULL, must be writable.
#[no_mangle]
pub unsafe extern "C" fn isochain_property_report_json(
    family: IsochainFamily,
    n: u32,
    ceiling: u32,
    out: *mut *mut c_char,
) -> IsochainStatus {
    entry(|| {
        if out.is_null() {
            return IsochainStatus::NullPointer;
        }
        let semigroup = match build_semigroup(FamilyId::from(family), ChainSize::new(n), ceiling) {
            Ok(s) => s,
            Err(err) => return fail(err),
        };
        match PropertyReport::compute(&semigroup) {
            Ok(report) => give_string(
                out,
                serde_json::to_string(&report).expect("report serializes"),
            ),
            Err(err) => fail(err),
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn isochain_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code; never NULL.
#[no_mangle]
pub extern "C" fn isochain_status_text(status: IsochainStatus) -> *const c_char {
    let text: &'static CStr = match status {
        IsochainStatus::Ok => c"ok",
        IsochainStatus::NullPointer => c"a required pointer argument was NULL",
        IsochainStatus::InvalidUtf8 => c"a string argument was not valid UTF-8",
        IsochainStatus::InvalidArgument => c"an argument was rejected",
        IsochainStatus::ChainMismatch => c"elements live on chains of different sizes",
        IsochainStatus::CeilingExceeded => c"the chain size exceeds the configured ceiling",
        IsochainStatus::Unsupported => c"the operation is not defined for this family",
        IsochainStatus::InternalError => c"an internal invariant failed",
    };
    text.as_ptr()
}

/// Returns the detailed message for the most recent failure on this
/// thread, or NULL when the last call succeeded. Free the result with
/// `isochain_string_free`.
#[no_mangle]
pub extern "C" fn isochain_last_error_message() -> *mut c_char {
    LAST_MESSAGE.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |text| text.clone().into_raw())
    })
}
