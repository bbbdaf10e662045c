//! C interface to `indgap`.
//!
//! Graphs cross the boundary as opaque `IgGraph` handles. Every fallible
//! call returns an `IgStatus`; on failure the message is available from
//! `ig_last_error_message` on the same thread. Strings returned by the
//! library are released with `ig_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use indgap::hereditary::has_hereditary_gap_at_most_1;
use indgap::io::{parse_edge_list, parse_graph6};
use indgap::{oracles, Error, Graph};

/// Opaque graph handle.
pub struct IgGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Parameter = 4,
    Capacity = 5,
    Domain = 6,
    Precondition = 7,
    Internal = 8,
}

/// Scalar part of a gap report.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IgGapSummary {
    pub alpha: usize,
    pub idom: usize,
    pub gap: usize,
    pub omega: usize,
    pub theta: usize,
    pub semi_perfect: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> IgStatus {
    match e {
        Error::Graph6 { .. } | Error::EdgeList { .. } => IgStatus::Parse,
        Error::Parameter(_) => IgStatus::Parameter,
        Error::Capacity { .. } => IgStatus::Capacity,
        Error::Domain(_) => IgStatus::Domain,
        Error::Precondition(_) => IgStatus::Precondition,
        Error::Io(_) => IgStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), IgStatus>) -> IgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IgStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            IgStatus::Internal
        }
    }
}

fn fail(e: Error) -> IgStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> IgStatus {
    set_error(format!("{what} is null"));
    IgStatus::NullArgument
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, IgStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        IgStatus::InvalidUtf8
    })
}

unsafe fn graph_ref<'a>(g: *const IgGraph) -> Result<&'a Graph, IgStatus> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), IgStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(g: Graph) -> *mut IgGraph {
    Box::into_raw(Box::new(IgGraph { inner: g }))
}

/// Parses one graph6 line into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_from_graph6(text: *const c_char, out: *mut *mut IgGraph) -> IgStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        let g = parse_graph6(s).map_err(fail)?;
        put(out, boxed(g), "out")
    })
}

/// Parses an edge list (`n` on the first line, then one `u v` pair per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_from_edge_list(text: *const c_char, out: *mut *mut IgGraph) -> IgStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        let g = parse_edge_list(s).map_err(fail)?;
        put(out, boxed(g), "out")
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or may be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn ig_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut IgGraph,
) -> IgStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))).map_err(fail)?;
        put(out, boxed(g), "out")
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_free(g: *mut IgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_vertex_count(g: *const IgGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_edge_count(g: *const IgGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// graph6 encoding of `g`, released with `ig_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_to_graph6(g: *const IgGraph, out: *mut *mut c_char) -> IgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let s = CString::new(indgap::io::to_graph6(g)).expect("graph6 has no NUL");
        put(out, s.into_raw(), "out")
    })
}

/// α, i, their difference, ω, θ and semi-perfectness.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_gap_report(g: *const IgGraph, out: *mut IgGapSummary) -> IgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = oracles::gap_report(g).map_err(fail)?;
        let summary = IgGapSummary {
            alpha: r.alpha,
            idom: r.idom,
            gap: r.gap,
            omega: r.omega,
            theta: r.theta,
            semi_perfect: r.semi_perfect,
        };
        put(out, summary, "out")
    })
}

/// Full gap report, witnesses included, as a JSON object.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. The string is
/// released with `ig_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ig_gap_report_json(g: *const IgGraph, out: *mut *mut c_char) -> IgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = oracles::gap_report(g).map_err(fail)?;
        let json = serde_json::to_string(&r).expect("report serializes");
        put(out, CString::new(json).expect("JSON has no NUL").into_raw(), "out")
    })
}

/// Largest gap over all nonempty induced subgraphs.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_hereditary_gap(g: *const IgGraph, out: *mut usize) -> IgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let h = oracles::hereditary_independence_gap(g).map_err(fail)?;
        put(out, h, "out")
    })
}

/// Whether `g` has no induced claw and no induced pair of disjoint P3s.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ig_is_claw_2p3_free(g: *const IgGraph, out: *mut bool) -> IgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        put(out, has_hereditary_gap_at_most_1(g), "out")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn ig_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ig_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
