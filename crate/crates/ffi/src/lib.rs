//! C interface to spinekit.
//!
//! Every fallible function returns an [`SpkStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`spk_last_error_message`] on the same thread. Handles and strings
//! returned by the library are released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spinekit::error::Error;
use spinekit::invariant::epsilon_of_complex;
use spinekit::ograph::{generate_gn, OGraph};
use spinekit::report::{load_triangulation, InputFormat, SpineReport};
use spinekit::subpoly::{SpineComplex, SubpolyError};
use spinekit::triangulate::{boundary_surface, from_ograph, IdealTriangulation};
use spinekit::volume::{family_volume, lobachevsky, volume_both, Angle, Family, VolumeResult};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooManyComponents = 5,
    BoundaryError = 6,
    VolumeError = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// A validated o-graph.
pub struct SpkOGraph(OGraph);

/// An ideal triangulation together with its dual spine.
pub struct SpkSpine {
    tri: IdealTriangulation,
    complex: SpineComplex,
    format: InputFormat,
}

impl SpkSpine {
    fn new(tri: IdealTriangulation, format: InputFormat) -> Self {
        let complex = SpineComplex::new(&tri);
        Self { tri, complex, format }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SpkSummary {
    pub tetrahedra: usize,
    pub triple_edges: usize,
    pub edge_classes: usize,
    pub euler: i64,
    pub boundary_components: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SpkVolume {
    pub theta: f64,
    pub via_integral: f64,
    pub via_lobachevsky: f64,
    pub agreed: bool,
}

impl From<VolumeResult> for SpkVolume {
    fn from(r: VolumeResult) -> Self {
        Self {
            theta: r.theta,
            via_integral: r.via_integral,
            via_lobachevsky: r.via_lobachevsky,
            agreed: r.agreed,
        }
    }
}

/// `n` tetrahedra at angle `pi / 3n`.
pub const SPK_FAMILY_MN: u32 = 0;
/// `n = 5 + 4s` tetrahedra at angle `2pi / 3n`.
pub const SPK_FAMILY_WN: u32 = 1;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (SpkStatus, String);

fn status_of(e: &Error) -> SpkStatus {
    match e {
        Error::OGraph(_) | Error::Triangulation(_) | Error::UnknownFormat | Error::Io { .. } => SpkStatus::ParseError,
        Error::Boundary(_) => SpkStatus::BoundaryError,
        Error::Subpoly(SubpolyError::TooManyComponents { .. }) => SpkStatus::TooManyComponents,
        Error::Subpoly(_) => SpkStatus::InvalidArgument,
        Error::Volume(_) => SpkStatus::VolumeError,
    }
}

fn fail(e: impl Into<Error>) -> Failure {
    let e = e.into();
    (status_of(&e), e.to_string())
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SpkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            SpkStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(_) => {
            set_last_error(Some("internal panic".into()));
            SpkStatus::Panic
        }
    }
}

unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err((SpkStatus::NullPointer, "text is NULL".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (SpkStatus::InvalidUtf8, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| (SpkStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err((SpkStatus::NullPointer, "output pointer is NULL".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| (SpkStatus::InvalidArgument, e.to_string()))?;
    write(out, c.into_raw())
}

/// Message for the last failed call on this thread, or NULL after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn spk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn spk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an o-graph in text form.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_ograph_parse(text: *const c_char, out: *mut *mut SpkOGraph) -> SpkStatus {
    guard(|| {
        let g = OGraph::parse(text_arg(text)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(SpkOGraph(g))))
    })
}

/// The decorated graph with `5 + 4s` vertices.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_ograph_generate(s: u32, out: *mut *mut SpkOGraph) -> SpkStatus {
    guard(|| write(out, Box::into_raw(Box::new(SpkOGraph(generate_gn(s as usize))))))
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spk_ograph_vertex_count(graph: *const SpkOGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Canonical text form. Free the result with [`spk_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_ograph_serialize(graph: *const SpkOGraph, out: *mut *mut c_char) -> SpkStatus {
    guard(|| write_string(out, handle(graph, "graph")?.0.serialize()))
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spk_ograph_free(graph: *mut SpkOGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Builds the dual triangulation and spine of an o-graph.
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_from_ograph(graph: *const SpkOGraph, out: *mut *mut SpkSpine) -> SpkStatus {
    guard(|| {
        let g = handle(graph, "graph")?;
        let spine = SpkSpine::new(from_ograph(&g.0), InputFormat::OGraph);
        write(out, Box::into_raw(Box::new(spine)))
    })
}

/// Parses an o-graph or a triangulation, chosen by the header line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_parse(text: *const c_char, out: *mut *mut SpkSpine) -> SpkStatus {
    guard(|| {
        let (format, tri) = load_triangulation(text_arg(text)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(SpkSpine::new(tri, format))))
    })
}

/// Triangulation text form. Free the result with [`spk_string_free`].
///
/// # Safety
/// `spine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_serialize(spine: *const SpkSpine, out: *mut *mut c_char) -> SpkStatus {
    guard(|| write_string(out, handle(spine, "spine")?.tri.serialize()))
}

/// # Safety
/// `spine` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_free(spine: *mut SpkSpine) {
    if !spine.is_null() {
        drop(Box::from_raw(spine));
    }
}

/// Cell counts of the spine and the number of boundary components.
///
/// # Safety
/// `spine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_summary(spine: *const SpkSpine, out: *mut SpkSummary) -> SpkStatus {
    guard(|| {
        let s = handle(spine, "spine")?;
        let boundary = boundary_surface(&s.tri).map_err(fail)?;
        let n = s.tri.n_tets();
        let triple_edges = s.tri.pairings().count();
        let k = s.complex.k();
        write(
            out,
            SpkSummary {
                tetrahedra: n,
                triple_edges,
                edge_classes: k,
                euler: n as i64 - triple_edges as i64 + k as i64,
                boundary_components: boundary.component_count,
            },
        )
    })
}

/// Copies the edge-class sizes into `buf`. `len` receives the number of
/// classes even when `capacity` is too small.
///
/// # Safety
/// `buf` must have room for `capacity` values (it may be NULL when
/// `capacity` is 0) and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_edge_class_sizes(
    spine: *const SpkSpine,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> SpkStatus {
    guard(|| {
        let s = handle(spine, "spine")?;
        let sizes = spinekit::triangulate::edge_classes(&s.tri).sizes().to_vec();
        write(len, sizes.len())?;
        if capacity < sizes.len() {
            return Err((SpkStatus::BufferTooSmall, format!("need room for {} sizes", sizes.len())));
        }
        if !sizes.is_empty() {
            if buf.is_null() {
                return Err((SpkStatus::NullPointer, "buffer is NULL".into()));
            }
            ptr::copy_nonoverlapping(sizes.as_ptr(), buf, sizes.len());
        }
        Ok(())
    })
}

/// Whether the spine has no proper simple subpolyhedron.
///
/// # Safety
/// `spine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_is_poor(spine: *const SpkSpine, out: *mut bool) -> SpkStatus {
    guard(|| write(out, handle(spine, "spine")?.complex.is_poor().map_err(fail)?))
}

/// The invariant in exact form `a + b*eps`, and optionally as a float.
/// Free the string with [`spk_string_free`].
///
/// # Safety
/// `spine` must be a live handle and `out` a writable pointer. `value` may
/// be NULL.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_epsilon(spine: *const SpkSpine, out: *mut *mut c_char, value: *mut f64) -> SpkStatus {
    guard(|| {
        let e = epsilon_of_complex(&handle(spine, "spine")?.complex).map_err(fail)?;
        if !value.is_null() {
            value.write(e.value.to_f64());
        }
        write_string(out, e.value.to_string())
    })
}

/// Full `key: value` report. Free the result with [`spk_string_free`].
///
/// # Safety
/// `spine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_spine_report(spine: *const SpkSpine, out: *mut *mut c_char) -> SpkStatus {
    guard(|| {
        let s = handle(spine, "spine")?;
        let report = SpineReport::analyze("ffi", s.format, &s.tri).map_err(fail)?;
        write_string(out, report.to_string())
    })
}

/// The Lobachevsky function.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_lobachevsky(x: f64, out: *mut f64) -> SpkStatus {
    guard(|| write(out, lobachevsky(x).map_err(|e| (SpkStatus::InvalidArgument, e.to_string()))?))
}

/// Volume of the regular truncated tetrahedron with angle `theta`, by both
/// formulas.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_volume_regular(theta: f64, out: *mut SpkVolume) -> SpkStatus {
    guard(|| {
        let r = Angle::new(theta).and_then(|a| volume_both(a, 1)).map_err(fail)?;
        write(out, r.into())
    })
}

/// Volume of a family member; `family` is [`SPK_FAMILY_MN`] or
/// [`SPK_FAMILY_WN`].
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn spk_volume_family(family: u32, n: u64, out: *mut SpkVolume) -> SpkStatus {
    guard(|| {
        let family = match family {
            SPK_FAMILY_MN => Family::Mn,
            SPK_FAMILY_WN => Family::Wn,
            other => return Err((SpkStatus::InvalidArgument, format!("unknown family {other}"))),
        };
        write(out, family_volume(family, n).map_err(fail)?.into())
    })
}
