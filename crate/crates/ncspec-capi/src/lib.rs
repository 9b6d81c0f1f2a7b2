//! C ABI for the `ncspec` non-commuting-graph spectral library.
//!
//! Conventions:
//!
//! * Every fallible call returns an [`NcsStatus`]; results come back through
//!   out-pointers, which are written only when the status is `NCS_STATUS_OK`.
//! * [`NcsAnalysis`] is an opaque handle owned by the caller; release it with
//!   [`ncs_analysis_free`]. Handles are immutable after creation, so sharing
//!   a handle across threads for reads is safe.
//! * Strings returned through out-pointers are NUL-terminated, allocated by
//!   this library, and must be released with [`ncs_string_free`]. The pointer
//!   returned by [`ncs_version`] is static and must not be freed.
//! * No call unwinds across the boundary: internal panics are caught and
//!   reported as `NCS_STATUS_COMPUTATION_ERROR`.
//!
//! The generated header lives at `include/ncspec.h`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ncspec::ncgraph::NcGraphError;
use ncspec::report::{analyze_spec, Analysis, AnalyzeError, DEFAULT_TOL};

/// Result of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsStatus {
    /// Success; out-pointers have been written.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// The group description was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The group description could not be parsed or constructed.
    ParseError = 3,
    /// The group is abelian, so its non-commuting graph has no vertices.
    AbelianGroup = 4,
    /// The analysis failed internally.
    ComputationError = 5,
}

/// Which energy to read from an analysis.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcsEnergyKind {
    /// Adjacency energy: sum of absolute adjacency eigenvalues.
    Adjacency = 0,
    /// Laplacian energy: sum of |mu_i - mean degree|.
    Laplacian = 1,
    /// Signless-Laplacian energy: sum of |q_i - mean degree|.
    SignlessLaplacian = 2,
}

/// Flag bit: adjacency energy is below the vertex count.
pub const NCS_FLAG_HYPOENERGETIC: u32 = 1 << 0;
/// Flag bit: adjacency energy exceeds that of the complete graph, 2(n-1).
pub const NCS_FLAG_HYPERENERGETIC: u32 = 1 << 1;
/// Flag bit: Laplacian energy exceeds 2(n-1).
pub const NCS_FLAG_L_HYPERENERGETIC: u32 = 1 << 2;
/// Flag bit: signless-Laplacian energy exceeds 2(n-1).
pub const NCS_FLAG_Q_HYPERENERGETIC: u32 = 1 << 3;
/// Flag bit: every signless-Laplacian eigenvalue is an integer. Only
/// meaningful when `NCS_FLAG_Q_INTEGRAL_KNOWN` is also set.
pub const NCS_FLAG_Q_INTEGRAL: u32 = 1 << 4;
/// Flag bit: an exact route decided Q-integrality (in either direction).
pub const NCS_FLAG_Q_INTEGRAL_KNOWN: u32 = 1 << 5;

/// Opaque handle to one analyzed non-commuting graph.
pub struct NcsAnalysis {
    inner: Analysis,
}

fn status_of(err: &AnalyzeError) -> NcsStatus {
    match err {
        AnalyzeError::Group(_) => NcsStatus::ParseError,
        AnalyzeError::Graph(NcGraphError::AbelianGroup(_)) => NcsStatus::AbelianGroup,
        _ => NcsStatus::ComputationError,
    }
}

/// Analyze the group described by `spec` and return an opaque handle.
///
/// `spec` accepts the same descriptions as the `ncspec` CLI, e.g. `"D6"`,
/// `"Q:4n=16"`, `"F(7,3)"`, `"A4xZ2"`. On success `*out` owns the handle;
/// release it with `ncs_analysis_free`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_new(
    spec: *const c_char,
    out: *mut *mut NcsAnalysis,
) -> NcsStatus {
    if spec.is_null() || out.is_null() {
        return NcsStatus::NullPointer;
    }
    let Ok(spec) = CStr::from_ptr(spec).to_str() else {
        return NcsStatus::InvalidUtf8;
    };
    let result = catch_unwind(AssertUnwindSafe(|| analyze_spec(spec, DEFAULT_TOL)));
    match result {
        Ok(Ok(analysis)) => {
            *out = Box::into_raw(Box::new(NcsAnalysis { inner: analysis }));
            NcsStatus::Ok
        }
        Ok(Err(err)) => status_of(&err),
        Err(_) => NcsStatus::ComputationError,
    }
}

/// Release a handle returned by `ncs_analysis_new`. NULL is ignored.
///
/// # Safety
/// `analysis` must be NULL or a pointer returned by `ncs_analysis_new` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_free(analysis: *mut NcsAnalysis) {
    if !analysis.is_null() {
        drop(Box::from_raw(analysis));
    }
}

unsafe fn with_analysis<T>(
    analysis: *const NcsAnalysis,
    out: *mut T,
    read: impl FnOnce(&Analysis) -> T,
) -> NcsStatus {
    if analysis.is_null() || out.is_null() {
        return NcsStatus::NullPointer;
    }
    *out = read(&(*analysis).inner);
    NcsStatus::Ok
}

/// Number of vertices of the non-commuting graph (group order minus center).
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_vertex_count(
    analysis: *const NcsAnalysis,
    out: *mut usize,
) -> NcsStatus {
    with_analysis(analysis, out, |a| a.n_vertices())
}

/// Number of edges of the non-commuting graph.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_edge_count(
    analysis: *const NcsAnalysis,
    out: *mut usize,
) -> NcsStatus {
    with_analysis(analysis, out, |a| a.n_edges())
}

/// Order of the underlying group.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_group_order(
    analysis: *const NcsAnalysis,
    out: *mut usize,
) -> NcsStatus {
    with_analysis(analysis, out, |a| a.group_order)
}

/// Size of the center of the underlying group.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_center_size(
    analysis: *const NcsAnalysis,
    out: *mut usize,
) -> NcsStatus {
    with_analysis(analysis, out, |a| a.center_size)
}

/// Read one of the three graph energies as a double.
///
/// The value is exact whenever a closed form applies, and otherwise comes
/// from the dense symmetric eigensolver.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_energy(
    analysis: *const NcsAnalysis,
    kind: NcsEnergyKind,
    out: *mut f64,
) -> NcsStatus {
    with_analysis(analysis, out, |a| match kind {
        NcsEnergyKind::Adjacency => a.report.e.value,
        NcsEnergyKind::Laplacian => a.report.le.value,
        NcsEnergyKind::SignlessLaplacian => a.report.le_plus.value,
    })
}

/// Read the classification flags as a bitmask of `NCS_FLAG_*` constants.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_flags(
    analysis: *const NcsAnalysis,
    out: *mut u32,
) -> NcsStatus {
    with_analysis(analysis, out, |a| {
        let f = &a.report.flags;
        let mut bits = 0u32;
        if f.hypoenergetic {
            bits |= NCS_FLAG_HYPOENERGETIC;
        }
        if f.hyperenergetic {
            bits |= NCS_FLAG_HYPERENERGETIC;
        }
        if f.l_hyperenergetic {
            bits |= NCS_FLAG_L_HYPERENERGETIC;
        }
        if f.q_hyperenergetic {
            bits |= NCS_FLAG_Q_HYPERENERGETIC;
        }
        if let Some(integral) = a.report.q_integral {
            bits |= NCS_FLAG_Q_INTEGRAL_KNOWN;
            if integral {
                bits |= NCS_FLAG_Q_INTEGRAL;
            }
        }
        bits
    })
}

/// Render the full analysis (group, graph, spectra, energies) as a JSON
/// document.
///
/// On success `*out` receives a NUL-terminated string owned by the caller;
/// release it with `ncs_string_free`.
///
/// # Safety
/// `analysis` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncs_analysis_json(
    analysis: *const NcsAnalysis,
    out: *mut *mut c_char,
) -> NcsStatus {
    if analysis.is_null() || out.is_null() {
        return NcsStatus::NullPointer;
    }
    let rendered = catch_unwind(AssertUnwindSafe(|| {
        serde_json::to_string(&(*analysis).inner.to_json(false))
    }));
    match rendered {
        Ok(Ok(text)) => match CString::new(text) {
            Ok(cstring) => {
                *out = cstring.into_raw();
                NcsStatus::Ok
            }
            Err(_) => NcsStatus::ComputationError,
        },
        _ => NcsStatus::ComputationError,
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string pointer returned by this library that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ncs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn ncs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
