//! Explicit d-graceful labeling constructions for paths, stars, cycles and
//! ladders.
//!
//! Each construction evaluates a family of piecewise-linear rules of the form
//! `value(i) = offset ± i` over inclusive index intervals. Intervals may be
//! empty (the proofs' "skip this assignment" cases fall out naturally), must
//! tile the vertex set exactly, and every finished labeling is re-verified
//! before it is returned — a transcription slip in any branch turns into an
//! `Internal` error instead of a bad labeling.

mod cycle;
mod ladder;
mod path;
mod star;

pub use cycle::{label_cycle_2k_odd_d2, label_cycle_4k_d2, label_cycle_4k_d4};
pub use ladder::label_ladder_d2;
pub use path::label_path;
pub use star::label_star;

use crate::graph::{Graph, GraphError};
use crate::labeling::Labeling;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    /// The requested `d` (or a family parity constraint that feeds into it)
    /// does not fit the family's edge count.
    #[error("not admissible for {family}: {reason}")]
    NotAdmissible {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// A formula branch produced something the verifier rejects. Indicates a
    /// bug in this crate, never user error.
    #[error("construction produced an invalid labeling: {0}")]
    Internal(String),
}

impl ConstructionError {
    pub(super) fn not_admissible(family: &'static str, reason: impl Into<String>) -> Self {
        ConstructionError::NotAdmissible {
            family,
            reason: reason.into(),
        }
    }
}

/// The labeling constructions this crate implements, together with the
/// parameter each one takes: `e` for paths and stars (any admissible `d`),
/// `k` for the cycle and ladder families (fixed `d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionFamily {
    Path,
    Star,
    /// `C_{4k}` with `d = 2`.
    Cycle4kD2,
    /// `C_{4k}` with `d = 4`.
    Cycle4kD4,
    /// `C_{2k}` for odd `k`, `d = 2` (not an α-labeling in general).
    Cycle2kOddD2,
    /// `L_{2k}` for even `k`, `d = 2`.
    LadderD2,
}

impl ConstructionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionFamily::Path => "path",
            ConstructionFamily::Star => "star",
            ConstructionFamily::Cycle4kD2 => "cycle4k-d2",
            ConstructionFamily::Cycle4kD4 => "cycle4k-d4",
            ConstructionFamily::Cycle2kOddD2 => "cycle2k-odd",
            ConstructionFamily::LadderD2 => "ladder",
        }
    }

    /// The `d` baked into the family, or `None` when the request chooses.
    pub fn fixed_d(&self) -> Option<usize> {
        match self {
            ConstructionFamily::Path | ConstructionFamily::Star => None,
            ConstructionFamily::Cycle4kD2
            | ConstructionFamily::Cycle2kOddD2
            | ConstructionFamily::LadderD2 => Some(2),
            ConstructionFamily::Cycle4kD4 => Some(4),
        }
    }

    /// Whether the construction is claimed to produce α-labelings (the
    /// odd-`k` cycle family is only claimed d-graceful).
    pub fn claims_alpha(&self) -> bool {
        !matches!(self, ConstructionFamily::Cycle2kOddD2)
    }
}

/// A fully specified construction call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionRequest {
    pub family: ConstructionFamily,
    /// `e` for paths/stars, `k` for cycles/ladders.
    pub size_param: usize,
    pub d: usize,
}

impl ConstructionRequest {
    pub fn new(family: ConstructionFamily, size_param: usize, d: usize) -> ConstructionRequest {
        ConstructionRequest {
            family,
            size_param,
            d,
        }
    }
}

/// Dispatches a request to the matching construction. Families with a fixed
/// `d` reject any other value instead of silently ignoring it.
pub fn construct(req: &ConstructionRequest) -> Result<Labeling, ConstructionError> {
    if let Some(fixed) = req.family.fixed_d() {
        if req.d != fixed {
            return Err(ConstructionError::not_admissible(
                req.family.name(),
                format!("this construction fixes d = {fixed}, got d = {}", req.d),
            ));
        }
    }
    match req.family {
        ConstructionFamily::Path => label_path(req.size_param, req.d),
        ConstructionFamily::Star => label_star(req.size_param, req.d),
        ConstructionFamily::Cycle4kD2 => label_cycle_4k_d2(req.size_param),
        ConstructionFamily::Cycle4kD4 => label_cycle_4k_d4(req.size_param),
        ConstructionFamily::Cycle2kOddD2 => label_cycle_2k_odd_d2(req.size_param),
        ConstructionFamily::LadderD2 => label_ladder_d2(req.size_param),
    }
}

/// One branch of a piecewise rule: on `lo..=hi` (inclusive, empty when
/// `hi < lo`) the value is `offset + slope·i` with slope ±1.
struct Piece {
    lo: i64,
    hi: i64,
    slope: i64,
    offset: i64,
}

impl Piece {
    /// `value(i) = offset + i` on `lo..=hi`.
    fn incr(lo: i64, hi: i64, offset: i64) -> Piece {
        Piece {
            lo,
            hi,
            slope: 1,
            offset,
        }
    }

    /// `value(i) = offset - i` on `lo..=hi`.
    fn decr(lo: i64, hi: i64, offset: i64) -> Piece {
        Piece {
            lo,
            hi,
            slope: -1,
            offset,
        }
    }
}

/// Evaluates pieces into a slot table, with `target` mapping the rule index
/// `i` to a vertex id. Rules must neither collide nor go negative.
fn apply_pieces(
    out: &mut [Option<usize>],
    pieces: &[Piece],
    target: impl Fn(i64) -> usize,
) -> Result<(), ConstructionError> {
    for p in pieces {
        for i in p.lo..=p.hi {
            let value = p.offset + p.slope * i;
            let id = target(i);
            if value < 0 || id >= out.len() {
                return Err(ConstructionError::Internal(format!(
                    "piecewise rule out of range at index {i} (vertex {id}, value {value})"
                )));
            }
            if out[id].replace(value as usize).is_some() {
                return Err(ConstructionError::Internal(format!(
                    "piecewise rules overlap at vertex {id} (index {i})"
                )));
            }
        }
    }
    Ok(())
}

/// Turns a fully populated slot table into a verified labeling. `expect_alpha`
/// additionally re-checks the α property for the families that claim it.
fn finalize(
    graph: Graph,
    d: usize,
    slots: Vec<Option<usize>>,
    expect_alpha: bool,
) -> Result<Labeling, ConstructionError> {
    let labels = slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| {
            s.ok_or_else(|| ConstructionError::Internal(format!("vertex {v} was never labeled")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let labeling =
        Labeling::new(graph, d, labels).map_err(|e| ConstructionError::Internal(e.to_string()))?;
    if let Err(report) = labeling.verify_d_graceful() {
        return Err(ConstructionError::Internal(report.to_string()));
    }
    if expect_alpha && labeling.verify_alpha() != Ok(true) {
        return Err(ConstructionError::Internal(
            "expected an α-labeling but the part ranges interleave".into(),
        ));
    }
    Ok(labeling)
}
