//! Difference families over Z_v generated by graceful-type labelings.
//!
//! A family of injections `V(Γ) → Z_v` is a (v, t, Γ, 1)-difference family
//! when the signed differences `f(x) - f(y)` over all di-edges (both
//! orientations of each edge, over all maps) cover every residue outside the
//! order-`t` subgroup `(v/t)Z_v` exactly once and never land inside it.
//!
//! Two generators are provided: any d-graceful labeling yields a single-map
//! family with `v = 2d(m+1)`, and a d-graceful α-labeling yields an n-map
//! family with `v = 2dn(m+1)` by shifting the upper part of the bipartition.

use crate::graph::Graph;
use crate::labeling::{Labeling, ViolationReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A candidate (v, forbidden_order, Γ, 1)-difference family. Construction
/// validates structure (map shapes, ranges, injectivity, subgroup order);
/// the covering property is checked by [`verify_df`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceFamily {
    #[serde(rename = "v")]
    modulus: usize,
    forbidden_order: usize,
    graph: Graph,
    maps: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DfError {
    #[error("forbidden subgroup order {forbidden_order} does not divide v = {v}")]
    BadSubgroupOrder { v: usize, forbidden_order: usize },
    #[error("map {index} has {got} entries, expected one per vertex ({expected})")]
    WrongMapLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("map {index} sends vertex {vertex} to {value}, outside Z_{v}")]
    MapEntryOutOfRange {
        index: usize,
        vertex: usize,
        value: usize,
        v: usize,
    },
    #[error("map {index} is not injective")]
    MapNotInjective { index: usize },
    #[error("labeling fails d-graceful verification: {0}")]
    UnverifiedLabeling(ViolationReport),
    #[error("labeling is not an α-labeling: {0}")]
    NotAlpha(ViolationReport),
    #[error("need n >= 1 copies")]
    InvalidN,
}

impl DifferenceFamily {
    /// Assembles a family from raw parts, rejecting structural defects.
    pub fn new(
        modulus: usize,
        forbidden_order: usize,
        graph: Graph,
        maps: Vec<Vec<usize>>,
    ) -> Result<DifferenceFamily, DfError> {
        if modulus == 0 || forbidden_order == 0 || modulus % forbidden_order != 0 {
            return Err(DfError::BadSubgroupOrder {
                v: modulus,
                forbidden_order,
            });
        }
        for (index, map) in maps.iter().enumerate() {
            if map.len() != graph.vertex_count() {
                return Err(DfError::WrongMapLength {
                    index,
                    expected: graph.vertex_count(),
                    got: map.len(),
                });
            }
            let mut seen = vec![false; modulus];
            for (vertex, &value) in map.iter().enumerate() {
                if value >= modulus {
                    return Err(DfError::MapEntryOutOfRange {
                        index,
                        vertex,
                        value,
                        v: modulus,
                    });
                }
                if std::mem::replace(&mut seen[value], true) {
                    return Err(DfError::MapNotInjective { index });
                }
            }
        }
        Ok(DifferenceFamily {
            modulus,
            forbidden_order,
            graph,
            maps,
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn forbidden_order(&self) -> usize {
        self.forbidden_order
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The maps, written as base blocks: entry `i` of a map is the Z_v point
    /// carrying vertex `i`.
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    /// Elements of the forbidden subgroup `(v/t)Z_v`, in increasing order.
    pub fn subgroup(&self) -> Vec<usize> {
        let step = self.modulus / self.forbidden_order;
        (0..self.forbidden_order).map(|j| j * step).collect()
    }
}

/// Single-map family read off any verified d-graceful labeling: the labels
/// themselves, taken in `Z_{2d(m+1)}` with forbidden order `2d`.
pub fn df_from_labeling(l: &Labeling) -> Result<DifferenceFamily, DfError> {
    l.verify_d_graceful().map_err(DfError::UnverifiedLabeling)?;
    let v = 2 * l.d() * (l.m() + 1);
    DifferenceFamily::new(v, 2 * l.d(), l.graph().clone(), vec![l.labels().to_vec()])
}

/// n-map family from a d-graceful α-labeling: writing X for the part with
/// the lower label range, map i (for i = 1..n) keeps `f` on X and shifts it
/// by `(i-1)(d+e)` on the upper part, all read in `Z_{2dn(m+1)}` with
/// forbidden order `2dn`.
pub fn df_from_alpha(l: &Labeling, n: usize) -> Result<DifferenceFamily, DfError> {
    if n < 1 {
        return Err(DfError::InvalidN);
    }
    let (_, upper) = l.alpha_parts().map_err(DfError::NotAlpha)?;
    let in_upper = {
        let mut mask = vec![false; l.graph().vertex_count()];
        for &y in &upper {
            mask[y] = true;
        }
        mask
    };
    let e = l.graph().size();
    let v = 2 * l.d() * n * (l.m() + 1);
    let maps = (0..n)
        .map(|i| {
            l.labels()
                .iter()
                .enumerate()
                .map(|(x, &f)| if in_upper[x] { f + i * (l.d() + e) } else { f })
                .collect()
        })
        .collect();
    DifferenceFamily::new(v, 2 * l.d() * n, l.graph().clone(), maps)
}

/// Outcome of [`verify_df`]: exact-cover accounting for the difference
/// multiset ΔF over `Z_v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfCoverageReport {
    pub ok: bool,
    /// Residues outside the subgroup that no difference realizes.
    pub undercovered: Vec<usize>,
    /// Residues outside the subgroup realized more than once, with counts.
    pub overcovered: Vec<(usize, usize)>,
    /// Forbidden-subgroup residues realized by some difference, with counts.
    pub subgroup_hits: Vec<(usize, usize)>,
}

/// Recomputes ΔF from scratch and checks the exact-cover condition. The
/// report carries failures; `ok` is the boolean answer.
pub fn verify_df(df: &DifferenceFamily) -> DfCoverageReport {
    let v = df.modulus;
    let step = v / df.forbidden_order;
    let mut count = vec![0usize; v];
    for map in &df.maps {
        for &(x, y) in df.graph.edges() {
            let diff = (map[x] + v - map[y]) % v;
            count[diff] += 1;
            count[(v - diff) % v] += 1;
        }
    }
    let mut report = DfCoverageReport {
        ok: true,
        undercovered: Vec::new(),
        overcovered: Vec::new(),
        subgroup_hits: Vec::new(),
    };
    for (r, &c) in count.iter().enumerate() {
        if r % step == 0 {
            if c > 0 {
                report.subgroup_hits.push((r, c));
            }
        } else if c == 0 {
            report.undercovered.push(r);
        } else if c > 1 {
            report.overcovered.push((r, c));
        }
    }
    report.ok = report.undercovered.is_empty()
        && report.overcovered.is_empty()
        && report.subgroup_hits.is_empty();
    report
}

#[derive(Deserialize)]
struct DfJson {
    v: usize,
    forbidden_order: usize,
    graph: Graph,
    maps: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for DifferenceFamily {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> Result<DifferenceFamily, D::Error> {
        use serde::de::Error;
        let raw = DfJson::deserialize(deserializer)?;
        DifferenceFamily::new(raw.v, raw.forbidden_order, raw.graph, raw.maps)
            .map_err(D::Error::custom)
    }
}
