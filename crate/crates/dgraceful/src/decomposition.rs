//! Cyclic Γ-decompositions of complete multipartite graphs, obtained by
//! translating the base blocks of a difference family through Z_v.
//!
//! For a verified family with modulus `v` and forbidden order `q`, the host
//! is `K_{p×q}` with `p = v/q`: vertex set Z_v, parts the cosets of the
//! subgroup `pZ_v` (so `x` and `y` share a part iff `x ≡ y (mod p)`). The
//! blocks `{map + g | g ∈ Z_v}` partition the host's edges, and the
//! translation `x ↦ x+1` permutes the block set.

use crate::diff_family::{verify_df, DfCoverageReport, DifferenceFamily};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Hosts up to this many vertices get a fully materialized edge-count table
/// during verification; larger ones are checked in difference-class chunks.
pub const DEFAULT_MATERIALIZE_CAP: usize = 512;

/// The complete multipartite host graph `K_{p×q}`, living on Z_{pq} with
/// parts = cosets of `pZ_{pq}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteSpec {
    /// Number of parts, `p`.
    pub parts: usize,
    /// Size of each part, `q`.
    pub part_size: usize,
}

impl MultipartiteSpec {
    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    /// `pq(pq - q)/2`: all pairs except those inside a part.
    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        n * (n - self.part_size) / 2
    }

    pub fn part_of(&self, x: usize) -> usize {
        x % self.parts
    }

    /// The parts as explicit vertex lists (cosets in increasing order).
    pub fn cosets(&self) -> Vec<Vec<usize>> {
        (0..self.parts)
            .map(|r| (0..self.part_size).map(|j| r + j * self.parts).collect())
            .collect()
    }

    pub fn name(&self) -> String {
        format!("K_{{{}x{}}}", self.parts, self.part_size)
    }
}

/// A block set over a multipartite host: the base blocks and every translate.
/// Blocks are vertex tuples in Γ's vertex order; translation acts pointwise
/// mod `pq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    spec: MultipartiteSpec,
    graph: Graph,
    base_blocks: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error(
        "difference family fails its coverage check ({} undercovered, {} overcovered, {} subgroup hits)",
        .0.undercovered.len(),
        .0.overcovered.len(),
        .0.subgroup_hits.len()
    )]
    UnverifiedFamily(DfCoverageReport),
    #[error("base block {index} is invalid: {reason}")]
    BadBaseBlock { index: usize, reason: String },
    #[error("expansion identity violated: {0}")]
    Inconsistent(String),
}

impl Decomposition {
    /// Assembles a decomposition from raw parts without any checking —
    /// intended for tests that need deliberately broken block sets.
    pub fn from_parts(
        spec: MultipartiteSpec,
        graph: Graph,
        base_blocks: Vec<Vec<usize>>,
        blocks: Vec<Vec<usize>>,
    ) -> Decomposition {
        Decomposition {
            spec,
            graph,
            base_blocks,
            blocks,
        }
    }

    /// Rebuilds the full block set from base blocks by cyclic translation,
    /// e.g. when loading an exported decomposition.
    pub fn from_base_blocks(
        spec: MultipartiteSpec,
        graph: Graph,
        base_blocks: Vec<Vec<usize>>,
    ) -> Result<Decomposition, DecompositionError> {
        let v = spec.vertex_count();
        for (index, block) in base_blocks.iter().enumerate() {
            if block.len() != graph.vertex_count() {
                return Err(DecompositionError::BadBaseBlock {
                    index,
                    reason: format!(
                        "has {} vertices, graph has {}",
                        block.len(),
                        graph.vertex_count()
                    ),
                });
            }
            if let Some(&bad) = block.iter().find(|&&x| x >= v) {
                return Err(DecompositionError::BadBaseBlock {
                    index,
                    reason: format!("entry {bad} outside Z_{v}"),
                });
            }
        }
        let blocks = base_blocks
            .iter()
            .flat_map(|b| (0..v).map(|g| translate(b, g, v)))
            .collect();
        Ok(Decomposition {
            spec,
            graph,
            base_blocks,
            blocks,
        })
    }

    pub fn spec(&self) -> MultipartiteSpec {
        self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_blocks(&self) -> &[Vec<usize>] {
        &self.base_blocks
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// Expands a verified difference family into the full cyclic decomposition
/// of `K_{v/q × q}` (writing `q` for the forbidden order).
pub fn expand(df: &DifferenceFamily) -> Result<Decomposition, DecompositionError> {
    let coverage = verify_df(df);
    if !coverage.ok {
        return Err(DecompositionError::UnverifiedFamily(coverage));
    }
    let v = df.modulus();
    let spec = MultipartiteSpec {
        parts: v / df.forbidden_order(),
        part_size: df.forbidden_order(),
    };
    let dec = Decomposition::from_base_blocks(spec, df.graph().clone(), df.maps().to_vec())?;
    // numeric sanity on every expansion: block count and covered-edge count
    if dec.blocks.len() != v * df.maps().len() {
        return Err(DecompositionError::Inconsistent(format!(
            "{} blocks, expected v·(maps) = {}",
            dec.blocks.len(),
            v * df.maps().len()
        )));
    }
    if dec.blocks.len() * dec.graph.size() != spec.edge_count() {
        return Err(DecompositionError::Inconsistent(format!(
            "{} block edges vs {} host edges",
            dec.blocks.len() * dec.graph.size(),
            spec.edge_count()
        )));
    }
    Ok(dec)
}

/// Everything [`verify_decomposition`] checks, with exact defect lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub ok: bool,
    /// Host edges no block covers, as normalized `(a, b)` pairs.
    pub uncovered: Vec<(usize, usize)>,
    /// Host edges covered more than once, with their counts.
    pub multiply_covered: Vec<((usize, usize), usize)>,
    /// Block edges joining two vertices of the same part: `(block, a, b)`.
    pub internal_edges: Vec<(usize, usize, usize)>,
    /// Blocks that are not injective embeddings into Z_{pq}.
    pub malformed_blocks: Vec<(usize, String)>,
    /// Whether `x ↦ x+1` maps the block set onto itself.
    pub automorphism_ok: bool,
}

/// Checks the edge partition and the cyclic automorphism with the default
/// materialization cap.
pub fn verify_decomposition(dec: &Decomposition) -> DecompositionReport {
    verify_decomposition_with_cap(dec, DEFAULT_MATERIALIZE_CAP)
}

/// As [`verify_decomposition`], but hosts with more than `cap` vertices are
/// verified in difference-class chunks (bounded memory) instead of via one
/// flat pq×pq table. Both strategies produce identical reports.
pub fn verify_decomposition_with_cap(dec: &Decomposition, cap: usize) -> DecompositionReport {
    let pq = dec.spec.vertex_count();
    let p = dec.spec.parts;
    let mut report = DecompositionReport {
        ok: false,
        uncovered: Vec::new(),
        multiply_covered: Vec::new(),
        internal_edges: Vec::new(),
        malformed_blocks: Vec::new(),
        automorphism_ok: false,
    };

    let mut usable = vec![true; dec.blocks.len()];
    for (i, block) in dec.blocks.iter().enumerate() {
        if block.len() != dec.graph.vertex_count() {
            report
                .malformed_blocks
                .push((i, format!("{} vertices, expected {}", block.len(), dec.graph.vertex_count())));
            usable[i] = false;
            continue;
        }
        if let Some(&bad) = block.iter().find(|&&x| x >= pq) {
            report
                .malformed_blocks
                .push((i, format!("entry {bad} outside Z_{pq}")));
            usable[i] = false;
            continue;
        }
        let mut seen = vec![false; pq];
        if block.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
            report.malformed_blocks.push((i, "not injective".into()));
            usable[i] = false;
        }
    }

    for (i, block) in dec.blocks.iter().enumerate() {
        if !usable[i] {
            continue;
        }
        for &(x, y) in dec.graph.edges() {
            let (a, b) = (block[x], block[y]);
            if a % p == b % p {
                report.internal_edges.push((i, a.min(b), a.max(b)));
            }
        }
    }

    if pq <= cap {
        coverage_materialized(dec, &usable, &mut report);
    } else {
        coverage_chunked(dec, &usable, cap, &mut report);
    }
    report.uncovered.sort_unstable();
    report.multiply_covered.sort_unstable();

    report.automorphism_ok = translation_permutes_blocks(dec);
    report.ok = report.uncovered.is_empty()
        && report.multiply_covered.is_empty()
        && report.internal_edges.is_empty()
        && report.malformed_blocks.is_empty()
        && report.automorphism_ok;
    report
}

/// Coverage via one flat table over all vertex pairs.
fn coverage_materialized(dec: &Decomposition, usable: &[bool], report: &mut DecompositionReport) {
    let pq = dec.spec.vertex_count();
    let p = dec.spec.parts;
    let mut count = vec![0u32; pq * pq];
    for (i, block) in dec.blocks.iter().enumerate() {
        if !usable[i] {
            continue;
        }
        for &(x, y) in dec.graph.edges() {
            let (a, b) = (block[x].min(block[y]), block[x].max(block[y]));
            if a % p != b % p {
                count[a * pq + b] += 1;
            }
        }
    }
    for a in 0..pq {
        for b in a + 1..pq {
            if a % p == b % p {
                continue; // not a host edge
            }
            match count[a * pq + b] {
                0 => report.uncovered.push((a, b)),
                1 => {}
                c => report.multiply_covered.push(((a, b), c as usize)),
            }
        }
    }
}

/// Coverage sharded by cyclic difference class, keeping memory at roughly
/// `cap²` counters per pass regardless of host size.
fn coverage_chunked(dec: &Decomposition, usable: &[bool], cap: usize, report: &mut DecompositionReport) {
    let pq = dec.spec.vertex_count();
    let p = dec.spec.parts;
    let half = pq / 2;
    let chunk = (cap.saturating_mul(cap) / pq).clamp(1, half.max(1));
    let mut lo = 1;
    while lo <= half {
        let hi = (lo + chunk - 1).min(half);
        let mut count = vec![0u32; (hi - lo + 1) * pq];
        for (i, block) in dec.blocks.iter().enumerate() {
            if !usable[i] {
                continue;
            }
            for &(x, y) in dec.graph.edges() {
                let (a, b) = (block[x], block[y]);
                if a % p == b % p {
                    continue;
                }
                let (delta, start) = difference_class(a, b, pq);
                if delta >= lo && delta <= hi {
                    count[(delta - lo) * pq + start] += 1;
                }
            }
        }
        for delta in lo..=hi {
            if delta % p == 0 {
                continue; // same-part class: no host edges here
            }
            // the class {x, x+delta} has pq distinct edges, except the
            // antipodal class (pq even, delta = pq/2) which has pq/2,
            // canonicalized to starts below pq/2
            let starts = if pq % 2 == 0 && delta == half { half } else { pq };
            for start in 0..starts {
                let edge = normalize(start, (start + delta) % pq);
                match count[(delta - lo) * pq + start] {
                    0 => report.uncovered.push(edge),
                    1 => {}
                    c => report.multiply_covered.push((edge, c as usize)),
                }
            }
        }
        lo = hi + 1;
    }
}

/// Canonical (difference class, start) of a host pair: the class is the
/// cyclic distance in [1, pq/2], the start is the endpoint from which the
/// other is `+delta` away (ties at the antipode resolved to the smaller).
fn difference_class(a: usize, b: usize, pq: usize) -> (usize, usize) {
    let fwd = (b + pq - a) % pq;
    let bwd = pq - fwd;
    match fwd.cmp(&bwd) {
        std::cmp::Ordering::Less => (fwd, a),
        std::cmp::Ordering::Greater => (bwd, b),
        std::cmp::Ordering::Equal => (fwd, a.min(b)),
    }
}

fn normalize(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn translate(block: &[usize], g: usize, v: usize) -> Vec<usize> {
    block.iter().map(|&x| (x + g) % v).collect()
}

/// Edge set of a block in canonical order — the equality notion for
/// embedded copies (two vertex tuples describe the same copy iff they induce
/// the same edge set, e.g. rotations of a cycle).
fn block_edge_set(block: &[usize], graph: &Graph) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&(x, y)| normalize(block[x], block[y]))
        .collect();
    edges.sort_unstable();
    edges
}

/// Edge set of a well-formed block, or the raw tuple for a malformed one.
type BlockKey = Result<Vec<(usize, usize)>, Vec<usize>>;

/// Canonical comparison key that also tolerates blocks of the wrong length
/// (which have no edge set; the raw tuple stands in for them).
fn block_key(block: &[usize], graph: &Graph) -> BlockKey {
    if block.len() == graph.vertex_count() {
        Ok(block_edge_set(block, graph))
    } else {
        Err(block.to_vec())
    }
}

/// Whether `x ↦ x+1` maps the block multiset onto itself. Tuple-level
/// comparison settles honest expansions immediately; otherwise fall back to
/// comparing canonical edge sets.
fn translation_permutes_blocks(dec: &Decomposition) -> bool {
    let v = dec.spec.vertex_count();
    if v == 0 {
        return false;
    }
    let mut balance: HashMap<&[usize], isize> = HashMap::new();
    for block in &dec.blocks {
        *balance.entry(block.as_slice()).or_default() += 1;
    }
    let shifted: Vec<Vec<usize>> = dec.blocks.iter().map(|b| translate(b, 1, v)).collect();
    let mut tuple_ok = true;
    for block in &shifted {
        match balance.get_mut(block.as_slice()) {
            Some(c) => *c -= 1,
            None => {
                tuple_ok = false;
                break;
            }
        }
    }
    if tuple_ok && balance.values().all(|&c| c == 0) {
        return true;
    }

    let mut canon_balance: HashMap<BlockKey, isize> =
        HashMap::new();
    for block in &dec.blocks {
        *canon_balance.entry(block_key(block, &dec.graph)).or_default() += 1;
    }
    for block in &shifted {
        *canon_balance.entry(block_key(block, &dec.graph)).or_default() -= 1;
    }
    canon_balance.values().all(|&c| c == 0)
}

/// Headline numbers for a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSummary {
    pub p: usize,
    pub q: usize,
    pub blocks: usize,
    pub edges_per_block: usize,
    /// Orbit sizes of the distinct blocks under `x ↦ x+1`, ascending.
    pub orbit_lengths: Vec<usize>,
}

pub fn decomposition_summary(dec: &Decomposition) -> DecompositionSummary {
    let v = dec.spec.vertex_count();
    let mut orbit_lengths = Vec::new();
    let mut seen: std::collections::HashSet<Vec<(usize, usize)>> = std::collections::HashSet::new();
    for block in &dec.blocks {
        if block.len() != dec.graph.vertex_count() {
            continue; // malformed; verification reports it
        }
        let key = block_edge_set(block, &dec.graph);
        if seen.contains(&key) {
            continue;
        }
        // orbit length: least L >= 1 with block+L inducing the same edge set
        let mut length = 0;
        let mut current = block.clone();
        loop {
            seen.insert(block_edge_set(&current, &dec.graph));
            current = translate(&current, 1, v);
            length += 1;
            if block_edge_set(&current, &dec.graph) == key {
                break;
            }
        }
        orbit_lengths.push(length);
    }
    orbit_lengths.sort_unstable();
    DecompositionSummary {
        p: dec.spec.parts,
        q: dec.spec.part_size,
        blocks: dec.blocks.len(),
        edges_per_block: dec.graph.size(),
        orbit_lengths,
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    spec: MultipartiteSpec,
    graph: Graph,
    base_blocks: Vec<Vec<usize>>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DecompositionJson {
            spec: self.spec,
            graph: self.graph.clone(),
            base_blocks: self.base_blocks.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Decomposition, D::Error> {
        use serde::de::Error;
        let raw = DecompositionJson::deserialize(deserializer)?;
        Decomposition::from_base_blocks(raw.spec, raw.graph, raw.base_blocks)
            .map_err(D::Error::custom)
    }
}
