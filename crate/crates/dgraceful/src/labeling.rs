//! The universal verifier: decides whether a vertex labeling is d-graceful,
//! whether it is additionally an α-labeling, and checks the
//! relative-difference-set view for complete graphs.
//!
//! A labeling of a graph of size `e = d·m` is *d-graceful* when it is an
//! injection into `[0, d(m+1)-1]` whose edge gaps `|f(x)-f(y)|` realize every
//! value of `[1, d(m+1)-1]` except the multiples `{m+1, 2(m+1), ...,
//! (d-1)(m+1)}`, each exactly once. `d = 1` recovers the classical graceful
//! definition; `d = e` recovers the odd-graceful one.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A vertex labeling carrying its parameters `(d, m)`.
///
/// `d` and `m` are stored, not inferred, so a labeling object is
/// self-describing; the consistency `d·m = e` is re-checked on every verify
/// call rather than trusted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    graph: Graph,
    d: usize,
    m: usize,
    /// Labels ordered by vertex id.
    labels: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("d = {d} is not admissible for e = {e} (not a divisor)")]
    NotAdmissible { e: usize, d: usize },
    #[error("expected {expected} labels (one per vertex), got {got}")]
    WrongLabelCount { expected: usize, got: usize },
}

impl Labeling {
    /// Pairs a graph with labels for the given `d`, deriving `m = e/d`.
    /// Rejects inadmissible `d` and wrong-length label vectors; gracefulness
    /// itself is checked separately by [`Labeling::verify_d_graceful`].
    pub fn new(graph: Graph, d: usize, labels: Vec<usize>) -> Result<Labeling, LabelingError> {
        let e = graph.size();
        if d == 0 || e == 0 || e % d != 0 {
            return Err(LabelingError::NotAdmissible { e, d });
        }
        if labels.len() != graph.vertex_count() {
            return Err(LabelingError::WrongLabelCount {
                expected: graph.vertex_count(),
                got: labels.len(),
            });
        }
        let m = e / d;
        Ok(Labeling {
            graph,
            d,
            m,
            labels,
        })
    }

    /// Assembles a labeling without any consistency checks, e.g. when reading
    /// untrusted JSON that the verifier will judge afterwards.
    pub fn from_parts(graph: Graph, d: usize, m: usize, labels: Vec<usize>) -> Labeling {
        Labeling {
            graph,
            d,
            m,
            labels,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> usize {
        self.labels[vertex]
    }

    /// Largest admitted label, `d(m+1) - 1`.
    pub fn label_bound(&self) -> usize {
        self.d * (self.m + 1) - 1
    }

    /// The forbidden gaps `{m+1, 2(m+1), ..., (d-1)(m+1)}`, empty when `d=1`.
    pub fn forbidden_gaps(&self) -> Vec<usize> {
        (1..self.d).map(|j| j * (self.m + 1)).collect()
    }

    /// The gap values a d-graceful labeling must realize, in increasing
    /// order: `[1, d(m+1)-1]` minus the forbidden multiples.
    pub fn required_gaps(&self) -> Vec<usize> {
        (1..=self.label_bound())
            .filter(|g| g % (self.m + 1) != 0)
            .collect()
    }

    /// The complement labeling `f ↦ d(m+1)-1-f`, which realizes the same
    /// gaps. Panics if a label exceeds [`Labeling::label_bound`].
    pub fn complement(&self) -> Labeling {
        let bound = self.label_bound();
        Labeling {
            graph: self.graph.clone(),
            d: self.d,
            m: self.m,
            labels: self.labels.iter().map(|&l| bound - l).collect(),
        }
    }

    /// Full d-graceful check. On success returns the realized/required gap
    /// spectrum; on failure, a report naming every violated condition.
    ///
    /// Structural violations (parameter mismatch, wrong label count, labels
    /// out of range or repeated) are reported without gap analysis, since
    /// gaps are meaningless on a malformed labeling.
    pub fn verify_d_graceful(&self) -> Result<DifferenceSpectrum, ViolationReport> {
        let e = self.graph.size();
        let mut violations = Vec::new();
        if self.d == 0 || self.m == 0 || self.d * self.m != e {
            violations.push(Violation::new(
                ViolationKind::ParameterMismatch,
                format!("need d·m = e with d, m ≥ 1; got d = {}, m = {}, e = {e}", self.d, self.m),
            ));
        }
        if self.labels.len() != self.graph.vertex_count() {
            violations.push(Violation::new(
                ViolationKind::LabelCount,
                format!(
                    "graph has {} vertices but {} labels were given",
                    self.graph.vertex_count(),
                    self.labels.len()
                ),
            ));
        }
        if !violations.is_empty() {
            return Err(ViolationReport { violations });
        }

        let bound = self.label_bound();
        for (v, &l) in self.labels.iter().enumerate() {
            if l > bound {
                violations.push(Violation::new(
                    ViolationKind::LabelOutOfRange,
                    format!("vertex {v} has label {l}, above the bound d(m+1)-1 = {bound}"),
                ));
            }
        }
        let mut holders: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in self.labels.iter().enumerate() {
            holders.entry(l).or_default().push(v);
        }
        for (l, vs) in &holders {
            if vs.len() > 1 {
                violations.push(Violation::new(
                    ViolationKind::DuplicateLabel,
                    format!("label {l} used by vertices {vs:?}"),
                ));
            }
        }
        if !violations.is_empty() {
            return Err(ViolationReport { violations });
        }

        let period = self.m + 1;
        let mut count = vec![0usize; bound + 1];
        for &(x, y) in self.graph.edges() {
            count[self.labels[x].abs_diff(self.labels[y])] += 1;
        }
        for (gap, &c) in count.iter().enumerate().skip(1) {
            if gap % period == 0 {
                if c > 0 {
                    violations.push(Violation::new(
                        ViolationKind::ForbiddenGap,
                        format!("forbidden gap {gap} = {}·(m+1) realized by {c} edge(s)", gap / period),
                    ));
                }
            } else if c == 0 {
                violations.push(Violation::new(
                    ViolationKind::MissingGap,
                    format!("required gap {gap} is not realized by any edge"),
                ));
            } else if c > 1 {
                violations.push(Violation::new(
                    ViolationKind::DuplicateGap,
                    format!("gap {gap} realized by {c} edges, expected exactly one"),
                ));
            }
        }
        if !violations.is_empty() {
            return Err(ViolationReport { violations });
        }

        let mut realized: Vec<usize> = self
            .graph
            .edges()
            .iter()
            .map(|&(x, y)| self.labels[x].abs_diff(self.labels[y]))
            .collect();
        realized.sort_unstable();
        Ok(DifferenceSpectrum {
            realized,
            required: self.required_gaps(),
        })
    }

    /// α-check on top of [`Labeling::verify_d_graceful`]: true iff every
    /// label on one part lies below every label on the other. Errors if the
    /// labeling is not d-graceful or the graph is not connected bipartite.
    pub fn verify_alpha(&self) -> Result<bool, ViolationReport> {
        self.verify_d_graceful()?;
        Ok(self.alpha_split()?.is_some())
    }

    /// For an α-labeling, the parts `(X, Y)` with `max f(X) < min f(Y)`,
    /// as vertex-id lists. Errors like [`Labeling::verify_alpha`], plus a
    /// report with kind `alpha_violated` when the labeling is d-graceful but
    /// the part ranges interleave.
    pub fn alpha_parts(&self) -> Result<(Vec<usize>, Vec<usize>), ViolationReport> {
        self.verify_d_graceful()?;
        self.alpha_split()?.ok_or_else(|| {
            ViolationReport::single(
                ViolationKind::AlphaViolated,
                "label ranges of the two parts interleave",
            )
        })
    }

    /// Shared α core: the low/high parts when the α condition holds, `None`
    /// when it does not, an error report when the graph is not connected
    /// bipartite.
    #[allow(clippy::type_complexity)]
    fn alpha_split(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>, ViolationReport> {
        let bip = match self.graph.bipartition() {
            Ok(Some(b)) => b,
            Ok(None) => {
                return Err(ViolationReport::single(
                    ViolationKind::NotBipartite,
                    "graph contains an odd cycle",
                ))
            }
            Err(_) => {
                return Err(ViolationReport::single(
                    ViolationKind::NotBipartite,
                    "graph is disconnected",
                ))
            }
        };
        let range = |part: &[usize]| {
            let labels = part.iter().map(|&v| self.labels[v]);
            (labels.clone().min().unwrap(), labels.max().unwrap())
        };
        let (min_a, max_a) = range(bip.part_a());
        let (min_b, max_b) = range(bip.part_b());
        if max_a < min_b {
            Ok(Some((bip.part_a().to_vec(), bip.part_b().to_vec())))
        } else if max_b < min_a {
            Ok(Some((bip.part_b().to_vec(), bip.part_a().to_vec())))
        } else {
            Ok(None)
        }
    }

    /// The relative-difference-set view for complete graphs: reads the
    /// labels of `K_v` as a subset of `Z_{v(v-1)+2d}` and checks whether
    /// their pairwise differences cover everything outside the order-`2d`
    /// subgroup exactly once and nothing inside it.
    ///
    /// The check is meaningful for any injective label set, not only
    /// d-graceful ones; see [`is_cyclic_rds`] for the raw-subset entry point.
    pub fn verify_rds_view(&self) -> Result<bool, ViolationReport> {
        if !self.graph.is_complete() {
            return Err(ViolationReport::single(
                ViolationKind::NotComplete,
                "the difference-set view applies to complete graphs only",
            ));
        }
        let v = self.graph.vertex_count();
        let modulus = v * (v - 1) + 2 * self.d;
        Ok(is_cyclic_rds(&self.labels, modulus, 2 * self.d))
    }
}

/// Whether `elements`, reduced into `Z_modulus`, form a cyclic relative
/// difference set with λ = 1 over the subgroup of the given order: all
/// pairwise differences `a - b` (ordered pairs, `a ≠ b`) hit every residue
/// outside the subgroup exactly once and no residue inside it.
///
/// Returns `false` on degenerate input (zero modulus, order not dividing the
/// modulus, repeated elements).
pub fn is_cyclic_rds(elements: &[usize], modulus: usize, forbidden_order: usize) -> bool {
    if modulus == 0 || forbidden_order == 0 || modulus % forbidden_order != 0 {
        return false;
    }
    let step = modulus / forbidden_order; // subgroup = step·Z_modulus
    let reduced: Vec<usize> = elements.iter().map(|&x| x % modulus).collect();
    let mut count = vec![0usize; modulus];
    for (i, &a) in reduced.iter().enumerate() {
        for (j, &b) in reduced.iter().enumerate() {
            if i != j {
                if a == b {
                    return false; // not injective into Z_modulus
                }
                count[(a + modulus - b) % modulus] += 1;
            }
        }
    }
    count
        .iter()
        .enumerate()
        .skip(1)
        .all(|(r, &c)| if r % step == 0 { c == 0 } else { c == 1 })
}

/// All admissible values of `d` for a graph: the divisors of its size `e`,
/// in increasing order.
pub fn admissible_divisors(graph: &Graph) -> Vec<usize> {
    let e = graph.size();
    (1..=e).filter(|d| e % d == 0).collect()
}

/// The outcome of a successful verification: the gap multiset an edge scan
/// realized and the gap set the definition requires. Equal on success (the
/// only way callers obtain this type).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceSpectrum {
    /// Sorted multiset of edge gaps `|f(x)-f(y)|`.
    pub realized: Vec<usize>,
    /// Sorted target set `[1, d(m+1)-1]` minus the forbidden multiples.
    pub required: Vec<usize>,
}

/// One failed verification condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    pub fn new(kind: ViolationKind, detail: impl Into<String>) -> Violation {
        Violation {
            kind,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    ParameterMismatch,
    LabelCount,
    LabelOutOfRange,
    DuplicateLabel,
    ForbiddenGap,
    DuplicateGap,
    MissingGap,
    NotBipartite,
    NotComplete,
    AlphaViolated,
}

/// Everything wrong with a labeling, serialized as a JSON list of
/// `{"kind", "detail"}` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn single(kind: ViolationKind, detail: impl Into<String>) -> ViolationReport {
        ViolationReport {
            violations: vec![Violation::new(kind, detail)],
        }
    }

    pub fn kinds(&self) -> Vec<ViolationKind> {
        self.violations.iter().map(|v| v.kind).collect()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            write!(f, " [{:?}] {};", v.kind, v.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for ViolationReport {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn labeled(graph: Graph, d: usize, labels: &[usize]) -> Labeling {
        Labeling::new(graph, d, labels.to_vec()).unwrap()
    }

    #[test]
    fn c6_two_graceful_labeling_verifies() {
        let l = labeled(Graph::cycle(6).unwrap(), 2, &[0, 2, 3, 6, 1, 7]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.realized, vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(spec.required, vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(l.verify_alpha(), Ok(false)); // parts {0,3,1} and {2,6,7} interleave
    }

    #[test]
    fn c6_alpha_labeling_verifies() {
        let l = labeled(Graph::cycle(6).unwrap(), 2, &[0, 5, 2, 3, 1, 7]);
        assert!(l.verify_d_graceful().is_ok());
        assert_eq!(l.verify_alpha(), Ok(true));
        let (x, y) = l.alpha_parts().unwrap();
        assert_eq!(x, vec![0, 2, 4]); // labels {0,2,1}
        assert_eq!(y, vec![1, 3, 5]); // labels {5,3,7}
    }

    #[test]
    fn k5_two_graceful_set_verifies_and_is_rds() {
        let l = labeled(Graph::complete(5).unwrap(), 2, &[0, 1, 4, 9, 11]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.required, vec![1, 2, 3, 4, 5, 7, 8, 9, 10, 11]);
        assert_eq!(spec.realized, spec.required);
        assert_eq!(l.verify_rds_view(), Ok(true));
    }

    #[test]
    fn k5_out_of_range_set_fails_gracefulness_but_is_rds() {
        let l = labeled(Graph::complete(5).unwrap(), 2, &[0, 1, 3, 11, 20]);
        let report = l.verify_d_graceful().unwrap_err();
        assert_eq!(report.kinds(), vec![ViolationKind::LabelOutOfRange]);
        assert!(report.violations[0].detail.contains("label 20"));
        assert!(report.violations[0].detail.contains("11"));
        // the raw difference-set condition still holds in Z_24
        assert!(is_cyclic_rds(&[0, 1, 3, 11, 20], 24, 4));
        assert_eq!(l.verify_rds_view(), Ok(true));
    }

    #[test]
    fn k2_is_trivial_rds() {
        let l = labeled(Graph::complete(2).unwrap(), 1, &[0, 1]);
        assert!(l.verify_d_graceful().is_ok());
        assert_eq!(l.verify_rds_view(), Ok(true));
    }

    #[test]
    fn rds_rejects_broken_sets() {
        assert!(!is_cyclic_rds(&[0, 1, 2, 11, 20], 24, 4)); // diff 2 twice
        assert!(!is_cyclic_rds(&[0, 6], 24, 4)); // subgroup element hit
        assert!(!is_cyclic_rds(&[0, 24], 24, 4)); // collides mod 24
        assert!(!is_cyclic_rds(&[0, 1], 24, 5)); // order does not divide
        assert!(!is_cyclic_rds(&[0, 1], 0, 1));
    }

    #[test]
    fn graceful_path_d1() {
        let l = labeled(Graph::path(2).unwrap(), 1, &[1, 0, 2]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.realized, vec![1, 2]);
    }

    #[test]
    fn d1_required_is_full_interval() {
        let l = labeled(Graph::path(5).unwrap(), 1, &[0, 5, 1, 4, 2, 3]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.required, vec![1, 2, 3, 4, 5]);
        assert!(l.forbidden_gaps().is_empty());
    }

    #[test]
    fn d_equals_e_required_is_odd_numbers() {
        // odd-graceful specialization: m = 1, gaps must be {1,3,...,2e-1}
        let l = labeled(Graph::star(3).unwrap(), 3, &[0, 1, 3, 5]);
        let spec = l.verify_d_graceful().unwrap();
        assert_eq!(spec.required, vec![1, 3, 5]);
        assert_eq!(spec.realized, vec![1, 3, 5]);
        assert_eq!(l.forbidden_gaps(), vec![2, 4]);
    }

    #[test]
    fn star_labelings_are_always_alpha() {
        let l = labeled(Graph::star(5).unwrap(), 1, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(l.verify_alpha(), Ok(true));
    }

    #[test]
    fn gap_violations_are_itemized() {
        // C_4 with d=2, m=2: gaps are {5,4,3,4} — 3 forbidden, 4 doubled, 1
        // and 2 missing.
        let l = labeled(Graph::cycle(4).unwrap(), 2, &[0, 5, 1, 4]);
        let report = l.verify_d_graceful().unwrap_err();
        let mut kinds = report.kinds();
        kinds.sort_by_key(|k| format!("{k:?}"));
        assert_eq!(
            kinds,
            vec![
                ViolationKind::DuplicateGap,
                ViolationKind::ForbiddenGap,
                ViolationKind::MissingGap,
                ViolationKind::MissingGap,
            ]
        );
    }

    #[test]
    fn duplicate_labels_are_reported_with_holders() {
        let l = labeled(Graph::path(2).unwrap(), 1, &[2, 0, 2]);
        let report = l.verify_d_graceful().unwrap_err();
        assert_eq!(report.kinds(), vec![ViolationKind::DuplicateLabel]);
        assert!(report.violations[0].detail.contains("[0, 2]"));
    }

    #[test]
    fn parameter_mismatch_is_caught() {
        let l = Labeling::from_parts(Graph::path(4).unwrap(), 2, 3, vec![0, 5, 1, 3, 2]);
        let report = l.verify_d_graceful().unwrap_err();
        assert_eq!(report.kinds(), vec![ViolationKind::ParameterMismatch]);
    }

    #[test]
    fn inadmissible_d_rejected_at_construction() {
        assert_eq!(
            Labeling::new(Graph::path(5).unwrap(), 2, vec![0; 6]).unwrap_err(),
            LabelingError::NotAdmissible { e: 5, d: 2 }
        );
        assert_eq!(
            Labeling::new(Graph::path(4).unwrap(), 2, vec![0; 3]).unwrap_err(),
            LabelingError::WrongLabelCount {
                expected: 5,
                got: 3
            }
        );
    }

    #[test]
    fn alpha_needs_bipartite_graph() {
        let l = labeled(Graph::complete(5).unwrap(), 2, &[0, 1, 4, 9, 11]);
        assert!(l.verify_alpha().is_err());
    }

    #[test]
    fn rds_view_needs_complete_graph() {
        let l = labeled(Graph::cycle(6).unwrap(), 2, &[0, 2, 3, 6, 1, 7]);
        let report = l.verify_rds_view().unwrap_err();
        assert_eq!(report.kinds(), vec![ViolationKind::NotComplete]);
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(
            admissible_divisors(&Graph::path(18).unwrap()),
            vec![1, 2, 3, 6, 9, 18]
        );
        assert_eq!(admissible_divisors(&Graph::path(1).unwrap()), vec![1]);
        assert_eq!(
            admissible_divisors(&Graph::path(10).unwrap()),
            vec![1, 2, 5, 10]
        );
    }

    #[test]
    fn complement_preserves_gracefulness_and_alpha() {
        let l = labeled(Graph::cycle(6).unwrap(), 2, &[0, 5, 2, 3, 1, 7]);
        let c = l.complement();
        assert_eq!(c.labels(), &[7, 2, 5, 4, 6, 0]);
        assert!(c.verify_d_graceful().is_ok());
        assert_eq!(c.verify_alpha(), Ok(true));
        assert_eq!(c.complement(), l);
    }

    #[test]
    fn labeling_json_round_trip() {
        let l = labeled(Graph::cycle(6).unwrap(), 2, &[0, 2, 3, 6, 1, 7]);
        let json = serde_json::to_string(&l).unwrap();
        assert!(json.starts_with(r#"{"graph":"#));
        assert!(json.contains(r#""d":2,"m":3,"labels":[0,2,3,6,1,7]"#));
        let back: Labeling = serde_json::from_str(&json).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn violation_report_json_is_a_list() {
        let report = ViolationReport::single(ViolationKind::MissingGap, "required gap 3");
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"[{"kind":"missing_gap","detail":"required gap 3"}]"#
        );
    }
}
