//! Exhaustive backtracking oracle: enumerates every d-graceful (optionally
//! α) labeling of a small graph, independently of the closed-form
//! constructions, so the two can be cross-checked.
//!
//! The engine assigns labels to vertices in descending-degree order and
//! prunes on label reuse, forbidden gaps and gap reuse, tracking gap
//! availability in a bitset with the forbidden multiples pre-cleared. Any
//! assignment that survives to a leaf realizes all `e` admitted gaps exactly
//! once, i.e. is d-graceful by construction — emitted solutions are
//! nevertheless re-verified, since the search never trusts its own pruning.

use crate::graph::Graph;
use crate::labeling::{Labeling, LabelingError};
use std::ops::ControlFlow;

/// Stop exploring after this many label placements unless overridden.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// What to search for. Built with [`SearchConfig::new`], refined with the
/// builder methods.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    graph: Graph,
    d: usize,
    m: usize,
    require_alpha: bool,
    max_solutions: Option<usize>,
    symmetry_reduction: bool,
    node_budget: u64,
}

impl SearchConfig {
    /// Rejects inadmissible `d` up front — no search can succeed there.
    pub fn new(graph: Graph, d: usize) -> Result<SearchConfig, LabelingError> {
        let e = graph.size();
        if d == 0 || e == 0 || e % d != 0 {
            return Err(LabelingError::NotAdmissible { e, d });
        }
        Ok(SearchConfig {
            m: e / d,
            graph,
            d,
            require_alpha: false,
            max_solutions: None,
            symmetry_reduction: false,
            node_budget: DEFAULT_NODE_BUDGET,
        })
    }

    /// Keep only α-labelings. On a non-bipartite (or disconnected) graph the
    /// search then has no solutions by definition.
    pub fn require_alpha(mut self, on: bool) -> SearchConfig {
        self.require_alpha = on;
        self
    }

    /// Cap on collected solutions for [`search_all`]; `None` collects all.
    pub fn max_solutions(mut self, cap: Option<usize>) -> SearchConfig {
        self.max_solutions = cap;
        self
    }

    /// Emit exactly one labeling per complement pair `{f, d(m+1)-1-f}`: the
    /// one that is lexicographically no larger than its complement.
    pub fn symmetry_reduction(mut self, on: bool) -> SearchConfig {
        self.symmetry_reduction = on;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> SearchConfig {
        self.node_budget = budget;
        self
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
}

/// Everything [`search_all`] learned.
#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Verified solutions, sorted lexicographically by label vector.
    pub solutions: Vec<Labeling>,
    pub nodes_explored: u64,
    /// True iff the whole tree was exhausted (no budget stop, no cap stop).
    pub complete: bool,
}

/// Node count and completeness of one [`explore`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exploration {
    pub nodes_explored: u64,
    pub complete: bool,
}

/// Streams every solution's label vector (ordered by vertex id) through
/// `visit` in deterministic depth-first discovery order, without storing
/// anything. `visit` may stop the search early by returning `Break`.
///
/// This is the engine under [`search_all`] and [`exists`]; use it directly
/// to count or filter huge solution sets in constant memory. Note that
/// `max_solutions` is a collector concern and is ignored here.
pub fn explore(
    cfg: &SearchConfig,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Exploration {
    let n = cfg.graph.vertex_count();
    let label_count = cfg.d * (cfg.m + 1); // labels in [0, label_count-1]

    // α solutions only exist on connected bipartite graphs
    let alpha_mask: Option<Vec<bool>> = if cfg.require_alpha {
        match cfg.graph.bipartition() {
            Ok(Some(b)) => {
                let mut mask = vec![false; n];
                for &v in b.part_a() {
                    mask[v] = true;
                }
                Some(mask)
            }
            _ => {
                return Exploration {
                    nodes_explored: 0,
                    complete: true,
                }
            }
        }
    } else {
        None
    };

    // fail-first vertex order: descending degree, ties by id
    let adj = cfg.graph.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // neighbors already labeled when v is reached
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| adj[v].iter().copied().filter(|&w| pos[w] < pos[v]).collect())
        .collect();

    let mut gap_avail = Bitset::new(label_count);
    for g in 1..label_count {
        if g % (cfg.m + 1) != 0 {
            gap_avail.set(g);
        }
    }
    let mut engine = Engine {
        order,
        earlier,
        labels: vec![usize::MAX; n],
        label_used: Bitset::new(label_count),
        gap_avail,
        label_count,
        symmetry: cfg.symmetry_reduction,
        alpha_mask,
        nodes: 0,
        budget: cfg.node_budget,
        budget_hit: false,
    };
    let flow = engine.assign(0, &mut visit);
    Exploration {
        nodes_explored: engine.nodes,
        complete: flow.is_continue(),
    }
}

struct Engine {
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    labels: Vec<usize>,
    label_used: Bitset,
    gap_avail: Bitset,
    label_count: usize,
    symmetry: bool,
    alpha_mask: Option<Vec<bool>>,
    nodes: u64,
    budget: u64,
    budget_hit: bool,
}

impl Engine {
    fn assign(
        &mut self,
        depth: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == self.order.len() {
            if self.passes_filters() {
                return visit(&self.labels);
            }
            return ControlFlow::Continue(());
        }
        let v = self.order[depth];
        for cand in 0..self.label_count {
            if self.label_used.get(cand) {
                continue;
            }
            // complement symmetry: vertex 0 may not take a label above the
            // midpoint (ties at 2·cand = label_count-1 are settled at the leaf)
            if self.symmetry && v == 0 && 2 * cand > self.label_count - 1 {
                continue;
            }
            let mut placed = self.earlier[v].len();
            for i in 0..self.earlier[v].len() {
                let gap = cand.abs_diff(self.labels[self.earlier[v][i]]);
                if gap == 0 || !self.gap_avail.get(gap) {
                    placed = i;
                    break;
                }
                self.gap_avail.clear(gap);
            }
            if placed == self.earlier[v].len() {
                self.nodes += 1;
                self.labels[v] = cand;
                self.label_used.set(cand);
                let flow = if self.nodes >= self.budget {
                    self.budget_hit = true;
                    ControlFlow::Break(())
                } else {
                    self.assign(depth + 1, visit)
                };
                self.labels[v] = usize::MAX;
                self.label_used.clear(cand);
                if flow.is_break() {
                    self.restore_gaps(v, cand, placed);
                    return ControlFlow::Break(());
                }
            }
            self.restore_gaps(v, cand, placed);
        }
        ControlFlow::Continue(())
    }

    fn restore_gaps(&mut self, v: usize, cand: usize, placed: usize) {
        for i in 0..placed {
            self.gap_avail
                .set(cand.abs_diff(self.labels[self.earlier[v][i]]));
        }
    }

    fn passes_filters(&self) -> bool {
        if self.symmetry && !lex_le_complement(&self.labels, self.label_count - 1) {
            return false;
        }
        if let Some(mask) = &self.alpha_mask {
            let (mut lo_a, mut hi_a) = (usize::MAX, 0);
            let (mut lo_b, mut hi_b) = (usize::MAX, 0);
            for (v, &l) in self.labels.iter().enumerate() {
                if mask[v] {
                    lo_a = lo_a.min(l);
                    hi_a = hi_a.max(l);
                } else {
                    lo_b = lo_b.min(l);
                    hi_b = hi_b.max(l);
                }
            }
            if hi_a >= lo_b && hi_b >= lo_a {
                return false;
            }
        }
        true
    }
}

fn lex_le_complement(labels: &[usize], bound: usize) -> bool {
    for &l in labels {
        match l.cmp(&(bound - l)) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    true
}

/// Collects, sorts and re-verifies every solution (honoring the config's
/// solution cap and node budget).
pub fn search_all(cfg: &SearchConfig) -> SearchResult {
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let exploration = explore(cfg, |labels| {
        raw.push(labels.to_vec());
        match cfg.max_solutions {
            Some(cap) if raw.len() >= cap => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    let mut solutions: Vec<Labeling> = raw
        .into_iter()
        .map(|labels| {
            let l = Labeling::new(cfg.graph.clone(), cfg.d, labels)
                .expect("search emitted a structurally invalid labeling");
            l.verify_d_graceful()
                .unwrap_or_else(|report| panic!("search emitted a bad labeling: {report}"));
            if cfg.require_alpha {
                assert_eq!(l.verify_alpha(), Ok(true), "search emitted a non-α labeling");
            }
            l
        })
        .collect();
    solutions.sort_by(|a, b| a.labels().cmp(b.labels()));
    SearchResult {
        solutions,
        nodes_explored: exploration.nodes_explored,
        complete: exploration.complete,
    }
}

/// True iff at least one solution exists; stops at the first.
pub fn exists(cfg: &SearchConfig) -> bool {
    let mut found = false;
    explore(cfg, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// One construction/oracle comparison from [`cross_check`].
#[derive(Debug, Clone)]
pub struct CrossCheckCase {
    pub family: &'static str,
    pub size_param: usize,
    pub d: usize,
    pub e: usize,
    pub solutions: u64,
    pub construction_found: bool,
    pub complete: bool,
}

/// Runs the oracle over every construction-family instance with `e ≤ max_e`
/// and records whether the constructed labeling shows up among the search's
/// solutions (streamed; nothing is stored, so large counts are fine).
pub fn cross_check(max_e: usize) -> Vec<CrossCheckCase> {
    use crate::constructions::{construct, ConstructionFamily, ConstructionRequest};

    let mut requests = Vec::new();
    for e in 1..=max_e {
        for d in 1..=e {
            if e % d == 0 {
                requests.push(ConstructionRequest::new(ConstructionFamily::Path, e, d));
                requests.push(ConstructionRequest::new(ConstructionFamily::Star, e, d));
            }
        }
    }
    let mut k = 1;
    while 4 * k <= max_e {
        requests.push(ConstructionRequest::new(ConstructionFamily::Cycle4kD2, k, 2));
        requests.push(ConstructionRequest::new(ConstructionFamily::Cycle4kD4, k, 4));
        k += 1;
    }
    let mut k = 3;
    while 2 * k <= max_e {
        requests.push(ConstructionRequest::new(
            ConstructionFamily::Cycle2kOddD2,
            k,
            2,
        ));
        k += 2;
    }
    let mut k = 2;
    while 3 * k - 2 <= max_e {
        requests.push(ConstructionRequest::new(ConstructionFamily::LadderD2, k, 2));
        k += 2;
    }

    requests
        .iter()
        .map(|req| {
            let labeling = construct(req).expect("sweep request must be constructible");
            let cfg = SearchConfig::new(labeling.graph().clone(), req.d)
                .expect("constructed labeling has admissible d");
            let mut found = false;
            let mut count = 0u64;
            let exploration = explore(&cfg, |labels| {
                count += 1;
                found |= labels == labeling.labels();
                ControlFlow::Continue(())
            });
            CrossCheckCase {
                family: req.family.name(),
                size_param: req.size_param,
                d: req.d,
                e: labeling.graph().size(),
                solutions: count,
                construction_found: found,
                complete: exploration.complete,
            }
        })
        .collect()
}

/// Plain bitset over `0..n`.
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(n: usize) -> Bitset {
        Bitset {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }
}
