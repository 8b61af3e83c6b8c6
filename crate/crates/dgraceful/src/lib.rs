//! d-graceful labelings, relative difference families, and cyclic graph
//! decompositions.
//!
//! A labeling `f` of a graph with `e = d·m` edges is *d-graceful* when it
//! injects the vertices into `[0, d(m+1) - 1]` and the edge gaps
//! `|f(a) - f(b)|` realize every value in that range except the multiples
//! of `m + 1`, each exactly once. `d = 1` is the classical graceful case
//! and `d = e` the odd-graceful case. An *α*-labeling additionally keeps
//! the labels of one side of a bipartition entirely below the other side's.
//!
//! Every d-graceful labeling linearizes into a relative difference family:
//! read the labels in `Z_{2d(m+1)}` and the edge differences (both signs)
//! cover the group exactly once outside its subgroup of order `2d`. An
//! α-labeling stretches further: for every `n ≥ 1` it yields `n` base
//! blocks in `Z_{2dn(m+1)}`. Translating the base blocks through the group
//! then decomposes a complete multipartite graph `K_{p×q}` into copies of
//! the original graph, with the parts sitting on the cosets of the
//! forbidden subgroup.
//!
//! The crate is organized around that pipeline:
//!
//! * [`graph`] — the graph families ([`Graph::path`], [`Graph::star`],
//!   [`Graph::cycle`], [`Graph::ladder`], [`Graph::complete`], custom);
//! * [`labeling`] — [`Labeling`] with its verifiers and violation reports;
//! * [`constructions`] — closed-form labelings for paths, stars, the two
//!   `C_{4k}` families, odd `C_{2k}`, and even-`k` ladders;
//! * [`diff_family`] — [`df_from_labeling`], [`df_from_alpha`] and the
//!   exact-coverage checker [`verify_df`];
//! * [`decomposition`] — [`expand`] plus an independent coverage /
//!   automorphism verifier that never trusts the expansion;
//! * [`search`] — an exhaustive backtracking oracle for small graphs;
//! * [`sweep`] — the construct → verify → difference family → decomposition
//!   regression matrix;
//! * [`dot`] — Graphviz renderings of labelings and decompositions.
//!
//! The `examples/` directory walks through each capability end to end; a
//! thin `dgraceful` binary wraps the same entry points for scripting.
//!
//! ```
//! use dgraceful::{Graph, Labeling, df_from_labeling, expand, verify_decomposition};
//!
//! // the 2-graceful C_6 labeling with labels {0,5,2,3,1,7}
//! let labeling = Labeling::new(Graph::cycle(6)?, 2, vec![0, 5, 2, 3, 1, 7])?;
//! assert!(labeling.verify_d_graceful().is_ok());
//! assert_eq!(labeling.verify_alpha(), Ok(true));
//!
//! // one base block mod 16 → sixteen translated hexagons tiling K_{4×4}
//! let family = df_from_labeling(&labeling)?;
//! let decomposition = expand(&family)?;
//! assert_eq!(decomposition.blocks().len(), 16);
//! assert!(verify_decomposition(&decomposition).ok);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod constructions;
pub mod decomposition;
pub mod diff_family;
pub mod dot;
pub mod graph;
pub mod labeling;
pub mod search;
pub mod sweep;

pub use constructions::{construct, ConstructionError, ConstructionFamily, ConstructionRequest};
pub use decomposition::{
    expand, verify_decomposition, verify_decomposition_with_cap, Decomposition,
    DecompositionError, DecompositionReport, MultipartiteSpec,
};
pub use diff_family::{
    df_from_alpha, df_from_labeling, verify_df, DfCoverageReport, DfError, DifferenceFamily,
};
pub use dot::{decomposition_dot, labeling_dot};
pub use graph::{Family, Graph, GraphError};
pub use labeling::{
    admissible_divisors, is_cyclic_rds, Labeling, LabelingError, Violation, ViolationKind,
    ViolationReport,
};
pub use search::{exists, search_all, SearchConfig, SearchResult};
pub use sweep::{sweep, SweepBounds, SweepReport, SweepRow};
