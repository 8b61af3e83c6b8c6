//! Graphviz output. Both emitters are deterministic: same input, same
//! bytes, so goldens and diffs stay stable.

use crate::decomposition::Decomposition;
use crate::labeling::Labeling;
use std::fmt::Write;

/// Base-block edge colors, cycled when a family has more maps.
const PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Renders the labeled graph: every node shows its label value, every edge
/// its gap.
pub fn labeling_dot(labeling: &Labeling) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph labeling {{");
    let _ = writeln!(
        out,
        "  // {} with d = {}, labels in [0, {}]",
        labeling.graph(),
        labeling.d(),
        labeling.label_bound()
    );
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 0..labeling.graph().vertex_count() {
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", labeling.labels()[v]);
    }
    for (a, b) in labeling.graph().canonical_edges() {
        let gap = labeling.labels()[a].abs_diff(labeling.labels()[b]);
        let _ = writeln!(out, "  v{a} -- v{b} [label=\"{gap}\"];");
    }
    let _ = writeln!(out, "}}");
    out
}

/// Renders the multipartite host with one cluster per part and the base
/// blocks drawn in distinct colors; translated copies are omitted to keep
/// the picture readable.
pub fn decomposition_dot(dec: &Decomposition) -> String {
    let spec = dec.spec();
    let mut out = String::new();
    let _ = writeln!(out, "graph decomposition {{");
    let _ = writeln!(
        out,
        "  // {} decomposed into copies of {}",
        spec.name(),
        dec.graph()
    );
    let _ = writeln!(out, "  node [shape=circle];");
    for (i, coset) in spec.cosets().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_part{i} {{");
        let _ = writeln!(out, "    label=\"part {i}\";");
        let _ = writeln!(out, "    style=dashed;");
        for v in coset {
            let _ = writeln!(out, "    {v};");
        }
        let _ = writeln!(out, "  }}");
    }
    for (b, block) in dec.base_blocks().iter().enumerate() {
        let color = PALETTE[b % PALETTE.len()];
        let _ = writeln!(out, "  // base block {b}");
        for (x, y) in dec.graph().canonical_edges() {
            let (mut u, mut v) = (block[x], block[y]);
            if u > v {
                std::mem::swap(&mut u, &mut v);
            }
            let _ = writeln!(out, "  {u} -- {v} [color=\"{color}\"];");
        }
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct, ConstructionFamily, ConstructionRequest};
    use crate::decomposition::expand;
    use crate::diff_family::df_from_labeling;
    use crate::graph::Graph;

    #[test]
    fn single_edge_labeling_golden() {
        let labeling =
            Labeling::new(Graph::path(1).unwrap(), 1, vec![0, 1]).unwrap();
        assert_eq!(
            labeling_dot(&labeling),
            "graph labeling {\n\
             \x20 // P_2 with d = 1, labels in [0, 1]\n\
             \x20 node [shape=circle];\n\
             \x20 v0 [label=\"0\"];\n\
             \x20 v1 [label=\"1\"];\n\
             \x20 v0 -- v1 [label=\"1\"];\n\
             }\n"
        );
    }

    #[test]
    fn labeling_dot_lists_every_vertex_and_edge() {
        let labeling = construct(&ConstructionRequest::new(
            ConstructionFamily::Cycle2kOddD2,
            3,
            2,
        ))
        .unwrap();
        let dot = labeling_dot(&labeling);
        assert!(dot.contains("v0 [label=\"0\"];"));
        assert!(dot.contains("v1 [label=\"5\"];"));
        assert!(dot.contains("v0 -- v5 [label=\"7\"];"));
        assert_eq!(dot.matches(" -- ").count(), 6);
    }

    #[test]
    fn decomposition_dot_shows_parts_and_base_blocks() {
        let labeling = construct(&ConstructionRequest::new(
            ConstructionFamily::Cycle2kOddD2,
            3,
            2,
        ))
        .unwrap();
        let dec = expand(&df_from_labeling(&labeling).unwrap()).unwrap();
        let dot = decomposition_dot(&dec);
        assert!(dot.contains("// K_{4x4} decomposed into copies of C_6"));
        assert_eq!(dot.matches("subgraph cluster_part").count(), 4);
        // part 0 is the coset {0, 4, 8, 12}
        assert!(dot.contains("    12;"));
        assert_eq!(dot.matches("// base block").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("[color=\"#1b9e77\"]"));
    }

    #[test]
    fn emitters_are_deterministic() {
        let labeling = construct(&ConstructionRequest::new(ConstructionFamily::Path, 8, 2))
            .unwrap();
        assert_eq!(labeling_dot(&labeling), labeling_dot(&labeling));
        let dec = expand(&df_from_labeling(&labeling).unwrap()).unwrap();
        assert_eq!(decomposition_dot(&dec), decomposition_dot(&dec));
    }
}
