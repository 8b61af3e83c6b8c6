//! d-graceful α-labelings of stars, for every admissible d.

use super::{finalize, ConstructionError};
use crate::graph::Graph;
use crate::labeling::Labeling;

/// Labels the star with `e` edges: center 0, externals the admitted gap
/// values in increasing order of vertex id. Every gap is then realized
/// directly by the edge to its external vertex.
///
/// Any injection of the externals onto the admitted values works; taking
/// them in increasing order keeps output deterministic.
pub fn label_star(e: usize, d: usize) -> Result<Labeling, ConstructionError> {
    let graph = Graph::star(e)?;
    if d == 0 || e % d != 0 {
        return Err(ConstructionError::not_admissible(
            "star",
            format!("d = {d} does not divide e = {e}"),
        ));
    }
    let m = e / d;
    let mut slots = vec![Some(0)];
    slots.extend((1..d * (m + 1)).filter(|g| g % (m + 1) != 0).map(Some));
    finalize(graph, d, slots, true)
}
