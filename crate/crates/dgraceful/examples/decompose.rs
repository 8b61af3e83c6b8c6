//! Expand difference families into cyclic decompositions of complete
//! multipartite graphs and verify the edge partition independently.

use dgraceful::decomposition::decomposition_summary;
use dgraceful::{
    construct, df_from_alpha, df_from_labeling, expand, verify_decomposition,
    ConstructionFamily, ConstructionRequest, Graph, Labeling,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C_6 → K_{4×4}: 16 translated hexagons cover all 96 cross edges
    let alpha = Labeling::new(Graph::cycle(6)?, 2, vec![0, 5, 2, 3, 1, 7])?;
    let dec = expand(&df_from_labeling(&alpha)?)?;
    let spec = dec.spec();
    println!(
        "{}: {} blocks × {} edges = {}",
        spec.name(),
        dec.blocks().len(),
        dec.graph().size(),
        spec.edge_count()
    );
    println!("base block  {:?}", dec.base_blocks()[0]);
    println!("translate 1 {:?}", dec.blocks()[1]);
    assert!(verify_decomposition(&dec).ok);

    // n = 2 doubles the group: C_6 → K_{4×8}
    let dec2 = expand(&df_from_alpha(&alpha, 2)?)?;
    println!(
        "\n{}: {} blocks, {} edges, verified {}",
        dec2.spec().name(),
        dec2.blocks().len(),
        dec2.spec().edge_count(),
        verify_decomposition(&dec2).ok
    );

    // a ladder host: L_16 with d = 2 tiles K_{12×4}
    let ladder = construct(&ConstructionRequest::new(ConstructionFamily::LadderD2, 8, 2))?;
    let dec3 = expand(&df_from_labeling(&ladder)?)?;
    let summary = decomposition_summary(&dec3);
    println!(
        "\n{}: p={} q={} blocks={} orbit lengths {:?}",
        dec3.spec().name(),
        summary.p,
        summary.q,
        summary.blocks,
        summary.orbit_lengths
    );
    assert!(verify_decomposition(&dec3).ok);

    // tamper with a block and the checker names every missing edge
    let mut blocks = dec.blocks().to_vec();
    blocks.pop();
    let broken = dgraceful::Decomposition::from_parts(
        dec.spec(),
        dec.graph().clone(),
        dec.base_blocks().to_vec(),
        blocks,
    );
    let report = verify_decomposition(&broken);
    println!(
        "\nafter deleting a block: ok={} uncovered={:?}",
        report.ok, report.uncovered
    );
    Ok(())
}
