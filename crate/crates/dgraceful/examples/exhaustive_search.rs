//! The backtracking oracle on small instances: full enumeration, existence
//! checks, α restriction, and complement symmetry reduction.

use dgraceful::{exists, search_all, Graph, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // all graceful labelings of P_4 — exactly four
    let result = search_all(&SearchConfig::new(Graph::path(3)?, 1)?);
    println!("P_4 graceful labelings ({} nodes):", result.nodes_explored);
    for solution in &result.solutions {
        println!("  {:?}", solution.labels());
    }

    // K_5 is 2-graceful but not graceful
    println!("\nK_5 d=1 exists: {}", exists(&SearchConfig::new(Graph::complete(5)?, 1)?));
    println!("K_5 d=2 exists: {}", exists(&SearchConfig::new(Graph::complete(5)?, 2)?));

    // restricting C_6 to α-labelings thins the solution set
    let every = search_all(&SearchConfig::new(Graph::cycle(6)?, 2)?);
    let alpha = search_all(&SearchConfig::new(Graph::cycle(6)?, 2)?.require_alpha(true));
    println!("\nC_6 d=2: {} labelings, {} of them α", every.solutions.len(), alpha.solutions.len());

    // complement symmetry halves the work: every labeling pairs with
    // bound - f, and the reduced search keeps one of each pair
    let reduced = search_all(&SearchConfig::new(Graph::cycle(6)?, 2)?.symmetry_reduction(true));
    println!(
        "symmetry reduction: {} representatives ({} vs {} nodes)",
        reduced.solutions.len(),
        reduced.nodes_explored,
        every.nodes_explored
    );
    assert_eq!(reduced.solutions.len() * 2, every.solutions.len());

    // budgets make the oracle safe to point at anything
    let capped = search_all(&SearchConfig::new(Graph::cycle(14)?, 2)?.node_budget(5_000));
    println!(
        "\nC_14 with a 5000-node budget: {} solutions so far, complete: {}",
        capped.solutions.len(),
        capped.complete
    );
    Ok(())
}
