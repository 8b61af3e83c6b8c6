//! The three cycle families: C_{4k} with d = 2 and d = 4 (both α), and
//! C_{2k} for odd k with d = 2 (never α — the search proves it for C_10).

use dgraceful::{construct, search_all, ConstructionFamily, ConstructionRequest, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in [1, 2, 3, 5] {
        let c = construct(&ConstructionRequest::new(ConstructionFamily::Cycle4kD2, k, 2))?;
        assert_eq!(c.verify_alpha(), Ok(true));
        println!("C_{:<2} d=2: {:?}", 4 * k, c.labels());
    }
    println!();
    for k in [1, 2, 4, 5] {
        let c = construct(&ConstructionRequest::new(ConstructionFamily::Cycle4kD4, k, 4))?;
        assert_eq!(c.verify_alpha(), Ok(true));
        println!("C_{:<2} d=4: {:?}", 4 * k, c.labels());
    }
    println!();
    for k in [3, 5, 7, 9, 11] {
        let c = construct(&ConstructionRequest::new(ConstructionFamily::Cycle2kOddD2, k, 2))?;
        assert!(c.verify_d_graceful().is_ok());
        println!("C_{:<2} d=2: {:?} (alpha: {:?})", 2 * k, c.labels(), c.verify_alpha());
    }

    // C_10 really has no 2-graceful α-labeling: exhaustive search comes up dry
    let cfg = SearchConfig::new(dgraceful::Graph::cycle(10)?, 2)?.require_alpha(true);
    let result = search_all(&cfg);
    assert!(result.complete && result.solutions.is_empty());
    println!("\nC_10 d=2 α-labelings: none ({} nodes searched)", result.nodes_explored);
    Ok(())
}
