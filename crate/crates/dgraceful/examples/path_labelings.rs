//! Label paths for every divisor of the edge count, hitting all three
//! parameter regimes of the construction.

use dgraceful::labeling::admissible_divisors;
use dgraceful::{construct, ConstructionFamily, ConstructionRequest, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // e = 18 admits d ∈ {1,2,3,6,9,18}; d = 1 is the classical graceful
    // labeling, d = 18 the odd-graceful one
    let path = Graph::path(18)?;
    for d in admissible_divisors(&path) {
        let labeling = construct(&ConstructionRequest::new(ConstructionFamily::Path, 18, d))?;
        let gaps: Vec<usize> = labeling.forbidden_gaps();
        println!(
            "P_19 d={d:<2} m={:<2} labels 0..={:<2} forbidden {gaps:?}",
            labeling.m(),
            labeling.label_bound()
        );
        assert!(labeling.verify_d_graceful().is_ok());
        assert_eq!(labeling.verify_alpha(), Ok(true));
    }

    // the three regimes: m even / m odd d odd / m odd d even
    for (e, d) in [(4, 2), (9, 3), (6, 2)] {
        let labeling = construct(&ConstructionRequest::new(ConstructionFamily::Path, e, d))?;
        println!("P_{} d={d}: {:?}", e + 1, labeling.labels());
    }

    // d = e: every gap is odd
    let odd = construct(&ConstructionRequest::new(ConstructionFamily::Path, 6, 6))?;
    let spectrum = odd.verify_d_graceful().unwrap();
    assert!(spectrum.realized.iter().all(|g| g % 2 == 1));
    println!("P_7 d=6 realizes the odd gaps {:?}", spectrum.realized);
    Ok(())
}
