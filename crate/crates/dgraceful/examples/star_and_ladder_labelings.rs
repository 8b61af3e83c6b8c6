//! Stars are d-graceful for every divisor; ladders L_{2k} need even k.

use dgraceful::constructions::ConstructionError;
use dgraceful::{construct, ConstructionFamily, ConstructionRequest};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the center sits on 0 and the leaves take the admitted gap values
    for d in [1, 2, 4, 8] {
        let star = construct(&ConstructionRequest::new(ConstructionFamily::Star, 8, d))?;
        assert_eq!(star.verify_alpha(), Ok(true));
        println!("S_8 d={d}: {:?}", star.labels());
    }

    println!();
    for k in [2, 4, 6, 8] {
        let ladder = construct(&ConstructionRequest::new(ConstructionFamily::LadderD2, k, 2))?;
        assert_eq!(ladder.verify_alpha(), Ok(true));
        println!("L_{:<2} d=2 ({} edges): {:?}", 2 * k, 3 * k - 2, ladder.labels());
    }

    // odd k is out of reach for this construction
    let err = construct(&ConstructionRequest::new(ConstructionFamily::LadderD2, 3, 2));
    match err {
        Err(ConstructionError::NotAdmissible { family, reason }) => {
            println!("\nL_6: {family} not admissible: {reason}");
        }
        other => panic!("expected NotAdmissible, got {other:?}"),
    }
    Ok(())
}
