//! Verify a handful of known labelings, watch one fail, and read the
//! difference set off a complete graph.

use dgraceful::{Graph, Labeling};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C_6 with d = 2: gaps must cover [1,7] except 4
    let hexagon = Labeling::new(Graph::cycle(6)?, 2, vec![0, 2, 3, 6, 1, 7])?;
    let spectrum = hexagon.verify_d_graceful().expect("2-graceful");
    println!("C_6 #1 realizes {:?}", spectrum.realized);
    println!("C_6 #1 alpha? {:?}", hexagon.verify_alpha());

    // a second labeling of the same cycle, this one an α-labeling
    let alpha = Labeling::new(Graph::cycle(6)?, 2, vec![0, 5, 2, 3, 1, 7])?;
    assert!(alpha.verify_d_graceful().is_ok());
    assert_eq!(alpha.verify_alpha(), Ok(true));
    let (low, high) = alpha.alpha_parts().unwrap();
    println!("C_6 #2 alpha parts: low {low:?}, high {high:?}");

    // break it and read the itemized report
    let broken = Labeling::new(Graph::cycle(6)?, 2, vec![0, 2, 3, 6, 1, 5])?;
    let report = broken.verify_d_graceful().unwrap_err();
    println!("\nbroken C_6:");
    for violation in &report.violations {
        println!("  {violation:?}");
    }

    // K_5 with d = 2 doubles as a relative difference set: the labels,
    // read in Z_24, cover everything outside the subgroup {0,6,12,18}
    let k5 = Labeling::new(Graph::complete(5)?, 2, vec![0, 1, 4, 9, 11])?;
    assert!(k5.verify_d_graceful().is_ok());
    println!("\nK_5 {{0,1,4,9,11}} as RDS: {:?}", k5.verify_rds_view());

    // {0,1,3,11,20} is NOT 2-graceful (20 is out of range) yet still an RDS
    let s_prime = Labeling::from_parts(Graph::complete(5)?, 2, 5, vec![0, 1, 3, 11, 20]);
    println!(
        "K_5 {{0,1,3,11,20}}: graceful {:?}, RDS {:?}",
        s_prime.verify_d_graceful().map(|_| "ok").map_err(|r| r.kinds()),
        s_prime.verify_rds_view()
    );
    Ok(())
}
