//! From labelings to relative difference families: one base map per
//! labeling, or n stacked maps from an α-labeling.

use dgraceful::{df_from_alpha, df_from_labeling, verify_df, Graph, Labeling};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = Labeling::new(Graph::cycle(6)?, 2, vec![0, 5, 2, 3, 1, 7])?;

    // n = 1: the labels themselves, read in Z_16 relative to 4Z_16
    let family = df_from_labeling(&alpha)?;
    println!(
        "({}, {}, C_6, 1)-DF: maps {:?}",
        family.modulus(),
        family.forbidden_order(),
        family.maps()
    );
    assert!(verify_df(&family).ok);

    // n = 2 and 3: each extra map shifts the high part by d + e = 8
    for n in [2, 3] {
        let family = df_from_alpha(&alpha, n)?;
        println!(
            "({}, {}, C_6, 1)-DF: maps {:?}",
            family.modulus(),
            family.forbidden_order(),
            family.maps()
        );
        assert!(verify_df(&family).ok);
    }

    // coverage checking is exact: swap one entry and every defect is listed
    let family = df_from_labeling(&alpha)?;
    let mut maps = family.maps().to_vec();
    maps[0][1] = 6; // collides with a subgroup difference
    let broken = dgraceful::DifferenceFamily::new(
        family.modulus(),
        family.forbidden_order(),
        family.graph().clone(),
        maps,
    )?;
    let report = verify_df(&broken);
    println!("\nbroken map: ok={}", report.ok);
    println!("  undercovered   {:?}", report.undercovered);
    println!("  overcovered    {:?}", report.overcovered);
    println!("  subgroup hits  {:?}", report.subgroup_hits);
    Ok(())
}
