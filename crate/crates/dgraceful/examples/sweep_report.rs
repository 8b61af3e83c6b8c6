//! Run the construction → verification → difference family → decomposition
//! matrix over modest bounds and print the outcome per instance.

use dgraceful::{sweep, SweepBounds};

fn main() {
    let bounds = SweepBounds::default().with_max_e(20).with_max_k(6);
    let report = sweep(&bounds);

    let cell = |s: Option<bool>| match s {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "-",
    };
    println!(
        "{:<12} {:>5} {:>3} {:>3} {:>4}  {:<5} {:<5} {:<4} {:<4}",
        "family", "param", "e", "d", "v", "label", "alpha", "df", "dec"
    );
    for row in &report.rows {
        println!(
            "{:<12} {:>5} {:>3} {:>3} {:>4}  {:<5} {:<5} {:<4} {:<4}",
            row.family,
            row.size_param,
            row.e,
            row.d,
            row.v,
            if row.label_ok { "pass" } else { "FAIL" },
            if row.alpha { "yes" } else { "no" },
            cell(row.df_ok),
            cell(row.decomposition_ok),
        );
    }
    println!(
        "\n{} instances, {} failures",
        report.rows.len(),
        report.failures().len()
    );
    assert!(report.ok());
}
