//! End-to-end regression sweep: construct every family instance inside the
//! bounds, verify the labeling (and the α property where the family claims
//! it), then push each labeling through the difference-family and
//! decomposition pipeline while the group stays small enough.

use crate::constructions::{construct, ConstructionFamily, ConstructionRequest};
use crate::decomposition::{expand, verify_decomposition_with_cap, DEFAULT_MATERIALIZE_CAP};
use crate::diff_family::{df_from_alpha, df_from_labeling, verify_df, DifferenceFamily};
use crate::labeling::Labeling;
use serde::Serialize;

/// How far the sweep reaches per family, plus pipeline cut-offs.
#[derive(Debug, Clone, Serialize)]
pub struct SweepBounds {
    /// Largest `e` for paths and stars (every divisor `d` of each `e`).
    pub max_e: usize,
    /// Largest `k` for the two `C_{4k}` families.
    pub max_cycle4_k: usize,
    /// Largest odd `k` for the `C_{2k}` family.
    pub max_cycle2_k: usize,
    /// Largest even `k` for ladders `L_{2k}`.
    pub max_ladder_k: usize,
    /// Run the difference-family / decomposition stages only while the
    /// group order `2d(m+1)` stays at or below this.
    pub v_cap: usize,
    /// Coverage tables larger than `cap²` cells are checked in chunks.
    pub materialize_cap: usize,
}

impl Default for SweepBounds {
    fn default() -> SweepBounds {
        SweepBounds {
            max_e: 60,
            max_cycle4_k: 25,
            max_cycle2_k: 49,
            max_ladder_k: 30,
            v_cap: 200,
            materialize_cap: DEFAULT_MATERIALIZE_CAP,
        }
    }
}

impl SweepBounds {
    /// Clamp every cycle/ladder size parameter at once (the CLI's `--max-k`).
    pub fn with_max_k(mut self, k: usize) -> SweepBounds {
        self.max_cycle4_k = k;
        self.max_cycle2_k = k;
        self.max_ladder_k = k;
        self
    }

    pub fn with_max_e(mut self, e: usize) -> SweepBounds {
        self.max_e = e;
        self
    }

    /// Every request the sweep will run, in a fixed reporting order.
    pub fn requests(&self) -> Vec<ConstructionRequest> {
        let mut reqs = Vec::new();
        for e in 1..=self.max_e {
            for d in 1..=e {
                if e % d == 0 {
                    reqs.push(ConstructionRequest::new(ConstructionFamily::Path, e, d));
                }
            }
        }
        for e in 1..=self.max_e {
            for d in 1..=e {
                if e % d == 0 {
                    reqs.push(ConstructionRequest::new(ConstructionFamily::Star, e, d));
                }
            }
        }
        for k in 1..=self.max_cycle4_k {
            reqs.push(ConstructionRequest::new(ConstructionFamily::Cycle4kD2, k, 2));
        }
        for k in 1..=self.max_cycle4_k {
            reqs.push(ConstructionRequest::new(ConstructionFamily::Cycle4kD4, k, 4));
        }
        let mut k = 3;
        while k <= self.max_cycle2_k {
            reqs.push(ConstructionRequest::new(
                ConstructionFamily::Cycle2kOddD2,
                k,
                2,
            ));
            k += 2;
        }
        let mut k = 2;
        while k <= self.max_ladder_k {
            reqs.push(ConstructionRequest::new(ConstructionFamily::LadderD2, k, 2));
            k += 2;
        }
        reqs
    }
}

/// Outcome of one `(family, size, d)` pipeline run. `None` stages were
/// skipped (group order above the cap, or `n = 2` without an α-labeling).
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub family: &'static str,
    pub size_param: usize,
    pub e: usize,
    pub d: usize,
    /// Group order `2d(m+1)` the `n = 1` difference family lives in.
    pub v: usize,
    pub label_ok: bool,
    pub alpha_claimed: bool,
    pub alpha: bool,
    pub df_ok: Option<bool>,
    pub decomposition_ok: Option<bool>,
    pub df_n2_ok: Option<bool>,
    pub decomposition_n2_ok: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> Vec<&SweepRow> {
        self.rows.iter().filter(|r| !r.ok).collect()
    }
}

/// Runs the full matrix under `bounds` and reports one row per instance.
pub fn sweep(bounds: &SweepBounds) -> SweepReport {
    let rows = bounds
        .requests()
        .iter()
        .map(|req| run_case(req, bounds))
        .collect();
    SweepReport { rows }
}

fn run_case(req: &ConstructionRequest, bounds: &SweepBounds) -> SweepRow {
    let alpha_claimed = req.family.claims_alpha();
    let mut row = SweepRow {
        family: req.family.name(),
        size_param: req.size_param,
        e: 0,
        d: req.d,
        v: 0,
        label_ok: false,
        alpha_claimed,
        alpha: false,
        df_ok: None,
        decomposition_ok: None,
        df_n2_ok: None,
        decomposition_n2_ok: None,
        ok: false,
    };
    let labeling = match construct(req) {
        Ok(l) => l,
        Err(_) => return row,
    };
    row.e = labeling.graph().size();
    row.v = 2 * labeling.d() * (labeling.m() + 1);
    row.label_ok = labeling.verify_d_graceful().is_ok();
    row.alpha = labeling.verify_alpha() == Ok(true);

    if row.label_ok && row.v <= bounds.v_cap {
        let (df_ok, dec_ok) = pipeline(df_from_labeling(&labeling).ok(), bounds);
        row.df_ok = Some(df_ok);
        row.decomposition_ok = Some(dec_ok);
        if row.alpha {
            let (df_ok, dec_ok) = pipeline(df_from_alpha(&labeling, 2).ok(), bounds);
            row.df_n2_ok = Some(df_ok);
            row.decomposition_n2_ok = Some(dec_ok);
        }
    }

    row.ok = row.label_ok
        && (!alpha_claimed || row.alpha)
        && row.df_ok != Some(false)
        && row.decomposition_ok != Some(false)
        && row.df_n2_ok != Some(false)
        && row.decomposition_n2_ok != Some(false);
    row
}

fn pipeline(df: Option<DifferenceFamily>, bounds: &SweepBounds) -> (bool, bool) {
    let Some(df) = df else { return (false, false) };
    if !verify_df(&df).ok {
        return (false, false);
    }
    let Ok(dec) = expand(&df) else {
        return (true, false);
    };
    let report = verify_decomposition_with_cap(&dec, bounds.materialize_cap);
    (true, report.ok)
}

/// Convenience wrapper: sweep a single labeling through the same pipeline
/// stages the matrix uses, with default caps.
pub fn pipeline_ok(labeling: &Labeling, n: usize) -> bool {
    let df = if n == 1 {
        df_from_labeling(labeling).ok()
    } else {
        df_from_alpha(labeling, n).ok()
    };
    pipeline(df, &SweepBounds::default()) == (true, true)
}
