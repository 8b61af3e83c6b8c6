use clap::{ArgGroup, Parser, Subcommand};
use dgraceful::constructions::{construct, ConstructionFamily, ConstructionRequest};
use dgraceful::decomposition::{expand, verify_decomposition_with_cap, DEFAULT_MATERIALIZE_CAP};
use dgraceful::diff_family::{df_from_alpha, df_from_labeling, verify_df, DifferenceFamily};
use dgraceful::dot::{decomposition_dot, labeling_dot};
use dgraceful::graph::Graph;
use dgraceful::labeling::{Labeling, Violation, ViolationReport};
use dgraceful::search::{explore, SearchConfig, DEFAULT_NODE_BUDGET};
use dgraceful::sweep::{sweep, SweepBounds, SweepRow};
use dgraceful::Decomposition;
use serde_json::json;
use std::fmt::Display;
use std::fs;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Machine output goes to stdout as JSON (one document or one JSON line per
/// result); `--pretty` swaps in human-readable summaries. Verification
/// failures exit 1 with a JSON report on stderr; bad flags exit 2.
#[derive(Parser)]
#[command(name = "dgraceful", disable_version_flag = true)]
struct Cli {
    /// Human-readable summaries on stdout instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// key=value file overriding sweep bounds and the coverage cap
    /// (keys: max_e, max_k, v_cap, materialize_cap).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a closed-form labeling for one of the proven families.
    Construct {
        /// path | star | cycle4k-d2 | cycle4k-d4 | cycle2k-odd | ladder
        #[arg(long)]
        family: String,
        /// Edge count (paths and stars).
        #[arg(long)]
        e: Option<usize>,
        /// Size parameter k (cycle and ladder families).
        #[arg(long)]
        k: Option<usize>,
        /// Divisor of e; optional for families with a fixed d.
        #[arg(long)]
        d: Option<usize>,
        /// Write the labeling JSON here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a labeling file; exits 1 with a violation report if it fails.
    Verify {
        #[arg(long, value_name = "PATH")]
        labeling: PathBuf,
        /// Also require the α property (one part's labels below the other's).
        #[arg(long)]
        alpha: bool,
    },
    /// Linearize a labeling into a relative difference family.
    Df {
        #[arg(long, value_name = "PATH")]
        labeling: PathBuf,
        /// Number of base maps; n > 1 needs an α-labeling.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Write the family JSON here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Expand a labeling or difference family into the full cyclic
    /// decomposition of the multipartite host.
    #[command(group(ArgGroup::new("source").required(true).args(["labeling", "df"])))]
    Expand {
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        df: Option<PathBuf>,
        /// Number of base maps when starting from a labeling.
        #[arg(long)]
        n: Option<usize>,
        /// Independently verify the edge partition before reporting.
        #[arg(long)]
        verify: bool,
        /// Write the decomposition JSON here (it is not printed otherwise).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate d-graceful labelings of a graph file.
    Search {
        #[arg(long, value_name = "PATH")]
        graph: PathBuf,
        #[arg(long)]
        d: usize,
        /// Keep only α-labelings.
        #[arg(long)]
        alpha: bool,
        /// Stream every solution as a JSON line; default stops at the first.
        #[arg(long)]
        all: bool,
        /// Cap on streamed solutions (with --all).
        #[arg(long)]
        max_solutions: Option<usize>,
        /// Node budget; the search reports complete=false when it runs out.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the construction/verification/decomposition matrix and print a
    /// pass/fail table.
    Sweep {
        #[arg(long)]
        max_e: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Render a labeling or decomposition as Graphviz DOT.
    #[command(name = "export-dot")]
    #[command(group(ArgGroup::new("source").required(true).args(["labeling", "decomposition"])))]
    ExportDot {
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        decomposition: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

/// stderr payload for exit code 1.
struct Failure(String);

fn fail(msg: impl Display) -> Failure {
    Failure(json!({ "error": msg.to_string() }).to_string())
}

fn usage(msg: impl Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    eprintln!("dgraceful {}", env!("CARGO_PKG_VERSION"));
    let config = FileConfig::load(cli.config.as_deref());
    match run(cli.command, cli.pretty, &config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(payload)) => {
            eprintln!("{payload}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, pretty: bool, config: &FileConfig) -> Result<(), Failure> {
    match command {
        Command::Construct { family, e, k, d, out } => cmd_construct(&family, e, k, d, out.as_deref(), pretty),
        Command::Verify { labeling, alpha } => cmd_verify(&labeling, alpha, pretty),
        Command::Df { labeling, n, out } => cmd_df(&labeling, n, out.as_deref(), pretty),
        Command::Expand { labeling, df, n, verify, out } => {
            cmd_expand(labeling.as_deref(), df.as_deref(), n, verify, out.as_deref(), pretty, config)
        }
        Command::Search { graph, d, alpha, all, max_solutions, budget } => {
            cmd_search(&graph, d, alpha, all, max_solutions, budget, pretty)
        }
        Command::Sweep { max_e, max_k } => cmd_sweep(max_e, max_k, pretty, config),
        Command::ExportDot { labeling, decomposition, out } => {
            cmd_export_dot(labeling.as_deref(), decomposition.as_deref(), out.as_deref(), pretty)
        }
    }
}

// ---------------------------------------------------------------- construct

fn cmd_construct(
    family: &str,
    e: Option<usize>,
    k: Option<usize>,
    d: Option<usize>,
    out: Option<&Path>,
    pretty: bool,
) -> Result<(), Failure> {
    const ALL: [ConstructionFamily; 6] = [
        ConstructionFamily::Path,
        ConstructionFamily::Star,
        ConstructionFamily::Cycle4kD2,
        ConstructionFamily::Cycle4kD4,
        ConstructionFamily::Cycle2kOddD2,
        ConstructionFamily::LadderD2,
    ];
    let Some(fam) = ALL.into_iter().find(|f| f.name() == family) else {
        usage(format!(
            "unknown family `{family}` (expected one of: {})",
            ALL.map(|f| f.name()).join(", ")
        ));
    };
    let size_param = match fam {
        ConstructionFamily::Path | ConstructionFamily::Star => {
            if k.is_some() {
                usage(format!("family `{family}` takes --e, not --k"));
            }
            e.unwrap_or_else(|| usage(format!("family `{family}` requires --e")))
        }
        _ => {
            if e.is_some() {
                usage(format!("family `{family}` takes --k, not --e"));
            }
            k.unwrap_or_else(|| usage(format!("family `{family}` requires --k")))
        }
    };
    let d = match (d, fam.fixed_d()) {
        (Some(d), _) => d,
        (None, Some(fixed)) => fixed,
        (None, None) => usage(format!("family `{family}` requires --d")),
    };

    let labeling = construct(&ConstructionRequest::new(fam, size_param, d)).map_err(fail)?;
    let line = format!(
        "{}, d = {}: ({})",
        labeling.graph(),
        labeling.d(),
        join(labeling.labels())
    );
    emit_document(out, &to_json(&labeling)?, &line, pretty)
}

// ------------------------------------------------------------------- verify

fn cmd_verify(path: &Path, alpha: bool, pretty: bool) -> Result<(), Failure> {
    let labeling: Labeling = read_json(path)?;
    let mut violations: Vec<Violation> = Vec::new();
    let spectrum = match labeling.verify_d_graceful() {
        Ok(s) => Some(s),
        Err(report) => {
            violations.extend(report.violations);
            None
        }
    };
    let alpha_ok = if alpha {
        match labeling.alpha_parts() {
            Ok(_) => Some(true),
            Err(report) => {
                violations.extend(report.violations);
                Some(false)
            }
        }
    } else {
        None
    };

    if !violations.is_empty() {
        if pretty {
            println!(
                "{}, d = {}: FAILED ({} violation{})",
                labeling.graph(),
                labeling.d(),
                violations.len(),
                if violations.len() == 1 { "" } else { "s" }
            );
        } else {
            println!("{}", json!({ "verified": false }));
        }
        return Err(Failure(to_json(&ViolationReport { violations })?));
    }

    if pretty {
        let bound = labeling.label_bound();
        let forbidden = labeling.forbidden_gaps();
        let mut line = format!(
            "{}, d = {}: {}-graceful, spectrum [1, {bound}]",
            labeling.graph(),
            labeling.d(),
            labeling.d()
        );
        if !forbidden.is_empty() {
            line.push_str(&format!(" \\ {{{}}}", join(&forbidden)));
        }
        if let Some(a) = alpha_ok {
            line.push_str(if a { ", alpha" } else { ", not alpha" });
        }
        println!("{line}");
    } else {
        let mut doc = json!({ "verified": true, "spectrum": spectrum });
        if let Some(a) = alpha_ok {
            doc["alpha"] = json!(a);
        }
        println!("{doc}");
    }
    Ok(())
}

// ----------------------------------------------------------------------- df

fn cmd_df(path: &Path, n: usize, out: Option<&Path>, pretty: bool) -> Result<(), Failure> {
    if n == 0 {
        usage("--n must be at least 1");
    }
    let labeling: Labeling = read_json(path)?;
    let family = build_df(&labeling, n)?;
    let coverage = verify_df(&family);
    if !coverage.ok {
        return Err(Failure(to_json(&coverage)?));
    }
    let line = format!(
        "({}, {}, {}, 1) difference family: {} base map{}, verified",
        family.modulus(),
        family.forbidden_order(),
        family.graph(),
        family.maps().len(),
        if family.maps().len() == 1 { "" } else { "s" }
    );
    emit_document(out, &to_json(&family)?, &line, pretty)
}

fn build_df(labeling: &Labeling, n: usize) -> Result<DifferenceFamily, Failure> {
    if n == 1 {
        df_from_labeling(labeling).map_err(fail)
    } else {
        df_from_alpha(labeling, n).map_err(fail)
    }
}

// ------------------------------------------------------------------- expand

fn cmd_expand(
    labeling: Option<&Path>,
    df: Option<&Path>,
    n: Option<usize>,
    verify: bool,
    out: Option<&Path>,
    pretty: bool,
    config: &FileConfig,
) -> Result<(), Failure> {
    let family = match (labeling, df) {
        (Some(path), None) => {
            let labeling: Labeling = read_json(path)?;
            build_df(&labeling, n.unwrap_or(1))?
        }
        (None, Some(path)) => {
            if n.is_some() {
                usage("--n applies only when expanding from --labeling");
            }
            read_json::<DifferenceFamily>(path)?
        }
        _ => unreachable!("clap enforces the source group"),
    };
    let decomposition = expand(&family).map_err(fail)?;
    let spec = decomposition.spec();

    let verified = if verify {
        let cap = config.materialize_cap.unwrap_or(DEFAULT_MATERIALIZE_CAP);
        let report = verify_decomposition_with_cap(&decomposition, cap);
        if !report.ok {
            if pretty {
                println!("{}: partition FAILED", spec.name());
            } else {
                println!("{}", json!({ "verified": false }));
            }
            return Err(Failure(to_json(&report)?));
        }
        Some(true)
    } else {
        None
    };

    if let Some(path) = out {
        write_file(path, &to_json(&decomposition)?)?;
    }
    if pretty {
        println!(
            "{}: {} blocks, {} edges, partition {}",
            spec.name(),
            decomposition.blocks().len(),
            spec.edge_count(),
            if verified == Some(true) { "OK" } else { "not checked" }
        );
    } else {
        println!(
            "{}",
            json!({
                "host": spec.name(),
                "parts": spec.parts,
                "part_size": spec.part_size,
                "blocks": decomposition.blocks().len(),
                "edges": spec.edge_count(),
                "verified": verified,
            })
        );
    }
    Ok(())
}

// ------------------------------------------------------------------- search

fn cmd_search(
    graph: &Path,
    d: usize,
    alpha: bool,
    all: bool,
    max_solutions: Option<usize>,
    budget: Option<u64>,
    pretty: bool,
) -> Result<(), Failure> {
    let graph: Graph = read_json(graph)?;
    let cfg = match SearchConfig::new(graph.clone(), d) {
        Ok(cfg) => cfg,
        Err(err) => {
            // inadmissible d: a definitive negative answer, not a failure
            if pretty {
                println!("{graph}, d = {d}: inadmissible ({err})");
            } else {
                println!(
                    "{}",
                    json!({
                        "admissible": false,
                        "found": false,
                        "solutions": 0,
                        "nodes_explored": 0,
                        "complete": true,
                    })
                );
            }
            return Ok(());
        }
    };
    let cap = if all { max_solutions } else { Some(1) };
    let cfg = cfg
        .require_alpha(alpha)
        .node_budget(budget.unwrap_or(DEFAULT_NODE_BUDGET));

    let mut emitted = 0usize;
    let mut lines: Vec<String> = Vec::new();
    let exploration = explore(&cfg, |labels| {
        let solution = Labeling::new(graph.clone(), d, labels.to_vec())
            .expect("search produced an invalid labeling");
        solution
            .verify_d_graceful()
            .expect("search produced a non-graceful labeling");
        if pretty {
            lines.push(format!("({})", join(labels)));
        } else {
            lines.push(serde_json::to_string(&solution).expect("labeling serializes"));
        }
        emitted += 1;
        match cap {
            Some(cap) if emitted >= cap => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    for line in &lines {
        println!("{line}");
    }
    if pretty {
        println!(
            "{graph}, d = {d}: {emitted} solution{} shown, {} nodes, {}",
            if emitted == 1 { "" } else { "s" },
            exploration.nodes_explored,
            if exploration.complete { "search complete" } else { "search stopped early" }
        );
    } else {
        println!(
            "{}",
            json!({
                "admissible": true,
                "found": emitted > 0,
                "solutions": emitted,
                "nodes_explored": exploration.nodes_explored,
                "complete": exploration.complete,
            })
        );
    }
    Ok(())
}

// -------------------------------------------------------------------- sweep

fn cmd_sweep(
    max_e: Option<usize>,
    max_k: Option<usize>,
    pretty: bool,
    config: &FileConfig,
) -> Result<(), Failure> {
    let mut bounds = SweepBounds::default();
    if let Some(e) = config.max_e {
        bounds = bounds.with_max_e(e);
    }
    if let Some(k) = config.max_k {
        bounds = bounds.with_max_k(k);
    }
    if let Some(v) = config.v_cap {
        bounds.v_cap = v;
    }
    if let Some(cap) = config.materialize_cap {
        bounds.materialize_cap = cap;
    }
    if let Some(e) = max_e {
        bounds = bounds.with_max_e(e);
    }
    if let Some(k) = max_k {
        bounds = bounds.with_max_k(k);
    }

    let report = sweep(&bounds);
    if pretty {
        print_sweep_table(&report.rows);
    } else {
        println!("{}", json!({ "ok": report.ok(), "rows": report.rows }));
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure(to_json(&report.failures())?))
    }
}

fn print_sweep_table(rows: &[SweepRow]) {
    let stage = |s: Option<bool>| match s {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "-",
    };
    let header = format!(
        "{:<12} {:>5} {:>4} {:>3} {:>4}  {:<5} {:<5} {:<4} {:<4} {:<4} {:<4} ok",
        "family", "param", "e", "d", "v", "label", "alpha", "df", "dec", "df2", "dec2"
    );
    println!("{header}");
    for r in rows {
        println!(
            "{:<12} {:>5} {:>4} {:>3} {:>4}  {:<5} {:<5} {:<4} {:<4} {:<4} {:<4} {}",
            r.family,
            r.size_param,
            r.e,
            r.d,
            r.v,
            if r.label_ok { "pass" } else { "FAIL" },
            if r.alpha { "yes" } else { "no" },
            stage(r.df_ok),
            stage(r.decomposition_ok),
            stage(r.df_n2_ok),
            stage(r.decomposition_n2_ok),
            if r.ok { "pass" } else { "FAIL" },
        );
    }
    let failures = rows.iter().filter(|r| !r.ok).count();
    println!("{} rows, {} failure{}", rows.len(), failures, if failures == 1 { "" } else { "s" });
}

// --------------------------------------------------------------- export-dot

fn cmd_export_dot(
    labeling: Option<&Path>,
    decomposition: Option<&Path>,
    out: Option<&Path>,
    pretty: bool,
) -> Result<(), Failure> {
    let dot = match (labeling, decomposition) {
        (Some(path), None) => labeling_dot(&read_json::<Labeling>(path)?),
        (None, Some(path)) => decomposition_dot(&read_json::<Decomposition>(path)?),
        _ => unreachable!("clap enforces the source group"),
    };
    match out {
        Some(path) => {
            write_file(path, dot.trim_end())?;
            if pretty {
                println!("wrote {}", path.display());
            }
        }
        None => print!("{dot}"),
    }
    Ok(())
}

// ------------------------------------------------------------------ config

#[derive(Default)]
struct FileConfig {
    max_e: Option<usize>,
    max_k: Option<usize>,
    v_cap: Option<usize>,
    materialize_cap: Option<usize>,
}

impl FileConfig {
    fn load(path: Option<&Path>) -> FileConfig {
        let Some(path) = path else {
            return FileConfig::default();
        };
        let text = fs::read_to_string(path)
            .unwrap_or_else(|err| usage(format!("--config {}: {err}", path.display())));
        let mut config = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                usage(format!(
                    "--config {}:{}: expected key=value, got `{line}`",
                    path.display(),
                    lineno + 1
                ));
            };
            let value: usize = value.trim().parse().unwrap_or_else(|_| {
                usage(format!(
                    "--config {}:{}: `{}` is not a number",
                    path.display(),
                    lineno + 1,
                    value.trim()
                ))
            });
            match key.trim() {
                "max_e" => config.max_e = Some(value),
                "max_k" => config.max_k = Some(value),
                "v_cap" => config.v_cap = Some(value),
                "materialize_cap" => config.materialize_cap = Some(value),
                other => usage(format!(
                    "--config {}:{}: unknown key `{other}`",
                    path.display(),
                    lineno + 1
                )),
            }
        }
        config
    }
}

// ----------------------------------------------------------------- plumbing

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|err| fail(format!("{}: {err}", path.display())))?;
    serde_json::from_str(&text).map_err(|err| fail(format!("{}: {err}", path.display())))
}

fn write_file(path: &Path, payload: &str) -> Result<(), Failure> {
    fs::write(path, format!("{payload}\n")).map_err(|err| fail(format!("{}: {err}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(fail)
}

/// Payload goes to `--out` when given, otherwise to stdout; `--pretty`
/// prints the one-line summary instead of (or alongside a written) payload.
fn emit_document(
    out: Option<&Path>,
    payload: &str,
    pretty_line: &str,
    pretty: bool,
) -> Result<(), Failure> {
    if let Some(path) = out {
        write_file(path, payload)?;
        if pretty {
            println!("{pretty_line}");
        }
    } else if pretty {
        println!("{pretty_line}");
    } else {
        println!("{payload}");
    }
    Ok(())
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
