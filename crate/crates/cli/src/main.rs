use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rlie::classify::{classify_checked, list_classes};
use rlie::json::{class_list_to_json, field_spec_to_json, label_to_json, parse_restricted};
use rlie::pmap::is_restrictable;
use rlie::verify::{verify_field, DEFAULT_BUDGET_CONJ, DEFAULT_BUDGET_PMAPS};
use rlie::{CatalogName, Error, Field, FieldSpec, LieAlg, RestrictedAlg, VerifyConfig};

/// Orbits up to this size are searched to double-check `classify`.
const ORBIT_CHECK_LIMIT: usize = 200_000;

#[derive(Parser)]
#[command(name = "rlie", version, about = "Restricted Lie algebras of dimension at most 4 over small finite fields")]
struct Cli {
    /// Size of the worker pool (defaults to the number of cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Monic modulus coefficients, constant term first, comma separated.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class label of a restricted Lie algebra given as JSON.
    Classify { input: PathBuf },
    /// Enumerate all [p]-nilpotent [p]-maps, split them into orbits and
    /// compare with the classification.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// Only this catalog algebra, e.g. `L_{4,2}` or `L42`.
        #[arg(long)]
        algebra: Option<CatalogName>,
        #[arg(long, default_value_t = DEFAULT_BUDGET_PMAPS)]
        budget_pmaps: u128,
        #[arg(long, default_value_t = DEFAULT_BUDGET_CONJ)]
        budget_conj: u128,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the class representatives of every catalog algebra.
    EmitDb {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Parse(String),
    Semantic(String),
    Budget(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

fn make_field(a: &FieldArgs) -> Result<Arc<Field>, Failure> {
    let spec = FieldSpec::new(a.p, a.k, a.modulus.clone())?;
    Ok(Arc::new(Field::new(spec)?))
}

fn write_json(v: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("JSON values always serialise") + "\n";
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Semantic(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_classify(input: &Path) -> Result<(), Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", input.display())))?;
    let (l, m) = parse_restricted(&text)?;
    if !is_restrictable(&l) {
        let name = l.recognize().map(|(n, _)| n.to_string()).unwrap_or_else(|_| l.name());
        return Err(Failure::Semantic(format!(
            "{name} is not restrictable in characteristic {}",
            l.field().characteristic()
        )));
    }
    let r = RestrictedAlg::new(l, m)?;
    let label = classify_checked(&r, ORBIT_CHECK_LIMIT)?;
    println!("{}", label_to_json(r.field(), &label));
    Ok(())
}

fn cmd_verify(
    field: &FieldArgs,
    algebra: Option<CatalogName>,
    cfg: &VerifyConfig,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let f = make_field(field)?;
    let reports = verify_field(f.clone(), algebra, cfg)?;
    for r in &reports {
        eprintln!(
            "{}: {} maps, {} orbits, {} classes expected, {} ({})",
            r.algebra,
            r.total,
            r.orbits.len(),
            r.expected_classes,
            if r.is_ok() { "ok" } else { "MISMATCH" },
            r.method.as_str()
        );
    }
    let ok = reports.iter().all(|r| r.is_ok());
    let doc = json!({
        "field": field_spec_to_json(f.spec()),
        "ok": ok,
        "reports": reports.iter().map(|r| r.to_json(&f)).collect::<Vec<_>>(),
    });
    write_json(&doc, out)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_emit_db(field: &FieldArgs, out: &Path) -> Result<(), Failure> {
    let f = make_field(field)?;
    let mut algebras = Vec::new();
    let mut count = 0;
    for name in CatalogName::ALL {
        let l = LieAlg::catalog(f.clone(), name);
        let list = list_classes(&l)?;
        count += list.entries.len();
        algebras.push(class_list_to_json(&l, &list));
    }
    let doc = json!({
        "field": field_spec_to_json(f.spec()),
        "entry_count": count,
        "algebras": algebras,
    });
    write_json(&doc, Some(out))?;
    eprintln!("wrote {count} classes to {}", out.display());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Semantic(format!("cannot start worker pool: {e}")))?;
    }
    match &cli.command {
        Command::Classify { input } => cmd_classify(input),
        Command::Verify { field, algebra, budget_pmaps, budget_conj, out } => {
            if *budget_pmaps == 0 || *budget_conj == 0 {
                return Err(Failure::Semantic("budgets must be positive".into()));
            }
            let cfg = VerifyConfig {
                budget_pmaps: *budget_pmaps,
                budget_conj: *budget_conj,
                ..VerifyConfig::default()
            };
            cmd_verify(field, *algebra, &cfg, out.as_deref())
        }
        Command::EmitDb { field, out } => cmd_emit_db(field, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: the classification disagrees with the orbit enumeration");
            ExitCode::from(4)
        }
    }
}
