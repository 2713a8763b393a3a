use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scheme_conn::catalog::{load_scheme, Family};
use scheme_conn::config::AuditConfig;
use scheme_conn::connectivity::enumerate_min_cuts;
use scheme_conn::report::analyze_scheme;
use scheme_conn::survey::{run_survey, write_survey, Manifest};
use scheme_conn::{relation_graph, symmetrize, Error, SchemeDescriptor};

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_FINDING: u8 = 3;
const EXIT_CAP: u8 = 4;

/// Association-scheme connectivity audits.
///
/// Exit codes: 0 ok, 1 parse or usage error, 2 invalid scheme, 3 audit
/// finding, 4 enumeration cap exceeded.
#[derive(Parser)]
#[command(name = "scheme-conn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a scheme file.
    Verify { path: PathBuf },
    /// Run every audit on one or all relations of a scheme.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Analyze one relation.
        #[arg(long, conflicts_with = "all_relations")]
        relation: Option<usize>,
        /// Analyze every relation (the default).
        #[arg(long)]
        all_relations: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Merge each class with its transpose. Non-symmetric input is
        /// always symmetrized; the report records it.
        #[arg(long)]
        symmetrize: bool,
    },
    /// Analyze every (scheme, relation) pair of a manifest.
    Survey {
        #[arg(
            long,
            required_unless_present = "builtin_catalog",
            conflicts_with = "builtin_catalog"
        )]
        manifest: Option<PathBuf>,
        #[arg(long)]
        builtin_catalog: bool,
        #[arg(long, env = "SCHEME_CONN_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// List every minimum vertex cut of a relation graph.
    Cuts {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        relation: usize,
        /// Largest cut size searched; above 3 only for v <= 64.
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

#[derive(Args)]
struct Input {
    /// Scheme JSON file.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    path: Option<PathBuf>,
    /// Built-in family, e.g. `--family johnson 5 2` or `--family drg petersen`.
    #[arg(long, num_args = 1..)]
    family: Option<Vec<String>>,
}

impl Input {
    fn load(&self) -> Result<(SchemeDescriptor, bool), Error> {
        let raw = match (&self.path, &self.family) {
            (Some(p), _) => load_scheme(p)?,
            (None, Some(words)) => Family::parse(words)?.build()?,
            (None, None) => return Err(Error::Parse("no scheme given".into())),
        };
        if raw.is_symmetric() {
            Ok((raw, false))
        } else {
            Ok((symmetrize(&raw)?, true))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io { .. } | Error::ClassOutOfRange(_) | Error::IdentityClassRequested => EXIT_PARSE,
        Error::CapExceeded(_) | Error::SizeCap(_) => EXIT_CAP,
        e if e.is_validation() => EXIT_INVALID,
        _ => EXIT_FINDING,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e))
}

fn write_out(path: Option<&Path>, value: &serde_json::Value) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Malformed(e.to_string()))?;
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(path: &Path) -> Result<u8, Error> {
    let s = load_scheme(path)?;
    println!(
        "ok: {} v={} d={} symmetric={} valencies={:?}",
        s.name,
        s.v(),
        s.d(),
        s.is_symmetric(),
        (0..=s.d()).map(|i| s.valency(i)).collect::<Vec<_>>()
    );
    Ok(0)
}

fn analyze(input: &Input, relation: Option<usize>, report: Option<&Path>) -> Result<u8, Error> {
    let (scheme, symmetrized) = input.load()?;
    let relations: Vec<usize> = match relation {
        Some(i) => vec![i],
        None => (1..=scheme.d()).collect(),
    };
    let reports = analyze_scheme(&scheme, &relations, symmetrized, &AuditConfig::default())?;
    for r in &reports {
        for f in &r.findings {
            eprintln!("finding: {} relation {}: {f}", r.scheme, r.relation);
        }
    }
    let value = if relation.is_some() {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(&reports)
    }
    .map_err(|e| Error::Malformed(e.to_string()))?;
    write_out(report, &value)?;
    Ok(if reports.iter().all(|r| r.ok) { 0 } else { EXIT_FINDING })
}

fn survey(manifest: Option<&Path>, jobs: Option<usize>, out: &Path) -> Result<u8, Error> {
    let manifest = match manifest {
        Some(p) => Manifest::load(p)?,
        None => Manifest::builtin(),
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let outcome = run_survey(&manifest, jobs, &AuditConfig::default())?;
    write_survey(&outcome, out)?;
    let s = &outcome.summary;
    for e in &s.errors {
        eprintln!("error: entry {} ({}): {}", e.entry, e.source, e.error);
    }
    for f in &s.findings {
        eprintln!("finding: {} relation {}: {}", f.scheme, f.relation, f.finding);
    }
    eprintln!(
        "{} schemes, {} reports, {} ok, {} counterexamples, {} errors",
        s.schemes,
        s.reports,
        s.reports_ok,
        s.counterexamples.len(),
        s.errors.len()
    );
    Ok(if s.ok { 0 } else { EXIT_FINDING })
}

fn cuts(input: &Input, relation: usize, max_size: usize) -> Result<u8, Error> {
    let (scheme, _) = input.load()?;
    if relation == 0 || relation > scheme.d() {
        return Err(Error::ClassOutOfRange(relation));
    }
    let g = relation_graph(&scheme, relation)?;
    let cuts = enumerate_min_cuts(&g, max_size)?;
    let all = cuts.iter().all(|c| c.neighborhood_of.is_some());
    let value = serde_json::json!({
        "scheme": scheme.name,
        "relation": relation,
        "kappa": cuts.first().map(|c| c.vertices.len()),
        "count": cuts.len(),
        "all_neighborhoods": all,
        "cuts": cuts,
    });
    write_out(None, &value)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Verify { path } => verify(path),
        Command::Analyze {
            input,
            relation,
            report,
            ..
        } => analyze(input, *relation, report.as_deref()),
        Command::Survey {
            manifest, jobs, out, ..
        } => survey(manifest.as_deref(), *jobs, out),
        Command::Cuts {
            input,
            relation,
            max_size,
        } => cuts(input, *relation, *max_size),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(&e),
    }
}
