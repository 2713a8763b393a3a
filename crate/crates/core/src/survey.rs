//! Batch analysis over a manifest of schemes, run on a fixed-size thread
//! pool. Output depends only on the manifest and configuration.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{builtin_catalog, load_scheme, Family};
use crate::config::AuditConfig;
use crate::error::{Error, Result};
use crate::report::{analyze_relation, scheme_spectral, Outcome, RelationReport, VERSION};
use crate::scheme::{symmetrize, SchemeDescriptor};

#[derive(Debug, Clone)]
pub enum SchemeSource {
    File(PathBuf),
    Family(Family),
}

impl SchemeSource {
    fn label(&self) -> String {
        match self {
            SchemeSource::File(p) => p.display().to_string(),
            SchemeSource::Family(f) => f.name(),
        }
    }

    fn load(&self) -> Result<SchemeDescriptor> {
        match self {
            SchemeSource::File(p) => load_scheme(p),
            SchemeSource::Family(f) => f.build(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relations {
    All,
    List(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SurveyEntry {
    pub source: SchemeSource,
    pub relations: Relations,
}

#[derive(Debug, Clone, Default)]
pub struct Manifest {
    pub entries: Vec<SurveyEntry>,
    pub seed: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    schemes: Vec<RawEntry>,
    #[serde(default)]
    seed: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    file: Option<String>,
    family: Option<Vec<String>>,
    #[serde(default)]
    relations: Option<RawRelations>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRelations {
    Word(String),
    List(Vec<usize>),
}

impl Manifest {
    /// Parses a manifest; relative file paths resolve against `base`.
    /// Structural problems fail here, before any scheme is loaded.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let raw: RawManifest = serde_json::from_str(text).map_err(|e| Error::Parse(format!("manifest: {e}")))?;
        let mut entries = Vec::with_capacity(raw.schemes.len());
        for (k, e) in raw.schemes.into_iter().enumerate() {
            let source = match (e.file, e.family) {
                (Some(f), None) => SchemeSource::File(base.join(f)),
                (None, Some(words)) => SchemeSource::Family(Family::parse(&words)?),
                _ => {
                    return Err(Error::Parse(format!(
                        "manifest entry {k}: give exactly one of \"file\" and \"family\""
                    )))
                }
            };
            let relations = match e.relations {
                None => Relations::All,
                Some(RawRelations::Word(w)) if w == "all" => Relations::All,
                Some(RawRelations::Word(w)) => {
                    return Err(Error::Parse(format!("manifest entry {k}: unknown relations \"{w}\"")))
                }
                Some(RawRelations::List(l)) => Relations::List(l),
            };
            entries.push(SurveyEntry { source, relations });
        }
        Ok(Manifest {
            entries,
            seed: raw.seed,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn builtin() -> Self {
        Manifest {
            entries: builtin_catalog()
                .into_iter()
                .map(|f| SurveyEntry {
                    source: SchemeSource::Family(f),
                    relations: Relations::All,
                })
                .collect(),
            seed: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditCount {
    pub run: usize,
    pub passed: usize,
    pub skipped: usize,
}

impl AuditCount {
    fn add<T>(&mut self, o: &Outcome<T>, ok: impl Fn(&T) -> bool) {
        match o {
            Outcome::Ran { result } => {
                self.run += 1;
                if ok(result) {
                    self.passed += 1;
                }
            }
            Outcome::Skipped { .. } => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub scheme: String,
    pub relation: usize,
    pub kappa: usize,
    pub lambda: usize,
    pub valency: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryError {
    pub entry: usize,
    pub source: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub scheme: String,
    pub relation: usize,
    pub finding: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub version: String,
    pub config: AuditConfig,
    pub schemes: usize,
    pub reports: usize,
    pub reports_ok: usize,
    pub audits: BTreeMap<&'static str, AuditCount>,
    pub counterexamples: Vec<Counterexample>,
    pub findings: Vec<Finding>,
    pub errors: Vec<EntryError>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct SurveyOutcome {
    pub summary: Summary,
    pub reports: Vec<RelationReport>,
}

struct Loaded {
    scheme: SchemeDescriptor,
    symmetrized: bool,
    relations: Vec<usize>,
}

fn resolve(entry: &SurveyEntry) -> Result<Loaded> {
    let raw = entry.source.load()?;
    let (scheme, symmetrized) = if raw.is_symmetric() {
        (raw, false)
    } else {
        (symmetrize(&raw)?, true)
    };
    let relations = match &entry.relations {
        Relations::All => (1..=scheme.d()).collect(),
        Relations::List(l) => {
            if let Some(&bad) = l.iter().find(|&&i| i == 0 || i > scheme.d()) {
                return Err(Error::ClassOutOfRange(bad));
            }
            l.clone()
        }
    };
    Ok(Loaded {
        scheme,
        symmetrized,
        relations,
    })
}

/// Runs every (scheme, relation) task on `jobs` threads. Entries that fail
/// to load or analyze are recorded and the rest still run.
pub fn run_survey(manifest: &Manifest, jobs: usize, cfg: &AuditConfig) -> Result<SurveyOutcome> {
    let mut cfg = cfg.clone();
    if let Some(seed) = manifest.seed {
        cfg.seed = seed;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
    pool.install(|| survey_in_pool(manifest, &cfg))
}

fn survey_in_pool(manifest: &Manifest, cfg: &AuditConfig) -> Result<SurveyOutcome> {
    let mut errors = Vec::new();
    let loaded: Vec<(usize, Result<Loaded>)> = manifest
        .entries
        .par_iter()
        .enumerate()
        .map(|(k, e)| (k, resolve(e)))
        .collect();
    let mut schemes = Vec::new();
    for (k, r) in loaded {
        match r {
            Ok(l) => schemes.push((k, l)),
            Err(e) => errors.push(EntryError {
                entry: k,
                source: manifest.entries[k].source.label(),
                error: e.to_string(),
            }),
        }
    }

    let spectra: Vec<_> = schemes
        .par_iter()
        .map(|(_, l)| scheme_spectral(&l.scheme, cfg))
        .collect();
    let tasks: Vec<(usize, usize)> = schemes
        .iter()
        .enumerate()
        .flat_map(|(s, (_, l))| l.relations.iter().map(move |&i| (s, i)))
        .collect();
    let results: Vec<Result<RelationReport>> = tasks
        .par_iter()
        .map(|&(s, i)| {
            let l = &schemes[s].1;
            match &spectra[s] {
                Ok(sp) => analyze_relation(&l.scheme, i, sp, l.symmetrized, cfg),
                Err(e) => Err(Error::Malformed(format!("spectral: {e}"))),
            }
        })
        .collect();

    let mut reports = Vec::with_capacity(results.len());
    let mut failed_entries = std::collections::BTreeSet::new();
    for (&(s, i), r) in tasks.iter().zip(results) {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                let k = schemes[s].0;
                if failed_entries.insert((k, i)) {
                    errors.push(EntryError {
                        entry: k,
                        source: format!("{} relation {i}", manifest.entries[k].source.label()),
                        error: e.to_string(),
                    });
                }
            }
        }
    }
    errors.sort_by_key(|e| e.entry);

    let summary = summarize(schemes.len(), &reports, errors, cfg);
    Ok(SurveyOutcome { summary, reports })
}

fn summarize(schemes: usize, reports: &[RelationReport], errors: Vec<EntryError>, cfg: &AuditConfig) -> Summary {
    let mut audits: BTreeMap<&'static str, AuditCount> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut findings = Vec::new();
    for r in reports {
        audits.entry("theorem1").or_default().add(&r.theorem1, |t| t.equivalent);
        audits
            .entry("corollaries")
            .or_default()
            .add(&r.corollaries, |c| c.c1_ok && c.c2_ok && c.c3_ok);
        audits.entry("w_empty").or_default().add(&r.w_empty, |w| w.ok);
        audits.entry("small_cut").or_default().add(&r.small_cut, |s| s.ok());
        audits.entry("cuts").or_default().add(&r.cuts, |c| c.ok());
        audits.entry("spectral_cut").or_default().add(&r.spectral_cut, |s| s.ok);
        audits
            .entry("ball_deletion")
            .or_default()
            .add(&r.ball_deletion, |b| b.iter().all(|s| s.part_a_ok && s.part_b_ok));
        audits.entry("spectral").or_default().add(&r.spectral, |s| s.checks.ok);
        let geo = &r.geodesics;
        let geo_ok = geo.distance_correspondence.ok && geo.c_monotone.ok && geo.unique_geodesics.ok;
        audits
            .entry("geodesics")
            .or_default()
            .add(&Outcome::Ran { result: geo_ok }, |&b| b);
        if let Some(c) = r.cuts.ran() {
            if !c.conjecture_ok {
                counterexamples.push(Counterexample {
                    scheme: r.scheme.clone(),
                    relation: r.relation,
                    kappa: c.kappa,
                    lambda: c.lambda,
                    valency: r.valency,
                });
            }
        }
        findings.extend(r.findings.iter().map(|f| Finding {
            scheme: r.scheme.clone(),
            relation: r.relation,
            finding: f.clone(),
        }));
    }
    Summary {
        version: VERSION.to_string(),
        config: cfg.clone(),
        schemes,
        reports: reports.len(),
        reports_ok: reports.iter().filter(|r| r.ok).count(),
        audits,
        ok: findings.is_empty() && errors.is_empty() && counterexamples.is_empty(),
        counterexamples,
        findings,
        errors,
    }
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect()
}

/// File name of the `index`-th report.
pub fn report_file_name(index: usize, report: &RelationReport) -> String {
    format!("{index:04}-{}-r{}.json", sanitize(&report.scheme), report.relation)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Malformed(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes `summary.json` and `reports/NNNN-<scheme>-r<i>.json` under `dir`.
pub fn write_survey(outcome: &SurveyOutcome, dir: &Path) -> Result<()> {
    let reports_dir = dir.join("reports");
    std::fs::create_dir_all(&reports_dir).map_err(|source| Error::Io {
        path: reports_dir.display().to_string(),
        source,
    })?;
    write_json(&dir.join("summary.json"), &outcome.summary)?;
    for (k, r) in outcome.reports.iter().enumerate() {
        write_json(&reports_dir.join(report_file_name(k, r)), r)?;
    }
    Ok(())
}
