//! Per-relation reports: every audit on one basis relation, with the scheme's
//! spectral data, the configuration and the tool version.

use serde::Serialize;

use crate::config::AuditConfig;
use crate::connectivity::{
    ball_deletion_audit, corollary_audits, cut_report, equivalence_audit, godsil_bound, is_complete_multipartite,
    is_connected, k211_free, small_cut_theorems_audit, twins, w_empty_audit, BallStep, CorollaryAudit, CutReport,
    EquivalenceAudit, SmallCutAudit, WEmptyAudit,
};
use crate::diagram::{
    c_monotone_check, distribution_diagram, geodesic_correspondence_check, unique_geodesic_check, Check,
};
use crate::error::{Error, Result};
use crate::scheme::{relation_graph, SchemeDescriptor};
use crate::spectral::{
    compute_spectral, format_real, primitivity, spectral_cut_audit, Primitivity, SpectralChecks, SpectralData,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// An audit that ran, or the reason it did not.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome<T> {
    Ran { result: T },
    Skipped { reason: String },
}

impl<T> Outcome<T> {
    fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(result) => Ok(Outcome::Ran { result }),
            Err(Error::HypothesisViolation(h)) => Ok(Outcome::Skipped { reason: h.to_string() }),
            Err(e) => Err(e),
        }
    }

    fn skipped(reason: &str) -> Self {
        Outcome::Skipped {
            reason: reason.to_string(),
        }
    }

    pub fn ran(&self) -> Option<&T> {
        match self {
            Outcome::Ran { result } => Some(result),
            Outcome::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSection {
    #[serde(rename = "P")]
    pub p: Vec<Vec<String>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<String>>,
    pub multiplicities: Vec<usize>,
    pub checks: SpectralChecks,
    pub primitivity: Primitivity,
}

/// Spectral data of a scheme in report form, with the raw data kept for the
/// per-relation eigenvalue audits.
#[derive(Debug, Clone)]
pub struct SchemeSpectral {
    pub section: Outcome<SpectralSection>,
    pub data: Option<SpectralData>,
}

pub fn scheme_spectral(scheme: &SchemeDescriptor, cfg: &AuditConfig) -> Result<SchemeSpectral> {
    let data = match compute_spectral(scheme, cfg) {
        Ok(d) => d,
        Err(Error::RefinementFailed(msg)) => {
            return Ok(SchemeSpectral {
                section: Outcome::Skipped {
                    reason: format!("refinement failed: {msg}"),
                },
                data: None,
            })
        }
        Err(e) => return Err(e),
    };
    let fmt = |m: &[Vec<f64>]| m.iter().map(|r| r.iter().map(|&x| format_real(x)).collect()).collect();
    let section = SpectralSection {
        p: fmt(&data.p),
        q: fmt(&data.q),
        multiplicities: data.multiplicities.clone(),
        checks: data.checks(scheme, cfg),
        primitivity: primitivity(scheme, &data, cfg)?,
    };
    Ok(SchemeSpectral {
        section: Outcome::Ran { result: section },
        data: Some(data),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
}

impl From<Check> for CheckReport {
    fn from(c: Check) -> Self {
        Self {
            ok: c.ok,
            witness: c.witness.map(|p| (p.0, p.1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicAudit {
    /// Graph distance equals diagram level of the class, for all pairs.
    pub distance_correspondence: CheckReport,
    /// `c` never decreases along diagram geodesics.
    pub c_monotone: CheckReport,
    /// Classes with `c = 1` have one diagram geodesic and thin intervals.
    pub unique_geodesics: CheckReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCutSection {
    pub p_iii: u64,
    pub kappa: usize,
    pub slack: i64,
    pub min_cuts_ok: Option<bool>,
    pub theta: Option<String>,
    pub theta_positive: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub scheme: String,
    pub relation: usize,
    pub v: usize,
    pub d: usize,
    pub valency: u64,
    pub diameter: Option<u32>,
    pub kappa: Option<usize>,
    pub lambda: Option<usize>,
    pub godsil_bound_num: u64,
    pub godsil_bound_den: u64,
    pub twin_pairs: usize,
    pub h_prime_connected: bool,
    pub theorem1: Outcome<EquivalenceAudit>,
    pub corollaries: Outcome<CorollaryAudit>,
    pub w_empty: Outcome<WEmptyAudit>,
    pub small_cut: Outcome<SmallCutAudit>,
    pub min_cuts_are_neighborhoods: Option<bool>,
    pub connected: bool,
    pub complete: bool,
    pub complete_multipartite: bool,
    pub k211_free: bool,
    pub p_polynomial_generator: bool,
    /// The empty graph is treated as connected.
    pub empty_graph_connected: bool,
    pub cuts: Outcome<CutReport>,
    pub geodesics: GeodesicAudit,
    pub ball_deletion: Outcome<Vec<BallStep>>,
    pub spectral_cut: Outcome<SpectralCutSection>,
    /// Twins exist only in imprimitive schemes.
    pub twins_imply_imprimitive: Option<bool>,
    pub symmetrized: bool,
    pub spectral: Outcome<SpectralSection>,
    pub findings: Vec<String>,
    pub ok: bool,
    pub version: String,
    pub config: AuditConfig,
}

/// Runs every audit on relation `i`. Hypotheses that fail are recorded as
/// skips; only a failed assertion becomes a finding.
pub fn analyze_relation(
    scheme: &SchemeDescriptor,
    i: usize,
    spectral: &SchemeSpectral,
    symmetrized: bool,
    cfg: &AuditConfig,
) -> Result<RelationReport> {
    if !scheme.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if i == 0 {
        return Err(Error::IdentityClassRequested);
    }
    if i > scheme.d() {
        return Err(Error::ClassOutOfRange(i));
    }
    let g = relation_graph(scheme, i)?;
    let diagram = distribution_diagram(scheme, i)?;
    let connected = is_connected(&g);
    let multipartite = is_complete_multipartite(&g);
    let valency = scheme.valency(i);
    let bound = godsil_bound(valency, scheme.v() as u64);
    let twin_pairs = twins(&g).pairs.len();
    let mut findings = Vec::new();

    let equivalence = Outcome::from_result(equivalence_audit(scheme, i))?;
    if let Some(t) = equivalence.ran() {
        if !t.equivalent {
            findings.push(format!("theorem1: conditions disagree {t:?}"));
        }
    }

    let (cuts, corollaries, small_cut, spectral_cut) = if connected {
        let report = cut_report(&g, cfg.cut_enumeration_budget)?;
        if !report.whitney_ok {
            findings.push(format!(
                "whitney: kappa {} lambda {} valency {valency}",
                report.kappa, report.lambda
            ));
        }
        if !report.godsil_ok {
            findings.push(format!(
                "godsil: lambda {} below {}/{}",
                report.lambda, bound.num, bound.den
            ));
        }
        if !report.conjecture_ok {
            findings.push(format!(
                "conjecture: kappa {} lambda {} valency {valency}",
                report.kappa, report.lambda
            ));
        }
        let cor = corollary_audits(&g, report.kappa, cfg);
        if !cor.c1_ok {
            findings.push(format!("C1: {:?}", cor.c1.witness));
        }
        if !cor.c2_ok {
            findings.push(format!("C2: basepoint {:?}", cor.c2_witness));
        }
        if !cor.c3_ok {
            findings.push(format!("C3: clique {:?}", cor.c3.witness));
        }
        let sc = small_cut_theorems_audit(&g, report.kappa);
        if !sc.ok() {
            findings.push(format!("small_cut: {sc:?}"));
        }
        let sizes: Option<Vec<usize>> = report
            .min_cuts
            .as_ref()
            .map(|c| c.iter().map(|m| m.vertices.len()).collect());
        let spectral_cut = Outcome::from_result(spectral_cut_audit(
            scheme,
            i,
            &g,
            report.kappa,
            sizes.as_deref(),
            spectral.data.as_ref(),
        ))?;
        let spectral_cut = match spectral_cut {
            Outcome::Ran { result: a } => {
                if !a.ok {
                    findings.push(format!("spectral_cut: kappa {} p_ii^i {}", a.kappa, a.p_iii));
                }
                Outcome::Ran {
                    result: SpectralCutSection {
                        p_iii: a.p_iii,
                        kappa: a.kappa,
                        slack: a.slack,
                        min_cuts_ok: a.min_cuts_ok,
                        theta: a.theta.map(format_real),
                        theta_positive: a.theta_positive,
                        ok: a.ok,
                    },
                }
            }
            Outcome::Skipped { reason } => Outcome::Skipped { reason },
        };
        (
            Outcome::Ran { result: report },
            Outcome::Ran { result: cor },
            Outcome::Ran { result: sc },
            spectral_cut,
        )
    } else {
        let r = "disconnected";
        (
            Outcome::skipped(r),
            Outcome::skipped(r),
            Outcome::skipped(r),
            Outcome::skipped(r),
        )
    };

    let w_empty = Outcome::from_result(w_empty_audit(scheme, i, cfg.exhaustive_pair_max_v))?;
    if let Some(w) = w_empty.ran() {
        if !w.ok {
            findings.push(format!("w_empty: W~ = {:?}", w.w_tilde));
        }
    }

    let geodesics = GeodesicAudit {
        distance_correspondence: geodesic_correspondence_check(scheme, i)?.into(),
        c_monotone: c_monotone_check(scheme, &diagram).into(),
        unique_geodesics: unique_geodesic_check(scheme, i)?.into(),
    };
    for (name, c) in [
        ("distance_correspondence", &geodesics.distance_correspondence),
        ("c_monotone", &geodesics.c_monotone),
        ("unique_geodesics", &geodesics.unique_geodesics),
    ] {
        if !c.ok {
            findings.push(format!("{name}: witness {:?}", c.witness));
        }
    }

    let ball_deletion = if !connected {
        Outcome::skipped("disconnected")
    } else {
        let steps: Result<Vec<BallStep>> = (1..diagram.diameter())
            .map(|t| ball_deletion_audit(scheme, i, t))
            .collect();
        Outcome::from_result(steps)?
    };
    if let Some(steps) = ball_deletion.ran() {
        for s in steps.iter().filter(|s| !s.part_a_ok || !s.part_b_ok) {
            findings.push(format!("ball_deletion: {s:?}"));
        }
    }

    let twins_imply_imprimitive = match &spectral.section {
        Outcome::Ran { result } => {
            Some(twin_pairs == 0 || matches!(result.primitivity, Primitivity::Imprimitive { .. }))
        }
        Outcome::Skipped { .. } => None,
    };
    if twins_imply_imprimitive == Some(false) {
        findings.push("twins in a primitive scheme".to_string());
    }
    if let Outcome::Ran { result } = &spectral.section {
        if !result.checks.ok {
            findings.push(format!("spectral: {:?}", result.checks));
        }
    }

    let (kappa, lambda, min_cuts_are_neighborhoods) = match cuts.ran() {
        Some(c) => (Some(c.kappa), Some(c.lambda), c.all_cuts_are_neighborhoods),
        None => (Some(0), Some(0), None),
    };
    Ok(RelationReport {
        scheme: scheme.name.clone(),
        relation: i,
        v: scheme.v(),
        d: scheme.d(),
        valency,
        diameter: g.diameter(),
        kappa,
        lambda,
        godsil_bound_num: bound.num,
        godsil_bound_den: bound.den,
        twin_pairs,
        h_prime_connected: diagram.h_prime_connected(),
        theorem1: equivalence,
        corollaries,
        w_empty,
        small_cut,
        min_cuts_are_neighborhoods,
        connected,
        complete: g.is_complete(),
        complete_multipartite: multipartite,
        k211_free: k211_free(&g),
        p_polynomial_generator: diagram.is_p_polynomial_generator(),
        empty_graph_connected: true,
        cuts,
        geodesics,
        ball_deletion,
        spectral_cut,
        twins_imply_imprimitive,
        symmetrized,
        spectral: spectral.section.clone(),
        ok: findings.is_empty(),
        findings,
        version: VERSION.to_string(),
        config: cfg.clone(),
    })
}

/// Every relation of a scheme, in class order.
pub fn analyze_scheme(
    scheme: &SchemeDescriptor,
    relations: &[usize],
    symmetrized: bool,
    cfg: &AuditConfig,
) -> Result<Vec<RelationReport>> {
    let spectral = scheme_spectral(scheme, cfg)?;
    relations
        .iter()
        .map(|&i| analyze_relation(scheme, i, &spectral, symmetrized, cfg))
        .collect()
}
