//! Primitive idempotents and eigenmatrices of a symmetric scheme.
//!
//! Nothing exact depends on this module. Its outputs feed audits that carry
//! explicit tolerances.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::config::AuditConfig;
use crate::error::{Error, Hypothesis, Result};
use crate::graph::{components, is_complete_multipartite, local_clique_structure, Graph};
use crate::scheme::{relation_graph, SchemeDescriptor};
use crate::VertexSet;

#[derive(Debug, Clone)]
pub struct SpectralData {
    v: usize,
    /// `p[j][i]`: eigenvalue of `A_i` on eigenspace `j`.
    pub p: Vec<Vec<f64>>,
    /// `q[i][j]`, read off the entries of `E_j`.
    pub q: Vec<Vec<f64>>,
    pub multiplicities: Vec<usize>,
    /// `trace(E_j)` before rounding.
    pub traces: Vec<f64>,
    idempotents: Vec<DMatrix<f64>>,
    /// Largest of `|V_j^T V_k - δ_jk I|` over all eigenspace bases.
    pub orthogonality_residual: f64,
    pub tolerance: f64,
}

fn relation_matrix(scheme: &SchemeDescriptor, i: usize) -> DMatrix<f64> {
    let t = scheme.table();
    DMatrix::from_fn(
        scheme.v(),
        scheme.v(),
        |x, y| if t.class(x, y) == i { 1.0 } else { 0.0 },
    )
}

fn columns(m: &DMatrix<f64>, cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), cols.len(), |r, c| m[(r, cols[c])])
}

/// Splits `basis` into the eigenspaces of `a` restricted to it.
fn refine(basis: &DMatrix<f64>, a: &DMatrix<f64>, tol: f64) -> Vec<DMatrix<f64>> {
    let restricted = basis.transpose() * a * basis;
    let restricted = (&restricted + restricted.transpose()) * 0.5;
    let eig = SymmetricEigen::new(restricted);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match groups.last_mut() {
            Some(g) if (eig.eigenvalues[k] - eig.eigenvalues[*g.last().expect("nonempty")]).abs() <= tol => g.push(k),
            _ => groups.push(vec![k]),
        }
    }
    groups.iter().map(|g| basis * columns(&eig.eigenvectors, g)).collect()
}

fn lex_cmp_desc(a: &[f64], b: &[f64], tol: f64) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > tol {
            return y.total_cmp(x);
        }
    }
    std::cmp::Ordering::Equal
}

/// Simultaneous eigendecomposition of `A_1..A_d`.
pub fn compute_spectral(scheme: &SchemeDescriptor, cfg: &AuditConfig) -> Result<SpectralData> {
    if !scheme.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (v, d) = (scheme.v(), scheme.d());
    let mats: Vec<DMatrix<f64>> = (0..=d).map(|i| relation_matrix(scheme, i)).collect();
    let tol_of = |i: usize| cfg.eigen_tolerance * (scheme.valency(i) as f64).max(1.0);

    let mut spaces = vec![DMatrix::<f64>::identity(v, v)];
    for i in 1..=d {
        spaces = spaces.iter().flat_map(|b| refine(b, &mats[i], tol_of(i))).collect();
    }
    if spaces.len() != d + 1 {
        return Err(Error::RefinementFailed(format!(
            "found {} common eigenspaces, expected {}",
            spaces.len(),
            d + 1
        )));
    }

    let mut rows: Vec<(Vec<f64>, DMatrix<f64>)> = Vec::with_capacity(d + 1);
    for basis in spaces {
        let k = basis.ncols() as f64;
        let mut row = Vec::with_capacity(d + 1);
        for (i, a) in mats.iter().enumerate() {
            let av = a * &basis;
            let lambda = (basis.transpose() * &av).trace() / k;
            let residual = (av - &basis * lambda).amax();
            if residual > 1e3 * tol_of(i).max(cfg.eigen_tolerance) {
                return Err(Error::RefinementFailed(format!(
                    "A_{i} is not scalar on an eigenspace (residual {residual:.3e})"
                )));
            }
            row.push(lambda);
        }
        rows.push((row, basis));
    }
    // the trivial eigenspace first, where every A_i acts by its valency
    let valency_row: Vec<f64> = (0..=d).map(|i| scheme.valency(i) as f64).collect();
    let tol = cfg.eigen_tolerance * (v as f64).max(1.0);
    let trivial = rows
        .iter()
        .position(|(r, b)| b.ncols() == 1 && r.iter().zip(&valency_row).all(|(x, y)| (x - y).abs() <= tol))
        .ok_or_else(|| Error::RefinementFailed("no eigenspace carries the valencies".into()))?;
    let first = rows.remove(trivial);
    rows.sort_by(|a, b| lex_cmp_desc(&a.0[1..], &b.0[1..], tol));
    rows.insert(0, first);

    let mut orthogonality_residual: f64 = 0.0;
    for (j, (_, bj)) in rows.iter().enumerate() {
        for (k, (_, bk)) in rows.iter().enumerate() {
            let mut g = bj.transpose() * bk;
            if j == k {
                g -= DMatrix::identity(g.nrows(), g.ncols());
            }
            orthogonality_residual = orthogonality_residual.max(g.amax());
        }
    }

    let idempotents: Vec<DMatrix<f64>> = rows.iter().map(|(_, b)| b * b.transpose()).collect();
    let traces: Vec<f64> = idempotents.iter().map(DMatrix::trace).collect();
    let multiplicities = traces.iter().map(|t| t.round().max(0.0) as usize).collect();
    let q = (0..=d)
        .map(|i| {
            idempotents
                .iter()
                .map(|e| e.component_mul(&mats[i]).sum() / scheme.valency(i) as f64)
                .collect()
        })
        .collect();
    Ok(SpectralData {
        v,
        p: rows.into_iter().map(|(r, _)| r).collect(),
        q,
        multiplicities,
        traces,
        idempotents,
        orthogonality_residual,
        tolerance: cfg.eigen_tolerance,
    })
}

/// Residuals of the identities the eigenmatrices must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralChecks {
    /// `max |QP - vI|`.
    pub qp_residual: f64,
    /// `max |sum_j Q_ij|` over `i != 0`.
    pub q_row_sum_residual: f64,
    /// `max |trace(E_j) - round(trace(E_j))|`.
    pub trace_residual: f64,
    /// `max |P_ji - (v_i / m_j) Q_ij|`.
    pub duality_residual: f64,
    /// `max |sum_j E_j - I|` and `max |E_0 - J/v|`.
    pub idempotent_residual: f64,
    pub orthogonality_residual: f64,
    pub multiplicities_sum_to_v: bool,
    pub ok: bool,
}

impl SpectralData {
    pub fn d(&self) -> usize {
        self.p.len() - 1
    }

    pub fn idempotent(&self, j: usize) -> &DMatrix<f64> {
        &self.idempotents[j]
    }

    pub fn checks(&self, scheme: &SchemeDescriptor, cfg: &AuditConfig) -> SpectralChecks {
        let w = self.d() + 1;
        let v = self.v as f64;
        let mut qp_residual: f64 = 0.0;
        for i in 0..w {
            for k in 0..w {
                let entry: f64 = (0..w).map(|j| self.q[i][j] * self.p[j][k]).sum();
                let target = if i == k { v } else { 0.0 };
                qp_residual = qp_residual.max((entry - target).abs());
            }
        }
        let q_row_sum_residual = (1..w).map(|i| self.q[i].iter().sum::<f64>().abs()).fold(0.0, f64::max);
        let trace_residual = self.traces.iter().map(|t| (t - t.round()).abs()).fold(0.0, f64::max);
        let mut duality_residual: f64 = 0.0;
        for j in 0..w {
            for i in 0..w {
                let m = self.multiplicities[j].max(1) as f64;
                let dual = scheme.valency(i) as f64 / m * self.q[i][j];
                duality_residual = duality_residual.max((self.p[j][i] - dual).abs());
            }
        }
        let n = self.v;
        let mut sum = DMatrix::<f64>::zeros(n, n);
        for e in &self.idempotents {
            sum += e;
        }
        sum -= DMatrix::<f64>::identity(n, n);
        let e0 = self.idempotents[0].add_scalar(-1.0 / v);
        let idempotent_residual = sum.amax().max(e0.amax());
        let multiplicities_sum_to_v =
            self.multiplicities.iter().sum::<usize>() == n && self.multiplicities.iter().all(|&m| m > 0);
        let tol = cfg.identity_tolerance;
        SpectralChecks {
            ok: qp_residual < tol
                && q_row_sum_residual < tol
                && trace_residual < cfg.trace_tolerance
                && duality_residual < tol
                && idempotent_residual < tol
                && self.orthogonality_residual < tol
                && multiplicities_sum_to_v,
            qp_residual,
            q_row_sum_residual,
            trace_residual,
            duality_residual,
            idempotent_residual,
            orthogonality_residual: self.orthogonality_residual,
            multiplicities_sum_to_v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Primitivity {
    Primitive,
    /// A system of imprimitivity found by both detectors: the components
    /// of a disconnected relation, and the equal-column classes of an
    /// idempotent.
    Imprimitive {
        relation: usize,
        components: Vec<Vec<usize>>,
        idempotent: usize,
        column_classes: Vec<Vec<usize>>,
    },
}

/// Classes of equal columns of `e`, ascending; singletons omitted.
fn equal_columns(e: &DMatrix<f64>, tol: f64) -> Vec<Vec<usize>> {
    let n = e.ncols();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if owner[x].is_some() {
            continue;
        }
        let mut class = vec![x];
        for y in x + 1..n {
            if owner[y].is_none() && (0..n).all(|r| (e[(r, x)] - e[(r, y)]).abs() <= tol) {
                owner[y] = Some(classes.len());
                class.push(y);
            }
        }
        if class.len() > 1 {
            classes.push(class);
        }
    }
    classes
}

/// Two independent imprimitivity detectors; they must agree.
pub fn primitivity(scheme: &SchemeDescriptor, spectral: &SpectralData, cfg: &AuditConfig) -> Result<Primitivity> {
    let mut by_graph = None;
    for i in 1..=scheme.d() {
        let g = relation_graph(scheme, i)?;
        let comps = components(&g, &VertexSet::new(g.n()));
        if comps.len() > 1 {
            by_graph = Some((i, comps));
            break;
        }
    }
    let by_columns = (1..=spectral.d()).find_map(|l| {
        let classes = equal_columns(spectral.idempotent(l), cfg.column_tolerance);
        (!classes.is_empty()).then_some((l, classes))
    });
    match (by_graph, by_columns) {
        (None, None) => Ok(Primitivity::Primitive),
        (Some((relation, components)), Some((idempotent, column_classes))) => Ok(Primitivity::Imprimitive {
            relation,
            components,
            idempotent,
            column_classes,
        }),
        (g, c) => Err(Error::DetectorDisagreement(format!(
            "disconnected relation: {:?}; repeated idempotent columns: {:?}",
            g.map(|x| x.0),
            c.map(|x| x.0)
        ))),
    }
}

/// Largest eigenvalue of `A_i` strictly below its valency.
pub fn second_eigenvalue(scheme: &SchemeDescriptor, spectral: &SpectralData, i: usize) -> Option<f64> {
    let vi = scheme.valency(i) as f64;
    let tol = spectral.tolerance * vi.max(1.0) * 1e3;
    spectral
        .p
        .iter()
        .map(|row| row[i])
        .filter(|&x| x < vi - tol)
        .max_by(f64::total_cmp)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCutAudit {
    pub p_iii: u64,
    pub kappa: usize,
    /// `kappa - p_ii^i`.
    pub slack: i64,
    /// Every enumerated minimum cut is larger than `p_ii^i`.
    pub min_cuts_ok: Option<bool>,
    pub theta: Option<f64>,
    /// Asserted only when the graph is not complete multipartite.
    pub theta_positive: Option<bool>,
    pub ok: bool,
}

/// `kappa > p_ii^i` for a connected relation with no induced `K_{2,1,1}`.
pub fn spectral_cut_audit(
    scheme: &SchemeDescriptor,
    i: usize,
    g: &Graph,
    kappa: usize,
    min_cut_sizes: Option<&[usize]>,
    spectral: Option<&SpectralData>,
) -> Result<SpectralCutAudit> {
    if local_clique_structure(g).is_none() {
        return Err(Error::HypothesisViolation(Hypothesis::NotK211Free));
    }
    let p = scheme.p(i, i, i);
    let theta = spectral.and_then(|s| second_eigenvalue(scheme, s, i));
    let theta_positive = match (spectral, is_complete_multipartite(g)) {
        (Some(_), false) => Some(theta.is_some_and(|t| t > 0.0)),
        _ => None,
    };
    let min_cuts_ok = min_cut_sizes.map(|sizes| sizes.iter().all(|&s| s as u64 > p));
    Ok(SpectralCutAudit {
        p_iii: p,
        kappa,
        slack: kappa as i64 - p as i64,
        ok: kappa as u64 > p && min_cuts_ok != Some(false) && theta_positive != Some(false),
        min_cuts_ok,
        theta,
        theta_positive,
    })
}

/// Twelve significant digits; magnitudes below `1e-9` print as `0`.
pub fn format_real(x: f64) -> String {
    if x.abs() < 1e-9 {
        return "0".to_string();
    }
    let precision = (11 - x.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{x:.precision$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}
