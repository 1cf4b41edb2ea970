use std::collections::BTreeMap;

use serde::Serialize;

use super::{contract_to_bipartite, verify_claims, ClaimReport, ReductionState};
use crate::algorithms::{binomial, for_each_subset};
use crate::drawing::OnePlaneDrawing;
use crate::graph::{mask_component_stats, Edge, IndexedGraph, VertexSet};
use crate::{Error, GraphError, Result};

/// Largest number of candidate sets [`certify_all_cuts`] will examine.
pub const CUT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// Checks on the contracted bipartite drawing `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BChecks {
    pub vertices: usize,
    pub edges: usize,
    /// Every edge joins `S` to a contracted vertex.
    pub bipartite: bool,
    pub valid: bool,
    /// `deg_B(f^i)` for each representative.
    pub degrees: BTreeMap<String, usize>,
    pub degrees_at_least_six: bool,
    /// `e(B) <= 3 n(B) - 8`.
    pub density_ok: bool,
}

impl BChecks {
    fn of(b: &OnePlaneDrawing, s: &VertexSet, reps: &[String]) -> Self {
        let g = b.graph();
        let degrees: BTreeMap<String, usize> = reps.iter().map(|f| (f.clone(), g.degree(f))).collect();
        let is_rep = |v: &str| degrees.contains_key(v);
        let n = g.n();
        BChecks {
            vertices: n,
            edges: g.e(),
            bipartite: g.vertices().all(|v| s.contains(v) || is_rep(v))
                && g.edges().all(|e| (s.contains(e.u()) && is_rep(e.v())) || (s.contains(e.v()) && is_rep(e.u()))),
            valid: b.validate().valid,
            degrees_at_least_six: degrees.values().all(|&d| d >= 6),
            density_ok: n < 3 || g.e() + 8 <= 3 * n,
            degrees,
        }
    }

    fn first_failure(&self) -> Option<String> {
        if !self.bipartite {
            return Some("B is not bipartite between S and the contracted vertices".into());
        }
        if !self.valid {
            return Some("B is not a valid drawing".into());
        }
        if let Some((f, d)) = self.degrees.iter().find(|(_, &d)| d < 6) {
            return Some(format!("contracted vertex {f} has degree {d} < 6 in B"));
        }
        if !self.density_ok {
            return Some(format!("B has {} edges, above 3 * {} - 8", self.edges, self.vertices));
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundChecks {
    /// `6l <= e(B)`.
    pub lower_ok: bool,
    /// `e(B) <= 3(l + |S|) - 8`.
    pub upper_ok: bool,
    /// `3(l - |S|) <= -8`.
    pub difference_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    /// `l - |S|` from the pipeline.
    pub pipeline_value: i64,
    /// `c(G - S) - |S|` computed on `G` directly.
    pub direct_value: i64,
    pub consistent: bool,
    pub at_most_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub first_failure: Option<String>,
}

/// Every intermediate result of one run of the reduction on a cut `S`.
///
/// Field order is part of the JSON format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub s: Vec<String>,
    pub cut_size: usize,
    pub is_cut: bool,
    pub warnings: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub ell: usize,
    pub deleted_op1: Vec<Edge>,
    pub deleted_op2: Vec<Edge>,
    pub operations_disjoint: bool,
    pub claims: Option<ClaimReport>,
    pub b_checks: Option<BChecks>,
    /// `6l`.
    pub karpov_lhs: i64,
    /// `3(l + |S|) - 8`.
    pub karpov_rhs: i64,
    pub bounds: Option<BoundChecks>,
    pub conclusion: Conclusion,
    pub contraction_map: BTreeMap<String, Vec<String>>,
    pub verdict: Verdict,
}

impl CutCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

/// Runs the reduction on `S` and records every check.
///
/// Fails only on invalid drawings or unknown vertices. Inputs outside the
/// hypotheses (|S| < 6, crossings below type-2A) run anyway with warnings.
pub fn certify_cut(d: &OnePlaneDrawing, s: &VertexSet) -> Result<CutCertificate> {
    let report = d.validate();
    if !report.valid {
        return Err(Error::InvalidDrawing(format!("{:?}", report.violations)));
    }
    let mut warnings = Vec::new();
    if !report.is_type_2a_drawing {
        warnings.push("drawing is not type-2A".to_string());
    }
    certify_checked(d, s, warnings)
}

fn certify_checked(d: &OnePlaneDrawing, s: &VertexSet, mut warnings: Vec<String>) -> Result<CutCertificate> {
    let g = d.graph();
    if let Some(v) = s.iter().find(|v| !g.has_vertex(v)) {
        return Err(GraphError::UnknownVertex(v.clone()).into());
    }
    let comps = g.without_vertices(s).components();
    let direct_value = comps.len() as i64 - s.len() as i64;
    let ell = comps.len();
    let mut cert = CutCertificate {
        s: s.iter().cloned().collect(),
        cut_size: s.len(),
        is_cut: ell >= 2,
        warnings: Vec::new(),
        components: comps.iter().map(|c| c.iter().cloned().collect()).collect(),
        ell,
        deleted_op1: Vec::new(),
        deleted_op2: Vec::new(),
        operations_disjoint: true,
        claims: None,
        b_checks: None,
        karpov_lhs: 6 * ell as i64,
        karpov_rhs: 3 * (ell + s.len()) as i64 - 8,
        bounds: None,
        conclusion: Conclusion {
            pipeline_value: direct_value,
            direct_value,
            consistent: true,
            at_most_one: direct_value <= 1,
        },
        contraction_map: BTreeMap::new(),
        verdict: Verdict { pass: true, first_failure: None },
    };
    if !cert.is_cut {
        warnings.push("S is not a vertex cut; the bound holds trivially".into());
        cert.warnings = warnings;
        return Ok(cert);
    }
    if s.len() < 6 {
        warnings.push(format!("|S| = {} is below 6", s.len()));
    }
    cert.warnings = warnings;

    let state = ReductionState::new(d, s)?;
    cert.deleted_op1 = state.deleted_op1.clone();
    cert.deleted_op2 = state.deleted_op2.clone();
    cert.operations_disjoint = state.operations_disjoint();
    cert.contraction_map =
        state.contraction_map.iter().map(|(k, v)| (k.clone(), v.iter().cloned().collect())).collect();
    let claims = verify_claims(&state);
    let mut failures: Vec<String> = Vec::new();
    if !cert.operations_disjoint {
        failures.push("the two deletion operations overlap".into());
    }
    failures.extend(claims.first_failure());
    let contractible = claims.components.iter().all(|c| c.induces_component && c.edges_uncrossed);
    cert.claims = Some(claims);

    if contractible {
        match contract_to_bipartite(&state) {
            Ok(b) => {
                let reps: Vec<String> = state.contraction_map.keys().cloned().collect();
                let checks = BChecks::of(&b, s, &reps);
                failures.extend(checks.first_failure());
                let e_b = checks.edges as i64;
                let bounds = BoundChecks {
                    lower_ok: cert.karpov_lhs <= e_b,
                    upper_ok: e_b <= cert.karpov_rhs,
                    difference_ok: 3 * (ell as i64 - s.len() as i64) <= -8,
                };
                if !bounds.lower_ok {
                    failures.push(format!("e(B) = {e_b} is below 6l = {}", cert.karpov_lhs));
                }
                if !bounds.upper_ok {
                    failures.push(format!("e(B) = {e_b} exceeds 3(l + |S|) - 8 = {}", cert.karpov_rhs));
                }
                if !bounds.difference_ok {
                    failures.push(format!("3(l - |S|) = {} exceeds -8", 3 * (ell as i64 - s.len() as i64)));
                }
                cert.b_checks = Some(checks);
                cert.bounds = Some(bounds);
            }
            Err(e) => failures.push(format!("contraction failed: {e}")),
        }
    } else {
        failures.push("contraction skipped: a component is not an uncrossed component of H - S".into());
    }

    cert.conclusion.pipeline_value = state.ell() as i64 - s.len() as i64;
    cert.conclusion.consistent = cert.conclusion.pipeline_value == direct_value;
    if !cert.conclusion.consistent {
        failures.push("pipeline and direct values of c(G - S) - |S| differ".into());
    }
    if !cert.conclusion.at_most_one {
        failures.push(format!("c(G - S) - |S| = {direct_value} exceeds 1"));
    }
    cert.verdict = Verdict { pass: failures.is_empty(), first_failure: failures.into_iter().next() };
    Ok(cert)
}

/// Certificates for every disconnecting set of size at most `max_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllCutsReport {
    pub max_size: usize,
    pub examined: u64,
    pub cut_count: usize,
    pub all_pass: bool,
    pub certificates: Vec<CutCertificate>,
}

/// Enumerates every `S` with `|S| <= max_size` that disconnects `G` and certifies it.
///
/// Certificates come in lexicographic order of the sorted vertex lists.
/// Refuses `n > 64` and more than [`CUT_ENUMERATION_LIMIT`] candidate sets.
pub fn certify_all_cuts(d: &OnePlaneDrawing, max_size: usize) -> Result<AllCutsReport> {
    let g = d.graph();
    let n = g.n();
    if n > 64 {
        return Err(Error::guard("cut-enumeration-size", format!("n = {n} exceeds 64")));
    }
    let top = max_size.min(n);
    let examined: u64 = (0..=top).map(|k| binomial(n as u64, k as u64)).fold(0u64, u64::saturating_add);
    if examined > CUT_ENUMERATION_LIMIT {
        return Err(Error::guard(
            "cut-enumeration-subsets",
            format!("{examined} candidate sets exceed the limit {CUT_ENUMERATION_LIMIT}"),
        ));
    }
    let report = d.validate();
    if !report.valid {
        return Err(Error::InvalidDrawing(format!("{:?}", report.violations)));
    }
    let ig = IndexedGraph::new(g);
    let adj = ig.masks();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cuts: Vec<VertexSet> = Vec::new();
    for k in 0..=top {
        for_each_subset(n, k, |mask| {
            if mask_component_stats(&adj, all & !mask).0 >= 2 {
                cuts.push(ig.set_of((0..n).filter(|&i| mask >> i & 1 == 1)));
            }
        });
    }
    cuts.sort();
    let base_warnings: Vec<String> =
        if report.is_type_2a_drawing { Vec::new() } else { vec!["drawing is not type-2A".to_string()] };
    let certificates = cuts.iter().map(|s| certify_checked(d, s, base_warnings.clone())).collect::<Result<Vec<_>>>()?;
    Ok(AllCutsReport {
        max_size,
        examined,
        cut_count: certificates.len(),
        all_pass: certificates.iter().all(|c| c.verdict.pass),
        certificates,
    })
}
