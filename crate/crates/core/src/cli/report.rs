//! JSON documents emitted with `--json`.
//!
//! ```text
//! { "algebra": ...,
//!   "verdicts": { "complete", "maximal_rank",
//!                 "symplectic": { "exists", "pfaffian", "witness", "conditions": [] },
//!                 "exact": { "exists", "witness" } },
//!   "diagnostics": [] }
//! ```

use serde::Serialize;

use crate::catalog::{EntryReport, RegressionReport, Status};
use crate::error::Result;
use crate::liealg::LieAlgebra;
use crate::structure::{is_maximal_rank, TorusAction};
use crate::symplectic::{Existence, SymplecticVerdict};

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraReport {
    pub algebra: String,
    pub verdicts: Verdicts,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub complete: bool,
    /// Absent when no torus was given.
    pub maximal_rank: Option<bool>,
    pub symplectic: SymplecticReport,
    pub exact: ExactReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymplecticReport {
    pub exists: bool,
    pub status: Existence,
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub parameters: Vec<String>,
    pub pfaffian: String,
    pub witness: Option<String>,
    pub witness_point: Option<Vec<String>>,
    pub conditions: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactReport {
    pub exists: bool,
    pub witness: Option<String>,
    pub one_form: Option<Vec<String>>,
}

fn strings(v: &[crate::exactmath::Rational]) -> Vec<String> {
    v.iter().map(crate::exactmath::fmt_rational).collect()
}

/// The nonvanishing condition: the Pfaffian itself unless it is constant.
fn pfaffian_conditions(v: &SymplecticVerdict) -> Vec<String> {
    if v.existence == Existence::Yes && !v.pfaffian.is_constant() {
        vec![format!("{} != 0", v.pfaffian)]
    } else {
        Vec::new()
    }
}

pub fn algebra_report(
    name: &str,
    g: &LieAlgebra,
    torus: Option<&TorusAction>,
    verdict: &SymplecticVerdict,
) -> Result<AlgebraReport> {
    let labels = g.labels();
    Ok(AlgebraReport {
        algebra: name.to_string(),
        verdicts: Verdicts {
            complete: crate::structure::is_complete(g).complete,
            maximal_rank: torus.map(is_maximal_rank).transpose()?,
            symplectic: SymplecticReport {
                exists: verdict.exists(),
                status: verdict.existence,
                z2_dim: verdict.z2_dim,
                b2_dim: verdict.b2_dim,
                parameters: verdict.generic.as_ref().map(|f| f.parameters.clone()).unwrap_or_default(),
                pfaffian: verdict.pfaffian.to_string(),
                witness: verdict.witness.as_ref().map(|w| w.display_with(labels)),
                witness_point: verdict.witness_point.as_deref().map(strings),
                conditions: pfaffian_conditions(verdict),
            },
            exact: ExactReport {
                exists: verdict.exact.exists,
                witness: verdict.exact.witness.as_ref().map(|w| w.display_with(labels)),
                one_form: verdict.exact.witness_one_form.as_deref().map(strings),
            },
        },
        diagnostics: Vec::new(),
    })
}

/// Catalog entries reuse the per-algebra schema, with the regression
/// comparisons attached.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntryReport {
    pub algebra: String,
    pub verdicts: Verdicts,
    pub diagnostics: Vec<String>,
    pub regression: EntryReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub documented_typos: usize,
    pub not_stated: usize,
    pub green: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<CatalogEntryReport>,
    pub summary: Summary,
}

pub fn catalog_report(r: &RegressionReport) -> CatalogReport {
    let entries = r
        .entries
        .iter()
        .map(|e| CatalogEntryReport {
            algebra: e.entry.clone(),
            verdicts: Verdicts {
                complete: e.complete,
                maximal_rank: Some(e.torus_rank == e.rank_bound),
                symplectic: SymplecticReport {
                    exists: e.symplectic == Existence::Yes,
                    status: e.symplectic,
                    z2_dim: e.z2_dim,
                    b2_dim: e.b2_dim,
                    parameters: e.parameters.clone(),
                    pfaffian: e.pfaffian.clone(),
                    witness: e.witness.clone(),
                    witness_point: None,
                    conditions: e.conditions.iter().map(|c| c.printed.clone()).collect(),
                },
                exact: ExactReport { exists: e.exact, witness: e.exact_witness.clone(), one_form: None },
            },
            diagnostics: e
                .comparisons
                .iter()
                .filter(|c| c.status != Status::Match)
                .map(|c| format!("{}: {}: expected {}, computed {}", c.check, c.status, c.expected, c.computed))
                .collect(),
            regression: e.clone(),
        })
        .collect();
    CatalogReport {
        entries,
        summary: Summary {
            entries: r.entries.len(),
            matches: r.matches,
            mismatches: r.mismatches,
            documented_typos: r.documented_typos,
            not_stated: r.not_stated,
            green: r.green,
        },
    }
}
