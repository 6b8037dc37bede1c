use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{build_entry, default_entries, rename_variable, CatalogEntry, ExpectedSymplectic, Params, TYPOS};
use crate::cli::format;
use crate::error::Result;
use crate::exactmath::{MultiPoly, Rational};
use crate::structure::{ad_spans_derivations, derivation_algebra, is_complete, rank_bound, verify_torus};
use crate::symplectic::{decide_symplectic_with_bound, is_closed, witness_bound_from_env, Existence, SymplecticVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    DocumentedTypo,
    NotStated,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Match => "match",
            Self::Mismatch => "MISMATCH",
            Self::DocumentedTypo => "documented typo",
            Self::NotStated => "not stated",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionCheck {
    pub printed: String,
    /// The condition rewritten in the generic cocycle parameters.
    pub renamed: String,
    pub divides_pfaffian: bool,
    pub divides_square: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    /// Display name, with parameters.
    pub entry: String,
    /// Catalog key (`n6_5`, `Q`), as used by the typo list.
    pub name: String,
    pub dim: usize,
    pub nilradical_dim: usize,
    pub center_dim: usize,
    pub der_dim: usize,
    pub complete: bool,
    pub ad_spans_der: bool,
    pub rank_bound: usize,
    pub torus_rank: usize,
    pub symplectic: Existence,
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub parameters: Vec<String>,
    pub pfaffian: String,
    pub witness: Option<String>,
    pub exact: bool,
    pub exact_witness: Option<String>,
    pub conditions: Vec<ConditionCheck>,
    pub comparisons: Vec<Comparison>,
}

impl EntryReport {
    pub fn green(&self) -> bool {
        self.comparisons.iter().all(|c| c.status != Status::Mismatch)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegressionReport {
    pub entries: Vec<EntryReport>,
    pub matches: usize,
    pub mismatches: usize,
    pub documented_typos: usize,
    pub not_stated: usize,
    pub green: bool,
}

/// Which entries to run. Families are run at their default sizes.
#[derive(Clone, Debug, Default)]
pub struct Selection {
    /// Restrict table rows to this nilradical dimension and skip families.
    pub dim: Option<usize>,
    /// Explicit names (`n4_1`, `L4`, `Q5`, `abelian3`); empty means all.
    pub names: Vec<String>,
    /// Override for rows that take the parameter `a`.
    pub a: Option<Rational>,
}

impl Selection {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn dim(d: usize) -> Self {
        Self { dim: Some(d), ..Self::default() }
    }

    pub fn names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self { names: names.into_iter().map(Into::into).collect(), ..Self::default() }
    }

    fn entries(&self) -> Result<Vec<CatalogEntry>> {
        let with_a = |name: &str, n: Option<usize>| -> Result<CatalogEntry> {
            // rows without the parameter ignore the override
            let a = if n.is_none() && super::takes_parameter(name) { self.a.clone() } else { None };
            build_entry(name, &Params { n, a })
        };
        if !self.names.is_empty() {
            return self
                .names
                .iter()
                .map(|s| {
                    let (family, n) = super::split_name(s);
                    with_a(&family, n)
                })
                .collect();
        }
        match self.dim {
            Some(d) => super::table_rows(Some(d)).into_iter().map(|r| with_a(r, None)).collect(),
            None if self.a.is_none() => default_entries(),
            None => default_entries()?
                .into_iter()
                .map(|e| if e.params.n.is_some() { Ok(e) } else { with_a(&e.name, None) })
                .collect(),
        }
    }
}

pub fn run_regression(selection: &Selection) -> Result<RegressionReport> {
    let bound = witness_bound_from_env()?;
    let entries = selection.entries()?;
    let reports: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| evaluate(e, bound))
        .collect::<Result<Vec<_>>>()?;
    let count = |s: Status| reports.iter().flat_map(|r| &r.comparisons).filter(|c| c.status == s).count();
    let mismatches = count(Status::Mismatch);
    Ok(RegressionReport {
        matches: count(Status::Match),
        mismatches,
        documented_typos: count(Status::DocumentedTypo),
        not_stated: count(Status::NotStated),
        green: mismatches == 0,
        entries: reports,
    })
}

fn documented(entry: &str, check: &str) -> Option<&'static super::Typo> {
    TYPOS.iter().find(|t| t.entry == entry && t.check == check)
}

/// Equal is a match unless a typo is documented for the check, in which case
/// the documentation is stale. Unequal is a documented typo only when the
/// documented correction is what was computed.
fn compare(entry: &str, check: &str, expected: String, computed: String) -> Comparison {
    let typo = documented(entry, check);
    let status = match (expected.eq_ignore_ascii_case(&computed), typo) {
        (true, None) => Status::Match,
        (true, Some(_)) => Status::Mismatch,
        (false, Some(t)) if t.corrected.eq_ignore_ascii_case(&computed) => Status::DocumentedTypo,
        (false, _) => Status::Mismatch,
    };
    Comparison { check: check.to_string(), expected, computed, status }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn symplectic_word(e: Existence) -> &'static str {
    match e {
        Existence::Yes => "yes",
        Existence::No => "never",
        Existence::OddDimension => "dimension not even",
    }
}

fn evaluate(e: &CatalogEntry, bound: u64) -> Result<EntryReport> {
    let key = e.name.as_str();
    let g = &e.algebra;
    let mut comparisons = Vec::new();

    if !e.corrections.is_empty() {
        let printed = format::parse(&e.printed_source()).map_err(crate::Error::from)?;
        let computed = match printed.torus_action() {
            Err(err) => format!("invalid: {err}"),
            Ok(t) => match verify_torus(&t) {
                Err(v) => format!("invalid: {v}"),
                Ok(()) => match crate::structure::semidirect(&t) {
                    Ok(s) if s.jacobi_holds() => "valid".to_string(),
                    Ok(_) => "invalid: Jacobi fails".to_string(),
                    Err(err) => format!("invalid: {err}"),
                },
            },
        };
        let status = match (computed.as_str(), documented(key, "printed-brackets")) {
            ("valid", _) | (_, None) => Status::Mismatch,
            (_, Some(_)) => Status::DocumentedTypo,
        };
        comparisons.push(Comparison {
            check: "printed-brackets".into(),
            expected: "valid".into(),
            computed,
            status,
        });
    }

    let completeness = is_complete(g);
    let der = derivation_algebra(g);
    let ad_spans_der = ad_spans_derivations(g, &der);
    comparisons.push(compare(key, "complete", "yes".into(), yes_no(completeness.complete && ad_spans_der)));

    let bound_rank = rank_bound(&e.nilradical)?;
    let maximal = e.torus.rank() == bound_rank;
    comparisons.push(compare(key, "maximal-rank", yes_no(e.expected.maximal_rank), yes_no(maximal)));

    let verdict = decide_symplectic_with_bound(g, bound)?;
    let expected_word = match e.expected.symplectic {
        ExpectedSymplectic::Yes => "yes",
        ExpectedSymplectic::Never => "never",
        ExpectedSymplectic::DimensionNotEven => "dimension not even",
    };
    comparisons.push(compare(key, "symplectic", expected_word.into(), symplectic_word(verdict.existence).into()));

    if let Some(w) = &verdict.witness {
        let ok = is_closed(g, w) && w.is_nondegenerate();
        comparisons.push(compare(key, "witness", "verified".into(), if ok { "verified" } else { "invalid" }.into()));
    }
    if let Some(w) = &verdict.exact.witness {
        let ok = is_closed(g, w) && w.is_nondegenerate() && verdict.exact.witness_one_form.is_some();
        comparisons.push(compare(key, "exact-witness", "verified".into(), if ok { "verified" } else { "invalid" }.into()));
    }

    if verdict.existence != Existence::OddDimension {
        let computed = yes_no(verdict.exact.exists);
        comparisons.push(match e.expected.exact {
            Some(x) => compare(key, "exact", yes_no(x), computed),
            None => Comparison {
                check: "exact".into(),
                expected: "not stated".into(),
                computed,
                status: Status::NotStated,
            },
        });
    }

    if let Some(count) = e.expected.parameter_count {
        comparisons.push(compare(key, "parameter-count", count.to_string(), verdict.z2_dim.to_string()));
    }

    let conditions = check_conditions(e, &verdict)?;
    for (k, c) in conditions.iter().enumerate() {
        let check = format!("condition[{}]", k + 1);
        let holds = c.divides_pfaffian || c.divides_square;
        let computed = if holds { "divides Pf" } else { "does not divide Pf" };
        // A documented condition can still hold at special parameter values
        // (e.g. a = 1), so only a failing one consults the typo list.
        let status = match (holds, documented(key, &check)) {
            (true, _) => Status::Match,
            (false, Some(t)) => {
                let fixed = condition_check(e, &verdict, t.corrected)?;
                if fixed.divides_pfaffian || fixed.divides_square {
                    Status::DocumentedTypo
                } else {
                    Status::Mismatch
                }
            }
            (false, None) => Status::Mismatch,
        };
        let cmp = Comparison { check, expected: "divides Pf".into(), computed: computed.into(), status };
        comparisons.push(cmp);
    }

    let labels = g.labels();
    Ok(EntryReport {
        entry: e.display_name(),
        name: e.name.clone(),
        dim: g.dim(),
        nilradical_dim: e.nilradical.dim(),
        center_dim: completeness.center_dim,
        der_dim: completeness.der_dim,
        complete: completeness.complete,
        ad_spans_der,
        rank_bound: bound_rank,
        torus_rank: e.torus.rank(),
        symplectic: verdict.existence,
        z2_dim: verdict.z2_dim,
        b2_dim: verdict.b2_dim,
        parameters: verdict.generic.as_ref().map(|f| f.parameters.clone()).unwrap_or_default(),
        pfaffian: verdict.pfaffian.to_string(),
        witness: verdict.witness.as_ref().map(|w| w.display_with(labels)),
        exact: verdict.exact.exists,
        exact_witness: verdict.exact.witness.as_ref().map(|w| w.display_with(labels)),
        conditions,
        comparisons,
    })
}

fn check_conditions(e: &CatalogEntry, verdict: &SymplecticVerdict) -> Result<Vec<ConditionCheck>> {
    e.expected
        .conditions
        .iter()
        .map(|c| condition_check(e, verdict, c))
        .collect()
}

/// Rewrites a printed condition in the generic parameters and tests whether
/// it divides the Pfaffian or its square.
pub(crate) fn condition_check(e: &CatalogEntry, verdict: &SymplecticVerdict, printed: &str) -> Result<ConditionCheck> {
    let unusable = |renamed: &str| ConditionCheck {
        printed: printed.to_string(),
        renamed: renamed.to_string(),
        divides_pfaffian: false,
        divides_square: false,
    };
    let Some(generic) = &verdict.generic else {
        return Ok(unusable("no generic cocycle"));
    };
    let g = &e.algebra;
    let entry = |i: usize, j: usize| -> Option<MultiPoly> {
        let p = g.index_of(&format!("e{i}"))?;
        let q = g.index_of(&format!("e{j}"))?;
        Some(generic.matrix.get(p, q).clone())
    };
    let poly = MultiPoly::parse(printed)?;
    let mut map = std::collections::HashMap::new();
    for v in poly.used_variables() {
        match rename_variable(&v, e.params.a.as_ref(), &entry) {
            Some(p) => {
                map.insert(v, p);
            }
            None => return Ok(unusable(&format!("cannot interpret `{v}`"))),
        }
    }
    let renamed = poly.substitute(&map).with_variables(&generic.parameters)?;
    if renamed.is_zero() {
        return Ok(unusable("0"));
    }
    let pf = &verdict.pfaffian;
    let divides_pfaffian = pf.is_divisible_by(&renamed)?;
    let divides_square = divides_pfaffian || (pf * pf).is_divisible_by(&renamed)?;
    let _ = Rational::zero();
    Ok(ConditionCheck {
        printed: printed.to_string(),
        renamed: renamed.to_string(),
        divides_pfaffian,
        divides_square,
    })
}
