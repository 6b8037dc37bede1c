//! Built-in algebras: the three infinite families and the table rows for
//! nilradicals of dimension 3 to 6, each with the verdicts printed for it.

mod propositions;
mod regression;
mod tables;

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::cli::format::{self, AlgebraFile};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, parse_rational, MultiPoly, Rational};
use crate::liealg::LieAlgebra;
use crate::structure::{semidirect, verify_torus, TorusAction};

pub use propositions::{
    abelian_check, filiform_l_check, l4_identity, q_check, reproduce_propositions, AbelianCheck, FiliformLCheck,
    L4Identity, PropositionReport, QCheck, Q_PRINTED_TOP_POWER,
};
pub use regression::{
    run_regression, Comparison, ConditionCheck, EntryReport, RegressionReport, Selection, Status,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectedSymplectic {
    Yes,
    /// "Never admits a symplectic structure".
    Never,
    /// "Dimension not even".
    DimensionNotEven,
}

impl std::fmt::Display for ExpectedSymplectic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Yes => "yes",
            Self::Never => "never",
            Self::DimensionNotEven => "dimension not even",
        })
    }
}

/// Verdicts as printed, never computed.
#[derive(Clone, Debug)]
pub struct Expected {
    pub symplectic: ExpectedSymplectic,
    pub maximal_rank: bool,
    /// Printed existence of an exact symplectic form, where stated.
    pub exact: Option<bool>,
    pub conditions: Vec<String>,
    pub parameter_count: Option<usize>,
}

/// A change between the printed brackets and the ones used here. `printed`
/// absent means the rule was added; `corrected` absent means it was dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction {
    pub printed: Option<String>,
    pub corrected: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub a: Option<Rational>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Row or family name: `n4_1`, `abelian`, `L`, `Q`.
    pub name: String,
    pub params: Params,
    pub file: AlgebraFile,
    pub nilradical: LieAlgebra,
    pub torus: TorusAction,
    pub algebra: LieAlgebra,
    pub expected: Expected,
    pub corrections: Vec<Correction>,
}

impl CatalogEntry {
    /// `n4_1`, `L4`, `Q5`, `abelian3`, with `a=...` appended when set.
    pub fn display_name(&self) -> String {
        let mut s = self.name.clone();
        if let Some(n) = self.params.n {
            let _ = write!(s, "{n}");
        }
        if let Some(a) = &self.params.a {
            let _ = write!(s, "(a={})", fmt_rational(a));
        }
        s
    }

    /// Source text with every correction undone.
    pub fn printed_source(&self) -> String {
        let mut lines: Vec<String> = self.file.to_string().lines().map(str::to_string).collect();
        for c in &self.corrections {
            match (&c.printed, &c.corrected) {
                (p, Some(fixed)) => {
                    let at = lines.iter().position(|l| l == fixed).expect("corrected rule present");
                    match p {
                        Some(p) => lines[at] = p.clone(),
                        None => {
                            lines.remove(at);
                        }
                    }
                }
                (Some(p), None) => {
                    let at = lines.iter().position(|l| l.starts_with("torus")).unwrap_or(lines.len());
                    lines.insert(at, p.clone());
                }
                (None, None) => {}
            }
        }
        lines.join("\n") + "\n"
    }
}

/// Typos in the printed tables, each with its computed correction.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Typo {
    pub entry: &'static str,
    /// Comparison the typo affects, as named in regression reports.
    pub check: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
}

pub static TYPOS: &[Typo] = &[
    Typo {
        entry: "n3_1",
        check: "printed-brackets",
        printed: "[e4,e1]=e1, [e4,e2]=e2 with no [e4,e3]",
        corrected: "[e4,e3] = 2*e3",
    },
    Typo {
        entry: "n5_2",
        check: "printed-brackets",
        printed: "[e6,e3] = -3*e3",
        corrected: "[e6,e3] = -e3",
    },
    Typo {
        entry: "n6_10",
        check: "printed-brackets",
        printed: "[e7,e3] = 2*e2",
        corrected: "[e7,e3] = 2*e3",
    },
    Typo {
        entry: "Q",
        check: "printed-brackets",
        printed: "[e0,ei] = e(i+1) for 1 <= i <= n-1",
        corrected: "[e0,ei] = e(i+1) for 1 <= i <= n-2",
    },
    Typo {
        entry: "n6_5",
        check: "condition[2]",
        printed: "a6_8^2 - a6_9^2",
        corrected: "a*a6_8^2 - a6_9^2",
    },
    Typo {
        entry: "n6_5",
        check: "condition[3]",
        printed: "a*a7_8 + a*a8_9 - a7_10 - a9_10",
        corrected: "a*a7_8 + a*a8_9 - a7_10 + a9_10",
    },
    Typo {
        entry: "n6_13",
        check: "condition[2]",
        printed: "a3_8*a6_8 - a4_8^2",
        corrected: "2*a3_8*a6_8 - a4_8^2",
    },
    Typo {
        entry: "n6_16",
        check: "condition[2]",
        printed: "3*a3_8*a6_8^2 - 3*a4_8*a5_8*a6_8 - a5_8^3",
        corrected: "3*a3_8*a6_8^2 - 3*a4_8*a5_8*a6_8 + a5_8^3",
    },
    Typo {
        entry: "n6_17",
        check: "condition[2]",
        printed: "2*a3_8*a6_8 - a4_8",
        corrected: "2*a3_8*a6_8 - a4_8^2",
    },
    Typo {
        entry: "n6_21",
        check: "condition[1]",
        printed: "a2_8*a6_8 - 8*a3_8*a5_8 - 3*a4_8^2",
        corrected: "8*a2_8*a6_8 - 8*a3_8*a5_8 + 3*a4_8^2",
    },
    Typo {
        entry: "n6_21",
        check: "maximal-rank",
        printed: "No",
        corrected: "Yes",
    },
];

/// Names accepted by [`build_entry`], in table order.
pub fn entry_names() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = vec!["abelian", "L", "Q"];
    v.extend(tables::ROWS.iter().map(|r| r.name));
    v
}

/// Table rows only, optionally restricted to one nilradical dimension.
pub fn table_rows(dim: Option<usize>) -> Vec<&'static str> {
    tables::ROWS
        .iter()
        .filter(|r| dim.is_none_or(|d| row_dim(r.name) == d))
        .map(|r| r.name)
        .collect()
}

/// Whether the table row `name` has the parameter `a`.
pub(crate) fn takes_parameter(name: &str) -> bool {
    tables::ROWS.iter().any(|r| r.name == name && r.default_a.is_some())
}

fn row_dim(name: &str) -> usize {
    name[1..name.find('_').expect("row names are n{dim}_{k}")].parse().expect("row names are n{dim}_{k}")
}

fn invalid(entry: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { entry: entry.to_string(), reason: reason.into() }
}

/// Splits `L4`, `Q5`, `abelian3` into family and `n`; table names pass
/// through unchanged.
pub fn split_name(name: &str) -> (String, Option<usize>) {
    for family in ["abelian", "L", "Q"] {
        if let Some(rest) = name.strip_prefix(family) {
            if let Ok(n) = rest.parse::<usize>() {
                return (family.to_string(), Some(n));
            }
        }
    }
    (name.to_string(), None)
}

pub fn build_entry(name: &str, params: &Params) -> Result<CatalogEntry> {
    let (source, expected, corrections, params) = match name {
        "abelian" => abelian_source(params)?,
        "L" => filiform_l_source(params)?,
        "Q" => filiform_q_source(params)?,
        _ => row_source(name, params)?,
    };
    let file = format::parse(&source).map_err(|d| invalid(name, format!("internal table error: {d}")))?;
    let nilradical = file.nilradical()?;
    nilradical.ensure_jacobi()?;
    let torus = file.torus_action()?;
    verify_torus(&torus).map_err(|v| Error::Torus(v.to_string()))?;
    let algebra = semidirect(&torus)?;
    algebra.ensure_jacobi()?;
    Ok(CatalogEntry {
        name: name.to_string(),
        params,
        file,
        nilradical,
        torus,
        algebra,
        expected,
        corrections,
    })
}

/// Builds every entry in [`entry_names`] at default parameters; families at
/// the sizes exercised by the regression.
pub fn default_entries() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(build_entry("abelian", &Params { n: Some(n), a: None })?);
    }
    for n in 4..=8 {
        out.push(build_entry("L", &Params { n: Some(n), a: None })?);
    }
    for n in [5, 7, 9] {
        out.push(build_entry("Q", &Params { n: Some(n), a: None })?);
    }
    for r in tables::ROWS {
        out.push(build_entry(r.name, &Params::default())?);
    }
    Ok(out)
}

type Built = (String, Expected, Vec<Correction>, Params);

fn require_n(entry: &str, params: &Params) -> Result<usize> {
    if params.a.is_some() {
        return Err(invalid(entry, "this family takes no parameter a"));
    }
    params.n.ok_or_else(|| invalid(entry, "parameter n is required"))
}

fn family_expected(symplectic: ExpectedSymplectic, exact: Option<bool>, count: Option<usize>) -> Expected {
    Expected {
        symplectic,
        maximal_rank: true,
        exact,
        conditions: Vec::new(),
        parameter_count: count,
    }
}

/// `h ⋉ K^n` with `[e_{n+i}, e_i] = e_i`.
fn abelian_source(params: &Params) -> Result<Built> {
    let n = require_n("abelian", params)?;
    if n < 1 {
        return Err(invalid("abelian", "n must be at least 1"));
    }
    let mut s = format!("algebra abelian{n}\nbasis");
    for i in 1..=n {
        let _ = write!(s, " e{i}");
    }
    s.push_str("\ntorus");
    for i in 1..=n {
        let _ = write!(s, " e{}", n + i);
    }
    s.push('\n');
    for i in 1..=n {
        let _ = writeln!(s, "[e{},e{i}] = e{i}", n + i);
    }
    let expected = family_expected(ExpectedSymplectic::Yes, Some(true), Some(n + n * (n - 1) / 2));
    Ok((s, expected, Vec::new(), Params { n: Some(n), a: None }))
}

/// `L_n`: `[e1, ei] = e(i+1)` for `2 <= i <= n-1`, with its rank-two torus.
fn filiform_l_source(params: &Params) -> Result<Built> {
    let n = require_n("L", params)?;
    if n < 3 {
        return Err(invalid("L", "n must be at least 3"));
    }
    let mut s = format!("algebra L{n}\nbasis");
    for i in 1..=n {
        let _ = write!(s, " e{i}");
    }
    s.push('\n');
    for i in 2..n {
        let _ = writeln!(s, "[e1,e{i}] = e{}", i + 1);
    }
    let (h1, h2) = (n + 1, n + 2);
    let _ = writeln!(s, "torus e{h1} e{h2}\n[e{h1},e1] = e1");
    for i in 3..=n {
        let _ = writeln!(s, "[e{h1},e{i}] = {}*e{i}", i - 2);
    }
    for i in 2..=n {
        let _ = writeln!(s, "[e{h2},e{i}] = e{i}");
    }
    let symplectic = if n == 4 {
        ExpectedSymplectic::Yes
    } else if n % 2 == 1 {
        ExpectedSymplectic::DimensionNotEven
    } else {
        ExpectedSymplectic::Never
    };
    let expected = family_expected(symplectic, None, (n == 4).then_some(n + 1));
    Ok((s, expected, Vec::new(), Params { n: Some(n), a: None }))
}

/// `Q_n`, `n = 2k + 1`, on `e0..en` with its rank-two torus.
fn filiform_q_source(params: &Params) -> Result<Built> {
    let n = require_n("Q", params)?;
    if n < 5 || n % 2 == 0 {
        return Err(invalid("Q", "n must be odd and at least 5"));
    }
    let k = (n - 1) / 2;
    let mut s = format!("algebra Q{n}\nbasis");
    for i in 0..=n {
        let _ = write!(s, " e{i}");
    }
    s.push('\n');
    for i in 1..=n - 2 {
        let _ = writeln!(s, "[e0,e{i}] = e{}", i + 1);
    }
    for i in 1..=k {
        let sign = if i % 2 == 0 { "" } else { "-" };
        let _ = writeln!(s, "[e{i},e{}] = {sign}e{n}", n - i);
    }
    let (h1, h2) = (n + 1, n + 2);
    let _ = writeln!(s, "torus e{h1} e{h2}\n[e{h1},e0] = e0");
    for i in 2..n {
        let _ = writeln!(s, "[e{h1},e{i}] = {}*e{i}", i - 1);
    }
    let _ = writeln!(s, "[e{h1},e{n}] = {}*e{n}", n - 2);
    for i in 1..n {
        let _ = writeln!(s, "[e{h2},e{i}] = e{i}");
    }
    let _ = writeln!(s, "[e{h2},e{n}] = 2*e{n}");
    let corrections = vec![Correction {
        printed: Some(format!("[e0,e{}] = e{n}", n - 1)),
        corrected: None,
    }];
    let expected = family_expected(ExpectedSymplectic::Yes, Some(true), None);
    Ok((s, expected, corrections, Params { n: Some(n), a: None }))
}

fn row_source(name: &str, params: &Params) -> Result<Built> {
    let row = tables::ROWS
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    if params.n.is_some() {
        return Err(invalid(name, "table rows take no parameter n"));
    }
    let a = match (row.default_a, &params.a) {
        (None, Some(_)) => return Err(invalid(name, "this row has no parameter a")),
        (None, None) => None,
        (Some(_), Some(a)) => Some(a.clone()),
        (Some((p, q)), None) => Some(Rational::new(p.into(), q.into())),
    };
    let mut body = row.body.to_string();
    if let Some(a) = &a {
        if a.is_zero() {
            return Err(invalid(name, "a must be nonzero"));
        }
        let inv = Rational::one() / a;
        let subs = [("{a}", a.clone()), ("{1/a}", inv.clone()), ("{-1/a}", -inv)];
        for (k, v) in &subs {
            body = body.replace(k, &fmt_rational(v));
        }
    }
    let source = format!("algebra {name}\n{body}\n");
    let expected = Expected {
        symplectic: row.symplectic,
        maximal_rank: row.maximal_rank,
        exact: None,
        conditions: row.conditions.iter().map(|c| c.to_string()).collect(),
        parameter_count: row.parameter_count,
    };
    let corrections = row
        .corrections
        .iter()
        .map(|(p, c)| Correction {
            printed: p.map(str::to_string),
            corrected: c.map(str::to_string),
        })
        .collect();
    Ok((source, expected, corrections, Params { n: None, a }))
}

/// Parses `a=R` overrides from the command line.
pub fn parse_assignment(s: &str) -> Result<(String, Rational)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| Error::InvalidConfig(format!("expected NAME=VALUE, got `{s}`")))?;
    let value = parse_rational(v.trim())
        .ok_or_else(|| Error::InvalidConfig(format!("`{}` is not a rational number", v.trim())))?;
    Ok((k.trim().to_string(), value))
}

/// Printed variable `name` as a polynomial in the entries of `generic`.
/// Printed variable `name` as a polynomial in the generic cocycle: `a` is
/// the row parameter and `a{i}_{j}` is `-ω(e_i, e_j)`, the coefficient the
/// printed matrices place at `(j, i)`.
pub(crate) fn rename_variable(
    name: &str,
    a: Option<&Rational>,
    entry: &dyn Fn(usize, usize) -> Option<MultiPoly>,
) -> Option<MultiPoly> {
    if name == "a" {
        return a.map(|a| MultiPoly::constant(a.clone()));
    }
    let (i, j) = parse_pair(name.strip_prefix('a')?)?;
    Some(-entry(i, j)?)
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (i, j) = s.split_once('_')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn every_default_entry_builds() {
        let entries = default_entries().unwrap();
        assert_eq!(entries.len(), 4 + 5 + 3 + 30);
        for e in &entries {
            assert!(e.algebra.jacobi_holds(), "{}", e.display_name());
        }
    }

    #[test]
    fn q5_has_the_displayed_brackets() {
        let e = build_entry("Q", &Params { n: Some(5), a: None }).unwrap();
        let g = &e.algebra;
        assert_eq!(g.dim(), 8);
        let idx = |l: &str| g.index_of(l).unwrap();
        // [e_i, e_{n-i}] = (-1)^i e_n
        assert_eq!(g.bracket_basis(idx("e1"), idx("e4"))[idx("e5")], int(-1));
        assert_eq!(g.bracket_basis(idx("e2"), idx("e3"))[idx("e5")], int(1));
        assert_eq!(g.bracket_basis(idx("e0"), idx("e3"))[idx("e4")], int(1));
        assert!(g.bracket_basis(idx("e0"), idx("e4")).iter().all(Zero::is_zero));
    }

    #[test]
    fn abelian_three_matches_eq2() {
        let e = build_entry("abelian", &Params { n: Some(3), a: None }).unwrap();
        let g = &e.algebra;
        assert_eq!(g.dim(), 6);
        for i in 0..3 {
            let mut want = vec![int(0); 6];
            want[i] = int(1);
            assert_eq!(g.bracket_basis(3 + i, i), want);
        }
        assert_eq!(g.nonzero_brackets().count(), 3);
    }

    #[test]
    fn invalid_parameters() {
        let zero = Params { n: None, a: Some(int(0)) };
        assert!(matches!(build_entry("n6_5", &zero), Err(Error::InvalidParams { .. })));
        let even = Params { n: Some(6), a: None };
        assert!(matches!(build_entry("Q", &even), Err(Error::InvalidParams { .. })));
        let small = Params { n: Some(2), a: None };
        assert!(matches!(build_entry("L", &small), Err(Error::InvalidParams { .. })));
        let none = Params { n: Some(0), a: None };
        assert!(matches!(build_entry("abelian", &none), Err(Error::InvalidParams { .. })));
        assert!(matches!(build_entry("n4_2", &Params::default()), Err(Error::UnknownEntry(_))));
        assert!(matches!(
            build_entry("n4_1", &Params { n: None, a: Some(int(1)) }),
            Err(Error::InvalidParams { .. })
        ));
    }

    #[test]
    fn printed_brackets_of_corrected_rows_are_not_lie_algebras_with_tori() {
        for name in ["n3_1", "n5_2", "n6_10"] {
            let e = build_entry(name, &Params::default()).unwrap();
            let printed = format::parse(&e.printed_source()).unwrap();
            let bad = printed.torus_action().map(|t| verify_torus(&t).is_err()).unwrap_or(true);
            assert!(bad, "{name}");
        }
    }

    #[test]
    fn parameter_override_is_applied() {
        let e = build_entry("n6_5", &Params { n: None, a: Some(int(3)) }).unwrap();
        assert!(e.algebra.jacobi_holds());
        assert_eq!(e.display_name(), "n6_5(a=3)");
        assert!(e.file.to_string().contains("[e2,e3] = 3*e6"));
    }

    #[test]
    fn name_splitting() {
        assert_eq!(split_name("L4"), ("L".to_string(), Some(4)));
        assert_eq!(split_name("abelian2"), ("abelian".to_string(), Some(2)));
        assert_eq!(split_name("n4_1"), ("n4_1".to_string(), None));
    }
}
