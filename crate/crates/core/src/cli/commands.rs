//! Subcommands. Each writes its report to `out` and returns the exit status;
//! input problems surface as `Err` and map to [`Outcome::InputError`].

use std::io::Write;
use std::path::Path;

use crate::catalog::{self, Params, Selection, Status};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, Rational};
use crate::liealg::{LieAlgebra, Subspace};
use crate::structure::{ad_spans_derivations, derivation_algebra, is_complete, verify_torus, TorusAction};
use crate::symplectic::{decide_symplectic, Existence};

use super::format::{self, AlgebraFile};
use super::report::{algebra_report, catalog_report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    Mismatch = 1,
    InputError = 2,
}

impl Outcome {
    pub fn code(self) -> u8 {
        self as u8
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidConfig(format!("cannot write output: {e}"))
}

/// A parsed file with its Lie algebra: the semidirect product when a torus
/// block is present.
pub struct Loaded {
    pub file: AlgebraFile,
    pub torus: Option<TorusAction>,
    pub algebra: LieAlgebra,
}

pub fn load(path: &Path) -> Result<Loaded> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidConfig(format!("cannot read {}: {e}", path.display())))?;
    load_source(&src).map_err(|e| match e {
        Error::InvalidStructure(m) => Error::InvalidStructure(format!("{}:{m}", path.display())),
        other => other,
    })
}

pub fn load_source(src: &str) -> Result<Loaded> {
    let file = format::parse(src)?;
    let nilradical = file.nilradical()?;
    nilradical.ensure_jacobi()?;
    let torus = match file.torus {
        Some(_) => {
            let t = file.torus_action()?;
            verify_torus(&t).map_err(|v| Error::Torus(v.to_string()))?;
            Some(t)
        }
        None => None,
    };
    let algebra = match &torus {
        Some(t) => {
            let g = crate::structure::semidirect(t)?;
            g.ensure_jacobi()?;
            g
        }
        None => nilradical,
    };
    Ok(Loaded { file, torus, algebra })
}

pub fn check(path: &Path, out: &mut dyn Write) -> Result<Outcome> {
    let l = load(path)?;
    writeln!(out, "{}: Lie algebra of dimension {}", l.file.name, l.algebra.dim()).map_err(io)?;
    writeln!(out, "antisymmetry: ok\njacobi: ok").map_err(io)?;
    if let Some(t) = &l.torus {
        writeln!(out, "torus: {} commuting semisimple derivations", t.rank()).map_err(io)?;
    }
    Ok(Outcome::Success)
}

fn dims(series: &[Subspace]) -> String {
    series.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(" > ")
}

pub fn props(path: &Path, out: &mut dyn Write) -> Result<Outcome> {
    let l = load(path)?;
    let g = &l.algebra;
    writeln!(out, "algebra: {}", l.file.name).map_err(io)?;
    writeln!(out, "dimension: {}", g.dim()).map_err(io)?;
    writeln!(out, "center: {}", g.center().dim()).map_err(io)?;
    writeln!(out, "derived series: {}", dims(&g.derived_series())).map_err(io)?;
    writeln!(out, "lower central series: {}", dims(&g.lower_central_series())).map_err(io)?;
    writeln!(out, "solvable: {}", g.is_solvable()).map_err(io)?;
    writeln!(out, "nilpotent: {}", g.is_nilpotent()).map_err(io)?;
    Ok(Outcome::Success)
}

pub fn der(path: &Path, complete: bool, out: &mut dyn Write) -> Result<Outcome> {
    let l = load(path)?;
    let g = &l.algebra;
    let d = derivation_algebra(g);
    writeln!(out, "dim Der: {}", d.dim()).map_err(io)?;
    if complete {
        let c = is_complete(g);
        writeln!(out, "center: {}", c.center_dim).map_err(io)?;
        writeln!(out, "ad spans Der: {}", ad_spans_derivations(g, &d)).map_err(io)?;
        writeln!(out, "complete: {}", c.complete).map_err(io)?;
    }
    Ok(Outcome::Success)
}

pub struct SymplecticOptions {
    pub exact_only: bool,
    pub witness: bool,
    pub json: bool,
}

pub fn symplectic(path: &Path, opts: &SymplecticOptions, out: &mut dyn Write) -> Result<Outcome> {
    let l = load(path)?;
    let g = &l.algebra;
    let verdict = decide_symplectic(g)?;
    if opts.json {
        let r = algebra_report(&l.file.name, g, l.torus.as_ref(), &verdict)?;
        writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("report serializes")).map_err(io)?;
        return Ok(Outcome::Success);
    }
    let labels = g.labels();
    writeln!(out, "algebra: {} (dimension {})", l.file.name, g.dim()).map_err(io)?;
    if !opts.exact_only {
        writeln!(out, "exists: {}", verdict.existence).map_err(io)?;
        if verdict.existence != Existence::OddDimension {
            writeln!(out, "dim Z2: {}\ndim B2: {}", verdict.z2_dim, verdict.b2_dim).map_err(io)?;
            writeln!(out, "pfaffian: {}", verdict.pfaffian).map_err(io)?;
        }
        if opts.witness {
            if let (Some(w), Some(p)) = (&verdict.witness, &verdict.witness_point) {
                let point: Vec<String> = p.iter().map(fmt_rational).collect();
                writeln!(out, "witness point: ({})", point.join(", ")).map_err(io)?;
                writeln!(out, "witness: {}", w.display_with(labels)).map_err(io)?;
            }
        }
    }
    if verdict.existence != Existence::OddDimension {
        writeln!(out, "exact: {}", if verdict.exact.exists { "yes" } else { "no" }).map_err(io)?;
        if opts.witness {
            if let (Some(w), Some(a)) = (&verdict.exact.witness, &verdict.exact.witness_one_form) {
                let alpha: Vec<String> = a.iter().map(fmt_rational).collect();
                writeln!(out, "exact witness: d({}) = {}", alpha.join(", "), w.display_with(labels)).map_err(io)?;
            }
        }
    }
    Ok(Outcome::Success)
}

pub fn catalog_list(out: &mut dyn Write) -> Result<Outcome> {
    for e in catalog::default_entries()? {
        writeln!(
            out,
            "{:<14} dim {:>2}  symplectic: {:<18} maximal rank: {}",
            e.display_name(),
            e.algebra.dim(),
            e.expected.symplectic,
            if e.expected.maximal_rank { "yes" } else { "no" }
        )
        .map_err(io)?;
    }
    Ok(Outcome::Success)
}

fn params_for(name: &str, a: Option<Rational>) -> (String, Params) {
    let (family, n) = catalog::split_name(name);
    (family, Params { n, a })
}

pub fn catalog_show(name: &str, a: Option<Rational>, out: &mut dyn Write) -> Result<Outcome> {
    let (family, params) = params_for(name, a);
    let e = catalog::build_entry(&family, &params)?;
    write!(out, "{}", e.file).map_err(io)?;
    writeln!(out, "# expected symplectic: {}", e.expected.symplectic).map_err(io)?;
    writeln!(out, "# expected maximal rank: {}", if e.expected.maximal_rank { "yes" } else { "no" }).map_err(io)?;
    for c in &e.expected.conditions {
        writeln!(out, "# printed condition: {c}").map_err(io)?;
    }
    for c in &e.corrections {
        writeln!(
            out,
            "# corrected: printed {} -> {}",
            c.printed.as_deref().unwrap_or("(missing)"),
            c.corrected.as_deref().unwrap_or("(dropped)")
        )
        .map_err(io)?;
    }
    Ok(Outcome::Success)
}

pub fn catalog_verify(selection: &Selection, json: bool, out: &mut dyn Write) -> Result<Outcome> {
    let r = catalog::run_regression(selection)?;
    if json {
        let doc = catalog_report(&r);
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("report serializes")).map_err(io)?;
    } else {
        for e in &r.entries {
            writeln!(
                out,
                "{:<14} {:<5} symplectic: {:<18} maximal rank: {}/{}  Pf: {}",
                e.entry,
                if e.green() { "ok" } else { "FAIL" },
                e.symplectic.to_string(),
                e.torus_rank,
                e.rank_bound,
                e.pfaffian
            )
            .map_err(io)?;
            for c in e.comparisons.iter().filter(|c| c.status != Status::Match) {
                writeln!(out, "    {}: {} (expected {}, computed {})", c.check, c.status, c.expected, c.computed)
                    .map_err(io)?;
            }
        }
        writeln!(
            out,
            "{} entries: {} match, {} mismatch, {} documented typo, {} not stated; {}",
            r.entries.len(),
            r.matches,
            r.mismatches,
            r.documented_typos,
            r.not_stated,
            if r.green { "green" } else { "red" }
        )
        .map_err(io)?;
    }
    Ok(if r.green { Outcome::Success } else { Outcome::Mismatch })
}

pub fn repro_props(json: bool, out: &mut dyn Write) -> Result<Outcome> {
    let r = catalog::reproduce_propositions()?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("report serializes")).map_err(io)?;
    } else {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        for c in &r.abelian {
            writeln!(
                out,
                "abelian n={}: dim Z2 {} (expected {}), basis {}, exact iff Z=0 {}, normalization {} ({} samples), Lagrangian {}, exact witness {}",
                c.n,
                c.z2_dim,
                c.expected_z2_dim,
                mark(c.z2_basis_matches),
                mark(c.exact_iff_z_zero),
                mark(c.normalization_holds),
                c.samples,
                mark(c.lagrangian),
                mark(c.exact_witness)
            )
            .map_err(io)?;
        }
        writeln!(out, "L4: det = {}", r.l4.determinant).map_err(io)?;
        writeln!(out, "L4: t^2*(u^2 - 2*t*v)^2 = {} {}", r.l4.target, mark(r.l4.holds)).map_err(io)?;
        for c in &r.filiform_l {
            writeln!(out, "L{} (dim {}): Pf = {} {}", c.n, c.dim, c.pfaffian, mark(c.pfaffian_vanishes)).map_err(io)?;
        }
        for c in &r.filiform_q {
            writeln!(
                out,
                "Q{}: closed {}, nondegenerate {}, Pf {}, top power {}, normalized {} vs printed {} {}",
                c.n,
                mark(c.closed),
                mark(c.nondegenerate),
                c.pfaffian,
                c.top_power,
                c.normalized_top_power,
                c.printed_value,
                mark(c.matches_printed)
            )
            .map_err(io)?;
        }
    }
    Ok(if r.all_hold() { Outcome::Success } else { Outcome::Mismatch })
}
