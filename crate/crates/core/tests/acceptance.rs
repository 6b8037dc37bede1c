//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines come out in order and unfiltered.
//!
//! Criterion 2 asks for a normalized top power of exactly 4 on `h ⋉ Q_n`.
//! The computed value is the Pfaffian of `d e^0 + d e^n`, which is 2, 2, -2
//! for n = 5, 7, 9 (confirmed by an explicit wedge product below). No choice
//! of normalization gives 4 for all three, so the criterion is implemented as
//! stated and reported as FAIL. The target succeeds only when the failing set
//! is exactly `KNOWN_FAILURES`, so any regression elsewhere, or an unexpected
//! pass of criterion 2, still fails the build.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liesymp::catalog::{
    abelian_check, build_entry, default_entries, filiform_l_check, l4_identity, q_check, run_regression, table_rows,
    ExpectedSymplectic, Params, Selection, Status, Q_PRINTED_TOP_POWER, TYPOS,
};
use liesymp::exactmath::{frac, int, Rational, RationalMatrix};
use liesymp::structure::{ad_spans_derivations, derivation_algebra, is_complete};
use liesymp::symplectic::{cocycle_space, d_one_form, d_two_form, decide_symplectic, is_closed, Existence};
use num_traits::Zero;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const LIMIT_C1: Duration = Duration::from_secs(5);
const LIMIT_C2: Duration = Duration::from_secs(10);
const LIMIT_C4: Duration = Duration::from_secs(60);

/// Everything is compared exactly; there is no floating-point tolerance.
const TOLERANCE: i64 = 0;

const Q_SIZES: [usize; 3] = [5, 7, 9];
const L_VANISHING: [usize; 4] = [5, 6, 7, 8];
const ABELIAN_SIZES: [usize; 4] = [1, 2, 3, 4];
/// Table rows per nilradical dimension 3, 4, 5, 6.
const ROWS_PER_DIM: [(usize, usize); 4] = [(3, 1), (4, 1), (5, 6), (6, 22)];
const NEVER_ROWS: [&str; 2] = ["n6_2", "n6_18"];
const N41_DER_DIM: usize = 7;
const N41_Z2_DIM: usize = 5;
const N41_CONDITIONS: [&str; 2] = ["a2_4", "2*a3_5*a2_4 - a3_4^2"];
const COVECTORS_PER_ALGEBRA: u32 = 100;
const PFAFFIAN_SAMPLES: u32 = 200;
const BRUTE_FORCE_MAX_DIM: usize = 6;
const SEED: [u8; 32] = *b"acceptance-suite-fixed-rng-seed!";

const KNOWN_FAILURES: [u32; 1] = [2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<Outcome, String>) -> Outcome {
    let start = Instant::now();
    let mut o = f().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
    let elapsed = start.elapsed();
    if elapsed >= limit {
        o.pass = false;
    }
    o.detail = if limit == Duration::MAX {
        format!("{}; {:.2?}", o.detail, elapsed)
    } else {
        format!("{}; {:.2?} (limit {:?})", o.detail, elapsed, limit)
    };
    o
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Result<Outcome, String> {
    let l4 = l4_identity().map_err(err)?;
    let mut bad = Vec::new();
    for n in L_VANISHING {
        let c = filiform_l_check(n).map_err(err)?;
        if !c.pfaffian_vanishes {
            bad.push(format!("L{n}: Pf = {}", c.pfaffian));
        }
    }
    let pass = l4.holds && bad.is_empty();
    let detail = if pass {
        "det = t^2*(u^2 - 2*t*v)^2 on h⋉L4; Pf ≡ 0 for L5..L8".to_string()
    } else {
        format!("L4 identity {}; {}", l4.holds, bad.join(", "))
    };
    Ok(outcome(pass, detail))
}

fn criterion_2() -> Result<Outcome, String> {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in Q_SIZES {
        let c = q_check(n).map_err(err)?;
        // independent confirmation of the value being compared
        let g = liesymp::catalog::build_entry("Q", &Params { n: Some(n), a: None }).map_err(err)?.algebra;
        let mut alpha = vec![Rational::zero(); g.dim()];
        alpha[g.index_of("e0").unwrap()] = int(1);
        alpha[g.index_of(&format!("e{n}")).unwrap()] = int(1);
        let omega = d_one_form(&g, &alpha).map_err(err)?;
        let wedge = common::wedge_top_power(omega.matrix());
        let normalized = wedge / factorial(g.dim() / 2);
        let computed = liesymp::exactmath::fmt_rational(&normalized);
        if computed != c.normalized_top_power {
            return Err(format!("Q{n}: library says {}, explicit wedge says {computed}", c.normalized_top_power));
        }
        pass &= c.closed && c.nondegenerate && normalized == int(Q_PRINTED_TOP_POWER);
        parts.push(format!("Q{n}: closed {} nondegenerate {} ω^m/m! = {computed}", c.closed, c.nondegenerate));
    }
    Ok(outcome(pass, format!("{} (expected {Q_PRINTED_TOP_POWER})", parts.join("; "))))
}

fn factorial(m: usize) -> Rational {
    (1..=m as i64).map(int).product()
}

fn criterion_3() -> Result<Outcome, String> {
    let mut bad = Vec::new();
    for n in ABELIAN_SIZES {
        let c = abelian_check(n).map_err(err)?;
        if !(c.holds() && c.z2_dim == n + n * (n - 1) / 2) {
            bad.push(format!("n={n}: {c:?}"));
        }
    }
    let detail = if bad.is_empty() {
        "Z² basis, normalization, exactness and Lagrangian ideal for n = 1..4".to_string()
    } else {
        bad.join("; ")
    };
    Ok(outcome(bad.is_empty(), detail))
}

/// Rows of the TYPOS.md table, plus the registry entries missing from it.
fn typo_table() -> Result<(usize, Vec<String>), String> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../TYPOS.md");
    let text = std::fs::read_to_string(path).map_err(err)?;
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with('|')).collect();
    let missing = TYPOS
        .iter()
        .filter(|t| !lines.iter().any(|l| l.starts_with(&format!("| {} | {} |", t.entry, t.check))))
        .map(|t| format!("{} {}", t.entry, t.check))
        .collect();
    // table lines minus the header and the separator
    Ok((lines.len().saturating_sub(2), missing))
}

fn criterion_4() -> Result<Outcome, String> {
    let report = run_regression(&Selection::all()).map_err(err)?;
    let mut bad = Vec::new();
    for (dim, count) in ROWS_PER_DIM {
        let rows = table_rows(Some(dim)).len();
        if rows != count {
            bad.push(format!("{rows} rows of dimension {dim}, expected {count}"));
        }
    }
    let rows: BTreeSet<&str> = table_rows(None).into_iter().collect();
    let entries = default_entries().map_err(err)?;
    for e in &report.entries {
        let expected = entries.iter().find(|c| c.display_name() == e.entry).map(|c| c.expected.symplectic);
        for c in &e.comparisons {
            let symplectic = c.check == "symplectic" || c.check == "witness";
            if symplectic && c.status != Status::Match {
                bad.push(format!("{} {}: {}", e.entry, c.check, c.status));
            }
            if c.check == "maximal-rank" && !matches!(c.status, Status::Match | Status::DocumentedTypo) {
                bad.push(format!("{} maximal-rank: {}", e.entry, c.status));
            }
        }
        if rows.contains(e.name.as_str()) {
            let want = match expected {
                Some(ExpectedSymplectic::Never) => Existence::No,
                Some(ExpectedSymplectic::DimensionNotEven) => Existence::OddDimension,
                Some(ExpectedSymplectic::Yes) => Existence::Yes,
                None => return Err(format!("{} has no catalog entry", e.entry)),
            };
            if e.symplectic != want || (want == Existence::Yes) != e.witness.is_some() {
                bad.push(format!("{}: computed {}", e.entry, e.symplectic));
            }
            if !e.comparisons.iter().any(|c| c.check == "maximal-rank") {
                bad.push(format!("{}: no maximal-rank comparison", e.entry));
            }
        }
    }
    for name in NEVER_ROWS {
        if !report.entries.iter().any(|e| e.name == name && e.symplectic == Existence::No) {
            bad.push(format!("{name} is not 'never'"));
        }
    }
    let distinct: BTreeSet<(String, String)> = report
        .entries
        .iter()
        .flat_map(|e| {
            e.comparisons
                .iter()
                .filter(|c| c.status == Status::DocumentedTypo)
                .map(|c| (e.name.clone(), c.check.clone()))
        })
        .collect();
    let (listed, missing) = typo_table()?;
    if !missing.is_empty() {
        bad.push(format!("not in TYPOS.md: {}", missing.join(", ")));
    }
    if distinct.len() > listed {
        bad.push(format!("{} documented typos but {listed} rows in TYPOS.md", distinct.len()));
    }
    if report.mismatches != 0 {
        bad.push(format!("{} mismatches", report.mismatches));
    }
    let detail = format!(
        "{} entries: {} match, {} mismatch, {} documented typo ({} distinct of {listed} listed), {} not stated{}",
        report.entries.len(),
        report.matches,
        report.mismatches,
        report.documented_typos,
        distinct.len(),
        report.not_stated,
        if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }
    );
    Ok(outcome(bad.is_empty() && report.green, detail))
}

/// `D(e_from) = Σ coeff * e_to`, columns are images.
fn derivation(entries: &[(usize, usize, i64)]) -> RationalMatrix {
    let mut d = RationalMatrix::zeros(4, 4);
    for &(from, to, c) in entries {
        d.set(to - 1, from - 1, int(c));
    }
    d
}

fn criterion_5() -> Result<Outcome, String> {
    let entry = build_entry("n4_1", &Params::default()).map_err(err)?;
    let n = &entry.nilradical;
    if n.labels() != ["e1", "e2", "e3", "e4"] {
        return Err("unexpected n4_1 basis order".into());
    }
    let printed = [
        derivation(&[(1, 1, 1), (3, 3, -1), (4, 4, 1)]),
        derivation(&[(2, 2, 1), (3, 3, 2), (4, 4, -1)]),
        derivation(&[(2, 1, 1), (3, 2, 1)]),
        derivation(&[(3, 1, 1)]),
        derivation(&[(4, 1, 1)]),
        derivation(&[(4, 2, 1)]),
        derivation(&[(4, 3, 1)]),
    ];
    let der = derivation_algebra(n);
    let contained = printed.iter().filter(|d| der.contains(d)).count();
    let z2 = cocycle_space(&entry.algebra).z2_dim();
    let report = run_regression(&Selection::names(["n4_1"])).map_err(err)?;
    let e = &report.entries[0];
    let printed_conditions: Vec<&str> = e.conditions.iter().map(|c| c.printed.as_str()).collect();
    let divide = e.conditions.iter().all(|c| c.divides_pfaffian);
    let pass = der.dim() == N41_DER_DIM
        && contained == printed.len()
        && z2 == N41_Z2_DIM
        && printed_conditions == N41_CONDITIONS
        && divide;
    Ok(outcome(
        pass,
        format!(
            "dim Der = {}, D1..D7 contained {contained}/7, dim Z² = {z2}, conditions divide Pf {divide}; Pf = {}",
            der.dim(),
            e.pfaffian
        ),
    ))
}

fn criterion_6() -> Result<Outcome, String> {
    let entries = default_entries().map_err(err)?;
    let bad: Vec<String> = entries
        .iter()
        .filter(|e| {
            let c = is_complete(&e.algebra);
            let der = derivation_algebra(&e.algebra);
            !(c.center_dim == 0 && c.der_dim == e.algebra.dim() && ad_spans_derivations(&e.algebra, &der))
        })
        .map(|e| e.display_name())
        .collect();
    let detail = if bad.is_empty() {
        format!("{} semidirect products complete, ad spans Der", entries.len())
    } else {
        format!("not complete: {}", bad.join(", "))
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config::with_cases(cases), TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn sample<S: Strategy>(runner: &mut TestRunner, s: &S) -> S::Value {
    s.new_tree(runner).expect("strategy").current()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn antisymmetric(n: usize, entries: Vec<Rational>) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, entries[k].clone());
            m.set(j, i, -entries[k].clone());
            k += 1;
        }
    }
    m
}

fn criterion_7() -> Result<Outcome, String> {
    let entries = default_entries().map_err(err)?;
    let mut bad = Vec::new();

    let mut rng = runner(COVECTORS_PER_ALGEBRA);
    let mut covectors = 0;
    for e in &entries {
        let g = &e.algebra;
        let strategy = proptest::collection::vec(small_rational(), g.dim());
        for _ in 0..COVECTORS_PER_ALGEBRA {
            let alpha = sample(&mut rng, &strategy);
            let omega = d_one_form(g, &alpha).map_err(err)?;
            if !d_two_form(g, &omega).map_err(err)?.is_zero() {
                bad.push(format!("d∘d ≠ 0 on {}", e.display_name()));
                break;
            }
            covectors += 1;
        }
    }

    let mut rng = runner(PFAFFIAN_SAMPLES);
    let size = proptest::sample::select(vec![2usize, 4, 6, 8]);
    for _ in 0..PFAFFIAN_SAMPLES {
        let n = sample(&mut rng, &size);
        let upper = sample(&mut rng, &proptest::collection::vec(small_rational(), n * (n - 1) / 2));
        let m = antisymmetric(n, upper);
        let pf = m.pfaffian().map_err(err)?;
        if &pf * &pf != m.determinant().map_err(err)? {
            bad.push(format!("Pf² ≠ det on {m:?}"));
            break;
        }
    }

    let mut brute = 0;
    for e in &entries {
        for g in [&e.nilradical, &e.algebra] {
            if g.dim() > BRUTE_FORCE_MAX_DIM {
                continue;
            }
            if !common::same_subspace(&cocycle_space(g).z2_subspace(), &common::brute_force_cocycles(g)) {
                bad.push(format!("Z² differs from brute force on {}", e.display_name()));
            }
            brute += 1;
        }
    }

    let mut witnesses = 0;
    for e in &entries {
        let v = decide_symplectic(&e.algebra).map_err(err)?;
        let mut forms = Vec::new();
        forms.extend(v.witness.iter());
        forms.extend(v.exact.witness.iter());
        for w in forms {
            if !is_closed(&e.algebra, w) || w.pfaffian().map_err(err)?.is_zero() {
                bad.push(format!("witness on {} does not re-verify", e.display_name()));
            }
            witnesses += 1;
        }
    }

    let detail = format!(
        "d∘d on {covectors} covectors over {} algebras, Pf² = det on {PFAFFIAN_SAMPLES} matrices, \
         brute-force Z² on {brute} algebras, {witnesses} witnesses re-verified{}",
        entries.len(),
        if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }
    );
    Ok(outcome(bad.is_empty() && brute > 0 && witnesses > 0, detail))
}

fn main() -> ExitCode {
    assert_eq!(TOLERANCE, 0);
    let unlimited = Duration::MAX;
    let criteria: Vec<(u32, &str, Duration, fn() -> Result<Outcome, String>)> = vec![
        (1, "L4 determinant identity, Pf ≡ 0 on L5..L8", LIMIT_C1, criterion_1),
        (2, "Q5, Q7, Q9 exact form with normalized top power 4", LIMIT_C2, criterion_2),
        (3, "abelian nilradicals", unlimited, criterion_3),
        (4, "catalog regression", LIMIT_C4, criterion_4),
        (5, "n4_1 worked example", unlimited, criterion_5),
        (6, "completeness", unlimited, criterion_6),
        (7, "property suites", unlimited, criterion_7),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, f) in criteria {
        let o = timed(limit, f);
        println!("{} criterion {id} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
    }
    if failed == KNOWN_FAILURES {
        println!("acceptance: failing set {failed:?} is exactly the known unattainable set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing set {failed:?}, expected {KNOWN_FAILURES:?}");
        ExitCode::FAILURE
    }
}
