//! Derivations, tori, semidirect products and completeness.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{minimal_polynomial, RationalMatrix, Rational, UniPoly};
use crate::liealg::{unit, LieAlgebra, Subspace};

/// A basis of `Der(g)`, as `n x n` matrices acting on columns.
#[derive(Clone, Debug)]
pub struct DerivationBasis {
    pub algebra_dim: usize,
    pub basis: Vec<RationalMatrix>,
}

impl DerivationBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `m` lies in the span of the basis.
    pub fn contains(&self, m: &RationalMatrix) -> bool {
        let vs: Vec<Vec<Rational>> = self.basis.iter().map(RationalMatrix::to_vec).collect();
        let n2 = self.algebra_dim * self.algebra_dim;
        Subspace::span(n2, &vs).contains(&m.to_vec())
    }
}

/// Checks `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` on all basis pairs and
/// returns the first failing pair.
pub fn leibniz_violation(g: &LieAlgebra, d: &RationalMatrix) -> Option<(usize, usize)> {
    let n = g.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| d.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&g.bracket_basis(i, j)).expect("dims");
            let a = g.bracket(&images[i], &g.basis_vector(j)).expect("dims");
            let b = g.bracket(&g.basis_vector(i), &images[j]).expect("dims");
            if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| *l != x + y) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_derivation(g: &LieAlgebra, d: &RationalMatrix) -> bool {
    d.rows() == g.dim() && d.cols() == g.dim() && leibniz_violation(g, d).is_none()
}

/// Kernel of `D -> (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_{i<j}` on `n^2`-space.
pub fn derivation_algebra(g: &LieAlgebra) -> DerivationBasis {
    let n = g.dim();
    if n == 0 {
        return DerivationBasis { algebra_dim: 0, basis: Vec::new() };
    }
    // unknown D[r][c] at index r * n + c; D e_c = sum_r D[r][c] e_r
    let brackets: Vec<Vec<Vec<Rational>>> = (0..n).map(|i| (0..n).map(|j| g.bracket_basis(i, j)).collect()).collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bij = &brackets[i][j];
            for out in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for c in 0..n {
                    if !bij[c].is_zero() {
                        row[out * n + c] += &bij[c];
                    }
                    let cj = &brackets[c][j][out];
                    if !cj.is_zero() {
                        row[c * n + i] -= cj;
                    }
                    let ic = &brackets[i][c][out];
                    if !ic.is_zero() {
                        row[c * n + j] -= ic;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n * n).map(|k| unit(n * n, k)).collect()
    } else {
        RationalMatrix::from_rows(rows).expect("rectangular").kernel_basis()
    };
    let basis = kernel
        .into_iter()
        .map(|v| RationalMatrix::from_flat(n, n, v).expect("n^2 entries"))
        .collect();
    DerivationBasis { algebra_dim: n, basis }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub center_dim: usize,
    pub der_dim: usize,
    pub ad_dim: usize,
    pub complete: bool,
}

/// Complete iff the center is trivial and `dim Der(g) = dim g`.
pub fn is_complete(g: &LieAlgebra) -> CompletenessReport {
    let center_dim = g.center().dim();
    let der_dim = derivation_algebra(g).dim();
    let n = g.dim();
    CompletenessReport {
        center_dim,
        der_dim,
        ad_dim: n - center_dim,
        complete: center_dim == 0 && der_dim == n,
    }
}

/// Whether every `ad_{e_i}` lies in the span of `der`.
pub fn ad_in_derivations(g: &LieAlgebra, der: &DerivationBasis) -> bool {
    (0..g.dim()).all(|i| der.contains(&g.ad_basis(i)))
}

/// Whether the `ad_{e_i}` span all of `der`.
pub fn ad_spans_derivations(g: &LieAlgebra, der: &DerivationBasis) -> bool {
    let n = g.dim();
    let ads: Vec<Vec<Rational>> = (0..n).map(|i| g.ad_basis(i).to_vec()).collect();
    let ad_span = Subspace::span(n * n, &ads);
    der.basis.iter().all(|d| ad_span.contains(&d.to_vec()))
}

/// Commuting semisimple derivations of a nilpotent algebra, adjoined with
/// their own labels.
#[derive(Clone, Debug)]
pub struct TorusAction {
    pub nilradical: LieAlgebra,
    pub generators: Vec<RationalMatrix>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusViolation {
    Shape { generator: usize },
    NotDerivation { generator: usize, pair: (usize, usize) },
    NotCommuting { first: usize, second: usize },
    NotSemisimple { generator: usize, minimal_polynomial: String },
}

impl fmt::Display for TorusViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape { generator } => write!(f, "generator {generator} has the wrong size"),
            Self::NotDerivation { generator, pair } => write!(
                f,
                "generator {generator} is not a derivation (Leibniz fails on basis pair {:?})",
                pair
            ),
            Self::NotCommuting { first, second } => write!(f, "generators {first} and {second} do not commute"),
            Self::NotSemisimple { generator, minimal_polynomial } => write!(
                f,
                "generator {generator} is not semisimple (minimal polynomial {minimal_polynomial} is not squarefree)"
            ),
        }
    }
}

impl TorusAction {
    pub fn new(nilradical: LieAlgebra, generators: Vec<RationalMatrix>, labels: Vec<String>) -> Self {
        Self { nilradical, generators, labels }
    }

    /// Torus with no generators.
    pub fn empty(nilradical: LieAlgebra) -> Self {
        Self::new(nilradical, Vec::new(), Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// Each generator a derivation, pairwise commuting, and semisimple
/// (squarefree minimal polynomial).
pub fn verify_torus(t: &TorusAction) -> std::result::Result<(), TorusViolation> {
    let n = t.nilradical.dim();
    for (k, h) in t.generators.iter().enumerate() {
        if h.rows() != n || h.cols() != n {
            return Err(TorusViolation::Shape { generator: k });
        }
        if let Some(pair) = leibniz_violation(&t.nilradical, h) {
            return Err(TorusViolation::NotDerivation { generator: k, pair });
        }
    }
    for a in 0..t.generators.len() {
        for b in a + 1..t.generators.len() {
            let ab = t.generators[a].mul(&t.generators[b]).expect("square");
            let ba = t.generators[b].mul(&t.generators[a]).expect("square");
            if ab != ba {
                return Err(TorusViolation::NotCommuting { first: a, second: b });
            }
        }
    }
    for (k, h) in t.generators.iter().enumerate() {
        let m = minimal_polynomial(h);
        if !m.is_squarefree() {
            return Err(TorusViolation::NotSemisimple {
                generator: k,
                minimal_polynomial: m.to_string(),
            });
        }
    }
    Ok(())
}

/// `h ⋉ n`: nilradical basis first, then the torus labels, with
/// `[h, x] = h(x)` and `[h_a, h_b] = 0`.
pub fn semidirect(t: &TorusAction) -> Result<LieAlgebra> {
    verify_torus(t).map_err(|v| Error::Torus(v.to_string()))?;
    if t.labels.len() != t.generators.len() {
        return Err(Error::InvalidStructure("one label per torus generator required".into()));
    }
    let n = t.nilradical.dim();
    let mut labels = t.nilradical.labels().to_vec();
    labels.extend(t.labels.iter().cloned());
    let mut rules: Vec<(usize, usize, Vec<(usize, Rational)>)> = t
        .nilradical
        .nonzero_brackets()
        .map(|(i, j, v)| (i, j, sparse(v)))
        .collect();
    for (a, h) in t.generators.iter().enumerate() {
        for i in 0..n {
            let image = h.column(i);
            if image.iter().any(|c| !c.is_zero()) {
                rules.push((n + a, i, sparse(&image)));
            }
        }
    }
    LieAlgebra::from_brackets(labels, rules)
}

fn sparse(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// `dim n - dim [n, n]` for a nilpotent `n`.
pub fn rank_bound(n: &LieAlgebra) -> Result<usize> {
    if !n.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(n.dim() - n.derived_subalgebra().dim())
}

/// Whether the (supplied, assumed maximal) torus reaches the rank bound.
pub fn is_maximal_rank(t: &TorusAction) -> Result<bool> {
    let bound = rank_bound(&t.nilradical)?;
    match t.rank().cmp(&bound) {
        std::cmp::Ordering::Greater => Err(Error::RankBoundExceeded {
            generators: t.rank(),
            bound,
        }),
        ord => Ok(ord == std::cmp::Ordering::Equal),
    }
}

/// Simultaneous eigenspace decomposition of the nilradical.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    /// One value per generator for each root.
    pub roots: Vec<Vec<Rational>>,
    pub spaces: Vec<Subspace>,
}

/// Requires every generator to have only rational eigenvalues.
pub fn root_decomposition(t: &TorusAction) -> Result<RootDecomposition> {
    let n = t.nilradical.dim();
    let mut pieces: Vec<(Vec<Rational>, Subspace)> = vec![(Vec::new(), Subspace::full(n))];
    for (k, h) in t.generators.iter().enumerate() {
        let m: UniPoly = minimal_polynomial(h);
        let eigenvalues = m.rational_roots();
        if eigenvalues.len() != m.degree().unwrap_or(0) || !m.is_squarefree() {
            return Err(Error::NotRationallyDiagonalizable(k));
        }
        let mut refined = Vec::new();
        for (root, space) in pieces {
            if space.dim() == 0 {
                continue;
            }
            for lambda in &eigenvalues {
                let shifted = h.sub(&RationalMatrix::identity(n).scale(lambda)).expect("square");
                // v = B c with (h - lambda) B c = 0
                let b = RationalMatrix::from_columns(n, space.basis()).expect("dims");
                let kernel = shifted.mul(&b).expect("dims").kernel_basis();
                if kernel.is_empty() {
                    continue;
                }
                let vs: Vec<Vec<Rational>> = kernel.iter().map(|c| b.mul_vec(c).expect("dims")).collect();
                let mut r = root.clone();
                r.push(lambda.clone());
                refined.push((r, Subspace::span(n, &vs)));
            }
        }
        pieces = refined;
    }
    pieces.retain(|(_, s)| s.dim() > 0);
    let (roots, spaces) = pieces.into_iter().unzip();
    Ok(RootDecomposition { roots, spaces })
}
