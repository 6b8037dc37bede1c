//! Lie algebras given by rational structure constants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{RationalMatrix, Rational};

/// A finite-dimensional Lie algebra `[e_i, e_j] = sum_k c_ij^k e_k`.
///
/// Only pairs `i < j` with a nonzero bracket are stored; `[e_j, e_i]` is the
/// negation and `[e_i, e_i] = 0`. Indices are 0-based; labels are cosmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebra {
    pub fn abelian(labels: Vec<String>) -> Self {
        Self {
            labels,
            brackets: BTreeMap::new(),
        }
    }

    /// Builds an algebra from bracket rules `(i, j, [(k, c)...])`. Rules with
    /// `i > j` are stored negated; rules with `i == j` must be zero, and each
    /// unordered pair may appear once.
    pub fn from_brackets<I>(labels: Vec<String>, rules: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    {
        let n = labels.len();
        let mut brackets = BTreeMap::new();
        for (i, j, value) in rules {
            if i >= n || j >= n || value.iter().any(|(k, _)| *k >= n) {
                return Err(Error::InvalidStructure(format!("index out of range in bracket ({i}, {j})")));
            }
            let mut vec = vec![Rational::zero(); n];
            for (k, c) in value {
                vec[k] += c;
            }
            if i == j {
                if vec.iter().any(|c| !c.is_zero()) {
                    return Err(Error::InvalidStructure(format!(
                        "[{0}, {0}] must be zero",
                        labels[i]
                    )));
                }
                continue;
            }
            let (key, vec) = if i < j {
                ((i, j), vec)
            } else {
                ((j, i), vec.into_iter().map(|c| -c).collect())
            };
            if brackets.contains_key(&key) {
                return Err(Error::InvalidStructure(format!(
                    "duplicate bracket [{}, {}]",
                    labels[key.0], labels[key.1]
                )));
            }
            // zero rules stay until the end so duplicates are still caught
            brackets.insert(key, vec);
        }
        brackets.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        Ok(Self { labels, brackets })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero structure constants, `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        unit(self.dim(), i)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| vec![Rational::zero(); n]),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|c| -c.clone()).collect())
                .unwrap_or_else(|| vec![Rational::zero(); n]),
            std::cmp::Ordering::Equal => vec![Rational::zero(); n],
        }
    }

    /// Bilinear antisymmetric extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        let mut out = vec![Rational::zero(); n];
        for (&(i, j), c) in &self.brackets {
            let f = &x[i] * &y[j] - &x[j] * &y[i];
            if f.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                if !ck.is_zero() {
                    *o += &f * ck;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_{e_i}`: column `j` holds `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> RationalMatrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket_basis(i, j)).collect();
        RationalMatrix::from_columns(n, &cols).expect("square")
    }

    pub fn ad(&self, x: &[Rational]) -> Result<RationalMatrix> {
        let n = self.dim();
        let cols = (0..n)
            .map(|j| self.bracket(x, &unit(n, j)))
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_columns(n, &cols)
    }

    /// First basis triple `i < j < k` violating Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobiator(i, j, k).iter().all(Zero::is_zero) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
        let a = self.bracket(&self.bracket_basis(i, j), &ek).expect("dims");
        let b = self.bracket(&self.bracket_basis(j, k), &ei).expect("dims");
        let c = self.bracket(&self.bracket_basis(k, i), &ej).expect("dims");
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect()
    }

    pub fn jacobi_holds(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// Errors with the failing triple when Jacobi does not hold.
    pub fn ensure_jacobi(&self) -> Result<()> {
        match self.jacobi_violation() {
            None => Ok(()),
            Some((i, j, k)) => Err(Error::JacobiFails(
                self.labels[i].clone(),
                self.labels[j].clone(),
                self.labels[k].clone(),
            )),
        }
    }

    /// Kernel of `x -> (ad_x e_j)_j`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // row (j, out): coefficient of x_i in [x, e_j]_out = [e_i, e_j]_out
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            let cols: Vec<Vec<Rational>> = (0..n).map(|i| self.bracket_basis(i, j)).collect();
            for out in 0..n {
                rows.push(cols.iter().map(|c| c[out].clone()).collect());
            }
        }
        let m = RationalMatrix::from_rows(rows).expect("rectangular");
        if n == 0 {
            return Subspace::zero(0);
        }
        Subspace::span(n, &m.kernel_basis())
    }

    /// `[A, B]` for subspaces `A`, `B`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.bracket(x, y).expect("dims"));
            }
        }
        Subspace::span(self.dim(), &vs)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_subspaces(&full, &full)
    }

    /// `g = C^0 ⊇ C^1 = [g, g] ⊇ ...` until it stabilizes; the last entry is
    /// the stable term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_subspaces(&full, series.last().expect("nonempty"));
            if &next == series.last().expect("nonempty") {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_subspaces(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.dim() == 0)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.dim() == 0)
    }

    /// `[e_i, w] ⊆ w` for every basis vector `e_i`.
    pub fn is_ideal(&self, w: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let ei = self.basis_vector(i);
            w.basis().iter().all(|v| w.contains(&self.bracket(&ei, v).expect("dims")))
        })
    }

    /// `T[e_i, e_j] = [T e_i, T e_j]` on all basis pairs.
    pub fn is_automorphism(&self, t: &RationalMatrix) -> bool {
        let n = self.dim();
        if t.rows() != n || t.cols() != n || t.rank() != n {
            return false;
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|i| t.column(i)).collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = t.mul_vec(&self.bracket_basis(i, j)).expect("dims");
                lhs == self.bracket(&images[i], &images[j]).expect("dims")
            })
        })
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced
/// echelon form, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() || ambient_dim == 0 {
            return Self::zero(ambient_dim);
        }
        let m = RationalMatrix::from_rows(vectors.to_vec()).expect("consistent vector lengths");
        let (r, pivots) = m.rref();
        Self {
            ambient_dim,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    /// Span of the given basis vectors `e_i`.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        RationalMatrix::from_rows(rows).expect("dims").rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    /// n_{4,1}: [e2,e4]=e1, [e3,e4]=e2
    fn n41() -> LieAlgebra {
        LieAlgebra::from_brackets(labels(4), [(1, 3, vec![(0, int(1))]), (2, 3, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn bracket_reads_structure_constants() {
        let g = n41();
        assert_eq!(g.bracket(&g.basis_vector(1), &g.basis_vector(3)).unwrap(), g.basis_vector(0));
        assert_eq!(g.bracket_basis(3, 1), vec![int(-1), int(0), int(0), int(0)]);
        let x = vec![int(1), int(2), int(3), int(4)];
        assert!(g.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
        assert!(g.bracket(&x, &[int(1)]).is_err());
    }

    #[test]
    fn abelian_brackets_vanish() {
        let g = LieAlgebra::abelian(labels(3));
        assert!(g.bracket(&g.basis_vector(0), &g.basis_vector(2)).unwrap().iter().all(Zero::is_zero));
        assert!(g.jacobi_holds());
        assert_eq!(g.center(), Subspace::full(3));
        assert_eq!(g.derived_subalgebra().dim(), 0);
    }

    #[test]
    fn perturbed_n41_fails_jacobi() {
        let g = LieAlgebra::from_brackets(
            labels(4),
            [
                (1, 3, vec![(0, int(1))]),
                (2, 3, vec![(1, int(1))]),
                (0, 1, vec![(3, int(1))]),
            ],
        )
        .unwrap();
        // [[e1,e2],e3] = [e4,e3] = -e2 while the other two terms vanish;
        // the triple (e1, e2, e4) itself is satisfied
        assert_eq!(g.jacobi_violation(), Some((0, 1, 2)));
        assert_eq!(
            g.ensure_jacobi(),
            Err(Error::JacobiFails("e1".into(), "e2".into(), "e3".into()))
        );
    }

    #[test]
    fn center_of_n41() {
        assert_eq!(n41().center(), Subspace::coordinate(4, &[0]));
    }

    #[test]
    fn filiform_l4_lower_central_series() {
        // [e1, ei] = e_{i+1}, i = 2, 3
        let g = LieAlgebra::from_brackets(labels(4), [(0, 1, vec![(2, int(1))]), (0, 2, vec![(3, int(1))])]).unwrap();
        let dims: Vec<usize> = g.lower_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 2, 1, 0]);
        assert!(g.is_nilpotent());
    }

    #[test]
    fn ideals_in_two_dim_nonabelian() {
        // [e2, e1] = e1
        let g = LieAlgebra::from_brackets(labels(2), [(1, 0, vec![(0, int(1))])]).unwrap();
        assert!(g.is_ideal(&Subspace::coordinate(2, &[0])));
        assert!(!g.is_ideal(&Subspace::coordinate(2, &[1])));
        assert!(g.is_ideal(&Subspace::full(2)));
        assert!(g.is_solvable());
        assert!(!g.is_nilpotent());
        assert_eq!(g.center().dim(), 0);
    }

    #[test]
    fn construction_errors() {
        assert!(LieAlgebra::from_brackets(labels(1), [(0, 0, vec![(0, int(1))])]).is_err());
        assert!(LieAlgebra::from_brackets(labels(2), [(0, 1, vec![]), (1, 0, vec![(0, int(1))])]).is_err());
        assert!(LieAlgebra::from_brackets(labels(2), [(0, 2, vec![])]).is_err());
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(2), int(2), int(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[int(-3), int(-3), int(0)]));
        assert!(!s.contains(&[int(1), int(0), int(0)]));
        assert!(Subspace::full(3).contains_subspace(&s));
    }
}
