use std::collections::HashMap;

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::pfaffian::pfaffian_by_expansion;
use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> MultiPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rational(m: &RationalMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |r, c| MultiPoly::constant(m.get(r, c).clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn first_antisymmetry_violation(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return Some((i, i));
            }
            for j in i + 1..self.cols {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.first_antisymmetry_violation().is_none()
    }

    /// Substitutes a rational value for every variable named in `values`.
    pub fn specialize(&self, values: &HashMap<String, Rational>) -> Result<RationalMatrix> {
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).eval(values)?);
            }
        }
        Ok(out)
    }

    /// Pfaffian by recursive first-row expansion.
    pub fn pfaffian(&self) -> Result<MultiPoly> {
        poly_pfaffian(self)
    }

    /// Determinant: `Pf^2` for even antisymmetric input, `0` for odd
    /// antisymmetric input, cofactor expansion otherwise.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        if self.is_antisymmetric() {
            if self.rows % 2 == 1 {
                return Ok(MultiPoly::zero());
            }
            let pf = self.pfaffian()?;
            return Ok(&pf * &pf);
        }
        Ok(self.cofactor_determinant())
    }

    /// Laplace expansion along rows, memoized on the set of remaining columns.
    pub fn cofactor_determinant(&self) -> MultiPoly {
        fn go(m: &PolyMatrix, row: usize, cols: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
            if row == m.rows {
                return MultiPoly::one();
            }
            if let Some(v) = memo.get(&cols) {
                return v.clone();
            }
            let mut acc = MultiPoly::zero();
            let mut positive = true;
            for c in 0..m.cols {
                if cols & (1 << c) == 0 {
                    continue;
                }
                let e = m.get(row, c);
                if !e.is_zero() {
                    let minor = go(m, row + 1, cols & !(1 << c), memo);
                    let t = e * &minor;
                    acc = if positive { &acc + &t } else { &acc - &t };
                }
                positive = !positive;
            }
            memo.insert(cols, acc.clone());
            acc
        }
        assert!(self.cols < 64);
        go(self, 0, (1u64 << self.cols) - 1, &mut HashMap::new())
    }
}

/// Pfaffian of an even-sized antisymmetric polynomial matrix.
pub fn poly_pfaffian(m: &PolyMatrix) -> Result<MultiPoly> {
    if let Some((row, col)) = m.first_antisymmetry_violation() {
        return Err(Error::NotAntisymmetric { row, col });
    }
    if m.rows % 2 == 1 {
        return Err(Error::OddPfaffian(m.rows));
    }
    Ok(pfaffian_by_expansion(m.rows, |i, j| m.get(i, j).clone()))
}
