//! Univariate polynomials over the rationals, used for minimal polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{fmt_rational, Rational};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs[dd].clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let factor = &r[top] / &lead;
            if !factor.is_zero() {
                for (k, c) in d.coeffs.iter().enumerate() {
                    r[top - dd + k] -= &factor * c;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree iff `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Distinct rational roots, ascending, by the rational root theorem.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        // strip x^k
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let trimmed: Vec<Rational> = self.coeffs[shift..].to_vec();
        if trimmed.len() > 1 {
            let lcm = trimmed
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = trimmed
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect();
            let p_cands = divisors(&ints[0].abs());
            let q_cands = divisors(&ints[ints.len() - 1].abs());
            let poly = Self::new(trimmed);
            for p in &p_cands {
                for q in &q_cands {
                    for s in [1i32, -1] {
                        let cand = Rational::new(p * BigInt::from(s), q.clone());
                        if poly.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Minimal polynomial of a square matrix: the first monic linear dependency
/// among `I, A, A^2, ...`.
pub fn minimal_polynomial(a: &RationalMatrix) -> UniPoly {
    let n = a.rows();
    let mut powers: Vec<Vec<Rational>> = vec![RationalMatrix::identity(n).to_vec()];
    let mut current = RationalMatrix::identity(n);
    for k in 1..=n.max(1) {
        current = current.mul(a).expect("square matrix");
        powers.push(current.to_vec());
        let stacked = RationalMatrix::from_columns(n * n, &powers).expect("consistent sizes");
        if let Some(dep) = stacked.kernel_basis().into_iter().find(|v| !v[k].is_zero()) {
            return UniPoly::new(dep).monic();
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("{}*x", fmt_rational(c)),
                _ => format!("{}*x^{}", fmt_rational(c), k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, int};

    #[test]
    fn nilpotent_jordan_block_is_not_squarefree() {
        let j = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let m = minimal_polynomial(&j);
        assert_eq!(m, UniPoly::new(vec![int(0), int(0), int(1)]));
        assert!(!m.is_squarefree());
    }

    #[test]
    fn rotation_like_block_is_squarefree() {
        // [[0,1],[-1,0]] has minimal polynomial x^2 + 1
        let r = RationalMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let m = minimal_polynomial(&r);
        assert_eq!(m, UniPoly::new(vec![int(1), int(0), int(1)]));
        assert!(m.is_squarefree());
        assert!(m.rational_roots().is_empty());
    }

    #[test]
    fn diagonal_roots() {
        let d = RationalMatrix::from_rows(vec![
            vec![frac(1, 2), int(0), int(0)],
            vec![int(0), int(-3), int(0)],
            vec![int(0), int(0), frac(1, 2)],
        ])
        .unwrap();
        let m = minimal_polynomial(&d);
        assert_eq!(m.degree(), Some(2));
        assert_eq!(m.rational_roots(), vec![int(-3), frac(1, 2)]);
    }

    #[test]
    fn zero_matrix_minimal_polynomial_is_x() {
        let m = minimal_polynomial(&RationalMatrix::zeros(3, 3));
        assert_eq!(m, UniPoly::new(vec![int(0), int(1)]));
        assert_eq!(m.rational_roots(), vec![int(0)]);
    }
}
