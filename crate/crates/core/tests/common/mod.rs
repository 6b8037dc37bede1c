//! Independent oracles shared by the integration tests. Nothing here calls
//! into the symplectic module; it only uses the bracket and exact linear
//! algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;

use liesymp::exactmath::{int, Rational, RationalMatrix};
use liesymp::{LieAlgebra, Subspace};
use num_traits::{One, Zero};

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// `ω(x, y)` for `ω = Σ c_{ij} e^{ij}` given by its upper-triangular
/// coefficients in lexicographic pair order.
fn eval(n: usize, coeffs: &[Rational], x: &[Rational], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !coeffs[k].is_zero() {
                acc += &coeffs[k] * (&x[i] * &y[j] - &x[j] * &y[i]);
            }
            k += 1;
        }
    }
    acc
}

/// Closed 2-forms by the textbook definition: for every basis 2-form
/// `e^{pq}` evaluate `ω([x,y],z) + ω([y,z],x) + ω([z,x],y)` on all basis
/// triples, then take the null space of the resulting linear map.
pub fn brute_force_cocycles(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let m = n * (n.saturating_sub(1)) / 2;
    let basis: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !(i < j && j < k) {
                    continue;
                }
                let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                let xy = g.bracket(x, y).unwrap();
                let yz = g.bracket(y, z).unwrap();
                let zx = g.bracket(z, x).unwrap();
                let row: Vec<Rational> = (0..m)
                    .map(|p| {
                        let c = unit(m, p);
                        eval(n, &c, &xy, z) + eval(n, &c, &yz, x) + eval(n, &c, &zx, y)
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() || m == 0 {
        return Subspace::full(m);
    }
    let sys = RationalMatrix::from_rows(rows).unwrap();
    Subspace::span(m, &sys.kernel_basis())
}

/// Decomposable-basis exterior algebra: sorted index sets to coefficients.
type Form = BTreeMap<Vec<usize>, Rational>;

fn wedge(a: &Form, b: &Form) -> Form {
    let mut out = Form::new();
    for (ia, ca) in a {
        for (ib, cb) in b {
            if ia.iter().any(|i| ib.contains(i)) {
                continue;
            }
            let mut idx: Vec<usize> = ia.iter().chain(ib).copied().collect();
            // sign of the sorting permutation, counted by inversions
            let mut inversions = 0;
            for s in 0..idx.len() {
                for t in s + 1..idx.len() {
                    if idx[s] > idx[t] {
                        inversions += 1;
                    }
                }
            }
            idx.sort_unstable();
            let mut c = ca * cb;
            if inversions % 2 == 1 {
                c = -c;
            }
            let e = out.entry(idx).or_insert_with(Rational::zero);
            *e += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `ω^m` on `e^1 ∧ ... ∧ e^{2m}`, by repeated wedging.
pub fn wedge_top_power(matrix: &RationalMatrix) -> Rational {
    let n = matrix.rows();
    assert!(n % 2 == 0);
    let mut omega = Form::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = matrix.get(i, j);
            if !c.is_zero() {
                omega.insert(vec![i, j], c.clone());
            }
        }
    }
    let mut power = Form::new();
    power.insert(Vec::new(), int(1));
    for _ in 0..n / 2 {
        power = wedge(&power, &omega);
    }
    power.get(&(0..n).collect::<Vec<_>>()).cloned().unwrap_or_else(Rational::zero)
}

/// Equality of subspaces by mutual containment.
pub fn same_subspace(a: &Subspace, b: &Subspace) -> bool {
    a.dim() == b.dim() && a.contains_subspace(b) && b.contains_subspace(a)
}
