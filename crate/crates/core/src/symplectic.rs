//! Scalar Chevalley-Eilenberg cohomology in low degree and the symplectic
//! existence decision.
//!
//! Sign conventions: `(d alpha)(x, y) = -alpha([x, y])` and
//! `(d omega)(x, y, z) = -(omega([x,y],z) + omega([y,z],x) + omega([z,x],y))`,
//! so `d o d = 0`. A two-form is stored as the antisymmetric matrix
//! `M_ij = omega(e_i, e_j)`, i.e. `omega = sum_{i<j} M_ij e^i ∧ e^j`, and then
//! `omega^m = m! Pf(M) e^1 ∧ ... ∧ e^{2m}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, MultiPoly, PolyMatrix, RationalMatrix, Rational};
use crate::liealg::{LieAlgebra, Subspace};

pub const WITNESS_BOUND_ENV: &str = "LIESYMP_WITNESS_BOUND";
pub const DEFAULT_WITNESS_BOUND: u64 = 16;

/// A concrete antisymmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    matrix: RationalMatrix,
}

impl TwoForm {
    pub fn zero(n: usize) -> Self {
        Self { matrix: RationalMatrix::zeros(n, n) }
    }

    pub fn from_matrix(matrix: RationalMatrix) -> Result<Self> {
        if let Some((row, col)) = matrix.first_antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { row, col });
        }
        Ok(Self { matrix })
    }

    /// `e^i ∧ e^j`.
    pub fn basis(n: usize, i: usize, j: usize) -> Self {
        let mut f = Self::zero(n);
        f.add_to(i, j, &Rational::one());
        f
    }

    /// Builds `sum c e^{i,j}` from `(i, j, c)` triples.
    pub fn from_terms(n: usize, terms: &[(usize, usize, Rational)]) -> Self {
        let mut f = Self::zero(n);
        for (i, j, c) in terms {
            f.add_to(*i, *j, c);
        }
        f
    }

    fn add_to(&mut self, i: usize, j: usize, c: &Rational) {
        if i == j {
            return;
        }
        let v = self.matrix.get(i, j) + c;
        self.matrix.set(i, j, v.clone());
        self.matrix.set(j, i, -v);
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let my = self.matrix.mul_vec(y).expect("dims");
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    /// Coordinates on `e^{i,j}`, `i < j`, lexicographic.
    pub fn coordinates(&self) -> Vec<Rational> {
        pairs(self.dim()).iter().map(|&(i, j)| self.get(i, j).clone()).collect()
    }

    pub fn from_coordinates(n: usize, coords: &[Rational]) -> Self {
        let mut f = Self::zero(n);
        for (&(i, j), c) in pairs(n).iter().zip(coords) {
            f.add_to(i, j, c);
        }
        f
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { matrix: self.matrix.add(&other.matrix).expect("dims") }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { matrix: self.matrix.scale(s) }
    }

    pub fn pfaffian(&self) -> Result<Rational> {
        self.matrix.pfaffian()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.dim() % 2 == 0 && self.pfaffian().is_ok_and(|p| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Nonzero `(i, j, coefficient)` with `i < j`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        pairs(self.dim())
            .into_iter()
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .map(|(i, j)| (i, j, self.get(i, j).clone()))
            .collect()
    }

    /// `2*e1^e5 - e2^e4`, writing the dual basis by the algebra's labels.
    pub fn display_with(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (i, j, c) in self.terms() {
            let neg = c < Rational::zero();
            let mag = if neg { -c } else { c };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&crate::exactmath::fmt_rational(&mag));
                out.push('*');
            }
            out.push_str(&format!("{}^{}", labels[i], labels[j]));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Alternating trilinear form, by its values on basis triples `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    pub dim: usize,
    values: BTreeMap<(usize, usize, usize), Rational>,
}

impl ThreeForm {
    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.values.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero entries `((i, j, k), value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.values.iter()
    }
}

/// A two-form whose entries are polynomials in free parameters.
#[derive(Clone, Debug)]
pub struct ParametricForm {
    pub matrix: PolyMatrix,
    pub parameters: Vec<String>,
}

impl ParametricForm {
    pub fn specialize(&self, point: &[Rational]) -> Result<TwoForm> {
        if point.len() != self.parameters.len() {
            return Err(Error::DimensionMismatch {
                expected: self.parameters.len(),
                found: point.len(),
            });
        }
        let values: HashMap<String, Rational> = self.parameters.iter().cloned().zip(point.iter().cloned()).collect();
        TwoForm::from_matrix(self.matrix.specialize(&values)?)
    }

    pub fn pfaffian(&self) -> Result<MultiPoly> {
        Ok(self.matrix.pfaffian()?.with_variables(&self.parameters).expect("parameter ring"))
    }

    pub fn determinant(&self) -> Result<MultiPoly> {
        self.matrix.determinant()
    }

    fn combination(n: usize, forms: &[TwoForm], prefix: &str) -> Self {
        let parameters: Vec<String> = (1..=forms.len()).map(|k| format!("{prefix}{k}")).collect();
        let vars = parameters.clone();
        let matrix = PolyMatrix::from_fn(n, n, |i, j| {
            let mut acc = MultiPoly::zero_in(&vars);
            for (k, f) in forms.iter().enumerate() {
                let c = f.get(i, j);
                if !c.is_zero() {
                    acc = &acc + &MultiPoly::var_in(&vars, k).scale(c);
                }
            }
            acc
        });
        Self { matrix, parameters }
    }
}

pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// `(d alpha)(e_i, e_j) = -alpha([e_i, e_j])`.
pub fn d_one_form(g: &LieAlgebra, alpha: &[Rational]) -> Result<TwoForm> {
    let n = g.dim();
    if alpha.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
    }
    let mut f = TwoForm::zero(n);
    for (i, j, c) in g.nonzero_brackets() {
        let v: Rational = -c.iter().zip(alpha).map(|(a, b)| a * b).sum::<Rational>();
        f.add_to(i, j, &v);
    }
    Ok(f)
}

/// Values of `d omega` on basis triples.
pub fn d_two_form(g: &LieAlgebra, omega: &TwoForm) -> Result<ThreeForm> {
    let n = g.dim();
    if omega.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: omega.dim() });
    }
    let mut values = BTreeMap::new();
    for (i, j, k) in triples(n) {
        let a = omega.eval(&g.bracket_basis(i, j), &g.basis_vector(k));
        let b = omega.eval(&g.bracket_basis(j, k), &g.basis_vector(i));
        let c = omega.eval(&g.bracket_basis(k, i), &g.basis_vector(j));
        let v = -(a + b + c);
        if !v.is_zero() {
            values.insert((i, j, k), v);
        }
    }
    Ok(ThreeForm { dim: n, values })
}

pub fn is_closed(g: &LieAlgebra, omega: &TwoForm) -> bool {
    d_two_form(g, omega).is_ok_and(|t| t.is_zero())
}

/// Matrix of `omega -> d omega` from `Λ^2` coordinates (lexicographic pairs)
/// to values on lexicographic triples.
pub fn cocycle_system(g: &LieAlgebra) -> RationalMatrix {
    let n = g.dim();
    let ps = pairs(n);
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let ts = triples(n);
    let mut m = RationalMatrix::zeros(ts.len(), ps.len());
    for (row, &(i, j, k)) in ts.iter().enumerate() {
        for (u, w) in [(g.bracket_basis(i, j), k), (g.bracket_basis(j, k), i), (g.bracket_basis(k, i), j)] {
            // -omega(u, e_w) = -sum_p u_p omega(e_p, e_w)
            for (p, up) in u.iter().enumerate() {
                if up.is_zero() || p == w {
                    continue;
                }
                let (col, sign_flip) = if p < w { (index[&(p, w)], false) } else { (index[&(w, p)], true) };
                let delta = if sign_flip { up.clone() } else { -up.clone() };
                let v = m.get(row, col) + delta;
                m.set(row, col, v);
            }
        }
    }
    m
}

/// `Z^2`, `B^2` and their dimensions.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    pub algebra: LieAlgebra,
    pub z2_basis: Vec<TwoForm>,
    /// The coordinate `e^{i,j}` each `Z^2` basis vector is normalized on.
    pub z2_free_pairs: Vec<(usize, usize)>,
    pub b2_basis: Vec<TwoForm>,
    /// `b2_basis[k] = d(b2_preimages[k])`.
    pub b2_preimages: Vec<Vec<Rational>>,
}

impl CocycleSpace {
    pub fn z2_dim(&self) -> usize {
        self.z2_basis.len()
    }

    pub fn b2_dim(&self) -> usize {
        self.b2_basis.len()
    }

    pub fn h2_dim(&self) -> usize {
        self.z2_dim() - self.b2_dim()
    }

    pub fn z2_subspace(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> = self.z2_basis.iter().map(TwoForm::coordinates).collect();
        Subspace::span(pairs(self.algebra.dim()).len(), &vs)
    }

    pub fn b2_subspace(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> = self.b2_basis.iter().map(TwoForm::coordinates).collect();
        Subspace::span(pairs(self.algebra.dim()).len(), &vs)
    }

    /// Whether `omega` is a coboundary.
    pub fn is_exact(&self, omega: &TwoForm) -> bool {
        self.b2_subspace().contains(&omega.coordinates())
    }
}

pub fn cocycle_space(g: &LieAlgebra) -> CocycleSpace {
    let n = g.dim();
    let ps = pairs(n);
    let (z2_basis, z2_free_pairs) = if ps.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let system = cocycle_system(g);
        let free = system.free_columns();
        let basis = system
            .kernel_basis()
            .into_iter()
            .map(|v| TwoForm::from_coordinates(n, &v))
            .collect();
        (basis, free.into_iter().map(|c| ps[c]).collect())
    };
    let exact: Vec<TwoForm> = (0..n).map(|i| d_one_form(g, &g.basis_vector(i)).expect("dims")).collect();
    let mut b2_basis = Vec::new();
    let mut b2_preimages = Vec::new();
    if !ps.is_empty() {
        let cols: Vec<Vec<Rational>> = exact.iter().map(TwoForm::coordinates).collect();
        let m = RationalMatrix::from_columns(ps.len(), &cols).expect("dims");
        for p in m.rref().1 {
            b2_basis.push(exact[p].clone());
            b2_preimages.push(g.basis_vector(p));
        }
    }
    CocycleSpace {
        algebra: g.clone(),
        z2_basis,
        z2_free_pairs,
        b2_basis,
        b2_preimages,
    }
}

/// `sum_k t_k z_k` over the `Z^2` basis.
pub fn generic_cocycle(cs: &CocycleSpace) -> ParametricForm {
    ParametricForm::combination(cs.algebra.dim(), &cs.z2_basis, "t")
}

/// `sum_k s_k b_k` over the `B^2` basis.
pub fn generic_coboundary(cs: &CocycleSpace) -> ParametricForm {
    ParametricForm::combination(cs.algebra.dim(), &cs.b2_basis, "s")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Existence {
    Yes,
    No,
    OddDimension,
}

impl std::fmt::Display for Existence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Yes => "yes",
            Self::No => "no",
            Self::OddDimension => "not applicable (odd dimension)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ExactVerdict {
    pub exists: bool,
    pub parameters: Vec<String>,
    pub pfaffian: MultiPoly,
    /// `alpha` with `witness = d alpha`.
    pub witness_one_form: Option<Vec<Rational>>,
    pub witness: Option<TwoForm>,
}

#[derive(Clone, Debug)]
pub struct SymplecticVerdict {
    pub existence: Existence,
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub generic: Option<ParametricForm>,
    pub pfaffian: MultiPoly,
    pub witness_point: Option<Vec<Rational>>,
    pub witness: Option<TwoForm>,
    pub exact: ExactVerdict,
    /// Zero-dimensional input; the verdict holds vacuously.
    pub degenerate: bool,
}

impl SymplecticVerdict {
    pub fn exists(&self) -> bool {
        self.existence == Existence::Yes
    }
}

/// Box bound for the witness search, from `LIESYMP_WITNESS_BOUND`.
pub fn witness_bound_from_env() -> Result<u64> {
    match std::env::var(WITNESS_BOUND_ENV) {
        Err(_) => Ok(DEFAULT_WITNESS_BOUND),
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| Error::InvalidConfig(format!("{WITNESS_BOUND_ENV} must be a positive integer, got `{s}`"))),
    }
}

/// First integer point, by increasing max-norm and lexicographically within
/// each shell, at which `p` does not vanish. `p` must live in a ring over
/// exactly `nvars` variables.
pub fn find_nonvanishing_point(p: &MultiPoly, nvars: usize, bound: u64) -> Result<Option<Vec<i64>>> {
    if p.is_zero() {
        return Ok(None);
    }
    if nvars == 0 {
        return Ok(Some(Vec::new()));
    }
    let terms: Vec<(Vec<u32>, Rational)> = p.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
    let eval = |pt: &[i64]| -> bool {
        let mut acc = Rational::zero();
        for (e, c) in &terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                if k > 0 {
                    t *= Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(*x), k as usize));
                }
            }
            acc += t;
        }
        !acc.is_zero()
    };
    for r in 1..=bound as i64 {
        let mut pt = vec![-r; nvars];
        loop {
            if crate::exactmath::rational::max_abs_int(&pt) == r as u64 && eval(&pt) {
                return Ok(Some(pt));
            }
            // odometer over [-r, r]^nvars, last coordinate fastest
            let mut k = nvars;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if pt[k] < r {
                    pt[k] += 1;
                    for x in pt.iter_mut().skip(k + 1) {
                        *x = -r;
                    }
                    break;
                }
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
    }
    Err(Error::WitnessBoundExceeded(bound))
}

fn to_rationals(pt: &[i64]) -> Vec<Rational> {
    pt.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

pub fn decide_symplectic(g: &LieAlgebra) -> Result<SymplecticVerdict> {
    decide_symplectic_with_bound(g, witness_bound_from_env()?)
}

pub fn decide_symplectic_with_bound(g: &LieAlgebra, bound: u64) -> Result<SymplecticVerdict> {
    let n = g.dim();
    let cs = cocycle_space(g);
    if n % 2 == 1 {
        return Ok(SymplecticVerdict {
            existence: Existence::OddDimension,
            z2_dim: cs.z2_dim(),
            b2_dim: cs.b2_dim(),
            generic: None,
            pfaffian: MultiPoly::zero(),
            witness_point: None,
            witness: None,
            exact: ExactVerdict {
                exists: false,
                parameters: Vec::new(),
                pfaffian: MultiPoly::zero(),
                witness_one_form: None,
                witness: None,
            },
            degenerate: false,
        });
    }
    let generic = generic_cocycle(&cs);
    let pfaffian = generic.pfaffian()?;
    let point = find_nonvanishing_point(&pfaffian, generic.parameters.len(), bound)?;
    let (witness_point, witness) = match point {
        Some(pt) => {
            let pt = to_rationals(&pt);
            let w = generic.specialize(&pt)?;
            (Some(pt), Some(w))
        }
        None => (None, None),
    };
    let exact = exact_from_space(&cs, bound)?;
    Ok(SymplecticVerdict {
        existence: if witness.is_some() { Existence::Yes } else { Existence::No },
        z2_dim: cs.z2_dim(),
        b2_dim: cs.b2_dim(),
        generic: Some(generic),
        pfaffian,
        witness_point,
        witness,
        exact,
        degenerate: n == 0,
    })
}

pub fn decide_exact_symplectic(g: &LieAlgebra) -> Result<ExactVerdict> {
    let bound = witness_bound_from_env()?;
    if g.dim() % 2 == 1 {
        return Err(Error::OddDimension(g.dim()));
    }
    exact_from_space(&cocycle_space(g), bound)
}

fn exact_from_space(cs: &CocycleSpace, bound: u64) -> Result<ExactVerdict> {
    let n = cs.algebra.dim();
    let generic = generic_coboundary(cs);
    let pfaffian = generic.pfaffian()?;
    let point = find_nonvanishing_point(&pfaffian, generic.parameters.len(), bound)?;
    let (witness_one_form, witness) = match point {
        Some(pt) => {
            let pt = to_rationals(&pt);
            let mut alpha = vec![Rational::zero(); n];
            for (s, pre) in pt.iter().zip(&cs.b2_preimages) {
                for (a, p) in alpha.iter_mut().zip(pre) {
                    *a += s * p;
                }
            }
            let w = generic.specialize(&pt)?;
            (Some(alpha), Some(w))
        }
        None => (None, None),
    };
    Ok(ExactVerdict {
        exists: witness.is_some(),
        parameters: generic.parameters,
        pfaffian,
        witness_one_form,
        witness,
    })
}

/// `(T^* omega)(x, y) = omega(T x, T y)`, matrix `T^t M T`.
pub fn pullback(g: &LieAlgebra, t: &RationalMatrix, omega: &TwoForm) -> Result<TwoForm> {
    let n = g.dim();
    if t.rows() != n || t.cols() != n || omega.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: t.rows() });
    }
    if t.determinant()?.is_zero() {
        return Err(Error::Singular);
    }
    let m = t.transpose().mul(omega.matrix())?.mul(t)?;
    TwoForm::from_matrix(m)
}

/// Ideal of half the dimension on which `omega` vanishes.
pub fn is_lagrangian_ideal(g: &LieAlgebra, omega: &TwoForm, w: &Subspace) -> bool {
    let n = g.dim();
    if n % 2 == 1 || w.dim() * 2 != n || !g.is_ideal(w) {
        return false;
    }
    let b = w.basis();
    b.iter().all(|x| b.iter().all(|y| omega.eval(x, y).is_zero()))
}

/// Coefficient `c` of `omega^m = c e^1 ∧ ... ∧ e^{2m}`, equal to `m! Pf`.
pub fn top_power(omega: &TwoForm) -> Result<Rational> {
    let n = omega.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    Ok(factorial(n / 2) * omega.pfaffian()?)
}

/// `omega^m / m!` as a multiple of the volume form, i.e. `Pf`.
pub fn top_power_over_factorial(omega: &TwoForm) -> Result<Rational> {
    let n = omega.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    omega.pfaffian()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use crate::liealg::LieAlgebra;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    /// `h ⋉ K^1`: [e2, e1] = e1
    fn aff1() -> LieAlgebra {
        LieAlgebra::from_brackets(labels(2), [(1, 0, vec![(0, int(1))])]).unwrap()
    }

    #[test]
    fn d_of_zero_is_zero() {
        let g = aff1();
        assert!(d_one_form(&g, &[int(0), int(0)]).unwrap().is_zero());
    }

    #[test]
    fn d_of_torus_covector_vanishes() {
        let g = aff1();
        assert!(d_one_form(&g, &g.basis_vector(1)).unwrap().is_zero());
        // d e^1 = e^{1,2}
        assert_eq!(d_one_form(&g, &g.basis_vector(0)).unwrap(), TwoForm::basis(2, 0, 1));
    }

    #[test]
    fn generic_cocycle_of_aff1() {
        let cs = cocycle_space(&aff1());
        assert_eq!(cs.z2_dim(), 1);
        assert_eq!(cs.b2_dim(), 1);
        assert_eq!(cs.h2_dim(), 0);
        let gen = generic_cocycle(&cs);
        assert_eq!(gen.parameters, vec!["t1".to_string()]);
        assert_eq!(gen.matrix.get(0, 1), &MultiPoly::parse("t1").unwrap());
    }

    #[test]
    fn abelian_two_dim() {
        let g = LieAlgebra::abelian(labels(2));
        let cs = cocycle_space(&g);
        assert_eq!(cs.z2_dim(), 1);
        assert_eq!(cs.b2_dim(), 0);
        let v = decide_symplectic_with_bound(&g, 4).unwrap();
        assert_eq!(v.existence, Existence::Yes);
        assert!(!v.exact.exists);
    }

    #[test]
    fn zero_dimensional_is_degenerate_yes() {
        let g = LieAlgebra::abelian(Vec::new());
        let v = decide_symplectic_with_bound(&g, 4).unwrap();
        assert_eq!(v.existence, Existence::Yes);
        assert!(v.degenerate);
        assert_eq!(v.witness.unwrap().dim(), 0);
    }

    #[test]
    fn odd_dimension_not_applicable() {
        let g = LieAlgebra::abelian(labels(3));
        let v = decide_symplectic_with_bound(&g, 4).unwrap();
        assert_eq!(v.existence, Existence::OddDimension);
        assert!(top_power(&TwoForm::zero(3)).is_err());
    }

    #[test]
    fn top_power_examples() {
        assert_eq!(top_power(&TwoForm::basis(2, 0, 1)).unwrap(), int(1));
        // e^{1,3} + e^{2,4}: squared is 2 e^{1,3,2,4} = -2 vol
        let f = TwoForm::basis(4, 0, 2).add(&TwoForm::basis(4, 1, 3));
        assert_eq!(top_power(&f).unwrap(), int(-2));
        assert_eq!(top_power_over_factorial(&f).unwrap(), int(-1));
    }

    #[test]
    fn pullback_identity_and_singular() {
        let g = aff1();
        let w = TwoForm::basis(2, 0, 1);
        assert_eq!(pullback(&g, &RationalMatrix::identity(2), &w).unwrap(), w);
        assert_eq!(pullback(&g, &RationalMatrix::zeros(2, 2), &w), Err(Error::Singular));
    }

    #[test]
    fn lagrangian_dimension_checks() {
        let g = aff1();
        let w = TwoForm::basis(2, 0, 1);
        assert!(is_lagrangian_ideal(&g, &w, &Subspace::coordinate(2, &[0])));
        assert!(!is_lagrangian_ideal(&g, &w, &Subspace::full(2)));
        assert!(!is_lagrangian_ideal(&g, &w, &Subspace::coordinate(2, &[1])));
    }

    #[test]
    fn witness_search_order() {
        let p = MultiPoly::parse("t1 + t2").unwrap();
        let vars = vec!["t1".to_string(), "t2".to_string()];
        let p = p.with_variables(&vars).unwrap();
        assert_eq!(find_nonvanishing_point(&p, 2, 3).unwrap(), Some(vec![-1, -1]));
        let q = MultiPoly::parse("t1").unwrap();
        assert_eq!(find_nonvanishing_point(&q, 1, 3).unwrap(), Some(vec![-1]));
        let z = MultiPoly::zero_in(&vars);
        assert_eq!(find_nonvanishing_point(&z, 2, 3).unwrap(), None);
    }

    #[test]
    fn witness_bound_exceeded_reports_guidance() {
        // t (t - 1) (t + 1) vanishes on all of [-1, 1]
        let p = MultiPoly::parse("t^3 - t").unwrap();
        let err = find_nonvanishing_point(&p, 1, 1).unwrap_err();
        assert_eq!(err, Error::WitnessBoundExceeded(1));
        assert!(err.to_string().contains(WITNESS_BOUND_ENV));
        assert_eq!(find_nonvanishing_point(&p, 1, 2).unwrap(), Some(vec![-2]));
    }
}
