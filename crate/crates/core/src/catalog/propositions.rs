use num_traits::{One, Zero};
use serde::Serialize;

use super::{build_entry, Params};
use crate::error::Result;
use crate::exactmath::{frac, int, MultiPoly, Rational, RationalMatrix};
use crate::liealg::{LieAlgebra, Subspace};
use crate::symplectic::{
    cocycle_space, d_one_form, generic_cocycle, is_closed, is_lagrangian_ideal, pullback, top_power,
    top_power_over_factorial, decide_exact_symplectic, TwoForm,
};

/// The value printed for the top power of `d e^0 + d e^n` on `h ⋉ Q_n`.
pub const Q_PRINTED_TOP_POWER: i64 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct AbelianCheck {
    pub n: usize,
    pub z2_dim: usize,
    pub expected_z2_dim: usize,
    /// `Z²` is spanned by the `e^{i,n+i}` together with `Λ²h*`.
    pub z2_basis_matches: bool,
    /// `B²` is spanned by the `e^{i,n+i}`, so a cocycle is exact iff its
    /// `Λ²h*` part vanishes.
    pub exact_iff_z_zero: bool,
    /// The diagonal rescaling takes each sampled symplectic cocycle to
    /// `ω₀ = Σ e^{i,n+i} + Z`.
    pub normalization_holds: bool,
    pub samples: usize,
    /// `K^n` is a Lagrangian ideal of `(g, ω₀)`.
    pub lagrangian: bool,
    pub exact_witness: bool,
}

impl AbelianCheck {
    pub fn holds(&self) -> bool {
        self.z2_dim == self.expected_z2_dim
            && self.z2_basis_matches
            && self.exact_iff_z_zero
            && self.normalization_holds
            && self.lagrangian
            && self.exact_witness
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct L4Identity {
    pub parameters: Vec<String>,
    pub determinant: String,
    /// Matrix entries standing for `t`, `u`, `v` (1-based, this crate's
    /// `m{i}_{j} = ω(e_i, e_j)`).
    pub renaming: Vec<(String, String)>,
    pub target: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiliformLCheck {
    pub n: usize,
    pub dim: usize,
    pub pfaffian: String,
    pub pfaffian_vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QCheck {
    pub n: usize,
    pub dim: usize,
    pub form: String,
    pub closed: bool,
    pub nondegenerate: bool,
    pub pfaffian: String,
    /// Coefficient of `ω^m` on the volume form.
    pub top_power: String,
    /// `ω^m / m!`, which equals the Pfaffian.
    pub normalized_top_power: String,
    pub printed_value: i64,
    pub matches_printed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionReport {
    pub abelian: Vec<AbelianCheck>,
    pub l4: L4Identity,
    pub filiform_l: Vec<FiliformLCheck>,
    pub filiform_q: Vec<QCheck>,
}

impl PropositionReport {
    pub fn all_hold(&self) -> bool {
        self.abelian.iter().all(AbelianCheck::holds)
            && self.l4.holds
            && self.filiform_l.iter().all(|c| c.pfaffian_vanishes)
            && self.filiform_q.iter().all(|c| c.closed && c.nondegenerate && c.matches_printed)
    }
}

pub fn reproduce_propositions() -> Result<PropositionReport> {
    Ok(PropositionReport {
        abelian: (1..=4).map(abelian_check).collect::<Result<_>>()?,
        l4: l4_identity()?,
        filiform_l: (5..=8).map(filiform_l_check).collect::<Result<_>>()?,
        filiform_q: [5, 7, 9].into_iter().map(q_check).collect::<Result<_>>()?,
    })
}

fn family(name: &str, n: usize) -> Result<LieAlgebra> {
    Ok(build_entry(name, &Params { n: Some(n), a: None })?.algebra)
}

fn span_of(dim: usize, forms: &[TwoForm]) -> Subspace {
    let m = dim * (dim - 1) / 2;
    Subspace::span(m, &forms.iter().map(TwoForm::coordinates).collect::<Vec<_>>())
}

pub fn abelian_check(n: usize) -> Result<AbelianCheck> {
    let g = family("abelian", n)?;
    let dim = 2 * n;
    let cs = cocycle_space(&g);
    let diagonal: Vec<TwoForm> = (0..n).map(|i| TwoForm::basis(dim, i, n + i)).collect();
    let torus_part: Vec<TwoForm> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| TwoForm::basis(dim, n + i, n + j)))
        .collect();
    let expected = span_of(dim, &[diagonal.clone(), torus_part.clone()].concat());
    let z2 = cs.z2_subspace();
    let z2_basis_matches = z2.dim() == expected.dim() && z2.contains_subspace(&expected);
    let b2 = cs.b2_subspace();
    let diag_span = span_of(dim, &diagonal);
    let exact_iff_z_zero = b2.dim() == n && b2.contains_subspace(&diag_span);

    // Deterministic samples: nonzero diagonal weights of both signs, with and
    // without a torus part.
    let mut normalization_holds = true;
    let mut lagrangian = true;
    let mut samples = 0;
    for s in 0..4i64 {
        let weights: Vec<Rational> = (0..n as i64)
            .map(|i| if (i + s) % 2 == 0 { frac(i + s + 1, 1 + s) } else { int(-(i + 2 * s + 1)) })
            .collect();
        let z: Vec<(usize, usize, Rational)> = if s % 2 == 0 {
            Vec::new()
        } else {
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| (n + i, n + j, int(i as i64 - 2 * j as i64 + s)))
                .collect()
        };
        let mut terms: Vec<(usize, usize, Rational)> =
            (0..n).map(|i| (i, n + i, weights[i].clone())).collect();
        terms.extend(z.iter().cloned());
        let omega = TwoForm::from_terms(dim, &terms);
        let mut t = RationalMatrix::identity(dim);
        for (i, w) in weights.iter().enumerate() {
            t.set(i, i, Rational::one() / w);
        }
        let mut target_terms: Vec<(usize, usize, Rational)> = (0..n).map(|i| (i, n + i, int(1))).collect();
        target_terms.extend(z);
        let omega0 = TwoForm::from_terms(dim, &target_terms);
        samples += 1;
        normalization_holds &= is_closed(&g, &omega)
            && omega.is_nondegenerate()
            && g.is_automorphism(&t)
            && pullback(&g, &t, &omega)? == omega0;
        lagrangian &= is_lagrangian_ideal(&g, &omega0, &Subspace::coordinate(dim, &(0..n).collect::<Vec<_>>()));
    }

    let exact = decide_exact_symplectic(&g)?;
    let exact_witness = match (&exact.witness, &exact.witness_one_form) {
        (Some(w), Some(alpha)) => exact.exists && d_one_form(&g, alpha)? == *w && w.is_nondegenerate(),
        _ => false,
    };
    Ok(AbelianCheck {
        n,
        z2_dim: cs.z2_dim(),
        expected_z2_dim: n + n * (n - 1) / 2,
        z2_basis_matches,
        exact_iff_z_zero,
        normalization_holds,
        samples,
        lagrangian,
        exact_witness,
    })
}

/// `det = t²(u² − 2tv)²` for the generic cocycle on `h ⋉ L_4`. The printed
/// matrix shows `-t` at (1,3), `-u` at (1,2) and `v` at (2,6).
pub fn l4_identity() -> Result<L4Identity> {
    let g = family("L", 4)?;
    let form = generic_cocycle(&cocycle_space(&g));
    let det = form.determinant()?;
    let vars = &form.parameters;
    let m = |i: usize, j: usize| form.matrix.get(i - 1, j - 1).clone();
    let t = -m(1, 3);
    let u = -m(1, 2);
    let v = m(2, 6);
    let two = MultiPoly::constant(int(2));
    let inner = &(&u * &u) - &(&two * &(&t * &v));
    let target = (&(&t * &t) * &(&inner * &inner)).with_variables(vars)?;
    let holds = (&det - &target).is_zero();
    Ok(L4Identity {
        parameters: vars.clone(),
        determinant: det.to_string(),
        renaming: vec![
            ("t".into(), "-m1_3".into()),
            ("u".into(), "-m1_2".into()),
            ("v".into(), "m2_6".into()),
        ],
        target: target.to_string(),
        holds,
    })
}

pub fn filiform_l_check(n: usize) -> Result<FiliformLCheck> {
    let g = family("L", n)?;
    let dim = g.dim();
    let pf = if dim % 2 == 1 {
        // No Pfaffian in odd dimension; every antisymmetric form is degenerate.
        MultiPoly::zero()
    } else {
        generic_cocycle(&cocycle_space(&g)).pfaffian()?
    };
    Ok(FiliformLCheck { n, dim, pfaffian: pf.to_string(), pfaffian_vanishes: pf.is_zero() })
}

/// `ω = d e^0 + d e^n` on `h ⋉ Q_n`.
pub fn q_check(n: usize) -> Result<QCheck> {
    let g = family("Q", n)?;
    let dim = g.dim();
    let mut alpha = vec![Rational::zero(); dim];
    for label in ["e0".to_string(), format!("e{n}")] {
        let i = g.index_of(&label).expect("Q has e0 and en");
        alpha[i] = int(1);
    }
    let omega = d_one_form(&g, &alpha)?;
    let pf = omega.pfaffian()?;
    let normalized = top_power_over_factorial(&omega)?;
    Ok(QCheck {
        n,
        dim,
        form: omega.display_with(g.labels()),
        closed: is_closed(&g, &omega),
        nondegenerate: omega.is_nondegenerate(),
        pfaffian: crate::exactmath::fmt_rational(&pf),
        top_power: crate::exactmath::fmt_rational(&top_power(&omega)?),
        normalized_top_power: crate::exactmath::fmt_rational(&normalized),
        printed_value: Q_PRINTED_TOP_POWER,
        matches_printed: normalized == int(Q_PRINTED_TOP_POWER),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_two() {
        let c = abelian_check(2).unwrap();
        assert_eq!(c.z2_dim, 3);
        assert!(c.holds(), "{c:?}");
    }

    #[test]
    fn l4_determinant() {
        let c = l4_identity().unwrap();
        assert!(c.holds, "{} vs {}", c.determinant, c.target);
    }

    #[test]
    fn l6_pfaffian_vanishes() {
        assert!(filiform_l_check(6).unwrap().pfaffian_vanishes);
    }

    #[test]
    fn q5_witness() {
        let c = q_check(5).unwrap();
        assert!(c.closed && c.nondegenerate);
        assert_eq!(c.normalized_top_power, c.pfaffian);
    }
}
