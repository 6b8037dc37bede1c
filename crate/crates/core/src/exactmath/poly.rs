//! Sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial carries its own ordered variable list; the exponent vector of
//! every term is indexed by that list. Binary operations on polynomials over
//! different variable lists work in the union ring (left operand's variables
//! first). Equality is semantic: `p == q` iff `p - q` has no terms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{fmt_rational, parse_rational, Rational};
use crate::error::{Error, Result};

type Exponents = Vec<u32>;

#[derive(Clone, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

fn grlex_key(e: &Exponents) -> (u32, &Exponents) {
    (e.iter().sum(), e)
}

impl MultiPoly {
    pub fn zero_in(vars: &[String]) -> Self {
        Self {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &[String], c: Rational) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::constant_in(&[], c)
    }

    /// The polynomial `x_idx` in the ring over `vars`.
    pub fn var_in(vars: &[String], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero_in(vars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn variable(name: &str) -> Self {
        Self::var_in(&[name.to_string()], 0)
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Variables that occur with nonzero exponent, in ring order.
    pub fn used_variables(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    /// Leading term under graded-lex order over the variable list.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex_key(a.0).cmp(&grlex_key(b.0)))
    }

    /// Re-embeds into the ring over `vars`, which must contain every used
    /// variable.
    pub fn with_variables(&self, vars: &[String]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| match vars.iter().position(|w| w == v) {
                Some(p) => Ok(p),
                None if self.terms.keys().all(|e| e[i] == 0) => Ok(usize::MAX),
                None => Err(Error::IncompatibleRings(self.vars.clone(), vars.to_vec())),
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero_in(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    ne[map[i]] = x;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        if self.vars == other.vars {
            return self.vars.clone();
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (
            self.with_variables(&vars).expect("union ring"),
            other.with_variables(&vars).expect("union ring"),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero_in(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant_in(&self.vars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; every variable that occurs must be assigned.
    pub fn eval(&self, assignment: &HashMap<String, Rational>) -> Result<Rational> {
        let values: Vec<Option<&Rational>> = self.vars.iter().map(|v| assignment.get(v)).collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = values[i].ok_or_else(|| Error::MissingVariable(self.vars[i].clone()))?;
                t *= num_traits::pow(v.clone(), x as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation at a point given in ring variable order.
    pub fn eval_point(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t *= num_traits::pow(point[i].clone(), x as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces variables by polynomials. Unmapped variables stay as they are.
    pub fn substitute(&self, map: &HashMap<String, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero_in(&[]);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let base = map
                    .get(&self.vars[i])
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::variable(&self.vars[i]));
                term = &term * &base.pow(x);
            }
            out = &out + &term;
        }
        out
    }

    /// Quotient and remainder of multivariate division by a single divisor
    /// under graded-lex order.
    pub fn div_rem(&self, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (mut p, d) = self.aligned(divisor);
        let vars = p.vars.clone();
        let (lt_e, lt_c) = {
            let (e, c) = d.leading_term().expect("nonzero divisor");
            (e.clone(), c.clone())
        };
        let mut q = MultiPoly::zero_in(&vars);
        let mut r = MultiPoly::zero_in(&vars);
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lt_e).all(|(a, b)| a >= b) {
                let qe: Exponents = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
                let qc = &c / &lt_c;
                let mono = MultiPoly::from_terms(&vars, [(qe, qc)]).expect("aligned");
                p = &p - &(&mono * &d);
                q = &q + &mono;
            } else {
                r.add_term(e.clone(), c.clone());
                p.terms.remove(&e);
            }
        }
        Ok((q, r))
    }

    /// True iff `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> Result<bool> {
        Ok(self.div_rem(divisor)?.1.is_zero())
    }

    /// Parses `+ - * ^ ( )`, rational literals and identifiers. Variables are
    /// ordered by first appearance.
    pub fn parse(src: &str) -> Result<MultiPoly> {
        let mut p = PolyParser {
            src: src.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        let vars = out.used_variables();
        out.with_variables(&vars)
    }
}

/// `d` divides `p` exactly (graded-lex division leaves no remainder).
pub fn poly_divides(d: &MultiPoly, p: &MultiPoly) -> Result<bool> {
    p.is_divisible_by(d)
}

pub fn poly_eval(p: &MultiPoly, assignment: &HashMap<String, Rational>) -> Result<Rational> {
    p.eval(assignment)
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        (self - other).is_zero()
    }
}

impl Eq for MultiPoly {}

impl Zero for MultiPoly {
    fn zero() -> Self {
        Self::zero_in(&[])
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(rhs);
        let mut out = MultiPoly::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| grlex_key(b.0).cmp(&grlex_key(a.0)));
        for (k, (e, c)) in ordered.into_iter().enumerate() {
            let negative = super::rational::is_negative(c);
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::PolyParse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.err("expected exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/') {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                parse_rational(text)
                    .map(MultiPoly::constant)
                    .ok_or_else(|| self.err("malformed rational"))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(MultiPoly::variable(name))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}
