//! The `.lie` text format.
//!
//! ```text
//! algebra n4_1
//! basis e1 e2 e3 e4
//! [e2,e4] = e1
//! [e3,e4] = e2
//! torus e5 e6
//! [e5,e1] = e1
//! [e5,e3] = -e3
//! ```
//!
//! Torus rules read `[h, x] = h(x)` with `h` a torus label and `x` a basis
//! label. `#` starts a comment running to the end of the line.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{fmt_rational, parse_rational, RationalMatrix, Rational};
use crate::liealg::LieAlgebra;
use crate::structure::{semidirect, TorusAction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketRule {
    pub left: String,
    pub right: String,
    /// Nonzero coefficients, combined per label, in declaration order.
    pub terms: Vec<(String, Rational)>,
}

impl BracketRule {
    pub fn coefficient(&self, label: &str) -> Rational {
        self.terms
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TorusBlock {
    pub labels: Vec<String>,
    pub rules: Vec<BracketRule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRule>,
    pub torus: Option<TorusBlock>,
}

/// A parse error with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    LBracket,
    RBracket,
    Comma,
    Equals,
    Plus,
    Minus,
    Star,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Number(s) => write!(f, "`{s}`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

const KEYWORDS: [&str; 3] = ["algebra", "basis", "torus"];

fn diag(line: usize, column: usize, message: impl Into<String>) -> Diagnostic {
    Diagnostic { line, column, message: message.into() }
}

fn lex(source: &str) -> std::result::Result<Vec<Spanned>, Diagnostic> {
    let mut out = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l, col) = (lineno + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                ',' => Some(Tok::Comma),
                '=' => Some(Tok::Equals),
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned { tok, line: l, column: col });
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Spanned { tok: Tok::Ident(s), line: l, column: col });
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || matches!(chars[i], '/' | '.' | '_')) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                if parse_rational(&s).is_none() || s.contains('-') {
                    return Err(diag(l, col, format!("malformed rational `{s}`")));
                }
                out.push(Spanned { tok: Tok::Number(s), line: l, column: col });
            } else {
                return Err(diag(l, col, format!("unexpected character `{c}`")));
            }
        }
    }
    let (line, column) = match source.lines().enumerate().last() {
        Some((k, l)) => (k + 1, l.chars().count() + 1),
        None => (1, 1),
    };
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

#[derive(PartialEq)]
enum Section {
    Algebra,
    Torus,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> std::result::Result<Spanned, Diagnostic> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(diag(t.line, t.column, format!("expected {want}, found {}", t.tok)))
        }
    }

    fn keyword(&mut self, kw: &str) -> std::result::Result<(), Diagnostic> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(()),
            other => Err(diag(t.line, t.column, format!("expected `{kw}`, found {other}"))),
        }
    }

    fn ident(&mut self) -> std::result::Result<(String, usize, usize), Diagnostic> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => Ok((s, t.line, t.column)),
            other => Err(diag(t.line, t.column, format!("expected a label, found {other}"))),
        }
    }

    fn at_label(&self) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()))
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    /// `IDENT+`, rejecting repeats and labels already in `taken`.
    fn label_list(&mut self, taken: &[String], what: &str) -> std::result::Result<Vec<String>, Diagnostic> {
        let mut labels: Vec<String> = Vec::new();
        loop {
            let (s, l, c) = self.ident()?;
            if labels.contains(&s) || taken.contains(&s) {
                return Err(diag(l, c, format!("label `{s}` declared twice")));
            }
            labels.push(s);
            if !self.at_label() {
                break;
            }
        }
        if labels.is_empty() {
            let t = self.peek();
            return Err(diag(t.line, t.column, format!("{what} needs at least one label")));
        }
        Ok(labels)
    }

    fn bracket(
        &mut self,
        basis: &[String],
        torus: &[String],
        section: &Section,
        seen: &mut HashMap<(String, String), usize>,
    ) -> std::result::Result<Option<BracketRule>, Diagnostic> {
        let open = self.expect(Tok::LBracket)?;
        let (left, ll, lc) = self.ident()?;
        self.expect(Tok::Comma)?;
        let (right, rl, rc) = self.ident()?;
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Equals)?;
        match section {
            Section::Algebra => {
                for (s, l, c) in [(&left, ll, lc), (&right, rl, rc)] {
                    if !basis.contains(s) {
                        return Err(diag(l, c, format!("undeclared label `{s}`")));
                    }
                }
            }
            Section::Torus => {
                if !torus.contains(&left) {
                    let msg = if basis.contains(&left) {
                        format!("torus rules must read [torus label, basis label]; `{left}` is a basis label")
                    } else {
                        format!("undeclared torus label `{left}`")
                    };
                    return Err(diag(ll, lc, msg));
                }
                if !basis.contains(&right) {
                    return Err(diag(rl, rc, format!("undeclared basis label `{right}`")));
                }
            }
        }
        let terms = self.linear(basis)?;
        if left == right {
            if !terms.is_empty() {
                return Err(diag(
                    open.line,
                    open.column,
                    format!("bracket of a label with itself must be 0 (antisymmetry): [{left},{left}]"),
                ));
            }
            return Ok(None);
        }
        let key = if left < right { (left.clone(), right.clone()) } else { (right.clone(), left.clone()) };
        if let Some(first) = seen.get(&key) {
            return Err(diag(
                open.line,
                open.column,
                format!("duplicate bracket [{left},{right}] (first given on line {first})"),
            ));
        }
        seen.insert(key, open.line);
        Ok(Some(BracketRule { left, right, terms }))
    }

    fn linear(&mut self, basis: &[String]) -> std::result::Result<Vec<(String, Rational)>, Diagnostic> {
        if let Tok::Number(s) = &self.peek().tok {
            if s == "0" && self.toks[self.pos + 1].tok != Tok::Star {
                self.next();
                return Ok(Vec::new());
            }
        }
        let mut terms: Vec<(String, Rational)> = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek().tok {
                Tok::Plus if !first => {
                    self.next();
                    Rational::one()
                }
                Tok::Minus => {
                    self.next();
                    -Rational::one()
                }
                _ if first => Rational::one(),
                _ => break,
            };
            first = false;
            let coeff = match self.peek().tok.clone() {
                Tok::Number(s) => {
                    self.next();
                    self.expect(Tok::Star)?;
                    parse_rational(&s).expect("validated by the lexer")
                }
                _ => Rational::one(),
            };
            let (label, l, c) = self.ident()?;
            if !basis.contains(&label) {
                return Err(diag(l, c, format!("undeclared label `{label}`")));
            }
            let value = sign * coeff;
            match terms.iter_mut().find(|(x, _)| *x == label) {
                Some((_, acc)) => *acc += value,
                None => terms.push((label, value)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Ok(terms)
    }
}

/// Parses a `.lie` source. Every failure carries a line and column.
pub fn parse(source: &str) -> std::result::Result<AlgebraFile, Diagnostic> {
    let mut p = Parser { toks: lex(source)?, pos: 0 };
    p.keyword("algebra")?;
    let (name, _, _) = p.ident()?;
    p.keyword("basis")?;
    let basis = p.label_list(&[], "basis")?;
    let mut seen = HashMap::new();
    let mut brackets = Vec::new();
    while p.peek().tok == Tok::LBracket {
        if let Some(rule) = p.bracket(&basis, &[], &Section::Algebra, &mut seen)? {
            brackets.push(rule);
        }
    }
    let mut torus = None;
    if p.at_keyword("torus") {
        p.next();
        let labels = p.label_list(&basis, "torus")?;
        let mut rules = Vec::new();
        let mut seen = HashMap::new();
        while p.peek().tok == Tok::LBracket {
            if let Some(rule) = p.bracket(&basis, &labels, &Section::Torus, &mut seen)? {
                rules.push(rule);
            }
        }
        torus = Some(TorusBlock { labels, rules });
    }
    let t = p.next();
    if t.tok != Tok::Eof {
        return Err(diag(t.line, t.column, format!("unexpected {}", t.tok)));
    }
    Ok(AlgebraFile { name, basis, brackets, torus })
}

fn write_linear(f: &mut fmt::Formatter<'_>, terms: &[(String, Rational)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (label, c)) in terms.iter().enumerate() {
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if mag.is_one() {
            f.write_str(label)?;
        } else {
            write!(f, "{}*{}", fmt_rational(&mag), label)?;
        }
    }
    Ok(())
}

impl fmt::Display for BracketRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] = ", self.left, self.right)?;
        write_linear(f, &self.terms)
    }
}

/// Canonical form; `parse` of the output reproduces the file.
impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.name)?;
        writeln!(f, "basis {}", self.basis.join(" "))?;
        for r in &self.brackets {
            writeln!(f, "{r}")?;
        }
        if let Some(t) = &self.torus {
            writeln!(f, "torus {}", t.labels.join(" "))?;
            for r in &t.rules {
                writeln!(f, "{r}")?;
            }
        }
        Ok(())
    }
}

impl AlgebraFile {
    fn index(&self, label: &str) -> usize {
        self.basis.iter().position(|b| b == label).expect("labels validated by the parser")
    }

    fn sparse(&self, terms: &[(String, Rational)]) -> Vec<(usize, Rational)> {
        terms.iter().map(|(l, c)| (self.index(l), c.clone())).collect()
    }

    /// The algebra spanned by the `basis` labels.
    pub fn nilradical(&self) -> Result<LieAlgebra> {
        let rules = self
            .brackets
            .iter()
            .map(|r| (self.index(&r.left), self.index(&r.right), self.sparse(&r.terms)));
        LieAlgebra::from_brackets(self.basis.clone(), rules)
    }

    /// The torus block as matrices acting on the nilradical.
    pub fn torus_action(&self) -> Result<TorusAction> {
        let n = self.nilradical()?;
        let Some(block) = &self.torus else {
            return Ok(TorusAction::empty(n));
        };
        let dim = self.basis.len();
        let mut generators = vec![RationalMatrix::zeros(dim, dim); block.labels.len()];
        for r in &block.rules {
            let a = block.labels.iter().position(|l| *l == r.left).expect("validated");
            let col = self.index(&r.right);
            for (row, c) in self.sparse(&r.terms) {
                generators[a].set(row, col, c);
            }
        }
        Ok(TorusAction::new(n, generators, block.labels.clone()))
    }

    /// `h ⋉ n` when a torus block is present, otherwise the nilradical.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        match &self.torus {
            Some(_) => semidirect(&self.torus_action()?),
            None => self.nilradical(),
        }
    }

    /// Text form of a concrete algebra, without torus.
    pub fn from_algebra(name: &str, g: &LieAlgebra) -> Self {
        let brackets = g
            .nonzero_brackets()
            .map(|(i, j, v)| BracketRule {
                left: g.label(i).to_string(),
                right: g.label(j).to_string(),
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (g.label(k).to_string(), c.clone()))
                    .collect(),
            })
            .collect();
        Self {
            name: name.to_string(),
            basis: g.labels().to_vec(),
            brackets,
            torus: None,
        }
    }
}

impl From<Diagnostic> for Error {
    fn from(d: Diagnostic) -> Self {
        Error::InvalidStructure(d.to_string())
    }
}
