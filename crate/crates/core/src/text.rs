//! Plain-text polynomial systems.
//!
//! ```text
//! # the cusp
//! vars x y z
//! x^2 - z^3
//! y - z^2
//! point 0 0 0
//! mode exact
//! ```
//!
//! A coefficient is a decimal (`-1.25`, `3e-4`), a fraction `p/q`, or a
//! parenthesized complex number such as `(0.5-2i)`. Decimals are read
//! exactly, so in exact mode `0.1` means `1/10`. The `*` between a
//! coefficient and the first variable is optional. Blank lines and text
//! after `#` are ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponent, Ideal, Polynomial};
use crate::scalar::{Complex, Rational, Scalar};

/// Coefficient field requested by a system file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Complex,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Complex => "complex",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "complex" => Ok(Mode::Complex),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}

/// A coefficient as written: exact real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coeff {
    pub re: Rational,
    pub im: Rational,
}

impl Coeff {
    pub fn real(re: Rational) -> Self {
        Coeff { re, im: <Rational as Zero>::zero() }
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }

    fn neg(self) -> Self {
        Coeff { re: -self.re, im: -self.im }
    }

    /// The value in field `F`; `None` for a non-real value in exact mode.
    pub fn to_scalar<F: Scalar>(&self) -> Option<F> {
        if Zero::is_zero(&self.im) {
            return Some(F::from_rational(&self.re));
        }
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        F::from_complex(Complex::new(f(&self.re), f(&self.im)))
    }
}

/// A parsed system: variable names, generators as term lists, an optional
/// point and an optional mode line.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemFile {
    pub vars: Vec<String>,
    pub generators: Vec<Vec<(Exponent, Coeff)>>,
    pub point: Option<Vec<Coeff>>,
    pub mode: Option<Mode>,
}

impl SystemFile {
    /// The declared mode, or complex when any value has an imaginary part.
    pub fn effective_mode(&self) -> Mode {
        if let Some(m) = self.mode {
            return m;
        }
        let complex = self
            .generators
            .iter()
            .flatten()
            .map(|(_, c)| c)
            .chain(self.point.iter().flatten())
            .any(|c| !Zero::is_zero(&c.im));
        if complex {
            Mode::Complex
        } else {
            Mode::Exact
        }
    }

    pub fn ideal<F: Scalar>(&self) -> Result<Ideal<F>> {
        let n = self.vars.len();
        let gens = self
            .generators
            .iter()
            .map(|terms| {
                let conv = terms
                    .iter()
                    .map(|(e, c)| Ok((e.clone(), convert(c)?)))
                    .collect::<Result<Vec<_>>>()?;
                Polynomial::from_terms(n, conv)
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(n, gens)
    }

    pub fn point_as<F: Scalar>(&self) -> Result<Option<Vec<F>>> {
        self.point
            .as_ref()
            .map(|p| p.iter().map(convert).collect::<Result<Vec<F>>>())
            .transpose()
    }

    /// Index of a declared variable.
    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name:?}")))
    }
}

fn convert<F: Scalar>(c: &Coeff) -> Result<F> {
    c.to_scalar()
        .ok_or_else(|| Error::InvalidArgument(format!("complex value {} in exact mode", format_coeff(c))))
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.pos + 1, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    /// Unsigned real: `123`, `1.5`, `2e-3`, `7/3`.
    fn real(&mut self) -> Result<Option<Rational>> {
        self.skip_ws();
        let start = self.pos;
        let int = self.digits();
        let mut frac = String::new();
        if self.peek() == Some('.') {
            self.pos += 1;
            frac = self.digits();
        }
        if int.is_empty() && frac.is_empty() {
            self.pos = start;
            return Ok(None);
        }
        let mut value = Rational::from_integer(parse_int(&format!("{int}{frac}")));
        value /= Rational::from_integer(BigInt::from(10).pow(frac.len() as u32));
        let digit_at = |i: usize| self.chars.get(i).is_some_and(char::is_ascii_digit);
        let signed = matches!(self.chars.get(self.pos + 1), Some('-' | '+'));
        let has_exp = digit_at(self.pos + 1) || (signed && digit_at(self.pos + 2));
        if matches!(self.peek(), Some('e' | 'E')) && has_exp {
            self.pos += 1;
            let neg = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let e = self.digits();
            let e: u32 = e.parse().map_err(|_| self.err("malformed exponent"))?;
            let p = Rational::from_integer(BigInt::from(10).pow(e));
            value = if neg { value / p } else { value * p };
        }
        if self.peek() == Some('/') {
            if !frac.is_empty() {
                return Err(self.err("a fraction needs integer numerator and denominator"));
            }
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.err("missing denominator"));
            }
            let den = parse_int(&den);
            if Zero::is_zero(&den) {
                return Err(self.err("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(Some(value))
    }

    /// `(a)`, `(a+bi)`, `(bi)`, `(-i)`; the opening parenthesis is consumed.
    fn complex_body(&mut self) -> Result<Coeff> {
        let mut out = Coeff::real(<Rational as Zero>::zero());
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek() == Some(')') {
                if first {
                    return Err(self.err("empty parentheses"));
                }
                self.pos += 1;
                return Ok(out);
            }
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(self.err("expected + or - inside complex number"));
            };
            let v = self.real()?;
            self.skip_ws();
            let imag = self.peek() == Some('i') && !self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_');
            if imag {
                self.pos += 1;
            }
            let v = match (v, imag) {
                (Some(v), _) => v,
                (None, true) => Rational::from_integer(1.into()),
                (None, false) => return Err(self.err("malformed complex number")),
            };
            let v = if neg { -v } else { v };
            if imag {
                out.im += v;
            } else {
                out.re += v;
            }
            first = false;
        }
    }

    fn coeff(&mut self) -> Result<Option<Coeff>> {
        if self.eat('(') {
            return self.complex_body().map(Some);
        }
        Ok(self.real()?.map(Coeff::real))
    }

    fn term(&mut self, vars: &[String]) -> Result<(Exponent, Coeff)> {
        let coeff = self.coeff()?;
        let mut exp = vec![0u32; vars.len()];
        if coeff.is_none() || self.eat('*') || self.peek_ident() {
            loop {
                self.skip_ws();
                let at = self.pos;
                let name = self.ident().ok_or_else(|| self.err("expected a variable"))?;
                let idx = vars.iter().position(|v| *v == name).ok_or_else(|| Error::Parse {
                    line: self.line,
                    column: at + 1,
                    message: format!("unknown variable {name:?}"),
                })?;
                let mut pow = 1u32;
                if self.eat('^') {
                    self.skip_ws();
                    let d = self.digits();
                    pow = d.parse().map_err(|_| self.err("expected a non-negative integer exponent"))?;
                }
                exp[idx] += pow;
                if !self.eat('*') {
                    break;
                }
            }
        }
        Ok((Exponent::new(exp), coeff.unwrap_or_else(|| Coeff::real(Rational::from_integer(1.into())))))
    }

    fn peek_ident(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
    }

    fn polynomial(&mut self, vars: &[String]) -> Result<Vec<(Exponent, Coeff)>> {
        let mut terms = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (e, c) = self.term(vars)?;
            terms.push((e, if neg { c.neg() } else { c }));
            if self.at_end() {
                return Ok(terms);
            }
            neg = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else {
                return Err(self.err(format!("unexpected character {:?}", self.peek().unwrap_or(' '))));
            };
        }
    }

    fn signed_coeff(&mut self) -> Result<Coeff> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let c = self.coeff()?.ok_or_else(|| self.err("expected a number"))?;
        Ok(if neg { c.neg() } else { c })
    }
}

fn parse_int(s: &str) -> BigInt {
    s.parse().unwrap_or_else(|_| BigInt::zero())
}

/// Parses one polynomial in the given variables.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Vec<(Exponent, Coeff)>> {
    let mut cur = Cursor::new(text, 1);
    if cur.at_end() {
        return Err(cur.err("empty polynomial"));
    }
    merge_terms(cur.polynomial(vars)?)
}

fn merge_terms(terms: Vec<(Exponent, Coeff)>) -> Result<Vec<(Exponent, Coeff)>> {
    let mut map: std::collections::BTreeMap<Exponent, Coeff> = std::collections::BTreeMap::new();
    for (e, c) in terms {
        let entry = map.entry(e).or_insert_with(|| Coeff::real(<Rational as Zero>::zero()));
        entry.re += c.re;
        entry.im += c.im;
    }
    Ok(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut vars: Option<Vec<String>> = None;
    let mut generators = Vec::new();
    let mut point = None;
    let mut mode = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(line, lineno + 1);
        let save = cur.pos;
        let keyword = cur.ident();
        match keyword.as_deref() {
            Some("vars") if vars.is_none() => {
                let mut names = Vec::new();
                while !cur.at_end() {
                    cur.eat(',');
                    cur.skip_ws();
                    let at = cur.pos;
                    let name = cur.ident().ok_or_else(|| cur.err("expected a variable name"))?;
                    if names.contains(&name) {
                        return Err(Error::Parse {
                            line: cur.line,
                            column: at + 1,
                            message: format!("variable {name:?} declared twice"),
                        });
                    }
                    names.push(name);
                }
                if names.is_empty() {
                    return Err(cur.err("no variables declared"));
                }
                vars = Some(names);
            }
            Some("vars") => return Err(Error::Parse { line: lineno + 1, column: 1, message: "second vars line".into() }),
            Some("point") => {
                let n = vars.as_ref().map(Vec::len).ok_or_else(|| cur.err("point before vars"))?;
                let mut coords = Vec::new();
                while !cur.at_end() {
                    cur.eat(',');
                    coords.push(cur.signed_coeff()?);
                }
                if coords.len() != n {
                    return Err(cur.err(format!("point has {} coordinates, expected {n}", coords.len())));
                }
                point = Some(coords);
            }
            Some("mode") => {
                let at = cur.pos;
                let name = cur.ident().unwrap_or_default();
                mode = Some(name.parse::<Mode>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    column: at + 2,
                    message: format!("mode must be exact or complex, not {name:?}"),
                })?);
                if !cur.at_end() {
                    return Err(cur.err("trailing text after mode"));
                }
            }
            _ => {
                let vs = vars.as_ref().ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: "the first line must declare the variables".into(),
                })?;
                cur.pos = save;
                generators.push(merge_terms(cur.polynomial(vs)?)?);
            }
        }
    }
    let vars = vars.ok_or(Error::Parse { line: 1, column: 1, message: "missing vars line".into() })?;
    Ok(SystemFile { vars, generators, point, mode })
}

fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A coefficient in the input syntax.
pub fn format_coeff(c: &Coeff) -> String {
    if Zero::is_zero(&c.im) {
        return format_rational(&c.re);
    }
    let im = if c.im.is_negative() { format!("-{}", -&c.im) } else { format!("+{}", c.im) };
    format!("({}{im}i)", c.re)
}

fn format_float_complex(z: &Complex) -> String {
    let im = if z.im.is_sign_negative() { format!("-{}", -z.im) } else { format!("+{}", z.im) };
    format!("({}{im}i)", z.re)
}

fn monomial(e: &Exponent, vars: &[String]) -> String {
    let mut out = String::new();
    for (i, &p) in e.as_slice().iter().enumerate() {
        if p == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&vars[i]);
        if p > 1 {
            let _ = write!(out, "^{p}");
        }
    }
    out
}

/// A scalar in the input syntax: rationals as `p/q`, complex values as
/// `(re±imi)` with round-trip float formatting.
pub fn format_scalar<F: Scalar>(c: &F) -> String {
    if F::EXACT {
        c.to_string()
    } else {
        format_float_complex(&c.to_complex())
    }
}

/// Prints a polynomial so that [`parse_polynomial`] reads back the same
/// value (exactly in exact mode).
pub fn format_polynomial<F: Scalar>(f: &Polynomial<F>, vars: &[String]) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let m = monomial(e, vars);
        let (neg, body) = if F::EXACT {
            let s = c.to_string();
            match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            }
        } else {
            (false, format_float_complex(&c.to_complex()))
        };
        let sep = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        if m.is_empty() {
            out.push_str(&body);
        } else if F::EXACT && body == "1" {
            out.push_str(&m);
        } else {
            let _ = write!(out, "{body}*{m}");
        }
    }
    out
}

/// Prints a whole system; parsing the output gives back the same ideal,
/// point and mode.
pub fn format_system<F: Scalar>(vars: &[String], ideal: &Ideal<F>, point: Option<&[F]>) -> String {
    let mut out = format!("vars {}\n", vars.join(" "));
    for g in ideal.generators() {
        out.push_str(&format_polynomial(g, vars));
        out.push('\n');
    }
    if let Some(p) = point {
        let coords: Vec<String> = p.iter().map(format_scalar).collect();
        let _ = writeln!(out, "point {}", coords.join(" "));
    }
    let _ = writeln!(out, "mode {}", F::MODE);
    out
}
