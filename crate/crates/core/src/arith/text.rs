//! Canonical text form of polynomials and rational functions in `t`, and a
//! small expression parser that reads it back.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{RatFun, Rational, TauPoly};
use crate::error::{Error, Result};

/// Renders integer coefficients (little-endian) as `c_k*t^k+...+c_0`.
pub fn render_int_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push('t');
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Numerator and denominator of `f` scaled to coprime integer coefficient
/// vectors with a positive leading denominator coefficient.
pub fn integer_cleared(f: &RatFun) -> (Vec<BigInt>, Vec<BigInt>) {
    if f.is_zero() {
        return (vec![BigInt::zero()], vec![BigInt::one()]);
    }
    let scale = f.num().denominator_lcm().lcm(&f.den().denominator_lcm());
    let mut num = f.num().integer_coeffs(&scale);
    let mut den = f.den().integer_coeffs(&scale);
    let content = num
        .iter()
        .chain(den.iter())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() {
        num.iter_mut().for_each(|c| *c /= &content);
        den.iter_mut().for_each(|c| *c /= &content);
    }
    (num, den)
}

fn nonzero_terms(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

pub fn render_ratfun(f: &RatFun) -> String {
    let (num, den) = integer_cleared(f);
    let n = render_int_poly(&num);
    if den.len() == 1 && den[0].is_one() {
        return n;
    }
    let d = render_int_poly(&den);
    let wrap = |s: String, c: &[BigInt]| {
        if nonzero_terms(c) > 1 {
            format!("({s})")
        } else {
            s
        }
    };
    // a single product still needs grouping after '/'
    let d = if nonzero_terms(&den) > 1 || d.contains('*') { format!("({d})") } else { d };
    format!("{}/{}", wrap(n, &num), d)
}

/// Integer-cleared numerator and denominator rendered separately, as used
/// by the CSV table columns.
pub fn render_num_den(f: &RatFun) -> (String, String) {
    let (num, den) = integer_cleared(f);
    (render_int_poly(&num), render_int_poly(&den))
}

pub fn parse_ratfun(s: &str) -> Result<RatFun> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("unexpected trailing input in {s:?}")));
    }
    Ok(v)
}

/// Parses a rational number such as `3`, `-1/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let f = parse_ratfun(s)?;
    f.as_constant()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a rational constant")))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in {s:?}", self.pos))
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('t' | 'τ') => {
                self.pos += 1;
                Ok(RatFun::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFun::from_poly(TauPoly::constant(Rational::from_integer(n))))
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}
