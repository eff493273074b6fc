//! Canonical text form of polynomials, e.g. `x12^2 + 2*x11*x13`.
//!
//! Terms are printed in descending order, variables inside a term from the
//! most to the least significant, coefficient `1` omitted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, VarGrid};
use crate::poly::mpoly::MPoly;
use crate::poly::order::MonomialOrder;

pub fn format_monomial(m: &Monomial, grid: VarGrid, order: &MonomialOrder) -> String {
    let mut parts = Vec::new();
    for &idx in order.priority() {
        match m.exp(idx) {
            0 => {}
            1 => parts.push(grid.name(idx)),
            e => parts.push(format!("{}^{}", grid.name(idx), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_poly(p: &MPoly, order: &MonomialOrder) -> String {
    let grid = p.grid();
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&format_monomial(m, grid, order));
        } else {
            out.push_str(&format!("{}*{}", mag, format_monomial(m, grid, order)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Num(BigInt),
    Var(usize, usize),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '0'..='9' => {
                let d = digits(&mut i);
                out.push(Tok::Num(d.parse().expect("digits")));
            }
            'x' => {
                i += 1;
                let first = digits(&mut i);
                let (r, col) = if i < chars.len() && chars[i] == '_' {
                    i += 1;
                    let second = digits(&mut i);
                    (first, second)
                } else if first.len() == 2 {
                    (first[..1].to_string(), first[1..].to_string())
                } else {
                    return Err(Error::Parse(format!("ambiguous variable x{first}")));
                };
                let r: usize = r
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable near {i}")))?;
                let col: usize = col
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable near {i}")))?;
                out.push(Tok::Var(r, col));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Parses the canonical text form on an `n x n` grid.
///
/// Juxtaposed factors (`2 x11 x13`) are read as products as well.
pub fn parse_poly(s: &str, n: usize) -> Result<MPoly> {
    let toks = lex(s)?;
    let nv = n * n;
    let grid = VarGrid::new(n);
    let mut pos = 0;
    let mut poly = MPoly::zero(n);
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut first = true;
    while pos < toks.len() {
        let mut sign = BigRational::one();
        match toks[pos] {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                sign = -sign;
                pos += 1
            }
            _ if first => {}
            _ => return Err(Error::Parse(format!("expected + or - at token {pos}"))),
        }
        first = false;
        let mut coeff = sign;
        let mut mono = vec![0u32; nv];
        let mut factors = 0;
        loop {
            match toks.get(pos) {
                Some(Tok::Num(v)) => {
                    let mut val = BigRational::from_integer(v.clone());
                    pos += 1;
                    if toks.get(pos) == Some(&Tok::Slash) {
                        match toks.get(pos + 1) {
                            Some(Tok::Num(d)) if !num_traits::Zero::is_zero(d) => {
                                val /= BigRational::from_integer(d.clone());
                                pos += 2;
                            }
                            _ => return Err(Error::Parse("bad denominator".into())),
                        }
                    }
                    coeff *= val;
                }
                Some(Tok::Var(r, c)) => {
                    if !(1..=n).contains(r) || !(1..=n).contains(c) {
                        return Err(Error::Parse(format!("x{r}{c} outside {n}x{n} grid")));
                    }
                    pos += 1;
                    let mut e = 1u32;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        match toks.get(pos + 1) {
                            Some(Tok::Num(v)) => {
                                e = v
                                    .try_into()
                                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                                pos += 2;
                            }
                            _ => return Err(Error::Parse("missing exponent".into())),
                        }
                    }
                    mono[grid.index(*r, *c)] += e;
                }
                _ => return Err(Error::Parse(format!("expected factor at token {pos}"))),
            }
            factors += 1;
            match toks.get(pos) {
                Some(Tok::Star) => pos += 1,
                Some(Tok::Num(_)) | Some(Tok::Var(..)) => {}
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        poly.add_term(Monomial::from_exps(mono), coeff);
    }
    Ok(poly)
}
