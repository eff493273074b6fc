//! Truncated integer power series and rational functions with denominator
//! `(1-t)^a (1-t^2)^b`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Panics on an empty coefficient vector; a series always has order >= 0.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        IntSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// A polynomial read as a series of the given order (zero padded or truncated).
    pub fn from_poly(poly: &[BigInt], order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (c, p) in coeffs.iter_mut().zip(poly) {
            *c = p.clone();
        }
        IntSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&[BigInt::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Option<&BigInt> {
        self.coeffs.get(d)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        IntSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        IntSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        IntSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        IntSeries { coeffs: out }
    }

    /// `s(-t)`.
    pub fn negate_variable(&self) -> IntSeries {
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Multiplicative inverse to the same order. The constant term must be
    /// `1` or `-1`.
    pub fn inverse(&self) -> Result<IntSeries> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let n = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
        inv.push(c0.clone());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            // c0 is its own inverse
            inv.push(-(acc * c0));
        }
        Ok(IntSeries { coeffs: inv })
    }

    /// Multiplies by `(1-t)^a (1-t^2)^b`, keeping the order.
    pub fn mul_denominator(&self, a: u32, b: u32) -> IntSeries {
        let mut c = self.coeffs.clone();
        for _ in 0..a {
            for i in (1..c.len()).rev() {
                let prev = c[i - 1].clone();
                c[i] -= prev;
            }
        }
        for _ in 0..b {
            for i in (2..c.len()).rev() {
                let prev = c[i - 2].clone();
                c[i] -= prev;
            }
        }
        IntSeries { coeffs: c }
    }

    /// Divides by `(1-t)^a (1-t^2)^b`, keeping the order.
    pub fn div_denominator(&self, a: u32, b: u32) -> IntSeries {
        let mut c = self.coeffs.clone();
        for _ in 0..a {
            for i in 1..c.len() {
                let prev = c[i - 1].clone();
                c[i] += prev;
            }
        }
        for _ in 0..b {
            for i in 2..c.len() {
                let prev = c[i - 2].clone();
                c[i] += prev;
            }
        }
        IntSeries { coeffs: c }
    }

    /// Smallest index in `1..=max` with a negative coefficient.
    pub fn first_negative(&self, max: usize) -> Option<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .take(max + 1)
            .skip(1)
            .find(|(_, c)| c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    pub fn to_wire(&self) -> SeriesWire {
        SeriesWire {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_wire(w: &SeriesWire) -> Result<IntSeries> {
        if w.coeffs.len() != w.order + 1 {
            return Err(Error::Parse(format!(
                "series order {} but {} coefficients",
                w.order,
                w.coeffs.len()
            )));
        }
        let coeffs = w
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntSeries::new(coeffs))
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// JSON shape of a series: decimal strings so consumers never overflow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesWire {
    pub order: usize,
    pub coeffs: Vec<String>,
}

/// `numerator(t) / ((1-t)^a (1-t^2)^b)` with an integer numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    /// Ascending coefficients, no trailing zeros (except the zero polynomial `[0]`).
    pub numerator: Vec<BigInt>,
    pub a: u32,
    pub b: u32,
}

impl RationalFunction {
    pub fn new(numerator: Vec<BigInt>, a: u32, b: u32) -> Self {
        let mut rf = RationalFunction { numerator, a, b };
        rf.trim();
        rf
    }

    pub fn from_i64s(numerator: &[i64], a: u32, b: u32) -> Self {
        Self::new(numerator.iter().map(|&c| BigInt::from(c)).collect(), a, b)
    }

    fn trim(&mut self) {
        while self.numerator.len() > 1 && self.numerator.last().is_some_and(|c| c.is_zero()) {
            self.numerator.pop();
        }
        if self.numerator.is_empty() {
            self.numerator.push(BigInt::zero());
        }
    }

    pub fn expand(&self, order: usize) -> IntSeries {
        IntSeries::from_poly(&self.numerator, order).div_denominator(self.a, self.b)
    }

    /// Cancels factors `(1-t)` shared by the numerator and `(1-t)^a`.
    pub fn reduced(&self) -> RationalFunction {
        let mut out = self.clone();
        while out.a > 0 && out.numerator.len() > 1 {
            let at_one: BigInt = out.numerator.iter().sum();
            if !at_one.is_zero() {
                break;
            }
            // synthetic division by (1 - t): q_k = p_0 + ... + p_k
            let mut acc = BigInt::zero();
            out.numerator = out.numerator[..out.numerator.len() - 1]
                .iter()
                .map(|c| {
                    acc += c;
                    acc.clone()
                })
                .collect();
            out.a -= 1;
            out.trim();
        }
        out
    }

    pub fn numerator_string(&self) -> String {
        poly_in_t(&self.numerator)
    }

    pub fn denominator_string(&self) -> String {
        let mut parts = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("(1-t)".to_string()),
            a => parts.push(format!("(1-t)^{a}")),
        }
        match self.b {
            0 => {}
            1 => parts.push("(1-t^2)".to_string()),
            b => parts.push(format!("(1-t^2)^{b}")),
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.concat()
        }
    }

    pub fn to_wire(&self) -> RationalWire {
        RationalWire {
            numerator: self.numerator.iter().map(|c| c.to_string()).collect(),
            a: self.a,
            b: self.b,
        }
    }

    pub fn from_wire(w: &RationalWire) -> Result<RationalFunction> {
        let numerator = w
            .numerator
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalFunction::new(numerator, w.a, w.b))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/{}", self.numerator_string(), self.denominator_string())
    }
}

/// JSON shape of a rational function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalWire {
    pub numerator: Vec<String>,
    pub a: u32,
    pub b: u32,
}

/// Renders ascending coefficients as `1+5t+5t^2-6t^3`.
pub fn poly_in_t(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let show_mag = i == 0 || !mag.is_one();
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Guard band of extra coefficients that must vanish past the numerator bound.
pub const GUARD_BAND: usize = 2;

/// Degree bound for the numerator when reconstructing with `(a, b)`.
pub fn numerator_degree_bound(a: u32, b: u32) -> usize {
    a as usize + 2 * b as usize + 5
}

/// Recovers `s = p / ((1-t)^a (1-t^2)^b)` with `p` a polynomial.
///
/// Needs `s.order() >= a + 2b + 5 + GUARD_BAND`; every coefficient of
/// `s (1-t)^a (1-t^2)^b` past the bound must vanish.
pub fn reconstruct_rational(s: &IntSeries, a: u32, b: u32) -> Result<RationalFunction> {
    let bound = numerator_degree_bound(a, b);
    let needed = bound + GUARD_BAND + 1;
    if s.coeffs.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: s.coeffs.len(),
        });
    }
    let prod = s.mul_denominator(a, b);
    if let Some(index) = (bound + 1..=prod.order()).find(|&i| !prod.coeffs[i].is_zero()) {
        return Err(Error::DoesNotTerminate { a, b, index });
    }
    Ok(RationalFunction::new(prod.coeffs[..=bound].to_vec(), a, b))
}

/// Tries `a = 0, 1, ..., max_a` with `b` fixed and returns the first fit.
pub fn detect_rational(s: &IntSeries, b: u32, max_a: u32) -> Result<RationalFunction> {
    let mut last = Error::DoesNotTerminate { a: 0, b, index: 0 };
    for a in 0..=max_a {
        match reconstruct_rational(s, a, b) {
            Ok(rf) => return Ok(rf),
            Err(e @ Error::InsufficientTerms { .. }) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(last)
}
