use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, VarGrid};
use crate::poly::order::MonomialOrder;

/// Values a polynomial can be evaluated in.
pub trait Scalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {
    fn from_rational(q: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

/// Sparse polynomial over the rationals in the variables `x_{ij}` of an
/// `n x n` grid. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n * n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigRational::one())
    }

    /// The coordinate function `x_{ij}` (1-based).
    pub fn var(n: usize, i: usize, j: usize) -> Self {
        let grid = VarGrid::new(n);
        Self::monomial(n, Monomial::var(n * n, grid.index(i, j), 1), BigRational::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: BigRational) -> Self {
        debug_assert_eq!(m.nvars(), n * n);
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Matrix size of the grid.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> VarGrid {
        VarGrid::new(self.n)
    }

    pub fn nvars(&self) -> usize {
        self.n * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term<'a>(&'a self, order: &MonomialOrder) -> Option<(&'a Monomial, &'a BigRational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms in descending order.
    pub fn sorted_terms<'a>(&'a self, order: &MonomialOrder) -> Vec<(&'a Monomial, &'a BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    fn check_grid(&self, other: &MPoly) -> Result<()> {
        if self.n != other.n {
            Err(Error::GridMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_grid(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_grid(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_grid(other)?;
        let mut out = MPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self, order: &MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// Integer coefficients with content one and positive leading coefficient.
    pub fn primitive(&self, order: &MonomialOrder) -> MPoly {
        let Some((_, lc)) = self.leading_term(order) else {
            return self.clone();
        };
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = self
            .terms
            .values()
            .map(|c| c.numer() * (&den / c.denom()))
            .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
        let mut factor = BigRational::new(den, content);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `d/dx_idx`.
    pub fn partial(&self, idx: usize) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[idx] -= 1;
            out.add_term(Monomial::from_exps(exps), c * BigRational::from_integer(e.into()));
        }
        out
    }

    /// Applies the derivation sending `x_idx` to `images[idx]`.
    pub fn apply_derivation(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars() {
            return Err(Error::SizeMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let mut out = MPoly::zero(self.n);
        for (idx, img) in images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let d = self.partial(idx);
            if d.is_zero() {
                continue;
            }
            out = &out + &(&d * img);
        }
        Ok(out)
    }

    /// Substitutes `x_idx = point[idx]`.
    pub fn evaluate<T: Scalar>(&self, point: &[T]) -> Result<T> {
        if point.len() != self.nvars() {
            return Err(Error::SizeMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut total = T::zero();
        for (m, c) in &self.terms {
            let mut term = T::from_rational(c);
            for (idx, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term * point[idx].clone();
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder::degrevlex(self.nvars());
        f.write_str(&crate::poly::text::format_poly(self, &order))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.n, self)
    }
}

// Operator forms panic on mismatched grids; use the `checked_*` methods to
// get an error instead.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("grid mismatch")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("grid mismatch")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("grid mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-BigRational::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Shorthand for an integer rational.
pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
