//! Vanishing ideals of cones over form-preserving groups and exact sample
//! points on them.
//!
//! For an invertible form `B`, the group is `{M : M^T B M = B}` and its cone
//! is the closure of the scalar multiples of group elements. The quadratic
//! generators come from the two products `X^T B X` and `X B^{-1} X^T` of the
//! generic matrix `X`: entries where the form vanishes, and proportionality
//! differences against the first position where it does not.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::{MPoly, Monomial, MonomialOrder, Scalar, VarGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

/// Invertible symmetric or skew-symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    entries: QMatrix,
    kind: FormKind,
}

impl FormMatrix {
    pub fn new(entries: QMatrix, kind: FormKind) -> Result<Self> {
        let ok = match kind {
            FormKind::Symmetric => entries.is_symmetric(),
            FormKind::Skew => entries.is_skew(),
        };
        if !ok {
            return Err(Error::WrongFormKind(match kind {
                FormKind::Symmetric => "symmetric",
                FormKind::Skew => "skew",
            }));
        }
        if entries.det()?.is_zero() {
            return Err(Error::SingularForm);
        }
        Ok(FormMatrix { entries, kind })
    }

    pub fn identity(n: usize) -> Self {
        FormMatrix {
            entries: QMatrix::identity(n),
            kind: FormKind::Symmetric,
        }
    }

    /// Ones on the antidiagonal.
    pub fn beta(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, BigRational::one());
        }
        FormMatrix {
            entries: m,
            kind: FormKind::Symmetric,
        }
    }

    /// Block diagonal with blocks `[[0, 1], [-1, 0]]`; `n` must be even.
    pub fn standard_symplectic(n: usize) -> Result<Self> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::WrongFormKind("skew"));
        }
        let mut m = QMatrix::zeros(n, n);
        for b in (0..n).step_by(2) {
            m.set(b, b + 1, BigRational::one());
            m.set(b + 1, b, -BigRational::one());
        }
        Ok(FormMatrix {
            entries: m,
            kind: FormKind::Skew,
        })
    }

    pub fn entries(&self) -> &QMatrix {
        &self.entries
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    /// `M^T B M = B`.
    pub fn preserved_by(&self, m: &QMatrix) -> bool {
        &(&m.transpose() * &self.entries) * m == self.entries
    }
}

/// A point of `n x n` matrix space with rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointMatrix(pub QMatrix);

impl PointMatrix {
    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn scaled(&self, c: &BigRational) -> PointMatrix {
        PointMatrix(self.0.scale(c))
    }
}

/// Matrix acting on polynomial functions by derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement(pub QMatrix);

impl LieElement {
    /// `E_{12} - E_{23}` in size 3.
    pub fn e12_minus_e23() -> Self {
        let mut m = QMatrix::zeros(3, 3);
        m.set(0, 1, BigRational::one());
        m.set(1, 2, -BigRational::one());
        LieElement(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

pub type Gaussian = Complex<BigRational>;

impl Scalar for Gaussian {
    fn from_rational(q: &BigRational) -> Self {
        Complex::new(q.clone(), BigRational::zero())
    }
}

fn generic_matrix(n: usize) -> Vec<MPoly> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| MPoly::var(n, i, j)))
        .collect()
}

fn constant_matrix(n: usize, m: &QMatrix) -> Vec<MPoly> {
    m.entries()
        .iter()
        .map(|c| MPoly::constant(n, c.clone()))
        .collect()
}

fn poly_transpose(n: usize, a: &[MPoly]) -> Vec<MPoly> {
    (0..n * n).map(|k| a[(k % n) * n + k / n].clone()).collect()
}

fn poly_matmul(n: usize, a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut s = MPoly::zero(a[0].n());
            for k in 0..n {
                if a[i * n + k].is_zero() || b[k * n + j].is_zero() {
                    continue;
                }
                s = &s + &(&a[i * n + k] * &b[k * n + j]);
            }
            out.push(s);
        }
    }
    out
}

/// Rank of the coefficient matrix of `polys`.
pub fn linear_rank(polys: &[MPoly]) -> usize {
    let mut monos: Vec<&Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    monos.sort();
    monos.dedup();
    if monos.is_empty() {
        return 0;
    }
    let mut m = QMatrix::zeros(polys.len(), monos.len());
    for (r, p) in polys.iter().enumerate() {
        for (m_, c) in p.terms() {
            let col = monos.binary_search(&m_).expect("collected");
            m.set(r, col, c.clone());
        }
    }
    m.rank()
}

// Keeps each polynomial that enlarges the span of the ones kept so far.
fn prune_dependent(polys: Vec<MPoly>) -> Vec<MPoly> {
    let mut kept: Vec<MPoly> = Vec::new();
    for p in polys {
        kept.push(p);
        if linear_rank(&kept) < kept.len() {
            kept.pop();
        }
    }
    kept
}

fn form_generators(n: usize, b: &FormMatrix) -> Result<Vec<MPoly>> {
    if b.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: b.n(),
        });
    }
    let binv = b.entries.inverse().ok_or(Error::SingularForm)?;
    let x = generic_matrix(n);
    let xt = poly_transpose(n, &x);
    let right = poly_matmul(n, &poly_matmul(n, &xt, &constant_matrix(n, &b.entries)), &x);
    let left = poly_matmul(n, &poly_matmul(n, &x, &constant_matrix(n, &binv)), &xt);
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| match b.kind {
            FormKind::Symmetric => i <= j,
            FormKind::Skew => i < j,
        })
        .collect();

    let mut zeros = Vec::new();
    let mut diffs = Vec::new();
    for (prod, form) in [(&right, &b.entries), (&left, &binv)] {
        let nonzero: Vec<(usize, usize)> = positions
            .iter()
            .copied()
            .filter(|&(i, j)| !form.get(i, j).is_zero())
            .collect();
        for &(i, j) in &positions {
            if form.get(i, j).is_zero() {
                zeros.push(prod[i * n + j].clone());
            }
        }
        let (i0, j0) = nonzero[0];
        for &(k, l) in &nonzero[1..] {
            let d = &prod[i0 * n + j0].scale(form.get(k, l)) - &prod[k * n + l].scale(form.get(i0, j0));
            diffs.push(d);
        }
    }
    zeros.extend(diffs);
    Ok(prune_dependent(zeros.into_iter().filter(|p| !p.is_zero()).collect()))
}

/// Quadratic generators of the vanishing ideal of the cone of `O(n, B)`.
pub fn orthogonal_generators(n: usize, b: &FormMatrix) -> Result<Vec<MPoly>> {
    if b.kind != FormKind::Symmetric {
        return Err(Error::WrongFormKind("symmetric"));
    }
    form_generators(n, b)
}

/// Quadratic generators of the vanishing ideal of the cone of `Sp(n, J)`.
pub fn symplectic_generators(n: usize, j: &FormMatrix) -> Result<Vec<MPoly>> {
    if j.kind != FormKind::Skew {
        return Err(Error::WrongFormKind("skew"));
    }
    form_generators(n, j)
}

/// Reduced row echelon form of the span of `polys`, each element made
/// integral with positive leading coefficient, largest leading monomial first.
pub fn canonical_span(polys: &[MPoly], order: &MonomialOrder) -> Vec<MPoly> {
    let mut rows: Vec<MPoly> = Vec::new();
    for p in polys {
        let mut r = p.clone();
        for b in &rows {
            let lm = b.leading_monomial(order).expect("nonzero");
            let c = r.coeff(lm);
            if !c.is_zero() {
                r = &r - &b.scale(&c);
            }
        }
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        let lm = r.leading_monomial(order).expect("nonzero").clone();
        for b in rows.iter_mut() {
            let c = b.coeff(&lm);
            if !c.is_zero() {
                *b = &*b - &r.scale(&c);
            }
        }
        rows.push(r);
    }
    rows.sort_by(|a, b| {
        order.compare(
            b.leading_monomial(order).expect("nonzero"),
            a.leading_monomial(order).expect("nonzero"),
        )
    });
    rows.into_iter().map(|r| r.primitive(order)).collect()
}

fn check_point(f: &MPoly, n: usize) -> Result<()> {
    if f.n() != n {
        return Err(Error::SizeMismatch {
            expected: f.n(),
            got: n,
        });
    }
    Ok(())
}

/// `f` with `x_{ij}` replaced by `M_{ij}`.
pub fn evaluate(f: &MPoly, m: &PointMatrix) -> Result<BigRational> {
    check_point(f, m.n())?;
    f.evaluate(m.0.entries())
}

/// Evaluation at `re + i * im` over the Gaussian rationals.
pub fn evaluate_gaussian(f: &MPoly, re: &QMatrix, im: &QMatrix) -> Result<Gaussian> {
    check_point(f, re.rows())?;
    check_point(f, im.rows())?;
    let point: Vec<Gaussian> = re
        .entries()
        .iter()
        .zip(im.entries())
        .map(|(a, b)| Complex::new(a.clone(), b.clone()))
        .collect();
    f.evaluate(&point)
}

/// `S^T B + B S = 0`.
pub fn is_form_skew(s: &QMatrix, b: &FormMatrix) -> bool {
    s.is_square()
        && s.rows() == b.n()
        && (&(&s.transpose() * &b.entries) + &(&b.entries * s)).is_zero()
}

/// `B^{-1} A`, which is form-skew when `A` is skew (symmetric `B`) or
/// symmetric (skew `B`).
pub fn form_skew_from(b: &FormMatrix, a: &QMatrix) -> Result<QMatrix> {
    let binv = b.entries.inverse().ok_or(Error::SingularForm)?;
    let s = binv.checked_mul(a)?;
    if !is_form_skew(&s, b) {
        return Err(Error::NotFormSkew);
    }
    Ok(s)
}

/// Cayley transform `(I - S)(I + S)^{-1}`, an element of the group of `B`.
pub fn cayley_orthogonal(s: &QMatrix, b: &FormMatrix) -> Result<PointMatrix> {
    if !is_form_skew(s, b) {
        return Err(Error::NotFormSkew);
    }
    let id = QMatrix::identity(b.n());
    let inv = (&id + s).inverse().ok_or(Error::SingularCayley)?;
    Ok(PointMatrix(&(&id - s) * &inv))
}

/// Derivation extending `x_{ij} -> -(uX)_{ij}` (left) or `x_{ij} -> (Xu)_{ij}`
/// (right), applied to `f`.
pub fn infinitesimal_action(f: &MPoly, u: &LieElement, side: Side) -> Result<MPoly> {
    let n = f.n();
    if u.0.rows() != n || !u.0.is_square() {
        return Err(Error::SizeMismatch {
            expected: n,
            got: u.0.rows(),
        });
    }
    let x = generic_matrix(n);
    let uc = constant_matrix(n, &u.0);
    let images: Vec<MPoly> = match side {
        Side::Left => poly_matmul(n, &uc, &x).iter().map(|p| -p).collect(),
        Side::Right => poly_matmul(n, &x, &uc),
    };
    f.apply_derivation(&images)
}

/// `det X` for the generic `n x n` matrix, by cofactor expansion.
pub fn determinant(n: usize) -> MPoly {
    fn rec(n: usize, rows: &[usize], cols: &[usize]) -> MPoly {
        if rows.is_empty() {
            return MPoly::one(n);
        }
        let r = rows[0];
        let mut out = MPoly::zero(n);
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &MPoly::var(n, r + 1, c + 1) * &rec(n, &rows[1..], &rest);
            out = if k % 2 == 0 { &out + &term } else { &out - &term };
        }
        out
    }
    let idx: Vec<usize> = (0..n).collect();
    rec(n, &idx, &idx)
}

/// `[x31, x31*x22 - x21*x32, Tr(X^T b X b), det X]` for the antidiagonal form.
pub fn uxu_candidates_o3beta() -> Vec<MPoly> {
    let n = 3;
    let x = generic_matrix(n);
    let beta = constant_matrix(n, FormMatrix::beta(n).entries());
    let xt = poly_transpose(n, &x);
    let prod = poly_matmul(n, &poly_matmul(n, &poly_matmul(n, &xt, &beta), &x), &beta);
    let trace = (0..n).fold(MPoly::zero(n), |acc, i| &acc + &prod[i * n + i]);
    let x31 = MPoly::var(n, 3, 1);
    let q2 = &(&x31 * &MPoly::var(n, 2, 2)) - &(&MPoly::var(n, 2, 1) * &MPoly::var(n, 3, 2));
    vec![x31, q2, trace, determinant(n)]
}

/// Products of elements of `gens` (with repetition) of total degree `d`,
/// assuming each generator is homogeneous of positive degree.
pub fn products_of_degree(gens: &[MPoly], d: u32) -> Vec<MPoly> {
    fn rec(gens: &[MPoly], start: usize, left: u32, acc: MPoly, out: &mut Vec<MPoly>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for k in start..gens.len() {
            let deg = gens[k].total_degree().expect("nonzero");
            if deg == 0 || deg > left {
                continue;
            }
            rec(gens, k, left - deg, &acc * &gens[k], out);
        }
    }
    let mut out = Vec::new();
    if let Some(g) = gens.first() {
        rec(gens, 0, d, MPoly::one(g.n()), &mut out);
    }
    out
}

/// Row-major names `x11, x12, ...` of the generic matrix entries.
pub fn variable_names(n: usize) -> Vec<String> {
    let grid = VarGrid::new(n);
    (0..n * n).map(|k| grid.name(k)).collect()
}
