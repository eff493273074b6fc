//! Graded dimensions of the coordinate ring of the cone of a classical group.
//!
//! The degree-`d` component decomposes as a sum of `V ⊗ V` over all labels of
//! degree `d, d-2, d-4, ...`, so its dimension is `h(d) + h(d-2) + ...` where
//! `h(d)` sums the squared dimensions of the degree-`d` irreducibles.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::partitions::{dim_irrep, enum_labels, epsilon, label_count, Family, GroupId};
use crate::series::IntSeries;

/// Sum of `dim(V_label)^2` over `Lambda(g)_d`.
pub fn h_g(g: &GroupId, d: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for label in enum_labels(g, d)? {
        let dim = dim_irrep(g, &label)?;
        total += &dim * &dim;
    }
    Ok(total)
}

/// `dim O(C(g))_d = h(d) + h(d-2) + ...`.
pub fn cone_dim(g: &GroupId, d: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let mut k = d as i64;
    while k >= 0 {
        total += h_g(g, k as u64)?;
        k -= 2;
    }
    Ok(total)
}

// c[d] = w[d] + c[d-2]
fn fold_by_two(weights: Vec<BigInt>) -> IntSeries {
    let mut c = weights;
    for d in 2..c.len() {
        let prev = c[d - 2].clone();
        c[d] += prev;
    }
    IntSeries::new(c)
}

/// Hilbert series of the cone's coordinate ring through `t^order`.
pub fn hilbert_series(g: &GroupId, order: usize) -> Result<IntSeries> {
    let h = (0..=order as u64)
        .map(|d| h_g(g, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_by_two(h))
}

/// Number of irreducible `G° x G°` summands among the `V ⊗ V` of degree `d`.
fn identity_component_summands(g: &GroupId, d: u64) -> Result<BigInt> {
    match g.family {
        Family::O if g.n.is_multiple_of(2) => {
            let mut total = BigInt::zero();
            for label in enum_labels(g, d)? {
                let e = epsilon(g, &label)?;
                total += e * e;
            }
            Ok(total)
        }
        // O(2m+1) = SO(2m+1) x {±1}: irreducibles stay irreducible
        Family::O | Family::SO | Family::Sp => Ok(BigInt::from(label_count(g, d)?)),
    }
}

/// Hilbert series of the `U x U`-invariants through `t^order`.
///
/// The degree-`d` coefficient counts irreducible `G° x G°` summands of the
/// degree-`d` component.
pub fn uxu_series(g: &GroupId, order: usize) -> Result<IntSeries> {
    g.check()?;
    let w = (0..=order as u64)
        .map(|d| identity_component_summands(g, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_by_two(w))
}

/// First negative coefficient of `1/H(-t)` in degrees `1..=max`.
///
/// A hit rules out the Koszul property; `None` proves nothing.
pub fn koszul_obstruction_series(h: &IntSeries, max: usize) -> Result<Option<(usize, BigInt)>> {
    let inv = h.truncate(max).negate_variable().inverse()?;
    Ok(inv.first_negative(max))
}

pub fn koszul_obstruction(g: &GroupId, max: usize) -> Result<Option<(usize, BigInt)>> {
    let h = hilbert_series(g, max)?;
    koszul_obstruction_series(&h, max)
}

/// `1/H(-t)` through `t^max`.
pub fn koszul_dual_series(g: &GroupId, max: usize) -> Result<IntSeries> {
    hilbert_series(g, max)?.negate_variable().inverse()
}

/// `C(k, 2)`, handy for counting quadrics in `k` variables plus one.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
