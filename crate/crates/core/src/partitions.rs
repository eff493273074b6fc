//! Label sets of irreducible representations and their dimensions.
//!
//! Irreducible representations of `O(n)`, `SO(2m)` and `Sp(2m)` are indexed by
//! partition-like integer tuples. [`enum_labels`] lists the labels of a given
//! degree, [`dim_irrep`] returns the dimension of the representation a label
//! names, and [`weyl_dim`] is the underlying Weyl dimension formula for the
//! root systems `B_m`, `C_m` and `D_m`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    O,
    SO,
    Sp,
}

/// A classical group acting on `n x n` matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub family: Family,
    pub n: usize,
}

impl GroupId {
    pub const fn orthogonal(n: usize) -> Self {
        GroupId { family: Family::O, n }
    }

    pub const fn special_orthogonal(n: usize) -> Self {
        GroupId { family: Family::SO, n }
    }

    pub const fn symplectic(n: usize) -> Self {
        GroupId { family: Family::Sp, n }
    }

    /// Rejects descriptors the engine does not handle.
    pub fn check(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::UnsupportedGroup(format!("{self}: need n >= 3")));
        }
        match self.family {
            Family::O => Ok(()),
            Family::SO if self.n % 2 == 1 => Err(Error::OddSpecialOrthogonal(self.n)),
            Family::SO => Ok(()),
            Family::Sp if self.n % 2 == 1 => {
                Err(Error::UnsupportedGroup(format!("{self}: symplectic needs even n")))
            }
            Family::Sp => Ok(()),
        }
    }

    /// `floor(n/2)`, the rank of the group.
    pub fn rank(&self) -> usize {
        self.n / 2
    }

    /// Number of entries in a label: `n` for `O(n)`, `m` otherwise.
    pub fn label_len(&self) -> usize {
        match self.family {
            Family::O => self.n,
            Family::SO | Family::Sp => self.rank(),
        }
    }

    /// Dimension of the group as a variety.
    pub fn dimension(&self) -> usize {
        match self.family {
            Family::O | Family::SO => self.n * (self.n - 1) / 2,
            Family::Sp => {
                let m = self.rank();
                m * (2 * m + 1)
            }
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::O => "O",
            Family::SO => "SO",
            Family::Sp => "Sp",
        };
        write!(f, "{}({})", name, self.n)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Accepts `O3`, `SO4`, `Sp4` and the parenthesised forms `O(3)` etc.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = if let Some(r) = s.strip_prefix("SO") {
            (Family::SO, r)
        } else if let Some(r) = s.strip_prefix("Sp") {
            (Family::Sp, r)
        } else if let Some(r) = s.strip_prefix('O') {
            (Family::O, r)
        } else {
            return Err(Error::UnsupportedGroup(s.to_string()));
        };
        let digits = rest.trim_start_matches('(').trim_end_matches(')');
        let n: usize = digits
            .parse()
            .map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
        let g = GroupId { family, n };
        g.check()?;
        Ok(g)
    }
}

/// Integer tuple labelling an irreducible representation.
///
/// Entries are weakly decreasing and nonnegative, except that the last entry
/// of an `SO(2m)` label may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionLabel(Vec<i64>);

impl PartitionLabel {
    pub fn new(parts: Vec<i64>) -> Self {
        PartitionLabel(parts)
    }

    pub fn zero(len: usize) -> Self {
        PartitionLabel(vec![0; len])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `l_1 + ... + l_{m-1} + |l_m|`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|p| p.unsigned_abs()).sum()
    }

    /// Number of nonzero entries (length of the first column).
    pub fn rows(&self) -> usize {
        self.0.iter().filter(|&&p| p != 0).count()
    }
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for PartitionLabel {
    fn from(parts: Vec<i64>) -> Self {
        PartitionLabel(parts)
    }
}

fn weakly_decreasing(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Whether `label` lies in `Lambda(g)`.
pub fn is_label(g: &GroupId, label: &PartitionLabel) -> bool {
    let p = label.parts();
    if p.len() != g.label_len() {
        return false;
    }
    match g.family {
        Family::O => {
            if !weakly_decreasing(p) || p.iter().any(|&x| x < 0) {
                return false;
            }
            let c1 = p.iter().filter(|&&x| x > 0).count();
            let c2 = p.iter().filter(|&&x| x > 1).count();
            c1 + c2 <= g.n
        }
        Family::Sp => weakly_decreasing(p) && p.iter().all(|&x| x >= 0),
        Family::SO => {
            let mut abs = p.to_vec();
            if let Some(last) = abs.last_mut() {
                *last = last.abs();
            }
            weakly_decreasing(&abs) && abs.iter().all(|&x| x >= 0)
        }
    }
}

// Partitions of `remaining` into at most `slots` parts bounded by `max`,
// emitted in descending lexicographic order.
fn push_partitions(
    remaining: i64,
    max: i64,
    slots: usize,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if remaining > max * slots as i64 {
        return;
    }
    let top = remaining.min(max);
    for part in (0..=top).rev() {
        cur.push(part);
        push_partitions(remaining - part, part, slots - 1, cur, out);
        cur.pop();
    }
}

/// `Lambda(g)_d` in descending lexicographic order.
///
/// For `SO(2m)` a label with nonzero last entry is followed immediately by its
/// sign-flipped partner.
pub fn enum_labels(g: &GroupId, d: u64) -> Result<Vec<PartitionLabel>> {
    g.check()?;
    let len = g.label_len();
    let mut raw = Vec::new();
    let d = d as i64;
    push_partitions(d, d, len, &mut Vec::with_capacity(len), &mut raw);
    let mut out = Vec::with_capacity(raw.len());
    for parts in raw {
        let label = PartitionLabel(parts);
        match g.family {
            Family::O => {
                if is_label(g, &label) {
                    out.push(label);
                }
            }
            Family::Sp => out.push(label),
            Family::SO => {
                let last = *label.0.last().expect("rank >= 1");
                let flipped = (last > 0).then(|| {
                    let mut p = label.0.clone();
                    *p.last_mut().unwrap() = -last;
                    PartitionLabel(p)
                });
                out.push(label);
                out.extend(flipped);
            }
        }
    }
    Ok(out)
}

// partitions_exact[k][j] = number of partitions of k into exactly j positive parts
fn partitions_exact(kmax: usize, jmax: usize) -> Vec<Vec<u128>> {
    let mut p = vec![vec![0u128; jmax + 1]; kmax + 1];
    p[0][0] = 1;
    for k in 1..=kmax {
        for j in 1..=jmax.min(k) {
            p[k][j] = p[k - 1][j - 1] + p[k - j][j];
        }
    }
    p
}

/// `|Lambda(g)_d|`, counted without enumerating.
pub fn label_count(g: &GroupId, d: u64) -> Result<u128> {
    g.check()?;
    let d = d as usize;
    let len = g.label_len();
    let p = partitions_exact(d, len.max(1));
    let count = match g.family {
        // c1 nonzero rows of which c2 exceed one: strip the first column to get
        // a partition of d - c1 into exactly c2 parts.
        Family::O => {
            let mut total = 0;
            for c1 in 0..=len.min(d) {
                for (c2, count) in p[d - c1].iter().enumerate().take(c1 + 1) {
                    if c1 + c2 <= g.n {
                        total += count;
                    }
                }
            }
            total
        }
        Family::Sp => (0..=len.min(d)).map(|j| p[d][j]).sum(),
        Family::SO => (0..=len.min(d))
            .map(|j| if j == len && d > 0 { 2 * p[d][j] } else { p[d][j] })
            .sum(),
    };
    Ok(count)
}

/// Reduces an `O(n)` label to at most `floor(n/2)` rows by passing to the
/// associated partition when needed, and drops the trailing zeros beyond the
/// rank.
pub fn orthogonal_reduced_label(n: usize, label: &PartitionLabel) -> Vec<i64> {
    let m = n / 2;
    let rows = label.rows();
    let keep = if rows > m { n - rows } else { rows };
    let mut out: Vec<i64> = label.parts()[..keep].to_vec();
    out.resize(m, 0);
    out
}

/// Number of irreducible `SO(2m)` summands of the `O(2m)`-module `V_label`.
pub fn epsilon(g: &GroupId, label: &PartitionLabel) -> Result<u32> {
    g.check()?;
    if g.family != Family::O || g.n % 2 == 1 {
        return Err(Error::UnsupportedGroup(format!(
            "epsilon needs O(n) with n even, got {g}"
        )));
    }
    if !is_label(g, label) {
        return Err(Error::LabelNotInGroup {
            label: label.to_string(),
            group: g.to_string(),
        });
    }
    let reduced = orthogonal_reduced_label(g.n, label);
    Ok(if reduced.last().copied().unwrap_or(0) > 0 { 2 } else { 1 })
}

/// Root systems of the classical Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    /// `so(2m+1)`
    B(usize),
    /// `sp(2m)`
    C(usize),
    /// `so(2m)`
    D(usize),
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        match *self {
            RootSystem::B(m) | RootSystem::C(m) | RootSystem::D(m) => m,
        }
    }

    fn is_dominant(&self, w: &[i64]) -> bool {
        match self {
            RootSystem::B(_) | RootSystem::C(_) => {
                weakly_decreasing(w) && w.iter().all(|&x| x >= 0)
            }
            RootSystem::D(m) => {
                let mut abs = w.to_vec();
                if *m > 0 {
                    abs[m - 1] = abs[m - 1].abs();
                }
                weakly_decreasing(&abs) && abs.iter().all(|&x| x >= 0)
            }
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystem::B(m) => write!(f, "B{m}"),
            RootSystem::C(m) => write!(f, "C{m}"),
            RootSystem::D(m) => write!(f, "D{m}"),
        }
    }
}

/// Weyl dimension formula: the product over positive roots `a` of
/// `<w + rho, a> / <rho, a>`.
///
/// Coordinates are doubled so that `rho` is integral for `B_m`; every factor
/// is homogeneous of degree one so the ratio is unchanged.
pub fn weyl_dim(rs: RootSystem, weight: &[i64]) -> Result<BigInt> {
    let m = rs.rank();
    if weight.len() != m || !rs.is_dominant(weight) {
        return Err(Error::NonDominantWeight(
            PartitionLabel(weight.to_vec()).to_string(),
            rs.to_string(),
        ));
    }
    let rho2: Vec<i64> = (0..m)
        .map(|i| {
            let i = i as i64;
            let m = m as i64;
            match rs {
                RootSystem::B(_) => 2 * m - 2 * i - 1,
                RootSystem::C(_) => 2 * (m - i),
                RootSystem::D(_) => 2 * (m - i - 1),
            }
        })
        .collect();
    let shifted: Vec<i64> = weight.iter().zip(&rho2).map(|(w, r)| 2 * w + r).collect();

    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= BigInt::from(shifted[i] - shifted[j]) * BigInt::from(shifted[i] + shifted[j]);
            den *= BigInt::from(rho2[i] - rho2[j]) * BigInt::from(rho2[i] + rho2[j]);
        }
        // short roots e_i (B) and long roots 2e_i (C)
        if matches!(rs, RootSystem::B(_) | RootSystem::C(_)) {
            num *= BigInt::from(shifted[i]);
            den *= BigInt::from(rho2[i]);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Weyl quotient not integral");
    Ok(q.abs())
}

/// Dimension of the irreducible representation labelled by `label`.
///
/// `O(n)` labels with more than `floor(n/2)` rows are replaced by their
/// associated partition. For `n = 2m` and a label with `m` nonzero rows the
/// `O(2m)`-module splits into two `SO(2m)`-modules of equal dimension. Values
/// for `O(n)` with `n > 4` rest only on the Weyl formula.
pub fn dim_irrep(g: &GroupId, label: &PartitionLabel) -> Result<BigInt> {
    g.check()?;
    if !is_label(g, label) {
        return Err(Error::LabelNotInGroup {
            label: label.to_string(),
            group: g.to_string(),
        });
    }
    let m = g.rank();
    match g.family {
        Family::Sp => weyl_dim(RootSystem::C(m), label.parts()),
        Family::SO => weyl_dim(RootSystem::D(m), label.parts()),
        Family::O => {
            let reduced = orthogonal_reduced_label(g.n, label);
            if g.n % 2 == 1 {
                weyl_dim(RootSystem::B(m), &reduced)
            } else {
                let base = weyl_dim(RootSystem::D(m), &reduced)?;
                if reduced[m - 1] > 0 {
                    Ok(base * 2)
                } else {
                    Ok(base)
                }
            }
        }
    }
}
