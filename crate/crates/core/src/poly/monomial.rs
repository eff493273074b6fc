use std::fmt;

/// Matrix of variables `x_{ij}`, `1 <= i, j <= n`, flattened row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarGrid {
    pub n: usize,
}

impl VarGrid {
    pub fn new(n: usize) -> Self {
        VarGrid { n }
    }

    pub fn nvars(&self) -> usize {
        self.n * self.n
    }

    /// Flat index of `x_{ij}` (1-based `i`, `j`).
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        (i - 1) * self.n + (j - 1)
    }

    /// Inverse of [`VarGrid::index`].
    pub fn position(&self, idx: usize) -> (usize, usize) {
        (idx / self.n + 1, idx % self.n + 1)
    }

    /// `x12` for `n <= 9`, `x1_12` beyond.
    pub fn name(&self, idx: usize) -> String {
        let (i, j) = self.position(idx);
        if self.n <= 9 {
            format!("x{i}{j}")
        } else {
            format!("x{i}_{j}")
        }
    }
}

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, idx: usize, pow: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = pow;
        Monomial { exps, degree: pow }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Lowers the exponent of `idx` by one if positive.
    pub fn colon_var(&self, idx: usize) -> Monomial {
        let mut exps = self.exps.clone();
        if exps[idx] > 0 {
            exps[idx] -= 1;
        }
        Monomial::from_exps(exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

/// All monomials of degree `d` in `nvars` variables, in no particular order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(Monomial::from_exps(cur.clone()));
            cur[idx] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[idx] = e;
            rec(idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}
