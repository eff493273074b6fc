//! Buchberger's algorithm, leading-term ideals and the Hilbert series of a
//! monomial quotient.
//!
//! The reduced Groebner basis of an ideal is unique for a fixed order, so the
//! pair-selection strategy and the degree of parallelism only affect speed.
//! Pairs are taken by the normal strategy (smallest lcm degree, then smallest
//! lcm). Pairs with coprime leading monomials are dropped on creation, and the
//! chain criterion drops a pair `(i, j)` when some `k` has its leading monomial
//! dividing `lcm(i, j)` and both `(i, k)` and `(j, k)` are already settled.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{
    format_monomial, format_poly, monomials_of_degree, normal_form, parse_poly, s_polynomial, Monomial, MonomialOrder,
    MPoly, OrderKind, VarGrid,
};
use crate::series::IntSeries;

/// Reduced Groebner basis: monic, auto-reduced, ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<MPoly>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[MPoly] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn reduce(&self, f: &MPoly) -> MPoly {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Elements with integer coefficients of content one, as printed.
    pub fn integral_elements(&self) -> Vec<MPoly> {
        self.elements.iter().map(|g| g.primitive(&self.order)).collect()
    }

    /// Every S-polynomial of a pair of elements reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let n = self.elements.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect::<Vec<_>>()
            .par_iter()
            .all(|&(i, j)| {
                let s = s_polynomial(&self.elements[i], &self.elements[j], &self.order)
                    .expect("nonzero elements");
                self.reduce(&s).is_zero()
            })
    }

    /// No term of any element is divisible by another element's leading monomial,
    /// and every element is monic.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            let monic = g
                .leading_term(&self.order)
                .is_some_and(|(_, c)| c.is_one());
            monic
                && g.terms().all(|(m, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(k, lm)| k == i || !lm.divides(m))
                })
        })
    }

    fn header(&self, n: usize) -> String {
        let vars = if self.order.is_row_major() {
            "row-major".to_string()
        } else {
            format!("{:?}", self.order.priority())
        };
        format!("# order={} vars={} n={}\n", self.order.kind(), vars, n)
    }

    /// Basis file: a header line followed by one polynomial per line, largest
    /// leading monomial first.
    pub fn to_text(&self, n: usize) -> String {
        let mut out = self.header(n);
        out.push_str(&self.to_string());
        out
    }

    /// Header line followed by the leading monomials, smallest first.
    pub fn leading_text(&self, n: usize) -> String {
        let grid = VarGrid::new(n);
        let mut out = self.header(n);
        for m in self.leading_monomials() {
            out.push_str(&format_monomial(&m, grid, &self.order));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.integral_elements().iter().rev() {
            writeln!(f, "{}", format_poly(g, &self.order))?;
        }
        Ok(())
    }
}

/// Header and polynomials of a basis file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisFile {
    pub order: MonomialOrder,
    pub n: usize,
    pub polys: Vec<MPoly>,
}

/// Reads the format written by [`GroebnerBasis::to_text`]; only row-major
/// variable order is understood.
pub fn parse_basis_file(text: &str) -> Result<BasisFile> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty basis file".into()))?;
    let header = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse("missing header".into()))?;
    let mut kind = None;
    let mut n = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("order", v)) => kind = Some(v.parse::<OrderKind>()?),
            Some(("vars", "row-major")) => {}
            Some(("vars", v)) => return Err(Error::Parse(format!("unsupported vars={v}"))),
            Some(("n", v)) => {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad n={v}")))?,
                )
            }
            _ => return Err(Error::Parse(format!("bad header field {field}"))),
        }
    }
    let kind = kind.ok_or_else(|| Error::Parse("header lacks order".into()))?;
    let n = n.ok_or_else(|| Error::Parse("header lacks n".into()))?;
    let polys = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_poly(l, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisFile {
        order: MonomialOrder::row_major(kind, n * n),
        n,
        polys,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Reduce the S-polynomials of one degree concurrently.
    pub parallel: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { parallel: true }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    order: &'a MonomialOrder,
    basis: Vec<MPoly>,
    leads: Vec<Monomial>,
    pairs: Vec<Pair>,
    live: HashSet<(usize, usize)>,
}

impl State<'_> {
    fn insert(&mut self, g: MPoly) {
        let g = g.primitive(self.order);
        let lm = g.leading_monomial(self.order).expect("nonzero").clone();
        let new = self.basis.len();
        for (i, lead) in self.leads.iter().enumerate() {
            if lead.is_coprime(&lm) {
                continue;
            }
            self.pairs.push(Pair {
                i,
                j: new,
                lcm: lead.lcm(&lm),
            });
            self.live.insert((i, new));
        }
        self.basis.push(g);
        self.leads.push(lm);
    }

    fn chain_criterion(&self, p: &Pair) -> bool {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        (0..self.basis.len()).any(|k| {
            k != p.i
                && k != p.j
                && self.leads[k].divides(&p.lcm)
                && !self.live.contains(&key(p.i, k))
                && !self.live.contains(&key(p.j, k))
        })
    }

    // Removes and returns the pairs of smallest lcm degree, sorted by lcm.
    fn take_batch(&mut self) -> Vec<Pair> {
        let Some(deg) = self.pairs.iter().map(|p| p.lcm.degree()).min() else {
            return Vec::new();
        };
        let (mut batch, rest): (Vec<_>, Vec<_>) =
            self.pairs.drain(..).partition(|p| p.lcm.degree() == deg);
        self.pairs = rest;
        let order = self.order;
        batch.sort_by(|a, b| {
            order
                .compare(&a.lcm, &b.lcm)
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        });
        batch
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MPoly], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, BuchbergerOptions::default())
}

pub fn buchberger_with(
    gens: &[MPoly],
    order: &MonomialOrder,
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Ok(GroebnerBasis {
            elements: Vec::new(),
            order: order.clone(),
        });
    };
    let n = first.n();
    for g in gens {
        if g.n() != n {
            return Err(Error::GridMismatch(n, g.n()));
        }
    }
    if order.nvars() != n * n {
        return Err(Error::SizeMismatch {
            expected: n * n,
            got: order.nvars(),
        });
    }

    let mut st = State {
        order,
        basis: Vec::new(),
        leads: Vec::new(),
        pairs: Vec::new(),
        live: HashSet::new(),
    };
    for g in gens {
        let r = normal_form(g, &st.basis, order);
        if !r.is_zero() {
            st.insert(r);
        }
    }

    loop {
        let batch = st.take_batch();
        if batch.is_empty() {
            break;
        }
        let mut todo = Vec::new();
        for p in batch {
            st.live.remove(&(p.i, p.j));
            if !st.chain_criterion(&p) {
                todo.push(p);
            }
        }
        let reduce = |p: &Pair| {
            let s = s_polynomial(&st.basis[p.i], &st.basis[p.j], order).expect("nonzero");
            normal_form(&s, &st.basis, order)
        };
        let reduced: Vec<MPoly> = if opts.parallel {
            todo.par_iter().map(reduce).collect()
        } else {
            todo.iter().map(reduce).collect()
        };
        for r in reduced {
            if r.is_zero() {
                continue;
            }
            // the basis may have grown since r was computed
            let r = normal_form(&r, &st.basis, order);
            if !r.is_zero() {
                st.insert(r);
            }
        }
    }

    Ok(GroebnerBasis {
        elements: reduce_basis(st.basis, order),
        order: order.clone(),
    })
}

fn reduce_basis(basis: Vec<MPoly>, order: &MonomialOrder) -> Vec<MPoly> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero").clone())
        .collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|k| {
                k != i && leads[k].divides(&leads[i]) && (leads[k] != leads[i] || k < i)
            })
        })
        .collect();
    let minimal: Vec<MPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<MPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            normal_form(&minimal[i], &others, order).monic(order)
        })
        .collect();
    reduced.sort_by(|a, b| {
        order.compare(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    reduced
}

/// Monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops generators divisible by others; keeps first occurrences in order.
    pub fn new(gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            gens: minimalize(gens),
        }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(k, h)| {
            k != i && h.divides(g) && (h != g || k < i)
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

pub fn leading_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.leading_monomials())
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

/// Numerator `K(t)` of `H(S/I) = K(t) / (1-t)^nvars`.
///
/// Splits on a pivot variable `x`: `K(I) = K(I + <x>) + t K(I : x)`, until the
/// generators have pairwise disjoint supports, where `K = prod (1 - t^deg)`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<BigInt> {
    numerator_rec(ideal.gens.clone())
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<BigInt> {
    let gens = minimalize(gens);
    let nv = gens.first().map_or(0, Monomial::nvars);
    let mut counts = vec![0usize; nv];
    for g in &gens {
        for (v, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    // most frequent shared variable; disjoint supports otherwise
    let pivot = (0..nv)
        .filter(|&v| counts[v] > 1)
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)));
    let Some(v) = pivot else {
        let mut k = vec![BigInt::one()];
        for g in &gens {
            let mut f = vec![BigInt::zero(); g.degree() as usize + 1];
            f[0] = BigInt::one();
            f[g.degree() as usize] -= BigInt::one();
            k = poly_mul(&k, &f);
        }
        return k;
    };
    let x = Monomial::var(nv, v, 1);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(v) == 0).cloned().collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon_var(v)).collect();
    let mut k = numerator_rec(plus);
    let kc = numerator_rec(colon);
    poly_add_shifted(&mut k, &kc, 1);
    k
}

/// Number of standard monomials of each degree `0..=order` in `nvars` variables.
pub fn monomial_quotient_hilbert(ideal: &MonomialIdeal, nvars: usize, order: usize) -> IntSeries {
    if let Some(g) = ideal.gens.first() {
        assert_eq!(g.nvars(), nvars, "ideal lives in a different ring");
    }
    let k = hilbert_numerator(ideal);
    IntSeries::from_poly(&k, order).div_denominator(nvars as u32, 0)
}

/// Degree-`d` monomials outside the leading ideal, in descending order.
pub fn standard_monomials(gb: &GroebnerBasis, nvars: usize, d: u32) -> Vec<Monomial> {
    let lead = leading_ideal(gb);
    let mut out: Vec<Monomial> = monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !lead.contains(m))
        .collect();
    out.sort_by(|a, b| gb.order.compare(b, a));
    out
}
