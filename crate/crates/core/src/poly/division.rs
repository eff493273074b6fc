use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::mpoly::MPoly;
use crate::poly::order::MonomialOrder;

/// Remainder of `f` on division by `divisors`.
///
/// The greatest remaining term is reduced by the first divisor (in list
/// order) whose leading monomial divides it; otherwise it moves to the
/// remainder. No monomial of the result is divisible by a leading monomial of
/// `divisors`. Zero divisors are ignored.
pub fn normal_form(f: &MPoly, divisors: &[MPoly], order: &MonomialOrder) -> MPoly {
    let leads: Vec<(Monomial, BigRational, &MPoly)> = divisors
        .iter()
        .filter_map(|d| {
            d.leading_term(order)
                .map(|(m, c)| (m.clone(), c.clone(), d))
        })
        .collect();
    let n = f.n();
    let mut rest: BTreeMap<Monomial, BigRational> =
        f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut rem = MPoly::zero(n);
    while let Some(lm) = rest.keys().max_by(|a, b| order.compare(a, b)).cloned() {
        let lc = rest.remove(&lm).expect("present");
        let hit = leads
            .iter()
            .find_map(|(m, c, d)| m.quotient_of(&lm).map(|quot| (quot, c, *d)));
        match hit {
            Some((quot, dc, d)) => {
                let factor = &lc / dc;
                // subtract factor * quot * d, skipping its (cancelled) leading term
                let lead = quot.mul(d.leading_monomial(order).expect("nonzero"));
                for (m, c) in d.terms() {
                    let mm = m.mul(&quot);
                    if mm == lead {
                        continue;
                    }
                    let delta = -(&factor * c);
                    match rest.entry(mm) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += delta;
                            if num_traits::Zero::is_zero(e.get()) {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => rem.add_term(lm, lc),
        }
    }
    rem
}

/// `lcm/LT(f) * f - lcm/LT(g) * g` for `lcm = lcm(LM f, LM g)`.
pub fn s_polynomial(f: &MPoly, g: &MPoly, order: &MonomialOrder) -> Result<MPoly> {
    if f.n() != g.n() {
        return Err(Error::GridMismatch(f.n(), g.n()));
    }
    let (fm, fc) = f.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let (gm, gc) = g.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let lcm = fm.lcm(gm);
    let fq = fm.quotient_of(&lcm).expect("lcm");
    let gq = gm.quotient_of(&lcm).expect("lcm");
    let a = f.mul_term(&fq, &fc.recip());
    let b = g.mul_term(&gq, &gc.recip());
    Ok(&a - &b)
}
