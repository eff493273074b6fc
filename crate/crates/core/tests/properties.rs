use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use cone_core::cone::{
    cayley_orthogonal, evaluate, form_skew_from, infinitesimal_action, orthogonal_generators,
    symplectic_generators, FormMatrix, LieElement, Side,
};
use cone_core::groebner::{monomial_quotient_hilbert, MonomialIdeal};
use cone_core::hilbert::{cone_dim, h_g};
use cone_core::matrix::QMatrix;
use cone_core::partitions::{dim_irrep, enum_labels, label_count, GroupId, PartitionLabel};
use cone_core::poly::{monomials_of_degree, normal_form, q, MPoly, Monomial, MonomialOrder, OrderKind};
use cone_core::series::{numerator_degree_bound, reconstruct_rational, IntSeries, RationalFunction};

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::from_exps)
}

fn order(nvars: usize) -> impl Strategy<Value = MonomialOrder> {
    let kind = prop_oneof![
        Just(OrderKind::DegRevLex),
        Just(OrderKind::DegLex),
        Just(OrderKind::Lex)
    ];
    let perm = Just((0..nvars).collect::<Vec<_>>()).prop_shuffle();
    (kind, perm).prop_map(|(k, p)| MonomialOrder::new(k, p).unwrap())
}

// polynomials on a 2x2 grid
fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((monomial(4, 2), -4i64..=4), 0..5)
        .prop_map(|terms| MPoly::from_terms(2, terms.into_iter().map(|(m, c)| (m, q(c)))))
}

fn point(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), len)
        .prop_map(|v| v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect())
}

fn skew3() -> impl Strategy<Value = QMatrix> {
    (-3i64..=3, -3i64..=3, -3i64..=3)
        .prop_map(|(a, b, c)| QMatrix::from_i64(&[&[0, a, b], &[-a, 0, c], &[-b, -c, 0]]))
}

fn sym4() -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, 10).prop_map(|v| {
        let mut m = QMatrix::zeros(4, 4);
        let mut k = 0;
        for i in 0..4 {
            for j in i..4 {
                m.set(i, j, q(v[k]));
                m.set(j, i, q(v[k]));
                k += 1;
            }
        }
        m
    })
}

fn groups() -> Vec<GroupId> {
    ["O3", "O4", "O5", "SO4", "SO6", "Sp4", "Sp6"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_is_total(o in order(4), a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3)) {
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        if o.compare(&a, &b) != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
        }
        // multiplicative
        prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), o.compare(&a, &b));
        prop_assert_ne!(o.compare(&a.mul(&c), &a), Ordering::Less);
    }

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &MPoly::one(2), f.clone());
    }

    #[test]
    fn product_agrees_with_pointwise(f in poly(), g in poly(), p in point(4)) {
        let fg = (&f * &g).evaluate(&p).unwrap();
        prop_assert_eq!(fg, f.evaluate(&p).unwrap() * g.evaluate(&p).unwrap());
        let sum = (&f + &g).evaluate(&p).unwrap();
        prop_assert_eq!(sum, f.evaluate(&p).unwrap() + g.evaluate(&p).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(f in poly(), divs in prop::collection::vec(poly(), 1..4), o in order(4)) {
        let r = normal_form(&f, &divs, &o);
        prop_assert_eq!(normal_form(&r, &divs, &o), r.clone());
        for (m, _) in r.terms() {
            for d in divs.iter().filter(|d| !d.is_zero()) {
                prop_assert!(!d.leading_monomial(&o).unwrap().divides(m));
            }
        }
    }

    #[test]
    fn series_inverse(tail in prop::collection::vec(-9i64..=9, 0..15), neg in any::<bool>()) {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        let s = IntSeries::from_i64s(&c);
        let prod = s.mul(&s.inverse().unwrap());
        prop_assert_eq!(prod, IntSeries::one(s.order()));
    }

    #[test]
    fn rational_round_trip(num in prop::collection::vec(-20i64..=20, 1..6), a in 0u32..5, b in 0u32..3) {
        let r = RationalFunction::from_i64s(&num, a, b);
        let order = numerator_degree_bound(a, b) + 2 + 3;
        let back = reconstruct_rational(&r.expand(order), a, b).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn recursion_identity(d in 2u64..=30, k in 0usize..7) {
        let g = &groups()[k];
        let lhs = cone_dim(g, d).unwrap() - cone_dim(g, d - 2).unwrap();
        prop_assert_eq!(lhs, h_g(g, d).unwrap());
    }

    #[test]
    fn cayley_points_lie_on_cone(s in skew3(), c in (1i64..=9, 1i64..=9), sym in sym4()) {
        let c = BigRational::new(c.0.into(), c.1.into());
        for b in [FormMatrix::identity(3), FormMatrix::beta(3)] {
            let gens = orthogonal_generators(3, &b).unwrap();
            let s = form_skew_from(&b, &s).unwrap();
            if let Ok(m) = cayley_orthogonal(&s, &b) {
                prop_assert!(b.preserved_by(&m.0));
                let pt = m.scaled(&c);
                for f in &gens {
                    prop_assert!(evaluate(f, &pt).unwrap().is_zero());
                }
            }
        }
        let j = FormMatrix::standard_symplectic(4).unwrap();
        let s = form_skew_from(&j, &sym).unwrap();
        if let Ok(m) = cayley_orthogonal(&s, &j) {
            prop_assert!(j.preserved_by(&m.0));
            for f in symplectic_generators(4, &j).unwrap() {
                prop_assert!(evaluate(&f, &m.scaled(&c)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn generators_scale_quadratically(v in prop::collection::vec(-4i64..=4, 9), c in 1i64..=7) {
        let m = cone_core::cone::PointMatrix(QMatrix::from_i64(&[&v[0..3], &v[3..6], &v[6..9]]));
        let c = q(c);
        for f in orthogonal_generators(3, &FormMatrix::beta(3)).unwrap() {
            let base = evaluate(&f, &m).unwrap();
            prop_assert_eq!(evaluate(&f, &m.scaled(&c)).unwrap(), base * &c * &c);
        }
    }

    #[test]
    fn left_and_right_actions_commute(
        terms in prop::collection::vec((monomial(9, 2), -3i64..=3), 1..5),
        u in prop::collection::vec(-2i64..=2, 9),
        w in prop::collection::vec(-2i64..=2, 9),
    ) {
        let f = MPoly::from_terms(3, terms.into_iter().map(|(m, c)| (m, q(c))));
        let u = LieElement(QMatrix::from_i64(&[&u[0..3], &u[3..6], &u[6..9]]));
        let w = LieElement(QMatrix::from_i64(&[&w[0..3], &w[3..6], &w[6..9]]));
        let lr = infinitesimal_action(&infinitesimal_action(&f, &u, Side::Left).unwrap(), &w, Side::Right).unwrap();
        let rl = infinitesimal_action(&infinitesimal_action(&f, &w, Side::Right).unwrap(), &u, Side::Left).unwrap();
        prop_assert_eq!(lr, rl);
    }

    #[test]
    fn staircase_matches_enumeration(gens in prop::collection::vec(monomial(4, 3), 0..5)) {
        let gens: Vec<Monomial> = gens.into_iter().filter(|m| !m.is_one()).collect();
        let ideal = MonomialIdeal::new(gens);
        let series = monomial_quotient_hilbert(&ideal, 4, 8);
        for d in 0..=8u32 {
            let count = monomials_of_degree(4, d).iter().filter(|m| !ideal.contains(m)).count();
            prop_assert_eq!(&series.coeffs()[d as usize], &BigInt::from(count));
        }
    }
}

#[test]
fn label_count_matches_enumeration() {
    for g in groups() {
        for d in 0..=30 {
            let listed = enum_labels(&g, d).unwrap().len() as u128;
            assert_eq!(label_count(&g, d).unwrap(), listed, "{g} d={d}");
        }
    }
}

#[test]
fn even_orthogonal_restricts_to_special_orthogonal() {
    for (o, so) in [("O4", "SO4"), ("O6", "SO6")] {
        let o: GroupId = o.parse().unwrap();
        let so: GroupId = so.parse().unwrap();
        let m = so.rank();
        for d in 0..=12 {
            for lab in enum_labels(&o, d).unwrap() {
                let reduced = cone_core::partitions::orthogonal_reduced_label(o.n, &lab);
                let plus = dim_irrep(&so, &PartitionLabel::new(reduced.clone())).unwrap();
                let total = if reduced[m - 1] > 0 {
                    let mut minus = reduced.clone();
                    minus[m - 1] = -minus[m - 1];
                    let minus = dim_irrep(&so, &PartitionLabel::new(minus)).unwrap();
                    assert_eq!(plus, minus);
                    plus + minus
                } else {
                    plus
                };
                assert_eq!(dim_irrep(&o, &lab).unwrap(), total, "{lab}");
            }
        }
    }
}
