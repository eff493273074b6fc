use std::fs;
use std::path::PathBuf;

use cone_core::cone::{canonical_span, orthogonal_generators, symplectic_generators, FormMatrix};
use cone_core::groebner::{
    buchberger, buchberger_with, leading_ideal, monomial_quotient_hilbert, parse_basis_file,
    standard_monomials, BuchbergerOptions,
};
use cone_core::poly::{MPoly, MonomialOrder};

fn golden(rel: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden").join(rel);
    fs::read_to_string(path).unwrap()
}

#[test]
fn o3beta_basis_matches_golden() {
    let gens = orthogonal_generators(3, &FormMatrix::beta(3)).unwrap();
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(9)).unwrap();
    assert_eq!(gb.to_text(3), golden("groebner/o3beta_degrevlex.txt"));
    assert_eq!(gb.leading_text(3), golden("groebner/o3beta_leading.txt"));
}

#[test]
fn sp4_basis_matches_golden() {
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let gens = symplectic_generators(4, &j).unwrap();
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(16)).unwrap();
    assert_eq!(gb.to_text(4), golden("groebner/sp4_degrevlex.txt"));
}

#[test]
fn schedule_does_not_change_output() {
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let gens = symplectic_generators(4, &j).unwrap();
    let o = MonomialOrder::degrevlex(16);
    let par = buchberger_with(&gens, &o, BuchbergerOptions { parallel: true }).unwrap();
    let seq = buchberger_with(&gens, &o, BuchbergerOptions { parallel: false }).unwrap();
    assert_eq!(par.to_text(4), seq.to_text(4));
    let mut rev = gens.clone();
    rev.reverse();
    assert_eq!(buchberger(&rev, &o).unwrap().to_text(4), seq.to_text(4));
}

fn golden_quadratics(rel: &str) -> Vec<MPoly> {
    let file = parse_basis_file(&golden(rel)).unwrap();
    file.polys
        .into_iter()
        .filter(|p| p.total_degree() == Some(2))
        .collect()
}

#[test]
fn generator_spans_match_golden_quadratics() {
    let o = MonomialOrder::degrevlex(16);
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let span = canonical_span(&symplectic_generators(4, &j).unwrap(), &o);
    assert_eq!(span, golden_quadratics("groebner/sp4_degrevlex.txt"));

    let o = MonomialOrder::degrevlex(9);
    let span = canonical_span(&orthogonal_generators(3, &FormMatrix::beta(3)).unwrap(), &o);
    assert_eq!(span, golden_quadratics("groebner/o3beta_degrevlex.txt"));
}

#[test]
fn standard_monomial_counts() {
    let gens = orthogonal_generators(3, &FormMatrix::beta(3)).unwrap();
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(9)).unwrap();
    let lead = leading_ideal(&gb);
    assert_eq!(lead.gens().len(), 15);
    let series = monomial_quotient_hilbert(&lead, 9, 6);
    for d in 0..=6u32 {
        let std = standard_monomials(&gb, 9, d);
        assert_eq!(series.coeffs()[d as usize], std.len().into());
    }
    assert_eq!(standard_monomials(&gb, 9, 1).len(), 9);
    assert_eq!(standard_monomials(&gb, 9, 2).len(), 35);
}
