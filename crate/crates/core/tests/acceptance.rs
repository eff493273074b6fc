//! Acceptance criteria, one line of output per item.

use std::collections::BTreeSet;
use std::fs;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cone_core::cone::{
    cayley_orthogonal, evaluate, evaluate_gaussian, form_skew_from, infinitesimal_action, linear_rank,
    orthogonal_generators, products_of_degree, symplectic_generators, uxu_candidates_o3beta, FormMatrix,
    LieElement, PointMatrix, Side,
};
use cone_core::groebner::{
    buchberger, leading_ideal, monomial_quotient_hilbert, standard_monomials, GroebnerBasis,
};
use cone_core::hilbert::{cone_dim, h_g, hilbert_series, uxu_series};
use cone_core::matrix::QMatrix;
use cone_core::partitions::GroupId;
use cone_core::poly::{normal_form, q, s_polynomial, MPoly, Monomial, MonomialOrder, VarGrid};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn group(s: &str) -> GroupId {
    s.parse().unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn binom(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

// coefficients 0..=order of num / ((1-t)^a (1-t^2)^b)
fn expand(num: &[i64], a: u32, b: u32, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    for (i, &v) in num.iter().enumerate().filter(|(i, _)| *i <= order) {
        c[i] = BigInt::from(v);
    }
    for _ in 0..a {
        for i in 1..=order {
            let prev = c[i - 1].clone();
            c[i] += prev;
        }
    }
    for _ in 0..b {
        for i in 2..=order {
            let prev = c[i - 2].clone();
            c[i] += prev;
        }
    }
    c
}

// 1 / s for s[0] = 1
fn invert(s: &[BigInt]) -> Vec<BigInt> {
    let mut inv = vec![BigInt::from(1)];
    for k in 1..s.len() {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            acc -= &s[i] * &inv[k - i];
        }
        inv.push(acc);
    }
    inv
}

fn same(what: &str, got: &[BigInt], want: &[BigInt]) -> Check {
    if got == want {
        Ok(())
    } else {
        let first = got.iter().zip(want).position(|(a, b)| a != b);
        Err(format!("{what}: first difference at index {first:?} (lengths {} vs {})", got.len(), want.len()))
    }
}

fn golden(rel: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden").join(rel);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn o3beta_basis() -> (Vec<MPoly>, GroebnerBasis) {
    let gens = orthogonal_generators(3, &FormMatrix::beta(3)).unwrap();
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(9)).unwrap();
    (gens, gb)
}

fn sp4_basis() -> (Vec<MPoly>, GroebnerBasis) {
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let gens = symplectic_generators(4, &j).unwrap();
    let gb = buchberger(&gens, &MonomialOrder::degrevlex(16)).unwrap();
    (gens, gb)
}

fn closed_forms() -> Check {
    let cases: [(&str, &[i64], u32); 4] = [
        ("O3", &[1, 5, 5, -6, 4, -1], 4),
        ("O4", &[1, 9, 27, 19, -30, 34, -35, 21, -7, 1], 7),
        ("Sp4", &[1, 5, 5, 1], 11),
        ("SO4", &[1, 9, 9, 1], 7),
    ];
    for (g, num, a) in cases {
        let h = hilbert_series(&group(g), 30).unwrap();
        if h.coeffs().len() != 31 {
            return Err(format!("{g}: expected 31 coefficients"));
        }
        same(g, h.coeffs(), &expand(num, a, 0, 30))?;
    }
    Ok(())
}

fn spot_dimensions() -> Check {
    let o4 = group("O4");
    let o3 = group("O3");
    let spots = [
        (cone_dim(&o4, 2).unwrap(), 118),
        (cone_dim(&o4, 4).unwrap(), 1825),
        (h_g(&o4, 2).unwrap(), 117),
        (h_g(&o4, 4).unwrap(), 1707),
    ];
    for (i, (got, want)) in spots.iter().enumerate() {
        if *got != BigInt::from(*want) {
            return Err(format!("spot {i}: {got} != {want}"));
        }
    }
    for d in (0..=10).step_by(2) {
        let want = binom(2 * d + 3, 3);
        let got = cone_dim(&o3, d).unwrap();
        if got != want {
            return Err(format!("cone_dim(O3,{d}) = {got}, want {want}"));
        }
    }
    Ok(())
}

fn koszul() -> Check {
    let alternate = |s: &[BigInt]| -> Vec<BigInt> {
        s.iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect()
    };
    let h = hilbert_series(&group("O3"), 9).unwrap();
    let inv = invert(&alternate(h.coeffs()));
    same(
        "O3",
        &inv,
        &big(&[1, 9, 46, 183, 628, 1912, 5129, 11539, 17883, -7330]),
    )?;
    if inv.iter().position(|c| c.is_negative()) != Some(9) {
        return Err("first negative index is not 9".into());
    }
    for g in ["O4", "Sp4"] {
        let h = hilbert_series(&group(g), 50).unwrap();
        let inv = invert(&alternate(h.coeffs()));
        if let Some(i) = inv.iter().position(|c| c.is_negative()) {
            return Err(format!("{g}: negative coefficient at t^{i}"));
        }
    }
    let file: Vec<BigInt> = golden("koszul/O3.txt")
        .lines()
        .map(|l| l.trim().parse().unwrap())
        .collect();
    same("golden koszul", &inv, &file)
}

fn uxu() -> Check {
    let cases: [(&str, &[i64], u32, u32); 4] = [
        ("O3", &[1, 0, 1, 1, -1], 1, 1),
        ("O4", &[1, 0, 3, 1, 1, -2, -1, 1], 1, 2),
        ("SO4", &[1, 0, 1], 1, 2),
        ("Sp4", &[1], 1, 2),
    ];
    for (g, num, a, b) in cases {
        let s = uxu_series(&group(g), 30).unwrap();
        same(g, s.coeffs(), &expand(num, a, b, 30))?;
    }
    Ok(())
}

fn groebner_golden() -> Check {
    let (_, gb) = o3beta_basis();
    if gb.len() != 15 {
        return Err(format!("O(3,beta) basis has {} elements", gb.len()));
    }
    if gb.to_text(3) != golden("groebner/o3beta_degrevlex.txt") {
        return Err("golden/groebner/o3beta_degrevlex.txt differs".into());
    }
    if gb.leading_text(3) != golden("groebner/o3beta_leading.txt") {
        return Err("golden/groebner/o3beta_leading.txt differs".into());
    }
    let (_, gb) = sp4_basis();
    let degs: Vec<u32> = gb.elements().iter().map(|g| g.total_degree().unwrap()).collect();
    if degs.iter().filter(|&&d| d == 2).count() != 10 || degs.iter().filter(|&&d| d == 3).count() != 2 {
        return Err(format!("Sp(4) basis degrees {degs:?}"));
    }
    if gb.to_text(4) != golden("groebner/sp4_degrevlex.txt") {
        return Err("golden/groebner/sp4_degrevlex.txt differs".into());
    }
    Ok(())
}

fn two_routes() -> Check {
    for (g, gb, nv) in [("O3", o3beta_basis().1, 9), ("Sp4", sp4_basis().1, 16)] {
        let staircase = monomial_quotient_hilbert(&leading_ideal(&gb), nv, 20);
        let rep = hilbert_series(&group(g), 20).unwrap();
        same(g, staircase.coeffs(), rep.coeffs())?;
    }
    Ok(())
}

fn quadratic_counts() -> Check {
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let cases = [
        ("O3", 3u64, 10usize, orthogonal_generators(3, &FormMatrix::identity(3)).unwrap()),
        ("O4", 4, 18, orthogonal_generators(4, &FormMatrix::identity(4)).unwrap()),
        ("Sp4", 4, 10, symplectic_generators(4, &j).unwrap()),
    ];
    for (g, n, want, gens) in cases {
        let count = binom(n * n + 1, 2) - cone_dim(&group(g), 2).unwrap();
        if count != BigInt::from(want) {
            return Err(format!("{g}: C(n^2+1,2) - cone_dim = {count}, want {want}"));
        }
        if gens.len() != want || linear_rank(&gens) != want {
            return Err(format!("{g}: {} generators of rank {}", gens.len(), linear_rank(&gens)));
        }
    }
    let beta = orthogonal_generators(3, &FormMatrix::beta(3)).unwrap();
    if beta.len() != 10 || linear_rank(&beta) != 10 {
        return Err("O(3,beta) generators are not 10 independent quadrics".into());
    }
    Ok(())
}

fn recursion() -> Check {
    for g in ["O3", "O4", "SO4", "Sp4"] {
        let g = group(g);
        for d in 2..=30 {
            let lhs = cone_dim(&g, d).unwrap() - cone_dim(&g, d - 2).unwrap();
            if lhs != h_g(&g, d).unwrap() {
                return Err(format!("{g} d={d}"));
            }
        }
    }
    Ok(())
}

fn invariance() -> Check {
    let u = LieElement::e12_minus_e23();
    let cands = uxu_candidates_o3beta();
    for (i, c) in cands.iter().enumerate() {
        for side in [Side::Left, Side::Right] {
            if !infinitesimal_action(c, &u, side).unwrap().is_zero() {
                return Err(format!("candidate {i} not annihilated on {side:?}"));
            }
        }
    }
    let (_, gb) = o3beta_basis();
    let series = uxu_series(&group("O3"), 3).unwrap();
    for d in 1..=3u32 {
        let prods = products_of_degree(&cands, d);
        let want = &series.coeffs()[d as usize];
        if BigInt::from(prods.len()) != *want {
            return Err(format!("degree {d}: {} products, U x U coefficient {want}", prods.len()));
        }
        let reduced: Vec<MPoly> = prods.iter().map(|p| gb.reduce(p)).collect();
        if linear_rank(&reduced) != prods.len() {
            return Err(format!("degree {d}: products dependent modulo the ideal"));
        }
    }
    Ok(())
}

fn random_point_on_cone(rng: &mut ChaCha8Rng, b: &FormMatrix) -> PointMatrix {
    let n = b.n();
    loop {
        let mut a = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = q(rng.gen_range(-3..=3));
                match b.kind() {
                    cone_core::cone::FormKind::Symmetric => {
                        if i != j {
                            a.set(i, j, v.clone());
                            a.set(j, i, -v);
                        }
                    }
                    cone_core::cone::FormKind::Skew => {
                        a.set(i, j, v.clone());
                        a.set(j, i, v);
                    }
                }
            }
        }
        let s = form_skew_from(b, &a).unwrap();
        if let Ok(m) = cayley_orthogonal(&s, b) {
            let c = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=9).into());
            return m.scaled(&c);
        }
    }
}

// invertible M lies on the cone exactly when M^T B M is a multiple of B
fn is_scaled_group_element(m: &QMatrix, b: &FormMatrix) -> bool {
    let p = &(&m.transpose() * b.entries()) * m;
    let (i, j) = (0..b.n())
        .flat_map(|i| (0..b.n()).map(move |j| (i, j)))
        .find(|&(i, j)| !b.entries().get(i, j).is_zero())
        .unwrap();
    let lambda = p.get(i, j) / b.entries().get(i, j);
    p == b.entries().scale(&lambda)
}

fn membership() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let j = FormMatrix::standard_symplectic(4).unwrap();
    let forms = [
        ("I", FormMatrix::identity(3), orthogonal_generators(3, &FormMatrix::identity(3)).unwrap()),
        ("beta", FormMatrix::beta(3), orthogonal_generators(3, &FormMatrix::beta(3)).unwrap()),
        ("J", j.clone(), symplectic_generators(4, &j).unwrap()),
    ];
    for (name, b, gens) in &forms {
        for k in 0..200 {
            let pt = random_point_on_cone(&mut rng, b);
            if let Some(f) = gens.iter().find(|f| !evaluate(f, &pt).unwrap().is_zero()) {
                return Err(format!("{name} sample {k}: {f:?} does not vanish"));
            }
        }
    }
    let re = QMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let im = QMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
    for f in &forms[0].2 {
        if !evaluate_gaussian(f, &re, &im).unwrap().is_zero() {
            return Err("example matrix A is not annihilated".into());
        }
    }
    for (name, b, gens) in &forms {
        let n = b.n();
        let mut separated = 0;
        while separated < 50 {
            let mut m = QMatrix::zeros(n, n);
            for i in 0..n {
                for k in 0..n {
                    m.set(i, k, q(rng.gen_range(-4..=4)));
                }
            }
            if m.det().unwrap().is_zero() || is_scaled_group_element(&m, b) {
                continue;
            }
            let pt = PointMatrix(m);
            if gens.iter().all(|f| evaluate(f, &pt).unwrap().is_zero()) {
                return Err(format!("{name}: non-cone point {pt:?} not separated"));
            }
            separated += 1;
        }
    }
    Ok(())
}

fn certificates() -> Check {
    for (name, (gens, gb)) in [("O(3,beta)", o3beta_basis()), ("Sp(4)", sp4_basis())] {
        let els = gb.elements();
        for i in 0..els.len() {
            for k in i + 1..els.len() {
                let s = s_polynomial(&els[i], &els[k], gb.order()).unwrap();
                if !normal_form(&s, els, gb.order()).is_zero() {
                    return Err(format!("{name}: S({i},{k}) does not reduce to 0"));
                }
            }
        }
        if let Some(i) = gens.iter().position(|g| !gb.contains(g)) {
            return Err(format!("{name}: generator {i} does not reduce to 0"));
        }
    }
    Ok(())
}

fn decomposition() -> Check {
    let pieces: [(&[i64], u32); 4] = [(&[1, 3, 3, 1], 4), (&[0, 2, 2], 3), (&[0, 0, 1], 2), (&[0, 0, 1], 1)];
    let mut sum = vec![BigInt::zero(); 31];
    for (num, a) in pieces {
        for (s, c) in sum.iter_mut().zip(expand(num, a, 0, 30)) {
            *s += c;
        }
    }
    same("four-term sum", hilbert_series(&group("O3"), 30).unwrap().coeffs(), &sum)?;

    // the 14 families: prefix monomial times all monomials in a variable set
    let g = VarGrid::new(3);
    let v = |i: usize, j: usize| g.index(i, j);
    let corners = vec![v(1, 1), v(1, 3), v(3, 1), v(3, 3)];
    let families: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![], corners.clone()),
        (vec![v(1, 2)], corners.clone()),
        (vec![v(2, 2)], corners.clone()),
        (vec![v(3, 2)], corners.clone()),
        (vec![v(1, 2), v(3, 2)], corners.clone()),
        (vec![v(1, 2), v(2, 2)], corners.clone()),
        (vec![v(2, 2), v(3, 2)], corners.clone()),
        (vec![v(1, 2), v(2, 2), v(3, 2)], corners.clone()),
        (vec![v(2, 1)], vec![v(1, 1), v(3, 1), v(3, 3)]),
        (vec![v(2, 3)], vec![v(1, 1), v(1, 3), v(3, 3)]),
        (vec![v(1, 2), v(2, 3)], vec![v(1, 1), v(1, 3), v(3, 3)]),
        // x13*x21 is a leading monomial, so this family cannot use x13
        (vec![v(2, 1), v(3, 2)], vec![v(1, 1), v(3, 1), v(3, 3)]),
        (vec![v(1, 2), v(2, 1)], vec![v(1, 1), v(3, 3)]),
        (vec![v(2, 3), v(3, 2)], vec![v(3, 3)]),
    ];
    let mut family_sum = vec![BigInt::zero(); 31];
    for (prefix, vars) in &families {
        let mut num = vec![0i64; prefix.len() + 1];
        num[prefix.len()] = 1;
        for (s, c) in family_sum.iter_mut().zip(expand(&num, vars.len() as u32, 0, 30)) {
            *s += c;
        }
    }
    let (_, gb) = o3beta_basis();
    same(
        "14 families",
        monomial_quotient_hilbert(&leading_ideal(&gb), 9, 30).coeffs(),
        &family_sum,
    )?;

    // and the families list exactly the standard monomials in low degree
    for d in 0..=5u32 {
        let mut listed = BTreeSet::new();
        for (prefix, vars) in &families {
            let Some(rest) = d.checked_sub(prefix.len() as u32) else {
                continue;
            };
            for tail in cone_core::poly::monomials_of_degree(vars.len(), rest) {
                let mut e = vec![0u32; 9];
                for &p in prefix {
                    e[p] += 1;
                }
                for (k, &var) in vars.iter().enumerate() {
                    e[var] += tail.exp(k);
                }
                if !listed.insert(Monomial::from_exps(e)) {
                    return Err(format!("families overlap in degree {d}"));
                }
            }
        }
        let standard: BTreeSet<Monomial> = standard_monomials(&gb, 9, d).into_iter().collect();
        if listed != standard {
            return Err(format!("families differ from standard monomials in degree {d}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let items: [Criterion; 12] = [
        ("Hilbert series closed forms", closed_forms),
        ("spot dimensions", spot_dimensions),
        ("Koszul obstruction", koszul),
        ("U x U series", uxu),
        ("Groebner golden files", groebner_golden),
        ("two-route equivalence", two_routes),
        ("quadratic counts and ranks", quadratic_counts),
        ("recursion identity", recursion),
        ("invariance suite", invariance),
        ("membership", membership),
        ("Buchberger certificates", certificates),
        ("decomposition identity", decomposition),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in items.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", items.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
