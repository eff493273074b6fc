//! Golden-file and property checks behind `cone verify`.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cone_core::cone::{
    cayley_orthogonal, evaluate, evaluate_gaussian, form_skew_from, infinitesimal_action, linear_rank,
    products_of_degree, uxu_candidates_o3beta, FormKind, FormMatrix, LieElement, PointMatrix, Side,
};
use cone_core::groebner::{leading_ideal, monomial_quotient_hilbert};
use cone_core::hilbert::{binomial, cone_dim, h_g, hilbert_series, koszul_dual_series, uxu_series};
use cone_core::matrix::QMatrix;
use cone_core::partitions::GroupId;
use cone_core::poly::{q, OrderKind};
use cone_core::series::RationalFunction;

use crate::commands::{self, first_negative, Format, Target, VarOrder};
use crate::schema::{ItemReport, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Module {
    Hilbert,
    Uxu,
    Koszul,
    Groebner,
    Cone,
}

impl Module {
    fn name(self) -> &'static str {
        match self {
            Module::Hilbert => "hilbert",
            Module::Uxu => "uxu",
            Module::Koszul => "koszul",
            Module::Groebner => "groebner",
            Module::Cone => "cone",
        }
    }
}

pub struct Ctx {
    pub golden: PathBuf,
    pub seed: u64,
}

type CheckFn = Box<dyn Fn(&Ctx) -> Result<(), String> + Send + Sync>;

struct Item {
    module: Module,
    name: String,
    file: Option<String>,
    check: CheckFn,
}

fn group(s: &str) -> GroupId {
    s.parse().expect("known group")
}

fn read(ctx: &Ctx, rel: &str) -> Result<String, String> {
    let path = ctx.golden.join(rel);
    fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn compare(got: &str, want: &str) -> Result<(), String> {
    if got == want {
        return Ok(());
    }
    let line = got
        .lines()
        .zip(want.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| got.lines().count().min(want.lines().count()));
    Err(format!("output differs from golden file at line {}", line + 1))
}

fn golden_item(module: Module, name: &str, file: &str, produce: fn() -> Result<String, String>) -> Item {
    let rel = file.to_string();
    Item {
        module,
        name: name.to_string(),
        file: Some(file.to_string()),
        check: Box::new(move |ctx| compare(&produce()?, &read(ctx, &rel)?)),
    }
}

fn plain(module: Module, name: &str, check: fn(&Ctx) -> Result<(), String>) -> Item {
    Item {
        module,
        name: name.to_string(),
        file: None,
        check: Box::new(check),
    }
}

fn series_text(sub: Module, g: &str) -> Result<String, String> {
    let t = Target::Group(group(g));
    let r = match sub {
        Module::Uxu => commands::uxu(t, 0, true, None, Format::Text),
        _ => commands::hilbert(t, 0, true, None, Format::Text),
    };
    r.map_err(|e| e.to_string())
}

fn groebner_text(t: Target) -> Result<String, String> {
    commands::groebner(t, OrderKind::DegRevLex, VarOrder::RowMajor, Format::Text).map_err(|e| e.to_string())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn spot_dimensions(_: &Ctx) -> Result<(), String> {
    let o4 = group("O4");
    let spots = [
        ("cone_dim(O4,2)", cone_dim(&o4, 2).map_err(err)?, 118),
        ("cone_dim(O4,4)", cone_dim(&o4, 4).map_err(err)?, 1825),
        ("h(O4,2)", h_g(&o4, 2).map_err(err)?, 117),
        ("h(O4,4)", h_g(&o4, 4).map_err(err)?, 1707),
    ];
    for (what, got, want) in spots {
        if got != BigInt::from(want) {
            return Err(format!("{what} = {got}, want {want}"));
        }
    }
    for d in (0..=10).step_by(2) {
        if cone_dim(&group("O3"), d).map_err(err)? != binomial(2 * d + 3, 3) {
            return Err(format!("cone_dim(O3,{d}) != C({},3)", 2 * d + 3));
        }
    }
    Ok(())
}

fn recursion(_: &Ctx) -> Result<(), String> {
    for g in ["O3", "O4", "SO4", "Sp4"] {
        let g = group(g);
        for d in 2..=30 {
            let lhs = cone_dim(&g, d).map_err(err)? - cone_dim(&g, d - 2).map_err(err)?;
            if lhs != h_g(&g, d).map_err(err)? {
                return Err(format!("{g} at d={d}"));
            }
        }
    }
    Ok(())
}

fn decomposition(_: &Ctx) -> Result<(), String> {
    let pieces = [
        RationalFunction::from_i64s(&[1, 3, 3, 1], 4, 0),
        RationalFunction::from_i64s(&[0, 2, 2], 3, 0),
        RationalFunction::from_i64s(&[0, 0, 1], 2, 0),
        RationalFunction::from_i64s(&[0, 0, 1], 1, 0),
    ];
    let sum = pieces
        .iter()
        .map(|p| p.expand(30))
        .reduce(|a, b| a.add(&b))
        .expect("nonempty");
    if sum != hilbert_series(&group("O3"), 30).map_err(err)? {
        return Err("four-term sum differs from the O(3) series".into());
    }
    Ok(())
}

fn koszul_golden(ctx: &Ctx) -> Result<(), String> {
    let want: Vec<BigInt> = read(ctx, "koszul/O3.txt")?
        .lines()
        .map(|l| l.trim().parse().map_err(|_| format!("bad line {l:?}")))
        .collect::<Result<_, _>>()?;
    let got = koszul_dual_series(&group("O3"), want.len().saturating_sub(1)).map_err(err)?;
    if got.coeffs() != want.as_slice() {
        return Err("output differs from golden file".into());
    }
    if first_negative(&got) != Some(9) {
        return Err("first negative coefficient is not at t^9".into());
    }
    Ok(())
}

fn koszul_nonnegative(_: &Ctx) -> Result<(), String> {
    for g in ["O4", "Sp4"] {
        let dual = koszul_dual_series(&group(g), 50).map_err(err)?;
        if let Some(d) = first_negative(&dual) {
            return Err(format!("{g}: negative coefficient at t^{d}"));
        }
    }
    Ok(())
}

fn certificates(_: &Ctx) -> Result<(), String> {
    for t in [Target::O3Beta, Target::Group(group("Sp4"))] {
        let (_, gb) = commands::basis(t, OrderKind::DegRevLex).map_err(err)?;
        let (_, gens) = commands::generator_set(t).map_err(err)?;
        if !gb.s_pairs_reduce_to_zero() {
            return Err(format!("{t}: an S-polynomial does not reduce to 0"));
        }
        if !gens.iter().all(|g| gb.contains(g)) {
            return Err(format!("{t}: a generator does not reduce to 0"));
        }
        if !gb.is_reduced() {
            return Err(format!("{t}: basis is not reduced"));
        }
    }
    Ok(())
}

fn two_routes(_: &Ctx) -> Result<(), String> {
    for t in [Target::O3Beta, Target::Group(group("Sp4"))] {
        let (n, gb) = commands::basis(t, OrderKind::DegRevLex).map_err(err)?;
        let staircase = monomial_quotient_hilbert(&leading_ideal(&gb), n * n, 20);
        if staircase != hilbert_series(&t.group(), 20).map_err(err)? {
            return Err(format!("{t}: staircase series differs"));
        }
    }
    Ok(())
}

fn quadratic_counts(_: &Ctx) -> Result<(), String> {
    for (g, want) in [("O3", 10usize), ("O4", 18), ("Sp4", 10)] {
        let g = group(g);
        let n = g.n as u64;
        let count = binomial(n * n + 1, 2) - cone_dim(&g, 2).map_err(err)?;
        let (_, gens) = commands::generator_set(Target::Group(g)).map_err(err)?;
        if count != BigInt::from(want) || gens.len() != want || linear_rank(&gens) != want {
            return Err(format!("{g}: count {count}, {} generators", gens.len()));
        }
    }
    Ok(())
}

fn invariance(_: &Ctx) -> Result<(), String> {
    let u = LieElement::e12_minus_e23();
    let cands = uxu_candidates_o3beta();
    for c in &cands {
        for side in [Side::Left, Side::Right] {
            if !infinitesimal_action(c, &u, side).map_err(err)?.is_zero() {
                return Err(format!("candidate not annihilated on the {side:?} side"));
            }
        }
    }
    let (_, gb) = commands::basis(Target::O3Beta, OrderKind::DegRevLex).map_err(err)?;
    let series = uxu_series(&group("O3"), 3).map_err(err)?;
    for d in 1..=3 {
        let prods = products_of_degree(&cands, d);
        let reduced: Vec<_> = prods.iter().map(|p| gb.reduce(p)).collect();
        if BigInt::from(prods.len()) != series.coeffs()[d as usize] || linear_rank(&reduced) != prods.len() {
            return Err(format!("degree {d} products do not match"));
        }
    }
    Ok(())
}

fn cayley_sample(rng: &mut ChaCha8Rng, b: &FormMatrix) -> PointMatrix {
    let n = b.n();
    loop {
        let mut a = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = q(rng.gen_range(-3..=3));
                match b.kind() {
                    FormKind::Symmetric if i != j => {
                        a.set(i, j, v.clone());
                        a.set(j, i, -v);
                    }
                    FormKind::Symmetric => {}
                    FormKind::Skew => {
                        a.set(i, j, v.clone());
                        a.set(j, i, v);
                    }
                }
            }
        }
        let s = form_skew_from(b, &a).expect("form-skew by construction");
        if let Ok(m) = cayley_orthogonal(&s, b) {
            let c = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=9).into());
            return m.scaled(&c);
        }
    }
}

fn scaled_group_element(m: &QMatrix, b: &FormMatrix) -> bool {
    let p = &(&m.transpose() * b.entries()) * m;
    let n = b.n();
    let (i, j) = (0..n * n)
        .map(|k| (k / n, k % n))
        .find(|&(i, j)| !b.entries().get(i, j).is_zero())
        .expect("invertible form");
    let lambda = p.get(i, j) / b.entries().get(i, j);
    p == b.entries().scale(&lambda)
}

fn membership(ctx: &Ctx) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let cases = [
        (Target::Group(group("O3")), FormMatrix::identity(3)),
        (Target::O3Beta, FormMatrix::beta(3)),
        (Target::Group(group("Sp4")), FormMatrix::standard_symplectic(4).map_err(err)?),
    ];
    for (t, b) in &cases {
        let (_, gens) = commands::generator_set(*t).map_err(err)?;
        for k in 0..200 {
            let pt = cayley_sample(&mut rng, b);
            if !gens.iter().all(|f| evaluate(f, &pt).is_ok_and(|v| v.is_zero())) {
                return Err(format!("{t}: sample {k} is not annihilated"));
            }
        }
        let n = b.n();
        let mut separated = 0;
        while separated < 50 {
            let mut m = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, q(rng.gen_range(-4..=4)));
                }
            }
            if m.det().map_err(err)?.is_zero() || scaled_group_element(&m, b) {
                continue;
            }
            let pt = PointMatrix(m);
            if gens.iter().all(|f| evaluate(f, &pt).is_ok_and(|v| v.is_zero())) {
                return Err(format!("{t}: a non-cone point is not separated"));
            }
            separated += 1;
        }
    }
    let re = QMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let im = QMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
    let (_, gens) = commands::generator_set(Target::Group(group("O3"))).map_err(err)?;
    for f in &gens {
        if !evaluate_gaussian(f, &re, &im).map_err(err)?.is_zero() {
            return Err("the complex example matrix is not annihilated".into());
        }
    }
    Ok(())
}

fn items() -> Vec<Item> {
    let mut items = Vec::new();
    for g in ["O3", "O4", "SO4", "Sp4"] {
        items.push(golden_item(
            Module::Hilbert,
            &format!("closed form of the {g} Hilbert series"),
            &format!("hilbert/{g}.txt"),
            match g {
                "O3" => || series_text(Module::Hilbert, "O3"),
                "O4" => || series_text(Module::Hilbert, "O4"),
                "SO4" => || series_text(Module::Hilbert, "SO4"),
                _ => || series_text(Module::Hilbert, "Sp4"),
            },
        ));
    }
    items.push(plain(Module::Hilbert, "spot dimensions", spot_dimensions));
    items.push(plain(Module::Hilbert, "recursion identity", recursion));
    items.push(plain(Module::Hilbert, "four-term decomposition", decomposition));
    for g in ["O3", "O4", "SO4", "Sp4"] {
        items.push(golden_item(
            Module::Uxu,
            &format!("closed form of the {g} U x U series"),
            &format!("uxu/{g}.txt"),
            match g {
                "O3" => || series_text(Module::Uxu, "O3"),
                "O4" => || series_text(Module::Uxu, "O4"),
                "SO4" => || series_text(Module::Uxu, "SO4"),
                _ => || series_text(Module::Uxu, "Sp4"),
            },
        ));
    }
    items.push(Item {
        module: Module::Koszul,
        name: "O3 Koszul dual coefficients".into(),
        file: Some("koszul/O3.txt".into()),
        check: Box::new(koszul_golden),
    });
    items.push(plain(Module::Koszul, "O4 and Sp4 nonnegative through t^50", koszul_nonnegative));
    items.push(golden_item(
        Module::Groebner,
        "O(3,beta) reduced basis",
        "groebner/o3beta_degrevlex.txt",
        || groebner_text(Target::O3Beta),
    ));
    items.push(golden_item(
        Module::Groebner,
        "O(3,beta) leading monomials",
        "groebner/o3beta_leading.txt",
        || {
            let (n, gb) = commands::basis(Target::O3Beta, OrderKind::DegRevLex).map_err(err)?;
            Ok(gb.leading_text(n))
        },
    ));
    items.push(golden_item(
        Module::Groebner,
        "Sp(4) reduced basis",
        "groebner/sp4_degrevlex.txt",
        || groebner_text(Target::Group(group("Sp4"))),
    ));
    items.push(plain(Module::Groebner, "S-pair certificates", certificates));
    items.push(plain(Module::Groebner, "staircase equals representation count", two_routes));
    items.push(plain(Module::Cone, "quadratic counts and ranks", quadratic_counts));
    items.push(plain(Module::Cone, "U x U candidates", invariance));
    items.push(plain(Module::Cone, "membership and separation", membership));
    items
}

pub fn run(golden: &Path, seed: u64, only: Option<Module>) -> VerifyReport {
    let ctx = Ctx {
        golden: golden.to_path_buf(),
        seed,
    };
    let selected: Vec<(usize, Item)> = items()
        .into_iter()
        .enumerate()
        .filter(|(_, it)| only.is_none_or(|m| m == it.module))
        .collect();
    let reports: Vec<ItemReport> = selected
        .par_iter()
        .map(|(i, it)| {
            let outcome = (it.check)(&ctx);
            ItemReport {
                id: i + 1,
                module: it.module.name().to_string(),
                name: it.name.clone(),
                file: it.file.as_ref().map(|f| ctx.golden.join(f).display().to_string()),
                passed: outcome.is_ok(),
                detail: outcome.err(),
            }
        })
        .collect();
    VerifyReport {
        seed,
        passed: reports.iter().all(|r| r.passed),
        items: reports,
    }
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for it in &report.items {
        out.push_str(&format!(
            "{} {:>2} {:<8} {}",
            if it.passed { "PASS" } else { "FAIL" },
            it.id,
            it.module,
            it.name
        ));
        if let Some(f) = &it.file {
            out.push_str(&format!(" [{f}]"));
        }
        if let Some(d) = &it.detail {
            out.push_str(&format!(": {d}"));
        }
        out.push('\n');
    }
    let failed = report.items.iter().filter(|r| !r.passed).count();
    out.push_str(&format!(
        "{} passed, {failed} failed\n",
        report.items.len() - failed
    ));
    out
}
