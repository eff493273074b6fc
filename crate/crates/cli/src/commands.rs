use std::fmt;
use std::str::FromStr;

use cone_core::cone::{orthogonal_generators, symplectic_generators, FormMatrix};
use cone_core::groebner::{buchberger, GroebnerBasis};
use cone_core::hilbert::{cone_dim, h_g, hilbert_series, koszul_dual_series, uxu_series};
use cone_core::partitions::{dim_irrep, enum_labels, Family, GroupId};
use cone_core::poly::{format_monomial, format_poly, MPoly, MonomialOrder, OrderKind, VarGrid};
use cone_core::series::{
    numerator_degree_bound, reconstruct_rational, IntSeries, RationalFunction, GUARD_BAND,
};
use num_traits::Signed;

use crate::schema::{
    ClosedForm, DimsOutput, KoszulOutput, LabelDim, LabelsOutput, Obstruction, PolysOutput, SeriesOutput,
};
use crate::CliError;

/// A group, or `O(3)` written in the antidiagonal form for ideal work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Group(GroupId),
    O3Beta,
}

impl Target {
    pub fn group(&self) -> GroupId {
        match self {
            Target::Group(g) => *g,
            Target::O3Beta => GroupId::orthogonal(3),
        }
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("O3beta") {
            return Ok(Target::O3Beta);
        }
        s.parse::<GroupId>().map(Target::Group).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Group(g) => write!(f, "{g}"),
            Target::O3Beta => f.write_str("O(3,beta)"),
        }
    }
}

/// `a` or `a,b` for `(1-t)^a (1-t^2)^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Denominator {
    pub a: u32,
    pub b: u32,
}

impl FromStr for Denominator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected a or a,b, got {s:?}");
        let (a, b) = match s.split_once(',') {
            Some((a, b)) => (a, b),
            None => (s, "0"),
        };
        Ok(Denominator {
            a: a.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VarOrder {
    RowMajor,
}

pub fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Krull dimension `dim G + 1` for the cone.
pub fn default_hilbert_denominator(g: &GroupId) -> Denominator {
    Denominator {
        a: g.dimension() as u32 + 1,
        b: 0,
    }
}

pub fn default_uxu_denominator(g: &GroupId) -> Denominator {
    Denominator {
        a: 1,
        b: g.rank() as u32,
    }
}

// Enough terms for reconstruction regardless of the requested length.
fn closed_form(
    series: impl Fn(usize) -> cone_core::Result<IntSeries>,
    den: Denominator,
) -> Result<RationalFunction, CliError> {
    let order = numerator_degree_bound(den.a, den.b) + GUARD_BAND;
    Ok(reconstruct_rational(&series(order)?, den.a, den.b)?)
}

pub fn closed_form_text(rf: &RationalFunction) -> String {
    format!(
        "numerator: {}\ndenominator: {}\n",
        rf.numerator_string(),
        rf.denominator_string()
    )
}

fn series_command(
    target: Target,
    terms: usize,
    want_closed: bool,
    den: Denominator,
    format: Format,
    series: impl Fn(usize) -> cone_core::Result<IntSeries>,
) -> Result<String, CliError> {
    let closed = if want_closed {
        Some(closed_form(&series, den)?)
    } else {
        None
    };
    match format {
        Format::Text => Ok(match &closed {
            Some(rf) => closed_form_text(rf),
            None => format!("{}\n", series(terms)?),
        }),
        Format::Json => Ok(json(&SeriesOutput {
            group: target.group().to_string(),
            series: series(terms)?.to_wire(),
            closed_form: closed.map(|rf| ClosedForm {
                wire: rf.to_wire(),
                numerator_text: rf.numerator_string(),
                denominator_text: rf.denominator_string(),
            }),
        })),
    }
}

pub fn hilbert(
    target: Target,
    terms: usize,
    closed: bool,
    den: Option<Denominator>,
    format: Format,
) -> Result<String, CliError> {
    let g = target.group();
    let den = den.unwrap_or_else(|| default_hilbert_denominator(&g));
    series_command(target, terms, closed, den, format, |n| hilbert_series(&g, n))
}

pub fn uxu(
    target: Target,
    terms: usize,
    closed: bool,
    den: Option<Denominator>,
    format: Format,
) -> Result<String, CliError> {
    let g = target.group();
    let den = den.unwrap_or_else(|| default_uxu_denominator(&g));
    series_command(target, terms, closed, den, format, |n| uxu_series(&g, n))
}

pub fn koszul(target: Target, max: usize, format: Format) -> Result<String, CliError> {
    let g = target.group();
    let dual = koszul_dual_series(&g, max)?;
    let hit = dual.first_negative(max);
    match format {
        Format::Text => Ok(match hit {
            Some((d, c)) => format!("obstruction at t^{d}, coefficient {c}\n"),
            None => format!("no obstruction through t^{max}\n"),
        }),
        Format::Json => Ok(json(&KoszulOutput {
            group: g.to_string(),
            max,
            coefficients: dual.coeffs().iter().map(|c| c.to_string()).collect(),
            obstruction: hit.map(|(degree, c)| Obstruction {
                degree,
                coefficient: c.to_string(),
            }),
        })),
    }
}

pub fn dims(target: Target, degree: u64, format: Format) -> Result<String, CliError> {
    let g = target.group();
    let labels = enum_labels(&g, degree)?;
    let rows = labels
        .iter()
        .map(|l| Ok((l.clone(), dim_irrep(&g, l)?)))
        .collect::<cone_core::Result<Vec<_>>>()?;
    let h = h_g(&g, degree)?;
    let c = cone_dim(&g, degree)?;
    match format {
        Format::Text => {
            let mut out = format!("h({degree}) = {h}\ncone_dim({degree}) = {c}\n");
            for (l, d) in rows {
                out.push_str(&format!("{l} {d}\n"));
            }
            Ok(out)
        }
        Format::Json => Ok(json(&DimsOutput {
            group: g.to_string(),
            degree,
            h: h.to_string(),
            cone_dim: c.to_string(),
            labels: rows
                .into_iter()
                .map(|(l, d)| LabelDim {
                    label: l.parts().to_vec(),
                    dim: d.to_string(),
                })
                .collect(),
        })),
    }
}

pub fn labels(target: Target, degree: u64, format: Format) -> Result<String, CliError> {
    let g = target.group();
    let labels = enum_labels(&g, degree)?;
    match format {
        Format::Text => Ok(labels.iter().map(|l| format!("{l}\n")).collect()),
        Format::Json => Ok(json(&LabelsOutput {
            group: g.to_string(),
            degree,
            labels: labels.iter().map(|l| l.parts().to_vec()).collect(),
        })),
    }
}

/// Quadratic generators of the cone's vanishing ideal.
pub fn generator_set(target: Target) -> Result<(usize, Vec<MPoly>), CliError> {
    match target {
        Target::O3Beta => Ok((3, orthogonal_generators(3, &FormMatrix::beta(3))?)),
        Target::Group(g) => match g.family {
            Family::O => Ok((g.n, orthogonal_generators(g.n, &FormMatrix::identity(g.n))?)),
            Family::Sp => {
                let j = FormMatrix::standard_symplectic(g.n)?;
                Ok((g.n, symplectic_generators(g.n, &j)?))
            }
            Family::SO => Err(CliError::Usage(format!(
                "no ideal generators for {g}; use O{} or Sp{}",
                g.n, g.n
            ))),
        },
    }
}

pub fn generators(target: Target, format: Format) -> Result<String, CliError> {
    let (n, gens) = generator_set(target)?;
    let order = MonomialOrder::degrevlex(n * n);
    let lines: Vec<String> = gens.iter().map(|p| format_poly(p, &order)).collect();
    match format {
        Format::Text => Ok(lines.iter().map(|l| format!("{l}\n")).collect()),
        Format::Json => Ok(json(&PolysOutput {
            group: target.to_string(),
            order: order.kind().to_string(),
            n,
            polynomials: lines,
            leading_monomials: None,
        })),
    }
}

pub fn basis(target: Target, kind: OrderKind) -> Result<(usize, GroebnerBasis), CliError> {
    let (n, gens) = generator_set(target)?;
    let order = MonomialOrder::row_major(kind, n * n);
    Ok((n, buchberger(&gens, &order)?))
}

pub fn groebner(target: Target, kind: OrderKind, _vars: VarOrder, format: Format) -> Result<String, CliError> {
    let (n, gb) = basis(target, kind)?;
    match format {
        Format::Text => Ok(gb.to_text(n)),
        Format::Json => {
            let grid = VarGrid::new(n);
            let mut polys: Vec<String> = gb
                .integral_elements()
                .iter()
                .map(|p| format_poly(p, gb.order()))
                .collect();
            polys.reverse();
            Ok(json(&PolysOutput {
                group: target.to_string(),
                order: kind.to_string(),
                n,
                polynomials: polys,
                leading_monomials: Some(
                    gb.leading_monomials()
                        .iter()
                        .map(|m| format_monomial(m, grid, gb.order()))
                        .collect(),
                ),
            }))
        }
    }
}

/// First index with a negative coefficient, if any.
pub fn first_negative(s: &IntSeries) -> Option<usize> {
    s.coeffs().iter().position(|c| c.is_negative())
}
