//! JSON shapes of the command outputs. Big integers are decimal strings.

use cone_core::series::{RationalWire, SeriesWire};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    #[serde(flatten)]
    pub wire: RationalWire,
    pub numerator_text: String,
    pub denominator_text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub group: String,
    pub series: SeriesWire,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_form: Option<ClosedForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub degree: usize,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulOutput {
    pub group: String,
    pub max: usize,
    pub coefficients: Vec<String>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDim {
    pub label: Vec<i64>,
    pub dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsOutput {
    pub group: String,
    pub degree: u64,
    pub h: String,
    pub cone_dim: String,
    pub labels: Vec<LabelDim>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelsOutput {
    pub group: String,
    pub degree: u64,
    pub labels: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolysOutput {
    pub group: String,
    pub order: String,
    pub n: usize,
    pub polynomials: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub leading_monomials: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemReport {
    pub id: usize,
    pub module: String,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub file: Option<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub items: Vec<ItemReport>,
}
