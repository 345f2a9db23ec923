use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{MatrixJson, ScalarJson};
use crate::qlinalg::{parse_rational, GaussianRational as G};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Ok,
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub status: ReportStatus,
    pub body: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub index: i64,
    pub dim: usize,
    pub basis: Vec<Vec<ScalarJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceJson {
    pub p: i64,
    pub q: i64,
    pub dim: usize,
    pub basis: Vec<Vec<ScalarJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringJson {
    pub base_weight: i64,
    pub length: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualJson {
    pub tangent_dim: usize,
    pub generators: usize,
    pub killed: usize,
    pub dependent: bool,
    pub pattern: Option<Vec<Vec<bool>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Theorem7PieceJson {
    pub i: i64,
    pub j: i64,
    pub level: usize,
    pub degree: i64,
    pub weight: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct E1CellJson {
    pub a: i64,
    pub b: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditJson {
    pub level: usize,
    pub r: i64,
    pub i_values: Vec<i64>,
    pub b_values: Vec<i64>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumJson {
    pub b: Vec<String>,
    pub dim: usize,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterJson {
    pub name: String,
    pub value: ScalarJson,
    pub orbit_invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ReportBody {
    Weight {
        center: i64,
        steps: Vec<StepJson>,
        graded: Vec<(i64, usize)>,
    },
    Deligne {
        pieces: Vec<PieceJson>,
        r_split: bool,
    },
    Rsplit {
        delta: MatrixJson,
        hodge: Vec<StepJson>,
        pieces: Vec<PieceJson>,
    },
    Lmhs {
        failure: Option<String>,
        weight_graded: Vec<(i64, usize)>,
        hodge_numbers: Vec<(i64, i64, usize)>,
        cone_weight_independent: Option<bool>,
    },
    LimitPeriod {
        interior: bool,
        f_infinity: Vec<StepJson>,
        split_formula_agrees: bool,
        invariants: Vec<(i64, i64, usize)>,
        lie_pieces: Vec<(i64, i64, usize)>,
        kernel: usize,
        image: usize,
        cokernel: usize,
        stabilizer_matches: bool,
        tangent_stabilizer_rank: usize,
        tangent_hodge_count: usize,
        residual: ResidualJson,
        invariants_constant_on_cone: Option<bool>,
    },
    NStrings {
        strings: Vec<StringJson>,
        graded: Vec<(i64, usize)>,
    },
    StrataValidate {
        square: Option<String>,
        level: Option<usize>,
        degree: Option<i64>,
        residual: Option<MatrixJson>,
    },
    Surface {
        c1sq: i64,
        c2sq: i64,
        composite: MatrixJson,
        is_complex: bool,
    },
    E1 {
        i: i64,
        cells: Vec<E1CellJson>,
        audit: Vec<AuditJson>,
    },
    Theorem7 {
        m: i64,
        admission: String,
        pieces: Vec<Theorem7PieceJson>,
        graded: Vec<(i64, usize)>,
        strings: Vec<StringJson>,
        total_complex_agrees: bool,
        n_isomorphisms: bool,
    },
    DeformStrata {
        smoothable: bool,
        independent: bool,
        exact: Option<bool>,
        strata: Vec<StratumJson>,
    },
    DeformCone {
        shape: String,
        generators: Option<Vec<Vec<ScalarJson>>>,
        image: Option<Vec<Vec<ScalarJson>>>,
    },
    ClassifyP2 {
        case: String,
        free: Option<String>,
        locked: Vec<String>,
        excluded_by_smoothability: bool,
    },
    Genus3 {
        parameters: Vec<ParameterJson>,
        lmhs_passed: bool,
        strings: Vec<StringJson>,
        residual: ResidualJson,
    },
    Genus2 {
        case: String,
        lmhs_passed: bool,
        strings: Vec<StringJson>,
        pattern: Option<Vec<Vec<bool>>>,
        expected_pattern: Vec<Vec<bool>>,
    },
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(o) if o.len() == 2 && o.contains_key("re") && o.contains_key("im") => {
            let part = |k: &str| o[k].as_str().and_then(|t| parse_rational(t).ok());
            Some(G::new(part("re")?, part("im")?).to_string())
        }
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar_text(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match inline(val) {
                    Some(s) if s.len() <= 100 => out.push_str(&format!("{pad}{k}: {s}\n")),
                    _ => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

/// Indented `key: value` rendering of a report.
pub fn render_text(report: &Report) -> String {
    let status = serde_json::to_value(report.status).expect("status serializes");
    let mut out = format!("command: {}\nstatus: {}\n", report.command, status.as_str().unwrap_or_default());
    render(&serde_json::to_value(&report.body).expect("report serializes"), 0, &mut out);
    out
}
