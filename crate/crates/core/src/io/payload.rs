use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    matrix_from_json, matrix_to_json, scalar_from_json, scalar_to_json, subspace_from_json, subspace_to_json,
    vector_from_json, IoError, MatrixJson, ScalarJson,
};
use crate::deform::DeformationData;
use crate::examples::{
    elliptic_orbit, genus2_orbit, genus3_orbit, p2_case_i, p2_case_ii, p2_case_iii, Genus2Case, Genus3Params,
};
use crate::hodge::{HodgeFiltration, MixedHodgeStructure, PolarizationForm, WeightFiltration};
use crate::monodromy::{NilpotentEndomorphism, NilpotentOrbitData};
use crate::qlinalg::GaussianRational as G;
use crate::strata::{
    nodal_curve_strata, surface_double_curve, CohomologySpace, NodalCurve, StrataComplexData, StratumSpaces,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Mhs,
    Orbit,
    Strata,
    Deform,
    Example,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub kind: ProblemKind,
    pub payload: Value,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
}

type Spans = BTreeMap<i64, Vec<Vec<ScalarJson>>>;

/// `W` defaults to the trivial filtration centered at `center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MhsPayload {
    pub ambient_dim: usize,
    pub center: i64,
    #[serde(rename = "F")]
    pub f: Spans,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Spans>,
    #[serde(rename = "Q", default, skip_serializing_if = "Option::is_none")]
    pub q: Option<MatrixJson>,
}

/// `cone` selects `N = Σ c_i N_i`; it defaults to the barycenter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitPayload {
    pub ambient_dim: usize,
    pub center: i64,
    #[serde(rename = "F")]
    pub f: Spans,
    #[serde(rename = "Q")]
    pub q: MatrixJson,
    #[serde(rename = "N")]
    pub n: Vec<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<Vec<ScalarJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataSpaceJson {
    pub level: usize,
    pub degree: i64,
    pub dim: usize,
    /// `[p, q, h^{p,q}]` triples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hodge: Option<Vec<(i64, i64, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataMapJson {
    pub level: usize,
    pub degree: i64,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataPayload {
    pub n: usize,
    pub spaces: Vec<StrataSpaceJson>,
    #[serde(default)]
    pub rest: Vec<StrataMapJson>,
    #[serde(default)]
    pub gysin: Vec<StrataMapJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformPayload {
    pub ext_dim: usize,
    pub components: Vec<String>,
    pub localize: MatrixJson,
    #[serde(default)]
    pub delta: Option<MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus3ParamsJson {
    pub a11: ScalarJson,
    pub a12: ScalarJson,
    pub a22: ScalarJson,
    pub b1: ScalarJson,
    pub b2: ScalarJson,
    pub c: ScalarJson,
}

/// Built-in fixtures addressed by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fixture", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ExamplePayload {
    Genus3 {
        #[serde(default)]
        params: Option<Genus3ParamsJson>,
    },
    Genus2 {
        case: String,
    },
    Elliptic {
        a: ScalarJson,
    },
    NodalCurve {
        genera: Vec<usize>,
        nodes: Vec<(usize, usize)>,
    },
    Surface {
        c1sq: i64,
        c2sq: i64,
    },
    P2 {
        case: String,
    },
}

/// A parsed problem.
#[derive(Clone, Debug)]
pub enum Problem {
    Mhs(MixedHodgeStructure),
    Orbit { orbit: NilpotentOrbitData, cone: Vec<G> },
    Strata(StrataComplexData),
    Deform(DeformationData),
}

fn schema<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T, IoError> {
    serde_json::from_value(v.clone()).map_err(|e| IoError::Schema(e.to_string()))
}

fn hodge_from_spans(ambient: usize, spans: &Spans) -> Result<HodgeFiltration, IoError> {
    let steps = spans
        .iter()
        .map(|(&p, vs)| Ok((p, subspace_from_json(vs, ambient)?)))
        .collect::<Result<BTreeMap<_, _>, IoError>>()?;
    Ok(HodgeFiltration::new(ambient, steps)?)
}

fn spans_from_steps<'a>(steps: impl IntoIterator<Item = (&'a i64, &'a crate::qlinalg::Subspace)>) -> Spans {
    steps.into_iter().map(|(&k, s)| (k, subspace_to_json(s))).collect()
}

fn square(m: &MatrixJson, n: usize) -> Result<crate::qlinalg::Matrix, IoError> {
    matrix_from_json(m, n, n)
}

pub fn parse_mhs(p: &MhsPayload) -> Result<MixedHodgeStructure, IoError> {
    let n = p.ambient_dim;
    let f = hodge_from_spans(n, &p.f)?;
    let w = match &p.w {
        None => WeightFiltration::trivial(n, p.center),
        Some(spans) => {
            let steps = spans
                .iter()
                .map(|(&k, vs)| Ok((k, subspace_from_json(vs, n)?)))
                .collect::<Result<BTreeMap<_, _>, IoError>>()?;
            WeightFiltration::new(n, p.center, steps)?
        }
    };
    let q = p.q.as_ref().map(|q| Ok::<_, IoError>(PolarizationForm::new(square(q, n)?, p.center)?)).transpose()?;
    Ok(MixedHodgeStructure::new(w, f, q)?)
}

pub fn parse_orbit(p: &OrbitPayload) -> Result<(NilpotentOrbitData, Vec<G>), IoError> {
    let n = p.ambient_dim;
    let f = hodge_from_spans(n, &p.f)?;
    let q = PolarizationForm::new(square(&p.q, n)?, p.center)?;
    let gens =
        p.n.iter().map(|m| Ok(NilpotentEndomorphism::new(square(m, n)?)?)).collect::<Result<Vec<_>, IoError>>()?;
    let cone = match &p.cone {
        Some(c) => vector_from_json(c)?,
        None => vec![G::one(); gens.len()],
    };
    Ok((NilpotentOrbitData::new(f, gens, p.center, q)?, cone))
}

pub fn parse_strata(p: &StrataPayload) -> Result<StrataComplexData, IoError> {
    let mut levels: BTreeMap<usize, BTreeMap<i64, CohomologySpace>> = BTreeMap::new();
    for s in &p.spaces {
        let space = match &s.hodge {
            None => CohomologySpace::new(s.dim),
            Some(h) => {
                let space = CohomologySpace::with_hodge(h.iter().map(|&(a, b, d)| ((a, b), d)).collect());
                if space.dim != s.dim {
                    return Err(IoError::Schema(format!(
                        "Hodge numbers of level {} degree {} do not sum to {}",
                        s.level, s.degree, s.dim
                    )));
                }
                space
            }
        };
        if levels.entry(s.level).or_default().insert(s.degree, space).is_some() {
            return Err(IoError::Schema(format!("duplicate space at level {} degree {}", s.level, s.degree)));
        }
    }
    let spaces = StratumSpaces::new(p.n, levels)?;
    let maps = |list: &[StrataMapJson], target: &dyn Fn(usize, i64) -> usize| {
        list.iter()
            .map(|m| {
                let mat = matrix_from_json(&m.matrix, target(m.level, m.degree), spaces.dim(m.level, m.degree))?;
                Ok(((m.level, m.degree), mat))
            })
            .collect::<Result<BTreeMap<_, _>, IoError>>()
    };
    let rest = maps(&p.rest, &|k, q| spaces.dim(k + 1, q))?;
    let gysin = maps(&p.gysin, &|k, q| if k >= 2 { spaces.dim(k - 1, q + 2) } else { 0 })?;
    Ok(StrataComplexData::new(spaces, rest, gysin)?)
}

pub fn parse_deform(p: &DeformPayload) -> Result<DeformationData, IoError> {
    let a = p.components.len();
    let localize = matrix_from_json(&p.localize, a, p.ext_dim)?;
    let delta = p.delta.as_ref().map(|d| matrix_from_json(d, d.len(), a)).transpose()?;
    Ok(DeformationData::new(p.ext_dim, p.components.clone(), localize, delta)?)
}

pub fn parse_example(p: &ExamplePayload) -> Result<Problem, IoError> {
    let bad_case = |c: &str| IoError::Schema(format!("unknown case {c:?}"));
    Ok(match p {
        ExamplePayload::Genus3 { params } => {
            let params = match params {
                None => Genus3Params::sample(),
                Some(j) => Genus3Params {
                    a11: scalar_from_json(&j.a11)?,
                    a12: scalar_from_json(&j.a12)?,
                    a22: scalar_from_json(&j.a22)?,
                    b1: scalar_from_json(&j.b1)?,
                    b2: scalar_from_json(&j.b2)?,
                    c: scalar_from_json(&j.c)?,
                },
            };
            let orbit = genus3_orbit(&params)?;
            Problem::Orbit { cone: vec![G::one(); 2], orbit }
        }
        ExamplePayload::Genus2 { case } => {
            let case = match case.as_str() {
                "i" => Genus2Case::I,
                "ii" => Genus2Case::II,
                c => return Err(bad_case(c)),
            };
            let orbit = genus2_orbit(case).orbit;
            Problem::Orbit { cone: vec![G::one(); orbit.generators().len()], orbit }
        }
        ExamplePayload::Elliptic { a } => {
            Problem::Orbit { orbit: elliptic_orbit(scalar_from_json(a)?), cone: vec![G::one()] }
        }
        ExamplePayload::NodalCurve { genera, nodes } => {
            Problem::Strata(nodal_curve_strata(&NodalCurve { genera: genera.clone(), nodes: nodes.clone() })?)
        }
        ExamplePayload::Surface { c1sq, c2sq } => Problem::Strata(surface_double_curve(*c1sq, *c2sq)),
        ExamplePayload::P2 { case } => Problem::Deform(match case.as_str() {
            "i" => p2_case_i(),
            "ii" => p2_case_ii(),
            "iii" => p2_case_iii(),
            c => return Err(bad_case(c)),
        }),
    })
}

/// Parses a problem file; unknown fields anywhere are rejected.
pub fn parse_problem(text: &str) -> Result<(Problem, ProblemFile), IoError> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    let problem = match file.kind {
        ProblemKind::Mhs => Problem::Mhs(parse_mhs(&schema(&file.payload)?)?),
        ProblemKind::Orbit => {
            let (orbit, cone) = parse_orbit(&schema(&file.payload)?)?;
            Problem::Orbit { orbit, cone }
        }
        ProblemKind::Strata => Problem::Strata(parse_strata(&schema(&file.payload)?)?),
        ProblemKind::Deform => Problem::Deform(parse_deform(&schema(&file.payload)?)?),
        ProblemKind::Example => parse_example(&schema(&file.payload)?)?,
    };
    Ok((problem, file))
}

fn wrap<T: Serialize>(kind: ProblemKind, payload: &T) -> ProblemFile {
    ProblemFile { kind, payload: serde_json::to_value(payload).expect("payload serializes"), metadata: BTreeMap::new() }
}

pub fn emit_mhs(mhs: &MixedHodgeStructure) -> ProblemFile {
    let w = mhs.weight();
    wrap(
        ProblemKind::Mhs,
        &MhsPayload {
            ambient_dim: mhs.ambient_dim(),
            center: w.center(),
            f: spans_from_steps(mhs.hodge().steps()),
            w: Some(spans_from_steps(w.steps())),
            q: mhs.polarization().map(|q| matrix_to_json(q.matrix())),
        },
    )
}

pub fn emit_orbit(orbit: &NilpotentOrbitData, cone: &[G]) -> ProblemFile {
    wrap(
        ProblemKind::Orbit,
        &OrbitPayload {
            ambient_dim: orbit.ambient_dim(),
            center: orbit.center(),
            f: spans_from_steps(orbit.hodge().steps()),
            q: matrix_to_json(orbit.polarization().matrix()),
            n: orbit.generators().iter().map(|g| matrix_to_json(g.matrix())).collect(),
            cone: Some(cone.iter().map(scalar_to_json).collect()),
        },
    )
}

pub fn emit_strata(data: &StrataComplexData) -> ProblemFile {
    let spaces = data.spaces();
    let mut list = Vec::new();
    for (&level, groups) in spaces.levels() {
        for (&degree, s) in groups {
            let hodge = s.hodge.as_ref().map(|h| h.iter().map(|(&(a, b), &d)| (a, b, d)).collect());
            list.push(StrataSpaceJson { level, degree, dim: s.dim, hodge });
        }
    }
    let maps = |m: &BTreeMap<(usize, i64), crate::qlinalg::Matrix>| {
        m.iter().map(|(&(level, degree), mat)| StrataMapJson { level, degree, matrix: matrix_to_json(mat) }).collect()
    };
    wrap(
        ProblemKind::Strata,
        &StrataPayload {
            n: spaces.dim_x(),
            spaces: list,
            rest: maps(data.rest_maps()),
            gysin: maps(data.gysin_maps()),
        },
    )
}

pub fn emit_deform(d: &DeformationData) -> ProblemFile {
    wrap(
        ProblemKind::Deform,
        &DeformPayload {
            ext_dim: d.ext_dim(),
            components: d.components().to_vec(),
            localize: matrix_to_json(d.localize()),
            delta: d.delta().map(matrix_to_json),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{genus3_strata, nodal_curve_deformation};

    fn round_trip(file: &ProblemFile) -> Problem {
        parse_problem(&serde_json::to_string(file).unwrap()).unwrap().0
    }

    #[test]
    fn orbit_round_trip() {
        let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
        let Problem::Orbit { orbit: back, cone } = round_trip(&emit_orbit(&orbit, &[G::one(), G::from_int(2)])) else {
            panic!("wrong kind")
        };
        assert_eq!(back.hodge(), orbit.hodge());
        assert_eq!(cone, vec![G::one(), G::from_int(2)]);
    }

    #[test]
    fn strata_and_deform_round_trip() {
        let data = genus3_strata();
        let Problem::Strata(back) = round_trip(&emit_strata(&data)) else { panic!("wrong kind") };
        assert_eq!(back, data);
        let d = nodal_curve_deformation(2, 1);
        let Problem::Deform(back) = round_trip(&emit_deform(&d)) else { panic!("wrong kind") };
        assert_eq!(back, d);
    }

    #[test]
    fn unknown_fields_and_bad_scalars_are_parse_errors() {
        let extra = r#"{"kind":"deform","payload":{"ext_dim":1,"components":["D1"],"localize":[[1]],"x":0}}"#;
        assert_eq!(parse_problem(extra).unwrap_err().kind(), crate::ErrorKind::Parse);
        let zero = r#"{"kind":"deform","payload":{"ext_dim":1,"components":["D1"],"localize":[["1/0"]]}}"#;
        assert_eq!(parse_problem(zero).unwrap_err().kind(), crate::ErrorKind::Parse);
        let top = r#"{"kind":"deform","payload":{},"extra":1}"#;
        assert_eq!(parse_problem(top).unwrap_err().kind(), crate::ErrorKind::Parse);
    }

    #[test]
    fn example_fixture_payloads() {
        let f = r#"{"kind":"example","payload":{"fixture":"genus2","case":"ii"}}"#;
        assert!(matches!(parse_problem(f).unwrap().0, Problem::Orbit { .. }));
        let f = r#"{"kind":"example","payload":{"fixture":"surface","c1sq":1,"c2sq":-1}}"#;
        assert!(matches!(parse_problem(f).unwrap().0, Problem::Strata(_)));
    }
}
