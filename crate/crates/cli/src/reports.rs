use std::collections::BTreeMap;
use std::path::Path;

use lmhs_core::deform::{
    classify_p2_line, independent_smoothing, smoothable_first_order, smoothing_cone, strata_classification, P2LineCase,
    SmoothingCone,
};
use lmhs_core::examples::{
    genus2_orbit, genus3_extension_data, genus3_orbit, genus3_strata as genus3_strata_data, Genus2Case, Genus3Params,
    Invariance,
};
use lmhs_core::hodge::{
    deligne_bigrading, is_r_split, r_split_with_delta, DeligneBigrading, HodgeFiltration, MixedHodgeStructure,
    WeightFiltration,
};
use lmhs_core::io::{
    matrix_to_json, parse_problem, scalar_to_json, subspace_to_json, AuditJson, E1CellJson, IoError, ParameterJson,
    PieceJson, Problem, Report, ReportBody, ReportStatus, ResidualJson, StepJson, StratumJson, StringJson,
    Theorem7PieceJson,
};
use lmhs_core::limit_period::{
    invariants_constant_on_cone, lie_quadrants, orbit_invariants, orbit_tangent_dim, reduced_lpm,
    residual_tangent_data, rsplit_limit_formula, ResidualReport,
};
use lmhs_core::monodromy::{
    cone_weight_independence, lmhs_check as check, n_strings, weight_filtration, NStringDiagram, NilpotentEndomorphism,
    NilpotentOrbitData,
};
use lmhs_core::qlinalg::{parse_gaussian, GaussianRational as G};
use lmhs_core::strata::{
    e1_page, multiplicity_audit, surface_double_curve, theorem7_pieces, theorem7_pieces_with, AdmissionBound,
    StrataComplexData, StrataVerdict, Theorem7Report,
};
use lmhs_core::Error;

const CONE_SAMPLES: usize = 8;

pub fn load(path: &Path) -> Result<Problem, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| IoError::Read(format!("{}: {e}", path.display())))?;
    Ok(parse_problem(&text)?.0)
}

fn wrong_kind(expected: &str) -> Error {
    IoError::Schema(format!("expected a problem of kind {expected}")).into()
}

fn orbit_of(p: &Problem) -> Result<(&NilpotentOrbitData, &[G]), Error> {
    match p {
        Problem::Orbit { orbit, cone } => Ok((orbit, cone)),
        _ => Err(wrong_kind("orbit")),
    }
}

fn strata_of(p: &Problem) -> Result<&StrataComplexData, Error> {
    match p {
        Problem::Strata(d) => Ok(d),
        _ => Err(wrong_kind("strata")),
    }
}

fn deform_of(p: &Problem) -> Result<&lmhs_core::deform::DeformationData, Error> {
    match p {
        Problem::Deform(d) => Ok(d),
        _ => Err(wrong_kind("deform")),
    }
}

fn orbit_weight(orbit: &NilpotentOrbitData, cone: &[G]) -> Result<WeightFiltration, Error> {
    let n = NilpotentEndomorphism::new(orbit.cone_point(cone)?)?;
    Ok(weight_filtration(&n, orbit.center()))
}

/// The mixed Hodge structure of a problem: as given, or `(W(N), F, Q)` for an orbit.
fn mhs_of(p: &Problem) -> Result<MixedHodgeStructure, Error> {
    match p {
        Problem::Mhs(m) => Ok(m.clone()),
        Problem::Orbit { orbit, cone } => Ok(MixedHodgeStructure::new(
            orbit_weight(orbit, cone)?,
            orbit.hodge().clone(),
            Some(orbit.polarization().clone()),
        )?),
        _ => Err(wrong_kind("mhs or orbit")),
    }
}

fn report(command: &str, status: ReportStatus, body: ReportBody) -> Report {
    Report { command: command.into(), status, body }
}

fn weight_steps(w: &WeightFiltration) -> Vec<StepJson> {
    let (lo, hi) = w.range();
    (lo..=hi).map(|k| step(k, &w.step(k))).collect()
}

fn hodge_steps(f: &HodgeFiltration) -> Vec<StepJson> {
    let (lo, hi) = f.range();
    (lo..=hi).map(|p| step(p, &f.step(p))).collect()
}

fn step(index: i64, s: &lmhs_core::qlinalg::Subspace) -> StepJson {
    StepJson { index, dim: s.dim(), basis: subspace_to_json(s) }
}

fn graded(w: &WeightFiltration) -> Vec<(i64, usize)> {
    w.weights().into_iter().map(|k| (k, w.gr_dim(k))).collect()
}

fn pieces(b: &DeligneBigrading) -> Vec<PieceJson> {
    b.pieces().iter().map(|(&(p, q), s)| PieceJson { p, q, dim: s.dim(), basis: subspace_to_json(s) }).collect()
}

fn triples(m: &BTreeMap<(i64, i64), usize>) -> Vec<(i64, i64, usize)> {
    m.iter().map(|(&(p, q), &d)| (p, q, d)).collect()
}

fn strings_json(shape: Vec<(i64, i64, usize)>) -> Vec<StringJson> {
    shape.into_iter().map(|(base_weight, length, dim)| StringJson { base_weight, length, dim }).collect()
}

fn diagram_strings(d: &NStringDiagram) -> Vec<StringJson> {
    strings_json(d.shape())
}

fn residual_json(r: &ResidualReport) -> ResidualJson {
    ResidualJson {
        tangent_dim: r.tangent_dim,
        generators: r.generators,
        killed: r.killed,
        dependent: r.dependent,
        pattern: r.pattern.clone(),
    }
}

pub fn weight(p: &Problem) -> Result<Report, Error> {
    let w = match p {
        Problem::Mhs(m) => m.weight().clone(),
        _ => {
            let (orbit, cone) = orbit_of(p)?;
            orbit_weight(orbit, cone)?
        }
    };
    let body = ReportBody::Weight { center: w.center(), steps: weight_steps(&w), graded: graded(&w) };
    Ok(report("weight-filtration", ReportStatus::Ok, body))
}

pub fn deligne(p: &Problem) -> Result<Report, Error> {
    let mhs = mhs_of(p)?;
    let b = deligne_bigrading(&mhs)?;
    let body = ReportBody::Deligne { pieces: pieces(&b), r_split: is_r_split(&mhs)? };
    Ok(report("deligne", ReportStatus::Ok, body))
}

pub fn rsplit(p: &Problem) -> Result<Report, Error> {
    let (split, delta) = r_split_with_delta(&mhs_of(p)?)?;
    let b = deligne_bigrading(&split)?;
    let body =
        ReportBody::Rsplit { delta: matrix_to_json(&delta), hodge: hodge_steps(split.hodge()), pieces: pieces(&b) };
    Ok(report("rsplit", ReportStatus::Ok, body))
}

pub fn lmhs_check(p: &Problem, seed: u64) -> Result<Report, Error> {
    let (orbit, cone) = orbit_of(p)?;
    let r = check(orbit, cone)?;
    let independent = if r.passed() && orbit.generators().len() > 1 {
        Some(cone_weight_independence(orbit, CONE_SAMPLES, seed)?)
    } else {
        None
    };
    let status = if r.passed() { ReportStatus::Pass } else { ReportStatus::Fail };
    let body = ReportBody::Lmhs {
        failure: r.failure.as_ref().map(ToString::to_string),
        weight_graded: graded(&r.weight),
        hodge_numbers: r.bigrading.as_ref().map_or_else(Vec::new, |b| triples(&b.dims())),
        cone_weight_independent: independent,
    };
    Ok(report("lmhs-check", status, body))
}

pub fn limit_period(p: &Problem, seed: u64) -> Result<Report, Error> {
    let (orbit, cone) = orbit_of(p)?;
    let flag = reduced_lpm(orbit, cone)?;
    let quadrants = lie_quadrants(&flag)?;
    let tangent = orbit_tangent_dim(&flag)?;
    let residual = residual_tangent_data(orbit)?;
    let constant =
        if orbit.generators().len() > 1 { Some(invariants_constant_on_cone(orbit, CONE_SAMPLES, seed)?) } else { None };
    let body = ReportBody::LimitPeriod {
        interior: flag.interior,
        f_infinity: hodge_steps(&flag.f_infinity),
        split_formula_agrees: rsplit_limit_formula(&flag)? == flag.f_infinity,
        invariants: triples(&orbit_invariants(&flag)),
        lie_pieces: triples(&quadrants.dims),
        kernel: quadrants.kernel(),
        image: quadrants.image(),
        cokernel: quadrants.cokernel(),
        stabilizer_matches: quadrants.stabilizer_matches,
        tangent_stabilizer_rank: tangent.stabilizer_rank,
        tangent_hodge_count: tangent.hodge_count,
        residual: residual_json(&residual),
        invariants_constant_on_cone: constant,
    };
    Ok(report("limit-period", ReportStatus::Ok, body))
}

pub fn nstrings(p: &Problem) -> Result<Report, Error> {
    let (orbit, cone) = orbit_of(p)?;
    let d = n_strings(orbit, cone)?;
    let body = ReportBody::NStrings { strings: diagram_strings(&d), graded: d.graded_dims().into_iter().collect() };
    Ok(report("nstrings", ReportStatus::Ok, body))
}

fn verdict_body(v: &StrataVerdict) -> (ReportStatus, ReportBody) {
    match v {
        StrataVerdict::Pass => {
            (ReportStatus::Pass, ReportBody::StrataValidate { square: None, level: None, degree: None, residual: None })
        }
        StrataVerdict::Fail { square, k, q, residual } => (
            ReportStatus::Fail,
            ReportBody::StrataValidate {
                square: Some(format!("{square:?}")),
                level: Some(*k),
                degree: Some(*q),
                residual: Some(matrix_to_json(residual)),
            },
        ),
    }
}

pub fn strata_validate(p: &Problem) -> Result<Report, Error> {
    let (status, body) = verdict_body(&strata_of(p)?.validate());
    Ok(report("strata validate", status, body))
}

fn audit_json(data: &StrataComplexData) -> Result<Vec<AuditJson>, Error> {
    Ok(multiplicity_audit(data)?
        .into_iter()
        .map(|a| AuditJson {
            level: a.level,
            r: a.r,
            consistent: a.is_consistent(),
            i_values: a.i_values.into_iter().collect(),
            b_values: a.b_values.into_iter().collect(),
        })
        .collect())
}

pub fn strata_e1(p: &Problem, i: i64) -> Result<Report, Error> {
    let data = strata_of(p)?;
    let table = e1_page(data, i)?;
    let audit = audit_json(data)?;
    let status = if audit.iter().all(|a| a.consistent) { ReportStatus::Pass } else { ReportStatus::Fail };
    let cells = table.cells.iter().map(|(&(a, b), c)| E1CellJson { a, b, dim: c.dim }).collect();
    Ok(report("strata e1", status, ReportBody::E1 { i, cells, audit }))
}

fn theorem7_body(r: &Theorem7Report) -> ReportBody {
    ReportBody::Theorem7 {
        m: r.m,
        admission: r.admission.name().into(),
        pieces: r
            .pieces
            .values()
            .map(|p| Theorem7PieceJson {
                i: p.i,
                j: p.j,
                level: p.level,
                degree: p.degree,
                weight: p.weight,
                dim: p.dim,
            })
            .collect(),
        graded: r.graded_dims().into_iter().collect(),
        strings: strings_json(r.string_shape()),
        total_complex_agrees: r.total_complex_agrees,
        n_isomorphisms: r.n_maps_are_isomorphisms(),
    }
}

pub fn strata_nstrings(p: &Problem, m: i64, bound: AdmissionBound) -> Result<Report, Error> {
    let r = theorem7_pieces_with(strata_of(p)?, m, bound)?;
    Ok(report("strata nstrings", ReportStatus::Ok, theorem7_body(&r)))
}

pub fn surface(c1sq: i64, c2sq: i64) -> Report {
    let data = surface_double_curve(c1sq, c2sq);
    let composite = data.rest_gysin_composite(2, 0);
    let (status, _) = verdict_body(&data.validate());
    let body = ReportBody::Surface {
        c1sq,
        c2sq,
        composite: matrix_to_json(&composite),
        is_complex: status == ReportStatus::Pass,
    };
    report("strata surface", status, body)
}

pub fn deform_strata(p: &Problem) -> Result<Report, Error> {
    let d = deform_of(p)?;
    let strata = strata_classification(d)?
        .into_iter()
        .map(|s| StratumJson {
            b: s.b.iter().map(|&a| d.components()[a].clone()).collect(),
            dim: s.tangent.dim(),
            codim: s.codim,
        })
        .collect();
    let body = ReportBody::DeformStrata {
        smoothable: smoothable_first_order(d),
        independent: independent_smoothing(d),
        exact: d.is_exact(),
        strata,
    };
    Ok(report("deform strata", ReportStatus::Ok, body))
}

pub fn deform_cone(p: &Problem) -> Result<Report, Error> {
    let cone = smoothing_cone(deform_of(p)?)?;
    let vectors = |vs: &[Vec<G>]| vs.iter().map(|v| v.iter().map(scalar_to_json).collect()).collect();
    let body = match &cone {
        SmoothingCone::Simplicial { generators } => {
            ReportBody::DeformCone { shape: "simplicial".into(), generators: Some(vectors(generators)), image: None }
        }
        SmoothingCone::Rays { rays } => {
            ReportBody::DeformCone { shape: "rays".into(), generators: Some(vectors(rays)), image: None }
        }
        SmoothingCone::Membership { image } => ReportBody::DeformCone {
            shape: "membership".into(),
            generators: None,
            image: Some(subspace_to_json(image)),
        },
    };
    Ok(report("deform cone", ReportStatus::Ok, body))
}

pub fn classify_p2(p: &Problem) -> Result<Report, Error> {
    let d = deform_of(p)?;
    let name = |a: usize| d.components()[a].clone();
    let case = classify_p2_line(d)?;
    let (free, locked, excluded) = match &case {
        P2LineCase::I => (None, vec![], false),
        P2LineCase::II { free, locked } => (Some(name(*free)), locked.iter().map(|&a| name(a)).collect(), false),
        P2LineCase::III { excluded_by_smoothability } => (None, vec![], *excluded_by_smoothability),
    };
    let body = ReportBody::ClassifyP2 { case: case.label().into(), free, locked, excluded_by_smoothability: excluded };
    Ok(report("deform classify-p2", ReportStatus::Ok, body))
}

fn parse_params(s: &str) -> Result<Genus3Params, Error> {
    let parts: Vec<G> = s.split(',').map(parse_gaussian).collect::<Result<_, _>>()?;
    let [a11, a12, a22, b1, b2, c]: [G; 6] =
        parts.try_into().map_err(|_| IoError::Schema("--params expects six values a11,a12,a22,b1,b2,c".into()))?;
    Ok(Genus3Params { a11, a12, a22, b1, b2, c })
}

pub fn genus3(params: Option<&str>) -> Result<Report, Error> {
    let params = params.map_or_else(|| Ok(Genus3Params::sample()), parse_params)?;
    let orbit = genus3_orbit(&params)?;
    let ones = vec![G::one(); 2];
    let r = check(&orbit, &ones)?;
    let parameters = genus3_extension_data(&orbit)?
        .labelled()
        .into_iter()
        .map(|(name, value, inv)| ParameterJson {
            name: name.into(),
            value: scalar_to_json(&value),
            orbit_invariant: inv == Invariance::OrbitInvariant,
        })
        .collect();
    let strings = if r.passed() { diagram_strings(&n_strings(&orbit, &ones)?) } else { vec![] };
    let status = if r.passed() { ReportStatus::Pass } else { ReportStatus::Fail };
    let body = ReportBody::Genus3 {
        parameters,
        lmhs_passed: r.passed(),
        strings,
        residual: residual_json(&residual_tangent_data(&orbit)?),
    };
    Ok(report("example genus3", status, body))
}

pub fn genus2(case_ii: bool) -> Result<Report, Error> {
    let case = if case_ii { Genus2Case::II } else { Genus2Case::I };
    let fx = genus2_orbit(case);
    let ones = vec![G::one(); fx.orbit.generators().len()];
    let r = check(&fx.orbit, &ones)?;
    let residual = residual_tangent_data(&fx.orbit)?;
    let status = if r.passed() && residual.pattern.as_ref() == Some(&fx.expected_pattern) {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    let body = ReportBody::Genus2 {
        case: if case_ii { "ii" } else { "i" }.into(),
        lmhs_passed: r.passed(),
        strings: if r.passed() { diagram_strings(&n_strings(&fx.orbit, &ones)?) } else { vec![] },
        pattern: residual.pattern,
        expected_pattern: fx.expected_pattern,
    };
    Ok(report("example genus2", status, body))
}

pub fn genus3_strata() -> Result<Report, Error> {
    let r = theorem7_pieces(&genus3_strata_data(), 1)?;
    Ok(report("example genus3-strata", ReportStatus::Ok, theorem7_body(&r)))
}
