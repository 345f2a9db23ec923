use crate::deform::DeformationData;
use crate::qlinalg::Matrix;

fn named(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("D{i}")).collect()
}

/// A curve with `nodes` nodes and `moduli` locally trivial directions: each
/// node is smoothed by its own coordinate.
pub fn nodal_curve_deformation(nodes: usize, moduli: usize) -> DeformationData {
    let m = Matrix::from_fn(nodes, nodes + moduli, |i, j| if i == j { 1.into() } else { 0.into() });
    DeformationData::new(nodes + moduli, named(nodes), m, None).expect("identity shape")
}

/// Three double curves with obstruction `δ = (1, 1, 1)`: `ker δ` avoids every vertex.
pub fn p2_case_i() -> DeformationData {
    three_components(&[&[1, 0], &[0, 1], &[-1, -1]], &[&[1, 1, 1]])
}

/// `ker δ = span{(1,0,0), (0,1,−1)}`: `D₁` smooths alone, `D₂, D₃` are locked.
pub fn p2_case_ii() -> DeformationData {
    three_components(&[&[1, 0], &[0, 1], &[0, -1]], &[&[0, 1, 1]])
}

/// `ker δ` a coordinate plane; `D₃` is never smoothed.
pub fn p2_case_iii() -> DeformationData {
    three_components(&[&[1, 0], &[0, 1], &[0, 0]], &[&[0, 0, 1]])
}

fn three_components(localize: &[&[i64]], delta: &[&[i64]]) -> DeformationData {
    DeformationData::new(2, named(3), Matrix::from_ints(localize), Some(Matrix::from_ints(delta)))
        .expect("three-component fixture")
}
