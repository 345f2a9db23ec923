use std::collections::BTreeMap;

use super::{CohomologySpace, StrataComplexData, StrataError, StratumSpaces};
use crate::qlinalg::{GaussianRational as G, Matrix};

/// Irreducible surface whose double curve has preimages `C₁ ⊔ C₂` in the
/// normalization, with self-intersections `C₁² = c1_sq`, `C₂² = c2_sq`.
///
/// Only the classes involved in the double-curve complex are modelled:
/// `H²(X^[1]) = span{η_{C₁}, η_{C₂}}` and the anti-invariant parts
/// `H^q(X^[2])_−` spanned by `1_{C₁} − 1_{C₂}` and `[C₁] − [C₂]`.
pub fn surface_double_curve(c1_sq: i64, c2_sq: i64) -> StrataComplexData {
    let level1 = BTreeMap::from([
        (0, CohomologySpace::tate(0, 1)),
        (2, CohomologySpace::tate(1, 2)),
        (4, CohomologySpace::tate(2, 1)),
    ]);
    let level2 = BTreeMap::from([(0, CohomologySpace::tate(0, 1)), (2, CohomologySpace::tate(1, 1))]);
    let spaces = StratumSpaces::new(2, BTreeMap::from([(1, level1), (2, level2)])).expect("surface strata");
    // η_{C_i} restricts to (C_i·C₁)[C₁] + (C_i·C₂)[C₂]; the anti-invariant part of
    // x[C₁] + y[C₂] is ((x − y)/2)([C₁] − [C₂]).
    let rest_h2 = Matrix::from_rows(vec![vec![G::frac(c1_sq, 2), G::frac(-c2_sq, 2)]]).expect("row");
    let gysin_h0 = Matrix::from_ints(&[&[1], &[-1]]);
    StrataComplexData::new(spaces, BTreeMap::from([((1, 2), rest_h2)]), BTreeMap::from([((2, 0), gysin_h0)]))
        .expect("surface maps have the right shapes")
}

/// A nodal curve: genera of the normalization's components and the pair of
/// components meeting at each node (equal entries for a self-node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodalCurve {
    pub genera: Vec<usize>,
    pub nodes: Vec<(usize, usize)>,
}

impl NodalCurve {
    /// One component of genus `g` with `delta` self-nodes.
    pub fn irreducible(g: usize, delta: usize) -> Self {
        Self { genera: vec![g], nodes: vec![(0, 0); delta] }
    }

    /// Two components meeting in `delta` points, genera `g1` and `g2`.
    pub fn two_components(g1: usize, g2: usize, delta: usize) -> Self {
        Self { genera: vec![g1, g2], nodes: vec![(0, 1); delta] }
    }

    pub fn arithmetic_genus(&self) -> usize {
        let b1 = self.dual_graph_b1();
        self.genera.iter().sum::<usize>() + b1
    }

    /// First Betti number of the dual graph, by union-find.
    pub fn dual_graph_b1(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.genera.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut merges = 0;
        for &(a, b) in &self.nodes {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                merges += 1;
            }
        }
        self.nodes.len() - merges
    }
}

/// Stratum data of a nodal curve: `X^[1]` is the normalization, `X^[2]` the
/// set of nodes. `Rest(f) = f_a − f_b` at a node joining `a` and `b`, and
/// `Gy` is its transpose.
pub fn nodal_curve_strata(curve: &NodalCurve) -> Result<StrataComplexData, StrataError> {
    let c = curve.genera.len();
    if c == 0 {
        return Err(StrataError::Incidence("a curve needs at least one component".into()));
    }
    if let Some(&(a, b)) = curve.nodes.iter().find(|&&(a, b)| a >= c || b >= c) {
        return Err(StrataError::Incidence(format!("node ({a}, {b}) refers to a missing component")));
    }
    let g: usize = curve.genera.iter().sum();
    let delta = curve.nodes.len();
    let mut level1 = BTreeMap::from([(0, CohomologySpace::tate(0, c)), (2, CohomologySpace::tate(1, c))]);
    if g > 0 {
        level1.insert(1, CohomologySpace::with_hodge(BTreeMap::from([((1, 0), g), ((0, 1), g)])));
    }
    let mut levels = BTreeMap::from([(1, level1)]);
    let mut rest = BTreeMap::new();
    let mut gysin = BTreeMap::new();
    if delta > 0 {
        levels.insert(2, BTreeMap::from([(0, CohomologySpace::tate(0, delta))]));
        let r = Matrix::from_fn(delta, c, |e, v| {
            let (a, b) = curve.nodes[e];
            G::from_int(i64::from(v == a) - i64::from(v == b))
        });
        gysin.insert((2, 0), r.transpose());
        rest.insert((1, 0), r);
    }
    StrataComplexData::new(StratumSpaces::new(1, levels)?, rest, gysin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::{theorem7_pieces, StrataVerdict};

    #[test]
    fn surface_composite() {
        let d = surface_double_curve(1, 1);
        assert_eq!(d.rest_gysin_composite(2, 0), Matrix::from_ints(&[&[1]]));
        assert!(matches!(d.validate(), StrataVerdict::Fail { k: 2, q: 0, .. }));
        assert!(surface_double_curve(2, -2).validate().passed());
    }

    #[test]
    fn smooth_curve_has_one_piece() {
        let d = nodal_curve_strata(&NodalCurve::irreducible(2, 0)).unwrap();
        let r = theorem7_pieces(&d, 1).unwrap();
        assert_eq!(r.graded_dims(), BTreeMap::from([(1, 4)]));
    }

    #[test]
    fn bad_incidence() {
        let c = NodalCurve { genera: vec![1], nodes: vec![(0, 1)] };
        assert!(matches!(nodal_curve_strata(&c), Err(StrataError::Incidence(_))));
    }
}
