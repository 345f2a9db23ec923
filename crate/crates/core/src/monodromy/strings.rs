use std::collections::BTreeMap;

use super::lmhs::primitive_pieces;
use super::{lmhs_check, MonodromyError, NilpotentOrbitData};
use crate::qlinalg::{GaussianRational as G, Subspace};

/// One twisted copy `N^{l−j} P` inside a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStringPiece {
    /// Tate twist `j`: the piece is the base twisted by `(−j)`.
    pub twist: i64,
    pub weight: i64,
    pub dim: usize,
    pub space: Subspace,
}

/// `H^k(−l) → ⋯ → H^k` where `H^k` has weight `k = m − l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NString {
    pub base_weight: i64,
    pub length: i64,
    /// Hodge numbers `(p, q) ↦ h^{p,q}` of the untwisted base.
    pub piece_dims: BTreeMap<(i64, i64), usize>,
    pub twist_chain: Vec<NStringPiece>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStringDiagram {
    pub ambient_dim: usize,
    pub strings: Vec<NString>,
}

impl NStringDiagram {
    /// `(base_weight, length, dim)` per string, sorted.
    pub fn shape(&self) -> Vec<(i64, i64, usize)> {
        let mut s: Vec<_> = self
            .strings
            .iter()
            .map(|s| (s.base_weight, s.length, s.twist_chain.first().map_or(0, |p| p.dim)))
            .collect();
        s.sort_unstable();
        s
    }

    /// `dim Gr_k` summed over all strings.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for s in &self.strings {
            for p in &s.twist_chain {
                *out.entry(p.weight).or_insert(0) += p.dim;
            }
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.strings.iter().flat_map(|s| &s.twist_chain).map(|p| p.dim).sum()
    }
}

/// Primitive decomposition of the limiting mixed Hodge structure into N-strings.
pub fn n_strings(orbit: &NilpotentOrbitData, coeffs: &[G]) -> Result<NStringDiagram, MonodromyError> {
    let report = lmhs_check(orbit, coeffs)?;
    if let Some(f) = report.failure {
        return Err(MonodromyError::NotLmhs(f));
    }
    let bigrading = report.bigrading.expect("bigrading present on pass");
    let n = report.n;
    let m = orbit.center();
    let dim = orbit.ambient_dim();
    let mut by_l: BTreeMap<i64, Vec<(i64, i64, Subspace)>> = BTreeMap::new();
    for (l, p, q, s) in primitive_pieces(&bigrading, &n, m) {
        by_l.entry(l).or_default().push((p, q, s));
    }
    let mut strings = Vec::new();
    for (l, pieces) in by_l {
        let prim = Subspace::join_all(dim, pieces.iter().map(|(_, _, s)| s));
        let piece_dims = pieces.iter().map(|(p, q, s)| ((p - l, q - l), s.dim())).collect();
        let mut twist_chain = Vec::new();
        for j in 0..=l {
            let space = prim.image(&n.pow((l - j) as u32));
            twist_chain.push(NStringPiece { twist: j, weight: m - l + 2 * j, dim: space.dim(), space });
        }
        if twist_chain.windows(2).any(|w| w[0].dim != w[1].dim || w[1].space.image(&n) != w[0].space) {
            return Err(crate::hodge::HodgeError::Internal("N is not an isomorphism along a string".into()).into());
        }
        strings.push(NString { base_weight: m - l, length: l, piece_dims, twist_chain });
    }
    let diagram = NStringDiagram { ambient_dim: dim, strings };
    if diagram.total_dim() != dim {
        return Err(crate::hodge::HodgeError::Internal("N-strings do not fill the space".into()).into());
    }
    Ok(diagram)
}
