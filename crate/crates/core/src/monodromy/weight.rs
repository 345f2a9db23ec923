use std::collections::BTreeMap;

use super::NilpotentEndomorphism;
use crate::hodge::WeightFiltration;
use crate::qlinalg::Subspace;

/// The monodromy weight filtration `W(N)` centered at `m`.
///
/// `W_{m+l} = Σ_{j ≥ max(0, −l)} ker N^{l+j+1} ∩ im N^j`.
pub fn weight_filtration(n: &NilpotentEndomorphism, m: i64) -> WeightFiltration {
    let dim = n.ambient_dim();
    let nu = n.index() as i64;
    if nu <= 1 {
        return WeightFiltration::trivial(dim, m);
    }
    let powers: Vec<_> = (0..=2 * nu).map(|k| n.matrix().pow(k as u32)).collect();
    let kernels: Vec<Subspace> = powers.iter().map(Subspace::kernel_of).collect();
    let images: Vec<Subspace> = powers.iter().map(Subspace::image_of).collect();
    let mut steps = BTreeMap::new();
    for l in -nu..nu {
        let parts: Vec<Subspace> =
            ((-l).max(0)..nu).map(|j| kernels[(l + j + 1) as usize].meet(&images[j as usize])).collect();
        steps.insert(m + l, Subspace::join_all(dim, &parts));
    }
    WeightFiltration::new(dim, m, steps).expect("monodromy weight filtration is exhaustive")
}
