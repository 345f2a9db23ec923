use std::collections::{BTreeMap, BTreeSet};

use super::{StrataComplexData, StrataError};

/// One summand `H^{r,s}(X^[t])` of an E₁ cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Contribution {
    pub q: i64,
    pub level: usize,
    pub r: i64,
    pub s: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E1Cell {
    pub dim: usize,
    pub contributions: Vec<E1Contribution>,
}

/// `E₁^{a,b} = ⊕_q H^{i−2q+b, a+b}(X^[2q+1−b])` for a fixed `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Table {
    pub i: i64,
    pub cells: BTreeMap<(i64, i64), E1Cell>,
}

/// E₁ page of the weight spectral sequence for `H^i`, cell by cell.
///
/// `H^{r,s}(X^[t])` sits in the cells with `t = 2q + 1 − b`, `r = i − 2q + b`,
/// `s = a + b` and `0 ≤ q ≤ t − 1`.
pub fn e1_page(data: &StrataComplexData, i: i64) -> Result<E1Table, StrataError> {
    let mut cells: BTreeMap<(i64, i64), E1Cell> = BTreeMap::new();
    for (&t, groups) in data.spaces().levels() {
        for (&deg, space) in groups {
            if space.dim == 0 {
                continue;
            }
            let hodge = space.hodge.as_ref().ok_or(StrataError::MissingHodge { k: t, q: deg })?;
            for (&(r, s), &h) in hodge {
                if h == 0 || r != i - t as i64 + 1 {
                    continue;
                }
                for q in 0..t as i64 {
                    let b = 2 * q + 1 - t as i64;
                    let a = s - b;
                    let cell = cells.entry((a, b)).or_default();
                    cell.dim += h;
                    cell.contributions.push(E1Contribution { q, level: t, r, s, dim: h });
                }
            }
        }
    }
    Ok(E1Table { i, cells })
}

/// Where `H^{r,•}(X^[t])` shows up across all E₁ pages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub level: usize,
    pub r: i64,
    pub i_values: BTreeSet<i64>,
    pub b_values: BTreeSet<i64>,
}

impl AuditEntry {
    /// One `i`, `t` values of `b`, all with `b ≡ 1 − t (mod 2)` and `|b| ≤ t − 1`.
    pub fn is_consistent(&self) -> bool {
        let t = self.level as i64;
        self.i_values.len() == 1
            && self.b_values.len() == self.level
            && self.b_values.iter().all(|&b| (b - (1 - t)).rem_euclid(2) == 0 && (1 - t..=t - 1).contains(&b))
    }
}

/// Enumerates the E₁ pages for every `i` that can occur and records, for each
/// nonzero `H^{r,•}(X^[t])`, the pages and rows where it appears.
pub fn multiplicity_audit(data: &StrataComplexData) -> Result<Vec<AuditEntry>, StrataError> {
    let n = data.spaces().dim_x() as i64;
    let mut entries: BTreeMap<(usize, i64), AuditEntry> = BTreeMap::new();
    for (&t, groups) in data.spaces().levels() {
        for (&deg, space) in groups {
            if space.dim == 0 {
                continue;
            }
            let hodge = space.hodge.as_ref().ok_or(StrataError::MissingHodge { k: t, q: deg })?;
            for (&(r, _), &h) in hodge {
                if h > 0 {
                    entries.entry((t, r)).or_insert_with(|| AuditEntry {
                        level: t,
                        r,
                        i_values: BTreeSet::new(),
                        b_values: BTreeSet::new(),
                    });
                }
            }
        }
    }
    for i in -2..=2 * n + 2 {
        let table = e1_page(data, i)?;
        for (&(_, b), cell) in &table.cells {
            for c in &cell.contributions {
                let e = entries.get_mut(&(c.level, c.r)).expect("audited entry");
                e.i_values.insert(i);
                e.b_values.insert(b);
            }
        }
    }
    Ok(entries.into_values().collect())
}
