//! Matrices over the coefficient ring: certified rank and exact solving.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::modp::{self, ModPoint};
use crate::ring::RingElem;

/// Dense row-major matrix over ℛ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    m: usize,
    entries: Vec<RingElem>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize, m: usize) -> Self {
        RingMatrix { rows, cols, m, entries: vec![RingElem::zero(m); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<RingElem>>, m: usize) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for e in row {
                if e.m() != m {
                    return Err(Error::Dimension("entry over a different ring".into()));
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix { rows: nrows, cols, m, entries })
    }

    /// Rows are sparse vectors; columns are the sorted union of their keys.
    pub fn from_sparse_rows<K: Ord + Clone>(rows: &[&BTreeMap<K, RingElem>], m: usize) -> Self {
        let mut keys: Vec<K> = rows.iter().flat_map(|r| r.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut mat = RingMatrix::zeros(rows.len(), keys.len(), m);
        for (i, row) in rows.iter().enumerate() {
            for (k, v) in row.iter() {
                mat.set(i, index[k], v.clone());
            }
        }
        mat
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn eval_mod(&self, pt: &ModPoint) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval_mod(pt)).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<RingElem> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<RingElem>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut prev = RingElem::one(self.m);
        let mut sign = 1;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(RingElem::zero(self.m));
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).ok_or_else(|| {
                        Error::Internal("inexact Bareiss division".into())
                    })?;
                }
                a[i][k] = RingElem::zero(self.m);
            }
            prev = a[k][k].clone();
        }
        Ok(if sign < 0 { -&prev } else { prev })
    }
}

/// Maximum rank over `trials` random 𝔽_p specializations; a lower bound on the
/// rank over the fraction field, deterministic in `seed`.
pub fn modular_rank(mat: &RingMatrix, trials: usize, seed: u64) -> usize {
    let cap = mat.rows.min(mat.cols);
    let mut best = 0;
    for t in 0..trials.max(1) {
        let pt = ModPoint::seeded(mat.m, seed, t as u64);
        best = best.max(modp::rank(mat.eval_mod(&pt)));
        if best == cap {
            break;
        }
    }
    best
}

/// Exact rank over the fraction field by fraction-free elimination.
pub fn exact_rank(mat: &RingMatrix) -> Result<usize> {
    let mut a: Vec<Vec<RingElem>> =
        (0..mat.rows).map(|i| (0..mat.cols).map(|j| mat.get(i, j).clone()).collect()).collect();
    let mut prev = RingElem::one(mat.m);
    let mut rank = 0;
    for col in 0..mat.cols {
        let Some(p) = (rank..mat.rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..mat.rows {
            for j in col + 1..mat.cols {
                let num = &(&a[i][j] * &a[rank][col]) - &(&a[i][col] * &a[rank][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact Bareiss division".into()))?;
            }
            a[i][col] = RingElem::zero(mat.m);
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == mat.rows {
            break;
        }
    }
    Ok(rank)
}

/// Coefficients `c` with `Σ c_j · columns[j] = target`, all in ℛ.
///
/// Tries to peel rows holding a single remaining nonzero unit entry, which
/// yields a unitriangular system solved without division; otherwise falls back
/// to Cramer's rule on a square subsystem whose rows are chosen by a modular
/// elimination. The result is always checked against the full system.
pub fn solve_exact<K: Ord + Clone + std::hash::Hash>(
    columns: &[&BTreeMap<K, RingElem>],
    target: &BTreeMap<K, RingElem>,
    m: usize,
    seed: u64,
) -> Result<Vec<RingElem>> {
    let coeffs = match peel_solve(columns, target, m) {
        Some(c) => c,
        None => cramer_solve(columns, target, m, seed)?,
    };
    let mut residual = target.clone();
    for (c, col) in coeffs.iter().zip(columns) {
        if c.is_zero() {
            continue;
        }
        for (k, v) in col.iter() {
            let e = residual.entry(k.clone()).or_insert_with(|| RingElem::zero(m));
            *e -= &(c * v);
        }
    }
    if residual.values().any(|v| !v.is_zero()) {
        return Err(Error::NotInModule("target is not in the span of the columns".into()));
    }
    Ok(coeffs)
}

fn peel_solve<K: Ord + Clone + std::hash::Hash>(
    columns: &[&BTreeMap<K, RingElem>],
    target: &BTreeMap<K, RingElem>,
    m: usize,
) -> Option<Vec<RingElem>> {
    let k = columns.len();
    let mut by_row: HashMap<&K, Vec<usize>> = HashMap::new();
    for (j, col) in columns.iter().enumerate() {
        for key in col.keys() {
            by_row.entry(key).or_default().push(j);
        }
    }
    let mut live: HashMap<&K, usize> = by_row.iter().map(|(key, v)| (*key, v.len())).collect();
    let mut removed = vec![false; k];
    let mut queue: VecDeque<&K> = {
        let mut singles: Vec<&K> = live.iter().filter(|(_, &c)| c == 1).map(|(key, _)| *key).collect();
        singles.sort();
        singles.into()
    };
    let mut order: Vec<(usize, &K)> = Vec::with_capacity(k);
    while let Some(key) = queue.pop_front() {
        if live[key] != 1 {
            continue;
        }
        let j = *by_row[key].iter().find(|&&j| !removed[j])?;
        if !columns[j][key].is_unit() {
            continue;
        }
        removed[j] = true;
        order.push((j, key));
        for other in columns[j].keys() {
            let c = live.get_mut(other).unwrap();
            *c -= 1;
            if *c == 1 {
                queue.push_back(other);
            }
        }
    }
    if order.len() < k {
        return None;
    }
    let mut coeffs = vec![RingElem::zero(m); k];
    for (idx, &(j, key)) in order.iter().enumerate() {
        let mut rhs = target.get(key).cloned().unwrap_or_else(|| RingElem::zero(m));
        for &(jj, _) in &order[..idx] {
            if let Some(v) = columns[jj].get(key) {
                rhs -= &(&coeffs[jj] * v);
            }
        }
        coeffs[j] = &rhs * &columns[j][key].unit_inverse().unwrap();
    }
    Some(coeffs)
}

fn cramer_solve<K: Ord + Clone>(
    columns: &[&BTreeMap<K, RingElem>],
    target: &BTreeMap<K, RingElem>,
    m: usize,
    seed: u64,
) -> Result<Vec<RingElem>> {
    let k = columns.len();
    let mut keys: Vec<K> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let pt = ModPoint::seeded(m, seed, 0);
    let rows_mod: Vec<Vec<u64>> = keys
        .iter()
        .map(|key| columns.iter().map(|c| c.get(key).map_or(0, |v| v.eval_mod(&pt))).collect())
        .collect();
    let picked = modp::independent_rows(&rows_mod);
    if picked.len() < k {
        return Err(Error::Internal("columns are linearly dependent".into()));
    }
    let zero = RingElem::zero(m);
    let square = |replace: Option<usize>| -> Result<RingMatrix> {
        let rows = picked
            .iter()
            .map(|&r| {
                (0..k)
                    .map(|j| {
                        let src = if Some(j) == replace { target } else { columns[j] };
                        src.get(&keys[r]).unwrap_or(&zero).clone()
                    })
                    .collect()
            })
            .collect();
        RingMatrix::from_rows(rows, m)
    };
    let det = square(None)?.determinant()?;
    (0..k)
        .map(|j| {
            let num = square(Some(j))?.determinant()?;
            num.div_exact(&det)
                .ok_or_else(|| Error::Internal("solution has coefficients outside the ring".into()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingElem {
        RingElem::q(1)
    }

    #[test]
    fn identity_rank() {
        let mut id = RingMatrix::zeros(3, 3, 1);
        for i in 0..3 {
            id.set(i, i, RingElem::one(1));
        }
        assert_eq!(modular_rank(&id, 1, 7), 3);
        assert_eq!(exact_rank(&id).unwrap(), 3);
    }

    #[test]
    fn zero_row_rank() {
        let mut a = RingMatrix::zeros(2, 2, 1);
        a.set(0, 0, q());
        assert_eq!(modular_rank(&a, 2, 1), 1);
        assert_eq!(exact_rank(&a).unwrap(), 1);
    }

    #[test]
    fn bareiss_determinant() {
        let one = RingElem::one(1);
        let a = RingMatrix::from_rows(vec![vec![q(), one.clone()], vec![one.clone(), q()]], 1).unwrap();
        assert_eq!(a.determinant().unwrap(), &(&q() * &q()) - &one);
    }

    #[test]
    fn both_solvers_agree() {
        let one = RingElem::one(1);
        let mk = |v: Vec<(u8, RingElem)>| v.into_iter().collect::<BTreeMap<u8, RingElem>>();
        // unitriangular: peeling succeeds
        let c0 = mk(vec![(0, one.clone()), (1, q())]);
        let c1 = mk(vec![(1, q())]);
        let target = mk(vec![(0, RingElem::int(1, 2)), (1, &(&q() * &RingElem::int(1, 2)) + &(&q() * &q()))]);
        let x = solve_exact(&[&c0, &c1], &target, 1, 3).unwrap();
        assert_eq!(x, vec![RingElem::int(1, 2), q()]);
        let y = cramer_solve(&[&c0, &c1], &target, 1, 3).unwrap();
        assert_eq!(x, y);
        // not in span
        let bad = mk(vec![(2, one)]);
        assert!(solve_exact(&[&c0, &c1], &bad, 1, 3).is_err());
    }
}
