//! The wreath product 𝔖_{m,r} = ℤ_m ≀ 𝔖_r and colored matrices Θ_m(n, r).
//!
//! An element is stored as `(c, p)` and acts by `w(k) = ξ^{c_k}·p(k)`, so
//! `(xy)(k) = x(ξ^{c^y_k} p^y(k)) = ξ^{c^y_k + c^x_{p^y(k)}} p^x(p^y(k))`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{self, Composition, IntMatrix, Permutation, MAX_R};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPerm {
    m: u8,
    colors: [u8; MAX_R],
    perm: Permutation,
}

impl ColoredPerm {
    pub fn identity(m: usize, r: usize) -> Self {
        assert!((1..256).contains(&m), "m out of range");
        ColoredPerm { m: m as u8, colors: [0; MAX_R], perm: Permutation::identity(r) }
    }

    pub fn new(m: usize, colors: &[usize], perm: Permutation) -> Result<Self> {
        if colors.len() != perm.r() {
            return Err(Error::Dimension("color vector length differs from r".into()));
        }
        if m == 0 || m > 255 {
            return Err(Error::Range(format!("m = {m}")));
        }
        let mut c = [0u8; MAX_R];
        for (k, &v) in colors.iter().enumerate() {
            c[k] = (v % m) as u8;
        }
        Ok(ColoredPerm { m: m as u8, colors: c, perm })
    }

    pub fn from_perm(m: usize, perm: Permutation) -> Self {
        ColoredPerm { m: m as u8, colors: [0; MAX_R], perm }
    }

    /// Generator `s_i`; `s_0` colors the first position.
    pub fn generator(m: usize, r: usize, i: usize) -> Result<Self> {
        if i == 0 {
            if r == 0 {
                return Err(Error::Range("s0 needs r ≥ 1".into()));
            }
            let mut c = vec![0; r];
            c[0] = 1;
            return Self::new(m, &c, Permutation::identity(r));
        }
        Ok(Self::from_perm(m, Permutation::simple(r, i)?))
    }

    pub fn from_word(m: usize, r: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(m, r);
        for &i in word {
            w = w.mul(&Self::generator(m, r, i)?)?;
        }
        Ok(w)
    }

    /// `t_i = s_{i−1}⋯s_1 s_0 s_1⋯s_{i−1}`, computed from its word.
    pub fn t(m: usize, r: usize, i: usize) -> Result<Self> {
        let mut word: Vec<usize> = (1..i).rev().collect();
        word.push(0);
        word.extend(1..i);
        Self::from_word(m, r, &word)
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn r(&self) -> usize {
        self.perm.r()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.colors[..self.r()].iter().map(|&c| c as usize).collect()
    }

    pub fn perm(&self) -> Permutation {
        self.perm
    }

    pub fn mul(&self, y: &ColoredPerm) -> Result<ColoredPerm> {
        if self.m != y.m || self.r() != y.r() {
            return Err(Error::Dimension("colored permutations of different shape".into()));
        }
        let mut colors = [0u8; MAX_R];
        for k in 0..self.r() {
            let pk = y.perm.apply(k + 1);
            colors[k] = ((y.colors[k] as usize + self.colors[pk - 1] as usize) % self.m()) as u8;
        }
        Ok(ColoredPerm { m: self.m, colors, perm: self.perm.compose(&y.perm) })
    }

    pub fn inverse(&self) -> ColoredPerm {
        let pinv = self.perm.inverse();
        let mut colors = [0u8; MAX_R];
        for k in 0..self.r() {
            // (x⁻¹)(k): color is −c_{p⁻¹(k)}
            let c = self.colors[pinv.apply(k + 1) - 1] as usize;
            colors[k] = ((self.m() - c) % self.m()) as u8;
        }
        ColoredPerm { m: self.m, colors, perm: pinv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.colors.iter().all(|&c| c == 0)
    }

    /// `a^{(t)}_{ij} = |ξ^t R_i^λ ∩ w(R_j^μ)|`; slot `t = m` counts color 0.
    pub fn colored_matrix(&self, lambda: &Composition, mu: &Composition) -> Result<ColoredMatrix> {
        let n = lambda.len();
        if n != mu.len() || lambda.degree() != self.r() || mu.degree() != self.r() {
            return Err(Error::Dimension("compositions do not match the element".into()));
        }
        let m = self.m();
        let mut entries = vec![vec![0usize; m]; n * n];
        for j in 1..=n {
            for k in mu.block(j) {
                let i = lambda.block_of(self.perm.apply(k + 1));
                let c = self.colors[k] as usize;
                let slot = if c == 0 { m - 1 } else { c - 1 };
                entries[(i - 1) * n + (j - 1)][slot] += 1;
            }
        }
        Ok(ColoredMatrix { m, n, entries })
    }
}

impl fmt::Debug for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(colors {:?}, perm {:?})", self.colors(), self.perm)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoredPermJson {
    colors: Vec<usize>,
    perm: Permutation,
}

impl Serialize for ColoredPerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoredPermJson { colors: self.colors(), perm: self.perm }.serialize(s)
    }
}

impl ColoredPerm {
    pub fn from_json(v: &serde_json::Value, m: usize) -> Result<Self> {
        let j: ColoredPermJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.colors.iter().any(|&c| c >= m) {
            return Err(Error::Range(format!("color out of ℤ_{m}")));
        }
        Self::new(m, &j.colors, j.perm)
    }
}

/// All elements of 𝔖_{m,r}.
pub fn all_colored_perms(m: usize, r: usize) -> Vec<ColoredPerm> {
    let perms = perm::all_permutations(r);
    let mut out = Vec::with_capacity(perms.len() * m.pow(r as u32));
    let total = m.pow(r as u32);
    for p in perms {
        for code in 0..total {
            let mut c = vec![0; r];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % m;
                x /= m;
            }
            out.push(ColoredPerm::new(m, &c, p).unwrap());
        }
    }
    out
}

/// The double coset `𝔖_λ w 𝔖_μ ⊂ 𝔖_{m,r}` by orbit search.
pub fn colored_double_coset(lambda: &Composition, w: &ColoredPerm, mu: &Composition) -> Vec<ColoredPerm> {
    let (m, r) = (w.m(), w.r());
    let left: Vec<ColoredPerm> =
        perm::j_set(lambda).into_iter().map(|i| ColoredPerm::generator(m, r, i).unwrap()).collect();
    let right: Vec<ColoredPerm> =
        perm::j_set(mu).into_iter().map(|i| ColoredPerm::generator(m, r, i).unwrap()).collect();
    let mut seen = BTreeSet::from([*w]);
    let mut queue = VecDeque::from([*w]);
    while let Some(x) = queue.pop_front() {
        let nbrs = left.iter().map(|s| s.mul(&x).unwrap()).chain(right.iter().map(|s| x.mul(s).unwrap()));
        for y in nbrs.collect::<Vec<_>>() {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Partition of 𝔖_{m,r} into `(𝔖_λ, 𝔖_μ)`-double cosets.
pub fn colored_double_cosets(m: usize, lambda: &Composition, mu: &Composition) -> Vec<Vec<ColoredPerm>> {
    let r = lambda.degree();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in all_colored_perms(m, r) {
        if seen.contains(&w) {
            continue;
        }
        let dc = colored_double_coset(lambda, &w, mu);
        seen.extend(dc.iter().copied());
        out.push(dc);
    }
    out
}

/// 𝔸 ∈ Θ_m(n, r): an `n×n` array of `m`-tuples, row-major. Tuple slot `t−1`
/// holds `a^{(t)}`, so the last slot is the uncolored count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMatrix {
    m: usize,
    n: usize,
    entries: Vec<Vec<usize>>,
}

impl ColoredMatrix {
    pub fn new(m: usize, n: usize, entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.len() != n * n || entries.iter().any(|t| t.len() != m) {
            return Err(Error::Dimension(format!("expected {n}×{n} entries of length {m}")));
        }
        Ok(ColoredMatrix { m, n, entries })
    }

    pub fn from_rows(rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().and_then(|r| r.first()).map_or(0, |t| t.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("colored matrix is not square".into()));
        }
        Self::new(m, n, rows.concat())
    }

    /// `A^{(m)}`: every entry uncolored.
    pub fn uncolored(a: &IntMatrix, m: usize) -> Self {
        let n = a.n();
        let entries = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut t = vec![0; m];
                t[m - 1] = a.get(i, j);
                t
            })
            .collect();
        ColoredMatrix { m, n, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tuple `𝐚_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &[usize] {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).take(self.n).collect()
    }

    /// `|𝔸|`.
    pub fn abs(&self) -> IntMatrix {
        IntMatrix::new(self.n, self.entries.iter().map(|t| t.iter().sum()).collect()).unwrap()
    }

    pub fn ro(&self) -> Composition {
        self.abs().ro()
    }

    pub fn co(&self) -> Composition {
        self.abs().co()
    }

    /// Index pairs in the column-major order ≼.
    pub fn column_major(&self) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|j| (1..=self.n).map(move |i| (i, j))).collect()
    }

    /// `𝒥 = {(i, j) : a^{(m)}_{ij} < |𝐚_{ij}|}`, in ≼ order.
    pub fn colored_positions(&self) -> Vec<(usize, usize)> {
        self.column_major()
            .into_iter()
            .filter(|&(i, j)| {
                let t = self.entry(i, j);
                t[self.m - 1] < t.iter().sum()
            })
            .collect()
    }

    /// `ã_{ij}`: sum of the entries of ν(|𝔸|) preceding `(i, j)`.
    pub fn offset(&self, i: usize, j: usize) -> usize {
        let mut acc = 0;
        for (a, b) in self.column_major() {
            if (a, b) == (i, j) {
                return acc;
            }
            acc += self.entry(a, b).iter().sum::<usize>();
        }
        unreachable!("({i}, {j}) outside the matrix")
    }

    /// `ν(𝔸)`: the tuples flattened in column-major order.
    pub fn nu(&self) -> Composition {
        Composition(self.column_major().into_iter().flat_map(|(i, j)| self.entry(i, j).to_vec()).collect())
    }

    /// `(𝐚̈₁₁, 𝐚̈₂₁, …)` in column-major order.
    pub fn a_ddot(&self) -> Vec<Vec<usize>> {
        self.column_major().into_iter().map(|(i, j)| perm::ddot(self.entry(i, j))).collect()
    }

    /// The representative `d_{|𝔸|} ∏_{(i,j)∈𝒥} ∏_k (t^{(k)}_{ij})^k`.
    ///
    /// Each factor `(t^{(k)}_{ij})^k` colors positions `a(i,j,k)+1, …,
    /// a(i,j,k)+a^{(k)}_{ij}` by `k`, with `a(i,j,k) = ã_{ij} + Σ_{x<k} a^{(x)}_{ij}`.
    pub fn double_coset_rep(&self) -> ColoredPerm {
        let (_, d, _) = perm::theta_inverse(&self.abs());
        let r = self.degree();
        let mut w = ColoredPerm::from_perm(self.m, d);
        for (i, j) in self.colored_positions() {
            let t = self.entry(i, j);
            let mut a = self.offset(i, j);
            for k in 1..self.m {
                for pos in a + 1..=a + t[k - 1] {
                    let ti = ColoredPerm::t(self.m, r, pos).unwrap();
                    for _ in 0..k {
                        w = w.mul(&ti).unwrap();
                    }
                }
                a += t[k - 1];
            }
        }
        w
    }
}

impl fmt::Debug for ColoredMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for ColoredMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Vec<usize>>>::deserialize(d)?;
        ColoredMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Default cap on enumeration sizes.
pub const DEFAULT_GUARD: u128 = 1_000_000;

/// `C(mn² + r − 1, r)`.
pub fn colored_count(m: usize, n: usize, r: usize) -> u128 {
    binomial((m * n * n + r) as u128 - 1, r as u128)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `m`-tuples of naturals summing to `s`.
fn tuples(m: usize, s: usize) -> Vec<Vec<usize>> {
    perm::compositions(m, s).into_iter().map(|c| c.0).collect()
}

/// `Θ_m(n, r)_{λ,μ}`.
pub fn enumerate_colored_slice(m: usize, lambda: &Composition, mu: &Composition) -> Vec<ColoredMatrix> {
    let n = lambda.len();
    let mut out = Vec::new();
    for a in perm::int_matrices(lambda, mu) {
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for (i, j) in (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))) {
            let options = tuples(m, a.get(i, j));
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |t| {
                        let mut q = p.clone();
                        q.push(t.clone());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|entries| ColoredMatrix { m, n, entries }));
    }
    out.sort();
    out
}

/// `Θ_m(n, r)`, grouped by `(λ, μ)` in lexicographic order; refuses past `guard`.
pub fn enumerate_colored(m: usize, n: usize, r: usize, guard: u128) -> Result<Vec<ColoredMatrix>> {
    if m == 0 {
        return Err(Error::Range("m must be at least 1".into()));
    }
    let count = colored_count(m, n, r);
    if count > guard {
        return Err(Error::Guard(format!("|Θ_{m}({n},{r})| = {count} exceeds the cap {guard}")));
    }
    let comps = perm::compositions(n, r);
    let mut out = Vec::new();
    for lambda in &comps {
        for mu in &comps {
            out.extend(enumerate_colored_slice(m, lambda, mu));
        }
    }
    Ok(out)
}

/// Fiber of `colored_matrix_of` over each matrix, for the whole group.
pub fn fibers(m: usize, lambda: &Composition, mu: &Composition) -> BTreeMap<ColoredMatrix, BTreeSet<ColoredPerm>> {
    let mut out: BTreeMap<ColoredMatrix, BTreeSet<ColoredPerm>> = BTreeMap::new();
    for w in all_colored_perms(m, lambda.degree()) {
        out.entry(w.colored_matrix(lambda, mu).unwrap()).or_default().insert(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn generator_relations() {
        for m in 1..=4 {
            let s0 = ColoredPerm::generator(m, 3, 0).unwrap();
            let mut x = ColoredPerm::identity(m, 3);
            for _ in 0..m {
                x = x.mul(&s0).unwrap();
            }
            assert!(x.is_identity());
            let lhs = ColoredPerm::from_word(m, 3, &[0, 1, 0, 1]).unwrap();
            let rhs = ColoredPerm::from_word(m, 3, &[1, 0, 1, 0]).unwrap();
            assert_eq!(lhs, rhs);
            let braid_l = ColoredPerm::from_word(m, 3, &[1, 2, 1]).unwrap();
            let braid_r = ColoredPerm::from_word(m, 3, &[2, 1, 2]).unwrap();
            assert_eq!(braid_l, braid_r);
            assert_eq!(ColoredPerm::from_word(m, 3, &[0, 2]).unwrap(), ColoredPerm::from_word(m, 3, &[2, 0]).unwrap());
        }
        let t2 = ColoredPerm::t(3, 3, 2).unwrap();
        assert_eq!(t2.colors(), vec![0, 1, 0]);
        assert!(t2.perm().is_identity());
    }

    #[test]
    fn inverse_is_inverse() {
        for w in all_colored_perms(3, 3) {
            assert!(w.mul(&w.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn matrix_examples() {
        let lam = comp(&[2, 1]);
        let id = ColoredPerm::identity(3, 3);
        let a = id.colored_matrix(&lam, &lam).unwrap();
        assert_eq!(a.rows(), vec![vec![vec![0, 0, 2], vec![0, 0, 0]], vec![vec![0, 0, 0], vec![0, 0, 1]]]);
        let s0 = ColoredPerm::generator(2, 1, 0).unwrap();
        assert_eq!(s0.colored_matrix(&comp(&[1]), &comp(&[1])).unwrap().rows(), vec![vec![vec![1, 0]]]);
        assert_eq!(fibers(2, &comp(&[2]), &comp(&[2])).len(), 3);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_colored(1, 1, 1, DEFAULT_GUARD).unwrap().len(), 1);
        assert_eq!(enumerate_colored(2, 2, 2, DEFAULT_GUARD).unwrap().len(), 36);
        assert_eq!(enumerate_colored(2, 2, 3, DEFAULT_GUARD).unwrap().len(), 120);
        assert!(enumerate_colored(3, 3, 4, 10).is_err());
    }

    #[test]
    fn example_5_10_representative() {
        let a = ColoredMatrix::from_rows(&[
            vec![vec![0, 0], vec![1, 0]],
            vec![vec![1, 1], vec![0, 0]],
        ])
        .unwrap();
        assert_eq!(a.nu(), comp(&[0, 0, 1, 1, 1, 0, 0, 0]));
        let w = a.double_coset_rep();
        let listed = ColoredPerm::from_word(2, 3, &[0, 1, 0, 2]).unwrap();
        let dc = colored_double_coset(&a.ro(), &w, &a.co());
        assert!(dc.contains(&listed));
        assert_eq!(w.colored_matrix(&a.ro(), &a.co()).unwrap(), a);
    }
}
