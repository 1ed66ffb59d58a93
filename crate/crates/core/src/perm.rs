//! Permutations, compositions, Young subgroups and the correspondence between
//! double cosets and integer matrices.
//!
//! Convention: a permutation is stored by its one-line images `w(1), …, w(r)`;
//! products compose as functions, `(xy)(k) = x(y(k))`. Hence `w·s_i` swaps
//! the entries in positions `i` and `i+1`, and the place permutation
//! `a·w = (a_{w(1)}, …, a_{w(r)})` is a right action: `a·(xy) = (a·x)·y`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank `r`.
pub const MAX_R: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    r: u8,
    img: [u8; MAX_R],
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        assert!(r <= MAX_R, "r = {r} exceeds the supported maximum {MAX_R}");
        let mut img = [0u8; MAX_R];
        for (k, slot) in img.iter_mut().enumerate().take(r) {
            *slot = k as u8 + 1;
        }
        Permutation { r: r as u8, img }
    }

    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let r = images.len();
        if r > MAX_R {
            return Err(Error::Range(format!("r = {r} exceeds {MAX_R}")));
        }
        let mut seen = [false; MAX_R + 1];
        let mut img = [0u8; MAX_R];
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v > r || seen[v] {
                return Err(Error::Contract(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
            img[k] = v as u8;
        }
        Ok(Permutation { r: r as u8, img })
    }

    /// `s_{i_1} ⋯ s_{i_l}` in `S_r`.
    pub fn from_word(r: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(r);
        for &i in word {
            if i == 0 || i >= r {
                return Err(Error::Range(format!("s{i} is not a generator of S_{r}")));
            }
            w = w.mul_s(i);
        }
        Ok(w)
    }

    pub fn simple(r: usize, i: usize) -> Result<Self> {
        Self::from_word(r, &[i])
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img[..self.r()].iter().map(|&v| v as usize).collect()
    }

    /// `w(k)` for 1-based `k`.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.r())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.r, other.r, "composing permutations of different degree");
        let mut img = [0u8; MAX_R];
        for k in 0..self.r() {
            img[k] = self.img[other.img[k] as usize - 1];
        }
        Permutation { r: self.r, img }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = [0u8; MAX_R];
        for k in 0..self.r() {
            img[self.img[k] as usize - 1] = k as u8 + 1;
        }
        Permutation { r: self.r, img }
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let r = self.r();
        let mut n = 0;
        for a in 0..r {
            for b in a + 1..r {
                if self.img[a] > self.img[b] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `w·s_i`: swap positions `i`, `i+1`.
    #[inline]
    pub fn mul_s(&self, i: usize) -> Permutation {
        let mut out = *self;
        out.img.swap(i - 1, i);
        out
    }

    /// `s_i·w`: swap the values `i`, `i+1`.
    pub fn s_mul(&self, i: usize) -> Permutation {
        let mut out = *self;
        for v in out.img[..self.r()].iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        out
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`.
    #[inline]
    pub fn right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` precedes `i` in one-line notation.
    pub fn left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..self.r()).find(|&i| w.left_descent(i)) {
            word.push(i);
            w = w.s_mul(i);
        }
        word
    }

    /// Place permutation `a·w = (a_{w(1)}, …, a_{w(r)})`.
    pub fn act<T: Copy>(&self, a: &[T]) -> Vec<T> {
        (0..self.r()).map(|k| a[self.img[k] as usize - 1]).collect()
    }

    /// Subword test for the Bruhat order `self ≤ other`.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        // tableau criterion: sorted prefixes compare entrywise
        let r = self.r();
        for k in 1..=r {
            let mut a: Vec<u8> = self.img[..k].to_vec();
            let mut b: Vec<u8> = other.img[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// All of `S_r`, in lexicographic one-line order.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(Permutation::from_one_line(&cur).unwrap());
        // next lexicographic permutation
        let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// `R_i` as a 0-based half-open range of positions (1-based `i`).
    pub fn block(&self, i: usize) -> Range<usize> {
        let start: usize = self.0[..i - 1].iter().sum();
        start..start + self.0[i - 1]
    }

    /// Block index (1-based) of the 1-based position `k`.
    pub fn block_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (i, &p) in self.0.iter().enumerate() {
            acc += p;
            if k <= acc {
                return i + 1;
            }
        }
        panic!("position {k} beyond the degree {}", acc)
    }

    /// `(r)`.
    pub fn full(r: usize) -> Self {
        Composition(vec![r])
    }

    /// `(1, …, 1)`.
    pub fn ones(r: usize) -> Self {
        Composition(vec![1; r])
    }

    /// `ω = (1^r, 0^{n−r})`, for `n ≥ r`.
    pub fn omega(n: usize, r: usize) -> Result<Self> {
        if n < r {
            return Err(Error::Range(format!("ω needs n ≥ r, got n = {n}, r = {r}")));
        }
        let mut v = vec![1; r];
        v.resize(n, 0);
        Ok(Composition(v))
    }

    /// Generators `i` with `s_i ∈ 𝔖_λ`.
    pub fn j_set(&self) -> BTreeSet<usize> {
        j_set(self)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `Λ(n, r)`: compositions of `r` into `n` parts, in lexicographic order.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=left {
            cur.push(p);
            rec(n, left - p, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        if r == 0 {
            out.push(Composition(vec![]));
        }
        return out;
    }
    rec(n, r, &mut cur, &mut out);
    out
}

/// `Λ(k, <m)`: vectors in ℕ^k with sum at most `m − 1`.
pub fn bounded_vectors(k: usize, m: usize) -> Vec<Vec<usize>> {
    (0..m).flat_map(|s| compositions(k, s)).map(|c| c.0).collect()
}

/// `J_λ = {i ∈ [1, r−1] : i is not a partial sum λ₁+…+λ_s, s < n}`.
pub fn j_set(lambda: &Composition) -> BTreeSet<usize> {
    let r = lambda.degree();
    let n = lambda.len();
    let mut cuts = BTreeSet::new();
    let mut acc = 0;
    for &p in &lambda.0[..n.saturating_sub(1)] {
        acc += p;
        cuts.insert(acc);
    }
    (1..r).filter(|i| !cuts.contains(i)).collect()
}

/// All elements of the Young subgroup 𝔖_λ.
pub fn young_subgroup(lambda: &Composition) -> Vec<Permutation> {
    let r = lambda.degree();
    let mut out = vec![Permutation::identity(r)];
    for i in 1..=lambda.len() {
        let block = lambda.block(i);
        let local = all_permutations(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for w in &out {
            for p in &local {
                let mut img = w.one_line();
                for (t, pos) in block.clone().enumerate() {
                    img[pos] = block.start + p.apply(t + 1);
                }
                next.push(Permutation::from_one_line(&img).unwrap());
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// `d ∈ 𝒟_λ`: `d` is shortest in `𝔖_λ d`.
pub fn is_distinguished_right(d: &Permutation, lambda: &Composition) -> bool {
    j_set(lambda).iter().all(|&i| !d.left_descent(i))
}

fn sort_by_length(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort_by_key(|w| (w.length(), *w));
    v
}

/// 𝒟_λ, by scanning every right coset `𝔖_λ w` and keeping its shortest member.
pub fn coset_reps(lambda: &Composition) -> Vec<Permutation> {
    let r = lambda.degree();
    let sub = young_subgroup(lambda);
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for w in all_permutations(r) {
        if seen.contains(&w) {
            continue;
        }
        let coset: Vec<Permutation> = sub.iter().map(|u| u.compose(&w)).collect();
        let best = *coset.iter().min_by_key(|x| (x.length(), **x)).unwrap();
        seen.extend(coset);
        reps.push(best);
    }
    sort_by_length(reps)
}

/// The double coset `𝔖_λ w 𝔖_μ` as a sorted list.
pub fn double_coset(lambda: &Composition, w: &Permutation, mu: &Composition) -> Vec<Permutation> {
    let left = young_subgroup(lambda);
    let right = young_subgroup(mu);
    let mut set = BTreeSet::new();
    for u in &left {
        let uw = u.compose(w);
        for v in &right {
            set.insert(uw.compose(v));
        }
    }
    set.into_iter().collect()
}

/// 𝒟_{λ,μ}, one shortest element per double coset, found by scanning.
pub fn double_coset_reps(lambda: &Composition, mu: &Composition) -> Vec<Permutation> {
    let r = lambda.degree();
    assert_eq!(r, mu.degree(), "compositions of different degree");
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for w in all_permutations(r) {
        if seen.contains(&w) {
            continue;
        }
        let coset = double_coset(lambda, &w, mu);
        let best = *coset.iter().min_by_key(|x| (x.length(), **x)).unwrap();
        seen.extend(coset);
        reps.push(best);
    }
    sort_by_length(reps)
}

/// Square matrix of naturals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for a {n}×{n} matrix", entries.len())));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        Ok(IntMatrix { n, entries: rows.concat() })
    }

    pub fn diag(lambda: &Composition) -> Self {
        let n = lambda.len();
        let mut entries = vec![0; n * n];
        for (i, &p) in lambda.0.iter().enumerate() {
            entries[i * n + i] = p;
        }
        IntMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).take(self.n).collect()
    }

    pub fn ro(&self) -> Composition {
        Composition((1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).sum()).collect())
    }

    pub fn co(&self) -> Composition {
        Composition((1..=self.n).map(|j| (1..=self.n).map(|i| self.get(i, j)).sum()).collect())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        IntMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `Θ(n, r)_{λ,μ}`: matrices with row sums λ and column sums μ.
pub fn int_matrices(lambda: &Composition, mu: &Composition) -> Vec<IntMatrix> {
    let n = lambda.len();
    assert_eq!(n, mu.len(), "λ and μ must have the same number of parts");
    let mut out = Vec::new();
    let mut entries = vec![0; n * n];
    let mut col_left = mu.0.clone();
    fn rec(
        idx: usize,
        n: usize,
        row_left: usize,
        lambda: &[usize],
        col_left: &mut [usize],
        entries: &mut [usize],
        out: &mut Vec<IntMatrix>,
    ) {
        if idx == n * n {
            if col_left.iter().all(|&c| c == 0) {
                out.push(IntMatrix { n, entries: entries.to_vec() });
            }
            return;
        }
        let (i, j) = (idx / n, idx % n);
        if j == n - 1 {
            // last entry of the row is forced
            if row_left <= col_left[j] {
                entries[idx] = row_left;
                col_left[j] -= row_left;
                let next_row = if i + 1 < n { lambda[i + 1] } else { 0 };
                rec(idx + 1, n, next_row, lambda, col_left, entries, out);
                col_left[j] += row_left;
            }
            return;
        }
        for v in 0..=row_left.min(col_left[j]) {
            entries[idx] = v;
            col_left[j] -= v;
            rec(idx + 1, n, row_left - v, lambda, col_left, entries, out);
            col_left[j] += v;
        }
    }
    if n == 0 {
        return vec![IntMatrix { n: 0, entries: vec![] }];
    }
    rec(0, n, lambda.0[0], &lambda.0, &mut col_left, &mut entries, &mut out);
    out
}

/// `θ(λ, d, μ)_{ij} = |R_i^λ ∩ d(R_j^μ)|`.
pub fn theta(lambda: &Composition, d: &Permutation, mu: &Composition) -> Result<IntMatrix> {
    if !is_distinguished_right(d, lambda) || !is_distinguished_right(&d.inverse(), mu) {
        return Err(Error::Contract(format!("{d:?} is not in 𝒟_{{{lambda:?},{mu:?}}}")));
    }
    Ok(theta_unchecked(lambda, d, mu))
}

/// The same counts for an arbitrary `d`.
pub fn theta_unchecked(lambda: &Composition, d: &Permutation, mu: &Composition) -> IntMatrix {
    let n = lambda.len();
    let mut entries = vec![0; n * n];
    for j in 1..=n {
        for k in mu.block(j) {
            let i = lambda.block_of(d.apply(k + 1));
            entries[(i - 1) * n + (j - 1)] += 1;
        }
    }
    IntMatrix { n, entries }
}

/// `(ro(A), d_A, co(A))`. Within each column block of μ the positions are sent,
/// in increasing order, to rows `1, …, n` in turn; within each row block of λ
/// the targets are filled in increasing order of columns.
pub fn theta_inverse(a: &IntMatrix) -> (Composition, Permutation, Composition) {
    let (lambda, mu) = (a.ro(), a.co());
    let n = a.n();
    let r = a.degree();
    let mut next_target: Vec<usize> = (1..=n).map(|i| lambda.block(i).start + 1).collect();
    let mut img = vec![0; r];
    for j in 1..=n {
        let mut pos = mu.block(j).start;
        for i in 1..=n {
            for _ in 0..a.get(i, j) {
                img[pos] = next_target[i - 1];
                next_target[i - 1] += 1;
                pos += 1;
            }
        }
    }
    (lambda, Permutation::from_one_line(&img).unwrap(), mu)
}

/// Column-major read-out `(a₁₁, …, a_{n1}, a₁₂, …, a_{nn})`.
pub fn nu_of(a: &IntMatrix) -> Composition {
    let n = a.n();
    Composition((1..=n).flat_map(|j| (1..=n).map(move |i| (i, j))).map(|(i, j)| a.get(i, j)).collect())
}

/// `(b₁−b₂, …, b_{k−1}−b_k, b_k)` with `b_i = #{t < m : λ₁+…+λ_t ≥ i}`, for λ
/// with `m` parts and degree `k`.
pub fn ddot(lambda: &[usize]) -> Vec<usize> {
    let m = lambda.len();
    let k: usize = lambda.iter().sum();
    let partial: Vec<usize> = lambda
        .iter()
        .take(m.saturating_sub(1))
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let b: Vec<usize> = (1..=k).map(|i| partial.iter().filter(|&&s| s >= i).count()).collect();
    (0..k).map(|i| if i + 1 < k { b[i] - b[i + 1] } else { b[i] }).collect()
}

/// Factorisation `w = u·d·v` with `u ∈ 𝔖_λ`, `v ∈ 𝒟_{ν(d)} ∩ 𝔖_μ`, indexed by `w`.
pub fn udv_factorisations(
    lambda: &Composition,
    d: &Permutation,
    mu: &Composition,
) -> BTreeMap<Permutation, Vec<(Permutation, Permutation)>> {
    let nu = nu_of(&theta_unchecked(lambda, d, mu));
    let vs: Vec<Permutation> =
        coset_reps(&nu).into_iter().filter(|v| young_subgroup(mu).contains(v)).collect();
    let mut out: BTreeMap<Permutation, Vec<(Permutation, Permutation)>> = BTreeMap::new();
    for u in young_subgroup(lambda) {
        for v in &vs {
            out.entry(u.compose(d).compose(v)).or_default().push((u, *v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(p(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(p(&[2, 1, 3]).reduced_word(), vec![1]);
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word).unwrap(), w);
        }
    }

    #[test]
    fn place_permutation_is_a_right_action() {
        let a = [10, 20, 30, 40];
        for x in all_permutations(4) {
            for y in all_permutations(4).iter().step_by(5) {
                assert_eq!(x.compose(y).act(&a), y.act(&x.act(&a)));
            }
        }
        // a·s_i swaps the entries i and i+1
        assert_eq!(Permutation::simple(4, 2).unwrap().act(&a), vec![10, 30, 20, 40]);
    }

    #[test]
    fn coset_counts() {
        assert_eq!(coset_reps(&comp(&[3])), vec![Permutation::identity(3)]);
        assert_eq!(coset_reps(&comp(&[1, 1, 1])).len(), 6);
        assert_eq!(coset_reps(&comp(&[2, 1])).len(), 3);
        for lam in compositions(3, 4) {
            let reps = coset_reps(&lam);
            assert!(reps.iter().all(|d| is_distinguished_right(d, &lam)));
        }
    }

    #[test]
    fn j_sets() {
        assert_eq!(j_set(&comp(&[3])), [1, 2].into_iter().collect());
        assert!(j_set(&comp(&[1, 1, 1])).is_empty());
        assert_eq!(j_set(&comp(&[2, 1])), [1].into_iter().collect());
        assert_eq!(j_set(&comp(&[0, 2, 0, 1])), [1].into_iter().collect());
    }

    #[test]
    fn theta_examples() {
        let (l, m) = (comp(&[1, 2]), comp(&[2, 1]));
        let a = theta(&l, &Permutation::identity(3), &m).unwrap();
        assert_eq!(a.rows(), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(theta_inverse(&a), (l, Permutation::identity(3), m));
        assert_eq!(nu_of(&a), comp(&[1, 1, 0, 1]));
        let big = IntMatrix::from_rows(&[vec![3, 3], vec![2, 3]]).unwrap();
        assert_eq!(nu_of(&big), comp(&[3, 2, 3, 3]));
        assert!(theta(&comp(&[2]), &p(&[2, 1]), &comp(&[2])).is_err());
    }

    #[test]
    fn ddot_examples() {
        assert_eq!(ddot(&[2, 3, 1]), vec![0, 1, 0, 0, 1, 0]);
        assert_eq!(ddot(&[0, 0, 4]), vec![0, 0, 0, 0]);
        assert_eq!(ddot(&[2, 3]), vec![0, 1, 0, 0, 0]);
    }

    #[test]
    fn bruhat_subword() {
        assert!(Permutation::identity(3).bruhat_le(&p(&[3, 2, 1])));
        assert!(!p(&[3, 2, 1]).bruhat_le(&p(&[2, 1, 3])));
    }
}
