//! The slim cyclotomic q-Schur algebra 𝒮_u(n, r) = End(⊕_λ x_λ ℋ) in the
//! basis {Φ_𝔸 : 𝔸 ∈ Θ_m(n, r)}.
//!
//! `Φ_𝔸` sends `x_μ h ↦ 𝔟_𝔸 h` for `μ = co(|𝔸|)` and kills the other summands,
//! so `Φ_𝔸 Φ_𝔹` is the map `x_{co 𝔹} h ↦ 𝔟_𝔸 h' h`, where `𝔟_𝔹 = x_{co 𝔸} h'`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::affine::{AffineAlgebra, AffineElement};
use crate::colored::{self, ColoredMatrix, DEFAULT_GUARD};
use crate::error::{Error, Result};
use crate::hecke::{AkAlgebra, Exps, HeckeElement, Side};
use crate::linalg::{self, RingMatrix};
use crate::modp::{self, ModPoint};
use crate::perm::{self, Composition, IntMatrix, Permutation};
use crate::ring::RingElem;

/// Ingredients of `𝔟_𝔸 = x_λ T_d σ^{𝔸̈} Σ_{v ∈ 𝒟_ν ∩ 𝔖_μ} T_v`.
#[derive(Clone, Debug)]
pub struct BParts {
    pub lambda: Composition,
    pub mu: Composition,
    pub d: Permutation,
    pub nu: Composition,
    pub a_ddot: Vec<Vec<usize>>,
    pub vs: Vec<Permutation>,
}

pub fn b_parts(a: &ColoredMatrix) -> BParts {
    let abs = a.abs();
    let (lambda, d, mu) = perm::theta_inverse(&abs);
    let nu = perm::nu_of(&abs);
    let vs = perm::young_subgroup(&mu)
        .into_iter()
        .filter(|v| perm::is_distinguished_right(v, &nu))
        .collect();
    BParts { lambda, mu, d, nu, a_ddot: a.a_ddot(), vs }
}

/// `𝔟_𝔸` in ℋ_u(r).
pub fn b_element(h: &AkAlgebra, a: &ColoredMatrix) -> Result<HeckeElement> {
    if a.m() != h.m() || a.degree() != h.r() {
        return Err(Error::Dimension("colored matrix does not match the algebra".into()));
    }
    let p = b_parts(a);
    let left = h.right_mul_word(&h.x_lambda(&p.lambda)?, &p.d.reduced_word());
    let sigma = h.sigma_nu(&p.nu, &p.a_ddot)?;
    let sum = h.from_terms(p.vs.iter().map(|v| (*v, Exps::zero(h.r()), h.ring_one())))?;
    let ls = h.multiply(&left, &sigma)?;
    h.multiply(&ls, &sum)
}

/// `𝔟^Δ_𝔸`: the same product with `X_j` in place of `L_j`.
pub fn b_element_affine(aff: &AffineAlgebra, a: &ColoredMatrix) -> Result<AffineElement> {
    if a.m() != aff.m() || a.degree() != aff.r() {
        return Err(Error::Dimension("colored matrix does not match the algebra".into()));
    }
    let p = b_parts(a);
    let left = aff.right_mul_word(&aff.x_lambda(&p.lambda)?, &p.d.reduced_word());
    let sigma = aff.sigma_nu(&p.nu, &p.a_ddot)?;
    let mut sum = aff.zero();
    for v in &p.vs {
        sum = sum.add(&aff.t_perm(*v));
    }
    aff.multiply(&aff.multiply(&left, &sigma)?, &sum)
}

/// `Σ c_𝔸 Φ_𝔸`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement {
    m: usize,
    n: usize,
    r: usize,
    coords: BTreeMap<ColoredMatrix, RingElem>,
}

impl SchurElement {
    pub fn zero(m: usize, n: usize, r: usize) -> Self {
        SchurElement { m, n, r, coords: BTreeMap::new() }
    }

    pub fn coords(&self) -> &BTreeMap<ColoredMatrix, RingElem> {
        &self.coords
    }

    pub fn coeff(&self, a: &ColoredMatrix) -> RingElem {
        self.coords.get(a).cloned().unwrap_or_else(|| RingElem::zero(self.m))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &SchurElement) -> SchurElement {
        let mut coords = self.coords.clone();
        for (k, v) in &other.coords {
            let e = coords.entry(k.clone()).or_insert_with(|| RingElem::zero(self.m));
            *e += v;
            if e.is_zero() {
                coords.remove(k);
            }
        }
        SchurElement { coords, ..self.shape() }
    }

    pub fn scale(&self, c: &RingElem) -> SchurElement {
        let coords = self
            .coords
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SchurElement { coords, ..self.shape() }
    }

    pub fn sub(&self, other: &SchurElement) -> SchurElement {
        self.add(&other.scale(&-RingElem::one(self.m)))
    }

    fn shape(&self) -> SchurElement {
        SchurElement::zero(self.m, self.n, self.r)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .coords
            .iter()
            .map(|(a, c)| serde_json::json!({ "matrix": a, "poly": c }))
            .collect();
        serde_json::json!({ "m": self.m, "n": self.n, "r": self.r, "terms": terms })
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coords.iter().map(|(a, c)| format!("({c})·Φ{a:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Linear maps `h ↦ T_i h − q h` and `h ↦ h T_i − q h` on ℋ as sparse triples
/// `(row, col, entry)` over the PBW basis.
struct EigenMaps {
    size: usize,
    left: Vec<Vec<(usize, usize, RingElem)>>,
    right: Vec<Vec<(usize, usize, RingElem)>>,
}

/// Blockwise rank certificate.
#[derive(Clone, Debug, Serialize)]
pub struct BlockRank {
    pub lambda: Composition,
    pub mu: Composition,
    pub size: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub count: usize,
    pub expected: u128,
    pub blocks: Vec<BlockRank>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutativeReport {
    pub m: usize,
    pub r: usize,
    pub basis: usize,
    pub pairs: usize,
    pub failures: Vec<(ColoredMatrix, ColoredMatrix)>,
    pub pass: bool,
}

/// A structure-constant table, `Φ_a Φ_b = Σ_k c_k Φ_k` over basis indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureTable {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub basis: Vec<ColoredMatrix>,
    pub structure: Vec<StructureEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub a: usize,
    pub b: usize,
    pub coords: Vec<StructureCoord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureCoord {
    pub k: usize,
    pub poly: serde_json::Value,
}

/// Everything about one 𝒮_u(n, r), with 𝔟-elements and products memoised.
pub struct SchurContext {
    m: usize,
    n: usize,
    r: usize,
    alg: AkAlgebra,
    basis: Vec<ColoredMatrix>,
    index: HashMap<ColoredMatrix, usize>,
    blocks: BTreeMap<(Composition, Composition), Vec<usize>>,
    b: Vec<OnceLock<HeckeElement>>,
    products: Mutex<HashMap<(usize, usize), Arc<Vec<(usize, RingElem)>>>>,
    eigen: OnceLock<EigenMaps>,
    seed: u64,
}

impl fmt::Debug for SchurContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurContext(m={}, n={}, r={})", self.m, self.n, self.r)
    }
}

impl SchurContext {
    pub fn new(m: usize, n: usize, r: usize) -> Result<Self> {
        Self::with_guard(m, n, r, DEFAULT_GUARD)
    }

    pub fn with_guard(m: usize, n: usize, r: usize, guard: u128) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("n must be at least 1".into()));
        }
        let alg = AkAlgebra::new(m, r)?;
        let basis = colored::enumerate_colored(m, n, r, guard)?;
        let index = basis.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let mut blocks: BTreeMap<(Composition, Composition), Vec<usize>> = BTreeMap::new();
        for (i, a) in basis.iter().enumerate() {
            blocks.entry((a.ro(), a.co())).or_default().push(i);
        }
        let b = (0..basis.len()).map(|_| OnceLock::new()).collect();
        Ok(SchurContext {
            m,
            n,
            r,
            alg,
            basis,
            index,
            blocks,
            b,
            products: Mutex::new(HashMap::new()),
            eigen: OnceLock::new(),
            seed: 0x5c4a,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn algebra(&self) -> &AkAlgebra {
        &self.alg
    }

    pub fn basis(&self) -> &[ColoredMatrix] {
        &self.basis
    }

    pub fn compositions(&self) -> Vec<Composition> {
        perm::compositions(self.n, self.r)
    }

    pub fn index_of(&self, a: &ColoredMatrix) -> Result<usize> {
        self.index
            .get(a)
            .copied()
            .ok_or_else(|| Error::Range(format!("{a:?} is not in Θ_{}({},{})", self.m, self.n, self.r)))
    }

    /// Indices of `Θ_m(n, r)_{λ,μ}`.
    pub fn block(&self, lambda: &Composition, mu: &Composition) -> &[usize] {
        self.blocks.get(&(lambda.clone(), mu.clone())).map_or(&[], |v| v.as_slice())
    }

    /// `𝔟` of the basis element with index `i`.
    pub fn b(&self, i: usize) -> Result<&HeckeElement> {
        if let Some(x) = self.b[i].get() {
            return Ok(x);
        }
        let x = b_element(&self.alg, &self.basis[i])?;
        Ok(self.b[i].get_or_init(|| x))
    }

    /// `{𝔟_𝔸 : 𝔸 ∈ Θ_m(n, r)_{λ,μ}}`.
    pub fn hom_basis(&self, lambda: &Composition, mu: &Composition) -> Result<Vec<(ColoredMatrix, HeckeElement)>> {
        self.block(lambda, mu)
            .iter()
            .map(|&i| Ok((self.basis[i].clone(), self.b(i)?.clone())))
            .collect()
    }

    /// Coordinates of `h ∈ x_λℋ ∩ ℋx_μ` over the block basis, as basis indices.
    pub fn hom_coords(&self, lambda: &Composition, mu: &Composition, h: &HeckeElement) -> Result<Vec<(usize, RingElem)>> {
        let idx = self.block(lambda, mu);
        if h.is_zero() {
            return Ok(vec![]);
        }
        if idx.is_empty() {
            return Err(Error::NotInModule(format!("no basis for ({lambda:?}, {mu:?})")));
        }
        let cols = idx.iter().map(|&i| self.b(i).map(|x| x.terms())).collect::<Result<Vec<_>>>()?;
        let coeffs = linalg::solve_exact(&cols, h.terms(), self.m, self.seed).map_err(|e| match e {
            Error::NotInModule(msg) => Error::Internal(format!("re-expression failed: {msg}")),
            other => other,
        })?;
        Ok(idx.iter().copied().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// `Φ_a Φ_b` over basis indices.
    pub fn basis_product(&self, a: usize, b: usize) -> Result<Arc<Vec<(usize, RingElem)>>> {
        if let Some(v) = self.products.lock().unwrap().get(&(a, b)) {
            return Ok(v.clone());
        }
        let out = Arc::new(self.compute_product(a, b)?);
        self.products.lock().unwrap().insert((a, b), out.clone());
        Ok(out)
    }

    fn compute_product(&self, a: usize, b: usize) -> Result<Vec<(usize, RingElem)>> {
        let (aa, bb) = (&self.basis[a], &self.basis[b]);
        if aa.co() != bb.ro() {
            return Ok(vec![]);
        }
        let coords = self.alg.module_coords(self.b(b)?, &aa.co(), Side::Left)?;
        let h = self.alg.from_terms(coords.into_iter().map(|((w, x), c)| (w, x, c)))?;
        let prod = self.alg.multiply(self.b(a)?, &h)?;
        self.hom_coords(&aa.ro(), &bb.co(), &prod)
    }

    fn check(&self, x: &SchurElement) -> Result<()> {
        if (x.m, x.n, x.r) != (self.m, self.n, self.r) {
            return Err(Error::Dimension(format!(
                "element of 𝒮(m={}, n={}, r={}) used in 𝒮(m={}, n={}, r={})",
                x.m, x.n, x.r, self.m, self.n, self.r
            )));
        }
        Ok(())
    }

    /// `x ∘ y`.
    pub fn multiply(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (a, ca) in &x.coords {
            let ia = self.index_of(a)?;
            for (b, cb) in &y.coords {
                let ib = self.index_of(b)?;
                let cab = ca * cb;
                for (k, c) in self.basis_product(ia, ib)?.iter() {
                    let e = out.coords.entry(self.basis[*k].clone()).or_insert_with(|| RingElem::zero(self.m));
                    *e += &(&cab * c);
                }
            }
        }
        out.coords.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn zero(&self) -> SchurElement {
        SchurElement::zero(self.m, self.n, self.r)
    }

    pub fn from_coords(&self, coords: impl IntoIterator<Item = (ColoredMatrix, RingElem)>) -> Result<SchurElement> {
        let mut out = self.zero();
        for (a, c) in coords {
            self.index_of(&a)?;
            out = out.add(&SchurElement { coords: BTreeMap::from([(a, c)]), ..self.zero() });
        }
        Ok(out)
    }

    /// `Φ_𝔸`.
    pub fn phi(&self, a: &ColoredMatrix) -> Result<SchurElement> {
        self.from_coords([(a.clone(), RingElem::one(self.m))])
    }

    /// `𝔩_λ = Φ_{diag(λ)^{(m)}}`.
    pub fn idempotent(&self, lambda: &Composition) -> Result<SchurElement> {
        if lambda.len() != self.n || lambda.degree() != self.r {
            return Err(Error::Range(format!("{lambda:?} is not in Λ({}, {})", self.n, self.r)));
        }
        self.phi(&ColoredMatrix::uncolored(&IntMatrix::diag(lambda), self.m))
    }

    /// `Σ_λ 𝔩_λ`.
    pub fn identity(&self) -> Result<SchurElement> {
        let mut acc = self.zero();
        for lambda in self.compositions() {
            acc = acc.add(&self.idempotent(&lambda)?);
        }
        Ok(acc)
    }

    /// `Φ_{λ,μ} = Φ_{A^{(m)}}` with `A = θ(λ, 1, μ)`.
    pub fn phi_lambda_mu(&self, lambda: &Composition, mu: &Composition) -> Result<SchurElement> {
        let a = perm::theta(lambda, &Permutation::identity(self.r), mu)?;
        self.embed_q_schur(&a)
    }

    /// `φ_A ↦ Φ_{A^{(m)}}`.
    pub fn embed_q_schur(&self, a: &IntMatrix) -> Result<SchurElement> {
        self.phi(&ColoredMatrix::uncolored(a, self.m))
    }

    /// Lifts an element of the `m = 1` algebra along the embedding.
    pub fn embed_element(&self, x: &SchurElement) -> Result<SchurElement> {
        if x.m != 1 || x.n != self.n || x.r != self.r {
            return Err(Error::Dimension("expected an element of 𝒮(1, n, r)".into()));
        }
        let mut coords = Vec::new();
        for (a, c) in &x.coords {
            coords.push((ColoredMatrix::uncolored(&a.abs(), self.m), c.widen(self.m)?));
        }
        self.from_coords(coords)
    }

    /// Rank of the `(λ, μ)` block of 𝔟-coefficients over `trials` specializations.
    pub fn block_rank(&self, lambda: &Composition, mu: &Composition, trials: usize, seed: u64) -> Result<usize> {
        let idx = self.block(lambda, mu);
        let rows = idx.iter().map(|&i| self.b(i).map(|x| x.terms())).collect::<Result<Vec<_>>>()?;
        let mat = RingMatrix::from_sparse_rows(&rows, self.m);
        Ok(linalg::modular_rank(&mat, trials, seed))
    }

    pub fn verify_rank(&self, trials: usize, seed: u64) -> Result<RankReport> {
        let comps = self.compositions();
        let pairs: Vec<(Composition, Composition)> =
            comps.iter().flat_map(|l| comps.iter().map(move |u| (l.clone(), u.clone()))).collect();
        let blocks = pairs
            .par_iter()
            .map(|(l, u)| {
                Ok(BlockRank {
                    lambda: l.clone(),
                    mu: u.clone(),
                    size: self.block(l, u).len(),
                    rank: self.block_rank(l, u, trials, seed)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let expected = colored::colored_count(self.m, self.n, self.r);
        let pass = self.basis.len() as u128 == expected && blocks.iter().all(|b| b.rank == b.size);
        Ok(RankReport { m: self.m, n: self.n, r: self.r, count: self.basis.len(), expected, blocks, pass })
    }

    fn eigen_maps(&self) -> &EigenMaps {
        self.eigen.get_or_init(|| {
            let idx = self.alg.basis_indices();
            let pos: HashMap<(Permutation, Exps), usize> = idx.iter().enumerate().map(|(i, k)| (*k, i)).collect();
            let q = self.alg.q();
            let build = |side: Side, i: usize| {
                let mut out = Vec::new();
                for (col, (w, a)) in idx.iter().enumerate() {
                    let e = self.alg.basis_element(*w, *a, self.alg.ring_one());
                    let img = match side {
                        Side::Left => self.alg.left_mul_t(i, &e),
                        Side::Right => self.alg.right_mul_t(&e, i),
                    };
                    let img = img.sub(&e.scale(&q));
                    for (v, b, c) in img.iter() {
                        out.push((pos[&(*v, *b)], col, c.clone()));
                    }
                }
                out
            };
            let gens: Vec<usize> = (1..self.r).collect();
            EigenMaps {
                size: idx.len(),
                left: gens.iter().map(|&i| build(Side::Left, i)).collect(),
                right: gens.iter().map(|&i| build(Side::Right, i)).collect(),
            }
        })
    }

    /// Dimension of `{h : T_i h = q h (i ∈ J_λ), h T_j = q h (j ∈ J_μ)}` at
    /// each of `trials` random specializations.
    pub fn eigen_dimensions(&self, lambda: &Composition, mu: &Composition, trials: usize, seed: u64) -> Vec<usize> {
        let maps = self.eigen_maps();
        let n = maps.size;
        let chosen: Vec<&Vec<(usize, usize, RingElem)>> = perm::j_set(lambda)
            .into_iter()
            .map(|i| &maps.left[i - 1])
            .chain(perm::j_set(mu).into_iter().map(|j| &maps.right[j - 1]))
            .collect();
        (0..trials.max(1))
            .map(|t| {
                let pt = ModPoint::seeded(self.m, seed, t as u64);
                let mut rows = vec![vec![0u64; n]; chosen.len() * n];
                for (k, map) in chosen.iter().enumerate() {
                    for (row, col, c) in map.iter() {
                        let cell = &mut rows[k * n + row][*col];
                        *cell = modp::add(*cell, c.eval_mod(&pt));
                    }
                }
                n - modp::rank(rows)
            })
            .collect()
    }

    /// Every pair in `Θ_m(1, r)` commutes; only meaningful for `n = 1`.
    pub fn verify_commutative(&self) -> Result<CommutativeReport> {
        if self.n != 1 {
            return Err(Error::Range("commutativity is checked on 𝒮_u(1, r)".into()));
        }
        let k = self.basis.len();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let failures = pairs
            .par_iter()
            .map(|&(i, j)| {
                let ij = self.basis_product(i, j)?;
                let ji = self.basis_product(j, i)?;
                Ok(if ij != ji { Some((self.basis[i].clone(), self.basis[j].clone())) } else { None })
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect::<Vec<_>>();
        Ok(CommutativeReport {
            m: self.m,
            r: self.r,
            basis: k,
            pairs: pairs.len(),
            pass: failures.is_empty(),
            failures,
        })
    }

    /// All nonzero products of basis elements, computed in parallel.
    pub fn structure_table(&self) -> Result<StructureTable> {
        let k = self.basis.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .filter(|&(a, b)| self.basis[a].co() == self.basis[b].ro())
            .collect();
        let structure = pairs
            .par_iter()
            .map(|&(a, b)| {
                let coords = self
                    .basis_product(a, b)?
                    .iter()
                    .map(|(k, c)| StructureCoord { k: *k, poly: serde_json::to_value(c).unwrap() })
                    .collect();
                Ok(StructureEntry { a, b, coords })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StructureTable { m: self.m, n: self.n, r: self.r, basis: self.basis.clone(), structure })
    }

    /// Seeds the product memo from a table, after checking it matches this context.
    pub fn load_table(&self, table: &StructureTable) -> Result<()> {
        if (table.m, table.n, table.r) != (self.m, self.n, self.r) || table.basis != self.basis {
            return Err(Error::Parse("table belongs to a different algebra".into()));
        }
        let mut memo = self.products.lock().unwrap();
        for e in &table.structure {
            if e.a >= self.basis.len() || e.b >= self.basis.len() {
                return Err(Error::Parse("table index out of range".into()));
            }
            let coords = e
                .coords
                .iter()
                .map(|c| {
                    if c.k >= self.basis.len() {
                        return Err(Error::Parse("table index out of range".into()));
                    }
                    Ok((c.k, RingElem::from_json(&c.poly, self.m)?))
                })
                .collect::<Result<Vec<_>>>()?;
            memo.insert((e.a, e.b), Arc::new(coords));
        }
        Ok(())
    }

    /// Coordinates of `𝔟_𝔸` in the left module `x_λℋ`, for the coefficient
    /// symmetry check at `λ = μ = (r)`.
    pub fn symmetric_coords(&self, i: usize) -> Result<BTreeMap<Exps, RingElem>> {
        let full = Composition::full(self.r);
        let coords = self.alg.module_coords(self.b(i)?, &full, Side::Left)?;
        Ok(coords.into_iter().map(|((_, a), c)| (a, c)).collect())
    }
}

/// `c_b = c_{b·w}` for every `w ∈ 𝔖_r`; checked on adjacent transpositions.
pub fn coefficients_symmetric(coords: &BTreeMap<Exps, RingElem>, r: usize) -> bool {
    coords.iter().all(|(a, c)| {
        (1..r).all(|i| {
            let s = Permutation::simple(r, i).unwrap();
            coords.get(&a.act(&s)).is_some_and(|d| d == c)
        })
    })
}

/// Content-addressed on-disk store for structure tables.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

/// Version tag mixed into every key; bump when the table format changes.
const CACHE_VERSION: &str = "schur-table-v1";

impl TableCache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        TableCache { dir: dir.as_ref().to_path_buf() }
    }

    pub fn key(m: usize, n: usize, r: usize) -> String {
        hex(&Sha256::digest(format!("{CACHE_VERSION}:m={m}:n={n}:r={r}").as_bytes()))
    }

    pub fn path(&self, m: usize, n: usize, r: usize) -> PathBuf {
        self.dir.join("tables").join(format!("schur-m{m}-n{n}-r{r}.json"))
    }

    /// A verified table, or `None` if absent or corrupt (corrupt files are removed).
    pub fn load(&self, m: usize, n: usize, r: usize) -> Option<StructureTable> {
        let path = self.path(m, n, r);
        let text = std::fs::read_to_string(&path).ok()?;
        let parsed = (|| -> Option<StructureTable> {
            let v: serde_json::Value = serde_json::from_str(&text).ok()?;
            if v.get("key")?.as_str()? != Self::key(m, n, r) {
                return None;
            }
            let digest = v.get("digest")?.as_str()?.to_string();
            let table: StructureTable = serde_json::from_value(v.get("table")?.clone()).ok()?;
            let body = serde_json::to_string(&table).ok()?;
            (hex(&Sha256::digest(body.as_bytes())) == digest && (table.m, table.n, table.r) == (m, n, r))
                .then_some(table)
        })();
        if parsed.is_none() {
            let _ = std::fs::remove_file(&path);
        }
        parsed
    }

    /// Writes through a temporary file so readers never see a partial table.
    pub fn store(&self, table: &StructureTable) -> Result<PathBuf> {
        let path = self.path(table.m, table.n, table.r);
        std::fs::create_dir_all(path.parent().unwrap())?;
        let body = serde_json::to_string(table).map_err(|e| Error::Internal(e.to_string()))?;
        let doc = serde_json::json!({
            "key": Self::key(table.m, table.n, table.r),
            "digest": hex(&Sha256::digest(body.as_bytes())),
            "table": table,
        });
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_vec(&doc).map_err(|e| Error::Internal(e.to_string()))?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Loads a cached table into `ctx`, or computes and stores one.
    pub fn table_for(&self, ctx: &SchurContext) -> Result<StructureTable> {
        if let Some(t) = self.load(ctx.m, ctx.n, ctx.r) {
            if ctx.load_table(&t).is_ok() {
                return Ok(t);
            }
        }
        let t = ctx.structure_table()?;
        self.store(&t)?;
        Ok(t)
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// `Σ_{w ∈ 𝔖_λ} q^{ℓ(w)}`, re-exported for the Morita check.
pub fn poincare(lambda: &Composition, m: usize) -> RingElem {
    crate::ring::poincare_polynomial(lambda.parts(), m)
}

/// The coordinates of `Φ_{λ,ω}Φ_{ω,λ} − P_λ(q) Φ_{λ,λ}`, which vanish.
pub fn morita_defect(ctx: &SchurContext, lambda: &Composition) -> Result<SchurElement> {
    let omega = Composition::omega(ctx.n, ctx.r)?;
    let lhs = ctx.multiply(&ctx.phi_lambda_mu(lambda, &omega)?, &ctx.phi_lambda_mu(&omega, lambda)?)?;
    let rhs = ctx.phi_lambda_mu(lambda, lambda)?.scale(&poincare(lambda, ctx.m));
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn diagonal_b_is_x_lambda() {
        let ctx = SchurContext::new(2, 2, 2).unwrap();
        for lambda in ctx.compositions() {
            let a = ColoredMatrix::uncolored(&IntMatrix::diag(&lambda), 2);
            let i = ctx.index_of(&a).unwrap();
            assert_eq!(ctx.b(i).unwrap(), &ctx.algebra().x_lambda(&lambda).unwrap());
        }
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let ctx = SchurContext::new(2, 2, 2).unwrap();
        let comps = ctx.compositions();
        for l in &comps {
            for u in &comps {
                let p = ctx.multiply(&ctx.idempotent(l).unwrap(), &ctx.idempotent(u).unwrap()).unwrap();
                if l == u {
                    assert_eq!(p, ctx.idempotent(l).unwrap());
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn rank_222() {
        let ctx = SchurContext::new(2, 2, 2).unwrap();
        let rep = ctx.verify_rank(3, 1).unwrap();
        assert_eq!(rep.count, 36);
        assert!(rep.pass);
    }

    #[test]
    fn morita_two() {
        let ctx = SchurContext::new(2, 2, 2).unwrap();
        for l in ctx.compositions() {
            assert!(morita_defect(&ctx, &l).unwrap().is_zero(), "{l:?}");
        }
    }

    #[test]
    fn eigen_dimension_matches_block() {
        let ctx = SchurContext::new(2, 2, 2).unwrap();
        for l in ctx.compositions() {
            for u in ctx.compositions() {
                let dims = ctx.eigen_dimensions(&l, &u, 2, 9);
                assert!(dims.iter().all(|&d| d == ctx.block(&l, &u).len()), "{l:?} {u:?} {dims:?}");
            }
        }
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let ctx = SchurContext::new(1, 2, 2).unwrap();
        let t = cache.table_for(&ctx).unwrap();
        assert_eq!(cache.load(1, 2, 2).unwrap(), t);
        std::fs::write(cache.path(1, 2, 2), b"{\"key\": 1}").unwrap();
        assert!(cache.load(1, 2, 2).is_none());
        assert!(!cache.path(1, 2, 2).exists());
        let _ = comp(&[2]);
    }
}
