//! The affine Hecke algebra ℋ_Δ(r) over {T_w X^a : a ∈ ℤ^r} and the
//! epimorphism ε_u onto ℋ_u(r).
//!
//! The straightening rule is the one used by the cyclotomic engine; it holds
//! for all integer exponents because `X_i X_{i+1}` commutes with `T_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::{
    add_term, format_terms, sigma_nu_polynomial, terms_add_into, terms_mul_t, terms_t_mul, AkAlgebra, Exps,
    HeckeElement, Terms,
};
use crate::perm::{self, Composition, Permutation, MAX_R};
use crate::ring::RingElem;

/// `Σ c_{w,a} T_w X^a`, with coefficients in ℛ_m so that ε_u needs no coercion.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineElement {
    m: usize,
    r: usize,
    terms: Terms,
}

impl AffineElement {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(Permutation, Exps), RingElem> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation, a: &Exps) -> RingElem {
        self.terms.get(&(*w, *a)).cloned().unwrap_or_else(|| RingElem::zero(self.m))
    }

    pub fn add(&self, other: &AffineElement) -> AffineElement {
        assert_eq!((self.m, self.r), (other.m, other.r), "shape mismatch");
        let mut terms = self.terms.clone();
        terms_add_into(&mut terms, &other.terms, None);
        AffineElement { m: self.m, r: self.r, terms }
    }

    pub fn sub(&self, other: &AffineElement) -> AffineElement {
        self.add(&other.scale(&-RingElem::one(self.m)))
    }

    pub fn scale(&self, c: &RingElem) -> AffineElement {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (*k, v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        AffineElement { m: self.m, r: self.r, terms }
    }

    pub fn to_json(&self) -> serde_json::Value {
        HeckeElement::from_raw(self.m, self.r, self.terms.clone()).to_json()
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.terms, 'X', false)
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ℋ_Δ(r={})[{self}]", self.r)
    }
}

/// ℋ_Δ(r) with coefficients in ℛ_m.
#[derive(Clone, Debug)]
pub struct AffineAlgebra {
    m: usize,
    r: usize,
    q: RingElem,
    qm1: RingElem,
}

impl AffineAlgebra {
    pub fn new(m: usize, r: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Range("m must be at least 1".into()));
        }
        if r == 0 || r > MAX_R {
            return Err(Error::Range(format!("r = {r} outside 1..={MAX_R}")));
        }
        let q = RingElem::q(m);
        let qm1 = &q - &RingElem::one(m);
        Ok(AffineAlgebra { m, r, q, qm1 })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn wrap(&self, terms: Terms) -> AffineElement {
        AffineElement { m: self.m, r: self.r, terms }
    }

    pub fn zero(&self) -> AffineElement {
        self.wrap(Terms::new())
    }

    pub fn one(&self) -> AffineElement {
        self.scalar(RingElem::one(self.m))
    }

    pub fn scalar(&self, c: RingElem) -> AffineElement {
        self.basis_element(Permutation::identity(self.r), Exps::zero(self.r), c)
    }

    pub fn basis_element(&self, w: Permutation, a: Exps, c: RingElem) -> AffineElement {
        let mut terms = Terms::new();
        add_term(&mut terms, (w, a), c);
        self.wrap(terms)
    }

    pub fn gen_t(&self, i: usize) -> Result<AffineElement> {
        let w = Permutation::simple(self.r, i)?;
        Ok(self.basis_element(w, Exps::zero(self.r), RingElem::one(self.m)))
    }

    pub fn t_perm(&self, w: Permutation) -> AffineElement {
        self.basis_element(w, Exps::zero(self.r), RingElem::one(self.m))
    }

    /// `X_j^e`; any sign.
    pub fn gen_x(&self, j: usize, e: i64) -> Result<AffineElement> {
        if j == 0 || j > self.r {
            return Err(Error::Range(format!("X{j} outside X1..X{}", self.r)));
        }
        let mut a = Exps::zero(self.r);
        a.set(j, e);
        Ok(self.basis_element(Permutation::identity(self.r), a, RingElem::one(self.m)))
    }

    pub fn monomial(&self, a: &[i64]) -> Result<AffineElement> {
        if a.len() != self.r {
            return Err(Error::Dimension("exponent vector of the wrong length".into()));
        }
        Ok(self.basis_element(Permutation::identity(self.r), Exps::from_slice(a)?, RingElem::one(self.m)))
    }

    pub fn x_lambda(&self, lambda: &Composition) -> Result<AffineElement> {
        if lambda.degree() != self.r {
            return Err(Error::Range(format!("|λ| = {} but r = {}", lambda.degree(), self.r)));
        }
        let zero = Exps::zero(self.r);
        Ok(self.wrap(
            perm::young_subgroup(lambda)
                .into_iter()
                .map(|w| ((w, zero), RingElem::one(self.m)))
                .collect(),
        ))
    }

    pub fn right_mul_t(&self, x: &AffineElement, i: usize) -> AffineElement {
        self.wrap(terms_mul_t(&x.terms, i, &self.q, &self.qm1))
    }

    pub fn left_mul_t(&self, i: usize, x: &AffineElement) -> AffineElement {
        self.wrap(terms_t_mul(i, &x.terms, &self.q, &self.qm1))
    }

    pub fn right_mul_word(&self, x: &AffineElement, word: &[usize]) -> AffineElement {
        let mut terms = x.terms.clone();
        for &i in word {
            terms = terms_mul_t(&terms, i, &self.q, &self.qm1);
        }
        self.wrap(terms)
    }

    /// `x·y`; monomials commute, so `T_w X^b · X^a = T_w X^{a+b}`.
    pub fn multiply(&self, x: &AffineElement, y: &AffineElement) -> Result<AffineElement> {
        for e in [x, y] {
            if e.m != self.m || e.r != self.r {
                return Err(Error::Dimension("element of a different affine algebra".into()));
            }
        }
        let mut by_w: BTreeMap<Permutation, Vec<(Exps, &RingElem)>> = BTreeMap::new();
        for ((w, a), c) in &y.terms {
            by_w.entry(*w).or_default().push((*a, c));
        }
        let mut cache: HashMap<Permutation, Terms> = HashMap::new();
        cache.insert(Permutation::identity(self.r), x.terms.clone());
        let mut acc = Terms::new();
        for (w, items) in by_w {
            let xw = self.prefix(&mut cache, &w);
            for (a, c) in items {
                for ((v, b), d) in &xw {
                    add_term(&mut acc, (*v, b.add(&a)), d * c);
                }
            }
        }
        Ok(self.wrap(acc))
    }

    fn prefix(&self, cache: &mut HashMap<Permutation, Terms>, w: &Permutation) -> Terms {
        if let Some(t) = cache.get(w) {
            return t.clone();
        }
        let last = *w.reduced_word().last().unwrap();
        let base = self.prefix(cache, &w.mul_s(last));
        let t = terms_mul_t(&base, last, &self.q, &self.qm1);
        cache.insert(*w, t.clone());
        t
    }

    /// `σ^𝐚(X₁,…,X_r) = ∏ σ_i(X)^{a_i}`.
    pub fn sigma(&self, a: &[usize]) -> Result<AffineElement> {
        self.sigma_nu(&Composition::full(self.r), &[a.to_vec()])
    }

    /// Block version of [`AffineAlgebra::sigma`]; no bound on the exponents.
    pub fn sigma_nu(&self, nu: &Composition, blocks: &[Vec<usize>]) -> Result<AffineElement> {
        let poly = sigma_nu_polynomial(nu, blocks, self.r, None)?;
        Ok(self.wrap(
            poly.into_iter()
                .map(|(a, c)| ((Permutation::identity(self.r), a), RingElem::int(self.m, c)))
                .collect(),
        ))
    }

    /// Coefficients `c_b` of `z = Σ c_b x_(r) X^b`, i.e. the `(1, b)` coefficients.
    pub fn symmetric_coords(&self, z: &AffineElement) -> Result<BTreeMap<Exps, RingElem>> {
        let full = Composition::full(self.r);
        let qz = z.scale(&self.q);
        for i in perm::j_set(&full) {
            if self.left_mul_t(i, z) != qz {
                return Err(Error::NotInModule("element is not in x_(r)ℋ_Δ".into()));
            }
        }
        let id = Permutation::identity(self.r);
        Ok(z.terms.iter().filter(|((w, _), _)| *w == id).map(|((_, a), c)| (*a, c.clone())).collect())
    }
}

/// Options for ε_u.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EpsilonOptions {
    /// Reduce `X₁^{-k}` with the inverse of `L₁` from the cyclotomic relation;
    /// requires `e_m(u)` to be a unit of ℛ.
    pub invert_l1: bool,
}

/// ε_u: `T_i ↦ T_i`, `X_j ↦ L_j`.
pub fn epsilon(h: &AkAlgebra, x: &AffineElement, opts: EpsilonOptions) -> Result<HeckeElement> {
    if h.m() != x.m || h.r() != x.r {
        return Err(Error::Dimension("ε_u between algebras of different shape".into()));
    }
    let linv = if opts.invert_l1 { Some(l1_inverse(h)?) } else { None };
    let mut acc = h.zero();
    for ((w, a), c) in &x.terms {
        let mut pos = *a;
        let mut neg1 = 0;
        for j in 1..=x.r {
            if a.get(j) < 0 {
                if j == 1 && linv.is_some() {
                    neg1 = -a.get(1);
                    pos.set(1, 0);
                } else {
                    return Err(Error::Unsupported(format!(
                        "ε_u on X{j}^{} needs an inverse of L{j}",
                        a.get(j)
                    )));
                }
            }
        }
        let mut img = h.basis_element(*w, Exps::zero(x.r), c.clone());
        if let Some(inv) = &linv {
            for _ in 0..neg1 {
                img = h.multiply(&img, inv)?;
            }
        }
        img = jm_power(h, &img, &pos);
        acc = acc.add(&img);
    }
    Ok(acc)
}

/// `x·L^a` for any nonnegative `a`, reducing through the cyclotomic relation.
fn jm_power(h: &AkAlgebra, x: &HeckeElement, a: &Exps) -> HeckeElement {
    let mut y = x.clone();
    for j in 1..=a.r() {
        for _ in 0..a.get(j) {
            y = h.right_mul_l(&y, j);
        }
    }
    y
}

/// `L₁⁻¹ = (−1)^{m+1} e_m⁻¹ Σ_{k=0}^{m−1} (−1)^k e_k L₁^{m−1−k}`.
pub fn l1_inverse(h: &AkAlgebra) -> Result<HeckeElement> {
    let m = h.m();
    let e = |k: usize| crate::ring::elementary_symmetric(h.params(), k, m);
    let em_inv = e(m)
        .unit_inverse()
        .ok_or_else(|| Error::Unsupported(format!("e_m(u) = {} is not a unit", e(m))))?;
    let mut acc = h.zero();
    for k in 0..m {
        let mut a = Exps::zero(h.r());
        a.set(1, (m - 1 - k) as i64);
        let mut c = &e(k) * &em_inv;
        if (k + m + 1) % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&h.basis_element(Permutation::identity(h.r()), a, c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_inverse() {
        let a = AffineAlgebra::new(1, 2).unwrap();
        let p = a.multiply(&a.gen_x(1, 1).unwrap(), &a.gen_x(1, -1).unwrap()).unwrap();
        assert_eq!(p, a.one());
    }

    #[test]
    fn x2_t1() {
        let a = AffineAlgebra::new(1, 2).unwrap();
        let lhs = a.multiply(&a.gen_x(2, 1).unwrap(), &a.gen_t(1).unwrap()).unwrap();
        let t1x1 = a.multiply(&a.gen_t(1).unwrap(), &a.gen_x(1, 1).unwrap()).unwrap();
        let q1 = &RingElem::q(1) - &RingElem::one(1);
        assert_eq!(lhs, t1x1.add(&a.gen_x(2, 1).unwrap().scale(&q1)));
    }

    #[test]
    fn t_x_t_relation() {
        // T₁X₁T₁ = qX₂, also with negative powers inverted
        let a = AffineAlgebra::new(1, 2).unwrap();
        let t = a.gen_t(1).unwrap();
        for e in [1, -1, 2] {
            let lhs = a.multiply(&a.multiply(&t, &a.gen_x(1, e).unwrap()).unwrap(), &t).unwrap();
            if e == 1 {
                assert_eq!(lhs, a.gen_x(2, 1).unwrap().scale(&RingElem::q(1)));
            }
            let back = a.multiply(&a.multiply(&t, &a.gen_x(1, e).unwrap()).unwrap(), &t).unwrap();
            assert_eq!(lhs, back);
        }
    }

    #[test]
    fn epsilon_of_x1_power() {
        let h = AkAlgebra::new(2, 2).unwrap();
        let a = AffineAlgebra::new(2, 2).unwrap();
        let img = epsilon(&h, &a.gen_x(1, 2).unwrap(), EpsilonOptions::default()).unwrap();
        let l1 = h.gen_l(1).unwrap();
        assert_eq!(img, h.multiply(&l1, &l1).unwrap());
        assert!(epsilon(&h, &a.gen_x(2, -1).unwrap(), EpsilonOptions::default()).is_err());
        // generic u is not invertible
        assert!(l1_inverse(&h).is_err());
    }

    #[test]
    fn l1_inverse_with_unit_parameters() {
        let m = 2;
        let params = vec![-RingElem::one(m), RingElem::q(m)];
        let h = AkAlgebra::with_params(m, 2, params).unwrap();
        let inv = l1_inverse(&h).unwrap();
        assert_eq!(h.multiply(&inv, &h.gen_l(1).unwrap()).unwrap(), h.one());
    }

    #[test]
    fn sigma_two() {
        let a = AffineAlgebra::new(1, 2).unwrap();
        assert_eq!(a.sigma(&[1, 0]).unwrap(), a.gen_x(1, 1).unwrap().add(&a.gen_x(2, 1).unwrap()));
        assert_eq!(a.sigma(&[0, 0]).unwrap(), a.one());
    }
}
