//! The Ariki–Koike algebra ℋ_u(r) in the normal form Σ c·T_w L^a.
//!
//! Multiplication moves Jucys–Murphy monomials rightward past `T_i` with the
//! closed three-case formula, which never raises an exponent above the larger
//! of the two it started from; the cyclotomic relation is applied only when an
//! `L_j` is appended to an exponent already equal to `m − 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::colored::ColoredMatrix;
use crate::error::{Error, Result};
use crate::perm::{self, Composition, Permutation, MAX_R};
use crate::ring::{elementary_symmetric, RingElem};

/// Exponent vector of a monomial in the `L_j` (or `X_j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exps {
    r: u8,
    e: [i16; MAX_R],
}

impl Exps {
    pub fn zero(r: usize) -> Self {
        assert!(r <= MAX_R);
        Exps { r: r as u8, e: [0; MAX_R] }
    }

    pub fn from_slice(a: &[i64]) -> Result<Self> {
        if a.len() > MAX_R {
            return Err(Error::Range(format!("r = {} exceeds {MAX_R}", a.len())));
        }
        let mut e = [0i16; MAX_R];
        for (k, &v) in a.iter().enumerate() {
            e[k] = i16::try_from(v).map_err(|_| Error::Range(format!("exponent {v}")))?;
        }
        Ok(Exps { r: a.len() as u8, e })
    }

    pub fn from_naturals(a: &[usize]) -> Result<Self> {
        Self::from_slice(&a.iter().map(|&v| v as i64).collect::<Vec<_>>())
    }

    /// Unit vector `e_j`, 1-based.
    pub fn unit(r: usize, j: usize) -> Self {
        let mut x = Self::zero(r);
        x.e[j - 1] = 1;
        x
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    /// `a_j`, 1-based.
    #[inline]
    pub fn get(&self, j: usize) -> i64 {
        self.e[j - 1] as i64
    }

    #[inline]
    pub fn set(&mut self, j: usize, v: i64) {
        self.e[j - 1] = i16::try_from(v).expect("exponent out of range");
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.e[..self.r()].iter().map(|&v| v as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Exps) -> Exps {
        let mut out = *self;
        for k in 0..self.r() {
            out.e[k] = self.e[k].checked_add(other.e[k]).expect("exponent overflow");
        }
        out
    }

    pub fn min_exp(&self) -> i64 {
        self.e[..self.r()].iter().copied().min().unwrap_or(0) as i64
    }

    pub fn max_exp(&self) -> i64 {
        self.e[..self.r()].iter().copied().max().unwrap_or(0) as i64
    }

    /// Place permutation `a·w`.
    pub fn act(&self, w: &Permutation) -> Exps {
        let mut out = *self;
        for k in 0..self.r() {
            out.e[k] = self.e[w.apply(k + 1) - 1];
        }
        out
    }
}

impl fmt::Debug for Exps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

/// `L^a T_i = T_i L^{a s_i} + Σ ε·(q−1)·L^b`; returns `(a s_i, [(b, ε)])`.
///
/// For `a_i < a_{i+1}` the correction is `+(q−1)Σ_{t=1}^{a_{i+1}−a_i} L^{a s_i − tα_i}`;
/// for `a_i > a_{i+1}` it is `−(q−1)Σ_{t=0}^{a_i−a_{i+1}−1} L^{a s_i + tα_i}`,
/// where `α_i = e_i − e_{i+1}`. Valid for integer exponents.
pub fn straighten_past_t(a: &Exps, i: usize) -> (Exps, Vec<(Exps, i32)>) {
    let (ai, aj) = (a.get(i), a.get(i + 1));
    let mut top = *a;
    top.set(i, aj);
    top.set(i + 1, ai);
    let mut extra = Vec::new();
    if ai < aj {
        for t in 1..=aj - ai {
            let mut b = top;
            b.set(i, aj - t);
            b.set(i + 1, ai + t);
            extra.push((b, 1));
        }
    } else if ai > aj {
        for t in 0..ai - aj {
            let mut b = top;
            b.set(i, aj + t);
            b.set(i + 1, ai - t);
            extra.push((b, -1));
        }
    }
    (top, extra)
}

pub(crate) type Key = (Permutation, Exps);
pub(crate) type Terms = BTreeMap<Key, RingElem>;

pub(crate) fn add_term(terms: &mut Terms, key: Key, c: RingElem) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Right multiplication of a normal form by `T_i`, shared with the affine engine.
pub(crate) fn terms_mul_t(terms: &Terms, i: usize, q: &RingElem, qm1: &RingElem) -> Terms {
    let mut out = Terms::new();
    for ((w, a), c) in terms {
        let (top, extra) = straighten_past_t(a, i);
        let ws = w.mul_s(i);
        if !w.right_descent(i) {
            add_term(&mut out, (ws, top), c.clone());
        } else {
            add_term(&mut out, (*w, top), c * qm1);
            add_term(&mut out, (ws, top), c * q);
        }
        for (b, sign) in extra {
            let coeff = c * qm1;
            add_term(&mut out, (*w, b), if sign > 0 { coeff } else { -coeff });
        }
    }
    out
}

/// Left multiplication by `T_i`; the exponents are untouched.
pub(crate) fn terms_t_mul(i: usize, terms: &Terms, q: &RingElem, qm1: &RingElem) -> Terms {
    let mut out = Terms::new();
    for ((w, a), c) in terms {
        let sw = w.s_mul(i);
        if !w.left_descent(i) {
            add_term(&mut out, (sw, *a), c.clone());
        } else {
            add_term(&mut out, (*w, *a), c * qm1);
            add_term(&mut out, (sw, *a), c * q);
        }
    }
    out
}

pub(crate) fn terms_scale(terms: &Terms, c: &RingElem) -> Terms {
    if c.is_one() {
        return terms.clone();
    }
    terms
        .iter()
        .map(|(k, v)| (*k, v * c))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

pub(crate) fn terms_add_into(acc: &mut Terms, other: &Terms, scale: Option<&RingElem>) {
    for (k, v) in other {
        let c = match scale {
            Some(s) => v * s,
            None => v.clone(),
        };
        add_term(acc, *k, c);
    }
}

/// Which side the idempotent (or the generator `T_i`) sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `T_i·x = q·x`; the module `x_μ ℋ`.
    Left,
    /// `x·T_i = q·x`; the module `ℋ x_μ`.
    Right,
}

/// An element `Σ c_{w,a} T_w L^a` of ℋ_u(r).
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    m: usize,
    r: usize,
    pub(crate) terms: Terms,
}

/// An element written as `Σ c_{w,a} L^a T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftForm {
    pub m: usize,
    pub r: usize,
    pub terms: BTreeMap<(Permutation, Exps), RingElem>,
}

impl HeckeElement {
    pub(crate) fn from_raw(m: usize, r: usize, terms: Terms) -> Self {
        HeckeElement { m, r, terms }
    }

    pub fn zero(m: usize, r: usize) -> Self {
        HeckeElement { m, r, terms: Terms::new() }
    }

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

    /// Terms in canonical `(w, a)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Exps, &RingElem)> {
        self.terms.iter().map(|((w, a), c)| (w, a, c))
    }

    pub fn terms(&self) -> &BTreeMap<(Permutation, Exps), RingElem> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation, a: &Exps) -> RingElem {
        self.terms.get(&(*w, *a)).cloned().unwrap_or_else(|| RingElem::zero(self.m))
    }

    fn check(&self, other: &HeckeElement) -> Result<()> {
        if self.m != other.m || self.r != other.r {
            return Err(Error::Dimension(format!(
                "elements of ℋ(m={}, r={}) and ℋ(m={}, r={})",
                self.m, self.r, other.m, other.r
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        terms_add_into(&mut terms, &other.terms, None);
        Ok(HeckeElement { terms, ..*self.shape() })
    }

    pub fn try_sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        terms_add_into(&mut terms, &other.terms, Some(&-RingElem::one(self.m)));
        Ok(HeckeElement { terms, ..*self.shape() })
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        self.try_add(other).expect("shape mismatch")
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.try_sub(other).expect("shape mismatch")
    }

    pub fn scale(&self, c: &RingElem) -> HeckeElement {
        HeckeElement { terms: terms_scale(&self.terms, c), ..*self.shape() }
    }

    pub fn neg(&self) -> HeckeElement {
        self.scale(&-RingElem::one(self.m))
    }

    fn shape(&self) -> Box<HeckeElement> {
        Box::new(HeckeElement { m: self.m, r: self.r, terms: Terms::new() })
    }

    /// Coefficients mapped through `f`; zero images are dropped.
    pub fn map_coeffs<T, F: Fn(&RingElem) -> T>(&self, f: F) -> BTreeMap<(Permutation, Exps), T> {
        self.terms.iter().map(|(k, c)| (*k, f(c))).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((w, a), c)| serde_json::json!({ "w": w, "a": a.to_vec(), "poly": c }))
            .collect();
        serde_json::json!({ "m": self.m, "r": self.r, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<HeckeElement> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let m = field("m")?.as_u64().ok_or_else(|| Error::Parse("m".into()))? as usize;
        let r = field("r")?.as_u64().ok_or_else(|| Error::Parse("r".into()))? as usize;
        let mut terms = Terms::new();
        for t in field("terms")?.as_array().ok_or_else(|| Error::Parse("terms".into()))? {
            let w: Permutation = serde_json::from_value(t.get("w").cloned().unwrap_or_default())
                .map_err(|e| Error::Parse(e.to_string()))?;
            let a: Vec<i64> = serde_json::from_value(t.get("a").cloned().unwrap_or_default())
                .map_err(|e| Error::Parse(e.to_string()))?;
            let c = RingElem::from_json(t.get("poly").unwrap_or(&serde_json::Value::Null), m)?;
            if w.r() != r || a.len() != r {
                return Err(Error::Dimension("term of the wrong rank".into()));
            }
            add_term(&mut terms, (w, Exps::from_slice(&a)?), c);
        }
        Ok(HeckeElement { m, r, terms })
    }
}

/// Formats `Σ c T_w L^a` in the expression syntax, using `sym` for the
/// commuting generators and putting them on the side given by `left`.
pub(crate) fn format_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<(Permutation, Exps), RingElem>,
    sym: char,
    monomials_left: bool,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, ((w, a), c)) in terms.iter().enumerate() {
        let mut factors: Vec<String> = w.reduced_word().iter().map(|i| format!("T{i}")).collect();
        let mono: Vec<String> = (1..=a.r())
            .filter(|&j| a.get(j) != 0)
            .map(|j| match a.get(j) {
                1 => format!("{sym}{j}"),
                e => format!("{sym}{j}^{e}"),
            })
            .collect();
        if monomials_left {
            factors.splice(0..0, mono);
        } else {
            factors.extend(mono);
        }
        let (neg, body) = coefficient_text(c);
        let sep = match (idx, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        write!(f, "{sep}")?;
        match (body, factors.is_empty()) {
            (None, true) => write!(f, "1")?,
            (None, false) => write!(f, "{}", factors.join("*"))?,
            (Some(b), true) => write!(f, "{b}")?,
            (Some(b), false) => write!(f, "{b}*{}", factors.join("*"))?,
        }
    }
    Ok(())
}

/// Sign and body of a coefficient; the body is `None` for ±1.
fn coefficient_text(c: &RingElem) -> (bool, Option<String>) {
    if c.len() == 1 {
        let neg = c.raw_terms()[0].1.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if abs.is_one() {
            return (neg, None);
        }
        return (neg, Some(abs.to_string()));
    }
    (false, Some(format!("({c})")))
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.terms, 'L', false)
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ℋ(m={}, r={})[{self}]", self.m, self.r)
    }
}

impl fmt::Display for LeftForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.terms, 'L', true)
    }
}

/// ℋ_u(r) with parameters `q` and `u₁, …, u_m` specialised to given ring elements.
#[derive(Clone, Debug)]
pub struct AkAlgebra {
    m: usize,
    r: usize,
    params: Vec<RingElem>,
    /// `(−1)^{k+1} e_k(u)` for `k = 1..m`, indexed by `k − 1`.
    overflow: Vec<RingElem>,
    q: RingElem,
    qm1: RingElem,
}

impl AkAlgebra {
    /// Generic parameters: `u_i` are the ring variables.
    pub fn new(m: usize, r: usize) -> Result<Self> {
        let params = (1..=m).map(|i| RingElem::u(m, i)).collect::<Result<Vec<_>>>()?;
        Self::with_params(m, r, params)
    }

    /// Parameters given as elements of ℤ[q^{±1}, u₁..u_m].
    pub fn with_params(m: usize, r: usize, params: Vec<RingElem>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Range("m must be at least 1".into()));
        }
        if r == 0 || r > MAX_R {
            return Err(Error::Range(format!("r = {r} outside 1..={MAX_R}")));
        }
        if params.len() != m || params.iter().any(|p| p.m() != m) {
            return Err(Error::Dimension("parameter list must hold m elements of ℛ_m".into()));
        }
        let overflow = (1..=m)
            .map(|k| {
                let e = elementary_symmetric(&params, k, m);
                if k % 2 == 1 {
                    e
                } else {
                    -e
                }
            })
            .collect();
        let q = RingElem::q(m);
        let qm1 = &q - &RingElem::one(m);
        Ok(AkAlgebra { m, r, params, overflow, q, qm1 })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn params(&self) -> &[RingElem] {
        &self.params
    }

    pub fn ring_zero(&self) -> RingElem {
        RingElem::zero(self.m)
    }

    pub fn ring_one(&self) -> RingElem {
        RingElem::one(self.m)
    }

    pub fn q(&self) -> RingElem {
        self.q.clone()
    }

    fn check(&self, x: &HeckeElement) -> Result<()> {
        if x.m != self.m || x.r != self.r {
            return Err(Error::Dimension(format!(
                "element of ℋ(m={}, r={}) used in ℋ(m={}, r={})",
                x.m, x.r, self.m, self.r
            )));
        }
        Ok(())
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.m, self.r)
    }

    pub fn one(&self) -> HeckeElement {
        self.scalar(self.ring_one())
    }

    pub fn scalar(&self, c: RingElem) -> HeckeElement {
        self.basis_element(Permutation::identity(self.r), Exps::zero(self.r), c)
    }

    pub fn basis_element(&self, w: Permutation, a: Exps, c: RingElem) -> HeckeElement {
        let mut terms = Terms::new();
        add_term(&mut terms, (w, a), c);
        HeckeElement::from_raw(self.m, self.r, terms)
    }

    /// Builds an element from `(w, a, c)` triples; exponents must lie in ℤ_m.
    pub fn from_terms(&self, items: impl IntoIterator<Item = (Permutation, Exps, RingElem)>) -> Result<HeckeElement> {
        let mut terms = Terms::new();
        for (w, a, c) in items {
            if w.r() != self.r || a.r() != self.r || a.min_exp() < 0 || a.max_exp() >= self.m as i64 {
                return Err(Error::Range(format!("basis index ({w:?}, {a:?}) outside ℋ")));
            }
            if c.m() != self.m {
                return Err(Error::Dimension("coefficient over the wrong ring".into()));
            }
            add_term(&mut terms, (w, a), c);
        }
        Ok(HeckeElement::from_raw(self.m, self.r, terms))
    }

    /// `T_i`.
    pub fn gen_t(&self, i: usize) -> Result<HeckeElement> {
        Ok(self.t_perm(Permutation::simple(self.r, i)?))
    }

    /// `T_w`.
    pub fn t_perm(&self, w: Permutation) -> HeckeElement {
        self.basis_element(w, Exps::zero(self.r), self.ring_one())
    }

    /// `L_j`, reduced if `m = 1`.
    pub fn gen_l(&self, j: usize) -> Result<HeckeElement> {
        if j == 0 || j > self.r {
            return Err(Error::Range(format!("L{j} outside L1..L{}", self.r)));
        }
        Ok(self.right_mul_l(&self.one(), j))
    }

    /// `L^a`.
    pub fn jm_monomial(&self, a: &[usize]) -> Result<HeckeElement> {
        if a.len() != self.r {
            return Err(Error::Dimension("exponent vector of the wrong length".into()));
        }
        if a.iter().any(|&v| v >= self.m) {
            return Err(Error::Range(format!("exponents must lie in ℤ_{}", self.m)));
        }
        Ok(self.basis_element(Permutation::identity(self.r), Exps::from_naturals(a)?, self.ring_one()))
    }

    /// `x_λ = Σ_{w ∈ 𝔖_λ} T_w`.
    pub fn x_lambda(&self, lambda: &Composition) -> Result<HeckeElement> {
        if lambda.degree() != self.r {
            return Err(Error::Range(format!("|λ| = {} but r = {}", lambda.degree(), self.r)));
        }
        let zero = Exps::zero(self.r);
        let terms = perm::young_subgroup(lambda).into_iter().map(|w| ((w, zero), self.ring_one())).collect();
        Ok(HeckeElement::from_raw(self.m, self.r, terms))
    }

    /// `x·T_i`.
    pub fn right_mul_t(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        assert!(i >= 1 && i < self.r, "T{i} outside T1..T{}", self.r - 1);
        HeckeElement::from_raw(self.m, self.r, terms_mul_t(&x.terms, i, &self.q, &self.qm1))
    }

    /// `T_i·x`.
    pub fn left_mul_t(&self, i: usize, x: &HeckeElement) -> HeckeElement {
        assert!(i >= 1 && i < self.r, "T{i} outside T1..T{}", self.r - 1);
        HeckeElement::from_raw(self.m, self.r, terms_t_mul(i, &x.terms, &self.q, &self.qm1))
    }

    /// `x·T_{i_1}⋯T_{i_l}`.
    pub fn right_mul_word(&self, x: &HeckeElement, word: &[usize]) -> HeckeElement {
        let mut terms = x.terms.clone();
        for &i in word {
            terms = terms_mul_t(&terms, i, &self.q, &self.qm1);
        }
        HeckeElement::from_raw(self.m, self.r, terms)
    }

    /// `x·L_j`.
    pub fn right_mul_l(&self, x: &HeckeElement, j: usize) -> HeckeElement {
        let top = self.m as i64 - 1;
        let mut out = Terms::new();
        let mut overflow = Terms::new();
        for ((w, a), c) in &x.terms {
            if a.get(j) < top {
                let mut b = *a;
                b.set(j, a.get(j) + 1);
                add_term(&mut out, (*w, b), c.clone());
            } else {
                overflow.insert((*w, *a), c.clone());
            }
        }
        if overflow.is_empty() {
            return HeckeElement::from_raw(self.m, self.r, out);
        }
        if j == 1 {
            // L₁^m = Σ_k (−1)^{k+1} e_k(u) L₁^{m−k}
            for ((w, a), c) in &overflow {
                for (k, coeff) in self.overflow.iter().enumerate() {
                    let mut b = *a;
                    b.set(1, self.m as i64 - 1 - k as i64);
                    add_term(&mut out, (*w, b), c * coeff);
                }
            }
        } else {
            // L_j = q^{1−j} T_{j−1}⋯T_1 L_1 T_1⋯T_{j−1}
            let down: Vec<usize> = (1..j).rev().collect();
            let up: Vec<usize> = (1..j).collect();
            let mut y = self.right_mul_word(&HeckeElement::from_raw(self.m, self.r, overflow), &down);
            y = self.right_mul_l(&y, 1);
            y = self.right_mul_word(&y, &up);
            terms_add_into(&mut out, &y.terms, Some(&RingElem::q_pow(self.m, 1 - j as i32)));
        }
        HeckeElement::from_raw(self.m, self.r, out)
    }

    /// `x·L^a`; terms that stay inside ℤ_m^r are shifted directly.
    pub fn right_mul_monomial(&self, x: &HeckeElement, a: &Exps) -> HeckeElement {
        if a.is_zero() {
            return x.clone();
        }
        let top = self.m as i64 - 1;
        let mut fast = Terms::new();
        let mut slow = Terms::new();
        for ((w, b), c) in &x.terms {
            let s = b.add(a);
            if s.max_exp() <= top {
                add_term(&mut fast, (*w, s), c.clone());
            } else {
                slow.insert((*w, *b), c.clone());
            }
        }
        if !slow.is_empty() {
            let mut y = HeckeElement::from_raw(self.m, self.r, slow);
            for j in 1..=self.r {
                for _ in 0..a.get(j) {
                    y = self.right_mul_l(&y, j);
                }
            }
            terms_add_into(&mut fast, &y.terms, None);
        }
        HeckeElement::from_raw(self.m, self.r, fast)
    }

    /// `x·y`: for each term `T_w L^a` of `y`, right-multiply `x` along the
    /// reduced word of `w`, then by `L^a`.
    pub fn multiply(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
        self.check(x)?;
        self.check(y)?;
        let mut by_w: BTreeMap<Permutation, Vec<(Exps, &RingElem)>> = BTreeMap::new();
        for ((w, a), c) in &y.terms {
            by_w.entry(*w).or_default().push((*a, c));
        }
        let mut prefix: HashMap<Permutation, Terms> = HashMap::new();
        prefix.insert(Permutation::identity(self.r), x.terms.clone());
        let mut acc = Terms::new();
        for (w, items) in by_w {
            let xw = self.prefix_product(&mut prefix, &w);
            let xw = HeckeElement::from_raw(self.m, self.r, xw);
            for (a, c) in items {
                let z = self.right_mul_monomial(&xw, &a);
                terms_add_into(&mut acc, &z.terms, Some(c));
            }
        }
        Ok(HeckeElement::from_raw(self.m, self.r, acc))
    }

    fn prefix_product(&self, cache: &mut HashMap<Permutation, Terms>, w: &Permutation) -> Terms {
        if let Some(t) = cache.get(w) {
            return t.clone();
        }
        let word = w.reduced_word();
        let last = *word.last().unwrap();
        let shorter = w.mul_s(last);
        let base = self.prefix_product(cache, &shorter);
        let t = terms_mul_t(&base, last, &self.q, &self.qm1);
        cache.insert(*w, t.clone());
        t
    }

    /// Product of a list of factors, left to right.
    pub fn product(&self, factors: &[&HeckeElement]) -> Result<HeckeElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// `T_i⁻¹ = q⁻¹(T_i − (q − 1))`.
    pub fn gen_t_inverse(&self, i: usize) -> Result<HeckeElement> {
        let t = self.gen_t(i)?;
        let shifted = t.sub(&self.scalar(self.qm1.clone()));
        Ok(shifted.scale(&RingElem::q_pow(self.m, -1)))
    }

    /// The anti-automorphism fixing every `T_i` and `L_j`:
    /// `τ(T_w L^a) = L^a T_{w⁻¹}`.
    pub fn tau(&self, x: &HeckeElement) -> HeckeElement {
        let mut by_w: BTreeMap<Permutation, Terms> = BTreeMap::new();
        for ((w, a), c) in &x.terms {
            by_w.entry(*w)
                .or_default()
                .insert((Permutation::identity(self.r), *a), c.clone());
        }
        let mut acc = Terms::new();
        for (w, lpoly) in by_w {
            let y = self.right_mul_word(&HeckeElement::from_raw(self.m, self.r, lpoly), &w.inverse().reduced_word());
            terms_add_into(&mut acc, &y.terms, None);
        }
        HeckeElement::from_raw(self.m, self.r, acc)
    }

    /// Coordinates over `{L^a T_w}`, read off from `τ(x)`.
    pub fn to_left_form(&self, x: &HeckeElement) -> LeftForm {
        let t = self.tau(x);
        let terms = t.terms.into_iter().map(|((v, b), c)| ((v.inverse(), b), c)).collect();
        LeftForm { m: self.m, r: self.r, terms }
    }

    pub fn from_left_form(&self, l: &LeftForm) -> HeckeElement {
        let mut by_w: BTreeMap<Permutation, Terms> = BTreeMap::new();
        for ((w, a), c) in &l.terms {
            by_w.entry(*w)
                .or_default()
                .insert((Permutation::identity(self.r), *a), c.clone());
        }
        let mut acc = Terms::new();
        for (w, lpoly) in by_w {
            let y = self.right_mul_word(&HeckeElement::from_raw(self.m, self.r, lpoly), &w.reduced_word());
            terms_add_into(&mut acc, &y.terms, None);
        }
        HeckeElement::from_raw(self.m, self.r, acc)
    }

    /// `σ_i = e_i(L₁, …, L_r)`, computed by multiplication in ℋ.
    pub fn sigma(&self, i: usize) -> Result<HeckeElement> {
        if i > self.r {
            return Err(Error::Range(format!("σ_{i} with r = {}", self.r)));
        }
        let ls = (1..=self.r).map(|j| self.gen_l(j)).collect::<Result<Vec<_>>>()?;
        let mut row = vec![self.zero(); i + 1];
        row[0] = self.one();
        for l in &ls {
            for k in (1..=i).rev() {
                let t = self.multiply(&row[k - 1], l)?;
                row[k] = row[k].add(&t);
            }
        }
        Ok(row.swap_remove(i))
    }

    /// `σ^{𝐚(ν)} = ∏_t ∏_i σ_{t,i}^{a_{t,i}}`, where `σ_{t,i}` is the i-th
    /// elementary symmetric polynomial in the `L_j` of block `R_t^ν`.
    pub fn sigma_nu(&self, nu: &Composition, blocks: &[Vec<usize>]) -> Result<HeckeElement> {
        let poly = sigma_nu_polynomial(nu, blocks, self.r, Some(self.m))?;
        let terms = poly
            .into_iter()
            .map(|(a, c)| ((Permutation::identity(self.r), a), RingElem::int(self.m, c)))
            .collect();
        Ok(HeckeElement::from_raw(self.m, self.r, terms))
    }

    /// `σ^{𝔸̈}`.
    pub fn sigma_ddot(&self, a: &ColoredMatrix) -> Result<HeckeElement> {
        if a.m() != self.m || a.degree() != self.r {
            return Err(Error::Dimension("colored matrix does not match the algebra".into()));
        }
        self.sigma_nu(&perm::nu_of(&a.abs()), &a.a_ddot())
    }

    /// `T_i x = q x` for all `i ∈ J_λ` (left) or `x T_i = q x` (right).
    pub fn eigen_test(&self, x: &HeckeElement, lambda: &Composition, side: Side) -> bool {
        let qx = x.scale(&self.q);
        perm::j_set(lambda).into_iter().all(|i| {
            let y = match side {
                Side::Left => self.left_mul_t(i, x),
                Side::Right => self.right_mul_t(x, i),
            };
            y == qx
        })
    }

    /// Coordinates of `x` in `{x_μ T_d L^a : d ∈ 𝒟_μ}` (left) or
    /// `{L^a T_d x_μ : d ∈ 𝒟_μ⁻¹}` (right).
    pub fn module_coords(&self, x: &HeckeElement, mu: &Composition, side: Side) -> Result<BTreeMap<(Permutation, Exps), RingElem>> {
        self.check(x)?;
        if !self.eigen_test(x, mu, side) {
            return Err(Error::NotInModule(format!("element is not in the {side:?} module of x_{mu:?}")));
        }
        Ok(match side {
            Side::Left => x
                .terms
                .iter()
                .filter(|((w, _), _)| perm::is_distinguished_right(w, mu))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            Side::Right => self
                .to_left_form(x)
                .terms
                .into_iter()
                .filter(|((w, _), _)| perm::is_distinguished_right(&w.inverse(), mu))
                .collect(),
        })
    }

    /// `Σ c x_μ T_d L^a` (left) or `Σ c L^a T_d x_μ` (right).
    pub fn module_element(
        &self,
        mu: &Composition,
        coords: &BTreeMap<(Permutation, Exps), RingElem>,
        side: Side,
    ) -> Result<HeckeElement> {
        let x = self.x_lambda(mu)?;
        let h = HeckeElement::from_raw(self.m, self.r, coords.clone());
        match side {
            Side::Left => self.multiply(&x, &h),
            Side::Right => {
                let l = LeftForm { m: self.m, r: self.r, terms: coords.clone() };
                self.multiply(&self.from_left_form(&l), &x)
            }
        }
    }

    /// The basis `{T_u T_d L^a T_v : u ∈ 𝔖_λ, d ∈ 𝒟_{λ,μ}, v ∈ 𝒟_{ν(d)} ∩ 𝔖_μ}`.
    pub fn udv_basis(&self, lambda: &Composition, mu: &Composition) -> Vec<(UdvIndex, HeckeElement)> {
        let mut out = Vec::new();
        let exps = all_exponents(self.r, self.m);
        for d in perm::double_coset_reps(lambda, mu) {
            let nu = perm::nu_of(&perm::theta_unchecked(lambda, &d, mu));
            let vs: Vec<Permutation> = perm::young_subgroup(mu)
                .into_iter()
                .filter(|v| perm::is_distinguished_right(v, &nu))
                .collect();
            for u in perm::young_subgroup(lambda) {
                let ud = u.compose(&d);
                for a in &exps {
                    let base = self.basis_element(ud, *a, self.ring_one());
                    for v in &vs {
                        let elem = self.right_mul_word(&base, &v.reduced_word());
                        out.push((UdvIndex { u, d, a: *a, v: *v }, elem));
                    }
                }
            }
        }
        out
    }

    /// Coordinates of `x` over [`AkAlgebra::udv_basis`].
    pub fn udv_basis_coords(
        &self,
        x: &HeckeElement,
        lambda: &Composition,
        mu: &Composition,
    ) -> Result<BTreeMap<UdvIndex, RingElem>> {
        self.check(x)?;
        let basis = self.udv_basis(lambda, mu);
        let cols: Vec<&Terms> = basis.iter().map(|(_, e)| &e.terms).collect();
        let coeffs = crate::linalg::solve_exact(&cols, &x.terms, self.m, 0x5eed)?;
        Ok(basis
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((idx, _), c)| (idx, c))
            .collect())
    }

    /// Value of every coefficient in 𝔽_p at `pt`.
    pub fn eval_mod(&self, x: &HeckeElement, pt: &crate::modp::ModPoint) -> BTreeMap<(Permutation, Exps), u64> {
        x.terms
            .iter()
            .map(|(k, c)| (*k, c.eval_mod(pt)))
            .filter(|(_, v)| *v != 0)
            .collect()
    }

    /// All basis indices `(w, a)` in canonical order.
    pub fn basis_indices(&self) -> Vec<(Permutation, Exps)> {
        let exps = all_exponents(self.r, self.m);
        perm::all_permutations(self.r)
            .into_iter()
            .flat_map(|w| exps.iter().map(move |a| (w, *a)))
            .collect()
    }
}

/// Index `(u, d, a, v)` of the basis element `T_u T_d L^a T_v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UdvIndex {
    pub u: Permutation,
    pub d: Permutation,
    pub a: Exps,
    pub v: Permutation,
}

/// All of ℤ_m^r in lexicographic order.
pub fn all_exponents(r: usize, m: usize) -> Vec<Exps> {
    let mut out = Vec::new();
    let total = m.pow(r as u32);
    for code in 0..total {
        let mut a = Exps::zero(r);
        let mut x = code;
        for j in (1..=r).rev() {
            a.set(j, (x % m) as i64);
            x /= m;
        }
        out.push(a);
    }
    out
}

/// `σ^{𝐚(ν)}` as a commutative integer polynomial in the `r` variables.
/// With `bound = Some(m)` every block must satisfy `Σ a < m`.
pub(crate) fn sigma_nu_polynomial(
    nu: &Composition,
    blocks: &[Vec<usize>],
    r: usize,
    bound: Option<usize>,
) -> Result<BTreeMap<Exps, BigInt>> {
    if nu.degree() != r || blocks.len() != nu.len() {
        return Err(Error::Dimension(format!("ν = {nu:?} does not fit r = {r} with {} blocks", blocks.len())));
    }
    let mut poly: BTreeMap<Exps, BigInt> = BTreeMap::from([(Exps::zero(r), BigInt::one())]);
    for (t, a) in blocks.iter().enumerate() {
        let block = nu.block(t + 1);
        if a.len() != block.len() {
            return Err(Error::Dimension(format!("block {} has {} variables, got {} exponents", t + 1, block.len(), a.len())));
        }
        if let Some(m) = bound {
            let s: usize = a.iter().sum();
            if s >= m {
                return Err(Error::Contract(format!("block exponent sum {s} is not below m = {m}")));
            }
        }
        for (i, &mult) in a.iter().enumerate() {
            let e = elementary_poly(block.clone(), i + 1, r);
            for _ in 0..mult {
                poly = poly_mul(&poly, &e);
            }
        }
    }
    Ok(poly)
}

fn elementary_poly(vars: std::ops::Range<usize>, k: usize, r: usize) -> BTreeMap<Exps, BigInt> {
    let positions: Vec<usize> = vars.collect();
    let mut out = BTreeMap::new();
    fn rec(pos: &[usize], k: usize, start: usize, cur: &mut Exps, out: &mut BTreeMap<Exps, BigInt>) {
        if k == 0 {
            out.insert(*cur, BigInt::one());
            return;
        }
        for idx in start..pos.len() {
            cur.set(pos[idx] + 1, 1);
            rec(pos, k - 1, idx + 1, cur, out);
            cur.set(pos[idx] + 1, 0);
        }
    }
    rec(&positions, k, 0, &mut Exps::zero(r), &mut out);
    out
}

fn poly_mul(a: &BTreeMap<Exps, BigInt>, b: &BTreeMap<Exps, BigInt>) -> BTreeMap<Exps, BigInt> {
    let mut out: BTreeMap<Exps, BigInt> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea.add(eb)).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(m: usize, r: usize) -> AkAlgebra {
        AkAlgebra::new(m, r).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let h = alg(2, 2);
        let t = h.gen_t(1).unwrap();
        let tt = h.multiply(&t, &t).unwrap();
        let expected = t.scale(&(&h.q() - &h.ring_one())).add(&h.scalar(h.q()));
        assert_eq!(tt, expected);
    }

    #[test]
    fn l2_t1() {
        let h = alg(2, 2);
        let lhs = h.multiply(&h.gen_l(2).unwrap(), &h.gen_t(1).unwrap()).unwrap();
        let t1l1 = h.multiply(&h.gen_t(1).unwrap(), &h.gen_l(1).unwrap()).unwrap();
        let rhs = t1l1.add(&h.gen_l(2).unwrap().scale(&(&h.q() - &h.ring_one())));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclotomic_square() {
        let h = alg(2, 2);
        let l1 = h.gen_l(1).unwrap();
        let sq = h.multiply(&l1, &l1).unwrap();
        let (u1, u2) = (RingElem::u(2, 1).unwrap(), RingElem::u(2, 2).unwrap());
        let expected = l1.scale(&(&u1 + &u2)).sub(&h.scalar(&u1 * &u2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn x_lambda_two() {
        let h = alg(2, 2);
        let x = h.x_lambda(&Composition(vec![2])).unwrap();
        assert_eq!(x, h.gen_t(1).unwrap().add(&h.one()));
        assert!(h.eigen_test(&x, &Composition(vec![2]), Side::Left));
        assert!(h.eigen_test(&x, &Composition(vec![2]), Side::Right));
        assert!(!h.eigen_test(&h.gen_t(1).unwrap(), &Composition(vec![2]), Side::Left));
    }

    #[test]
    fn tau_of_t1_l2() {
        let h = alg(2, 2);
        let x = h.multiply(&h.gen_t(1).unwrap(), &h.gen_l(2).unwrap()).unwrap();
        let expected = h.multiply(&h.gen_l(2).unwrap(), &h.gen_t(1).unwrap()).unwrap();
        assert_eq!(h.tau(&x), expected);
    }

    #[test]
    fn sigma_example() {
        // m = 3, ν = (1,2,1,3), 𝐚 = ((1),(1,1),(1),(1,0,1))
        let h = alg(3, 7);
        let s = h
            .sigma_nu(&Composition(vec![1, 2, 1, 3]), &[vec![1], vec![1, 1], vec![1], vec![1, 0, 1]])
            .unwrap();
        let l = |j: usize| h.gen_l(j).unwrap();
        let block2 = h.product(&[&l(2).add(&l(3)), &l(2), &l(3)]).unwrap();
        let block4 = h.product(&[&l(5).add(&l(6)).add(&l(7)), &l(5), &l(6), &l(7)]).unwrap();
        let expected = h.product(&[&l(1), &block2, &l(4), &block4]).unwrap();
        assert_eq!(s, expected);
        assert!(h.sigma_nu(&Composition(vec![7]), &[vec![1, 2, 0, 0, 0, 0, 0]]).is_err());
    }

    #[test]
    fn display_round_trip_shape() {
        let h = alg(2, 2);
        let t = h.gen_t(1).unwrap();
        let tt = h.multiply(&t, &t).unwrap();
        assert_eq!(tt.to_string(), "q + (q - 1)*T1");
    }

    #[test]
    fn json_round_trip() {
        let h = alg(2, 3);
        let x = h.multiply(&h.gen_l(3).unwrap(), &h.x_lambda(&Composition(vec![2, 1])).unwrap()).unwrap();
        assert_eq!(HeckeElement::from_json(&x.to_json()).unwrap(), x);
    }
}
