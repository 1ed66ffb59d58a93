//! The coefficient ring ℤ[q, q⁻¹, u₁, …, u_m].
//!
//! Elements are sparse sums of monomials `c · q^e · u₁^k₁ ⋯ u_m^k_m` kept sorted
//! by the lexicographic order on `(e, k₁, …, k_m)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::modp::{self, ModPoint};

/// Upper bound on the number of `u` variables.
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub q: i32,
    pub u: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, u: [0; MAX_VARS] };

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut u = [0u16; MAX_VARS];
        for (k, slot) in u.iter_mut().enumerate() {
            *slot = self.u[k]
                .checked_add(other.u[k])
                .expect("u exponent overflow");
        }
        Monomial {
            q: self.q.checked_add(other.q).expect("q exponent overflow"),
            u,
        }
    }

    /// `self / other` when the quotient has nonnegative u-exponents.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut u = [0u16; MAX_VARS];
        for (k, slot) in u.iter_mut().enumerate() {
            *slot = self.u[k].checked_sub(other.u[k])?;
        }
        Some(Monomial { q: self.q - other.q, u })
    }
}

/// Integer coefficient: machine word until an operation overflows.
///
/// Invariant: `Big` never holds a value that fits in `i64`, so equality and
/// hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Coef {
    Small(i64),
    Big(BigInt),
}

impl Coef {
    fn from_big(b: BigInt) -> Coef {
        match b.to_i64() {
            Some(v) => Coef::Small(v),
            None => Coef::Big(b),
        }
    }

    pub(crate) fn to_big(&self) -> BigInt {
        match self {
            Coef::Small(v) => BigInt::from(*v),
            Coef::Big(b) => b.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Coef::Small(0))
    }

    fn is_one(&self) -> bool {
        matches!(self, Coef::Small(1))
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coef::Small(v) => *v < 0,
            Coef::Big(b) => b.is_negative(),
        }
    }

    fn neg(&self) -> Coef {
        match self {
            Coef::Small(v) => v.checked_neg().map_or_else(|| Coef::from_big(-BigInt::from(*v)), Coef::Small),
            Coef::Big(b) => Coef::from_big(-b),
        }
    }

    fn add(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(v) = a.checked_add(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_big(self.to_big() + o.to_big())
    }

    fn sub(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(v) = a.checked_sub(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_big(self.to_big() - o.to_big())
    }

    fn mul(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_big(self.to_big() * o.to_big())
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Small(v) => write!(f, "{v}"),
            Coef::Big(b) => write!(f, "{b}"),
        }
    }
}

/// Exact element of ℤ[q^{±1}, u₁..u_m].
///
/// Invariant: `terms` is strictly increasing in the monomial and carries no zero
/// coefficient; exponents of `u_k` for `k ≥ m` are zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    m: u8,
    terms: Vec<(Monomial, Coef)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl RingElem {
    pub fn zero(m: usize) -> Self {
        assert!(m <= MAX_VARS, "at most {MAX_VARS} u-variables are supported");
        RingElem { m: m as u8, terms: Vec::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::int(m, 1)
    }

    pub fn int(m: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(m, c, 0, &[])
    }

    pub fn q(m: usize) -> Self {
        Self::q_pow(m, 1)
    }

    pub fn q_pow(m: usize, e: i32) -> Self {
        Self::monomial(m, 1, e, &[])
    }

    /// The variable `u_i` (1-based).
    pub fn u(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::Range(format!("u{i} is not among u1..u{m}")));
        }
        let mut e = vec![0u16; m];
        e[i - 1] = 1;
        Ok(Self::monomial(m, 1, 0, &e))
    }

    /// `c · q^qe · ∏ u_k^{ue[k]}`; missing trailing u-exponents are zero.
    pub fn monomial(m: usize, c: impl Into<BigInt>, qe: i32, ue: &[u16]) -> Self {
        let mut out = Self::zero(m);
        assert!(ue.len() <= m, "u-exponent vector longer than m");
        let c = Coef::from_big(c.into());
        if !c.is_zero() {
            let mut u = [0u16; MAX_VARS];
            u[..ue.len()].copy_from_slice(ue);
            out.terms.push((Monomial { q: qe, u }, c));
        }
        out
    }

    fn from_mono(m: usize, mono: Monomial, c: Coef) -> Self {
        let mut out = Self::zero(m);
        if !c.is_zero() {
            out.terms.push((mono, c));
        }
        out
    }

    /// Builds a canonical element from arbitrary (possibly repeated) terms.
    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (i32, Vec<u16>, BigInt)>) -> Result<Self> {
        let mut raw = Vec::new();
        for (qe, ue, c) in terms {
            if ue.len() != m {
                return Err(Error::Dimension(format!(
                    "monomial has {} u-exponents, ring has m = {m}",
                    ue.len()
                )));
            }
            let mut u = [0u16; MAX_VARS];
            u[..m].copy_from_slice(&ue);
            raw.push((Monomial { q: qe, u }, Coef::from_big(c)));
        }
        Ok(Self::collect(m, raw))
    }

    fn collect(m: usize, mut raw: Vec<(Monomial, Coef)>) -> Self {
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(Monomial, Coef)> = Vec::with_capacity(raw.len());
        for (mono, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == mono => *acc = acc.add(&c),
                _ => terms.push((mono, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        RingElem { m: m as u8, terms }
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order as `(q-exponent, u-exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &[u16], BigInt)> {
        let m = self.m();
        self.terms.iter().map(move |(mono, c)| (mono.q, &mono.u[..m], c.to_big()))
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, Coef)] {
        &self.terms
    }

    /// The same polynomial in ℛ_{m'}, `m' ≥ m`.
    pub fn widen(&self, m: usize) -> Result<RingElem> {
        if m < self.m() || m > MAX_VARS {
            return Err(Error::Dimension(format!("cannot view ℛ_{} inside ℛ_{m}", self.m)));
        }
        Ok(RingElem { m: m as u8, terms: self.terms.clone() })
    }

    /// The integer value if this is a constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(mono, c)] if *mono == Monomial::ONE => Some(c.to_big()),
            _ => None,
        }
    }

    /// `Some((c, e))` when `self = c·q^e` with `c = ±1`, i.e. a unit of the ring.
    pub fn as_unit(&self) -> Option<(i32, i32)> {
        match self.terms.as_slice() {
            [(mono, c)] if mono.u.iter().all(|&k| k == 0) => {
                if c.is_one() {
                    Some((1, mono.q))
                } else if c.neg().is_one() {
                    Some((-1, mono.q))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<RingElem> {
        self.as_unit()
            .map(|(s, e)| RingElem::monomial(self.m(), s, -e, &[]))
    }

    fn check_m(&self, other: &RingElem) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Dimension(format!(
                "ring elements over m = {} and m = {}",
                self.m, other.m
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check_m(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check_m(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check_m(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &RingElem, negate: bool) -> RingElem {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (mono, c) = &other.terms[j];
                    terms.push((*mono, if negate { c.neg() } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        self.terms[i].1.sub(&other.terms[j].1)
                    } else {
                        self.terms[i].1.add(&other.terms[j].1)
                    };
                    if !c.is_zero() {
                        terms.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        RingElem { m: self.m, terms }
    }

    fn product(&self, other: &RingElem) -> RingElem {
        if self.is_zero() || other.is_zero() {
            return RingElem::zero(self.m());
        }
        if let Some((s, e)) = other.as_unit() {
            return self.mul_unit(s, e);
        }
        if let Some((s, e)) = self.as_unit() {
            return other.mul_unit(s, e);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Self::collect(self.m(), raw)
    }

    /// Multiplication by `s·q^e` with `s = ±1`; keeps the term order.
    pub fn mul_unit(&self, s: i32, e: i32) -> RingElem {
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let mono = Monomial { q: mono.q + e, u: mono.u };
                (mono, if s < 0 { c.neg() } else { c.clone() })
            })
            .collect();
        RingElem { m: self.m, terms }
    }

    pub fn scale(&self, k: &BigInt) -> RingElem {
        if k.is_zero() {
            return RingElem::zero(self.m());
        }
        let k = Coef::from_big(k.clone());
        let terms = self.terms.iter().map(|(mono, c)| (*mono, c.mul(&k))).collect();
        RingElem { m: self.m, terms }
    }

    pub fn pow(&self, k: u32) -> RingElem {
        let mut acc = RingElem::one(self.m());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d` in the ring, or `None` if `d` does not divide `self`.
    ///
    /// Division by leading terms for the lex order, which is a group order on
    /// ℤ × ℕ^m; the quotient's terms are bounded below by `tt(self)/tt(d)`,
    /// which stops the loop when the division is not exact.
    pub fn div_exact(&self, d: &RingElem) -> Option<RingElem> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(RingElem::zero(self.m()));
        }
        if let Some(inv) = d.unit_inverse() {
            return Some(self * &inv);
        }
        let (d_lead, d_lc) = d.terms.last().unwrap();
        let (d_tail, _) = d.terms.first().unwrap();
        let floor = self.terms.first().unwrap().0.div(d_tail)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((lead, lc)) = rem.terms.last() {
            let mono = lead.div(d_lead)?;
            if mono < floor {
                return None;
            }
            let (lc, d_lc) = (lc.to_big(), d_lc.to_big());
            if !(&lc % &d_lc).is_zero() {
                return None;
            }
            let c = Coef::from_big(lc / d_lc);
            let t = RingElem::from_mono(self.m(), mono, c.clone());
            rem = &rem - &(d * &t);
            quot.push((mono, c));
        }
        Some(Self::collect(self.m(), quot))
    }

    /// Value under `q ↦ q_val`, `u_k ↦ u_vals[k]` over ℚ.
    pub fn specialize(&self, q_val: &BigRational, u_vals: &[BigRational]) -> Result<BigRational> {
        if u_vals.len() != self.m() {
            return Err(Error::Dimension(format!(
                "{} u-values supplied for m = {}",
                u_vals.len(),
                self.m
            )));
        }
        let mut acc = BigRational::zero();
        for (mono, c) in &self.terms {
            if mono.q < 0 && q_val.is_zero() {
                return Err(Error::Division("q = 0 at a negative power of q".into()));
            }
            let mut t = BigRational::from_integer(c.to_big());
            t *= rational_pow(q_val, mono.q);
            for (k, v) in u_vals.iter().enumerate() {
                if mono.u[k] > 0 {
                    t *= rational_pow(v, mono.u[k] as i32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Value in 𝔽_p at a prime-field point.
    pub fn eval_mod(&self, pt: &ModPoint) -> u64 {
        let mut acc = 0u64;
        for (mono, c) in &self.terms {
            let mut t = match c {
                Coef::Small(v) => modp::from_i64(*v),
                Coef::Big(b) => modp::from_bigint(b),
            };
            t = modp::mul(t, pt.q_pow(mono.q));
            for k in 0..self.m() {
                if mono.u[k] > 0 {
                    t = modp::mul(t, modp::pow(pt.u[k], mono.u[k] as u64));
                }
            }
            acc = modp::add(acc, t);
        }
        acc
    }

    /// Substitutes `u_k ↦ vals[k]` (ring elements over the same m); `q` is kept.
    pub fn substitute_u(&self, vals: &[RingElem]) -> Result<RingElem> {
        if vals.len() != self.m() {
            return Err(Error::Dimension("substitution length differs from m".into()));
        }
        let mut acc = RingElem::zero(self.m());
        for (mono, c) in &self.terms {
            let mut t = RingElem::from_mono(self.m(), Monomial { q: mono.q, u: [0; MAX_VARS] }, c.clone());
            for (k, v) in vals.iter().enumerate() {
                v.check_m(self)?;
                if mono.u[k] > 0 {
                    t = &t * &v.pow(mono.u[k] as u32);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }
}

fn rational_pow(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Applies `op` to `a` and `b`; `b` is ignored for `Neg`.
pub fn ring_arith(a: &RingElem, b: &RingElem, op: RingOp) -> Result<RingElem> {
    match op {
        RingOp::Add => a.try_add(b),
        RingOp::Sub => a.try_sub(b),
        RingOp::Mul => a.try_mul(b),
        RingOp::Neg => Ok(-a),
    }
}

/// `e_k(u₁, …, u_m)`.
pub fn elementary_symmetric_params(k: usize, m: usize) -> Result<RingElem> {
    if k > m {
        return Err(Error::Range(format!("e_{k} requested with m = {m}")));
    }
    let vars = (1..=m).map(|i| RingElem::u(m, i)).collect::<Result<Vec<_>>>()?;
    Ok(elementary_symmetric(&vars, k, m))
}

/// `e_k` of arbitrary ring elements, by the recurrence over prefixes.
pub fn elementary_symmetric(vals: &[RingElem], k: usize, m: usize) -> RingElem {
    // row[j] = e_j of the prefix processed so far
    let mut row = vec![RingElem::zero(m); k + 1];
    row[0] = RingElem::one(m);
    for v in vals {
        for j in (1..=k).rev() {
            let t = &row[j - 1] * v;
            row[j] += &t;
        }
    }
    row.swap_remove(k)
}

/// `∏_i [λ_i]_q!`, the Poincaré polynomial of the Young subgroup 𝔖_λ.
pub fn poincare_polynomial(lambda: &[usize], m: usize) -> RingElem {
    let mut acc = RingElem::one(m);
    for &part in lambda {
        for k in 1..=part {
            // [k]_q = 1 + q + … + q^{k-1}
            let qint = RingElem::collect(
                m,
                (0..k as i32)
                    .map(|e| (Monomial { q: e, u: [0; MAX_VARS] }, Coef::Small(1)))
                    .collect(),
            );
            acc = &acc * &qint;
        }
    }
    acc
}

impl AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, rhs: &RingElem) {
        self.check_m(rhs).expect("ring dimension mismatch");
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&RingElem> for RingElem {
    fn sub_assign(&mut self, rhs: &RingElem) {
        self.check_m(rhs).expect("ring dimension mismatch");
        *self = self.merge(rhs, true);
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.try_add(rhs).expect("ring dimension mismatch")
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self.try_sub(rhs).expect("ring dimension mismatch")
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.try_mul(rhs).expect("ring dimension mismatch")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.mul_unit(-1, 0)
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        &self + &rhs
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        &self - &rhs
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl fmt::Display for RingElem {
    /// Prints in the expression syntax accepted by the CLI parser, highest term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if mono.q != 0 {
                factors.push(if mono.q == 1 { "q".to_string() } else { format!("q^{}", mono.q) });
            }
            for k in 0..self.m() {
                match mono.u[k] {
                    0 => {}
                    1 => factors.push(format!("u{}", k + 1)),
                    e => factors.push(format!("u{}^{e}", k + 1)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem[m={}]({self})", self.m)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: serde_json::Number,
    q: i32,
    u: Vec<u16>,
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(q, u, c)| TermJson {
                c: c.to_string().parse().expect("integer literal"),
                q,
                u: u.to_vec(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl RingElem {
    /// Parses the JSON term array; the ring size is taken from `m`.
    pub fn from_json(v: &serde_json::Value, m: usize) -> Result<RingElem> {
        let terms: Vec<TermJson> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut raw = Vec::new();
        for t in terms {
            let c: BigInt = t
                .c
                .to_string()
                .parse()
                .map_err(|_| Error::Parse(format!("coefficient {} is not an integer", t.c)))?;
            raw.push((t.q, t.u, c));
        }
        RingElem::from_terms(m, raw)
    }
}

/// Deserializes with m inferred from the first term (0 when empty).
impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let m = v
            .as_array()
            .and_then(|a| a.first())
            .and_then(|t| t.get("u"))
            .and_then(|u| u.as_array())
            .map_or(0, |u| u.len());
        RingElem::from_json(&v, m).map_err(D::Error::custom)
    }
}

/// Small integers for tests and constants.
impl RingElem {
    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|c| c.to_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(m: usize, i: usize) -> RingElem {
        RingElem::u(m, i).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let q = RingElem::q(0);
        assert!((&q + &(-&q)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let q = RingElem::q(0);
        let one = RingElem::one(0);
        let lhs = &(&q - &one) * &(&q + &one);
        assert_eq!(lhs, &(&q * &q) - &one);
    }

    #[test]
    fn elementary_symmetric_small() {
        assert_eq!(elementary_symmetric_params(1, 2).unwrap(), &u(2, 1) + &u(2, 2));
        assert!(elementary_symmetric_params(0, 3).unwrap().is_one());
        assert!(elementary_symmetric_params(4, 3).is_err());
    }

    #[test]
    fn mismatched_m_is_an_error() {
        assert!(RingElem::q(1).try_add(&RingElem::q(2)).is_err());
    }

    #[test]
    fn poincare_small() {
        assert!(poincare_polynomial(&[1, 1], 0).is_one());
        let q = RingElem::q(0);
        assert_eq!(poincare_polynomial(&[2], 0), &RingElem::one(0) + &q);
    }

    #[test]
    fn exact_division() {
        let q = RingElem::q(2);
        let a = &(&q - &RingElem::one(2)) * &(&u(2, 1) + &q);
        let d = &u(2, 1) + &q;
        assert_eq!(a.div_exact(&d).unwrap(), &q - &RingElem::one(2));
        // 1/(1-q) is not a Laurent polynomial
        assert!(RingElem::one(2).div_exact(&(&RingElem::one(2) - &q)).is_none());
        assert!(u(2, 1).div_exact(&u(2, 2)).is_none());
    }

    #[test]
    fn json_round_trip() {
        let x = &(&u(2, 1) * &RingElem::q_pow(2, -3)) - &RingElem::int(2, BigInt::from(7u64) << 80);
        let s = serde_json::to_string(&x).unwrap();
        let back = RingElem::from_json(&serde_json::from_str(&s).unwrap(), 2).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn display_is_readable() {
        let q = RingElem::q(0);
        assert_eq!((&q - &RingElem::one(0)).to_string(), "q - 1");
        assert_eq!((-&q).to_string(), "-q");
    }
}
