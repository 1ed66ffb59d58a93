//! Reference implementations written without the library's engine.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cyclohecke::colored::{self, ColoredPerm};
use cyclohecke::hecke::HeckeElement;
use cyclohecke::perm::{self as perms, Composition};
use cyclohecke::ring::RingElem;

/// `Σ c q^e`, zero coefficients never stored.
pub type Laurent = BTreeMap<i32, i64>;

pub fn laurent_add(acc: &mut Laurent, e: i32, c: i64) {
    let v = acc.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        acc.remove(&e);
    }
}

pub fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            laurent_add(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

pub fn laurent_scale(a: &Laurent, e: i32, c: i64) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        laurent_add(&mut out, ea + e, ca * c);
    }
    out
}

pub fn q_minus_one() -> Laurent {
    Laurent::from([(0, -1), (1, 1)])
}

/// `None` when a `u` variable occurs.
pub fn laurent_of(c: &RingElem) -> Option<Laurent> {
    let mut out = Laurent::new();
    for (qe, ue, k) in c.terms() {
        if ue.iter().any(|&x| x != 0) {
            return None;
        }
        laurent_add(&mut out, qe, i64::try_from(k).ok()?);
    }
    Some(out)
}

pub fn ring_of(m: usize, l: &Laurent) -> RingElem {
    let mut out = RingElem::zero(m);
    for (e, c) in l {
        out += &RingElem::monomial(m, *c, *e, &[]);
    }
    out
}

/// One-line notation; `word_perm` fixes how words are read.
pub type Perm = Vec<usize>;

/// `s_{i_1}⋯s_{i_k}` acting on positions from the right.
pub fn word_perm(r: usize, word: &[usize]) -> Perm {
    let mut w: Perm = (0..r).collect();
    for &i in word {
        w.swap(i - 1, i);
    }
    w
}

/// A reduced word, peeling right descents.
pub fn reduced_word(w: &Perm) -> Vec<usize> {
    let mut w = w.clone();
    let mut word = Vec::new();
    while let Some(i) = (1..w.len()).find(|&i| w[i - 1] > w[i]) {
        w.swap(i - 1, i);
        word.push(i);
    }
    word.reverse();
    word
}

/// Iwahori-Hecke algebra of type A over ℤ[q^{±1}], with `(T_s − q)(T_s + 1) = 0`.
pub type TypeAElem = BTreeMap<Perm, Laurent>;

fn add_into(acc: &mut TypeAElem, w: Perm, c: &Laurent) {
    let slot = acc.entry(w.clone()).or_default();
    for (e, k) in c {
        laurent_add(slot, *e, *k);
    }
    if slot.is_empty() {
        acc.remove(&w);
    }
}

pub fn type_a_mul_s(x: &TypeAElem, i: usize) -> TypeAElem {
    let mut out = TypeAElem::new();
    for (w, c) in x {
        let mut ws = w.clone();
        ws.swap(i - 1, i);
        if w[i - 1] < w[i] {
            add_into(&mut out, ws, c);
        } else {
            add_into(&mut out, w.clone(), &laurent_mul(c, &q_minus_one()));
            add_into(&mut out, ws, &laurent_scale(c, 1, 1));
        }
    }
    out
}

pub fn type_a_mul(x: &TypeAElem, y: &TypeAElem) -> TypeAElem {
    let mut out = TypeAElem::new();
    for (w, c) in y {
        let mut z = x.clone();
        for i in reduced_word(w) {
            z = type_a_mul_s(&z, i);
        }
        for (v, d) in z {
            add_into(&mut out, v, &laurent_mul(&d, c));
        }
    }
    out
}

/// Reads an `m = 1` element through reduced words; `None` if it involves `u₁`.
pub fn type_a_of(x: &HeckeElement) -> Option<TypeAElem> {
    let mut out = TypeAElem::new();
    for (w, a, c) in x.iter() {
        if !a.is_zero() {
            return None;
        }
        add_into(&mut out, word_perm(x.r(), &w.reduced_word()), &laurent_of(c)?);
    }
    Some(out)
}

pub type Part = BTreeMap<(u32, u32), Laurent>;

/// `L_i^a L_{i+1}^b T_i` from the two elementary relations
///
/// ```text
/// L_{i+1} T_i = T_i L_i + (q − 1) L_{i+1}
/// L_i T_i     = T_i L_{i+1} − (q − 1) L_{i+1}
/// ```
///
/// applied one factor at a time. Returns the `T_i L^(c, d)` part and the
/// `L^(c, d)` part, keyed by the exponents of `L_i, L_{i+1}`.
pub fn straighten_oracle(a: u32, b: u32) -> (Part, Part) {
    fn add(p: &mut Part, k: (u32, u32), c: &Laurent) {
        let slot = p.entry(k).or_default();
        for (e, v) in c {
            laurent_add(slot, *e, *v);
        }
        if slot.is_empty() {
            p.remove(&k);
        }
    }
    if a == 0 && b == 0 {
        return (Part::from([((0, 0), Laurent::from([(0, 1)]))]), Part::new());
    }
    let (with_t, plain) = if b > 0 {
        straighten_oracle(a, b - 1)
    } else {
        straighten_oracle(a - 1, 0)
    };
    // L's commute, so the peeled factor slides to the right of the T_i part
    let mut t = Part::new();
    let mut l = Part::new();
    if b > 0 {
        // L_i^a L_{i+1}^{b-1} (T_i L_i + (q−1) L_{i+1})
        for ((c, d), k) in &with_t {
            add(&mut t, (c + 1, *d), k);
        }
        for ((c, d), k) in &plain {
            add(&mut l, (c + 1, *d), k);
        }
        add(&mut l, (a, b), &q_minus_one());
    } else {
        // L_i^{a−1} (T_i L_{i+1} − (q−1) L_{i+1})
        for ((c, d), k) in &with_t {
            add(&mut t, (*c, d + 1), k);
        }
        for ((c, d), k) in &plain {
            add(&mut l, (*c, d + 1), k);
        }
        add(&mut l, (a - 1, 1), &laurent_scale(&q_minus_one(), 0, -1));
    }
    (t, l)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

pub fn young(m: usize, lambda: &Composition) -> Vec<ColoredPerm> {
    perms::young_subgroup(lambda).into_iter().map(|w| ColoredPerm::from_perm(m, w)).collect()
}

/// Double cosets as explicit sets `{x w y}`.
pub fn double_cosets_by_products(m: usize, lambda: &Composition, mu: &Composition) -> Vec<BTreeSet<ColoredPerm>> {
    let (left, right) = (young(m, lambda), young(m, mu));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in colored::all_colored_perms(m, lambda.degree()) {
        if seen.contains(&w) {
            continue;
        }
        let dc: BTreeSet<ColoredPerm> =
            left.iter().flat_map(|x| right.iter().map(move |y| x.mul(&w).unwrap().mul(y).unwrap())).collect();
        seen.extend(dc.iter().copied());
        out.push(dc);
    }
    out
}

/// Sequences of length `k` with sum below `m`.
pub fn bounded_sum_sequences(k: usize, m: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::from([vec![]]);
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                let room = m - 1 - s.iter().sum::<usize>();
                (0..=room).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}
