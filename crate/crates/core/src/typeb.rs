//! The hyperoctahedral group W = 𝔖_{2,r} and ℋ_u(r) at `u = (−1, q₀)`, where
//! `T_0 = L_1` and `T_w` is a product along any reduced word of `w`.
//!
//! `q₀` is the ring variable `u₂`; `u₁` never appears in coefficients.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::colored::{self, ColoredMatrix, ColoredPerm};
use crate::error::{Error, Result};
use crate::hecke::{AkAlgebra, Exps, HeckeElement};
use crate::perm::{self, Composition, Permutation};
use crate::report::Outcome;
use crate::ring::RingElem;
use crate::schur;

/// Largest `|W| = 2^r r!` handled.
pub const TYPE_B_GUARD: usize = 100_000;

/// W with every `T_w` precomputed along a breadth-first reduced word.
#[derive(Debug)]
pub struct TypeB {
    r: usize,
    alg: AkAlgebra,
    words: HashMap<ColoredPerm, Vec<usize>>,
    t: HashMap<ColoredPerm, HeckeElement>,
}

impl TypeB {
    pub fn new(r: usize) -> Result<Self> {
        let size = (1..=r).product::<usize>() << r;
        if size > TYPE_B_GUARD {
            return Err(Error::Guard(format!("|W| = {size} exceeds {TYPE_B_GUARD}")));
        }
        let alg = type_b_algebra(r)?;
        let gens: Vec<ColoredPerm> = (0..r).map(|i| ColoredPerm::generator(2, r, i)).collect::<Result<_>>()?;
        let id = ColoredPerm::identity(2, r);
        let mut words = HashMap::from([(id, vec![])]);
        let mut t = HashMap::from([(id, alg.one())]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for (i, s) in gens.iter().enumerate() {
                let ws = w.mul(s)?;
                if words.contains_key(&ws) {
                    continue;
                }
                let mut word = words[&w].clone();
                word.push(i);
                t.insert(ws, gen_mul(&alg, &t[&w], i));
                words.insert(ws, word);
                queue.push_back(ws);
            }
        }
        Ok(TypeB { r, alg, words, t })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn algebra(&self) -> &AkAlgebra {
        &self.alg
    }

    pub fn elements(&self) -> impl Iterator<Item = &ColoredPerm> {
        self.words.keys()
    }

    /// ℓ_W(w).
    pub fn length(&self, w: &ColoredPerm) -> usize {
        self.words[w].len()
    }

    /// A reduced word for `w` over `0..r−1`.
    pub fn reduced_word(&self, w: &ColoredPerm) -> &[usize] {
        &self.words[w]
    }

    /// `T_w`.
    pub fn t_w(&self, w: &ColoredPerm) -> &HeckeElement {
        &self.t[w]
    }

    /// `T_{i_1}⋯T_{i_l}` for any word, reduced or not.
    pub fn t_word(&self, word: &[usize]) -> HeckeElement {
        word.iter().fold(self.alg.one(), |acc, &i| gen_mul(&self.alg, &acc, i))
    }

    pub fn element(&self, word: &[usize]) -> Result<ColoredPerm> {
        ColoredPerm::from_word(2, self.r, word)
    }

    /// Every reduced word of `w`.
    pub fn all_reduced_words(&self, w: &ColoredPerm) -> Result<Vec<Vec<usize>>> {
        let l = self.length(w);
        if l == 0 {
            return Ok(vec![vec![]]);
        }
        let mut out = Vec::new();
        for i in 0..self.r {
            let ws = w.mul(&ColoredPerm::generator(2, self.r, i)?)?;
            if self.length(&ws) < l {
                for mut word in self.all_reduced_words(&ws)? {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        Ok(out)
    }

    /// `T_D` for `D = 𝔖_λ w 𝔖_μ ⊂ W`.
    pub fn double_coset_sum(&self, lambda: &Composition, w: &ColoredPerm, mu: &Composition) -> HeckeElement {
        sum_of(&self.alg, colored::colored_double_coset(lambda, w, mu).iter().map(|x| self.t_w(x)))
    }

    /// `d_i = τ_1⋯τ_i` with `τ_j = s_{j−1}⋯s_1 s_0`.
    pub fn d(&self, i: usize) -> Result<ColoredPerm> {
        let word: Vec<usize> = (1..=i).flat_map(|j| (0..j).rev()).collect();
        self.element(&word)
    }

    /// `d^{(i)}_{a,b} = τ'_1⋯τ'_i`, `τ'_t = s_{a+t−1}⋯s_{a+1} t_{a+1}`.
    pub fn d_ab(&self, a: usize, b: usize, i: usize) -> Result<ColoredPerm> {
        if b == 0 || a + b > self.r || i > b {
            return Err(Error::Range(format!("d^({i})_{{{a},{b}}} with r = {}", self.r)));
        }
        let mut word = Vec::new();
        for t in 1..=i {
            word.extend((a + 1..a + t).rev());
            word.extend(t_word(a + 1));
        }
        self.element(&word)
    }

    /// `x_(r)σ_i` against `T_{𝔖_r d_i 𝔖_r}`.
    pub fn verify_symmetric_coset_sum(&self, i: usize) -> Result<Outcome> {
        let full = Composition::full(self.r);
        let lhs = self.alg.multiply(&self.alg.x_lambda(&full)?, &sigma_i(&self.alg, i)?)?;
        let rhs = self.double_coset_sum(&full, &self.d(i)?, &full);
        Ok(Outcome::equal(&lhs, &rhs))
    }

    /// `x^a_b σ^a_{b,i}` against `q^{−ai} T_{𝔖^a_b d^{(i)} 𝔖^a_b}`.
    pub fn verify_x_sigma(&self, a: usize, b: usize, i: usize) -> Result<Outcome> {
        let mu = mu_ab(a, b, self.r)?;
        let mut blocks: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
        if i > 0 {
            blocks[a][i - 1] = 1;
        }
        let sigma = self.alg.sigma_nu(&mu, &blocks)?;
        let lhs = self.alg.multiply(&self.alg.x_lambda(&mu)?, &sigma)?;
        let coset = self.double_coset_sum(&mu, &self.d_ab(a, b, i)?, &mu);
        let rhs = coset.scale(&RingElem::q_pow(2, -((a * i) as i32)));
        Ok(Outcome::equal(&lhs, &rhs))
    }

    /// Right side of the closed formula for `𝔟_𝔸` at `m = 2`.
    pub fn b_closed_form(&self, a: &ColoredMatrix) -> Result<HeckeElement> {
        if a.m() != 2 || a.degree() != self.r {
            return Err(Error::Dimension("expected 𝔸 ∈ Θ_2(n, r)".into()));
        }
        let (lambda, d, mu) = perm::theta_inverse(&a.abs());
        let mut word: Vec<usize> = d.reduced_word();
        let mut qexp = 0i32;
        for (i, j) in a.colored_positions() {
            let tilde = a.offset(i, j);
            let c = a.entry(i, j)[0];
            let size: usize = a.entry(i, j).iter().sum();
            qexp -= (tilde * c) as i32;
            word.extend(self.reduced_word(&self.d_ab(tilde, size, c)?).iter().copied());
        }
        let nu = a.nu();
        let tail = perm::young_subgroup(&mu).into_iter().filter(|v| perm::is_distinguished_right(v, &nu));
        let tail_sum = sum_of(&self.alg, tail.map(|v| self.t_perm(&v)).collect::<Vec<_>>().iter());
        let head = self.alg.multiply(&self.alg.x_lambda(&lambda)?, &self.t_word(&word))?;
        Ok(self.alg.multiply(&head, &tail_sum)?.scale(&RingElem::q_pow(2, qexp)))
    }

    /// `𝔟_𝔸` from its definition against the closed form.
    pub fn verify_closed_form(&self, a: &ColoredMatrix) -> Result<Outcome> {
        let lhs = schur::b_element(&self.alg, a)?;
        Ok(Outcome::equal(&lhs, &self.b_closed_form(a)?))
    }

    /// At `q = q₀ = 1`, `𝔟_𝔸` is the indicator of its double coset, read off
    /// the fiber of the colored-matrix map.
    pub fn verify_indicator_at_one(&self, a: &ColoredMatrix) -> Result<Outcome> {
        let (lambda, mu) = (a.ro(), a.co());
        let fibers = colored::fibers(2, &lambda, &mu);
        let coset = fibers
            .get(a)
            .ok_or_else(|| Error::Internal(format!("{a:?} has an empty fiber")))?;
        let lhs = specialize_group(&schur::b_element(&self.alg, a)?)?;
        let rhs = specialize_group(&sum_of(&self.alg, coset.iter().map(|w| self.t_w(w))))?;
        Ok(Outcome::from_bool(lhs == rhs, || {
            serde_json::json!({ "matrix": a, "b_at_1": format!("{lhs:?}"), "coset_at_1": format!("{rhs:?}") })
        }))
    }

    /// `verify_indicator_at_one` over all of Θ_2(n, r).
    pub fn verify_indicator_at_one_all(&self, n: usize) -> Result<Outcome> {
        let all = colored::enumerate_colored(2, n, self.r, TYPE_B_GUARD as u128)?;
        let outs = all.iter().map(|a| self.verify_indicator_at_one(a)).collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    }

    /// `T_w` agrees along every reduced word, for all `w` with `ℓ(w) ≤ max_len`.
    pub fn verify_reduced_words(&self, max_len: usize) -> Result<Outcome> {
        let mut ws: Vec<&ColoredPerm> = self.elements().filter(|w| self.length(w) <= max_len).collect();
        ws.sort();
        for w in ws {
            for word in self.all_reduced_words(w)? {
                let o = Outcome::equal(&self.t_word(&word), self.t_w(w));
                if !o.pass {
                    return Ok(o);
                }
            }
        }
        Ok(Outcome::pass())
    }

    /// The minimal elements of the `(𝔖_r, 𝔖_r)`-double cosets are exactly
    /// `d_0, …, d_r`, of lengths `i(i+1)/2`.
    pub fn verify_min_reps(&self) -> Result<Outcome> {
        let full = Composition::full(self.r);
        let mut mins: Vec<ColoredPerm> = colored::colored_double_cosets(2, &full, &full)
            .into_iter()
            .map(|dc| {
                let l = dc.iter().map(|w| self.length(w)).min().unwrap_or(0);
                let at_min: Vec<ColoredPerm> = dc.into_iter().filter(|w| self.length(w) == l).collect();
                if at_min.len() == 1 { Ok(at_min[0]) } else { Err(at_min.len()) }
            })
            .collect::<std::result::Result<_, usize>>()
            .map_err(|k| Error::Internal(format!("double coset with {k} minimal elements")))?;
        let mut ds = (0..=self.r).map(|i| self.d(i)).collect::<Result<Vec<_>>>()?;
        mins.sort();
        ds.sort();
        let lengths_ok = (0..=self.r).all(|i| self.d(i).map(|d| self.length(&d) == i * (i + 1) / 2).unwrap_or(false));
        Ok(Outcome::from_bool(mins == ds && lengths_ok, || {
            serde_json::json!({ "minimal": format!("{mins:?}"), "d": format!("{ds:?}") })
        }))
    }

    /// `d_i⁻¹ 𝔖_r d_i ∩ 𝔖_r = 𝔖_{(i, r−i)}`.
    pub fn verify_intersection(&self, i: usize) -> Result<Outcome> {
        let d = self.d(i)?;
        let dinv = d.inverse();
        let mut got = std::collections::BTreeSet::new();
        for w in perm::all_permutations(self.r) {
            let x = dinv.mul(&ColoredPerm::from_perm(2, w))?.mul(&d)?;
            if x.colors().iter().all(|&c| c == 0) {
                got.insert(x.perm());
            }
        }
        let want: std::collections::BTreeSet<Permutation> =
            perm::young_subgroup(&Composition(vec![i, self.r - i])).into_iter().collect();
        Ok(Outcome::from_bool(got == want, || serde_json::json!({ "i": i, "got": got.len(), "want": want.len() })))
    }

    /// The words `v_𝐣` number `C(r, i)` and are distinct distinguished
    /// representatives for `𝔖_{(i, r−i)}` in 𝔖_r.
    pub fn verify_v_family(&self, i: usize) -> Result<Outcome> {
        let nu = Composition(vec![i, self.r - i]);
        let mut seen = std::collections::BTreeSet::new();
        for j in increasing_tuples(self.r, i) {
            let v = Permutation::from_word(self.r, &v_word(&j))?;
            if !perm::is_distinguished_right(&v, &nu) || !seen.insert(v) {
                return Ok(Outcome::fail(serde_json::json!({ "j": j })));
            }
        }
        let expected = colored::binomial(self.r as u128, i as u128) as usize;
        Ok(Outcome::from_bool(seen.len() == expected, || serde_json::json!({ "count": seen.len(), "expected": expected })))
    }

    /// `x_(r) T_{d_i} T_{v_𝐣} = x_(r) L_{j_1}⋯L_{j_i}` for every `𝐣 ∈ ℰ_i`.
    pub fn verify_right_action(&self, i: usize) -> Result<Outcome> {
        let x = self.alg.x_lambda(&Composition::full(self.r))?;
        let mut word = self.reduced_word(&self.d(i)?).to_vec();
        let base = word.len();
        let mut outs = Vec::new();
        for j in increasing_tuples(self.r, i) {
            word.truncate(base);
            word.extend(v_word(&j));
            let lhs = self.alg.multiply(&x, &self.t_word(&word))?;
            let mut a = vec![0; self.r];
            for &jk in &j {
                a[jk - 1] = 1;
            }
            let rhs = self.alg.multiply(&x, &self.alg.jm_monomial(&a)?)?;
            outs.push(Outcome::equal(&lhs, &rhs));
        }
        Ok(Outcome::all(outs))
    }

    /// At `q = q₀ = 1` each `T_w` is a single basis vector, so the coefficient
    /// sum of `T_D` is `|D|`.
    pub fn verify_coset_cardinality(&self, lambda: &Composition, w: &ColoredPerm, mu: &Composition) -> Result<Outcome> {
        let size = colored::colored_double_coset(lambda, w, mu).len();
        let at_one = specialize_group(&self.double_coset_sum(lambda, w, mu))?;
        let total: BigRational = at_one.values().sum();
        let ok = total == BigRational::from_integer(size.into()) && at_one.values().all(|c| c.is_one());
        Ok(Outcome::from_bool(ok, || serde_json::json!({ "size": size, "sum": total.to_string() })))
    }

    /// `T_w` for `w ∈ 𝔖_r ⊂ W`.
    pub fn t_perm(&self, w: &Permutation) -> HeckeElement {
        self.alg.t_perm(*w)
    }
}

/// `[[(0,0),(1,0)],[(1,1),(0,0)]]` with `r = 3`: the expected expansion over
/// three double cosets.
pub fn example_golden(tb: &TypeB) -> Result<Outcome> {
    if tb.r != 3 {
        return Err(Error::Range("the golden example lives in r = 3".into()));
    }
    let a = ColoredMatrix::from_rows(&[vec![vec![0, 0], vec![1, 0]], vec![vec![1, 1], vec![0, 0]]])?;
    let (lambda, mu) = (a.ro(), a.co());
    let b = schur::b_element(tb.algebra(), &a)?;
    let coeff = &RingElem::q_pow(2, -1) * &(&RingElem::q(2) - &RingElem::one(2));
    let d = tb.element(&[0, 1, 0, 2])?;
    let d1 = tb.element(&[1, 0, 1, 0, 2])?;
    let d2 = tb.element(&[1, 2, 0, 1, 0, 2])?;
    let expected = tb
        .double_coset_sum(&lambda, &d, &mu)
        .add(&tb.double_coset_sum(&lambda, &d1, &mu).scale(&coeff))
        .add(&tb.double_coset_sum(&lambda, &d2, &mu).scale(&coeff));
    Ok(Outcome::equal(&b, &expected))
}

/// ℋ_u(r) at `m = 2` with `u = (−1, u₂)`.
pub fn type_b_algebra(r: usize) -> Result<AkAlgebra> {
    AkAlgebra::with_params(2, r, vec![-RingElem::one(2), RingElem::u(2, 2)?])
}

/// `(1^a, b, 1^{r−a−b})`.
pub fn mu_ab(a: usize, b: usize, r: usize) -> Result<Composition> {
    if b == 0 || a + b > r {
        return Err(Error::Range(format!("(1^{a}, {b}, …) does not fit r = {r}")));
    }
    let mut parts = vec![1; a];
    parts.push(b);
    parts.extend(std::iter::repeat_n(1, r - a - b));
    Ok(Composition(parts))
}

/// `t_k = s_{k−1}⋯s_1 s_0 s_1⋯s_{k−1}` as a word.
pub fn t_word(k: usize) -> Vec<usize> {
    (0..k).rev().chain(1..k).collect()
}

/// `v_𝐣 = (s_i⋯s_{j_i−1})(s_{i−1}⋯s_{j_{i−1}−1})⋯(s_1⋯s_{j_1−1})`.
pub fn v_word(j: &[usize]) -> Vec<usize> {
    (1..=j.len()).rev().flat_map(|k| k..j[k - 1]).collect()
}

/// ℰ_i: strictly increasing `i`-tuples in `1..=r`.
pub fn increasing_tuples(r: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=r {
            cur.push(x);
            rec(x + 1, r, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, i, &mut Vec::new(), &mut out);
    out
}

fn gen_mul(alg: &AkAlgebra, x: &HeckeElement, i: usize) -> HeckeElement {
    if i == 0 {
        alg.right_mul_l(x, 1)
    } else {
        alg.right_mul_t(x, i)
    }
}

fn sum_of<'a>(alg: &AkAlgebra, items: impl Iterator<Item = &'a HeckeElement>) -> HeckeElement {
    items.fold(alg.zero(), |acc, x| acc.add(x))
}

fn sigma_i(alg: &AkAlgebra, i: usize) -> Result<HeckeElement> {
    let r = alg.r();
    let mut a = vec![0; r];
    if i > 0 {
        a[i - 1] = 1;
    }
    alg.sigma_nu(&Composition::full(r), &[a])
}

/// Coefficients at `q = 1`, `u = (−1, 1)`.
fn specialize_group(x: &HeckeElement) -> Result<BTreeMap<(Permutation, Exps), BigRational>> {
    let one = BigRational::one();
    let u = [-one.clone(), one.clone()];
    let mut out = BTreeMap::new();
    for (w, a, c) in x.iter() {
        let v = c.specialize(&one, &u)?;
        if !v.is_zero() {
            out.insert((*w, *a), v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t0_is_l1() {
        let tb = TypeB::new(2).unwrap();
        let s0 = tb.element(&[0]).unwrap();
        assert_eq!(tb.t_w(&s0), &tb.algebra().gen_l(1).unwrap());
    }

    #[test]
    fn lengths_of_d() {
        let tb = TypeB::new(4).unwrap();
        for i in 0..=4 {
            assert_eq!(tb.length(&tb.d(i).unwrap()), i * (i + 1) / 2);
        }
    }

    #[test]
    fn golden() {
        let tb = TypeB::new(3).unwrap();
        assert!(example_golden(&tb).unwrap().pass);
    }

    #[test]
    fn part1_small() {
        let tb = TypeB::new(3).unwrap();
        for i in 0..=3 {
            assert!(tb.verify_symmetric_coset_sum(i).unwrap().pass, "i = {i}");
        }
    }

    #[test]
    fn x_sigma_r3() {
        let tb = TypeB::new(3).unwrap();
        for a in 0..3 {
            for b in 1..=3 - a {
                for i in 0..=b {
                    assert!(tb.verify_x_sigma(a, b, i).unwrap().pass, "a={a} b={b} i={i}");
                }
            }
        }
    }

    #[test]
    fn closed_form_and_specialisation_n2_r3() {
        let tb = TypeB::new(3).unwrap();
        for a in colored::enumerate_colored(2, 2, 3, 1 << 20).unwrap() {
            assert!(tb.verify_closed_form(&a).unwrap().pass, "{a:?}");
            assert!(tb.verify_indicator_at_one(&a).unwrap().pass, "{a:?}");
        }
    }

    #[test]
    fn structural_identities_r3() {
        let tb = TypeB::new(3).unwrap();
        assert!(tb.verify_reduced_words(6).unwrap().pass);
        assert!(tb.verify_min_reps().unwrap().pass);
        for i in 0..=3 {
            assert!(tb.verify_intersection(i).unwrap().pass, "i = {i}");
            assert!(tb.verify_v_family(i).unwrap().pass, "i = {i}");
            assert!(tb.verify_right_action(i).unwrap().pass, "i = {i}");
        }
        let full = Composition::full(3);
        assert!(tb.verify_coset_cardinality(&full, &tb.d(1).unwrap(), &full).unwrap().pass);
    }

    #[test]
    fn s0s1s0_words_agree() {
        let tb = TypeB::new(2).unwrap();
        let w = tb.element(&[0, 1, 0]).unwrap();
        assert_eq!(tb.t_word(&[0, 1, 0]), tb.t_word(&tb.all_reduced_words(&w).unwrap()[0]));
        assert_eq!(tb.all_reduced_words(&w).unwrap().len(), 1);
        let w0 = tb.element(&[0, 1, 0, 1]).unwrap();
        let words = tb.all_reduced_words(&w0).unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(tb.t_word(&words[0]), tb.t_word(&words[1]));
    }
}
