//! Verification suites behind `cyclo verify`.
//!
//! Every check draws its randomness from a ChaCha stream keyed by the suite
//! seed and the check name, so reports are reproducible and independent of
//! scheduling. Reports are sorted by check id.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::affine::{self, AffineAlgebra, AffineElement, EpsilonOptions};
use crate::colored;
use crate::error::{Error, Result};
use crate::hecke::{self, AkAlgebra, Exps, HeckeElement, Side};
use crate::linalg::{self, RingMatrix};
use crate::perm::{self, Composition};
use crate::report::{Check, Outcome};
use crate::ring::RingElem;
use crate::schur::{self, SchurContext, TableCache};
use crate::typeb::{self, TypeB};

pub const SUITES: &[&str] =
    &["pbw", "straighten", "basis", "rank", "commutative", "schur-mult", "typeb", "poincare", "epsilon", "affine-sym", "all"];

/// Default size guard on `|Θ_m(n, r)|`.
pub const DEFAULT_GUARD: u128 = 20_000;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteParams {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub lambda: Option<Composition>,
    pub mu: Option<Composition>,
    pub seed: u64,
    pub trials: usize,
    pub guard: u128,
    pub exact: bool,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

impl SuiteParams {
    pub fn new(m: usize, n: usize, r: usize) -> Self {
        SuiteParams { m, n, r, lambda: None, mu: None, seed: 0, trials: 3, guard: DEFAULT_GUARD, exact: false, cache_dir: None }
    }

    fn grid(&self) -> Value {
        json!({ "m": self.m, "n": self.n, "r": self.r })
    }

    /// Per-check random stream.
    fn rng(&self, check: &str) -> ChaCha8Rng {
        let h = Sha256::digest(format!("{}:{check}:{}:{}:{}", self.seed, self.m, self.n, self.r));
        ChaCha8Rng::from_seed(h.into())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: SuiteParams,
    pub pass: bool,
    pub millis: u128,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Report> {
    let start = Instant::now();
    let mut checks = match name {
        "pbw" => pbw(p),
        "straighten" => straighten(p),
        "basis" => basis(p),
        "rank" => rank(p),
        "commutative" => commutative(p),
        "schur-mult" => schur_mult(p),
        "typeb" => type_b(p),
        "poincare" => poincare(p),
        "epsilon" => epsilon(p),
        "affine-sym" => affine_sym(p),
        "all" => {
            let parts: Vec<Vec<Check>> = SUITES[..SUITES.len() - 1].par_iter().map(|s| run_named(s, p)).collect();
            parts.into_iter().flatten().collect()
        }
        other => return Err(Error::Parse(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", ")))),
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report {
        suite: name.into(),
        params: p.clone(),
        pass: checks.iter().all(Check::passed),
        millis: start.elapsed().as_millis(),
        checks,
    })
}

fn run_named(name: &str, p: &SuiteParams) -> Vec<Check> {
    run_suite(name, p).map(|r| r.checks).unwrap_or_default()
}

fn guard_theta(m: usize, n: usize, r: usize, guard: u128) -> Result<()> {
    let k = colored::colored_count(m, n, r);
    if k > guard {
        return Err(Error::Guard(format!("|Θ_{m}({n},{r})| = {k} exceeds {guard}")));
    }
    Ok(())
}

fn params_or_grid<T: Serialize>(p: &SuiteParams, extra: T) -> Value {
    let mut v = p.grid();
    if let (Value::Object(o), Ok(Value::Object(e))) = (&mut v, serde_json::to_value(extra)) {
        o.extend(e);
    }
    v
}

// ---------------------------------------------------------------- random data

fn random_coeff(m: usize, rng: &mut ChaCha8Rng) -> RingElem {
    let mut c = RingElem::int(m, rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
    c = c.mul_unit(1, rng.gen_range(-1..=1));
    if rng.gen_bool(0.3) {
        let i = rng.gen_range(1..=m);
        c = &c * &RingElem::u(m, i).expect("index in range");
    }
    c
}

pub fn random_hecke(alg: &AkAlgebra, rng: &mut ChaCha8Rng, terms: usize) -> HeckeElement {
    let idx = alg.basis_indices();
    let items = (0..terms).map(|_| {
        let (w, a) = *idx.choose(rng).expect("nonempty basis");
        (w, a, random_coeff(alg.m(), rng))
    });
    alg.from_terms(items).expect("indices come from the basis")
}

pub fn random_affine(aff: &AffineAlgebra, rng: &mut ChaCha8Rng, terms: usize, max_exp: i64) -> AffineElement {
    let ws = perm::all_permutations(aff.r());
    let mut acc = aff.zero();
    for _ in 0..terms {
        let w = *ws.choose(rng).expect("nonempty");
        let a: Vec<i64> = (0..aff.r()).map(|_| rng.gen_range(0..=max_exp)).collect();
        let e = Exps::from_slice(&a).expect("small exponents");
        acc = acc.add(&aff.basis_element(w, e, random_coeff(aff.m(), rng)));
    }
    acc
}

// ---------------------------------------------------------------------- pbw

fn pbw(p: &SuiteParams) -> Vec<Check> {
    let (m, r) = (p.m, p.r);
    let alg = match AkAlgebra::new(m, r) {
        Ok(a) => a,
        Err(e) => return vec![Check::run("pbw.setup", p.grid(), || Err(e))],
    };
    let mut out = vec![Check::run("pbw.basis-size", p.grid(), || {
        let want = m.pow(r as u32) * (1..=r).product::<usize>();
        let got = alg.basis_indices().len();
        Ok(Outcome::from_bool(got == want, || json!({ "got": got, "want": want })))
    })];
    out.push(Check::run("pbw.associativity", params_or_grid(p, json!({ "triples": 100 })), || {
        let mut rng = p.rng("associativity");
        // multiplication is trilinear, so single scaled basis terms suffice
        let triples: Vec<[HeckeElement; 3]> =
            (0..100).map(|_| [0, 1, 2].map(|_| random_hecke(&alg, &mut rng, 1))).collect();
        let outs = triples
            .par_iter()
            .map(|[x, y, z]| {
                let l = alg.multiply(&alg.multiply(x, y)?, z)?;
                let rr = alg.multiply(x, &alg.multiply(y, z)?)?;
                Ok(Outcome::equal(&l, &rr))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    }));
    out.push(Check::run("pbw.tau", params_or_grid(p, json!({ "pairs": 50 })), || {
        let mut rng = p.rng("tau");
        let mut outs = Vec::new();
        for _ in 0..50 {
            let (x, y) = (random_hecke(&alg, &mut rng, 2), random_hecke(&alg, &mut rng, 2));
            let lhs = alg.tau(&alg.multiply(&x, &y)?);
            let rhs = alg.multiply(&alg.tau(&y), &alg.tau(&x))?;
            outs.push(Outcome::equal(&lhs, &rhs));
            outs.push(Outcome::equal(&alg.tau(&alg.tau(&x)), &x));
        }
        Ok(Outcome::all(outs))
    }));
    out.push(Check::run("pbw.left-form", p.grid(), || {
        let mut rng = p.rng("left-form");
        let outs = (0..30)
            .map(|_| {
                let x = random_hecke(&alg, &mut rng, 4);
                Outcome::equal(&alg.from_left_form(&alg.to_left_form(&x)), &x)
            })
            .collect::<Vec<_>>();
        Ok(Outcome::all(outs))
    }));
    let comps = perm::compositions(p.n, r);
    let lambda = p.lambda.clone().unwrap_or_else(|| comps[0].clone());
    let mu = p.mu.clone().unwrap_or_else(|| comps[comps.len() - 1].clone());
    out.push(Check::run("pbw.udv-basis", params_or_grid(p, json!({ "lambda": lambda, "mu": mu })), || {
        let size = alg.udv_basis(&lambda, &mu).len();
        if size != alg.basis_indices().len() {
            return Ok(Outcome::fail(json!({ "size": size })));
        }
        let mut rng = p.rng("udv");
        let mut outs = Vec::new();
        for _ in 0..5 {
            let x = random_hecke(&alg, &mut rng, 3);
            let coords = alg.udv_basis_coords(&x, &lambda, &mu)?;
            let basis: BTreeMap<_, _> = alg.udv_basis(&lambda, &mu).into_iter().collect();
            let back = coords.iter().fold(alg.zero(), |acc, (k, c)| acc.add(&basis[k].scale(c)));
            outs.push(Outcome::equal(&back, &x));
        }
        Ok(Outcome::all(outs))
    }));
    out
}

// ---------------------------------------------------------------- straighten

/// `L^a T_i` by moving one `L_i` or `L_{i+1}` at a time, using
/// `L_{i+1}T_i = T_iL_i + (q−1)L_{i+1}` and `L_iT_i = T_iL_{i+1} − (q−1)L_{i+1}`.
/// Returns the exponent after `T_i` and the multiples of `(q−1)` of the
/// `T`-free terms. Nonnegative exponents only.
pub fn straighten_by_steps(a: &Exps, i: usize) -> (Exps, BTreeMap<Exps, i64>) {
    let mut prefix = *a;
    let mut suffix = Exps::zero(a.r());
    let mut free: BTreeMap<Exps, i64> = BTreeMap::new();
    loop {
        let k = if prefix.get(i + 1) > 0 {
            i + 1
        } else if prefix.get(i) > 0 {
            i
        } else {
            break;
        };
        prefix.set(k, prefix.get(k) - 1);
        let other = if k == i { i + 1 } else { i };
        let sign = if k == i { -1 } else { 1 };
        let mut dropped = prefix.add(&suffix);
        dropped.set(i + 1, dropped.get(i + 1) + 1);
        *free.entry(dropped).or_default() += sign;
        suffix.set(other, suffix.get(other) + 1);
    }
    free.retain(|_, c| *c != 0);
    (prefix.add(&suffix), free)
}

fn straighten(p: &SuiteParams) -> Vec<Check> {
    let r = p.r.max(2);
    let bound = (p.m as i64 + 2).max(4);
    let mut out = vec![Check::run("straighten.elementary", json!({ "r": r, "max_exp": bound }), || {
        let mut outs = Vec::new();
        for i in 1..r {
            for x in 0..=bound {
                for y in 0..=bound {
                    let mut a = Exps::zero(r);
                    a.set(i, x);
                    a.set(i + 1, y);
                    if r > 2 {
                        a.set(if i == 1 { 3 } else { 1 }, 1);
                    }
                    let (top, extra) = hecke::straighten_past_t(&a, i);
                    let mut got: BTreeMap<Exps, i64> = BTreeMap::new();
                    for (b, e) in extra {
                        *got.entry(b).or_default() += e as i64;
                    }
                    got.retain(|_, c| *c != 0);
                    let (want_top, want) = straighten_by_steps(&a, i);
                    outs.push(Outcome::from_bool(top == want_top && got == want, || {
                        json!({ "a": a.to_vec(), "i": i, "formula": format!("{got:?}"), "steps": format!("{want:?}") })
                    }));
                }
            }
        }
        Ok(Outcome::all(outs))
    })];
    // L_iL_{i+1} commutes with T_i, so shifting both exponents by k shifts the
    // whole expansion; this extends the check to negative exponents.
    out.push(Check::run("straighten.laurent-shift", json!({ "r": r }), || {
        let mut outs = Vec::new();
        for i in 1..r {
            for x in 0..=bound {
                for y in 0..=bound {
                    for k in -4i64..=0 {
                        let mut a = Exps::zero(r);
                        a.set(i, x);
                        a.set(i + 1, y);
                        let mut shift = Exps::zero(r);
                        shift.set(i, k);
                        shift.set(i + 1, k);
                        let (t0, e0) = hecke::straighten_past_t(&a, i);
                        let (t1, e1) = hecke::straighten_past_t(&a.add(&shift), i);
                        let moved: Vec<(Exps, i32)> = e0.into_iter().map(|(b, s)| (b.add(&shift), s)).collect();
                        outs.push(Outcome::from_bool(t1 == t0.add(&shift) && e1 == moved, || {
                            json!({ "a": a.to_vec(), "i": i, "k": k })
                        }));
                    }
                }
            }
        }
        Ok(Outcome::all(outs))
    }));
    out
}

// -------------------------------------------------------------------- basis

fn schur_context(p: &SuiteParams, n: usize) -> Result<SchurContext> {
    guard_theta(p.m, n, p.r, p.guard)?;
    SchurContext::with_guard(p.m, n, p.r, p.guard)
}

fn blocks_of(p: &SuiteParams, ctx: &SchurContext) -> Vec<(Composition, Composition)> {
    let comps = ctx.compositions();
    let ls: Vec<Composition> = p.lambda.clone().map(|l| vec![l]).unwrap_or_else(|| comps.clone());
    let ms: Vec<Composition> = p.mu.clone().map(|u| vec![u]).unwrap_or(comps);
    ls.iter().flat_map(|l| ms.iter().map(move |u| (l.clone(), u.clone()))).collect()
}

fn basis(p: &SuiteParams) -> Vec<Check> {
    let ctx = match schur_context(p, p.n) {
        Ok(c) => c,
        Err(e) => return vec![Check::run("basis.setup", p.grid(), || Err(e))],
    };
    blocks_of(p, &ctx)
        .into_par_iter()
        .flat_map_iter(|(l, u)| {
            let params = params_or_grid(p, json!({ "lambda": l, "mu": u }));
            let membership = Check::run("basis.membership", params.clone(), || {
                let mut outs = Vec::new();
                for &i in ctx.block(&l, &u) {
                    let b = ctx.b(i)?;
                    let alg = ctx.algebra();
                    let ok = alg.eigen_test(b, &l, Side::Left) && alg.eigen_test(b, &u, Side::Right);
                    outs.push(Outcome::from_bool(ok, || json!({ "matrix": ctx.basis()[i] })));
                }
                Ok(Outcome::all(outs))
            });
            let dimension = Check::run("basis.dimension", params, || {
                let want = ctx.block(&l, &u).len();
                let dims = ctx.eigen_dimensions(&l, &u, p.trials, p.seed);
                Ok(Outcome::from_bool(dims.iter().all(|&d| d == want), || json!({ "dims": dims, "want": want })))
            });
            [membership, dimension]
        })
        .collect()
}

// --------------------------------------------------------------------- rank

fn rank(p: &SuiteParams) -> Vec<Check> {
    let params = params_or_grid(p, json!({ "trials": p.trials, "exact": p.exact }));
    vec![Check::run("rank", params, || {
        let ctx = schur_context(p, p.n)?;
        let report = ctx.verify_rank(p.trials, p.seed)?;
        let mut pass = report.pass;
        if p.exact {
            for (l, u) in blocks_of(p, &ctx) {
                let idx = ctx.block(&l, &u);
                let rows = idx.iter().map(|&i| ctx.b(i).map(|x| x.terms())).collect::<Result<Vec<_>>>()?;
                let mat = RingMatrix::from_sparse_rows(&rows, p.m);
                pass &= linalg::exact_rank(&mat)? == idx.len();
            }
        }
        let witness = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(Outcome { pass, witness: Some(witness) })
    })]
}

// -------------------------------------------------------------- commutative

fn commutative(p: &SuiteParams) -> Vec<Check> {
    vec![Check::run("commutative", json!({ "m": p.m, "r": p.r }), || {
        let ctx = schur_context(p, 1)?;
        let report = ctx.verify_commutative()?;
        Ok(Outcome::from_bool(report.pass, || json!(report.failures)))
    })]
}

// --------------------------------------------------------------- schur-mult

fn schur_mult(p: &SuiteParams) -> Vec<Check> {
    let ctx = match schur_context(p, p.n) {
        Ok(c) => c,
        Err(e) => return vec![Check::run("schur-mult.setup", p.grid(), || Err(e))],
    };
    let mut out = vec![Check::run("schur-mult.associativity", params_or_grid(p, json!({ "triples": 30 })), || {
        let mut rng = p.rng("schur-assoc");
        let k = ctx.basis().len();
        let mut outs = Vec::new();
        for _ in 0..30 {
            // pick composable triples so that the products are not trivially zero
            let a = rng.gen_range(0..k);
            let bs: Vec<usize> = (0..k).filter(|&b| ctx.basis()[b].ro() == ctx.basis()[a].co()).collect();
            let b = *bs.choose(&mut rng).expect("diagonal element composes");
            let cs: Vec<usize> = (0..k).filter(|&c| ctx.basis()[c].ro() == ctx.basis()[b].co()).collect();
            let c = *cs.choose(&mut rng).expect("diagonal element composes");
            let [x, y, z] = [a, b, c].map(|i| ctx.phi(&ctx.basis()[i]));
            let (x, y, z) = (x?, y?, z?);
            let l = ctx.multiply(&ctx.multiply(&x, &y)?, &z)?;
            let rr = ctx.multiply(&x, &ctx.multiply(&y, &z)?)?;
            outs.push(Outcome::from_bool(l == rr, || json!({ "a": ctx.basis()[a], "b": ctx.basis()[b], "c": ctx.basis()[c] })));
        }
        Ok(Outcome::all(outs))
    })];
    out.push(Check::run("schur-mult.identity", p.grid(), || {
        let one = ctx.identity()?;
        let outs = ctx
            .basis()
            .iter()
            .map(|a| {
                let x = ctx.phi(a)?;
                Ok(Outcome::from_bool(ctx.multiply(&one, &x)? == x && ctx.multiply(&x, &one)? == x, || json!({ "matrix": a })))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    }));
    if let Some(dir) = &p.cache_dir {
        out.push(Check::run("schur-mult.cache", p.grid(), || {
            let cache = TableCache::new(dir);
            let cached = cache.table_for(&ctx)?;
            let fresh = SchurContext::with_guard(p.m, p.n, p.r, p.guard)?.structure_table()?;
            let same = serde_json::to_value(&cached).ok() == serde_json::to_value(&fresh).ok();
            Ok(Outcome::from_bool(same, || json!("cached table differs from a fresh computation")))
        }));
    }
    out
}

// ---------------------------------------------------------------------- typeb

fn type_b(p: &SuiteParams) -> Vec<Check> {
    let r = p.r;
    let tb = match TypeB::new(r) {
        Ok(t) => t,
        Err(e) => return vec![Check::run("typeb.setup", json!({ "r": r }), || Err(e))],
    };
    let tb = &tb;
    let pr = json!({ "r": r });
    let mut out = vec![
        Check::run("typeb.reduced-words", json!({ "r": r, "max_len": 6 }), || tb.verify_reduced_words(6)),
        Check::run("typeb.minimal-reps", pr.clone(), || tb.verify_min_reps()),
    ];
    for i in 0..=r {
        let pi = json!({ "r": r, "i": i });
        out.push(Check::run("typeb.intersection", pi.clone(), || tb.verify_intersection(i)));
        out.push(Check::run("typeb.v-family", pi.clone(), || tb.verify_v_family(i)));
        out.push(Check::run("typeb.right-action", pi.clone(), || tb.verify_right_action(i)));
        out.push(Check::run("typeb.part1", pi.clone(), || tb.verify_symmetric_coset_sum(i)));
        out.push(Check::run("typeb.coset-size", pi, || {
            let full = Composition::full(r);
            tb.verify_coset_cardinality(&full, &tb.d(i)?, &full)
        }));
    }
    for a in 0..r {
        for b in 1..=r - a {
            for i in 0..=b {
                out.push(Check::run("typeb.x-sigma", json!({ "r": r, "a": a, "b": b, "i": i }), || {
                    tb.verify_x_sigma(a, b, i)
                }));
            }
        }
    }
    let n = p.n;
    out.push(Check::run("typeb.closed-form", json!({ "n": n, "r": r }), || {
        let all = colored::enumerate_colored(2, n, r, p.guard)?;
        let outs = all.par_iter().map(|a| tb.verify_closed_form(a)).collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    }));
    out.push(Check::run("typeb.part2", json!({ "n": n, "r": r }), || {
        if r > 3 || n > 2 {
            return Err(Error::Guard("the q = 1 comparison runs for r ≤ 3, n ≤ 2".into()));
        }
        tb.verify_indicator_at_one_all(n)
    }));
    if r == 3 {
        out.push(Check::run("typeb.golden", pr, || typeb::example_golden(tb)));
    }
    out
}

// ------------------------------------------------------------------ poincare

fn poincare(p: &SuiteParams) -> Vec<Check> {
    let ctx = match schur_context(p, p.r) {
        Ok(c) => c,
        Err(e) => return vec![Check::run("poincare.setup", json!({ "m": p.m, "n": p.r, "r": p.r }), || Err(e))],
    };
    perm::compositions(p.r, p.r)
        .into_iter()
        .map(|l| {
            Check::run("poincare", json!({ "m": p.m, "n": p.r, "r": p.r, "lambda": l }), || {
                let d = schur::morita_defect(&ctx, &l)?;
                Ok(Outcome::from_bool(d.is_zero(), || d.to_json()))
            })
        })
        .collect()
}

// ------------------------------------------------------------------- epsilon

fn epsilon(p: &SuiteParams) -> Vec<Check> {
    let (m, r) = (p.m, p.r);
    let setup = AkAlgebra::new(m, r).and_then(|h| Ok((h, AffineAlgebra::new(m, r)?)));
    let (h, aff) = match setup {
        Ok(x) => x,
        Err(e) => return vec![Check::run("epsilon.setup", p.grid(), || Err(e))],
    };
    let opts = EpsilonOptions::default();
    let mut out = vec![Check::run("epsilon.multiplicative", params_or_grid(p, json!({ "pairs": 100 })), || {
        let mut rng = p.rng("epsilon");
        let pairs: Vec<(AffineElement, AffineElement)> = (0..100)
            .map(|_| (random_affine(&aff, &mut rng, 1, m as i64), random_affine(&aff, &mut rng, 1, m as i64)))
            .collect();
        let outs = pairs
            .par_iter()
            .map(|(x, y)| {
                let lhs = affine::epsilon(&h, &aff.multiply(x, y)?, opts)?;
                let rhs = h.multiply(&affine::epsilon(&h, x, opts)?, &affine::epsilon(&h, y, opts)?)?;
                Ok(Outcome::equal(&lhs, &rhs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    })];
    out.push(Check::run("epsilon.basis", p.grid(), || {
        guard_theta(m, p.n, r, p.guard)?;
        let all = colored::enumerate_colored(m, p.n, r, p.guard)?;
        let outs = all
            .par_iter()
            .map(|a| {
                let lhs = affine::epsilon(&h, &schur::b_element_affine(&aff, a)?, opts)?;
                Ok(Outcome::equal(&lhs, &schur::b_element(&h, a)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    }));
    out
}

// ---------------------------------------------------------------- affine-sym

/// Coefficient symmetry of `x_(r)`-intersection elements: on the cyclotomic
/// basis elements `𝔟_𝔸` with `λ = μ = (r)`, and on `x_(r)σ^𝐚(X)` in ℋ_Δ.
fn affine_sym(p: &SuiteParams) -> Vec<Check> {
    let (m, r) = (p.m, p.r);
    let mut out = vec![Check::run("affine-sym.cyclotomic", json!({ "m": m, "r": r }), || {
        let ctx = schur_context(p, 1)?;
        let outs = (0..ctx.basis().len())
            .map(|i| {
                let coords = ctx.symmetric_coords(i)?;
                Ok(Outcome::from_bool(schur::coefficients_symmetric(&coords, r), || json!({ "matrix": ctx.basis()[i] })))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome::all(outs))
    })];
    out.push(Check::run("affine-sym.affine", json!({ "m": m, "r": r }), || {
        let aff = AffineAlgebra::new(m, r)?;
        let x = aff.x_lambda(&Composition::full(r))?;
        let mut outs = Vec::new();
        for a in perm::bounded_vectors(r, 3) {
            let z = aff.multiply(&x, &aff.sigma(&a)?)?;
            let coords = aff.symmetric_coords(&z)?;
            let right_ok = (1..r).all(|i| aff.right_mul_t(&z, i) == z.scale(&RingElem::q(m)));
            outs.push(Outcome::from_bool(right_ok && schur::coefficients_symmetric(&coords, r), || json!({ "a": a })));
        }
        Ok(Outcome::all(outs))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steps_match_small() {
        let a = Exps::from_slice(&[0, 2]).unwrap();
        let (top, free) = straighten_by_steps(&a, 1);
        assert_eq!(top.to_vec(), vec![2, 0]);
        assert_eq!(free.len(), 2);
    }

    #[test]
    fn trivial_grid_all() {
        let p = SuiteParams::new(1, 1, 1);
        let rep = run_suite("all", &p).unwrap();
        assert!(rep.pass, "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteParams::new(1, 1, 1)).is_err());
    }
}
