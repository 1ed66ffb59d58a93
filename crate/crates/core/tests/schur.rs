//! Products in the slim Schur algebra against their action on generators.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclohecke::hecke::{Exps, HeckeElement};
use cyclohecke::schur::{self, SchurContext};

/// `h'` with `𝔟_𝔸 = x_{ro 𝔸} h'`, read off the defining product.
fn cofactor(ctx: &SchurContext, a: &cyclohecke::colored::ColoredMatrix) -> HeckeElement {
    let h = ctx.algebra();
    let p = schur::b_parts(a);
    let td = h.right_mul_word(&h.one(), &p.d.reduced_word());
    let sigma = h.sigma_nu(&p.nu, &p.a_ddot).unwrap();
    let sum = h.from_terms(p.vs.iter().map(|v| (*v, Exps::zero(h.r()), h.ring_one()))).unwrap();
    h.product(&[&td, &sigma, &sum]).unwrap()
}

/// `Φ_𝔸Φ_𝔹` sends `x_{co 𝔹}` to `𝔟_𝔸 h'_𝔹`; the computed coordinates must
/// rebuild exactly that element.
fn check_pairs(m: usize, n: usize, r: usize, sample: Option<usize>) {
    let ctx = SchurContext::new(m, n, r).unwrap();
    let h = ctx.algebra();
    let k = ctx.basis().len();
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
    if let Some(s) = sample {
        pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
        pairs.truncate(s);
    }
    for (ia, ib) in pairs {
        let (a, b) = (&ctx.basis()[ia], &ctx.basis()[ib]);
        let prod = ctx.multiply(&ctx.phi(a).unwrap(), &ctx.phi(b).unwrap()).unwrap();
        if a.co() != b.ro() {
            assert!(prod.is_zero());
            continue;
        }
        let want = h.multiply(ctx.b(ia).unwrap(), &cofactor(&ctx, b)).unwrap();
        let mut got = h.zero();
        for (c, coeff) in prod.coords() {
            assert_eq!((c.ro(), c.co()), (a.ro(), b.co()), "product leaves its block");
            got = got.add(&ctx.b(ctx.index_of(c).unwrap()).unwrap().scale(coeff));
        }
        assert_eq!(got, want, "m={m} n={n} r={r}: Φ{a:?} Φ{b:?}");
    }
}

#[test]
fn cofactor_reproduces_the_basis_element() {
    let ctx = SchurContext::new(2, 2, 3).unwrap();
    for (i, a) in ctx.basis().iter().enumerate() {
        let x = ctx.algebra().x_lambda(&a.ro()).unwrap();
        let lhs = ctx.algebra().multiply(&x, &cofactor(&ctx, a)).unwrap();
        assert_eq!(&lhs, ctx.b(i).unwrap());
    }
}

#[test]
fn products_match_the_action_small() {
    for (m, n, r) in [(1, 2, 2), (2, 1, 2), (2, 2, 2), (3, 1, 2), (3, 2, 2), (1, 3, 3)] {
        check_pairs(m, n, r, None);
    }
}

#[test]
fn products_match_the_action_sampled() {
    check_pairs(2, 2, 3, Some(400));
    check_pairs(2, 3, 2, Some(400));
}

#[test]
fn identity_is_the_sum_of_idempotents() {
    let ctx = SchurContext::new(2, 2, 2).unwrap();
    let one = ctx.identity().unwrap();
    for a in ctx.basis() {
        let x = ctx.phi(a).unwrap();
        assert_eq!(ctx.multiply(&one, &x).unwrap(), x);
        assert_eq!(ctx.multiply(&x, &one).unwrap(), x);
        let e = ctx.idempotent(&a.ro()).unwrap();
        assert_eq!(ctx.multiply(&e, &x).unwrap(), x);
    }
}

#[test]
fn structure_table_survives_a_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ctx = SchurContext::new(2, 2, 2).unwrap();
    let cache = schur::TableCache::new(dir.path());
    let first = cache.table_for(&ctx).unwrap();
    let again = cache.table_for(&SchurContext::new(2, 2, 2).unwrap()).unwrap();
    assert_eq!(first, again);
    let fresh = SchurContext::new(2, 2, 2).unwrap();
    fresh.load_table(&first).unwrap();
    let (a, b) = (&ctx.basis()[3], &ctx.basis()[5]);
    let p1 = ctx.multiply(&ctx.phi(a).unwrap(), &ctx.phi(b).unwrap()).unwrap();
    let p2 = fresh.multiply(&fresh.phi(a).unwrap(), &fresh.phi(b).unwrap()).unwrap();
    assert_eq!(p1, p2);
}
