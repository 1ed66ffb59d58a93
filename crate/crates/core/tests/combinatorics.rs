//! Colored permutations, double cosets and the matrix parametrisation.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{binomial, bounded_sum_sequences, double_cosets_by_products, young};
use cyclohecke::colored::{self, ColoredMatrix, ColoredPerm};
use cyclohecke::perm::{self, Composition, Permutation};

fn grid() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=3).flat_map(|m| (1..=2).flat_map(move |n| (1..=3).map(move |r| (m, n, r))))
}

#[test]
fn double_cosets_and_colored_matrices_correspond() {
    for (m, n, r) in grid() {
        for lambda in perm::compositions(n, r) {
            for mu in perm::compositions(n, r) {
                let cosets = double_cosets_by_products(m, &lambda, &mu);
                let mut images = BTreeSet::new();
                for dc in &cosets {
                    let mats: BTreeSet<ColoredMatrix> =
                        dc.iter().map(|w| w.colored_matrix(&lambda, &mu).unwrap()).collect();
                    assert_eq!(mats.len(), 1, "a double coset must map to one matrix");
                    let a = mats.into_iter().next().unwrap();
                    assert!(images.insert(a), "two double cosets share a matrix");
                }
                let slice: BTreeSet<ColoredMatrix> = colored::enumerate_colored_slice(m, &lambda, &mu).into_iter().collect();
                assert_eq!(images, slice, "m={m} λ={lambda:?} μ={mu:?}");
                // the library's orbit search gives the same partition
                let lib: BTreeSet<BTreeSet<ColoredPerm>> = colored::colored_double_cosets(m, &lambda, &mu)
                    .into_iter()
                    .map(|c| c.into_iter().collect())
                    .collect();
                assert_eq!(lib, cosets.into_iter().collect());
            }
        }
    }
}

#[test]
fn representatives_land_in_their_double_coset() {
    for (m, n, r) in grid() {
        for a in colored::enumerate_colored(m, n, r, 1 << 20).unwrap() {
            let w = a.double_coset_rep();
            assert_eq!(w.colored_matrix(&a.ro(), &a.co()).unwrap(), a);
        }
    }
}

#[test]
fn stabiliser_of_the_representative_is_a_young_subgroup() {
    // w⁻¹𝔖_λw ∩ 𝔖_μ = 𝔖_ν(𝔸) by exhaustive membership
    for (m, n, r) in grid() {
        for a in colored::enumerate_colored(m, n, r, 1 << 20).unwrap() {
            let w = a.double_coset_rep();
            let w_inv = w.inverse();
            let s_lambda: BTreeSet<ColoredPerm> = young(m, &a.ro()).into_iter().collect();
            let got: BTreeSet<ColoredPerm> = young(m, &a.co())
                .into_iter()
                .filter(|y| s_lambda.contains(&w.mul(y).unwrap().mul(&w_inv).unwrap()))
                .collect();
            let want: BTreeSet<ColoredPerm> = young(m, &a.nu()).into_iter().collect();
            assert_eq!(got, want, "{a:?}");
        }
    }
}

#[test]
fn uncolored_theta_round_trips() {
    for n in 1..=3 {
        for r in 0..=4 {
            for lambda in perm::compositions(n, r) {
                for mu in perm::compositions(n, r) {
                    let reps = perm::double_coset_reps(&lambda, &mu);
                    let mats: BTreeSet<_> = reps.iter().map(|d| perm::theta(&lambda, d, &mu).unwrap()).collect();
                    assert_eq!(mats.len(), reps.len());
                    assert_eq!(mats, perm::int_matrices(&lambda, &mu).into_iter().collect());
                    for d in &reps {
                        let a = perm::theta(&lambda, d, &mu).unwrap();
                        assert_eq!(perm::theta_inverse(&a), (lambda.clone(), *d, mu.clone()));
                    }
                }
            }
        }
    }
}

#[test]
fn two_colors_rank_two_one_row() {
    // 𝔖_{2,2} has 8 elements falling into 3 classes for λ = μ = (2)
    let full = Composition(vec![2]);
    let fibers = colored::fibers(2, &full, &full);
    assert_eq!(fibers.values().map(BTreeSet::len).sum::<usize>(), 8);
    assert_eq!(fibers.len(), 3);
}

#[test]
fn ddot_is_a_bijection() {
    for m in 1..=6 {
        for k in 0..=6 {
            let domain = perm::compositions(m, k);
            let image: BTreeSet<Vec<usize>> = domain.iter().map(|l| perm::ddot(l.parts())).collect();
            assert_eq!(image.len(), domain.len(), "ddot not injective for m={m} k={k}");
            assert_eq!(image, bounded_sum_sequences(k, m), "m={m} k={k}");
        }
    }
    assert_eq!(perm::ddot(&[2, 3, 1]), vec![0, 1, 0, 0, 1, 0]);
}

#[test]
fn colored_count_is_a_binomial() {
    for m in 1..=4 {
        for n in 1..=3 {
            for r in 0..=4 {
                let k = colored::enumerate_colored(m, n, r, 1 << 24).unwrap().len() as u128;
                assert_eq!(k, binomial((m * n * n + r - 1) as u128, r as u128), "m={m} n={n} r={r}");
                assert_eq!(colored::colored_count(m, n, r), k);
            }
        }
    }
}

#[test]
fn colored_group_axioms() {
    for m in 1..=3 {
        let all = colored::all_colored_perms(m, 3);
        assert_eq!(all.len(), m.pow(3) * 6);
        let e = ColoredPerm::identity(m, 3);
        let mut by_product: BTreeMap<(ColoredPerm, ColoredPerm), ColoredPerm> = BTreeMap::new();
        for x in &all {
            assert_eq!(x.mul(&x.inverse()).unwrap(), e);
            assert_eq!(x.mul(&e).unwrap(), *x);
            for y in all.iter().step_by(5) {
                by_product.insert((*x, *y), x.mul(y).unwrap());
            }
        }
        for ((x, y), xy) in by_product.iter().step_by(7) {
            for z in all.iter().step_by(11) {
                assert_eq!(xy.mul(z).unwrap(), x.mul(&y.mul(z).unwrap()).unwrap());
            }
        }
        // s₀ has order m and satisfies the type-B braid relation with s₁
        let s0 = ColoredPerm::generator(m, 3, 0).unwrap();
        let s1 = ColoredPerm::generator(m, 3, 1).unwrap();
        let lhs = s0.mul(&s1).unwrap().mul(&s0).unwrap().mul(&s1).unwrap();
        let rhs = s1.mul(&s0).unwrap().mul(&s1).unwrap().mul(&s0).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ColoredPerm::from_perm(m, Permutation::identity(3)), e);
    }
}

#[test]
fn ddot_entries_of_an_eleven_box_matrix() {
    let a = ColoredMatrix::from_rows(&[
        vec![vec![1, 1, 1], vec![1, 0, 2]],
        vec![vec![1, 1, 0], vec![1, 2, 0]],
    ])
    .unwrap();
    assert_eq!(a.degree(), 11);
    let dd = a.a_ddot();
    // column-major: 𝐚̈₁₁, 𝐚̈₂₁, 𝐚̈₁₂, 𝐚̈₂₂
    assert_eq!(dd[0], vec![1, 1, 0]);
    assert_eq!(dd[1], vec![1, 1]);
    assert_eq!(dd[3], vec![1, 0, 1]);
    // (1, 0, 2) has partial sums 1, 1, so position 1 carries both
    assert_eq!(dd[2], vec![2, 0, 0]);
    assert_eq!(perm::nu_of(&a.abs()), Composition(vec![3, 2, 3, 3]));
}
