//! Arithmetic in 𝔽_p for p = 2⁶¹ − 1 and random evaluation points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: u64 = (1u64 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn neg(a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        P - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let t = (a as u128) * (b as u128);
    let lo = (t as u64) & P;
    let hi = (t >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero in F_p");
    pow(a, P - 2)
}

pub fn from_i64(c: i64) -> u64 {
    let r = c.rem_euclid(P as i64);
    r as u64
}

pub fn from_bigint(c: &BigInt) -> u64 {
    if let Some(small) = c.to_i64() {
        return from_i64(small);
    }
    c.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

/// Values of q, q⁻¹ and u₁..u_m in 𝔽_p.
#[derive(Clone, Debug)]
pub struct ModPoint {
    pub q: u64,
    pub q_inv: u64,
    pub u: Vec<u64>,
}

impl ModPoint {
    pub fn new(q: u64, u: Vec<u64>) -> Self {
        ModPoint { q, q_inv: inv(q), u }
    }

    /// Nonzero coordinates drawn from a ChaCha stream.
    pub fn random(m: usize, rng: &mut ChaCha8Rng) -> Self {
        let q = rng.gen_range(2..P);
        let u = (0..m).map(|_| rng.gen_range(2..P)).collect();
        Self::new(q, u)
    }

    /// Point number `trial` of the stream determined by `seed`.
    pub fn seeded(m: usize, seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        Self::random(m, &mut rng)
    }

    pub fn q_pow(&self, e: i32) -> u64 {
        if e >= 0 {
            pow(self.q, e as u64)
        } else {
            pow(self.q_inv, (-(e as i64)) as u64)
        }
    }
}

/// Rank of a dense matrix over 𝔽_p; the matrix is consumed.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let pinv = inv(rows[rank][col]);
        for x in rows[rank][col..].iter_mut() {
            *x = mul(*x, pinv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = sub(*x, mul(f, p));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Indices of a maximal set of linearly independent rows, greedily from the top.
pub fn independent_rows(rows: &[Vec<u64>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut picked = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for (pc, b) in &basis {
            if v[*pc] != 0 {
                let f = v[*pc];
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = sub(*x, mul(f, y));
                }
            }
        }
        if let Some(pc) = (0..ncols).find(|&c| v[c] != 0) {
            let pinv = inv(v[pc]);
            for x in v.iter_mut() {
                *x = mul(*x, pinv);
            }
            basis.push((pc, v));
            picked.push(idx);
        }
    }
    picked
}
