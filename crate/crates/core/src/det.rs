//! Two independent exact determinant engines.
//!
//! [`det_exact`] is single-step fraction-free elimination: every division in
//! the recurrence is exact by construction, and the code asserts it rather
//! than assuming it. [`det_modular`] reduces the matrix modulo enough
//! word-size primes to exceed the Hadamard bound and reconstructs the signed
//! value by CRT with symmetric residues. The two engines share no code path,
//! so agreement between them is a meaningful check; the verification suites
//! demand it on every determinant they touch.

use crate::matrix::IntMatrix;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

/// Exact signed determinant by fraction-free (single-step Bareiss)
/// elimination. Pivoting takes the first nonzero entry in column order,
/// with row swaps tracked for sign.
pub fn det_exact(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let mut w: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = 1i8;
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        match (k..n).find(|&r| !w[r][k].is_zero()) {
            Some(r) if r != k => {
                w.swap(r, k);
                sign = -sign;
            }
            Some(_) => {}
            None => return BigInt::zero(),
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &w[i][j] * &w[k][k] - &w[i][k] * &w[k][j];
                let (quot, rem) = num.div_rem(&prev_pivot);
                assert!(
                    rem.is_zero(),
                    "fraction-free elimination step must divide exactly"
                );
                w[i][j] = quot;
            }
            w[i][k] = BigInt::zero();
        }
        prev_pivot = w[k][k].clone();
    }
    let det = w[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact signed determinant via residues modulo word-size primes and CRT
/// reconstruction. Always equal to [`det_exact`]; computed along a disjoint
/// code path. Per-prime residues are evaluated in parallel and combined in a
/// fixed order, so the result is schedule-independent.
pub fn det_modular(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    // Hadamard bound on |det|: prod_i sqrt(sum_j a_ij^2).
    let mut bound_bits = 0u64;
    for i in 0..n {
        let norm_sq: BigUint = (0..n).map(|j| m.get(i, j).magnitude().pow(2)).sum();
        if norm_sq.is_zero() {
            return BigInt::zero();
        }
        bound_bits += norm_sq.bits().div_ceil(2);
    }
    // Need the CRT modulus to cover the symmetric range, plus one safety
    // prime beyond the bound.
    let prime_count = (bound_bits + 2).div_ceil(61) as usize + 1;
    let primes = modulus_primes(prime_count);
    let residues: Vec<u64> = primes.par_iter().map(|&p| det_mod_p(m, p)).collect();
    // Incremental CRT, then map into the symmetric range.
    let mut value = BigInt::from(residues[0]);
    let mut modulus = BigInt::from(primes[0]);
    for (&p, &r) in primes.iter().zip(&residues).skip(1) {
        let p_big = BigInt::from(p);
        let m_mod_p = modulus.mod_floor(&p_big).to_u64().expect("fits");
        let diff = (r + p - (value.mod_floor(&p_big).to_u64().expect("fits") % p)) % p;
        let t = mul_mod(diff, inv_mod(m_mod_p, p), p);
        value += &modulus * BigInt::from(t);
        modulus *= p_big;
    }
    if &value * 2 > modulus {
        value -= &modulus;
    }
    value
}

/// Determinant of the residue matrix mod `p` by ordinary Gaussian
/// elimination over `GF(p)`.
fn det_mod_p(m: &IntMatrix, p: u64) -> u64 {
    let n = m.dim();
    let p_big = BigInt::from(p);
    let mut w: Vec<u64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            w.push(
                m.get(i, j)
                    .mod_floor(&p_big)
                    .to_u64()
                    .expect("residue fits"),
            );
        }
    }
    let mut det = 1u64;
    let mut neg = false;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| w[r * n + k] != 0) else {
            return 0;
        };
        if r != k {
            for j in 0..n {
                w.swap(r * n + j, k * n + j);
            }
            neg = !neg;
        }
        let pivot = w[k * n + k];
        det = mul_mod(det, pivot, p);
        let pivot_inv = inv_mod(pivot, p);
        for i in k + 1..n {
            let factor = mul_mod(w[i * n + k], pivot_inv, p);
            if factor == 0 {
                continue;
            }
            for j in k..n {
                let sub = mul_mod(factor, w[k * n + j], p);
                w[i * n + j] = (w[i * n + j] + p - sub) % p;
            }
        }
    }
    if neg {
        (p - det) % p
    } else {
        det
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// The first `count` primes below `2^62`, largest first.
fn modulus_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while primes.len() < count {
        if is_prime_u64(candidate) {
            primes.push(candidate);
        }
        candidate -= 2;
    }
    primes
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
