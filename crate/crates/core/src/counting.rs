//! Exact q-integer and basis-counting formulas.
//!
//! Everything here is big-integer arithmetic in an ordinary integer parameter
//! `q >= 2`; no field context is involved, so the formulas can be evaluated
//! at any integer q (only the lattice-backed oracles elsewhere need q to be a
//! prime power). Every division the formulas perform is checked for zero
//! remainder at runtime rather than trusted.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// The q-integer `[i] = (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1)`.
pub fn q_int(i: u32, q: u64) -> BigUint {
    assert!(q >= 2, "q must be at least 2");
    let q = BigUint::from(q);
    let mut acc = BigUint::zero();
    let mut pow = BigUint::one();
    for _ in 0..i {
        acc += &pow;
        pow *= &q;
    }
    acc
}

/// The Gaussian binomial coefficient, zero outside `0 <= j <= n`.
///
/// Evaluated as the iterative product `prod_i [n-j+i]/[i]`; each step divides
/// exactly and the remainder is asserted zero.
pub fn q_binom(n: i64, j: i64, q: u64) -> BigUint {
    assert!(q >= 2, "q must be at least 2");
    if j < 0 || j > n || n < 0 {
        return BigUint::zero();
    }
    // Symmetry keeps the loop short.
    let j = j.min(n - j) as u32;
    let n = n as u32;
    let mut acc = BigUint::one();
    for i in 1..=j {
        acc *= q_int(n - j + i, q);
        let (quot, rem) = acc.div_rem(&q_int(i, q));
        assert!(rem.is_zero(), "q-binomial division must be exact");
        acc = quot;
    }
    acc
}

/// `q^e` as a big integer. Panics rather than truncating if the exponent
/// is beyond any usable size.
pub fn q_pow(q: u64, e: u64) -> BigUint {
    let e = u32::try_from(e).expect("exponent too large for exact power");
    BigUint::from(q).pow(e)
}

/// `n!`.
pub fn factorial(n: u32) -> BigUint {
    (1..=u64::from(n)).map(BigUint::from).product()
}

/// Order of the group of invertible n x n matrices over `GF(q)`:
/// `(q^n - 1)(q^n - q) ... (q^n - q^(n-1))`.
pub fn gl_order(n: u32, q: u64) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    let qn = q_pow(q, u64::from(n));
    (0..n).map(|i| &qn - q_pow(q, u64::from(i))).product()
}

/// Number of ordered n-tuples of normalized points forming a basis of
/// `GF(q)^n`: `q^(n(n-1)/2) * prod_k [k]`.
///
/// Cross-checked against `gl_order / (q-1)^n`, whose division is asserted
/// exact.
pub fn t_count(n: u32, q: u64) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    let direct = q_pow(q, u64::from(n) * u64::from(n - 1) / 2)
        * (1..=n).map(|k| q_int(k, q)).product::<BigUint>();
    let (quot, rem) = gl_order(n, q).div_rem(&BigUint::from(q - 1).pow(n));
    assert!(rem.is_zero(), "GL order must be divisible by (q-1)^n");
    assert_eq!(direct, quot, "the two t-count routes must agree");
    direct
}

/// Number of unordered n-subsets of normalized points forming a basis:
/// `t_count / n!`.
pub fn s_count(n: u32, q: u64) -> BigUint {
    let (quot, rem) = t_count(n, q).div_rem(&factorial(n));
    assert!(rem.is_zero(), "t-count must be divisible by n!");
    quot
}

/// Ordered basis extensions of a fixed independent j-subset:
/// `q^((n(n-1) - j(j-1))/2) * prod_{k=1..n-j} [k]`.
pub fn t_fixed(n: u32, j: u32, q: u64) -> BigUint {
    assert!(j <= n, "fixed subset cannot exceed the dimension");
    assert!(n >= 1, "n must be at least 1");
    let jj = u64::from(j) * u64::from(j.saturating_sub(1));
    let e = (u64::from(n) * u64::from(n - 1) - jj) / 2;
    q_pow(q, e) * (1..=n - j).map(|k| q_int(k, q)).product::<BigUint>()
}

/// Unordered basis extensions of a fixed independent j-subset:
/// `t_fixed / (n-j)!`.
pub fn s_fixed(n: u32, j: u32, q: u64) -> BigUint {
    let (quot, rem) = t_fixed(n, j, q).div_rem(&factorial(n - j));
    assert!(rem.is_zero(), "t-fixed must be divisible by (n-j)!");
    quot
}

/// Number of maximal chains in the subspace lattice: `prod_{k=1..n} [k]`.
pub fn p_count(n: u32, q: u64) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    (1..=n).map(|k| q_int(k, q)).product()
}
