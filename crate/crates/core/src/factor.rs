//! Small-prime factorization for rendering determinant tables.
//!
//! Table cells print as products like `2^14·7`; trial division by primes up
//! to a bound is all that is needed, since every cofactor the closed forms
//! produce at table scale is tiny. Anything left unfactored is carried as an
//! explicit residual so the factorization always reconstructs its input.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Default trial-division bound; generous for every factor the determinant
/// tables produce.
pub const DEFAULT_FACTOR_BOUND: u64 = 1000;

/// A partial prime factorization: `sign * prod(p^e) * residual` equals the
/// original value exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// -1, 0, or +1; zero only for the zero value.
    pub sign: i8,
    /// `(prime, exponent)` pairs in increasing prime order.
    pub factors: Vec<(u64, u32)>,
    /// Cofactor not factored within the bound; 1 when fully factored.
    pub residual: BigUint,
}

impl Factorization {
    /// Reconstructs the original signed value.
    pub fn value(&self) -> BigInt {
        if self.sign == 0 {
            return BigInt::zero();
        }
        let mut v = self.residual.clone();
        for &(p, e) in &self.factors {
            v *= BigUint::from(p).pow(e);
        }
        let v = BigInt::from(v);
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Renders the absolute value in table style: `p1^e1·p2^e2`, bare primes
    /// for exponent 1, any residual appended as a final factor.
    pub fn abs_string(&self) -> String {
        if self.sign == 0 {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        if !self.residual.is_one() {
            parts.push(self.residual.to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("\u{b7}")
        }
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "{}", self.abs_string())
    }
}

/// Factors `v` by trial division over primes up to `bound`.
pub fn factorize(v: &BigInt, bound: u64) -> Factorization {
    assert!(bound >= 2, "bound must be at least 2");
    if v.is_zero() {
        return Factorization {
            sign: 0,
            factors: Vec::new(),
            residual: BigUint::one(),
        };
    }
    let sign = if v.is_negative() { -1 } else { 1 };
    let mut rest = v.magnitude().clone();
    let mut factors = Vec::new();
    for p in primes_up_to(bound) {
        if rest.is_one() {
            break;
        }
        let p_big = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p_big);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    Factorization {
        sign,
        factors,
        residual: rest,
    }
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    let mut sieve = vec![true; (bound + 1) as usize];
    sieve[0] = false;
    if bound >= 1 {
        sieve[1] = false;
    }
    let mut p = 2usize;
    while p * p <= bound as usize {
        if sieve[p] {
            let mut m = p * p;
            while m <= bound as usize {
                sieve[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &is_p)| is_p.then_some(i as u64))
        .collect()
}
