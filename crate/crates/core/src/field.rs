//! Arithmetic in the finite field `GF(q)` for `q = p^k`.
//!
//! Prime fields use direct modular arithmetic. Extension fields represent an
//! element as its coefficient vector against the power basis of a fixed monic
//! irreducible modulus, packed into a canonical integer in `[0, q)` via base-p
//! digits. For `q <= 4096` dense multiplication and inversion tables are
//! precomputed at construction, so the per-operation cost is a table lookup.

use crate::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Orders up to this bound get dense mul/inv tables.
const TABLE_LIMIT: u64 = 4096;

/// An element of `GF(q)`, stored as its canonical integer representative in
/// `[0, q)`. For extension fields the representative is the base-p digit
/// packing of the coefficient vector, least significant digit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    /// The canonical integer representative.
    pub fn rep(self) -> u64 {
        u64::from(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field context: characteristic, extension degree, modulus, and
/// the optional dense operation tables.
///
/// Immutable after construction and safe to share across threads; every
/// operation is pure.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    k: u32,
    q: u64,
    /// Coefficients of the monic irreducible modulus, constant term first,
    /// excluding the leading 1. Empty for prime fields.
    modulus: Vec<u64>,
    mul_table: Option<Vec<u16>>,
    inv_table: Option<Vec<u16>>,
}

impl FieldCtx {
    /// Builds `GF(p^k)`.
    ///
    /// For `k > 1` the modulus is the monic irreducible polynomial of degree
    /// `k` over `GF(p)` with the smallest integer encoding (base-p digits of
    /// the non-leading coefficients), verified irreducible by exhaustive
    /// search for monic divisors of degree at most `k/2`.
    pub fn new(p: u64, k: u32) -> Result<FieldCtx, Error> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if k == 0 {
            return Err(Error::NoIrreducible { p, k });
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q
                .checked_mul(p)
                .ok_or(Error::FieldTooLarge { q: u64::MAX })?;
            if q > MAX_ORDER {
                return Err(Error::FieldTooLarge { q });
            }
        }
        let modulus = if k == 1 {
            Vec::new()
        } else {
            find_irreducible(p, k)?
        };
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            modulus,
            mul_table: None,
            inv_table: None,
        };
        if q <= TABLE_LIMIT {
            ctx.build_tables();
        }
        debug_assert!(ctx.check_inverses());
        Ok(ctx)
    }

    /// Builds the field of order `q`, factoring `q` as a prime power.
    pub fn from_order(q: u64) -> Result<FieldCtx, Error> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = smallest_prime_factor(q);
        let mut k = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        FieldCtx::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The field order `q = p^k`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Non-leading coefficients of the modulus, constant term first.
    /// Empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element with canonical representative `rep`.
    pub fn element(&self, rep: u64) -> Result<FieldElement, Error> {
        if rep < self.q {
            Ok(FieldElement(rep as u32))
        } else {
            Err(Error::ElementOutOfRange { rep, q: self.q })
        }
    }

    /// All `q` elements in representative order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|r| FieldElement(r as u32))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement(((a.rep() + b.rep()) % self.p) as u32);
        }
        let mut rep = 0u64;
        let mut scale = 1u64;
        let (mut x, mut y) = (a.rep(), b.rep());
        for _ in 0..self.k {
            rep += (x % self.p + y % self.p) % self.p * scale;
            x /= self.p;
            y /= self.p;
            scale *= self.p;
        }
        FieldElement(rep as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            if a.is_zero() {
                return a;
            }
            return FieldElement((self.p - a.rep()) as u32);
        }
        let mut rep = 0u64;
        let mut scale = 1u64;
        let mut x = a.rep();
        for _ in 0..self.k {
            let d = x % self.p;
            rep += if d == 0 { 0 } else { self.p - d } * scale;
            x /= self.p;
            scale *= self.p;
        }
        FieldElement(rep as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Some(table) = &self.mul_table {
            return FieldElement(u32::from(table[(a.rep() * self.q + b.rep()) as usize]));
        }
        self.mul_direct(a, b)
    }

    fn mul_direct(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            // p <= 2^20 so the product fits in u64.
            return FieldElement((a.rep() * b.rep() % self.p) as u32);
        }
        let x = self.digits(a);
        let y = self.digits(b);
        let deg = self.k as usize;
        let mut conv = vec![0u64; 2 * deg - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                conv[i + j] = (conv[i + j] + xi * yj) % self.p;
            }
        }
        // Reduce by the monic modulus: x^k = -(modulus) below the leading term.
        for d in (deg..conv.len()).rev() {
            let c = conv[d];
            if c == 0 {
                continue;
            }
            conv[d] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let t = c * (self.p - m % self.p) % self.p;
                conv[d - deg + i] = (conv[d - deg + i] + t) % self.p;
            }
        }
        self.pack(&conv[..deg])
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero { q: self.q });
        }
        if let Some(table) = &self.inv_table {
            return Ok(FieldElement(u32::from(table[a.rep() as usize])));
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn digits(&self, a: FieldElement) -> Vec<u64> {
        let mut x = a.rep();
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> FieldElement {
        let mut rep = 0u64;
        for &d in digits.iter().rev() {
            rep = rep * self.p + d;
        }
        FieldElement(rep as u32)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut mul = vec![0u16; q * q];
        for a in 0..q as u64 {
            for b in a..q as u64 {
                let v = self
                    .mul_direct(FieldElement(a as u32), FieldElement(b as u32))
                    .rep() as u16;
                mul[(a as usize) * q + b as usize] = v;
                mul[(b as usize) * q + a as usize] = v;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q as u64 {
            let v = self.pow(FieldElement(a as u32), self.q - 2);
            debug_assert_eq!(
                mul[(a as usize) * q + v.rep() as usize],
                1,
                "inverse table inconsistent at {a}"
            );
            inv[a as usize] = v.rep() as u16;
        }
        self.mul_table = Some(mul);
        self.inv_table = Some(inv);
    }

    fn check_inverses(&self) -> bool {
        // Spot check a * inv(a) = 1; exhaustive only for small orders.
        let step = (self.q / 64).max(1);
        (1..self.q).step_by(step as usize).all(|r| {
            let a = FieldElement(r as u32);
            let i = self.inv(a).expect("nonzero");
            self.mul(a, i) == self.one()
        })
    }
}

/// Finds the monic irreducible degree-`k` polynomial over `GF(p)` with the
/// smallest integer encoding of its non-leading coefficients.
fn find_irreducible(p: u64, k: u32) -> Result<Vec<u64>, Error> {
    let deg = k as usize;
    let mut bound: u64 = 1;
    for _ in 0..k {
        bound *= p;
    }
    'candidates: for enc in 0..bound {
        let mut coeffs = Vec::with_capacity(deg);
        let mut x = enc;
        for _ in 0..deg {
            coeffs.push(x % p);
            x /= p;
        }
        // Reducible iff divisible by some monic polynomial of degree <= k/2.
        for d in 1..=deg / 2 {
            let mut div_bound: u64 = 1;
            for _ in 0..d {
                div_bound *= p;
            }
            for denc in 0..div_bound {
                let mut div = Vec::with_capacity(d + 1);
                let mut y = denc;
                for _ in 0..d {
                    div.push(y % p);
                    y /= p;
                }
                div.push(1);
                if divides(p, &coeffs, deg, &div) {
                    continue 'candidates;
                }
            }
        }
        return Ok(coeffs);
    }
    Err(Error::NoIrreducible { p, k })
}

/// Whether the monic `divisor` divides the monic polynomial of degree `deg`
/// whose non-leading coefficients are `coeffs`. Plain long division.
fn divides(p: u64, coeffs: &[u64], deg: usize, divisor: &[u64]) -> bool {
    let mut rem: Vec<u64> = coeffs.to_vec();
    rem.push(1);
    let d = divisor.len() - 1;
    for top in (d..=deg).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        rem[top] = 0;
        for (i, &m) in divisor[..d].iter().enumerate() {
            let sub = c * m % p;
            let idx = top - d + i;
            rem[idx] = (rem[idx] + p - sub) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());

        let f3 = FieldCtx::new(3, 1).unwrap();
        let two = f3.element(2).unwrap();
        assert_eq!(f3.inv(two).unwrap(), two); // 2 * 2 = 4 = 1 mod 3
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NonPrime(4))));
        assert!(matches!(FieldCtx::new(1, 1), Err(Error::NonPrime(1))));
    }

    #[test]
    fn order_limit_enforced() {
        assert!(matches!(
            FieldCtx::new(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(FieldCtx::new(2, 20).is_ok());
    }

    #[test]
    fn gf4_modulus_is_unique_irreducible_quadratic() {
        // Oracle: of the four monic quadratics over GF(2), only x^2 + x + 1
        // has no root in GF(2).
        let mut irreducible = Vec::new();
        for c1 in 0..2u64 {
            for c0 in 0..2u64 {
                let has_root = (0..2u64).any(|x| (x * x + c1 * x + c0) % 2 == 0);
                if !has_root {
                    irreducible.push(vec![c0, c1]);
                }
            }
        }
        assert_eq!(irreducible, vec![vec![1, 1]]);

        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1]);
    }

    #[test]
    fn gf4_multiplication_reduces_by_modulus() {
        // x has representative 2 (digits (0,1)); x * x = x + 1 under
        // x^2 + x + 1, and x + 1 has representative 3.
        let f4 = FieldCtx::new(2, 2).unwrap();
        let x = f4.element(2).unwrap();
        assert_eq!(f4.mul(x, x).rep(), 3);
    }

    #[test]
    fn gf8_and_gf9_moduli() {
        // Smallest-encoding irreducibles: x^3 + x + 1 over GF(2),
        // x^2 + 1 over GF(3).
        assert_eq!(FieldCtx::new(2, 3).unwrap().modulus(), &[1, 1, 0]);
        assert_eq!(FieldCtx::new(3, 2).unwrap().modulus(), &[1, 0]);
    }

    #[test]
    fn inv_zero_is_error() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert!(matches!(
            f5.inv(f5.zero()),
            Err(Error::DivisionByZero { q: 5 })
        ));
    }

    #[test]
    fn from_order_factors_prime_powers() {
        let f9 = FieldCtx::from_order(9).unwrap();
        assert_eq!((f9.p(), f9.k()), (3, 2));
        assert!(matches!(
            FieldCtx::from_order(6),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            FieldCtx::from_order(12),
            Err(Error::NotPrimePower(12))
        ));
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let f = FieldCtx::new(p, k).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, f.neg(a)), f.zero());
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn nonzero_elements_form_group_of_order_q_minus_1() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 4)] {
            let f = FieldCtx::new(p, k).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, f.q() - 1), f.one());
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn untabled_extension_field_matches_direct_arithmetic() {
        // 5^6 = 15625 > 4096, so no tables; exercise the direct path.
        let f = FieldCtx::new(5, 6).unwrap();
        assert!(f.q() > TABLE_LIMIT);
        let a = f.element(12_345).unwrap();
        let b = f.element(7_891).unwrap();
        assert_eq!(f.mul(a, b), f.mul(b, a));
        let ai = f.inv(a).unwrap();
        assert_eq!(f.mul(a, ai), f.one());
        assert_eq!(f.pow(a, f.q() - 1), f.one());
    }
}
