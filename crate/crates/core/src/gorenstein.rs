//! Basis sets, the evaluated Hessian, and the multiplication matrices of the
//! graded Gorenstein algebra attached to the lattice.
//!
//! The algebra itself is never materialized as a quotient ring. Every
//! quantity checked here reduces to combinatorics over the canonical point
//! list: the square-free degree-n generator is the set of full-rank
//! n-subsets, its Hessian at the all-ones point counts bases through pairs
//! of points, and the degree-1 multiplication maps reduce to tuple counts
//! over hyperplanes. Each closed form gets an enumeration-backed oracle.

use crate::counting::{factorial, q_int, q_pow, s_count, t_fixed};
use crate::det::{det_exact, det_modular};
use crate::field::FieldCtx;
use crate::incidence::build_incidence;
use crate::lattice::{enum_points, span, RrefBuilder, Subspace};
use crate::matrix::{mat_is_phi, IntMatrix};
use crate::Error;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Write as _;

/// The full-rank n-subsets of the canonical point list, each stored as a
/// strictly increasing tuple of point indices, the whole list sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub n: u32,
    pub q: u64,
    /// Number of points in the ambient rank-1 level set.
    pub num_points: usize,
    pub bases: Vec<Vec<u32>>,
}

impl BasisSet {
    /// Text form: one tuple per line, 1-based indices, space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for tuple in &self.bases {
            for (i, idx) in tuple.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", idx + 1);
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates all n-subsets of the point list that span the whole space, by
/// depth-first search with prefix independence pruning (every subset of an
/// independent set is independent, so pruning loses nothing).
///
/// The cardinality is asserted against the closed-form subset count.
pub fn build_basis_set(n: u32, ctx: &FieldCtx, budget: u64) -> Result<BasisSet, Error> {
    assert!(n >= 2, "dimension must be at least 2");
    let points = enum_points(n as usize, ctx)?;
    let num_points = points.len();
    // Cost estimate: candidate extensions visited is at most C(N, n) * N.
    let needed = binomial_u64(num_points as u64, u64::from(n))
        .and_then(|c| c.checked_mul(num_points as u64))
        .unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "basis-set enumeration",
            needed,
            budget,
        });
    }
    let mut bases = Vec::new();
    let mut stack_tuple: Vec<u32> = Vec::with_capacity(n as usize);
    fn dfs(
        points: &[crate::lattice::ProjPoint],
        ctx: &FieldCtx,
        n: usize,
        start: usize,
        builder: &RrefBuilder,
        tuple: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if tuple.len() == n {
            out.push(tuple.clone());
            return;
        }
        let remaining = n - tuple.len();
        for idx in start..=points.len().saturating_sub(remaining) {
            let mut next = builder.clone();
            if !next.insert(points[idx].coords(), ctx) {
                continue;
            }
            tuple.push(idx as u32);
            dfs(points, ctx, n, idx + 1, &next, tuple, out);
            tuple.pop();
        }
    }
    dfs(
        &points,
        ctx,
        n as usize,
        0,
        &RrefBuilder::new(n as usize),
        &mut stack_tuple,
        &mut bases,
    );
    let expected = s_count(n, ctx.q());
    assert_eq!(
        BigUint::from(bases.len()),
        expected,
        "basis enumeration disagrees with the closed-form count"
    );
    Ok(BasisSet {
        n,
        q: ctx.q(),
        num_points,
        bases,
    })
}

fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// The Hessian of the basis-set generator evaluated at the all-ones point.
///
/// Since the generator is square-free of degree n, the second partial in
/// `(i, j)` evaluated at 1 counts the bases containing both points; the
/// diagonal vanishes. Both invariants are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessianAtOnes {
    pub matrix: IntMatrix,
}

/// Builds the evaluated Hessian by direct pair-counting over the basis set.
pub fn hessian_at_ones(bs: &BasisSet) -> HessianAtOnes {
    let mut h = IntMatrix::zeros(bs.num_points);
    for tuple in &bs.bases {
        for (t, &i) in tuple.iter().enumerate() {
            for &j in &tuple[t + 1..] {
                let (i, j) = (i as usize, j as usize);
                let v: BigInt = h.get(i, j) + 1;
                h.set(i, j, v.clone());
                h.set(j, i, v);
            }
        }
    }
    debug_assert!(h.is_symmetric());
    debug_assert!((0..h.dim()).all(|i| h.get(i, i).is_zero()));
    HessianAtOnes { matrix: h }
}

/// Findings from matching the Hessian against its two product descriptions.
#[derive(Debug, Clone)]
pub struct HessianReport {
    pub n: u32,
    pub q: u64,
    /// Whether `(n-2)! * H == t_{n-1,1,q} * AB` held entrywise.
    pub factorization_pass: bool,
    /// The constant off-diagonal value of the computed Hessian, if constant.
    pub off_diagonal: Option<BigUint>,
    /// Whether the off-diagonal equals the ordered fixed-pair count
    /// `t_{n,2,q}`.
    pub matches_ordered_count: bool,
    /// Whether the off-diagonal equals the unordered fixed-pair count
    /// `s_{n,2,q}`.
    pub matches_unordered_count: bool,
    /// `|det H|` from both engines (they are required to agree).
    pub det_abs: BigUint,
    /// `(N-1) * beta^N` for the witnessed off-diagonal `beta`.
    pub det_closed: Option<BigUint>,
}

/// Checks the Hessian factorization `H = (t_{n-1,1,q}/(n-2)!) * AB` and
/// adjudicates which fixed-pair count gives its off-diagonal.
///
/// The division by `(n-2)!` is performed on the product matrix and asserted
/// exact. Mismatches are findings in the report, not errors.
pub fn verify_hessian_factorization(
    n: u32,
    ctx: &FieldCtx,
    budget: u64,
) -> Result<HessianReport, Error> {
    let bs = build_basis_set(n, ctx, budget)?;
    let hessian = hessian_at_ones(&bs).matrix;
    let pair = build_incidence(n, ctx)?;
    let ab = pair.a.mul(&pair.b).expect("dimensions match");
    let scaled = ab.scale(&BigInt::from(t_fixed(n - 1, 1, ctx.q())));
    let predicted = scaled.div_exact(&BigInt::from(factorial(n - 2)));
    let factorization_pass = predicted == hessian;

    let off_diagonal = mat_is_phi(&hessian)
        .filter(|spec| spec.alpha.is_zero())
        .map(|spec| spec.beta.magnitude().clone());
    let t_pair = t_fixed(n, 2, ctx.q());
    let s_pair = crate::counting::s_fixed(n, 2, ctx.q());
    let matches_ordered_count = off_diagonal.as_ref() == Some(&t_pair);
    let matches_unordered_count = off_diagonal.as_ref() == Some(&s_pair);

    let det = det_exact(&hessian);
    assert_eq!(det, det_modular(&hessian), "determinant engines disagree");
    let det_closed = off_diagonal
        .as_ref()
        .map(|beta| det_hessian_closed(n, ctx.q(), beta));
    Ok(HessianReport {
        n,
        q: ctx.q(),
        factorization_pass,
        off_diagonal,
        matches_ordered_count,
        matches_unordered_count,
        det_abs: det.magnitude().clone(),
        det_closed,
    })
}

/// `|det H| = (N-1) * beta^N` for a Hessian with zero diagonal and constant
/// off-diagonal `beta`, by the constant-pattern determinant formula.
pub fn det_hessian_closed(n: u32, q: u64, off_diag: &BigUint) -> BigUint {
    let count = q_int(n, q)
        .to_u64()
        .and_then(|c| u32::try_from(c).ok())
        .expect("point count too large for exact power");
    (BigUint::from(count) - 1u32) * off_diag.pow(count)
}

/// The degree-1 times degree-(n-1) multiplication pairing, evaluated
/// directly: entry `(i, j)` is 1 exactly when point `i` pairs nonzero with
/// point `j` (equivalently, does not lie in the dual hyperplane of `j`).
///
/// This reproduces the complement matrix `B` through an independent route;
/// the equality is a standing verification check.
pub fn mu_matrix(n: u32, ctx: &FieldCtx) -> Result<IntMatrix, Error> {
    if n < 2 {
        return Err(Error::AmbientTooSmall { n });
    }
    let points = enum_points(n as usize, ctx)?;
    let mut m = IntMatrix::zeros(points.len());
    for (i, vi) in points.iter().enumerate() {
        for (j, vj) in points.iter().enumerate() {
            let dot = vi
                .coords()
                .iter()
                .zip(vj.coords())
                .fold(ctx.zero(), |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)));
            if !dot.is_zero() {
                m.set(i, j, BigInt::one());
            }
        }
    }
    Ok(m)
}

/// The matrix of multiplication by the (n-2)-nd power of the sum of
/// variables, from the degree-1 to the degree-(n-1) component, in the
/// canonical bases. Equal to `t_{n-1,1,q} * A`; the equality is asserted
/// after the brute-force count.
#[derive(Debug, Clone)]
pub struct LefschetzMatrix {
    pub matrix: IntMatrix,
    /// The predicted entry scale `t_{n-1,1,q}`.
    pub scalar: BigUint,
}

/// Brute-force construction: entry `(j, i)` counts ordered (n-2)-tuples of
/// points that, together with point `i`, form n-1 distinct points spanning
/// the dual hyperplane of point `j`.
pub fn lefschetz_matrix(n: u32, ctx: &FieldCtx, budget: u64) -> Result<LefschetzMatrix, Error> {
    if n < 2 {
        return Err(Error::AmbientTooSmall { n });
    }
    let points = enum_points(n as usize, ctx)?;
    let count = points.len() as u64;
    let needed = count.checked_pow(n - 1).unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "multiplication-matrix tuple count",
            needed,
            budget,
        });
    }
    // Index duals by their echelon basis for constant-time span lookup.
    let mut dual_index: std::collections::HashMap<Subspace, usize> =
        std::collections::HashMap::new();
    for j in 0..points.len() {
        dual_index.insert(span(&points[j..=j], ctx)?.dual(ctx), j);
    }
    let dim = points.len();
    let mut m = IntMatrix::zeros(dim);
    let tuple_len = (n - 2) as usize;
    for i in 0..dim {
        let mut tuple = vec![0usize; tuple_len];
        loop {
            // Distinctness of {i} and the tuple entries.
            let mut all = tuple.clone();
            all.push(i);
            all.sort_unstable();
            let distinct = all.windows(2).all(|w| w[0] != w[1]);
            if distinct {
                let mut builder = RrefBuilder::new(n as usize);
                for &k in &all {
                    builder.insert(points[k].coords(), ctx);
                }
                if builder.rank() == (n - 1) as usize {
                    if let Some(&j) = dual_index.get(&builder.clone().into_subspace()) {
                        let v = m.get(j, i) + 1;
                        m.set(j, i, v);
                    }
                }
            }
            // Advance the odometer.
            let mut pos = tuple_len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < dim {
                    break;
                }
                tuple[pos] = 0;
            }
            if tuple.iter().all(|&t| t == 0) {
                break;
            }
        }
    }
    let scalar = t_fixed(n - 1, 1, ctx.q());
    let pair = build_incidence(n, ctx)?;
    assert_eq!(
        m,
        pair.a.scale(&BigInt::from(scalar.clone())),
        "tuple count disagrees with the predicted multiple of the incidence matrix"
    );
    Ok(LefschetzMatrix { matrix: m, scalar })
}

/// The scalar representing multiplication by the n-th power of the sum of
/// variables from degree 0 to degree n: `q^(n(n-1)/2) * prod_k [k]`.
/// Asserted equal to `n! * s_count`, the other algebraic route.
pub fn ell_n_scalar(n: u32, q: u64) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    let value = q_pow(q, u64::from(n) * u64::from(n - 1) / 2)
        * (1..=n).map(|k| q_int(k, q)).product::<BigUint>();
    assert_eq!(
        value,
        factorial(n) * s_count(n, q),
        "the two scalar routes must agree"
    );
    value
}
