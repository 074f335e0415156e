//! Brute-force counting oracles shared by the integration suites.
//!
//! Each oracle enumerates directly over the lattice point lists, with the
//! only shortcut being prefix-independence pruning (sound because subsets of
//! independent sets are independent). None of them consult the closed-form
//! counting functions they exist to check.

use num_bigint::BigUint;
use qlattice_core::field::{FieldCtx, FieldElement};
use qlattice_core::lattice::{enum_points, RrefBuilder};

/// Every vector of `GF(q)^n`, zero included, in base-q order.
pub fn all_vectors(n: usize, ctx: &FieldCtx) -> Vec<Vec<FieldElement>> {
    let q = ctx.q();
    let total = q.pow(n as u32);
    let mut out = Vec::with_capacity(total as usize);
    for value in 0..total {
        let mut v = Vec::with_capacity(n);
        let mut rest = value;
        for _ in 0..n {
            v.push(ctx.element(rest % q).unwrap());
            rest /= q;
        }
        v.reverse();
        out.push(v);
    }
    out
}

/// Counts invertible n x n matrices by depth-first search over all row
/// choices, pruning dependent prefixes.
pub fn brute_gl_order(n: u32, ctx: &FieldCtx) -> BigUint {
    let vectors = all_vectors(n as usize, ctx);
    fn dfs(
        vectors: &[Vec<FieldElement>],
        ctx: &FieldCtx,
        depth: u32,
        n: u32,
        builder: &RrefBuilder,
    ) -> BigUint {
        if depth == n {
            return BigUint::from(1u32);
        }
        let mut total = BigUint::from(0u32);
        for v in vectors {
            let mut next = builder.clone();
            if next.insert(v, ctx) {
                total += dfs(vectors, ctx, depth + 1, n, &next);
            }
        }
        total
    }
    dfs(&vectors, ctx, 0, n, &RrefBuilder::new(n as usize))
}

/// Counts ordered n-tuples of normalized points forming a basis.
pub fn brute_ordered_bases(n: u32, ctx: &FieldCtx) -> BigUint {
    brute_ordered_extensions(n, 0, ctx)
}

/// Counts unordered n-subsets of normalized points forming a basis.
pub fn brute_unordered_bases(n: u32, ctx: &FieldCtx) -> BigUint {
    brute_unordered_extensions(n, 0, ctx)
}

/// Fixed independent prefix used by the extension counts: the first `j`
/// standard basis vectors, which are normalized points.
fn fixed_prefix(n: u32, j: u32, ctx: &FieldCtx) -> Vec<Vec<FieldElement>> {
    (0..j as usize)
        .map(|i| {
            let mut v = vec![ctx.zero(); n as usize];
            v[i] = ctx.one();
            v
        })
        .collect()
}

/// Counts ordered (n-j)-tuples of normalized points completing a fixed
/// independent j-subset to a basis.
pub fn brute_ordered_extensions(n: u32, j: u32, ctx: &FieldCtx) -> BigUint {
    let points = enum_points(n as usize, ctx).unwrap();
    let mut builder = RrefBuilder::new(n as usize);
    for v in fixed_prefix(n, j, ctx) {
        assert!(builder.insert(&v, ctx));
    }
    fn dfs(
        points: &[qlattice_core::lattice::ProjPoint],
        ctx: &FieldCtx,
        remaining: u32,
        builder: &RrefBuilder,
    ) -> BigUint {
        if remaining == 0 {
            return BigUint::from(1u32);
        }
        let mut total = BigUint::from(0u32);
        for p in points {
            let mut next = builder.clone();
            if next.insert(p.coords(), ctx) {
                total += dfs(points, ctx, remaining - 1, &next);
            }
        }
        total
    }
    dfs(&points, ctx, n - j, &builder)
}

/// Counts unordered (n-j)-subsets of normalized points completing a fixed
/// independent j-subset to a basis.
pub fn brute_unordered_extensions(n: u32, j: u32, ctx: &FieldCtx) -> BigUint {
    let points = enum_points(n as usize, ctx).unwrap();
    let fixed = fixed_prefix(n, j, ctx);
    let fixed_indices: Vec<usize> = fixed
        .iter()
        .map(|f| {
            points
                .iter()
                .position(|p| p.coords() == f.as_slice())
                .expect("unit vectors are normalized points")
        })
        .collect();
    let mut builder = RrefBuilder::new(n as usize);
    for v in &fixed {
        assert!(builder.insert(v, ctx));
    }
    fn dfs(
        points: &[qlattice_core::lattice::ProjPoint],
        fixed_indices: &[usize],
        ctx: &FieldCtx,
        start: usize,
        remaining: u32,
        builder: &RrefBuilder,
    ) -> BigUint {
        if remaining == 0 {
            return BigUint::from(1u32);
        }
        let mut total = BigUint::from(0u32);
        for idx in start..points.len() {
            if fixed_indices.contains(&idx) {
                continue;
            }
            let mut next = builder.clone();
            if next.insert(points[idx].coords(), ctx) {
                total += dfs(points, fixed_indices, ctx, idx + 1, remaining - 1, &next);
            }
        }
        total
    }
    dfs(&points, &fixed_indices, ctx, 0, n - j, &builder)
}
