//! The lattice of subspaces of `GF(q)^n`.
//!
//! Level sets are materialized as reduced row-echelon bases, which makes
//! subspace equality structural. The rank-1 level set gets a canonical
//! ordering (integer value of the coordinate vector read as base-q digits,
//! most significant first) so that every matrix built downstream is
//! reproducible byte for byte.

use crate::counting;
use crate::field::{FieldCtx, FieldElement};
use crate::Error;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// A normalized nonzero vector of `GF(q)^n` (first nonzero coordinate equal
/// to 1). These are exactly the elements of the rank-1 level set, and
/// `index` is the position in the canonical ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
    index: usize,
}

impl ProjPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A j-dimensional subspace of `GF(q)^n`, stored as a reduced row-echelon
/// basis with no zero rows. Two values are equal iff they are the same
/// subspace, by RREF canonicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    /// The zero subspace of `GF(q)^n`.
    pub fn zero(n: usize) -> Subspace {
        Subspace {
            n,
            basis: Vec::new(),
        }
    }

    /// The whole space, with the identity-pattern RREF basis.
    pub fn full(n: usize, ctx: &FieldCtx) -> Subspace {
        let basis = (0..n)
            .map(|i| {
                let mut row = vec![ctx.zero(); n];
                row[i] = ctx.one();
                row
            })
            .collect();
        Subspace { n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    /// Whether the vector lies in the row space, by elimination against the
    /// RREF basis.
    pub fn contains_vector(&self, v: &[FieldElement], ctx: &FieldCtx) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = leading_col(row).expect("no zero rows in a basis");
            if !v[pivot].is_zero() {
                let c = v[pivot];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = ctx.sub(*vi, ctx.mul(c, *ri));
                }
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    /// Whether the point lies in the subspace.
    pub fn contains(&self, v: &ProjPoint, ctx: &FieldCtx) -> bool {
        self.contains_vector(v.coords(), ctx)
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains_subspace(&self, other: &Subspace, ctx: &FieldCtx) -> bool {
        other.basis.iter().all(|row| self.contains_vector(row, ctx))
    }

    /// The dual subspace under the standard bilinear pairing:
    /// all `w` with `sum_i v_i w_i = 0` for every `v` in the subspace.
    pub fn dual(&self, ctx: &FieldCtx) -> Subspace {
        // Null space of the RREF basis matrix. Pivot variables are expressed
        // from the free ones, then the generators are re-echelonized for
        // canonicity.
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| leading_col(row).expect("no zero rows"))
            .collect();
        let is_pivot: Vec<bool> = {
            let mut mask = vec![false; self.n];
            for &p in &pivots {
                mask[p] = true;
            }
            mask
        };
        let mut builder = RrefBuilder::new(self.n);
        for free in 0..self.n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![ctx.zero(); self.n];
            v[free] = ctx.one();
            for (row, &p) in self.basis.iter().zip(&pivots) {
                v[p] = ctx.neg(row[free]);
            }
            builder.insert(&v, ctx);
        }
        let dual = builder.into_subspace();
        debug_assert_eq!(dual.dim(), self.n - self.dim());
        dual
    }
}

fn leading_col(row: &[FieldElement]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

/// Incremental Gaussian elimination to reduced row-echelon form.
///
/// Rows are inserted one at a time; dependent rows are dropped. Used for
/// spans, rank tests, and the depth-first basis searches.
#[derive(Debug, Clone)]
pub struct RrefBuilder {
    n: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(n: usize) -> RrefBuilder {
        RrefBuilder {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows without inserting it.
    pub fn reduce(&self, v: &[FieldElement], ctx: &FieldCtx) -> Vec<FieldElement> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = ctx.sub(*vi, ctx.mul(c, *ri));
                }
            }
        }
        v
    }

    /// Inserts a vector, returning true if it enlarged the row space.
    pub fn insert(&mut self, v: &[FieldElement], ctx: &FieldCtx) -> bool {
        assert_eq!(v.len(), self.n, "row length mismatch");
        let mut v = self.reduce(v, ctx);
        let Some(lead) = leading_col(&v) else {
            return false;
        };
        // Normalize the pivot to 1 and clear it from the existing rows.
        let inv = ctx.inv(v[lead]).expect("leading entry is nonzero");
        for c in v.iter_mut() {
            *c = ctx.mul(*c, inv);
        }
        for row in self.rows.iter_mut() {
            if !row[lead].is_zero() {
                let c = row[lead];
                for (ri, vi) in row.iter_mut().zip(&v) {
                    *ri = ctx.sub(*ri, ctx.mul(c, *vi));
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, lead);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            n: self.n,
            basis: self.rows,
        }
    }
}

/// Enumerates the rank-1 level set in canonical order.
///
/// All normalized vectors (first nonzero coordinate 1) sorted by the integer
/// value of the coordinate vector read as base-q digits, most significant
/// first. Returns exactly `[n]_q` points.
pub fn enum_points(n: usize, ctx: &FieldCtx) -> Result<Vec<ProjPoint>, Error> {
    assert!(n >= 1, "dimension must be at least 1");
    let count = counting::q_int(n as u32, ctx.q());
    let needed = count
        .to_u64()
        .and_then(|c| c.checked_mul(n as u64))
        .unwrap_or(u64::MAX);
    if needed > crate::DEFAULT_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "point enumeration",
            needed,
            budget: crate::DEFAULT_BUDGET,
        });
    }
    let count = count.to_u64().expect("within budget");
    let mut points = Vec::with_capacity(count as usize);
    // Leading position from the right gives increasing base-q values:
    // vectors with leading 1 at position i occupy [q^(n-1-i), 2q^(n-1-i)).
    for lead in (0..n).rev() {
        let free = n - 1 - lead;
        let mut suffix = vec![0u64; free];
        loop {
            let mut coords = vec![ctx.zero(); n];
            coords[lead] = ctx.one();
            for (offset, &digit) in suffix.iter().enumerate() {
                coords[lead + 1 + offset] = ctx.element(digit)?;
            }
            let index = points.len();
            points.push(ProjPoint { coords, index });
            // Next suffix in base-q counting order.
            let mut pos = free;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                suffix[pos] += 1;
                if suffix[pos] < ctx.q() {
                    break;
                }
                suffix[pos] = 0;
            }
            if suffix.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    debug_assert_eq!(points.len() as u64, count);
    Ok(points)
}

/// Enumerates the level set of j-dimensional subspaces as RREF matrices,
/// generating pivot-column patterns and filling the free entries, so the
/// output count matches the Gaussian binomial by construction.
pub fn enum_level(n: usize, j: usize, ctx: &FieldCtx) -> Result<Vec<Subspace>, Error> {
    if j > n {
        return Err(Error::LevelOutOfRange { j, n });
    }
    if j == 0 {
        return Ok(vec![Subspace::zero(n)]);
    }
    let count = counting::q_binom(n as i64, j as i64, ctx.q());
    let budget = BigUint::from(crate::DEFAULT_BUDGET);
    if count > budget {
        return Err(Error::BudgetExceeded {
            what: "level-set enumeration",
            needed: u64::MAX,
            budget: crate::DEFAULT_BUDGET,
        });
    }
    let mut out = Vec::new();
    let mut pattern: Vec<usize> = (0..j).collect();
    loop {
        emit_pattern(n, j, &pattern, ctx, &mut out)?;
        // Next j-combination of {0..n-1} in lexicographic order.
        let mut i = j;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pattern[i] < n - (j - i) {
                pattern[i] += 1;
                for t in i + 1..j {
                    pattern[t] = pattern[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Emits every RREF matrix with the given pivot columns. Free entries are
/// the non-pivot columns to the right of each row's pivot.
fn emit_pattern(
    n: usize,
    j: usize,
    pivots: &[usize],
    ctx: &FieldCtx,
    out: &mut Vec<Subspace>,
) -> Result<(), Error> {
    let mut free_slots: Vec<(usize, usize)> = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free_slots.push((r, c));
            }
        }
    }
    let mut values = vec![0u64; free_slots.len()];
    loop {
        let mut basis = vec![vec![ctx.zero(); n]; j];
        for (r, &p) in pivots.iter().enumerate() {
            basis[r][p] = ctx.one();
        }
        for (&(r, c), &v) in free_slots.iter().zip(&values) {
            basis[r][c] = ctx.element(v)?;
        }
        out.push(Subspace { n, basis });
        let mut pos = values.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < ctx.q() {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Span of a list of points, as a canonical RREF subspace.
///
/// Errors if the points disagree on dimension or carry representatives
/// outside the field.
pub fn span(points: &[ProjPoint], ctx: &FieldCtx) -> Result<Subspace, Error> {
    let vectors: Vec<&[FieldElement]> = points.iter().map(|p| p.coords()).collect();
    span_vectors(&vectors, ctx)
}

/// Span of raw coordinate vectors.
pub fn span_vectors(vectors: &[&[FieldElement]], ctx: &FieldCtx) -> Result<Subspace, Error> {
    let n = vectors.first().map_or(0, |v| v.len());
    for v in vectors {
        if v.len() != n || v.iter().any(|c| c.rep() >= ctx.q()) {
            return Err(Error::MixedContext);
        }
    }
    let mut builder = RrefBuilder::new(n);
    for v in vectors {
        builder.insert(v, ctx);
    }
    Ok(builder.into_subspace())
}

/// Counts maximal chains of the lattice by exhaustive depth-first search
/// over the level sets. This is the independent oracle for the closed-form
/// chain count; it never consults the formula.
pub fn count_paths_bruteforce(n: usize, ctx: &FieldCtx, budget: u64) -> Result<BigUint, Error> {
    assert!(n >= 1, "dimension must be at least 1");
    // Cost estimate: extending the chains at level k scans level k+1.
    let mut cost = BigUint::from(0u32);
    let mut chains_so_far = BigUint::from(1u32);
    for k in 0..n as u32 {
        cost += &chains_so_far * counting::q_binom(n as i64, i64::from(k) + 1, ctx.q());
        chains_so_far *= counting::q_int(n as u32 - k, ctx.q());
    }
    let needed = cost.to_u64().unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "maximal-chain search",
            needed,
            budget,
        });
    }
    let mut levels = Vec::with_capacity(n + 1);
    for k in 0..=n {
        levels.push(enum_level(n, k, ctx)?);
    }
    fn extend(
        levels: &[Vec<Subspace>],
        current: &Subspace,
        depth: usize,
        ctx: &FieldCtx,
    ) -> BigUint {
        if depth + 1 == levels.len() {
            return BigUint::from(1u32);
        }
        levels[depth + 1]
            .iter()
            .filter(|next| next.contains_subspace(current, ctx))
            .map(|next| extend(levels, next, depth + 1, ctx))
            .sum()
    }
    Ok(extend(&levels, &Subspace::zero(n), 0, ctx))
}
