//! Dense square matrices of arbitrary-precision signed integers.
//!
//! All determinant work downstream is characteristic-zero, so entries are
//! exact `BigInt`s regardless of which field the incidence data came from.
//! Multiplication takes an i128 fast path when the operands are small enough
//! that no intermediate can overflow, which covers every 0/1 matrix product
//! at the sizes this crate touches.

use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Write as _;

/// A square matrix of exact integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<IntMatrix, Error> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                a: dim * dim,
                b: entries.len(),
            });
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn zeros(dim: usize) -> IntMatrix {
        assert!(dim >= 1);
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows of machine integers; handy in tests and golden data.
    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> IntMatrix {
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        IntMatrix { dim: N, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row sum of row `i`.
    pub fn row_sum(&self, i: usize) -> BigInt {
        (0..self.dim).map(|j| self.get(i, j)).sum()
    }

    /// Column sum of column `j`.
    pub fn col_sum(&self, j: usize) -> BigInt {
        (0..self.dim).map(|i| self.get(i, j)).sum()
    }

    /// Entrywise scalar multiple.
    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Entrywise exact division; panics if any entry leaves a remainder.
    pub fn div_exact(&self, c: &BigInt) -> IntMatrix {
        assert!(!c.is_zero(), "division by zero");
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let (q, r) = num_integer::Integer::div_rem(e, c);
                assert!(r.is_zero(), "entrywise division must be exact");
                q
            })
            .collect();
        IntMatrix {
            dim: self.dim,
            entries,
        }
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                a: self.dim,
                b: other.dim,
            });
        }
        let dim = self.dim;
        if let (Some(a), Some(b)) = (self.as_i64_entries(), other.as_i64_entries()) {
            let max_a = a.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            let max_b = b.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            // dim * max_a * max_b bounds every accumulated dot product.
            if (max_a as u128)
                .checked_mul(max_b as u128)
                .and_then(|m| m.checked_mul(dim as u128))
                .is_some_and(|m| m < i128::MAX as u128 / 2)
            {
                let mut out = vec![0i128; dim * dim];
                for i in 0..dim {
                    for k in 0..dim {
                        let aik = a[i * dim + k] as i128;
                        if aik == 0 {
                            continue;
                        }
                        let (row_out, row_b) = (i * dim, k * dim);
                        for j in 0..dim {
                            out[row_out + j] += aik * b[row_b + j] as i128;
                        }
                    }
                }
                return Ok(IntMatrix {
                    dim,
                    entries: out.into_iter().map(BigInt::from).collect(),
                });
            }
        }
        let mut out = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    out[i * dim + j] += aik * other.get(k, j);
                }
            }
        }
        Ok(IntMatrix { dim, entries: out })
    }

    fn as_i64_entries(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|e| e.to_i64()).collect()
    }

    /// Serializes to the plain text exchange format: first line the
    /// dimension, then one line per row of space-separated decimal entries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.get(i, j));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text exchange format. Exact round-trip with `to_text`.
    pub fn from_text(text: &str) -> Result<IntMatrix, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let dim: usize = lines
            .next()
            .ok_or_else(|| Error::ParseMatrix("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::ParseMatrix(format!("bad dimension line: {e}")))?;
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            let line = lines
                .next()
                .ok_or_else(|| Error::ParseMatrix(format!("missing row {i}")))?;
            let row: Result<Vec<BigInt>, _> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>()
                        .map_err(|e| Error::ParseMatrix(format!("row {i}: {e}")))
                })
                .collect();
            let row = row?;
            if row.len() != dim {
                return Err(Error::ParseMatrix(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        if lines.next().is_some() {
            return Err(Error::ParseMatrix("trailing data after last row".into()));
        }
        Ok(IntMatrix { dim, entries })
    }
}

/// The constant-diagonal, constant-off-diagonal matrix family: `alpha` on
/// the diagonal and `beta` everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSpec {
    pub nu: usize,
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl PhiSpec {
    pub fn new(nu: usize, alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> PhiSpec {
        assert!(nu >= 1, "size must be at least 1");
        PhiSpec {
            nu,
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }
}

impl std::fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Phi({}, {}, {})", self.nu, self.alpha, self.beta)
    }
}

/// Materializes the spec as a dense matrix.
pub fn phi_matrix(spec: &PhiSpec) -> IntMatrix {
    let mut m = IntMatrix::zeros(spec.nu);
    for i in 0..spec.nu {
        for j in 0..spec.nu {
            m.set(
                i,
                j,
                if i == j {
                    spec.alpha.clone()
                } else {
                    spec.beta.clone()
                },
            );
        }
    }
    m
}

/// Closed-form determinant `(alpha - beta)^(nu - 1) * (nu*beta + alpha - beta)`.
pub fn det_phi_closed(spec: &PhiSpec) -> BigInt {
    let diff = &spec.alpha - &spec.beta;
    diff.pow(spec.nu as u32 - 1) * (BigInt::from(spec.nu as u64) * &spec.beta + &diff)
}

/// Recognizes a constant-diagonal/constant-off-diagonal matrix, returning
/// its unique spec. For 1 x 1 matrices the off-diagonal value is reported
/// as zero by convention.
pub fn mat_is_phi(m: &IntMatrix) -> Option<PhiSpec> {
    let alpha = m.get(0, 0).clone();
    let mut beta: Option<BigInt> = None;
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let e = m.get(i, j);
            if i == j {
                if *e != alpha {
                    return None;
                }
            } else {
                match &beta {
                    None => beta = Some(e.clone()),
                    Some(b) if e == b => {}
                    _ => return None,
                }
            }
        }
    }
    Some(PhiSpec {
        nu: m.dim(),
        alpha,
        beta: beta.unwrap_or_else(BigInt::zero),
    })
}
