//! Walk counting, three ways.
//!
//! - [`enumerate_walks`] materializes every walk (exponential; test oracle);
//! - [`count_recurrence`] propagates in-neighbour sums level by level;
//! - [`count_matrix`] reads column sums of adjacency-matrix powers.
//!
//! Walks are counted by their *end* vertex: a walk of length `i` ending in
//! `x` is a vertex sequence `z₀ → z₁ → … → zᵢ = x` along attack edges.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::aaf::ArgFramework;
use crate::linalg::{BigRational, RatMatrix};
use crate::{Error, Result};

pub const DEFAULT_WALK_CAP: usize = 1_000_000;

/// A walk as its vertex sequence; length is `vertices.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub vertices: Vec<String>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> &str {
        self.vertices.last().expect("walks are non-empty")
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vertices.join(","))
    }
}

/// `counts[v][i - 1]` is the number of walks of length `i` ending in `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCountTable {
    counts: Vec<Vec<BigUint>>,
    max_len: usize,
}

impl WalkCountTable {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Count for vertex index `v` at length `len` (1-based).
    pub fn get(&self, v: usize, len: usize) -> &BigUint {
        assert!(
            (1..=self.max_len).contains(&len),
            "length out of table range"
        );
        &self.counts[v][len - 1]
    }

    /// Per-length counts for vertex index `v`, lengths `1..=max_len`.
    pub fn row(&self, v: usize) -> &[BigUint] {
        &self.counts[v]
    }
}

/// Every walk of length `len` ending in `v`, sorted by vertex names.
/// Fails if there would be more than `cap` of them.
pub fn enumerate_walks_capped(
    f: &ArgFramework,
    v: &str,
    len: usize,
    cap: usize,
) -> Result<Vec<Walk>> {
    let target = f.index_of(v)?;
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    let expected = count_recurrence(f, len)?.get(target, len).clone();
    if expected > BigUint::from(cap) {
        return Err(Error::WalkCapExceeded { cap });
    }
    let incoming = f.in_neighbours();
    let mut out = Vec::with_capacity(expected.to_usize().unwrap_or(0));
    // suffix grows backwards from the end vertex
    let mut suffix = vec![target];
    extend_backwards(&incoming, &mut suffix, len, &mut |seq| {
        out.push(Walk {
            vertices: seq
                .iter()
                .rev()
                .map(|&i| f.argument(i).to_owned())
                .collect(),
        });
    });
    out.sort();
    Ok(out)
}

fn extend_backwards(
    incoming: &[Vec<usize>],
    suffix: &mut Vec<usize>,
    remaining: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(suffix);
        return;
    }
    let head = *suffix.last().expect("non-empty");
    for &pred in &incoming[head] {
        suffix.push(pred);
        extend_backwards(incoming, suffix, remaining - 1, emit);
        suffix.pop();
    }
}

pub fn enumerate_walks(f: &ArgFramework, v: &str, len: usize) -> Result<Vec<Walk>> {
    enumerate_walks_capped(f, v, len, DEFAULT_WALK_CAP)
}

/// Walk counts for every argument and every length `1..=up_to`, computed
/// by `T₁(v) = |N(v)|`, `Tᵢ₊₁(v) = Σ_{u ∈ N(v)} Tᵢ(u)`.
pub fn count_recurrence(f: &ArgFramework, up_to: usize) -> Result<WalkCountTable> {
    if up_to == 0 {
        return Err(Error::ZeroLength);
    }
    let incoming = f.in_neighbours();
    let n = f.len();
    let mut counts = vec![Vec::with_capacity(up_to); n];
    let mut level: Vec<BigUint> = incoming
        .iter()
        .map(|ins| BigUint::from(ins.len()))
        .collect();
    for step in 1..=up_to {
        if step > 1 {
            level = incoming
                .iter()
                .map(|ins| ins.iter().map(|&u| &level[u]).sum())
                .collect();
        }
        for (row, c) in counts.iter_mut().zip(&level) {
            row.push(c.clone());
        }
    }
    Ok(WalkCountTable {
        counts,
        max_len: up_to,
    })
}

/// Number of walks of length `len` ending in `v`, read off as the column
/// sum of `M^len`.
pub fn count_matrix(f: &ArgFramework, v: &str, len: usize) -> Result<BigUint> {
    let col = f.index_of(v)?;
    if len == 0 {
        return Err(Error::ZeroLength);
    }
    let power = f.adjacency_matrix().pow(len)?;
    Ok(rational_to_count(&power.column_sum(col)?))
}

pub(crate) fn rational_to_count(x: &BigRational) -> BigUint {
    debug_assert!(x.is_integer(), "walk counts are integral");
    x.to_integer()
        .to_biguint()
        .expect("walk counts are non-negative")
}

pub(crate) fn signed(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

/// Successive powers `M, M², M³, …` of a square matrix.
#[derive(Debug, Clone)]
pub struct MatrixPowers {
    base: RatMatrix,
    current: Option<RatMatrix>,
}

impl MatrixPowers {
    pub fn new(base: RatMatrix) -> Self {
        assert!(base.is_square(), "matrix powers need a square matrix");
        MatrixPowers {
            base,
            current: None,
        }
    }
}

impl Iterator for MatrixPowers {
    type Item = RatMatrix;

    fn next(&mut self) -> Option<RatMatrix> {
        let next = match &self.current {
            None => self.base.clone(),
            Some(m) => m.mat_mul(&self.base).expect("square"),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// Column sums of `M^1 … M^k` as walk counts, one vector per length.
pub(crate) fn column_sum_levels(f: &ArgFramework, k: usize) -> Vec<Vec<BigUint>> {
    MatrixPowers::new(f.adjacency_matrix())
        .take(k)
        .map(|m| m.column_sums().iter().map(rational_to_count).collect())
        .collect()
}

/// `true` iff every count in the table is zero.
pub fn all_zero(counts: &[BigUint]) -> bool {
    counts.iter().all(Zero::is_zero)
}
