//! Integer partitions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts `parts` into weakly decreasing order; zeros are rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of `part`.
    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Order of the centralizer in `S_m` of an element of this cycle type:
    /// `prod_i i^{a_i} a_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(part, mult)| BigUint::from(part).pow(mult as u32) * factorial(mult))
            .product()
    }

    /// Cycle notation for the class of this cycle type, e.g. `(12)(34)`;
    /// fixed points are omitted and the identity is `(1)`.
    pub fn cycle_notation(&self) -> String {
        let mut next = 1usize;
        let mut out = String::new();
        for &p in self.0.iter().filter(|&&p| p > 1) {
            out.push('(');
            for _ in 0..p {
                out.push_str(&next.to_string());
                next += 1;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("(1)");
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `m` in reverse lexicographic order, starting at `(m)`
/// and ending at `(1^m)`. `partitions(0)` is the single empty partition.
pub fn partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(m, m, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
