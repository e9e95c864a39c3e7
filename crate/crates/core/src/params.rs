//! Parameter tuples and result records for the closed-form counts.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The `(n, k, r, p)` tuple: `n` vertices, `k`-uniform edges, `r` colors,
/// and the distinct-color threshold `p`.
///
/// Validity: `1 <= k <= n`, `r >= 2` and `1 <= p <= min(r, k) + 1`. The
/// `+ 1` slack exists only so that cumulative (at-most) queries can ask for
/// "everything below `min(r,k)+1`"; the individual operations reject any
/// `p` outside their own tighter domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamSet {
    n: u64,
    k: u64,
    r: u64,
    p: u64,
}

impl ParamSet {
    pub fn new(n: u64, k: u64, r: u64, p: u64) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParams(format!(
                "edge size k must satisfy 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        if r < 2 {
            return Err(Error::InvalidParams(format!(
                "color count r must be at least 2, got r={r}"
            )));
        }
        let p_max = r.min(k) + 1;
        if p < 1 || p > p_max {
            return Err(Error::InvalidParams(format!(
                "color threshold p must satisfy 1 <= p <= min(r,k)+1 = {p_max}, got p={p}"
            )));
        }
        Ok(Self { n, k, r, p })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// True when the color count divides the vertex count, i.e. a balanced
    /// coloring has classes of exactly `n / r` vertices.
    pub fn divisible(&self) -> bool {
        self.n.is_multiple_of(self.r)
    }

    /// Class size `n / r` when `r | n`.
    pub fn class_size(&self) -> Option<u64> {
        self.divisible().then(|| self.n / self.r)
    }

    /// The truncation cutoff: the smallest `c` with `(n/r) * c >= k`,
    /// defined when `r | n`. Inclusion–exclusion terms over fewer than `c`
    /// classes vanish because their union is too small to hold an edge.
    pub fn cutoff(&self) -> Option<u64> {
        self.class_size().map(|s| self.k.div_ceil(s))
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, k={}, r={}, p={})",
            self.n, self.k, self.r, self.p
        )
    }
}

/// Which slice of the per-edge distinct-color histogram a count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// Edges whose vertices carry exactly `p` distinct colors.
    ExactlyP,
    /// Edges with at least `p` distinct colors (the properly colored ones).
    AtLeastP,
    /// Edges with fewer than `p` distinct colors (at most `p - 1`).
    AtMostP,
}

/// An exact count together with the parameters it answers for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub params: ParamSet,
    pub value: BigUint,
    pub kind: CountKind,
}

/// Lower/upper envelope for the maximum properly colored edge count when
/// `r` does not divide `n`, padded down to `n1` and up to `n2` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsResult {
    pub lower: BigUint,
    pub upper: BigUint,
    pub n1: u64,
    pub n2: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_ranges() {
        assert!(ParamSet::new(3, 0, 2, 1).is_err());
        assert!(ParamSet::new(3, 4, 2, 1).is_err());
        assert!(ParamSet::new(3, 2, 1, 1).is_err());
        assert!(ParamSet::new(3, 2, 2, 0).is_err());
        // min(r,k)+1 = 3 is the last admissible p for (r,k) = (2,2)
        assert!(ParamSet::new(4, 2, 2, 3).is_ok());
        assert!(ParamSet::new(4, 2, 2, 4).is_err());
    }

    #[test]
    fn cutoff_matches_definition() {
        let p = ParamSet::new(6, 3, 3, 2).unwrap();
        assert_eq!(p.cutoff(), Some(2)); // class size 2, 2*2 >= 3
        let p = ParamSet::new(6, 2, 2, 2).unwrap();
        assert_eq!(p.cutoff(), Some(1)); // class size 3 >= 2
        let p = ParamSet::new(7, 2, 2, 2).unwrap();
        assert_eq!(p.cutoff(), None);
    }
}
