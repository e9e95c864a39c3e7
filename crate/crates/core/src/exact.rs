//! Closed-form counts of properly colored hyperedges of complete k-uniform
//! hypergraphs: exact values under balanced colorings, the maximum over all
//! colorings, bounds for non-divisible vertex counts, and the adversary-game
//! threshold. Everything is exact integer (or rational) arithmetic; no
//! floating point and no saturation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{balanced_class_sizes, complete_profile};
use crate::params::{BoundsResult, CountKind, CountResult, ParamSet};

/// Binomial coefficient `C(n, k)`, exact for all inputs. Returns 0 when
/// `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // Products of j consecutive integers are divisible by j!, so the
    // running division below is exact at every step. C(100, 50) < 2^97,
    // so anything with n <= 100 fits comfortably in u128.
    if n <= 100 {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        return BigUint::from(acc);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of `k`-subsets of the disjoint union of the given classes that
/// intersect *every* class, by inclusion–exclusion over the set of classes
/// an edge is allowed to touch. Terms whose class union is smaller than `k`
/// vanish through the zero binomial, so no explicit truncation is needed.
pub fn spanning_count(sizes: &[u64], k: u64) -> Result<BigUint> {
    if sizes.is_empty() {
        return Err(Error::InvalidParams(
            "spanning_count needs at least one class".into(),
        ));
    }
    if let Some(zero) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParams(format!(
            "spanning_count class {zero} is empty"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParams("edge size k must be positive".into()));
    }
    if sizes.len() > 63 {
        return Err(Error::InvalidParams(format!(
            "spanning_count supports at most 63 classes, got {}",
            sizes.len()
        )));
    }
    Ok(spanning_count_unchecked(sizes, k))
}

/// Same alternating sum without the precondition checks; callers guarantee
/// nonempty classes and `sizes.len() <= 63`. `k = 0` is permitted (the sum
/// correctly yields 0 for one or more classes).
pub(crate) fn spanning_count_unchecked(sizes: &[u64], k: u64) -> BigUint {
    let m = sizes.len();
    let mut acc = BigInt::zero();
    for mask in 0u64..(1u64 << m) {
        let total: u64 = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| sizes[i])
            .sum();
        let term = BigInt::from(binomial(total, k));
        if (m as u32 - mask.count_ones()).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative());
    acc.to_biguint()
        .expect("inclusion-exclusion is nonnegative")
}

/// Exact count of edges of the complete hypergraph that carry exactly `p`
/// distinct colors under a balanced coloring with classes of size
/// `class_size`. Shared by the public operations and the bound evaluation
/// (which feeds padded vertex counts that may be smaller than `k`).
fn exactly_p_value(class_size: u64, k: u64, r: u64, p: u64) -> BigUint {
    let sizes = vec![class_size; p as usize];
    binomial(r, p) * spanning_count_unchecked(&sizes, k)
}

/// Number of edges of the complete hypergraph with exactly `p` distinct
/// colors under any balanced coloring. Requires `r | n` and
/// `1 <= p <= min(r, k)`: the choice of the `p` classes times the spanning
/// count of `p` equal classes.
pub fn exactly_p_count(params: &ParamSet) -> Result<CountResult> {
    let class_size = params.class_size().ok_or_else(|| {
        Error::InvalidParams(format!("{params}: r must divide n for the exact count"))
    })?;
    if params.p() > params.r().min(params.k()) {
        return Err(Error::InvalidParams(format!(
            "{params}: p must not exceed min(r, k)"
        )));
    }
    Ok(CountResult {
        params: *params,
        value: exactly_p_value(class_size, params.k(), params.r(), params.p()),
        kind: CountKind::ExactlyP,
    })
}

/// Number of edges with at most `p - 1` distinct colors under a balanced
/// coloring (`r | n`): the sum of the exact counts for `1 <= i <= p - 1`.
/// Accepts `p` up to `min(r, k) + 1`, and `p = 1` yields the empty sum.
pub fn below_p_count(params: &ParamSet) -> Result<CountResult> {
    let class_size = params.class_size().ok_or_else(|| {
        Error::InvalidParams(format!("{params}: r must divide n for the exact count"))
    })?;
    let mut value = BigUint::zero();
    for i in 1..params.p() {
        value += exactly_p_value(class_size, params.k(), params.r(), i);
    }
    Ok(CountResult {
        params: *params,
        value,
        kind: CountKind::AtMostP,
    })
}

fn require_maximization_p(params: &ParamSet) -> Result<()> {
    if params.p() < 2 || params.p() > params.r().min(params.k()) {
        return Err(Error::InvalidParams(format!(
            "{params}: maximization requires 2 <= p <= min(r, k)"
        )));
    }
    Ok(())
}

/// Maximum number of properly colored edges of the complete hypergraph over
/// all colorings, for `r | n`: all edges minus those a balanced coloring
/// leaves with fewer than `p` colors.
pub fn max_proper_count(params: &ParamSet) -> Result<CountResult> {
    require_maximization_p(params)?;
    if !params.divisible() {
        return Err(Error::InvalidParams(format!(
            "{params}: r does not divide n; use max_proper_general or max_proper_bounds"
        )));
    }
    let below = below_p_count(params)?;
    Ok(CountResult {
        params: *params,
        value: binomial(params.n(), params.k()) - below.value,
        kind: CountKind::AtLeastP,
    })
}

/// Maximum properly colored edge count of the complete hypergraph for any
/// `n`, evaluated on the canonical balanced class sizes (`n mod r` classes
/// one vertex larger than the rest). Collapses to [`max_proper_count`] when
/// `r | n`.
pub fn max_proper_general(params: &ParamSet) -> Result<CountResult> {
    require_maximization_p(params)?;
    let sizes = balanced_class_sizes(params.n(), params.r());
    let profile = complete_profile(&sizes, params.k())?;
    Ok(CountResult {
        params: *params,
        value: profile.at_least(params.p() as usize),
        kind: CountKind::AtLeastP,
    })
}

/// Lower/upper bounds on the maximum properly colored edge count obtained
/// by padding `n` down to `n1 = floor(n/r)*r` and up to `n2 = ceil(n/r)*r`.
/// The padded-up subtrahend can exceed `C(n, k)`, in which case the lower
/// bound is reported as 0.
pub fn max_proper_bounds(params: &ParamSet) -> Result<BoundsResult> {
    require_maximization_p(params)?;
    let (n, k, r, p) = (params.n(), params.k(), params.r(), params.p());
    let n1 = n / r * r;
    let n2 = n.div_ceil(r) * r;
    let all = BigInt::from(binomial(n, k));

    let below_at = |padded: u64| -> BigInt {
        if padded == 0 {
            return BigInt::zero();
        }
        let class_size = padded / r;
        let mut sum = BigInt::zero();
        for i in 1..p {
            sum += BigInt::from(exactly_p_value(class_size, k, r, i));
        }
        sum
    };

    let upper = (&all - below_at(n1))
        .to_biguint()
        .expect("upper bound is nonnegative");
    let lower_signed = &all - below_at(n2);
    let lower = if lower_signed.is_negative() {
        BigUint::zero()
    } else {
        lower_signed.to_biguint().unwrap()
    };
    debug_assert!(lower <= upper);
    Ok(BoundsResult {
        lower,
        upper,
        n1,
        n2,
    })
}

/// The literal at-most-`j`-colors recurrence
/// `x(i, j) = C(r, i) * C((n/r) * i, k) - (r - j) / (i - j + 1) * x(i, j-1)`
/// with base case `x(i, 0) = 0`, evaluated in exact rational arithmetic.
///
/// This recurrence is exploratory: it does not agree with [`below_p_count`]
/// on all inputs (e.g. `x(2, 2)` for `(n, k, r) = (6, 3, 3)` is 0 while the
/// at-most-2 count is 12), so callers should report both values side by side
/// rather than assert equality. [`below_p_count`] is the authoritative
/// at-most count.
pub fn at_most_recurrence(i: u64, j: u64, n: u64, k: u64, r: u64) -> Result<BigRational> {
    if r < 2 || !n.is_multiple_of(r) || n == 0 {
        return Err(Error::InvalidParams(format!(
            "recurrence needs r >= 2 and r | n, got n={n}, r={r}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParams("edge size k must be positive".into()));
    }
    if !(1 <= j && j <= i && i < r) {
        return Err(Error::InvalidParams(format!(
            "recurrence needs 1 <= j <= i < r, got i={i}, j={j}, r={r}"
        )));
    }
    let class_size = n / r;
    let head = BigRational::from(BigInt::from(binomial(r, i) * binomial(class_size * i, k)));
    let mut x = BigRational::zero(); // x(i, 0)
    for step in 1..=j {
        let coeff = BigRational::new(BigInt::from(r - step), BigInt::from(i - step + 1));
        x = &head - coeff * x;
    }
    Ok(x)
}

/// Properly colored edge count of the complete hypergraph in the rainbow
/// case `r = p = k`: every edge must take exactly one vertex from each
/// class, so the count is the product of the balanced class sizes.
pub fn rainbow_count(n: u64, k: u64) -> Result<CountResult> {
    if k < 2 {
        return Err(Error::InvalidParams(format!(
            "rainbow count needs k >= 2, got k={k}"
        )));
    }
    let params = ParamSet::new(n, k, k, k)?;
    let value = balanced_class_sizes(n, k)
        .iter()
        .fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s));
    Ok(CountResult {
        params,
        value,
        kind: CountKind::AtLeastP,
    })
}

/// Smallest edge count that no coloring of any `n`-vertex `k`-uniform
/// hypergraph can fully properly color: one more than the maximum
/// attainable on the complete hypergraph.
pub fn winning_threshold(params: &ParamSet) -> Result<BigUint> {
    Ok(max_proper_general(params)?.value + BigUint::from(1u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: enumerate all k-subsets of the union of the
    /// classes and count those touching every class.
    fn spanning_by_enumeration(sizes: &[u64], k: usize) -> u64 {
        let n: u64 = sizes.iter().sum();
        let mut class_of = Vec::new();
        for (c, &s) in sizes.iter().enumerate() {
            class_of.extend(std::iter::repeat_n(c, s as usize));
        }
        let mut count = 0;
        let mut combo: Vec<usize> = (0..k).collect();
        if k == 0 || k as u64 > n {
            return 0;
        }
        loop {
            let mut hit = vec![false; sizes.len()];
            for &v in &combo {
                hit[class_of[v]] = true;
            }
            if hit.iter().all(|&h| h) {
                count += 1;
            }
            // next lexicographic combination
            let mut i = k;
            while i > 0 && combo[i - 1] == n as usize - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
        count
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(4, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        // value past the u64 range, checked against the known decimal
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
        // u128 fast path and the general path must agree at the seam
        for n in 98..=103u64 {
            let slow = (0..n.min(7)).fold(BigUint::from(1u32), |acc, i| {
                acc * BigUint::from(n - i) / BigUint::from(i + 1)
            });
            assert_eq!(binomial(n, n.min(7)), slow);
        }
    }

    #[test]
    fn spanning_count_examples() {
        // frozen from the enumeration oracle below
        assert_eq!(spanning_by_enumeration(&[2, 2], 3), 4);
        assert_eq!(spanning_count(&[2, 2], 3).unwrap(), BigUint::from(4u32));
        assert_eq!(spanning_count(&[2], 2).unwrap(), BigUint::from(1u32));
        assert_eq!(spanning_by_enumeration(&[3, 3], 2), 9);
        assert_eq!(spanning_count(&[3, 3], 2).unwrap(), BigUint::from(9u32));
        assert!(spanning_count(&[], 2).is_err());
        assert!(spanning_count(&[2, 0], 2).is_err());
    }

    proptest! {
        #[test]
        fn spanning_count_matches_enumeration(
            sizes in proptest::collection::vec(1u64..4, 1..4),
            k in 1u64..5,
        ) {
            let expected = spanning_by_enumeration(&sizes, k as usize);
            prop_assert_eq!(spanning_count(&sizes, k).unwrap(), BigUint::from(expected));
        }

        #[test]
        fn spanning_count_permutation_invariant(
            mut sizes in proptest::collection::vec(1u64..5, 2..5),
            k in 1u64..4,
        ) {
            let before = spanning_count(&sizes, k).unwrap();
            sizes.reverse();
            prop_assert_eq!(spanning_count(&sizes, k).unwrap(), before);
        }
    }

    fn params(n: u64, k: u64, r: u64, p: u64) -> ParamSet {
        ParamSet::new(n, k, r, p).unwrap()
    }

    #[test]
    fn exactly_p_examples() {
        assert_eq!(
            exactly_p_count(&params(6, 3, 3, 2)).unwrap().value,
            BigUint::from(12u32)
        );
        assert_eq!(
            exactly_p_count(&params(6, 3, 3, 1)).unwrap().value,
            BigUint::zero()
        );
        // bicoloring identity: 2 * C(n/2, k)
        assert_eq!(
            exactly_p_count(&params(6, 2, 2, 1)).unwrap().value,
            BigUint::from(6u32)
        );
        assert!(exactly_p_count(&params(7, 2, 2, 1)).is_err());
    }

    #[test]
    fn below_p_examples() {
        assert_eq!(
            below_p_count(&params(6, 3, 3, 3)).unwrap().value,
            BigUint::from(12u32)
        );
        assert_eq!(
            below_p_count(&params(4, 2, 2, 2)).unwrap().value,
            BigUint::from(2u32)
        );
        assert_eq!(
            below_p_count(&params(6, 3, 3, 2)).unwrap().value,
            BigUint::zero()
        );
        // p = min(r,k)+1 sums the whole histogram: every edge of K_4^2
        assert_eq!(
            below_p_count(&params(4, 2, 2, 3)).unwrap().value,
            binomial(4, 2)
        );
        // p = 1 is the empty sum
        assert_eq!(
            below_p_count(&params(4, 2, 2, 1)).unwrap().value,
            BigUint::zero()
        );
    }

    #[test]
    fn bicoloring_identity_at_even_n() {
        // maximum non-monochromatic count: C(n,k) - 2*C(n/2,k)
        for n in (4u64..=12).step_by(2) {
            for k in 2..=4.min(n) {
                let expected = binomial(n, k) - BigUint::from(2u32) * binomial(n / 2, k);
                assert_eq!(
                    max_proper_count(&params(n, k, 2, 2)).unwrap().value,
                    expected,
                    "identity fails at (n={n}, k={k})"
                );
            }
        }
    }

    #[test]
    fn max_proper_examples() {
        assert_eq!(
            max_proper_count(&params(4, 2, 2, 2)).unwrap().value,
            BigUint::from(4u32)
        );
        assert_eq!(
            max_proper_count(&params(6, 3, 3, 3)).unwrap().value,
            BigUint::from(8u32)
        );
        // bicoloring check: C(6,2) - 2*C(3,2)
        assert_eq!(
            max_proper_count(&params(6, 2, 2, 2)).unwrap().value,
            BigUint::from(9u32)
        );
        assert!(max_proper_count(&params(5, 2, 2, 2)).is_err());
    }

    #[test]
    fn max_proper_general_examples() {
        assert_eq!(
            max_proper_general(&params(5, 2, 2, 2)).unwrap().value,
            BigUint::from(6u32)
        );
        assert_eq!(
            max_proper_general(&params(6, 3, 3, 3)).unwrap().value,
            BigUint::from(8u32)
        );
        assert_eq!(
            max_proper_general(&params(7, 2, 3, 2)).unwrap().value,
            BigUint::from(16u32)
        );
    }

    #[test]
    fn bounds_examples() {
        let b = max_proper_bounds(&params(5, 2, 2, 2)).unwrap();
        assert_eq!(
            (b.lower, b.upper, b.n1, b.n2),
            (4u32.into(), 8u32.into(), 4, 6)
        );
        let b = max_proper_bounds(&params(6, 3, 3, 3)).unwrap();
        assert_eq!((b.lower, b.upper), (8u32.into(), 8u32.into()));
        let b = max_proper_bounds(&params(7, 2, 3, 2)).unwrap();
        assert_eq!((b.lower, b.upper), (12u32.into(), 18u32.into()));
    }

    #[test]
    fn bounds_lower_clamps_at_zero() {
        // padded-up subtrahend exceeds C(4,3): the raw lower bound is -8
        let b = max_proper_bounds(&params(4, 3, 3, 3)).unwrap();
        assert_eq!(b.lower, BigUint::zero());
        assert!(b.upper >= max_proper_general(&params(4, 3, 3, 3)).unwrap().value);
    }

    #[test]
    fn recurrence_examples() {
        let as_rational = |v: u64| BigRational::from(BigInt::from(v));
        assert_eq!(at_most_recurrence(1, 1, 4, 2, 2).unwrap(), as_rational(2));
        assert_eq!(at_most_recurrence(2, 1, 6, 3, 3).unwrap(), as_rational(12));
        assert_eq!(at_most_recurrence(2, 2, 6, 3, 3).unwrap(), as_rational(0));
        assert!(at_most_recurrence(2, 3, 6, 3, 3).is_err());
        assert!(at_most_recurrence(3, 1, 6, 3, 3).is_err());
    }

    #[test]
    fn rainbow_examples() {
        assert_eq!(rainbow_count(6, 3).unwrap().value, BigUint::from(8u32));
        assert_eq!(rainbow_count(4, 2).unwrap().value, BigUint::from(4u32));
        assert_eq!(rainbow_count(5, 2).unwrap().value, BigUint::from(6u32));
        assert!(rainbow_count(3, 1).is_err());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            winning_threshold(&params(4, 2, 2, 2)).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            winning_threshold(&params(6, 3, 3, 3)).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(
            winning_threshold(&params(5, 2, 2, 2)).unwrap(),
            BigUint::from(7u32)
        );
    }

    proptest! {
        #[test]
        fn rainbow_equals_general_max(n in 2u64..13, k in 2u64..5) {
            prop_assume!(k <= n);
            let rainbow = rainbow_count(n, k).unwrap().value;
            let general = max_proper_general(&params(n, k, k, k)).unwrap().value;
            prop_assert_eq!(rainbow, general);
        }

        #[test]
        fn bounds_sandwich_general(n in 2u64..15, k in 2u64..5, r in 2u64..5, p in 2u64..5) {
            prop_assume!(k <= n && p <= r.min(k));
            let ps = params(n, k, r, p);
            let b = max_proper_bounds(&ps).unwrap();
            let mid = max_proper_general(&ps).unwrap().value;
            prop_assert!(b.lower <= mid && mid <= b.upper);
            if ps.divisible() {
                prop_assert_eq!(&b.lower, &mid);
                prop_assert_eq!(&b.upper, &mid);
            }
        }
    }
}
