//! Independent brute-force ground truth: exhaustive enumeration of all
//! colorings, symmetry-reduced search over class-size compositions for
//! complete hypergraphs, the minimum exactly-p count, and the gain/loss of
//! a single-vertex exchange move.
//!
//! Enumeration may be partitioned across parallel workers; every reduction
//! here is an order-independent max/min with a lexicographic tie-break, so
//! values and witnesses are bit-identical regardless of worker count.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, spanning_count_unchecked};
use crate::exec::map_reduce;
use crate::hypergraph::{
    balanced_class_sizes, complete_profile, count_at_least, count_exactly, Coloring, Hypergraph,
};

/// Budget knobs for the exhaustive operations. Exceeding a cap is a typed
/// error ([`Error::CapExceeded`]), not a panic, so callers can fall back to
/// the composition-reduced mode.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Most colorings `r^n` a full enumeration may visit.
    pub max_colorings: u64,
    /// Most class-size compositions a reduced search may visit.
    pub max_compositions: u64,
    /// Most edges an explicit complete hypergraph may have.
    pub max_edges: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_colorings: 100_000_000,
            max_compositions: 100_000_000,
            max_edges: crate::hypergraph::DEFAULT_COMPLETE_EDGE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    FullEnumeration,
    CompositionReduced,
}

/// Result of a brute-force maximization together with a witness coloring
/// that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub best_value: BigUint,
    pub witness: Coloring,
    pub search_space_size: BigUint,
    pub mode: OracleMode,
}

/// `r^n` when it fits under the cap, else a typed feasibility error.
fn enumeration_size(n: usize, r: usize, cap: u64) -> Result<u64> {
    let big = BigUint::from(r as u64).pow(n as u32);
    if big > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "coloring enumeration",
            required: big.to_string(),
            cap,
        });
    }
    // fits: cap is u64
    Ok(big.to_string().parse().expect("checked against u64 cap"))
}

fn index_to_digits(mut idx: u64, n: usize, r: u64) -> Vec<u32> {
    let mut digits = vec![0u32; n];
    for d in digits.iter_mut().rev() {
        *d = (idx % r) as u32;
        idx /= r;
    }
    digits
}

/// Odometer step in lexicographic order; returns false on wrap-around.
fn advance_digits(digits: &mut [u32], r: u32) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < r {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

const SCAN_CHUNK: u64 = 1 << 12;

fn chunk_ranges(total: u64) -> Vec<(u64, u64)> {
    let mut ranges = Vec::with_capacity((total / SCAN_CHUNK + 1) as usize);
    let mut lo = 0;
    while lo < total {
        let hi = (lo + SCAN_CHUNK).min(total);
        ranges.push((lo, hi));
        lo = hi;
    }
    ranges
}

/// All `r^n` colorings of `n` vertices in lexicographic order of the
/// assignment sequence.
pub fn enumerate_colorings(
    n: usize,
    r: usize,
    config: &OracleConfig,
) -> Result<impl Iterator<Item = Coloring>> {
    if r < 1 {
        return Err(Error::InvalidParams("need at least one color".into()));
    }
    enumeration_size(n, r, config.max_colorings)?;
    Ok(ColoringStream {
        r,
        digits: Some(vec![0u32; n]),
    })
}

struct ColoringStream {
    r: usize,
    digits: Option<Vec<u32>>,
}

impl Iterator for ColoringStream {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let digits = self.digits.as_mut()?;
        let current = Coloring::new(self.r, digits.clone()).expect("digits are valid colors");
        if digits.is_empty() || !advance_digits(digits, self.r as u32) {
            self.digits = None;
        }
        Some(current)
    }
}

/// Maximum properly colored edge count over all `r^n` colorings of an
/// arbitrary hypergraph, witnessed by the lexicographically first coloring
/// attaining it.
pub fn brute_max(
    h: &Hypergraph,
    r: usize,
    p: usize,
    config: &OracleConfig,
) -> Result<OracleReport> {
    if r < 1 || p < 1 || p > h.k().min(r) {
        return Err(Error::InvalidParams(format!(
            "brute_max needs 1 <= p <= min(k, r), got p={p}, k={}, r={r}",
            h.k()
        )));
    }
    let total = enumeration_size(h.n(), r, config.max_colorings)?;
    let best = map_reduce(
        chunk_ranges(total),
        |(lo, hi)| {
            let mut digits = index_to_digits(lo, h.n(), r as u64);
            let mut best: Option<(u64, u64)> = None;
            for idx in lo..hi {
                let value = count_at_least(h, &digits, r, p);
                match best {
                    Some((bv, _)) if value <= bv => {}
                    _ => best = Some((value, idx)),
                }
                advance_digits(&mut digits, r as u32);
            }
            best.expect("chunks are nonempty")
        },
        |a, b| {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        },
    )
    .expect("at least one coloring exists");
    let witness = Coloring::new(r, index_to_digits(best.1, h.n(), r as u64))?;
    Ok(OracleReport {
        best_value: BigUint::from(best.0),
        witness,
        search_space_size: BigUint::from(r as u64).pow(h.n() as u32),
        mode: OracleMode::FullEnumeration,
    })
}

fn for_each_composition_rest(
    prefix: &mut Vec<u64>,
    remaining: u64,
    parts_left: usize,
    f: &mut impl FnMut(&[u64]),
) {
    if parts_left == 1 {
        prefix.push(remaining);
        f(prefix);
        prefix.pop();
        return;
    }
    for s in 0..=remaining {
        prefix.push(s);
        for_each_composition_rest(prefix, remaining - s, parts_left - 1, f);
        prefix.pop();
    }
}

/// Maximum properly colored edge count of the *complete* hypergraph,
/// searched over class-size compositions instead of individual colorings
/// (on a complete hypergraph only the class sizes matter). The witness is
/// the canonical balanced coloring whenever it attains the maximum,
/// otherwise the lexicographically least maximizing composition.
pub fn brute_max_complete(
    n: usize,
    k: usize,
    r: usize,
    p: usize,
    config: &OracleConfig,
) -> Result<OracleReport> {
    if k < 1 || k > n {
        return Err(Error::InvalidParams(format!(
            "edge size k must satisfy 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    if r < 1 || p < 1 || p > k.min(r) {
        return Err(Error::InvalidParams(format!(
            "brute_max_complete needs 1 <= p <= min(k, r), got p={p}, k={k}, r={r}"
        )));
    }
    let space = binomial((n + r - 1) as u64, (r - 1) as u64);
    if space > BigUint::from(config.max_compositions) {
        return Err(Error::CapExceeded {
            what: "composition enumeration",
            required: space.to_string(),
            cap: config.max_compositions,
        });
    }

    let evaluate = |sizes: &[u64]| -> BigUint {
        complete_profile(sizes, k as u64)
            .expect("composition sizes are valid profile input")
            .at_least(p)
    };

    // Scan compositions grouped by their first part; within a group the
    // recursive enumeration is lexicographic, and keeping only strict
    // improvements makes each group's champion its lex-least maximizer.
    let scan_group = |first: Option<u64>| -> (BigUint, Vec<u64>) {
        let mut best: Option<(BigUint, Vec<u64>)> = None;
        let mut prefix = match first {
            Some(s) => vec![s],
            None => Vec::new(),
        };
        let remaining = n as u64 - prefix.first().copied().unwrap_or(0);
        let parts_left = r - prefix.len();
        for_each_composition_rest(&mut prefix, remaining, parts_left, &mut |sizes| {
            let value = evaluate(sizes);
            match &best {
                Some((bv, _)) if value <= *bv => {}
                _ => best = Some((value, sizes.to_vec())),
            }
        });
        best.expect("every group holds at least one composition")
    };

    let best = if r == 1 {
        scan_group(None)
    } else {
        map_reduce((0..=n as u64).map(Some).collect(), scan_group, |a, b| {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("at least one first part exists")
    };

    let balanced = balanced_class_sizes(n as u64, r as u64);
    let witness_sizes = if evaluate(&balanced) == best.0 {
        balanced
    } else {
        best.1
    };
    Ok(OracleReport {
        best_value: best.0,
        witness: Coloring::from_class_sizes(&witness_sizes)?,
        search_space_size: space,
        mode: OracleMode::CompositionReduced,
    })
}

/// Count, by direct edge enumeration under the canonical balanced coloring,
/// of complete-hypergraph edges with exactly `p` distinct colors. Requires
/// `r | n`; this is the verification twin of the closed-form count.
pub fn brute_exactly_count(
    n: usize,
    k: usize,
    r: usize,
    p: usize,
    config: &OracleConfig,
) -> Result<BigUint> {
    if r < 1 || !n.is_multiple_of(r) {
        return Err(Error::InvalidParams(format!(
            "direct balanced count needs r >= 1 and r | n, got n={n}, r={r}"
        )));
    }
    if p < 1 || p > k.min(r) {
        return Err(Error::InvalidParams(format!(
            "direct balanced count needs 1 <= p <= min(k, r), got p={p}"
        )));
    }
    let h = Hypergraph::complete_with_cap(n, k, config.max_edges)?;
    let x = crate::hypergraph::balanced_coloring(n, r)?;
    Ok(BigUint::from(count_exactly(&h, x.assignment(), r, p)))
}

/// Minimum, over all `r^n` colorings, of the number of complete-hypergraph
/// edges with exactly `p` distinct colors. Returns 0 when `n < k` (there
/// are no edges at all).
pub fn brute_min_exactly(
    n: usize,
    k: usize,
    r: usize,
    p: usize,
    config: &OracleConfig,
) -> Result<BigUint> {
    if r < 1 || k < 1 || p < 1 {
        return Err(Error::InvalidParams(format!(
            "minimum exactly-p count needs positive k, r, p, got k={k}, r={r}, p={p}"
        )));
    }
    if n < k {
        return Ok(BigUint::zero());
    }
    let h = Hypergraph::complete_with_cap(n, k, config.max_edges)?;
    let total = enumeration_size(n, r, config.max_colorings)?;
    let best = map_reduce(
        chunk_ranges(total),
        |(lo, hi)| {
            let mut digits = index_to_digits(lo, n, r as u64);
            let mut best = u64::MAX;
            for _ in lo..hi {
                best = best.min(count_exactly(&h, &digits, r, p));
                advance_digits(&mut digits, r as u32);
            }
            best
        },
        u64::min,
    )
    .expect("at least one coloring exists");
    Ok(BigUint::from(best))
}

/// Gain and loss of moving one vertex from class `from` to class `to` on
/// the complete hypergraph with the given class sizes, relative to the
/// distinct-color threshold `t`:
///
/// * gain `g` — edges through the moved vertex with more than `t` colors
///   before the move and at most `t` after;
/// * loss `l` — edges through the moved vertex with at most `t` colors
///   before and more than `t` after.
///
/// An edge through the moved vertex changes its side only when its other
/// vertices span exactly `t` classes including exactly one of {from, to},
/// so both counts reduce to spanning counts over class subsets of size `t`.
pub fn gain_loss(
    sizes: &[u64],
    k: u64,
    t: u64,
    from: usize,
    to: usize,
) -> Result<(BigUint, BigUint)> {
    let m = sizes.len();
    if from >= m || to >= m || from == to {
        return Err(Error::InvalidParams(format!(
            "need two distinct classes below {m}, got from={from}, to={to}"
        )));
    }
    if sizes[from] < 1 {
        return Err(Error::InvalidParams(format!(
            "class {from} is empty, nothing to move"
        )));
    }
    if k < 1 || t < 1 || t > k.min(m as u64) {
        return Err(Error::InvalidParams(format!(
            "need 1 <= t <= min(k, classes), got t={t}, k={k}, classes={m}"
        )));
    }
    if m > 63 {
        return Err(Error::InvalidParams(format!(
            "gain_loss supports at most 63 classes, got {m}"
        )));
    }
    let mut gain = BigUint::zero();
    let mut loss = BigUint::zero();
    if k == 1 {
        // an edge is the moved vertex alone; it has one color before and
        // after, never crossing any threshold t >= 1
        return Ok((gain, loss));
    }
    // class sizes with the moved vertex taken out
    let mut rest = sizes.to_vec();
    rest[from] -= 1;
    let mut subset = Vec::with_capacity(t as usize);
    for mask in 1u64..(1u64 << m) {
        if mask.count_ones() as u64 != t {
            continue;
        }
        let has_from = mask >> from & 1 == 1;
        let has_to = mask >> to & 1 == 1;
        if has_from == has_to {
            continue;
        }
        subset.clear();
        subset.extend((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]));
        if subset.contains(&0) {
            continue;
        }
        let count = spanning_count_unchecked(&subset, k - 1);
        if has_to {
            gain += count;
        } else {
            loss += count;
        }
    }
    Ok((gain, loss))
}
