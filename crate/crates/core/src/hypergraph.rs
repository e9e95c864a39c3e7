//! k-uniform hypergraphs, vertex colorings, and per-edge distinct-color
//! profiles. Vertices are the contiguous integers `0..n`; edges are stored
//! sorted within themselves and lexicographically as a list, which is also
//! the canonical order of the JSON interchange format.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::spanning_count_unchecked;
use crate::rng::{seeded, uniform_below};

/// Explicit complete hypergraphs larger than this many edges are refused;
/// use [`complete_profile`] for implicit evaluation instead.
pub const DEFAULT_COMPLETE_EDGE_CAP: u64 = 1_000_000;

/// An `n`-vertex `k`-uniform hypergraph with a duplicate-free edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    verts: Vec<u32>, // flat edge storage, k vertices per edge, lexicographic
}

impl Hypergraph {
    /// Validates, normalizes (sorts vertices within edges and edges
    /// lexicographically) and builds. Rejects wrong-arity edges, vertices
    /// outside `0..n`, repeated vertices within an edge, and duplicate edges.
    pub fn new(n: usize, k: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParams(format!(
                "edge size k must satisfy 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        if n > u32::MAX as usize {
            return Err(Error::InvalidParams(format!("n={n} exceeds vertex range")));
        }
        let mut normalized: Vec<Vec<u32>> = Vec::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            if edge.len() != k {
                return Err(Error::InvalidEdge(format!(
                    "edge {i} has {} vertices, expected {k}",
                    edge.len()
                )));
            }
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v as usize >= n) {
                return Err(Error::InvalidEdge(format!(
                    "edge {i} mentions vertex {v}, valid range is 0..{n}"
                )));
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(format!("edge {i} repeats a vertex")));
            }
            normalized.push(edge);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(format!(
                "edge {:?} appears more than once",
                normalized[w]
            )));
        }
        Ok(Self {
            n,
            k,
            verts: normalized.into_iter().flatten().collect(),
        })
    }

    /// The complete hypergraph with all `C(n, k)` edges in lexicographic
    /// order, refused above [`DEFAULT_COMPLETE_EDGE_CAP`] edges.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        Self::complete_with_cap(n, k, DEFAULT_COMPLETE_EDGE_CAP)
    }

    pub fn complete_with_cap(n: usize, k: usize, cap: u64) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParams(format!(
                "edge size k must satisfy 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        let total = crate::exact::binomial(n as u64, k as u64);
        if total > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                what: "explicit complete hypergraph",
                required: total.to_string(),
                cap,
            });
        }
        let mut verts = Vec::new();
        let mut combo: Vec<u32> = (0..k as u32).collect();
        loop {
            verts.extend_from_slice(&combo);
            let mut i = k;
            while i > 0 && combo[i - 1] == (n - k + i - 1) as u32 {
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
        Ok(Self { n, k, verts })
    }

    /// `m` distinct edges sampled uniformly, deterministic for a fixed seed.
    ///
    /// PRNG: ChaCha8 keyed from the 64-bit seed (SplitMix64 expansion).
    /// Each candidate edge draws `k` vertices by unbiased rejection sampling
    /// of 64-bit words; candidates with repeated vertices or already present
    /// in the edge set are rejected and redrawn, so the accepted edges are
    /// uniform over the `C(n, k)` possible ones.
    pub fn random(n: usize, k: usize, m: usize, seed: u64) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParams(format!(
                "edge size k must satisfy 1 <= k <= n, got k={k}, n={n}"
            )));
        }
        let total = crate::exact::binomial(n as u64, k as u64);
        if BigUint::from(m as u64) > total {
            return Err(Error::InvalidParams(format!(
                "cannot sample {m} distinct edges, only {total} exist"
            )));
        }
        let mut rng = seeded(seed);
        let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
        while edges.len() < m {
            let mut edge: Vec<u32> = (0..k)
                .map(|_| uniform_below(&mut rng, n as u64) as u32)
                .collect();
            edge.sort_unstable();
            if edge.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            edges.insert(edge);
        }
        Ok(Self {
            n,
            k,
            verts: edges.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.verts.len() / self.k
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.verts[i * self.k..(i + 1) * self.k]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.verts.chunks_exact(self.k)
    }

    /// Serializes to the interchange format
    /// `{"n": int, "k": int, "edges": [[int, ...], ...]}` with edges in
    /// lexicographic order.
    pub fn to_json(&self) -> String {
        let wire = HypergraphWire {
            n: self.n,
            k: self.k,
            edges: self.edges().map(|e| e.to_vec()).collect(),
        };
        serde_json::to_string(&wire).expect("hypergraph serialization cannot fail")
    }

    /// Parses and fully validates a document in the interchange format.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: HypergraphWire = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("hypergraph document: {e}")))?;
        Self::new(wire.n, wire.k, wire.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphWire {
    n: usize,
    k: usize,
    edges: Vec<Vec<u32>>,
}

/// An assignment of one of `r` colors to each vertex. Classes may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    r: usize,
    assignment: Vec<u32>,
}

impl Coloring {
    pub fn new(r: usize, assignment: Vec<u32>) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParams("need at least one color".into()));
        }
        if let Some(&c) = assignment.iter().find(|&&c| c as usize >= r) {
            return Err(Error::InvalidParams(format!(
                "color {c} out of range 0..{r}"
            )));
        }
        Ok(Self { r, assignment })
    }

    /// Coloring whose classes are contiguous ascending vertex ranges of the
    /// given sizes; class `i` covers `sizes[i]` vertices. Zero sizes are
    /// allowed (the class is simply empty).
    pub fn from_class_sizes(sizes: &[u64]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParams("need at least one class".into()));
        }
        let total: u64 = sizes.iter().sum();
        if total > u32::MAX as u64 {
            return Err(Error::InvalidParams(format!(
                "{total} vertices exceed range"
            )));
        }
        let mut assignment = Vec::with_capacity(total as usize);
        for (color, &s) in sizes.iter().enumerate() {
            assignment.extend(std::iter::repeat_n(color as u32, s as usize));
        }
        Ok(Self {
            r: sizes.len(),
            assignment,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Size of each color class, indexed by color.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.r];
        for &c in &self.assignment {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// Sizes of the canonical balanced partition of `n` vertices into `r`
/// classes: the first `n mod r` classes take `ceil(n/r)` vertices, the rest
/// `floor(n/r)`.
pub fn balanced_class_sizes(n: u64, r: u64) -> Vec<u64> {
    let q = n / r;
    let rem = (n % r) as usize;
    let mut sizes = vec![q; r as usize];
    for s in sizes.iter_mut().take(rem) {
        *s += 1;
    }
    sizes
}

/// The canonical balanced coloring on contiguous ascending vertex ranges.
/// Rejects `r > n` (some class would be empty).
pub fn balanced_coloring(n: usize, r: usize) -> Result<Coloring> {
    if r < 1 || r > n {
        return Err(Error::InvalidParams(format!(
            "balanced coloring needs 1 <= r <= n, got r={r}, n={n}"
        )));
    }
    Coloring::from_class_sizes(&balanced_class_sizes(n as u64, r as u64))
}

/// Histogram from "number of distinct colors in an edge" to "number of
/// edges with that many distinct colors". Zero-count entries are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorProfile {
    counts: BTreeMap<usize, BigUint>,
}

impl ColorProfile {
    fn add(&mut self, t: usize, value: BigUint) {
        if !value.is_zero() {
            *self.counts.entry(t).or_default() += value;
        }
    }

    /// Count of edges with exactly `t` distinct colors.
    pub fn exactly(&self, t: usize) -> BigUint {
        self.counts.get(&t).cloned().unwrap_or_default()
    }

    /// Count of edges with at least `p` distinct colors.
    pub fn at_least(&self, p: usize) -> BigUint {
        self.counts
            .range(p..)
            .map(|(_, v)| v)
            .fold(BigUint::zero(), |acc, v| acc + v)
    }

    /// Count of edges with at most `t` distinct colors.
    pub fn at_most(&self, t: usize) -> BigUint {
        self.counts
            .range(..=t)
            .map(|(_, v)| v)
            .fold(BigUint::zero(), |acc, v| acc + v)
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().fold(BigUint::zero(), |acc, v| acc + v)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&t, v)| (t, v))
    }
}

/// Number of distinct colors among the vertices of `edge`.
pub(crate) fn distinct_color_count(edge: &[u32], assignment: &[u32], r: usize) -> usize {
    if r <= 64 {
        let mut mask = 0u64;
        for &v in edge {
            mask |= 1u64 << assignment[v as usize];
        }
        mask.count_ones() as usize
    } else if r <= 128 {
        let mut mask = 0u128;
        for &v in edge {
            mask |= 1u128 << assignment[v as usize];
        }
        mask.count_ones() as usize
    } else {
        edge.iter()
            .map(|&v| assignment[v as usize])
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// Edges whose distinct-color count is at least `p`.
pub(crate) fn count_at_least(h: &Hypergraph, assignment: &[u32], r: usize, p: usize) -> u64 {
    h.edges()
        .filter(|e| distinct_color_count(e, assignment, r) >= p)
        .count() as u64
}

/// Edges whose distinct-color count is exactly `p`.
pub(crate) fn count_exactly(h: &Hypergraph, assignment: &[u32], r: usize, p: usize) -> u64 {
    h.edges()
        .filter(|e| distinct_color_count(e, assignment, r) == p)
        .count() as u64
}

fn check_lengths(h: &Hypergraph, x: &Coloring) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::InvalidParams(format!(
            "coloring covers {} vertices, hypergraph has {}",
            x.len(),
            h.n()
        )));
    }
    Ok(())
}

/// Per-edge distinct-color histogram of a hypergraph under a coloring.
pub fn color_histogram(h: &Hypergraph, x: &Coloring) -> Result<ColorProfile> {
    check_lengths(h, x)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for edge in h.edges() {
        *counts
            .entry(distinct_color_count(edge, x.assignment(), x.r()))
            .or_default() += 1;
    }
    let mut profile = ColorProfile::default();
    for (t, c) in counts {
        profile.add(t, BigUint::from(c));
    }
    Ok(profile)
}

/// Number of edges properly colored at threshold `p`, i.e. containing
/// vertices of at least `p` distinct colors.
pub fn properly_colored_count(h: &Hypergraph, x: &Coloring, p: usize) -> Result<BigUint> {
    check_lengths(h, x)?;
    if p < 1 || p > h.k().min(x.r()) {
        return Err(Error::InvalidParams(format!(
            "threshold p must satisfy 1 <= p <= min(k, r), got p={p}"
        )));
    }
    Ok(BigUint::from(count_at_least(h, x.assignment(), x.r(), p)))
}

/// True iff every edge is properly colored at threshold `p` (vacuously true
/// on an edgeless hypergraph).
pub fn is_strong_coloring(h: &Hypergraph, x: &Coloring, p: usize) -> Result<bool> {
    let proper = properly_colored_count(h, x, p)?;
    Ok(proper == BigUint::from(h.edge_count() as u64))
}

/// Distinct-color histogram of the *complete* hypergraph under any coloring
/// with the given class sizes, computed without enumerating edges: on a
/// complete hypergraph only the class sizes matter, and the count of edges
/// touching exactly the classes of a subset S is the spanning count of S.
/// Zero-size classes contribute nothing.
pub fn complete_profile(sizes: &[u64], k: u64) -> Result<ColorProfile> {
    if sizes.is_empty() {
        return Err(Error::InvalidParams("need at least one class".into()));
    }
    if k < 1 {
        return Err(Error::InvalidParams("edge size k must be positive".into()));
    }
    let active: Vec<u64> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let m = active.len();
    if m > 63 {
        return Err(Error::InvalidParams(format!(
            "complete_profile supports at most 63 nonempty classes, got {m}"
        )));
    }
    let mut profile = ColorProfile::default();
    if m == 0 {
        return Ok(profile);
    }
    let mut subset = Vec::with_capacity(m);
    for mask in 1u64..(1u64 << m) {
        let t = mask.count_ones() as usize;
        if t as u64 > k {
            continue;
        }
        subset.clear();
        subset.extend((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| active[i]));
        profile.add(t, spanning_count_unchecked(&subset, k));
    }
    Ok(profile)
}
