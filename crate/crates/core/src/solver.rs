//! Exchange-move local search: maximize the number of properly colored
//! edges of an arbitrary hypergraph by repeatedly recoloring the single
//! vertex whose recolor gains the most, restarting from fresh random
//! colorings to escape local optima.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exec::map_reduce;
use crate::hypergraph::{count_at_least, distinct_color_count, Coloring, Hypergraph};
use crate::rng::{seeded, uniform_below};

/// Vertex-to-incident-edges index so a move evaluation touches only the
/// edges that can change.
#[derive(Debug, Clone)]
pub struct IncidenceIndex {
    incident: Vec<Vec<u32>>,
}

impl IncidenceIndex {
    pub fn new(h: &Hypergraph) -> Self {
        let mut incident = vec![Vec::new(); h.n()];
        for (i, edge) in h.edges().enumerate() {
            for &v in edge {
                incident[v as usize].push(i as u32);
            }
        }
        Self { incident }
    }

    pub fn incident_edges(&self, vertex: usize) -> &[u32] {
        &self.incident[vertex]
    }
}

/// A single-vertex recolor and the exact objective change it causes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub vertex: usize,
    pub new_color: u32,
    pub delta: i64,
}

/// Search knobs. `max_moves = None` defaults to `n * r * 10`, generous
/// against the strict-increase bound (the objective never exceeds the edge
/// count). The move strategy is fixed to best-improvement with ties broken
/// by lowest vertex then lowest color, which makes trajectories
/// reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub seed: u64,
    pub restarts: usize,
    pub max_moves: Option<usize>,
}

impl SolveConfig {
    pub fn new(seed: u64, restarts: usize) -> Self {
        Self {
            seed,
            restarts,
            max_moves: None,
        }
    }
}

/// Outcome of a search. `moves_taken` totals the accepted moves over all
/// restarts; `converged` is true iff every restart ended at a local optimum
/// rather than the move cap; `best_coloring` always evaluates to
/// `best_value` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub best_value: BigUint,
    pub best_coloring: Coloring,
    pub moves_taken: u64,
    pub restarts_used: usize,
    pub converged: bool,
}

fn check_inputs(h: &Hypergraph, r: usize, len: usize, p: usize) -> Result<()> {
    if len != h.n() {
        return Err(Error::InvalidParams(format!(
            "coloring covers {len} vertices, hypergraph has {}",
            h.n()
        )));
    }
    if p < 1 || p > h.k().min(r) {
        return Err(Error::InvalidParams(format!(
            "threshold p must satisfy 1 <= p <= min(k, r), got p={p}"
        )));
    }
    Ok(())
}

/// Objective change of recoloring `vertex`, rescanning only its incident
/// edges. Equals the full-reevaluation delta exactly.
fn delta_unchecked(
    h: &Hypergraph,
    index: &IncidenceIndex,
    assignment: &[u32],
    r: usize,
    vertex: usize,
    new_color: u32,
    p: usize,
) -> i64 {
    let old_color = assignment[vertex];
    if new_color == old_color {
        return 0;
    }
    let mut delta = 0i64;
    for &e in index.incident_edges(vertex) {
        let edge = h.edge(e as usize);
        let before = distinct_color_count(edge, assignment, r);
        // recount with the vertex recolored, without mutating the slice
        let after = if r <= 64 {
            let mut mask = 0u64;
            for &v in edge {
                let c = if v as usize == vertex {
                    new_color
                } else {
                    assignment[v as usize]
                };
                mask |= 1u64 << c;
            }
            mask.count_ones() as usize
        } else {
            let mut colors: Vec<u32> = edge
                .iter()
                .map(|&v| {
                    if v as usize == vertex {
                        new_color
                    } else {
                        assignment[v as usize]
                    }
                })
                .collect();
            colors.sort_unstable();
            colors.dedup();
            colors.len()
        };
        delta += (after >= p) as i64 - (before >= p) as i64;
    }
    delta
}

/// Public wrapper around the incident-edge delta; validates inputs.
pub fn incremental_delta(
    h: &Hypergraph,
    index: &IncidenceIndex,
    x: &Coloring,
    vertex: usize,
    new_color: u32,
    p: usize,
) -> Result<i64> {
    check_inputs(h, x.r(), x.len(), p)?;
    if vertex >= h.n() {
        return Err(Error::InvalidParams(format!(
            "vertex {vertex} out of range 0..{}",
            h.n()
        )));
    }
    if new_color as usize >= x.r() {
        return Err(Error::InvalidParams(format!(
            "color {new_color} out of range 0..{}",
            x.r()
        )));
    }
    Ok(delta_unchecked(
        h,
        index,
        x.assignment(),
        x.r(),
        vertex,
        new_color,
        p,
    ))
}

fn best_move(
    h: &Hypergraph,
    index: &IncidenceIndex,
    assignment: &[u32],
    r: usize,
    p: usize,
) -> Option<Move> {
    let mut best: Option<Move> = None;
    for vertex in 0..h.n() {
        for new_color in 0..r as u32 {
            if new_color == assignment[vertex] {
                continue;
            }
            let delta = delta_unchecked(h, index, assignment, r, vertex, new_color, p);
            if delta > best.map_or(0, |m| m.delta) {
                best = Some(Move {
                    vertex,
                    new_color,
                    delta,
                });
            }
        }
    }
    best
}

/// Evaluates all `n * (r - 1)` single-vertex recolorings and returns the
/// one with the largest positive objective change (lowest vertex, then
/// lowest color, on ties), or `None` at a local optimum.
pub fn improve_step(h: &Hypergraph, x: &Coloring, p: usize) -> Result<Option<Move>> {
    let index = IncidenceIndex::new(h);
    improve_step_with_index(h, &index, x, p)
}

/// [`improve_step`] against a prebuilt incidence index.
pub fn improve_step_with_index(
    h: &Hypergraph,
    index: &IncidenceIndex,
    x: &Coloring,
    p: usize,
) -> Result<Option<Move>> {
    check_inputs(h, x.r(), x.len(), p)?;
    Ok(best_move(h, index, x.assignment(), x.r(), p))
}

struct RestartOutcome {
    value: u64,
    assignment: Vec<u32>,
    index: usize,
    moves: u64,
    converged: bool,
}

/// Best-improvement hill climb with seeded random restarts.
///
/// Restart `i` draws its starting coloring from a ChaCha8 stream keyed by
/// `seed + i` (wrapping), so a fixed config reproduces the exact result; the
/// cross-restart merge (max value, lowest restart index on ties) is
/// order-independent, so the result is also independent of how restarts are
/// scheduled across workers.
pub fn local_search(
    h: &Hypergraph,
    r: usize,
    p: usize,
    config: &SolveConfig,
) -> Result<SolveResult> {
    if r < 2 {
        return Err(Error::InvalidParams(format!(
            "local search needs r >= 2, got r={r}"
        )));
    }
    check_inputs(h, r, h.n(), p)?;
    if config.restarts < 1 {
        return Err(Error::InvalidParams("need at least one restart".into()));
    }
    if config.max_moves == Some(0) {
        return Err(Error::InvalidParams("move cap must be positive".into()));
    }
    let max_moves = config
        .max_moves
        .unwrap_or_else(|| h.n().saturating_mul(r).saturating_mul(10).max(1));
    let index = IncidenceIndex::new(h);

    let run_restart = |i: usize| -> RestartOutcome {
        let mut rng = seeded(config.seed.wrapping_add(i as u64));
        let mut assignment: Vec<u32> = (0..h.n())
            .map(|_| uniform_below(&mut rng, r as u64) as u32)
            .collect();
        let mut value = count_at_least(h, &assignment, r, p);
        let mut moves = 0u64;
        let converged = loop {
            match best_move(h, &index, &assignment, r, p) {
                None => break true,
                Some(mv) => {
                    if moves >= max_moves as u64 {
                        break false;
                    }
                    assignment[mv.vertex] = mv.new_color;
                    value = (value as i64 + mv.delta) as u64;
                    moves += 1;
                }
            }
        };
        RestartOutcome {
            value,
            assignment,
            index: i,
            moves,
            converged,
        }
    };

    let merged = map_reduce((0..config.restarts).collect(), run_restart, |a, b| {
        let (mut keep, other) = if b.value > a.value || (b.value == a.value && b.index < a.index) {
            (b, a)
        } else {
            (a, b)
        };
        keep.moves += other.moves;
        keep.converged &= other.converged;
        keep
    })
    .expect("at least one restart runs");

    Ok(SolveResult {
        best_value: BigUint::from(merged.value),
        best_coloring: Coloring::new(r, merged.assignment)?,
        moves_taken: merged.moves,
        restarts_used: config.restarts,
        converged: merged.converged,
    })
}
