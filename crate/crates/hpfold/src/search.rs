//! Stochastic conformational search: chain-growth sampling and Metropolis
//! simulated annealing over move strings.
//!
//! A run is fully determined by its seed and configuration. Randomness comes
//! from the ChaCha8 generator seeded with a 64-bit integer, so traces are
//! reproducible across runs and platforms for the same build.
//!
//! The mutation operator is a suffix resample: pick an index uniformly and
//! regrow the walk from there by stepwise-uniform chain growth with bounded
//! backtracking. A candidate is accepted when it does not raise the energy,
//! or with probability `exp(−ΔE/T)` under the geometric cooling schedule
//! `T = t0·alpha^i` within a pass. Restarts regrow from scratch and reset the
//! temperature but never the global best.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;

use crate::chain::{fold, MoveString};
use crate::energy::EnergyModel;
use crate::error::{Error, Result};
use crate::geometry::{LatticeName, LatticePoint, LatticeSpec};

/// Parameters of one annealing run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Seed for the ChaCha8 generator.
    pub seed: u64,
    /// Mutation steps per pass; 0 scores the grown chain only.
    pub iterations: u64,
    /// Initial temperature in milli-units; must be positive and finite.
    pub t0_milli: f64,
    /// Geometric cooling factor per iteration, strictly between 0 and 1.
    pub alpha: f64,
    /// Additional independent passes after the first.
    pub restarts: u64,
    /// Record a (iteration, best-so-far) trace row per step.
    pub record_trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            iterations: 1000,
            t0_milli: 2000.0,
            alpha: 0.995,
            restarts: 0,
            record_trace: false,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t0_milli.is_finite() && self.t0_milli > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "t0 must be positive and finite, got {}",
                self.t0_milli
            )));
        }
        if !(self.alpha.is_finite() && 0.0 < self.alpha && self.alpha < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "alpha must lie strictly between 0 and 1, got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Outcome of a search run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    best_moves: MoveString,
    best_energy_milli: i64,
    evaluations: u64,
    trace: Option<Vec<(u64, i64)>>,
}

impl SearchResult {
    pub fn best_moves(&self) -> &MoveString {
        &self.best_moves
    }

    /// Best energy seen across all passes, milli-units.
    pub fn best_energy_milli(&self) -> i64 {
        self.best_energy_milli
    }

    /// Number of energy evaluations performed.
    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Best-so-far trace rows `(iteration, best_energy_milli)`, one per step
    /// of every pass, when recording was on.
    pub fn trace(&self) -> Option<&[(u64, i64)]> {
        self.trace.as_deref()
    }

    /// Single-line JSON; the trace key is present only when recorded.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            best_moves: String,
            best_energy_milli: i64,
            evaluations: u64,
            #[serde(skip_serializing_if = "Option::is_none")]
            trace: Option<&'a [(u64, i64)]>,
        }
        serde_json::to_string(&Wire {
            best_moves: self.best_moves.labels(),
            best_energy_milli: self.best_energy_milli,
            evaluations: self.evaluations,
            trace: self.trace.as_deref(),
        })
        .expect("result serialization cannot fail")
    }
}

/// In-place walk state for growth and mutation.
struct Walk {
    spec: &'static LatticeSpec,
    points: Vec<LatticePoint>,
    occupied: HashSet<LatticePoint>,
    moves: Vec<usize>,
}

impl Walk {
    fn new(lattice: LatticeName) -> Walk {
        let mut occupied = HashSet::new();
        occupied.insert(LatticePoint::ORIGIN);
        Walk {
            spec: LatticeSpec::get(lattice),
            points: vec![LatticePoint::ORIGIN],
            occupied,
            moves: Vec::new(),
        }
    }

    fn rebuild(&mut self, moves: &[usize]) {
        self.points.truncate(1);
        self.occupied.clear();
        self.occupied.insert(LatticePoint::ORIGIN);
        self.moves.clear();
        for &m in moves {
            let p = *self.points.last().unwrap() + self.spec.basis()[m];
            let fresh = self.occupied.insert(p);
            debug_assert!(fresh, "rebuild source must be self-avoiding");
            self.points.push(p);
            self.moves.push(m);
        }
    }

    /// Grow to `target` moves by choosing uniformly among the self-avoiding
    /// extensions at each step, backtracking on dead ends. Backtracking never
    /// unwinds below the first `floor` moves; `pop_budget` caps how many
    /// backtracks are spent before giving up. Returns success.
    fn grow(
        &mut self,
        target: usize,
        floor: usize,
        pop_budget: Option<u64>,
        rng: &mut impl Rng,
    ) -> bool {
        debug_assert!(floor <= self.moves.len());
        let z = self.spec.basis_size();
        let mut pops_left = pop_budget.unwrap_or(u64::MAX);
        // untried candidate moves, one entry per level at or above the floor
        let mut options: Vec<Vec<usize>> = vec![shuffled_moves(z, rng)];
        while self.moves.len() < target {
            debug_assert_eq!(options.len(), self.moves.len() - floor + 1);
            match options.last_mut().and_then(Vec::pop) {
                Some(m) => {
                    let p = *self.points.last().unwrap() + self.spec.basis()[m];
                    if self.occupied.insert(p) {
                        self.points.push(p);
                        self.moves.push(m);
                        options.push(shuffled_moves(z, rng));
                    }
                }
                None => {
                    // dead end: unwind one level if allowed
                    if self.moves.len() == floor || pops_left == 0 {
                        return false;
                    }
                    pops_left -= 1;
                    options.pop();
                    let p = self.points.pop().unwrap();
                    self.occupied.remove(&p);
                    self.moves.pop();
                }
            }
        }
        true
    }
}

fn shuffled_moves(z: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut all: Vec<usize> = (0..z).collect();
    all.shuffle(rng);
    all
}

/// Grow a self-avoiding walk of `n − 1` moves by stepwise-uniform choice with
/// backtracking. Always succeeds for chains these lattices can host.
pub fn chain_grow(lattice: LatticeName, n: usize, rng: &mut impl Rng) -> Result<MoveString> {
    if n < 1 {
        return Err(Error::ChainTooShort { min: 1, got: n });
    }
    let mut walk = Walk::new(lattice);
    let grown = walk.grow(n - 1, 0, None, rng);
    assert!(grown, "unbounded growth cannot fail on these lattices");
    Ok(MoveString::new(lattice, walk.moves).unwrap())
}

// backtracks allowed per mutation before it is abandoned
const MUTATION_POP_BUDGET_PER_NODE: u64 = 64;

/// Metropolis simulated annealing over move strings.
pub fn anneal(
    lattice: LatticeName,
    enc: &str,
    model: &EnergyModel,
    config: &SearchConfig,
) -> Result<SearchResult> {
    config.validate()?;
    let classes = model.encode_indices(enc)?;
    if classes.len() < 2 {
        return Err(Error::ChainTooShort {
            min: 2,
            got: classes.len(),
        });
    }
    let steps = classes.len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let energy_of = |moves: &[usize]| -> i64 {
        let ms = MoveString::new(lattice, moves.to_vec()).unwrap();
        let conf = fold(&ms).expect("search states are self-avoiding");
        model.evaluate_indices(&conf, &classes)
    };

    let mut evaluations: u64 = 0;
    let mut trace: Option<Vec<(u64, i64)>> = config.record_trace.then(Vec::new);
    let mut best: Option<(Vec<usize>, i64)> = None;
    let mut global_step: u64 = 0;

    let mut walk = Walk::new(lattice);
    for _pass in 0..=config.restarts {
        // fresh start: grow, score, then mutate under the cooling schedule
        walk.rebuild(&[]);
        let grown = walk.grow(steps, 0, None, &mut rng);
        assert!(grown, "unbounded growth cannot fail on these lattices");
        let mut current = walk.moves.clone();
        let mut current_energy = energy_of(&current);
        evaluations += 1;
        update_best(&mut best, &current, current_energy);
        if let Some(rows) = trace.as_mut() {
            rows.push((global_step, best.as_ref().unwrap().1));
        }
        global_step += 1;

        let mut temperature = config.t0_milli;
        for _ in 0..config.iterations {
            let cut = rng.gen_range(0..steps);
            walk.rebuild(&current[..cut]);
            let budget = MUTATION_POP_BUDGET_PER_NODE * (steps - cut + 1) as u64;
            if walk.grow(steps, cut, Some(budget), &mut rng) {
                let candidate_energy = energy_of(&walk.moves);
                evaluations += 1;
                let delta = candidate_energy - current_energy;
                let accept = delta <= 0 || {
                    let p = (-(delta as f64) / temperature).exp();
                    rng.gen::<f64>() < p
                };
                if accept {
                    current.clear();
                    current.extend_from_slice(&walk.moves);
                    current_energy = candidate_energy;
                    update_best(&mut best, &current, current_energy);
                }
            }
            if let Some(rows) = trace.as_mut() {
                rows.push((global_step, best.as_ref().unwrap().1));
            }
            global_step += 1;
            temperature *= config.alpha;
        }
    }

    let (best_moves, best_energy_milli) = best.unwrap();
    Ok(SearchResult {
        best_moves: MoveString::new(lattice, best_moves).unwrap(),
        best_energy_milli,
        evaluations,
        trace,
    })
}

/// Keep the lower energy; on ties keep the lexicographically smaller moves,
/// making the result independent of visit order.
fn update_best(best: &mut Option<(Vec<usize>, i64)>, moves: &[usize], energy: i64) {
    let better = match best {
        None => true,
        Some((bm, be)) => energy < *be || (energy == *be && moves < bm.as_slice()),
    };
    if better {
        *best = Some((moves.to_vec(), energy));
    }
}
