//! Seed-search driver: rescale clique-free sources onto the host, overlay
//! them into a coloring, verify, and keep the first trial that produces a
//! valid witness.
//!
//! Trials are deterministic functions of (master seed, trial index): trial j
//! reads its per-color blowup seeds and permutation seeds from stream j of
//! the master seed, so the first-valid rule is by trial index and the whole
//! search replays exactly. Identity mode skips randomness altogether —
//! balanced blowups plus identity permutations — for pipelines that must be
//! seed-free.

use serde::{Deserialize, Serialize};

use crate::clique;
use crate::color::{
    self, ColoredGraph, RamseyInstance, TieRule, VerificationReport,
};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::rng;

use rand_core::RngCore;

/// How sources are rescaled and permuted onto the host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssemblyMode {
    /// Balanced blowup (every source size must divide the host size) with
    /// identity permutations: no randomness, a single trial.
    Identity,
    /// Seeded random blowups and seeded uniform permutations, searched over
    /// trials.
    Random,
}

// ==================================================================
// outcome records
// ==================================================================

/// A verified witness plus everything needed to rebuild it: the coloring is
/// carried as its recipe (mode, seeds, tie rule), not as raw cells.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseyWitness {
    pub instance: RamseyInstance,
    pub mode: AssemblyMode,
    pub tie_rule: TieRule,
    /// Master seed of the search; absent in identity mode.
    pub master_seed: Option<u64>,
    /// 1-based index of the successful trial.
    pub trial: u64,
    /// Per-color blowup seeds drawn for the trial; empty in identity mode.
    pub blowup_seeds: Vec<u64>,
    /// Per-color permutation seeds; empty in identity mode.
    pub permutation_seeds: Vec<u64>,
    /// Edge count per color, final color last.
    pub class_sizes: Vec<usize>,
    /// FNV-1a over the coloring cells, so replays can confirm the exact
    /// coloring without shipping it.
    pub coloring_checksum: u64,
    pub verification: VerificationReport,
}

/// How close one failed trial came.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub blowup_seeds: Vec<u64>,
    pub permutation_seeds: Vec<u64>,
    /// 1-based colors whose clique check failed.
    pub failed_colors: Vec<usize>,
    /// Size of the largest final-color clique in this trial's coloring
    /// (the exact independence number of the union of constrained classes).
    pub largest_final_clique: usize,
}

/// Every trial of an exhausted budget, with per-trial violation statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub instance: RamseyInstance,
    pub mode: AssemblyMode,
    pub tie_rule: TieRule,
    pub master_seed: Option<u64>,
    pub trials_attempted: u64,
    /// Largest clique seen in the final color across all trials.
    pub largest_final_clique: usize,
    pub trials: Vec<TrialRecord>,
}

/// Result of a certification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CertifyOutcome {
    Valid(RamseyWitness),
    Exhausted(FailureReport),
}

impl CertifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, CertifyOutcome::Valid(_))
    }

    pub fn witness(&self) -> Option<&RamseyWitness> {
        match self {
            CertifyOutcome::Valid(w) => Some(w),
            CertifyOutcome::Exhausted(_) => None,
        }
    }
}

/// Order-insensitive digest of a coloring: FNV-1a over the host size, the
/// palette, and the upper-triangle cells in row-major order.
pub fn coloring_checksum(c: &ColoredGraph) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let mut eat = |byte: u8| {
        h ^= byte as u64;
        h = h.wrapping_mul(PRIME);
    };
    for byte in (c.n() as u64).to_le_bytes() {
        eat(byte);
    }
    eat(c.palette() as u8);
    for u in 0..c.n() {
        for v in (u + 1)..c.n() {
            eat(c.color(u, v));
        }
    }
    h
}

// ==================================================================
// trial assembly
// ==================================================================

/// Builds the coloring for one trial from explicit seeds. Identity mode
/// ignores the seed slices and insists every source size divides the host.
pub fn assemble_trial(
    sources: &[Graph],
    inst: &RamseyInstance,
    mode: AssemblyMode,
    blowup_seeds: &[u64],
    permutation_seeds: &[u64],
) -> Result<ColoredGraph> {
    let k = inst.constrained_colors();
    if sources.len() != k {
        return Err(Error::SizeMismatch {
            expected: k,
            got: sources.len(),
        });
    }
    assemble_coloring(sources, inst.host_size, mode, blowup_seeds, permutation_seeds)
}

/// Rescales the sources onto `host_size` vertices and overlays them,
/// independent of any particular instance.
pub fn assemble_coloring(
    sources: &[Graph],
    host_size: usize,
    mode: AssemblyMode,
    blowup_seeds: &[u64],
    permutation_seeds: &[u64],
) -> Result<ColoredGraph> {
    let k = sources.len();
    let n = host_size;
    let (blown, perms) = match mode {
        AssemblyMode::Identity => {
            let mut blown = Vec::with_capacity(k);
            for g in sources {
                if n % g.n() != 0 {
                    return Err(Error::Divisibility { n, r: g.n() });
                }
                blown.push(families::balanced_blowup(g, n / g.n())?.0);
            }
            (blown, color::identity_permutations(k, n))
        }
        AssemblyMode::Random => {
            if blowup_seeds.len() != k || permutation_seeds.len() != k {
                return Err(Error::SizeMismatch {
                    expected: k,
                    got: blowup_seeds.len().min(permutation_seeds.len()),
                });
            }
            let mut blown = Vec::with_capacity(k);
            for (g, &seed) in sources.iter().zip(blowup_seeds) {
                blown.push(families::random_blowup(g, n, seed)?.0);
            }
            let perms = permutation_seeds
                .iter()
                .map(|&seed| rng::random_permutation(&mut rng::rng_from_seed(seed), n))
                .collect();
            (blown, perms)
        }
    };
    color::overlay_coloring(&blown, &perms, TieRule::LowestIndex)
}

/// Draws the 2k seeds trial `j` is entitled to: k blowup seeds first, then
/// k permutation seeds, all from stream `j` of the master seed.
pub fn trial_seeds(master_seed: u64, trial: u64, k: usize) -> (Vec<u64>, Vec<u64>) {
    let mut rng = rng::trial_rng(master_seed, trial);
    let blowup = (0..k).map(|_| rng.next_u64()).collect();
    let perm = (0..k).map(|_| rng.next_u64()).collect();
    (blowup, perm)
}

// ==================================================================
// the search
// ==================================================================

/// Runs up to `trial_budget` independent trials and returns the first valid
/// witness by trial index, or a failure report covering every trial.
/// Identity mode is deterministic, so it runs exactly one trial regardless
/// of the budget.
pub fn certify(
    sources: &[Graph],
    inst: &RamseyInstance,
    mode: AssemblyMode,
    master_seed: u64,
    trial_budget: u64,
) -> Result<CertifyOutcome> {
    if trial_budget == 0 {
        return Err(Error::Precondition("trial budget must be at least 1".into()));
    }
    let k = inst.constrained_colors();
    if sources.len() != k {
        return Err(Error::SizeMismatch {
            expected: k,
            got: sources.len(),
        });
    }
    // A source already containing its forbidden clique can never yield a
    // clean class, but a source that is clique-free always does (classes
    // are subgraphs of permuted blowups); the per-trial assertion below
    // leans on this split.
    let source_free: Vec<bool> = sources
        .iter()
        .zip(&inst.forbidden)
        .map(|(g, &s)| clique::is_clique_free(g, s))
        .collect();

    let trials = match mode {
        AssemblyMode::Identity => 1,
        AssemblyMode::Random => trial_budget,
    };
    let recorded_master = match mode {
        AssemblyMode::Identity => None,
        AssemblyMode::Random => Some(master_seed),
    };
    let mut records = Vec::new();
    for trial in 1..=trials {
        let (blowup_seeds, permutation_seeds) = match mode {
            AssemblyMode::Identity => (Vec::new(), Vec::new()),
            AssemblyMode::Random => trial_seeds(master_seed, trial, k),
        };
        let coloring = assemble_trial(sources, inst, mode, &blowup_seeds, &permutation_seeds)?;
        let verification = color::verify_witness(&coloring, inst)?;
        for (verdict, &free) in verification.verdicts.iter().zip(&source_free) {
            debug_assert!(
                verdict.clique_free || !free,
                "color {} found a clique its clique-free source cannot produce",
                verdict.color
            );
        }
        if verification.valid {
            return Ok(CertifyOutcome::Valid(RamseyWitness {
                instance: inst.clone(),
                mode,
                tie_rule: TieRule::LowestIndex,
                master_seed: recorded_master,
                trial,
                blowup_seeds,
                permutation_seeds,
                class_sizes: coloring.class_sizes(),
                coloring_checksum: coloring_checksum(&coloring),
                verification,
            }));
        }
        let failed_colors = verification
            .verdicts
            .iter()
            .filter(|v| !v.clique_free)
            .map(|v| v.color)
            .collect();
        let union = coloring.union_of_first(k);
        records.push(TrialRecord {
            trial,
            blowup_seeds,
            permutation_seeds,
            failed_colors,
            largest_final_clique: clique::independence_number(&union),
        });
    }
    let worst = records
        .iter()
        .map(|r| r.largest_final_clique)
        .max()
        .unwrap_or(0);
    Ok(CertifyOutcome::Exhausted(FailureReport {
        instance: inst.clone(),
        mode,
        tie_rule: TieRule::LowestIndex,
        master_seed: recorded_master,
        trials_attempted: trials,
        largest_final_clique: worst,
        trials: records,
    }))
}

/// Replays one recorded trial and checks the coloring digest: the witness's
/// verification report must reproduce exactly.
pub fn replay_witness(sources: &[Graph], witness: &RamseyWitness) -> Result<()> {
    let coloring = assemble_trial(
        sources,
        &witness.instance,
        witness.mode,
        &witness.blowup_seeds,
        &witness.permutation_seeds,
    )?;
    let checksum = coloring_checksum(&coloring);
    if checksum != witness.coloring_checksum {
        return Err(Error::Replay(format!(
            "coloring checksum mismatch: expected {}, rebuilt {}",
            witness.coloring_checksum, checksum
        )));
    }
    let verification = color::verify_witness(&coloring, &witness.instance)?;
    if verification != witness.verification {
        return Err(Error::Replay("verification verdicts changed on replay".into()));
    }
    Ok(())
}
