//! Multi-threaded versions of the Monte Carlo estimates.
//!
//! Work is split into fixed chunks of trials; each chunk draws from its own
//! trial substreams and hit counts are summed as integers, so the results are
//! bit-identical to the sequential routines in `boxproj_core::montecarlo` for
//! any number of threads.

use boxproj_core::models::{whiten, BoxSpec};
use boxproj_core::montecarlo::{count_separations, EstimateWithCI, SweepPlan, SweepTable, WhiteningComparison};
use boxproj_core::rng::SeedSpec;
use boxproj_core::{Error, Result};
use rayon::prelude::*;

const CHUNK: u64 = 4096;

fn chunks(trials: u64) -> impl Iterator<Item = std::ops::Range<u64>> {
    (0..trials.div_ceil(CHUNK)).map(move |c| c * CHUNK..((c + 1) * CHUNK).min(trials))
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidParameter {
            name: "trials",
            reason: "must be at least 1",
        });
    }
    Ok(())
}

pub fn estimate_separation_probability(spec: &BoxSpec, trials: u64, seed: SeedSpec) -> Result<EstimateWithCI> {
    check_trials(trials)?;
    let ranges: Vec<_> = chunks(trials).collect();
    let hits = ranges
        .into_par_iter()
        .map(|r| count_separations(spec, seed, r))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    EstimateWithCI::from_counts(hits, trials)
}

pub fn sweep(plan: &SweepPlan) -> Result<SweepTable> {
    let cells = plan.cells()?;
    let work: Vec<(usize, std::ops::Range<u64>)> = cells
        .iter()
        .flat_map(|cell| chunks(plan.trials).map(move |r| (cell.index, r)))
        .collect();
    let counted = work
        .into_par_iter()
        .map(|(i, r)| count_separations(&cells[i].spec, cells[i].seed, r).map(|h| (i, h)))
        .collect::<Result<Vec<_>>>()?;
    let mut hits = vec![0u64; cells.len()];
    for (i, h) in counted {
        hits[i] += h;
    }
    plan.table(&hits)
}

pub fn whitening_comparison(spec: &BoxSpec, trials: u64, seed: SeedSpec) -> Result<WhiteningComparison> {
    let whitened = whiten(spec);
    let (original, whitened) = rayon::join(
        || estimate_separation_probability(spec, trials, seed),
        || estimate_separation_probability(&whitened, trials, seed),
    );
    Ok(WhiteningComparison {
        original: original?,
        whitened: whitened?,
    })
}

/// Thread pool honouring an optional worker cap.
pub fn thread_pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    builder.build().expect("failed to start worker threads")
}
