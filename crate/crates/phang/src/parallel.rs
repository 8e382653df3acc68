//! Multi-threaded search: one prefix-partition shard per thread.

use std::thread;

use phang_core::search::{
    admissible_length, min_admissible_length, search_length_with_progress, Minimum, SearchConfig,
    SearchError, SearchOutcome,
};
use phang_core::Spec;

/// Called with `(shard, nodes so far)` at each progress checkpoint.
pub type Progress<'a> = &'a (dyn Fn(u32, u64) + Sync);

/// Runs all `threads` shards of one length concurrently and merges them.
pub fn search_length_threaded(
    spec: &Spec,
    length: usize,
    cfg: &SearchConfig,
    threads: u32,
    progress: Progress<'_>,
) -> Result<SearchOutcome, SearchError> {
    let threads = threads.max(1);
    let parts: Vec<Result<SearchOutcome, SearchError>> = thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let shard = cfg.shard(threads, i);
                s.spawn(move || {
                    search_length_with_progress(spec, length, &shard, &mut |nodes| {
                        progress(i, nodes)
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search thread panicked"))
            .collect()
    });
    let parts = parts.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(SearchOutcome::merge(parts).expect("at least one shard"))
}

/// [`phang_core::search::find_minimum`] with each length searched on
/// `threads` threads.
pub fn find_minimum_threaded(
    spec: &Spec,
    max_length: usize,
    cfg: &SearchConfig,
    threads: u32,
    progress: Progress<'_>,
) -> Result<Minimum, SearchError> {
    let (n, k) = (spec.n(), spec.demaine_k().ok_or(SearchError::NotThreshold)?);
    let mut nodes = 0;
    for length in min_admissible_length(n, k)..=max_length {
        if !admissible_length(n, k, length) {
            continue;
        }
        let out = search_length_threaded(spec, length, cfg, threads, progress)?;
        nodes += out.nodes_explored;
        if !out.solutions.is_empty() {
            return Ok(Minimum::Found(SearchOutcome {
                nodes_explored: nodes,
                ..out
            }));
        }
    }
    Ok(Minimum::NotFound {
        max_length,
        nodes_explored: nodes,
    })
}
