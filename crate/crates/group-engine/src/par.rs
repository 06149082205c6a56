//! Minimal deterministic work splitting over scoped threads.

/// Splits `[0, total)` into `threads` contiguous ranges, applies `f` to each
/// range on its own scoped thread, and returns the results in range order.
/// With one thread the closure runs on the caller's thread.  Because the
/// ranges are contiguous and the results are concatenated in range order,
/// the output is independent of the thread count.
pub fn par_map_ranges<T, F>(total: u64, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let threads = threads.max(1).min(64) as u64;
    if threads == 1 || total == 0 {
        return vec![f(0, total)];
    }
    let chunk = total.div_ceil(threads);
    let bounds: Vec<(u64, u64)> = (0..threads)
        .map(|i| ((i * chunk).min(total), ((i + 1) * chunk).min(total)))
        .filter(|&(lo, hi)| lo < hi)
        .collect();
    let fref = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || fref(lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}
