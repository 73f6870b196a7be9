//! Doubling benchmark for the zero-free greedy layout.

use std::time::{Duration, Instant};

use balloon_core::greedy_balloon;

#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub n: usize,
    pub best: Duration,
}

/// Keeps large blocks on the heap between runs. glibc otherwise serves
/// every block above 32 MiB with a fresh mapping, and the page faults show
/// up as a step in the timings at that size.
fn steady_allocator() {
    #[cfg(all(target_os = "linux", target_env = "gnu"))]
    {
        static ONCE: std::sync::Once = std::sync::Once::new();
        ONCE.call_once(|| {
            // SAFETY: mallopt only adjusts allocator tunables.
            unsafe {
                libc::mallopt(libc::M_MMAP_THRESHOLD, 1 << 30);
                libc::mallopt(libc::M_TRIM_THRESHOLD, 1 << 30);
            }
        });
    }
}

/// Best of `runs` wall-clock times of `greedy_balloon` on `n` equal radii.
pub fn time_equal(n: usize, runs: usize) -> Duration {
    steady_allocator();
    let radii = vec![1.0 / n as f64; n];
    (0..runs.max(1))
        .map(|_| {
            let start = Instant::now();
            let l = greedy_balloon(&radii).expect("equal radii are valid");
            let elapsed = start.elapsed();
            std::hint::black_box(l);
            elapsed
        })
        .min()
        .unwrap_or_default()
}

/// Timings at `max_n / 4`, `max_n / 2` and `max_n`.
pub fn doubling(max_n: usize, runs: usize) -> Vec<Timing> {
    [max_n / 4, max_n / 2, max_n]
        .into_iter()
        .filter(|&n| n > 0)
        .map(|n| Timing { n, best: time_equal(n, runs) })
        .collect()
}

/// `t(2n) / t(n)` for consecutive timings.
pub fn ratios(timings: &[Timing]) -> Vec<f64> {
    timings
        .windows(2)
        .map(|w| w[1].best.as_secs_f64() / w[0].best.as_secs_f64().max(1e-12))
        .collect()
}
