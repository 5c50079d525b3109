//! Shared worker pool. `BLACKBURN_WORKERS` overrides the thread count.

use std::sync::OnceLock;

use rayon::{ThreadPool, ThreadPoolBuilder};

pub const WORKERS_ENV: &str = "BLACKBURN_WORKERS";

pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let n = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
        ThreadPoolBuilder::new().num_threads(n).build().expect("worker pool")
    })
}

/// Number of threads in [`pool`].
pub fn workers() -> usize {
    pool().current_num_threads()
}
