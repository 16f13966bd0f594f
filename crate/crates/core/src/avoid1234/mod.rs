//! Words on `[n]^r` avoiding both 1234 and `1k(k-1)...2`.
//!
//! A partial word is summarised by its live left-to-right minima and their
//! activated sequences (the later, strictly larger letters), plus a sliding
//! window of letter counts. Letters above the window are used
//! up and can no longer take part in a forbidden pattern; letters below it
//! are untouched. Because 1234 is forbidden, once a letter has a smaller
//! predecessor every larger letter after it is forced into decreasing order,
//! which is what keeps the number of live minima and the length of each
//! activated sequence bounded in terms of `r` and `k`.

mod cache;
mod engine;
mod ops;
mod state;

pub use cache::{load_cache, read_cache, save_cache, write_cache};
pub use engine::{count_words_1234, series_1234, Avoid1234Engine, Config1234, SurvivorRule, WindowRule};
pub use ops::{fix, has_decreasing_run, longest_decreasing, reduce, remove, removed};
pub use state::State1234;
