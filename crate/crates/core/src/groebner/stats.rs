use std::cell::Cell;

use serde::Serialize;

/// Work counters for the Buchberger engine.
///
/// Counters are per thread: a verification check runs its engine work on a
/// single thread, so the difference of two snapshots taken on that thread
/// is exactly the work of the check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub s_pairs: u64,
    pub reductions: u64,
}

impl EngineStats {
    pub fn since(self, earlier: EngineStats) -> EngineStats {
        EngineStats {
            s_pairs: self.s_pairs - earlier.s_pairs,
            reductions: self.reductions - earlier.reductions,
        }
    }
}

thread_local! {
    static COUNTERS: Cell<EngineStats> = const { Cell::new(EngineStats { s_pairs: 0, reductions: 0 }) };
}

/// Snapshot of this thread's counters.
pub fn engine_stats() -> EngineStats {
    COUNTERS.with(Cell::get)
}

pub(crate) fn record(s_pairs: u64, reductions: u64) {
    COUNTERS.with(|c| {
        let mut s = c.get();
        s.s_pairs += s_pairs;
        s.reductions += reductions;
        c.set(s);
    });
}
