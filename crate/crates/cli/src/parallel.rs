//! Class profiles computed on several threads.
//!
//! `S_n(B)` is split by first entry into `n` disjoint streams. Each worker
//! takes every `workers`-th first entry; the partial tallies are added in a
//! fixed order, so the result does not depend on the worker count.

use permstat_core::distributions::{profile_part, ClassProfile, ProfileSource, Sequential};
use permstat_core::{Caps, PatternSet, Result};

#[derive(Clone, Debug)]
pub struct Threaded {
    pub caps: Caps,
    pub workers: usize,
}

impl Threaded {
    pub fn new(caps: Caps, workers: usize) -> Self {
        Threaded {
            caps,
            workers: workers.max(1),
        }
    }
}

impl ProfileSource for Threaded {
    fn profile(&self, basis: &PatternSet, n: usize) -> Result<ClassProfile> {
        if self.workers == 1 || n < 2 {
            return Sequential::new(self.caps).profile(basis, n);
        }
        let workers = self.workers.min(n);
        let parts: Vec<Result<ClassProfile>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut acc = ClassProfile::empty(n);
                        for first in (1..=n).skip(w).step_by(workers) {
                            acc.merge(&profile_part(basis, n, first, &self.caps)?);
                        }
                        Ok(acc)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("profile worker panicked"))
                .collect()
        });
        let mut total = ClassProfile::empty(n);
        for part in parts {
            total.merge(&part?);
        }
        Ok(total)
    }

    fn caps(&self) -> &Caps {
        &self.caps
    }
}
