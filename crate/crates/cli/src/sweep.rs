//! Exhaustive monicity sweep over plat normal forms.
//!
//! Walks every class representative with `1 < p <= max_p` (odd `p`, even
//! coprime `q` in `(0, p)`) and records the pairs whose Alexander polynomial
//! is monic, i.e. has unit coefficients at both extreme exponents.  Monicity
//! is unchanged by unit-monomial rescaling, so the raw closed-form sum is
//! tested without normalizing first.  Work is split over `p` with rayon and
//! the findings are sorted, so results do not depend on the worker count.

use platkit_core::alexander_closed;
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub pairs_checked: u64,
    /// `(p, q)` pairs with monic Alexander polynomial, in lexicographic order.
    pub monic: Vec<(i64, i64)>,
}

/// Sweeps all representatives with `p <= max_p`; `jobs = 0` uses all cores.
pub fn sweep_monic(max_p: i64, jobs: usize) -> SweepOutcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let per_p: Vec<(u64, Vec<(i64, i64)>)> = pool.install(|| {
        (3..=max_p.max(1))
            .into_par_iter()
            .filter(|p| p % 2 == 1)
            .map(|p| {
                let mut checked = 0;
                let mut monic = Vec::new();
                for q in (2..p).step_by(2) {
                    if num_integer::gcd(p, q) != 1 {
                        continue;
                    }
                    checked += 1;
                    let delta = alexander_closed(p, q).expect("valid representative");
                    if delta.is_monic().expect("nonzero polynomial") {
                        monic.push((p, q));
                    }
                }
                (checked, monic)
            })
            .collect()
    });
    let mut outcome = SweepOutcome {
        pairs_checked: 0,
        monic: Vec::new(),
    };
    for (checked, monic) in per_p {
        outcome.pairs_checked += checked;
        outcome.monic.extend(monic);
    }
    outcome.monic.sort_unstable();
    outcome
}
