//! Seeded inputs shared by the benchmarks.

use sharp_core::genfun::{default_domain, GenFun};
use sharp_core::random::{rng, NetGen};
use sharp_core::{ExactNet, Model};

pub fn nets(seed: u64, count: usize, model: Model) -> Vec<ExactNet> {
    let g = NetGen::default();
    let mut r = rng(seed);
    (0..count).map(|_| g.net(&mut r, model)).collect()
}

pub fn genfuns(seed: u64, count: usize) -> Vec<GenFun> {
    let g = NetGen::default();
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let terms: Vec<_> = (0..3).map(|_| (g.poly(&mut r), g.exponent(&mut r))).collect();
            GenFun::simplified(default_domain(), terms)
        })
        .collect()
}
