//! Random inputs for the benchmarks.

use disrank::ArgFramework;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded random digraph on `n` vertices `v0 … v{n-1}`; every ordered
/// pair (self-loops included) is an attack with probability `p`.
pub fn random_framework(n: usize, p: f64, seed: u64) -> ArgFramework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut af = ArgFramework::new();
    for name in &names {
        af.add_argument(name).expect("fresh name");
    }
    for a in &names {
        for b in &names {
            if rng.gen_bool(p) {
                af.add_attack(a, b).expect("declared");
            }
        }
    }
    af
}
