//! Seeded general-position instances: 2n points lifted to a cone in
//! R^{n+1}. Every n-subset of functionals yields a band, so the band count
//! is C(2n, n) + 2, and generation is reproducible for a fixed seed.

use bandforge::bands::all_bands;
use bandforge::cone::lambda_of;
use bandforge::{gen, DEFAULT_CAP};

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn main() {
    for n in 1..=3 {
        for seed in [7, 8] {
            let spec = gen::general_position(n, seed).unwrap();
            let lambda = lambda_of(&spec).unwrap();
            let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
            println!(
                "n = {n}, seed = {seed}: {} points, {} bands (expected C({},{}) + 2 = {})",
                lambda.len(),
                bands.len(),
                2 * n,
                n,
                binomial(2 * n as u64, n as u64) + 2
            );
        }
    }
}
