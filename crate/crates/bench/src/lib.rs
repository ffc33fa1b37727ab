//! Shared fixtures for the criterion benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_energy::graphs::{erdos_renyi, Graph};

/// Deterministic G(n, p) corpus.
pub fn random_corpus(count: usize, n: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| erdos_renyi(n, p, &mut rng)).collect()
}
