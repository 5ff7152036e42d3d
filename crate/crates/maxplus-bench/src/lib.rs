//! Seeded instance generation shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use maxplus::sample::{random_irreducible, random_irreducible_finite_diagonal, EntryDistribution};
use maxplus::{Matrix, MatrixMap, Schedule};

/// Random irreducible matrix, reproducible from the seed.
pub fn irreducible_instance(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_irreducible(&mut rng, n, EntryDistribution::default())
}

/// Random irreducible matrix with a finite diagonal (short transients).
pub fn finite_diagonal_instance(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_irreducible_finite_diagonal(&mut rng, n, EntryDistribution::default())
}

/// Two-phase alternating schedule over seeded finite-diagonal matrices.
pub fn alternating_system(n: usize, seed: u64) -> (Schedule, MatrixMap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = EntryDistribution::default();
    let matrices: MatrixMap = [
        (
            "a".to_string(),
            random_irreducible_finite_diagonal(&mut rng, n, dist),
        ),
        (
            "b".to_string(),
            random_irreducible_finite_diagonal(&mut rng, n, dist),
        ),
    ]
    .into_iter()
    .collect();
    let schedule = Schedule::from_pairs(&[("a", 1), ("b", 1)]).expect("valid schedule");
    (schedule, matrices)
}
