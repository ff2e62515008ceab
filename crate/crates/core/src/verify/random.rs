//! Seeded generators for the randomized suites. Xoshiro256** keeps streams
//! stable across platforms and releases, so every trial replays from its seed.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::graph::Graph;
use crate::linalg::Matrix;

pub type TrialRng = Xoshiro256StarStar;

pub fn rng(seed: u64) -> TrialRng {
    Xoshiro256StarStar::seed_from_u64(seed)
}

/// Erdős–Rényi graph with an edge probability drawn from `[0.1, 0.9]`.
pub fn random_graph(rng: &mut TrialRng, n: usize) -> Graph {
    let p: f64 = rng.random_range(0.1..0.9);
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("vertex count within limits")
}

pub fn random_symmetric(rng: &mut TrialRng, n: usize, integer: bool) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = if integer { rng.random_range(-5i32..=5) as f64 } else { rng.random_range(-5.0..5.0) };
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m
}
