//! Shared fixtures for the criterion benches.

use farey_core::farey::build_graph;
use farey_core::{FareyVertex, RegularGraph};

/// Levels spanning small, prime, prime-power and mixed cases (12 to 420 vertices).
pub const LEVELS: &[u64] = &[5, 9, 12, 16, 23, 29];

pub fn graphs() -> Vec<(u64, RegularGraph<FareyVertex>)> {
    LEVELS.iter().map(|&n| (n, build_graph(n).expect("level within cap"))).collect()
}
