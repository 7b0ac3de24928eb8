//! Shared inputs for the benchmarks.

use pearl_core::EmbeddingDatum;

/// The `6 x 2` datum with rows `(1,0),(1,3),(0,0),(0,1),(0,1),(0,0)`.
pub fn worked_datum() -> EmbeddingDatum {
    let rows = [[1, 0], [1, 3], [0, 0], [0, 1], [0, 1], [0, 0]].map(|r| r.to_vec());
    EmbeddingDatum::from_rows(&rows, 7).expect("valid datum")
}

/// A deterministic cyclic vector of length `n` with entries in `0..4`.
pub fn sample_vector(n: usize) -> Vec<u32> {
    (0..n as u64)
        .map(|i| ((i.wrapping_mul(2654435761) >> 7) % 4) as u32)
        .collect()
}
