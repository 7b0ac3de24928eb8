//! Embedding data `λ ∈ M(f, r; m)` and the combinatorial skeleton of the
//! pearl embedding they define.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclic::{CycMatrix, CyclicClass};
use crate::error::{Error, Result};

/// An `f x r` matrix of non-negative integers summing to `m`, with a
/// positive entry in every column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DatumRepr", into = "DatumRepr")]
pub struct EmbeddingDatum {
    m: u32,
    matrix: CycMatrix,
}

#[derive(Serialize, Deserialize)]
struct DatumRepr {
    f: usize,
    r: usize,
    m: u32,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<DatumRepr> for EmbeddingDatum {
    type Error = Error;
    fn try_from(raw: DatumRepr) -> Result<Self> {
        let matrix = CycMatrix::from_rows(&raw.rows)?;
        if matrix.rows() != raw.f || matrix.cols() != raw.r {
            return Err(Error::Shape {
                rows: raw.f,
                cols: raw.r,
                len: raw.rows.iter().map(Vec::len).sum(),
            });
        }
        EmbeddingDatum::from_matrix(matrix, raw.m)
    }
}

impl From<EmbeddingDatum> for DatumRepr {
    fn from(d: EmbeddingDatum) -> Self {
        DatumRepr {
            f: d.f(),
            r: d.r(),
            m: d.m,
            rows: d.matrix.to_rows(),
        }
    }
}

impl EmbeddingDatum {
    /// `entries` is the row-major `f x r` matrix.
    pub fn new(f: usize, r: usize, m: u32, entries: Vec<u32>) -> Result<Self> {
        Self::from_matrix(CycMatrix::new(f, r, entries)?, m)
    }

    pub fn from_rows(rows: &[Vec<u32>], m: u32) -> Result<Self> {
        Self::from_matrix(CycMatrix::from_rows(rows)?, m)
    }

    pub fn from_matrix(matrix: CycMatrix, m: u32) -> Result<Self> {
        if let Some(column) =
            (0..matrix.cols()).find(|&j| (0..matrix.rows()).all(|i| matrix.get(i, j) == 0))
        {
            return Err(Error::InvalidDatum { column });
        }
        let found = matrix.flatten().total();
        if found != m {
            return Err(Error::SizeMismatch { expected: m, found });
        }
        Ok(EmbeddingDatum { m, matrix })
    }

    pub fn f(&self) -> usize {
        self.matrix.rows()
    }

    pub fn r(&self) -> usize {
        self.matrix.cols()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn matrix(&self) -> &CycMatrix {
        &self.matrix
    }

    /// The embedding type `<λ>`.
    pub fn class(&self) -> CyclicClass {
        self.matrix.class()
    }

    pub fn is_equivalent(&self, other: &EmbeddingDatum) -> bool {
        self.f() == other.f() && self.r() == other.r() && self.class() == other.class()
    }

    /// Column sums `n_j`.
    pub fn partition(&self) -> Vec<u32> {
        (0..self.r())
            .map(|j| (0..self.f()).map(|i| self.matrix.get(i, j)).sum())
            .collect()
    }

    /// Block partition plus the power of the Frobenius acting on each basis
    /// vector, indices running column by column and, inside a column, row by
    /// row.
    pub fn skeleton(&self) -> PearlSkeleton {
        let mut levels = Vec::with_capacity(self.m as usize);
        for j in 0..self.r() {
            for i in 0..self.f() {
                levels.extend(std::iter::repeat(i as u32).take(self.matrix.get(i, j) as usize));
            }
        }
        PearlSkeleton {
            partition: self.partition(),
            levels,
        }
    }

    /// `ᵗrow(λ)` as a datum in `M(f·r, 1; m)`.
    pub fn rank_reduce(&self) -> EmbeddingDatum {
        let column = self.matrix.flatten().into_inner();
        let matrix = CycMatrix::new(column.len(), 1, column).expect("non-empty column");
        EmbeddingDatum { m: self.m, matrix }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PearlSkeleton {
    pub partition: Vec<u32>,
    pub levels: Vec<u32>,
}

/// Degree of `E_D | F`: the gcd of `d` and the residue degree of `E | F`.
pub fn ed_degree(residue_degree: u32, d: u32) -> u32 {
    residue_degree.gcd(&d)
}
