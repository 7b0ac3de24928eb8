use serde::{Deserialize, Serialize};

use super::{ApartmentPoint, ChainFace};
use crate::error::{Error, Result};
use crate::rational::{ceil, int, Q};

/// An `m x m` integer matrix; entry `(i, j)` is the least `𝔭_D`-exponent
/// allowed in block `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ExponentMatrix {
    m: usize,
    entries: Vec<i64>,
}

impl ExponentMatrix {
    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let entries = (0..m * m).map(|k| f(k / m, k % m)).collect();
        ExponentMatrix { m, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::Shape {
                rows: m,
                cols: m,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        Ok(ExponentMatrix {
            m,
            entries: rows.concat(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.m + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.m).map(<[i64]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        ExponentMatrix {
            m: self.m,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Entrywise `self ≤ other`, i.e. the order of `self` contains that of
    /// `other`.
    pub fn contains(&self, other: &ExponentMatrix) -> bool {
        self.m == other.m && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Whether `c` is stable: `𝔭^{e_ij} v_j 𝔭^{c_j} ⊆ v_i 𝔭^{c_i}`.
    pub fn stabilizes(&self, c: &[i64]) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| c[i] - c[j] <= self.get(i, j)))
    }
}

impl TryFrom<Vec<Vec<i64>>> for ExponentMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        ExponentMatrix::from_rows(rows)
    }
}

impl From<ExponentMatrix> for Vec<Vec<i64>> {
    fn from(e: ExponentMatrix) -> Self {
        e.to_rows()
    }
}

/// Exponent matrix of a hereditary order split by the frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ExponentMatrix", into = "ExponentMatrix")]
pub struct OrderExponents(ExponentMatrix);

impl OrderExponents {
    /// Checks `e_ii = 0`, `e_ij + e_jk ≥ e_ik` and `e_ij + e_ji ∈ {0, 1}`.
    pub fn new(e: ExponentMatrix) -> Result<Self> {
        let m = e.m;
        for i in 0..m {
            if e.get(i, i) != 0 {
                return Err(Error::NotHereditaryOrder);
            }
            for j in 0..m {
                if !matches!(e.get(i, j) + e.get(j, i), 0 | 1) {
                    return Err(Error::NotHereditaryOrder);
                }
                for k in 0..m {
                    if e.get(i, j) + e.get(j, k) < e.get(i, k) {
                        return Err(Error::NotHereditaryOrder);
                    }
                }
            }
        }
        Ok(OrderExponents(e))
    }

    /// Standard form for `m = n_1 + … + n_r`: `o_D` on and below the block
    /// diagonal, `𝔭_D` above.
    pub fn standard(partition: &[u32]) -> Result<Self> {
        Ok(ChainFace::standard(partition)?.order())
    }

    pub fn exponents(&self) -> &ExponentMatrix {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// The chain of all lattices stable under the order, up to homothety.
    pub fn chain(&self) -> Result<ChainFace> {
        let e = &self.0;
        let m = e.m;
        let last = m - 1;
        // with c_m = 0, stability pins c_i to [−e_mi, e_im], an interval of
        // length at most one
        let ranges: Vec<(i64, i64)> = (0..m).map(|i| (-e.get(last, i), e.get(i, last))).collect();
        let mut stable = Vec::new();
        let mut c: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        'outer: loop {
            if e.stabilizes(&c) {
                stable.push(c.clone());
            }
            for i in 0..m {
                if c[i] < ranges[i].1 {
                    c[i] += 1;
                    return_lower(&mut c[..i], &ranges[..i]);
                    continue 'outer;
                }
            }
            break;
        }
        stable.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        let chain = ChainFace::new(stable).map_err(|_| Error::NotHereditaryOrder)?;
        if chain.order() != *self {
            return Err(Error::NotHereditaryOrder);
        }
        Ok(chain)
    }
}

fn return_lower(c: &mut [i64], ranges: &[(i64, i64)]) {
    for (x, r) in c.iter_mut().zip(ranges) {
        *x = r.0;
    }
}

impl TryFrom<ExponentMatrix> for OrderExponents {
    type Error = Error;
    fn try_from(e: ExponentMatrix) -> Result<Self> {
        OrderExponents::new(e)
    }
}

impl From<OrderExponents> for ExponentMatrix {
    fn from(o: OrderExponents) -> Self {
        o.0
    }
}

impl ChainFace {
    /// `𝔞_Γ = {a : aΓ_i ⊆ Γ_i}`: `e_ij = max_l (c^(l)_i − c^(l)_j)`.
    pub fn order(&self) -> OrderExponents {
        let steps = self.steps();
        let e = ExponentMatrix::from_fn(self.m(), |i, j| {
            steps
                .iter()
                .map(|c| c[i] - c[j])
                .max()
                .expect("non-empty chain")
        });
        OrderExponents(e)
    }
}

/// `𝔞_x(t)`: entry `(i, j)` is `⌈d(t + α_i − α_j)⌉`.
pub fn square_lattice_exponents(x: &ApartmentPoint, t: Q) -> ExponentMatrix {
    let d = int(x.d() as i64);
    let alpha = x.alpha();
    ExponentMatrix::from_fn(x.m(), |i, j| ceil(d * (t + alpha[i] - alpha[j])))
}
