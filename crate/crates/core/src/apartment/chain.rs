use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{ApartmentPoint, Lattice};
use crate::cyclic::CyclicClass;
use crate::error::{Error, Result};
use crate::rational::{frac, int, Q};

/// A split lattice chain up to equivalence and homothety; equivalently a
/// face of the apartment.
///
/// Stored as the steps `c^(0) ≤ c^(1) ≤ … ≤ c^(r−1) ≤ c^(0) + 1`, each step
/// strict, with `c^(r) = c^(0) + 1`. The representative is fixed by asking
/// that the last coordinate be zero on every stored step, so it jumps at the
/// wrap-around.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ChainFace {
    steps: Vec<Vec<i64>>,
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn plus_one(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| x + 1).collect()
}

impl ChainFace {
    /// Accepts the steps of one period in any cyclic starting position and
    /// any homothety representative.
    pub fn new(steps: Vec<Vec<i64>>) -> Result<Self> {
        let r = steps.len();
        let m = steps.first().map_or(0, Vec::len);
        if r == 0 || m == 0 {
            return Err(Error::InvalidChain("empty chain"));
        }
        if steps.iter().any(|s| s.len() != m) {
            return Err(Error::InvalidChain("steps of different lengths"));
        }
        if r > m {
            return Err(Error::InvalidChain("period exceeds m"));
        }
        let wrap = plus_one(&steps[0]);
        for l in 0..r {
            let cur = &steps[l];
            let next = if l + 1 < r { &steps[l + 1] } else { &wrap };
            if !leq(cur, next) || cur == next {
                return Err(Error::InvalidChain("steps must increase strictly"));
            }
        }
        // the step at which the last coordinate jumps becomes c^(0)
        let last = m - 1;
        let start = (0..r)
            .find(|&l| {
                let prev = if l == 0 {
                    steps[r - 1][last] - 1
                } else {
                    steps[l - 1][last]
                };
                steps[l][last] == prev + 1
            })
            .expect("every coordinate jumps once per period");
        let base = steps[start][last];
        let canonical = (0..r)
            .map(|k| {
                let (idx, lift) = if start + k < r {
                    (start + k, 0)
                } else {
                    (start + k - r, 1)
                };
                steps[idx].iter().map(|c| c + lift - base).collect()
            })
            .collect();
        Ok(ChainFace { steps: canonical })
    }

    /// A single lattice as a vertex.
    pub fn vertex(lattice: &Lattice) -> Result<Self> {
        Self::new(vec![lattice.0.clone()])
    }

    /// The standard chain for the partition `m = n_1 + … + n_r`: `c^(l)` is
    /// one on the first `l` blocks.
    pub fn standard(partition: &[u32]) -> Result<Self> {
        if partition.contains(&0) {
            return Err(Error::InvalidChain("partition parts must be positive"));
        }
        let m: usize = partition.iter().map(|&n| n as usize).sum();
        let mut steps = Vec::with_capacity(partition.len());
        let mut c = vec![0i64; m];
        let mut filled = 0usize;
        for &n in partition {
            steps.push(c.clone());
            for x in &mut c[filled..filled + n as usize] {
                *x = 1;
            }
            filled += n as usize;
        }
        Self::new(steps)
    }

    pub fn m(&self) -> usize {
        self.steps[0].len()
    }

    pub fn period(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[Vec<i64>] {
        &self.steps
    }

    pub fn lattices(&self) -> impl Iterator<Item = Lattice> + '_ {
        self.steps.iter().cloned().map(Lattice)
    }

    /// `c^(l)` for any integer `l`, using `c^(l+r) = c^(l) + 1`.
    pub fn step(&self, l: i64) -> Vec<i64> {
        let r = self.period() as i64;
        let (q, idx) = (l.div_euclid(r), l.rem_euclid(r) as usize);
        self.steps[idx].iter().map(|c| c + q).collect()
    }

    pub fn is_vertex(&self) -> bool {
        self.period() == 1
    }

    pub fn is_chamber(&self) -> bool {
        self.period() == self.m()
    }

    /// `[Γ] ≤ [Γ']`: every lattice of `self` is a lattice of `other`.
    pub fn is_face_of(&self, other: &ChainFace) -> bool {
        self.m() == other.m() && self.steps.iter().all(|s| other.steps.contains(s))
    }

    /// The chain spanned by a non-empty subset of this chain's lattices.
    pub fn subchain(&self, indices: &[usize]) -> Result<Self> {
        let picked: BTreeSet<usize> = indices.iter().copied().collect();
        if picked.is_empty() || picked.iter().any(|&i| i >= self.period()) {
            return Err(Error::InvalidChain("subchain indices out of range"));
        }
        Self::new(picked.into_iter().map(|i| self.steps[i].clone()).collect())
    }

    /// Period and invariant `<(n_1, …, n_r)>`, `n_l` counting coordinates
    /// that jump from `c^(l−1)` to `c^(l)`.
    pub fn invariant(&self) -> (usize, CyclicClass) {
        let r = self.period();
        let counts = (1..=r as i64)
            .map(|l| {
                let (prev, cur) = (self.step(l - 1), self.step(l));
                cur.iter()
                    .zip(&prev)
                    .filter(|(a, b)| **a == **b + 1)
                    .count() as u32
            })
            .collect();
        (r, CyclicClass::new(counts).expect("period is positive"))
    }
}

impl TryFrom<Vec<Vec<i64>>> for ChainFace {
    type Error = Error;
    fn try_from(steps: Vec<Vec<i64>>) -> Result<Self> {
        ChainFace::new(steps)
    }
}

impl From<ChainFace> for Vec<Vec<i64>> {
    fn from(c: ChainFace) -> Self {
        c.steps
    }
}

/// The face whose closed realization has `x` in its interior.
pub fn face_of(x: &ApartmentPoint) -> ChainFace {
    let offsets: Vec<Q> = x.scaled_alpha().collect();
    // Λ is constant in s = d·t on each interval (g_(k−1), g_(k)], where the
    // g are the breakpoints −d·α_i mod 1.
    let breakpoints: BTreeSet<Q> = offsets.iter().map(|u| frac(-*u)).collect();
    let steps = breakpoints
        .into_iter()
        .map(|s| {
            offsets
                .iter()
                .map(|u| (s + u).ceil().to_integer())
                .collect()
        })
        .collect();
    ChainFace::new(steps).expect("a lattice function yields a valid chain")
}

/// Uniform barycenter of the vertices of `chain` in a context of index `d`.
pub fn barycenter(chain: &ChainFace, d: u32) -> Result<ApartmentPoint> {
    let r = chain.period() as i64;
    let m = chain.m();
    let scale = int(r * d as i64);
    let alpha = (0..m)
        .map(|i| int(chain.steps.iter().map(|s| s[i]).sum::<i64>()) / scale)
        .collect();
    ApartmentPoint::new(super::ApartmentContext::new(m, d)?, alpha)
}

/// Whether the edge between `v` and `w` is oriented towards `w`: some representatives
/// satisfy `w ⊂ v` with quotient of dimension one over the residue field.
pub fn oriented_edge(v: &Lattice, w: &Lattice) -> Result<bool> {
    if v.m() != w.m() {
        return Err(Error::WrongLength {
            expected: v.m(),
            found: w.m(),
        });
    }
    if v.is_homothetic(w) {
        return Err(Error::NotAnEdge);
    }
    let delta: Vec<i64> = w.0.iter().zip(&v.0).map(|(a, b)| a - b).collect();
    let lo = *delta.iter().min().expect("non-empty");
    // w − v + k must be a unit vector, forcing k = −min(w − v)
    let shifted_sum: i64 = delta.iter().map(|x| x - lo).sum();
    Ok(shifted_sum == 1)
}
