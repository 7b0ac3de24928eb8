//! One apartment of the building of `GL_m(D)`, `D` of index `d`.
//!
//! A fixed frame `v_1 D, ..., v_m D` splits everything, so a lattice is an
//! exponent vector `c` (the lattice `⊕ v_i 𝔭_D^{c_i}`) and a lattice function
//! is a rational vector `α` with `Λ(t) = ⊕ v_i 𝔭_D^{⌈d(t + α_i)⌉}`. Lattice
//! chains, hereditary orders and local types are all computed from these
//! exponent data.

mod chain;
mod local_type;
mod order;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, ceil, int, Q};

pub use chain::{barycenter, face_of, oriented_edge, ChainFace};
pub use local_type::{local_type, local_type_coordinates, LocalType};
pub use order::{square_lattice_exponents, ExponentMatrix, OrderExponents};

/// Number of frame lines `m` and the index `d` of the division algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApartmentContext {
    m: usize,
    d: u32,
}

impl ApartmentContext {
    pub fn new(m: usize, d: u32) -> Result<Self> {
        if m == 0 || d == 0 {
            return Err(Error::InvalidContext { m, d });
        }
        Ok(ApartmentContext { m, d })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// A lattice split by the frame, as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Lattice(pub Vec<i64>);

impl Lattice {
    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Representative of the homothety class with last exponent zero.
    pub fn normalized(&self) -> Lattice {
        let last = self.0.last().copied().unwrap_or(0);
        Lattice(self.0.iter().map(|c| c - last).collect())
    }

    pub fn is_homothetic(&self, other: &Lattice) -> bool {
        self.m() == other.m() && self.normalized() == other.normalized()
    }

    /// Multiplication by `π_D^k`.
    pub fn shifted(&self, k: i64) -> Lattice {
        Lattice(self.0.iter().map(|c| c + k).collect())
    }
}

/// Class of a split lattice function, normalized so that `α_m = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct ApartmentPoint {
    context: ApartmentContext,
    alpha: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    m: usize,
    d: u32,
    #[serde(with = "rational::vec_serde")]
    alpha: Vec<Q>,
}

impl TryFrom<PointRepr> for ApartmentPoint {
    type Error = Error;
    fn try_from(p: PointRepr) -> Result<Self> {
        ApartmentPoint::new(ApartmentContext::new(p.m, p.d)?, p.alpha)
    }
}

impl From<ApartmentPoint> for PointRepr {
    fn from(p: ApartmentPoint) -> Self {
        PointRepr {
            m: p.context.m,
            d: p.context.d,
            alpha: p.alpha,
        }
    }
}

impl ApartmentPoint {
    pub fn new(context: ApartmentContext, alpha: Vec<Q>) -> Result<Self> {
        if alpha.len() != context.m {
            return Err(Error::WrongLength {
                expected: context.m,
                found: alpha.len(),
            });
        }
        let last = alpha[alpha.len() - 1];
        let alpha = alpha.into_iter().map(|a| a - last).collect();
        Ok(ApartmentPoint { context, alpha })
    }

    /// The vertex of the lattice `c`: `α = c / d`.
    pub fn vertex(d: u32, lattice: &Lattice) -> Result<Self> {
        let context = ApartmentContext::new(lattice.m(), d)?;
        let alpha = lattice.0.iter().map(|&c| Q::new(c, d as i64)).collect();
        Self::new(context, alpha)
    }

    pub fn context(&self) -> ApartmentContext {
        self.context
    }

    pub fn m(&self) -> usize {
        self.context.m
    }

    pub fn d(&self) -> u32 {
        self.context.d
    }

    pub fn alpha(&self) -> &[Q] {
        &self.alpha
    }

    /// The same `α` read in another context of the same rank.
    pub(crate) fn with_d(&self, d: u32) -> Result<Self> {
        Ok(ApartmentPoint {
            context: ApartmentContext::new(self.context.m, d)?,
            alpha: self.alpha.clone(),
        })
    }

    /// `d·α`, the exponent offsets of the lattice function.
    pub fn scaled_alpha(&self) -> impl Iterator<Item = Q> + '_ {
        let d = int(self.context.d as i64);
        self.alpha.iter().map(move |a| a * d)
    }

    /// `Λ(t)`: exponents `⌈d(t + α_i)⌉`.
    pub fn lattice_at(&self, t: Q) -> Lattice {
        let d = int(self.context.d as i64);
        Lattice(self.alpha.iter().map(|a| ceil(d * (t + a))).collect())
    }

    /// Action of `diag(π_D^{h_1}, ..., π_D^{h_m})`.
    pub fn translate(&self, h: &[i64]) -> Result<Self> {
        if h.len() != self.context.m {
            return Err(Error::WrongLength {
                expected: self.context.m,
                found: h.len(),
            });
        }
        let d = self.context.d as i64;
        let alpha = self
            .alpha
            .iter()
            .zip(h)
            .map(|(a, &k)| a + Q::new(k, d))
            .collect();
        Self::new(self.context, alpha)
    }

    /// Affine chart `d(α_1 − α_2, ..., α_{m−1} − α_m)`.
    pub fn affine_coordinates(&self) -> Vec<Q> {
        let d = int(self.context.d as i64);
        self.alpha.windows(2).map(|w| d * (w[0] - w[1])).collect()
    }
}
