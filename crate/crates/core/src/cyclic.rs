//! Integer sequences and matrices up to cyclic permutation.
//!
//! A [`CycVec`] is a raw sequence in `Row(s, t)` (length `s`, entry sum `t`).
//! Its class under rotation is a [`CyclicClass`], represented by the
//! lexicographically least rotation. Classes with a non-zero entry can also
//! be written in [`PairsForm`]: one `(value, gap)` pair per non-zero entry,
//! where `gap` is the cyclic distance to the next non-zero entry. Swapping the
//! roles of values and gaps gives the complement `Row(s, t) -> Row(t, s)`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingDatum;
use crate::error::{Error, Result};

/// Start index of the lexicographically least rotation of `s`. Among equal
/// rotations (periodic input) the smallest index is returned.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

fn rotated<T: Clone>(s: &[T], start: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(s.len());
    out.extend_from_slice(&s[start..]);
    out.extend_from_slice(&s[..start]);
    out
}

/// A non-empty sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct CycVec(Vec<u32>);

impl CycVec {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(CycVec(entries))
    }

    /// The `t` of `Row(s, t)`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The rotation `(v_k, ..., v_{s-1}, v_0, ..., v_{k-1})`.
    pub fn rotate(&self, k: usize) -> CycVec {
        CycVec(rotated(&self.0, k % self.0.len()))
    }

    pub fn canonical(&self) -> CyclicClass {
        let shift = least_rotation(&self.0);
        CyclicClass {
            canonical: self.rotate(shift),
            shift,
        }
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// `(value, gap)` for every non-zero entry, starting at the first
    /// non-zero position of this (unrotated) sequence.
    fn raw_pairs(&self) -> Result<Vec<(u32, u32)>> {
        let s = self.0.len();
        let nonzero: Vec<usize> = (0..s).filter(|&i| self.0[i] > 0).collect();
        let (&first, &last) = match (nonzero.first(), nonzero.last()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::NoNonZeroEntry),
        };
        let mut pairs: Vec<(u32, u32)> = nonzero
            .windows(2)
            .map(|w| (self.0[w[0]], (w[1] - w[0]) as u32))
            .collect();
        pairs.push((self.0[last], (first + s - last) as u32));
        Ok(pairs)
    }

    pub fn pairs(&self) -> Result<PairsForm> {
        Ok(PairsForm::from_cyclic_list(self.raw_pairs()?))
    }
}

impl Deref for CycVec {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for CycVec {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        CycVec::new(v)
    }
}

impl From<CycVec> for Vec<u32> {
    fn from(v: CycVec) -> Self {
        v.0
    }
}

impl fmt::Display for CycVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The class of a sequence under rotation.
///
/// Equality, ordering and hashing only look at the canonical rotation. The
/// `shift` records which rotation of the original input produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(from = "CycVec", into = "CycVec")]
pub struct CyclicClass {
    canonical: CycVec,
    shift: usize,
}

impl CyclicClass {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        Ok(CycVec::new(entries)?.canonical())
    }

    pub fn canonical(&self) -> &CycVec {
        &self.canonical
    }

    /// Rotation index `k` with `canonical = input.rotate(k)`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> u32 {
        self.canonical.total()
    }

    pub fn contains(&self, v: &CycVec) -> bool {
        v.canonical().canonical == self.canonical
    }

    pub fn pairs(&self) -> Result<PairsForm> {
        self.canonical.pairs()
    }

    pub fn complement(&self) -> Result<CyclicClass> {
        Ok(self.pairs()?.complement().to_class())
    }

    /// Reads the class as an `f x r` embedding datum: the first rotation,
    /// scanning from the canonical one, whose columns are all non-zero.
    pub fn reshape(&self, f: usize, r: usize) -> Result<EmbeddingDatum> {
        let n = self.len();
        if f == 0 || r == 0 || f * r != n {
            return Err(Error::Shape {
                rows: f,
                cols: r,
                len: n,
            });
        }
        if self.total() == 0 {
            return Err(Error::NotEmbeddingClass { f, r });
        }
        for k in 0..n {
            let rot = self.canonical.rotate(k);
            let columns_ok = (0..r).all(|j| (0..f).any(|i| rot[i * r + j] > 0));
            if columns_ok {
                let m = rot.total();
                return EmbeddingDatum::new(f, r, m, rot.into_inner());
            }
        }
        Err(Error::NotEmbeddingClass { f, r })
    }
}

impl PartialEq for CyclicClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for CyclicClass {}

impl Hash for CyclicClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl PartialOrd for CyclicClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl From<CycVec> for CyclicClass {
    fn from(v: CycVec) -> Self {
        v.canonical()
    }
}

impl From<CyclicClass> for CycVec {
    fn from(c: CyclicClass) -> Self {
        c.canonical
    }
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.canonical)
    }
}

/// Cyclic list of `(value, gap)` pairs, stored in its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct PairsForm(Vec<(u32, u32)>);

impl PairsForm {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&(value, gap)) = pairs.iter().find(|&&(v, g)| v == 0 || g == 0) {
            return Err(Error::ZeroPair { value, gap });
        }
        Ok(Self::from_cyclic_list(pairs))
    }

    fn from_cyclic_list(pairs: Vec<(u32, u32)>) -> Self {
        let k = least_rotation(&pairs);
        PairsForm(rotated(&pairs, k))
    }

    pub fn as_slice(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn value_sum(&self) -> u32 {
        self.0.iter().map(|p| p.0).sum()
    }

    pub fn gap_sum(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    /// `<(a_0,b_0),...,(a_k,b_k)>  ->  <(b_0,a_1),(b_1,a_2),...,(b_k,a_0)>`.
    pub fn complement(&self) -> PairsForm {
        let n = self.0.len();
        let swapped = (0..n)
            .map(|i| (self.0[i].1, self.0[(i + 1) % n].0))
            .collect();
        PairsForm::from_cyclic_list(swapped)
    }

    /// The sequence whose pairs are these: each value followed by `gap - 1`
    /// zeros.
    pub fn to_vec(&self) -> CycVec {
        let mut out = Vec::with_capacity(self.gap_sum() as usize);
        for &(value, gap) in &self.0 {
            out.push(value);
            out.extend(std::iter::repeat(0).take(gap as usize - 1));
        }
        CycVec(out)
    }

    pub fn to_class(&self) -> CyclicClass {
        self.to_vec().canonical()
    }
}

impl TryFrom<Vec<(u32, u32)>> for PairsForm {
    type Error = Error;
    fn try_from(v: Vec<(u32, u32)>) -> Result<Self> {
        PairsForm::new(v)
    }
}

impl From<PairsForm> for Vec<(u32, u32)> {
    fn from(p: PairsForm) -> Self {
        p.0
    }
}

/// An `rows x cols` matrix of non-negative integers, compared only through
/// its row-major flattening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl CycMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(CycMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != cols) {
            let len = rows.iter().map(Vec::len).sum();
            return Err(Error::Shape {
                rows: rows.len(),
                cols,
                len,
            });
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    /// `row(M)`: row-major concatenation.
    pub fn flatten(&self) -> CycVec {
        CycVec(self.entries.clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.cols)
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn class(&self) -> CyclicClass {
        self.flatten().canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: &[u32]) -> CycVec {
        CycVec::new(x.to_vec()).unwrap()
    }

    fn brute_least_rotation(s: &[u32]) -> (Vec<u32>, usize) {
        (0..s.len()).map(|k| (rotated(s, k), k)).min().unwrap()
    }

    #[test]
    fn canonical_examples() {
        let c = v(&[2, 0, 1, 3, 0, 1]).canonical();
        assert_eq!(&**c.canonical(), &[0, 1, 2, 0, 1, 3]);
        assert_eq!(c.shift(), 4);

        let c = v(&[0, 0, 0]).canonical();
        assert_eq!(&**c.canonical(), &[0, 0, 0]);
        assert_eq!(c.shift(), 0);

        assert_eq!(
            v(&[2, 0, 1, 3, 0, 1]).canonical(),
            v(&[1, 2, 0, 1, 3, 0]).canonical()
        );
        assert_eq!(CycVec::new(vec![]), Err(Error::EmptySequence));
    }

    #[test]
    fn pairs_examples() {
        let p = v(&[3, 2, 1, 0, 0, 4, 2]).pairs().unwrap();
        let expected = PairsForm::new(vec![(3, 1), (2, 1), (1, 3), (4, 1), (2, 1)]).unwrap();
        assert_eq!(p, expected);
        assert_eq!(v(&[5]).pairs().unwrap().as_slice(), &[(5, 1)]);
        assert_eq!(v(&[0, 2, 0]).pairs().unwrap().as_slice(), &[(2, 3)]);
        assert_eq!(v(&[0, 0]).pairs(), Err(Error::NoNonZeroEntry));
    }

    #[test]
    fn from_pairs_examples() {
        let p = PairsForm::new(vec![(1, 2), (1, 1), (3, 4), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            p.to_class(),
            v(&[1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0]).canonical()
        );
        assert_eq!(
            PairsForm::new(vec![(5, 1)]).unwrap().to_class(),
            v(&[5]).canonical()
        );
        assert_eq!(
            PairsForm::new(vec![(2, 3)]).unwrap().to_class(),
            v(&[2, 0, 0]).canonical()
        );
        assert_eq!(
            PairsForm::new(vec![(1, 2), (0, 1)]),
            Err(Error::ZeroPair { value: 0, gap: 1 })
        );
        assert!(matches!(
            PairsForm::new(vec![(3, 0)]),
            Err(Error::ZeroPair { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let c = v(&[3, 2, 1, 0, 0, 4, 2]).canonical().complement().unwrap();
        assert_eq!(c, v(&[1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0]).canonical());

        let c = v(&[5]).canonical().complement().unwrap();
        assert_eq!(&**c.canonical(), &[0, 0, 0, 0, 1]);
        assert_eq!(c, v(&[1, 0, 0, 0, 0]).canonical());

        let c = v(&[2, 0, 0]).canonical().complement().unwrap();
        assert_eq!(c, v(&[3, 0]).canonical());

        assert_eq!(
            v(&[0, 0, 0]).canonical().complement(),
            Err(Error::NoNonZeroEntry)
        );
    }

    #[test]
    fn flatten_examples() {
        let a = CycMatrix::from_rows(&[vec![2, 0], vec![1, 3], vec![0, 1]]).unwrap();
        assert_eq!(&*a.flatten(), &[2, 0, 1, 3, 0, 1]);
        let b = CycMatrix::from_rows(&[vec![1, 2], vec![0, 1], vec![3, 0]]).unwrap();
        assert_eq!(&*b.flatten(), &[1, 2, 0, 1, 3, 0]);
        assert_eq!(a.class(), b.class());
        let c = CycMatrix::from_rows(&[vec![7]]).unwrap();
        assert_eq!(&*c.flatten(), &[7]);
        assert!(CycMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn reshape_examples() {
        let class = v(&[1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0]).canonical();
        let datum = class.reshape(6, 2).unwrap();
        let expected = CycMatrix::from_rows(&[
            vec![1, 0],
            vec![1, 3],
            vec![0, 0],
            vec![0, 1],
            vec![0, 1],
            vec![0, 0],
        ])
        .unwrap();
        assert_eq!(datum.matrix().class(), expected.class());
        assert!(class.contains(&datum.matrix().flatten()));
        assert_eq!((datum.f(), datum.r(), datum.m()), (6, 2, 7));

        let d = v(&[4]).canonical().reshape(1, 1).unwrap();
        assert_eq!(d.matrix().to_rows(), vec![vec![4]]);

        assert_eq!(
            v(&[0, 0, 1, 0]).canonical().reshape(2, 2),
            Err(Error::NotEmbeddingClass { f: 2, r: 2 })
        );
        assert!(matches!(
            v(&[1, 2, 3]).canonical().reshape(2, 2),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn serde_shapes() {
        let c = v(&[2, 0, 1, 3, 0, 1]).canonical();
        assert_eq!(serde_json::to_string(&c).unwrap(), "[0,1,2,0,1,3]");
        let back: CyclicClass = serde_json::from_str("[1,3,0,1,2,0]").unwrap();
        assert_eq!(back, c);
        let p = v(&[0, 2, 0]).pairs().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[2,3]]");
        assert!(serde_json::from_str::<CycVec>("[]").is_err());
    }

    fn nonzero_vec() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..5, 1..10)
            .prop_filter("needs a non-zero entry", |v| v.iter().any(|&x| x > 0))
    }

    proptest! {
        #[test]
        fn least_rotation_matches_brute_force(s in prop::collection::vec(0u32..3, 1..12)) {
            let (best, k) = brute_least_rotation(&s);
            let c = v(&s).canonical();
            prop_assert_eq!(&**c.canonical(), best.as_slice());
            prop_assert_eq!(c.shift(), k);
        }

        #[test]
        fn canonical_is_idempotent_rotation(s in prop::collection::vec(0u32..4, 1..10), k in 0usize..10) {
            let x = v(&s);
            let c = x.canonical();
            let again = c.canonical().canonical();
            prop_assert_eq!(again.canonical(), c.canonical());
            prop_assert_eq!(&x.rotate(c.shift()), c.canonical());
            prop_assert_eq!(x.rotate(k).canonical(), c);
        }

        #[test]
        fn pairs_invariants(s in nonzero_vec(), k in 0usize..10) {
            let x = v(&s);
            let p = x.pairs().unwrap();
            prop_assert_eq!(&x.rotate(k).pairs().unwrap(), &p);
            prop_assert_eq!(p.value_sum(), x.total());
            prop_assert_eq!(p.gap_sum() as usize, x.len());
            prop_assert_eq!(p.to_class(), x.canonical());
            prop_assert_eq!(p.to_vec().pairs().unwrap(), p);
        }

        #[test]
        fn complement_is_an_involution(s in nonzero_vec()) {
            let c = v(&s).canonical();
            let comp = c.complement().unwrap();
            prop_assert_eq!(comp.len() as u32, c.total());
            prop_assert_eq!(comp.total() as usize, c.len());
            prop_assert_eq!(comp.complement().unwrap(), c);
        }
    }
}
