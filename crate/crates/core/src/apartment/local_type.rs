use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ApartmentPoint;
use crate::cyclic::CyclicClass;
use crate::error::{Error, Result};
use crate::rational::{common_denominator, frac, int, is_nonnegative, is_one, sum, Q};

/// A cyclic class of non-negative rationals summing to one, stored as the
/// integer class `N·μ` with `N` the least common denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalType {
    denominator: u32,
    class: CyclicClass,
}

impl LocalType {
    /// The class of the ordered coordinates `mu`.
    pub fn from_coordinates(mu: &[Q]) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !mu.iter().all(is_nonnegative) {
            return Err(Error::InvalidLocalType("negative coordinate"));
        }
        if !is_one(&sum(mu)) {
            return Err(Error::InvalidLocalType("coordinates must sum to 1"));
        }
        let n = common_denominator(mu);
        let entries = mu
            .iter()
            .map(|x| (x * int(n)).to_integer() as u32)
            .collect();
        Ok(LocalType {
            denominator: n as u32,
            class: CyclicClass::new(entries)?,
        })
    }

    /// `class / n`, reduced.
    pub fn from_scaled(class: &CyclicClass, n: u32) -> Result<Self> {
        if n == 0 || class.total() != n {
            return Err(Error::InvalidLocalType(
                "entries must sum to the denominator",
            ));
        }
        let g = class.canonical().iter().fold(n, |g, &x| g.gcd(&x));
        let entries = class.canonical().iter().map(|x| x / g).collect();
        Ok(LocalType {
            denominator: n / g,
            class: CyclicClass::new(entries)?,
        })
    }

    pub fn m(&self) -> usize {
        self.class.len()
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    /// `<N·μ>` for the stored least denominator `N`.
    pub fn class(&self) -> &CyclicClass {
        &self.class
    }

    /// `<n·μ>` when it is integral.
    pub fn scaled(&self, n: u32) -> Option<CyclicClass> {
        if n == 0 || n % self.denominator != 0 {
            return None;
        }
        let k = n / self.denominator;
        let entries = self.class.canonical().iter().map(|x| x * k).collect();
        CyclicClass::new(entries).ok()
    }

    /// The canonical rotation as rationals.
    pub fn coordinates(&self) -> Vec<Q> {
        let n = self.denominator as i64;
        self.class
            .canonical()
            .iter()
            .map(|&x| Q::new(x as i64, n))
            .collect()
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.class, self.denominator)
    }
}

/// Barycentric coordinates of `x` in an orientation-ordered chamber whose
/// closure contains it.
///
/// With `β_i = frac(d·α_i)` sorted decreasingly (ties by index), the
/// coordinates are `(1 − β_(1) + β_(m), β_(1) − β_(2), …, β_(m−1) − β_(m))`.
pub fn local_type_coordinates(x: &ApartmentPoint) -> Vec<Q> {
    let beta: Vec<Q> = x.scaled_alpha().map(frac).collect();
    let mut order: Vec<usize> = (0..beta.len()).collect();
    order.sort_by(|&i, &j| beta[j].cmp(&beta[i]).then(i.cmp(&j)));
    let sorted: Vec<Q> = order.iter().map(|&i| beta[i]).collect();
    let mut mu = Vec::with_capacity(sorted.len());
    mu.push(int(1) - sorted[0] + sorted[sorted.len() - 1]);
    mu.extend(sorted.windows(2).map(|w| w[0] - w[1]));
    mu
}

pub fn local_type(x: &ApartmentPoint) -> LocalType {
    LocalType::from_coordinates(&local_type_coordinates(x)).expect("barycentric coordinates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::tests::point_strategy;
    use crate::apartment::{barycenter, ApartmentContext, ChainFace};
    use crate::rational::q;
    use proptest::prelude::*;

    fn point(m: usize, d: u32, alpha: Vec<Q>) -> ApartmentPoint {
        ApartmentPoint::new(ApartmentContext::new(m, d).unwrap(), alpha).unwrap()
    }

    #[test]
    fn vertex_has_unit_type() {
        let x = point(4, 3, vec![q(2, 3), q(-1, 3), int(5), int(0)]);
        let lt = local_type(&x);
        assert_eq!(lt.denominator(), 1);
        assert_eq!(lt.class(), &CyclicClass::new(vec![1, 0, 0, 0]).unwrap());
    }

    #[test]
    fn chamber_midpoint() {
        let x = point(2, 1, vec![q(1, 2), int(0)]);
        assert_eq!(local_type_coordinates(&x), vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn reference_point() {
        let raw: Vec<Q> = [1, -1, -2, -2, -2, -6, -8]
            .iter()
            .map(|&n| q(n, 24))
            .collect();
        let beta: Vec<Q> = raw.iter().map(|a| frac(a * int(2))).collect();
        let expect: Vec<Q> = [1, 11, 10, 10, 10, 6, 4]
            .iter()
            .map(|&n| q(n, 12))
            .collect();
        assert_eq!(beta, expect);
        // stored with α_7 = 0, which shifts every β by 8/12 and rotates the
        // ordered coordinates
        let x = point(7, 2, raw);
        let mu = local_type_coordinates(&x);
        let ordered: Vec<Q> = [3, 2, 1, 0, 0, 4, 2].iter().map(|&n| q(n, 12)).collect();
        assert_eq!(mu, ordered);
        let lt = local_type(&x);
        assert_eq!(lt.denominator(), 12);
        assert_eq!(
            lt.class(),
            &CyclicClass::new(vec![3, 2, 1, 0, 0, 4, 2]).unwrap()
        );
        let from_raw_order: Vec<Q> = [2, 1, 0, 0, 4, 2, 3].iter().map(|&n| q(n, 12)).collect();
        assert_eq!(LocalType::from_coordinates(&from_raw_order).unwrap(), lt);
        assert_eq!(
            lt.scaled(24).unwrap(),
            CyclicClass::new(vec![6, 4, 2, 0, 0, 8, 4]).unwrap()
        );
        assert_eq!(lt.scaled(18), None);
    }

    #[test]
    fn constructors_validate() {
        assert!(LocalType::from_coordinates(&[q(1, 2), q(1, 3)]).is_err());
        assert!(LocalType::from_coordinates(&[q(3, 2), q(-1, 2)]).is_err());
        let c = CyclicClass::new(vec![2, 2, 0]).unwrap();
        let lt = LocalType::from_scaled(&c, 4).unwrap();
        assert_eq!(
            lt,
            LocalType::from_coordinates(&[q(1, 2), int(0), q(1, 2)]).unwrap()
        );
        assert!(LocalType::from_scaled(&c, 5).is_err());
    }

    proptest! {
        #[test]
        fn coordinates_are_barycentric(x in point_strategy(8, 24)) {
            let mu = local_type_coordinates(&x);
            prop_assert!(mu.iter().all(is_nonnegative));
            prop_assert_eq!(sum(&mu), int(1));
        }

        #[test]
        fn invariant_under_constant_shift(x in point_strategy(6, 24), n in -20i64..20, den in 1i64..30) {
            let shifted = x.alpha().iter().map(|a| a + q(n, den)).collect();
            let y = ApartmentPoint::new(x.context(), shifted).unwrap();
            prop_assert_eq!(local_type(&y), local_type(&x));
        }

        #[test]
        fn barycenter_type_is_uniform(x in point_strategy(7, 24), d in 1u32..7) {
            let face = crate::apartment::face_of(&x);
            let r = face.period() as u32;
            let lt = local_type(&barycenter(&face, d).unwrap());
            prop_assert_eq!(lt.denominator(), r);
            prop_assert_eq!(lt.class().canonical().iter().filter(|&&v| v == 1).count() as u32, r);
            prop_assert_eq!(lt.class().canonical().iter().filter(|&&v| v > 1).count(), 0);
        }

        #[test]
        fn chamber_barycenter_is_balanced(m in 1usize..7) {
            let chamber = ChainFace::standard(&vec![1; m]).unwrap();
            let lt = local_type(&barycenter(&chamber, 1).unwrap());
            prop_assert_eq!(lt.class(), &CyclicClass::new(vec![1; m]).unwrap());
        }
    }
}
