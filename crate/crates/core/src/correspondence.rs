//! The map `j_E` on the standard apartment for `E = L_f` embedded
//! diagonally, and the correspondence between embedding types and local
//! types of barycenters.
//!
//! Two independent routes compute the local type of `j_E(M_𝔞)` for the pearl
//! embedding of a datum `λ`:
//!
//! * [`local_type_direct`] evaluates the closed formula on the rank-reduced
//!   datum `ᵗrow(λ)`, working in the ambient index `d = f·r`;
//! * [`local_type_geometric`] builds the barycenter of the standard order,
//!   conjugates it into the diagonal frame, applies [`j_forward`] and reads
//!   off barycentric coordinates.
//!
//! [`verify_theorem`] checks both against the complement identity
//! `<row(λ)> = <f·r·μ>^c`.

use serde::{Serialize, Serializer};

use crate::apartment::{
    barycenter, local_type, square_lattice_exponents, ApartmentPoint, ChainFace, LocalType,
};
use crate::cyclic::CyclicClass;
use crate::embedding::EmbeddingDatum;
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational, Q};

/// `j_E` for `E = L_f` diagonal: `[Λ] ↦ [Λ ∩ W]`, i.e. the same `α` read over
/// `Δ = C_D(L_f)`, of index `d/f`.
pub fn j_forward(x: &ApartmentPoint, f: u32) -> Result<ApartmentPoint> {
    let d = x.d();
    if f == 0 || d % f != 0 {
        return Err(Error::NotApplicable { f, d });
    }
    x.with_d(d / f)
}

/// `j_E^{-1}`: `Λ(s) = ⊕_k Θ(s − k/d) π_D^k`, which on the apartment keeps
/// `α` and multiplies the index by `f`.
pub fn j_inverse(y: &ApartmentPoint, f: u32) -> Result<ApartmentPoint> {
    if f == 0 {
        return Err(Error::NotApplicable { f, d: y.d() });
    }
    y.with_d(y.d() * f)
}

/// Checks `j_E(𝔞_x(t)) = B ∩ 𝔞_x(t)` at exponent level over one period of
/// the target square lattice function: `⌈e_ij / f⌉` of the source exponents
/// against the exponents of `j_forward(x, f)`.
pub fn intersection_property(x: &ApartmentPoint, f: u32) -> Result<bool> {
    let y = j_forward(x, f)?;
    let d = x.d() as i64;
    let fi = f as i64;
    let alpha = x.alpha();
    // t ↦ ⌈d(t + α_i − α_j)⌉ jumps on k/d − (α_i − α_j); one target period is f/d
    let mut breaks: Vec<Q> = Vec::new();
    for ai in alpha {
        for aj in alpha {
            let base = frac(int(d) * (aj - ai)) / int(d);
            breaks.extend((0..fi).map(|k| base + Q::new(k, d)));
        }
    }
    breaks.sort();
    breaks.dedup();
    let period = Q::new(fi, d);
    let mut samples = breaks.clone();
    for (k, b) in breaks.iter().enumerate() {
        let next = breaks.get(k + 1).copied().unwrap_or(breaks[0] + period);
        samples.push((b + next) / int(2));
    }
    for t in samples {
        let source = square_lattice_exponents(x, t)
            .map(|e| e.div_euclid(fi) + (e.rem_euclid(fi) != 0) as i64);
        if source != square_lattice_exponents(&y, t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordered barycentric coordinates `μ` of `j_E(M_𝔞)`, from the closed
/// formula on `λ̃ = ᵗrow(λ)` with `f̃ = f·r`:
/// `a_j = k − 1` where `S_{k−1} < j ≤ S_k` for the partial sums `S` of `λ̃`,
/// `μ_1 = (f̃ − a_m + a_1)/f̃` and `μ_j = (a_j − a_{j−1})/f̃`.
pub fn local_type_direct(datum: &EmbeddingDatum) -> Vec<Q> {
    let column = datum.rank_reduce().matrix().flatten();
    let big_f = column.len() as i64;
    let mut a = Vec::with_capacity(datum.m() as usize);
    for (k, &count) in column.iter().enumerate() {
        a.extend(std::iter::repeat(k as i64).take(count as usize));
    }
    let m = a.len();
    let mut mu = Vec::with_capacity(m);
    mu.push(Q::new(big_f - a[m - 1] + a[0], big_f));
    mu.extend(a.windows(2).map(|w| Q::new(w[1] - w[0], big_f)));
    mu
}

/// The barycenter of the standard order of `λ`'s partition, moved into the
/// frame where `E` is diagonal, pushed through `j_E`, and read as a local
/// type.
pub fn local_type_geometric(datum: &EmbeddingDatum) -> LocalType {
    local_type(&geometric_image(datum))
}

/// `j_E(M_𝔞)` for the pearl embedding of `datum`, in ambient index `f·r`.
pub fn geometric_image(datum: &EmbeddingDatum) -> ApartmentPoint {
    let skeleton = datum.skeleton();
    let f = datum.f() as u32;
    let d = f * datum.r() as u32;
    let chain = ChainFace::standard(&skeleton.partition).expect("columns are positive");
    let x = barycenter(&chain, d).expect("positive context");
    let h: Vec<i64> = skeleton.levels.iter().map(|&l| -(l as i64)).collect();
    let diagonal = x.translate(&h).expect("levels have length m");
    j_forward(&diagonal, f).expect("f divides f·r")
}

/// The embedding type determined by a local type: `reshape(<f·r·μ>^c, f, r)`.
pub fn embedding_type_from_local(mu: &LocalType, f: usize, r: usize) -> Result<EmbeddingDatum> {
    let n = (f * r) as u32;
    let scaled = mu.scaled(n).ok_or(Error::NotLocalType { f, r })?;
    scaled.complement()?.reshape(f, r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mismatch {
    /// `f·r·μ` is not integral.
    Integrality,
    /// `<row(λ)> ≠ <f·r·μ>^c`.
    Complement,
    /// The closed formula and the geometric pipeline disagree.
    Pipelines,
}

impl Mismatch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mismatch::Integrality => "integrality",
            Mismatch::Complement => "complement",
            Mismatch::Pipelines => "pipelines",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub datum: EmbeddingDatum,
    #[serde(rename = "mu", serialize_with = "ser_mu")]
    pub mu_direct: Vec<Q>,
    #[serde(skip)]
    pub mu_geometric: LocalType,
    #[serde(rename = "complement", serialize_with = "ser_class")]
    pub complement_class: Option<CyclicClass>,
    pub verdict: Verdict,
    #[serde(serialize_with = "ser_mismatch")]
    pub mismatch: Option<Mismatch>,
}

fn ser_mu<S: Serializer>(mu: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    mu.iter()
        .map(|x| Rational(*x))
        .collect::<Vec<_>>()
        .serialize(s)
}

fn ser_class<S: Serializer>(c: &Option<CyclicClass>, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.as_ref().map(|c| c.canonical().to_vec()).serialize(s)
}

fn ser_mismatch<S: Serializer>(m: &Option<Mismatch>, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.map(|m| m.as_str()).serialize(s)
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks, for the pearl embedding of `datum`:
/// (a) `f·r·μ` is integral, (b) `<row(λ)> = <f·r·μ>^c`, and (c) both
/// pipelines give the same local type.
pub fn verify_theorem(datum: &EmbeddingDatum) -> TheoremReport {
    let n = (datum.f() * datum.r()) as i64;
    let mu_direct = local_type_direct(datum);
    let mu_geometric = local_type_geometric(datum);

    let scaled: Option<Vec<u32>> = mu_direct
        .iter()
        .map(|x| {
            let y = x * int(n);
            y.is_integer().then(|| y.to_integer() as u32)
        })
        .collect();
    let complement_class = scaled
        .as_ref()
        .and_then(|v| CyclicClass::new(v.clone()).ok())
        .and_then(|c| c.complement().ok());

    let mismatch = if scaled.is_none() {
        Some(Mismatch::Integrality)
    } else if complement_class.as_ref() != Some(&datum.class()) {
        Some(Mismatch::Complement)
    } else if LocalType::from_coordinates(&mu_direct).ok().as_ref() != Some(&mu_geometric) {
        Some(Mismatch::Pipelines)
    } else {
        None
    };
    TheoremReport {
        datum: datum.clone(),
        mu_direct,
        mu_geometric,
        complement_class,
        verdict: if mismatch.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::{local_type_coordinates, ApartmentContext};
    use crate::rational::q;
    use proptest::prelude::*;

    fn worked_datum() -> EmbeddingDatum {
        EmbeddingDatum::from_rows(
            &[
                vec![1, 0],
                vec![1, 3],
                vec![0, 0],
                vec![0, 1],
                vec![0, 1],
                vec![0, 0],
            ],
            7,
        )
        .unwrap()
    }

    fn twelfths(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n, 12)).collect()
    }

    fn point(m: usize, d: u32, alpha: Vec<Q>) -> ApartmentPoint {
        ApartmentPoint::new(ApartmentContext::new(m, d).unwrap(), alpha).unwrap()
    }

    #[test]
    fn j_forward_examples() {
        let x = point(3, 12, vec![q(1, 5), q(-7, 3), int(0)]);
        assert_eq!(j_forward(&x, 1).unwrap(), x);
        let y = j_forward(&x, 6).unwrap();
        assert_eq!(y.d(), 2);
        assert_eq!(y.alpha(), x.alpha());
        let chart: Vec<Q> = x.affine_coordinates().iter().map(|c| c / int(6)).collect();
        assert_eq!(y.affine_coordinates(), chart);
        assert_eq!(j_forward(&x, 5), Err(Error::NotApplicable { f: 5, d: 12 }));
    }

    #[test]
    fn j_inverse_examples() {
        let y = point(2, 2, vec![q(1, 2), int(0)]);
        let x = j_inverse(&y, 2).unwrap();
        assert_eq!(x.d(), 4);
        assert_eq!(x.alpha(), &[q(1, 2), int(0)]);
        assert_eq!(j_inverse(&y, 1).unwrap(), y);
        assert_eq!(j_forward(&x, 2).unwrap(), y);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            intersection_property(&point(2, 2, vec![int(0); 2]), 2),
            Ok(true)
        );
        assert_eq!(
            intersection_property(&point(2, 2, vec![q(1, 2), int(0)]), 2),
            Ok(true)
        );
        assert!(intersection_property(&point(2, 3, vec![int(0); 2]), 2).is_err());
    }

    #[test]
    fn direct_examples() {
        assert_eq!(
            local_type_direct(&worked_datum()),
            twelfths(&[3, 2, 1, 0, 0, 4, 2])
        );
        let single = EmbeddingDatum::from_rows(&[vec![4]], 4).unwrap();
        assert_eq!(
            local_type_direct(&single),
            vec![int(1), int(0), int(0), int(0)]
        );
        let col = EmbeddingDatum::from_rows(&[vec![1], vec![1]], 2).unwrap();
        assert_eq!(local_type_direct(&col), vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn geometric_pipeline_intermediates() {
        let datum = worked_datum();
        let chain = ChainFace::standard(&datum.skeleton().partition).unwrap();
        let x = barycenter(&chain, 12).unwrap();
        let expect_x: Vec<Q> = [1, 1, 0, 0, 0, 0, 0].iter().map(|&n| q(n, 24)).collect();
        assert_eq!(x.alpha(), expect_x.as_slice());

        let y = geometric_image(&datum);
        assert_eq!(y.d(), 2);
        let raw: Vec<Q> = [1, -1, -2, -2, -2, -6, -8]
            .iter()
            .map(|&n| q(n, 24))
            .collect();
        assert_eq!(y, point(7, 2, raw));
        assert_eq!(local_type_coordinates(&y), twelfths(&[3, 2, 1, 0, 0, 4, 2]));

        let lt = local_type_geometric(&datum);
        assert_eq!(
            lt,
            LocalType::from_coordinates(&twelfths(&[3, 2, 1, 0, 0, 4, 2])).unwrap()
        );

        let single = EmbeddingDatum::from_rows(&[vec![3]], 3).unwrap();
        assert_eq!(
            local_type_geometric(&single).class(),
            &CyclicClass::new(vec![1, 0, 0]).unwrap()
        );
        let col = EmbeddingDatum::from_rows(&[vec![1], vec![1]], 2).unwrap();
        assert_eq!(
            local_type_geometric(&col),
            LocalType::from_coordinates(&[q(1, 2), q(1, 2)]).unwrap()
        );
    }

    #[test]
    fn embedding_type_examples() {
        let mu = LocalType::from_coordinates(&twelfths(&[3, 2, 1, 0, 0, 4, 2])).unwrap();
        let datum = embedding_type_from_local(&mu, 6, 2).unwrap();
        assert!(datum.is_equivalent(&worked_datum()));

        let unit = LocalType::from_coordinates(&[int(1), int(0), int(0)]).unwrap();
        let datum = embedding_type_from_local(&unit, 1, 1).unwrap();
        assert_eq!(datum.matrix().to_rows(), vec![vec![3]]);

        let half = LocalType::from_coordinates(&[q(1, 2), q(1, 2)]).unwrap();
        let datum = embedding_type_from_local(&half, 2, 1).unwrap();
        assert_eq!(datum.matrix().to_rows(), vec![vec![1], vec![1]]);

        assert_eq!(
            embedding_type_from_local(&half, 1, 1),
            Err(Error::NotLocalType { f: 1, r: 1 })
        );
    }

    #[test]
    fn verify_examples() {
        let report = verify_theorem(&worked_datum());
        assert!(report.passed(), "{report:?}");
        assert_eq!(
            report.complement_class,
            Some(CyclicClass::new(vec![1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0]).unwrap())
        );

        let single = EmbeddingDatum::from_rows(&[vec![5]], 5).unwrap();
        let report = verify_theorem(&single);
        assert!(report.passed());
        assert_eq!(report.mu_direct[0], int(1));

        for rows in [
            vec![vec![2], vec![0]],
            vec![vec![1], vec![1]],
            vec![vec![0], vec![2]],
        ] {
            let d = EmbeddingDatum::from_rows(&rows, 2).unwrap();
            assert!(verify_theorem(&d).passed());
        }
    }

    #[test]
    fn report_json_shape() {
        let col = EmbeddingDatum::from_rows(&[vec![1], vec![1]], 2).unwrap();
        let json = serde_json::to_value(verify_theorem(&col)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "datum": {"f": 2, "r": 1, "m": 2, "rows": [[1], [1]]},
                "mu": [[1, 2], [1, 2]],
                "complement": [1, 1],
                "verdict": "pass",
                "mismatch": null
            })
        );
    }

    fn point_with_f() -> impl Strategy<Value = (ApartmentPoint, u32)> {
        (
            1usize..6,
            prop::sample::select(vec![2u32, 3, 4, 6]),
            1u32..4,
        )
            .prop_flat_map(|(m, f, k)| {
                prop::collection::vec((-24i64..24, 1i64..=24), m).prop_map(move |raw| {
                    let alpha = raw.into_iter().map(|(n, d)| q(n, d)).collect();
                    (point(m, f * k, alpha), f)
                })
            })
    }

    proptest! {
        #[test]
        fn j_round_trips((x, f) in point_with_f()) {
            let y = j_forward(&x, f).unwrap();
            prop_assert_eq!(&j_inverse(&y, f).unwrap(), &x);
            prop_assert_eq!(j_forward(&j_inverse(&y, f).unwrap(), f).unwrap(), y);
        }

        #[test]
        fn intersection_holds((x, f) in point_with_f()) {
            prop_assert_eq!(intersection_property(&x, f), Ok(true));
        }
    }
}
