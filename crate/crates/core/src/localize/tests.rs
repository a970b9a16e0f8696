use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::exactpoly::{LaurentFraction, LinFormFraction, Polynomial, VarSpace};
use crate::matroid::RationalMatrix;
use crate::matroid::matroid_of_matrix;

type P = Polynomial<BigInt>;

fn sp(r: usize, n: usize) -> VarSpace {
    VarSpace::new(r, n).unwrap()
}

fn s(e: &[usize]) -> Subset {
    Subset::from_elems(e.iter().copied())
}

/// The permutation sum enumerated literally over all of `S_n`.
fn brute_force(m: &Matroid, b: Subset) -> LinFormFraction<BigInt> {
    let space = sp(m.r(), m.n());
    let mut acc = LinFormFraction::zero(space);
    for perm in (1..=m.n()).permutations(m.n()) {
        if m.lex_first_basis(&perm) != b {
            continue;
        }
        let forms: Vec<(usize, usize)> = perm.windows(2).map(|w| (w[1], w[0])).collect();
        acc = acc.checked_add(&LinFormFraction::new(P::one(space), &forms).unwrap()).unwrap();
    }
    acc.mul_poly(&tangent_prefactor(space, b)).unwrap()
}

fn pp() -> Matroid {
    matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 1, 0, 0], &[0, 0, 1, 1]])).unwrap()
}

fn test_matroids() -> Vec<Matroid> {
    let mut v = Vec::new();
    for n in 2..=5 {
        for r in 1..n {
            v.push(Matroid::uniform(r, n).unwrap());
        }
    }
    v.push(pp());
    // rank 2 on 5: one parallel pair, and a three-point line plus two points
    v.push(Matroid::from_bases(5, 2, Subset::all_of_size(5, 2).into_iter().filter(|&b| b != s(&[1, 2]))).unwrap());
    v.push(
        matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 1, 1, 0, 1], &[0, 1, 2, 1, 1]])).unwrap(),
    );
    v.push(
        matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 0, 1, 0, 2], &[0, 1, 0, 1, 3]])).unwrap(),
    );
    v
}

#[test]
fn documented_examples() {
    let u12 = Matroid::uniform(1, 2).unwrap();
    assert_eq!(orbit_chow_localization(&u12, s(&[1])).unwrap(), P::one(sp(1, 2)));
    let u24 = Matroid::uniform(2, 4).unwrap();
    let q = sp(2, 4);
    let expect = P::t(q, 3) + P::t(q, 4) - P::t(q, 1) - P::t(q, 2);
    assert_eq!(orbit_chow_localization(&u24, s(&[1, 2])).unwrap(), expect);
    assert!(orbit_chow_localization(&pp(), s(&[1, 2])).unwrap().is_zero());
    assert!(matches!(
        orbit_chow_localization(&u24, s(&[1, 2, 3])),
        Err(LocalizeError::InvalidSubset { .. })
    ));
}

#[test]
fn telescoped_examples() {
    let u24 = Matroid::uniform(2, 4).unwrap();
    let q = sp(2, 4);
    let expect = P::t(q, 3) + P::t(q, 4) - P::t(q, 1) - P::t(q, 2);
    assert_eq!(orbit_chow_localization_telescoped(&u24, s(&[1, 2])).unwrap(), expect);
    let u13 = Matroid::uniform(1, 3).unwrap();
    assert_eq!(orbit_chow_localization_telescoped(&u13, s(&[2])).unwrap(), P::one(sp(1, 3)));
    assert_eq!(orbit_chow_localization_telescoped(&Matroid::uniform(1, 2).unwrap(), s(&[1])).unwrap(), P::one(sp(1, 2)));
    assert_eq!(orbit_chow_localization_telescoped(&pp(), s(&[1, 3])), Err(LocalizeError::NotUniform));
}

#[test]
fn memoised_sum_matches_enumeration_for_connected() {
    for m in test_matroids() {
        if m.components().len() != 1 {
            continue;
        }
        for b in Subset::all_of_size(m.n(), m.r()) {
            let got = orbit_chow_localization(&m, b).unwrap();
            let want = brute_force(&m, b).to_poly().unwrap();
            assert_eq!(got, want, "{m:?} at {b}");
        }
    }
}

#[test]
fn disconnected_sum_factors_over_components() {
    // The literal sum over S_n vanishes for a disconnected matroid; the
    // class is the product of the per-component sums.
    let m = pp();
    let b = s(&[1, 3]);
    assert!(brute_force(&m, b).is_zero());
    let q = sp(2, 4);
    // Each parallel pair is uniform(1,2) with sum 1/(t_2 - t_1), and the
    // prefactor is (t2-t1)(t4-t1)(t2-t3)(t4-t3).
    let expect = (P::t(q, 4) - P::t(q, 1)) * (P::t(q, 2) - P::t(q, 3));
    assert_eq!(orbit_chow_localization(&m, b).unwrap(), expect);
    let one = Matroid::uniform(2, 2).unwrap();
    assert_eq!(orbit_chow_localization(&one, s(&[1, 2])).unwrap(), P::one(sp(2, 2)));
}

#[test]
fn telescoped_matches_lemma_up_to_6() {
    for n in 2..=6 {
        for r in 1..n {
            let m = Matroid::uniform(r, n).unwrap();
            for b in m.bases() {
                assert_eq!(
                    orbit_chow_localization(&m, b).unwrap(),
                    orbit_chow_localization_telescoped(&m, b).unwrap(),
                    "({r},{n}) at {b}"
                );
            }
        }
    }
}

#[test]
fn homogeneous_of_codim_degree() {
    for m in test_matroids() {
        let codim = orbit_codim(&m);
        for b in m.bases() {
            let p = orbit_chow_localization(&m, b).unwrap();
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(codim), "{m:?} at {b}");
        }
    }
}

#[test]
fn numeric_matches_exact() {
    let q = |v: i64| BigRational::from_integer(v.into());
    let pt: Vec<BigRational> = [3, -7, 11, 2, 19, -5].iter().map(|&v| q(v)).collect();
    for m in test_matroids() {
        let t = &pt[..m.n()];
        for b in Subset::all_of_size(m.n(), m.r()) {
            let exact = orbit_chow_localization(&m, b).unwrap();
            let u = vec![q(0); m.r()];
            let want: BigRational = exact.eval(&u, t);
            assert_eq!(orbit_chow_localization_at(&m, b, t).unwrap(), want);
        }
    }
    let m = Matroid::uniform(1, 2).unwrap();
    assert!(orbit_chow_localization_at(&m, s(&[1]), &[q(1), q(1)]).is_err());
}

#[test]
fn k_examples() {
    let u12 = Matroid::uniform(1, 2).unwrap();
    let one = LaurentFraction::from_poly(P::one(sp(1, 2)));
    assert!(orbit_k_localization(&u12, s(&[1])).unwrap().equals(&one));
    let u13 = Matroid::uniform(1, 3).unwrap();
    let one3 = LaurentFraction::from_poly(P::one(sp(1, 3)));
    assert!(orbit_k_localization(&u13, s(&[1])).unwrap().equals(&one3));
    assert!(orbit_k_localization(&pp(), s(&[1, 2])).unwrap().is_zero());
}

#[test]
fn kms_examples() {
    let q = sp(1, 2);
    let k = LaurentFraction::from_poly(P::one(q) - P::t(q, 1));
    assert_eq!(kms_chow_from_k(&k, 1).unwrap(), P::t(q, 1));
    let k = LaurentFraction::from_poly(P::one(q));
    assert_eq!(kms_chow_from_k(&k, 0).unwrap(), P::one(q));
    // 1 - t2/t1
    let k = LaurentFraction::new(P::t(q, 1) - P::t(q, 2), P::one(q), vec![-1, 0]).unwrap();
    assert_eq!(kms_chow_from_k(&k, 1).unwrap(), P::t(q, 2) - P::t(q, 1));
    assert!(matches!(kms_chow_from_k(&k, 2), Err(LocalizeError::CodimMismatch { .. })));
}

#[test]
fn kms_commutes_with_localization() {
    for m in test_matroids() {
        let codim = orbit_codim(&m);
        for b in m.bases() {
            let k = orbit_k_localization(&m, b).unwrap();
            let c = kms_chow_from_k(&k, codim).unwrap();
            assert_eq!(c, orbit_chow_localization(&m, b).unwrap(), "{m:?} at {b}");
        }
    }
}

#[test]
fn full_tuples_and_gkm() {
    let t = full_orbit_tuple(&Matroid::uniform(1, 2).unwrap()).unwrap();
    assert!(t.iter().all(|(_, p)| p.as_constant() == Some(BigInt::from(1))));
    let t = full_orbit_tuple(&Matroid::uniform(2, 2).unwrap()).unwrap();
    assert_eq!(t.iter().count(), 1);
    assert_eq!(t.get(s(&[1, 2])), &P::one(sp(2, 2)));

    let q = sp(2, 4);
    let u24 = full_orbit_tuple(&Matroid::uniform(2, 4).unwrap()).unwrap();
    for (b, p) in u24.iter() {
        let mut expect = P::zero(q);
        for j in 1..=4 {
            expect = if b.contains(j) { &expect - &P::t(q, j) } else { &expect + &P::t(q, j) };
        }
        assert_eq!(p, &expect);
    }
    assert!(gkm_check(&u24).is_empty());
    assert!(gkm_check(&GkmTuple::constant(q, P::constant(q, BigInt::from(7)))).is_empty());
    let mut bad = u24.clone();
    bad.set(s(&[1, 2]), P::t(q, 1));
    assert!(!gkm_check(&bad).is_empty());
}

#[test]
fn gkm_holds_and_detects_corruption_exhaustively() {
    let mut ms = test_matroids();
    ms.push(Matroid::uniform(2, 6).unwrap());
    ms.push(Matroid::uniform(3, 6).unwrap());
    for m in ms {
        let f = full_orbit_tuple(&m).unwrap();
        assert!(gkm_check(&f).is_empty(), "{m:?}");
        let space = f.space();
        for (b, p) in f.iter() {
            let mut bad = f.clone();
            bad.set(b, p + &P::t(space, 1));
            assert!(!gkm_check(&bad).is_empty(), "corruption at {b} undetected");
        }
    }
}

#[test]
fn tuple_json_round_trip() {
    let f = full_orbit_tuple(&Matroid::uniform(1, 2).unwrap()).unwrap();
    let text = serde_json::to_string(&f.to_json()).unwrap();
    assert_eq!(
        text,
        r#"[{"basis":[1],"value":[{"c":"1","u":[0],"t":[0,0]}]},{"basis":[2],"value":[{"c":"1","u":[0],"t":[0,0]}]}]"#
    );
    let back: GkmTupleJson = serde_json::from_str(&text).unwrap();
    assert_eq!(GkmTuple::from_json(&back, f.space()).unwrap(), f);
}
