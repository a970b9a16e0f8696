//! Randomised identity testing at seeded integer points.
//!
//! Each identity is evaluated at `trials` points with coordinates drawn
//! uniformly from `[-10^6, 10^6]` (`t` coordinates pairwise distinct). A
//! nonzero difference of degree `d` survives all trials with probability at
//! most `(d / (|S| - n))^trials` by Schwartz–Zippel, `|S| = 2*10^6 + 1`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classes::{uniform_orbit_localized_at, ClassError, LocalizedForm};
use crate::exactpoly::VarSpace;
use crate::localize::{orbit_chow_localization_at, orbit_codim, GkmTuple, LocalizeError};
use crate::matroid::{Matroid, Subset};
use crate::Poly;

pub const COORD_BOUND: i64 = 1_000_000;
pub const DEFAULT_TRIALS: usize = 20;

/// Seeded source of evaluation points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coord(&mut self) -> BigInt {
        BigInt::from(self.rng.gen_range(-COORD_BOUND..=COORD_BOUND))
    }

    /// `k` pairwise distinct coordinates.
    pub fn distinct(&mut self, k: usize) -> Vec<BigInt> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(k);
        while out.len() < k {
            let v = self.rng.gen_range(-COORD_BOUND..=COORD_BOUND);
            if seen.insert(v) {
                out.push(BigInt::from(v));
            }
        }
        out
    }

    /// `(u, t)` for `space`, with distinct `t`.
    pub fn point(&mut self, space: VarSpace) -> (Vec<BigInt>, Vec<BigInt>) {
        let u = (0..space.r).map(|_| self.coord()).collect();
        (u, self.distinct(space.n))
    }
}

/// Schwartz–Zippel bound on the chance that a false identity of the given
/// degree passes every trial.
pub fn failure_bound(degree: u32, trials: usize, n: usize) -> f64 {
    let s = (2 * COORD_BOUND + 1) as f64 - n as f64;
    (degree.max(1) as f64 / s).powi(trials as i32)
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub identity: String,
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    /// Number of scalar comparisons made across all trials and cases.
    pub evaluations: usize,
    pub degree: u32,
    pub failure_bound: f64,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CertifyReport {
    fn new(identity: &str, space: VarSpace, seed: u64, trials: usize, degree: u32) -> Self {
        CertifyReport {
            identity: identity.to_string(),
            r: space.r,
            n: space.n,
            seed,
            trials,
            evaluations: 0,
            degree,
            failure_bound: failure_bound(degree, trials, space.n),
            failures: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.evaluations += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }
}

fn fmt_point(t: &[BigInt]) -> String {
    let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    format!("t=({})", parts.join(","))
}

/// Closed-form localization against the numeric permutation sum, every
/// basis of `uniform(r, n)`, fresh point per trial.
pub fn certify_localized(r: usize, n: usize, trials: usize, seed: u64) -> Result<CertifyReport, CertifyError> {
    let m = Matroid::uniform(r, n).map_err(|e| CertifyError::Input(e.to_string()))?;
    let space = VarSpace::new(r, n).map_err(|e| CertifyError::Input(e.to_string()))?;
    let mut rep = CertifyReport::new("localized closed form = orbit localization", space, seed, trials, orbit_codim(&m));
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let t = sampler.distinct(n);
        let tq: Vec<BigRational> = t.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        for b in m.bases() {
            let lhs = uniform_orbit_localized_at(r, n, b, LocalizedForm::Transposed, &t)?;
            let rhs = orbit_chow_localization_at(&m, b, &tq)?;
            rep.record(BigRational::from_integer(lhs) == rhs, || format!("B={b} at {}", fmt_point(&t)));
        }
    }
    Ok(rep)
}

/// `lhs = rhs` as polynomials, by evaluation.
pub fn certify_poly_eq(identity: &str, lhs: &Poly, rhs: &Poly, trials: usize, seed: u64) -> CertifyReport {
    let space = lhs.space();
    assert_eq!(space, rhs.space(), "identity sides live in different spaces");
    let degree = lhs.total_degree().into_iter().chain(rhs.total_degree()).max().unwrap_or(0);
    let mut rep = CertifyReport::new(identity, space, seed, trials, degree);
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let (u, t) = sampler.point(space);
        rep.record(lhs.eval(&u, &t) == rhs.eval(&u, &t), || fmt_point(&t));
    }
    rep
}

/// Entrywise equality of two tuples, by evaluation.
pub fn certify_tuple_eq(identity: &str, f: &GkmTuple, g: &GkmTuple, trials: usize, seed: u64) -> CertifyReport {
    let space = f.space();
    let degree = f
        .iter()
        .chain(g.iter())
        .filter_map(|(_, p)| p.total_degree())
        .max()
        .unwrap_or(0);
    let mut rep = CertifyReport::new(identity, space, seed, trials, degree);
    let mut sampler = Sampler::new(seed);
    let u = vec![BigInt::from(0); space.r];
    for _ in 0..trials {
        let t = sampler.distinct(space.n);
        for (b, p) in f.iter() {
            rep.record(p.eval(&u, &t) == g.get(b).eval(&u, &t), || format!("B={b} at {}", fmt_point(&t)));
        }
    }
    rep
}

/// The GKM edge conditions at random points on each hyperplane `t_i = t_j`.
pub fn certify_gkm(f: &GkmTuple, trials: usize, seed: u64) -> CertifyReport {
    let space = f.space();
    let degree = f.iter().filter_map(|(_, p)| p.total_degree()).max().unwrap_or(0);
    let mut rep = CertifyReport::new("GKM edge conditions", space, seed, trials, degree);
    let mut sampler = Sampler::new(seed);
    let u = vec![BigInt::from(0); space.r];
    for _ in 0..trials {
        let base = sampler.distinct(space.n);
        for (b, fb) in f.iter() {
            for i in b.elems() {
                for j in Subset::full(space.n).difference(b).elems() {
                    let other = b.without(i).with(j);
                    if other < b {
                        continue;
                    }
                    let mut t = base.clone();
                    t[j - 1] = t[i - 1].clone();
                    let ok = fb.eval(&u, &t) == f.get(other).eval(&u, &t);
                    rep.record(ok, || format!("edge {b}-{other} at {}", fmt_point(&t)));
                }
            }
        }
    }
    rep
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Localize(#[from] LocalizeError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localize::full_orbit_tuple;
    use crate::matroid::catalog::two_parallel_pairs;

    #[test]
    fn sampler_is_seeded_and_distinct() {
        let a = Sampler::new(7).distinct(50);
        let b = Sampler::new(7).distinct(50);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(8).distinct(50));
        let set: HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), 50);
        let bound = BigInt::from(COORD_BOUND);
        assert!(a.iter().all(|v| v.magnitude() <= bound.magnitude()));
    }

    #[test]
    fn localized_certifies_small_sizes() {
        for (r, n) in [(1, 2), (2, 4), (2, 5), (3, 5)] {
            let rep = certify_localized(r, n, 5, 1).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.evaluations, 5 * num_integer::binomial(n, r));
        }
    }

    #[test]
    fn false_identity_is_caught() {
        let s = VarSpace::new(2, 4).unwrap();
        let rep = certify_poly_eq("t1 = t2", &Poly::t(s, 1), &Poly::t(s, 2), 20, 3);
        assert_eq!(rep.failures, 20);
        assert!(rep.first_failure.is_some());
        let rep = certify_poly_eq("t1 = t1", &Poly::t(s, 1), &Poly::t(s, 1), 20, 3);
        assert!(rep.passed());
        assert!(rep.failure_bound < 1e-100);
    }

    #[test]
    fn gkm_certify_detects_corruption() {
        let mut f = full_orbit_tuple(&two_parallel_pairs()).unwrap();
        assert!(certify_gkm(&f, 5, 9).passed());
        let b = Subset::from_elems([1, 3]);
        let bumped = f.get(b) + &Poly::t(f.space(), 2);
        f.set(b, bumped);
        assert!(!certify_gkm(&f, 5, 9).passed());
    }

    #[test]
    fn bound_shrinks_with_trials() {
        assert!(failure_bound(10, 20, 7) < failure_bound(10, 1, 7));
        assert!(failure_bound(10, 1, 7) < 1e-5);
    }
}
