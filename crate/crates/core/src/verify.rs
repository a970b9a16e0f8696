//! Verification suites: each runs one family of identities over a range of
//! sizes and reports a pass/fail line per case.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certify::{certify_gkm, certify_localized, certify_poly_eq, certify_tuple_eq, CertifyReport};
use crate::classes::{
    cauchy_sides, klyachko_coefficient, u_ones_t_zero, uniform_degree, uniform_matrix_class_lr,
    uniform_matrix_class_omega, uniform_orbit_localized, LocalizedForm,
};
use crate::exactpoly::Polynomial;
use crate::localize::{
    full_orbit_tuple, gkm_check, kms_chow_from_k, orbit_chow_localization, orbit_chow_localization_telescoped,
    orbit_codim, orbit_k_localization, GkmTuple,
};
use crate::matroid::catalog::{rank2_nonuniform, two_parallel_pairs};
use crate::matroid::{matroid_of_matrix, Matroid, RationalMatrix, Subset};
use crate::split::{
    factorial_expand, lift, resolve_convention, schubert_expand_tuple, tuple_of_ambient, RestrictionConvention,
};
use crate::symfunc::{rect_complement, Partition};
use crate::Poly;

/// Largest `n` handled in exact mode by default.
pub const EXACT_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Certify,
}

impl Mode {
    /// Exact up to [`EXACT_MAX_N`], certify above.
    pub fn default_for(n: usize) -> Mode {
        if n <= EXACT_MAX_N {
            Mode::Exact
        } else {
            Mode::Certify
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: Mode::Exact,
            trials: crate::certify::DEFAULT_TRIALS,
            seed: 0,
            max_n: EXACT_MAX_N,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    LemmaVsClosed,
    LrVsOmega,
    Gkm,
    Kms,
    Cauchy,
    Roundtrip,
    Klyachko,
    Degree,
    Widthbound,
    MatroidInvariance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::LemmaVsClosed,
        Suite::LrVsOmega,
        Suite::Gkm,
        Suite::Kms,
        Suite::Cauchy,
        Suite::Roundtrip,
        Suite::Klyachko,
        Suite::Degree,
        Suite::Widthbound,
        Suite::MatroidInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaVsClosed => "lemma-vs-closed",
            Suite::LrVsOmega => "lr-vs-omega",
            Suite::Gkm => "gkm",
            Suite::Kms => "kms",
            Suite::Cauchy => "cauchy",
            Suite::Roundtrip => "roundtrip",
            Suite::Klyachko => "klyachko",
            Suite::Degree => "degree",
            Suite::Widthbound => "widthbound",
            Suite::MatroidInvariance => "matroid-invariance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub case: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certify: Option<CertifyReport>,
    pub detail: Value,
}

impl Case {
    fn exact(case: String, passed: bool, detail: Value) -> Case {
        Case {
            case,
            passed,
            certify: None,
            detail,
        }
    }

    fn certified(case: String, rep: CertifyReport, detail: Value) -> Case {
        Case {
            case,
            passed: rep.passed(),
            certify: Some(rep),
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub mode: Mode,
    pub passed: bool,
    pub cases: Vec<Case>,
    /// Discrepancies that are reported but do not fail the suite.
    pub flags: Vec<String>,
}

impl SuiteReport {
    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct VerifyError(pub String);

fn err<E: fmt::Display>(e: E) -> VerifyError {
    VerifyError(e.to_string())
}

struct Builder {
    opts: VerifyOptions,
    cases: Vec<Case>,
    flags: Vec<String>,
}

impl Builder {
    fn seed(&self, salt: u64) -> u64 {
        self.opts.seed.wrapping_add(salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    fn certify(&self) -> bool {
        self.opts.mode == Mode::Certify
    }

    fn poly_case(&mut self, case: String, lhs: &Poly, rhs: &Poly, salt: u64, detail: Value) {
        let c = if self.certify() {
            Case::certified(case.clone(), certify_poly_eq(&case, lhs, rhs, self.opts.trials, self.seed(salt)), detail)
        } else {
            Case::exact(case, lhs == rhs, detail)
        };
        self.cases.push(c);
    }

    fn tuple_case(&mut self, case: String, f: &GkmTuple, g: &GkmTuple, salt: u64, detail: Value) {
        let c = if self.certify() {
            Case::certified(case.clone(), certify_tuple_eq(&case, f, g, self.opts.trials, self.seed(salt)), detail)
        } else {
            let bad: Vec<String> = f.iter().filter(|(b, p)| *p != g.get(*b)).map(|(b, _)| b.to_string()).collect();
            let mut detail = detail;
            if !bad.is_empty() {
                detail["mismatched_bases"] = json!(bad);
            }
            Case::exact(case, bad.is_empty(), detail)
        };
        self.cases.push(c);
    }
}

fn uniform_sizes(min_n: usize, max_n: usize) -> Vec<(usize, usize)> {
    (min_n..=max_n).flat_map(|n| (1..n).map(move |r| (r, n))).collect()
}


fn lifted_class(f: &GkmTuple, conv: RestrictionConvention) -> Result<Poly, VerifyError> {
    lift(&schubert_expand_tuple(f, conv).map_err(err)?).map_err(err)
}

fn chow_tuple(m: &Matroid) -> Result<GkmTuple, VerifyError> {
    full_orbit_tuple(m).map_err(err)
}

fn partitions_json<'a>(it: impl Iterator<Item = &'a Partition>) -> Value {
    json!(it.map(|p| p.parts().to_vec()).collect::<Vec<_>>())
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let mut b = Builder {
        opts,
        cases: Vec::new(),
        flags: Vec::new(),
    };
    match suite {
        Suite::LemmaVsClosed => lemma_vs_closed(&mut b)?,
        Suite::LrVsOmega => lr_vs_omega(&mut b)?,
        Suite::Gkm => gkm(&mut b)?,
        Suite::Kms => kms(&mut b)?,
        Suite::Cauchy => cauchy(&mut b),
        Suite::Roundtrip => roundtrip(&mut b)?,
        Suite::Klyachko => klyachko(&mut b)?,
        Suite::Degree => degree(&mut b)?,
        Suite::Widthbound => widthbound(&mut b)?,
        Suite::MatroidInvariance => matroid_invariance(&mut b)?,
    }
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        mode: opts.mode,
        passed: b.cases.iter().all(|c| c.passed),
        cases: b.cases,
        flags: b.flags,
    })
}

fn lemma_vs_closed(b: &mut Builder) -> Result<(), VerifyError> {
    for (salt, (r, n)) in uniform_sizes(2, b.opts.max_n).into_iter().enumerate() {
        if b.certify() {
            let rep = certify_localized(r, n, b.opts.trials, b.seed(salt as u64)).map_err(err)?;
            b.cases
                .push(Case::certified(format!("closed form ({r},{n})"), rep, json!({"r": r, "n": n})));
            continue;
        }
        let m = Matroid::uniform(r, n).map_err(err)?;
        let (mut closed_ok, mut tele_ok, mut literal_bad) = (true, true, Vec::new());
        for basis in m.bases() {
            let lemma = orbit_chow_localization(&m, basis).map_err(err)?;
            closed_ok &= uniform_orbit_localized(r, n, basis, LocalizedForm::Transposed).map_err(err)? == lemma;
            tele_ok &= orbit_chow_localization_telescoped(&m, basis).map_err(err)? == lemma;
            if uniform_orbit_localized(r, n, basis, LocalizedForm::Literal).map_err(err)? != lemma {
                literal_bad.push(basis.to_string());
            }
        }
        let detail = json!({"r": r, "n": n, "bases": m.num_bases()});
        b.cases.push(Case::exact(format!("closed form ({r},{n})"), closed_ok, detail.clone()));
        b.cases.push(Case::exact(format!("telescoped ({r},{n})"), tele_ok, detail));
        if !literal_bad.is_empty() {
            b.flags.push(format!(
                "untransposed closed form differs from the permutation sum at ({r},{n}) on {} of {} bases, e.g. {}",
                literal_bad.len(),
                m.num_bases(),
                literal_bad[0]
            ));
        }
    }
    Ok(())
}

fn lr_vs_omega(b: &mut Builder) -> Result<(), VerifyError> {
    for (salt, (r, n)) in uniform_sizes(2, b.opts.max_n).into_iter().enumerate() {
        let lr = uniform_matrix_class_lr(r, n).map_err(err)?;
        let om = uniform_matrix_class_omega(r, n).map_err(err)?;
        b.poly_case(format!("lr = omega ({r},{n})"), &lr, &om, salt as u64, json!({"r": r, "n": n}));
    }
    Ok(())
}

fn gkm_matroids(max_n: usize) -> Vec<(String, Matroid)> {
    let mut v: Vec<(String, Matroid)> = uniform_sizes(2, max_n)
        .into_iter()
        .map(|(r, n)| (format!("uniform({r},{n})"), Matroid::uniform(r, n).expect("valid")))
        .collect();
    if max_n >= 4 {
        v.push(("two parallel pairs".into(), two_parallel_pairs()));
    }
    if max_n >= 5 {
        v.extend(rank2_nonuniform().into_iter().map(|(s, m)| (s.to_string(), m)));
    }
    v
}

fn gkm(b: &mut Builder) -> Result<(), VerifyError> {
    for (salt, (name, m)) in gkm_matroids(b.opts.max_n).into_iter().enumerate() {
        let f = chow_tuple(&m)?;
        if b.certify() {
            let rep = certify_gkm(&f, b.opts.trials, b.seed(salt as u64));
            b.cases.push(Case::certified(format!("gkm {name}"), rep, json!({})));
            continue;
        }
        let violations = gkm_check(&f);
        // Every single-entry corruption must be caught.
        let mut missed = Vec::new();
        let bump = Polynomial::one(f.space());
        for (basis, p) in f.iter() {
            let mut g = f.clone();
            g.set(basis, p + &bump);
            if gkm_check(&g).is_empty() {
                missed.push(basis.to_string());
            }
        }
        let detail = json!({"violations": violations.len(), "corruptions_tested": f.iter().count(), "missed": missed});
        b.cases
            .push(Case::exact(format!("gkm {name}"), violations.is_empty() && missed.is_empty(), detail));
    }
    Ok(())
}

fn kms(b: &mut Builder) -> Result<(), VerifyError> {
    let mut ms: Vec<(String, Matroid)> = uniform_sizes(2, b.opts.max_n.min(5))
        .into_iter()
        .map(|(r, n)| (format!("uniform({r},{n})"), Matroid::uniform(r, n).expect("valid")))
        .collect();
    if b.opts.max_n >= 5 {
        ms.extend(rank2_nonuniform().into_iter().map(|(s, m)| (s.to_string(), m)));
    }
    for (salt, (name, m)) in ms.into_iter().enumerate() {
        let f = chow_tuple(&m)?;
        let codim = orbit_codim(&m);
        let mut vals = BTreeMap::new();
        for basis in Subset::all_of_size(m.n(), m.r()) {
            let v = if m.is_basis(basis) {
                kms_chow_from_k(&orbit_k_localization(&m, basis).map_err(err)?, codim).map_err(err)?
            } else {
                Polynomial::zero(f.space())
            };
            vals.insert(basis, v);
        }
        let g = GkmTuple::new(f.space(), vals).map_err(err)?;
        b.tuple_case(format!("kms {name}"), &g, &f, salt as u64, json!({"codim": codim}));
    }
    Ok(())
}

fn cauchy(b: &mut Builder) {
    let mut salt = 0;
    for p in 0..=3 {
        for q in 0..=3 {
            let rep = cauchy_sides(p, q);
            b.poly_case(format!("cauchy |T|={p} |V|={q}"), &rep.lhs, &rep.rhs, salt, json!({}));
            salt += 1;
        }
    }
}

const SPLIT_SIZES: [(usize, usize); 4] = [(2, 4), (2, 5), (3, 5), (3, 6)];

fn roundtrip(b: &mut Builder) -> Result<(), VerifyError> {
    let mut salt = 0;
    for (r, n) in uniform_sizes(2, b.opts.max_n.min(EXACT_MAX_N)) {
        let conv = resolve_convention(r, n).map_err(err)?;
        let lr = uniform_matrix_class_lr(r, n).map_err(err)?;
        let f = chow_tuple(&Matroid::uniform(r, n).map_err(err)?)?;
        b.tuple_case(
            format!("restriction of lr class ({r},{n})"),
            &tuple_of_ambient(&lr, conv),
            &f,
            salt,
            json!({"convention": conv.to_json()}),
        );
        salt += 1;
    }
    let max_n = b.opts.max_n;
    for (r, n) in SPLIT_SIZES.into_iter().filter(|&(_, n)| n <= max_n) {
        let conv = resolve_convention(r, n).map_err(err)?;
        let f = chow_tuple(&Matroid::uniform(r, n).map_err(err)?)?;
        let lifted = lifted_class(&f, conv)?;
        let lr = uniform_matrix_class_lr(r, n).map_err(err)?;
        let lr_overflow = factorial_expand(&lr, conv.eps_t).map_err(err)?.overflow;
        let mut detail = json!({
            "convention": conv.to_json(),
            "lifted_max_u_degree": lifted.max_u_var_degree(),
            "lr_max_u_degree": lr.max_u_var_degree(),
            "lr_overflow": partitions_json(lr_overflow.terms().keys()),
        });
        if lifted != lr {
            let diff = &lr - &lifted;
            detail["difference_restricts_to_zero"] = json!(tuple_of_ambient(&diff, conv).is_zero());
            detail["difference"] = json!(diff.to_string());
        }
        b.poly_case(format!("lift of tuple = lr class ({r},{n})"), &lifted, &lr, salt, detail);
        salt += 1;
        let back = lift(&factorial_expand(&lifted, conv.eps_t).map_err(err)?).map_err(err)?;
        b.poly_case(format!("factorial expand then lift ({r},{n})"), &back, &lifted, salt, json!({}));
        salt += 1;
    }
    Ok(())
}

/// Constant coefficient of `[Omega_{lam^c}]` in the Schubert expansion of the
/// orbit tuple, where `lam^c` is the box complement of `lam`.
pub fn klyachko_oracle(lam: &Partition, r: usize, n: usize) -> Result<BigInt, VerifyError> {
    let conv = resolve_convention(r, n).map_err(err)?;
    let f = chow_tuple(&Matroid::uniform(r, n).map_err(err)?)?;
    let e = schubert_expand_tuple(&f, conv).map_err(err)?;
    let comp = rect_complement(lam, r, (n - r) as u32).map_err(err)?;
    let q = e.coeff(&comp);
    q.as_constant()
        .ok_or_else(|| VerifyError(format!("coefficient of {comp} is not constant: {q}")))
}

fn klyachko(b: &mut Builder) -> Result<(), VerifyError> {
    for (r, n) in [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6)] {
        if n > b.opts.max_n {
            continue;
        }
        let width = (n - r) as u32;
        for lam in Partition::in_box(r, width).into_iter().filter(|l| l.size() as usize == n - 1) {
            let literal = klyachko_coefficient(&lam, r, n, 1).map_err(err)?;
            let corrected = klyachko_coefficient(&lam, r, n, 0).map_err(err)?;
            let oracle = klyachko_oracle(&lam, r, n)?;
            if literal != oracle {
                b.flags.push(format!(
                    "literal sum from i=1 gives {literal} for {lam} at ({r},{n}); splitting gives {oracle}"
                ));
            }
            let detail = json!({
                "literal_variant_i1": literal.to_string(),
                "corrected_variant_i0": corrected.to_string(),
                "splitting_oracle": oracle.to_string(),
                "literal_matches": literal == oracle,
            });
            b.cases
                .push(Case::exact(format!("klyachko {lam} ({r},{n})"), corrected == oracle, detail));
        }
    }
    Ok(())
}

fn degree(b: &mut Builder) -> Result<(), VerifyError> {
    let mut expected: Vec<(usize, usize, i64)> = vec![(2, 4, 4), (2, 5, 10)];
    expected.extend((2..=7).map(|n| (1, n, 1)));
    for (r, n, want) in expected {
        let got = uniform_degree(r, n).map_err(err)?;
        b.cases.push(Case::exact(
            format!("degree ({r},{n}) = {want}"),
            got == BigInt::from(want),
            json!({"got": got.to_string()}),
        ));
    }
    for (r, n) in uniform_sizes(3, b.opts.max_n.min(EXACT_MAX_N)) {
        let formula = uniform_degree(r, n).map_err(err)?;
        let lr = u_ones_t_zero(&uniform_matrix_class_lr(r, n).map_err(err)?);
        let conv = resolve_convention(r, n).map_err(err)?;
        let lifted = u_ones_t_zero(&lifted_class(&chow_tuple(&Matroid::uniform(r, n).map_err(err)?)?, conv)?);
        if lifted != formula {
            b.flags.push(format!(
                "degree formula gives {formula} at ({r},{n}) but the width-bounded lift of the orbit tuple gives {lifted}"
            ));
        }
        b.cases.push(Case::exact(
            format!("degree formula = lr class specialisation ({r},{n})"),
            formula == lr,
            json!({"formula": formula.to_string(), "lr_class": lr.to_string(), "lifted_class": lifted.to_string()}),
        ));
    }
    Ok(())
}

fn widthbound(b: &mut Builder) -> Result<(), VerifyError> {
    for (name, m) in gkm_matroids(b.opts.max_n.min(EXACT_MAX_N)) {
        let (r, n) = (m.r(), m.n());
        let conv = resolve_convention(r, n).map_err(err)?;
        let lifted = lifted_class(&chow_tuple(&m)?, conv)?;
        let overflow = factorial_expand(&lifted, conv.eps_t).map_err(err)?.overflow;
        let deg = lifted.max_u_var_degree();
        let mut detail = json!({"max_u_degree": deg, "bound": n - r});
        if m.is_uniform() && n > 2 {
            let lr = uniform_matrix_class_lr(r, n).map_err(err)?;
            detail["lr_max_u_degree"] = json!(lr.max_u_var_degree());
            if lr.max_u_var_degree() as usize > n - r {
                b.flags.push(format!(
                    "closed-form class at ({r},{n}) has u-degree {} above the bound {}; the lifted class does not",
                    lr.max_u_var_degree(),
                    n - r
                ));
            }
        }
        b.cases.push(Case::exact(
            format!("width bound {name}"),
            deg as usize <= n - r && overflow.is_zero(),
            detail,
        ));
    }
    Ok(())
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn rat_matrix(rows: &[&[(i64, i64)]]) -> RationalMatrix {
    RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect()).collect())
        .expect("rectangular")
}

/// `G * A * D` for an invertible `G` and a nonzero diagonal `D`.
fn transform(a: &RationalMatrix, g: &RationalMatrix, d: &[(i64, i64)]) -> RationalMatrix {
    let mut out = g.mul(a).expect("shapes agree");
    for (j, &(p, q)) in d.iter().enumerate() {
        out.scale_column(j, &rat(p, q));
    }
    out
}

/// Pairs of distinct matrices realising the same matroid.
pub fn invariance_pairs() -> Vec<(String, Matroid, Vec<(RationalMatrix, RationalMatrix)>)> {
    let g1 = rat_matrix(&[&[(2, 1), (1, 1)], &[(1, 1), (1, 1)]]);
    let g2 = rat_matrix(&[&[(1, 2), (0, 1)], &[(-3, 1), (5, 7)]]);
    let g3 = rat_matrix(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]);
    let a24 = rat_matrix(&[&[(1, 1), (0, 1), (1, 1), (1, 1)], &[(0, 1), (1, 1), (1, 1), (2, 1)]]);
    let v24 = rat_matrix(&[&[(1, 1), (1, 1), (1, 1), (1, 1)], &[(1, 1), (2, 1), (3, 1), (4, 1)]]);
    let a25 = rat_matrix(&[
        &[(1, 1), (0, 1), (1, 1), (1, 1), (1, 1)],
        &[(0, 1), (1, 1), (1, 1), (2, 1), (-1, 3)],
    ]);
    let v25 = rat_matrix(&[
        &[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
    ]);
    let pp = rat_matrix(&[&[(1, 1), (1, 1), (0, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1), (1, 1)]]);
    let pp2 = rat_matrix(&[&[(1, 1), (2, 1), (1, 1), (3, 1)], &[(1, 1), (2, 1), (-1, 1), (-3, 1)]]);
    vec![
        (
            "uniform(2,4)".into(),
            Matroid::uniform(2, 4).expect("valid"),
            vec![
                (a24.clone(), transform(&a24, &g1, &[(1, 1), (-2, 1), (3, 5), (1, 1)])),
                (a24.clone(), v24.clone()),
                (v24.clone(), transform(&v24, &g2, &[(7, 1), (1, 1), (1, 1), (-1, 9)])),
            ],
        ),
        (
            "uniform(2,5)".into(),
            Matroid::uniform(2, 5).expect("valid"),
            vec![
                (a25.clone(), transform(&a25, &g2, &[(1, 1), (1, 1), (2, 1), (1, 3), (1, 1)])),
                (a25.clone(), v25.clone()),
                (v25.clone(), transform(&v25, &g3, &[(-1, 1), (4, 1), (1, 1), (1, 1), (5, 2)])),
            ],
        ),
        (
            "two parallel pairs".into(),
            two_parallel_pairs(),
            vec![
                (pp.clone(), transform(&pp, &g1, &[(1, 1), (3, 1), (1, 1), (-1, 2)])),
                (pp.clone(), pp2.clone()),
                (pp2.clone(), transform(&pp2, &g2, &[(2, 1), (1, 1), (1, 1), (1, 1)])),
            ],
        ),
    ]
}

fn matroid_invariance(b: &mut Builder) -> Result<(), VerifyError> {
    for (name, expected, pairs) in invariance_pairs() {
        let conv = resolve_convention(expected.r(), expected.n()).map_err(err)?;
        for (k, (x, y)) in pairs.iter().enumerate() {
            let mx = matroid_of_matrix(x).map_err(err)?;
            let my = matroid_of_matrix(y).map_err(err)?;
            let (fx, fy) = (chow_tuple(&mx)?, chow_tuple(&my)?);
            let (lx, ly) = (lifted_class(&fx, conv)?, lifted_class(&fy, conv)?);
            let detail = json!({
                "distinct_matrices": x != y,
                "matroids_equal": mx == my && mx == expected,
                "tuples_equal": fx == fy,
                "lifted_classes_equal": lx == ly,
            });
            let ok = x != y && mx == my && mx == expected && fx == fy && lx == ly;
            b.cases.push(Case::exact(format!("{name} pair {}", k + 1), ok, detail));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(s: Suite, max_n: usize) -> SuiteReport {
        run_suite(s, VerifyOptions { max_n, ..Default::default() }).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::LemmaVsClosed, Suite::LrVsOmega, Suite::Gkm, Suite::Kms, Suite::Cauchy, Suite::Widthbound] {
            let rep = run(s, 5);
            assert!(rep.passed, "{s}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn klyachko_flags_literal_variant() {
        let rep = run(Suite::Klyachko, 4);
        assert!(rep.passed);
        let case = &rep.cases[0];
        assert_eq!(case.case, "klyachko (2,1) (2,4)");
        assert_eq!(case.detail["literal_variant_i1"], "0");
        assert_eq!(case.detail["corrected_variant_i0"], "2");
        assert_eq!(case.detail["splitting_oracle"], "2");
        assert_eq!(rep.flags.len(), 1);
    }

    #[test]
    fn certify_mode_reaches_n7() {
        let opts = VerifyOptions {
            mode: Mode::Certify,
            max_n: 7,
            trials: 3,
            seed: 5,
        };
        let rep = run_suite(Suite::LemmaVsClosed, opts).unwrap();
        assert!(rep.passed);
        assert!(rep.cases.iter().any(|c| c.case == "closed form (3,7)"));
        assert!(rep.cases.iter().all(|c| c.certify.is_some()));
    }

    #[test]
    fn invariance_pairs_pass() {
        let rep = run(Suite::MatroidInvariance, 6);
        assert_eq!(rep.cases.len(), 9);
        assert!(rep.passed, "{:?}", rep.first_failure());
    }

    #[test]
    fn roundtrip_reports_wide_class_at_3_6() {
        let rep = run(Suite::Roundtrip, 6);
        let bad: Vec<&str> = rep.cases.iter().filter(|c| !c.passed).map(|c| c.case.as_str()).collect();
        assert_eq!(bad, ["lift of tuple = lr class (3,6)"]);
        let case = rep.first_failure().unwrap();
        assert_eq!(case.detail["difference_restricts_to_zero"], true);
        assert_eq!(case.detail["lr_overflow"], json!([[4]]));
    }
}
