use serde::{Deserialize, Serialize};

use super::{PolyError, Polynomial, VarSpace};
use crate::scalar::Scalar;

/// One term of the polynomial wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub u: Vec<u32>,
    pub t: Vec<u32>,
}

/// `[{"c": "<int>", "u": [...], "t": [...]}, ...]` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyJson(pub Vec<TermJson>);

impl PolyJson {
    /// The variable space implied by the term arrays, if any term exists.
    pub fn infer_space(&self) -> Option<Result<VarSpace, PolyError>> {
        self.0.first().map(|t| VarSpace::new(t.u.len(), t.t.len()))
    }
}

impl<C: Scalar> Polynomial<C> {
    pub fn to_json(&self) -> PolyJson {
        let r = self.space().r;
        PolyJson(
            self.terms()
                .map(|(e, c)| TermJson {
                    c: c.to_string(),
                    u: e[..r].to_vec(),
                    t: e[r..].to_vec(),
                })
                .collect(),
        )
    }

    pub fn from_json(json: &PolyJson, space: VarSpace) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(json.0.len());
        for term in &json.0 {
            if term.u.len() != space.r || term.t.len() != space.n {
                return Err(PolyError::Json(format!(
                    "term has {} u and {} t exponents, expected {} and {}",
                    term.u.len(),
                    term.t.len(),
                    space.r,
                    space.n
                )));
            }
            let c = term
                .c
                .parse::<C>()
                .map_err(|_| PolyError::Json(format!("bad coefficient {:?}", term.c)))?;
            let mut e = term.u.clone();
            e.extend_from_slice(&term.t);
            terms.push((e, c));
        }
        Ok(Polynomial::from_terms(space, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    #[test]
    fn wire_format() {
        let s = VarSpace::new(1, 2).unwrap();
        let p = P::u(s, 1).scale(&BigInt::from(-3)) + P::t(s, 2);
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(j, r#"[{"c":"-3","u":[1],"t":[0,0]},{"c":"1","u":[0],"t":[0,1]}]"#);
    }

    #[test]
    fn wrong_arity_rejected() {
        let s = VarSpace::new(1, 2).unwrap();
        let json: PolyJson = serde_json::from_str(r#"[{"c":"1","u":[1,0],"t":[0,0]}]"#).unwrap();
        assert!(P::from_json(&json, s).is_err());
        let json: PolyJson = serde_json::from_str(r#"[{"c":"x","u":[1],"t":[0,0]}]"#).unwrap();
        assert!(P::from_json(&json, s).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in prop::collection::vec((prop::collection::vec(0u32..4, 5), -50i64..50), 0..8)) {
            let s = VarSpace::new(2, 3).unwrap();
            let p = P::from_terms(s, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))));
            let text = serde_json::to_string(&p.to_json()).unwrap();
            let back: PolyJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(P::from_json(&back, s).unwrap(), p);
        }
    }
}
